//! Compiles and runs a small C program against the generated header and the
//! static library. Skipped when no C compiler is on PATH.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "bci_workbench.h"

int main(void) {
    BciAlgebra *a = NULL;
    if (bci_algebra_bundled("powerset2", &a) != BCI_STATUS_OK) return 10;
    bool bck = false;
    if (bci_algebra_has(a, BCI_PROPERTY_BCK, &bck) != BCI_STATUS_OK || !bck) return 11;
    size_t v = 0;
    if (bci_algebra_op(a, 3, 1, &v) != BCI_STATUS_OK || v != 2) return 12;
    char *json = NULL;
    if (bci_algebra_classify_json(a, &json) != BCI_STATUS_OK) return 13;
    if (strstr(json, "\"bck\": true") == NULL) return 14;
    bci_string_free(json);
    bci_algebra_free(a);

    BciAlgebra *bad = NULL;
    if (bci_algebra_parse("2\n0\n0\n", &bad) != BCI_STATUS_PARSE) return 15;
    if (bci_last_error() == NULL) return 16;
    printf("ok\n");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // .../target/<profile>/deps/c_smoke-<hash>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

fn have(cmd: &str) -> bool {
    Command::new(cmd).arg("--version").output().is_ok()
}

#[test]
fn c_program_links_and_runs() {
    if !have("cc") {
        eprintln!("no C compiler, skipping");
        return;
    }
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let lib = target_dir().join("libbci_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let bin = dir.path().join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("include/bci_workbench.h"),
    )
    .unwrap();
    for name in [
        "typedef struct BciAlgebra BciAlgebra;",
        "BCI_STATUS_NOT_BCI = 8",
        "bci_algebra_from_table(",
        "bci_holomorph_build(",
        "bci_string_free(",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
