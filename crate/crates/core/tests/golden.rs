use bci_workbench::bundled;
use bci_workbench::report::{check, ReportBody, ReportDocument};
use bci_workbench::search::{enumerate_bci, EnumerationOptions, Requirement};
use bci_workbench::tablefile::{
    parse_manifest, parse_table, print_manifest, print_table_with_comments, ManifestEntry,
};
use bci_workbench::FiniteAlgebra;

const MANIFEST_UP_TO_3: &str = "\
# hash order flags fenyves
a6685f3b62d57bfc 1 KPA fffffffffffffff
e00c4c7ef5fba2db 2 K-- 060220010100014
9585d1764a6723d8 2 -PA fffffffffffffff
ead4b0a534a26047 3 K-- 020020000000010
b2f8810af3f1b388 3 K-- 060020000100010
ed8d0c0cef4cc4a3 3 K-- 060220010100014
1d54a3d5044b28cc 3 --- 060220000100010
ab4512a90dbbaa1b 3 -P- 428204010040080
";

const CHAIN_CHECK: &str = r#"{
  "schema_version": 1,
  "kind": "check",
  "order": 2,
  "bci": true,
  "checkers_agree": true,
  "definition": {
    "property": "bci_def1",
    "holds": true
  },
  "conditions": {
    "property": "bci_thm1",
    "holds": true
  }
}
"#;

#[test]
fn bundled_files_are_canonical_prints() {
    for (name, src) in bundled::FILES {
        let a = parse_table(src).unwrap();
        let comments: Vec<String> = src
            .lines()
            .filter(|l| l.starts_with("# ") && !l.starts_with("# labels:"))
            .map(|l| l[2..].to_string())
            .collect();
        assert_eq!(print_table_with_comments(&a, &comments), src, "{name}");
    }
}

#[test]
fn powerset2_file_is_frozen() {
    assert_eq!(
        bundled::FILES[1].1,
        "# subsets of a 2-element set, x * y = x \\ y\n# labels: {} {a} {b} {a,b}\n4\n0\n0 0 0 0\n1 0 1 0\n2 2 0 0\n3 2 1 0\n"
    );
}

#[test]
fn manifest_is_frozen() {
    let algebras: Vec<FiniteAlgebra> = (1..=3)
        .flat_map(|n| enumerate_bci(&EnumerationOptions::new(n)).unwrap())
        .collect();
    let entries: Vec<ManifestEntry> = algebras.iter().map(ManifestEntry::of).collect();
    assert_eq!(print_manifest(&entries), MANIFEST_UP_TO_3);
    assert_eq!(parse_manifest(MANIFEST_UP_TO_3).unwrap(), entries);
}

#[test]
fn check_report_is_frozen() {
    let doc = ReportDocument::new(ReportBody::Check(check(&FiniteAlgebra::chain2())));
    assert_eq!(doc.to_json(), CHAIN_CHECK);
}

// Regression constants, cross-checked when first computed against a
// semi-naive filter at order 4 and the orbit-counting identity
// sum over classes of (n-1)!/|Aut| = labelled count.
#[test]
fn corpus_counts() {
    let up_to_iso = [1, 2, 5, 22, 118];
    let labelled = [1, 2, 8, 101, 2283];
    let bck = [1, 1, 3, 14, 88];
    let p_semisimple = [1, 1, 1, 2, 1];
    for n in 1..=5 {
        let opts = EnumerationOptions::new(n);
        assert_eq!(
            enumerate_bci(&opts).unwrap().len(),
            up_to_iso[n - 1],
            "order {n}"
        );
        assert_eq!(
            enumerate_bci(&opts.clone().labelled()).unwrap().len(),
            labelled[n - 1]
        );
        assert_eq!(
            enumerate_bci(&opts.clone().require(Requirement::Bck))
                .unwrap()
                .len(),
            bck[n - 1]
        );
        assert_eq!(
            enumerate_bci(&opts.require(Requirement::PSemisimple))
                .unwrap()
                .len(),
            p_semisimple[n - 1]
        );
    }
}
