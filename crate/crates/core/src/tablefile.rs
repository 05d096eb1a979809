//! Plain-text Cayley table files and corpus manifests.
//!
//! ```text
//! # optional comments
//! # labels: {} {a} {b} {a,b}
//! 4
//! 0
//! 0 0 0 0
//! 1 0 1 0
//! 2 2 0 0
//! 3 2 1 0
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::fenyves::{fenyves_profile, FenyvesProfile};
use crate::holomorph::HolomorphAlgebra;
use crate::props::{is_associative, is_bck, is_p_semisimple};
use crate::search::canonical_form;

const LABELS_PREFIX: &str = "# labels:";

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        rest = &rest[skip..];
        offset += skip;
        if rest.is_empty() {
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = &rest[..len];
        let col = line[..offset].chars().count() + 1;
        rest = &rest[len..];
        offset += len;
        Some((col, tok))
    })
}

fn parse_index(lineno: usize, col: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_error(lineno, col, format!("expected {what}, found `{tok}`")))
}

/// Parses a table file. The zero is moved to index 0 if it is elsewhere.
pub fn parse_table(src: &str) -> Result<FiniteAlgebra> {
    let mut labels: Option<(usize, Vec<String>)> = None;
    let mut order: Option<usize> = None;
    let mut zero: Option<usize> = None;
    let mut table = Vec::new();
    let mut rows = 0;
    let mut last_line = 0;

    for (i, raw) in src.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = raw.trim_end();
        if let Some(rest) = line.strip_prefix(LABELS_PREFIX) {
            labels = Some((lineno, rest.split_whitespace().map(str::to_owned).collect()));
            continue;
        }
        if line.trim_start().starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let toks: Vec<(usize, &str)> = tokens(line).collect();
        match (order, zero) {
            (None, _) => {
                let (col, tok) = toks[0];
                if toks.len() > 1 {
                    return Err(parse_error(
                        lineno,
                        toks[1].0,
                        "order line has extra tokens",
                    ));
                }
                let n = parse_index(lineno, col, tok, "order")?;
                if n == 0 {
                    return Err(parse_error(lineno, col, "order must be positive"));
                }
                order = Some(n);
            }
            (Some(n), None) => {
                let (col, tok) = toks[0];
                if toks.len() > 1 {
                    return Err(parse_error(lineno, toks[1].0, "zero line has extra tokens"));
                }
                let z = parse_index(lineno, col, tok, "zero index")?;
                if z >= n {
                    return Err(parse_error(
                        lineno,
                        col,
                        format!("zero {z} out of range for order {n}"),
                    ));
                }
                zero = Some(z);
            }
            (Some(n), Some(_)) => {
                if rows == n {
                    return Err(parse_error(
                        lineno,
                        toks[0].0,
                        format!("more than {n} rows"),
                    ));
                }
                if toks.len() != n {
                    let col = toks.get(n).map_or(line.chars().count() + 1, |t| t.0);
                    return Err(parse_error(
                        lineno,
                        col,
                        format!("row has {} entries, expected {n}", toks.len()),
                    ));
                }
                for (col, tok) in toks {
                    let v = parse_index(lineno, col, tok, "table entry")?;
                    if v >= n {
                        return Err(parse_error(
                            lineno,
                            col,
                            format!("entry {v} out of range for order {n}"),
                        ));
                    }
                    table.push(v);
                }
                rows += 1;
            }
        }
    }

    let end = last_line + 1;
    let n = order.ok_or_else(|| parse_error(end, 1, "missing order"))?;
    let z = zero.ok_or_else(|| parse_error(end, 1, "missing zero index"))?;
    if rows != n {
        return Err(parse_error(
            end,
            1,
            format!("found {rows} rows, expected {n}"),
        ));
    }
    let mut a =
        FiniteAlgebra::from_table(n, table, z).map_err(|e| parse_error(1, 1, e.to_string()))?;
    if let Some((lineno, mut names)) = labels {
        if names.len() != n {
            return Err(parse_error(
                lineno,
                1,
                format!("{} labels for order {n}", names.len()),
            ));
        }
        if z != 0 {
            names.swap(0, z);
        }
        a = a.with_labels(names)?;
    }
    Ok(a)
}

/// Prints `a` in table-file form. Comment lines are emitted first, each
/// prefixed with `# `.
pub fn print_table_with_comments(a: &FiniteAlgebra, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    if let Some(labels) = a.labels() {
        let _ = writeln!(out, "{LABELS_PREFIX} {}", labels.join(" "));
    }
    let n = a.order();
    let width = (n - 1).to_string().len();
    let _ = writeln!(out, "{n}");
    let _ = writeln!(out, "{}", a.zero());
    for x in a.elements() {
        let row: Vec<String> = a.row(x).iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn print_table(a: &FiniteAlgebra) -> String {
    print_table_with_comments(a, &[])
}

/// Table file for a holomorph, with a header naming its base and the
/// automorphism group used.
pub fn print_holomorph(h: &HolomorphAlgebra) -> String {
    let base = h.base();
    let mut comments = vec![
        format!(
            "holomorph of an order-{} base by {} automorphism(s)",
            base.order(),
            h.autos().len()
        ),
        format!("base: {:?}", base.rows()),
    ];
    for (i, auto) in h.autos().elements().iter().enumerate() {
        comments.push(format!("auto {i}: {:?}", auto.image()));
    }
    comments.push(format!(
        "element k is (auto k / {n}, base element k % {n})",
        n = base.order()
    ));
    print_table_with_comments(h.algebra(), &comments)
}

pub fn read_table_file(path: &Path) -> Result<FiniteAlgebra> {
    parse_table(&fs::read_to_string(path)?)
}

pub fn write_table_file(path: &Path, a: &FiniteAlgebra) -> Result<()> {
    fs::write(path, print_table(a))?;
    Ok(())
}

/// One manifest record. Flags are `K` (BCK), `P` (p-semisimple) and `A`
/// (associative), with `-` for an unset flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub hash: String,
    pub order: usize,
    pub bck: bool,
    pub p_semisimple: bool,
    pub associative: bool,
    pub fenyves: FenyvesProfile,
}

impl ManifestEntry {
    pub fn of(a: &FiniteAlgebra) -> Self {
        ManifestEntry {
            hash: canonical_form(a).hash(),
            order: a.order(),
            bck: is_bck(a).holds,
            p_semisimple: is_p_semisimple(a).holds,
            associative: is_associative(a).holds,
            fenyves: fenyves_profile(a),
        }
    }

    pub fn flags(&self) -> String {
        [
            (self.bck, 'K'),
            (self.p_semisimple, 'P'),
            (self.associative, 'A'),
        ]
        .iter()
        .map(|&(on, c)| if on { c } else { '-' })
        .collect()
    }

    /// File name used for this algebra inside an exported corpus.
    pub fn file_name(&self) -> String {
        format!("{}-{}.table", self.order, self.hash)
    }
}

pub fn print_manifest(entries: &[ManifestEntry]) -> String {
    let mut out = String::from("# hash order flags fenyves\n");
    for e in entries {
        let _ = writeln!(
            out,
            "{} {} {} {}",
            e.hash,
            e.order,
            e.flags(),
            e.fenyves.hex()
        );
    }
    out
}

pub fn parse_manifest(src: &str) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let lineno = i + 1;
        if line.trim_start().starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let toks: Vec<(usize, &str)> = tokens(line).collect();
        if toks.len() != 4 {
            return Err(parse_error(
                lineno,
                1,
                format!("expected 4 fields, found {}", toks.len()),
            ));
        }
        let (hcol, hash) = toks[0];
        if hash.len() != 16 || !hash.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(parse_error(lineno, hcol, "hash must be 16 hex digits"));
        }
        let order = parse_index(lineno, toks[1].0, toks[1].1, "order")?;
        let (fcol, flags) = toks[2];
        let flag = |k: usize, c: char| -> Result<bool> {
            match flags.chars().nth(k) {
                Some(x) if x == c => Ok(true),
                Some('-') => Ok(false),
                _ => Err(parse_error(
                    lineno,
                    fcol + k,
                    format!("bad flag, expected `{c}` or `-`"),
                )),
            }
        };
        if flags.chars().count() != 3 {
            return Err(parse_error(lineno, fcol, "flags must be 3 characters"));
        }
        let (xcol, hex) = toks[3];
        let fenyves = FenyvesProfile::from_hex(hex)
            .ok_or_else(|| parse_error(lineno, xcol, "bad Fenyves mask"))?;
        out.push(ManifestEntry {
            hash: hash.to_owned(),
            order,
            bck: flag(0, 'K')?,
            p_semisimple: flag(1, 'P')?,
            associative: flag(2, 'A')?,
            fenyves,
        });
    }
    Ok(out)
}

/// Writes one table file per algebra plus `MANIFEST` into `dir`.
pub fn export_corpus(dir: &Path, algebras: &[FiniteAlgebra]) -> Result<Vec<ManifestEntry>> {
    fs::create_dir_all(dir)?;
    let entries: Vec<ManifestEntry> = algebras.iter().map(ManifestEntry::of).collect();
    for (a, e) in algebras.iter().zip(&entries) {
        write_table_file(&dir.join(e.file_name()), a)?;
    }
    fs::write(dir.join("MANIFEST"), print_manifest(&entries))?;
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err(src: &str) -> (usize, usize) {
        match parse_table(src) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn powerset_golden() {
        let a = FiniteAlgebra::powerset(2).unwrap();
        let text = print_table(&a);
        assert_eq!(
            text,
            "# labels: {} {a} {b} {a,b}\n4\n0\n0 0 0 0\n1 0 1 0\n2 2 0 0\n3 2 1 0\n"
        );
        assert_eq!(parse_table(&text).unwrap(), a);
    }

    #[test]
    fn wide_entries_are_padded() {
        let a = FiniteAlgebra::zn_subtraction(11).unwrap();
        let text = print_table(&a);
        assert!(text.contains("\n 1  0 10  9"));
        assert_eq!(parse_table(&text).unwrap(), a);
    }

    #[test]
    fn zero_elsewhere_is_moved() {
        // chain with the zero stored at index 1
        let a = parse_table("# labels: one nil\n2\n1\n1 0\n1 1\n").unwrap();
        assert_eq!(
            a,
            FiniteAlgebra::chain2()
                .with_labels(vec!["nil".into(), "one".into()])
                .unwrap()
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_err("2\n0\n0 0\n1\n"), (4, 2));
        assert_eq!(parse_err("2\n0\n0 x\n1 0\n"), (3, 3));
        assert_eq!(parse_err("2\n0\n0 2\n1 0\n"), (3, 3));
        assert_eq!(parse_err("# c\n2\n0\n0 0\n"), (5, 1));
        assert_eq!(parse_err("0\n"), (1, 1));
        assert_eq!(parse_err("2 2\n"), (1, 3));
        assert_eq!(parse_err("2\n5\n"), (2, 1));
        assert_eq!(parse_err("# labels: a\n2\n0\n0 0\n1 0\n"), (1, 1));
        assert_eq!(parse_err("1\n0\n0\n0\n"), (4, 1));
    }

    #[test]
    fn manifest_round_trip() {
        let algebras = [
            FiniteAlgebra::chain2(),
            FiniteAlgebra::zn_subtraction(3).unwrap(),
        ];
        let entries: Vec<_> = algebras.iter().map(ManifestEntry::of).collect();
        assert_eq!(entries[0].flags(), "K--");
        assert_eq!(entries[1].flags(), "-P-");
        let text = print_manifest(&entries);
        assert_eq!(parse_manifest(&text).unwrap(), entries);
        assert!(parse_manifest("0123456789abcdef 2 KX- 0\n").is_err());
    }
}
