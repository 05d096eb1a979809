//! Small named algebras shipped as table files under `data/`.

use crate::algebra::FiniteAlgebra;
use crate::tablefile::parse_table;

pub const FILES: [(&str, &str); 7] = [
    ("powerset1", include_str!("../data/powerset1.table")),
    ("powerset2", include_str!("../data/powerset2.table")),
    ("powerset3", include_str!("../data/powerset3.table")),
    ("z2", include_str!("../data/z2.table")),
    ("z3", include_str!("../data/z3.table")),
    ("z4", include_str!("../data/z4.table")),
    ("chain2", include_str!("../data/chain2.table")),
];

/// Parses a bundled table by name.
pub fn load(name: &str) -> Option<FiniteAlgebra> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| parse_table(src).expect("bundled tables parse"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_match_constructors() {
        for k in 1..=3 {
            assert_eq!(
                load(&format!("powerset{k}")).unwrap(),
                FiniteAlgebra::powerset(k).unwrap()
            );
        }
        for n in 2..=4 {
            assert_eq!(
                load(&format!("z{n}")).unwrap(),
                FiniteAlgebra::zn_subtraction(n).unwrap()
            );
        }
        assert_eq!(load("chain2").unwrap(), FiniteAlgebra::chain2());
        assert!(load("nope").is_none());
    }
}
