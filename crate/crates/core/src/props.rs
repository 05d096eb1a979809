//! Classical properties of finite magmas: the BCI and BCK axioms,
//! associativity, p-semisimplicity, quasigroup and loop structure, and the
//! equivalence bundles that characterise them.
//!
//! Every check is an exhaustive scan in lexicographic tuple order, so the
//! reported counterexample is always the first violation.

use std::fmt;

use serde::Serialize;

use crate::algebra::{ElementIndex, FiniteAlgebra};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    /// Axioms `((x*y)*(x*z))*(z*y)=0`, `x*0=x`, antisymmetry.
    BciDef1,
    /// Characterisation with `(x*(x*y))*y=0` and `x*x=0`.
    BciThm1,
    Associative,
    /// `0*x = x`.
    ZeroLeftIdentity,
    Commutative,
    /// `0*(0*x) = x`.
    PSemisimple,
    /// `(x*y)*(z*u) = (x*z)*(y*u)`.
    Medial,
    /// `0*(y*x) = x*y`.
    ZeroSwap,
    /// `(x*y)*(x*z) = z*y`.
    LeftDifference,
    /// `z*x = z*y => x = y`.
    LeftCancellation,
    /// `x*y = 0 => x = y`.
    ZeroImpliesEqual,
    /// `x*z = y*z => x = y`.
    RightCancellation,
    /// `(y*x)*(z*x) = y*z`.
    RightDifference,
    /// `(x*y)*(x*z) = 0*(y*z)`.
    LeftDifferenceZero,
    /// `0*x = 0`.
    Bck,
    Quasigroup,
    Loop,
    /// `(x*y)*z = (x*z)*y`.
    Exchange,
    /// `((x*y)*z)*(x*(y*z)) = 0`.
    QuasiAssociative,
    BooleanGroup,
    /// Bol-Moufang identity F_i.
    Fenyves(u8),
    /// `[(xδ*yδ)*(x*zγ)]*(z*y) = 0` over a group of automorphisms.
    HolomorphCondition,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Property::BciDef1 => "bci_def1",
            Property::BciThm1 => "bci_thm1",
            Property::Associative => "associative",
            Property::ZeroLeftIdentity => "zero_left_identity",
            Property::Commutative => "commutative",
            Property::PSemisimple => "p_semisimple",
            Property::Medial => "medial",
            Property::ZeroSwap => "zero_swap",
            Property::LeftDifference => "left_difference",
            Property::LeftCancellation => "left_cancellation",
            Property::ZeroImpliesEqual => "zero_implies_equal",
            Property::RightCancellation => "right_cancellation",
            Property::RightDifference => "right_difference",
            Property::LeftDifferenceZero => "left_difference_zero",
            Property::Bck => "bck",
            Property::Quasigroup => "quasigroup",
            Property::Loop => "loop",
            Property::Exchange => "exchange",
            Property::QuasiAssociative => "quasi_associative",
            Property::BooleanGroup => "boolean_group",
            Property::HolomorphCondition => "holomorph_condition",
            Property::Fenyves(i) => return write!(f, "F{i}"),
        };
        f.write_str(name)
    }
}

impl Serialize for Property {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Outcome of one property check.
///
/// `clause` names which numbered condition of a multi-clause property
/// failed (1-based); single-equation properties use clause 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyWitness {
    pub property: Property,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<ElementIndex>>,
}

impl PropertyWitness {
    pub fn pass(property: Property) -> Self {
        PropertyWitness {
            property,
            holds: true,
            clause: None,
            counterexample: None,
        }
    }

    pub fn fail(property: Property, clause: u8, counterexample: Vec<ElementIndex>) -> Self {
        PropertyWitness {
            property,
            holds: false,
            clause: Some(clause),
            counterexample: Some(counterexample),
        }
    }

    fn from_scan<const K: usize>(property: Property, found: Option<[ElementIndex; K]>) -> Self {
        match found {
            None => Self::pass(property),
            Some(t) => Self::fail(property, 1, t.to_vec()),
        }
    }
}

/// First tuple in lexicographic order over `0..n` for which `bad` is true.
pub(crate) fn first_violation<const K: usize>(
    n: usize,
    mut bad: impl FnMut([ElementIndex; K]) -> bool,
) -> Option<[ElementIndex; K]> {
    let mut t = [0usize; K];
    loop {
        if bad(t) {
            return Some(t);
        }
        let mut i = K;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Runs the clauses in order; the first failing one determines the witness.
fn clauses(property: Property, results: &[Option<Vec<ElementIndex>>]) -> PropertyWitness {
    for (i, r) in results.iter().enumerate() {
        if let Some(t) = r {
            return PropertyWitness::fail(property, (i + 1) as u8, t.clone());
        }
    }
    PropertyWitness::pass(property)
}

fn lazy_clauses(
    property: Property,
    checks: &[&dyn Fn() -> Option<Vec<ElementIndex>>],
) -> PropertyWitness {
    for (i, check) in checks.iter().enumerate() {
        if let Some(t) = check() {
            return PropertyWitness::fail(property, (i + 1) as u8, t);
        }
    }
    PropertyWitness::pass(property)
}

/// BCI axioms as first stated: `((x*y)*(x*z))*(z*y) = 0`, `x*0 = x`,
/// and `x*y = 0 = y*x => x = y`.
pub fn is_bci_def1(a: &FiniteAlgebra) -> PropertyWitness {
    let n = a.order();
    let m = |x, y| a.op(x, y);
    lazy_clauses(
        Property::BciDef1,
        &[
            &|| {
                first_violation(n, |[x, y, z]| m(m(m(x, y), m(x, z)), m(z, y)) != 0)
                    .map(|t| t.to_vec())
            },
            &|| first_violation(n, |[x]| m(x, 0) != x).map(|t| t.to_vec()),
            &|| {
                first_violation(n, |[x, y]| x != y && m(x, y) == 0 && m(y, x) == 0)
                    .map(|t| t.to_vec())
            },
        ],
    )
}

/// BCI characterisation by four conditions. Deliberately shares no code
/// with [`is_bci_def1`]: direct row slices instead of `op`, and explicit
/// loops instead of the tuple scanner.
#[allow(clippy::needless_range_loop)]
pub fn is_bci_thm1(a: &FiniteAlgebra) -> PropertyWitness {
    let n = a.order();
    let rows = a.rows();
    let zero = a.zero();

    let mut c1 = None;
    'outer1: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = rows[rows[rows[x][y]][rows[x][z]]][rows[z][y]];
                if lhs != zero {
                    c1 = Some(vec![x, y, z]);
                    break 'outer1;
                }
            }
        }
    }
    let mut c2 = None;
    'outer2: for x in 0..n {
        for y in 0..n {
            if rows[rows[x][rows[x][y]]][y] != zero {
                c2 = Some(vec![x, y]);
                break 'outer2;
            }
        }
    }
    let c3 = (0..n).find(|&x| rows[x][x] != zero).map(|x| vec![x]);
    let mut c4 = None;
    'outer4: for x in 0..n {
        for y in 0..n {
            if rows[x][y] == zero && rows[y][x] == zero && x != y {
                c4 = Some(vec![x, y]);
                break 'outer4;
            }
        }
    }
    clauses(Property::BciThm1, &[c1, c2, c3, c4])
}

pub fn is_bci(a: &FiniteAlgebra) -> bool {
    is_bci_def1(a).holds
}

fn require_bci(a: &FiniteAlgebra) -> Result<()> {
    if is_bci(a) {
        Ok(())
    } else {
        Err(Error::NotBci)
    }
}

pub fn is_associative(a: &FiniteAlgebra) -> PropertyWitness {
    let m = |x, y| a.op(x, y);
    PropertyWitness::from_scan(
        Property::Associative,
        first_violation(a.order(), |[x, y, z]| m(m(x, y), z) != m(x, m(y, z))),
    )
}

pub fn is_zero_left_identity(a: &FiniteAlgebra) -> PropertyWitness {
    PropertyWitness::from_scan(
        Property::ZeroLeftIdentity,
        first_violation(a.order(), |[x]| a.op(0, x) != x),
    )
}

pub fn is_commutative(a: &FiniteAlgebra) -> PropertyWitness {
    PropertyWitness::from_scan(
        Property::Commutative,
        first_violation(a.order(), |[x, y]| a.op(x, y) != a.op(y, x)),
    )
}

/// Associativity, `0*x = x`, and commutativity, which coincide on
/// BCI-algebras.
pub fn associativity_equivalents(a: &FiniteAlgebra) -> Result<[PropertyWitness; 3]> {
    require_bci(a)?;
    Ok([
        is_associative(a),
        is_zero_left_identity(a),
        is_commutative(a),
    ])
}

pub fn is_p_semisimple(a: &FiniteAlgebra) -> PropertyWitness {
    PropertyWitness::from_scan(
        Property::PSemisimple,
        first_violation(a.order(), |[x]| a.op(0, a.op(0, x)) != x),
    )
}

/// The nine conditions equivalent to p-semisimplicity on BCI-algebras:
/// `0*(0*x)=x`, five cancellation-style laws, then three right-hand ones.
pub fn p_semisimple_equivalents(a: &FiniteAlgebra) -> Result<[PropertyWitness; 9]> {
    require_bci(a)?;
    let n = a.order();
    let m = |x, y| a.op(x, y);
    Ok([
        is_p_semisimple(a),
        PropertyWitness::from_scan(
            Property::Medial,
            first_violation(n, |[x, y, z, u]| m(m(x, y), m(z, u)) != m(m(x, z), m(y, u))),
        ),
        PropertyWitness::from_scan(
            Property::ZeroSwap,
            first_violation(n, |[x, y]| m(0, m(y, x)) != m(x, y)),
        ),
        PropertyWitness::from_scan(
            Property::LeftDifference,
            first_violation(n, |[x, y, z]| m(m(x, y), m(x, z)) != m(z, y)),
        ),
        PropertyWitness::from_scan(
            Property::LeftCancellation,
            first_violation(n, |[x, y, z]| m(z, x) == m(z, y) && x != y),
        ),
        PropertyWitness::from_scan(
            Property::ZeroImpliesEqual,
            first_violation(n, |[x, y]| m(x, y) == 0 && x != y),
        ),
        PropertyWitness::from_scan(
            Property::RightCancellation,
            first_violation(n, |[x, y, z]| m(x, z) == m(y, z) && x != y),
        ),
        PropertyWitness::from_scan(
            Property::RightDifference,
            first_violation(n, |[x, y, z]| m(m(y, x), m(z, x)) != m(y, z)),
        ),
        PropertyWitness::from_scan(
            Property::LeftDifferenceZero,
            first_violation(n, |[x, y, z]| m(m(x, y), m(x, z)) != m(0, m(y, z))),
        ),
    ])
}

pub fn is_bck(a: &FiniteAlgebra) -> PropertyWitness {
    PropertyWitness::from_scan(
        Property::Bck,
        first_violation(a.order(), |[x]| a.op(0, x) != 0),
    )
}

/// Latin-square test. Clause 1 reports a repeated entry `(row, y1, y2)`,
/// clause 2 a repeated entry `(column, x1, x2)`.
pub fn is_quasigroup(a: &FiniteAlgebra) -> PropertyWitness {
    let n = a.order();
    let rows = first_violation(n, |[x, y1, y2]| y1 < y2 && a.op(x, y1) == a.op(x, y2));
    let cols = first_violation(n, |[y, x1, x2]| x1 < x2 && a.op(x1, y) == a.op(x2, y));
    clauses(
        Property::Quasigroup,
        &[rows.map(|t| t.to_vec()), cols.map(|t| t.to_vec())],
    )
}

/// Two-sided identity element, if any (the smallest one).
pub fn identity_element(a: &FiniteAlgebra) -> Option<ElementIndex> {
    a.elements()
        .find(|&e| a.elements().all(|x| a.op(e, x) == x && a.op(x, e) == x))
}

/// Quasigroup with a two-sided identity. Clause 1 carries the quasigroup
/// counterexample; clause 2 (no identity) carries an empty tuple.
pub fn is_loop(a: &FiniteAlgebra) -> PropertyWitness {
    let q = is_quasigroup(a);
    if !q.holds {
        return PropertyWitness::fail(Property::Loop, 1, q.counterexample.unwrap_or_default());
    }
    match identity_element(a) {
        Some(_) => PropertyWitness::pass(Property::Loop),
        None => PropertyWitness::fail(Property::Loop, 2, Vec::new()),
    }
}

/// `(x*y)*z = (x*z)*y`, valid in every BCI-algebra.
pub fn theorem6_holds(a: &FiniteAlgebra) -> Result<PropertyWitness> {
    require_bci(a)?;
    Ok(exchange_law(a))
}

/// The exchange law without the BCI precondition.
pub fn exchange_law(a: &FiniteAlgebra) -> PropertyWitness {
    let m = |x, y| a.op(x, y);
    PropertyWitness::from_scan(
        Property::Exchange,
        first_violation(a.order(), |[x, y, z]| m(m(x, y), z) != m(m(x, z), y)),
    )
}

/// Quasi-associativity, taken as `(x*y)*z <= x*(y*z)` in the BCI order,
/// i.e. `((x*y)*z)*(x*(y*z)) = 0`. This is the usual BCI-literature
/// reading; swap the body of this function to audit another definition.
pub fn is_quasi_associative(a: &FiniteAlgebra) -> Result<PropertyWitness> {
    require_bci(a)?;
    let m = |x, y| a.op(x, y);
    Ok(PropertyWitness::from_scan(
        Property::QuasiAssociative,
        first_violation(a.order(), |[x, y, z]| m(m(m(x, y), z), m(x, m(y, z))) != 0),
    ))
}

/// Associative loop in which every element is its own inverse.
/// Clause 1: not associative; clause 2: not a loop; clause 3: `x*x != e`.
pub fn is_boolean_group(a: &FiniteAlgebra) -> PropertyWitness {
    let assoc = is_associative(a);
    if !assoc.holds {
        return PropertyWitness::fail(
            Property::BooleanGroup,
            1,
            assoc.counterexample.unwrap_or_default(),
        );
    }
    let lp = is_loop(a);
    if !lp.holds {
        return PropertyWitness::fail(
            Property::BooleanGroup,
            2,
            lp.counterexample.unwrap_or_default(),
        );
    }
    let e = identity_element(a).expect("loop has an identity");
    match a.elements().find(|&x| a.op(x, x) != e) {
        Some(x) => PropertyWitness::fail(Property::BooleanGroup, 3, vec![x]),
        None => PropertyWitness::pass(Property::BooleanGroup),
    }
}

/// Re-evaluates the defining equation of `w.property` at its counterexample.
/// Returns true when the equation is indeed violated there.
pub fn counterexample_falsifies(a: &FiniteAlgebra, w: &PropertyWitness) -> bool {
    let Some(t) = &w.counterexample else {
        return false;
    };
    let m = |x, y| a.op(x, y);
    let clause = w.clause.unwrap_or(1);
    match (w.property, clause, t.as_slice()) {
        (Property::BciDef1, 1, &[x, y, z]) | (Property::BciThm1, 1, &[x, y, z]) => {
            m(m(m(x, y), m(x, z)), m(z, y)) != 0
        }
        (Property::BciDef1, 2, &[x]) => m(x, 0) != x,
        (Property::BciDef1, 3, &[x, y]) | (Property::BciThm1, 4, &[x, y]) => {
            x != y && m(x, y) == 0 && m(y, x) == 0
        }
        (Property::BciThm1, 2, &[x, y]) => m(m(x, m(x, y)), y) != 0,
        (Property::BciThm1, 3, &[x]) => m(x, x) != 0,
        (Property::Associative, _, &[x, y, z]) => m(m(x, y), z) != m(x, m(y, z)),
        (Property::ZeroLeftIdentity, _, &[x]) => m(0, x) != x,
        (Property::Commutative, _, &[x, y]) => m(x, y) != m(y, x),
        (Property::PSemisimple, _, &[x]) => m(0, m(0, x)) != x,
        (Property::Medial, _, &[x, y, z, u]) => m(m(x, y), m(z, u)) != m(m(x, z), m(y, u)),
        (Property::ZeroSwap, _, &[x, y]) => m(0, m(y, x)) != m(x, y),
        (Property::LeftDifference, _, &[x, y, z]) => m(m(x, y), m(x, z)) != m(z, y),
        (Property::LeftCancellation, _, &[x, y, z]) => m(z, x) == m(z, y) && x != y,
        (Property::ZeroImpliesEqual, _, &[x, y]) => m(x, y) == 0 && x != y,
        (Property::RightCancellation, _, &[x, y, z]) => m(x, z) == m(y, z) && x != y,
        (Property::RightDifference, _, &[x, y, z]) => m(m(y, x), m(z, x)) != m(y, z),
        (Property::LeftDifferenceZero, _, &[x, y, z]) => m(m(x, y), m(x, z)) != m(0, m(y, z)),
        (Property::Bck, _, &[x]) => m(0, x) != 0,
        (Property::Quasigroup, 1, &[x, y1, y2]) => y1 != y2 && m(x, y1) == m(x, y2),
        (Property::Quasigroup, 2, &[y, x1, x2]) => x1 != x2 && m(x1, y) == m(x2, y),
        (Property::Exchange, _, &[x, y, z]) => m(m(x, y), z) != m(m(x, z), y),
        (Property::QuasiAssociative, _, &[x, y, z]) => m(m(m(x, y), z), m(x, m(y, z))) != 0,
        (Property::BooleanGroup, 1, &[x, y, z]) => m(m(x, y), z) != m(x, m(y, z)),
        (Property::BooleanGroup, 3, &[x]) => identity_element(a).is_some_and(|e| m(x, x) != e),
        (Property::Loop, 1, _) | (Property::BooleanGroup, 2, _) => !is_quasigroup(a).holds,
        (Property::Loop, 2, _) => identity_element(a).is_none(),
        (Property::Fenyves(i), _, &[x, y, z]) => crate::fenyves::identity(i as usize)
            .map(|id| !id.holds_at(a, &[x, y, z]))
            .unwrap_or(false),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::zn_subtraction(n).unwrap()
    }

    fn constant_zero2() -> FiniteAlgebra {
        FiniteAlgebra::from_rows(&[vec![0, 0], vec![0, 0]], 0).unwrap()
    }

    #[test]
    fn bci_examples() {
        let p2 = FiniteAlgebra::powerset(2).unwrap();
        assert!(is_bci_def1(&p2).holds);
        assert!(is_bci_thm1(&p2).holds);
        assert!(is_bci_def1(&z(3)).holds);
        assert!(is_bci_thm1(&FiniteAlgebra::chain2()).holds);

        let bad = FiniteAlgebra::from_rows(&[vec![1, 0], vec![1, 0]], 0).unwrap();
        let w = is_bci_def1(&bad);
        assert!(!w.holds);
        assert_eq!(w.clause, Some(1));
        assert_eq!(w.counterexample, Some(vec![0, 1, 0]));
        assert!(counterexample_falsifies(&bad, &w));

        let c = constant_zero2();
        let t1 = is_bci_thm1(&c);
        assert_eq!((t1.holds, t1.clause), (false, Some(4)));
        assert_eq!(t1.counterexample, Some(vec![0, 1]));
        // x*0 = x already fails for x = 1
        let d1 = is_bci_def1(&c);
        assert_eq!((d1.clause, d1.counterexample), (Some(2), Some(vec![1])));
    }

    #[test]
    fn associativity_examples() {
        let w = is_associative(&z(3));
        assert!(!w.holds);
        assert!(counterexample_falsifies(&z(3), &w));
        assert!(is_associative(&z(2)).holds);
        let c = is_associative(&FiniteAlgebra::chain2());
        assert_eq!(c.counterexample, Some(vec![1, 0, 1]));
    }

    #[test]
    fn theorem2_examples() {
        let all = |a: &FiniteAlgebra| associativity_equivalents(a).unwrap().map(|w| w.holds);
        assert_eq!(all(&z(2)), [true; 3]);
        assert_eq!(all(&FiniteAlgebra::chain2()), [false; 3]);
        assert_eq!(all(&FiniteAlgebra::powerset(2).unwrap()), [false; 3]);
        assert_eq!(
            associativity_equivalents(&constant_zero2()),
            Err(Error::NotBci)
        );
    }

    #[test]
    fn p_semisimple_examples() {
        assert!(is_p_semisimple(&z(3)).holds);
        assert_eq!(
            is_p_semisimple(&FiniteAlgebra::chain2()).counterexample,
            Some(vec![1])
        );
        assert!(is_p_semisimple(&FiniteAlgebra::trivial()).holds);

        let bundle = |a: &FiniteAlgebra| p_semisimple_equivalents(a).unwrap().map(|w| w.holds);
        assert_eq!(bundle(&z(3)), [true; 9]);
        assert_eq!(bundle(&FiniteAlgebra::chain2()), [false; 9]);
        assert_eq!(bundle(&FiniteAlgebra::trivial()), [true; 9]);
    }

    #[test]
    fn bck_quasigroup_loop() {
        assert!(is_bck(&FiniteAlgebra::powerset(2).unwrap()).holds);
        assert!(!is_bck(&z(3)).holds);
        assert!(is_bck(&FiniteAlgebra::trivial()).holds);

        assert!(is_quasigroup(&z(3)).holds);
        let c = is_quasigroup(&FiniteAlgebra::chain2());
        assert_eq!(c.counterexample, Some(vec![0, 0, 1]));
        assert!(!is_quasigroup(&FiniteAlgebra::powerset(2).unwrap()).holds);

        assert!(is_loop(&z(2)).holds);
        assert_eq!(is_loop(&z(3)).clause, Some(2));
        assert_eq!(is_loop(&FiniteAlgebra::chain2()).clause, Some(1));
    }

    #[test]
    fn exchange_law_examples() {
        assert!(
            theorem6_holds(&FiniteAlgebra::powerset(2).unwrap())
                .unwrap()
                .holds
        );
        assert!(theorem6_holds(&z(3)).unwrap().holds);
        assert!(exchange_law(&constant_zero2()).holds);
        assert_eq!(theorem6_holds(&constant_zero2()), Err(Error::NotBci));
    }

    #[test]
    fn quasi_associative_examples() {
        assert!(is_quasi_associative(&z(2)).unwrap().holds);
        assert!(
            is_quasi_associative(&FiniteAlgebra::trivial())
                .unwrap()
                .holds
        );
        // Brute force over the 8 triples of the chain: ((x*y)*z)*(x*(y*z)).
        let c = FiniteAlgebra::chain2();
        let t = [[0, 0], [1, 0]];
        let mut oracle = true;
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    let l = t[t[x][y]][z];
                    let r = t[x][t[y][z]];
                    if t[l][r] != 0 {
                        oracle = false;
                    }
                }
            }
        }
        assert!(oracle);
        assert_eq!(is_quasi_associative(&c).unwrap().holds, oracle);
        assert!(!is_quasi_associative(&z(3)).unwrap().holds);
    }

    #[test]
    fn boolean_group_examples() {
        assert!(is_boolean_group(&z(2)).holds);
        assert_eq!(is_boolean_group(&z(4)).clause, Some(1));
        assert!(!is_boolean_group(&FiniteAlgebra::chain2()).holds);
    }

    #[test]
    fn scanner_is_lexicographic() {
        let mut seen = Vec::new();
        let r = first_violation(2, |t: [usize; 2]| {
            seen.push(t);
            false
        });
        assert!(r.is_none());
        assert_eq!(seen, vec![[0, 0], [0, 1], [1, 0], [1, 1]]);
    }
}
