//! A-holomorphs `H = A × Q` with `(α,x)∘(β,y) = (αβ, xβ * y)` and the
//! checks relating properties of `H` to those of `Q`.

use serde::Serialize;

use crate::algebra::{ElementIndex, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::fenyves::{identity_catalog, satisfies_fenyves};
use crate::morphisms::{is_lambda_regular, is_rho_regular, AutomorphismGroup};
use crate::props::{
    first_violation, is_associative, is_bci, is_bci_def1, is_bck, is_p_semisimple, Property,
    PropertyWitness,
};

/// Element `(α, x)` of a holomorph, `α` given by its position in the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HolomorphElement {
    pub auto_index: usize,
    pub elem: ElementIndex,
}

#[derive(Debug, Clone)]
pub struct HolomorphAlgebra {
    base: FiniteAlgebra,
    autos: AutomorphismGroup,
    algebra: FiniteAlgebra,
}

impl HolomorphAlgebra {
    pub fn base(&self) -> &FiniteAlgebra {
        &self.base
    }

    pub fn autos(&self) -> &AutomorphismGroup {
        &self.autos
    }

    /// The holomorph as a plain algebra on flat indices.
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    /// Flat index of `(α_k, x)`: `k * n + x`. The identity sits at `k = 0`,
    /// so `(I, 0)` is flat index 0.
    pub fn flat(&self, e: HolomorphElement) -> ElementIndex {
        e.auto_index * self.base.order() + e.elem
    }

    pub fn element(&self, flat: ElementIndex) -> HolomorphElement {
        let n = self.base.order();
        HolomorphElement {
            auto_index: flat / n,
            elem: flat % n,
        }
    }

    /// Flat indices of the diagonal copy `{(I, x)}` of the base.
    pub fn diagonal(&self) -> Vec<ElementIndex> {
        (0..self.base.order()).collect()
    }

    /// The product law evaluated directly on pairs.
    pub fn product(&self, p: HolomorphElement, q: HolomorphElement) -> HolomorphElement {
        let g = self.autos.elements();
        let alpha_beta = g[p.auto_index].then(&g[q.auto_index]);
        HolomorphElement {
            auto_index: self.autos.index_of(&alpha_beta).expect("group is closed"),
            elem: self.base.op(g[q.auto_index].apply(p.elem), q.elem),
        }
    }

    /// The diagonal as a standalone algebra, in base labelling.
    pub fn diagonal_algebra(&self) -> FiniteAlgebra {
        let n = self.base.order();
        let table = (0..n * n).map(|i| self.algebra.op(i / n, i % n)).collect();
        FiniteAlgebra::from_table_unchecked(n, table)
    }
}

fn check_autos(base: &FiniteAlgebra, autos: &AutomorphismGroup) -> Result<()> {
    if !autos.verify(base) {
        return Err(Error::NotAutomorphismGroup);
    }
    if !autos.is_boolean() {
        return Err(Error::NotBooleanGroup);
    }
    Ok(())
}

pub fn build_holomorph(
    base: &FiniteAlgebra,
    autos: &AutomorphismGroup,
) -> Result<HolomorphAlgebra> {
    check_autos(base, autos)?;
    let n = base.order();
    let g = autos.elements();
    let k = g.len();
    let size = k * n;
    // composition table of the group, by index
    let mut compose = vec![0usize; k * k];
    for (i, a) in g.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            compose[i * k + j] = autos
                .index_of(&a.then(b))
                .ok_or(Error::NotAutomorphismGroup)?;
        }
    }
    let mut table = Vec::with_capacity(size * size);
    for p in 0..size {
        let (i, x) = (p / n, p % n);
        for q in 0..size {
            let (j, y) = (q / n, q % n);
            let elem = base.op(g[j].apply(x), y);
            table.push(compose[i * k + j] * n + elem);
        }
    }
    Ok(HolomorphAlgebra {
        base: base.clone(),
        autos: autos.clone(),
        algebra: FiniteAlgebra::from_table_unchecked(size, table),
    })
}

/// `[(xδ * yδ) * (x * zγ)] * (z * y) = 0` over all `x, y, z` and `δ, γ`,
/// without checking that the base is BCI. Counterexamples are
/// `[x, y, z, δ, γ]` with automorphisms given by group index.
pub fn holomorph_condition(base: &FiniteAlgebra, autos: &AutomorphismGroup) -> PropertyWitness {
    let g = autos.elements();
    let n = base.order();
    let m = |x, y| base.op(x, y);
    let mut found = None;
    'scan: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for (di, d) in g.iter().enumerate() {
                    for (gi, c) in g.iter().enumerate() {
                        let lhs = m(m(m(d.apply(x), d.apply(y)), m(x, c.apply(z))), m(z, y));
                        if lhs != base.zero() {
                            found = Some(vec![x, y, z, di, gi]);
                            break 'scan;
                        }
                    }
                }
            }
        }
    }
    match found {
        None => PropertyWitness::pass(Property::HolomorphCondition),
        Some(t) => PropertyWitness::fail(Property::HolomorphCondition, 1, t),
    }
}

pub fn theorem9_condition(
    base: &FiniteAlgebra,
    autos: &AutomorphismGroup,
) -> Result<PropertyWitness> {
    if !is_bci(base) {
        return Err(Error::NotBci);
    }
    check_autos(base, autos)?;
    Ok(holomorph_condition(base, autos))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem9Report {
    pub holomorph_bci: PropertyWitness,
    pub condition: PropertyWitness,
    pub agree: bool,
}

/// Holomorph is BCI iff the condition holds, for a BCI base.
pub fn verify_theorem9(base: &FiniteAlgebra, autos: &AutomorphismGroup) -> Result<Theorem9Report> {
    let condition = theorem9_condition(base, autos)?;
    let h = build_holomorph(base, autos)?;
    let holomorph_bci = is_bci_def1(h.algebra());
    Ok(Theorem9Report {
        agree: holomorph_bci.holds == condition.holds,
        holomorph_bci,
        condition,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theorem10Report {
    pub holomorph_bci: bool,
    pub base_bci: bool,
    pub condition: bool,
    /// `x -> (I, x)` is an isomorphism onto the diagonal; checked only
    /// when the holomorph is BCI.
    #[serde(serialize_with = "crate::report::optional_bool")]
    pub diagonal_isomorphic: Option<bool>,
    pub agree: bool,
}

/// Holomorph is BCI iff the base is BCI and the condition holds; the base
/// may be any magma.
pub fn verify_theorem10(
    base: &FiniteAlgebra,
    autos: &AutomorphismGroup,
) -> Result<Theorem10Report> {
    let h = build_holomorph(base, autos)?;
    let holomorph_bci = is_bci(h.algebra());
    let base_bci = is_bci(base);
    let condition = holomorph_condition(base, autos).holds;
    let diagonal_isomorphic = holomorph_bci.then(|| {
        base.elements().all(|x| {
            base.elements()
                .all(|y| h.algebra().op(x, y) == base.op(x, y))
        })
    });
    Ok(Theorem10Report {
        holomorph_bci,
        base_bci,
        condition,
        diagonal_isomorphic,
        agree: holomorph_bci == (base_bci && condition) && diagonal_isomorphic != Some(false),
    })
}

/// A pair of truth values that a theorem says must coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub holomorph: bool,
    pub base: bool,
}

impl Agreement {
    pub fn agree(&self) -> bool {
        self.holomorph == self.base
    }
}

fn require_both_bci(base: &FiniteAlgebra, autos: &AutomorphismGroup) -> Result<HolomorphAlgebra> {
    if !is_bci(base) {
        return Err(Error::NotBci);
    }
    let h = build_holomorph(base, autos)?;
    if !is_bci(h.algebra()) {
        return Err(Error::NotBci);
    }
    Ok(h)
}

/// p-semisimplicity transfers between base and holomorph.
pub fn verify_theorem11(base: &FiniteAlgebra, autos: &AutomorphismGroup) -> Result<Agreement> {
    let h = require_both_bci(base, autos)?;
    Ok(Agreement {
        holomorph: is_p_semisimple(h.algebra()).holds,
        base: is_p_semisimple(base).holds,
    })
}

/// Base is BCK iff the diagonal `{(I, x)}` satisfies `(I,0)∘(I,x) = (I,0)`.
/// `holomorph` here refers to the diagonal subalgebra.
pub fn verify_theorem12(base: &FiniteAlgebra, autos: &AutomorphismGroup) -> Result<Agreement> {
    let h = require_both_bci(base, autos)?;
    let diag = h.diagonal();
    let zero = h.algebra().zero();
    Ok(Agreement {
        holomorph: diag.iter().all(|&x| h.algebra().op(zero, x) == zero),
        base: is_bck(base).holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem13Report {
    pub associative: Agreement,
    /// `(i, holomorph satisfies F_i, base satisfies F_i)` for the 46
    /// identities that force associativity.
    pub fenyves: Vec<(usize, bool, bool)>,
    pub agree: bool,
}

/// Associativity transfers, and with it every identity that forces it.
pub fn verify_theorem13(
    base: &FiniteAlgebra,
    autos: &AutomorphismGroup,
) -> Result<Theorem13Report> {
    let h = require_both_bci(base, autos)?;
    let associative = Agreement {
        holomorph: is_associative(h.algebra()).holds,
        base: is_associative(base).holds,
    };
    let mut fenyves = Vec::new();
    for id in identity_catalog()
        .iter()
        .filter(|id| id.is_associative_class)
    {
        fenyves.push((
            id.index,
            satisfies_fenyves(h.algebra(), id.index)?.holds,
            satisfies_fenyves(base, id.index)?.holds,
        ));
    }
    let agree = associative.agree() && fenyves.iter().all(|&(_, h, b)| h == b);
    Ok(Theorem13Report {
        associative,
        fenyves,
        agree,
    })
}

/// Biconditionals for an arbitrary magma base: the holomorph is a
/// p-semisimple / BCK / associative BCI-algebra iff the base is one and
/// the holomorph condition holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub p_semisimple: Agreement,
    pub bck: Agreement,
    pub associative: Agreement,
}

impl CorollaryReport {
    pub fn agree(&self) -> bool {
        self.p_semisimple.agree() && self.bck.agree() && self.associative.agree()
    }
}

pub fn verify_corollaries(
    base: &FiniteAlgebra,
    autos: &AutomorphismGroup,
) -> Result<CorollaryReport> {
    let h = build_holomorph(base, autos)?;
    let ha = h.algebra();
    let h_bci = is_bci(ha);
    let g_bci = is_bci(base);
    let cond = holomorph_condition(base, autos).holds;
    let rhs = |p: bool| g_bci && p && cond;
    Ok(CorollaryReport {
        p_semisimple: Agreement {
            holomorph: h_bci && is_p_semisimple(ha).holds,
            base: rhs(is_p_semisimple(base).holds),
        },
        bck: Agreement {
            holomorph: h_bci && is_bck(ha).holds,
            base: rhs(is_bck(base).holds),
        },
        associative: Agreement {
            holomorph: h_bci && is_associative(ha).holds,
            base: rhs(is_associative(base).holds),
        },
    })
}

/// Which transfer theorem covers an identity, and what it asks of the
/// non-identity automorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TransferTheorem {
    /// ρ-regular involutions: F27, F38.
    RhoRegular,
    /// λ- and ρ-regular involutions: F30, F40, F50, F53, F55, F56, F58.
    LambdaRhoRegular,
    /// λ-regular involutions: F4, F5, F6, F10, F20, F21, F25, F31.
    LambdaRegular,
    /// No condition: F42, F54.
    Unconditional,
}

impl TransferTheorem {
    pub fn for_index(i: usize) -> Option<TransferTheorem> {
        match i {
            27 | 38 => Some(TransferTheorem::RhoRegular),
            30 | 40 | 50 | 53 | 55 | 56 | 58 => Some(TransferTheorem::LambdaRhoRegular),
            4 | 5 | 6 | 10 | 20 | 21 | 25 | 31 => Some(TransferTheorem::LambdaRegular),
            42 | 54 => Some(TransferTheorem::Unconditional),
            _ => None,
        }
    }

    /// Theorem number used in reports.
    pub fn number(self) -> u8 {
        match self {
            TransferTheorem::RhoRegular => 14,
            TransferTheorem::LambdaRhoRegular => 15,
            TransferTheorem::LambdaRegular => 16,
            TransferTheorem::Unconditional => 17,
        }
    }

    pub const SUPPORTED: [usize; 19] = [
        4, 5, 6, 10, 20, 21, 25, 27, 30, 31, 38, 40, 42, 50, 53, 54, 55, 56, 58,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub index: usize,
    pub theorem: u8,
    pub preconditions_hold: bool,
    pub base: bool,
    pub holomorph: bool,
    /// `None` when the preconditions fail and the theorem says nothing.
    #[serde(serialize_with = "crate::report::optional_bool")]
    pub agree: Option<bool>,
}

impl TransferReport {
    pub fn applicable(&self) -> bool {
        self.preconditions_hold
    }
}

/// F_i transfers between base and holomorph under the regularity
/// preconditions of the covering theorem. Unmet preconditions give a
/// report with `agree == None` rather than an error.
pub fn verify_fenyves_transfer(
    base: &FiniteAlgebra,
    autos: &AutomorphismGroup,
    i: usize,
) -> Result<TransferReport> {
    let theorem = TransferTheorem::for_index(i).ok_or(Error::UnsupportedIndex(i))?;
    let h = require_both_bci(base, autos)?;
    let non_identity = || autos.elements().iter().filter(|d| !d.is_identity());
    let preconditions_hold = match theorem {
        TransferTheorem::RhoRegular => {
            non_identity().all(|d| d.is_involution() && is_rho_regular(base, d))
        }
        TransferTheorem::LambdaRhoRegular => non_identity()
            .all(|d| d.is_involution() && is_lambda_regular(base, d) && is_rho_regular(base, d)),
        TransferTheorem::LambdaRegular => {
            non_identity().all(|d| d.is_involution() && is_lambda_regular(base, d))
        }
        TransferTheorem::Unconditional => true,
    };
    let b = satisfies_fenyves(base, i)?.holds;
    let hh = satisfies_fenyves(h.algebra(), i)?.holds;
    Ok(TransferReport {
        index: i,
        theorem: theorem.number(),
        preconditions_hold,
        base: b,
        holomorph: hh,
        agree: preconditions_hold.then_some(b == hh),
    })
}

/// `(α,x)∘(I,0) = (α,x)` for every element; holds whenever `x*0 = x` in the base.
pub fn zero_is_right_identity(h: &HolomorphAlgebra) -> bool {
    let a = h.algebra();
    a.elements().all(|p| a.op(p, 0) == p)
}

/// Exhaustive check of the flat table against the pairwise product law.
pub fn product_law_holds(h: &HolomorphAlgebra) -> bool {
    let a = h.algebra();
    first_violation(a.order(), |[p, q]| {
        let expect = h.product(h.element(p), h.element(q));
        a.op(p, q) != h.flat(expect)
    })
    .is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::{automorphism_group, boolean_automorphism_subgroups, Bijection};

    fn z(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::zn_subtraction(n).unwrap()
    }

    fn z3_neg() -> AutomorphismGroup {
        automorphism_group(&z(3))
    }

    #[test]
    fn trivial_group_holomorph_is_base() {
        for base in [FiniteAlgebra::chain2(), FiniteAlgebra::trivial(), z(3)] {
            let h = build_holomorph(&base, &AutomorphismGroup::trivial(base.order())).unwrap();
            assert_eq!(h.algebra(), &base);
            assert!(product_law_holds(&h));
        }
    }

    #[test]
    fn z3_with_negation() {
        let h = build_holomorph(&z(3), &z3_neg()).unwrap();
        assert_eq!(h.algebra().order(), 6);
        assert!(product_law_holds(&h));
        assert!(zero_is_right_identity(&h));
        assert!(!is_bci(h.algebra()));

        let c = theorem9_condition(&z(3), &z3_neg()).unwrap();
        assert!(!c.holds);
        assert_eq!(c.counterexample, Some(vec![0, 0, 1, 0, 1]));

        let r = verify_theorem9(&z(3), &z3_neg()).unwrap();
        assert!(!r.holomorph_bci.holds);
        assert!(r.agree);
    }

    #[test]
    fn theorem9_examples() {
        let chain = FiniteAlgebra::chain2();
        let r = verify_theorem9(&chain, &AutomorphismGroup::trivial(2)).unwrap();
        assert!(r.holomorph_bci.holds && r.condition.holds && r.agree);
        assert!(
            theorem9_condition(&FiniteAlgebra::trivial(), &AutomorphismGroup::trivial(1))
                .unwrap()
                .holds
        );

        let p2 = FiniteAlgebra::powerset(2).unwrap();
        for sub in boolean_automorphism_subgroups(&automorphism_group(&p2)) {
            assert!(verify_theorem9(&p2, &sub).unwrap().agree);
        }
    }

    #[test]
    fn build_rejects_bad_groups() {
        let z3 = z(3);
        let not_auto =
            AutomorphismGroup::from_elements(&z(3), vec![Bijection::identity(3)]).unwrap();
        assert!(build_holomorph(&z3, &not_auto).is_ok());
        // Z_7 automorphism group is cyclic of order 6, not Boolean
        let z7 = z(7);
        assert_eq!(
            build_holomorph(&z7, &automorphism_group(&z7)).err(),
            Some(Error::NotBooleanGroup)
        );
        // group of another algebra
        let p2 = FiniteAlgebra::powerset(2).unwrap();
        let g = automorphism_group(&p2);
        let z4 = z(4);
        assert_eq!(
            build_holomorph(&z4, &g).err(),
            Some(Error::NotAutomorphismGroup)
        );
        let bad = FiniteAlgebra::from_rows(&[vec![0, 0], vec![0, 0]], 0).unwrap();
        assert_eq!(
            theorem9_condition(&bad, &AutomorphismGroup::trivial(2)),
            Err(Error::NotBci)
        );
    }

    #[test]
    fn theorem11_to_13_examples() {
        let chain = FiniteAlgebra::chain2();
        let t = AutomorphismGroup::trivial(2);
        assert_eq!(
            verify_theorem11(&chain, &t).unwrap(),
            Agreement {
                holomorph: false,
                base: false
            }
        );
        assert_eq!(
            verify_theorem11(&z(2), &t).unwrap(),
            Agreement {
                holomorph: true,
                base: true
            }
        );
        let one = AutomorphismGroup::trivial(1);
        assert!(
            verify_theorem11(&FiniteAlgebra::trivial(), &one)
                .unwrap()
                .base
        );

        let p2 = FiniteAlgebra::powerset(2).unwrap();
        let r = verify_theorem12(&p2, &AutomorphismGroup::trivial(4)).unwrap();
        assert!(r.base && r.holomorph);
        let r = verify_theorem12(&z(2), &t).unwrap();
        assert!(!r.base && !r.holomorph);

        let r = verify_theorem13(&z(2), &t).unwrap();
        assert!(r.associative.base && r.associative.holomorph && r.agree);
        assert_eq!(r.fenyves.len(), 46);
        let r = verify_theorem13(&chain, &t).unwrap();
        assert!(!r.associative.base && r.agree);

        assert_eq!(verify_theorem11(&z(3), &z3_neg()), Err(Error::NotBci));
    }

    #[test]
    fn theorem10_on_non_bci_magma() {
        let bad = FiniteAlgebra::from_rows(&[vec![0, 0], vec![0, 0]], 0).unwrap();
        let r = verify_theorem10(&bad, &AutomorphismGroup::trivial(2)).unwrap();
        assert!(!r.holomorph_bci && !r.base_bci && r.agree);
        assert_eq!(r.diagonal_isomorphic, None);
        let r = verify_theorem10(&FiniteAlgebra::chain2(), &AutomorphismGroup::trivial(2)).unwrap();
        assert_eq!(r.diagonal_isomorphic, Some(true));
        assert!(r.agree);
    }

    #[test]
    fn transfer_examples() {
        let p2 = FiniteAlgebra::powerset(2).unwrap();
        let t4 = AutomorphismGroup::trivial(4);
        let r = verify_fenyves_transfer(&p2, &t4, 42).unwrap();
        assert!(r.base && r.holomorph && r.agree == Some(true));
        let r =
            verify_fenyves_transfer(&FiniteAlgebra::chain2(), &AutomorphismGroup::trivial(2), 54)
                .unwrap();
        assert_eq!(r.agree, Some(true));
        assert_eq!(r.theorem, 17);
        assert_eq!(
            verify_fenyves_transfer(&p2, &t4, 19),
            Err(Error::UnsupportedIndex(19))
        );
        let r = verify_fenyves_transfer(&p2, &t4, 5).unwrap();
        assert!(r.preconditions_hold);
        assert_eq!(r.agree, Some(true));
        assert_eq!(TransferTheorem::SUPPORTED.len(), 19);
        for i in TransferTheorem::SUPPORTED {
            assert!(TransferTheorem::for_index(i).is_some());
        }
    }

    #[test]
    fn corollaries_on_small_cases() {
        let r = verify_corollaries(&z(3), &z3_neg()).unwrap();
        assert!(r.agree());
        let r = verify_corollaries(&z(2), &AutomorphismGroup::trivial(2)).unwrap();
        assert!(r.p_semisimple.holomorph && r.associative.holomorph && !r.bck.holomorph);
        assert!(r.agree());
    }
}
