//! Corpus-wide theorem sweeps: every enumerated BCI-algebra up to a given
//! order, every Boolean subgroup of its automorphism group, and (for the
//! holomorph biconditionals) every magma of order at most three.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::error::Result;
use crate::fenyves::{fenyves_profile, NON_ASSOCIATIVE_CLASS};
use crate::holomorph::{
    build_holomorph, verify_corollaries, verify_fenyves_transfer, verify_theorem10,
    verify_theorem11, verify_theorem12, verify_theorem13, verify_theorem9, TransferTheorem,
};
use crate::morphisms::{
    automorphism_group, boolean_automorphism_subgroups, lemma1_check, lemma2_check,
    AutomorphismGroup, Bijection,
};
use crate::props::{
    associativity_equivalents, is_associative, is_bci, is_bci_def1, is_bci_thm1, is_boolean_group,
    is_loop, is_p_semisimple, is_quasi_associative, is_quasigroup, p_semisimple_equivalents,
    theorem6_holds,
};
use crate::search::{canonical_form, enumerate_bci, EnumerationOptions};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest order for the all-magmas part of the sweep.
pub const MAGMA_SWEEP_ORDER: usize = 3;

/// Largest order at which every bijection is fed to the regularity audit.
pub const BIJECTION_AUDIT_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowId {
    BciCheckers,
    Theorem2,
    Theorem3And4,
    Theorem5,
    Theorem6,
    Theorem7,
    Theorem8,
    Remark2,
    Lemma1,
    Lemma2,
    Theorem9,
    Theorem10,
    Theorem11,
    Theorem12,
    Theorem13,
    Corollary1,
    Corollary2,
    Corollary3,
    Corollary4,
    Theorem14,
    Theorem15,
    Theorem16,
    Theorem17,
}

impl RowId {
    pub const ALL: [RowId; 23] = [
        RowId::BciCheckers,
        RowId::Theorem2,
        RowId::Theorem3And4,
        RowId::Theorem5,
        RowId::Theorem6,
        RowId::Theorem7,
        RowId::Theorem8,
        RowId::Remark2,
        RowId::Lemma1,
        RowId::Lemma2,
        RowId::Theorem9,
        RowId::Theorem10,
        RowId::Theorem11,
        RowId::Theorem12,
        RowId::Theorem13,
        RowId::Corollary1,
        RowId::Corollary2,
        RowId::Corollary3,
        RowId::Corollary4,
        RowId::Theorem14,
        RowId::Theorem15,
        RowId::Theorem16,
        RowId::Theorem17,
    ];

    fn transfer(theorem: u8) -> RowId {
        match theorem {
            14 => RowId::Theorem14,
            15 => RowId::Theorem15,
            16 => RowId::Theorem16,
            _ => RowId::Theorem17,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureInstance {
    pub algebra: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<Vec<usize>>>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub id: RowId,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub first_failure: Option<FailureInstance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub index: usize,
    /// Canonical table of the first non-associative BCI-algebra satisfying
    /// the identity, scanning by order then canonical form.
    pub witness: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremMatrix {
    pub schema_version: u32,
    pub order_max: usize,
    /// Number of BCI-algebras up to isomorphism, per order `1..=order_max`.
    pub corpus_sizes: Vec<usize>,
    pub magma_sweep_order: usize,
    pub rows: Vec<TheoremRow>,
    pub nonassociative_witnesses: Vec<WitnessEntry>,
}

impl TheoremMatrix {
    pub fn row(&self, id: RowId) -> &TheoremRow {
        self.rows
            .iter()
            .find(|r| r.id == id)
            .expect("every row id is present")
    }

    pub fn failed_rows(&self) -> impl Iterator<Item = &TheoremRow> {
        self.rows.iter().filter(|r| r.fail > 0)
    }

    pub fn all_pass(&self) -> bool {
        self.failed_rows().next().is_none()
    }
}

#[derive(Debug, Clone)]
enum Outcome {
    Pass,
    Fail(FailureInstance),
    NotApplicable,
}

type Tally = Vec<(RowId, Outcome)>;

struct Ctx<'a> {
    algebra: &'a FiniteAlgebra,
    subgroup: Option<&'a AutomorphismGroup>,
    out: Tally,
}

impl Ctx<'_> {
    fn record(&mut self, id: RowId, ok: bool, detail: impl FnOnce() -> String) {
        let outcome = if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(FailureInstance {
                algebra: self.algebra.rows(),
                subgroup: self
                    .subgroup
                    .map(|g| g.elements().iter().map(|b| b.image().to_vec()).collect()),
                detail: detail(),
            })
        };
        self.out.push((id, outcome));
    }

    fn skip(&mut self, id: RowId) {
        self.out.push((id, Outcome::NotApplicable));
    }

    fn record_result<T>(
        &mut self,
        id: RowId,
        r: Result<T>,
        ok: impl FnOnce(&T) -> bool,
        show: impl FnOnce(&T) -> String,
    ) {
        match r {
            Ok(v) => {
                let pass = ok(&v);
                self.record(id, pass, || show(&v));
            }
            Err(e) => {
                let msg = e.to_string();
                self.record(id, false, || msg);
            }
        }
    }
}

fn debug<T: std::fmt::Debug>(v: &T) -> String {
    format!("{v:?}")
}

/// Per-algebra rows for a BCI corpus member.
fn sweep_algebra(a: &FiniteAlgebra) -> Tally {
    let mut ctx = Ctx {
        algebra: a,
        subgroup: None,
        out: Vec::new(),
    };
    let d1 = is_bci_def1(a);
    let t1 = is_bci_thm1(a);
    ctx.record(RowId::BciCheckers, d1.holds == t1.holds, || {
        format!("{d1:?} vs {t1:?}")
    });

    ctx.record_result(
        RowId::Theorem2,
        associativity_equivalents(a),
        |ws| ws.iter().all(|w| w.holds == ws[0].holds),
        debug,
    );
    ctx.record_result(
        RowId::Theorem3And4,
        p_semisimple_equivalents(a),
        |ws| ws.iter().all(|w| w.holds == ws[0].holds),
        debug,
    );
    let assoc = is_associative(a).holds;
    let pss = is_p_semisimple(a).holds;
    ctx.record_result(
        RowId::Theorem5,
        is_quasi_associative(a),
        |qa| assoc == (pss && qa.holds),
        |qa| {
            format!(
                "associative={assoc} p_semisimple={pss} quasi_associative={}",
                qa.holds
            )
        },
    );
    ctx.record_result(RowId::Theorem6, theorem6_holds(a), |w| w.holds, debug);

    let quasigroup = is_quasigroup(a).holds;
    let lp = is_loop(a).holds;
    let boolean = is_boolean_group(a).holds;
    ctx.record(
        RowId::Theorem7,
        quasigroup == pss && lp == assoc && (!assoc || boolean),
        || format!("quasigroup={quasigroup} p_semisimple={pss} loop={lp} associative={assoc} boolean_group={boolean}"),
    );

    let profile = fenyves_profile(a);
    let offending: Vec<usize> = profile
        .indices()
        .into_iter()
        .filter(|i| !NON_ASSOCIATIVE_CLASS.contains(i))
        .filter(|_| !assoc)
        .collect();
    ctx.record(RowId::Theorem8, offending.is_empty(), || {
        format!("non-associative but satisfies {offending:?}")
    });
    ctx.record(RowId::Remark2, profile.satisfies(54), || "F54 fails".into());

    if a.order() <= BIJECTION_AUDIT_ORDER {
        for d in Bijection::all(a.order()) {
            ctx.record_result(
                RowId::Lemma1,
                lemma1_check(a, &d),
                |r| r.agrees(),
                |r| format!("bijection {:?}: {r:?}", d.image()),
            );
        }
    }

    let group = automorphism_group(a);
    for auto in group.elements() {
        ctx.record_result(
            RowId::Lemma2,
            lemma2_check(a, auto),
            |r| r.right && r.left,
            |r| format!("automorphism {:?}: {r:?}", auto.image()),
        );
    }

    for sub in boolean_automorphism_subgroups(&group) {
        let mut sctx = Ctx {
            algebra: a,
            subgroup: Some(&sub),
            out: Vec::new(),
        };
        sweep_pair(&mut sctx, &sub);
        ctx.out.extend(sctx.out);
    }
    ctx.out
}

/// Holomorph rows for a BCI base and one Boolean subgroup.
fn sweep_pair(ctx: &mut Ctx<'_>, sub: &AutomorphismGroup) {
    let a = ctx.algebra;
    ctx.record_result(RowId::Theorem9, verify_theorem9(a, sub), |r| r.agree, debug);
    ctx.record_result(
        RowId::Theorem10,
        verify_theorem10(a, sub),
        |r| r.agree,
        debug,
    );
    corollary_rows(ctx, sub);

    let holomorph_bci = build_holomorph(a, sub).is_ok_and(|h| is_bci(h.algebra()));
    if !holomorph_bci {
        for id in [
            RowId::Theorem11,
            RowId::Theorem12,
            RowId::Theorem13,
            RowId::Corollary3,
        ] {
            ctx.skip(id);
        }
        for i in TransferTheorem::SUPPORTED {
            let theorem = TransferTheorem::for_index(i).expect("supported").number();
            ctx.skip(RowId::transfer(theorem));
        }
        return;
    }
    ctx.record_result(
        RowId::Theorem11,
        verify_theorem11(a, sub),
        |r| r.agree(),
        debug,
    );
    ctx.record_result(
        RowId::Theorem12,
        verify_theorem12(a, sub),
        |r| r.agree(),
        debug,
    );
    match verify_theorem13(a, sub) {
        Ok(r) => {
            let fenyves_ok = r.fenyves.iter().all(|&(_, h, b)| h == b);
            ctx.record(RowId::Theorem13, r.associative.agree(), || {
                format!("{:?}", r.associative)
            });
            ctx.record(RowId::Corollary3, fenyves_ok, || format!("{:?}", r.fenyves));
        }
        Err(e) => {
            let msg = e.to_string();
            ctx.record(RowId::Theorem13, false, || msg.clone());
            ctx.record(RowId::Corollary3, false, || msg);
        }
    }
    for i in TransferTheorem::SUPPORTED {
        let theorem = TransferTheorem::for_index(i).expect("supported").number();
        let row = RowId::transfer(theorem);
        match verify_fenyves_transfer(a, sub, i) {
            Ok(r) => match r.agree {
                None => ctx.skip(row),
                Some(ok) => ctx.record(row, ok, || format!("{r:?}")),
            },
            Err(e) => {
                let msg = e.to_string();
                ctx.record(row, false, || msg);
            }
        }
    }
}

fn corollary_rows(ctx: &mut Ctx<'_>, sub: &AutomorphismGroup) {
    match verify_corollaries(ctx.algebra, sub) {
        Ok(r) => {
            ctx.record(RowId::Corollary1, r.p_semisimple.agree(), || {
                format!("{:?}", r.p_semisimple)
            });
            ctx.record(RowId::Corollary2, r.bck.agree(), || format!("{:?}", r.bck));
            ctx.record(RowId::Corollary4, r.associative.agree(), || {
                format!("{:?}", r.associative)
            });
        }
        Err(e) => {
            let msg = e.to_string();
            for id in [RowId::Corollary1, RowId::Corollary2, RowId::Corollary4] {
                ctx.record(id, false, || msg.clone());
            }
        }
    }
}

/// Rows that make sense for an arbitrary magma: checker agreement, and the
/// holomorph biconditionals whose hypothesis is only "groupoid".
fn sweep_magma(a: &FiniteAlgebra) -> Tally {
    let mut ctx = Ctx {
        algebra: a,
        subgroup: None,
        out: Vec::new(),
    };
    let d1 = is_bci_def1(a);
    let t1 = is_bci_thm1(a);
    ctx.record(RowId::BciCheckers, d1.holds == t1.holds, || {
        format!("{d1:?} vs {t1:?}")
    });
    for sub in boolean_automorphism_subgroups(&automorphism_group(a)) {
        let mut sctx = Ctx {
            algebra: a,
            subgroup: Some(&sub),
            out: Vec::new(),
        };
        sctx.record_result(
            RowId::Theorem10,
            verify_theorem10(a, &sub),
            |r| r.agree,
            debug,
        );
        corollary_rows(&mut sctx, &sub);
        ctx.out.extend(sctx.out);
    }
    ctx.out
}

fn magma_from_index(n: usize, mut k: usize) -> FiniteAlgebra {
    let mut table = vec![0; n * n];
    for cell in table.iter_mut().rev() {
        *cell = k % n;
        k /= n;
    }
    FiniteAlgebra::from_table_unchecked(n, table)
}

/// Every magma of order `n` in lexicographic table order.
pub fn all_magmas(n: usize) -> impl ParallelIterator<Item = FiniteAlgebra> {
    let count = n.pow((n * n) as u32);
    (0..count)
        .into_par_iter()
        .map(move |k| magma_from_index(n, k))
}

fn merge(tallies: impl IntoIterator<Item = Tally>) -> Vec<TheoremRow> {
    let mut rows: Vec<TheoremRow> = RowId::ALL
        .iter()
        .map(|&id| TheoremRow {
            id,
            pass: 0,
            fail: 0,
            not_applicable: 0,
            first_failure: None,
        })
        .collect();
    for tally in tallies {
        for (id, outcome) in tally {
            let row = rows.iter_mut().find(|r| r.id == id).expect("row exists");
            match outcome {
                Outcome::Pass => row.pass += 1,
                Outcome::NotApplicable => row.not_applicable += 1,
                Outcome::Fail(f) => {
                    row.fail += 1;
                    row.first_failure.get_or_insert(f);
                }
            }
        }
    }
    rows
}

/// Runs every theorem row over the corpus of BCI-algebras of order
/// `1..=order_max` and the magmas of order up to
/// `min(order_max, MAGMA_SWEEP_ORDER)`.
pub fn corpus_sweep(order_max: usize, allow_slow: bool) -> Result<TheoremMatrix> {
    let mut corpus = Vec::new();
    let mut corpus_sizes = Vec::new();
    for order in 1..=order_max {
        let mut opts = EnumerationOptions::new(order);
        opts.allow_slow = allow_slow;
        let algebras = enumerate_bci(&opts)?;
        corpus_sizes.push(algebras.len());
        corpus.extend(algebras);
    }
    let magma_order = order_max.min(MAGMA_SWEEP_ORDER);

    let mut tallies: Vec<Tally> = corpus.par_iter().map(sweep_algebra).collect();
    for n in 1..=magma_order {
        let mut batch: Vec<Tally> = all_magmas(n).map(|a| sweep_magma(&a)).collect();
        tallies.append(&mut batch);
    }
    let rows = merge(tallies);

    let nonassociative_witnesses = NON_ASSOCIATIVE_CLASS
        .iter()
        .map(|&i| WitnessEntry {
            index: i,
            witness: corpus
                .iter()
                .find(|a| !is_associative(a).holds && fenyves_profile(a).satisfies(i))
                .map(|a| canonical_form(a).to_algebra().rows()),
        })
        .collect();

    Ok(TheoremMatrix {
        schema_version: SCHEMA_VERSION,
        order_max,
        corpus_sizes,
        magma_sweep_order: magma_order,
        rows,
        nonassociative_witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_and_two_pass() {
        for order in 1..=2 {
            let m = corpus_sweep(order, false).unwrap();
            assert!(m.all_pass(), "{:?}", m.failed_rows().collect::<Vec<_>>());
            assert_eq!(m.rows.len(), RowId::ALL.len());
        }
    }

    #[test]
    fn magma_indexing() {
        assert_eq!(magma_from_index(2, 0).table(), &[0, 0, 0, 0]);
        assert_eq!(magma_from_index(2, 1).table(), &[0, 0, 0, 1]);
        assert_eq!(all_magmas(2).count(), 16);
    }
}
