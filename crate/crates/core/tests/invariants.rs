use proptest::prelude::*;

use bci_workbench::holomorph::build_holomorph;
use bci_workbench::morphisms::{automorphism_group, boolean_automorphism_subgroups, Bijection};
use bci_workbench::props::{is_bci_def1, is_bci_thm1};
use bci_workbench::search::{canonical_form, enumerate_bci, EnumerationOptions};
use bci_workbench::tablefile::{parse_table, print_table};
use bci_workbench::FiniteAlgebra;

fn magma(max_order: usize) -> impl Strategy<Value = FiniteAlgebra> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n)
            .prop_map(move |t| FiniteAlgebra::from_table(n, t, 0).unwrap())
    })
}

fn corpus_member() -> impl Strategy<Value = FiniteAlgebra> {
    let all: Vec<FiniteAlgebra> = (1..=4)
        .flat_map(|n| enumerate_bci(&EnumerationOptions::new(n)).unwrap())
        .collect();
    prop::sample::select(all)
}

/// A random permutation of `0..n` that keeps 0 in place.
fn zero_fixing(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|mut rest| {
            rest.insert(0, 0);
            rest
        })
}

proptest! {
    #[test]
    fn canonical_form_ignores_relabeling(
        (a, perm) in magma(5).prop_flat_map(|a| { let n = a.order(); (Just(a), zero_fixing(n)) })
    ) {
        prop_assert_eq!(canonical_form(&a), canonical_form(&a.relabel(&perm)));
    }

    #[test]
    fn print_parse_round_trip(a in magma(6), labelled in any::<bool>()) {
        let a = if labelled {
            let names = (0..a.order()).map(|i| format!("e{i}")).collect();
            a.with_labels(names).unwrap()
        } else {
            a
        };
        prop_assert_eq!(parse_table(&print_table(&a)).unwrap(), a);
    }

    #[test]
    fn corpus_round_trips(a in corpus_member()) {
        prop_assert_eq!(parse_table(&print_table(&a)).unwrap(), a);
    }

    #[test]
    fn translations_agree_with_table(a in magma(5), x in 0usize..5, t in 0usize..5) {
        let n = a.order();
        let (x, t) = (x % n, t % n);
        prop_assert_eq!(a.left_translation(x).unwrap().apply(t), a.op(x, t));
        prop_assert_eq!(a.right_translation(x).unwrap().apply(t), a.op(t, x));
    }

    #[test]
    fn checkers_agree_on_random_magmas(a in magma(4)) {
        prop_assert_eq!(is_bci_def1(&a).holds, is_bci_thm1(&a).holds);
    }

    #[test]
    fn bijection_composition_laws(p in zero_fixing(6), q in zero_fixing(6)) {
        let p = Bijection::new(p).unwrap();
        let q = Bijection::new(q).unwrap();
        for x in 0..6 {
            prop_assert_eq!(p.then(&q).apply(x), q.apply(p.apply(x)));
        }
        prop_assert!(p.then(&p.inverse()).is_identity());
    }

    #[test]
    fn holomorph_product_matches_table(a in corpus_member()) {
        for g in boolean_automorphism_subgroups(&automorphism_group(&a)) {
            let h = build_holomorph(&a, &g).unwrap();
            let n = h.algebra().order();
            for p in 0..n {
                for q in 0..n {
                    let prod = h.product(h.element(p), h.element(q));
                    prop_assert_eq!(h.flat(prod), h.algebra().op(p, q));
                }
            }
        }
    }
}
