//! Property tests over randomly sampled admissible series.

use proptest::prelude::*;

use nakayama::filtered::{check_duality, epsilon};
use nakayama::profile::{check_transfer_theorems, profile};
use nakayama::reverse::defect_invariant_reverse;
use nakayama::structure::{defect_total, defect_vector, structure_sets};
use nakayama::uniserial::Uniserial;
use nakayama::{Kind, KupischSeries};

fn admissible_cyclic() -> impl Strategy<Value = KupischSeries> {
    prop::collection::vec(2u32..=8, 1..=7)
        .prop_filter_map("admissible", |entries| KupischSeries::cyclic(entries).ok())
}

fn all_modules(alg: &KupischSeries) -> Vec<Uniserial> {
    let mut out = Vec::new();
    for v in alg.vertices() {
        for len in 1..=alg.entry(v) {
            out.push(Uniserial::new(v, len));
        }
    }
    out
}

proptest! {
    #[test]
    fn descent_count_equals_total_rise(alg in admissible_cyclic()) {
        let n = alg.rank();
        let rises: u32 = (0..n)
            .map(|i| alg.entries()[(i + 1) % n].saturating_sub(alg.entries()[i]))
            .sum();
        prop_assert_eq!(alg.descent_count() as u32, rises);
    }

    #[test]
    fn canonical_rotation_is_a_normal_form(alg in admissible_cyclic(), shift in 0usize..7) {
        let n = alg.rank();
        let rotated: Vec<u32> = (0..n).map(|k| alg.entries()[(shift + k) % n]).collect();
        let rotated = KupischSeries::cyclic(rotated).unwrap();
        prop_assert_eq!(rotated.canonical_rotation(), alg.canonical_rotation());
        prop_assert!(rotated.is_isomorphic_to(&alg));
    }

    #[test]
    fn opposite_is_an_involution_preserving_invariants(alg in admissible_cyclic()) {
        let op = alg.opposite();
        prop_assert_eq!(op.rank(), alg.rank());
        prop_assert_eq!(op.num_relations(), alg.num_relations());
        prop_assert_eq!(defect_total(&op), defect_total(&alg));
        prop_assert!(op.opposite().is_isomorphic_to(&alg));
    }

    #[test]
    fn syzygy_lengths_are_complementary(alg in admissible_cyclic()) {
        for m in all_modules(&alg) {
            match alg.syzygy(&m) {
                Some(omega) => prop_assert_eq!(omega.len + m.len, alg.entry(m.top)),
                None => prop_assert_eq!(m.len, alg.entry(m.top)),
            }
        }
    }

    #[test]
    fn gldim_agrees_through_projective_and_injective_routes(alg in admissible_cyclic()) {
        // Also exercised as an internal assertion of `profile`.
        let p = profile(&alg);
        let pd = alg.vertices().map(|v| alg.pdim(&alg.simple(v))).max().unwrap();
        prop_assert_eq!(p.gldim, pd);
    }

    #[test]
    fn structure_counts(alg in admissible_cyclic()) {
        let ss = structure_sets(&alg).unwrap();
        prop_assert_eq!(ss.socle_set.len(), ss.num_relations);
        prop_assert_eq!(ss.base_set.len(), ss.num_relations);
        prop_assert_eq!(alg.rank(), ss.num_relations + ss.defect_total as usize);
        let total: u32 = ss.base_set.iter().map(|b| b.len).sum();
        prop_assert_eq!(total as usize, alg.rank());
    }

    #[test]
    fn epsilon_ledger(alg in admissible_cyclic()) {
        let eps = epsilon(&alg).unwrap();
        prop_assert_eq!(alg.num_relations(), eps.theta.rank());
        prop_assert_eq!(
            defect_total(&alg) as usize,
            alg.rank() - eps.theta.rank()
        );
        // Delta lengths dominate the following defect of theta.
        let theta_defects = defect_vector(&eps.theta);
        let nt = eps.theta.rank();
        for (j, b) in eps.base_set.iter().enumerate() {
            prop_assert!(b.len > theta_defects[(j + 1) % nt]);
        }
    }

    #[test]
    fn transfer_theorems_hold(alg in admissible_cyclic()) {
        let eps = epsilon(&alg).unwrap();
        prop_assert!(check_transfer_theorems(&alg, &eps).is_ok());
    }

    #[test]
    fn duality_holds(alg in admissible_cyclic()) {
        let w = check_duality(&alg).unwrap();
        prop_assert!(w.holds);
        prop_assert!(w.proof_route_holds);
    }

    #[test]
    fn defect_invariant_round_trip(alg in admissible_cyclic()) {
        // Whenever Lambda is defect invariant, it is recovered from its
        // syzygy filtered algebra.
        let eps = epsilon(&alg).unwrap();
        if defect_total(&alg) == defect_total(&eps.theta) {
            let back = defect_invariant_reverse(&eps.theta).unwrap();
            prop_assert!(back.is_isomorphic_to(&alg));
        }
    }

    #[test]
    fn epsilon_shrinks_or_fixes(alg in admissible_cyclic()) {
        let theta = epsilon(&alg).unwrap().theta;
        prop_assert!(theta.rank() <= alg.rank());
        if theta.rank() == alg.rank() {
            // Zero defect: selfinjective fixed point.
            prop_assert!(alg.is_selfinjective());
            prop_assert_eq!(&theta, &alg);
        }
        if theta.kind() == Kind::Linear {
            // Components of a linear image are again admissible.
            for comp in theta.components() {
                prop_assert!(KupischSeries::linear(comp.entries().to_vec()).is_ok());
            }
        }
    }
}
