//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `--nocapture` to see the lines of passing criteria).
//!
//! Criterion 2 asserts, verbatim, that the weighted-reverse enumeration for
//! w = (1,1,0,3,0,0) contains four specific rank-10 reference series. Those
//! series have defect 4 and 5 while |w| = 5 forces rank 11 and defect 5, so
//! the containment cannot hold in any implementation satisfying the
//! counting identities of criterion 6; the recoverable half (the two
//! reference series consistent with the counting identities, obtained from
//! w = (1,1,0,2,0,0)) is asserted in the same test. The literal clause is
//! kept and fails honestly.

use std::time::Instant;

use nakayama::families::two_ag_sweep;
use nakayama::filtered::epsilon;
use nakayama::profile::profile;
use nakayama::reverse::{defect_invariant_reverse, enumerate_reverses};
use nakayama::structure::{defect_of_projective, defect_total};
use nakayama::uniserial::Uniserial;
use nakayama::{Dim, Kind, KupischSeries};
use nakayama_cli::enumerate::enumerate_words;
use nakayama_cli::verify::{verify, TheoremId};

fn cyclic(entries: &[u32]) -> KupischSeries {
    KupischSeries::cyclic(entries.to_vec()).unwrap()
}

fn linear(entries: &[u32]) -> KupischSeries {
    KupischSeries::linear(entries.to_vec()).unwrap()
}

fn pass(n: u32, what: &str) {
    println!("ACCEPTANCE {n} ({what}): PASS");
}

#[test]
fn acceptance_01_worked_reverse_round_trip() {
    let theta = linear(&[2, 2, 1, 3, 2, 1]);
    // Warm up, then time the round trip.
    let _ = defect_invariant_reverse(&theta).unwrap();
    let start = Instant::now();
    let lambda = defect_invariant_reverse(&theta).unwrap();
    let eps = epsilon(&lambda).unwrap();
    let d_lambda = defect_total(&lambda);
    let d_theta = defect_total(&theta);
    let elapsed = start.elapsed();

    assert!(lambda.is_isomorphic_to(&cyclic(&[2, 4, 3, 3, 3, 4, 3, 2, 2])));
    let comps: Vec<Vec<u32>> = eps
        .theta
        .components()
        .iter()
        .map(|c| c.entries().to_vec())
        .collect();
    assert_eq!(comps.len(), 2);
    assert!(comps.contains(&vec![2, 2, 1]) && comps.contains(&vec![3, 2, 1]));
    assert_eq!(d_lambda, 3);
    assert_eq!(d_theta, 3);
    assert!(
        elapsed.as_micros() < 1000,
        "round trip took {elapsed:?}, bound is 1 ms"
    );
    pass(1, "worked defect-invariant reverse round trip");
}

#[test]
fn acceptance_02_weighted_example() {
    let theta = linear(&[2, 2, 1, 3, 2, 1]);
    let weights = [1, 1, 0, 3, 0, 0];
    let outputs = enumerate_reverses(&theta, &weights, 1000).unwrap();
    assert!(!outputs.is_empty());
    for lambda in &outputs {
        let eps = epsilon(lambda).unwrap();
        assert!(eps.theta.is_isomorphic_to(&theta), "{lambda}");
        assert_eq!(defect_total(lambda), 5, "{lambda}");
        assert!(profile(lambda).domdim <= Dim::Finite(2), "{lambda}");
    }

    // The internally consistent members of the reference list: defect 4,
    // from the weight vector (1,1,0,2,0,0).
    let consistent = enumerate_reverses(&theta, &[1, 1, 0, 2, 0, 0], 1000).unwrap();
    for reference in [
        cyclic(&[3, 2, 4, 3, 3, 3, 4, 3, 2, 3]),
        cyclic(&[3, 5, 4, 3, 3, 3, 4, 3, 2, 3]),
    ] {
        assert!(
            consistent.iter().any(|l| l.is_isomorphic_to(&reference)),
            "missing {reference}"
        );
    }

    // Literal clause: all four reference series among the w = (1,1,0,3,0,0)
    // outputs. Rank 10 versus the forced rank 11 makes this impossible; see
    // the module docs. Asserted as stated.
    let reference_series = [
        cyclic(&[3, 2, 4, 3, 3, 3, 4, 3, 2, 4]),
        cyclic(&[3, 2, 4, 3, 3, 3, 4, 3, 2, 3]),
        cyclic(&[3, 5, 4, 3, 3, 3, 4, 3, 2, 4]),
        cyclic(&[3, 5, 4, 3, 3, 3, 4, 3, 2, 3]),
    ];
    let missing: Vec<String> = reference_series
        .iter()
        .filter(|p| !outputs.iter().any(|l| l.is_isomorphic_to(p)))
        .map(|p| p.to_string())
        .collect();
    if missing.is_empty() {
        pass(2, "weighted reverse example");
    } else {
        println!(
            "ACCEPTANCE 2 (weighted reverse example): FAIL - |w| = 5 forces rank 11 and \
             defect 5, the four reference series have rank 10 (defects 4 and 5, two of \
             them outside every fiber); missing: {}",
            missing.join(", ")
        );
        panic!("literal containment of the reference weighted series is unsatisfiable");
    }
}

#[test]
fn acceptance_03_two_ag_sweep_radical_square_zero() {
    let got = two_ag_sweep(2, 2..=11, &[0, 1]).unwrap();
    let expected: Vec<Vec<u32>> = vec![
        vec![4, 5, 4, 5],
        vec![4, 4, 3, 4, 3],
        vec![4, 4, 3, 3, 2, 3],
        vec![4, 4, 3, 3, 2, 2, 3],
        vec![4, 4, 3, 3, 2, 2, 2, 3],
        vec![4, 4, 3, 3, 2, 2, 2, 2, 3],
        vec![4, 4, 3, 3, 2, 2, 2, 2, 2, 3],
        vec![4, 4, 3, 3, 2, 2, 2, 2, 2, 2, 3],
        vec![4, 4, 3, 3, 2, 2, 2, 2, 2, 2, 2, 3],
        vec![4, 4, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 3],
    ];
    let got_entries: Vec<Vec<u32>> = got.iter().map(|s| s.entries().to_vec()).collect();
    assert_eq!(got_entries, expected);
    for lambda in &got {
        let p = profile(lambda);
        assert!(p.flags.is_minimal_ag, "{lambda}");
        assert_eq!(p.flags.auslander_gorenstein_d, Some(Dim::Finite(2)));
        assert_eq!(p.gldim, Dim::Infinite);
    }
    pass(3, "radical-square-zero 2-AG sweep matches the reference list");
}

#[test]
fn acceptance_04_two_ag_sweep_length_five() {
    let got = two_ag_sweep(5, 4..=10, &[0, 2, 3]).unwrap();
    let expected: Vec<Vec<u32>> = vec![
        vec![9, 9, 8, 9, 10, 9, 10],
        vec![8, 9, 8, 8, 9, 8, 9, 8],
        vec![8, 8, 7, 8, 8, 7, 8, 7, 8],
        vec![8, 8, 7, 7, 8, 7, 7, 6, 7, 8],
        vec![8, 8, 7, 7, 7, 6, 7, 6, 6, 7, 8],
        vec![8, 8, 7, 7, 7, 6, 6, 5, 6, 6, 7, 8],
        vec![8, 8, 7, 7, 7, 6, 6, 5, 5, 6, 6, 7, 8],
    ];
    let got_entries: Vec<Vec<u32>> = got.iter().map(|s| s.entries().to_vec()).collect();
    assert_eq!(got_entries, expected);
    for lambda in &got {
        let p = profile(lambda);
        assert!(p.flags.is_minimal_ag, "{lambda}");
        assert_eq!(p.flags.auslander_gorenstein_d, Some(Dim::Finite(2)));
    }
    pass(4, "length-five 2-AG sweep matches the reference list");
}

#[test]
fn acceptance_05_reverse_of_auslander_series() {
    for k in 1..=4usize {
        let theta_entries: Vec<u32> = (0..k).flat_map(|_| [2, 3]).collect();
        let expected: Vec<u32> = (0..k).flat_map(|_| [3, 4, 4]).collect();
        let lambda = defect_invariant_reverse(&cyclic(&theta_entries)).unwrap();
        assert!(lambda.is_isomorphic_to(&cyclic(&expected)), "k = {k}");
        let p = profile(&lambda);
        assert_eq!(p.gldim, Dim::Finite(4), "k = {k}");
        assert_eq!(p.domdim, Dim::Finite(4), "k = {k}");
        assert!(p.flags.is_higher_auslander, "k = {k}");
    }
    pass(5, "(23)^k reverses to (344)^k, higher Auslander of gldim 4");
}

#[test]
fn acceptance_06_counting_identities() {
    let report = verify(TheoremId::Counts, 7, 10, 0);
    assert!(
        report.violations.is_empty(),
        "{:#?}",
        report.violations
    );
    assert!(report.cases > 2000);
    pass(6, "counting identities, exhaustive at rank <= 7, entries <= 10");
}

#[test]
fn acceptance_07_theorems_a_b_c() {
    let b = verify(TheoremId::B, 6, 8, 0);
    assert!(b.violations.is_empty(), "{:#?}", b.violations);
    let c = verify(TheoremId::C, 6, 8, 0);
    assert!(c.violations.is_empty(), "{:#?}", c.violations);
    // Fiber completeness, the sharpest form of the reverse-construction
    // theorem, at its own desk-scale bounds.
    let a = verify(TheoremId::A, 4, 4, 0);
    assert!(a.violations.is_empty(), "{:#?}", a.violations);
    pass(7, "dimension transfer, dominant-AG transfer, fibers and uniqueness");
}

#[test]
fn acceptance_08_duality() {
    let report = verify(TheoremId::Duality, 6, 8, 0);
    assert!(report.violations.is_empty(), "{:#?}", report.violations);
    pass(8, "epsilon is the opposite of eta across the universe");
}

#[test]
fn acceptance_09_evenness_and_two_ag_structure() {
    let report = verify(TheoremId::Evenness, 6, 8, 0);
    assert!(report.violations.is_empty(), "{:#?}", report.violations);
    pass(9, "even dominant dimensions and 2-AG structure bounds");
}

#[test]
fn acceptance_10_oracle_agreement() {
    let mut algebras = Vec::new();
    for rank in 1..=6 {
        for word in enumerate_words(rank, 8, Kind::Cyclic) {
            algebras.push(KupischSeries::cyclic(word).unwrap());
        }
    }
    for alg in &algebras {
        // Defect by quotient enumeration versus the Kupisch difference.
        for v in alg.vertices() {
            let direct = defect_of_projective(alg, v);
            let prev = alg.entry(alg.pred(v).unwrap());
            assert_eq!(direct, alg.entry(v).saturating_sub(prev), "{alg} at {v}");
        }
        // Window-counting Hom dimension versus brute-force enumeration of
        // quotient/submodule pairs.
        let mut modules = Vec::new();
        for v in alg.vertices() {
            for len in 1..=alg.entry(v) {
                modules.push(Uniserial::new(v, len));
            }
        }
        for m in &modules {
            for n in &modules {
                let brute = {
                    let mut count = 0;
                    for t in 1..=m.len {
                        let quotient = Uniserial::new(m.top, t);
                        for s in 1..=n.len {
                            let sub =
                                Uniserial::new(alg.step(n.top, (n.len - s) as isize).unwrap(), s);
                            if quotient == sub {
                                count += 1;
                            }
                        }
                    }
                    count
                };
                assert_eq!(alg.hom_dim(m, n), brute, "{alg} {m} {n}");
            }
        }
    }
    pass(10, "hom and defect oracles agree across the rank <= 6 universe");
}

/// Larger sweeps of the same suites; slow in aggregate, run on demand with
/// `cargo test -- --ignored`.
#[test]
#[ignore]
fn stress_beyond_the_stated_bounds() {
    for (theorem, rank, max) in [
        (TheoremId::Counts, 10, 10),
        (TheoremId::Duality, 9, 10),
        (TheoremId::B, 9, 9),
        (TheoremId::C, 9, 9),
        (TheoremId::Evenness, 9, 9),
        (TheoremId::A, 5, 5),
    ] {
        let report = verify(theorem, rank, max, 0);
        assert!(
            report.violations.is_empty(),
            "{theorem:?} at ({rank},{max}): {:#?}",
            report.violations
        );
    }
}
