//! Every family generator output of rank at most 14 is admissible and
//! carries its advertised classification under the resolution oracle.

use nakayama::families::{
    dominant_ar_gldim3, dominant_ar_gldim3_mixed, dominant_ar_lowdim, generate_2ag,
    higher_auslander_gldim3, higher_auslander_gldim4, Ha4Params, LowDomdimMode, TwoAgSpec,
};
use nakayama::filtered::epsilon;
use nakayama::profile::profile;
use nakayama::structure::defect_total;
use nakayama::{Dim, KupischSeries};

const RANK_CAP: usize = 14;

#[test]
fn two_ag_over_all_small_seeds_and_f_vectors() {
    for len in 2..=4u32 {
        for rank in 1..=4usize {
            let theta = KupischSeries::cyclic(vec![len; rank]).unwrap();
            for mask in 0..(1u32 << rank) {
                let f: Vec<u8> = (0..rank)
                    .map(|i| if mask & (1 << i) != 0 { 2 } else { 1 })
                    .collect();
                let d = f.iter().filter(|&&x| x == 2).count();
                if rank + d > RANK_CAP {
                    continue;
                }
                let lambda = generate_2ag(&TwoAgSpec::new(theta.clone(), f.clone())).unwrap();
                assert_eq!(lambda.rank(), rank + d);
                assert_eq!(defect_total(&lambda) as usize, d);
                if d > 0 {
                    let p = profile(&lambda);
                    assert!(p.flags.is_minimal_ag, "{lambda} from f={f:?}");
                    assert_eq!(
                        p.flags.auslander_gorenstein_d,
                        Some(Dim::Finite(2)),
                        "{lambda}"
                    );
                    assert_eq!(p.domdim, Dim::Finite(2));
                }
            }
        }
    }
}

#[test]
fn higher_auslander_gldim3_sweep() {
    let tuples: Vec<Vec<u32>> = vec![
        vec![2],
        vec![3],
        vec![4],
        vec![5],
        vec![6],
        vec![7],
        vec![2, 2],
        vec![2, 3],
        vec![3, 3],
        vec![2, 4],
        vec![3, 4],
        vec![2, 5],
        vec![2, 2, 2],
        vec![2, 2, 3],
    ];
    for ns in tuples {
        let rank: usize = ns.iter().map(|&n| 2 * n as usize - 1).sum();
        assert!(rank <= RANK_CAP);
        let lambda = higher_auslander_gldim3(&ns).unwrap();
        assert_eq!(lambda.rank(), rank);
        let p = profile(&lambda);
        assert_eq!(p.gldim, Dim::Finite(3), "{ns:?}");
        assert_eq!(p.domdim, Dim::Finite(3), "{ns:?}");
        assert!(p.flags.is_higher_auslander, "{ns:?}");
    }
}

#[test]
fn higher_auslander_gldim4_sweep() {
    for k in 1..=4 {
        let lambda = higher_auslander_gldim4(&Ha4Params::Cyclic { k }).unwrap();
        let p = profile(&lambda);
        assert_eq!(p.gldim, Dim::Finite(4));
        assert_eq!(p.domdim, Dim::Finite(4));
        assert!(p.flags.is_higher_auslander);
    }
    for ns in [vec![0], vec![1], vec![2], vec![0, 0], vec![0, 1], vec![1, 1]] {
        let lambda = higher_auslander_gldim4(&Ha4Params::Linear { ns: ns.clone() }).unwrap();
        if lambda.rank() > RANK_CAP {
            continue;
        }
        let p = profile(&lambda);
        assert_eq!(p.gldim, Dim::Finite(4), "{ns:?}");
        assert_eq!(p.domdim, Dim::Finite(4), "{ns:?}");
        assert!(p.flags.is_higher_auslander, "{ns:?}");
    }
}

#[test]
fn dominant_ar_gldim3_sweep() {
    for (ns, xs) in [
        (vec![2], vec![1]),
        (vec![2], vec![2]),
        (vec![2], vec![3]),
        (vec![3], vec![2]),
        (vec![3], vec![4]),
        (vec![2, 2], vec![1, 1]),
        (vec![2, 2], vec![2, 1]),
        (vec![2, 2], vec![2, 3]),
        (vec![2, 3], vec![2, 1]),
        (vec![2, 3], vec![3, 2]),
    ] {
        let lambda = dominant_ar_gldim3(&ns, &xs).unwrap();
        assert!(lambda.rank() <= RANK_CAP);
        let p = profile(&lambda);
        assert_eq!(p.gldim, Dim::Finite(3), "{ns:?} {xs:?}");
        assert!(p.flags.is_dominant_ar, "{ns:?} {xs:?}");
        for q in p.per_projective.iter().filter(|q| !q.is_injective) {
            assert!(
                q.domdim == Dim::Finite(1) || q.domdim == Dim::Finite(3),
                "{ns:?} {xs:?}: domdim {}",
                q.domdim
            );
        }
    }
    for ns in [vec![2, 1], vec![1, 2], vec![3, 1], vec![2, 1, 1], vec![2, 2, 1]] {
        let lambda = dominant_ar_gldim3_mixed(&ns).unwrap();
        let p = profile(&lambda);
        assert_eq!(p.gldim, Dim::Finite(3), "{ns:?} -> {lambda}");
        assert!(p.flags.is_dominant_ar, "{ns:?} -> {lambda}");
    }
}

#[test]
fn dominant_ar_lowdim_sweep() {
    let seeds = [
        vec![2, 1],
        vec![2, 2, 1],
        vec![3, 2, 1],
        vec![3, 2, 2, 1],
        vec![2, 3, 2, 2, 1],
        vec![4, 3, 3, 2, 1],
    ];
    for entries in &seeds {
        let theta = KupischSeries::linear(entries.clone()).unwrap();
        for extra in 1..=2u32 {
            let lambda =
                dominant_ar_lowdim(&theta, LowDomdimMode::DomdimOne { extra }).unwrap();
            let p = profile(&lambda);
            assert_eq!(p.domdim, Dim::Finite(1), "{theta} extra={extra}");
            assert!(epsilon(&lambda).unwrap().theta.is_isomorphic_to(&theta));
        }
        let lambda = dominant_ar_lowdim(&theta, LowDomdimMode::DomdimTwo).unwrap();
        let p = profile(&lambda);
        assert_eq!(p.domdim, Dim::Finite(2), "{theta}");
        let mut extended = entries.clone();
        extended.push(1);
        assert!(epsilon(&lambda)
            .unwrap()
            .theta
            .is_isomorphic_to(&KupischSeries::linear(extended).unwrap()));
    }
}
