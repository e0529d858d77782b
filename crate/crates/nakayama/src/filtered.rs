//! The syzygy filtered algebra `ε(Λ)`, iterated towers, the cosyzygy
//! filtered algebra `η(Λ)`, and the duality between them.
//!
//! Kupisch entries of `ε(Λ)` count base-set layers in each filtered
//! projective; entries of `η(Λ)` dually count layers of top-anchored
//! `∇`-modules in the filtered injectives. Both recipes are cross-checked
//! against endomorphism-algebra dimensions computed from `hom_dim`; a
//! mismatch is a hard internal error.

use serde::Serialize;
use thiserror::Error;

use crate::kupisch::{Kind, KupischSeries, Vertex};
use crate::structure::{structure_sets, StructureError};
use crate::uniserial::Uniserial;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum FilteredError {
    #[error("epsilon/eta are defined for cyclic algebras only")]
    NotCyclic,
}

impl From<StructureError> for FilteredError {
    fn from(_: StructureError) -> Self {
        FilteredError::NotCyclic
    }
}

/// `ε(Λ)` together with the correspondence back to `Λ`.
///
/// Index `j` runs over the vertices of `theta`; `base_set[j]` is the
/// Λ-module carrying the simple `Θ`-module at vertex `j`, and
/// `filtered_map[j]` is the top vertex of the filtered projective covering
/// it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EpsilonResult {
    pub theta: KupischSeries,
    pub base_set: Vec<Uniserial>,
    pub filtered_map: Vec<Vertex>,
}

/// `η(Λ)` together with its `∇`-modules, indexed by η-vertex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EtaResult {
    pub eta: KupischSeries,
    pub nabla_set: Vec<Uniserial>,
}

/// Outcome of the `ε(Λ) ≅ η(Λ)^op` check, with all four series as witness.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DualityWitness {
    pub epsilon: KupischSeries,
    pub eta: KupischSeries,
    pub eta_op: KupischSeries,
    pub epsilon_of_op: KupischSeries,
    pub holds: bool,
    pub proof_route_holds: bool,
}

/// Number of base-set layers of the projective with top `top`, peeling from
/// the socle. Panics if the projective is not filtered by `base_set`.
fn peel_layers(alg: &KupischSeries, base_len_at_socle: &[Option<u32>], top: Vertex) -> u32 {
    let mut remaining = alg.entry(top);
    let mut socle = alg.socle_of(&alg.projective(top));
    let mut layers = 0;
    while remaining > 0 {
        let len = base_len_at_socle[socle.0]
            .expect("filtered projective peels onto base-set socles");
        assert!(len <= remaining, "base-set filtration overshoots");
        remaining -= len;
        layers += 1;
        socle = alg.step(socle, -(len as isize)).unwrap();
    }
    layers
}

/// The syzygy filtered algebra of a cyclic Nakayama algebra.
pub fn epsilon(alg: &KupischSeries) -> Result<EpsilonResult, FilteredError> {
    let ss = structure_sets(alg)?;
    let n = alg.rank();
    let k = ss.base_set.len();

    let mut base_len_at_socle: Vec<Option<u32>> = vec![None; n];
    for b in &ss.base_set {
        base_len_at_socle[alg.socle_of(b).0] = Some(b.len);
    }

    // ss.base_set is already in tau-chain order (ascending socles); the
    // filtered projective carrying base element B is P(top B).
    let mut base_set = ss.base_set.clone();
    let mut filtered_map: Vec<Vertex> = base_set.iter().map(|b| b.top).collect();
    let mut entries: Vec<u32> = filtered_map
        .iter()
        .map(|&z| peel_layers(alg, &base_len_at_socle, z))
        .collect();

    // Projective base elements end linear components of theta; rotate the
    // chain so the flattened word starts on a component boundary.
    let projective_at: Vec<bool> = base_set
        .iter()
        .map(|b| alg.is_projective_module(b))
        .collect();
    let kind = if projective_at.iter().any(|&p| p) {
        let start = (0..k)
            .find(|&j| projective_at[(j + k - 1) % k])
            .unwrap();
        base_set.rotate_left(start);
        filtered_map.rotate_left(start);
        entries.rotate_left(start);
        Kind::Linear
    } else {
        Kind::Cyclic
    };

    let theta = KupischSeries::new(kind, entries)
        .expect("epsilon of an admissible series is admissible");

    // Cross-check against End(⊕ filtered projectives): the Kupisch entry at
    // theta-vertex j is dim Hom(⊕ Q_z, Q_{z_j}).
    for (j, &z) in filtered_map.iter().enumerate() {
        let target = alg.projective(z);
        let end_dim: u32 = filtered_map
            .iter()
            .map(|&z2| alg.hom_dim(&alg.projective(z2), &target))
            .sum();
        assert_eq!(
            end_dim,
            theta.entries()[j],
            "epsilon entry disagrees with the endomorphism dimension at {z}"
        );
    }

    Ok(EpsilonResult {
        theta,
        base_set,
        filtered_map,
    })
}

/// Applies `epsilon` repeatedly, recording each stage, until the result is
/// linear, disconnected, selfinjective, or `max_steps` is reached.
pub fn epsilon_tower(
    alg: &KupischSeries,
    max_steps: usize,
) -> Result<Vec<KupischSeries>, FilteredError> {
    if alg.kind() != Kind::Cyclic {
        return Err(FilteredError::NotCyclic);
    }
    let mut stages = Vec::new();
    let mut cur = alg.clone();
    while stages.len() < max_steps {
        let theta = epsilon(&cur)?.theta;
        let stop = theta.kind() == Kind::Linear || !theta.is_connected() || theta.is_selfinjective();
        stages.push(theta.clone());
        if stop {
            break;
        }
        cur = theta;
    }
    Ok(stages)
}

/// Tops of the projective-injective modules, ascending.
fn projective_injective_tops(alg: &KupischSeries) -> Vec<Vertex> {
    alg.vertices()
        .filter(|&v| alg.is_injective_module(&alg.projective(v)))
        .collect()
}

/// The cosyzygy filtered algebra of a cyclic Nakayama algebra, by the dual
/// (`∇`-peeling) recipe; entries are checked against
/// `End(⊕ minimal projectives)^op`.
pub fn eta(alg: &KupischSeries) -> Result<EtaResult, FilteredError> {
    if alg.kind() != Kind::Cyclic {
        return Err(FilteredError::NotCyclic);
    }
    let n = alg.rank();
    let tops = projective_injective_tops(alg);
    let k = tops.len();

    // ∇ at top t runs down to just before the next projective-injective top.
    let mut nabla_set: Vec<Uniserial> = Vec::with_capacity(k);
    for idx in 0..k {
        let t = tops[idx];
        let next = tops[(idx + 1) % k];
        let len = ((next.0 + n - t.0 - 1) % n) + 1;
        nabla_set.push(Uniserial::new(t, len as u32));
    }
    let mut nabla_len_at_top: Vec<Option<u32>> = vec![None; n];
    for nab in &nabla_set {
        nabla_len_at_top[nab.top.0] = Some(nab.len);
    }

    // Chain order of eta-vertices: descending tops (the op flips tau).
    nabla_set.reverse();

    let peel_from_top = |mut top: Vertex, mut remaining: u32| -> u32 {
        let mut layers = 0;
        while remaining > 0 {
            let len = nabla_len_at_top[top.0].expect("filtered injective peels onto nabla tops");
            assert!(len <= remaining, "nabla filtration overshoots");
            remaining -= len;
            layers += 1;
            top = alg.step(top, len as isize).unwrap();
        }
        layers
    };

    let mut entries: Vec<u32> = nabla_set
        .iter()
        .map(|nab| {
            let envelope = alg.injective(alg.socle_of(nab));
            peel_from_top(envelope.top, envelope.len)
        })
        .collect();

    // Injective ∇-modules end linear components of eta.
    let injective_at: Vec<bool> = nabla_set
        .iter()
        .map(|nab| alg.is_injective_module(nab))
        .collect();
    let kind = if injective_at.iter().any(|&p| p) {
        let start = (0..k).find(|&j| injective_at[(j + k - 1) % k]).unwrap();
        nabla_set.rotate_left(start);
        entries.rotate_left(start);
        Kind::Linear
    } else {
        Kind::Cyclic
    };

    // End-oracle: the eta entry at ∇ is dim Hom(X, ⊕ X_i) over the minimal
    // projectives X_j = P(soc ∇_j).
    let min_projs: Vec<Uniserial> = nabla_set
        .iter()
        .map(|nab| alg.projective(alg.socle_of(nab)))
        .collect();
    for (j, x) in min_projs.iter().enumerate() {
        let end_dim: u32 = min_projs.iter().map(|x2| alg.hom_dim(x, x2)).sum();
        assert_eq!(
            end_dim, entries[j],
            "eta entry disagrees with the endomorphism dimension at nabla {j}"
        );
    }

    let eta = KupischSeries::new(kind, entries)
        .expect("eta of an admissible series is admissible");
    Ok(EtaResult { eta, nabla_set })
}

/// `η(Λ)` computed purely from endomorphism dimensions of the minimal
/// projectives, with no `∇`-peeling. Used as the independent oracle in the
/// duality verification.
pub fn eta_end_oracle_series(alg: &KupischSeries) -> Result<KupischSeries, FilteredError> {
    if alg.kind() != Kind::Cyclic {
        return Err(FilteredError::NotCyclic);
    }
    let tops = projective_injective_tops(alg);
    let k = tops.len();
    // Minimal projectives in the eta chain order: P(soc ∇) for descending
    // projective-injective tops; soc ∇ at top t_idx is t_{idx+1} - 1.
    let mut xs: Vec<Uniserial> = Vec::with_capacity(k);
    for idx in (0..k).rev() {
        let next = tops[(idx + 1) % k];
        let socle = alg.step(next, -1).unwrap();
        xs.push(alg.projective(socle));
    }
    let mut entries: Vec<u32> = xs
        .iter()
        .map(|x| xs.iter().map(|x2| alg.hom_dim(x, x2)).sum())
        .collect();
    let kind = if entries.contains(&1) {
        let start = (0..k).find(|&j| entries[(j + k - 1) % k] == 1).unwrap();
        entries.rotate_left(start);
        Kind::Linear
    } else {
        Kind::Cyclic
    };
    Ok(KupischSeries::new(kind, entries).expect("eta oracle produced an inadmissible series"))
}

/// Checks `ε(Λ) ≅ η(Λ)^op` together with the proof-route identity
/// `ε(Λ^op) ≅ η(Λ)` (the duality functor is contravariant, so passing to
/// the opposite algebra swaps the two constructions).
pub fn check_duality(alg: &KupischSeries) -> Result<DualityWitness, FilteredError> {
    let eps = epsilon(alg)?.theta;
    let eta_series = eta(alg)?.eta;
    let eta_op = eta_series.opposite();
    let epsilon_of_op = epsilon(&alg.opposite())?.theta;
    let holds = eps.is_isomorphic_to(&eta_op);
    let proof_route_holds = epsilon_of_op.is_isomorphic_to(&eta_series);
    Ok(DualityWitness {
        epsilon: eps,
        eta: eta_series,
        eta_op,
        epsilon_of_op,
        holds,
        proof_route_holds,
    })
}
