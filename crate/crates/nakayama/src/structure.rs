//! Structural data of a Nakayama algebra: defects, socle/top/base sets,
//! filtered projectives, minimal projectives and injectives.

use serde::Serialize;
use thiserror::Error;

use crate::kupisch::{Kind, KupischSeries, Vertex};
use crate::uniserial::Uniserial;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum StructureError {
    #[error("operation is defined for cyclic algebras only")]
    NotCyclic,
}

/// The base-set and its companions, for a cyclic algebra.
///
/// `base_set` is stored in tau-order of socles (ascending socle vertex), the
/// order in which the syzygy filtered algebra reads its simples.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StructureSets {
    pub socle_set: Vec<Vertex>,
    pub top_set: Vec<Vertex>,
    pub base_set: Vec<Uniserial>,
    pub filtered_projectives: Vec<Vertex>,
    pub defect_per_projective: Vec<u32>,
    pub defect_total: u32,
    pub num_relations: usize,
}

/// Number of proper injective quotients of `P_v`, counted directly.
pub fn defect_of_projective(alg: &KupischSeries, v: Vertex) -> u32 {
    let c = alg.entry(v);
    let mut count = 0;
    for t in 1..c {
        let quotient = Uniserial::new(v, t);
        if alg.is_injective_module(&quotient) {
            count += 1;
        }
    }
    if alg.is_cyclic() {
        // Kupisch route (Remark on minimal projectives): on a cyclic series
        // the defect of P_v is max(c_v - c_{v-1}, 0).
        let prev = alg.entry(alg.pred(v).unwrap());
        debug_assert_eq!(count, c.saturating_sub(prev), "defect routes disagree at {v}");
    }
    count
}

pub fn defect_vector(alg: &KupischSeries) -> Vec<u32> {
    alg.vertices().map(|v| defect_of_projective(alg, v)).collect()
}

pub fn defect_total(alg: &KupischSeries) -> u32 {
    defect_vector(alg).iter().sum()
}

/// Socle vertices of the indecomposable projectives (the Gustafson image),
/// deduplicated and sorted.
pub fn socle_set(alg: &KupischSeries) -> Vec<Vertex> {
    let mut socles: Vec<Vertex> = alg
        .vertices()
        .map(|v| alg.socle_of(&alg.projective(v)))
        .collect();
    socles.sort();
    socles.dedup();
    socles
}

/// Vertices whose projective has non-projective radical.
pub fn minimal_projectives(alg: &KupischSeries) -> Vec<Vertex> {
    alg.vertices()
        .filter(|&v| {
            let c = alg.entry(v);
            if c == 1 {
                return false; // rad P = 0 is projective
            }
            let next = alg.succ(v).expect("c >= 2 implies an outgoing arrow");
            c - 1 != alg.entry(next)
        })
        .collect()
}

/// Vertices `j` such that `I(S_j)/soc` is not injective.
pub fn minimal_injectives(alg: &KupischSeries) -> Vec<Vertex> {
    alg.vertices()
        .filter(|&j| {
            let len = alg.injective_length(j);
            if len == 1 {
                return false; // I/soc = 0 is injective
            }
            let quotient_socle = alg.pred(j).expect("len >= 2 implies an incoming arrow");
            alg.injective_length(quotient_socle) != len - 1
        })
        .collect()
}

/// Full structural data; cyclic algebras only (the base-set machinery is a
/// cyclic notion).
pub fn structure_sets(alg: &KupischSeries) -> Result<StructureSets, StructureError> {
    if alg.kind() != Kind::Cyclic {
        return Err(StructureError::NotCyclic);
    }
    let n = alg.rank();
    let socles = socle_set(alg);
    let top_set: Vec<Vertex> = {
        let mut tops: Vec<Vertex> = socles
            .iter()
            .map(|&s| alg.succ(s).unwrap())
            .collect();
        tops.sort();
        tops
    };

    // Base-set element at socle p: length = cyclic gap back to the previous
    // socle-set point, top = tau of that point.
    let k = socles.len();
    let mut base_set = Vec::with_capacity(k);
    for idx in 0..k {
        let p = socles[idx];
        let prev = socles[(idx + k - 1) % k];
        let len = ((p.0 + n - prev.0 - 1) % n) + 1;
        let top = alg.step(p, -(len as isize - 1)).unwrap();
        base_set.push(Uniserial::new(top, len as u32));
    }

    let defect_per_projective = defect_vector(alg);
    let defect_total = defect_per_projective.iter().sum();
    StructureSets::validate(alg, &base_set);
    Ok(StructureSets {
        filtered_projectives: top_set.clone(),
        num_relations: socles.len(),
        socle_set: socles,
        top_set,
        base_set,
        defect_per_projective,
        defect_total,
    })
}

impl StructureSets {
    fn validate(alg: &KupischSeries, base_set: &[Uniserial]) {
        // Base elements tile the vertex set (Sum of lengths = rank) and are
        // pairwise disjoint by construction; check the tiling.
        let total: u32 = base_set.iter().map(|b| b.len).sum();
        debug_assert_eq!(total as usize, alg.rank());
    }

    /// The base element with the given socle, if any.
    pub fn base_element_with_socle(&self, alg: &KupischSeries, socle: Vertex) -> Option<&Uniserial> {
        self.base_set.iter().find(|b| alg.socle_of(b) == socle)
    }
}
