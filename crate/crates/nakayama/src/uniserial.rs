//! Uniserial modules, covers and envelopes, syzygies, Hom dimensions, and
//! (co)resolutions with exact periodicity detection.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::kupisch::{Kind, KupischSeries, Vertex};

/// An indecomposable module: the uniserial with top `S_top` and the given
/// length. Composition factors, top down, are `S_top, S_{top+1}, ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Uniserial {
    pub top: Vertex,
    pub len: u32,
}

impl Uniserial {
    pub fn new(top: Vertex, len: u32) -> Self {
        debug_assert!(len >= 1);
        Uniserial { top, len }
    }
}

impl fmt::Display for Uniserial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M(top={}, len={})", self.top, self.len)
    }
}

/// Homological dimension value; `Infinite` sorts above every integer and
/// absorbs addition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Dim {
    Finite(u32),
    Infinite,
}

impl Dim {
    pub fn plus(self, k: u32) -> Dim {
        match self {
            Dim::Finite(d) => Dim::Finite(d + k),
            Dim::Infinite => Dim::Infinite,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    pub fn is_even(self) -> bool {
        matches!(self, Dim::Finite(d) if d % 2 == 0)
    }
}

impl PartialOrd for Dim {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dim {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Dim::Finite(a), Dim::Finite(b)) => a.cmp(b),
            (Dim::Finite(_), Dim::Infinite) => std::cmp::Ordering::Less,
            (Dim::Infinite, Dim::Finite(_)) => std::cmp::Ordering::Greater,
            (Dim::Infinite, Dim::Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(d) => write!(f, "{d}"),
            Dim::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(d) => serializer.serialize_u32(*d),
            Dim::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ResolutionStatus {
    /// The last recorded term is the final one.
    Terminated,
    /// A (top, len) state repeated; the resolution is infinite.
    Periodic { period: usize },
}

/// Bookkeeping of a minimal projective or injective resolution: tops of the
/// (projective resp. injective) terms, in order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ResolutionSummary {
    pub terms: Vec<Vertex>,
    pub status: ResolutionStatus,
    pub dimension: Dim,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum ResolveError {
    #[error("resolution cap {cap} exceeded before termination or periodicity")]
    CapExceeded { cap: usize },
}

impl KupischSeries {
    pub fn simple(&self, v: Vertex) -> Uniserial {
        Uniserial::new(v, 1)
    }

    pub fn projective(&self, v: Vertex) -> Uniserial {
        Uniserial::new(v, self.entry(v))
    }

    pub fn socle_of(&self, m: &Uniserial) -> Vertex {
        self.step(m.top, m.len as isize - 1)
            .expect("uniserial stays inside its component")
    }

    /// Length of the injective envelope of `S_j`: the largest `t` with
    /// `c_{[j-t+1]} >= t`, walking backward only inside the component. Can
    /// exceed the rank (modules over a loop algebra wrap around).
    pub fn injective_length(&self, j: Vertex) -> u32 {
        let mut best = 1;
        let mut t = 2u32;
        loop {
            match self.step(j, -(t as isize - 1)) {
                Some(top) if self.entry(top) >= t => {
                    best = t;
                    t += 1;
                }
                _ => return best,
            }
        }
    }

    /// Injective envelope of `S_j` as a uniserial with socle `S_j`.
    pub fn injective(&self, j: Vertex) -> Uniserial {
        let len = self.injective_length(j);
        let top = self.step(j, -(len as isize - 1)).unwrap();
        Uniserial::new(top, len)
    }

    pub fn is_projective_module(&self, m: &Uniserial) -> bool {
        m.len == self.entry(m.top)
    }

    pub fn is_injective_module(&self, m: &Uniserial) -> bool {
        m.len == self.injective_length(self.socle_of(m))
    }

    pub fn projective_cover(&self, m: &Uniserial) -> Uniserial {
        self.projective(m.top)
    }

    pub fn injective_envelope(&self, m: &Uniserial) -> Uniserial {
        self.injective(self.socle_of(m))
    }

    /// Kernel of the projective cover; `None` when `m` is projective.
    pub fn syzygy(&self, m: &Uniserial) -> Option<Uniserial> {
        let c = self.entry(m.top);
        if m.len == c {
            return None;
        }
        let top = self.step(m.top, m.len as isize).unwrap();
        Some(Uniserial::new(top, c - m.len))
    }

    /// Cokernel of the injective envelope; `None` when `m` is injective.
    pub fn cosyzygy(&self, m: &Uniserial) -> Option<Uniserial> {
        let envelope = self.injective_envelope(m);
        if envelope.len == m.len {
            return None;
        }
        Some(Uniserial::new(envelope.top, envelope.len - m.len))
    }

    /// `dim Hom(m, n)`: the number of lengths `t` at which the length-`t`
    /// quotient of `m` coincides with the length-`t` submodule of `n`.
    pub fn hom_dim(&self, m: &Uniserial, n: &Uniserial) -> u32 {
        let mut count = 0;
        for t in 1..=m.len.min(n.len) {
            let sub_top = self.step(n.top, (n.len - t) as isize).unwrap();
            if sub_top == m.top {
                count += 1;
            }
        }
        count
    }

    fn default_cap(&self) -> usize {
        self.entries().iter().map(|&c| c as usize).sum::<usize>() + 1
    }

    /// Minimal projective resolution of `m`; the terms are the tops of its
    /// projective covers. Stops at the first projective syzygy or at the
    /// first repeated (top, len) state.
    pub fn resolve_projective(
        &self,
        m: &Uniserial,
        cap: Option<usize>,
    ) -> Result<ResolutionSummary, ResolveError> {
        self.resolve_with(m, cap, |alg, cur| {
            (alg.projective_cover(cur).top, alg.syzygy(cur))
        })
    }

    /// Minimal injective resolution of `m`; the terms are the socles of its
    /// injective envelopes.
    pub fn resolve_injective(
        &self,
        m: &Uniserial,
        cap: Option<usize>,
    ) -> Result<ResolutionSummary, ResolveError> {
        self.resolve_with(m, cap, |alg, cur| {
            (alg.socle_of(&alg.injective_envelope(cur)), alg.cosyzygy(cur))
        })
    }

    fn resolve_with(
        &self,
        m: &Uniserial,
        cap: Option<usize>,
        step: impl Fn(&KupischSeries, &Uniserial) -> (Vertex, Option<Uniserial>),
    ) -> Result<ResolutionSummary, ResolveError> {
        let cap = cap.unwrap_or_else(|| self.default_cap());
        let mut terms = Vec::new();
        let mut seen: HashMap<Uniserial, usize> = HashMap::new();
        let mut cur = *m;
        loop {
            if let Some(&first) = seen.get(&cur) {
                return Ok(ResolutionSummary {
                    terms,
                    status: ResolutionStatus::Periodic {
                        period: seen.len() - first,
                    },
                    dimension: Dim::Infinite,
                });
            }
            seen.insert(cur, seen.len());
            if terms.len() >= cap {
                return Err(ResolveError::CapExceeded { cap });
            }
            let (term, next) = step(self, &cur);
            terms.push(term);
            match next {
                Some(next) => cur = next,
                None => {
                    return Ok(ResolutionSummary {
                        dimension: Dim::Finite(terms.len() as u32 - 1),
                        terms,
                        status: ResolutionStatus::Terminated,
                    });
                }
            }
        }
    }

    pub fn pdim(&self, m: &Uniserial) -> Dim {
        self.resolve_projective(m, None)
            .expect("default cap cannot be exceeded")
            .dimension
    }

    pub fn injdim(&self, m: &Uniserial) -> Dim {
        self.resolve_injective(m, None)
            .expect("default cap cannot be exceeded")
            .dimension
    }

    /// Kupisch series of the opposite algebra: injective-envelope lengths
    /// read in reversed vertex order (per component), cyclic output rotated
    /// canonically.
    pub fn opposite(&self) -> KupischSeries {
        self.opposite_with_map().0
    }

    /// As `opposite`, also returning the vertex correspondence:
    /// `map[v]` is the opposite-algebra vertex carrying `D(S_v)`.
    pub fn opposite_with_map(&self) -> (KupischSeries, Vec<Vertex>) {
        let n = self.rank();
        match self.kind() {
            Kind::Cyclic => {
                let reversed: Vec<u32> = (0..n)
                    .map(|k| self.injective_length(Vertex(n - 1 - k)))
                    .collect();
                let rotated = KupischSeries::cyclic(reversed.clone())
                    .expect("opposite of an admissible series is admissible");
                let canon = rotated.canonical_rotation();
                // Recover the rotation offset used by the canonical form.
                let offset = (0..n)
                    .find(|&r| {
                        (0..n).all(|k| reversed[(r + k) % n] == canon.entries()[k])
                    })
                    .unwrap();
                let map = (0..n)
                    .map(|v| Vertex((n - 1 - v + n - offset) % n))
                    .collect();
                (canon, map)
            }
            Kind::Linear => {
                let mut entries = Vec::with_capacity(n);
                let mut map = vec![Vertex(0); n];
                let mut spans = self.component_spans();
                spans.reverse();
                for span in spans {
                    for v in span.clone().rev() {
                        map[v] = Vertex(entries.len());
                        entries.push(self.injective_length(Vertex(v)));
                    }
                }
                let series = KupischSeries::linear(entries)
                    .expect("opposite of an admissible series is admissible");
                (series, map)
            }
        }
    }
}
