//! Kupisch series: the combinatorial presentation of a Nakayama algebra.
//!
//! A cyclic series is a sequence `(c_1, ..., c_n)` with every `c_i >= 2` and
//! drops of at most one (cyclically). A linear series ends in 1; a
//! disconnected algebra is stored flattened, as a concatenation of
//! 1-terminated segments. Vertices are labelled so that `tau S_i = S_{i+1}`
//! and `P_i` has composition factors `S_i, S_{i+1}, ..., S_{[i+c_i-1]}` from
//! the top down.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Quiver vertex, 0-based internally. `Display` and serialization use the
/// 1-based label of `S_i` and `P_i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex(pub usize);

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.one_based() as u64)
    }
}

impl Vertex {
    pub fn one_based(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 + 1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cyclic,
    Linear,
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum KupischError {
    #[error("empty series")]
    EmptySeries,
    #[error("not admissible at position {index}: cyclic entries must be at least 2, found {value}")]
    CyclicEntryTooSmall { index: usize, value: u32 },
    #[error("not admissible at position {index}: drop from {from} to {to} exceeds one")]
    DropTooLarge { index: usize, from: u32, to: u32 },
    #[error("not admissible: linear series must end with 1, found {value}")]
    LinearEndNotOne { value: u32 },
    #[error("not admissible at position {index}: entries must be positive")]
    ZeroEntry { index: usize },
    #[error("malformed series text: {0}")]
    Parse(String),
}

/// A validated Kupisch series. Immutable after construction; all operations
/// on it are pure.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KupischSeries {
    kind: Kind,
    entries: Vec<u32>,
}

impl KupischSeries {
    /// Validates `entries` as a series of the given kind. Positions in
    /// errors are 1-based.
    pub fn new(kind: Kind, entries: Vec<u32>) -> Result<Self, KupischError> {
        if entries.is_empty() {
            return Err(KupischError::EmptySeries);
        }
        let n = entries.len();
        match kind {
            Kind::Cyclic => {
                for i in 0..n {
                    if entries[i] < 2 {
                        return Err(KupischError::CyclicEntryTooSmall {
                            index: i + 1,
                            value: entries[i],
                        });
                    }
                    let next = entries[(i + 1) % n];
                    if entries[i] > next + 1 {
                        return Err(KupischError::DropTooLarge {
                            index: i + 1,
                            from: entries[i],
                            to: next,
                        });
                    }
                }
            }
            Kind::Linear => {
                for (i, &c) in entries.iter().enumerate() {
                    if c == 0 {
                        return Err(KupischError::ZeroEntry { index: i + 1 });
                    }
                }
                if entries[n - 1] != 1 {
                    return Err(KupischError::LinearEndNotOne {
                        value: entries[n - 1],
                    });
                }
                for i in 0..n - 1 {
                    // Entry 1 terminates a segment; no constraint across it.
                    if entries[i] != 1 && entries[i] > entries[i + 1] + 1 {
                        return Err(KupischError::DropTooLarge {
                            index: i + 1,
                            from: entries[i],
                            to: entries[i + 1],
                        });
                    }
                }
            }
        }
        Ok(KupischSeries { kind, entries })
    }

    pub fn cyclic(entries: Vec<u32>) -> Result<Self, KupischError> {
        Self::new(Kind::Cyclic, entries)
    }

    pub fn linear(entries: Vec<u32>) -> Result<Self, KupischError> {
        Self::new(Kind::Linear, entries)
    }

    /// Builds a (flattened) algebra from connected linear components.
    pub fn from_components(components: &[Vec<u32>]) -> Result<Self, KupischError> {
        let mut flat = Vec::new();
        for comp in components {
            flat.extend_from_slice(comp);
        }
        Self::new(Kind::Linear, flat)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_cyclic(&self) -> bool {
        self.kind == Kind::Cyclic
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry(&self, v: Vertex) -> u32 {
        self.entries[v.0]
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = Vertex> {
        (0..self.rank()).map(Vertex)
    }

    /// Spans of the connected components in the flattened series.
    pub fn component_spans(&self) -> Vec<std::ops::Range<usize>> {
        match self.kind {
            Kind::Cyclic => std::iter::once(0..self.rank()).collect(),
            Kind::Linear => {
                let mut spans = Vec::new();
                let mut start = 0;
                for (i, &c) in self.entries.iter().enumerate() {
                    if c == 1 {
                        spans.push(start..i + 1);
                        start = i + 1;
                    }
                }
                spans
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        self.component_spans().len() == 1
    }

    /// Connected components, order preserved.
    pub fn components(&self) -> Vec<KupischSeries> {
        self.component_spans()
            .into_iter()
            .map(|span| KupischSeries {
                kind: self.kind,
                entries: self.entries[span].to_vec(),
            })
            .collect()
    }

    /// Walks `delta` arrows forward (negative: backward) from `v`, staying
    /// inside the component of `v`. `None` when the walk falls off a linear
    /// component.
    pub fn step(&self, v: Vertex, delta: isize) -> Option<Vertex> {
        let n = self.rank() as isize;
        match self.kind {
            Kind::Cyclic => Some(Vertex((v.0 as isize + delta).rem_euclid(n) as usize)),
            Kind::Linear => {
                let mut cur = v.0 as isize;
                let step = if delta >= 0 { 1 } else { -1 };
                for _ in 0..delta.abs() {
                    if step > 0 {
                        // Arrow out of `cur` exists iff P_cur is not simple.
                        if self.entries[cur as usize] == 1 {
                            return None;
                        }
                        cur += 1;
                    } else {
                        if cur == 0 || self.entries[cur as usize - 1] == 1 {
                            return None;
                        }
                        cur -= 1;
                    }
                }
                Some(Vertex(cur as usize))
            }
        }
    }

    pub fn succ(&self, v: Vertex) -> Option<Vertex> {
        self.step(v, 1)
    }

    pub fn pred(&self, v: Vertex) -> Option<Vertex> {
        self.step(v, -1)
    }

    /// Every indecomposable projective is injective. Equivalent to defect 0.
    pub fn is_selfinjective(&self) -> bool {
        match self.kind {
            Kind::Cyclic => self.entries.iter().all(|&c| c == self.entries[0]),
            // A linear component is selfinjective only when it is A_1.
            Kind::Linear => self.entries.iter().all(|&c| c == 1),
        }
    }

    /// Number of relations of an irredundant presentation. On a cyclic
    /// series this equals the number of positions with `c_i <= c_{i+1}`.
    pub fn num_relations(&self) -> usize {
        let n = self.rank();
        match self.kind {
            Kind::Cyclic => (0..n)
                .filter(|&i| self.entries[i] <= self.entries[(i + 1) % n])
                .count(),
            Kind::Linear => (0..n.saturating_sub(1))
                .filter(|&i| self.entries[i] != 1 && self.entries[i] <= self.entries[i + 1])
                .count(),
        }
    }

    /// Lexicographically minimal rotation. Identity on linear series.
    pub fn canonical_rotation(&self) -> KupischSeries {
        match self.kind {
            Kind::Linear => self.clone(),
            Kind::Cyclic => {
                let n = self.rank();
                let mut best = 0;
                for r in 1..n {
                    for k in 0..n {
                        let a = self.entries[(r + k) % n];
                        let b = self.entries[(best + k) % n];
                        if a != b {
                            if a < b {
                                best = r;
                            }
                            break;
                        }
                    }
                }
                let entries = (0..n).map(|k| self.entries[(best + k) % n]).collect();
                KupischSeries {
                    kind: Kind::Cyclic,
                    entries,
                }
            }
        }
    }

    /// Isomorphism-class normal form: minimal rotation for cyclic series,
    /// components sorted lexicographically for linear ones.
    pub fn canonical_form(&self) -> KupischSeries {
        match self.kind {
            Kind::Cyclic => self.canonical_rotation(),
            Kind::Linear => {
                let mut comps: Vec<Vec<u32>> = self
                    .component_spans()
                    .into_iter()
                    .map(|s| self.entries[s].to_vec())
                    .collect();
                comps.sort();
                let entries = comps.into_iter().flatten().collect();
                KupischSeries {
                    kind: Kind::Linear,
                    entries,
                }
            }
        }
    }

    /// Morita isomorphism of the underlying algebras. Rotations of a cyclic
    /// series are identified; linear components are compared as a multiset.
    /// Reflections are not identified (they give the opposite algebra).
    pub fn is_isomorphic_to(&self, other: &KupischSeries) -> bool {
        self.kind == other.kind && self.canonical_form().entries == other.canonical_form().entries
    }

    /// Total number of descents `c_i > c_{i+1}`; on a cyclic series this is
    /// the defect of the algebra.
    pub fn descent_count(&self) -> usize {
        let n = self.rank();
        match self.kind {
            Kind::Cyclic => (0..n)
                .filter(|&i| self.entries[i] > self.entries[(i + 1) % n])
                .count(),
            Kind::Linear => (0..n - 1)
                .filter(|&i| self.entries[i] != 1 && self.entries[i] > self.entries[i + 1])
                .count(),
        }
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            Kind::Cyclic => "cyclic",
            Kind::Linear => "linear",
        };
        write!(f, "{prefix}:")?;
        for (i, c) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for KupischSeries {
    type Err = KupischError;

    /// Parses the text format `cyclic:2,4,3` / `linear:2,2,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, rest) = match s.split_once(':') {
            Some(("cyclic", rest)) => (Kind::Cyclic, rest),
            Some(("linear", rest)) => (Kind::Linear, rest),
            _ => {
                return Err(KupischError::Parse(format!(
                    "expected `cyclic:<entries>` or `linear:<entries>`, got `{s}`"
                )))
            }
        };
        let entries = rest
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| KupischError::Parse(format!("bad entry `{tok}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        KupischSeries::new(kind, entries)
    }
}

impl Serialize for KupischSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            kind: Kind,
            entries: &'a [u32],
        }
        Repr {
            kind: self.kind,
            entries: &self.entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for KupischSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            #[serde(default)]
            kind: Option<Kind>,
            #[serde(default)]
            entries: Option<Vec<u32>>,
            #[serde(default)]
            components: Option<Vec<Vec<u32>>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        match (repr.kind, repr.entries, repr.components) {
            (Some(kind), Some(entries), None) => {
                KupischSeries::new(kind, entries).map_err(D::Error::custom)
            }
            (None, None, Some(comps)) => {
                KupischSeries::from_components(&comps).map_err(D::Error::custom)
            }
            _ => Err(D::Error::custom(
                "expected {kind, entries} or {components}",
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(entries: &[u32]) -> KupischSeries {
        KupischSeries::cyclic(entries.to_vec()).unwrap()
    }

    #[test]
    fn admissibility_accepts_the_reverse_example() {
        assert!(KupischSeries::cyclic(vec![2, 4, 3, 3, 3, 4, 3, 2, 2]).is_ok());
        assert!(KupischSeries::cyclic(vec![2, 2]).is_ok());
    }

    #[test]
    fn admissibility_rejects_small_entries_and_big_drops() {
        assert_eq!(
            KupischSeries::cyclic(vec![1, 2]),
            Err(KupischError::CyclicEntryTooSmall { index: 1, value: 1 })
        );
        // The drop 3 -> 1 is hit before the offending entry itself.
        assert_eq!(
            KupischSeries::cyclic(vec![3, 1, 3]),
            Err(KupischError::DropTooLarge {
                index: 1,
                from: 3,
                to: 1
            })
        );
        assert_eq!(
            KupischSeries::cyclic(vec![4, 2, 4]),
            Err(KupischError::DropTooLarge {
                index: 1,
                from: 4,
                to: 2
            })
        );
        assert_eq!(
            KupischSeries::cyclic(vec![]),
            Err(KupischError::EmptySeries)
        );
    }

    #[test]
    fn linear_series_requirements() {
        assert!(KupischSeries::linear(vec![2, 2, 1, 3, 2, 1]).is_ok());
        assert!(KupischSeries::linear(vec![1]).is_ok());
        assert_eq!(
            KupischSeries::linear(vec![2, 2]),
            Err(KupischError::LinearEndNotOne { value: 2 })
        );
        // Drop across a segment boundary is fine; inside a segment it is not.
        assert!(KupischSeries::linear(vec![4, 3, 2, 1, 2, 1]).is_ok());
        assert_eq!(
            KupischSeries::linear(vec![4, 2, 1]),
            Err(KupischError::DropTooLarge {
                index: 1,
                from: 4,
                to: 2
            })
        );
    }

    #[test]
    fn components_split_at_ones() {
        let theta = KupischSeries::linear(vec![2, 2, 1, 3, 2, 1]).unwrap();
        let comps = theta.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].entries(), &[2, 2, 1]);
        assert_eq!(comps[1].entries(), &[3, 2, 1]);

        assert_eq!(cyc(&[2, 2]).components().len(), 1);
        let a1 = KupischSeries::linear(vec![1]).unwrap();
        assert_eq!(a1.components(), vec![a1.clone()]);
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(cyc(&[3, 2, 2]).canonical_rotation().entries(), &[2, 2, 3]);
        assert_eq!(cyc(&[2, 2]).canonical_rotation().entries(), &[2, 2]);
        assert_eq!(
            cyc(&[4, 5, 4, 5]).canonical_rotation().entries(),
            &[4, 5, 4, 5]
        );
    }

    #[test]
    fn canonical_rotation_is_idempotent_and_rotation_invariant() {
        let s = cyc(&[2, 4, 3, 3, 3, 4, 3, 2, 2]);
        let canon = s.canonical_rotation();
        assert_eq!(canon.canonical_rotation(), canon);
        let n = s.rank();
        for r in 0..n {
            let rot: Vec<u32> = (0..n).map(|k| s.entries()[(r + k) % n]).collect();
            assert_eq!(cyc(&rot).canonical_rotation(), canon);
        }
    }

    #[test]
    fn isomorphism_uses_component_multisets() {
        let a = KupischSeries::linear(vec![2, 2, 1, 3, 2, 1]).unwrap();
        let b = KupischSeries::linear(vec![3, 2, 1, 2, 2, 1]).unwrap();
        assert!(a.is_isomorphic_to(&b));
        assert!(!a.is_isomorphic_to(&KupischSeries::linear(vec![3, 2, 1, 1, 1, 1]).unwrap()));
        assert!(cyc(&[3, 2, 2]).is_isomorphic_to(&cyc(&[2, 2, 3])));
    }

    #[test]
    fn linear_steps_stay_in_component() {
        let theta = KupischSeries::linear(vec![2, 2, 1, 3, 2, 1]).unwrap();
        assert_eq!(theta.succ(Vertex(1)), Some(Vertex(2)));
        assert_eq!(theta.succ(Vertex(2)), None);
        assert_eq!(theta.pred(Vertex(3)), None);
        assert_eq!(theta.step(Vertex(3), 2), Some(Vertex(5)));
        assert_eq!(theta.step(Vertex(5), -2), Some(Vertex(3)));
        assert_eq!(theta.step(Vertex(5), -3), None);
    }

    #[test]
    fn text_round_trip() {
        let s: KupischSeries = "cyclic:2,4,3,3,3,4,3,2,2".parse().unwrap();
        assert_eq!(s.to_string(), "cyclic:2,4,3,3,3,4,3,2,2");
        let l: KupischSeries = "linear:2,2,1".parse().unwrap();
        assert_eq!(l.to_string(), "linear:2,2,1");
        assert!("cyclic:".parse::<KupischSeries>().is_err());
        assert!("ring:2,2".parse::<KupischSeries>().is_err());
    }

    #[test]
    fn json_forms() {
        let s: KupischSeries = serde_json::from_str(r#"{"kind":"cyclic","entries":[3,2,2]}"#).unwrap();
        assert_eq!(s, cyc(&[3, 2, 2]));
        let c: KupischSeries = serde_json::from_str(r#"{"components":[[2,2,1],[3,2,1]]}"#).unwrap();
        assert_eq!(c, KupischSeries::linear(vec![2, 2, 1, 3, 2, 1]).unwrap());
        assert!(serde_json::from_str::<KupischSeries>(r#"{"kind":"cyclic","entries":[1,2]}"#).is_err());
        assert_eq!(
            serde_json::to_string(&cyc(&[2, 3])).unwrap(),
            r#"{"kind":"cyclic","entries":[2,3]}"#
        );
    }
}
