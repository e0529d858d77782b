//! Closed-form Kupisch families: 2-Auslander-Gorenstein algebras over
//! selfinjective seeds, the higher Auslander algebras of global dimension
//! three and four, dominant Auslander-regular constructions, and the
//! endomorphism series of projective-injective generators.

use serde::Serialize;
use thiserror::Error;

use crate::filtered::epsilon;
use crate::kupisch::{Kind, KupischSeries};
use crate::reverse::{weighted_reverse, ReverseChoice, ReverseError};
use crate::structure::{defect_total, defect_vector};

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum FamilyError {
    #[error("seed must be a selfinjective cyclic algebra")]
    NotSelfinjective,
    #[error("invalid f: {0}")]
    InvalidF(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Reverse(#[from] ReverseError),
}

/// Parameters of the 2-Auslander-Gorenstein construction over a
/// selfinjective seed: `f` assigns 1 or 2 to each seed vertex; a vertex with
/// `f = 2` inserts one non-filtered projective after its filtered one.
/// `wrap_split` keeps that many of the final vertex's inserted slots at the
/// tail of the emitted word (a rotation choice).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TwoAgSpec {
    pub theta: KupischSeries,
    pub f: Vec<u8>,
    pub wrap_split: usize,
}

impl TwoAgSpec {
    pub fn new(theta: KupischSeries, f: Vec<u8>) -> Self {
        let wrap_split = usize::from(f.last().copied() == Some(2));
        TwoAgSpec {
            theta,
            f,
            wrap_split,
        }
    }
}

/// Builds the series determined by `(Θ selfinjective, f)`: filtered entries
/// sum `f` over the composition factors of each seed projective, and each
/// `f = 2` vertex contributes one extra entry `1 + (next filtered entry)`.
pub fn generate_2ag(spec: &TwoAgSpec) -> Result<KupischSeries, FamilyError> {
    let theta = &spec.theta;
    if theta.kind() != Kind::Cyclic || !theta.is_selfinjective() {
        return Err(FamilyError::NotSelfinjective);
    }
    let n = theta.rank();
    let m = theta.entries()[0] as usize;
    if spec.f.len() != n {
        return Err(FamilyError::InvalidF(format!(
            "f has length {}, expected {n}",
            spec.f.len()
        )));
    }
    if spec.f.iter().any(|&x| x != 1 && x != 2) {
        return Err(FamilyError::InvalidF("values must be 1 or 2".into()));
    }
    let d = spec.f.iter().filter(|&&x| x == 2).count();
    if d == 0 {
        return Ok(theta.clone());
    }

    let filtered_entry =
        |i: usize| -> u32 { (0..m).map(|j| spec.f[(i + j) % n] as u32).sum() };
    let mut word = Vec::with_capacity(n + d);
    for i in 0..n {
        word.push(filtered_entry(i));
        if spec.f[i] == 2 {
            word.push(1 + filtered_entry((i + 1) % n));
        }
    }
    let tail = usize::from(spec.f[n - 1] == 2);
    if spec.wrap_split > tail {
        return Err(FamilyError::InvalidF(format!(
            "wrap_split {} exceeds the number of tail slots {tail}",
            spec.wrap_split
        )));
    }
    word.rotate_right(tail - spec.wrap_split);

    let lambda = KupischSeries::cyclic(word)
        .expect("the 2-AG construction always produces an admissible series");
    let eps = epsilon(&lambda).expect("construction output is cyclic");
    assert!(
        eps.theta.is_isomorphic_to(theta),
        "2-AG construction failed the epsilon round trip for {lambda}"
    );
    assert_eq!(defect_total(&lambda) as usize, d);
    Ok(lambda)
}

/// The sweep-code semantics: a radical power `len`, a seed rank, and the set
/// of marked vertices (0-based) which get `f = 2`.
pub fn maple_2ag(len: u32, rank: usize, marks: &[usize]) -> Result<KupischSeries, FamilyError> {
    if len < 2 || rank == 0 {
        return Err(FamilyError::InvalidParams(
            "seed needs len >= 2 and rank >= 1".into(),
        ));
    }
    if let Some(&bad) = marks.iter().find(|&&v| v >= rank) {
        return Err(FamilyError::InvalidParams(format!(
            "mark {bad} out of range for rank {rank}"
        )));
    }
    let theta = KupischSeries::cyclic(vec![len; rank]).unwrap();
    let f = (0..rank)
        .map(|i| if marks.contains(&i) { 2 } else { 1 })
        .collect();
    generate_2ag(&TwoAgSpec::new(theta, f))
}

/// One 2-AG algebra per seed rank in `ranks`, all with radical power `len`
/// and the same marked vertices.
pub fn two_ag_sweep(
    len: u32,
    ranks: std::ops::RangeInclusive<usize>,
    marks: &[usize],
) -> Result<Vec<KupischSeries>, FamilyError> {
    ranks.map(|rank| maple_2ag(len, rank, marks)).collect()
}

/// Kupisch series of the direct sum of full path algebras `A_{n_1} + ...`.
pub fn path_algebra_sum(ns: &[u32]) -> Result<KupischSeries, FamilyError> {
    if ns.is_empty() || ns.contains(&0) {
        return Err(FamilyError::InvalidParams(
            "component ranks must be positive".into(),
        ));
    }
    let mut entries = Vec::new();
    for &n in ns {
        entries.extend((1..=n).rev());
    }
    Ok(KupischSeries::linear(entries).unwrap())
}

/// The higher Auslander algebras of global dimension three: the defect
/// invariant reverses of `A_{n_1} + ... + A_{n_k}` with every `n_j >= 2`,
/// emitted in closed form.
pub fn higher_auslander_gldim3(ns: &[u32]) -> Result<KupischSeries, FamilyError> {
    if ns.is_empty() || ns.iter().any(|&n| n < 2) {
        return Err(FamilyError::InvalidParams(
            "every component rank must be at least 2".into(),
        ));
    }
    let k = ns.len();
    let mut word = Vec::new();
    for j in 0..k {
        let n = ns[j];
        let next = ns[(j + 1) % k];
        word.extend(std::iter::repeat_n(n, n as usize));
        // Bridge of n - 1 entries descending to next + 1.
        for v in ((next + 1)..=(n + next - 1)).rev() {
            word.push(v);
        }
    }
    Ok(KupischSeries::cyclic(word).expect("the gldim-3 family is admissible"))
}

/// Parameters of the global dimension four family: reverses of a cyclic
/// Auslander algebra `(2,3)^k` or of a sum of linear Auslander algebras
/// `B_n = ((2,3)^n, 2, 2, 1)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Ha4Params {
    Cyclic { k: usize },
    Linear { ns: Vec<u32> },
}

/// Kupisch series of `B_n = ((23)^n 221)`.
pub fn b_algebra(n: u32) -> KupischSeries {
    let mut entries = Vec::new();
    for _ in 0..n {
        entries.extend([2, 3]);
    }
    entries.extend([2, 2, 1]);
    KupischSeries::linear(entries).unwrap()
}

pub fn b_algebra_sum(ns: &[u32]) -> Result<KupischSeries, FamilyError> {
    if ns.is_empty() {
        return Err(FamilyError::InvalidParams("need at least one component".into()));
    }
    let mut entries = Vec::new();
    for &n in ns {
        entries.extend_from_slice(b_algebra(n).entries());
    }
    Ok(KupischSeries::linear(entries).unwrap())
}

/// The higher Auslander algebras of global dimension four, in closed form.
pub fn higher_auslander_gldim4(params: &Ha4Params) -> Result<KupischSeries, FamilyError> {
    match params {
        Ha4Params::Cyclic { k } => {
            if *k == 0 {
                return Err(FamilyError::InvalidParams("need k >= 1".into()));
            }
            let mut word = Vec::new();
            for _ in 0..*k {
                word.extend([3, 4, 4]);
            }
            Ok(KupischSeries::cyclic(word).unwrap())
        }
        Ha4Params::Linear { ns } => {
            if ns.is_empty() {
                return Err(FamilyError::InvalidParams("need at least one component".into()));
            }
            let k = ns.len();
            let mut word = Vec::new();
            for j in 0..k {
                let n = ns[j];
                if n > 0 {
                    for _ in 0..n - 1 {
                        word.extend([3, 4, 4]);
                    }
                    word.extend([3, 3, 3]);
                }
                word.extend([2, 3, 2]);
                let next = ns[(j + 1) % k];
                word.push(if next == 0 { 2 } else { 3 });
            }
            Ok(KupischSeries::cyclic(word)
                .expect("the gldim-4 family is admissible"))
        }
    }
}

/// Dominant Auslander-regular algebras of global dimension three over
/// `A_{n_1} + ... + A_{n_k}` with slack `x_j >= n_{j+1} - 1`; the minimal
/// slacks recover `higher_auslander_gldim3`.
pub fn dominant_ar_gldim3(ns: &[u32], xs: &[u32]) -> Result<KupischSeries, FamilyError> {
    if ns.is_empty() || ns.iter().any(|&n| n < 2) {
        return Err(FamilyError::InvalidParams(
            "every component rank must be at least 2".into(),
        ));
    }
    if xs.len() != ns.len() {
        return Err(FamilyError::InvalidParams(
            "need one slack per component".into(),
        ));
    }
    let k = ns.len();
    for j in 0..k {
        if xs[j] + 1 < ns[(j + 1) % k] {
            return Err(FamilyError::InvalidParams(format!(
                "x_{} = {} is below n_{} - 1",
                j + 1,
                xs[j],
                (j + 1) % k + 1
            )));
        }
    }
    let mut word = Vec::new();
    for j in 0..k {
        let n = ns[j];
        let next = ns[(j + 1) % k];
        word.extend(std::iter::repeat_n(n, n as usize));
        for v in ((next + 1)..=(n + xs[j])).rev() {
            word.push(v);
        }
    }
    Ok(KupischSeries::cyclic(word).expect("the dominant-AR gldim-3 family is admissible"))
}

/// The mixed variant allowing `A_1` components (at least one component of
/// rank two or more): built as the weighted reverse of the path-algebra sum
/// with the virtual defect of simple components set to one.
pub fn dominant_ar_gldim3_mixed(ns: &[u32]) -> Result<KupischSeries, FamilyError> {
    if ns.is_empty() || ns.contains(&0) {
        return Err(FamilyError::InvalidParams(
            "component ranks must be positive".into(),
        ));
    }
    if ns.iter().all(|&n| n == 1) {
        return Err(FamilyError::InvalidParams(
            "at least one component must have rank >= 2".into(),
        ));
    }
    let theta = path_algebra_sum(ns)?;
    let mut weights = vec![0u32; theta.rank()];
    let mut pos = 0;
    for &n in ns {
        weights[pos] = (n - 1).max(1);
        pos += n as usize;
    }
    let choice = ReverseChoice::earliest(&theta, &weights)?;
    Ok(weighted_reverse(&theta, &weights, &choice)?)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum LowDomdimMode {
    /// Inflate the first weight by `extra >= 1`; dominant dimension one.
    DomdimOne { extra: u32 },
    /// Adjoin an `A_1` summand with weight one; dominant dimension two.
    DomdimTwo,
}

/// Dominant Auslander-regular algebras of dominant dimension one or two over
/// a connected linear seed.
pub fn dominant_ar_lowdim(
    theta: &KupischSeries,
    mode: LowDomdimMode,
) -> Result<KupischSeries, FamilyError> {
    if theta.kind() != Kind::Linear || !theta.is_connected() || theta.rank() < 2 {
        return Err(FamilyError::InvalidParams(
            "seed must be a connected linear algebra of rank >= 2".into(),
        ));
    }
    match mode {
        LowDomdimMode::DomdimOne { extra } => {
            if extra == 0 {
                return Err(FamilyError::InvalidParams("extra weight must be >= 1".into()));
            }
            let mut weights = defect_vector(theta);
            weights[0] += extra;
            // Injective slots packed at the end of the wrap gap; the slots in
            // front of them embed into the base-set element and force
            // dominant dimension one.
            let choice = ReverseChoice::latest(theta, &weights)?;
            Ok(weighted_reverse(theta, &weights, &choice)?)
        }
        LowDomdimMode::DomdimTwo => {
            let mut entries = theta.entries().to_vec();
            entries.push(1);
            let extended = KupischSeries::linear(entries).unwrap();
            let mut weights = defect_vector(theta);
            weights.push(1);
            let choice = ReverseChoice::earliest(&extended, &weights)?;
            Ok(weighted_reverse(&extended, &weights, &choice)?)
        }
    }
}

/// Kupisch series of `End(Q)^op` for `Q` the projective-injective generator,
/// computed from Hom dimensions. Vertices of the result follow the
/// descending order of the projective-injective tops.
pub fn end_of_projective_injectives_op(alg: &KupischSeries) -> KupischSeries {
    let qs: Vec<_> = alg
        .vertices()
        .rev()
        .filter(|&v| alg.is_injective_module(&alg.projective(v)))
        .map(|v| alg.projective(v))
        .collect();
    assert!(!qs.is_empty());
    let entries: Vec<u32> = qs
        .iter()
        .map(|q| qs.iter().map(|q2| alg.hom_dim(q, q2)).sum())
        .collect();
    KupischSeries::cyclic(entries)
        .expect("the endomorphism series of the projective-injective generator is admissible")
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum CtFamily {
    Ha3(Vec<u32>),
    Ha4(Ha4Params),
}

/// Closed-form endomorphism series of the projective-injective generator of
/// the corresponding higher Auslander family, cross-checked against the Hom
/// oracle on the generated algebra.
pub fn cluster_tilting_endo_series(family: &CtFamily) -> Result<KupischSeries, FamilyError> {
    let (lambda, formula) = match family {
        CtFamily::Ha3(ns) => {
            let lambda = higher_auslander_gldim3(ns)?;
            let mut word = Vec::new();
            for &n in ns {
                word.push(n);
                for v in (2..=n).rev() {
                    word.push(v);
                }
            }
            (lambda, KupischSeries::cyclic(word).unwrap())
        }
        CtFamily::Ha4(params) => {
            let lambda = higher_auslander_gldim4(params)?;
            let word = match params {
                Ha4Params::Cyclic { k } => {
                    let mut word = Vec::new();
                    for _ in 0..*k {
                        word.extend([3, 3]);
                    }
                    word
                }
                Ha4Params::Linear { ns } => {
                    let mut word = Vec::new();
                    for &n in ns {
                        word.push(2);
                        for _ in 0..n {
                            word.extend([3, 3]);
                        }
                        word.extend([2, 2]);
                    }
                    word
                }
            };
            (lambda, KupischSeries::cyclic(word).unwrap())
        }
    };
    let oracle = end_of_projective_injectives_op(&lambda);
    assert!(
        formula.is_isomorphic_to(&oracle),
        "endomorphism series mismatch: formula {formula} vs oracle {oracle}"
    );
    Ok(formula)
}
