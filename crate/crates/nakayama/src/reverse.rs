//! The reverse of the ε-construction.
//!
//! Given a target algebra Θ (cyclic or flattened linear) and a weight vector
//! `w` with `w_i >= defect(P_i)`, builds cyclic algebras Λ with
//! `ε(Λ) ≅ Θ` and `defect Λ = |w|`. The base-set of Λ consists of modules
//! `Δ(T_i)` of length `w_{i+1} + 1` placed around a cycle; the filtered
//! projective entries are forced, and the lengths of the non-filtered
//! projectives in the gap after the i-th filtered one are governed by a
//! weakly increasing walk of their socles, advancing by at most one Δ per
//! step. `ReverseChoice` records where the advances happen; the weight
//! hypothesis is exactly what makes a valid walk exist.

use serde::Serialize;
use thiserror::Error;

use crate::filtered::epsilon;
use crate::kupisch::KupischSeries;
use crate::structure::{defect_total, defect_vector};

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ReverseError {
    #[error("weight {got} at vertex {vertex} is below the defect bound {required}")]
    WeightTooSmall {
        vertex: usize,
        got: u32,
        required: u32,
    },
    #[error("weight vector has length {got}, expected rank {expected}")]
    WeightLengthMismatch { got: usize, expected: usize },
    #[error("invalid choice: {0}")]
    InvalidChoice(String),
    #[error("no defect invariant reverse exists (theta has a simple component)")]
    NoDefectInvariantReverse,
    #[error("internal construction invariant violated: {0}")]
    ConstructionInadmissible(String),
}

/// Free parameters of the weighted reverse. `steps[i]` lists, for the gap
/// following the i-th filtered projective, the transitions (0-based, the
/// last one entering the next filtered projective) at which the socle walk
/// advances; `wrap_split` is the number of wrap-gap slots placed at the tail
/// of the emitted word (the construction's `a_0`), a rotation choice.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReverseChoice {
    pub wrap_split: usize,
    pub steps: Vec<Vec<usize>>,
}

struct ReverseShape {
    lengths: Vec<u32>,
    weights: Vec<u32>,
    delta_lengths: Vec<u32>,
    advance_counts: Vec<usize>,
}

fn shape(theta: &KupischSeries, weights: &[u32]) -> Result<ReverseShape, ReverseError> {
    let n = theta.rank();
    if weights.len() != n {
        return Err(ReverseError::WeightLengthMismatch {
            got: weights.len(),
            expected: n,
        });
    }
    let lengths: Vec<u32> = theta.entries().to_vec();
    let defects = defect_vector(theta);
    for i in 0..n {
        if weights[i] < defects[i] {
            return Err(ReverseError::WeightTooSmall {
                vertex: i + 1,
                got: weights[i],
                required: defects[i],
            });
        }
        // A simple projective P_i forces the filtered entry w_{i+1} + 1, so
        // the following weight carries a virtual defect of one.
        if lengths[i] == 1 && weights[(i + 1) % n] == 0 {
            return Err(ReverseError::WeightTooSmall {
                vertex: ((i + 1) % n) + 1,
                got: 0,
                required: 1,
            });
        }
    }
    let delta_lengths: Vec<u32> = (0..n).map(|j| weights[(j + 1) % n] + 1).collect();
    // Socle advances across the gap after the i-th filtered projective.
    let advance_counts: Vec<usize> = (0..n)
        .map(|i| {
            let next = lengths[(i + 1) % n] as isize;
            let adv = next - lengths[i] as isize + 1;
            debug_assert!(adv >= 0, "admissible series never drop by more than one");
            adv.max(0) as usize
        })
        .collect();
    Ok(ReverseShape {
        lengths,
        weights: weights.to_vec(),
        delta_lengths,
        advance_counts,
    })
}

impl ReverseChoice {
    /// The canonical choice: all socle advances as early as possible. Always
    /// admissible.
    pub fn earliest(theta: &KupischSeries, weights: &[u32]) -> Result<Self, ReverseError> {
        let sh = shape(theta, weights)?;
        let steps = sh.advance_counts.iter().map(|&a| (0..a).collect()).collect();
        Ok(ReverseChoice {
            wrap_split: weights[0] as usize,
            steps,
        })
    }

    /// All advances as late as possible (the literal reading of the
    /// reverse-construction statement, with the final transition always
    /// advancing). May be inadmissible next to simple projectives of theta.
    pub fn latest(theta: &KupischSeries, weights: &[u32]) -> Result<Self, ReverseError> {
        let sh = shape(theta, weights)?;
        let steps = (0..theta.rank())
            .map(|i| {
                let transitions = sh.weights[(i + 1) % theta.rank()] as usize + 1;
                (transitions - sh.advance_counts[i]..transitions).collect()
            })
            .collect();
        Ok(ReverseChoice {
            wrap_split: weights[0] as usize,
            steps,
        })
    }
}

/// Builds the cyclic algebra determined by `(theta, weights, choice)`. The
/// result always satisfies `ε(result) ≅ theta` and `defect = |w|`; both are
/// asserted.
pub fn weighted_reverse(
    theta: &KupischSeries,
    weights: &[u32],
    choice: &ReverseChoice,
) -> Result<KupischSeries, ReverseError> {
    let sh = shape(theta, weights)?;
    let n = theta.rank();
    if choice.steps.len() != n {
        return Err(ReverseError::InvalidChoice(format!(
            "expected {n} step sets, got {}",
            choice.steps.len()
        )));
    }
    let wrap_slots = sh.weights[0] as usize;
    if choice.wrap_split > wrap_slots {
        return Err(ReverseError::InvalidChoice(format!(
            "wrap_split {} exceeds the wrap gap size {wrap_slots}",
            choice.wrap_split
        )));
    }

    let delta_sum = |i: usize, count: usize| -> u32 {
        (0..count).map(|j| sh.delta_lengths[(i + j) % n]).sum()
    };

    let mut word: Vec<u32> = Vec::with_capacity(n + sh.weights.iter().sum::<u32>() as usize);
    for i in 0..n {
        word.push(delta_sum(i, sh.lengths[i] as usize));
        let slots = sh.weights[(i + 1) % n] as usize;
        let steps = &choice.steps[i];
        if steps.len() != sh.advance_counts[i]
            || steps.windows(2).any(|w| w[0] >= w[1])
            || steps.iter().any(|&p| p > slots)
        {
            return Err(ReverseError::InvalidChoice(format!(
                "gap {} needs {} strictly increasing transitions in 0..={}",
                i + 1,
                sh.advance_counts[i],
                slots
            )));
        }
        for k in 1..=slots {
            let advances = steps.iter().filter(|&&p| p < k).count();
            let value = delta_sum(i, sh.lengths[i] as usize + advances) - k as u32;
            if value < 2 {
                return Err(ReverseError::InvalidChoice(format!(
                    "slot {k} of gap {} would get length {value}",
                    i + 1
                )));
            }
            word.push(value);
        }
    }
    // Move wrap-gap slots from the tail to the head per the split choice.
    word.rotate_right(wrap_slots - choice.wrap_split);

    let result = KupischSeries::cyclic(word)
        .map_err(|e| ReverseError::ConstructionInadmissible(e.to_string()))?;
    let eps = epsilon(&result)
        .map_err(|e| ReverseError::ConstructionInadmissible(e.to_string()))?;
    if !eps.theta.is_isomorphic_to(theta) {
        return Err(ReverseError::ConstructionInadmissible(format!(
            "epsilon({result}) = {} is not {theta}",
            eps.theta
        )));
    }
    let total: u32 = sh.weights.iter().sum();
    if defect_total(&result) != total {
        return Err(ReverseError::ConstructionInadmissible(format!(
            "defect of {result} differs from |w| = {total}"
        )));
    }
    Ok(result)
}

/// The unique cyclic algebra with `ε(Λ) ≅ Θ` and `defect Λ = defect Θ`.
/// Fails exactly when Θ has a simple (A_1) component.
pub fn defect_invariant_reverse(theta: &KupischSeries) -> Result<KupischSeries, ReverseError> {
    let weights = defect_vector(theta);
    let choice = ReverseChoice::earliest(theta, &weights).map_err(|e| match e {
        ReverseError::WeightTooSmall { .. } => ReverseError::NoDefectInvariantReverse,
        other => other,
    })?;
    weighted_reverse(theta, &weights, &choice)
}

fn for_each_subset(bound: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    // Visits the size-subsets of {0..bound} in lexicographic order; the
    // callback returns false to stop early.
    fn rec(start: usize, bound: usize, left: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if left == 0 {
            return f(cur);
        }
        for p in start..=bound.saturating_sub(left - 1) {
            cur.push(p);
            let keep_going = rec(p + 1, bound, left - 1, cur, f);
            cur.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    rec(0, bound, size, &mut Vec::new(), f)
}

/// All algebras produced by `(theta, weights)` over the full choice set,
/// deduplicated up to rotation, at most `limit` of them, in a deterministic
/// order.
pub fn enumerate_reverses(
    theta: &KupischSeries,
    weights: &[u32],
    limit: usize,
) -> Result<Vec<KupischSeries>, ReverseError> {
    let sh = shape(theta, weights)?;
    let mut out: Vec<KupischSeries> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();

    // Depth-first product of the per-gap subsets.
    #[allow(clippy::too_many_arguments)]
    fn rec(
        theta: &KupischSeries,
        sh: &ReverseShape,
        weights: &[u32],
        gap: usize,
        steps: &mut Vec<Vec<usize>>,
        seen: &mut std::collections::HashSet<Vec<u32>>,
        out: &mut Vec<KupischSeries>,
        limit: usize,
    ) -> Result<bool, ReverseError> {
        let n = theta.rank();
        if gap == n {
            let choice = ReverseChoice {
                wrap_split: weights[0] as usize,
                steps: steps.clone(),
            };
            match weighted_reverse(theta, weights, &choice) {
                Ok(lambda) => {
                    let canon = lambda.canonical_rotation();
                    if seen.insert(canon.entries().to_vec()) {
                        out.push(canon);
                        if out.len() >= limit {
                            return Ok(false);
                        }
                    }
                }
                // Choices that collide with a simple projective of theta
                // produce no algebra; skip them.
                Err(ReverseError::InvalidChoice(_)) => {}
                Err(e) => return Err(e),
            }
            return Ok(true);
        }
        let slots = sh.weights[(gap + 1) % n] as usize;
        let mut result = Ok(true);
        for_each_subset(slots, sh.advance_counts[gap], &mut |subset| {
            steps.push(subset.to_vec());
            let cont = rec(theta, sh, weights, gap + 1, steps, seen, out, limit);
            steps.pop();
            match cont {
                Ok(true) => true,
                Ok(false) => {
                    result = Ok(false);
                    false
                }
                Err(e) => {
                    result = Err(e);
                    false
                }
            }
        });
        result
    }

    let mut steps = Vec::new();
    rec(theta, &sh, weights, 0, &mut steps, &mut seen, &mut out, limit)?;
    Ok(out)
}

/// Union of `enumerate_reverses` over every weight vector dominating the
/// defect vector with total `target_defect`.
pub fn enumerate_reverses_with_total_defect(
    theta: &KupischSeries,
    target_defect: u32,
    limit: usize,
) -> Result<Vec<KupischSeries>, ReverseError> {
    let defects = defect_vector(theta);
    let base: u32 = defects.iter().sum();
    if target_defect < base {
        return Ok(Vec::new());
    }
    let n = theta.rank();
    let extra = target_defect - base;
    let mut out = Vec::new();
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();

    // Compositions of `extra` into n parts, lexicographic.
    let mut parts = vec![0u32; n];
    #[allow(clippy::too_many_arguments)]
    fn rec_comp(
        idx: usize,
        remaining: u32,
        parts: &mut Vec<u32>,
        theta: &KupischSeries,
        defects: &[u32],
        seen: &mut std::collections::HashSet<Vec<u32>>,
        out: &mut Vec<KupischSeries>,
        limit: usize,
    ) -> Result<(), ReverseError> {
        let n = parts.len();
        if out.len() >= limit {
            return Ok(());
        }
        if idx == n - 1 {
            parts[idx] = remaining;
            let weights: Vec<u32> = (0..n).map(|i| defects[i] + parts[i]).collect();
            let valid = (0..n)
                .all(|i| theta.entries()[i] != 1 || weights[(i + 1) % n] >= 1);
            if valid {
                for lambda in enumerate_reverses(theta, &weights, limit)? {
                    if seen.insert(lambda.entries().to_vec()) && out.len() < limit {
                        out.push(lambda);
                    }
                }
            }
            return Ok(());
        }
        for take in 0..=remaining {
            parts[idx] = take;
            rec_comp(idx + 1, remaining - take, parts, theta, defects, seen, out, limit)?;
            if out.len() >= limit {
                break;
            }
        }
        Ok(())
    }
    rec_comp(0, extra, &mut parts, theta, &defects, &mut seen, &mut out, limit)?;
    Ok(out)
}
