//! Exhaustive enumeration of admissible Kupisch series.
//!
//! Cyclic series are emitted one representative per rotation class (the
//! canonical rotation), in lexicographic order; a canonical word starts with
//! a minimal entry, which prunes the search. Linear series are flattened and
//! may be disconnected.

use nakayama::{Kind, KupischSeries};

/// Calls `f` with every admissible series of exactly `rank` entries bounded
/// by `max_entry`; cyclic ones deduplicated up to rotation.
pub fn for_each_admissible(rank: usize, max_entry: u32, kind: Kind, f: &mut dyn FnMut(&[u32])) {
    match kind {
        Kind::Cyclic => {
            let mut word = Vec::with_capacity(rank);
            for first in 2..=max_entry {
                word.push(first);
                cyclic_rec(rank, max_entry, &mut word, f);
                word.pop();
            }
        }
        Kind::Linear => {
            let mut word = Vec::with_capacity(rank);
            linear_rec(rank, max_entry, &mut word, f);
        }
    }
}

fn cyclic_rec(rank: usize, max_entry: u32, word: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if word.len() == rank {
        // Wrap admissibility plus canonicity.
        if word[rank - 1] <= word[0] + 1 && is_minimal_rotation(word) {
            f(word);
        }
        return;
    }
    let first = word[0];
    let last = *word.last().unwrap();
    // Entries below the first one cannot appear in a canonical word.
    let lo = first.max(last.saturating_sub(1));
    for next in lo..=max_entry {
        word.push(next);
        cyclic_rec(rank, max_entry, word, f);
        word.pop();
    }
}

fn linear_rec(rank: usize, max_entry: u32, word: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if word.len() == rank {
        if *word.last().unwrap() == 1 {
            f(word);
        }
        return;
    }
    let lo = match word.last() {
        Some(&c) if c != 1 => c - 1,
        _ => 1,
    };
    for next in lo..=max_entry {
        word.push(next);
        linear_rec(rank, max_entry, word, f);
        word.pop();
    }
}

fn is_minimal_rotation(word: &[u32]) -> bool {
    let n = word.len();
    for r in 1..n {
        for k in 0..n {
            match word[(r + k) % n].cmp(&word[k]) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    true
}

/// All admissible series of the given rank with entries up to `max_entry`,
/// as validated values.
pub fn enumerate_admissible(rank: usize, max_entry: u32, kind: Kind) -> Vec<KupischSeries> {
    let mut out = Vec::new();
    for_each_admissible(rank, max_entry, kind, &mut |word| {
        out.push(KupischSeries::new(kind, word.to_vec()).expect("enumerator emits admissible series"));
    });
    out
}

/// Raw entry vectors, for sharded verification runs.
pub fn enumerate_words(rank: usize, max_entry: u32, kind: Kind) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_admissible(rank, max_entry, kind, &mut |word| out.push(word.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: filter all tuples, then quotient by rotation.
    fn brute_force_cyclic(rank: usize, max_entry: u32) -> Vec<Vec<u32>> {
        let mut all: Vec<Vec<u32>> = Vec::new();
        let mut word = vec![0u32; rank];
        fn rec(
            i: usize,
            rank: usize,
            max_entry: u32,
            word: &mut Vec<u32>,
            all: &mut Vec<Vec<u32>>,
        ) {
            if i == rank {
                if KupischSeries::cyclic(word.clone()).is_ok() {
                    all.push(word.clone());
                }
                return;
            }
            for v in 1..=max_entry {
                word[i] = v;
                rec(i + 1, rank, max_entry, word, all);
            }
        }
        rec(0, rank, max_entry, &mut word, &mut all);
        let mut classes: Vec<Vec<u32>> = all
            .into_iter()
            .map(|w| {
                KupischSeries::cyclic(w)
                    .unwrap()
                    .canonical_rotation()
                    .entries()
                    .to_vec()
            })
            .collect();
        classes.sort();
        classes.dedup();
        classes
    }

    #[test]
    fn rank_two_cyclic_classes() {
        let got = enumerate_words(2, 3, Kind::Cyclic);
        assert_eq!(got, vec![vec![2, 2], vec![2, 3], vec![3, 3]]);
    }

    #[test]
    fn rank_one_cyclic_is_loop_truncations() {
        let got = enumerate_words(1, 5, Kind::Cyclic);
        assert_eq!(got, vec![vec![2], vec![3], vec![4], vec![5]]);
    }

    #[test]
    fn matches_brute_force_oracle() {
        for rank in 1..=5 {
            for max_entry in 2..=5 {
                let mut got = enumerate_words(rank, max_entry, Kind::Cyclic);
                got.sort();
                assert_eq!(
                    got,
                    brute_force_cyclic(rank, max_entry),
                    "rank {rank} max {max_entry}"
                );
            }
        }
    }

    #[test]
    fn no_duplicates_and_all_canonical() {
        let got = enumerate_words(6, 4, Kind::Cyclic);
        let mut sorted = got.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), got.len());
        for w in &got {
            let s = KupischSeries::cyclic(w.clone()).unwrap();
            assert_eq!(s.canonical_rotation().entries(), w.as_slice());
        }
    }

    #[test]
    fn linear_enumeration_includes_disconnected() {
        let got = enumerate_words(3, 3, Kind::Linear);
        assert!(got.contains(&vec![1, 1, 1]));
        assert!(got.contains(&vec![2, 2, 1]));
        assert!(got.contains(&vec![3, 2, 1]));
        assert!(got.contains(&vec![1, 2, 1]));
        assert!(!got.contains(&vec![2, 1, 2]));
        for w in &got {
            assert!(KupischSeries::linear(w.clone()).is_ok());
        }
    }
}
