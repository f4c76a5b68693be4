//! Exhaustive enumeration of finite posets, labeled and up to isomorphism.
//!
//! Labeled mode emits every valid order relation on `0..n` exactly once, in
//! lexicographic order of the relation's row-major bit-string. The iterator
//! backtracks over the off-diagonal cells (the diagonal is forced by
//! reflexivity), pruning assignments that already violate antisymmetry or
//! transitivity; the pruning is complete, so every leaf is a poset.
//!
//! Unlabeled mode keeps only the canonical representative of each
//! isomorphism class: the relation whose bit-string is lexicographically
//! least among all relabelings.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Hard ceiling: labeled enumeration explores up to `2^(n²-n)` candidates.
pub const MAX_ENUM_N: usize = 7;

/// Lazily enumerates posets on `n` elements. See the module docs for the
/// two modes and their ordering guarantees.
pub fn enumerate_posets(n: usize, labeled: bool) -> Result<PosetIter> {
    if n > MAX_ENUM_N {
        return Err(Error::GuardExceeded { what: "poset enumeration", limit: MAX_ENUM_N, got: n });
    }
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    // order[i*n+j] = position of cell (i,j) in the assignment sequence;
    // diagonal cells get usize::MAX and count as always assigned.
    let mut order = vec![usize::MAX; n * n];
    for (pos, &(i, j)) in cells.iter().enumerate() {
        order[i * n + j] = pos;
    }
    let mut rel = vec![false; n * n];
    for x in 0..n {
        rel[x * n + x] = true;
    }
    Ok(PosetIter {
        n,
        labeled,
        cells,
        order,
        rel,
        next_choice: vec![0; n * n],
        depth: 0,
        finished: false,
    })
}

pub struct PosetIter {
    n: usize,
    labeled: bool,
    cells: Vec<(usize, usize)>,
    order: Vec<usize>,
    rel: Vec<bool>,
    /// Next value to try at each depth: 0 = false, 1 = true, 2 = exhausted.
    next_choice: Vec<u8>,
    depth: usize,
    finished: bool,
}

impl PosetIter {
    fn assigned(&self, i: usize, j: usize) -> bool {
        i == j || self.order[i * self.n + j] < self.depth
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.rel[i * self.n + j]
    }

    /// Would assigning `cells[depth] := value` keep the partial relation
    /// extendable? Only consults already-assigned cells, so the check fires
    /// exactly when the last cell of a violating pair/triple is placed —
    /// making the pruning complete.
    fn consistent(&self, value: bool) -> bool {
        let (i, j) = self.cells[self.depth];
        if value {
            if self.assigned(j, i) && self.get(j, i) {
                return false; // antisymmetry
            }
            for k in 0..self.n {
                // i ≤ j ≤ k but i ≰ k
                if self.assigned(j, k) && self.get(j, k) && self.assigned(i, k) && !self.get(i, k)
                {
                    return false;
                }
                // k ≤ i ≤ j but k ≰ j
                if self.assigned(k, i) && self.get(k, i) && self.assigned(k, j) && !self.get(k, j)
                {
                    return false;
                }
            }
        } else {
            for k in 0..self.n {
                // i ≤ k ≤ j forces i ≤ j
                if self.assigned(i, k) && self.get(i, k) && self.assigned(k, j) && self.get(k, j)
                {
                    return false;
                }
            }
        }
        true
    }
}

impl Iterator for PosetIter {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        if self.finished {
            return None;
        }
        loop {
            if self.depth == self.cells.len() {
                // leaf: the pruning guarantees this is a poset
                let p = Poset::from_relation(self.n, &self.rel)
                    .expect("incremental pruning admits only posets");
                // step back to the deepest unexhausted level
                if self.depth == 0 {
                    self.finished = true;
                } else {
                    self.depth -= 1;
                }
                if !self.labeled && !p.is_canonical() {
                    if self.finished {
                        return None;
                    }
                    continue;
                }
                return Some(p);
            }
            let choice = self.next_choice[self.depth];
            if choice > 1 {
                // exhausted here; reset and backtrack
                self.next_choice[self.depth] = 0;
                if self.depth == 0 {
                    self.finished = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            self.next_choice[self.depth] += 1;
            let value = choice == 1;
            if self.consistent(value) {
                let (i, j) = self.cells[self.depth];
                self.rel[i * self.n + j] = value;
                self.depth += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::are_isomorphic;

    #[test]
    fn labeled_counts_match_known_sequence() {
        let expected = [1usize, 1, 3, 19, 219, 4231];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_posets(n, true).unwrap().count(), want, "n = {n}");
        }
    }

    #[test]
    fn unlabeled_counts_match_known_sequence() {
        let expected = [1usize, 1, 2, 5, 16, 63];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_posets(n, false).unwrap().count(), want, "n = {n}");
        }
    }

    #[test]
    fn guard_rejects_large_n() {
        assert!(matches!(
            enumerate_posets(8, true),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn labeled_mode_is_lexicographically_sorted_and_duplicate_free() {
        let strings: Vec<_> = enumerate_posets(4, true)
            .unwrap()
            .map(|p| p.bitstring())
            .collect();
        let mut sorted = strings.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(strings, sorted);
    }

    #[test]
    fn unlabeled_representatives_are_pairwise_non_isomorphic() {
        let reps: Vec<Poset> = enumerate_posets(4, false).unwrap().collect();
        for (i, p) in reps.iter().enumerate() {
            assert!(p.is_canonical());
            for q in &reps[i + 1..] {
                assert!(are_isomorphic(p, q).is_none());
            }
        }
    }

    #[test]
    fn unlabeled_is_a_transversal_of_labeled_classes() {
        // every labeled 3-poset is isomorphic to exactly one representative
        let reps: Vec<Poset> = enumerate_posets(3, false).unwrap().collect();
        for p in enumerate_posets(3, true).unwrap() {
            let hits = reps.iter().filter(|r| are_isomorphic(&p, r).is_some()).count();
            assert_eq!(hits, 1);
        }
    }
}
