//! Finite partial orders over elements `0..n`, plus order homomorphisms.
//!
//! The order is stored as a dense `n×n` boolean matrix `leq`, validated for
//! reflexivity, antisymmetry and transitivity on construction. All derived
//! notions (covers, down-sets, minimals, trees, meet-semilattices) are
//! computed from `leq` directly; nothing here assumes connectivity.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite poset on elements `0..n`.
///
/// Immutable after construction; cheap to clone (the matrix is `n²` bools).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Validates an `n×n` relation (row-major, `rel[x*n+y]` meaning `x ≤ y`)
    /// and wraps it. Reports the first violated poset axiom with a witness,
    /// scanning in lexicographic order.
    pub fn from_relation(n: usize, rel: &[bool]) -> Result<Poset> {
        if rel.len() != n * n {
            return Err(Error::DimensionMismatch { left: rel.len(), right: n * n });
        }
        for x in 0..n {
            if !rel[x * n + x] {
                return Err(Error::NotReflexive { x });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && rel[a * n + b] && rel[b * n + a] {
                    return Err(Error::NotAntisymmetric { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !rel[a * n + b] {
                    continue;
                }
                for c in 0..n {
                    if rel[b * n + c] && !rel[a * n + c] {
                        return Err(Error::NotTransitive { a, b, c });
                    }
                }
            }
        }
        Ok(Poset { n, leq: rel.to_vec() })
    }

    /// Builds the reflexive-transitive closure of a set of `a < b` pairs and
    /// validates the result. The pairs need not be covers.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut rel = vec![false; n * n];
        for x in 0..n {
            rel[x * n + x] = true;
        }
        for &(a, b) in pairs {
            if a >= n {
                return Err(Error::IndexOutOfRange { index: a, n });
            }
            if b >= n {
                return Err(Error::IndexOutOfRange { index: b, n });
            }
            rel[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if rel[i * n + k] {
                    for j in 0..n {
                        if rel[k * n + j] {
                            rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Poset::from_relation(n, &rel)
    }

    /// The antichain on `n` elements.
    pub fn antichain(n: usize) -> Poset {
        Poset::from_pairs(n, &[]).expect("identity relation is a poset")
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_pairs(n, &pairs).expect("chain is a poset")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x ≤ y`. Panics if an index is out of range.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        assert!(x < self.n && y < self.n);
        self.leq[x * self.n + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Row-major relation matrix as a `'0'`/`'1'` string; doubles as the
    /// canonical-form key for isomorphism classes.
    pub fn bitstring(&self) -> alloc::string::String {
        self.leq.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    /// The principal down-set `x↓ = { a | a ≤ x }`.
    pub fn down_set(&self, x: usize) -> Result<Vec<usize>> {
        if x >= self.n {
            return Err(Error::IndexOutOfRange { index: x, n: self.n });
        }
        Ok((0..self.n).filter(|&a| self.leq(a, x)).collect())
    }

    /// The principal up-set `x↑ = { y | x ≤ y }`.
    pub fn up_set(&self, x: usize) -> Result<Vec<usize>> {
        if x >= self.n {
            return Err(Error::IndexOutOfRange { index: x, n: self.n });
        }
        Ok((0..self.n).filter(|&y| self.leq(x, y)).collect())
    }

    pub fn minimals(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|a| !self.lt(a, x)))
            .collect()
    }

    pub fn maximals(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|a| !self.lt(x, a)))
            .collect()
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        (0..self.n).all(|a| !self.lt(a, x))
    }

    /// Cover pairs `(a, b)` with `a < b` and nothing strictly between,
    /// sorted ascending.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) && !(0..self.n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Top element, if the poset has one.
    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&t| (0..self.n).all(|x| self.leq(x, t)))
    }

    /// Minimum element, if the poset has one.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.n).find(|&m| (0..self.n).all(|x| self.leq(m, x)))
    }

    /// Greatest lower bound of `{x, y}`, when it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let lb: Vec<usize> =
            (0..self.n).filter(|&c| self.leq(c, x) && self.leq(c, y)).collect();
        lb.iter().copied().find(|&g| lb.iter().all(|&d| self.leq(d, g)))
    }

    pub fn is_meet_semilattice(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.meet(x, y).is_some()))
    }

    /// Every principal down-set, as an induced poset, is a meet-semilattice.
    pub fn is_relative_meet_semilattice(&self) -> bool {
        (0..self.n).all(|p| {
            let seg = self.down_set(p).expect("p in range");
            self.induced(&seg).is_meet_semilattice()
        })
    }

    /// A tree: has a top element and every up-set is a chain.
    pub fn is_tree(&self) -> bool {
        self.top().is_some() && self.is_forest()
    }

    /// A forest: every up-set is linearly ordered.
    pub fn is_forest(&self) -> bool {
        (0..self.n).all(|x| {
            let up = self.up_set(x).expect("x in range");
            up.iter().all(|&a| up.iter().all(|&b| self.comparable(a, b)))
        })
    }

    /// A foliated tree: a tree in which every element has a minimal element
    /// below it. Finite nonempty posets always satisfy the second condition;
    /// it is asserted, not assumed.
    pub fn is_foliated_tree(&self) -> bool {
        self.is_tree()
            && (0..self.n).all(|x| {
                (0..self.n).any(|m| self.leq(m, x) && self.is_minimal(m))
            })
    }

    /// The induced subposet on `elems` (kept in the given order; the element
    /// at position `i` becomes index `i`).
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let k = elems.len();
        let mut rel = vec![false; k * k];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                rel[i * k + j] = self.leq(a, b);
            }
        }
        Poset::from_relation(k, &rel).expect("induced subposet is a poset")
    }

    /// Relabels via `perm`: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let n = self.n;
        let mut rel = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                rel[perm[x] * n + perm[y]] = self.leq(x, y);
            }
        }
        Poset::from_relation(n, &rel).expect("relabeling preserves the axioms")
    }

    /// Adjoins a new top element with index `n`.
    pub fn adjoin_top(&self) -> Poset {
        let m = self.n + 1;
        let mut rel = vec![false; m * m];
        for x in 0..self.n {
            for y in 0..self.n {
                rel[x * m + y] = self.leq(x, y);
            }
            rel[x * m + self.n] = true;
        }
        rel[self.n * m + self.n] = true;
        Poset::from_relation(m, &rel).expect("adjoining a top preserves the axioms")
    }

    /// The lexicographically least relabeling of this poset (the canonical
    /// representative of its isomorphism class). Brute force over
    /// permutations; intended for small `n` only.
    pub fn canonical_form(&self) -> Poset {
        let mut best = self.clone();
        for_each_permutation(self.n, &mut |perm| {
            let cand = self.relabel(perm);
            if cand.leq < best.leq {
                best = cand;
            }
            true
        });
        best
    }

    /// Whether no relabeling is lexicographically smaller.
    pub fn is_canonical(&self) -> bool {
        let mut canonical = true;
        let mut inv = vec![0usize; self.n];
        for_each_permutation(self.n, &mut |perm| {
            for (x, &px) in perm.iter().enumerate() {
                inv[px] = x;
            }
            // The relabeling Q = relabel(perm) has Q(x,y) = leq(inv x, inv y);
            // compare bitstrings lazily, aborting at the first difference.
            for x in 0..self.n {
                for y in 0..self.n {
                    let relabeled = self.leq(inv[x], inv[y]);
                    let here = self.leq(x, y);
                    if relabeled != here {
                        if !relabeled {
                            // relabeled has 0 where we have 1: smaller exists
                            canonical = false;
                            return false;
                        }
                        // relabeled is larger on the first difference
                        return true;
                    }
                }
            }
            true
        });
        canonical
    }
}

/// Calls `f` on every permutation of `0..n`; stops early when `f` returns
/// false.
pub(crate) fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return f(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            let go_on = rec(perm, k + 1, f);
            perm.swap(k, i);
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(&mut perm, 0, f);
}

/// An order homomorphism between two posets, with fiber access.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetMap {
    dom: Poset,
    cod: Poset,
    map: Vec<usize>,
}

impl PosetMap {
    /// Validates order preservation: `x ≤ y` in `dom` implies
    /// `map[x] ≤ map[y]` in `cod`.
    pub fn new(dom: Poset, cod: Poset, map: Vec<usize>) -> Result<PosetMap> {
        if map.len() != dom.n() {
            return Err(Error::DimensionMismatch { left: map.len(), right: dom.n() });
        }
        for &v in &map {
            if v >= cod.n() {
                return Err(Error::IndexOutOfRange { index: v, n: cod.n() });
            }
        }
        for x in 0..dom.n() {
            for y in 0..dom.n() {
                if dom.leq(x, y) && !cod.leq(map[x], map[y]) {
                    return Err(Error::NotOrderPreserving { x, y });
                }
            }
        }
        Ok(PosetMap { dom, cod, map })
    }

    pub fn dom(&self) -> &Poset {
        &self.dom
    }

    pub fn cod(&self) -> &Poset {
        &self.cod
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.map
    }

    /// `f⁻¹(a)`, ascending.
    pub fn fiber(&self, a: usize) -> Vec<usize> {
        (0..self.dom.n()).filter(|&x| self.map[x] == a).collect()
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.cod.n()).all(|a| self.map.contains(&a))
    }

    /// First codomain element with empty fiber, if any.
    pub fn surjectivity_witness(&self) -> Option<usize> {
        (0..self.cod.n()).find(|a| !self.map.contains(a))
    }

    /// Checks `f(x) < f(y) ⇒ x < y`, the strict-reflection condition of the
    /// preimage construction.
    pub fn strictly_reflecting_witness(&self) -> Option<(usize, usize)> {
        for x in 0..self.dom.n() {
            for y in 0..self.dom.n() {
                if self.cod.lt(self.map[x], self.map[y]) && !self.dom.lt(x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// Searches for an order isomorphism `P → Q` and returns the
/// lexicographically least witness (as the image vector), or `None`.
pub fn are_isomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.n() != q.n() {
        return None;
    }
    let n = p.n();
    // quick invariant: multiset of (|x↓|, |x↑|) must agree
    let key = |r: &Poset, x: usize| {
        (r.down_set(x).expect("in range").len(), r.up_set(x).expect("in range").len())
    };
    let mut kp: Vec<_> = (0..n).map(|x| key(p, x)).collect();
    let mut kq: Vec<_> = (0..n).map(|x| key(q, x)).collect();
    kp.sort_unstable();
    kq.sort_unstable();
    if kp != kq {
        return None;
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        p: &Poset,
        q: &Poset,
        x: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = p.n();
        if x == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let ok = (0..x).all(|y| {
                p.leq(x, y) == q.leq(cand, image[y]) && p.leq(y, x) == q.leq(image[y], cand)
            });
            if ok {
                image[x] = cand;
                used[cand] = true;
                if rec(p, q, x + 1, image, used) {
                    return true;
                }
                used[cand] = false;
                image[x] = usize::MAX;
            }
        }
        false
    }
    if rec(p, q, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}
