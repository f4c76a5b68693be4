//! Finite binary operations as multiplication tables, the band identities,
//! Green's relations, quotients, and the battery of structural lemmas that
//! every admissible right-regular operation must satisfy.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::{are_isomorphic, Poset};

/// A binary operation on `0..n`, stored as a row-major table:
/// `table[x*n + y] = x·y`. Closure is the only invariant enforced at
/// construction; the band identities are separate checks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BandOp {
    n: usize,
    table: Vec<usize>,
}

impl BandOp {
    pub fn new(n: usize, table: Vec<usize>) -> Result<BandOp> {
        if table.len() != n * n {
            return Err(Error::DimensionMismatch { left: table.len(), right: n * n });
        }
        for x in 0..n {
            for y in 0..n {
                let v = table[x * n + y];
                if v >= n {
                    return Err(Error::EntryOutOfRange { x, y, value: v });
                }
            }
        }
        Ok(BandOp { n, table })
    }

    /// `op(x, y) = y` on `n` elements.
    pub fn right_zero(n: usize) -> BandOp {
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = y;
            }
        }
        BandOp { n, table }
    }

    /// The meet operation of a meet-semilattice.
    pub fn meet_op(p: &Poset) -> Result<BandOp> {
        let n = p.n();
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = p
                    .meet(x, y)
                    .ok_or(Error::NotMeetSemilattice { x, y })?;
            }
        }
        Ok(BandOp { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn apply3(&self, x: usize, y: usize, z: usize) -> usize {
        self.apply(self.apply(x, y), z)
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// First `x` with `x·x ≠ x`, in ascending order.
    pub fn check_idempotent(&self) -> Result<()> {
        for x in 0..self.n {
            if self.apply(x, x) != x {
                return Err(Error::NotIdempotent { x });
            }
        }
        Ok(())
    }

    /// First triple (lexicographic) with `(x·y)·z ≠ x·(y·z)`.
    pub fn check_associative(&self) -> Result<()> {
        for x in 0..self.n {
            for y in 0..self.n {
                let xy = self.apply(x, y);
                for z in 0..self.n {
                    if self.apply(xy, z) != self.apply(x, self.apply(y, z)) {
                        return Err(Error::NotAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// First pair with `x·y·x ≠ y·x` (the right-regular identity).
    pub fn check_right_regular(&self) -> Result<()> {
        for x in 0..self.n {
            for y in 0..self.n {
                let yx = self.apply(y, x);
                if self.apply(self.apply(x, y), x) != yx {
                    return Err(Error::NotRightRegular { x, y });
                }
            }
        }
        Ok(())
    }

    /// First triple with `x·y·z ≠ y·x·z` (the right-normal identity).
    pub fn check_right_normal(&self) -> Result<()> {
        for x in 0..self.n {
            for y in 0..self.n {
                let xy = self.apply(x, y);
                let yx = self.apply(y, x);
                if xy == yx {
                    continue;
                }
                for z in 0..self.n {
                    if self.apply(xy, z) != self.apply(yx, z) {
                        return Err(Error::NotRightNormal { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// Idempotent and associative.
    pub fn check_band(&self) -> Result<()> {
        self.check_idempotent()?;
        self.check_associative()
    }

    /// Idempotent, associative, and right-regular.
    pub fn check_rrb(&self) -> Result<()> {
        self.check_band()?;
        self.check_right_regular()
    }

    /// Idempotent, associative, and right-normal.
    pub fn check_rnb(&self) -> Result<()> {
        self.check_band()?;
        self.check_right_normal()
    }

    pub fn is_idempotent(&self) -> bool {
        self.check_idempotent().is_ok()
    }

    pub fn is_associative(&self) -> bool {
        self.check_associative().is_ok()
    }

    pub fn is_rrb(&self) -> bool {
        self.check_rrb().is_ok()
    }

    pub fn is_rnb(&self) -> bool {
        self.check_rnb().is_ok()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.apply(x, y) == self.apply(y, x)))
    }

    pub fn is_right_zero(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.apply(x, y) == y))
    }

    /// The partial order `a ≤ b ⇔ a·b = a`. Requires a right-regular band;
    /// the relation is then guaranteed antisymmetric and transitive, but is
    /// validated again defensively.
    pub fn underlying_order(&self) -> Result<Poset> {
        self.check_rrb()?;
        let n = self.n;
        let mut rel = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                rel[a * n + b] = self.apply(a, b) == a;
            }
        }
        Poset::from_relation(n, &rel)
    }

    /// First pair violating `x ≤ y ⇔ x·y = x`.
    pub fn check_admissible(&self, p: &Poset) -> Result<()> {
        if self.n != p.n() {
            return Err(Error::DimensionMismatch { left: self.n, right: p.n() });
        }
        for x in 0..self.n {
            for y in 0..self.n {
                if p.leq(x, y) != (self.apply(x, y) == x) {
                    return Err(Error::NotAdmissible { x, y });
                }
            }
        }
        Ok(())
    }

    pub fn is_admissible(&self, p: &Poset) -> bool {
        self.check_admissible(p).is_ok()
    }

    /// Relabels via `perm`: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> BandOp {
        let n = self.n;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.apply(x, y)];
            }
        }
        BandOp { n, table }
    }
}

/// An equivalence relation on `0..n`, as a class labeling normalized so
/// classes are numbered by order of first appearance (hence by least member).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivRel {
    n: usize,
    class_id: Vec<usize>,
}

impl EquivRel {
    /// Normalizes an arbitrary labeling.
    pub fn from_labels(labels: &[usize]) -> EquivRel {
        let n = labels.len();
        let mut rename: Vec<Option<usize>> = vec![None; n + 1];
        let mut next = 0;
        let mut class_id = Vec::with_capacity(n);
        for &l in labels {
            let id = *rename
                .get_mut(l)
                .expect("label within 0..=n")
                .get_or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                });
            class_id.push(id);
        }
        EquivRel { n, class_id }
    }

    /// Builds from explicit classes; elements not mentioned get singleton
    /// classes.
    pub fn from_classes(n: usize, classes: &[&[usize]]) -> EquivRel {
        let mut labels: Vec<usize> = (0..n).collect();
        for class in classes {
            let rep = *class.iter().min().expect("nonempty class");
            for &x in *class {
                labels[x] = rep;
            }
        }
        EquivRel::from_labels(&labels)
    }

    pub fn identity(n: usize) -> EquivRel {
        EquivRel { n, class_id: (0..n).collect() }
    }

    pub fn full(n: usize) -> EquivRel {
        EquivRel { n, class_id: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_id[x] == self.class_id[y]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_id[x]
    }

    pub fn num_classes(&self) -> usize {
        self.class_id.iter().max().map_or(0, |&m| m + 1)
    }

    /// Classes in id order, each ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.class_id.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Least member of each class, indexed by class id.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes().iter().map(|c| c[0]).collect()
    }

    /// First quadruple violating `x θ x' ∧ y θ y' ⇒ (x·y) θ (x'·y')`.
    pub fn check_congruence(&self, op: &BandOp) -> Result<()> {
        if self.n != op.n() {
            return Err(Error::DimensionMismatch { left: self.n, right: op.n() });
        }
        for x in 0..self.n {
            for x2 in 0..self.n {
                if !self.same(x, x2) {
                    continue;
                }
                for y in 0..self.n {
                    for y2 in 0..self.n {
                        if self.same(y, y2) && !self.same(op.apply(x, y), op.apply(x2, y2)) {
                            return Err(Error::NotCongruence { x, x2, y, y2 });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether every class is an antichain of `p`.
    pub fn classes_are_antichains(&self, p: &Poset) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| !(self.same(x, y) && x != y && p.comparable(x, y)))
        })
    }
}

/// Green's relations of a band: `L` from the quasiorder `a ≲ b ⇔ a·b = a`,
/// `R = {(x,y) : x·y = y ∧ y·x = x}`, and `D` as the transitive closure of
/// `R ∪ L`.
pub fn green_relations(op: &BandOp) -> Result<(EquivRel, EquivRel, EquivRel)> {
    op.check_band()?;
    let n = op.n();
    let mut l = vec![false; n * n];
    let mut r = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            l[x * n + y] = op.apply(x, y) == x && op.apply(y, x) == y;
            r[x * n + y] = op.apply(x, y) == y && op.apply(y, x) == x;
        }
    }
    let mut d = vec![false; n * n];
    for i in 0..n * n {
        d[i] = l[i] || r[i];
    }
    for k in 0..n {
        for i in 0..n {
            if d[i * n + k] {
                for j in 0..n {
                    if d[k * n + j] {
                        d[i * n + j] = true;
                    }
                }
            }
        }
    }
    Ok((rel_to_equiv(n, &l), rel_to_equiv(n, &r), rel_to_equiv(n, &d)))
}

fn rel_to_equiv(n: usize, rel: &[bool]) -> EquivRel {
    // rel is reflexive and symmetric and (for our callers) transitive;
    // label each element by the least element related to it.
    let labels: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| rel[x * n + y]).unwrap_or(x))
        .collect();
    EquivRel::from_labels(&labels)
}

/// The relation `D = {(x,y) : x·y = y ∧ y·x = x}` of a right-regular band:
/// the least congruence whose quotient is a semilattice. Both the congruence
/// property and commutativity of the quotient are re-checked.
pub fn semilattice_congruence(op: &BandOp) -> Result<EquivRel> {
    op.check_rrb()?;
    let n = op.n();
    let labels: Vec<usize> = (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| op.apply(x, y) == y && op.apply(y, x) == x)
                .expect("reflexive")
        })
        .collect();
    let d = EquivRel::from_labels(&labels);
    d.check_congruence(op)?;
    let q = quotient(op, &d)?;
    if !q.is_commutative() {
        return Err(Error::PostValidationFailed { reason: "semilattice quotient not commutative" });
    }
    Ok(d)
}

/// The quotient operation on class ids (representatives = least members).
pub fn quotient(op: &BandOp, theta: &EquivRel) -> Result<BandOp> {
    theta.check_congruence(op)?;
    let reps = theta.representatives();
    let k = reps.len();
    let mut table = vec![0; k * k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * k + j] = theta.class_of(op.apply(a, b));
        }
    }
    BandOp::new(k, table)
}

/// Componentwise product on index pairs, flattened row-major:
/// pair `(x1, x2)` becomes `x1 * op2.n + x2`.
pub fn direct_product(op1: &BandOp, op2: &BandOp) -> BandOp {
    let (n1, n2) = (op1.n(), op2.n());
    let n = n1 * n2;
    let mut table = vec![0; n * n];
    for x1 in 0..n1 {
        for x2 in 0..n2 {
            for y1 in 0..n1 {
                for y2 in 0..n2 {
                    let x = x1 * n2 + x2;
                    let y = y1 * n2 + y2;
                    table[x * n + y] = op1.apply(x1, y1) * n2 + op2.apply(x2, y2);
                }
            }
        }
    }
    BandOp::new(n, table).expect("product entries in range")
}

/// Restricts an admissible operation to a decreasing subset `s` of `p`,
/// compacting indices in ascending order of `s`.
pub fn restrict_to_decreasing(op: &BandOp, s: &[usize], p: &Poset) -> Result<BandOp> {
    op.check_admissible(p)?;
    let mut s: Vec<usize> = s.to_vec();
    s.sort_unstable();
    s.dedup();
    for &a in &s {
        if a >= p.n() {
            return Err(Error::IndexOutOfRange { index: a, n: p.n() });
        }
        for b in 0..p.n() {
            if p.leq(b, a) && !s.contains(&b) {
                return Err(Error::NotDecreasing { a, b });
            }
        }
    }
    let k = s.len();
    let index_of = |v: usize| s.iter().position(|&e| e == v);
    let mut table = vec![0; k * k];
    for (i, &x) in s.iter().enumerate() {
        for (j, &y) in s.iter().enumerate() {
            let v = op.apply(x, y);
            match index_of(v) {
                Some(c) => table[i * k + j] = c,
                None => return Err(Error::NotClosed { x, y, product: v }),
            }
        }
    }
    BandOp::new(k, table)
}

/// Searches for a bijection `h` with `h(x·y) = h(x)·h(y)` and returns the
/// lexicographically least witness, or `None`.
pub fn band_isomorphic(op1: &BandOp, op2: &BandOp) -> Option<Vec<usize>> {
    if op1.n() != op2.n() {
        return None;
    }
    let n = op1.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(op1: &BandOp, op2: &BandOp, image: &[usize], placed: usize) -> bool {
        for x in 0..placed {
            for y in 0..placed {
                let v = op1.apply(x, y);
                if v < placed && op2.apply(image[x], image[y]) != image[v] {
                    return false;
                }
                if v >= placed {
                    // product not yet placed: only check that the image
                    // product is not forced onto a used element inconsistently
                    continue;
                }
            }
        }
        true
    }
    fn rec(op1: &BandOp, op2: &BandOp, x: usize, image: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = op1.n();
        if x == n {
            // full homomorphism check
            for a in 0..n {
                for b in 0..n {
                    if image[op1.apply(a, b)] != op2.apply(image[a], image[b]) {
                        return false;
                    }
                }
            }
            return true;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            image[x] = cand;
            used[cand] = true;
            if consistent(op1, op2, image, x + 1) && rec(op1, op2, x + 1, image, used) {
                return true;
            }
            used[cand] = false;
            image[x] = usize::MAX;
        }
        false
    }
    if rec(op1, op2, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// One clause of the structural-lemma battery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaClause {
    pub name: &'static str,
    pub pass: bool,
    /// First witness triple on failure (unused slots are `usize::MAX`).
    pub witness: Option<(usize, usize, usize)>,
}

/// Result of [`posemigroup_lemma_report`]: every structural consequence of
/// admissibility plus right-regularity, checked exhaustively.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub clauses: Vec<LemmaClause>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }
}

/// Exhaustively checks the structural lemmas that hold in every admissible
/// right-regular operation: products descend on the right, minimal elements
/// absorb, the sandwich identity, monotonicity of right translation, common
/// lower bounds persisting under products, the down-set translation
/// isomorphism `a ↦ a·y : (y·x)↓ → y↓` when `x·y = y`, isomorphism of the
/// down-sets `(x·y)↓ ≅ (y·x)↓`, minimality of `m·x`, and closure of
/// down-sets under the product.
pub fn posemigroup_lemma_report(op: &BandOp, p: &Poset) -> Result<LemmaReport> {
    op.check_rrb()?;
    op.check_admissible(p)?;
    let n = op.n();
    let none = usize::MAX;
    let mut clauses = Vec::new();
    let mut push = |name: &'static str, witness: Option<(usize, usize, usize)>| {
        clauses.push(LemmaClause { name, pass: witness.is_none(), witness });
    };

    // a·b ≤ b
    push("product-below-right-factor", {
        let mut w = None;
        'outer: for a in 0..n {
            for b in 0..n {
                if !p.leq(op.apply(a, b), b) {
                    w = Some((a, b, none));
                    break 'outer;
                }
            }
        }
        w
    });

    // b minimal ⇒ a·b = b
    push("minimal-right-factor-absorbs", {
        let mut w = None;
        'outer: for b in p.minimals() {
            for a in 0..n {
                if op.apply(a, b) != b {
                    w = Some((a, b, none));
                    break 'outer;
                }
            }
        }
        w
    });

    // a·b·a = b·a
    push("sandwich-identity", {
        let mut w = None;
        'outer: for a in 0..n {
            for b in 0..n {
                if op.apply3(a, b, a) != op.apply(b, a) {
                    w = Some((a, b, none));
                    break 'outer;
                }
            }
        }
        w
    });

    // a ≤ b ⇒ b·a = a
    push("lower-element-absorbs-upper", {
        let mut w = None;
        'outer: for a in 0..n {
            for b in 0..n {
                if p.leq(a, b) && op.apply(b, a) != a {
                    w = Some((a, b, none));
                    break 'outer;
                }
            }
        }
        w
    });

    // a ≤ b ⇒ a·x ≤ b·x
    push("right-translation-monotone", {
        let mut w = None;
        'outer: for a in 0..n {
            for b in 0..n {
                if !p.leq(a, b) {
                    continue;
                }
                for x in 0..n {
                    if !p.leq(op.apply(a, x), op.apply(b, x)) {
                        w = Some((a, b, x));
                        break 'outer;
                    }
                }
            }
        }
        w
    });

    // c ≤ x, c ≤ y ⇒ c ≤ x·y and c ≤ y·x
    push("common-lower-bound-persists", {
        let mut w = None;
        'outer: for c in 0..n {
            for x in 0..n {
                if !p.leq(c, x) {
                    continue;
                }
                for y in 0..n {
                    if p.leq(c, y)
                        && (!p.leq(c, op.apply(x, y)) || !p.leq(c, op.apply(y, x)))
                    {
                        w = Some((c, x, y));
                        break 'outer;
                    }
                }
            }
        }
        w
    });

    // x·y = y ⇒ a ↦ a·y is an order isomorphism (y·x)↓ → y↓ and a band
    // isomorphism between the restricted subalgebras
    push("downset-translation-isomorphism", {
        let mut w = None;
        'outer: for x in 0..n {
            for y in 0..n {
                if op.apply(x, y) != y {
                    continue;
                }
                let src = p.down_set(op.apply(y, x)).expect("in range");
                let dst = p.down_set(y).expect("in range");
                if !translation_is_iso(op, p, &src, &dst, y) {
                    w = Some((x, y, none));
                    break 'outer;
                }
            }
        }
        w
    });

    // (x·y)↓ ≅ (y·x)↓ as posets
    push("conjugate-downsets-isomorphic", {
        let mut w = None;
        'outer: for x in 0..n {
            for y in 0..n {
                let a = p.induced(&p.down_set(op.apply(x, y)).expect("in range"));
                let b = p.induced(&p.down_set(op.apply(y, x)).expect("in range"));
                if are_isomorphic(&a, &b).is_none() {
                    w = Some((x, y, none));
                    break 'outer;
                }
            }
        }
        w
    });

    // m minimal ⇒ m·x ≤ x and m·x minimal
    push("minimal-left-factor-lands-minimal", {
        let mut w = None;
        'outer: for m in p.minimals() {
            for x in 0..n {
                let mx = op.apply(m, x);
                if !p.leq(mx, x) || !p.is_minimal(mx) {
                    w = Some((m, x, none));
                    break 'outer;
                }
            }
        }
        w
    });

    // every principal down-set is closed under the product
    push("downsets-closed-under-product", {
        let mut w = None;
        'outer: for t in 0..n {
            let d = p.down_set(t).expect("in range");
            for &x in &d {
                for &y in &d {
                    if !d.contains(&op.apply(x, y)) {
                        w = Some((t, x, y));
                        break 'outer;
                    }
                }
            }
        }
        w
    });

    Ok(LemmaReport { clauses })
}

/// Is `a ↦ a·y` a bijection `src → dst` preserving and reflecting order,
/// and a homomorphism between the restricted subalgebras?
fn translation_is_iso(op: &BandOp, p: &Poset, src: &[usize], dst: &[usize], y: usize) -> bool {
    if src.len() != dst.len() {
        return false;
    }
    let image: Vec<usize> = src.iter().map(|&a| op.apply(a, y)).collect();
    // injective into dst
    for (i, &v) in image.iter().enumerate() {
        if !dst.contains(&v) || image[..i].contains(&v) {
            return false;
        }
    }
    // order iso
    for (i, &a) in src.iter().enumerate() {
        for (j, &b) in src.iter().enumerate() {
            if p.leq(a, b) != p.leq(image[i], image[j]) {
                return false;
            }
        }
    }
    // band homomorphism on the down-set subalgebras
    for &a in src {
        for &b in src {
            if op.apply(op.apply(a, y), op.apply(b, y)) != op.apply(op.apply(a, b), y) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn named_band(name: &str) -> (Poset, BandOp) {
        let (pname, rows) = fixtures::named_table(name).unwrap();
        let p = fixtures::named_poset(pname).unwrap();
        let op = BandOp::new(p.n(), rows).unwrap();
        (p, op)
    }

    #[test]
    fn golden_normal_table_identities() {
        let (p, op) = named_band("table-normal");
        assert!(op.is_idempotent());
        assert!(op.is_associative());
        assert!(op.is_rrb());
        assert!(op.is_rnb());
        assert!(!op.is_commutative());
        assert!(op.is_admissible(&p));
        assert_eq!(op.underlying_order().unwrap(), p);
    }

    #[test]
    fn all_golden_tables_are_admissible_rrbs() {
        for name in fixtures::TABLE_NAMES {
            let (p, op) = named_band(name);
            assert!(op.is_rrb(), "{name}");
            assert!(op.is_admissible(&p), "{name}");
        }
    }

    #[test]
    fn right_zero_band_properties() {
        let op = BandOp::right_zero(3);
        assert!(op.is_right_zero());
        assert!(op.is_rrb());
        assert!(op.is_rnb());
        assert!(!op.is_commutative());
        assert_eq!(op.underlying_order().unwrap(), Poset::antichain(3));
    }

    #[test]
    fn min_on_chain_properties() {
        let c = Poset::chain(3);
        let op = BandOp::meet_op(&c).unwrap();
        assert!(op.is_commutative());
        assert!(op.is_rrb());
        assert!(op.is_rnb());
        assert!(op.is_admissible(&c));
        assert_eq!(op.underlying_order().unwrap(), c);
        assert!(!BandOp::right_zero(2).is_admissible(&Poset::chain(2)));
    }

    #[test]
    fn non_associative_witness_is_least() {
        // x·y = x except 0·1 = 1: breaks idempotence nowhere, associativity
        // at the least triple involving the bad cell.
        let op = BandOp::new(2, vec![1, 1, 0, 1]).unwrap();
        assert_eq!(op.check_idempotent(), Err(Error::NotIdempotent { x: 0 }));
    }

    #[test]
    fn green_l_is_identity_and_d_equals_r_on_rrbs() {
        for name in fixtures::TABLE_NAMES {
            let (_, op) = named_band(name);
            let (l, r, d) = green_relations(&op).unwrap();
            assert_eq!(l, EquivRel::identity(op.n()), "{name}");
            assert_eq!(d, r, "{name}");
        }
    }

    #[test]
    fn green_d_is_identity_on_semilattice() {
        let op = BandOp::meet_op(&Poset::chain(4)).unwrap();
        let (_, _, d) = green_relations(&op).unwrap();
        assert_eq!(d, EquivRel::identity(4));
    }

    #[test]
    fn semilattice_congruence_of_golden_normal_table() {
        let (_, op) = named_band("table-normal");
        let d = semilattice_congruence(&op).unwrap();
        assert_eq!(d.classes(), vec![vec![0, 1], vec![2], vec![3], vec![4]]);
        // quotient is a 4-element meet-semilattice with bottom class 3
        let q = quotient(&op, &d).unwrap();
        assert!(q.is_commutative());
        let order = q.underlying_order().unwrap();
        assert!(order.is_meet_semilattice());
        assert_eq!(order.minimum(), Some(3));
    }

    #[test]
    fn semilattice_congruence_of_right_zero_is_full() {
        let d = semilattice_congruence(&BandOp::right_zero(4)).unwrap();
        assert_eq!(d, EquivRel::full(4));
    }

    #[test]
    fn quotient_by_identity_and_full() {
        let (_, op) = named_band("table-normal");
        assert_eq!(quotient(&op, &EquivRel::identity(5)).unwrap(), op);
        let triv = quotient(&op, &EquivRel::full(5)).unwrap();
        assert_eq!(triv.n(), 1);
    }

    #[test]
    fn direct_product_preserves_identities() {
        let chain = BandOp::meet_op(&Poset::chain(2)).unwrap();
        let rz = BandOp::right_zero(2);
        let prod = direct_product(&chain, &rz);
        assert!(prod.is_rrb());
        assert!(prod.is_rnb());
        // underlying order: two disjoint 2-chains
        let order = prod.underlying_order().unwrap();
        assert_eq!(order.minimals().len(), 2);
        assert_eq!(order.maximals().len(), 2);
        assert_eq!(order.covers().len(), 2);

        let sq = direct_product(&chain, &chain);
        let expected = fixtures::named_poset("square2").unwrap();
        assert!(crate::poset::are_isomorphic(&sq.underlying_order().unwrap(), &expected).is_some());
    }

    #[test]
    fn restrict_to_down_set_is_a_sub_band() {
        let (p, op) = named_band("table-normal");
        // S = whole poset: identity restriction
        let all: Vec<usize> = (0..p.n()).collect();
        assert_eq!(restrict_to_decreasing(&op, &all, &p).unwrap(), op);
        for x in 0..p.n() {
            let d = p.down_set(x).unwrap();
            let sub = restrict_to_decreasing(&op, &d, &p).unwrap();
            assert!(sub.is_rrb());
            assert!(sub.is_admissible(&p.induced(&d)));
        }
        // a non-decreasing subset is rejected
        assert_eq!(
            restrict_to_decreasing(&op, &[0, 2], &p),
            Err(Error::NotDecreasing { a: 0, b: 3 })
        );
    }

    #[test]
    fn band_isomorphic_identity_and_relabeling() {
        let (_, op) = named_band("table-a2-n");
        assert_eq!(band_isomorphic(&op, &op).unwrap(), vec![0, 1, 2, 3]);
        let perm = vec![2, 0, 3, 1];
        let relabeled = op.relabel(&perm);
        let h = band_isomorphic(&op, &relabeled).unwrap();
        // some isomorphism exists; verify it is one
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(h[op.apply(a, b)], relabeled.apply(h[a], h[b]));
            }
        }
        assert!(band_isomorphic(&op, &BandOp::right_zero(4)).is_none());
    }

    #[test]
    fn lemma_report_passes_on_chain_and_golden_tables() {
        let c = Poset::chain(4);
        let min = BandOp::meet_op(&c).unwrap();
        assert!(posemigroup_lemma_report(&min, &c).unwrap().all_pass());
        for name in fixtures::TABLE_NAMES {
            let (p, op) = named_band(name);
            let report = posemigroup_lemma_report(&op, &p).unwrap();
            assert!(report.all_pass(), "{name}: {:?}", report.clauses);
        }
    }
}
