//! Deciding and enumerating admissible operations on a poset.
//!
//! The pipeline: [`initial_domains`] seeds a per-cell candidate table from
//! order-theoretic necessary conditions (products descend on the right,
//! common lower bounds persist, comparable pairs force the minimum, minimal
//! left factors land on minimals); [`propagate`] shrinks it to an
//! arc-consistent fixpoint; [`find_admissible`] backtracks over the free
//! cells in row-major order with ascending values, so FIRST mode returns the
//! lexicographically least table. [`brute_force_count`] is an independent
//! Cartesian-product oracle, and [`crown_certificate`] machine-checks the
//! classical impossibility argument for the 6-element crown.

use alloc::vec;
use alloc::vec::Vec;

use crate::band::BandOp;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::poset::Poset;

/// Which equational variety the searched operation must belong to.
/// `Commutative` asks for a meet-semilattice operation; the varieties nest:
/// commutative ⊆ right-normal ⊆ right-regular.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variety {
    Rrb,
    Rnb,
    Commutative,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchMode {
    /// Lexicographically least admissible table (row-major value order).
    First,
    /// Every admissible table, sorted.
    All,
    /// Just the number of admissible tables.
    Count,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchConfig {
    pub variety: Variety,
    pub mode: SearchMode,
}

/// Guard for the exhaustive ALL/COUNT modes.
pub const MAX_SEARCH_N: usize = 10;

/// Budget on the Cartesian-product size of the brute-force oracle.
pub const BRUTE_FORCE_BUDGET: u64 = 10_000_000;

const UNSET: usize = usize::MAX;

/// A cell emptied during propagation, with the rule that emptied it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contradiction {
    pub cell: (usize, usize),
    pub constraint: &'static str,
}

/// Candidate values for every cell of the multiplication table, as bitmasks.
/// A table with an empty cell is in an explicit contradiction state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTable {
    n: usize,
    domains: Vec<u64>,
    contradiction: Option<Contradiction>,
}

impl PartialTable {
    pub fn n(&self) -> usize {
        self.n
    }

    fn mask(&self, x: usize, y: usize) -> u64 {
        self.domains[x * self.n + y]
    }

    /// Candidates for cell `(x, y)`, ascending.
    pub fn domain(&self, x: usize, y: usize) -> Vec<usize> {
        bits(self.mask(x, y))
    }

    pub fn contradiction(&self) -> Option<&Contradiction> {
        self.contradiction.as_ref()
    }

    /// The single candidate of a decided cell.
    fn singleton(&self, x: usize, y: usize) -> Option<usize> {
        let m = self.mask(x, y);
        if m != 0 && m & (m - 1) == 0 {
            Some(m.trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Free cells (more than one candidate), row-major.
    pub fn free_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.mask(x, y).count_ones() > 1 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Product of all domain cardinalities, saturating.
    pub fn domain_product(&self) -> u64 {
        self.domains
            .iter()
            .map(|m| m.count_ones() as u64)
            .fold(1u64, |acc, c| acc.saturating_mul(c))
    }
}

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        out.push(b);
        m &= m - 1;
    }
    out
}

/// Seeds the candidate table from the necessary conditions every admissible
/// right-regular operation satisfies:
///
/// * diagonal cells are `{x}` (idempotence);
/// * comparable `x, y` force the cell to `{min(x, y)}` (admissibility plus
///   absorption of the lower element);
/// * otherwise the candidates are the `c ≤ y` that sit above every common
///   lower bound of `x` and `y`, restricted to minimals when `x` is minimal.
///
/// For `Commutative`, symmetric cells are additionally intersected. An empty
/// cell is recorded as a contradiction (the poset admits no operation).
pub fn initial_domains(p: &Poset, variety: Variety) -> PartialTable {
    let n = p.n();
    assert!(n <= 64, "element sets are stored as u64 bitmasks");
    let mut domains = vec![0u64; n * n];
    for x in 0..n {
        for y in 0..n {
            let m: u64 = if x == y {
                1 << x
            } else if p.leq(x, y) {
                1 << x
            } else if p.leq(y, x) {
                1 << y
            } else {
                let mut m = 0u64;
                for c in 0..n {
                    if !p.leq(c, y) {
                        continue;
                    }
                    if (0..n).any(|d| p.leq(d, x) && p.leq(d, y) && !p.leq(d, c)) {
                        continue;
                    }
                    if p.is_minimal(x) && !p.is_minimal(c) {
                        continue;
                    }
                    m |= 1 << c;
                }
                m
            };
            domains[x * n + y] = m;
        }
    }
    if variety == Variety::Commutative {
        for x in 0..n {
            for y in 0..x {
                let m = domains[x * n + y] & domains[y * n + x];
                domains[x * n + y] = m;
                domains[y * n + x] = m;
            }
        }
    }
    let mut t = PartialTable { n, domains, contradiction: None };
    t.contradiction = first_empty(&t, "initial necessary conditions");
    t
}

fn first_empty(t: &PartialTable, constraint: &'static str) -> Option<Contradiction> {
    for x in 0..t.n {
        for y in 0..t.n {
            if t.mask(x, y) == 0 {
                return Some(Contradiction { cell: (x, y), constraint });
            }
        }
    }
    None
}

/// Shrinks the table to a fixpoint of:
///
/// * the right-regular rule `(x·y)·x = y·x` (cell equality when `x·y` is
///   decided, support pruning otherwise);
/// * the right-normal rule `(x·y)·z = (y·x)·z` when both products are
///   decided (`Rnb` only);
/// * symmetry of opposite cells (`Commutative` only);
/// * the associativity rules `(x·y)·z = x·(y·z)` for triples with enough
///   decided positions.
///
/// Domains only shrink, so the fixpoint is unique and the map idempotent.
/// On contradiction, the first emptied cell (row-major) is reported together
/// with the rule that emptied it.
pub fn propagate(t: &PartialTable, variety: Variety) -> PartialTable {
    let mut t = t.clone();
    if t.contradiction.is_some() {
        return t;
    }
    let n = t.n;
    let mut rule_of: Vec<&'static str> = vec![""; n * n];
    loop {
        if let Some(mut c) = first_empty(&t, "") {
            let idx = c.cell.0 * n + c.cell.1;
            if !rule_of[idx].is_empty() {
                c.constraint = rule_of[idx];
            } else {
                c.constraint = "initial necessary conditions";
            }
            t.contradiction = Some(c);
            return t;
        }
        let mut changed = false;
        let mut set = |doms: &mut Vec<u64>, x: usize, y: usize, m: u64, rule: &'static str| {
            if doms[x * n + y] != m {
                doms[x * n + y] = m;
                rule_of[x * n + y] = rule;
                changed = true;
            }
        };
        // right-regular identity (x·y)·x = y·x
        for x in 0..n {
            for y in 0..n {
                if let Some(a) = t.singleton(x, y) {
                    let m = t.mask(a, x) & t.mask(y, x);
                    set(&mut t.domains, a, x, m, "right-regular identity");
                    set(&mut t.domains, y, x, m, "right-regular identity");
                } else {
                    let mut m = t.mask(x, y);
                    for v in bits(t.mask(x, y)) {
                        if t.mask(v, x) & t.mask(y, x) == 0 {
                            m &= !(1 << v);
                        }
                    }
                    set(&mut t.domains, x, y, m, "right-regular identity");
                }
                if variety == Variety::Rnb {
                    if let (Some(a), Some(b)) = (t.singleton(x, y), t.singleton(y, x)) {
                        for z in 0..n {
                            let m = t.mask(a, z) & t.mask(b, z);
                            set(&mut t.domains, a, z, m, "right-normal identity");
                            set(&mut t.domains, b, z, m, "right-normal identity");
                        }
                    }
                }
                if variety == Variety::Commutative {
                    let m = t.mask(x, y) & t.mask(y, x);
                    set(&mut t.domains, x, y, m, "commutativity");
                    set(&mut t.domains, y, x, m, "commutativity");
                }
            }
        }
        // associativity (x·y)·z = x·(y·z)
        for x in 0..n {
            for y in 0..n {
                let a = t.singleton(x, y);
                for z in 0..n {
                    let c = t.singleton(y, z);
                    match (a, c) {
                        (Some(a), Some(c)) => {
                            let m = t.mask(a, z) & t.mask(x, c);
                            set(&mut t.domains, a, z, m, "associativity");
                            set(&mut t.domains, x, c, m, "associativity");
                        }
                        (None, Some(c)) => {
                            if let Some(u) = t.singleton(x, c) {
                                let mut m = t.mask(x, y);
                                for v in bits(t.mask(x, y)) {
                                    if t.mask(v, z) & (1 << u) == 0 {
                                        m &= !(1 << v);
                                    }
                                }
                                set(&mut t.domains, x, y, m, "associativity");
                            }
                        }
                        (Some(a), None) => {
                            if let Some(u) = t.singleton(a, z) {
                                let mut m = t.mask(y, z);
                                for v in bits(t.mask(y, z)) {
                                    if t.mask(x, v) & (1 << u) == 0 {
                                        m &= !(1 << v);
                                    }
                                }
                                set(&mut t.domains, y, z, m, "associativity");
                            }
                        }
                        (None, None) => {}
                    }
                }
            }
        }
        if !changed {
            return t;
        }
    }
}

/// Search statistics and results. In `First` mode `ops` holds at most one
/// table; in `Count` mode it is empty and only `count` is meaningful.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub ops: Vec<BandOp>,
    pub count: u64,
    pub nodes_explored: u64,
}

impl SearchResult {
    pub fn found(&self) -> Option<&BandOp> {
        self.ops.first()
    }
}

struct Searcher<'a> {
    n: usize,
    variety: Variety,
    mode: SearchMode,
    domains: &'a PartialTable,
    free: Vec<(usize, usize)>,
    table: Vec<usize>,
    result: SearchResult,
    stop: bool,
}

impl Searcher<'_> {
    fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// Every constraint whose participating cells are all decided must hold.
    /// At a leaf (all cells decided) this is a complete check of
    /// associativity and the variety identity; admissibility and idempotence
    /// are built into the domains.
    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let a = self.get(x, y);
                if a == UNSET {
                    continue;
                }
                let b = self.get(y, x);
                if b != UNSET {
                    let ax = self.get(a, x);
                    if ax != UNSET && ax != b {
                        return false; // (x·y)·x ≠ y·x
                    }
                    match self.variety {
                        Variety::Rnb => {
                            for z in 0..n {
                                let az = self.get(a, z);
                                let bz = self.get(b, z);
                                if az != UNSET && bz != UNSET && az != bz {
                                    return false;
                                }
                            }
                        }
                        Variety::Commutative => {
                            if a != b {
                                return false;
                            }
                        }
                        Variety::Rrb => {}
                    }
                }
                for z in 0..n {
                    let c = self.get(y, z);
                    if c == UNSET {
                        continue;
                    }
                    let l = self.get(a, z);
                    let r = self.get(x, c);
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn recurse(&mut self, i: usize) {
        if self.stop {
            return;
        }
        if i == self.free.len() {
            self.result.count += 1;
            match self.mode {
                SearchMode::Count => {}
                SearchMode::First | SearchMode::All => {
                    let op = BandOp::new(self.n, self.table.clone())
                        .expect("search assigns in-range values");
                    self.result.ops.push(op);
                    if self.mode == SearchMode::First {
                        self.stop = true;
                    }
                }
            }
            return;
        }
        let (x, y) = self.free[i];
        for v in bits(self.domains.mask(x, y)) {
            self.table[x * self.n + y] = v;
            self.result.nodes_explored += 1;
            if self.consistent() {
                self.recurse(i + 1);
                if self.stop {
                    return;
                }
            }
        }
        self.table[x * self.n + y] = UNSET;
    }
}

/// Exhaustive backtracking search for admissible operations of the given
/// variety. Absence (`count == 0`) is a proof of non-existence. Every
/// returned operation is re-validated against the independent predicates
/// before being handed out.
pub fn find_admissible(p: &Poset, cfg: SearchConfig) -> Result<SearchResult> {
    if cfg.mode != SearchMode::First && p.n() > MAX_SEARCH_N {
        return Err(Error::GuardExceeded { what: "exhaustive search", limit: MAX_SEARCH_N, got: p.n() });
    }
    let domains = initial_domains(p, cfg.variety);
    let empty = SearchResult { ops: Vec::new(), count: 0, nodes_explored: 0 };
    if domains.contradiction().is_some() {
        return Ok(empty);
    }
    let n = p.n();
    let mut table = vec![UNSET; n * n];
    for x in 0..n {
        for y in 0..n {
            if let Some(v) = domains.singleton(x, y) {
                table[x * n + y] = v;
            }
        }
    }
    let mut searcher = Searcher {
        n,
        variety: cfg.variety,
        mode: cfg.mode,
        domains: &domains,
        free: domains.free_cells(),
        table,
        result: empty,
        stop: false,
    };
    if searcher.consistent() {
        searcher.recurse(0);
    }
    let result = searcher.result;
    for op in &result.ops {
        validate_found(op, p, cfg.variety)?;
    }
    Ok(result)
}

fn validate_found(op: &BandOp, p: &Poset, variety: Variety) -> Result<()> {
    op.check_admissible(p)?;
    op.check_band()?;
    match variety {
        Variety::Rrb => op.check_rrb()?,
        Variety::Rnb => op.check_rnb()?,
        Variety::Commutative => {
            op.check_rnb()?;
            if !op.is_commutative() {
                return Err(Error::PostValidationFailed { reason: "operation not commutative" });
            }
        }
    }
    Ok(())
}

/// Independent oracle: enumerates the full Cartesian product of the initial
/// domains and filters by the complete identity checks, with no propagation
/// or pruning beyond the initial necessary conditions.
pub fn brute_force_count(p: &Poset, variety: Variety) -> Result<u64> {
    let domains = initial_domains(p, variety);
    if domains.contradiction().is_some() {
        return Ok(0);
    }
    let product = domains.domain_product();
    if product > BRUTE_FORCE_BUDGET {
        return Err(Error::BudgetExceeded { budget: BRUTE_FORCE_BUDGET as u64 });
    }
    let n = p.n();
    let free = domains.free_cells();
    let mut table = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            if let Some(v) = domains.singleton(x, y) {
                table[x * n + y] = v;
            }
        }
    }
    let choices: Vec<Vec<usize>> = free.iter().map(|&(x, y)| domains.domain(x, y)).collect();
    let mut index = vec![0usize; free.len()];
    let mut count = 0u64;
    loop {
        for (k, &(x, y)) in free.iter().enumerate() {
            table[x * n + y] = choices[k][index[k]];
        }
        if full_check(&table, n, p, variety) {
            count += 1;
        }
        // odometer
        let mut k = free.len();
        loop {
            if k == 0 {
                return Ok(count);
            }
            k -= 1;
            index[k] += 1;
            if index[k] < choices[k].len() {
                break;
            }
            index[k] = 0;
        }
        if free.is_empty() {
            return Ok(count);
        }
    }
}

fn full_check(table: &[usize], n: usize, p: &Poset, variety: Variety) -> bool {
    let at = |x: usize, y: usize| table[x * n + y];
    for x in 0..n {
        for y in 0..n {
            if (at(x, y) == x) != p.leq(x, y) {
                return false;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = at(x, y);
            for z in 0..n {
                if at(xy, z) != at(x, at(y, z)) {
                    return false;
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if at(at(x, y), x) != at(y, x) {
                return false;
            }
        }
    }
    match variety {
        Variety::Rrb => {}
        Variety::Rnb => {
            for x in 0..n {
                for y in 0..n {
                    let (xy, yx) = (at(x, y), at(y, x));
                    for z in 0..n {
                        if at(xy, z) != at(yx, z) {
                            return false;
                        }
                    }
                }
            }
        }
        Variety::Commutative => {
            for x in 0..n {
                for y in 0..n {
                    if at(x, y) != at(y, x) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// One biconditional of the crown impossibility argument, machine-checked
/// over all completions that satisfy the right-regular identity and
/// associativity restricted to triples drawn from the biconditional's
/// 4-element support.
#[derive(Clone, Debug)]
pub struct CrownBiconditional {
    pub lhs_cell: (usize, usize),
    pub lhs_value: usize,
    pub rhs_cell: (usize, usize),
    pub rhs_value: usize,
    pub support: [usize; 4],
    pub survivors: u64,
    /// The biconditional holds in every survivor.
    pub holds: bool,
    /// Survivors exist with the left side true and with it false.
    pub nonvacuous: bool,
}

/// Machine-checked impossibility argument for the 6-element crown.
#[derive(Clone, Debug)]
pub struct CrownCertificate {
    /// Free cells of the partial table and their 2-element domains.
    pub free_cells: Vec<((usize, usize), Vec<usize>)>,
    pub biconditionals: Vec<CrownBiconditional>,
    /// The relabeling swapping the incident maximal/minimal pairs; an order
    /// automorphism of the crown (it exchanges the first and third
    /// biconditional's supports).
    pub automorphism: Vec<usize>,
    pub automorphism_is_order_iso: bool,
    /// Of the 8 joint values for the three headline cells, how many satisfy
    /// all three biconditionals simultaneously (must be 0: the chain of
    /// equivalences forces the headline cell (4,1) to equal both its
    /// candidate values at once).
    pub joint_assignments: u32,
    pub total_completions: u64,
    pub associative_completions: u64,
}

impl CrownCertificate {
    /// The whole argument went through: every biconditional holds
    /// non-vacuously, no joint assignment survives, and indeed no completion
    /// is associative.
    pub fn establishes_impossibility(&self) -> bool {
        self.biconditionals.iter().all(|b| b.holds && b.nonvacuous)
            && self.joint_assignments == 0
            && self.associative_completions == 0
    }
}

/// Reproduces the appendix-style impossibility proof for the crown: the
/// partial table leaves nine binary cells; three biconditionals hold among
/// the cells `(3,2)`, `(4,1)`, `(5,0)`; chaining them forces `4·1 = 3 ⇔
/// 4·1 = 5`, so no completion is associative.
pub fn crown_certificate() -> CrownCertificate {
    let p = fixtures::named_poset("crown").expect("crown fixture exists");
    let n = p.n();
    let domains = initial_domains(&p, Variety::Rrb);
    let free = domains.free_cells();
    let free_cells: Vec<((usize, usize), Vec<usize>)> =
        free.iter().map(|&(x, y)| ((x, y), domains.domain(x, y))).collect();

    // ((lhs cell, lhs value), (rhs cell, rhs value), support)
    let specs: [((usize, usize), usize, (usize, usize), usize, [usize; 4]); 3] = [
        ((5, 0), 3, (3, 2), 5, [0, 2, 3, 5]),
        ((3, 2), 4, (4, 1), 3, [1, 2, 3, 4]),
        ((5, 0), 4, (4, 1), 5, [0, 1, 4, 5]),
    ];

    let mut base = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            base[x * n + y] = domains.singleton(x, y).unwrap_or(UNSET);
        }
    }
    let choices: Vec<Vec<usize>> = free.iter().map(|&(x, y)| domains.domain(x, y)).collect();

    let mut total = 0u64;
    let mut associative = 0u64;
    let mut survivors = [0u64; 3];
    let mut bicond_ok = [true; 3];
    let mut lhs_true_seen = [false; 3];
    let mut lhs_false_seen = [false; 3];

    let mut index = vec![0usize; free.len()];
    'outer: loop {
        let mut table = base.clone();
        for (k, &(x, y)) in free.iter().enumerate() {
            table[x * n + y] = choices[k][index[k]];
        }
        total += 1;
        if full_check(&table, n, &p, Variety::Rrb) {
            associative += 1;
        }
        let at = |x: usize, y: usize| table[x * n + y];
        let rrb_everywhere =
            (0..n).all(|x| (0..n).all(|y| at(at(x, y), x) == at(y, x)));
        for (i, &(lc, lv, rc, rv, support)) in specs.iter().enumerate() {
            // survivor: right-regular identity on all pairs and
            // associativity on support triples
            let mut ok = rrb_everywhere;
            for &x in &support {
                for &y in &support {
                    for &z in &support {
                        if at(at(x, y), z) != at(x, at(y, z)) {
                            ok = false;
                        }
                    }
                }
            }
            if ok {
                survivors[i] += 1;
                let lhs = at(lc.0, lc.1) == lv;
                let rhs = at(rc.0, rc.1) == rv;
                if lhs {
                    lhs_true_seen[i] = true;
                } else {
                    lhs_false_seen[i] = true;
                }
                if lhs != rhs {
                    bicond_ok[i] = false;
                }
            }
        }
        let mut k = free.len();
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            index[k] += 1;
            if index[k] < choices[k].len() {
                break;
            }
            index[k] = 0;
        }
    }

    // chain of equivalences on the three headline cells alone
    let mut joint = 0u32;
    for &a in &[4usize, 5] {
        // (3,2)
        for &b in &[3usize, 5] {
            // (4,1)
            for &c in &[3usize, 4] {
                // (5,0)
                let b1 = (c == 3) == (a == 5);
                let b2 = (a == 4) == (b == 3);
                let b3 = (c == 4) == (b == 5);
                if b1 && b2 && b3 {
                    joint += 1;
                }
            }
        }
    }

    // the relabeling exchanging maximals 0↔2 and minimals 3↔5
    let automorphism = vec![2, 1, 0, 5, 4, 3];
    let automorphism_is_order_iso = {
        let q = p.relabel(&automorphism);
        q == p
    };

    let biconditionals = specs
        .iter()
        .enumerate()
        .map(|(i, &(lc, lv, rc, rv, support))| CrownBiconditional {
            lhs_cell: lc,
            lhs_value: lv,
            rhs_cell: rc,
            rhs_value: rv,
            support,
            survivors: survivors[i],
            holds: bicond_ok[i],
            nonvacuous: lhs_true_seen[i] && lhs_false_seen[i],
        })
        .collect();

    CrownCertificate {
        free_cells,
        biconditionals,
        automorphism,
        automorphism_is_order_iso,
        joint_assignments: joint,
        total_completions: total,
        associative_completions: associative,
    }
}
