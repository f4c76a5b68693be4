//! Deciding whether a poset carries an admissible right-normal operation,
//! two ways: by direct search, and by the structural characterization
//! through order homomorphisms onto meet-semilattices. Also the first-order
//! definability check for the product of right-normal bands.

use alloc::vec;
use alloc::vec::Vec;

use crate::band::{green_relations, BandOp, EquivRel};
use crate::error::{Error, Result};
use crate::poset::{Poset, PosetMap};
use crate::search::{find_admissible, SearchConfig, SearchMode, Variety};

/// Hard ceiling for the characterization: it ranges over all partitions.
pub const MAX_CHARACTERIZATION_N: usize = 7;

/// Does the poset admit an admissible right-normal operation? Decided by
/// backtracking search for a single witness.
pub fn is_normal(p: &Poset) -> Result<bool> {
    let result = find_admissible(
        p,
        SearchConfig { variety: Variety::Rnb, mode: SearchMode::First },
    )?;
    Ok(result.found().is_some())
}

/// Quotient of a poset by an equivalence relation: classes ordered by the
/// transitive closure of the projected relation. Fails if the closure is
/// not antisymmetric. Returns the quotient together with the projection.
pub fn quotient_map(p: &Poset, rel: &EquivRel) -> Result<(Poset, PosetMap)> {
    if rel.n() != p.n() {
        return Err(Error::DimensionMismatch { left: rel.n(), right: p.n() });
    }
    let k = rel.num_classes();
    let mut leq = vec![false; k * k];
    for a in 0..p.n() {
        for b in 0..p.n() {
            if p.leq(a, b) {
                leq[rel.class_of(a) * k + rel.class_of(b)] = true;
            }
        }
    }
    for m in 0..k {
        for a in 0..k {
            for b in 0..k {
                if leq[a * k + m] && leq[m * k + b] {
                    leq[a * k + b] = true;
                }
            }
        }
    }
    let q = Poset::from_relation(k, &leq)?;
    let labels: Vec<usize> = (0..p.n()).map(|x| rel.class_of(x)).collect();
    let f = PosetMap::new(p.clone(), q.clone(), labels)?;
    Ok((q, f))
}

/// Is `f : m↓ → f(m)↓` an order isomorphism?
fn restriction_is_iso(f: &PosetMap, m: usize) -> Result<bool> {
    let p = f.dom();
    let s = f.cod();
    let dset = p.down_set(m)?;
    let iset = s.down_set(f.apply(m))?;
    Ok(dset.len() == iset.len()
        && dset.iter().all(|&a| iset.contains(&f.apply(a)))
        && dset
            .iter()
            .all(|&a| dset.iter().all(|&b| p.leq(a, b) == s.leq(f.apply(a), f.apply(b))))
        && dset
            .iter()
            .all(|&a| dset.iter().filter(|&&b| f.apply(b) == f.apply(a)).count() == 1))
}

/// Visits every partition of `0..n` once, as restricted-growth label
/// strings, so each partition appears with a single canonical labeling.
fn for_each_partition(n: usize, visit: &mut dyn FnMut(&[usize])) {
    let mut labels = vec![0usize; n];
    fn rec(labels: &mut Vec<usize>, i: usize, max_used: usize, visit: &mut dyn FnMut(&[usize])) {
        let n = labels.len();
        if i == n {
            visit(labels);
            return;
        }
        for v in 0..=max_used + 1 {
            labels[i] = v;
            rec(labels, i + 1, core::cmp::max(max_used, v), visit);
        }
    }
    if n == 0 {
        visit(&labels);
        return;
    }
    rec(&mut labels, 1, 0, visit);
}

/// Decides normality by the structural characterization: the poset is
/// normal exactly when some quotient by an antichain partition is a
/// meet-semilattice and every restriction to a principal down-set of a
/// maximal element is an order isomorphism onto a principal down-set of
/// the quotient. (Checking maximals suffices: every other restriction is a
/// restriction of one of those.)
///
/// Returns all witnessing partitions.
pub fn normality_by_characterization(p: &Poset) -> Result<Vec<EquivRel>> {
    if p.n() > MAX_CHARACTERIZATION_N {
        return Err(Error::GuardExceeded {
            what: "normality characterization",
            limit: MAX_CHARACTERIZATION_N,
            got: p.n(),
        });
    }
    let mut witnesses = Vec::new();
    let mut failure: Option<Error> = None;
    for_each_partition(p.n(), &mut |labels| {
        if failure.is_some() {
            return;
        }
        let rel = EquivRel::from_labels(labels);
        if !rel.classes_are_antichains(p) {
            return;
        }
        let (s, f) = match quotient_map(p, &rel) {
            Ok(pair) => pair,
            Err(_) => return, // projected order not antisymmetric
        };
        let is_semilattice = s.is_meet_semilattice();
        if !is_semilattice {
            return;
        }
        for m in p.maximals() {
            match restriction_is_iso(&f, m) {
                Ok(true) => {}
                Ok(false) => return,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            }
        }
        witnesses.push(rel);
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(witnesses),
    }
}

/// `ψ(x, y)`: some element below `y` is related to `x` by the least
/// semilattice congruence (Green's relation 𝔇) of the band.
pub fn psi_eval(op: &BandOp, x: usize, y: usize) -> Result<bool> {
    let p = op.underlying_order()?;
    let (_, _, d) = green_relations(op)?;
    if x >= op.n() || y >= op.n() {
        return Err(Error::IndexOutOfRange { index: core::cmp::max(x, y), n: op.n() });
    }
    Ok((0..op.n()).any(|c| p.leq(c, y) && d.same(x, c)))
}

/// `φ(x, y, z)`: `z ≤ y`, `ψ(z, x)`, and every `d` with `ψ(d, x)` and
/// `ψ(d, y)` also has `ψ(d, z)`. On right-normal bands this pins down
/// `z = x·y` using only the order and 𝔇.
pub fn phi_eval(op: &BandOp, x: usize, y: usize, z: usize) -> Result<bool> {
    let p = op.underlying_order()?;
    let (_, _, dd) = green_relations(op)?;
    if x >= op.n() || y >= op.n() || z >= op.n() {
        return Err(Error::IndexOutOfRange {
            index: core::cmp::max(core::cmp::max(x, y), z),
            n: op.n(),
        });
    }
    let psi = |a: usize, b: usize| (0..op.n()).any(|c| p.leq(c, b) && dd.same(a, c));
    Ok(p.leq(z, y)
        && psi(z, x)
        && (0..op.n()).all(|d| !(psi(d, x) && psi(d, y)) || psi(d, z)))
}

/// Outcome of testing whether the formula `φ` implicitly defines the
/// product: for each pair the set of satisfying `z`, wherever that set is
/// not exactly the singleton of the actual product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BethReport {
    pub holds: bool,
    /// `(x, y, all z with φ(x, y, z))` for each failing pair, row-major.
    pub failures: Vec<(usize, usize, Vec<usize>)>,
}

/// Evaluates `φ` on every pair of a band with a well-defined underlying
/// order and compares the satisfying set against the actual product.
pub fn beth_definability_check(op: &BandOp) -> Result<BethReport> {
    let p = op.underlying_order()?;
    let (_, _, dd) = green_relations(op)?;
    let n = op.n();
    let psi = |a: usize, b: usize| (0..n).any(|c| p.leq(c, b) && dd.same(a, c));
    let phi = |x: usize, y: usize, z: usize| {
        p.leq(z, y) && psi(z, x) && (0..n).all(|d| !(psi(d, x) && psi(d, y)) || psi(d, z))
    };
    let mut failures = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let set: Vec<usize> = (0..n).filter(|&z| phi(x, y, z)).collect();
            if set != [op.apply(x, y)] {
                failures.push((x, y, set));
            }
        }
    }
    Ok(BethReport { holds: failures.is_empty(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::normal_from_map;
    use crate::fixtures;

    fn golden(name: &str) -> BandOp {
        let (pname, rows) = fixtures::named_table(name).unwrap();
        let p = fixtures::named_poset(pname).unwrap();
        BandOp::new(p.n(), rows).unwrap()
    }

    #[test]
    fn is_normal_on_the_fixture_panel() {
        for (name, want) in [
            ("fig-normal", true),
            ("fig-multiple", true),
            ("fig-non-normal", false),
            ("tulip", false),
            ("hummingbird", false),
            ("crown", false),
            ("square2", true),
            ("puppy", false),
            ("a2-n", false),
            ("a2-v", true),
        ] {
            let p = fixtures::named_poset(name).unwrap();
            assert_eq!(is_normal(&p).unwrap(), want, "{name}");
        }
    }

    #[test]
    fn characterization_agrees_with_search_on_fixtures() {
        for name in [
            "fig-normal",
            "fig-multiple",
            "fig-non-normal",
            "hummingbird",
            "crown",
            "square2",
            "puppy",
            "a2-n",
            "a2-v",
        ] {
            let p = fixtures::named_poset(name).unwrap();
            let witnesses = normality_by_characterization(&p).unwrap();
            assert_eq!(!witnesses.is_empty(), is_normal(&p).unwrap(), "{name}");
        }
    }

    #[test]
    fn characterization_guard() {
        let p = fixtures::named_poset("tulip").unwrap();
        assert!(matches!(
            normality_by_characterization(&p),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn identifying_the_two_maximals_witnesses_normality() {
        let p = fixtures::named_poset("fig-normal").unwrap();
        let witnesses = normality_by_characterization(&p).unwrap();
        let target = EquivRel::from_classes(p.n(), &[&[0, 1]]);
        assert!(witnesses.contains(&target));
        // the poset itself is not a meet-semilattice, so the identity
        // partition is not among the witnesses
        assert!(!witnesses.contains(&EquivRel::identity(p.n())));
    }

    #[test]
    fn every_witness_transports_to_an_operation() {
        for name in ["fig-normal", "fig-multiple", "square2", "a2-v"] {
            let p = fixtures::named_poset(name).unwrap();
            for rel in normality_by_characterization(&p).unwrap() {
                let (_, f) = quotient_map(&p, &rel).unwrap();
                let op = normal_from_map(&f).unwrap();
                assert!(op.is_rnb());
                assert!(op.is_admissible(&p));
            }
        }
    }

    #[test]
    fn the_multi_colorable_fixture_has_at_least_three_witnesses() {
        let p = fixtures::named_poset("fig-multiple").unwrap();
        let witnesses = normality_by_characterization(&p).unwrap();
        assert!(witnesses.len() >= 3, "got {}", witnesses.len());
        assert!(witnesses.contains(&EquivRel::identity(p.n())));
        assert!(witnesses.contains(&EquivRel::from_classes(p.n(), &[&[2, 3]])));
        assert!(witnesses.contains(&EquivRel::from_classes(p.n(), &[&[0, 1], &[2, 3]])));
    }

    #[test]
    fn quotient_map_can_fail_on_non_antisymmetric_projections() {
        // merging top and bottom of a 3-chain makes the closure cyclic
        let c = crate::poset::Poset::chain(3);
        let rel = EquivRel::from_classes(3, &[&[0, 2]]);
        assert!(quotient_map(&c, &rel).is_err());
    }

    #[test]
    fn formula_defines_the_product_on_right_normal_tables() {
        for name in ["table-normal", "table-multi-1", "table-multi-2", "table-multi-3"] {
            let op = golden(name);
            assert!(op.is_rnb());
            let report = beth_definability_check(&op).unwrap();
            assert!(report.holds, "{name}: {:?}", report.failures);
        }
    }

    #[test]
    fn phi_matches_the_product_pointwise_on_a_normal_table() {
        let op = golden("table-normal");
        for x in 0..op.n() {
            for y in 0..op.n() {
                for z in 0..op.n() {
                    assert_eq!(phi_eval(&op, x, y, z).unwrap(), op.apply(x, y) == z);
                }
            }
        }
    }

    #[test]
    fn formula_fails_on_the_non_normal_associative_poset() {
        let p = fixtures::named_poset("fig-non-normal").unwrap();
        let found = crate::search::find_admissible(
            &p,
            SearchConfig { variety: Variety::Rrb, mode: SearchMode::All },
        )
        .unwrap();
        assert_eq!(found.ops.len(), 2);
        for op in &found.ops {
            let report = beth_definability_check(op).unwrap();
            assert!(!report.holds);
            let (x, y, set) = &report.failures[0];
            assert_eq!((*x, *y), (0, 1));
            assert_eq!(set, &alloc::vec![2, 4]);
        }
    }

    #[test]
    fn psi_is_reflexive_down_to_congruence_classes() {
        let op = golden("table-normal");
        for x in 0..op.n() {
            assert!(psi_eval(&op, x, x).unwrap());
        }
    }
}
