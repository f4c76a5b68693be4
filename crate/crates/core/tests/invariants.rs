//! Cross-module invariants checked over every small poset, plus randomized
//! property tests: the backtracking search agrees with a brute-force
//! oracle, the structural lemmas hold for every operation found, Green's
//! 𝔇 and ℛ coincide on right-regular bands, the definability formula pins
//! down the product exactly on the right-normal ones, and the two
//! normality deciders agree.

use posemigroup::band::{
    green_relations, posemigroup_lemma_report, quotient, semilattice_congruence, EquivRel,
};
use posemigroup::enumerate::enumerate_posets;
use posemigroup::normality::{
    beth_definability_check, is_normal, normality_by_characterization,
};
use posemigroup::search::{brute_force_count, find_admissible, initial_domains, propagate};
use posemigroup::{BandOp, Error, Poset, SearchConfig, SearchMode, Variety};

fn all_ops(p: &Poset, variety: Variety) -> Vec<BandOp> {
    find_admissible(p, SearchConfig { variety, mode: SearchMode::All })
        .unwrap()
        .ops
}

fn count(p: &Poset, variety: Variety) -> u64 {
    find_admissible(p, SearchConfig { variety, mode: SearchMode::Count })
        .unwrap()
        .count
}

#[test]
fn search_count_matches_brute_force_on_all_posets_up_to_5() {
    let mut compared = 0u32;
    for n in 0..=5 {
        for p in enumerate_posets(n, false).unwrap() {
            for variety in [Variety::Rrb, Variety::Rnb, Variety::Commutative] {
                match brute_force_count(&p, variety) {
                    Ok(brute) => {
                        assert_eq!(count(&p, variety), brute, "{} {:?}", p.bitstring(), variety);
                        compared += 1;
                    }
                    Err(Error::BudgetExceeded { .. }) => {} // oracle too slow; search only
                    Err(e) => panic!("unexpected error: {e:?}"),
                }
            }
        }
    }
    assert!(compared > 200, "oracle comparison barely ran: {compared}");
}

#[test]
fn variety_counts_are_nested() {
    for n in 0..=4 {
        for p in enumerate_posets(n, false).unwrap() {
            let rrb = count(&p, Variety::Rrb);
            let rnb = count(&p, Variety::Rnb);
            let comm = count(&p, Variety::Commutative);
            assert!(comm <= rnb && rnb <= rrb, "{}", p.bitstring());
        }
    }
}

#[test]
fn every_found_operation_satisfies_the_lemma_battery() {
    for n in 1..=4 {
        for p in enumerate_posets(n, false).unwrap() {
            for op in all_ops(&p, Variety::Rrb) {
                let report = posemigroup_lemma_report(&op, &p).unwrap();
                assert!(report.all_pass(), "{}: {:?}", p.bitstring(), report);
            }
        }
    }
}

#[test]
fn d_equals_r_on_right_regular_bands() {
    for n in 1..=4 {
        for p in enumerate_posets(n, false).unwrap() {
            for op in all_ops(&p, Variety::Rrb) {
                let (_, r, d) = green_relations(&op).unwrap();
                assert_eq!(r, d, "{}", p.bitstring());
            }
        }
    }
}

#[test]
fn underlying_order_round_trips() {
    for n in 1..=4 {
        for p in enumerate_posets(n, false).unwrap() {
            for op in all_ops(&p, Variety::Rrb) {
                assert_eq!(op.underlying_order().unwrap(), p);
            }
        }
    }
}

/// Visits every partition of `0..n` as restricted-growth label strings.
fn for_each_partition(n: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(labels: &mut Vec<usize>, i: usize, max_used: usize, visit: &mut dyn FnMut(&[usize])) {
        if i == labels.len() {
            visit(labels);
            return;
        }
        for v in 0..=max_used + 1 {
            labels[i] = v;
            rec(labels, i + 1, max_used.max(v), visit);
        }
    }
    let mut labels = vec![0usize; n];
    if n == 0 {
        visit(&labels);
    } else {
        rec(&mut labels, 1, 0, visit);
    }
}

#[test]
fn semilattice_congruence_is_the_least_one() {
    for n in 1..=4 {
        for p in enumerate_posets(n, false).unwrap() {
            for op in all_ops(&p, Variety::Rrb) {
                let theta = semilattice_congruence(&op).unwrap();
                let q = quotient(&op, &theta).unwrap();
                assert!(q.is_commutative() && q.check_band().is_ok());
                // least: contained in every congruence with commutative quotient
                for_each_partition(op.n(), &mut |labels| {
                    let rho = EquivRel::from_labels(labels);
                    if rho.check_congruence(&op).is_err() {
                        return;
                    }
                    if !quotient(&op, &rho).unwrap().is_commutative() {
                        return;
                    }
                    for x in 0..op.n() {
                        for y in 0..op.n() {
                            if theta.same(x, y) {
                                assert!(rho.same(x, y), "{}", p.bitstring());
                            }
                        }
                    }
                });
            }
        }
    }
}

#[test]
fn formula_defines_the_product_on_every_small_right_normal_band() {
    for n in 1..=4 {
        for p in enumerate_posets(n, false).unwrap() {
            for op in all_ops(&p, Variety::Rnb) {
                let report = beth_definability_check(&op).unwrap();
                assert!(report.holds, "{}: {:?}", p.bitstring(), report.failures);
            }
        }
    }
}

#[test]
fn normality_deciders_agree_on_all_posets_up_to_5() {
    for n in 0..=5 {
        for p in enumerate_posets(n, false).unwrap() {
            let by_search = is_normal(&p).unwrap();
            let by_characterization = !normality_by_characterization(&p).unwrap().is_empty();
            assert_eq!(by_search, by_characterization, "{}", p.bitstring());
        }
    }
}

#[test]
fn first_mode_returns_the_least_of_all() {
    for n in 1..=4 {
        for p in enumerate_posets(n, false).unwrap() {
            for variety in [Variety::Rrb, Variety::Rnb, Variety::Commutative] {
                let first = find_admissible(&p, SearchConfig { variety, mode: SearchMode::First })
                    .unwrap();
                let all = all_ops(&p, variety);
                assert_eq!(first.found(), all.first(), "{}", p.bitstring());
                let mut sorted = all.clone();
                sorted.sort();
                assert_eq!(all, sorted);
            }
        }
    }
}

mod random {
    use super::*;
    use proptest::prelude::*;

    fn arb_poset() -> impl Strategy<Value = Poset> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..12)
                .prop_filter_map("acyclic", move |pairs| {
                    let strict: Vec<(usize, usize)> =
                        pairs.into_iter().filter(|&(a, b)| a != b).collect();
                    Poset::from_pairs(n, &strict).ok()
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn propagation_is_idempotent_and_narrowing(p in arb_poset()) {
            for variety in [Variety::Rrb, Variety::Rnb, Variety::Commutative] {
                let t0 = initial_domains(&p, variety);
                let t1 = propagate(&t0, variety);
                let t2 = propagate(&t1, variety);
                for x in 0..p.n() {
                    for y in 0..p.n() {
                        let d0 = t0.domain(x, y);
                        let d1 = t1.domain(x, y);
                        prop_assert!(d1.iter().all(|v| d0.contains(v)));
                        prop_assert_eq!(&d1, &t2.domain(x, y));
                    }
                }
            }
        }

        #[test]
        fn canonical_form_is_an_isomorphic_canonical_representative(p in arb_poset()) {
            let c = p.canonical_form();
            prop_assert!(c.is_canonical());
            prop_assert!(posemigroup::poset::are_isomorphic(&p, &c).is_some());
        }

        #[test]
        fn found_operations_are_admissible_bands(p in arb_poset()) {
            for variety in [Variety::Rrb, Variety::Rnb, Variety::Commutative] {
                let res = find_admissible(&p, SearchConfig { variety, mode: SearchMode::First })
                    .unwrap();
                if let Some(op) = res.found() {
                    prop_assert!(op.check_band().is_ok());
                    prop_assert!(op.is_rrb());
                    prop_assert!(op.is_admissible(&p));
                    if variety != Variety::Rrb {
                        prop_assert!(op.is_rnb());
                    }
                    if variety == Variety::Commutative {
                        prop_assert!(op.is_commutative());
                    }
                }
            }
        }

        #[test]
        fn relabeling_preserves_admissibility(p in arb_poset()) {
            let res = find_admissible(
                &p,
                SearchConfig { variety: Variety::Rrb, mode: SearchMode::First },
            )
            .unwrap();
            if let Some(op) = res.found() {
                let n = p.n();
                let perm: Vec<usize> = (0..n).rev().collect();
                let q = p.relabel(&perm);
                let op2 = op.relabel(&perm);
                prop_assert!(op2.is_rrb());
                prop_assert!(op2.is_admissible(&q));
            }
        }
    }
}
