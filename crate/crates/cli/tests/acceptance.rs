//! End-to-end acceptance checks, one test per criterion. Each prints a
//! single pass line on success (run with `--nocapture` to see them);
//! a failing criterion fails its test.

use std::process::Command;

use posemigroup::band::{
    band_isomorphic, posemigroup_lemma_report, semilattice_congruence, EquivRel,
};
use posemigroup::construct::{
    foliated_tree_op, normal_from_map, preimage_case_report, preimage_op,
};
use posemigroup::enumerate::enumerate_posets;
use posemigroup::normality::{
    beth_definability_check, is_normal, normality_by_characterization, quotient_map,
};
use posemigroup::search::{brute_force_count, crown_certificate, find_admissible};
use posemigroup::{fixtures, BandOp, Error, Poset, PosetMap, SearchConfig, SearchMode, Variety};
use posemigroup_cli::format::{emit_band, parse_band};

const BIN: &str = env!("CARGO_BIN_EXE_posemigroup");

fn fixture_path(file: &str) -> String {
    format!("{}/fixtures/{}", env!("CARGO_MANIFEST_DIR"), file)
}

fn search(p: &Poset, variety: Variety, mode: SearchMode) -> posemigroup::search::SearchResult {
    find_admissible(p, SearchConfig { variety, mode }).unwrap()
}

fn pass(n: u32, what: &str) {
    println!("criterion {n:2}: PASS — {what}");
}

#[test]
fn criterion_01_hummingbird_is_not_associative() {
    let out = Command::new(BIN)
        .args(["check", &fixture_path("hummingbird.poset")])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("NO\n"), "{stdout}");
    let p = fixtures::named_poset("hummingbird").unwrap();
    assert_eq!(brute_force_count(&p, Variety::Rrb).unwrap(), 0);
    pass(1, "hummingbird: check says NO and the brute-force count is 0");
}

#[test]
fn criterion_02_crown_impossibility_certificate() {
    let p = fixtures::named_poset("crown").unwrap();
    assert!(search(&p, Variety::Rrb, SearchMode::First).found().is_none());
    let cert = crown_certificate();
    assert_eq!(cert.free_cells.len(), 9);
    assert_eq!(cert.total_completions, 512);
    assert_eq!(cert.associative_completions, 0);
    assert_eq!(cert.biconditionals.len(), 3);
    for b in &cert.biconditionals {
        assert!(b.holds && b.nonvacuous, "{b:?}");
    }
    assert!(cert.establishes_impossibility());
    pass(2, "3-crown: no operation exists and the certificate's 3 biconditionals hold");
}

#[test]
fn criterion_03_even_crowns_are_associative() {
    for k in [2usize, 4] {
        let p = fixtures::crown(k).unwrap();
        let res = search(&p, Variety::Rrb, SearchMode::First);
        let op = res.found().expect("even crown admits an operation");
        assert!(op.is_rrb() && op.is_admissible(&p));
    }
    assert!(search(&fixtures::crown(3).unwrap(), Variety::Rrb, SearchMode::First)
        .found()
        .is_none());
    pass(3, "crown(2) and crown(4) have witnesses; crown(3) has none");
}

#[test]
fn criterion_04_four_element_census() {
    let records = posemigroup_cli::census::run_census(4).unwrap();
    let four: Vec<_> = records.iter().filter(|r| r.n == 4).collect();
    assert_eq!(four.len(), 16);
    assert!(records.iter().all(|r| r.rrb >= 1));
    // the two highlighted 4-element tables verify bit-exactly
    for (table, variety) in [("table-a2-v", Variety::Rnb), ("table-a2-n", Variety::Rrb)] {
        let (pname, rows) = fixtures::named_table(table).unwrap();
        let p = fixtures::named_poset(pname).unwrap();
        let op = BandOp::new(p.n(), rows).unwrap();
        assert!(op.is_admissible(&p));
        assert!(op.is_rrb());
        if variety == Variety::Rnb {
            assert!(op.is_rnb());
        }
        let golden = std::fs::read_to_string(fixture_path(&format!("{table}.band"))).unwrap();
        assert_eq!(emit_band(&op), golden);
    }
    // the N-shaped poset admits exactly one operation, the highlighted one
    let p = fixtures::named_poset("a2-n").unwrap();
    let all = search(&p, Variety::Rrb, SearchMode::All).ops;
    assert_eq!(all.len(), 1);
    let (_, rows) = fixtures::named_table("table-a2-n").unwrap();
    assert_eq!(all[0], BandOp::new(p.n(), rows).unwrap());
    pass(4, "all 16 four-element posets are associative; highlighted tables are bit-exact");
}

#[test]
fn criterion_05_square_of_the_two_chain() {
    let p = fixtures::named_poset("square2").unwrap();
    assert_eq!(search(&p, Variety::Rrb, SearchMode::Count).count, 2);
    pass(5, "the square of the 2-chain admits exactly two operations");
}

#[test]
fn criterion_06_puppy_and_tulip() {
    let p = fixtures::named_poset("puppy").unwrap();
    let all = search(&p, Variety::Rrb, SearchMode::All).ops;
    assert_eq!(all.len(), 1);
    let (a, b) = (fixtures::PUPPY_A, fixtures::PUPPY_B);
    assert_eq!(all[0].apply(a, b), b);
    assert_eq!(all[0].apply(b, a), a);
    let tulip = fixtures::named_poset("tulip").unwrap();
    assert!(search(&tulip, Variety::Rrb, SearchMode::Count).count >= 1);
    assert_eq!(search(&tulip, Variety::Rnb, SearchMode::Count).count, 0);
    assert!(tulip.is_relative_meet_semilattice());
    pass(6, "puppy has a unique operation with a·b=b, b·a=a; tulip is associative, not normal");
}

#[test]
fn criterion_07_two_non_isomorphic_operations_same_congruence() {
    let p = fixtures::named_poset("fig-non-normal").unwrap();
    let all = search(&p, Variety::Rrb, SearchMode::All).ops;
    assert_eq!(all.len(), 2);
    assert!(band_isomorphic(&all[0], &all[1]).is_none());
    let d0 = semilattice_congruence(&all[0]).unwrap();
    let d1 = semilattice_congruence(&all[1]).unwrap();
    assert_eq!(d0, d1);
    pass(7, "the non-normal fixture has exactly 2 non-isomorphic ops sharing one congruence");
}

#[test]
fn criterion_08_golden_tables_and_their_reconstructions() {
    let claims = [
        ("table-normal", true),
        ("table-multi-1", true),
        ("table-multi-2", true),
        ("table-multi-3", true),
        ("table-a2-v", true),
        ("table-a2-n", false),
    ];
    for (name, rnb) in claims {
        let text = std::fs::read_to_string(fixture_path(&format!("{name}.band"))).unwrap();
        let op = parse_band(&text).unwrap();
        let (pname, rows) = fixtures::named_table(name).unwrap();
        assert_eq!(op, BandOp::new(op.n(), rows).unwrap());
        let p = fixtures::named_poset(pname).unwrap();
        assert!(op.is_rrb() && op.is_admissible(&p), "{name}");
        assert_eq!(op.is_rnb(), rnb, "{name}");
    }
    // transported reconstructions reproduce four of them exactly
    let rebuild = |poset: &str, classes: &[&[usize]]| -> BandOp {
        let p = fixtures::named_poset(poset).unwrap();
        let rel = EquivRel::from_classes(p.n(), classes);
        let (_, f) = quotient_map(&p, &rel).unwrap();
        normal_from_map(&f).unwrap()
    };
    let expect = |op: BandOp, table: &str| {
        let (_, rows) = fixtures::named_table(table).unwrap();
        assert_eq!(op.table(), &rows[..], "{table}");
    };
    expect(rebuild("fig-normal", &[&[0, 1]]), "table-normal");
    expect(rebuild("fig-multiple", &[]), "table-multi-1");
    expect(rebuild("fig-multiple", &[&[2, 3]]), "table-multi-2");
    expect(rebuild("fig-multiple", &[&[0, 1], &[2, 3]]), "table-multi-3");
    pass(8, "all six golden tables verify; four are rebuilt exactly from quotient maps");
}

#[test]
fn criterion_09_foliated_tree_products_and_lemma_battery() {
    let t = fixtures::named_poset("foliated13").unwrap();
    let (_, op) = foliated_tree_op(&t, &[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(op.apply(fixtures::FOLIATED_X, fixtures::FOLIATED_Y), fixtures::FOLIATED_B);
    assert_eq!(op.apply(fixtures::FOLIATED_Y, fixtures::FOLIATED_X), fixtures::FOLIATED_A);
    let report = posemigroup_lemma_report(&op, &t).unwrap();
    assert!(report.all_pass(), "{report:?}");
    pass(9, "foliated tree: x·y and y·x land on the assigned minimals; all lemma clauses hold");
}

#[test]
fn criterion_10_preimage_operation_and_case_audit() {
    let p = fixtures::named_poset("homo-p").unwrap();
    let t = fixtures::named_poset("homo-t").unwrap();
    let f = PosetMap::new(p.clone(), t.clone(), fixtures::HOMO_MAP.to_vec()).unwrap();
    let fiber_ops: Vec<BandOp> = (0..t.n())
        .map(|a| {
            let induced = p.induced(&f.fiber(a));
            search(&induced, Variety::Rrb, SearchMode::First).found().unwrap().clone()
        })
        .collect();
    let res = preimage_op(&f, &fiber_ops, &[3, 4, 5]).unwrap();
    assert!(res.op.is_rrb() && res.op.is_admissible(&p));
    let report = preimage_case_report(&f, &fiber_ops, &res);
    assert!(report.all_pass(), "{report:?}");
    assert_eq!(
        report.cases.iter().map(|c| c.triples).sum::<u64>(),
        (p.n() as u64).pow(3)
    );
    pass(10, "preimage operation verified; the case audit covers and passes all triples");
}

#[test]
fn criterion_11_oracle_equivalence_property_suite() {
    for n in 0..=5 {
        for p in enumerate_posets(n, false).unwrap() {
            let mut counts = Vec::new();
            for variety in [Variety::Rrb, Variety::Rnb, Variety::Commutative] {
                let count = search(&p, variety, SearchMode::Count).count;
                if let Ok(brute) = brute_force_count(&p, variety) {
                    assert_eq!(count, brute, "{} {:?}", p.bitstring(), variety);
                }
                counts.push(count);
            }
            assert!(counts[2] <= counts[1] && counts[1] <= counts[0], "{}", p.bitstring());
            let normal = is_normal(&p).unwrap();
            assert_eq!(
                normal,
                !normality_by_characterization(&p).unwrap().is_empty(),
                "{}",
                p.bitstring()
            );
            for op in search(&p, Variety::Rrb, SearchMode::All).ops {
                let (_, r, d) = posemigroup::band::green_relations(&op).unwrap();
                assert_eq!(r, d);
                assert!(posemigroup_lemma_report(&op, &p).unwrap().all_pass());
            }
            for op in search(&p, Variety::Rnb, SearchMode::All).ops {
                assert!(beth_definability_check(&op).unwrap().holds);
            }
        }
    }
    pass(11, "search = oracle, nesting, normality agreement, D=R, lemmas, and definability hold up to n=5");
}

#[test]
fn criterion_12_transversal_from_a_height_three_tree() {
    // three disjoint sets {0,1}, {2}, {3,4} as leaves under set nodes
    // 5, 6, 7, all under the root 8
    let sets: [&[usize]; 3] = [&[0, 1], &[2], &[3, 4]];
    let tree = Poset::from_pairs(
        9,
        &[(0, 5), (1, 5), (2, 6), (3, 7), (4, 7), (5, 8), (6, 8), (7, 8)],
    )
    .unwrap();
    assert!(tree.is_foliated_tree());
    let minimal_order = tree.minimals();
    let (_, op) = foliated_tree_op(&tree, &minimal_order).unwrap();
    let m = minimal_order[0];
    let transversal: Vec<usize> = [5usize, 6, 7].iter().map(|&b| op.apply(m, b)).collect();
    for (choice, set) in transversal.iter().zip(sets) {
        assert!(set.contains(choice), "{choice} not in {set:?}");
    }
    let mut distinct = transversal.clone();
    distinct.sort_unstable();
    distinct.dedup();
    assert_eq!(distinct.len(), sets.len());
    pass(12, "the map B ↦ m·B picks one element from each disjoint set");
}

#[test]
fn internal_breach_paths_are_guarded() {
    // not an acceptance criterion, but pins the exit-code contract the
    // criteria rely on: guard violations are input errors, not breaches
    assert!(matches!(
        brute_force_count(&fixtures::named_poset("tulip").unwrap(), Variety::Rrb),
        Err(Error::BudgetExceeded { .. })
    ));
}
