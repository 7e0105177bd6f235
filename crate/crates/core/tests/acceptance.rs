//! Acceptance suite: one test per criterion, each printing a pass line and
//! holding to its runtime budget. Worked values are pinned exactly; the
//! exhaustive suites reuse the named checks of the verification catalog.

use std::time::{Duration, Instant};

use qcg_core::crystal::{quasi_kashiwara_e, quasi_kashiwara_f};
use qcg_core::graph::{build_component, GraphKind};
use qcg_core::insertion::{hypoplactic_insert, schensted_insert};
use qcg_core::qsym::xi_map;
use qcg_core::quasi_array::{direct_transport, genqa, pickqrt, QuasiArray};
use qcg_core::skeleton::{component_shapes, cycle_rank, h_subgraph, skeleton, ComponentShape};
use qcg_core::tableau::{
    descent_composition, highest_weight_quasi_ribbon, minimal_parsing, QuasiRibbonTableau,
    YoungTableau,
};
use qcg_core::verify::{catalog, Check};
use qcg_core::word::{Composition, Partition, Word};

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn qrt(rows: &[&[u32]]) -> QuasiRibbonTableau {
    QuasiRibbonTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn yt(rows: &[&[u32]]) -> YoungTableau {
    YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn finish(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
    println!("{criterion}: PASS ({:.3}s)", elapsed.as_secs_f64());
}

/// Runs a named check from the verification catalog at the given bounds.
fn run_named_check(name: &str, max_weight: u32, max_rank: u32) {
    let checks = catalog();
    let check: &Check = checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("check {name} not in catalog"));
    let (params, outcome) = (check.run)(max_weight, max_rank);
    if let Err(reason) = outcome {
        panic!("{name} [{params}] failed: {reason}");
    }
}

#[test]
fn criterion_01_figure_reproduction() {
    let start = Instant::now();

    let hypo_211 = build_component(&word("211"), GraphKind::Hypo, 3).unwrap();
    assert_eq!(
        hypo_211.to_json(),
        "{\"kind\":\"hypo\",\"rank\":3,\
         \"vertices\":[\"211\",\"311\",\"312\",\"322\"],\
         \"edges\":[{\"src\":0,\"dst\":1,\"label\":2},{\"src\":1,\"dst\":2,\"label\":1},\
         {\"src\":2,\"dst\":3,\"label\":1}]}"
    );

    let hypo_212 = build_component(&word("212"), GraphKind::Hypo, 3).unwrap();
    assert_eq!(
        hypo_212.to_json(),
        "{\"kind\":\"hypo\",\"rank\":3,\
         \"vertices\":[\"212\",\"213\",\"313\",\"323\"],\
         \"edges\":[{\"src\":0,\"dst\":1,\"label\":2},{\"src\":1,\"dst\":2,\"label\":2},\
         {\"src\":2,\"dst\":3,\"label\":1}]}"
    );

    let plac_211 = build_component(&word("211"), GraphKind::Plac, 3).unwrap();
    assert_eq!(
        plac_211.to_json(),
        "{\"kind\":\"plac\",\"rank\":3,\
         \"vertices\":[\"211\",\"212\",\"311\",\"213\",\"312\",\"313\",\"322\",\"323\"],\
         \"edges\":[{\"src\":0,\"dst\":1,\"label\":1},{\"src\":0,\"dst\":2,\"label\":2},\
         {\"src\":1,\"dst\":3,\"label\":2},{\"src\":2,\"dst\":4,\"label\":1},\
         {\"src\":3,\"dst\":5,\"label\":2},{\"src\":4,\"dst\":6,\"label\":1},\
         {\"src\":5,\"dst\":7,\"label\":1},{\"src\":6,\"dst\":7,\"label\":2}]}"
    );

    // the crystal component is the union of the two quasi components plus the
    // two strict edges
    let strict: Vec<(String, String, u32)> = plac_211
        .edges()
        .iter()
        .map(|e| {
            (
                plac_211.vertices()[e.src].as_word().unwrap().to_string(),
                plac_211.vertices()[e.dst].as_word().unwrap().to_string(),
                e.label,
            )
        })
        .filter(|(src, _, label)| {
            let u: Word = src.parse().unwrap();
            quasi_kashiwara_f(&u, *label).is_none()
        })
        .collect();
    assert_eq!(
        strict,
        vec![
            ("211".to_string(), "212".to_string(), 1),
            ("322".to_string(), "323".to_string(), 2),
        ]
    );

    finish(
        "criterion 01 figure-reproduction",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_worked_example_battery() {
    let start = Instant::now();

    // insertion values
    let plac_tableau = yt(&[&[1, 1, 3], &[2]]);
    assert_eq!(schensted_insert(&word("2113")), plac_tableau);
    assert_eq!(schensted_insert(&word("1213")), plac_tableau);
    assert_eq!(schensted_insert(&word("2131")), yt(&[&[1, 1], &[2, 3]]));
    let hypo_tableau = qrt(&[&[1, 1], &[2, 3]]);
    assert_eq!(hypoplactic_insert(&word("2131")), hypo_tableau);
    assert_eq!(hypoplactic_insert(&word("1213")), hypo_tableau);

    // quasi-Kashiwara worked example: one action, three undefined
    let u = word("12211");
    assert_eq!(quasi_kashiwara_f(&u, 2), Some(word("12311")));
    assert_eq!(quasi_kashiwara_f(&u, 1), None);
    assert_eq!(quasi_kashiwara_e(&u, 1), None);
    assert_eq!(quasi_kashiwara_e(&u, 2), None);

    // quasi-array worked examples
    let q = QuasiArray::new(vec![2, 3, 3, 5, 8]).unwrap();
    assert_eq!(
        pickqrt(&q, &comp(&[4, 1])).unwrap(),
        qrt(&[&[2, 3, 3, 5], &[9]])
    );
    assert_eq!(
        pickqrt(&q, &comp(&[1, 2, 2])).unwrap(),
        qrt(&[&[2], &[4, 4], &[7, 10]])
    );
    assert_eq!(genqa(&qrt(&[&[2, 3, 3, 5], &[9]])), q);
    assert_eq!(q.tc(2).unwrap().first_row(), &[2, 2, 3, 5, 8]);
    assert_eq!(q.td(3).unwrap().first_row(), &[2, 3, 4, 5, 8]);
    assert_eq!(q.td(2), None);

    // direct shape transport
    let t = qrt(&[&[2], &[4, 4, 6, 9]]);
    assert_eq!(
        direct_transport(&t, &comp(&[2, 1, 1, 1])).unwrap(),
        qrt(&[&[2, 3], &[4], &[7], &[11]])
    );

    // minimal parsing and descent data of the running tableau
    let big = yt(&[&[1, 1, 3, 3, 6], &[2, 3, 4], &[4, 4], &[5, 6]]);
    assert_eq!(minimal_parsing(&big).ty(), &comp(&[2, 4, 3, 3]));
    let s = big.standardize();
    assert_eq!(s.descent_set(), vec![2, 6, 9]);
    assert_eq!(descent_composition(&s), comp(&[2, 4, 3, 3]));

    // the slide example
    let slid = xi_map(&highest_weight_quasi_ribbon(&comp(&[2, 3, 1, 4, 1]))).unwrap();
    assert_eq!(
        slid.rows(),
        &[
            vec![1, 1, 2, 4],
            vec![2, 2, 4],
            vec![3, 4],
            vec![4],
            vec![5]
        ]
    );

    finish(
        "criterion 02 worked-example-battery",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_03_theorem_isomorphism_suite() {
    let start = Instant::now();
    run_named_check("extraction-completion-isomorphism", 5, 4);
    run_named_check("shape-transport-isomorphism", 5, 4);
    finish(
        "criterion 03 theorem-isomorphism-suite",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_04_congruence_iff_component_isomorphism() {
    let start = Instant::now();
    run_named_check("congruence-component-isomorphism", 5, 3);
    finish(
        "criterion 04 congruence-component-isomorphism",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_05_gessel_and_character_identities() {
    let start = Instant::now();
    run_named_check("gessel-identity", 7, 5);
    run_named_check("character-identity", 6, 5);
    finish(
        "criterion 05 gessel-and-character-identities",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_06_schur_reorder() {
    let start = Instant::now();
    run_named_check("schur-reorder-witness", 8, 6);
    finish("criterion 06 schur-reorder", start, Duration::from_secs(60));
}

#[test]
fn criterion_07_xi_intertwining() {
    let start = Instant::now();
    run_named_check("xi-intertwining", 5, 5);
    finish(
        "criterion 07 xi-intertwining",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_08_skeleton_counterexample() {
    let start = Instant::now();

    let lambda = Partition::new(vec![3, 2, 2]).unwrap();
    let skel = skeleton(&lambda, None).unwrap();
    assert_eq!(skel.vertices().len(), 21);

    let h3 = h_subgraph(&skel, 3);
    assert_eq!(h3.vertices.len(), 3);
    let shapes3 = component_shapes(&h3);
    assert_eq!(shapes3.len(), 1);
    assert_eq!(shapes3[0].1, ComponentShape::Chain);

    let h5 = h_subgraph(&skel, 5);
    assert_eq!(h5.vertices.len(), 6);
    let shapes5 = component_shapes(&h5);
    let mut kinds: Vec<ComponentShape> = shapes5.iter().map(|(_, k)| *k).collect();
    kinds.sort_by_key(|k| format!("{k:?}"));
    assert_eq!(
        kinds,
        vec![ComponentShape::Chain, ComponentShape::Singleton]
    );
    let chain_len = shapes5
        .iter()
        .find(|(_, k)| *k == ComponentShape::Chain)
        .map(|(c, _)| c.len())
        .unwrap();
    assert_eq!(chain_len, 5);

    let h4 = h_subgraph(&skel, 4);
    assert_eq!(h4.vertices.len(), 12);
    assert!(qcg_core::skeleton::check_even_cycles(&skel, 4));
    assert!(
        component_shapes(&h4)
            .iter()
            .any(|(_, k)| *k == ComponentShape::CycleBearing),
        "level 4 must not be a disjoint union of chains and singletons"
    );
    assert_eq!(cycle_rank(&h4), 2, "two independent cycles");

    // identical skeleton at the minimal valid rank and one above
    let at_min = skeleton(&lambda, Some(5)).unwrap();
    let above = skeleton(&lambda, Some(6)).unwrap();
    assert_eq!(at_min, above);
    assert_eq!(at_min, skel);
    assert!(skeleton(&lambda, Some(4)).is_err());

    finish(
        "criterion 08 skeleton-counterexample",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_09_even_cycle_levels() {
    let start = Instant::now();
    run_named_check("skeleton-even-cycles", 6, 6);
    finish(
        "criterion 09 even-cycle-levels",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_10_geometry() {
    let start = Instant::now();
    run_named_check("row-component-count", 6, 6);
    run_named_check("coordinate-shift", 6, 6);
    finish("criterion 10 geometry", start, Duration::from_secs(10));
}

#[test]
fn criterion_11_vertical_symmetry() {
    let start = Instant::now();
    run_named_check("vertical-symmetry", 5, 4);
    finish(
        "criterion 11 vertical-symmetry",
        start,
        Duration::from_secs(60),
    );
}
