//! One-shot verification battery: every module-level property, bounded by a
//! maximum weight and rank, reported one line per check.
//!
//! Checks run in parallel; the report order is the fixed catalog order, so
//! output is identical across thread counts.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::crystal::{
    is_strict_action, kashiwara_e, kashiwara_f, quasi_kashiwara_e, quasi_kashiwara_f, rho,
};
use crate::error::Error;
use crate::graph::{
    build_component, build_delta, labelled_isomorphism, unlabelled_isomorphism, GraphKind,
    LabeledDigraph, UnlabelledOutcome,
};
use crate::insertion::{
    hypoplactic_equivalent, hypoplactic_insert, plactic_equivalent, schensted_insert,
};
use crate::qsym::{
    fundamental_poly, fundamental_poly_via_ribbons, schur_poly, schur_to_fundamental,
    verify_schur_reorder, xi_intertwines, xi_map, ExactPolynomial,
};
use crate::quasi_array::{direct_transport, enumerate_in_rank, genqa, pickqrt};
use crate::skeleton::{
    check_even_cycles, component_shapes, cycle_rank, h_subgraph, parity, skeleton, ComponentShape,
};
use crate::tableau::{
    descent_composition, enumerate_syt, highest_weight_quasi_ribbon, hook_length_count,
    minimal_parsing, quasi_ribbons_of_shape, young_tableaux_of_shape, QuasiRibbonTableau,
    YoungTableau,
};
use crate::word::{
    conjugate, evaluation, refinements, schutzenberger, sort_to_partition, words_up_to_length,
    Composition, Partition, Word,
};
use crate::Result;

type CheckOutcome = (String, std::result::Result<(), String>);

/// A named check; the function receives the requested bounds and returns the
/// effective parameters it ran with plus a pass/fail outcome.
pub struct Check {
    pub name: &'static str,
    pub run: fn(u32, u32) -> CheckOutcome,
}

/// Result of one check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub params: String,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

/// Results of the whole battery, in catalog order.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// One line per check plus a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {} [{}] {:.3}s\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.params,
                c.elapsed.as_secs_f64()
            ));
            if let Some(reason) = &c.counterexample {
                out.push_str(&format!("     counterexample: {reason}\n"));
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        if failed == 0 {
            out.push_str(&format!("overall: PASS ({} checks)\n", self.checks.len()));
        } else {
            out.push_str(&format!(
                "overall: FAIL ({failed} of {} checks)\n",
                self.checks.len()
            ));
        }
        out
    }
}

/// Runs a custom catalog in parallel, reporting in catalog order.
pub fn run_checks(catalog: &[Check], max_weight: u32, max_rank: u32) -> VerificationReport {
    let checks: Vec<CheckResult> = catalog
        .par_iter()
        .map(|check| {
            let start = Instant::now();
            let (params, outcome) = (check.run)(max_weight, max_rank);
            CheckResult {
                name: check.name.to_string(),
                params,
                passed: outcome.is_ok(),
                counterexample: outcome.err(),
                elapsed: start.elapsed(),
            }
        })
        .collect();
    VerificationReport { checks }
}

/// Runs the standard catalog within guard-railed bounds.
pub fn run_verify(max_weight: u32, max_rank: u32) -> Result<VerificationReport> {
    if !(1..=8).contains(&max_weight) {
        return Err(Error::Parameter("max weight must lie in 1..=8".into()));
    }
    if !(1..=6).contains(&max_rank) {
        return Err(Error::Parameter("max rank must lie in 1..=6".into()));
    }
    Ok(run_checks(&catalog(), max_weight, max_rank))
}

/// The standard catalog, in report order.
pub fn catalog() -> Vec<Check> {
    vec![
        Check {
            name: "evaluation-concatenation",
            run: evaluation_concatenation,
        },
        Check {
            name: "schutzenberger-involution",
            run: schutzenberger_involution,
        },
        Check {
            name: "conjugate-reordering",
            run: conjugate_reordering,
        },
        Check {
            name: "refinement-count",
            run: refinement_count,
        },
        Check {
            name: "standardization-order",
            run: standardization_order,
        },
        Check {
            name: "minimal-parsing-bands",
            run: minimal_parsing_bands,
        },
        Check {
            name: "syt-hook-count",
            run: syt_hook_count,
        },
        Check {
            name: "schensted-reading-identity",
            run: schensted_reading_identity,
        },
        Check {
            name: "hypoplactic-reading-identity",
            run: hypoplactic_reading_identity,
        },
        Check {
            name: "hypoplactic-incremental-oracle",
            run: hypoplactic_incremental_oracle,
        },
        Check {
            name: "congruence-evaluation",
            run: congruence_evaluation,
        },
        Check {
            name: "bracket-cancellation-oracle",
            run: bracket_cancellation_oracle,
        },
        Check {
            name: "quasi-action-is-kashiwara-action",
            run: quasi_action_is_kashiwara_action,
        },
        Check {
            name: "operator-mutual-inverses",
            run: operator_mutual_inverses,
        },
        Check {
            name: "operator-evaluation-shift",
            run: operator_evaluation_shift,
        },
        Check {
            name: "parsing-strictness",
            run: parsing_strictness,
        },
        Check {
            name: "schutzenberger-conjugation",
            run: schutzenberger_conjugation,
        },
        Check {
            name: "diagonal-operator-inverses",
            run: diagonal_operator_inverses,
        },
        Check {
            name: "diagonal-quasi-kashiwara-link",
            run: diagonal_quasi_kashiwara_link,
        },
        Check {
            name: "transport-composite",
            run: transport_composite,
        },
        Check {
            name: "quasi-crystal-inside-crystal",
            run: quasi_crystal_inside_crystal,
        },
        Check {
            name: "extraction-completion-isomorphism",
            run: extraction_completion_isomorphism,
        },
        Check {
            name: "shape-transport-isomorphism",
            run: shape_transport_isomorphism,
        },
        Check {
            name: "vertical-symmetry",
            run: vertical_symmetry,
        },
        Check {
            name: "isolated-vertices",
            run: isolated_vertices,
        },
        Check {
            name: "row-component-count",
            run: row_component_count,
        },
        Check {
            name: "coordinate-shift",
            run: coordinate_shift,
        },
        Check {
            name: "congruence-component-isomorphism",
            run: congruence_component_isomorphism,
        },
        Check {
            name: "gessel-identity",
            run: gessel_identity,
        },
        Check {
            name: "character-identity",
            run: character_identity,
        },
        Check {
            name: "fundamental-two-routes",
            run: fundamental_two_routes,
        },
        Check {
            name: "schur-reorder-witness",
            run: schur_reorder_witness,
        },
        Check {
            name: "xi-reinsertion",
            run: xi_reinsertion,
        },
        Check {
            name: "xi-intertwining",
            run: xi_intertwining_check,
        },
        Check {
            name: "skeleton-rank-independence",
            run: skeleton_rank_independence,
        },
        Check {
            name: "skeleton-even-cycles",
            run: skeleton_even_cycles,
        },
        Check {
            name: "skeleton-counterexample",
            run: skeleton_counterexample,
        },
    ]
}

fn ok(params: String) -> CheckOutcome {
    (params, Ok(()))
}

fn fail(params: String, reason: String) -> CheckOutcome {
    (params, Err(reason))
}

fn evaluation_concatenation(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(6) as usize;
    let rank = r.min(4);
    let params = format!("length <= {len}, rank <= {rank}");
    for t in words_up_to_length(len, rank) {
        if evaluation(&t).weight() as usize != t.len() {
            return fail(
                params,
                format!("evaluation weight of {t} differs from its length"),
            );
        }
        for cut in 0..=t.len() {
            let u = Word::new(t.letters()[..cut].to_vec()).expect("valid letters");
            let v = Word::new(t.letters()[cut..].to_vec()).expect("valid letters");
            if evaluation(&u).add(&evaluation(&v)) != evaluation(&t) {
                return fail(params, format!("{u} + {v} is not additive"));
            }
        }
    }
    ok(params)
}

fn schutzenberger_involution(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(6) as usize;
    let rank = r.min(4);
    let params = format!("length <= {len}, rank = {rank}");
    for t in words_up_to_length(len, rank) {
        let back =
            schutzenberger(&schutzenberger(&t, rank).expect("in rank"), rank).expect("in rank");
        if back != t {
            return fail(params, format!("double involution moved {t}"));
        }
    }
    ok(params)
}

fn conjugate_reordering(w: u32, _r: u32) -> CheckOutcome {
    let weight = w.min(7);
    let params = format!("weight <= {weight}");
    for m in 1..=weight {
        for alpha in Composition::all_of_weight(m) {
            let sorted = sort_to_partition(&alpha);
            if conjugate(&alpha) != conjugate(&sorted.as_composition()) {
                return fail(
                    params,
                    format!("conjugate of {alpha} changed under sorting"),
                );
            }
            let mut parts = alpha.parts().to_vec();
            parts.reverse();
            let reversed = Composition::new(parts).expect("positive parts");
            if conjugate(&alpha) != conjugate(&reversed) {
                return fail(
                    params,
                    format!("conjugate of {alpha} changed under reversal"),
                );
            }
        }
    }
    ok(params)
}

fn refinement_count(w: u32, _r: u32) -> CheckOutcome {
    let weight = w.min(7);
    let params = format!("weight <= {weight}");
    for m in 1..=weight {
        for alpha in Composition::all_of_weight(m) {
            let expected: u64 = alpha.parts().iter().map(|&p| 1u64 << (p - 1)).product();
            if refinements(&alpha).len() as u64 != expected {
                return fail(params, format!("refinement count of {alpha} is wrong"));
            }
        }
    }
    ok(params)
}

fn all_young_tableaux(max_weight: u32, max_entry: u32) -> Vec<YoungTableau> {
    let mut out = Vec::new();
    for weight in 1..=max_weight {
        for lambda in Partition::all_of_weight(weight) {
            out.extend(young_tableaux_of_shape(&lambda, max_entry));
        }
    }
    out
}

fn standardization_order(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(6);
    let entries = r.min(4);
    let params = format!("weight <= {weight}, entries <= {entries}");
    for t in all_young_tableaux(weight, entries) {
        let s = t.standardize();
        if s.shape() != t.shape() {
            return fail(
                params,
                format!("standardization changed the shape of {t:?}"),
            );
        }
        let flat_t: Vec<u32> = t.rows().iter().flatten().copied().collect();
        let flat_s: Vec<u32> = s.rows().iter().flatten().copied().collect();
        for p in 0..flat_t.len() {
            for q in 0..flat_t.len() {
                if flat_t[p] < flat_t[q] && flat_s[p] >= flat_s[q] {
                    return fail(params, format!("standardization reordered {t:?}"));
                }
            }
        }
    }
    ok(params)
}

fn minimal_parsing_bands(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(6);
    let entries = r.min(4);
    let params = format!("weight <= {weight}, entries <= {entries}");
    for t in all_young_tableaux(weight, entries) {
        let parsing = minimal_parsing(&t);
        if parsing.ty() != &descent_composition(&t.standardize()) {
            return fail(
                params,
                format!("parsing type of {t:?} is not the descent composition"),
            );
        }
        if !parsing.satisfies_band_axioms(&t) {
            return fail(params, format!("band axioms fail on {t:?}"));
        }
    }
    ok(params)
}

fn syt_hook_count(w: u32, _r: u32) -> CheckOutcome {
    let weight = w.min(8);
    let params = format!("weight <= {weight}");
    for m in 1..=weight {
        for lambda in Partition::all_of_weight(m) {
            if enumerate_syt(&lambda).len() as u64 != hook_length_count(&lambda) {
                return fail(
                    params,
                    format!("enumeration of {lambda} disagrees with hook lengths"),
                );
            }
        }
    }
    ok(params)
}

fn schensted_reading_identity(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(6);
    let entries = r.min(4);
    let params = format!("weight <= {weight}, entries <= {entries}");
    for t in all_young_tableaux(weight, entries) {
        if schensted_insert(&t.column_reading()) != t {
            return fail(params, format!("column reading of {t:?} does not reinsert"));
        }
    }
    ok(params)
}

fn all_quasi_ribbons(max_weight: u32, max_entry: u32) -> Vec<QuasiRibbonTableau> {
    let mut out = Vec::new();
    for weight in 1..=max_weight {
        for sigma in Composition::all_of_weight(weight) {
            out.extend(quasi_ribbons_of_shape(&sigma, max_entry));
        }
    }
    out
}

fn hypoplactic_reading_identity(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(6);
    let entries = r.min(5);
    let params = format!("weight <= {weight}, entries <= {entries}");
    for q in all_quasi_ribbons(weight, entries) {
        if hypoplactic_insert(&q.column_reading()) != q {
            return fail(params, format!("column reading of {q:?} does not reinsert"));
        }
    }
    ok(params)
}

/// Letter-at-a-time insertion, used only as an oracle here.
fn incremental_hypoplactic(w: &Word) -> QuasiRibbonTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &a in w.letters() {
        let mut split: Option<(usize, usize)> = None;
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x <= a {
                    split = Some((i, j));
                }
            }
        }
        rows = match split {
            None => {
                let mut out = vec![vec![a]];
                out.extend(rows);
                out
            }
            Some((i, j)) => {
                let mut out: Vec<Vec<u32>> = rows[..i].to_vec();
                let mut host = rows[i][..=j].to_vec();
                host.push(a);
                out.push(host);
                let tail = &rows[i][j + 1..];
                if !tail.is_empty() {
                    out.push(tail.to_vec());
                }
                out.extend(rows[i + 1..].iter().cloned());
                out
            }
        };
    }
    if rows.is_empty() {
        QuasiRibbonTableau::empty()
    } else {
        QuasiRibbonTableau::new(rows).expect("incremental insertion stays valid")
    }
}

fn hypoplactic_incremental_oracle(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(6) as usize;
    let rank = r.min(4);
    let params = format!("length <= {len}, rank <= {rank}");
    for word in words_up_to_length(len, rank) {
        if hypoplactic_insert(&word) != incremental_hypoplactic(&word) {
            return fail(params, format!("insertions of {word} disagree"));
        }
    }
    ok(params)
}

fn congruence_evaluation(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(4) as usize;
    let rank = r.min(3);
    let params = format!("length <= {len}, rank <= {rank}");
    let words = words_up_to_length(len, rank);
    for u in &words {
        for v in &words {
            if (plactic_equivalent(u, v) || hypoplactic_equivalent(u, v))
                && evaluation(u) != evaluation(v)
            {
                return fail(
                    params,
                    format!("congruent words {u}, {v} differ in evaluation"),
                );
            }
        }
    }
    ok(params)
}

/// Repeated-scan deletion of `-+` factors, used only as an oracle here.
fn rho_naive(word: &Word, i: u32) -> (Vec<usize>, Vec<usize>) {
    let mut symbols: Vec<(usize, bool)> = word
        .letters()
        .iter()
        .enumerate()
        .filter_map(|(pos, &a)| {
            if a == i {
                Some((pos, true))
            } else if a == i + 1 {
                Some((pos, false))
            } else {
                None
            }
        })
        .collect();
    loop {
        let mut cancelled = None;
        for k in 0..symbols.len().saturating_sub(1) {
            if !symbols[k].1 && symbols[k + 1].1 {
                cancelled = Some(k);
                break;
            }
        }
        match cancelled {
            Some(k) => {
                symbols.remove(k);
                symbols.remove(k);
            }
            None => break,
        }
    }
    (
        symbols.iter().filter(|s| s.1).map(|s| s.0).collect(),
        symbols.iter().filter(|s| !s.1).map(|s| s.0).collect(),
    )
}

fn bracket_cancellation_oracle(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(6) as usize;
    let rank = r.min(4);
    let params = format!("length <= {len}, rank <= {rank}");
    for word in words_up_to_length(len, rank) {
        for i in 1..rank {
            let sig = rho(&word, i);
            let (plus, minus) = rho_naive(&word, i);
            if sig.plus_positions() != plus || sig.minus_positions() != minus {
                return fail(params, format!("cancellation of {word} at i={i} disagrees"));
            }
        }
    }
    ok(params)
}

fn quasi_action_is_kashiwara_action(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(6) as usize;
    let rank = r.min(4);
    let params = format!("length <= {len}, rank <= {rank}");
    for word in words_up_to_length(len, rank) {
        for i in 1..rank {
            if let Some(v) = quasi_kashiwara_f(&word, i) {
                if kashiwara_f(&word, i) != Some(v) {
                    return fail(params, format!("f_{i} on {word} differs between families"));
                }
            }
            if let Some(v) = quasi_kashiwara_e(&word, i) {
                if kashiwara_e(&word, i) != Some(v) {
                    return fail(params, format!("e_{i} on {word} differs between families"));
                }
            }
        }
    }
    ok(params)
}

/// Shared by the default catalog and the fault-injection test: checks that
/// the supplied pair of operators are mutually inverse.
fn mutual_inverse_property(
    f_op: fn(&Word, u32) -> Option<Word>,
    e_op: fn(&Word, u32) -> Option<Word>,
    len: usize,
    rank: u32,
) -> std::result::Result<(), String> {
    for word in words_up_to_length(len, rank) {
        for i in 1..rank {
            if let Some(v) = f_op(&word, i) {
                if e_op(&v, i).as_ref() != Some(&word) {
                    return Err(format!("e_{i}(f_{i}({word})) != {word}"));
                }
            }
            if let Some(v) = e_op(&word, i) {
                if f_op(&v, i).as_ref() != Some(&word) {
                    return Err(format!("f_{i}(e_{i}({word})) != {word}"));
                }
            }
        }
    }
    Ok(())
}

fn operator_mutual_inverses(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(6) as usize;
    let rank = r.min(4);
    let params = format!("length <= {len}, rank <= {rank}");
    if let Err(reason) = mutual_inverse_property(kashiwara_f, kashiwara_e, len, rank) {
        return fail(params, reason);
    }
    if let Err(reason) = mutual_inverse_property(quasi_kashiwara_f, quasi_kashiwara_e, len, rank) {
        return fail(params, reason);
    }
    ok(params)
}

fn operator_evaluation_shift(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(6) as usize;
    let rank = r.min(4);
    let params = format!("length <= {len}, rank <= {rank}");
    for word in words_up_to_length(len, rank) {
        for i in 1..rank as usize {
            if let Some(v) = kashiwara_f(&word, i as u32) {
                let before = evaluation(&word);
                let after = evaluation(&v);
                let get = |ev: &crate::word::Evaluation, k: usize| {
                    ev.counts().get(k).copied().unwrap_or(0) as i64
                };
                if get(&after, i - 1) != get(&before, i - 1) - 1
                    || get(&after, i) != get(&before, i) + 1
                {
                    return fail(params, format!("evaluation shift wrong on {word}, i={i}"));
                }
            }
        }
    }
    ok(params)
}

fn parsing_strictness(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(5) as usize;
    let rank = r.min(4);
    let params = format!("length <= {len}, rank <= {rank}");
    for word in words_up_to_length(len, rank) {
        let parsing = minimal_parsing(&schensted_insert(&word));
        for i in 1..rank {
            if let Some(v) = quasi_kashiwara_f(&word, i) {
                if minimal_parsing(&schensted_insert(&v)) != parsing {
                    return fail(
                        params,
                        format!("quasi action on {word} changed the parsing"),
                    );
                }
            } else if is_strict_action(&word, i) {
                let v = kashiwara_f(&word, i).expect("strict actions are defined");
                if minimal_parsing(&schensted_insert(&v)) == parsing {
                    return fail(params, format!("strict action on {word} kept the parsing"));
                }
            }
        }
    }
    ok(params)
}

fn schutzenberger_conjugation(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(5) as usize;
    let rank = r.min(4);
    let params = format!("length <= {len}, rank = {rank}");
    for u in words_up_to_length(len, rank) {
        let un = schutzenberger(&u, rank).expect("in rank");
        for i in 1..rank {
            let lhs = quasi_kashiwara_f(&u, i).map(|v| schutzenberger(&v, rank).expect("in rank"));
            let rhs = quasi_kashiwara_e(&un, rank - i);
            if lhs != rhs {
                return fail(params, format!("conjugation fails on {u}, i={i}"));
            }
        }
    }
    ok(params)
}

fn diagonal_operator_inverses(w: u32, r: u32) -> CheckOutcome {
    let size = w.min(4) as usize;
    let entries = r.min(4);
    let params = format!("size <= {size}, entries <= {entries}");
    for m in 1..=size {
        for q in enumerate_in_rank(entries, m) {
            for k in 1..=m {
                if let Some(up) = q.td(k) {
                    if up.tc(k).as_ref() != Some(&q) {
                        return fail(params, format!("tc_{k}(td_{k}({q:?}))"));
                    }
                }
                if let Some(down) = q.tc(k) {
                    if down.td(k).as_ref() != Some(&q) {
                        return fail(params, format!("td_{k}(tc_{k}({q:?}))"));
                    }
                }
            }
        }
    }
    ok(params)
}

fn diagonal_quasi_kashiwara_link(w: u32, r: u32) -> CheckOutcome {
    let size = w.min(4) as usize;
    let entries = r.min(4);
    let params = format!("size <= {size}, entries <= {entries}");
    for m in 1..=size {
        for q in enumerate_in_rank(entries, m) {
            for sigma in Composition::all_of_weight(m as u32) {
                let t = pickqrt(&q, &sigma).expect("matching weight");
                let word = t.column_reading();
                let ribbon = t.ribbon_entries();
                for k in 1..=m {
                    let ell = ribbon[k - 1];
                    let e_result = if ell >= 2 {
                        quasi_kashiwara_e(&word, ell - 1)
                    } else {
                        None
                    };
                    let e_hits_k =
                        e_result.is_some() && ribbon.iter().position(|&x| x == ell) == Some(k - 1);
                    match (q.tc(k), e_hits_k) {
                        (Some(qc), true) => {
                            let expected = pickqrt(&qc, &sigma).expect("matching weight");
                            let got = hypoplactic_insert(&e_result.expect("defined"));
                            if got != expected {
                                return fail(
                                    params,
                                    format!("tc_{k} image mismatch on {q:?} {sigma}"),
                                );
                            }
                        }
                        (None, false) => {}
                        _ => {
                            return fail(
                                params,
                                format!("tc_{k} definedness mismatch on {q:?} {sigma}"),
                            )
                        }
                    }
                    let f_result = quasi_kashiwara_f(&word, ell);
                    let f_hits_k =
                        f_result.is_some() && ribbon.iter().rposition(|&x| x == ell) == Some(k - 1);
                    match (q.td(k), f_hits_k) {
                        (Some(qd), true) => {
                            let expected = pickqrt(&qd, &sigma).expect("matching weight");
                            let got = hypoplactic_insert(&f_result.expect("defined"));
                            if got != expected {
                                return fail(
                                    params,
                                    format!("td_{k} image mismatch on {q:?} {sigma}"),
                                );
                            }
                        }
                        (None, false) => {}
                        _ => {
                            return fail(
                                params,
                                format!("td_{k} definedness mismatch on {q:?} {sigma}"),
                            )
                        }
                    }
                }
            }
        }
    }
    ok(params)
}

fn transport_composite(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(5);
    let entries = r.min(5);
    let params = format!("weight <= {weight}, entries <= {entries}");
    for m in 1..=weight {
        for sigma in Composition::all_of_weight(m) {
            for t in quasi_ribbons_of_shape(&sigma, entries) {
                let q = genqa(&t);
                if pickqrt(&q, &sigma).ok().as_ref() != Some(&t) {
                    return fail(params, format!("completion of {t:?} does not extract back"));
                }
                for tau in Composition::all_of_weight(m) {
                    let direct = direct_transport(&t, &tau).expect("matching weight");
                    let composite = pickqrt(&q, &tau).expect("matching weight");
                    if direct != composite {
                        return fail(params, format!("transport of {t:?} to {tau} disagrees"));
                    }
                }
            }
        }
    }
    ok(params)
}

fn quasi_crystal_inside_crystal(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(5) as usize;
    let rank = r.min(3);
    let params = format!("length <= {len}, rank = {rank}");
    for seed in words_up_to_length(len, rank) {
        let p = build_component(&seed, GraphKind::Plac, rank).expect("in rank");
        let h = build_component(&seed, GraphKind::Hypo, rank).expect("in rank");
        for v in h.vertices() {
            if p.vertex_index(v).is_none() {
                return fail(
                    params,
                    format!("vertex of the quasi component of {seed} escapes"),
                );
            }
        }
        for e in h.edges() {
            let src = p.vertex_index(&h.vertices()[e.src]).expect("contained");
            let dst = p.vertex_index(&h.vertices()[e.dst]).expect("contained");
            if p.out_labels(src).get(&e.label) != Some(&dst) {
                return fail(
                    params,
                    format!("edge of the quasi component of {seed} escapes"),
                );
            }
        }
    }
    ok(params)
}

fn extraction_completion_isomorphism(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(5);
    let rank = r.min(4);
    let params = format!("weight <= {weight}, rank <= {rank}");
    for m in 1..=weight {
        for n in 1..=rank {
            let delta = build_delta(n, m as usize).expect("positive parameters");
            for sigma in Composition::all_of_weight(m) {
                let target_rank = n + sigma.len() as u32 - 1;
                let seed = highest_weight_quasi_ribbon(&sigma).column_reading();
                let gamma = build_component(&seed, GraphKind::Hypo, target_rank).expect("in rank");
                match unlabelled_isomorphism(&delta, &gamma) {
                    UnlabelledOutcome::Witness(fwd) => {
                        // edge-by-edge inverse: completion sends the image back
                        for (i, p) in delta.vertices().iter().enumerate() {
                            let image =
                                gamma.vertices()[fwd.vertex_map[i]].as_word().expect("word");
                            let back = genqa(&hypoplactic_insert(image));
                            if Some(&back) != p.as_array() {
                                return fail(
                                    params,
                                    format!("completion not inverse for {sigma}, n={n}"),
                                );
                            }
                        }
                        // label transport: an edge on diagonal k relabels to
                        // the ribbon entry on that diagonal
                        for e in delta.edges() {
                            let q = delta.vertices()[e.src].as_array().expect("array");
                            let t = pickqrt(q, &sigma).expect("matching weight");
                            let ell = t.ribbon_entries()[e.label as usize - 1];
                            let src = fwd.vertex_map[e.src];
                            let dst = fwd.vertex_map[e.dst];
                            if gamma.out_labels(src).get(&ell) != Some(&dst) {
                                return fail(
                                    params,
                                    format!("label transport fails for {sigma}, n={n}"),
                                );
                            }
                        }
                    }
                    _ => return fail(params, format!("no witness for {sigma}, n={n}")),
                }
            }
        }
    }
    ok(params)
}

fn shape_transport_isomorphism(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(5);
    let rank = r.min(4);
    let params = format!("weight <= {weight}, rank <= {rank}");
    let mut cache: HashMap<(Composition, u32), LabeledDigraph> = HashMap::new();
    for m in 1..=weight {
        let shapes = Composition::all_of_weight(m);
        for sigma in &shapes {
            for tau in &shapes {
                let shift = sigma.len() as i64 - tau.len() as i64;
                for n in 1..=rank {
                    let target = n as i64 - shift;
                    // both components are empty unless the shapes fit their ranks
                    if target < 1 || sigma.len() as u32 > n || tau.len() as i64 > target {
                        continue;
                    }
                    let g1 = cache
                        .entry((sigma.clone(), n))
                        .or_insert_with(|| {
                            let seed = highest_weight_quasi_ribbon(sigma).column_reading();
                            build_component(&seed, GraphKind::Hypo, n).expect("in rank")
                        })
                        .clone();
                    let g2 = cache
                        .entry((tau.clone(), target as u32))
                        .or_insert_with(|| {
                            let seed = highest_weight_quasi_ribbon(tau).column_reading();
                            build_component(&seed, GraphKind::Hypo, target as u32).expect("in rank")
                        })
                        .clone();
                    if !matches!(
                        unlabelled_isomorphism(&g1, &g2),
                        UnlabelledOutcome::Witness(_)
                    ) {
                        return fail(
                            params,
                            format!("no transport witness {sigma}@{n} -> {tau}@{target}"),
                        );
                    }
                }
            }
        }
    }
    ok(params)
}

fn vertical_symmetry(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(5);
    let rank = r.min(4);
    let params = format!("weight <= {weight}, rank = {rank}");
    for m in 1..=weight {
        for sigma in Composition::all_of_weight(m) {
            if sigma.len() as u32 > rank {
                continue;
            }
            let seed = highest_weight_quasi_ribbon(&sigma).column_reading();
            let g = build_component(&seed, GraphKind::Hypo, rank).expect("in rank");
            // automorphism: involution then transport back to the original shape
            let mut image: Vec<usize> = Vec::with_capacity(g.vertex_count());
            for p in g.vertices() {
                let x = p.as_word().expect("word");
                let reflected = schutzenberger(x, rank).expect("in rank");
                let moved = direct_transport(&hypoplactic_insert(&reflected), &sigma)
                    .expect("equal weight");
                match g.word_index(&moved.column_reading()) {
                    Some(i) => image.push(i),
                    None => return fail(params, format!("automorphism leaves the component: {x}")),
                }
            }
            let mut seen = vec![false; g.vertex_count()];
            for &i in &image {
                if seen[i] {
                    return fail(params, format!("automorphism not injective on {sigma}"));
                }
                seen[i] = true;
            }
            for e in g.edges() {
                let a = image[e.src];
                let b = image[e.dst];
                if !g.has_edge(a, b) && !g.has_edge(b, a) {
                    return fail(params, format!("automorphism breaks an edge on {sigma}"));
                }
            }
            let highest = g.highest_weight().expect("component");
            let lowest = g.lowest_weight().expect("component");
            if image[highest] != lowest {
                return fail(
                    params,
                    format!("automorphism misses the lowest weight on {sigma}"),
                );
            }
        }
    }
    ok(params)
}

fn isolated_vertices(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(5) as usize;
    let rank = r.min(3);
    let params = format!("length <= {len}, rank = {rank}");
    for word in words_up_to_length(len, rank) {
        if hypoplactic_insert(&word).shape().len() == rank as usize {
            let g = build_component(&word, GraphKind::Hypo, rank).expect("in rank");
            if g.vertex_count() != 1 || g.edge_count() != 0 {
                return fail(params, format!("{word} is not isolated"));
            }
        }
    }
    ok(params)
}

fn row_component_count(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(6);
    let rank = r.min(6);
    let params = format!("weight <= {weight}, rank <= {rank}");
    fn multiset(n: u64, k: u64) -> u64 {
        let mut out = 1u64;
        for i in 0..k {
            out = out * (n + i) / (i + 1);
        }
        out
    }
    for n in 1..=rank {
        for m in 1..=weight as usize {
            let seed = Word::new(vec![1; m]).expect("ones");
            let g = build_component(&seed, GraphKind::Hypo, n).expect("in rank");
            if g.vertex_count() as u64 != multiset(n as u64, m as u64) {
                return fail(params, format!("row component count wrong at n={n}, m={m}"));
            }
        }
    }
    ok(params)
}

fn coordinate_shift(_w: u32, _r: u32) -> CheckOutcome {
    let params = "row shape (3) at rank 4 vs shape (2,1)".to_string();
    let row = build_component(&Word::new(vec![1, 1, 1]).expect("ones"), GraphKind::Hypo, 4)
        .expect("in rank");
    let sigma = Composition::new(vec![2, 1]).expect("positive");
    let hook_seed = highest_weight_quasi_ribbon(&sigma).column_reading();
    let hook = build_component(&hook_seed, GraphKind::Hypo, 5).expect("in rank");
    let mut shifted: Vec<Vec<u32>> = row
        .polytope_coordinates()
        .expect("hypo kind")
        .into_iter()
        .map(|c| vec![c[0], c[1], c[2] + 1])
        .collect();
    shifted.sort();
    let mut actual = hook.polytope_coordinates().expect("hypo kind");
    actual.sort();
    if actual != shifted {
        return fail(params, "coordinate sets differ".to_string());
    }
    // the same offsets come out of direct transport, diagonal by diagonal
    for p in row.vertices() {
        let t = hypoplactic_insert(p.as_word().expect("word"));
        let moved = direct_transport(&t, &sigma).expect("equal weight");
        let src = t.ribbon_entries();
        let dst = moved.ribbon_entries();
        let offsets: Vec<i64> = src
            .iter()
            .zip(&dst)
            .map(|(&a, &b)| b as i64 - a as i64)
            .collect();
        if offsets != vec![0, 0, 1] {
            return fail(params, format!("transport offsets {offsets:?}"));
        }
    }
    ok(params)
}

fn congruence_component_isomorphism(w: u32, r: u32) -> CheckOutcome {
    let len = w.min(5) as usize;
    let rank = r.min(3);
    let params = format!("length <= {len}, rank = {rank}");
    let words = words_up_to_length(len, rank);
    for kind in [GraphKind::Hypo, GraphKind::Plac] {
        let components: Vec<LabeledDigraph> = words
            .iter()
            .map(|u| build_component(u, kind, rank).expect("in rank"))
            .collect();
        for (a, u) in words.iter().enumerate() {
            for (b, v) in words.iter().enumerate() {
                let witness = labelled_isomorphism(&components[a], &components[b], true);
                let maps_u_to_v = witness.as_ref().is_some_and(|iso| {
                    iso.vertex_map[components[a].word_index(u).expect("seed")]
                        == components[b].word_index(v).expect("seed")
                });
                let congruent = match kind {
                    GraphKind::Hypo => hypoplactic_equivalent(u, v),
                    _ => plactic_equivalent(u, v),
                };
                if maps_u_to_v != congruent {
                    return fail(params, format!("{kind}: {u} vs {v}"));
                }
            }
        }
    }
    ok(params)
}

fn gessel_identity(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(7);
    let vars = r.min(5) as usize;
    let params = format!("weight <= {weight}, variables <= {vars}");
    for m in 1..=weight {
        for lambda in Partition::all_of_weight(m) {
            let expansion = schur_to_fundamental(&lambda);
            for n in 1..=vars {
                let mut sum = ExactPolynomial::zero(n);
                for (alpha, mult) in expansion.terms() {
                    sum.add_scaled(&fundamental_poly(alpha, n), *mult as i64);
                }
                if sum != schur_poly(&lambda, n) {
                    return fail(params, format!("expansion of {lambda} on {n} variables"));
                }
            }
        }
    }
    ok(params)
}

fn character_identity(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(6);
    let vars = r.min(5);
    let params = format!("weight <= {weight}, rank <= {vars}");
    for m in 1..=weight {
        for sigma in Composition::all_of_weight(m) {
            for n in 1..=vars {
                if (sigma.len() as u32) > n {
                    // the component is empty and the character must vanish
                    if fundamental_poly(&sigma, n as usize).monomial_count() != 0 {
                        return fail(params, format!("{sigma} should vanish on {n} variables"));
                    }
                    continue;
                }
                let seed = highest_weight_quasi_ribbon(&sigma).column_reading();
                let g = build_component(&seed, GraphKind::Hypo, n).expect("in rank");
                let mut sum = ExactPolynomial::zero(n as usize);
                for p in g.vertices() {
                    sum.add_evaluation_monomial(&evaluation(p.as_word().expect("word")));
                }
                if sum != fundamental_poly(&sigma, n as usize) {
                    return fail(params, format!("character of {sigma} at rank {n}"));
                }
            }
        }
    }
    ok(params)
}

fn fundamental_two_routes(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(7);
    let vars = r.min(5) as usize;
    let params = format!("weight <= {weight}, variables <= {vars}");
    for m in 1..=weight {
        for alpha in Composition::all_of_weight(m) {
            for n in 1..=vars {
                if fundamental_poly(&alpha, n) != fundamental_poly_via_ribbons(&alpha, n) {
                    return fail(
                        params,
                        format!("routes differ for {alpha} on {n} variables"),
                    );
                }
            }
        }
    }
    ok(params)
}

fn schur_reorder_witness(w: u32, _r: u32) -> CheckOutcome {
    let weight = w.min(8);
    let containment_weight = w.min(6);
    let params = format!("weight <= {weight}, containment weight <= {containment_weight}");
    let mut expansions: HashMap<Partition, crate::qsym::QSymExpansion> = HashMap::new();
    for m in 1..=weight {
        for alpha in Composition::all_of_weight(m) {
            if let Err(e) = verify_schur_reorder(&alpha) {
                return fail(params, format!("witness failed for {alpha}: {e}"));
            }
            // cross-check via the enumeration route: the expansion of the
            // sorted shape contains alpha
            let lambda = sort_to_partition(&alpha);
            let expansion = expansions
                .entry(lambda.clone())
                .or_insert_with(|| schur_to_fundamental(&lambda));
            if expansion.multiplicity(&alpha) == 0 {
                return fail(
                    params,
                    format!("{alpha} missing from the expansion of {lambda}"),
                );
            }
        }
    }
    // component containment: the slide image's reading generates a quasi
    // component sitting inside the crystal component of the same seed
    for m in 1..=containment_weight {
        for alpha in Composition::all_of_weight(m) {
            let q = highest_weight_quasi_ribbon(&alpha);
            let t = xi_map(&q).expect("highest weight slides cleanly");
            let seed = t.column_reading();
            let n = m;
            let h = build_component(&seed, GraphKind::Hypo, n).expect("in rank");
            let p = build_component(&seed, GraphKind::Plac, n).expect("in rank");
            for v in h.vertices() {
                if p.vertex_index(v).is_none() {
                    return fail(params, format!("containment fails for {alpha}"));
                }
            }
            if schensted_insert(&seed).shape() != sort_to_partition(&alpha) {
                return fail(
                    params,
                    format!("seed of {alpha} has the wrong crystal shape"),
                );
            }
        }
    }
    ok(params)
}

fn xi_reinsertion(w: u32, _r: u32) -> CheckOutcome {
    let weight = w.min(6);
    let params = format!("weight <= {weight}");
    for m in 1..=weight {
        for alpha in Composition::all_of_weight(m) {
            let q = highest_weight_quasi_ribbon(&alpha);
            let t = match xi_map(&q) {
                Ok(t) => t,
                Err(e) => return fail(params, format!("slide fails on {alpha}: {e}")),
            };
            if t.evaluation() != q.evaluation() {
                return fail(params, format!("slide changed the evaluation of {alpha}"));
            }
            if hypoplactic_insert(&t.column_reading()) != q {
                return fail(params, format!("slide image of {alpha} does not reinsert"));
            }
        }
    }
    ok(params)
}

fn xi_intertwining_check(w: u32, r: u32) -> CheckOutcome {
    let weight = w.min(5);
    let entries = r.min(5);
    let params = format!("weight <= {weight}, entries <= {entries}");
    for q in all_quasi_ribbons(weight, entries) {
        for i in 1..entries {
            if quasi_kashiwara_f(&q.column_reading(), i).is_none() {
                continue;
            }
            match xi_intertwines(&q, i) {
                Ok(true) => {}
                Ok(false) => return fail(params, format!("intertwining fails on {q:?}, i={i}")),
                Err(e) => {
                    return fail(params, format!("intertwining errored on {q:?}, i={i}: {e}"))
                }
            }
        }
    }
    ok(params)
}

fn skeleton_rank_independence(w: u32, _r: u32) -> CheckOutcome {
    let weight = w.min(6);
    let params = format!("weight <= {weight}");
    for m in 1..=weight {
        for lambda in Partition::all_of_weight(m) {
            let min_rank = enumerate_syt(&lambda)
                .iter()
                .map(|t| descent_composition(t).len() as u32)
                .max()
                .expect("nonempty shape");
            let a = match skeleton(&lambda, Some(min_rank)) {
                Ok(s) => s,
                Err(e) => return fail(params, format!("skeleton of {lambda} failed: {e}")),
            };
            let b = skeleton(&lambda, Some(min_rank + 1)).expect("larger rank is valid");
            if a != b {
                return fail(params, format!("skeleton of {lambda} depends on the rank"));
            }
        }
    }
    ok(params)
}

fn skeleton_even_cycles(w: u32, _r: u32) -> CheckOutcome {
    let weight = w.min(7);
    let params = format!("weight <= {weight}");
    for m in 1..=weight {
        for lambda in Partition::all_of_weight(m) {
            let s = skeleton(&lambda, None).expect("default rank is valid");
            let lengths: BTreeSet<usize> = (0..s.vertices().len())
                .map(|v| s.descent_composition_of(v).len())
                .collect();
            for level in lengths {
                if !check_even_cycles(&s, level) {
                    return fail(
                        params,
                        format!("level {level} of {lambda} is not bipartite"),
                    );
                }
                let h = h_subgraph(&s, level);
                for (a, b) in h.undirected_edges() {
                    if parity(&s.vertices()[a]) == parity(&s.vertices()[b]) {
                        return fail(params, format!("parity clash in {lambda} level {level}"));
                    }
                }
            }
        }
    }
    ok(params)
}

fn skeleton_counterexample(w: u32, _r: u32) -> CheckOutcome {
    let params = "shape (3,2,2)".to_string();
    if w < 7 {
        return (format!("{params} (skipped: weight bound {w} < 7)"), Ok(()));
    }
    let lambda = Partition::new(vec![3, 2, 2]).expect("partition");
    let s = match skeleton(&lambda, None) {
        Ok(s) => s,
        Err(e) => return fail(params, format!("build failed: {e}")),
    };
    if s.vertices().len() != 21 {
        return fail(params, format!("{} vertices", s.vertices().len()));
    }
    let h3 = h_subgraph(&s, 3);
    let shapes3 = component_shapes(&h3);
    if h3.vertices.len() != 3 || shapes3.len() != 1 || shapes3[0].1 != ComponentShape::Chain {
        return fail(params, "level 3 is not a 3-vertex chain".to_string());
    }
    let h5 = h_subgraph(&s, 5);
    let shapes5 = component_shapes(&h5);
    let kinds5: Vec<ComponentShape> = shapes5.iter().map(|(_, k)| *k).collect();
    if h5.vertices.len() != 6
        || kinds5
            .iter()
            .filter(|&&k| k == ComponentShape::Chain)
            .count()
            != 1
        || kinds5
            .iter()
            .filter(|&&k| k == ComponentShape::Singleton)
            .count()
            != 1
        || kinds5.len() != 2
    {
        return fail(
            params,
            "level 5 is not a chain plus a singleton".to_string(),
        );
    }
    if shapes5
        .iter()
        .find(|(_, k)| *k == ComponentShape::Chain)
        .map(|(c, _)| c.len())
        != Some(5)
    {
        return fail(params, "level 5 chain does not have 5 vertices".to_string());
    }
    let h4 = h_subgraph(&s, 4);
    if h4.vertices.len() != 12 {
        return fail(
            params,
            format!("level 4 has {} vertices", h4.vertices.len()),
        );
    }
    if !check_even_cycles(&s, 4) {
        return fail(params, "level 4 is not parity-bipartite".to_string());
    }
    if cycle_rank(&h4) != 2 {
        return fail(
            params,
            format!("level 4 has cycle rank {}", cycle_rank(&h4)),
        );
    }
    let shapes4 = component_shapes(&h4);
    if !shapes4
        .iter()
        .any(|(_, k)| *k == ComponentShape::CycleBearing)
    {
        return fail(
            params,
            "level 4 is a disjoint union of chains and singletons".to_string(),
        );
    }
    ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_bounds_pass() {
        let report = run_verify(1, 2).unwrap();
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.checks.len(), catalog().len());
    }

    #[test]
    fn small_bounds_pass() {
        let report = run_verify(4, 3).unwrap();
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn guard_rails() {
        assert!(run_verify(9, 4).is_err());
        assert!(run_verify(5, 7).is_err());
        assert!(run_verify(0, 4).is_err());
    }

    /// A broken lowering operator: edits the leftmost letter `i` instead of
    /// the rightmost.
    fn corrupted_f(w: &Word, i: u32) -> Option<Word> {
        if crate::word::contains_inversion(w, i) {
            return None;
        }
        let pos = w.letters().iter().position(|&a| a == i)?;
        let mut letters = w.letters().to_vec();
        letters[pos] = i + 1;
        Word::new(letters).ok()
    }

    fn corrupted_mutual_inverses(w: u32, r: u32) -> CheckOutcome {
        let len = w.min(6) as usize;
        let rank = r.min(4);
        let params = format!("length <= {len}, rank <= {rank}");
        match mutual_inverse_property(corrupted_f, quasi_kashiwara_e, len, rank) {
            Ok(()) => (params, Ok(())),
            Err(reason) => (params, Err(reason)),
        }
    }

    #[test]
    fn corrupted_operator_is_named_in_the_report() {
        let mut checks = catalog();
        let slot = checks
            .iter()
            .position(|c| c.name == "operator-mutual-inverses")
            .unwrap();
        checks[slot] = Check {
            name: "operator-mutual-inverses",
            run: corrupted_mutual_inverses,
        };
        let report = run_checks(&checks, 3, 3);
        assert!(!report.passed());
        let failures = report.failures();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].name, "operator-mutual-inverses");
        assert!(failures[0].counterexample.is_some());
    }

    #[test]
    fn report_rendering_is_stable() {
        let a = run_verify(2, 2).unwrap();
        let b = run_verify(2, 2).unwrap();
        let strip = |r: &VerificationReport| {
            r.checks
                .iter()
                .map(|c| format!("{} {} {}", c.name, c.params, c.passed))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
        assert!(a.render().contains("overall: PASS"));
    }
}
