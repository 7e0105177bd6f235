//! Schensted insertion, hypoplactic insertion, and the two congruence tests.

use crate::tableau::{QuasiRibbonTableau, YoungTableau};
use crate::word::{evaluation, Word};

/// Schensted row insertion of the whole word.
///
/// Each letter is inserted into the first row, bumping the leftmost entry
/// strictly greater than it; bumped entries cascade into the next row.
pub fn schensted_insert(w: &Word) -> YoungTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &letter in w.letters() {
        let mut carry = letter;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&x| x > carry) {
                Some(j) => {
                    std::mem::swap(&mut row[j], &mut carry);
                }
                None => {
                    row.push(carry);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    YoungTableau::new(rows).expect("row bumping yields a Young tableau")
}

/// Hypoplactic insertion of the whole word, computed from the defining
/// characterization: the result is the unique quasi-ribbon with the same
/// evaluation as `w` in which consecutive letter values `a < b` share a row
/// exactly when `w` has no subsequence `ba`.
pub fn hypoplactic_insert(w: &Word) -> QuasiRibbonTableau {
    let ev = evaluation(w);
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    let mut prev: Option<u32> = None;
    for (idx, &count) in ev.counts().iter().enumerate() {
        if count == 0 {
            continue;
        }
        let a = idx as u32 + 1;
        if let Some(p) = prev {
            if contains_inversion_between(w, p, a) {
                rows.push(std::mem::take(&mut current));
            }
        }
        current.extend(std::iter::repeat_n(a, count as usize));
        prev = Some(a);
    }
    if !current.is_empty() {
        rows.push(current);
    }
    QuasiRibbonTableau::new(rows).expect("characterization yields a quasi-ribbon")
}

/// True iff `w` contains a subsequence `b a` for the specific pair `a < b`.
fn contains_inversion_between(w: &Word, a: u32, b: u32) -> bool {
    let mut seen_b = false;
    for &x in w.letters() {
        if x == b {
            seen_b = true;
        } else if x == a && seen_b {
            return true;
        }
    }
    false
}

/// Plactic congruence: equality of Schensted insertion tableaux.
pub fn plactic_equivalent(u: &Word, v: &Word) -> bool {
    schensted_insert(u) == schensted_insert(v)
}

/// Hypoplactic congruence: equality of hypoplactic insertion tableaux.
pub fn hypoplactic_equivalent(u: &Word, v: &Word) -> bool {
    hypoplactic_insert(u) == hypoplactic_insert(v)
}
