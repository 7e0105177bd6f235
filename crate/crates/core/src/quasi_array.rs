//! Quasi-arrays, the extraction/completion maps between them and quasi-ribbon
//! tableaux, the diagonal operators, and direct shape transport.
//!
//! A quasi-array of size `m` is a staircase of `m` rows (row `i` holding
//! `m - i + 1` cells) whose diagonals are runs of consecutive letters and
//! whose first row weakly increases. It is fully determined by its first row,
//! which is all this type stores; every other entry is derived on demand.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::tableau::QuasiRibbonTableau;
use crate::word::Composition;
use crate::Result;

/// A quasi-array, stored as its first row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuasiArray {
    first_row: Vec<u32>,
}

impl QuasiArray {
    /// Builds a quasi-array from its first row, which must be nonempty,
    /// weakly increasing, and consist of positive letters.
    pub fn new(first_row: Vec<u32>) -> Result<Self> {
        if first_row.is_empty() {
            return Err(Error::Parameter("quasi-array size must be positive".into()));
        }
        if first_row.contains(&0) {
            return Err(Error::InvalidLetter);
        }
        if first_row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidTableau(
                "first row must weakly increase".into(),
            ));
        }
        Ok(QuasiArray { first_row })
    }

    pub fn size(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[u32] {
        &self.first_row
    }

    /// Entry in row `i`, column `j` (0-based): `first_row[i + j] + i`.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.first_row[i + j] + i as u32
    }

    /// All rows, materialized.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let m = self.size();
        (0..m)
            .map(|i| (0..m - i).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Membership in the rank-`n` truncation: rightmost first-row entry at most `n`.
    pub fn in_rank(&self, n: u32) -> bool {
        *self.first_row.last().expect("nonempty") <= n
    }

    /// Adds 1 along the `k`-th diagonal (1-based). Always defined for
    /// `k = m`; for `k < m` defined iff `first_row[k] < first_row[k+1]`
    /// (1-based); undefined for `k > m`.
    pub fn td(&self, k: usize) -> Option<QuasiArray> {
        let m = self.size();
        if k == 0 || k > m {
            return None;
        }
        if k < m && self.first_row[k - 1] >= self.first_row[k] {
            return None;
        }
        let mut first_row = self.first_row.clone();
        first_row[k - 1] += 1;
        Some(QuasiArray { first_row })
    }

    /// Subtracts 1 along the `k`-th diagonal (1-based). For `k = 1` defined
    /// iff the top-left entry exceeds 1; for `k >= 2` defined iff
    /// `first_row[k] > first_row[k-1]` (1-based); undefined for `k > m`.
    pub fn tc(&self, k: usize) -> Option<QuasiArray> {
        let m = self.size();
        if k == 0 || k > m {
            return None;
        }
        if k == 1 {
            if self.first_row[0] <= 1 {
                return None;
            }
        } else if self.first_row[k - 1] <= self.first_row[k - 2] {
            return None;
        }
        let mut first_row = self.first_row.clone();
        first_row[k - 1] -= 1;
        Some(QuasiArray { first_row })
    }

    /// Full staircase rendering.
    pub fn render(&self) -> String {
        let rows = self.rows();
        let width = rows
            .iter()
            .flatten()
            .map(|a| a.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &rows {
            let line: Vec<String> = row.iter().map(|a| format!("{a:>width$}")).collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for QuasiArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiArray{:?}", self.first_row)
    }
}

impl Serialize for QuasiArray {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QuasiArray", 2)?;
        s.serialize_field("size", &self.size())?;
        s.serialize_field("first_row", &self.first_row)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for QuasiArray {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(default)]
            #[allow(dead_code)]
            size: usize,
            first_row: Vec<u32>,
        }
        let raw = Raw::deserialize(deserializer)?;
        QuasiArray::new(raw.first_row).map_err(serde::de::Error::custom)
    }
}

/// Row index (0-based) of each of the `m` ribbon cells of shape `sigma`;
/// ribbon cell `k` lies on diagonal `k + 1`.
fn diagonal_rows(sigma: &Composition) -> Vec<usize> {
    let mut rows = Vec::with_capacity(sigma.weight() as usize);
    for (r, &part) in sigma.parts().iter().enumerate() {
        rows.extend(std::iter::repeat_n(r, part as usize));
    }
    rows
}

/// Extracts the quasi-ribbon of shape `sigma` whose first cell is the
/// top-left cell of `q`.
pub fn pickqrt(q: &QuasiArray, sigma: &Composition) -> Result<QuasiRibbonTableau> {
    if sigma.weight() as usize != q.size() {
        return Err(Error::ShapeMismatch(format!(
            "composition weight {} does not match quasi-array size {}",
            sigma.weight(),
            q.size()
        )));
    }
    let rows_of = diagonal_rows(sigma);
    let mut rows: Vec<Vec<u32>> = sigma
        .parts()
        .iter()
        .map(|&p| Vec::with_capacity(p as usize))
        .collect();
    for (k, &r) in rows_of.iter().enumerate() {
        rows[r].push(q.first_row[k] + r as u32);
    }
    QuasiRibbonTableau::new(rows)
}

/// Completes a quasi-ribbon tableau to the unique quasi-array containing it
/// at the top left.
pub fn genqa(t: &QuasiRibbonTableau) -> QuasiArray {
    let rows_of = diagonal_rows(&t.shape());
    let entries = t.ribbon_entries();
    let first_row: Vec<u32> = entries
        .iter()
        .zip(&rows_of)
        .map(|(&entry, &r)| entry - r as u32)
        .collect();
    QuasiArray::new(first_row).expect("extraction of a valid ribbon yields a quasi-array")
}

/// Transports `t` to shape `tau` without materializing the quasi-array:
/// along each diagonal the entry moves by the row-index difference between
/// the target and source shapes.
pub fn direct_transport(t: &QuasiRibbonTableau, tau: &Composition) -> Result<QuasiRibbonTableau> {
    if tau.weight() as usize != t.weight() {
        return Err(Error::ShapeMismatch(format!(
            "target weight {} does not match tableau weight {}",
            tau.weight(),
            t.weight()
        )));
    }
    let source_rows = diagonal_rows(&t.shape());
    let target_rows = diagonal_rows(tau);
    let entries = t.ribbon_entries();
    let mut rows: Vec<Vec<u32>> = tau
        .parts()
        .iter()
        .map(|&p| Vec::with_capacity(p as usize))
        .collect();
    for (k, &entry) in entries.iter().enumerate() {
        let shifted = entry as i64 + target_rows[k] as i64 - source_rows[k] as i64;
        debug_assert!(shifted >= 1);
        rows[target_rows[k]].push(shifted as u32);
    }
    QuasiRibbonTableau::new(rows)
}

/// All quasi-arrays of size `m` whose first row lies within `1..=n`, in
/// lexicographic order of first rows.
pub fn enumerate_in_rank(n: u32, m: usize) -> Vec<QuasiArray> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(m);
    fn rec(n: u32, m: usize, current: &mut Vec<u32>, out: &mut Vec<QuasiArray>) {
        if current.len() == m {
            out.push(QuasiArray {
                first_row: current.clone(),
            });
            return;
        }
        let lo = current.last().copied().unwrap_or(1);
        for a in lo..=n {
            current.push(a);
            rec(n, m, current, out);
            current.pop();
        }
    }
    if m > 0 {
        rec(n, m, &mut current, &mut out);
    }
    out
}
