//! Young tableaux, standard Young tableaux and quasi-ribbon tableaux, with
//! readings, standardization, descent compositions and minimal parsings.
//!
//! Rows are indexed from the top, columns from the left, both 0-based in code
//! (the serialized `offsets` of a quasi-ribbon are 1-based column indices).

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::word::{evaluation_of_entries, Composition, Evaluation, Partition, Word};
use crate::Result;

/// A semistandard Young tableau: left-aligned rows of weakly decreasing
/// length, rows weakly increasing, columns strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableau {
    rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.iter().flatten().any(|&a| a == 0) {
            return Err(Error::InvalidLetter);
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must weakly decrease".into(),
            ));
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau("rows must weakly increase".into()));
            }
        }
        for i in 1..rows.len() {
            for (j, &below) in rows[i].iter().enumerate() {
                if rows[i - 1][j] >= below {
                    return Err(Error::InvalidTableau(
                        "columns must strictly increase".into(),
                    ));
                }
            }
        }
        Ok(YoungTableau { rows })
    }

    pub fn empty() -> Self {
        YoungTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("validated row lengths form a partition")
    }

    /// Number of cells.
    pub fn weight(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn evaluation(&self) -> Evaluation {
        evaluation_of_entries(self.rows.iter().flatten().copied())
    }

    /// Columns left to right, each read bottom to top.
    pub fn column_reading(&self) -> Word {
        let mut letters = Vec::with_capacity(self.weight());
        let width = self.rows.first().map_or(0, Vec::len);
        for j in 0..width {
            for row in self.rows.iter().rev() {
                if j < row.len() {
                    letters.push(row[j]);
                }
            }
        }
        Word::new(letters).expect("validated entries")
    }

    /// Cells of each letter in column order; used by standardization.
    fn cells_by_letter(&self) -> BTreeMap<u32, Vec<(usize, usize)>> {
        let mut map: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                map.entry(a).or_default().push((i, j));
            }
        }
        for cells in map.values_mut() {
            cells.sort_by_key(|&(i, j)| (j, i));
        }
        map
    }

    /// Replaces the copies of each letter, taken left to right, by consecutive
    /// integers, smaller letters first.
    pub fn standardize(&self) -> StandardYoungTableau {
        let mut rows = self.rows.clone();
        let mut next = 1u32;
        for (_, cells) in self.cells_by_letter() {
            for (i, j) in cells {
                rows[i][j] = next;
                next += 1;
            }
        }
        StandardYoungTableau::new(YoungTableau { rows }).expect("standardization is standard")
    }

    /// Plain-text rendering with aligned columns.
    pub fn render(&self) -> String {
        render_rows(&self.rows, &vec![0; self.rows.len()])
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YoungTableau{:?}", self.rows)
    }
}

impl Serialize for YoungTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("YoungTableau", 2)?;
        s.serialize_field("shape", &self.shape().parts())?;
        s.serialize_field("rows", &self.rows)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for YoungTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(default)]
            #[allow(dead_code)]
            shape: Vec<u32>,
            rows: Vec<Vec<u32>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        YoungTableau::new(raw.rows).map_err(serde::de::Error::custom)
    }
}

/// A Young tableau filled bijectively with `1..=size`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StandardYoungTableau {
    inner: YoungTableau,
}

impl StandardYoungTableau {
    pub fn new(tableau: YoungTableau) -> Result<Self> {
        let size = tableau.weight();
        let mut seen = vec![false; size];
        for &a in tableau.rows.iter().flatten() {
            let idx = a as usize;
            if idx == 0 || idx > size || seen[idx - 1] {
                return Err(Error::InvalidTableau(format!(
                    "standard filling must use 1..={size} exactly once"
                )));
            }
            seen[idx - 1] = true;
        }
        Ok(StandardYoungTableau { inner: tableau })
    }

    pub fn tableau(&self) -> &YoungTableau {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        self.inner.rows()
    }

    pub fn size(&self) -> usize {
        self.inner.weight()
    }

    pub fn shape(&self) -> Partition {
        self.inner.shape()
    }

    /// Row index (0-based) of each entry `1..=size`.
    fn row_of_entry(&self) -> Vec<usize> {
        let mut rows = vec![0; self.size()];
        for (i, row) in self.inner.rows.iter().enumerate() {
            for &a in row {
                rows[a as usize - 1] = i;
            }
        }
        rows
    }

    /// Entries `i` such that `i + 1` appears in a row of greater index.
    pub fn descent_set(&self) -> Vec<u32> {
        let rows = self.row_of_entry();
        (1..self.size() as u32)
            .filter(|&i| rows[i as usize] > rows[i as usize - 1])
            .collect()
    }

    /// Top-to-bottom, left-to-right concatenation of the rows.
    pub fn row_reading(&self) -> Word {
        Word::new(self.inner.rows.iter().flatten().copied().collect()).expect("validated entries")
    }

    pub fn render(&self) -> String {
        self.inner.render()
    }
}

impl fmt::Debug for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SYT{:?}", self.inner.rows)
    }
}

/// The composition `(i_1, i_2 - i_1, ..., size - i_k)` recorded by the
/// descent set `{i_1 < ... < i_k}` of `s`.
pub fn descent_composition(s: &StandardYoungTableau) -> Composition {
    let size = s.size() as u32;
    if size == 0 {
        return Composition::new(Vec::new()).expect("empty");
    }
    let mut parts = Vec::new();
    let mut prev = 0;
    for d in s.descent_set() {
        parts.push(d - prev);
        prev = d;
    }
    parts.push(size - prev);
    Composition::new(parts).expect("positive gaps")
}

/// A quasi-ribbon tableau: row `i + 1` starts in the column of the last cell
/// of row `i`; rows weakly increase and shared columns strictly increase.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuasiRibbonTableau {
    rows: Vec<Vec<u32>>,
}

impl QuasiRibbonTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.iter().flatten().any(|&a| a == 0) {
            return Err(Error::InvalidLetter);
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau("rows must weakly increase".into()));
            }
        }
        // Consecutive rows overlap in exactly one column: the last cell of row
        // i sits directly above the first cell of row i + 1.
        for i in 1..rows.len() {
            if *rows[i - 1].last().expect("nonempty") >= rows[i][0] {
                return Err(Error::InvalidTableau(
                    "columns must strictly increase".into(),
                ));
            }
        }
        Ok(QuasiRibbonTableau { rows })
    }

    pub fn empty() -> Self {
        QuasiRibbonTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("validated row lengths")
    }

    pub fn weight(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn evaluation(&self) -> Evaluation {
        evaluation_of_entries(self.rows.iter().flatten().copied())
    }

    /// 1-based column index of the leftmost cell of each row.
    pub fn column_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.rows.len());
        let mut col = 1;
        for row in &self.rows {
            offsets.push(col);
            col += row.len() - 1;
        }
        offsets
    }

    /// Entries in ribbon order: rows top to bottom, left to right. This
    /// reading is weakly increasing.
    pub fn ribbon_entries(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Columns left to right, each read bottom to top.
    pub fn column_reading(&self) -> Word {
        let offsets = self.column_offsets();
        let mut cells: Vec<(usize, isize, u32)> = Vec::with_capacity(self.weight());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                cells.push((offsets[i] + j, -(i as isize), a));
            }
        }
        cells.sort();
        Word::new(cells.into_iter().map(|(_, _, a)| a).collect()).expect("validated entries")
    }

    /// Plain-text rendering in the staircase layout.
    pub fn render(&self) -> String {
        let offsets: Vec<usize> = self.column_offsets().iter().map(|c| c - 1).collect();
        render_rows(&self.rows, &offsets)
    }
}

impl fmt::Debug for QuasiRibbonTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiRibbon{:?}", self.rows)
    }
}

impl Serialize for QuasiRibbonTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QuasiRibbonTableau", 3)?;
        s.serialize_field("shape", &self.shape().parts())?;
        s.serialize_field("rows", &self.rows)?;
        s.serialize_field("offsets", &self.column_offsets())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for QuasiRibbonTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(default)]
            #[allow(dead_code)]
            shape: Vec<u32>,
            rows: Vec<Vec<u32>>,
            #[serde(default)]
            #[allow(dead_code)]
            offsets: Vec<usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        QuasiRibbonTableau::new(raw.rows).map_err(serde::de::Error::custom)
    }
}

fn render_rows(rows: &[Vec<u32>], indents: &[usize]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|a| a.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for (row, &indent) in rows.iter().zip(indents) {
        let mut line = " ".repeat(indent * (width + 1));
        for (j, a) in row.iter().enumerate() {
            if j > 0 {
                line.push(' ');
            }
            line.push_str(&format!("{a:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// A division of a tableau's cells into bands, together with its type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalParsing {
    bands: Vec<Vec<(usize, usize)>>,
    ty: Composition,
}

impl MinimalParsing {
    /// Bands as cell sets `(row, column)`, 0-based, each sorted by column.
    pub fn bands(&self) -> &[Vec<(usize, usize)>] {
        &self.bands
    }

    pub fn ty(&self) -> &Composition {
        &self.ty
    }

    /// Checks the two band axioms directly against `t`: cells of a band go
    /// weakly up and strictly right with weakly increasing entries, and a band
    /// containing one copy of a letter contains all of them.
    pub fn satisfies_band_axioms(&self, t: &YoungTableau) -> bool {
        let mut letter_band: BTreeMap<u32, usize> = BTreeMap::new();
        for (b, band) in self.bands.iter().enumerate() {
            for window in band.windows(2) {
                let (i1, j1) = window[0];
                let (i2, j2) = window[1];
                if j1 >= j2 || i1 < i2 || t.rows()[i1][j1] > t.rows()[i2][j2] {
                    return false;
                }
            }
            for &(i, j) in band {
                let prev = letter_band.insert(t.rows()[i][j], b);
                if prev.is_some_and(|p| p != b) {
                    return false;
                }
            }
        }
        true
    }
}

/// Divides `t` into bands: the cells of its standardization holding each
/// consecutive block of the descent composition form one band.
pub fn minimal_parsing(t: &YoungTableau) -> MinimalParsing {
    let s = t.standardize();
    let ty = descent_composition(&s);
    let mut cell_of_entry = vec![(0usize, 0usize); s.size()];
    for (i, row) in s.rows().iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            cell_of_entry[a as usize - 1] = (i, j);
        }
    }
    let mut bands = Vec::with_capacity(ty.len());
    let mut next = 0usize;
    for &part in ty.parts() {
        let mut band: Vec<(usize, usize)> = cell_of_entry[next..next + part as usize].to_vec();
        band.sort_by_key(|&(_, j)| j);
        bands.push(band);
        next += part as usize;
    }
    MinimalParsing { bands, ty }
}

/// All standard Young tableaux of shape `lambda`, sorted lexicographically by
/// row-reading word.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardYoungTableau> {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let size: usize = shape.iter().sum();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();

    fn rec(
        entry: u32,
        size: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<StandardYoungTableau>,
    ) {
        if entry as usize > size {
            let tableau = YoungTableau::new(rows.clone()).expect("construction preserves validity");
            out.push(StandardYoungTableau::new(tableau).expect("entries are a permutation"));
            return;
        }
        for i in 0..shape.len() {
            let filled = rows[i].len();
            if filled < shape[i] && (i == 0 || rows[i - 1].len() > filled) {
                rows[i].push(entry);
                rec(entry + 1, size, shape, rows, out);
                rows[i].pop();
            }
        }
    }

    rec(1, size, &shape, &mut rows, &mut out);
    out.sort_by_key(|s| s.row_reading().letters().to_vec());
    out
}

/// Number of standard Young tableaux of shape `lambda` by the hook length
/// formula. Intended as an independent check on [`enumerate_syt`].
pub fn hook_length_count(lambda: &Partition) -> u64 {
    let parts = lambda.parts();
    let conj = crate::word::conjugate(&lambda.as_composition());
    let size = lambda.weight() as u64;
    let mut numerator = 1u128;
    for k in 1..=size as u128 {
        numerator *= k;
    }
    let mut denominator = 1u128;
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len as usize {
            let hook = (len as usize - j) + (conj.parts()[j] as usize - i) - 1;
            denominator *= hook as u128;
        }
    }
    (numerator / denominator) as u64
}

/// All Young tableaux of shape `lambda` with entries at most `max_entry`,
/// in deterministic order.
pub fn young_tableaux_of_shape(lambda: &Partition, max_entry: u32) -> Vec<YoungTableau> {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut out = Vec::new();

    fn rec(shape: &[usize], max_entry: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<YoungTableau>) {
        let i = rows.len();
        if i == shape.len() {
            out.push(YoungTableau::new(rows.clone()).expect("constraints enforced"));
            return;
        }
        let mut row: Vec<u32> = Vec::with_capacity(shape[i]);
        fill_row(shape, max_entry, rows, &mut row, out);
    }

    fn fill_row(
        shape: &[usize],
        max_entry: u32,
        rows: &mut Vec<Vec<u32>>,
        row: &mut Vec<u32>,
        out: &mut Vec<YoungTableau>,
    ) {
        let i = rows.len();
        let j = row.len();
        if j == shape[i] {
            rows.push(std::mem::take(row));
            rec(shape, max_entry, rows, out);
            *row = rows.pop().expect("just pushed");
            return;
        }
        let mut lo = if j > 0 { row[j - 1] } else { 1 };
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        for a in lo..=max_entry {
            row.push(a);
            fill_row(shape, max_entry, rows, row, out);
            row.pop();
        }
    }

    rec(&shape, max_entry, &mut rows, &mut out);
    out
}

/// All quasi-ribbon tableaux of shape `sigma` with entries at most
/// `max_entry`, in deterministic order.
pub fn quasi_ribbons_of_shape(sigma: &Composition, max_entry: u32) -> Vec<QuasiRibbonTableau> {
    let m = sigma.weight() as usize;
    if m == 0 {
        return vec![QuasiRibbonTableau::empty()];
    }
    // Ribbon-order entries weakly increase, strictly at row boundaries.
    let mut boundaries = vec![false; m];
    let mut acc = 0usize;
    for &part in &sigma.parts()[..sigma.len() - 1] {
        acc += part as usize;
        boundaries[acc - 1] = true;
    }
    let mut entries: Vec<u32> = Vec::with_capacity(m);
    let mut out = Vec::new();

    fn rec(
        k: usize,
        m: usize,
        max_entry: u32,
        boundaries: &[bool],
        sigma: &Composition,
        entries: &mut Vec<u32>,
        out: &mut Vec<QuasiRibbonTableau>,
    ) {
        if k == m {
            let mut rows = Vec::with_capacity(sigma.len());
            let mut at = 0usize;
            for &part in sigma.parts() {
                rows.push(entries[at..at + part as usize].to_vec());
                at += part as usize;
            }
            out.push(QuasiRibbonTableau::new(rows).expect("constraints enforced"));
            return;
        }
        let lo = if k == 0 {
            1
        } else if boundaries[k - 1] {
            entries[k - 1] + 1
        } else {
            entries[k - 1]
        };
        for a in lo..=max_entry {
            entries.push(a);
            rec(k + 1, m, max_entry, boundaries, sigma, entries, out);
            entries.pop();
        }
    }

    rec(0, m, max_entry, &boundaries, sigma, &mut entries, &mut out);
    out
}

/// The highest-weight quasi-ribbon of shape `sigma`: row `i` filled with `i`.
pub fn highest_weight_quasi_ribbon(sigma: &Composition) -> QuasiRibbonTableau {
    let rows = sigma
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| vec![i as u32 + 1; part as usize])
        .collect();
    QuasiRibbonTableau::new(rows).expect("staircase of constant rows is valid")
}

/// The highest-weight Young tableau of shape `lambda`: row `i` filled with `i`.
pub fn highest_weight_young_tableau(lambda: &Partition) -> YoungTableau {
    let rows = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| vec![i as u32 + 1; part as usize])
        .collect();
    YoungTableau::new(rows).expect("constant rows of a partition shape are valid")
}
