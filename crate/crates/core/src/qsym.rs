//! Exact expansions: fundamental quasi-symmetric, monomial quasi-symmetric
//! and Schur polynomials on a fixed variable count, the Schur-to-fundamental
//! expansion, and the row-slide map from quasi-ribbons to Young tableaux.
//!
//! All arithmetic is exact integer arithmetic on exponent vectors.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::insertion::{hypoplactic_insert, schensted_insert};
use crate::tableau::{
    descent_composition, enumerate_syt, highest_weight_quasi_ribbon, quasi_ribbons_of_shape,
    young_tableaux_of_shape, QuasiRibbonTableau, StandardYoungTableau, YoungTableau,
};
use crate::word::{refinements, sort_to_partition, Composition, Evaluation, Partition};
use crate::Result;

/// A polynomial in `n_vars` variables with integer coefficients, stored as a
/// map from exponent vectors (always of length `n_vars`) to coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPolynomial {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl ExactPolynomial {
    pub fn zero(n_vars: usize) -> Self {
        ExactPolynomial {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Monomials in lexicographic exponent order (graded-lex within the
    /// homogeneous polynomials produced here).
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn monomial_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients, i.e. the evaluation at `x_i = 1`.
    pub fn evaluate_at_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, mut exponents: Vec<u32>, coefficient: i64) {
        assert!(exponents.len() <= self.n_vars, "exponent vector too long");
        exponents.resize(self.n_vars, 0);
        match self.terms.get_mut(&exponents) {
            Some(entry) => {
                *entry += coefficient;
                if *entry == 0 {
                    self.terms.remove(&exponents);
                }
            }
            None => {
                if coefficient != 0 {
                    self.terms.insert(exponents, coefficient);
                }
            }
        }
    }

    /// Adds `scale * other` into `self`.
    pub fn add_scaled(&mut self, other: &ExactPolynomial, scale: i64) {
        assert_eq!(self.n_vars, other.n_vars);
        for (exp, &c) in &other.terms {
            self.add_term(exp.clone(), c * scale);
        }
    }

    /// Records `x^ev` for an evaluation vector.
    pub fn add_evaluation_monomial(&mut self, ev: &Evaluation) {
        self.add_term(ev.counts().to_vec(), 1);
    }
}

impl fmt::Display for ExactPolynomial {
    /// One monomial per line in exponent-lex order: `2*x1^2*x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (exp, coeff) in &self.terms {
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            let body = if vars.is_empty() {
                "1".to_string()
            } else {
                vars.join("*")
            };
            if *coeff == 1 {
                writeln!(f, "{body}")?;
            } else {
                writeln!(f, "{coeff}*{body}")?;
            }
        }
        Ok(())
    }
}

/// A non-negative integer combination of compositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymExpansion {
    terms: BTreeMap<Composition, u64>,
}

impl QSymExpansion {
    pub fn terms(&self) -> &BTreeMap<Composition, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, alpha: &Composition) -> u64 {
        self.terms.get(alpha).copied().unwrap_or(0)
    }

    /// Total multiplicity over all terms.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for QSymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (comp, mult) in &self.terms {
            writeln!(f, "{comp}:{mult}")?;
        }
        Ok(())
    }
}

/// The monomial quasi-symmetric polynomial: one monomial per strictly
/// increasing choice of `len(beta)` variables out of `n`.
pub fn monomial_poly(beta: &Composition, n: usize) -> ExactPolynomial {
    let mut poly = ExactPolynomial::zero(n);
    let k = beta.len();
    if k > n {
        return poly;
    }
    let mut choice: Vec<usize> = Vec::with_capacity(k);
    fn rec(
        beta: &Composition,
        n: usize,
        start: usize,
        choice: &mut Vec<usize>,
        poly: &mut ExactPolynomial,
    ) {
        if choice.len() == beta.len() {
            let mut exp = vec![0u32; n];
            for (slot, &var) in choice.iter().enumerate() {
                exp[var] = beta.parts()[slot];
            }
            poly.add_term(exp, 1);
            return;
        }
        let remaining = beta.len() - choice.len();
        for var in start..=n - remaining {
            choice.push(var);
            rec(beta, n, var + 1, choice, poly);
            choice.pop();
        }
    }
    rec(beta, n, 0, &mut choice, &mut poly);
    poly
}

/// The fundamental quasi-symmetric polynomial as the sum of the monomial
/// polynomials of all refinements of `alpha`.
pub fn fundamental_poly(alpha: &Composition, n: usize) -> ExactPolynomial {
    let mut poly = ExactPolynomial::zero(n);
    for beta in refinements(alpha) {
        poly.add_scaled(&monomial_poly(&beta, n), 1);
    }
    poly
}

/// The same polynomial as the sum of `x^Q` over the quasi-ribbon tableaux of
/// shape `alpha` with entries at most `n`. Kept as an independent route.
pub fn fundamental_poly_via_ribbons(alpha: &Composition, n: usize) -> ExactPolynomial {
    let mut poly = ExactPolynomial::zero(n);
    for q in quasi_ribbons_of_shape(alpha, n as u32) {
        poly.add_evaluation_monomial(&q.evaluation());
    }
    poly
}

/// The Schur polynomial as the sum of `x^T` over Young tableaux of shape
/// `lambda` with entries at most `n`.
pub fn schur_poly(lambda: &Partition, n: usize) -> ExactPolynomial {
    let mut poly = ExactPolynomial::zero(n);
    for t in young_tableaux_of_shape(lambda, n as u32) {
        poly.add_evaluation_monomial(&t.evaluation());
    }
    poly
}

/// The expansion of the Schur function into fundamentals: the multiset of
/// descent compositions over all standard Young tableaux of shape `lambda`.
pub fn schur_to_fundamental(lambda: &Partition) -> QSymExpansion {
    let mut terms: BTreeMap<Composition, u64> = BTreeMap::new();
    for s in enumerate_syt(lambda) {
        *terms.entry(descent_composition(&s)).or_insert(0) += 1;
    }
    QSymExpansion { terms }
}

/// Slides the rows of a quasi-ribbon to column 1, then slides cells up each
/// column to close the gaps. The output is validated as a Young tableau.
pub fn xi_map(q: &QuasiRibbonTableau) -> Result<YoungTableau> {
    if q.is_empty() {
        return Ok(YoungTableau::empty());
    }
    // columns of the left-aligned stack, top to bottom
    let width = q.rows().iter().map(Vec::len).max().expect("nonempty");
    let mut columns: Vec<Vec<u32>> = vec![Vec::new(); width];
    for row in q.rows() {
        for (j, &a) in row.iter().enumerate() {
            columns[j].push(a);
        }
    }
    let height = columns[0].len();
    let rows: Vec<Vec<u32>> = (0..height)
        .map(|i| {
            columns
                .iter()
                .filter(|c| i < c.len())
                .map(|c| c[i])
                .collect()
        })
        .collect();
    YoungTableau::new(rows).map_err(|e| {
        Error::TheoremViolation(format!("slide image of {q:?} is not a Young tableau: {e}"))
    })
}

/// Checks the intertwining identity on one input: sliding after the
/// quasi-Kashiwara `f_i` equals the Kashiwara `f_i` after sliding (both
/// tableau actions run through column readings).
pub fn xi_intertwines(q: &QuasiRibbonTableau, i: u32) -> Result<bool> {
    let w = q.column_reading();
    let moved = crate::crystal::quasi_kashiwara_f(&w, i)
        .ok_or_else(|| Error::Parameter(format!("operator f_{i} is undefined on {w}")))?;
    let lhs = xi_map(&hypoplactic_insert(&moved))?;

    let t = xi_map(q)?;
    let Some(tw) = crate::crystal::kashiwara_f(&t.column_reading(), i) else {
        return Ok(false);
    };
    let rhs = schensted_insert(&tw);
    Ok(lhs == rhs)
}

/// Builds the standard Young tableau of shape `sort(alpha)` whose descent
/// composition is `alpha`: standardize the slide image of the highest-weight
/// quasi-ribbon of shape `alpha`. Both claims are validated before returning.
pub fn verify_schur_reorder(alpha: &Composition) -> Result<StandardYoungTableau> {
    let lambda = sort_to_partition(alpha);
    let q = highest_weight_quasi_ribbon(alpha);
    let t = xi_map(&q)?;
    let witness = t.standardize();
    if witness.shape() != lambda {
        return Err(Error::TheoremViolation(format!(
            "witness for {alpha} has shape {} instead of {lambda}",
            witness.shape()
        )));
    }
    let dc = descent_composition(&witness);
    if &dc != alpha {
        return Err(Error::TheoremViolation(format!(
            "witness for {alpha} has descent composition {dc}"
        )));
    }
    Ok(witness)
}
