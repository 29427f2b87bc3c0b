//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] is a finite map from exponent vectors to nonzero
//! rationals, over a fixed number of variables. Stored coefficients are
//! never zero and every exponent vector has length `nvars`; all arithmetic
//! preserves these invariants. [`WeightSystem`] carries the positive
//! rational weights `(w_1, ..., w_n)` together with `w = sum w_i`, and
//! gives each monomial its plain weight `sum a_i w_i` and its shifted
//! weight `w + sum a_i w_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{denominator_lcm, rat_int, Rat};

/// Exponent vector of a monomial: `(a_1, ..., a_n)` for `x_1^{a_1} ... x_n^{a_n}`.
///
/// The derived `Ord` (lexicographic on entries) is used only as a canonical
/// storage key; term comparisons inside algorithms go through
/// [`crate::order::MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when `other` divides `self`.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Exponent(out))
    }

    /// Divisibility of monomials: `x^self | x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Coprime monomials: no variable occurs in both.
    pub fn is_coprime_with(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(i)` when the exponent is supported on the single variable `i`
    /// (pure power `x_i^k`, `k >= 1`).
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &a) in self.0.iter().enumerate() {
            if a > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Sparse polynomial over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Exponent::zero(nvars), c);
        }
        p
    }

    pub fn variable(nvars: usize, var: usize) -> Result<Self> {
        if var >= nvars {
            return Err(Error::IndexOutOfRange { index: var, nvars });
        }
        Ok(Self::monomial(Exponent::unit(nvars, var), Rat::one()))
    }

    /// Single-term polynomial `c * x^m`. A zero coefficient gives 0.
    pub fn monomial(m: Exponent, c: Rat) -> Self {
        let mut p = Self::zero(m.len());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Build from raw terms, combining duplicates and dropping zeros.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponent, Rat)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: m.len(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^m` (zero when absent).
    pub fn coeff(&self, m: &Exponent) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Exponent::zero(self.nvars))
    }

    /// Terms in canonical storage order (lexicographic on exponents).
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Exponent::total_degree)
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, m: Exponent, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_nvars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_nvars(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.add(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiply by the single term `c * x^m`.
    pub fn mul_term(&self, m: &Exponent, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.add(m), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Self::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self).expect("same nvars");
        }
        out
    }

    /// Exact formal partial derivative with respect to variable `var` (0-based).
    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let a = m.0[var];
            if a == 0 {
                continue;
            }
            let mut e = m.clone();
            e.0[var] = a - 1;
            out.add_term(e, c * rat_int(a as i64));
        }
        Ok(out)
    }

    /// All `nvars` partial derivatives.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars)
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &a) in m.0.iter().enumerate() {
                for _ in 0..a {
                    v *= &point[i];
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitute `subs[i]` for variable `i`. All substituted polynomials
    /// must share a common variable count, which becomes the result's.
    pub fn substitute(&self, subs: &[Polynomial]) -> Result<Polynomial> {
        if subs.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: subs.len(),
            });
        }
        let out_nvars = subs.first().map(|p| p.nvars).unwrap_or(0);
        for s in subs {
            if s.nvars != out_nvars {
                return Err(Error::DimensionMismatch {
                    expected: out_nvars,
                    got: s.nvars,
                });
            }
        }
        let mut out = Polynomial::zero(out_nvars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(out_nvars, c.clone());
            for (i, &a) in m.0.iter().enumerate() {
                if a > 0 {
                    term = term.mul(&subs[i].pow(a))?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Extend to `nvars + extra` variables, the new ones unused.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let nvars = self.nvars + extra;
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Exponent(e), c.clone())
                })
                .collect(),
        }
    }

    /// Primitive integer form: multiply by the lcm of coefficient
    /// denominators, divide by the gcd of numerators, and normalize the
    /// sign so the canonically largest exponent has a positive coefficient.
    pub fn content_normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<Rat> = self.terms.values().cloned().collect();
        let lcm = denominator_lcm(&coeffs);
        let mut gcd = num_bigint::BigInt::zero();
        for c in &coeffs {
            let n = c.numer() * &lcm / c.denom();
            gcd = num_integer::Integer::gcd(&gcd, &n);
        }
        let mut factor = Rat::new(lcm, gcd);
        let lead = self.terms.iter().next_back().expect("nonzero");
        if (lead.1 * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

/// Positive rational weights `(w_1, ..., w_n)` with cached `w = sum w_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<Rat>,
    total: Rat,
}

impl WeightSystem {
    pub fn new(weights: Vec<Rat>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::WeightOutOfRange);
        }
        let total = weights.iter().fold(Rat::zero(), |acc, w| acc + w);
        Ok(WeightSystem { weights, total })
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// `w = sum_i w_i`, the shifted weight of the monomial 1.
    pub fn total(&self) -> &Rat {
        &self.total
    }

    /// Plain weight `sum a_i w_i`; the grading in which a weighted
    /// homogeneous polynomial has weight 1.
    pub fn plain_weight(&self, m: &Exponent) -> Rat {
        m.0.iter()
            .zip(&self.weights)
            .fold(Rat::zero(), |acc, (&a, w)| acc + w * rat_int(a as i64))
    }

    /// Shifted weight `w + sum a_i w_i`.
    pub fn shifted_weight(&self, m: &Exponent) -> Rat {
        self.plain_weight(m) + &self.total
    }

    /// Lcm of the weight denominators.
    pub fn denominator_lcm(&self) -> num_bigint::BigInt {
        denominator_lcm(&self.weights)
    }
}

/// Plain or shifted monomial weight under `weights`.
pub fn monomial_weight(m: &Exponent, weights: &WeightSystem, shifted: bool) -> Result<Rat> {
    if m.len() != weights.nvars() {
        return Err(Error::DimensionMismatch {
            expected: weights.nvars(),
            got: m.len(),
        });
    }
    Ok(if shifted {
        weights.shifted_weight(m)
    } else {
        weights.plain_weight(m)
    })
}

/// True iff every support exponent of `f` has plain weight exactly 1.
pub fn is_weighted_homogeneous(f: &Polynomial, weights: &WeightSystem) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() != weights.nvars() {
        return Err(Error::DimensionMismatch {
            expected: weights.nvars(),
            got: f.nvars(),
        });
    }
    Ok(f.support().all(|m| weights.plain_weight(m).is_one()))
}

/// Solve `sum_i m_i w_i = 1` over the support of `f`.
///
/// Returns the weight system when the linear system has a unique solution
/// with every `w_i > 0`, and `None` otherwise (inconsistent system,
/// underdetermined system, or non-positive solution).
pub fn infer_weights(f: &Polynomial) -> Result<Option<WeightSystem>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.nvars();
    // Rows of [A | 1], A the support exponents.
    let mut rows: Vec<Vec<Rat>> = f
        .support()
        .map(|m| {
            let mut row: Vec<Rat> = m.0.iter().map(|&a| rat_int(a as i64)).collect();
            row.push(Rat::one());
            row
        })
        .collect();

    // Gaussian elimination with exact pivots.
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][col].clone();
        for v in rows[r].iter_mut() {
            *v /= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (dst, src) in row.iter_mut().zip(&pivot_row) {
                    *dst -= src * &factor;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    // Inconsistent: a zero row with nonzero rhs.
    for row in rows.iter().skip(r) {
        if !row[n].is_zero() {
            return Ok(None);
        }
    }
    // Underdetermined: fewer pivots than variables.
    if pivot_cols.len() < n {
        return Ok(None);
    }
    let mut weights = vec![Rat::zero(); n];
    for (i, &col) in pivot_cols.iter().enumerate() {
        weights[col] = rows[i][n].clone();
    }
    if weights.iter().any(|w| !w.is_positive()) {
        return Ok(None);
    }
    Ok(Some(WeightSystem::new(weights)?))
}

/// Canonical formatting order: total degree ascending, then exponent
/// vectors lexicographically descending (x-heavy terms first).
fn format_order(terms: &BTreeMap<Exponent, Rat>) -> Vec<(&Exponent, &Rat)> {
    let mut v: Vec<_> = terms.iter().collect();
    v.sort_by(|(a, _), (b, _)| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| b.0.cmp(&a.0))
    });
    v
}

/// Render `f` in the text grammar accepted by [`crate::parse::parse_polynomial`].
pub fn format_polynomial(f: &Polynomial, variables: &[String]) -> String {
    assert_eq!(variables.len(), f.nvars(), "variable list length");
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in format_order(&f.terms).into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors = Vec::new();
        if !abs.is_one() || m.is_zero() {
            factors.push(abs.to_string());
        }
        for (v, &a) in m.0.iter().enumerate() {
            match a {
                0 => {}
                1 => factors.push(variables[v].clone()),
                _ => factors.push(format!("{}^{}", variables[v], a)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_variable_names(self.nvars);
        write!(f, "{}", format_polynomial(self, &names))
    }
}

/// `x, y, z, w, x5, x6, ...` by arity.
pub fn default_variable_names(nvars: usize) -> Vec<String> {
    const NAMED: [&str; 4] = ["x", "y", "z", "w"];
    (0..nvars)
        .map(|i| {
            if i < NAMED.len() {
                NAMED[i].to_string()
            } else {
                format!("x{}", i + 1)
            }
        })
        .collect()
}
