//! Fractional Laurent polynomials and closed-form series.
//!
//! A [`FracLaurent`] is a finite map from exact rational exponents to
//! nonzero integer multiplicities, written `sum n_a * t^a`. This is the
//! value type for spectra and for Hilbert-Poincare series of graded
//! quotients. [`spectrum_formula`] expands the weighted homogeneous
//! spectrum product `prod_j (t^{w_j} - t) / (1 - t^{w_j})` exactly, and
//! [`hp_closed_form`] expands the series of a graded quotient by a regular
//! sequence up to a caller-supplied exponent bound.
//!
//! All fractional-exponent arithmetic is reduced to ordinary univariate
//! arithmetic by substituting `u = t^(1/D)` for `D` the lcm of the
//! exponent denominators.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rat::{denominator_lcm, Rat};

/// Finite map from rational exponents to nonzero integer multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FracLaurent {
    terms: BTreeMap<Rat, i64>,
}

impl FracLaurent {
    pub fn zero() -> Self {
        FracLaurent::default()
    }

    /// The single term `t^a`.
    pub fn monomial(exponent: Rat) -> Self {
        Self::term(exponent, 1)
    }

    /// The single term `mult * t^a`.
    pub fn term(exponent: Rat, mult: i64) -> Self {
        let mut fl = Self::zero();
        fl.add_term(exponent, mult);
        fl
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rat, i64)>) -> Self {
        let mut fl = Self::zero();
        for (e, m) in terms {
            fl.add_term(e, m);
        }
        fl
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &i64)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, exponent: &Rat) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponent: Rat, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &FracLaurent) -> FracLaurent {
        let mut out = self.clone();
        for (e, m) in &other.terms {
            out.add_term(e.clone(), *m);
        }
        out
    }

    pub fn sub(&self, other: &FracLaurent) -> FracLaurent {
        let mut out = self.clone();
        for (e, m) in &other.terms {
            out.add_term(e.clone(), -*m);
        }
        out
    }

    /// Add `q` to every exponent.
    pub fn shift_by(&self, q: &Rat) -> FracLaurent {
        FracLaurent {
            terms: self.terms.iter().map(|(e, m)| (e + q, *m)).collect(),
        }
    }

    /// Sum of multiplicities, `f(1)`.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Exponent reflection `a -> pivot - a` (termwise).
    pub fn reflect(&self, pivot: &Rat) -> FracLaurent {
        FracLaurent {
            terms: self.terms.iter().map(|(e, m)| (pivot - e, *m)).collect(),
        }
    }

    pub fn min_exponent(&self) -> Option<&Rat> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&Rat> {
        self.terms.keys().next_back()
    }

    /// JSON form: sorted array of `{"exponent": "p/q", "multiplicity": n}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, m)| {
                    serde_json::json!({
                        "exponent": e.to_string(),
                        "multiplicity": m,
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for FracLaurent {
    /// Text form: `t^(5/6) + 2*t^(7/6)`, exponent 1 printed as `t`,
    /// integer exponents without parentheses, constants as plain integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, m)) in self.terms.iter().enumerate() {
            let neg = *m < 0;
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mag = m.unsigned_abs();
            let power = if e.is_zero() {
                String::new()
            } else if e.is_one() {
                "t".to_string()
            } else if e.is_integer() {
                format!("t^{}", e)
            } else {
                format!("t^({})", e)
            };
            if power.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag == 1 {
                write!(f, "{}", power)?;
            } else {
                write!(f, "{}*{}", mag, power)?;
            }
        }
        Ok(())
    }
}

/// Dense univariate polynomial over `Rat`, ascending coefficients.
fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_trim(mut a: Vec<Rat>) -> Vec<Rat> {
    while a.last().is_some_and(Rat::is_zero) {
        a.pop();
    }
    a
}

/// Exact division `num / den`; `None` when the remainder is nonzero.
fn poly_div_exact(num: &[Rat], den: &[Rat]) -> Option<Vec<Rat>> {
    let num = poly_trim(num.to_vec());
    let den = poly_trim(den.to_vec());
    assert!(!den.is_empty(), "division by zero polynomial");
    if num.is_empty() {
        return Some(Vec::new());
    }
    if num.len() < den.len() {
        return None;
    }
    let mut rem = num;
    let mut quot = vec![Rat::zero(); rem.len() - den.len() + 1];
    let lead = den.last().expect("nonzero").clone();
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let factor = rem.last().expect("nonzero") / &lead;
        quot[shift] = factor.clone();
        for (i, d) in den.iter().enumerate() {
            let delta = d * &factor;
            rem[shift + i] -= delta;
        }
        rem = poly_trim(rem);
        if rem.is_empty() {
            return Some(quot);
        }
        if rem.len() < den.len() {
            return None;
        }
    }
    None
}

/// Closed-form Hodge spectrum of a weighted homogeneous isolated
/// singularity: the exact expansion of
/// `prod_{j=1}^n (t^{w_j} - t) / (1 - t^{w_j})`.
///
/// Requires every `w_j` in the open interval (0, 1); fails with
/// [`Error::NotASpectrum`] when the product does not expand to a
/// polynomial.
pub fn spectrum_formula(weights: &crate::poly::WeightSystem) -> Result<FracLaurent> {
    for w in weights.weights() {
        if !w.is_positive() || w >= &Rat::one() {
            return Err(Error::WeightOutOfRange);
        }
    }
    let big_d = denominator_lcm(weights.weights());
    let d = big_d.to_usize().expect("lcm of small denominators");
    // u = t^(1/D); a_j = D*w_j < D.
    let mut num = vec![Rat::one()];
    let mut den = vec![Rat::one()];
    for w in weights.weights() {
        let a = (w.numer() * &big_d / w.denom())
            .to_usize()
            .expect("scaled weight");
        // u^a - u^D
        let mut factor = vec![Rat::zero(); d + 1];
        factor[a] += Rat::one();
        factor[d] -= Rat::one();
        num = poly_mul(&num, &poly_trim(factor));
        // 1 - u^a
        let mut factor = vec![Rat::zero(); a + 1];
        factor[0] = Rat::one();
        factor[a] -= Rat::one();
        den = poly_mul(&den, &factor);
    }
    let quot = poly_div_exact(&num, &den).ok_or(Error::NotASpectrum)?;
    let mut out = FracLaurent::zero();
    for (k, c) in quot.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::NotASpectrum);
        }
        let mult = c.to_integer().to_i64().ok_or(Error::NotASpectrum)?;
        out.add_term(Rat::new(BigInt::from(k), big_d.clone()), mult);
    }
    Ok(out)
}

/// Hilbert-Poincare series of the graded quotient of the weighted
/// polynomial ring by a regular sequence of element weights `degrees`,
/// expanded exactly up to exponent `<= truncation`:
///
/// `t^w * prod_j (1 - t^{d_j - w}) / prod_i (1 - t^{w_i})`.
pub fn hp_closed_form(
    weights: &crate::poly::WeightSystem,
    degrees: &[Rat],
    truncation: &Rat,
) -> Result<FracLaurent> {
    for d in degrees {
        if !d.is_positive() {
            return Err(Error::BetaNotPositive);
        }
    }
    if !truncation.is_positive() {
        return Err(Error::BetaNotPositive);
    }
    let mut all: Vec<Rat> = weights.weights().to_vec();
    all.extend(degrees.iter().cloned());
    let big_d = denominator_lcm(&all);
    let scale = |r: &Rat| -> i64 {
        (r.numer() * &big_d / r.denom())
            .to_i64()
            .expect("scaled exponent")
    };
    let w_scaled = scale(weights.total());

    // Numerator Laurent polynomial: u^{Dw} * prod_j (1 - u^{D(d_j - w)}).
    let mut numer: BTreeMap<i64, Rat> = BTreeMap::new();
    numer.insert(w_scaled, Rat::one());
    for dj in degrees {
        let e = scale(dj) - w_scaled;
        let mut next: BTreeMap<i64, Rat> = BTreeMap::new();
        for (k, c) in &numer {
            *next.entry(*k).or_insert_with(Rat::zero) += c;
            *next.entry(*k + e).or_insert_with(Rat::zero) -= c;
        }
        next.retain(|_, c| !c.is_zero());
        numer = next;
    }
    let min_exp = numer.keys().next().copied().unwrap_or(0);
    let cutoff = scale(truncation);
    // Geometric factors need headroom up to cutoff - min_exp.
    let series_len = (cutoff - min_exp).max(0) as usize + 1;
    let mut series = vec![Rat::zero(); series_len];
    series[0] = Rat::one();
    for w in weights.weights() {
        let a = scale(w);
        if a <= 0 {
            return Err(Error::WeightOutOfRange);
        }
        // Multiply by 1/(1 - u^a): running sum with stride a.
        let a = a as usize;
        for k in a..series_len {
            let prev = series[k - a].clone();
            series[k] += prev;
        }
    }
    let mut out = FracLaurent::zero();
    for (k, c) in &numer {
        for (j, s) in series.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let e = k + j as i64;
            if e > cutoff {
                break;
            }
            let coeff = c * s;
            if coeff.is_zero() {
                continue;
            }
            if !coeff.is_integer() {
                return Err(Error::InvariantViolation(
                    "non-integer multiplicity in series expansion".into(),
                ));
            }
            out.add_term(
                Rat::new(BigInt::from(e), big_d.clone()),
                coeff.to_integer().to_i64().expect("small multiplicity"),
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::WeightSystem;
    use crate::rat::{rat, rat_int};

    fn ws(pairs: &[(i64, i64)]) -> WeightSystem {
        WeightSystem::new(pairs.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let a = FracLaurent::monomial(rat(1, 2));
        let b = FracLaurent::term(rat(1, 2), -1);
        assert!(a.add(&b).is_zero());
        let shifted = a.shift_by(&rat(1, 2));
        assert_eq!(shifted, FracLaurent::monomial(rat_int(1)));
    }

    #[test]
    fn two_segment_quintic_spectrum_mass() {
        // t^(1/2) + 2t^(7/10) + 2t^(9/10) + t + 2t^(11/10) + 2t^(13/10) + t^(3/2)
        let sp = FracLaurent::from_terms([
            (rat(1, 2), 1),
            (rat(7, 10), 2),
            (rat(9, 10), 2),
            (rat(1, 1), 1),
            (rat(11, 10), 2),
            (rat(13, 10), 2),
            (rat(3, 2), 1),
        ]);
        assert_eq!(sp.eval_at_one(), 11);
    }

    #[test]
    fn spectrum_a1() {
        let sp = spectrum_formula(&ws(&[(1, 2), (1, 2)])).unwrap();
        assert_eq!(sp, FracLaurent::monomial(rat_int(1)));
        assert_eq!(sp.to_string(), "t");
    }

    #[test]
    fn spectrum_cusp() {
        let sp = spectrum_formula(&ws(&[(1, 2), (1, 3)])).unwrap();
        assert_eq!(
            sp,
            FracLaurent::from_terms([(rat(5, 6), 1), (rat(7, 6), 1)])
        );
        assert_eq!(sp.to_string(), "t^(5/6) + t^(7/6)");
    }

    #[test]
    fn spectrum_brieskorn_mass() {
        let sp = spectrum_formula(&ws(&[(1, 3), (1, 5)])).unwrap();
        assert_eq!(sp.eval_at_one(), 8);
        // Diagonal weights: the mass is prod (1/w_i - 1).
        for a in 2..=6 {
            for b in 2..=6 {
                let sp = spectrum_formula(&ws(&[(1, a), (1, b)])).unwrap();
                assert_eq!(sp.eval_at_one(), (a - 1) * (b - 1));
            }
        }
    }

    #[test]
    fn spectrum_rejects_invalid_weights() {
        assert!(matches!(
            spectrum_formula(&ws(&[(2, 3)])),
            Err(Error::NotASpectrum)
        ));
        assert!(matches!(
            spectrum_formula(&WeightSystem::new(vec![rat_int(1)]).unwrap()),
            Err(Error::WeightOutOfRange)
        ));
    }

    #[test]
    fn spectrum_symmetry() {
        for weights in [
            ws(&[(1, 2), (1, 3)]),
            ws(&[(1, 3), (1, 5)]),
            ws(&[(3, 8), (1, 4)]),
        ] {
            let sp = spectrum_formula(&weights).unwrap();
            let n = rat_int(weights.nvars() as i64);
            assert_eq!(sp, sp.reflect(&n), "symmetry for {:?}", weights);
            for (e, _) in sp.terms() {
                assert!(e > &rat_int(0) && e < &n);
            }
        }
    }

    // Oracle: with no relations the series is the sum of t^{wt(m)} over
    // all monomials with shifted weight within the bound.
    #[test]
    fn hp_with_no_relations_matches_enumeration() {
        let weights = ws(&[(1, 2), (1, 3)]);
        let bound = rat_int(2);
        let hp = hp_closed_form(&weights, &[], &bound).unwrap();
        let mut expect = FracLaurent::zero();
        for a in 0..=4u32 {
            for b in 0..=6u32 {
                let wt = weights.shifted_weight(&crate::poly::Exponent(vec![a, b]));
                if wt <= bound {
                    expect.add_term(wt, 1);
                }
            }
        }
        assert_eq!(hp, expect);
    }

    #[test]
    fn hp_with_jacobian_degrees_is_the_spectrum() {
        // Degrees 1 - w_i + w of the partials.
        let weights = ws(&[(1, 2), (1, 3)]);
        let w = weights.total().clone();
        let degrees: Vec<Rat> = weights
            .weights()
            .iter()
            .map(|wi| rat_int(1) - wi + &w)
            .collect();
        assert_eq!(degrees, vec![rat(4, 3), rat(3, 2)]);
        let hp = hp_closed_form(&weights, &degrees, &rat_int(3)).unwrap();
        assert_eq!(hp, spectrum_formula(&weights).unwrap());
    }

    #[test]
    fn hp_a1() {
        let weights = ws(&[(1, 2), (1, 2)]);
        let hp = hp_closed_form(&weights, &[rat(3, 2), rat(3, 2)], &rat_int(3)).unwrap();
        assert_eq!(hp, FracLaurent::monomial(rat_int(1)));
    }

    #[test]
    fn display_forms() {
        let fl = FracLaurent::from_terms([
            (rat(1, 2), 1),
            (rat(7, 10), 2),
            (rat(1, 1), 1),
            (rat(2, 1), 3),
            (rat(0, 1), 5),
        ]);
        assert_eq!(fl.to_string(), "5 + t^(1/2) + 2*t^(7/10) + t + 3*t^2");
        assert_eq!(FracLaurent::zero().to_string(), "0");
        let neg = FracLaurent::from_terms([(rat(1, 2), -1), (rat(3, 2), 1)]);
        assert_eq!(neg.to_string(), "-t^(1/2) + t^(3/2)");
    }

    #[test]
    fn json_form() {
        let fl = FracLaurent::from_terms([(rat(17, 10), 1), (rat(1, 2), 2)]);
        let v = fl.to_json();
        assert_eq!(
            v,
            serde_json::json!([
                {"exponent": "1/2", "multiplicity": 2},
                {"exponent": "17/10", "multiplicity": 1},
            ])
        );
    }
}
