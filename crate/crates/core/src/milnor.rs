//! Milnor and Tjurina data of an isolated hypersurface singularity.
//!
//! - [`jacobian_ideal`]: the ideal of all partial derivatives;
//! - [`milnor_number`] / [`tjurina_number`]: local colengths at the origin
//!   of the Jacobian ideal and of the Tjurina ideal `<f, df>`;
//! - [`monomial_basis_with_weights`]: the weighted monomial basis of the
//!   Milnor algebra of a weighted homogeneous germ, each monomial paired
//!   with its shifted weight;
//! - [`hp_from_basis`]: the Hilbert-Poincare series assembled from that
//!   basis, which for a weighted homogeneous isolated germ equals the
//!   closed-form spectrum.

use crate::error::{Error, Result};
use crate::groebner::{Colength, Ideal, StandardMonomials};
use crate::order::{MonomialOrder, TieBreak};
use crate::poly::{is_weighted_homogeneous, Exponent, Polynomial, WeightSystem};
use crate::rat::Rat;
use crate::series::FracLaurent;
use num_traits::Zero;

/// The germ data used by the weighted homogeneous pipeline: `f`, its
/// Jacobian ideal under the weighted order, the weighted monomial basis of
/// the Milnor algebra, and the numbers `mu`, `tau`.
#[derive(Debug, Clone)]
pub struct MilnorData {
    pub f: Polynomial,
    pub weights: WeightSystem,
    pub jacobian: Ideal,
    /// Standard monomials of the Jacobian ideal with their shifted
    /// weights, sorted by weight then monomial order.
    pub basis: Vec<(Exponent, Rat)>,
    pub mu: usize,
    pub tau: usize,
}

fn check_germ(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    Ok(())
}

/// Ideal generated by all `n` partial derivatives, under the plain graded
/// order.
pub fn jacobian_ideal(f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ideal::new(f.nvars(), f.gradient(), MonomialOrder::all_ones(f.nvars()))
}

/// Jacobian ideal under a caller-chosen order.
pub fn jacobian_ideal_with_order(f: &Polynomial, order: MonomialOrder) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ideal::new(f.nvars(), f.gradient(), order)
}

/// Tjurina ideal `<f, df>` under the plain graded order.
pub fn tjurina_ideal(f: &Polynomial) -> Result<Ideal> {
    check_germ(f)?;
    let mut gens = f.gradient();
    gens.push(f.clone());
    Ideal::new(f.nvars(), gens, MonomialOrder::all_ones(f.nvars()))
}

/// Milnor number: local colength at the origin of the Jacobian ideal.
/// Errors with [`Error::NonIsolated`] when that colength is infinite.
pub fn milnor_number(f: &Polynomial) -> Result<usize> {
    check_germ(f)?;
    match jacobian_ideal(f)?.local_colength_at_origin()? {
        Colength::Finite(mu) => Ok(mu),
        Colength::Infinite => Err(Error::NonIsolated),
    }
}

/// Tjurina number: local colength at the origin of `<f, df>`.
pub fn tjurina_number(f: &Polynomial) -> Result<usize> {
    check_germ(f)?;
    match tjurina_ideal(f)?.local_colength_at_origin()? {
        Colength::Finite(tau) => Ok(tau),
        Colength::Infinite => Err(Error::NonIsolated),
    }
}

/// Standard monomials of the Jacobian ideal under the weighted order,
/// each paired with its shifted weight, sorted by weight then order.
///
/// Rejects inputs that are not weighted homogeneous for `weights`: the
/// basis weights would not be well defined against the grading.
pub fn monomial_basis_with_weights(
    f: &Polynomial,
    weights: &WeightSystem,
) -> Result<Vec<(Exponent, Rat)>> {
    monomial_basis_with_tie(f, weights, TieBreak::GrevLex)
}

/// Same as [`monomial_basis_with_weights`] with an explicit tie-break;
/// the weight multiset of the result is tie-break independent.
pub fn monomial_basis_with_tie(
    f: &Polynomial,
    weights: &WeightSystem,
    tie: TieBreak,
) -> Result<Vec<(Exponent, Rat)>> {
    check_germ(f)?;
    if !is_weighted_homogeneous(f, weights)? {
        return Err(Error::NotWeightedHomogeneous);
    }
    let order = MonomialOrder::from_weights_with_tie(weights, tie);
    let jacobian = jacobian_ideal_with_order(f, order.clone())?;
    let monomials = match jacobian.standard_monomials(None)? {
        StandardMonomials::Finite(ms) => ms,
        StandardMonomials::Infinite => return Err(Error::NonIsolated),
    };
    let mut basis: Vec<(Exponent, Rat)> = monomials
        .into_iter()
        .map(|m| {
            let wt = weights.shifted_weight(&m);
            (m, wt)
        })
        .collect();
    basis.sort_by(|(ma, wa), (mb, wb)| wa.cmp(wb).then_with(|| order.cmp(ma, mb)));
    Ok(basis)
}

/// `sum_{v in B} t^{wt(v)}` over the weighted monomial basis.
pub fn hp_from_basis(f: &Polynomial, weights: &WeightSystem) -> Result<FracLaurent> {
    let basis = monomial_basis_with_weights(f, weights)?;
    Ok(FracLaurent::from_terms(
        basis.into_iter().map(|(_, wt)| (wt, 1)),
    ))
}

impl MilnorData {
    /// Assemble the full weighted homogeneous germ data. Verifies that `f`
    /// is weighted homogeneous for `weights` and has an isolated
    /// singularity at the origin.
    pub fn new(f: Polynomial, weights: WeightSystem) -> Result<Self> {
        let basis = monomial_basis_with_weights(&f, &weights)?;
        let order = MonomialOrder::from_weights(&weights);
        let jacobian = jacobian_ideal_with_order(&f, order)?;
        let mu = match jacobian.local_colength_at_origin()? {
            Colength::Finite(mu) => mu,
            Colength::Infinite => return Err(Error::NonIsolated),
        };
        let tau = tjurina_number(&f)?;
        if basis.len() != mu {
            return Err(Error::InvariantViolation(format!(
                "weighted basis size {} differs from local colength {}",
                basis.len(),
                mu
            )));
        }
        Ok(MilnorData {
            f,
            weights,
            jacobian,
            basis,
            mu,
            tau,
        })
    }

    /// Basis monomials with shifted weight `>= beta`.
    pub fn basis_at_least(&self, beta: &Rat) -> Vec<Exponent> {
        self.basis
            .iter()
            .filter(|(_, wt)| wt >= beta)
            .map(|(m, _)| m.clone())
            .collect()
    }

    /// Distinct shifted weights of the basis, ascending.
    pub fn basis_weights(&self) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::new();
        for (_, wt) in &self.basis {
            if out.last() != Some(wt) {
                out.push(wt.clone());
            }
        }
        out
    }
}
