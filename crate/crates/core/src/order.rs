//! Monomial orders: positive integer weight vectors with a graded tie-break.
//!
//! The primary comparison is by weighted degree under strictly positive
//! integer weights (a weight system scaled by the lcm of its denominators,
//! or all ones). Ties are broken by a graded rule, graded reverse
//! lexicographic by default, so the result is always a well-order with 1
//! minimal and compatible with monomial multiplication.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::poly::{Exponent, Polynomial, WeightSystem};

/// Tie-break applied after the weighted degree comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    GrevLex,
    Lex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: Vec<u64>,
    tie: TieBreak,
}

impl MonomialOrder {
    /// Plain graded order: all weights 1.
    pub fn all_ones(nvars: usize) -> Self {
        MonomialOrder {
            weights: vec![1; nvars],
            tie: TieBreak::GrevLex,
        }
    }

    /// Weighted order: `weights` scaled to integers by the lcm of their
    /// denominators.
    pub fn from_weights(ws: &WeightSystem) -> Self {
        Self::from_weights_with_tie(ws, TieBreak::GrevLex)
    }

    pub fn from_weights_with_tie(ws: &WeightSystem, tie: TieBreak) -> Self {
        let lcm = ws.denominator_lcm();
        let weights = ws
            .weights()
            .iter()
            .map(|w| {
                let scaled: BigInt = w.numer() * &lcm / w.denom();
                scaled.to_u64().expect("scaled weight fits in u64")
            })
            .collect();
        MonomialOrder { weights, tie }
    }

    pub fn with_tie(&self, tie: TieBreak) -> Self {
        MonomialOrder {
            weights: self.weights.clone(),
            tie,
        }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weighted_degree(&self, m: &Exponent) -> u64 {
        m.0.iter()
            .zip(&self.weights)
            .map(|(&a, &w)| a as u64 * w)
            .sum()
    }

    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        let da = self.weighted_degree(a);
        let db = self.weighted_degree(b);
        if da != db {
            return da.cmp(&db);
        }
        match self.tie {
            TieBreak::GrevLex => {
                let ta = a.total_degree();
                let tb = b.total_degree();
                if ta != tb {
                    return ta.cmp(&tb);
                }
                // Reverse lex: the last variable in which they differ
                // decides, with the smaller exponent being larger.
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            TieBreak::Lex => a.0.cmp(&b.0),
        }
    }

    /// Leading term of a nonzero polynomial under this order.
    pub fn leading_term<'a>(
        &self,
        p: &'a Polynomial,
    ) -> Option<(&'a Exponent, &'a crate::rat::Rat)> {
        p.terms().max_by(|(a, _), (b, _)| self.cmp(a, b))
    }
}
