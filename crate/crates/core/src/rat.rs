//! Exact rational scalars.
//!
//! All coefficients, weights, and exponent levels in this crate are
//! arbitrary-precision rationals kept in lowest terms with a positive
//! denominator. [`Rat`] is `num_rational::BigRational`, which maintains
//! exactly that canonical form; the helpers here cover construction from
//! machine integers, `p/q` parsing, and lcm-of-denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rat;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `int` or `int/uint`, e.g. `-3`, `7/10`. Whitespace is not allowed.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() || d.is_negative() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Least common multiple of the denominators of `vals`.
///
/// Returns 1 for an empty slice.
pub fn denominator_lcm(vals: &[Rat]) -> BigInt {
    let mut l = BigInt::one();
    for v in vals {
        l = l.lcm(v.denom());
    }
    l
}

/// `ceil(r)` as a `BigInt`.
pub fn ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}
