//! Text parser for input polynomials.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coef ['*'] factor ('*' factor)*  |  coef  |  factor ('*' factor)*
//! factor := var ['^' uint]
//! coef   := int ['/' uint]
//! ```
//!
//! Errors carry the byte position of the offending token; an identifier
//! that is not in the variable list is reported by name.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Exponent, Polynomial};
use crate::rat::Rat;

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    variables: &'a [String],
}

impl<'a> Parser<'a> {
    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected a number"));
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn parse_ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.input.len()
            && (self.input[self.pos].is_ascii_alphabetic() || self.input[self.pos] == b'_')
        {
            self.pos += 1;
            while self.pos < self.input.len()
                && (self.input[self.pos].is_ascii_alphanumeric() || self.input[self.pos] == b'_')
            {
                self.pos += 1;
            }
            Some(String::from_utf8(self.input[start..self.pos].to_vec()).expect("ascii"))
        } else {
            None
        }
    }

    /// `var ['^' uint]`, returning (variable index, exponent).
    fn parse_factor(&mut self) -> Result<(usize, u32)> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let Some(name) = self.parse_ident() else {
            return Err(self.syntax("expected a variable"));
        };
        let Some(var) = self.variables.iter().position(|v| *v == name) else {
            self.pos = at;
            return Err(Error::UnknownVariable(name));
        };
        let exp = if self.eat(b'^') {
            let e = self.parse_uint()?;
            u32::try_from(&e).map_err(|_| self.syntax("exponent too large"))?
        } else {
            1
        };
        Ok((var, exp))
    }

    /// `int ['/' uint]`.
    fn parse_coef(&mut self) -> Result<Rat> {
        let neg = self.eat(b'-');
        let num = self.parse_uint()?;
        let den = if self.eat(b'/') {
            let d = self.parse_uint()?;
            if d == BigInt::from(0) {
                return Err(self.syntax("zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let mut r = Rat::new(num, den);
        if neg {
            r = -r;
        }
        Ok(r)
    }

    fn parse_term(&mut self, nvars: usize) -> Result<(Exponent, Rat)> {
        let mut coef = Rat::one();
        let mut exps = vec![0u32; nvars];
        let mut any_factor = false;

        if matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            coef = self.parse_coef()?;
            if self.eat(b'*')
                || matches!(self.peek(), Some(b) if b.is_ascii_alphabetic() || b == b'_')
            {
                let (v, e) = self.parse_factor()?;
                exps[v] += e;
                any_factor = true;
            }
        } else {
            let (v, e) = self.parse_factor()?;
            exps[v] += e;
            any_factor = true;
        }
        while any_factor && self.eat(b'*') {
            let (v, e) = self.parse_factor()?;
            exps[v] += e;
        }
        Ok((Exponent(exps), coef))
    }
}

/// Parse `text` as a polynomial in the ordered variable list `variables`.
pub fn parse_polynomial(text: &str, variables: &[String]) -> Result<Polynomial> {
    let mut parser = Parser {
        input: text.as_bytes(),
        pos: 0,
        variables,
    };
    let nvars = variables.len();
    let mut poly = Polynomial::zero(nvars);

    parser.skip_ws();
    if parser.pos == parser.input.len() {
        return Err(parser.syntax("empty input"));
    }
    let mut negate = parser.eat(b'-');
    loop {
        let (m, c) = parser.parse_term(nvars)?;
        let c = if negate { -c } else { c };
        poly = poly.add(&Polynomial::monomial(m, c))?;
        match parser.peek() {
            None => break,
            Some(b'+') => {
                parser.pos += 1;
                negate = false;
            }
            Some(b'-') => {
                parser.pos += 1;
                negate = true;
            }
            Some(_) => return Err(parser.syntax("expected `+`, `-`, or end of input")),
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::format_polynomial;
    use crate::rat::{rat, rat_int};

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_simple_sum() {
        let f = parse_polynomial("x^2 + y^3", &vars(&["x", "y"])).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coeff(&Exponent(vec![2, 0])), rat_int(1));
        assert_eq!(f.coeff(&Exponent(vec![0, 3])), rat_int(1));
    }

    #[test]
    fn parses_multi_term_input() {
        let f = parse_polynomial("x^5 + x^2*y^2 + y^5", &vars(&["x", "y"])).unwrap();
        assert_eq!(f.num_terms(), 3);
    }

    #[test]
    fn cancellation_gives_zero() {
        let f = parse_polynomial("x - x", &vars(&["x"])).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn rational_and_implicit_coefficients() {
        let f = parse_polynomial("3/2x^2 - 1/2*y + 4", &vars(&["x", "y"])).unwrap();
        assert_eq!(f.coeff(&Exponent(vec![2, 0])), rat(3, 2));
        assert_eq!(f.coeff(&Exponent(vec![0, 1])), rat(-1, 2));
        assert_eq!(f.coeff(&Exponent(vec![0, 0])), rat_int(4));
    }

    #[test]
    fn leading_minus() {
        let f = parse_polynomial("-x + y", &vars(&["x", "y"])).unwrap();
        assert_eq!(f.coeff(&Exponent(vec![1, 0])), rat_int(-1));
    }

    #[test]
    fn unknown_variable_is_named() {
        let err = parse_polynomial("x + q^2", &vars(&["x", "y"])).unwrap_err();
        assert_eq!(err, Error::UnknownVariable("q".to_string()));
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_polynomial("x^2 + + y", &vars(&["x", "y"])).unwrap_err();
        match err {
            Error::Syntax { position, .. } => assert_eq!(position, 6),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_polynomial("", &vars(&["x"])).is_err());
        assert!(parse_polynomial("x^", &vars(&["x"])).is_err());
        assert!(parse_polynomial("1/0", &vars(&["x"])).is_err());
    }

    #[test]
    fn format_then_parse_round_trips() {
        let names = vars(&["x", "y"]);
        for text in [
            "x^2 + y^3",
            "-x + 3/2*y^2 - 1",
            "x^5 + x^2*y^2 + y^5",
            "0",
            "x - x",
        ] {
            let f = parse_polynomial(text, &names).unwrap();
            let printed = format_polynomial(&f, &names);
            let again = parse_polynomial(&printed, &names).unwrap();
            assert_eq!(f, again, "round trip through `{printed}`");
        }
    }
}
