//! Text syntax for polynomials: integer and rational coefficients, named
//! variables, `^` powers, `*` or juxtaposition for products, parentheses and
//! `sqrt(m)` for fields that contain the square root.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::AlgebraError;

use super::field::Field;
use super::poly::Polynomial;

struct Parser<'a, F: Field> {
    field: &'a F,
    names: &'a [String],
    chars: Vec<char>,
    pos: usize,
    line: usize,
    line_start: usize,
}

/// Parses `text` as a polynomial in the variables `names`.
pub fn parse_polynomial<F: Field>(field: &F, names: &[String], text: &str) -> Result<Polynomial<F>, AlgebraError> {
    let mut p = Parser {
        field,
        names,
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        line_start: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected character '{}'", p.chars[p.pos])));
    }
    Ok(out)
}

impl<F: Field> Parser<'_, F> {
    fn error(&self, message: String) -> AlgebraError {
        AlgebraError::Parse {
            line: self.line,
            column: self.pos - self.line_start + 1,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == '\n' {
                self.line += 1;
                self.line_start = self.pos + 1;
            } else if !c.is_whitespace() {
                break;
            }
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial<F>, AlgebraError> {
        let mut acc = Polynomial::zero(self.field, self.nvars());
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negate { acc.checked_sub(&t)? } else { acc.checked_add(&t)? };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        match self.peek() {
            Some(c) => c.is_ascii_digit() || c == '(' || self.match_identifier().is_some(),
            None => false,
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            // Juxtaposition is multiplication.
            if self.eat('*') || self.starts_factor() {
                let f = self.factor()?;
                acc = acc.checked_mul(&f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial<F>, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    /// Longest variable name (or the `sqrt` keyword) at the cursor.
    fn match_identifier(&self) -> Option<(usize, Option<usize>)> {
        let rest = &self.chars[self.pos..];
        let matches = |name: &str| {
            let n: Vec<char> = name.chars().collect();
            rest.len() >= n.len() && rest[..n.len()] == n[..]
        };
        let mut best: Option<(usize, Option<usize>)> = None;
        for (i, name) in self.names.iter().enumerate() {
            let len = name.chars().count();
            if matches(name) && best.is_none_or(|(l, _)| len > l) {
                best = Some((len, Some(i)));
            }
        }
        if matches("sqrt") && best.is_none_or(|(l, _)| l < 4) {
            best = Some((4, None));
        }
        best
    }

    fn atom(&mut self) -> Result<Polynomial<F>, AlgebraError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'".into()));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut q = BigRational::from_integer(num);
                let save = self.pos;
                if self.eat('/') {
                    self.skip_ws();
                    if self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                        let den = self.integer()?;
                        if den == BigInt::from(0) {
                            return Err(self.error("zero denominator".into()));
                        }
                        q /= BigRational::from_integer(den);
                    } else {
                        self.pos = save;
                        return Err(self.error("only rational literals may be divided".into()));
                    }
                }
                let c = self.field.from_rational(&q)?;
                Ok(Polynomial::constant(self.field, self.nvars(), c))
            }
            Some(_) => match self.match_identifier() {
                Some((len, Some(i))) => {
                    self.pos += len;
                    Ok(Polynomial::var(self.field, self.nvars(), i))
                }
                Some((len, None)) => {
                    self.pos += len;
                    if !self.eat('(') {
                        return Err(self.error("expected '(' after sqrt".into()));
                    }
                    let negative = self.eat('-');
                    self.skip_ws();
                    let m = self.integer()?;
                    if !self.eat(')') {
                        return Err(self.error("expected ')'".into()));
                    }
                    let m: i64 = m.try_into().map_err(|_| self.error("radicand too large".into()))?;
                    let m = if negative { -m } else { m };
                    let root = self
                        .field
                        .sqrt_int(m)
                        .ok_or_else(|| self.error(format!("sqrt({m}) is not in {}", self.field.descriptor())))?;
                    Ok(Polynomial::constant(self.field, self.nvars(), root))
                }
                None => Err(self.error(format!("unexpected character '{}'", self.chars[self.pos]))),
            },
            None => Err(self.error("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, QuadraticField, Rationals};
    use crate::algebra::poly::default_var_names;

    fn names(n: usize) -> Vec<String> {
        default_var_names(n)
    }

    #[test]
    fn juxtaposition_and_powers() {
        let q = Rationals;
        let a = parse_polynomial(&q, &names(3), "xyz(x+y+z)").unwrap();
        let b = parse_polynomial(&q, &names(3), "x^2*y*z + x*y^2*z + x*y*z^2").unwrap();
        assert_eq!(a, b);
        let c = parse_polynomial(&q, &names(3), "(2x+3y+4z)(3x+5z)").unwrap();
        assert_eq!(c.to_string(), "6*x^2 + 9*x*y + 22*x*z + 15*y*z + 20*z^2");
    }

    #[test]
    fn round_trip_through_printer() {
        let q = Rationals;
        for text in ["3*x^2*y - 1/2*z^3", "-x + y", "w1*w2 - 9*x^2*y^2*z", "7"] {
            let p = parse_polynomial(&q, &names(5), text).unwrap();
            let again = parse_polynomial(&q, &names(5), &p.to_string()).unwrap();
            assert_eq!(p, again, "{text}");
        }
    }

    #[test]
    fn longest_identifier_wins() {
        let q = Rationals;
        let n: Vec<String> = ["x", "x1", "x12"].iter().map(|s| s.to_string()).collect();
        let p = parse_polynomial(&q, &n, "x12x1x").unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].0.exponents(3), &[1, 1, 1]);
    }

    #[test]
    fn sqrt_in_extension_and_prime_field() {
        let k = QuadraticField::new(5).unwrap();
        let p = parse_polynomial(&k, &names(3), "(sqrt(5)+3)x - y").unwrap();
        let again = parse_polynomial(&k, &names(3), &p.to_string()).unwrap();
        assert_eq!(p, again);
        let f11 = PrimeField::new(11).unwrap();
        let s = parse_polynomial(&f11, &names(3), "sqrt(5)^2").unwrap();
        assert_eq!(s, parse_polynomial(&f11, &names(3), "5").unwrap());
        assert!(parse_polynomial(&Rationals, &names(3), "sqrt(5)").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_polynomial(&Rationals, &names(3), "x + \n  y + q").unwrap_err();
        assert_eq!(
            err,
            AlgebraError::Parse {
                line: 2,
                column: 7,
                message: "unexpected character 'q'".into()
            }
        );
    }
}
