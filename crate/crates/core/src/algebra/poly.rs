use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};

/// Multivariate polynomial over `F`, terms sorted by descending grevlex with
/// no zero coefficients.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    ExactDivide,
}

/// Default variable names: `x, y, z, w` and `x, y, z, w1, .., wk` beyond four.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    let base = ["x", "y", "z"];
    let mut names: Vec<String> = base.iter().take(nvars).map(|s| s.to_string()).collect();
    if nvars == 4 {
        names.push("w".into());
    } else if nvars > 4 {
        names.extend((1..=nvars - 3).map(|i| format!("w{i}")));
    }
    names
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Polynomial {
            field: field.clone(),
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        Self::from_terms(field, nvars, vec![(Monomial::one(), c)])
    }

    pub fn one(field: &F, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn var(field: &F, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::from_terms(field, nvars, vec![(Monomial::var(i), field.one())])
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// dropping zeros.
    pub fn from_terms(field: &F, nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        assert!(nvars <= MAX_VARS);
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert!((nvars..MAX_VARS).all(|i| m.exponent(i) == 0));
            match acc.get_mut(&m) {
                Some(existing) => *existing = field.add(existing, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.0, &a.0));
        Polynomial {
            field: field.clone(),
            nvars,
            terms,
        }
    }

    /// Trusts the caller that `terms` is sorted descending and zero-free.
    pub(crate) fn from_sorted_terms(field: &F, nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| MonomialOrder::Grevlex.cmp(&w[0].0, &w[1].0).is_gt()));
        Polynomial {
            field: field.clone(),
            nvars,
            terms,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Degree when homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.degree()
        } else {
            None
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::DomainMismatch(
                self.field.descriptor().to_string(),
                other.field.descriptor().to_string(),
            ));
        }
        if self.nvars != other.nvars {
            return Err(AlgebraError::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = if i == self.terms.len() {
                std::cmp::Ordering::Less
            } else if j == other.terms.len() {
                std::cmp::Ordering::Greater
            } else {
                MonomialOrder::Grevlex.cmp(&self.terms[i].0, &other.terms[j].0)
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((*m, if negate { f.neg(c) } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        f.sub(&self.terms[i].1, &other.terms[j].1)
                    } else {
                        f.add(&self.terms[i].1, &other.terms[j].1)
                    };
                    if !f.is_zero(&c) {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial::from_sorted_terms(f, self.nvars, out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        let f = &self.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = acc.entry(m).or_insert_with(|| f.zero());
                f.add_mul_assign(entry, ca, cb);
            }
        }
        Ok(Polynomial::from_terms(f, self.nvars, acc.into_iter().collect()))
    }

    /// `self / divisor`, failing unless the division is exact.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(divisor)?;
        let f = &self.field;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = f.inv(lead_c).ok_or(AlgebraError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            let q_mono = lead_m.quotient_of(&m).ok_or(AlgebraError::InexactDivision)?;
            let q_coef = f.mul(&c, &lead_inv);
            let step = divisor.mul_term(&q_mono, &q_coef);
            rem = rem.merge(&step, true);
            quotient.push((q_mono, q_coef));
        }
        Ok(Polynomial::from_terms(f, self.nvars, quotient))
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self, AlgebraError> {
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Sub => self.checked_sub(other),
            ArithOp::Mul => self.checked_mul(other),
            ArithOp::ExactDivide => self.exact_divide(other),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Polynomial::zero(f, self.nvars);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), f.mul(a, c))).collect();
        Polynomial::from_sorted_terms(f, self.nvars, terms)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        let terms = self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect();
        Polynomial::from_sorted_terms(f, self.nvars, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(&self.field, self.nvars);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let f = &self.field;
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| m.derive(var).map(|(e, m2)| (m2, f.mul(c, &f.from_int(e as i64)))))
            .collect();
        Polynomial::from_terms(f, self.nvars, terms)
    }

    /// One formal partial derivative per variable.
    pub fn partial_derivatives(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.partial_derivative(i)).collect()
    }

    /// `sum_i x_i * d f / d x_i`, which is `deg(f) * f` for homogeneous `f`.
    pub fn euler_combination(&self) -> Result<Self, AlgebraError> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let mut acc = Polynomial::zero(&self.field, self.nvars);
        for i in 0..self.nvars {
            let term = self.partial_derivative(i).mul_term(&Monomial::var(i), &self.field.one());
            acc = acc.merge(&term, false);
        }
        Ok(acc)
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars);
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t = f.mul(&t, &f.pow(x, e as u64));
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Substitutes polynomials (in a possibly different ring) for the
    /// variables.
    pub fn compose(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>, AlgebraError> {
        assert_eq!(images.len(), self.nvars);
        let target_nvars = images.first().map_or(0, |p| p.nvars);
        let f = &self.field;
        let mut acc = Polynomial::zero(f, target_nvars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(f, target_nvars, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t = t.checked_mul(&img.pow(e as u32))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Re-embeds into more variables (new variables appended).
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars && nvars <= MAX_VARS);
        Polynomial::from_terms(&self.field, nvars, self.terms.clone())
    }

    /// Applies a coefficient map into another field.
    pub fn map_coefficients<G: Field>(
        &self,
        target: &G,
        map: impl Fn(&F::Elem) -> Result<G::Elem, AlgebraError>,
    ) -> Result<Polynomial<G>, AlgebraError> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((*m, map(c)?)))
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        Ok(Polynomial::from_terms(target, self.nvars, terms))
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = (0..self.nvars)
                .filter(|&i| m.exponent(i) > 0)
                .map(|i| match m.exponent(i) {
                    1 => names[i].clone(),
                    e => format!("{}^{e}", names[i]),
                })
                .collect();
            let mut coef = self.field.format_elem(c);
            let negative = coef.starts_with('-') && !coef[1..].contains(['+', '-']);
            if negative {
                coef.remove(0);
            }
            let compound = coef.contains(['+', '-']);
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coef = if compound { format!("({coef})") } else { coef };
            if mono.is_empty() {
                out.push_str(&coef);
            } else if coef == "1" {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&coef);
                out.push('*');
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&default_var_names(self.nvars)))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.field.descriptor(), self)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

/// Product of a list of polynomials in one ring.
pub fn product<F: Field>(field: &F, nvars: usize, factors: &[Polynomial<F>]) -> Polynomial<F> {
    factors
        .iter()
        .fold(Polynomial::one(field, nvars), |acc, p| &acc * p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};

    fn xyz() -> (Polynomial<Rationals>, Polynomial<Rationals>, Polynomial<Rationals>) {
        let q = Rationals;
        (Polynomial::var(&q, 3, 0), Polynomial::var(&q, 3, 1), Polynomial::var(&q, 3, 2))
    }

    #[test]
    fn difference_of_squares() {
        let (x, y, _) = xyz();
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division() {
        let q = Rationals;
        let w = Polynomial::var(&q, 4, 3);
        let g = product(&q, 4, &[Polynomial::var(&q, 4, 0), Polynomial::var(&q, 4, 1), Polynomial::var(&q, 4, 2)]);
        let wg = &w * &g;
        assert_eq!(wg.exact_divide(&w).unwrap(), g);
        let (x, _, _) = xyz();
        let x2p1 = &(&x * &x) + &Polynomial::one(&q, 3);
        assert_eq!(x2p1.exact_divide(&x), Err(AlgebraError::InexactDivision));
    }

    #[test]
    fn domain_mismatch_is_reported() {
        let a = Polynomial::var(&Rationals, 2, 0);
        let b = Polynomial::var(&PrimeField::new(7).unwrap(), 2, 0);
        // Different element types cannot even be combined; check arity instead.
        let c = Polynomial::var(&Rationals, 3, 0);
        assert!(matches!(a.checked_add(&c), Err(AlgebraError::ArityMismatch(2, 3))));
        assert_eq!(b.nvars(), 2);
        let p1 = Polynomial::var(&PrimeField::new(7).unwrap(), 2, 0);
        let p2 = Polynomial::var(&PrimeField::new(11).unwrap(), 2, 0);
        assert!(matches!(p1.checked_mul(&p2), Err(AlgebraError::DomainMismatch(_, _))));
    }

    #[test]
    fn partials_of_monomials() {
        let (x, y, z) = xyz();
        let f = &(&x * &y) * &z;
        let d = f.partial_derivatives();
        assert_eq!(d, vec![&y * &z, &x * &z, &x * &y]);
        let x5 = x.pow(5);
        let d = x5.partial_derivatives();
        assert_eq!(d[0], x.pow(4).scale(&Rationals.from_int(5)));
        assert!(d[1].is_zero() && d[2].is_zero());
    }

    #[test]
    fn euler_identity_small() {
        let (x, y, z) = xyz();
        let f = &(&x.pow(3) + &y.pow(3)) + &z.pow(3);
        assert_eq!(f.euler_combination().unwrap(), f.scale(&Rationals.from_int(3)));
        let nonhom = &x + &y.pow(2);
        assert_eq!(nonhom.euler_combination(), Err(AlgebraError::NotHomogeneous));
    }

    #[test]
    fn display() {
        let (x, y, _) = xyz();
        let f = &(&x.pow(2).scale(&Rationals.from_int(3)) - &y) + &Polynomial::one(&Rationals, 3);
        assert_eq!(f.to_string(), "3*x^2 - y + 1");
    }
}
