use std::fmt;

use serde::{Deserialize, Serialize};

/// Univariate polynomial with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// `c * t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        Self::one().sub(&Self::monomial(1, k))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_coeffs(coeffs)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn derivative_at_one(&self) -> i64 {
        self.coeffs.iter().enumerate().map(|(i, c)| i as i64 * c).sum()
    }

    /// Exact quotient by `1 - t`, if it divides.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.eval_at_one() != 0 {
            return None;
        }
        // (1 - t) q = p  =>  q_k = sum_{i <= k} p_i
        let mut acc = 0;
        let mut q = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().take(self.coeffs.len().saturating_sub(1)) {
            acc += c;
            q.push(acc);
        }
        Some(Self::from_coeffs(q))
    }

    /// Writes `self = (1 - t)^e * r` with `r(1) != 0`; `None` for zero.
    pub fn split_one_minus_t(&self) -> Option<(usize, IntPoly)> {
        if self.is_zero() {
            return None;
        }
        let mut e = 0;
        let mut r = self.clone();
        while let Some(q) = r.div_one_minus_t() {
            r = q;
            e += 1;
        }
        Some((e, r))
    }

    /// First `count` coefficients of `self / (1 - t)^n` as a power series.
    pub fn series_over_one_minus_t(&self, n: usize, count: usize) -> Vec<i64> {
        let mut s: Vec<i64> = (0..count).map(|k| self.coeff(k)).collect();
        for _ in 0..n {
            for k in 1..count {
                s[k] += s[k - 1];
            }
        }
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
