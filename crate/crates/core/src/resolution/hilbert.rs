use serde::{Deserialize, Serialize};

use crate::algebra::{Field, IntPoly, MonomialOrder, Polynomial};
use crate::error::{AlgebraError, ComputeError};

use super::jacobian_numerator_from;

/// Eventual polynomial `P` with `H(k) = P(k)` for `k >> 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HilbertPolynomial {
    /// `dim Sigma <= 0`: the constant `tau` (total Tjurina number).
    Constant { tau: i64 },
    /// `dim Sigma = 1`: `a*u + b`.
    Linear { a: i64, b: i64 },
}

impl HilbertPolynomial {
    pub fn eval(&self, k: i64) -> i64 {
        match *self {
            HilbertPolynomial::Constant { tau } => tau,
            HilbertPolynomial::Linear { a, b } => a * k + b,
        }
    }

    /// The display form `51u-223`.
    pub fn display_form(&self) -> String {
        match *self {
            HilbertPolynomial::Constant { tau } => tau.to_string(),
            HilbertPolynomial::Linear { a, b } if b < 0 => format!("{a}u-{}", -b),
            HilbertPolynomial::Linear { a, b } => format!("{a}u+{b}"),
        }
    }
}

impl std::fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.display_form())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `dim M(f)_k` for `k = 0 ..= values.len() - 1`, through stabilization.
    pub values: Vec<i64>,
    pub series_numerator: IntPoly,
    pub polynomial: HilbertPolynomial,
    /// Dimension of the projective singular locus; `-1` when empty.
    pub sigma_dim: i64,
    pub num_vars: usize,
}

/// Numerator `N(t)` with `HS(M(f)) = N(t) / (1 - t)^n`.
pub fn jacobian_numerator<F: Field>(f: &Polynomial<F>, order: MonomialOrder) -> Result<IntPoly, ComputeError> {
    if !f.is_homogeneous() || f.is_zero() {
        return Err(AlgebraError::NotHomogeneous.into());
    }
    let partials = f.partial_derivatives();
    if partials.iter().all(|p| p.is_zero()) {
        return Ok(IntPoly::one());
    }
    Ok(jacobian_numerator_from(&partials, order))
}

pub fn hilbert_series<F: Field>(f: &Polynomial<F>) -> Result<IntPoly, ComputeError> {
    jacobian_numerator(f, MonomialOrder::Grevlex)
}

pub fn hilbert_function<F: Field>(f: &Polynomial<F>, k: usize) -> Result<i64, ComputeError> {
    let n = hilbert_series(f)?;
    Ok(n.series_over_one_minus_t(f.nvars(), k + 1)[k])
}

/// Hilbert polynomial from the numerator: with `N = (1-t)^e R`, the
/// remaining pole order `s = n - e` is the affine dimension of `V(J_f)`.
pub fn polynomial_from_numerator(num: &IntPoly, nvars: usize) -> Result<(HilbertPolynomial, i64), ComputeError> {
    let Some((e, r)) = num.split_one_minus_t() else {
        return Ok((HilbertPolynomial::Constant { tau: 0 }, -1));
    };
    let s = nvars as i64 - e as i64;
    match s {
        i64::MIN..=0 => Ok((HilbertPolynomial::Constant { tau: 0 }, -1)),
        1 => Ok((HilbertPolynomial::Constant { tau: r.eval_at_one() }, 0)),
        2 => {
            let a = r.eval_at_one();
            Ok((
                HilbertPolynomial::Linear {
                    a,
                    b: a - r.derivative_at_one(),
                },
                1,
            ))
        }
        _ => Err(ComputeError::UnsupportedDimension(s - 1)),
    }
}

pub fn hilbert_polynomial<F: Field>(f: &Polynomial<F>) -> Result<HilbertPolynomial, ComputeError> {
    let n = hilbert_series(f)?;
    Ok(polynomial_from_numerator(&n, f.nvars())?.0)
}

/// First index from which `H(M(g))` is constant, with that constant.
///
/// For curves with isolated singularities the constant is the total Tjurina
/// number; for smooth curves it is zero. The scan runs at least to
/// `T = 3(deg g - 1) + 1` and always past the degree of the numerator, after
/// which the function is provably constant.
pub fn stabilization_from_numerator(num: &IntPoly, nvars: usize, deg_g: u32) -> Result<(usize, i64), ComputeError> {
    let (poly, sigma_dim) = polynomial_from_numerator(num, nvars)?;
    let tau = match poly {
        HilbertPolynomial::Constant { tau } => tau,
        HilbertPolynomial::Linear { .. } => {
            return Err(ComputeError::NotStabilized(format!(
                "singular locus has dimension {sigma_dim}, the Hilbert function grows linearly"
            )))
        }
    };
    let t_bound = 3 * (deg_g as usize).saturating_sub(1) + 1;
    let scan = t_bound.max(num.degree().unwrap_or(0) + 1) + 1;
    let h = num.series_over_one_minus_t(nvars, scan);
    let st = h.iter().rposition(|&v| v != tau).map_or(0, |k| k + 1);
    Ok((st, tau))
}

pub fn stabilization_threshold<F: Field>(g: &Polynomial<F>) -> Result<usize, ComputeError> {
    let deg = g.homogeneous_degree().ok_or(AlgebraError::NotHomogeneous)?;
    let num = hilbert_series(g)?;
    Ok(stabilization_from_numerator(&num, g.nvars(), deg)?.0)
}

/// Hilbert function values through stabilization, numerator and polynomial.
pub fn hilbert_data<F: Field>(f: &Polynomial<F>) -> Result<HilbertData, ComputeError> {
    let num = hilbert_series(f)?;
    hilbert_data_from_numerator(&num, f.nvars())
}

pub fn hilbert_data_from_numerator(num: &IntPoly, nvars: usize) -> Result<HilbertData, ComputeError> {
    let (polynomial, sigma_dim) = polynomial_from_numerator(num, nvars)?;
    // Past the numerator degree the function agrees with the polynomial.
    let k_stab = num.degree().unwrap_or(0) + 1;
    let values = num.series_over_one_minus_t(nvars, k_stab + 1);
    Ok(HilbertData {
        values,
        series_numerator: num.clone(),
        polynomial,
        sigma_dim,
        num_vars: nvars,
    })
}
