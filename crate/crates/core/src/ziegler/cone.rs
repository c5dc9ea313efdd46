use serde::{Deserialize, Serialize};

use crate::algebra::{ExactField, Field, MonomialOrder, Polynomial};
use crate::arrangement::Arrangement;
use crate::error::{ArrangementError, ComputeError};
use crate::groebner::module::FreeModule;
use crate::groebner::syzygy::submodule_numerator;
use crate::groebner::{krull_dimension, ModuleElement};
use crate::resolution::hilbert::stabilization_from_numerator;
use crate::resolution::multiprime::{numerator, Backend};
use crate::resolution::{minimal_resolution_d0, BettiData, HilbertPolynomial};

/// Hilbert polynomial `a u + b` of the cone `wg` over a line arrangement,
/// derived from the curve alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeHilbert {
    pub lines: usize,
    pub tau: i64,
    pub st: usize,
    /// `sum_{j < st} H(M(g))(j)`
    pub head_sum: i64,
    pub a: i64,
    pub b: i64,
    /// `b` recomputed with the safe scan bound `T` in place of `st`.
    pub b_at_bound: i64,
    pub bound: usize,
}

impl ConeHilbert {
    pub fn polynomial(&self) -> HilbertPolynomial {
        HilbertPolynomial::Linear { a: self.a, b: self.b }
    }
}

/// `a = tau + d - 1` and
/// `b = sum_{j < s} H(j) - s tau - (d - 4)(d - 1) / 2` with `d - 1` lines,
/// evaluated at `s = st(g)` and at `s = T = 3(d - 2) + 1`.
pub fn cone_hilbert_polynomial<F: ExactField>(
    lines: &Arrangement<F>,
    backend: &Backend,
) -> Result<ConeHilbert, ArrangementError> {
    let tau = lines.tjurina_number()?;
    let g = lines.defining_polynomial();
    let deg_g = lines.len() as u32;
    let num = numerator(&g, backend)?.value;
    let (st, tau_h) = stabilization_from_numerator(&num, 3, deg_g)?;
    if tau_h != tau {
        return Err(ComputeError::Internal(format!(
            "Hilbert function stabilizes at {tau_h}, lattice gives tau = {tau}"
        ))
        .into());
    }
    let d = lines.len() as i64 + 1;
    let bound = (3 * (d - 2) + 1) as usize;
    let h = num.series_over_one_minus_t(3, bound.max(st) + 1);
    let correction = (d - 4) * (d - 1) / 2;
    let b_at = |s: usize| h[..s].iter().sum::<i64>() - s as i64 * tau - correction;
    Ok(ConeHilbert {
        lines: lines.len(),
        tau,
        st,
        head_sum: h[..st].iter().sum(),
        a: tau + d - 1,
        b: b_at(st),
        b_at_bound: b_at(bound),
        bound,
    })
}

/// Predicted generators of `D_0(w_1 .. w_k g)`: the Euler-type derivations
/// `x d_x + y d_y + z d_z - deg(g) w_i d_{w_i}` and the generators of
/// `D_0(g)` extended by zeros.
pub fn cone_syzygy_basis<F: Field>(
    g: &Polynomial<F>,
    k: usize,
    order: MonomialOrder,
) -> Result<Vec<ModuleElement<F>>, ComputeError> {
    let deg = g.homogeneous_degree().ok_or(crate::error::AlgebraError::NotHomogeneous)?;
    let field = g.field();
    let n = g.nvars();
    let total = n + k;
    let twists = vec![deg; total];
    let mut out = Vec::new();
    for i in 0..k {
        let mut comps: Vec<Polynomial<F>> = (0..n).map(|v| Polynomial::var(field, total, v)).collect();
        comps.extend((0..k).map(|j| {
            if j == i {
                Polynomial::var(field, total, n + j).scale(&field.from_int(-(deg as i64)))
            } else {
                Polynomial::zero(field, total)
            }
        }));
        out.push(ModuleElement {
            components: comps,
            twists: twists.clone(),
        });
    }
    for gen in minimal_resolution_d0(g, order)?.d0_generators {
        let mut comps: Vec<Polynomial<F>> = gen.components.iter().map(|c| c.extend_vars(total)).collect();
        comps.extend((0..k).map(|_| Polynomial::zero(field, total)));
        out.push(ModuleElement {
            components: comps,
            twists: twists.clone(),
        });
    }
    Ok(out)
}

/// Betti data of the `k`-fold cone predicted from those of the curve.
pub fn cone_betti_prediction(curve: &BettiData, k: usize) -> BettiData {
    let mut steps: Vec<Vec<u32>> = curve.steps().iter().map(|s| s.to_vec()).collect();
    steps[0].extend(std::iter::repeat_n(1, k));
    BettiData::from_steps(curve.num_vars + k, steps)
}

/// Checks that the predicted basis consists of syzygies of the partials of
/// `w_1 .. w_k g`, spans the same module as a directly computed minimal
/// generating set, and has the same size.
pub fn verify_cone_basis<F: Field>(g: &Polynomial<F>, k: usize, order: MonomialOrder) -> Result<bool, ComputeError> {
    let field = g.field();
    let n = g.nvars() + k;
    let mut f = g.extend_vars(n);
    for i in 0..k {
        f = &f * &Polynomial::var(field, n, g.nvars() + i);
    }
    let partials = f.partial_derivatives();
    let predicted = cone_syzygy_basis(g, k, order)?;
    for p in &predicted {
        if !p.apply(&partials)?.is_zero() {
            return Ok(false);
        }
    }
    let direct = minimal_resolution_d0(&f, order)?.d0_generators;
    if direct.len() != predicted.len() {
        return Ok(false);
    }
    let twists = predicted[0].twists.clone();
    let fm = FreeModule::new(n, twists.clone(), order);
    let terms = |v: &[ModuleElement<F>]| v.iter().map(|e| fm.element_to_terms(e)).collect::<Vec<_>>();
    let hp = submodule_numerator(field, n, &twists, &terms(&predicted), order);
    let hd = submodule_numerator(field, n, &twists, &terms(&direct), order);
    Ok(hp == hd)
}

/// True when the 2x2 minors of the matrix with rows `rho0`, `rho1` cut out
/// a set of codimension at least two.
pub fn tameness_check<F: Field>(rho0: &ModuleElement<F>, rho1: &ModuleElement<F>) -> Result<bool, ComputeError> {
    let n = rho0.components.len();
    if rho1.components.len() != n {
        return Err(ComputeError::ModuleMismatch);
    }
    let nvars = rho0.components[0].nvars();
    let mut minors = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let m = &(&rho0.components[i] * &rho1.components[j]) - &(&rho0.components[j] * &rho1.components[i]);
            minors.push(m);
        }
    }
    let dim = if minors.iter().all(|m| m.is_zero()) {
        nvars as i64
    } else {
        krull_dimension(&minors)?
    };
    Ok(dim <= nvars as i64 - 2)
}
