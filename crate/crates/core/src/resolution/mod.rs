//! Minimal graded free resolutions of `D_0(f)`, the module of derivations
//! killing `f`, and Hilbert data of the Jacobian algebra `M(f) = S / J_f`.

mod betti;
pub(crate) mod hilbert;
pub mod multiprime;

pub use betti::BettiData;
pub use hilbert::{
    hilbert_data, hilbert_data_from_numerator, hilbert_function, hilbert_polynomial, hilbert_series, jacobian_numerator,
    polynomial_from_numerator, stabilization_from_numerator, stabilization_threshold, HilbertData, HilbertPolynomial,
};

use crate::algebra::{Field, IntPoly, MonomialOrder, Polynomial};
use crate::error::{AlgebraError, ComputeError};
use crate::groebner::module::{FreeModule, ModuleElement, Terms};
use crate::groebner::syzygy::minimal_syzygies;

/// Result of resolving `D_0(f)`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub betti: BettiData,
    /// Minimal generators of `D_0(f)`, sorted by degree; component `i` is
    /// the coefficient of the `i`-th partial derivative.
    pub d0_generators: Vec<ModuleElement<F>>,
    pub jacobian_numerator: IntPoly,
    /// True when `M(f)` is finite dimensional (no singular points).
    pub smooth: bool,
}

/// Minimal graded free resolution of `D_0(f)` for a reduced homogeneous `f`.
///
/// Each step computes the syzygies of the previous minimal generators and
/// keeps a minimal subset, certified by comparing Hilbert series.
pub fn minimal_resolution_d0<F: Field>(f: &Polynomial<F>, order: MonomialOrder) -> Result<Resolution<F>, ComputeError> {
    let deg = f.homogeneous_degree().ok_or(AlgebraError::NotHomogeneous)?;
    if deg < 2 {
        return Err(ComputeError::Internal(format!("degree {deg} is too small to have a Jacobian syzygy module")));
    }
    let field = f.field().clone();
    let n = f.nvars();
    let shift = deg - 1;
    let partials = f.partial_derivatives();
    // The Hilbert series does not depend on the order, and grevlex bases
    // are far smaller than graded lex ones.
    let jac = jacobian_numerator_from(&partials, MonomialOrder::Grevlex);
    let (e, _) = jac.split_one_minus_t().unwrap_or((n, IntPoly::zero()));
    let krull = n as i64 - e as i64;
    if krull > n as i64 - 2 {
        return Err(ComputeError::NotReduced);
    }
    let smooth = krull <= 0;

    let source = FreeModule::new(n, vec![0], order);
    let gens: Vec<Terms<F::Elem>> = partials
        .iter()
        .map(|p| {
            source.element_to_terms(&ModuleElement {
                components: vec![p.clone()],
                twists: vec![0],
            })
        })
        .collect();
    // Zero partials (f independent of a variable) would make the first free
    // module degenerate; reduced arrangements never have them.
    if gens.iter().any(|g| g.is_empty()) {
        return Err(ComputeError::Internal("a partial derivative vanishes identically".into()));
    }
    let image = IntPoly::one().sub(&jac);
    let mut step = minimal_syzygies(&field, n, &[0], &gens, Some(image), order)?;
    let d1_module = FreeModule::new(n, step.twists.clone(), order);
    let d0_generators: Vec<ModuleElement<F>> = step
        .generators
        .iter()
        .map(|(_, t)| d1_module.terms_to_element(&field, t))
        .collect();

    let mut steps: Vec<Vec<u32>> = Vec::new();
    loop {
        let degs: Vec<u32> = step.generators.iter().map(|(d, _)| d - shift).collect();
        if degs.is_empty() {
            break;
        }
        steps.push(degs);
        if steps.len() > n {
            return Err(ComputeError::Internal("resolution longer than the number of variables".into()));
        }
        let gens: Vec<Terms<F::Elem>> = step.generators.iter().map(|(_, t)| t.clone()).collect();
        let twists = step.twists.clone();
        step = minimal_syzygies(&field, n, &twists, &gens, Some(step.numerator.clone()), order)?;
    }
    Ok(Resolution {
        betti: BettiData::from_steps(n, steps),
        d0_generators,
        jacobian_numerator: jac,
        smooth,
    })
}

pub(crate) fn jacobian_numerator_from<F: Field>(partials: &[Polynomial<F>], order: MonomialOrder) -> IntPoly {
    let n = partials[0].nvars();
    let module = FreeModule::new(n, vec![0], order);
    let gens: Vec<Terms<F::Elem>> = partials
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            module.element_to_terms(&ModuleElement {
                components: vec![p.clone()],
                twists: vec![0],
            })
        })
        .collect();
    let mut e = crate::groebner::engine::Engine::new(partials[0].field(), n, vec![0], order);
    for g in gens {
        e.add_generator(g);
    }
    e.complete();
    e.quotient_numerator()
}

/// Minimal degree of a Jacobian syzygy, with a flag for smooth inputs.
pub fn mdr<F: Field>(f: &Polynomial<F>, order: MonomialOrder) -> Result<(u32, bool), ComputeError> {
    let r = minimal_resolution_d0(f, order)?;
    let d1 = r
        .betti
        .d
        .first()
        .copied()
        .ok_or_else(|| ComputeError::Internal("D_0(f) has no generators".into()))?;
    Ok((d1, r.smooth))
}

#[cfg(test)]
mod tests;
