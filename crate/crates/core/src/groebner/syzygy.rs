use crate::algebra::{Field, IntPoly, MonomialOrder};
use crate::error::ComputeError;

use super::engine::Engine;
use super::module::{FreeModule, Terms};

/// Minimal generators of the syzygy module of `gens` (homogeneous elements of
/// the free module with `twists`), together with the Hilbert series
/// numerator of that syzygy module.
pub(crate) struct SyzygyStep<E> {
    /// Degrees of the input generators; the syzygies live in this module.
    pub twists: Vec<u32>,
    pub generators: Vec<(u32, Terms<E>)>,
    pub numerator: IntPoly,
}

/// Numerator of the Hilbert series of the submodule generated by `gens`.
pub(crate) fn submodule_numerator<F: Field>(
    field: &F,
    nvars: usize,
    twists: &[u32],
    gens: &[Terms<F::Elem>],
    order: MonomialOrder,
) -> IntPoly {
    let mut e = Engine::new(field, nvars, twists.to_vec(), order);
    for g in gens {
        e.add_generator(g.clone());
    }
    e.complete();
    e.submodule_numerator()
}

/// Lifts the S-pair syzygies of a tracked Gröbner computation, keeps those
/// that are not already in the span of earlier ones (in increasing degree),
/// and stops once the Hilbert series of the span equals the Hilbert series
/// of the full syzygy module.
pub(crate) fn minimal_syzygies<F: Field>(
    field: &F,
    nvars: usize,
    twists: &[u32],
    gens: &[Terms<F::Elem>],
    image_numerator: Option<IntPoly>,
    order: MonomialOrder,
) -> Result<SyzygyStep<F::Elem>, ComputeError> {
    let source = FreeModule::new(nvars, twists.to_vec(), order);
    let mut tag_twists = Vec::with_capacity(gens.len());
    for g in gens {
        let lead = g.first().ok_or_else(|| ComputeError::Internal("zero generator".into()))?;
        let deg = source.degree(&lead.0);
        if g.iter().any(|(t, _)| source.degree(t) != deg) {
            return Err(ComputeError::Algebra(crate::error::AlgebraError::NotHomogeneous));
        }
        tag_twists.push(deg);
    }
    let image = match image_numerator {
        Some(n) => n,
        None => submodule_numerator(field, nvars, twists, gens, order),
    };
    let free = tag_twists
        .iter()
        .fold(IntPoly::zero(), |acc, &t| acc.add(&IntPoly::monomial(1, t as usize)));
    let target = free.sub(&image);
    let mut step = SyzygyStep {
        twists: tag_twists.clone(),
        generators: Vec::new(),
        numerator: target.clone(),
    };
    if target.is_zero() {
        return Ok(step);
    }

    let mut tracked = Engine::with_tags(field, nvars, twists.to_vec(), tag_twists.clone(), order);
    for g in gens {
        tracked.add_generator(g.clone());
    }
    let mut span = Engine::new(field, nvars, tag_twists, order);
    while let Some(deg) = tracked.next_pending_degree() {
        tracked.process_to(deg);
        let mut found = false;
        for (d, s) in tracked.take_syzygies() {
            let nf = span.normal_form(&s);
            if !nf.is_empty() {
                span.add_generator(nf.clone());
                span.process_to(d);
                step.generators.push((d, nf));
                found = true;
            }
        }
        if found {
            span.complete();
            if span.submodule_numerator() == target {
                return Ok(step);
            }
        }
    }
    span.complete();
    if span.submodule_numerator() != target {
        return Err(ComputeError::Internal(
            "lifted syzygies do not span the syzygy module".into(),
        ));
    }
    Ok(step)
}
