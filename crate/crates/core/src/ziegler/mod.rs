//! Ziegler pairs and the conditions (HP), (HF), (MDR), (SPEC); the Hilbert
//! polynomial of a cone from curve data; syzygies of cones, tameness and
//! freeness classes.

mod cone;
mod freeness;

pub use cone::{
    cone_betti_prediction, cone_hilbert_polynomial, cone_syzygy_basis, tameness_check, verify_cone_basis,
    ConeHilbert,
};
pub use freeness::{classify_freeness, Freeness, FreenessClass};

use serde::{Deserialize, Serialize};

use crate::algebra::ExactField;
use crate::arrangement::{lattice_isomorphic, Arrangement, ArrangementFamily, IntersectionLattice};
use crate::error::{ArrangementError, ComputeError};
use crate::resolution::multiprime::{invariants, Backend, Invariants};
use crate::resolution::{BettiData, HilbertPolynomial};

/// First degree where two Hilbert functions differ, with both values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfDifference {
    pub degree: usize,
    pub first: i64,
    pub second: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecSample {
    pub t: String,
    /// `Err` carries the degeneracy or computation error at this `t`.
    pub outcome: Result<(bool, BettiData), String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZieglerReport {
    /// Relabeling of the first arrangement's hyperplanes onto the second's.
    pub lattice_iso: Option<Vec<usize>>,
    pub betti_a: BettiData,
    pub betti_b: BettiData,
    pub is_ziegler_pair: bool,
    pub hilbert_polynomial_a: HilbertPolynomial,
    pub hilbert_polynomial_b: HilbertPolynomial,
    pub hp: bool,
    pub hf: bool,
    pub hf_difference: Option<HfDifference>,
    pub mdr_a: Option<u32>,
    pub mdr_b: Option<u32>,
    pub mdr: bool,
    pub spec_samples: Vec<SpecSample>,
}

/// First disagreement of the Hilbert functions, scanning past the point
/// where both have reached their polynomials.
pub fn first_hf_difference(a: &Invariants, b: &Invariants) -> Result<Option<HfDifference>, ComputeError> {
    let (na, nb) = (&a.jacobian_numerator, &b.jacobian_numerator);
    let len = na.degree().unwrap_or(0).max(nb.degree().unwrap_or(0)) + 2;
    let ha = na.series_over_one_minus_t(a.betti.num_vars, len);
    let hb = nb.series_over_one_minus_t(b.betti.num_vars, len);
    Ok(ha.iter().zip(&hb).enumerate().find(|(_, (x, y))| x != y).map(|(k, (x, y))| HfDifference {
        degree: k,
        first: *x,
        second: *y,
    }))
}

/// Assembles the report from lattices and invariants computed elsewhere.
pub fn check_conditions(
    lattice_a: &IntersectionLattice,
    inv_a: &Invariants,
    lattice_b: &IntersectionLattice,
    inv_b: &Invariants,
) -> Result<ZieglerReport, ComputeError> {
    if inv_a.betti.num_vars != inv_b.betti.num_vars {
        return Err(ComputeError::ModuleMismatch);
    }
    let lattice_iso = lattice_isomorphic(lattice_a, lattice_b);
    let hpa = inv_a.hilbert()?.polynomial;
    let hpb = inv_b.hilbert()?.polynomial;
    let hf_difference = first_hf_difference(inv_a, inv_b)?;
    let is_ziegler_pair = lattice_iso.is_some() && inv_a.betti != inv_b.betti;
    Ok(ZieglerReport {
        lattice_iso,
        betti_a: inv_a.betti.clone(),
        betti_b: inv_b.betti.clone(),
        is_ziegler_pair,
        hilbert_polynomial_a: hpa,
        hilbert_polynomial_b: hpb,
        hp: hpa == hpb,
        hf: hf_difference.is_none(),
        hf_difference,
        mdr_a: inv_a.mdr(),
        mdr_b: inv_b.mdr(),
        mdr: inv_a.mdr() == inv_b.mdr(),
        spec_samples: Vec::new(),
    })
}

/// Lattices and invariants of both arrangements, computed concurrently.
pub fn compare_arrangements<F: ExactField, G: ExactField>(
    a: &Arrangement<F>,
    b: &Arrangement<G>,
    backend: &Backend,
) -> Result<ZieglerReport, ComputeError> {
    let ((la, ia), (lb, ib)) = rayon::join(
        || (a.intersection_lattice(), invariants(&a.defining_polynomial(), backend)),
        || (b.intersection_lattice(), invariants(&b.defining_polynomial(), backend)),
    );
    check_conditions(&la, &ia?.value, &lb, &ib?.value)
}

/// Samples a family: lattice comparison against `reference` and Betti data
/// at each `t`. Degenerate values are reported per sample.
pub fn spec_sample<F: ExactField>(
    family: &ArrangementFamily<F>,
    t_values: &[F::Elem],
    reference: &IntersectionLattice,
    backend: &Backend,
) -> Vec<SpecSample> {
    use rayon::prelude::*;
    t_values
        .par_iter()
        .map(|t| {
            let shown = family.field().format_elem(t);
            let outcome = (|| -> Result<(bool, BettiData), ArrangementError> {
                let a = family.specialize(t)?;
                let iso = lattice_isomorphic(&a.intersection_lattice(), reference).is_some();
                let inv = invariants(&a.defining_polynomial(), backend)?;
                Ok((iso, inv.value.betti))
            })();
            SpecSample {
                t: shown,
                outcome: outcome.map_err(|e| e.to_string()),
            }
        })
        .collect()
}

/// (SPEC_0): every sample has a lattice isomorphic to the reference.
/// (SPEC): additionally, the Betti data agree on all samples other than
/// `reference_t`. Both are claims about the samples only.
pub fn spec_flags(samples: &[SpecSample], reference_t: &str) -> (bool, bool) {
    let ok: Vec<&(bool, BettiData)> = samples.iter().filter_map(|s| s.outcome.as_ref().ok()).collect();
    let spec0 = ok.len() == samples.len() && ok.iter().all(|(iso, _)| *iso);
    let others: Vec<&BettiData> = samples
        .iter()
        .filter(|s| s.t != reference_t)
        .filter_map(|s| s.outcome.as_ref().ok().map(|(_, b)| b))
        .collect();
    let spec = spec0 && others.windows(2).all(|w| w[0] == w[1]);
    (spec0, spec)
}
