//! Dense linear algebra oracles, independent of the Groebner engine.

#![allow(dead_code)]

use std::collections::HashMap;

use ziegler_core::algebra::{linalg, Field, Monomial, MonomialOrder, Polynomial, PrimeField, Rationals};
use ziegler_core::arrangement::{parse_arrangement, Arrangement, LoadedArrangement};
use ziegler_core::groebner::ModuleElement;

pub fn rational(origin: &str, text: &str) -> Arrangement<Rationals> {
    match parse_arrangement(origin, text).unwrap() {
        LoadedArrangement::Rational(a) => a,
        LoadedArrangement::Quadratic(_) => panic!("{origin} is not rational"),
    }
}

fn monomials(n: usize, d: u32) -> (Vec<Monomial>, HashMap<Monomial, usize>) {
    let ms = MonomialOrder::Grevlex.monomials_of_degree(n, d);
    let idx = ms.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    (ms, idx)
}

/// `dim M(f)_k` from the rank of the degree-`k` part of the Jacobian ideal.
pub fn jacobian_hf_dense<F: Field>(f: &Polynomial<F>, k: u32) -> usize {
    let n = f.nvars();
    let field = f.field();
    let e = f.homogeneous_degree().unwrap() - 1;
    let (_, idx) = monomials(n, k);
    if k < e {
        return idx.len();
    }
    let (shifts, _) = monomials(n, k - e);
    let mut rows = Vec::new();
    for p in f.partial_derivatives() {
        for m in &shifts {
            let q = p.mul_term(m, &field.one());
            let mut row = vec![field.zero(); idx.len()];
            for (mono, c) in q.terms() {
                row[idx[mono]] = c.clone();
            }
            rows.push(row);
        }
    }
    idx.len() - linalg::rank(field, &rows)
}

/// Dimension of the degree-`k` syzygies `(a_1, .., a_n)`, `deg a_i = k`,
/// with `sum a_i f_i = 0`.
pub fn syzygy_dimension_dense<F: Field>(f: &Polynomial<F>, k: u32) -> usize {
    let n = f.nvars();
    let field = f.field();
    let e = f.homogeneous_degree().unwrap() - 1;
    let (unknowns, _) = monomials(n, k);
    let (_, out_idx) = monomials(n, k + e);
    let partials = f.partial_derivatives();
    let ncols = n * unknowns.len();
    // Columns are unknowns; build the transpose then rank it.
    let mut cols = Vec::with_capacity(ncols);
    for p in &partials {
        for m in &unknowns {
            let q = p.mul_term(m, &field.one());
            let mut col = vec![field.zero(); out_idx.len()];
            for (mono, c) in q.terms() {
                col[out_idx[mono]] = c.clone();
            }
            cols.push(col);
        }
    }
    ncols - linalg::rank(field, &cols)
}

/// Degree of the coefficient polynomials of a homogeneous syzygy.
pub fn coefficient_degree<F: Field>(s: &ModuleElement<F>) -> Option<u32> {
    s.components.iter().filter(|c| !c.is_zero()).map(|c| c.degree().unwrap()).max()
}

/// Dimension of the degree-`k` part of the module spanned by `gens`.
pub fn span_dimension<F: Field>(field: &F, nvars: usize, gens: &[ModuleElement<F>], k: u32) -> usize {
    let (_, idx) = monomials(nvars, k);
    let width = idx.len();
    let mut rows = Vec::new();
    for g in gens {
        let Some(d) = coefficient_degree(g) else { continue };
        if d > k {
            continue;
        }
        let (shifts, _) = monomials(nvars, k - d);
        for m in &shifts {
            let mut row = vec![field.zero(); nvars * width];
            for (i, c) in g.components.iter().enumerate() {
                for (mono, v) in c.mul_term(m, &field.one()).terms() {
                    row[i * width + idx[mono]] = v.clone();
                }
            }
            rows.push(row);
        }
    }
    linalg::rank(field, &rows)
}

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}
