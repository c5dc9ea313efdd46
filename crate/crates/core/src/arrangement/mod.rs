//! Hyperplane arrangements in projective space: defining polynomials,
//! intersection lattices, Tjurina numbers of line arrangements and cones.

mod family;
mod io;
mod lattice;

pub use family::ArrangementFamily;
pub use io::{
    parse_arrangement, parse_arrangement_file, parse_family, parse_family_over, LoadedArrangement, LoadedFamily,
};
pub use lattice::{lattice_isomorphic, Flat, IntersectionLattice};

use crate::algebra::{default_var_names, product, ExactField, Monomial, Polynomial};
use crate::error::ArrangementError;

/// A central arrangement of hyperplanes in `C^{n+1}`, viewed in `P^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrangement<F: ExactField> {
    field: F,
    ambient_dim: usize,
    forms: Vec<Vec<F::Elem>>,
    labels: Vec<Option<String>>,
}

impl<F: ExactField> Arrangement<F> {
    /// Validates the forms: none zero, no two proportional.
    pub fn from_forms(field: &F, ambient_dim: usize, forms: Vec<Vec<F::Elem>>) -> Result<Self, ArrangementError> {
        let labels = vec![None; forms.len()];
        Self::with_labels(field, ambient_dim, forms, labels)
    }

    pub fn with_labels(
        field: &F,
        ambient_dim: usize,
        forms: Vec<Vec<F::Elem>>,
        labels: Vec<Option<String>>,
    ) -> Result<Self, ArrangementError> {
        let n = ambient_dim + 1;
        for (i, f) in forms.iter().enumerate() {
            if f.len() != n {
                return Err(ArrangementError::WrongLength {
                    index: i,
                    found: f.len(),
                    expected: n,
                });
            }
            if f.iter().all(|c| field.is_zero(c)) {
                return Err(ArrangementError::ZeroForm(i));
            }
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                if proportional(field, &forms[i], &forms[j]) {
                    return Err(ArrangementError::Proportional(i, j));
                }
            }
        }
        Ok(Arrangement {
            field: field.clone(),
            ambient_dim,
            forms,
            labels,
        })
    }

    /// Builds an arrangement from linear forms given as polynomials.
    pub fn from_polynomials(field: &F, polys: &[Polynomial<F>]) -> Result<Self, ArrangementError> {
        let nvars = polys.first().map_or(3, |p| p.nvars());
        let mut forms = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            forms.push(linear_coefficients(p).ok_or_else(|| ArrangementError::Degenerate {
                t: String::new(),
                reason: format!("form {i} is not linear"),
            })?);
        }
        Self::from_forms(field, nvars - 1, forms)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn nvars(&self) -> usize {
        self.ambient_dim + 1
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[Vec<F::Elem>] {
        &self.forms
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn form_polynomial(&self, i: usize) -> Polynomial<F> {
        let n = self.nvars();
        let terms = self.forms[i]
            .iter()
            .enumerate()
            .map(|(v, c)| (Monomial::var(v), c.clone()))
            .collect();
        Polynomial::from_terms(&self.field, n, terms)
    }

    /// The product of all forms.
    pub fn defining_polynomial(&self) -> Polynomial<F> {
        let factors: Vec<_> = (0..self.len()).map(|i| self.form_polynomial(i)).collect();
        product(&self.field, self.nvars(), &factors)
    }

    pub fn intersection_lattice(&self) -> IntersectionLattice {
        IntersectionLattice::compute(&self.field, self.nvars(), &self.forms)
    }

    /// Sum of `(m_p - 1)^2` over the multiple points of a line arrangement.
    pub fn tjurina_number(&self) -> Result<i64, ArrangementError> {
        if self.ambient_dim != 2 {
            return Err(ArrangementError::UnsupportedDimension(self.ambient_dim));
        }
        Ok(self
            .intersection_lattice()
            .flats(2)
            .iter()
            .map(|f| (f.multiplicity() as i64 - 1).pow(2))
            .sum())
    }

    /// The `k`-fold cone: the forms extended by zeros plus the new
    /// coordinate hyperplanes `w_1, .., w_k`.
    pub fn cone(&self, k: usize) -> Self {
        let n = self.nvars() + k;
        let zero = self.field.zero();
        let mut forms: Vec<Vec<F::Elem>> = self
            .forms
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.resize(n, zero.clone());
                g
            })
            .collect();
        let names = default_var_names(n);
        let mut labels = self.labels.clone();
        for i in 0..k {
            let mut w = vec![zero.clone(); n];
            w[self.nvars() + i] = self.field.one();
            forms.push(w);
            labels.push(Some(names[self.nvars() + i].clone()));
        }
        Arrangement {
            field: self.field.clone(),
            ambient_dim: self.ambient_dim + k,
            forms,
            labels,
        }
    }

    /// The forms rendered as linear polynomials in the default variables.
    pub fn form_strings(&self) -> Vec<String> {
        let names = default_var_names(self.nvars());
        (0..self.len()).map(|i| self.form_polynomial(i).to_string_with(&names)).collect()
    }
}

fn proportional<F: ExactField>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> bool {
    (0..a.len()).all(|i| {
        (i + 1..a.len()).all(|j| {
            let l = field.mul(&a[i], &b[j]);
            let r = field.mul(&a[j], &b[i]);
            l == r
        })
    })
}

/// Coefficient vector of a homogeneous linear polynomial.
pub(crate) fn linear_coefficients<F: ExactField>(p: &Polynomial<F>) -> Option<Vec<F::Elem>> {
    let field = p.field();
    let mut out = vec![field.zero(); p.nvars()];
    for (m, c) in p.terms() {
        if m.degree() != 1 {
            return None;
        }
        let v = (0..p.nvars()).find(|&v| m.exponent(v) == 1)?;
        out[v] = c.clone();
    }
    Some(out)
}

#[cfg(test)]
mod tests;
