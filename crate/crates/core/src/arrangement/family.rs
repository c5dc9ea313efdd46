use crate::algebra::{ExactField, Polynomial};
use crate::error::ArrangementError;

use super::{linear_coefficients, Arrangement};

/// Linear forms whose coefficients are polynomials in one parameter `t`.
///
/// Each template lives in `nvars + 1` variables, the last one being `t`.
#[derive(Clone, Debug)]
pub struct ArrangementFamily<F: ExactField> {
    field: F,
    ambient_dim: usize,
    templates: Vec<Polynomial<F>>,
    labels: Vec<Option<String>>,
    pub parameter: String,
}

impl<F: ExactField> ArrangementFamily<F> {
    pub fn new(
        field: &F,
        ambient_dim: usize,
        templates: Vec<Polynomial<F>>,
        labels: Vec<Option<String>>,
        parameter: &str,
    ) -> Self {
        assert!(templates.iter().all(|p| p.nvars() == ambient_dim + 2));
        ArrangementFamily {
            field: field.clone(),
            ambient_dim,
            templates,
            labels,
            parameter: parameter.to_string(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.templates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.templates.is_empty()
    }

    /// The arrangement `A_t`; zero or proportional forms are reported with
    /// the offending value of `t`.
    pub fn specialize(&self, t: &F::Elem) -> Result<Arrangement<F>, ArrangementError> {
        let n = self.ambient_dim + 1;
        let images: Vec<Polynomial<F>> = (0..n)
            .map(|i| Polynomial::var(&self.field, n, i))
            .chain(std::iter::once(Polynomial::constant(&self.field, n, t.clone())))
            .collect();
        let t_text = self.field.format_elem(t);
        let mut forms = Vec::with_capacity(self.templates.len());
        for (i, p) in self.templates.iter().enumerate() {
            let q = p.compose(&images)?;
            let coeffs = linear_coefficients(&q).ok_or_else(|| ArrangementError::Degenerate {
                t: t_text.clone(),
                reason: format!("form {i} is not linear in the coordinates"),
            })?;
            forms.push(coeffs);
        }
        Arrangement::with_labels(&self.field, self.ambient_dim, forms, self.labels.clone()).map_err(|e| match e {
            ArrangementError::ZeroForm(i) => ArrangementError::Degenerate {
                t: t_text.clone(),
                reason: format!("form {i} vanishes"),
            },
            ArrangementError::Proportional(i, j) => ArrangementError::Degenerate {
                t: t_text.clone(),
                reason: format!("forms {i} and {j} are proportional"),
            },
            other => other,
        })
    }
}
