use num_rational::BigRational;

use crate::algebra::{parse_polynomial, Field, Polynomial, Rationals};
use crate::arrangement::Arrangement;
use crate::error::{AlgebraError, ArrangementError};

/// A matrix of polynomials in parameters whose columns are normal vectors
/// of planes, with the polynomials that must not vanish.
#[derive(Clone, Debug)]
pub struct RealizationMatrix {
    pub params: Vec<String>,
    pub columns: Vec<Vec<Polynomial<Rationals>>>,
    pub forbidden: Vec<Polynomial<Rationals>>,
}

#[derive(Clone, Debug)]
pub enum RealizationOutcome {
    Arrangement(Arrangement<Rationals>),
    /// The forbidden polynomials vanishing at the point.
    Violations(Vec<String>),
}

impl RealizationMatrix {
    /// Parses `params`, `column` and `forbidden` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let mut params: Vec<String> = Vec::new();
        let mut columns = Vec::new();
        let mut forbidden = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let Some((key, rest)) = line.split_once(char::is_whitespace) else {
                continue;
            };
            let at_line = |e: AlgebraError| match e {
                AlgebraError::Parse { column, message, .. } => AlgebraError::Parse {
                    line: i + 1,
                    column,
                    message,
                },
                other => other,
            };
            match key {
                "params" => params = rest.split_whitespace().map(String::from).collect(),
                "column" => columns.push(
                    rest.split(',')
                        .map(|s| parse_polynomial(&Rationals, &params, s.trim()).map_err(at_line))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                "forbidden" => forbidden.push(parse_polynomial(&Rationals, &params, rest.trim()).map_err(at_line)?),
                _ => {
                    return Err(AlgebraError::Parse {
                        line: i + 1,
                        column: 1,
                        message: format!("unknown keyword `{key}`"),
                    })
                }
            }
        }
        Ok(RealizationMatrix {
            params,
            columns,
            forbidden,
        })
    }

    /// The forbidden polynomials vanishing at `point`.
    pub fn violations(&self, point: &[BigRational]) -> Vec<String> {
        self.forbidden
            .iter()
            .filter(|p| Rationals.is_zero(&p.evaluate(point)))
            .map(|p| p.to_string_with(&self.params))
            .collect()
    }

    /// The arrangement at an admissible point, or the violated conditions.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<RealizationOutcome, ArrangementError> {
        let bad = self.violations(point);
        if !bad.is_empty() {
            return Ok(RealizationOutcome::Violations(bad));
        }
        let forms: Vec<Vec<BigRational>> = self
            .columns
            .iter()
            .map(|col| col.iter().map(|p| p.evaluate(point)).collect())
            .collect();
        let dim = forms.first().map_or(1, |f| f.len()) - 1;
        Ok(RealizationOutcome::Arrangement(Arrangement::from_forms(&Rationals, dim, forms)?))
    }
}
