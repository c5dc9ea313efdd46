//! Text format for arrangements:
//!
//! ```text
//! # comment
//! P 2 over Q            (or: over Q(sqrt 5); append `family t` for families)
//! x + y + z
//! L1: 2x + 3y + 4z
//! 1 0 -1
//! ```
//!
//! A form is a linear polynomial in the default coordinates or a list of
//! coefficients; an optional `label:` prefix names it.

use std::path::Path;

use crate::algebra::{default_var_names, parse_polynomial, ExactField, QuadraticField, Rationals};
use crate::error::{AlgebraError, ArrangementError};

use super::{linear_coefficients, Arrangement, ArrangementFamily};

/// An arrangement read from text, tagged by its coefficient field.
#[derive(Clone, Debug)]
pub enum LoadedArrangement {
    Rational(Arrangement<Rationals>),
    Quadratic(Arrangement<QuadraticField>),
}

#[derive(Clone, Debug)]
pub enum LoadedFamily {
    Rational(ArrangementFamily<Rationals>),
    Quadratic(ArrangementFamily<QuadraticField>),
}

struct Header {
    dim: usize,
    radicand: Option<i64>,
    parameter: Option<String>,
}

struct FormLine {
    line: usize,
    label: Option<String>,
    text: String,
}

fn file_error(path: &str, message: String) -> ArrangementError {
    ArrangementError::File {
        path: path.to_string(),
        message,
    }
}

fn parse_header(path: &str, line: usize, text: &str) -> Result<Header, ArrangementError> {
    let err = |m: &str| file_error(path, format!("line {line}: {m}"));
    let mut words = text.split_whitespace();
    if words.next() != Some("P") {
        return Err(err("expected header `P <n> over <field>`"));
    }
    let dim: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| err("missing projective dimension"))?;
    if words.next() != Some("over") {
        return Err(err("expected `over`"));
    }
    let rest: Vec<&str> = words.collect();
    let joined = rest.join(" ");
    let (field_text, parameter) = match joined.split_once("family") {
        Some((f, p)) => (f.trim().to_string(), Some(p.trim().to_string())),
        None => (joined.trim().to_string(), None),
    };
    let compact: String = field_text.chars().filter(|c| !c.is_whitespace()).collect();
    let radicand = if compact == "Q" {
        None
    } else {
        let inner = compact
            .strip_prefix("Q(sqrt")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| err("field must be Q or Q(sqrt m)"))?;
        let inner = inner.trim_start_matches('(').trim_end_matches(')');
        Some(inner.parse().map_err(|_| err("bad radicand"))?)
    };
    if parameter.as_deref() == Some("") {
        return Err(err("family needs a parameter name"));
    }
    Ok(Header {
        dim,
        radicand,
        parameter,
    })
}

fn split_lines(path: &str, text: &str) -> Result<(Header, Vec<FormLine>), ArrangementError> {
    let mut header = None;
    let mut forms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if header.is_none() {
            header = Some(parse_header(path, line, content)?);
            continue;
        }
        let (label, body) = match content.split_once(':') {
            Some((l, b)) => (Some(l.trim().to_string()), b.trim()),
            None => (None, content),
        };
        forms.push(FormLine {
            line,
            label,
            text: body.to_string(),
        });
    }
    let header = header.ok_or_else(|| file_error(path, "missing header".into()))?;
    Ok((header, forms))
}

fn parse_form<F: ExactField>(
    path: &str,
    field: &F,
    names: &[String],
    nvars: usize,
    form: &FormLine,
) -> Result<crate::algebra::Polynomial<F>, ArrangementError> {
    let located = |e: AlgebraError| match e {
        AlgebraError::Parse { column, message, .. } => {
            file_error(path, format!("line {}, column {column}: {message}", form.line))
        }
        other => file_error(path, format!("line {}: {other}", form.line)),
    };
    let tokens: Vec<&str> = form
        .text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if tokens.len() == nvars {
        let consts: Result<Vec<_>, _> = tokens.iter().map(|t| parse_polynomial(field, names, t)).collect();
        if let Ok(cs) = consts {
            if cs.iter().all(|c| c.degree().is_none_or(|d| d == 0)) {
                let terms = cs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(v, c)| (crate::algebra::Monomial::var(v), c.terms()[0].1.clone()))
                    .collect();
                return Ok(crate::algebra::Polynomial::from_terms(field, names.len(), terms));
            }
        }
    }
    parse_polynomial(field, names, &form.text).map_err(located)
}

fn build<F: ExactField>(
    path: &str,
    field: &F,
    header: &Header,
    lines: &[FormLine],
) -> Result<Result<Arrangement<F>, ArrangementFamily<F>>, ArrangementError> {
    let nvars = header.dim + 1;
    let mut names = default_var_names(nvars);
    if let Some(p) = &header.parameter {
        names.push(p.clone());
    }
    let polys = lines
        .iter()
        .map(|l| parse_form(path, field, &names, nvars, l))
        .collect::<Result<Vec<_>, _>>()?;
    let labels: Vec<Option<String>> = lines.iter().map(|l| l.label.clone()).collect();
    if let Some(p) = &header.parameter {
        return Ok(Err(ArrangementFamily::new(field, header.dim, polys, labels, p)));
    }
    let mut forms = Vec::new();
    for (p, l) in polys.iter().zip(lines) {
        forms.push(
            linear_coefficients(p)
                .ok_or_else(|| file_error(path, format!("line {}: not a linear form", l.line)))?,
        );
    }
    Arrangement::with_labels(field, header.dim, forms, labels)
        .map(Ok)
        .map_err(|e| match e {
            ArrangementError::Proportional(i, j) => file_error(
                path,
                format!("lines {} and {} define proportional forms", lines[i].line, lines[j].line),
            ),
            ArrangementError::ZeroForm(i) => file_error(path, format!("line {}: zero form", lines[i].line)),
            other => other,
        })
}

fn load(path: &str, text: &str) -> Result<Result<LoadedArrangement, LoadedFamily>, ArrangementError> {
    let (header, lines) = split_lines(path, text)?;
    match header.radicand {
        None => Ok(match build(path, &Rationals, &header, &lines)? {
            Ok(a) => Ok(LoadedArrangement::Rational(a)),
            Err(f) => Err(LoadedFamily::Rational(f)),
        }),
        Some(m) => {
            let k = QuadraticField::new(m)?;
            Ok(match build(path, &k, &header, &lines)? {
                Ok(a) => Ok(LoadedArrangement::Quadratic(a)),
                Err(f) => Err(LoadedFamily::Quadratic(f)),
            })
        }
    }
}

/// Parses an arrangement from text; `origin` is used in error messages.
pub fn parse_arrangement(origin: &str, text: &str) -> Result<LoadedArrangement, ArrangementError> {
    load(origin, text)?.map_err(|_| file_error(origin, "expected an arrangement, found a family".into()))
}

pub fn parse_family(origin: &str, text: &str) -> Result<LoadedFamily, ArrangementError> {
    match load(origin, text)? {
        Err(f) => Ok(f),
        Ok(_) => Err(file_error(origin, "expected a family header `... family <t>`".into())),
    }
}

/// Parses a family over a caller-chosen field, ignoring the field named in
/// the header.
pub fn parse_family_over<F: ExactField>(
    field: &F,
    origin: &str,
    text: &str,
) -> Result<ArrangementFamily<F>, ArrangementError> {
    let (header, lines) = split_lines(origin, text)?;
    match build(origin, field, &header, &lines)? {
        Err(f) => Ok(f),
        Ok(_) => Err(file_error(origin, "expected a family header `... family <t>`".into())),
    }
}

pub fn parse_arrangement_file(path: &Path) -> Result<LoadedArrangement, ArrangementError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| file_error(&shown, e.to_string()))?;
    parse_arrangement(&shown, &text)
}

impl<F: ExactField> Arrangement<F> {
    /// Renders the arrangement in the text format.
    pub fn to_text(&self) -> String {
        let field = match self.field.descriptor() {
            crate::algebra::CoefficientDomain::QuadraticExtension { m } => format!("Q(sqrt {m})"),
            _ => "Q".to_string(),
        };
        let mut out = format!("P {} over {field}\n", self.ambient_dim);
        for (form, label) in self.form_strings().iter().zip(&self.labels) {
            match label {
                Some(l) => out.push_str(&format!("{l}: {form}\n")),
                None => out.push_str(&format!("{form}\n")),
            }
        }
        out
    }
}
