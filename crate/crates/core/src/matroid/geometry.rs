use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{default_var_names, linalg, ExactField, Field, Monomial, Polynomial, Rationals};
use crate::arrangement::{parse_family_over, Arrangement};
use crate::error::ArrangementError;
use crate::fixtures;

/// The values excluded from the `Q_t` family: `t (t - 1) (t - 2) (t^2 - t - 1)`
/// must not vanish.
pub fn qt_forbidden<F: Field>(field: &F, t: &F::Elem) -> bool {
    let one = field.one();
    let t1 = field.sub(t, &one);
    let t2 = field.sub(&t1, &one);
    let golden = field.sub(&field.mul(t, &t1), &one);
    [t, &t1, &t2, &golden].iter().any(|v| field.is_zero(v))
}

/// The ten lines of `Q_t`, realizing `T_10` for admissible `t`.
pub fn qt_arrangement<F: ExactField>(field: &F, t: &F::Elem) -> Result<Arrangement<F>, ArrangementError> {
    if qt_forbidden(field, t) {
        return Err(ArrangementError::Forbidden(field.format_elem(t)));
    }
    parse_family_over(field, "Qt.arr", fixtures::Q_FAMILY)?.specialize(t)
}

/// Primitive integer representative with first nonzero entry positive.
pub fn normalize_point(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

/// Points where exactly three lines meet, normalized and sorted.
pub fn triple_points(arr: &Arrangement<Rationals>) -> Result<Vec<Vec<BigInt>>, ArrangementError> {
    if arr.ambient_dim() != 2 {
        return Err(ArrangementError::UnsupportedDimension(arr.ambient_dim()));
    }
    let mut out: Vec<Vec<BigInt>> = arr
        .intersection_lattice()
        .flats(2)
        .iter()
        .filter(|f| f.multiplicity() == 3)
        .map(|f| {
            let m = f.members();
            let (a, b) = (&arr.forms()[m[0]], &arr.forms()[m[1]]);
            let cross = [
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ];
            normalize_point(&cross)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Conics through a set of points, on the monomials
/// `x^2, xy, xz, y^2, yz, z^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct Conic<F: Field> {
    /// Dimension of the space of conics through the points.
    pub solutions: usize,
    /// The conic when unique, scaled so the first nonzero coefficient is one.
    pub coefficients: Option<Vec<F::Elem>>,
    pub irreducible: bool,
}

const CONIC_MONOMIALS: [[u16; 3]; 6] = [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]];

fn conic_row<F: Field>(field: &F, p: &[F::Elem]) -> Vec<F::Elem> {
    CONIC_MONOMIALS
        .iter()
        .map(|e| (0..3).fold(field.one(), |acc, i| field.mul(&acc, &field.pow(&p[i], e[i] as u64))))
        .collect()
}

pub fn conic_through<F: Field>(field: &F, points: &[Vec<F::Elem>]) -> Conic<F> {
    let rows: Vec<Vec<F::Elem>> = points.iter().map(|p| conic_row(field, p)).collect();
    let null = linalg::nullspace(field, &rows, 6);
    let coefficients = (null.len() == 1).then(|| {
        let v = &null[0];
        let lead = v.iter().find(|c| !field.is_zero(c)).expect("nonzero null vector").clone();
        v.iter().map(|c| field.div(c, &lead).expect("nonzero lead")).collect::<Vec<_>>()
    });
    let irreducible = coefficients.as_ref().is_some_and(|c| {
        let two = field.from_int(2);
        let m = vec![
            vec![field.mul(&two, &c[0]), c[1].clone(), c[2].clone()],
            vec![c[1].clone(), field.mul(&two, &c[3]), c[4].clone()],
            vec![c[2].clone(), c[4].clone(), field.mul(&two, &c[5])],
        ];
        !field.is_zero(&linalg::determinant(field, &m))
    });
    Conic {
        solutions: null.len(),
        coefficients,
        irreducible,
    }
}

impl<F: Field> Conic<F> {
    pub fn polynomial(&self, field: &F) -> Option<Polynomial<F>> {
        let c = self.coefficients.as_ref()?;
        let terms = CONIC_MONOMIALS
            .iter()
            .zip(c)
            .map(|(e, c)| (Monomial::from_exponents(e), c.clone()))
            .collect();
        Some(Polynomial::from_terms(field, 3, terms))
    }

    pub fn contains(&self, field: &F, p: &[F::Elem]) -> bool {
        self.polynomial(field).is_some_and(|q| field.is_zero(&q.evaluate(p)))
    }

    pub fn to_string_with(&self, field: &F) -> Option<String> {
        Some(self.polynomial(field)?.to_string_with(&default_var_names(3)))
    }
}
