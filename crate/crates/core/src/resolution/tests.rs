use super::*;
use crate::algebra::{default_var_names, parse_polynomial, PrimeField, Rationals, DEFAULT_PRIME};

const G: &str = "x*y*z*(x+y+z)*(2*x+y+z)*(2*x+3*y+z)*(2*x+3*y+4*z)*(3*x+5*z)*(3*x+4*y+5*z)";
const G_PRIME: &str = "x*y*z*(x+y+z)*(2*x+y+z)*(2*x+3*y+z)*(2*x+3*y+4*z)*(x+3*z)*(x+2*y+3*z)";

fn fp(text: &str, n: usize) -> Polynomial<PrimeField> {
    parse_polynomial(&PrimeField::new(DEFAULT_PRIME).unwrap(), &default_var_names(n), text).unwrap()
}

fn q(text: &str, n: usize) -> Polynomial<Rationals> {
    parse_polynomial(&Rationals, &default_var_names(n), text).unwrap()
}

#[test]
fn fermat_cubic_is_koszul() {
    let r = minimal_resolution_d0(&q("x^3 + y^3 + z^3", 3), MonomialOrder::Grevlex).unwrap();
    assert_eq!(r.betti.to_string(), "d=(2_3), c=(4)");
    assert!(r.smooth);
    for g in &r.d0_generators {
        assert!(g.apply(&q("x^3 + y^3 + z^3", 3).partial_derivatives()).unwrap().is_zero());
    }
}

#[test]
fn triangle_is_free() {
    let r = minimal_resolution_d0(&q("x*y*z", 3), MonomialOrder::Grevlex).unwrap();
    assert_eq!(r.betti.d, vec![1, 1]);
    assert!(r.betti.c.is_empty());
    assert_eq!(mdr(&q("x*y*z", 3), MonomialOrder::Grevlex).unwrap(), (1, false));
}

#[test]
fn non_reduced_input_is_rejected() {
    let f = q("x^2*y", 3);
    assert!(matches!(minimal_resolution_d0(&f, MonomialOrder::Grevlex), Err(ComputeError::NotReduced)));
}

#[test]
fn simplex_cone_polynomial() {
    let h = hilbert_polynomial(&q("x*y*z*w", 4)).unwrap();
    assert_eq!(h, HilbertPolynomial::Linear { a: 6, b: -2 });
}

#[test]
fn nine_line_arrangements_hilbert_function() {
    let g = fp(G, 3);
    let gp = fp(G_PRIME, 3);
    let hg = hilbert_data(&g).unwrap();
    let hgp = hilbert_data(&gp).unwrap();
    assert_eq!(hg.values[..14], [1, 3, 6, 10, 15, 21, 28, 36, 42, 46, 48, 48, 46, 42]);
    assert_eq!(hgp.values[13], 43);
    assert_eq!(hg.polynomial, HilbertPolynomial::Constant { tau: 42 });
    assert_eq!(stabilization_threshold(&g).unwrap(), 13);
    assert_eq!(stabilization_threshold(&gp).unwrap(), 14);
}

#[test]
fn nine_line_arrangements_betti() {
    let r = minimal_resolution_d0(&fp(G, 3), MonomialOrder::Grevlex).unwrap();
    assert_eq!(r.betti.to_string(), "d=(6_6), c=(7_4)");
    let r = minimal_resolution_d0(&fp(G_PRIME, 3), MonomialOrder::Grevlex).unwrap();
    assert_eq!(r.betti.to_string(), "d=(5,6_3), c=(7,8)");
}
