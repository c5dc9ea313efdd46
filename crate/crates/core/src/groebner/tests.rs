use super::*;
use crate::algebra::{default_var_names, parse_polynomial, PrimeField, Rationals};

fn q(text: &str, n: usize) -> Polynomial<Rationals> {
    parse_polynomial(&Rationals, &default_var_names(n), text).unwrap()
}

fn qs(texts: &[&str], n: usize) -> Vec<Polynomial<Rationals>> {
    texts.iter().map(|t| q(t, n)).collect()
}

#[test]
fn already_reduced_basis() {
    let gb = groebner_basis(&qs(&["x", "y"], 3), MonomialOrder::Grevlex).unwrap();
    let mut got: Vec<String> = gb.polynomials().iter().map(|p| p.to_string()).collect();
    got.sort();
    assert_eq!(got, vec!["x", "y"]);
}

#[test]
fn hand_buchberger_example() {
    let gb = groebner_basis(&qs(&["x^2", "x*y + y^2"], 2), MonomialOrder::Grevlex).unwrap();
    let mut got: Vec<String> = gb.polynomials().iter().map(|p| p.to_string()).collect();
    got.sort();
    assert_eq!(got, vec!["x*y + y^2", "x^2", "y^3"]);
    assert!(gb.satisfies_buchberger_criterion());
}

#[test]
fn fermat_partials_are_a_monomial_basis() {
    let f = q("x^3 + y^3 + z^3", 3);
    let gb = groebner_basis(&f.partial_derivatives(), MonomialOrder::Grevlex).unwrap();
    let mut got: Vec<String> = gb.polynomials().iter().map(|p| p.to_string()).collect();
    got.sort();
    assert_eq!(got, vec!["x^2", "y^2", "z^2"]);
}

#[test]
fn normal_forms() {
    let gb = groebner_basis(&qs(&["x^2", "y^2", "z^2"], 3), MonomialOrder::Grevlex).unwrap();
    assert!(normal_form(&q("x^2*y", 3), &gb).unwrap().is_zero());
    assert_eq!(normal_form(&q("x*y*z", 3), &gb).unwrap(), q("x*y*z", 3));
    let gb = groebner_basis(&qs(&["x^2 - y"], 2), MonomialOrder::Grevlex).unwrap();
    assert_eq!(normal_form(&q("x^3", 2), &gb).unwrap(), q("x*y", 2));
}

#[test]
fn inhomogeneous_and_lex_bases_satisfy_criterion() {
    let gens = qs(&["x^2 + y*z - 1", "x*y - z", "y^3 - x + 2"], 3);
    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let gb = groebner_basis(&gens, order).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
    }
}

#[test]
fn mixed_domains_are_rejected() {
    let a = Polynomial::var(&PrimeField::new(7).unwrap(), 2, 0);
    let b = Polynomial::var(&PrimeField::new(11).unwrap(), 2, 1);
    assert!(matches!(
        groebner_basis(&[a, b], MonomialOrder::Grevlex),
        Err(ComputeError::Algebra(AlgebraError::DomainMismatch(_, _)))
    ));
}

fn check_syzygies(gens: &[Polynomial<Rationals>], syz: &[ModuleElement<Rationals>]) {
    for s in syz {
        assert!(s.apply(gens).unwrap().is_zero(), "{s:?}");
    }
}

#[test]
fn koszul_syzygy_of_two_variables() {
    let gens = qs(&["x", "y"], 2);
    let syz = syzygy_generators(&gens, MonomialOrder::Grevlex).unwrap();
    assert_eq!(syz.len(), 1);
    check_syzygies(&gens, &syz);
    assert_eq!(syz[0].degree(), Some(2));
}

#[test]
fn syzygies_of_xyz_partials() {
    let gens = q("x*y*z", 3).partial_derivatives();
    let syz = syzygy_generators(&gens, MonomialOrder::Grevlex).unwrap();
    check_syzygies(&gens, &syz);
    let degs: Vec<u32> = syz.iter().map(|s| s.degree().unwrap() - 2).collect();
    assert_eq!(degs, vec![1, 1]);
}

#[test]
fn koszul_syzygies_of_regular_sequence() {
    let gens = qs(&["x^2", "y^2", "z^2"], 3);
    let syz = syzygy_generators(&gens, MonomialOrder::Grevlex).unwrap();
    check_syzygies(&gens, &syz);
    let degs: Vec<u32> = syz.iter().map(|s| s.degree().unwrap() - 2).collect();
    assert_eq!(degs, vec![2, 2, 2]);
}

#[test]
fn krull_dimensions() {
    assert_eq!(krull_dimension(&qs(&["x", "y"], 4)).unwrap(), 2);
    assert_eq!(krull_dimension(&qs(&["x"], 4)).unwrap(), 3);
    assert_eq!(krull_dimension(&qs(&["1"], 4)).unwrap(), -1);
    assert_eq!(krull_dimension(&qs(&["x*y", "x*z"], 3)).unwrap(), 2);
}
