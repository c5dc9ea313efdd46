mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::*;
use ziegler_core::algebra::{
    primes_with_sqrt, ExactField, Field, Monomial, MonomialOrder, Polynomial, PrimeField, QuadElem, QuadraticField,
    Rationals,
};
use ziegler_core::arrangement::{lattice_isomorphic, parse_arrangement, Arrangement, LoadedArrangement};
use ziegler_core::groebner::{groebner_basis, normal_form};
use ziegler_core::matroid::{affine_automorphism, build_tn, triple_count_formula, verify_matroid};
use ziegler_core::resolution::minimal_resolution_d0;
use ziegler_core::resolution::multiprime::{invariants, reduce_mod_p, Backend, Policy};

const P: u64 = 32003;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn homogeneous<F: Field>(field: &F, n: usize, d: u32, coeffs: &[i64]) -> Polynomial<F> {
    let ms = MonomialOrder::Grevlex.monomials_of_degree(n, d);
    let terms = ms.into_iter().zip(coeffs.iter().cycle()).map(|(m, &c)| (m, field.from_int(c))).collect();
    Polynomial::from_terms(field, n, terms)
}

fn poly3<F: Field>(field: &F, terms: &[(u16, u16, u16, i64)]) -> Polynomial<F> {
    let t = terms
        .iter()
        .map(|&(a, b, c, k)| (Monomial::from_exponents(&[a, b, c]), field.from_int(k)))
        .collect();
    Polynomial::from_terms(field, 3, t)
}

fn small_terms() -> impl Strategy<Value = Vec<(u16, u16, u16, i64)>> {
    prop::collection::vec((0u16..3, 0u16..3, 0u16..3, -4i64..5), 0..5)
}

fn lines(count: std::ops::Range<usize>) -> impl Strategy<Value = Vec<[i64; 3]>> {
    prop::collection::vec([-3i64..4, -3i64..4, -3i64..4], count)
}

fn arrangement(forms: &[[i64; 3]]) -> Option<Arrangement<Rationals>> {
    let f = forms.iter().map(|r| r.iter().map(|&c| q(c)).collect()).collect();
    Arrangement::from_forms(&Rationals, 2, f).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn euler_identity(n in 2usize..5, d in 1u32..6, coeffs in prop::collection::vec(-9i64..10, 1..40)) {
        let f = homogeneous(&Rationals, n, d, &coeffs);
        let e = f.euler_combination().unwrap();
        prop_assert_eq!(e, f.scale(&Rationals.from_int(d as i64)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in small_terms(), b in small_terms(), c in small_terms()) {
        let k = QuadraticField::new(5).unwrap();
        let fp = PrimeField::new(P).unwrap();
        macro_rules! check {
            ($field:expr) => {{
                let (a, b, c) = (poly3($field, &a), poly3($field, &b), poly3($field, &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert!((&a - &a).is_zero());
            }};
        }
        check!(&Rationals);
        check!(&fp);
        check!(&k);
    }

    #[test]
    fn field_inverses(x in -1000i64..1000, y in -1000i64..1000) {
        let k = QuadraticField::new(5).unwrap();
        let e = QuadElem { a: q(x), b: q(y) };
        if !k.is_zero(&e) {
            prop_assert!(k.is_one(&k.mul(&e, &k.inv(&e).unwrap())));
        }
        let fp = PrimeField::new(P).unwrap();
        let v = fp.from_int(x);
        if !fp.is_zero(&v) {
            prop_assert!(fp.is_one(&fp.mul(&v, &fp.inv(&v).unwrap())));
        }
    }

    #[test]
    fn sqrt5_specialization_is_a_homomorphism(
        a in (-50i64..50, -50i64..50, 1i64..9),
        b in (-50i64..50, -50i64..50, 1i64..9),
    ) {
        let k = QuadraticField::new(5).unwrap();
        let mk = |(x, y, d): (i64, i64, i64)| QuadElem {
            a: BigRational::new(BigInt::from(x), BigInt::from(d)),
            b: BigRational::new(BigInt::from(y), BigInt::from(d)),
        };
        let (a, b) = (mk(a), mk(b));
        for p in primes_with_sqrt(5, 1_000_000, 2) {
            let fp = PrimeField::new(p).unwrap();
            let img = |e: &QuadElem| k.to_prime_field(e, &fp).unwrap();
            prop_assert_eq!(img(&k.mul(&a, &b)), fp.mul(&img(&a), &img(&b)));
            prop_assert_eq!(img(&k.add(&a, &b)), fp.add(&img(&a), &img(&b)));
            let s = img(&k.sqrt_m());
            prop_assert_eq!(fp.mul(&s, &s), fp.from_int(5));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn buchberger_criterion_on_random_ideals(gens in prop::collection::vec(small_terms(), 1..4), lex in any::<bool>()) {
        let fp = PrimeField::new(P).unwrap();
        let gens: Vec<_> = gens.iter().map(|t| poly3(&fp, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let gb = groebner_basis(&gens, order).unwrap();
        prop_assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            prop_assert!(normal_form(g, &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn syzygies_match_the_dense_oracle(forms in lines(4..8)) {
        let Some(a) = arrangement(&forms) else { return Ok(()) };
        let fp = PrimeField::new(P).unwrap();
        let f = reduce_mod_p(&a.defining_polynomial(), &fp).unwrap();
        let Ok(r) = minimal_resolution_d0(&f, MonomialOrder::Grevlex) else {
            // Pencils do not involve every variable.
            prop_assume!(false);
            unreachable!()
        };
        let partials = f.partial_derivatives();
        for s in &r.d0_generators {
            prop_assert!(s.apply(&partials).unwrap().is_zero());
        }
        let deg = a.len() as u32;
        for k in 0..=deg {
            prop_assert_eq!(
                span_dimension(&fp, 3, &r.d0_generators, k),
                syzygy_dimension_dense(&f, k),
                "degree {}", k
            );
        }
        let n = r.jacobian_numerator.series_over_one_minus_t(3, deg as usize + 2);
        for (k, &v) in n.iter().enumerate() {
            prop_assert_eq!(v as usize, jacobian_hf_dense(&f, k as u32));
        }
        prop_assert_eq!(r.betti.alternating_rank(), 2);
    }

    #[test]
    fn betti_data_independent_of_order_and_prime(forms in lines(5..9)) {
        let Some(a) = arrangement(&forms) else { return Ok(()) };
        let g = a.defining_polynomial();
        let grevlex = invariants(&g, &Backend::Modular { primes: vec![P, 32009], policy: Policy::TwoPrime });
        let Ok(grevlex) = grevlex else { return Ok(()) };
        prop_assert!(grevlex.dissenting.is_empty());
        let fp = PrimeField::new(1_000_003).unwrap();
        let lex = minimal_resolution_d0(&reduce_mod_p(&g, &fp).unwrap(), MonomialOrder::Lex).unwrap();
        prop_assert_eq!(&lex.betti, &grevlex.value.betti);
        prop_assert_eq!(&lex.jacobian_numerator, &grevlex.value.jacobian_numerator);
    }

    #[test]
    fn betti_data_invariant_under_coordinate_change(forms in lines(5..8), m in [[-2i64..3, -2i64..3, -2i64..3], [-2i64..3, -2i64..3, -2i64..3], [-2i64..3, -2i64..3, -2i64..3]]) {
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        prop_assume!(det != 0);
        let Some(a) = arrangement(&forms) else { return Ok(()) };
        let moved: Vec<[i64; 3]> = forms
            .iter()
            .map(|r| [0, 1, 2].map(|j| (0..3).map(|i| r[i] * m[i][j]).sum()))
            .collect();
        let b = arrangement(&moved).unwrap();
        prop_assert!(lattice_isomorphic(&a.intersection_lattice(), &b.intersection_lattice()).is_some());
        let backend = Backend::default();
        let (ia, ib) = (invariants(&a.defining_polynomial(), &backend), invariants(&b.defining_polynomial(), &backend));
        if let (Ok(ia), Ok(ib)) = (ia, ib) {
            prop_assert_eq!(ia.value.betti, ib.value.betti);
        }
    }

    #[test]
    fn lattice_isomorphism_finds_relabelings(forms in lines(3..9), seed in any::<u64>()) {
        let Some(a) = arrangement(&forms) else { return Ok(()) };
        let mut perm: Vec<usize> = (0..forms.len()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut shuffled = vec![[0i64; 3]; forms.len()];
        for (i, &j) in perm.iter().enumerate() {
            shuffled[j] = forms[i];
        }
        let b = arrangement(&shuffled).unwrap();
        let (la, lb) = (a.intersection_lattice(), b.intersection_lattice());
        let iso = lattice_isomorphic(&la, &lb).expect("relabeled lattices are isomorphic");
        prop_assert_eq!(la.relabel(&iso), lb);
    }

    #[test]
    fn arrangement_text_round_trip(forms in lines(1..8)) {
        let Some(a) = arrangement(&forms) else { return Ok(()) };
        let LoadedArrangement::Rational(b) = parse_arrangement("round-trip", &a.to_text()).unwrap() else {
            panic!("rational input")
        };
        prop_assert_eq!(a.forms(), b.forms());
    }

    #[test]
    fn affine_maps_of_tn(n in 3usize..15, u in 1usize..15, a in 0usize..15) {
        let m = build_tn(n).unwrap();
        let (u, a) = (u % n, a % n);
        if num_integer::gcd(u, n) == 1 {
            prop_assert_eq!(affine_automorphism(&m, u, a).unwrap(), (3 * a) % n == 0);
        } else {
            prop_assert!(affine_automorphism(&m, u, a).is_err());
        }
    }
}

#[test]
fn tn_satisfies_the_matroid_axioms() {
    // All three elements of Z/3 sum to zero, so T_3 has no bases.
    let t3 = build_tn(3).unwrap();
    assert!(t3.bases.is_empty());
    assert!(!verify_matroid(&t3));
    for n in 4..=14 {
        let m = build_tn(n).unwrap();
        assert!(verify_matroid(&m), "T_{n}");
        let triples = (0..n)
            .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
            .filter(|(i, j, k)| (i + j + k) % n == 0)
            .count();
        assert_eq!(m.nonbases().len(), triples);
    }
    assert_eq!(triple_count_formula(10), 12);
}

#[test]
fn cone_constants_of_the_fixture_pair_are_ordered() {
    let (b, bp) = (rational("B", ziegler_core::fixtures::B), rational("Bprime", ziegler_core::fixtures::B_PRIME));
    let backend = Backend::default();
    let r = ziegler_core::ziegler::compare_arrangements(&b, &bp, &backend).unwrap();
    assert!(r.is_ziegler_pair && !r.hf);
    let (cb, cbp) = (
        ziegler_core::ziegler::cone_hilbert_polynomial(&b, &backend).unwrap(),
        ziegler_core::ziegler::cone_hilbert_polynomial(&bp, &backend).unwrap(),
    );
    assert_eq!(cb.a, cbp.a);
    // Compared in the displayed form `au - b`.
    assert!(-cb.b > -cbp.b);
}
