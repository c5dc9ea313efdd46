use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::algebra::{QuadElem, QuadraticField, Rationals};
use crate::arrangement::{parse_arrangement, LoadedArrangement};
use crate::error::ArrangementError;
use crate::fixtures;

fn rational(origin: &str, text: &str) -> Arrangement<Rationals> {
    match parse_arrangement(origin, text).unwrap() {
        LoadedArrangement::Rational(a) => a,
        LoadedArrangement::Quadratic(_) => panic!("expected a rational arrangement"),
    }
}

fn q(n: i64) -> BigRational {
    Rationals.from_int(n)
}

fn point(c: [i64; 3]) -> Vec<BigRational> {
    c.iter().map(|&v| q(v)).collect()
}

#[test]
fn tn_small_cases() {
    assert!(matches!(build_tn(2), Err(MatroidError::TooSmall(2))));
    let t10 = build_tn(10).unwrap();
    assert_eq!(t10.nonbases().len(), 12);
    assert_eq!(triple_count_formula(10), 12);
    assert!(verify_matroid(&t10));
    assert_eq!(t10.rank_of(0b111), 3);
    let lattice = t10.lattice();
    assert_eq!(lattice.flats(1).len(), 10);
    assert_eq!(lattice.flats(2).iter().filter(|f| f.multiplicity() == 3).count(), 12);
    assert_eq!(lattice.flats(3).len(), 1);
}

#[test]
fn broken_exchange_is_detected() {
    let t = Matroid {
        ground_size: 4,
        rank: 2,
        bases: vec![0b0011, 0b1100],
    };
    assert!(!verify_matroid(&t));
    let uniform = Matroid {
        ground_size: 4,
        rank: 2,
        bases: vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100],
    };
    assert!(verify_matroid(&uniform));
    let split = Matroid {
        ground_size: 6,
        rank: 3,
        bases: vec![0b000111, 0b111000],
    };
    assert!(!verify_matroid(&split));
}

#[test]
fn affine_maps() {
    let t = build_tn(10).unwrap();
    assert!(affine_automorphism(&t, 3, 0).unwrap());
    assert!(affine_automorphism(&t, 1, 0).unwrap());
    // A translation moves the triple sum by 3a.
    assert!(!affine_automorphism(&t, 3, 7).unwrap());
    let t12 = build_tn(12).unwrap();
    assert!(affine_automorphism(&t12, 5, 4).unwrap());
    assert!(matches!(affine_automorphism(&t, 5, 1), Err(MatroidError::NotAUnit(5, 10))));
}

#[test]
fn q3_realizes_t10() {
    let t10 = build_tn(10).unwrap();
    let q3 = rational("Q3.arr", fixtures::Q3);
    let labeling = realization_labeling(&q3, &t10).expect("Q_3 realizes T_10");
    let mut sorted = labeling.clone();
    sorted.sort();
    assert_eq!(sorted, (0..10).collect::<Vec<_>>());
    assert!(matches!(
        realizes(&Rationals, &q3.forms()[..9], &t10),
        Err(MatroidError::WrongCardinality { expected: 10, found: 9 })
    ));
    // The identity labeling of a generic arrangement is not a realization.
    let generic: Vec<Vec<BigRational>> = (1..=10).map(|i| point([1, i, i * i])).collect();
    assert!(!realizes(&Rationals, &generic, &t10).unwrap());
}

#[test]
fn qt_family_members() {
    let q3 = qt_arrangement(&Rationals, &q(3)).unwrap();
    assert_eq!(q3, rational("Q3.arr", fixtures::Q3));
    for bad in [0, 1, 2] {
        assert!(matches!(qt_arrangement(&Rationals, &q(bad)), Err(ArrangementError::Forbidden(_))));
    }
    let k = QuadraticField::new(5).unwrap();
    let golden = k.div(&k.add(&k.one(), &k.sqrt_m()), &k.from_int(2)).unwrap();
    assert!(qt_forbidden(&k, &golden));
    let t = k.add(&k.sqrt_m(), &k.from_int(3));
    let arr = qt_arrangement(&k, &t).unwrap();
    assert!(realization_labeling(&arr, &build_tn(10).unwrap()).is_some());
    assert_eq!(t, QuadElem { a: q(3), b: q(1) });
}

#[test]
fn q3_triple_points() {
    let got = triple_points(&rational("Q3.arr", fixtures::Q3)).unwrap();
    let mut want: Vec<Vec<BigInt>> = [
        [0, 0, 1],
        [0, 1, 0],
        [0, 1, -1],
        [0, 3, -5],
        [1, 0, 0],
        [1, 0, -1],
        [3, 0, -1],
        [1, -1, 0],
        [2, -1, -1],
        [2, -1, 1],
        [2, 1, -1],
        [6, -3, -1],
    ]
    .iter()
    .map(|p| p.iter().map(|&v| BigInt::from(v)).collect())
    .collect();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn normalization() {
    let v = vec![q(0), Rationals.div(&q(-3), &q(4)).unwrap(), q(6)];
    assert_eq!(normalize_point(&v), vec![BigInt::from(0), BigInt::from(1), BigInt::from(-8)]);
}

#[test]
fn six_points_on_a_conic() {
    let six = [[0, 0, 1], [0, 1, 0], [1, 0, -1], [1, -1, 0], [2, -1, 1], [2, 1, -1]].map(point);
    for skip in 0..6 {
        let five: Vec<_> = (0..6).filter(|&i| i != skip).map(|i| six[i].clone()).collect();
        let c = conic_through(&Rationals, &five);
        assert_eq!(c.solutions, 1);
        assert!(c.irreducible);
        assert_eq!(c.to_string_with(&Rationals).unwrap(), "x^2 + x*y + x*z + 4*y*z");
        assert!(c.contains(&Rationals, &six[skip]));
    }
    let all = conic_through(&Rationals, &six);
    assert_eq!(all.solutions, 1);
}

#[test]
fn reducible_and_underdetermined_conics() {
    let pts = [[0, 1, 0], [0, 1, 1], [0, 2, 3], [1, 0, 1], [2, 0, 5]].map(point);
    let c = conic_through(&Rationals, &pts);
    assert!(!c.irreducible);
    assert_eq!(c.to_string_with(&Rationals).unwrap(), "x*y");
    let c = conic_through(&Rationals, &pts[..4]);
    assert_eq!(c.solutions, 2);
    assert!(c.coefficients.is_none());
}

#[test]
fn realization_matrix_points() {
    let m = RealizationMatrix::parse(fixtures::REALIZATION).unwrap();
    assert_eq!(m.columns.len(), 11);
    let good: Vec<BigRational> = [2, 3, 5, 7, 11].map(q).to_vec();
    let RealizationOutcome::Arrangement(arr) = m.evaluate(&good).unwrap() else {
        panic!("(2,3,5,7,11) is admissible");
    };
    let e = rational("E.arr", fixtures::E);
    assert!(lattice_isomorphic(&arr.intersection_lattice(), &e.intersection_lattice()).is_some());
    let bad: Vec<BigRational> = [2, 1, 5, 7, 11].map(q).to_vec();
    match m.evaluate(&bad).unwrap() {
        RealizationOutcome::Violations(v) => assert!(v.contains(&"x2 - 1".to_string()), "{v:?}"),
        RealizationOutcome::Arrangement(_) => panic!("x2 = 1 is forbidden"),
    }
    assert!(RealizationMatrix::parse("params a\nrow 1").is_err());
}
