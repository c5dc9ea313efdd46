use super::*;
use crate::algebra::{Field, QuadraticField, Rationals};
use crate::fixtures;
use num_rational::BigRational;

fn rational(origin: &str, text: &str) -> Arrangement<Rationals> {
    match parse_arrangement(origin, text).unwrap() {
        LoadedArrangement::Rational(a) => a,
        LoadedArrangement::Quadratic(_) => panic!("expected a rational arrangement"),
    }
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|&c| Rationals.from_int(c)).collect()).collect()
}

fn triangle() -> Arrangement<Rationals> {
    Arrangement::from_forms(&Rationals, 2, ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap()
}

#[test]
fn validation() {
    let t = triangle();
    assert_eq!(t.defining_polynomial().to_string(), "x*y*z");
    assert!(matches!(
        Arrangement::from_forms(&Rationals, 2, ints(&[&[1, 0, 0], &[2, 0, 0]])),
        Err(ArrangementError::Proportional(0, 1))
    ));
    assert!(matches!(
        Arrangement::from_forms(&Rationals, 2, ints(&[&[1, 0, 0], &[0, 0, 0]])),
        Err(ArrangementError::ZeroForm(1))
    ));
}

#[test]
fn triangle_and_simplex_lattices() {
    let l = triangle().intersection_lattice();
    assert_eq!(l.flats(2).len(), 3);
    assert!(l.flats(2).iter().all(|f| f.multiplicity() == 2));
    assert_eq!(triangle().tjurina_number().unwrap(), 3);

    let simplex = triangle().cone(1);
    assert_eq!(simplex.defining_polynomial().to_string(), "x*y*z*w");
    let l = simplex.intersection_lattice();
    assert_eq!(l.flats(2).len(), 6);
    assert_eq!(l.flats(3).len(), 4);
    assert!(l.flats(3).iter().all(|f| f.multiplicity() == 3));
    assert_eq!(l.flats(4).len(), 1);
}

#[test]
fn pencil_tjurina() {
    let p = Arrangement::from_forms(&Rationals, 2, ints(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, 2, 0]])).unwrap();
    assert_eq!(p.tjurina_number().unwrap(), 9);
}

#[test]
fn nine_lines_tjurina_and_isomorphism() {
    let b = rational("B", fixtures::B);
    let bp = rational("B'", fixtures::B_PRIME);
    assert_eq!(b.tjurina_number().unwrap(), 42);
    assert_eq!(bp.tjurina_number().unwrap(), 42);
    let (lb, lbp) = (b.intersection_lattice(), bp.intersection_lattice());
    let perm = lattice_isomorphic(&lb, &lbp).expect("isomorphic lattices");
    assert_eq!(lb.relabel(&perm), lbp);

    let generic: Vec<Vec<i64>> = (1..=9).map(|i| vec![1, i, i * i]).collect();
    let refs: Vec<&[i64]> = generic.iter().map(|v| v.as_slice()).collect();
    let g = Arrangement::from_forms(&Rationals, 2, ints(&refs)).unwrap();
    assert!(lattice_isomorphic(&lb, &g.intersection_lattice()).is_none());

    let (ca, cap) = (b.cone(1).intersection_lattice(), bp.cone(1).intersection_lattice());
    assert!(lattice_isomorphic(&ca, &cap).is_some());
    assert!(lattice_isomorphic(&ca, &lb.cone_reconstruction()).is_some());
}

#[test]
fn cones_match_fixtures() {
    let b = rational("B", fixtures::B);
    assert_eq!(b.cone(1).forms().len(), 10);
    let a = rational("A", fixtures::A);
    assert_eq!(b.cone(1).defining_polynomial(), a.defining_polynomial());
    let d = rational("D", fixtures::D);
    assert_eq!(b.cone(2).defining_polynomial(), d.defining_polynomial());
}

#[test]
fn family_specializations() {
    let LoadedFamily::Rational(fam) = parse_family("Bt", fixtures::B_FAMILY).unwrap() else {
        panic!("expected a rational family");
    };
    let b = rational("B", fixtures::B);
    let bp = rational("B'", fixtures::B_PRIME);
    assert_eq!(fam.specialize(&Rationals.from_int(0)).unwrap().defining_polynomial(), b.defining_polynomial());
    assert_eq!(fam.specialize(&Rationals.from_int(2)).unwrap().defining_polynomial(), bp.defining_polynomial());
    assert!(matches!(fam.specialize(&Rationals.from_int(3)), Err(ArrangementError::Degenerate { .. })));
}

#[test]
fn t10_family_matches_fixtures() {
    let LoadedFamily::Quadratic(fam) = parse_family("Qt", fixtures::Q_FAMILY).unwrap() else {
        panic!("expected a quadratic family");
    };
    let k = QuadraticField::new(5).unwrap();
    let q3 = rational("Q3", fixtures::Q3);
    let spec3 = fam.specialize(&k.from_int(3)).unwrap();
    assert_eq!(spec3.form_strings(), q3.form_strings());
    let LoadedArrangement::Quadratic(qs) = parse_arrangement("Qs", fixtures::Q_SQRT5).unwrap() else {
        panic!("expected a quadratic arrangement");
    };
    let t = k.add(&k.from_int(3), &k.sqrt_m());
    assert_eq!(fam.specialize(&t).unwrap().defining_polynomial(), qs.defining_polynomial());
    assert!(matches!(fam.specialize(&k.from_int(2)), Err(ArrangementError::Degenerate { .. })));
}

#[test]
fn file_errors_name_lines() {
    let err = parse_arrangement("bad", "P 2 over Q\nx\n# comment\n2x\n").unwrap_err();
    assert!(err.to_string().contains("lines 2 and 4"), "{err}");
    let err = parse_arrangement("bad", "P 2 over Q\nx + $y\n").unwrap_err();
    assert!(err.to_string().contains("line 2, column"), "{err}");
    let coeffs = rational("list", "P 2 over Q\n1 2 3\nL: 0, 1, -1\n");
    assert_eq!(coeffs.form_strings(), vec!["x + 2*y + 3*z", "y - z"]);
    assert_eq!(coeffs.labels()[1].as_deref(), Some("L"));
    let round = rational("round", &coeffs.to_text());
    assert_eq!(round, coeffs);
}
