//! Arrangements and data files shipped with the crate.

pub const B: &str = include_str!("../fixtures/B.arr");
pub const B_PRIME: &str = include_str!("../fixtures/Bprime.arr");
pub const B_FAMILY: &str = include_str!("../fixtures/Bfamily.arr");
pub const A: &str = include_str!("../fixtures/A.arr");
pub const A_PRIME: &str = include_str!("../fixtures/Aprime.arr");
pub const D: &str = include_str!("../fixtures/D.arr");
pub const D_PRIME: &str = include_str!("../fixtures/Dprime.arr");
pub const E: &str = include_str!("../fixtures/E.arr");
pub const E_PRIME: &str = include_str!("../fixtures/Eprime.arr");
pub const Q_FAMILY: &str = include_str!("../fixtures/Qt.arr");
pub const Q3: &str = include_str!("../fixtures/Q3.arr");
pub const Q_SQRT5: &str = include_str!("../fixtures/Qsqrt5.arr");
pub const REALIZATION: &str = include_str!("../fixtures/realization.txt");

/// All arrangement fixtures by file name.
pub const ARRANGEMENTS: &[(&str, &str)] = &[
    ("B.arr", B),
    ("Bprime.arr", B_PRIME),
    ("A.arr", A),
    ("Aprime.arr", A_PRIME),
    ("D.arr", D),
    ("Dprime.arr", D_PRIME),
    ("E.arr", E),
    ("Eprime.arr", E_PRIME),
    ("Q3.arr", Q3),
    ("Qsqrt5.arr", Q_SQRT5),
];
