pub mod algebra;
pub mod arrangement;
pub mod cli;
pub mod error;
pub mod ziegler;
pub mod fixtures;
pub mod groebner;
pub mod matroid;
pub mod resolution;
