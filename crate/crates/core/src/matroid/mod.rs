//! Rank-3 matroids, the elliptic matroids `T_n`, realizations by line
//! arrangements, the `T_10` family `Q_t`, triple points and conics, and a
//! parametrized realization space of plane arrangements.

mod geometry;
mod realization;

pub use geometry::{conic_through, normalize_point, qt_arrangement, qt_forbidden, triple_points, Conic};
pub use realization::{RealizationMatrix, RealizationOutcome};

use serde::{Deserialize, Serialize};

use crate::algebra::{linalg, ExactField, Field};
use crate::arrangement::{lattice_isomorphic, Arrangement, Flat, IntersectionLattice};
use crate::error::MatroidError;

/// A matroid given by its bases, as bit masks over `0 .. ground_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matroid {
    pub ground_size: usize,
    pub rank: usize,
    pub bases: Vec<u64>,
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// `T_n`: triples `{i, j, k}` of `Z/n` are dependent exactly when
/// `i + j + k = 0 mod n`.
pub fn build_tn(n: usize) -> Result<Matroid, MatroidError> {
    if n < 3 {
        return Err(MatroidError::TooSmall(n));
    }
    let bases = subsets_of_size(n, 3)
        .into_iter()
        .filter(|&m| members(m).iter().sum::<usize>() % n != 0)
        .collect();
    Ok(Matroid {
        ground_size: n,
        rank: 3,
        bases,
    })
}

fn members(m: u64) -> Vec<usize> {
    (0..64).filter(|&i| m >> i & 1 == 1).collect()
}

impl Matroid {
    pub fn is_basis(&self, m: u64) -> bool {
        self.bases.binary_search(&m).is_ok()
    }

    /// `rank`-subsets that are not bases.
    pub fn nonbases(&self) -> Vec<u64> {
        subsets_of_size(self.ground_size, self.rank)
            .into_iter()
            .filter(|&m| !self.is_basis(m))
            .collect()
    }

    pub fn rank_of(&self, set: u64) -> usize {
        self.bases.iter().map(|b| (b & set).count_ones() as usize).max().unwrap_or(0)
    }

    fn closure(&self, set: u64) -> u64 {
        let r = self.rank_of(set);
        (0..self.ground_size).fold(set, |acc, e| {
            if self.rank_of(set | 1 << e) == r {
                acc | 1 << e
            } else {
                acc
            }
        })
    }

    /// The lattice of flats, in the same shape as an arrangement lattice.
    pub fn lattice(&self) -> IntersectionLattice {
        let mut ranks: Vec<Vec<Flat>> = Vec::new();
        let mut current: Vec<u64> = (0..self.ground_size).map(|e| self.closure(1 << e)).collect();
        current.sort();
        current.dedup();
        let mut r = 1;
        while !current.is_empty() {
            let mut next: Vec<u64> = Vec::new();
            for &f in &current {
                for e in 0..self.ground_size {
                    if f >> e & 1 == 0 {
                        next.push(self.closure(f | 1 << e));
                    }
                }
            }
            next.sort();
            next.dedup();
            ranks.push(current.iter().map(|&h| Flat { hyperplanes: h, rank: r }).collect());
            current = next;
            r += 1;
        }
        IntersectionLattice {
            num_hyperplanes: self.ground_size,
            ambient_rank: self.rank,
            ranks,
        }
    }
}

/// Non-emptiness, uniform size and basis exchange, checked exhaustively.
pub fn verify_matroid(m: &Matroid) -> bool {
    if m.bases.is_empty() || m.bases.iter().any(|b| b.count_ones() as usize != m.rank) {
        return false;
    }
    m.bases.iter().all(|&a| {
        m.bases.iter().all(|&b| {
            members(a & !b)
                .into_iter()
                .all(|x| members(b & !a).into_iter().any(|y| m.is_basis((a & !(1 << x)) | 1 << y)))
        })
    })
}

/// Whether `i -> u i + a` maps bases of `T_n` onto bases.
/// For `T_n` this holds exactly when `3a = 0 mod n`.
pub fn affine_automorphism(m: &Matroid, u: usize, a: usize) -> Result<bool, MatroidError> {
    let n = m.ground_size;
    if num_integer::gcd(u, n) != 1 {
        return Err(MatroidError::NotAUnit(u, n));
    }
    let map = |s: u64| members(s).into_iter().fold(0u64, |acc, i| acc | 1 << ((u * i + a) % n));
    Ok(m.bases.iter().all(|&b| m.is_basis(map(b))))
}

/// `1 + floor(n (n - 3) / 6)`.
pub fn triple_count_formula(n: usize) -> usize {
    1 + n * (n - 3) / 6
}

/// Whether the vectors realize `m`: a `rank`-subset is a basis exactly
/// when its determinant is nonzero.
pub fn realizes<F: Field>(field: &F, vectors: &[Vec<F::Elem>], m: &Matroid) -> Result<bool, MatroidError> {
    if vectors.len() != m.ground_size {
        return Err(MatroidError::WrongCardinality {
            expected: m.ground_size,
            found: vectors.len(),
        });
    }
    Ok(subsets_of_size(m.ground_size, m.rank).into_iter().all(|s| {
        let rows: Vec<Vec<F::Elem>> = members(s).into_iter().map(|i| vectors[i].clone()).collect();
        let nonzero = !field.is_zero(&linalg::determinant(field, &rows));
        nonzero == m.is_basis(s)
    }))
}

/// A labeling of the lines of `arr` by the ground set of `m` under which
/// the arrangement realizes `m`: entry `i` is the element assigned to
/// line `i`.
pub fn realization_labeling<F: ExactField>(arr: &Arrangement<F>, m: &Matroid) -> Option<Vec<usize>> {
    let perm = lattice_isomorphic(&arr.intersection_lattice(), &m.lattice())?;
    let mut vectors = vec![Vec::new(); arr.len()];
    for (i, &e) in perm.iter().enumerate() {
        vectors[e] = arr.forms()[i].clone();
    }
    realizes(arr.field(), &vectors, m).ok()?.then_some(perm)
}

#[cfg(test)]
mod tests;
