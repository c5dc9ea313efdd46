use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{linalg, Field};

/// A flat of the central arrangement: the set of hyperplanes containing a
/// linear subspace, as a bit mask over hyperplane indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Flat {
    pub hyperplanes: u64,
    pub rank: usize,
}

impl Flat {
    pub fn multiplicity(&self) -> usize {
        self.hyperplanes.count_ones() as usize
    }

    pub fn contains(&self, h: usize) -> bool {
        self.hyperplanes >> h & 1 == 1
    }

    pub fn members(&self) -> Vec<usize> {
        (0..64).filter(|&h| self.contains(h)).collect()
    }
}

/// Flats of every rank `1 ..= rank` of a central arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionLattice {
    pub num_hyperplanes: usize,
    /// Dimension of the ambient vector space `C^{n+1}`.
    pub ambient_rank: usize,
    /// `ranks[r - 1]` holds the flats of rank `r`, sorted.
    pub ranks: Vec<Vec<Flat>>,
}

impl IntersectionLattice {
    pub(crate) fn compute<F: Field>(field: &F, nvars: usize, forms: &[Vec<F::Elem>]) -> Self {
        assert!(forms.len() <= 64, "at most 64 hyperplanes are supported");
        let closure = |mask: u64| -> (u64, usize) {
            let mut rows: Vec<Vec<F::Elem>> = (0..forms.len())
                .filter(|&h| mask >> h & 1 == 1)
                .map(|h| forms[h].clone())
                .collect();
            linalg::row_reduce(field, &mut rows);
            let r = rows.len();
            let mut out = mask;
            for (h, form) in forms.iter().enumerate() {
                if mask >> h & 1 == 0 {
                    let mut ext = rows.clone();
                    ext.push(form.clone());
                    if linalg::rank(field, &ext) == r {
                        out |= 1 << h;
                    }
                }
            }
            (out, r)
        };
        let mut ranks: Vec<Vec<Flat>> = Vec::new();
        let mut current: Vec<Flat> = (0..forms.len())
            .map(|h| Flat {
                hyperplanes: 1 << h,
                rank: 1,
            })
            .collect();
        while !current.is_empty() {
            current.sort();
            let mut next = HashSet::new();
            for flat in &current {
                for h in 0..forms.len() {
                    if !flat.contains(h) {
                        let (mask, r) = closure(flat.hyperplanes | 1 << h);
                        debug_assert_eq!(r, flat.rank + 1);
                        next.insert(Flat { hyperplanes: mask, rank: r });
                    }
                }
            }
            ranks.push(current);
            current = next.into_iter().collect();
        }
        IntersectionLattice {
            num_hyperplanes: forms.len(),
            ambient_rank: nvars,
            ranks,
        }
    }

    /// Rank of the arrangement (the top rank present).
    pub fn rank(&self) -> usize {
        self.ranks.len()
    }

    pub fn flats(&self, rank: usize) -> &[Flat] {
        if rank == 0 || rank > self.ranks.len() {
            &[]
        } else {
            &self.ranks[rank - 1]
        }
    }

    pub fn all_flats(&self) -> impl Iterator<Item = &Flat> {
        self.ranks.iter().flatten()
    }

    /// Pairs `(i, j)` with flat `i` of rank `r` contained in flat `j` of rank
    /// `r + 1`.
    pub fn incidences(&self, rank: usize) -> Vec<(usize, usize)> {
        let lower = self.flats(rank);
        let upper = self.flats(rank + 1);
        let mut out = Vec::new();
        for (i, a) in lower.iter().enumerate() {
            for (j, b) in upper.iter().enumerate() {
                if a.hyperplanes & !b.hyperplanes == 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Counts of flats by `(rank, multiplicity)`.
    pub fn profile(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for f in self.all_flats() {
            *out.entry((f.rank, f.multiplicity())).or_insert(0) += 1;
        }
        out
    }

    /// Lattice of the cone, derived combinatorially: the new hyperplane
    /// `w = 0` is a coloop, so the flats are `X` and `X + {w}`.
    pub fn cone_reconstruction(&self) -> IntersectionLattice {
        let w = 1u64 << self.num_hyperplanes;
        let mut ranks: Vec<Vec<Flat>> = vec![Vec::new(); self.ranks.len() + 1];
        ranks[0].push(Flat { hyperplanes: w, rank: 1 });
        for f in self.all_flats() {
            ranks[f.rank - 1].push(*f);
            ranks[f.rank].push(Flat {
                hyperplanes: f.hyperplanes | w,
                rank: f.rank + 1,
            });
        }
        for r in &mut ranks {
            r.sort();
        }
        IntersectionLattice {
            num_hyperplanes: self.num_hyperplanes + 1,
            ambient_rank: self.ambient_rank + 1,
            ranks,
        }
    }

    /// Relabels hyperplanes: hyperplane `h` becomes `perm[h]`.
    pub fn relabel(&self, perm: &[usize]) -> IntersectionLattice {
        let map = |m: u64| -> u64 {
            (0..self.num_hyperplanes)
                .filter(|&h| m >> h & 1 == 1)
                .fold(0, |acc, h| acc | 1 << perm[h])
        };
        let mut ranks: Vec<Vec<Flat>> = self
            .ranks
            .iter()
            .map(|r| {
                r.iter()
                    .map(|f| Flat {
                        hyperplanes: map(f.hyperplanes),
                        rank: f.rank,
                    })
                    .collect()
            })
            .collect();
        for r in &mut ranks {
            r.sort();
        }
        IntersectionLattice {
            num_hyperplanes: self.num_hyperplanes,
            ambient_rank: self.ambient_rank,
            ranks,
        }
    }

    fn signature(&self, h: usize) -> Vec<(usize, usize)> {
        let mut sig: Vec<(usize, usize)> = self
            .all_flats()
            .filter(|f| f.contains(h))
            .map(|f| (f.rank, f.multiplicity()))
            .collect();
        sig.sort();
        sig
    }
}

/// A relabeling `perm` of the hyperplanes of `a` such that the flats of `a`
/// map exactly onto the flats of `b`, rank by rank.
pub fn lattice_isomorphic(a: &IntersectionLattice, b: &IntersectionLattice) -> Option<Vec<usize>> {
    if a.num_hyperplanes != b.num_hyperplanes || a.rank() != b.rank() || a.profile() != b.profile() {
        return None;
    }
    let n = a.num_hyperplanes;
    let sa: Vec<_> = (0..n).map(|h| a.signature(h)).collect();
    let sb: Vec<_> = (0..n).map(|h| b.signature(h)).collect();
    let candidates: Vec<Vec<usize>> = (0..n).map(|h| (0..n).filter(|&k| sa[h] == sb[k]).collect()).collect();
    // Assign the most constrained hyperplanes first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&h| candidates[h].len());
    let flat_sets_b: Vec<HashSet<u64>> = b.ranks.iter().map(|r| r.iter().map(|f| f.hyperplanes).collect()).collect();
    let mut search = Search {
        a,
        b,
        order: &order,
        candidates: &candidates,
        perm: vec![usize::MAX; n],
        used: 0,
        flat_sets_b: &flat_sets_b,
    };
    if search.extend(0) {
        Some(search.perm)
    } else {
        None
    }
}

struct Search<'a> {
    a: &'a IntersectionLattice,
    b: &'a IntersectionLattice,
    order: &'a [usize],
    candidates: &'a [Vec<usize>],
    perm: Vec<usize>,
    used: u64,
    flat_sets_b: &'a [HashSet<u64>],
}

impl Search<'_> {
    fn image(&self, mask: u64) -> u64 {
        (0..self.a.num_hyperplanes)
            .filter(|&h| mask >> h & 1 == 1 && self.perm[h] != usize::MAX)
            .fold(0, |acc, h| acc | 1 << self.perm[h])
    }

    /// Every partially assigned flat of `a` must still fit inside a flat of
    /// `b` of the same rank and size.
    fn consistent(&self, h: usize) -> bool {
        let assigned: u64 = (0..self.a.num_hyperplanes)
            .filter(|&k| self.perm[k] != usize::MAX)
            .fold(0, |acc, k| acc | 1 << k);
        self.a.all_flats().filter(|f| f.contains(h)).all(|f| {
            let img = self.image(f.hyperplanes & assigned);
            self.b
                .flats(f.rank)
                .iter()
                .any(|g| g.multiplicity() == f.multiplicity() && img & !g.hyperplanes == 0)
        })
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.a.ranks.iter().enumerate().all(|(r, flats)| {
                flats.iter().all(|f| self.flat_sets_b[r].contains(&self.image(f.hyperplanes)))
            });
        }
        let h = self.order[depth];
        for &k in &self.candidates[h] {
            if self.used >> k & 1 == 1 {
                continue;
            }
            self.perm[h] = k;
            self.used |= 1 << k;
            if self.consistent(h) && self.extend(depth + 1) {
                return true;
            }
            self.perm[h] = usize::MAX;
            self.used &= !(1 << k);
        }
        false
    }
}
