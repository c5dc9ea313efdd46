use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

/// Largest number of variables a monomial can carry.
pub const MAX_VARS: usize = 8;

/// Dense exponent vector with cached total degree.
#[derive(Clone, Copy)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            deg: 0,
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    /// Panics when more than `MAX_VARS` exponents are given.
    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut m = Self::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| e as u32).sum();
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += *o;
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= *s;
        }
        Some(Monomial {
            exps,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).max(*o);
        }
        Monomial {
            exps,
            deg: exps.iter().map(|&e| e as u32).sum(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).min(*o);
        }
        Monomial {
            exps,
            deg: exps.iter().map(|&e| e as u32).sum(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    /// Thermometer-coded divisibility mask: if `a` divides `b` then
    /// `a.sev() & !b.sev() == 0`.
    #[inline]
    pub fn sev(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            let bits = (e as u32).min(8);
            if bits > 0 {
                mask |= ((1u64 << bits) - 1) << (8 * i);
            }
        }
        mask
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[i] as u32 + e as u32;
        m.exps[i] = e;
        m
    }

    /// Derivative bookkeeping: `(exponent, monomial / x_i)`.
    pub fn derive(&self, i: usize) -> Option<(u16, Monomial)> {
        let e = self.exps[i];
        if e == 0 {
            return None;
        }
        Some((e, self.with_exponent(i, e - 1)))
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// Graded monomial orders. `Lex` is only ever applied to monomials of equal
/// degree by the engine; across degrees the higher degree wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.deg.cmp(&b.deg) {
            Ordering::Equal => {}
            other => return other,
        }
        match self {
            MonomialOrder::Grevlex => {
                for i in (0..MAX_VARS).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }

    /// Position of `m` among the degree-`deg m` monomials in `nvars`
    /// variables, sorted from largest (rank 0) to smallest.
    pub fn rank(&self, m: &Monomial, nvars: usize) -> usize {
        let mut rem = m.deg as usize;
        let mut rank = 0usize;
        match self {
            MonomialOrder::Grevlex => {
                for i in (1..nvars).rev() {
                    let e = m.exps[i] as usize;
                    rank += binom(rem + i, i) - binom(rem - e + i, i);
                    rem -= e;
                }
            }
            MonomialOrder::Lex => {
                for i in 0..nvars.saturating_sub(1) {
                    let e = m.exps[i] as usize;
                    let r = nvars - 1 - i;
                    if rem > e {
                        rank += binom(rem - e - 1 + r, r);
                    }
                    rem -= e;
                }
            }
        }
        rank
    }

    /// All monomials of degree `deg` in `nvars` variables, largest first.
    pub fn monomials_of_degree(&self, nvars: usize, deg: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(count_monomials(nvars, deg as usize));
        let mut cur = [0u16; MAX_VARS];
        enumerate(nvars, 0, deg as u16, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }
}

fn enumerate(nvars: usize, i: usize, rem: u16, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
    if nvars == 0 {
        if rem == 0 {
            out.push(Monomial::one());
        }
        return;
    }
    if i == nvars - 1 {
        cur[i] = rem;
        out.push(Monomial::from_exponents(&cur[..nvars]));
        cur[i] = 0;
        return;
    }
    for e in 0..=rem {
        cur[i] = e;
        enumerate(nvars, i + 1, rem - e, cur, out);
    }
    cur[i] = 0;
}

/// Number of monomials of degree `deg` in `nvars` variables.
pub fn count_monomials(nvars: usize, deg: usize) -> usize {
    if nvars == 0 {
        return usize::from(deg == 0);
    }
    binom(deg + nvars - 1, nvars - 1)
}

const BINOM_ROWS: usize = 512;

fn binom_table() -> &'static Vec<[usize; MAX_VARS + 1]> {
    static TABLE: OnceLock<Vec<[usize; MAX_VARS + 1]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![[0usize; MAX_VARS + 1]; BINOM_ROWS];
        for n in 0..BINOM_ROWS {
            t[n][0] = 1;
            for k in 1..=MAX_VARS.min(n) {
                t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            }
        }
        t
    })
}

/// Binomial coefficient `C(n, k)` for `k <= MAX_VARS`.
#[inline]
pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    if n < BINOM_ROWS {
        return binom_table()[n][k];
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_matches_sorted_enumeration() {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            for nvars in 1..=5 {
                for deg in 0..=6 {
                    let monos = order.monomials_of_degree(nvars, deg);
                    assert_eq!(monos.len(), count_monomials(nvars, deg as usize));
                    for (i, m) in monos.iter().enumerate() {
                        assert_eq!(order.rank(m, nvars), i, "{order:?} {m:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn grevlex_small_cases() {
        let x = Monomial::from_exponents(&[1, 0, 0]);
        let y = Monomial::from_exponents(&[0, 1, 0]);
        let x2 = x.mul(&x);
        let yz = Monomial::from_exponents(&[0, 1, 1]);
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&x, &y), Ordering::Greater);
        assert_eq!(o.cmp(&x2, &yz), Ordering::Greater);
        // xz^2 < y^3 in grevlex, but not in lex.
        let xz2 = Monomial::from_exponents(&[1, 0, 2]);
        let y3 = Monomial::from_exponents(&[0, 3, 0]);
        assert_eq!(o.cmp(&xz2, &y3), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&xz2, &y3), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_sev() {
        let a = Monomial::from_exponents(&[1, 2, 0, 0]);
        let b = Monomial::from_exponents(&[3, 2, 1, 0]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.sev() & !b.sev(), 0);
        assert_eq!(a.quotient_of(&b), Some(Monomial::from_exponents(&[2, 0, 1, 0])));
        assert_eq!(a.lcm(&b), b);
        assert!(!a.is_coprime(&b));
    }
}
