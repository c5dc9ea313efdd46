use crate::algebra::monomial::Monomial;
use crate::algebra::IntPoly;

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `S / I` for
/// the monomial ideal `I` generated by `gens`.
///
/// Pivot recursion: `N(I) = N(I + (p)) + t^deg(p) N(I : p)`.
pub fn monomial_quotient_numerator(nvars: usize, gens: &[Monomial]) -> IntPoly {
    numerator(nvars, minimalize(gens.to_vec()))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        let sev = m.sev();
        if !out.iter().any(|g| g.sev() & !sev == 0 && g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator(nvars: usize, gens: Vec<Monomial>) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(|m| m.degree() == 0) {
        return IntPoly::zero();
    }
    let pairwise_coprime = {
        let mut seen = 0u32;
        gens.iter().all(|m| {
            let s = m.support();
            let ok = seen & s == 0;
            seen |= s;
            ok
        })
    };
    if pairwise_coprime {
        return gens
            .iter()
            .fold(IntPoly::one(), |acc, m| acc.mul(&IntPoly::one_minus_t_pow(m.degree() as usize)));
    }
    // Variable occurring in the most generators.
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for (i, c) in counts.iter_mut().enumerate() {
            if m.exponent(i) > 0 {
                *c += 1;
            }
        }
    }
    let var = (0..nvars).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("nvars > 0");
    let mut exps: Vec<u16> = gens.iter().map(|m| m.exponent(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let mut e = exps[exps.len() / 2];
    let pure_power = gens
        .iter()
        .filter(|m| m.support() == 1 << var)
        .map(|m| m.exponent(var))
        .min();
    if let Some(pp) = pure_power {
        e = e.min(pp - 1);
    }
    debug_assert!(e >= 1);
    let pivot = Monomial::one().with_exponent(var, e);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| m.with_exponent(var, m.exponent(var).saturating_sub(e)))
        .collect();
    numerator(nvars, minimalize(with_pivot)).add(&numerator(nvars, minimalize(colon)).shift(e as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    /// Counts standard monomials degree by degree.
    fn brute(nvars: usize, gens: &[Monomial], upto: u32) -> Vec<i64> {
        use crate::algebra::MonomialOrder;
        (0..=upto)
            .map(|d| {
                MonomialOrder::Grevlex
                    .monomials_of_degree(nvars, d)
                    .iter()
                    .filter(|x| !gens.iter().any(|g| g.divides(x)))
                    .count() as i64
            })
            .collect()
    }

    #[test]
    fn complete_intersection() {
        let n = monomial_quotient_numerator(3, &[m(&[2, 0, 0]), m(&[0, 2, 0]), m(&[0, 0, 2])]);
        assert_eq!(n, IntPoly::from_coeffs(vec![1, 0, -3, 0, 3, 0, -1]));
        assert_eq!(monomial_quotient_numerator(3, &[Monomial::one()]), IntPoly::zero());
    }

    #[test]
    fn against_brute_force() {
        let cases: Vec<Vec<Monomial>> = vec![
            vec![m(&[2, 1, 0]), m(&[1, 2, 0]), m(&[0, 1, 3]), m(&[1, 0, 1])],
            vec![m(&[3, 0, 0, 0]), m(&[1, 1, 1, 0]), m(&[0, 2, 0, 1]), m(&[0, 0, 2, 2]), m(&[1, 0, 0, 3])],
            vec![m(&[1, 1, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 1, 1])],
        ];
        for gens in cases {
            let nvars = 4;
            let n = monomial_quotient_numerator(nvars, &gens);
            assert_eq!(n.series_over_one_minus_t(nvars, 12), brute(nvars, &gens, 11));
        }
    }
}
