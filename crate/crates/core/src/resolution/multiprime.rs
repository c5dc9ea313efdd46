//! Running a computation over several prime fields and voting on the result.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    domain_sqrt, is_prime, primes_with_sqrt, ExactField, Field, IntPoly, MonomialOrder, Polynomial, PrimeField,
    DEFAULT_PRIME,
};
use crate::error::{AlgebraError, ComputeError};

use super::{jacobian_numerator, minimal_resolution_d0, BettiData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Policy {
    /// Two primes; a third one breaks a disagreement.
    #[default]
    TwoPrime,
    /// Three primes with a majority vote.
    Certify,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vote<T> {
    pub value: T,
    pub agreeing: Vec<u64>,
    pub dissenting: Vec<u64>,
}

/// Large primes below `2^31`, all containing a square root of `radicand`
/// when one is given.
pub fn default_primes(radicand: Option<i64>, count: usize) -> Vec<u64> {
    match radicand {
        Some(m) => primes_with_sqrt(m, DEFAULT_PRIME, count),
        None => {
            let mut out = Vec::with_capacity(count);
            let mut p = DEFAULT_PRIME;
            while out.len() < count {
                if is_prime(p) {
                    out.push(p);
                }
                p -= 2;
            }
            out
        }
    }
}

/// Image of `f` in `GF(p)[x]`.
pub fn reduce_mod_p<F: ExactField>(f: &Polynomial<F>, fp: &PrimeField) -> Result<Polynomial<PrimeField>, AlgebraError> {
    f.map_coefficients(fp, |c| f.field().to_prime_field(c, fp))
}

/// Primes from `primes` usable for `field`: the required square root exists
/// and the coefficients of every polynomial have an image.
pub fn admissible_primes<F: ExactField>(polys: &[&Polynomial<F>], primes: &[u64]) -> Vec<u64> {
    primes
        .iter()
        .copied()
        .filter(|&p| {
            let Ok(fp) = PrimeField::new(p) else { return false };
            if let Some(m) = polys.first().and_then(|f| f.field().required_radicand()) {
                if domain_sqrt(p, m).is_none() {
                    return false;
                }
            }
            polys.iter().all(|f| reduce_mod_p(f, &fp).is_ok())
        })
        .collect()
}

/// Runs `compute` over the given primes and returns the majority answer.
///
/// Under [`Policy::TwoPrime`] the first two primes run in parallel; if they
/// disagree a third prime decides. Under [`Policy::Certify`] three primes run
/// and at least two must agree.
pub fn vote<T, C>(primes: &[u64], policy: Policy, compute: C) -> Result<Vote<T>, ComputeError>
where
    T: PartialEq + Clone + Send + std::fmt::Debug,
    C: Fn(&PrimeField) -> Result<T, ComputeError> + Sync,
{
    let run = |ps: &[u64]| -> Result<Vec<(u64, T)>, ComputeError> {
        ps.par_iter()
            .map(|&p| {
                let fp = PrimeField::new(p)?;
                compute(&fp).map(|v| (p, v))
            })
            .collect()
    };
    let first = match policy {
        Policy::TwoPrime => 2,
        Policy::Certify => 3,
    };
    if primes.len() < first {
        return Err(ComputeError::PrimeDisagreement(format!(
            "need at least {first} primes, got {}",
            primes.len()
        )));
    }
    let mut results = run(&primes[..first])?;
    if policy == Policy::TwoPrime && results[0].1 != results[1].1 {
        let Some(&third) = primes.get(2) else {
            return Err(ComputeError::PrimeDisagreement(format!(
                "{} and {} disagree and no third prime is available",
                results[0].0, results[1].0
            )));
        };
        results.extend(run(&[third])?);
    }
    for (_, candidate) in &results {
        let agreeing: Vec<u64> = results.iter().filter(|(_, v)| v == candidate).map(|(p, _)| *p).collect();
        if 2 * agreeing.len() > results.len() {
            let dissenting = results.iter().filter(|(_, v)| v != candidate).map(|(p, _)| *p).collect();
            return Ok(Vote {
                value: candidate.clone(),
                agreeing,
                dissenting,
            });
        }
    }
    Err(ComputeError::PrimeDisagreement(format!("{results:?}")))
}

/// Where a computation runs: over the input field itself, or over prime
/// fields with a vote.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Backend {
    Exact,
    /// An empty prime list selects large default primes suited to the input.
    Modular { primes: Vec<u64>, policy: Policy },
}

impl Default for Backend {
    fn default() -> Self {
        Backend::Modular {
            primes: Vec::new(),
            policy: Policy::TwoPrime,
        }
    }
}

/// A value together with the primes that produced it (empty when exact).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Computed<T> {
    pub value: T,
    pub primes: Vec<u64>,
    pub dissenting: Vec<u64>,
}

/// A computation that can run over any coefficient field.
pub trait FieldTask: Sync {
    type Output: PartialEq + Clone + Send + std::fmt::Debug;
    fn run<K: Field>(&self, polys: &[Polynomial<K>]) -> Result<Self::Output, ComputeError>;
}

/// Runs `task` on `polys` according to `backend`.
pub fn run_task<F: ExactField, T: FieldTask>(
    polys: &[Polynomial<F>],
    backend: &Backend,
    task: &T,
) -> Result<Computed<T::Output>, ComputeError> {
    match backend {
        Backend::Exact => Ok(Computed {
            value: task.run(polys)?,
            primes: Vec::new(),
            dissenting: Vec::new(),
        }),
        Backend::Modular { primes, policy } => {
            let radicand = polys.first().and_then(|p| p.field().required_radicand());
            let candidates = if primes.is_empty() {
                default_primes(radicand, 6)
            } else {
                primes.clone()
            };
            let refs: Vec<&Polynomial<F>> = polys.iter().collect();
            let usable = admissible_primes(&refs, &candidates);
            let v = vote(&usable, *policy, |fp| {
                let reduced = polys
                    .iter()
                    .map(|p| reduce_mod_p(p, fp))
                    .collect::<Result<Vec<_>, _>>()?;
                task.run(&reduced)
            })?;
            Ok(Computed {
                value: v.value,
                primes: v.agreeing,
                dissenting: v.dissenting,
            })
        }
    }
}

/// Resolution and Jacobian Hilbert data of a single polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub betti: BettiData,
    pub jacobian_numerator: IntPoly,
    pub smooth: bool,
}

impl Invariants {
    pub fn mdr(&self) -> Option<u32> {
        self.betti.mdr()
    }

    pub fn hilbert(&self) -> Result<super::HilbertData, ComputeError> {
        super::hilbert::hilbert_data_from_numerator(&self.jacobian_numerator, self.betti.num_vars)
    }
}

pub struct ResolveTask(pub MonomialOrder);

impl FieldTask for ResolveTask {
    type Output = Invariants;
    fn run<K: Field>(&self, polys: &[Polynomial<K>]) -> Result<Invariants, ComputeError> {
        let r = minimal_resolution_d0(&polys[0], self.0)?;
        Ok(Invariants {
            betti: r.betti,
            jacobian_numerator: r.jacobian_numerator,
            smooth: r.smooth,
        })
    }
}

pub struct NumeratorTask(pub MonomialOrder);

impl FieldTask for NumeratorTask {
    type Output = IntPoly;
    fn run<K: Field>(&self, polys: &[Polynomial<K>]) -> Result<IntPoly, ComputeError> {
        jacobian_numerator(&polys[0], self.0)
    }
}

/// Betti and Hilbert data of `f` under the chosen backend.
pub fn invariants<F: ExactField>(f: &Polynomial<F>, backend: &Backend) -> Result<Computed<Invariants>, ComputeError> {
    run_task(std::slice::from_ref(f), backend, &ResolveTask(MonomialOrder::Grevlex))
}

/// Numerator of the Hilbert series of `M(f)` under the chosen backend.
pub fn numerator<F: ExactField>(f: &Polynomial<F>, backend: &Backend) -> Result<Computed<IntPoly>, ComputeError> {
    run_task(std::slice::from_ref(f), backend, &NumeratorTask(MonomialOrder::Grevlex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, QuadraticField, Rationals};

    #[test]
    fn default_primes_are_distinct_primes() {
        let ps = default_primes(None, 4);
        assert_eq!(ps[0], DEFAULT_PRIME);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|&p| is_prime(p)));
        for p in default_primes(Some(5), 3) {
            assert!(p % 5 == 1 || p % 5 == 4);
        }
    }

    #[test]
    fn majority_overrides_a_bad_prime() {
        let v = vote(&[11, 13, 17], Policy::TwoPrime, |fp| Ok(if fp.modulus() == 13 { 1 } else { 0 })).unwrap();
        assert_eq!(v.value, 0);
        assert_eq!(v.agreeing, vec![11, 17]);
        assert_eq!(v.dissenting, vec![13]);
        let v = vote(&[11, 13, 17], Policy::TwoPrime, |_| Ok(5)).unwrap();
        assert_eq!(v.agreeing, vec![11, 13]);
        let v = vote(&[11, 13, 17], Policy::Certify, |_| Ok(5)).unwrap();
        assert_eq!(v.agreeing.len(), 3);
        assert!(vote(&[11, 13, 17], Policy::Certify, |fp| Ok(fp.modulus())).is_err());
    }

    #[test]
    fn admissibility_checks_denominators_and_roots() {
        let names = ["x".to_string(), "y".to_string()];
        let f = parse_polynomial(&Rationals, &names, "1/7*x + y").unwrap();
        assert_eq!(admissible_primes(&[&f], &[7, 11]), vec![11]);
        let k = QuadraticField::new(5).unwrap();
        let g = parse_polynomial(&k, &names, "sqrt(5)*x + y").unwrap();
        assert_eq!(admissible_primes(&[&g], &[7, 11, 13, 19]), vec![11, 19]);
    }
}
