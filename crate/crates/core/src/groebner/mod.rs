//! Gröbner bases of ideals and of submodules of graded free modules, normal
//! forms, minimal syzygies and Krull dimension.

pub(crate) mod engine;
pub mod hilbert;
pub mod module;
pub(crate) mod sparse;
pub(crate) mod syzygy;

use crate::algebra::{Field, IntPoly, MonomialOrder, Polynomial};
use crate::error::{AlgebraError, ComputeError};

use engine::Engine;
pub use hilbert::monomial_quotient_numerator;
use module::FreeModule;
pub use module::{ModTerm, ModuleElement};

/// A reduced Gröbner basis of an ideal (rank one, twist zero) or of a
/// submodule of a graded free module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    pub generators: Vec<ModuleElement<F>>,
    pub order: MonomialOrder,
    pub reduced: bool,
    nvars: usize,
    twists: Vec<u32>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn twists(&self) -> &[u32] {
        &self.twists
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The basis of an ideal as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial<F>> {
        self.generators.iter().map(|g| g.components[0].clone()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.twists.len() == 1
            && self
                .generators
                .iter()
                .any(|g| g.components[0].degree() == Some(0))
    }

    fn free_module(&self) -> FreeModule {
        FreeModule::new(self.nvars, self.twists.clone(), self.order)
    }

    fn term_lists(&self, fm: &FreeModule) -> Vec<module::Terms<F::Elem>> {
        self.generators.iter().map(|g| fm.element_to_terms(g)).collect()
    }

    /// Leading terms of the basis elements.
    pub fn leading_terms(&self) -> Vec<ModTerm> {
        let fm = self.free_module();
        self.term_lists(&fm).iter().map(|t| t[0].0).collect()
    }

    /// Hilbert series numerator of the quotient `F / M`.
    pub fn quotient_numerator(&self) -> IntPoly {
        let mut by_comp = vec![Vec::new(); self.twists.len()];
        for t in self.leading_terms() {
            by_comp[t.comp as usize].push(t.mono);
        }
        by_comp.iter().enumerate().fold(IntPoly::zero(), |acc, (c, gens)| {
            acc.add(&monomial_quotient_numerator(self.nvars, gens).shift(self.twists[c] as usize))
        })
    }

    /// Checks that every S-vector reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let fm = self.free_module();
        let f = match self.generators.first() {
            Some(g) => g.components[0].field().clone(),
            None => return true,
        };
        let lists = self.term_lists(&fm);
        for i in 0..lists.len() {
            for j in i + 1..lists.len() {
                if let Some(s) = sparse::s_vector(&f, &fm, &lists[i], &lists[j]) {
                    if !sparse::normal_form(&f, &fm, &s, &lists).is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn check_ring<F: Field>(polys: &[Polynomial<F>]) -> Result<(), ComputeError> {
    if let Some(first) = polys.first() {
        for p in polys {
            if p.field() != first.field() {
                return Err(AlgebraError::DomainMismatch(
                    first.field().descriptor().to_string(),
                    p.field().descriptor().to_string(),
                )
                .into());
            }
            if p.nvars() != first.nvars() {
                return Err(AlgebraError::ArityMismatch(first.nvars(), p.nvars()).into());
            }
        }
    }
    Ok(())
}

fn as_rank_one<F: Field>(p: &Polynomial<F>) -> ModuleElement<F> {
    ModuleElement {
        components: vec![p.clone()],
        twists: vec![0],
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis<F: Field>(gens: &[Polynomial<F>], order: MonomialOrder) -> Result<GroebnerBasis<F>, ComputeError> {
    check_ring(gens)?;
    let Some(first) = gens.first() else {
        return Err(ComputeError::Internal("empty generator list".into()));
    };
    let elems: Vec<ModuleElement<F>> = gens.iter().map(as_rank_one).collect();
    if gens.iter().all(|g| g.is_homogeneous()) {
        module_groebner_basis(&elems, order)
    } else {
        let field = first.field();
        let fm = FreeModule::new(first.nvars(), vec![0], order);
        let lists: Vec<_> = elems.iter().map(|e| fm.element_to_terms(e)).filter(|t| !t.is_empty()).collect();
        let basis = sparse::buchberger(field, &fm, &lists);
        Ok(GroebnerBasis {
            generators: basis.iter().map(|t| fm.terms_to_element(field, t)).collect(),
            order,
            reduced: true,
            nvars: first.nvars(),
            twists: vec![0],
        })
    }
}

/// Reduced Gröbner basis of the submodule generated by homogeneous `gens`.
pub fn module_groebner_basis<F: Field>(
    gens: &[ModuleElement<F>],
    order: MonomialOrder,
) -> Result<GroebnerBasis<F>, ComputeError> {
    let Some(first) = gens.first() else {
        return Err(ComputeError::Internal("empty generator list".into()));
    };
    let twists = first.twists.clone();
    let field = first.components[0].field().clone();
    let nvars = first.components[0].nvars();
    for g in gens {
        if g.twists != twists {
            return Err(ComputeError::ModuleMismatch);
        }
        check_ring(&g.components)?;
        check_ring(&[first.components[0].clone(), g.components[0].clone()])?;
        if !g.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous.into());
        }
    }
    let mut engine = Engine::new(&field, nvars, twists.clone(), order);
    for g in gens {
        let terms = engine.module().element_to_terms(g);
        engine.add_generator(terms);
    }
    engine.complete();
    engine.interreduce();
    let fm = FreeModule::new(nvars, twists.clone(), order);
    let mut generators: Vec<ModuleElement<F>> = engine
        .basis_terms()
        .into_iter()
        .map(|t| fm.terms_to_element(&field, t))
        .collect();
    let mut keyed: Vec<(ModTerm, ModuleElement<F>)> = generators
        .drain(..)
        .map(|g| (fm.element_to_terms(&g)[0].0, g))
        .collect();
    keyed.sort_by(|a, b| fm.cmp(&a.0, &b.0));
    Ok(GroebnerBasis {
        generators: keyed.into_iter().map(|(_, g)| g).collect(),
        order,
        reduced: true,
        nvars,
        twists,
    })
}

/// Remainder of `v` modulo the ideal basis `gb`.
pub fn normal_form<F: Field>(v: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Result<Polynomial<F>, ComputeError> {
    if gb.twists.len() != 1 {
        return Err(ComputeError::ModuleMismatch);
    }
    let r = module_normal_form(&ModuleElement { components: vec![v.clone()], twists: gb.twists.clone() }, gb)?;
    Ok(r.components.into_iter().next().expect("rank one"))
}

/// Remainder of `v` modulo the submodule basis `gb`.
pub fn module_normal_form<F: Field>(v: &ModuleElement<F>, gb: &GroebnerBasis<F>) -> Result<ModuleElement<F>, ComputeError> {
    if v.twists != gb.twists {
        return Err(ComputeError::ModuleMismatch);
    }
    let fm = gb.free_module();
    if let Some(g) = gb.generators.first() {
        check_ring(&[g.components[0].clone(), v.components[0].clone()])?;
    }
    let field = v.components[0].field().clone();
    let lists = gb.term_lists(&fm);
    let r = sparse::normal_form(&field, &fm, &fm.element_to_terms(v), &lists);
    Ok(fm.terms_to_element(&field, &r))
}

/// Minimal homogeneous generators of the syzygies `(a_1, .., a_k)` with
/// `sum a_i gens_i = 0`, sorted by degree. The `i`-th component carries the
/// twist `deg gens_i`.
pub fn syzygy_generators<F: Field>(gens: &[Polynomial<F>], order: MonomialOrder) -> Result<Vec<ModuleElement<F>>, ComputeError> {
    check_ring(gens)?;
    if gens.iter().any(|g| g.is_zero() || !g.is_homogeneous()) {
        return Err(AlgebraError::NotHomogeneous.into());
    }
    let elems: Vec<ModuleElement<F>> = gens.iter().map(as_rank_one).collect();
    module_syzygy_generators(&elems, order)
}

/// Minimal generators of the syzygies among homogeneous module elements.
pub fn module_syzygy_generators<F: Field>(
    gens: &[ModuleElement<F>],
    order: MonomialOrder,
) -> Result<Vec<ModuleElement<F>>, ComputeError> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let field = first.components[0].field().clone();
    let nvars = first.components[0].nvars();
    let fm = FreeModule::new(nvars, first.twists.clone(), order);
    let lists: Vec<_> = gens
        .iter()
        .map(|g| {
            if g.twists != first.twists {
                Err(ComputeError::ModuleMismatch)
            } else if g.is_zero() || !g.is_homogeneous() {
                Err(ComputeError::Algebra(AlgebraError::NotHomogeneous))
            } else {
                Ok(fm.element_to_terms(g))
            }
        })
        .collect::<Result<_, _>>()?;
    let step = syzygy::minimal_syzygies(&field, nvars, &first.twists, &lists, None, order)?;
    let target = FreeModule::new(nvars, step.twists.clone(), order);
    Ok(step
        .generators
        .iter()
        .map(|(_, t)| target.terms_to_element(&field, t))
        .collect())
}

/// Dimension of the affine zero set of the ideal, from the leading-term
/// staircase of a Gröbner basis; `-1` for the unit ideal.
pub fn krull_dimension<F: Field>(gens: &[Polynomial<F>]) -> Result<i64, ComputeError> {
    let nonzero: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let Some(first) = nonzero.first() else {
        return Ok(gens.first().map_or(0, |g| g.nvars() as i64));
    };
    let nvars = first.nvars();
    let gb = groebner_basis(&nonzero, MonomialOrder::Grevlex)?;
    if gb.is_unit_ideal() {
        return Ok(-1);
    }
    let supports: Vec<u32> = gb.leading_terms().iter().map(|t| t.mono.support()).collect();
    Ok(max_independent_set(nvars, &supports) as i64)
}

/// Largest set of variables containing no leading-monomial support.
pub(crate) fn max_independent_set(nvars: usize, supports: &[u32]) -> usize {
    (0u32..1 << nvars)
        .filter(|&s| supports.iter().all(|&m| m & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests;
