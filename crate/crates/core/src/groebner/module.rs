use std::cmp::Ordering;

use crate::algebra::monomial::{count_monomials, Monomial, MonomialOrder};
use crate::algebra::{Field, Polynomial};
use crate::error::{AlgebraError, ComputeError};

/// A monomial times a basis vector of a free module.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ModTerm {
    pub mono: Monomial,
    pub comp: u32,
}

pub(crate) type Terms<E> = Vec<(ModTerm, E)>;

/// Element of a graded free module `S(-t_0) + ... + S(-t_{r-1})`.
#[derive(Clone, PartialEq)]
pub struct ModuleElement<F: Field> {
    pub components: Vec<Polynomial<F>>,
    pub twists: Vec<u32>,
}

impl<F: Field> ModuleElement<F> {
    pub fn new(components: Vec<Polynomial<F>>, twists: Vec<u32>) -> Result<Self, ComputeError> {
        if components.len() != twists.len() || components.is_empty() {
            return Err(ComputeError::ModuleMismatch);
        }
        let nvars = components[0].nvars();
        if components.iter().any(|c| c.nvars() != nvars || c.field() != components[0].field()) {
            return Err(ComputeError::ModuleMismatch);
        }
        Ok(ModuleElement { components, twists })
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// Common value of `deg(component_i) + twist_i`, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut deg = None;
        for (c, &t) in self.components.iter().zip(&self.twists) {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree()? + t;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// `sum_i components_i * gens_i`.
    pub fn apply(&self, gens: &[Polynomial<F>]) -> Result<Polynomial<F>, AlgebraError> {
        assert_eq!(gens.len(), self.rank());
        let mut acc = Polynomial::zero(gens[0].field(), gens[0].nvars());
        for (c, g) in self.components.iter().zip(gens) {
            acc = acc.checked_add(&c.checked_mul(g)?)?;
        }
        Ok(acc)
    }

    /// `sum_i components_i * gens_i` for module-valued generators.
    pub fn apply_module(&self, gens: &[ModuleElement<F>]) -> Result<ModuleElement<F>, AlgebraError> {
        assert_eq!(gens.len(), self.rank());
        let target = &gens[0];
        let mut comps: Vec<Polynomial<F>> = target
            .components
            .iter()
            .map(|c| Polynomial::zero(c.field(), c.nvars()))
            .collect();
        for (a, g) in self.components.iter().zip(gens) {
            for (acc, gc) in comps.iter_mut().zip(&g.components) {
                *acc = acc.checked_add(&a.checked_mul(gc)?)?;
            }
        }
        Ok(ModuleElement {
            components: comps,
            twists: target.twists.clone(),
        })
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl<F: Field> std::fmt::Debug for ModuleElement<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug)]
struct Group {
    base: usize,
    stride: usize,
    mdeg: u32,
    comps: Vec<u32>,
    len: usize,
}

#[derive(Debug, Clone, Copy)]
struct Slot {
    base: usize,
    stride: usize,
    pos: usize,
}

/// Dense indexing of all module terms of one total degree, ordered from the
/// largest term (index 0) downwards.
#[derive(Debug)]
pub(crate) struct Layout {
    pub size: usize,
    groups: Vec<Group>,
    slots: Vec<Option<Slot>>,
}

/// Graded free module with its term order and cached dense layouts.
#[derive(Debug)]
pub(crate) struct FreeModule {
    pub nvars: usize,
    pub twists: Vec<u32>,
    pub order: MonomialOrder,
    layouts: Vec<Option<Layout>>,
    monos: Vec<Vec<Monomial>>,
}

impl FreeModule {
    pub fn new(nvars: usize, twists: Vec<u32>, order: MonomialOrder) -> Self {
        FreeModule {
            nvars,
            twists,
            order,
            layouts: Vec::new(),
            monos: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    #[inline]
    pub fn degree(&self, t: &ModTerm) -> u32 {
        t.mono.degree() + self.twists[t.comp as usize]
    }

    /// Term order: total degree, then the monomial order, then smaller
    /// component index first.
    pub fn cmp(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        self.degree(a)
            .cmp(&self.degree(b))
            .then_with(|| self.order.cmp(&a.mono, &b.mono))
            .then_with(|| b.comp.cmp(&a.comp))
    }

    pub fn sort_desc<E>(&self, terms: &mut [(ModTerm, E)]) {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
    }

    fn ensure_monos(&mut self, deg: u32) {
        while self.monos.len() <= deg as usize {
            let d = self.monos.len() as u32;
            self.monos.push(self.order.monomials_of_degree(self.nvars, d));
        }
    }

    /// Builds (once) the layout for total degree `deg`.
    pub fn prepare(&mut self, deg: u32) {
        if self.layouts.len() <= deg as usize {
            self.layouts.resize_with(deg as usize + 1, || None);
        }
        if self.layouts[deg as usize].is_some() {
            return;
        }
        self.ensure_monos(deg);
        let mut by_mdeg: Vec<(u32, Vec<u32>)> = Vec::new();
        for (c, &t) in self.twists.iter().enumerate() {
            if t > deg {
                continue;
            }
            let m = deg - t;
            match by_mdeg.iter_mut().find(|(d, _)| *d == m) {
                Some((_, cs)) => cs.push(c as u32),
                None => by_mdeg.push((m, vec![c as u32])),
            }
        }
        by_mdeg.sort_by(|a, b| b.0.cmp(&a.0));
        let mut slots = vec![None; self.twists.len()];
        let mut groups = Vec::new();
        let mut base = 0;
        for (mdeg, comps) in by_mdeg {
            let stride = comps.len();
            let len = count_monomials(self.nvars, mdeg as usize) * stride;
            for (pos, &c) in comps.iter().enumerate() {
                slots[c as usize] = Some(Slot { base, stride, pos });
            }
            groups.push(Group {
                base,
                stride,
                mdeg,
                comps,
                len,
            });
            base += len;
        }
        self.layouts[deg as usize] = Some(Layout {
            size: base,
            groups,
            slots,
        });
    }

    pub fn layout(&self, deg: u32) -> &Layout {
        self.layouts[deg as usize].as_ref().expect("layout prepared")
    }

    #[inline]
    pub fn index(&self, layout: &Layout, t: &ModTerm) -> usize {
        let slot = layout.slots[t.comp as usize].expect("term has this degree");
        slot.base + self.order.rank(&t.mono, self.nvars) * slot.stride + slot.pos
    }

    #[inline]
    pub fn term_at(&self, layout: &Layout, idx: usize) -> ModTerm {
        let g = layout
            .groups
            .iter()
            .find(|g| idx < g.base + g.len)
            .expect("index in range");
        let k = idx - g.base;
        ModTerm {
            mono: self.monos[g.mdeg as usize][k / g.stride],
            comp: g.comps[k % g.stride],
        }
    }

    pub fn element_to_terms<F: Field>(&self, v: &ModuleElement<F>) -> Terms<F::Elem> {
        let mut terms: Terms<F::Elem> = Vec::new();
        for (c, p) in v.components.iter().enumerate() {
            for (m, a) in p.terms() {
                terms.push((ModTerm { mono: *m, comp: c as u32 }, a.clone()));
            }
        }
        self.sort_desc(&mut terms);
        terms
    }

    pub fn terms_to_element<F: Field>(&self, field: &F, terms: &[(ModTerm, F::Elem)]) -> ModuleElement<F> {
        let mut comps: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); self.rank()];
        for (t, c) in terms {
            comps[t.comp as usize].push((t.mono, c.clone()));
        }
        ModuleElement {
            components: comps
                .into_iter()
                .map(|ts| Polynomial::from_terms(field, self.nvars, ts))
                .collect(),
            twists: self.twists.clone(),
        }
    }
}
