//! Degree-by-degree Buchberger for homogeneous submodules of graded free
//! modules.
//!
//! Every S-vector of total degree `D` is reduced inside a dense accumulator
//! that indexes all module terms of degree `D`, so a reduction step is a
//! scatter of a basis element into that array. Optionally each element
//! carries a cofactor vector ("tag") in a second free module; tags of
//! reductions to zero are syzygies of the input generators.

use std::collections::{BTreeMap, HashSet};

use crate::algebra::monomial::Monomial;
use crate::algebra::{Field, IntPoly, MonomialOrder};

use super::hilbert::monomial_quotient_numerator;
use super::module::{FreeModule, ModTerm, Terms};

const UNKNOWN: u32 = u32::MAX;
const NONE: u32 = u32::MAX - 1;

struct Elem<E> {
    terms: Terms<E>,
    deg: u32,
    sev: u64,
    tag: Terms<E>,
}

enum Task<E> {
    Gen { terms: Terms<E>, tag: Terms<E> },
    Pair(u32, u32),
    Koszul(u32, u32),
}

pub(crate) struct Engine<F: Field> {
    field: F,
    module: FreeModule,
    tag_module: Option<FreeModule>,
    basis: Vec<Elem<F::Elem>>,
    by_comp: Vec<Vec<u32>>,
    pending: BTreeMap<u32, Vec<Task<F::Elem>>>,
    treated: HashSet<(u32, u32)>,
    reducers: Vec<Vec<u32>>,
    syzygies: Vec<(u32, Terms<F::Elem>)>,
    acc: Vec<F::Elem>,
    tag_acc: Vec<F::Elem>,
    next_tag: u32,
    pairs_reduced: usize,
}

impl<F: Field> Engine<F> {
    /// Untracked engine over a free module with the given twists.
    pub fn new(field: &F, nvars: usize, twists: Vec<u32>, order: MonomialOrder) -> Self {
        let rank = twists.len();
        Engine {
            field: field.clone(),
            module: FreeModule::new(nvars, twists, order),
            tag_module: None,
            basis: Vec::new(),
            by_comp: vec![Vec::new(); rank],
            pending: BTreeMap::new(),
            treated: HashSet::new(),
            reducers: Vec::new(),
            syzygies: Vec::new(),
            acc: Vec::new(),
            tag_acc: Vec::new(),
            next_tag: 0,
            pairs_reduced: 0,
        }
    }

    /// Engine that tracks cofactors; `tag_twists[i]` is the degree of the
    /// `i`-th generator that will be added.
    pub fn with_tags(field: &F, nvars: usize, twists: Vec<u32>, tag_twists: Vec<u32>, order: MonomialOrder) -> Self {
        let mut e = Self::new(field, nvars, twists, order);
        e.tag_module = Some(FreeModule::new(nvars, tag_twists, order));
        e
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    /// Queues a homogeneous generator (terms sorted by the module order).
    /// In tracked mode its tag is the next unit vector.
    pub fn add_generator(&mut self, terms: Terms<F::Elem>) {
        if terms.is_empty() {
            if self.tag_module.is_some() {
                self.next_tag += 1;
            }
            return;
        }
        let deg = self.module.degree(&terms[0].0);
        let tag = if let Some(tm) = &self.tag_module {
            let c = self.next_tag;
            self.next_tag += 1;
            assert_eq!(tm.twists[c as usize], deg, "generator degree must match its tag twist");
            vec![(ModTerm { mono: Monomial::one(), comp: c }, self.field.one())]
        } else {
            Vec::new()
        };
        self.pending.entry(deg).or_default().push(Task::Gen { terms, tag });
    }

    pub fn next_pending_degree(&self) -> Option<u32> {
        self.pending.keys().next().copied()
    }

    pub fn process_to(&mut self, deg: u32) {
        while let Some(d) = self.next_pending_degree() {
            if d > deg {
                break;
            }
            self.process_degree(d);
        }
    }

    pub fn complete(&mut self) {
        while let Some(d) = self.next_pending_degree() {
            self.process_degree(d);
        }
    }

    /// Syzygies found so far, with their degrees, in the tag module.
    pub fn take_syzygies(&mut self) -> Vec<(u32, Terms<F::Elem>)> {
        std::mem::take(&mut self.syzygies)
    }

    fn prepare(&mut self, deg: u32) {
        self.module.prepare(deg);
        let size = self.module.layout(deg).size;
        if self.acc.len() < size {
            self.acc.resize(size, self.field.zero());
        }
        if self.reducers.len() <= deg as usize {
            self.reducers.resize_with(deg as usize + 1, Vec::new);
        }
        if self.reducers[deg as usize].len() != size {
            self.reducers[deg as usize] = vec![UNKNOWN; size];
        }
        if let Some(tm) = &mut self.tag_module {
            tm.prepare(deg);
            let tsize = tm.layout(deg).size;
            if self.tag_acc.len() < tsize {
                self.tag_acc.resize(tsize, self.field.zero());
            }
        }
    }

    fn process_degree(&mut self, deg: u32) {
        let Some(mut tasks) = self.pending.remove(&deg) else {
            return;
        };
        self.prepare(deg);
        tasks.sort_by_key(|t| match t {
            Task::Gen { .. } => (0, 0, 0),
            Task::Pair(i, j) => (1, *i, *j),
            Task::Koszul(i, j) => (2, *i, *j),
        });
        let tracked = self.tag_module.is_some();
        for task in tasks {
            match task {
                Task::Gen { terms, tag } => {
                    let minus_one = self.field.neg(&self.field.one());
                    self.scatter(deg, &terms, &Monomial::one(), &minus_one, false);
                    if tracked {
                        self.scatter_tag(deg, &tag, &Monomial::one(), &minus_one);
                    }
                }
                Task::Pair(i, j) => {
                    self.treated.insert((i, j));
                    if self.chain_criterion(i, j) {
                        continue;
                    }
                    let li = self.basis[i as usize].terms[0].0;
                    let lj = self.basis[j as usize].terms[0].0;
                    let l = li.mono.lcm(&lj.mono);
                    let ui = li.mono.quotient_of(&l).expect("lcm");
                    let uj = lj.mono.quotient_of(&l).expect("lcm");
                    let one = self.field.one();
                    let minus_one = self.field.neg(&one);
                    let ti = std::mem::take(&mut self.basis[i as usize].terms);
                    self.scatter(deg, &ti, &ui, &minus_one, false);
                    self.basis[i as usize].terms = ti;
                    let tj = std::mem::take(&mut self.basis[j as usize].terms);
                    self.scatter(deg, &tj, &uj, &one, false);
                    self.basis[j as usize].terms = tj;
                    if tracked {
                        let ti = std::mem::take(&mut self.basis[i as usize].tag);
                        self.scatter_tag(deg, &ti, &ui, &minus_one);
                        self.basis[i as usize].tag = ti;
                        let tj = std::mem::take(&mut self.basis[j as usize].tag);
                        self.scatter_tag(deg, &tj, &uj, &one);
                        self.basis[j as usize].tag = tj;
                    }
                    self.pairs_reduced += 1;
                }
                Task::Koszul(i, j) => {
                    // h_j * tag_i - h_i * tag_j
                    let hi = std::mem::take(&mut self.basis[i as usize].terms);
                    let hj = std::mem::take(&mut self.basis[j as usize].terms);
                    let ti = std::mem::take(&mut self.basis[i as usize].tag);
                    let tj = std::mem::take(&mut self.basis[j as usize].tag);
                    for (m, c) in &hj {
                        let coef = self.field.neg(c);
                        self.scatter_tag(deg, &ti, &m.mono, &coef);
                    }
                    for (m, c) in &hi {
                        self.scatter_tag(deg, &tj, &m.mono, c);
                    }
                    self.basis[i as usize].terms = hi;
                    self.basis[j as usize].terms = hj;
                    self.basis[i as usize].tag = ti;
                    self.basis[j as usize].tag = tj;
                    let syz = self.collect_tag(deg);
                    if !syz.is_empty() {
                        self.syzygies.push((deg, syz));
                    }
                    continue;
                }
            }
            let result = self.reduce(deg, false, tracked);
            let tag = if tracked { self.collect_tag(deg) } else { Vec::new() };
            if result.is_empty() {
                if tracked && !tag.is_empty() {
                    self.syzygies.push((deg, tag));
                }
            } else {
                self.insert(result, tag, deg);
            }
        }
    }

    /// Buchberger's chain criterion: some `k` whose lead divides the lcm has
    /// both pairs with `i` and `j` already treated.
    fn chain_criterion(&self, i: u32, j: u32) -> bool {
        let li = self.basis[i as usize].terms[0].0;
        let lj = self.basis[j as usize].terms[0].0;
        let l = li.mono.lcm(&lj.mono);
        let lsev = l.sev();
        self.by_comp[li.comp as usize].iter().any(|&k| {
            if k == i || k == j {
                return false;
            }
            let e = &self.basis[k as usize];
            e.sev & !lsev == 0
                && e.terms[0].0.mono.divides(&l)
                && self.treated.contains(&(i.min(k), i.max(k)))
                && self.treated.contains(&(j.min(k), j.max(k)))
        })
    }

    fn insert(&mut self, mut terms: Terms<F::Elem>, mut tag: Terms<F::Elem>, deg: u32) {
        let inv = self.field.inv(&terms[0].1).expect("nonzero lead");
        if !self.field.is_one(&inv) {
            for (_, c) in terms.iter_mut() {
                *c = self.field.mul(c, &inv);
            }
            for (_, c) in tag.iter_mut() {
                *c = self.field.mul(c, &inv);
            }
        }
        let k = self.basis.len() as u32;
        let lead = terms[0].0;
        let rank_one = self.module.rank() == 1;
        let tracked = self.tag_module.is_some();
        for &i in &self.by_comp[lead.comp as usize] {
            let li = self.basis[i as usize].terms[0].0;
            let l = li.mono.lcm(&lead.mono);
            let pdeg = l.degree() + self.module.twists[lead.comp as usize];
            if rank_one && li.mono.is_coprime(&lead.mono) {
                self.treated.insert((i, k));
                if tracked {
                    self.pending.entry(pdeg).or_default().push(Task::Koszul(i, k));
                }
            } else {
                self.pending.entry(pdeg).or_default().push(Task::Pair(i, k));
            }
        }
        self.by_comp[lead.comp as usize].push(k);
        self.module.prepare(deg);
        let li = self.module.index(self.module.layout(deg), &lead);
        if let Some(table) = self.reducers.get_mut(deg as usize) {
            if !table.is_empty() {
                table[li] = k;
            }
        }
        self.reducers.truncate(deg as usize + 1);
        self.basis.push(Elem {
            sev: lead.mono.sev(),
            terms,
            deg,
            tag,
        });
    }

    fn scatter(&mut self, deg: u32, terms: &Terms<F::Elem>, u: &Monomial, coef: &F::Elem, skip_first: bool) {
        let layout = self.module.layout(deg);
        for (t, c) in terms.iter().skip(usize::from(skip_first)) {
            let idx = self.module.index(
                layout,
                &ModTerm {
                    mono: t.mono.mul(u),
                    comp: t.comp,
                },
            );
            self.field.sub_mul_assign(&mut self.acc[idx], coef, c);
        }
    }

    fn scatter_tag(&mut self, deg: u32, terms: &Terms<F::Elem>, u: &Monomial, coef: &F::Elem) {
        let tm = self.tag_module.as_ref().expect("tracked");
        let layout = tm.layout(deg);
        for (t, c) in terms {
            let idx = tm.index(
                layout,
                &ModTerm {
                    mono: t.mono.mul(u),
                    comp: t.comp,
                },
            );
            self.field.sub_mul_assign(&mut self.tag_acc[idx], coef, c);
        }
    }

    fn collect_tag(&mut self, deg: u32) -> Terms<F::Elem> {
        let tm = self.tag_module.as_ref().expect("tracked");
        let layout = tm.layout(deg);
        let mut out = Vec::new();
        for idx in 0..layout.size {
            if !self.field.is_zero(&self.tag_acc[idx]) {
                let c = std::mem::replace(&mut self.tag_acc[idx], self.field.zero());
                out.push((tm.term_at(layout, idx), c));
            }
        }
        out
    }

    fn find_reducer(&mut self, deg: u32, idx: usize, t: &ModTerm) -> Option<u32> {
        let cached = self.reducers[deg as usize][idx];
        if cached != UNKNOWN {
            return (cached != NONE).then_some(cached);
        }
        let sev = t.mono.sev();
        let mut best: Option<u32> = None;
        for &k in &self.by_comp[t.comp as usize] {
            let e = &self.basis[k as usize];
            if e.deg > deg || e.sev & !sev != 0 || !e.terms[0].0.mono.divides(&t.mono) {
                continue;
            }
            if best.is_none_or(|b| self.basis[b as usize].terms.len() > e.terms.len()) {
                best = Some(k);
            }
        }
        self.reducers[deg as usize][idx] = best.unwrap_or(NONE);
        best
    }

    /// Fully reduces the accumulator of degree `deg` and returns the result,
    /// leaving the accumulator zeroed. With `skip_first` the leading term is
    /// kept as is.
    fn reduce(&mut self, deg: u32, skip_first: bool, with_tags: bool) -> Terms<F::Elem> {
        let size = self.module.layout(deg).size;
        let mut out = Vec::new();
        let mut first = true;
        for idx in 0..size {
            if self.field.is_zero(&self.acc[idx]) {
                continue;
            }
            let t = self.module.term_at(self.module.layout(deg), idx);
            if first && skip_first {
                first = false;
                let c = std::mem::replace(&mut self.acc[idx], self.field.zero());
                out.push((t, c));
                continue;
            }
            first = false;
            match self.find_reducer(deg, idx, &t) {
                Some(r) => {
                    let coef = std::mem::replace(&mut self.acc[idx], self.field.zero());
                    let lead = self.basis[r as usize].terms[0].0;
                    let u = lead.mono.quotient_of(&t.mono).expect("divides");
                    let terms = std::mem::take(&mut self.basis[r as usize].terms);
                    self.scatter(deg, &terms, &u, &coef, true);
                    self.basis[r as usize].terms = terms;
                    if with_tags {
                        let tag = std::mem::take(&mut self.basis[r as usize].tag);
                        self.scatter_tag(deg, &tag, &u, &coef);
                        self.basis[r as usize].tag = tag;
                    }
                }
                None => {
                    let c = std::mem::replace(&mut self.acc[idx], self.field.zero());
                    out.push((t, c));
                }
            }
        }
        out
    }

    /// Normal form of a homogeneous vector of degree `deg` against the basis
    /// computed through `deg`.
    pub fn normal_form(&mut self, terms: &Terms<F::Elem>) -> Terms<F::Elem> {
        if terms.is_empty() {
            return Vec::new();
        }
        let deg = self.module.degree(&terms[0].0);
        self.process_to(deg);
        self.prepare(deg);
        let minus_one = self.field.neg(&self.field.one());
        self.scatter(deg, terms, &Monomial::one(), &minus_one, false);
        self.reduce(deg, false, false)
    }

    /// Reduces the tails so the basis becomes the reduced Gröbner basis.
    pub fn interreduce(&mut self) {
        let mut degs: Vec<u32> = self.basis.iter().map(|e| e.deg).collect();
        degs.sort_unstable();
        degs.dedup();
        for d in degs {
            self.prepare(d);
        }
        let minus_one = self.field.neg(&self.field.one());
        for k in 0..self.basis.len() {
            let deg = self.basis[k].deg;
            let terms = std::mem::take(&mut self.basis[k].terms);
            self.scatter(deg, &terms, &Monomial::one(), &minus_one, false);
            // Keep this element from being chosen as its own reducer.
            let li = self.module.index(self.module.layout(deg), &terms[0].0);
            let reduced = self.reduce_excluding(deg, li);
            self.basis[k].terms = reduced;
        }
    }

    fn reduce_excluding(&mut self, deg: u32, lead_idx: usize) -> Terms<F::Elem> {
        let t = self.module.term_at(self.module.layout(deg), lead_idx);
        debug_assert!(!self.field.is_zero(&self.acc[lead_idx]));
        let c = std::mem::replace(&mut self.acc[lead_idx], self.field.zero());
        let mut out = vec![(t, c)];
        out.extend(self.reduce(deg, false, false));
        out
    }

    /// Basis elements as sorted term lists.
    pub fn basis_terms(&self) -> Vec<&Terms<F::Elem>> {
        self.basis.iter().map(|e| &e.terms).collect()
    }

    /// Numerator of the Hilbert series of `F / M`, valid once complete.
    pub fn quotient_numerator(&self) -> IntPoly {
        let mut by_comp: Vec<Vec<Monomial>> = vec![Vec::new(); self.module.rank()];
        for e in &self.basis {
            let t = e.terms[0].0;
            by_comp[t.comp as usize].push(t.mono);
        }
        let mut acc = IntPoly::zero();
        for (c, gens) in by_comp.iter().enumerate() {
            let n = monomial_quotient_numerator(self.module.nvars, gens);
            acc = acc.add(&n.shift(self.module.twists[c] as usize));
        }
        acc
    }

    /// Numerator of the Hilbert series of the submodule `M`.
    pub fn submodule_numerator(&self) -> IntPoly {
        let free = self
            .module
            .twists
            .iter()
            .fold(IntPoly::zero(), |acc, &t| acc.add(&IntPoly::monomial(1, t as usize)));
        free.sub(&self.quotient_numerator())
    }
}
