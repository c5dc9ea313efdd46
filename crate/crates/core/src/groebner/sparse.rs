//! Term-list arithmetic for the inhomogeneous path and for checking bases.

use std::cmp::Ordering;

use crate::algebra::monomial::Monomial;
use crate::algebra::Field;

use super::module::{FreeModule, ModTerm, Terms};

/// `p - c * u * g` for term lists sorted by the module order.
pub(crate) fn sub_scaled<F: Field>(
    field: &F,
    module: &FreeModule,
    p: &Terms<F::Elem>,
    c: &F::Elem,
    u: &Monomial,
    g: &Terms<F::Elem>,
) -> Terms<F::Elem> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < p.len() || j < g.len() {
        let gt = g.get(j).map(|(t, _)| ModTerm {
            mono: t.mono.mul(u),
            comp: t.comp,
        });
        let ord = match (p.get(i), gt) {
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
            (Some((a, _)), Some(b)) => module.cmp(a, &b),
        };
        match ord {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let v = field.neg(&field.mul(c, &g[j].1));
                out.push((gt.expect("present"), v));
                j += 1;
            }
            Ordering::Equal => {
                let mut v = p[i].1.clone();
                field.sub_mul_assign(&mut v, c, &g[j].1);
                if !field.is_zero(&v) {
                    out.push((p[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full normal form by the division algorithm against monic `basis`.
pub(crate) fn normal_form<F: Field>(
    field: &F,
    module: &FreeModule,
    v: &Terms<F::Elem>,
    basis: &[Terms<F::Elem>],
) -> Terms<F::Elem> {
    let mut p = v.clone();
    let mut rest: Terms<F::Elem> = Vec::new();
    while !p.is_empty() {
        let (t, c) = p[0].clone();
        let reducer = basis
            .iter()
            .filter(|g| !g.is_empty() && g[0].0.comp == t.comp && g[0].0.mono.divides(&t.mono))
            .min_by_key(|g| g.len());
        match reducer {
            Some(g) => {
                let inv = field.inv(&g[0].1).expect("nonzero lead");
                let coef = field.mul(&c, &inv);
                let u = g[0].0.mono.quotient_of(&t.mono).expect("divides");
                p = sub_scaled(field, module, &p, &coef, &u, g);
            }
            None => {
                rest.push(p.remove(0));
            }
        }
    }
    rest
}

/// S-vector of two monic elements whose leads share a component.
pub(crate) fn s_vector<F: Field>(
    field: &F,
    module: &FreeModule,
    a: &Terms<F::Elem>,
    b: &Terms<F::Elem>,
) -> Option<Terms<F::Elem>> {
    let (la, lb) = (a[0].0, b[0].0);
    if la.comp != lb.comp {
        return None;
    }
    let l = la.mono.lcm(&lb.mono);
    let ua = la.mono.quotient_of(&l).expect("lcm");
    let ub = lb.mono.quotient_of(&l).expect("lcm");
    let ca = field.inv(&a[0].1).expect("nonzero");
    let cb = field.inv(&b[0].1).expect("nonzero");
    let zero: Terms<F::Elem> = Vec::new();
    let first = sub_scaled(field, module, &zero, &field.neg(&ca), &ua, a);
    Some(sub_scaled(field, module, &first, &cb, &ub, b))
}

fn monic<F: Field>(field: &F, mut v: Terms<F::Elem>) -> Terms<F::Elem> {
    if let Some((_, c)) = v.first() {
        let inv = field.inv(c).expect("nonzero");
        for (_, x) in v.iter_mut() {
            *x = field.mul(x, &inv);
        }
    }
    v
}

/// Plain Buchberger with the product and chain criteria, for inputs that are
/// not homogeneous. Returns the reduced basis.
pub(crate) fn buchberger<F: Field>(field: &F, module: &FreeModule, gens: &[Terms<F::Elem>]) -> Vec<Terms<F::Elem>> {
    let mut basis: Vec<Terms<F::Elem>> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut treated = std::collections::HashSet::new();
    let add = |v: Terms<F::Elem>, basis: &mut Vec<Terms<F::Elem>>, pairs: &mut Vec<(usize, usize)>| {
        let k = basis.len();
        for i in 0..k {
            if basis[i][0].0.comp == v[0].0.comp {
                pairs.push((i, k));
            }
        }
        basis.push(v);
    };
    for g in gens {
        let r = normal_form(field, module, g, &basis);
        if !r.is_empty() {
            add(monic(field, r), &mut basis, &mut pairs);
        }
    }
    let lcm_of = |basis: &Vec<Terms<F::Elem>>, (i, j): (usize, usize)| basis[i][0].0.mono.lcm(&basis[j][0].0.mono);
    while !pairs.is_empty() {
        // Normal selection strategy: smallest lcm first.
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| module.order.cmp(&lcm_of(&basis, *a.1), &lcm_of(&basis, *b.1)))
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pos);
        treated.insert((i, j));
        let (li, lj) = (basis[i][0].0.mono, basis[j][0].0.mono);
        if module.rank() == 1 && li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.comp == basis[i][0].0.comp
                && basis[k][0].0.mono.divides(&l)
                && treated.contains(&(i.min(k), i.max(k)))
                && treated.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_vector(field, module, &basis[i], &basis[j]).expect("same component");
        let r = normal_form(field, module, &s, &basis);
        if !r.is_empty() {
            add(monic(field, r), &mut basis, &mut pairs);
        }
    }
    reduce_basis(field, module, basis)
}

/// Drops elements with redundant leads and reduces tails.
pub(crate) fn reduce_basis<F: Field>(field: &F, module: &FreeModule, basis: Vec<Terms<F::Elem>>) -> Vec<Terms<F::Elem>> {
    let mut kept: Vec<Terms<F::Elem>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lead = g[0].0;
        let redundant = basis.iter().enumerate().any(|(i, h)| {
            let lh = h[0].0;
            i != k
                && lh.comp == lead.comp
                && lh.mono.divides(&lead.mono)
                && (lh.mono != lead.mono || i < k)
        });
        if !redundant {
            kept.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for k in 0..kept.len() {
        let others: Vec<Terms<F::Elem>> = kept
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, g)| g.clone())
            .collect();
        let head = kept[k][0].clone();
        let tail: Terms<F::Elem> = kept[k][1..].to_vec();
        let mut v = vec![head];
        v.extend(normal_form(field, module, &tail, &others));
        out.push(monic(field, v));
    }
    out.sort_by(|a, b| module.cmp(&a[0].0, &b[0].0));
    out
}
