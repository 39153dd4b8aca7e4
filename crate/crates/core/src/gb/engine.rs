//! Buchberger's algorithm on raw term vectors, for ideals and for
//! submodules of free modules.
//!
//! Inputs must be homogeneous for the (weighted, shifted) grading. Pairs are
//! processed degree by degree, which makes degree truncation exact: a run
//! with `deg_bound = D` returns a basis that is Gröbner up to degree `D`.

use std::cmp::Ordering;

use crate::field::Field;
use crate::poly::{cmp_mono, FxHashMap, ModuleOrder, Mono, MonomialOrder};

pub type Terms<E> = Vec<(E, Mono)>;

/// Comparison context: ring order plus optional module order.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub order: MonomialOrder,
    pub nvars: usize,
    pub weights: Vec<u16>,
    pub module: Option<ModuleOrder>,
}

impl Ctx {
    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        cmp_mono(self.order, self.nvars, self.module.as_ref(), a, b)
    }

    /// Degree of a (module) monomial, including the component shift.
    #[inline]
    pub fn sdeg(&self, m: &Mono) -> u32 {
        m.deg() + self.module.as_ref().map_or(0, |mo| mo.shift(m.comp()))
    }

    pub fn is_module(&self) -> bool {
        self.module.is_some()
    }

    pub fn sort(&self, t: &mut Terms<impl Clone>) {
        t.sort_unstable_by(|a, b| self.cmp(&b.1, &a.1));
    }

    pub fn lcm(&self, a: &Mono, b: &Mono) -> Mono {
        a.lcm(b, &self.weights)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GbOptions {
    /// Stop after processing all pairs of degree ≤ this bound.
    pub deg_bound: Option<u32>,
    /// Return the reduced basis (otherwise the raw, tail-reduced basis).
    pub reduced: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            deg_bound: None,
            reduced: true,
        }
    }
}

pub(crate) struct BElem<E> {
    pub terms: Terms<E>,
    pub lm: Mono,
    pub mask: u32,
}

impl<E: Clone> BElem<E> {
    fn new(terms: Terms<E>) -> Self {
        let lm = terms[0].1;
        BElem {
            mask: lm.support_mask(),
            lm,
            terms,
        }
    }
}

/// Binary max-heap of monomials under a context order.
struct MonoHeap<'a> {
    data: Vec<Mono>,
    ctx: &'a Ctx,
}

impl<'a> MonoHeap<'a> {
    fn new(ctx: &'a Ctx, cap: usize) -> Self {
        MonoHeap {
            data: Vec::with_capacity(cap),
            ctx,
        }
    }

    fn push(&mut self, m: Mono) {
        self.data.push(m);
        let mut i = self.data.len() - 1;
        while i > 0 {
            let p = (i - 1) / 2;
            if self.ctx.cmp(&self.data[i], &self.data[p]) == Ordering::Greater {
                self.data.swap(i, p);
                i = p;
            } else {
                break;
            }
        }
    }

    fn pop(&mut self) -> Option<Mono> {
        let n = self.data.len();
        if n == 0 {
            return None;
        }
        self.data.swap(0, n - 1);
        let top = self.data.pop();
        let n = self.data.len();
        let mut i = 0;
        loop {
            let l = 2 * i + 1;
            if l >= n {
                break;
            }
            let r = l + 1;
            let c = if r < n && self.ctx.cmp(&self.data[r], &self.data[l]) == Ordering::Greater {
                r
            } else {
                l
            };
            if self.ctx.cmp(&self.data[c], &self.data[i]) == Ordering::Greater {
                self.data.swap(c, i);
                i = c;
            } else {
                break;
            }
        }
        top
    }
}

#[inline]
fn find_reducer<E>(basis: &[BElem<E>], m: &Mono, skip: Option<usize>) -> Option<usize> {
    let mask = m.support_mask();
    basis.iter().enumerate().position(|(i, b)| {
        Some(i) != skip
            && b.mask & !mask == 0
            && b.lm.comp() == m.comp()
            && b.lm.divides(m)
    })
}

/// Reduces `f` modulo a basis of monic elements. With `full == false` only
/// the lead term is reduced (the rest is left as it emerges).
pub(crate) fn reduce<F: Field>(
    field: &F,
    ctx: &Ctx,
    basis: &[BElem<F::Elem>],
    f: Terms<F::Elem>,
    full: bool,
    skip: Option<usize>,
) -> Terms<F::Elem> {
    if f.is_empty() {
        return f;
    }
    let mut acc: FxHashMap<Mono, F::Elem> = FxHashMap::default();
    acc.reserve(f.len() * 2);
    let mut heap = MonoHeap::new(ctx, f.len() * 2);
    for (c, m) in f {
        heap.push(m);
        acc.insert(m, c);
    }
    let mut out: Terms<F::Elem> = Vec::new();
    while let Some(m) = heap.pop() {
        let Some(c) = acc.remove(&m) else { continue };
        if field.is_zero(&c) {
            continue;
        }
        match find_reducer(basis, &m, skip) {
            Some(i) => {
                let g = &basis[i];
                let q = m.div(&g.lm).with_comp(0);
                for (a, t) in &g.terms[1..] {
                    let mm = t.mul(&q);
                    let prod = field.mul(&c, a);
                    match acc.get_mut(&mm) {
                        Some(x) => *x = field.sub(x, &prod),
                        None => {
                            acc.insert(mm, field.neg(&prod));
                            heap.push(mm);
                        }
                    }
                }
            }
            None => {
                out.push((c, m));
                if !full {
                    let mut rest: Terms<F::Elem> = acc
                        .into_iter()
                        .filter(|(_, c)| !field.is_zero(c))
                        .map(|(m, c)| (c, m))
                        .collect();
                    ctx.sort(&mut rest);
                    out.extend(rest);
                    return out;
                }
            }
        }
    }
    out
}

pub(crate) fn make_monic<F: Field>(field: &F, t: &mut Terms<F::Elem>) {
    if let Some((c, _)) = t.first() {
        if !field.is_one(c) {
            let inv = field.inv(c).expect("nonzero lead");
            for (x, _) in t.iter_mut() {
                *x = field.mul(x, &inv);
            }
        }
    }
}

/// `(lcm/lm_f)·f − (lcm/lm_g)·g` for monic `f`, `g`, with the leads cancelled.
pub(crate) fn spoly<F: Field>(
    field: &F,
    ctx: &Ctx,
    f: &BElem<F::Elem>,
    g: &BElem<F::Elem>,
    lcm: &Mono,
) -> Terms<F::Elem> {
    let qf = lcm.div(&f.lm).with_comp(0);
    let qg = lcm.div(&g.lm).with_comp(0);
    let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
    let (a, b) = (&f.terms[1..], &g.terms[1..]);
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ta = a.get(i).map(|t| t.1.mul(&qf));
        let tb = b.get(j).map(|t| t.1.mul(&qg));
        let ord = match (&ta, &tb) {
            (Some(x), Some(y)) => ctx.cmp(x, y),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push((a[i].0.clone(), ta.unwrap()));
                i += 1;
            }
            Ordering::Less => {
                out.push((field.neg(&b[j].0), tb.unwrap()));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.sub(&a[i].0, &b[j].0);
                if !field.is_zero(&c) {
                    out.push((c, ta.unwrap()));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    deg: u32,
}

/// Buchberger's algorithm. Inputs are term vectors sorted descending in
/// `ctx`, each homogeneous for `ctx.sdeg`. Returns monic elements sorted by
/// ascending lead monomial.
pub fn buchberger<F: Field>(
    field: &F,
    ctx: &Ctx,
    gens: Vec<Terms<F::Elem>>,
    opts: GbOptions,
) -> Vec<Terms<F::Elem>> {
    let mut pending: Vec<(u32, usize, Terms<F::Elem>)> = gens
        .into_iter()
        .enumerate()
        .filter(|(_, g)| !g.is_empty())
        .map(|(k, g)| (ctx.sdeg(&g[0].1), k, g))
        .collect();
    pending.sort_by_key(|(d, k, _)| (*d, *k));
    pending.reverse();

    let mut basis: Vec<BElem<F::Elem>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let rank_one = !ctx.is_module();

    loop {
        let pd = pairs.iter().map(|p| p.deg).min();
        let gd = pending.last().map(|g| g.0);
        let d = match (pd, gd) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        if opts.deg_bound.is_some_and(|b| d > b) {
            break;
        }
        let mut batch: Vec<Pair> = Vec::new();
        pairs.retain(|p| {
            if p.deg == d {
                batch.push(p.clone());
                false
            } else {
                true
            }
        });
        batch.sort_by(|a, b| ctx.cmp(&a.lcm, &b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))));
        let mut work: Vec<Terms<F::Elem>> = Vec::new();
        while pending.last().is_some_and(|g| g.0 == d) {
            work.push(pending.pop().unwrap().2);
        }
        // pairs first, then new generators; a pair removed by the chain
        // criterion during this degree is still valid to process
        let mut items: Vec<Terms<F::Elem>> = Vec::with_capacity(batch.len() + work.len());
        for p in &batch {
            items.push(spoly(field, ctx, &basis[p.i], &basis[p.j], &p.lcm));
        }
        items.extend(work);
        for s in items {
            let mut h = reduce(field, ctx, &basis, s, true, None);
            if h.is_empty() {
                continue;
            }
            make_monic(field, &mut h);
            let k = basis.len();
            basis.push(BElem::new(h));
            update_pairs(ctx, &basis, &mut pairs, k, rank_one);
        }
    }

    if opts.reduced {
        reduce_basis(field, ctx, basis)
    } else {
        basis.into_iter().map(|b| b.terms).collect()
    }
}

fn update_pairs<E>(ctx: &Ctx, basis: &[BElem<E>], pairs: &mut Vec<Pair>, k: usize, rank_one: bool) {
    let lk = basis[k].lm;
    // chain criterion on existing pairs
    pairs.retain(|p| {
        if p.lcm.comp() != lk.comp() || !lk.divides(&p.lcm) {
            return true;
        }
        let lik = ctx.lcm(&basis[p.i].lm, &lk);
        let ljk = ctx.lcm(&basis[p.j].lm, &lk);
        lik == p.lcm || ljk == p.lcm
    });
    // new pairs with the Gebauer–Möller filters
    let mut cand: Vec<(usize, Mono, bool)> = (0..k)
        .filter(|&i| basis[i].lm.comp() == lk.comp())
        .map(|i| {
            let l = ctx.lcm(&basis[i].lm, &lk);
            (i, l, rank_one && basis[i].lm.is_coprime(&lk))
        })
        .collect();
    let n = cand.len();
    let mut keep = vec![true; n];
    for a in 0..n {
        for b in 0..n {
            if a != b && cand[b].1 != cand[a].1 && cand[b].1.divides(&cand[a].1) {
                keep[a] = false;
                break;
            }
        }
    }
    let mut idx: Vec<usize> = (0..n).filter(|&a| keep[a]).collect();
    idx.sort_by(|&a, &b| ctx.cmp(&cand[a].1, &cand[b].1).then(cand[a].0.cmp(&cand[b].0)));
    let mut s = 0;
    while s < idx.len() {
        let mut e = s + 1;
        while e < idx.len() && cand[idx[e]].1 == cand[idx[s]].1 {
            e += 1;
        }
        let group = &idx[s..e];
        if !group.iter().any(|&a| cand[a].2) {
            let a = group[0];
            let l = cand[a].1;
            pairs.push(Pair {
                i: cand[a].0,
                j: k,
                lcm: l,
                deg: ctx.sdeg(&l),
            });
        }
        s = e;
    }
    cand.clear();
}

/// Minimalizes and tail-reduces a basis; output sorted by ascending lead.
pub(crate) fn reduce_basis<F: Field>(
    field: &F,
    ctx: &Ctx,
    basis: Vec<BElem<F::Elem>>,
) -> Vec<Terms<F::Elem>> {
    let mut elems: Vec<BElem<F::Elem>> = Vec::with_capacity(basis.len());
    for (i, b) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, c)| {
            j != i
                && c.lm.comp() == b.lm.comp()
                && c.lm.divides(&b.lm)
                && (c.lm != b.lm || j < i)
        });
        if !redundant {
            elems.push(BElem {
                terms: b.terms.clone(),
                lm: b.lm,
                mask: b.mask,
            });
        }
    }
    elems.sort_by(|a, b| ctx.cmp(&a.lm, &b.lm));
    let mut out: Vec<BElem<F::Elem>> = Vec::with_capacity(elems.len());
    for e in elems {
        let lead = e.terms[0].clone();
        let tail: Terms<F::Elem> = e.terms[1..].to_vec();
        let mut t = vec![lead];
        t.extend(reduce(field, ctx, &out, tail, true, None));
        out.push(BElem::new(t));
    }
    out.into_iter().map(|b| b.terms).collect()
}

/// Full normal form of `f` modulo monic `basis` elements.
pub fn normal_form<F: Field>(
    field: &F,
    ctx: &Ctx,
    basis: &[Terms<F::Elem>],
    f: Terms<F::Elem>,
) -> Terms<F::Elem> {
    let b: Vec<BElem<F::Elem>> = basis.iter().filter(|t| !t.is_empty()).map(|t| BElem::new(t.clone())).collect();
    reduce(field, ctx, &b, f, true, None)
}

/// Prepared reducer for repeated normal forms against one basis.
pub struct Reducer<F: Field> {
    field: F,
    ctx: Ctx,
    basis: Vec<BElem<F::Elem>>,
}

impl<F: Field> Reducer<F> {
    pub fn new(field: F, ctx: Ctx, basis: &[Terms<F::Elem>]) -> Self {
        let basis = basis.iter().filter(|t| !t.is_empty()).map(|t| BElem::new(t.clone())).collect();
        Reducer { field, ctx, basis }
    }

    pub fn reduce(&self, f: Terms<F::Elem>) -> Terms<F::Elem> {
        reduce(&self.field, &self.ctx, &self.basis, f, true, None)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Is the monomial a standard monomial (outside the lead ideal)?
    pub fn is_standard(&self, m: &Mono) -> bool {
        find_reducer(&self.basis, m, None).is_none()
    }
}

/// Checks Buchberger's criterion: every S-pair reduces to zero. Pairs that
/// the product or chain criteria discard are skipped.
pub fn satisfies_buchberger<F: Field>(field: &F, ctx: &Ctx, basis: &[Terms<F::Elem>]) -> bool {
    let b: Vec<BElem<F::Elem>> = basis.iter().filter(|t| !t.is_empty()).map(|t| BElem::new(t.clone())).collect();
    if b.iter().any(|e| !field.is_one(&e.terms[0].0)) {
        return false;
    }
    let rank_one = !ctx.is_module();
    for j in 0..b.len() {
        for i in 0..j {
            if b[i].lm.comp() != b[j].lm.comp() {
                continue;
            }
            if rank_one && b[i].lm.is_coprime(&b[j].lm) {
                continue;
            }
            let l = ctx.lcm(&b[i].lm, &b[j].lm);
            let s = spoly(field, ctx, &b[i], &b[j], &l);
            if !reduce(field, ctx, &b, s, false, None).is_empty() {
                return false;
            }
        }
    }
    true
}
