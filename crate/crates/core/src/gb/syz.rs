//! Syzygies through a module Gröbner basis of the columns `(f_i, e_i)`.

use std::sync::Arc;

use super::engine::{self, Ctx, GbOptions, Terms};
use super::ring_ctx;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{ModuleOrder, ModuleOrderKind, Mono, Poly, Ring};

/// An element of a free module `R^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElem<F: Field> {
    pub comps: Vec<Poly<F>>,
}

impl<F: Field> std::fmt::Debug for ModuleElem<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.comps).finish()
    }
}

impl<F: Field> ModuleElem<F> {
    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Degree in the free module whose basis vectors have degrees `shifts`.
    pub fn degree(&self, shifts: &[u32]) -> Option<u32> {
        self.comps
            .iter()
            .zip(shifts)
            .find(|(c, _)| !c.is_zero())
            .map(|(c, s)| c.weighted_degree() as u32 + s)
    }

    /// `Σ comps_i · gens_i`.
    pub fn apply(&self, gens: &[Poly<F>]) -> Poly<F> {
        assert_eq!(gens.len(), self.comps.len());
        let ring = gens[0].ring().clone();
        self.comps
            .iter()
            .zip(gens)
            .fold(ring.zero(), |acc, (s, g)| acc.add(&s.mul(g)))
    }

    pub(crate) fn to_terms(&self) -> Terms<F::Elem> {
        let mut out = Vec::new();
        for (i, c) in self.comps.iter().enumerate() {
            for (a, m) in c.terms() {
                out.push((a.clone(), m.with_comp(i)));
            }
        }
        out
    }

    pub(crate) fn from_terms(ring: &Arc<Ring<F>>, rank: usize, t: &Terms<F::Elem>, offset: usize) -> Self {
        let mut parts: Vec<Vec<(F::Elem, Mono)>> = vec![Vec::new(); rank];
        for (a, m) in t {
            parts[m.comp() - offset].push((a.clone(), m.with_comp(0)));
        }
        ModuleElem {
            comps: parts.into_iter().map(|p| Poly::from_terms(ring, p)).collect(),
        }
    }
}

/// Generators of the first syzygy module of `gens` (a reduced module
/// Gröbner basis of it, under a term-over-position order shifted by the
/// generator degrees).
pub fn syzygies<F: Field>(gens: &[Poly<F>]) -> Result<Vec<ModuleElem<F>>> {
    syzygies_with(gens, None)
}

/// As [`syzygies`], keeping only what a computation truncated at module
/// degree `deg_bound` produces.
pub fn syzygies_with<F: Field>(gens: &[Poly<F>], deg_bound: Option<u32>) -> Result<Vec<ModuleElem<F>>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    for g in gens {
        if !g.ring().same_as(&ring) {
            return Err(Error::RingMismatch("syzygies across rings".into()));
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous("syzygy generator".into()));
        }
    }
    let k = gens.len();
    let degs: Vec<u32> = gens.iter().map(|g| g.weighted_degree().max(0) as u32).collect();
    let mut shifts = vec![0u32];
    shifts.extend(&degs);
    let ctx = Ctx {
        module: Some(ModuleOrder {
            kind: ModuleOrderKind::ZeroThenTerm,
            shifts,
        }),
        ..ring_ctx(&ring)
    };
    let field = ring.field();
    let mut cols = Vec::with_capacity(k);
    for (i, g) in gens.iter().enumerate() {
        let mut t: Terms<F::Elem> = g.terms().to_vec();
        t.push((field.one(), Mono::ONE.with_comp(i + 1)));
        ctx.sort(&mut t);
        cols.push(t);
    }
    let opts = GbOptions {
        deg_bound,
        reduced: true,
    };
    let basis = engine::buchberger(field, &ctx, cols, opts);
    Ok(basis
        .iter()
        .filter(|t| t[0].1.comp() != 0)
        .map(|t| ModuleElem::from_terms(&ring, k, t, 1))
        .collect())
}

/// A submodule of `R^k` with its Gröbner basis, for membership tests.
pub struct Submodule<F: Field> {
    ring: Arc<Ring<F>>,
    rank: usize,
    ctx: Ctx,
    basis: Vec<Terms<F::Elem>>,
}

impl<F: Field> Submodule<F> {
    /// `shifts[i]` is the degree of the i-th basis vector.
    pub fn new(ring: &Arc<Ring<F>>, shifts: &[u32], elems: &[ModuleElem<F>]) -> Self {
        let ctx = Ctx {
            module: Some(ModuleOrder {
                kind: ModuleOrderKind::TermOverPosition,
                shifts: shifts.to_vec(),
            }),
            ..ring_ctx(ring)
        };
        let gens: Vec<Terms<F::Elem>> = elems
            .iter()
            .map(|e| {
                let mut t = e.to_terms();
                ctx.sort(&mut t);
                t
            })
            .collect();
        let basis = engine::buchberger(ring.field(), &ctx, gens, GbOptions::default());
        Submodule {
            ring: ring.clone(),
            rank: shifts.len(),
            ctx,
            basis,
        }
    }

    pub fn contains(&self, e: &ModuleElem<F>) -> bool {
        let mut t = e.to_terms();
        self.ctx.sort(&mut t);
        engine::normal_form(self.ring.field(), &self.ctx, &self.basis, t).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }
}

/// Whether the syzygies of `gens` of degree ≤ `d` generate all of them.
pub fn syzygies_generated_in_degree<F: Field>(gens: &[Poly<F>], d: u32) -> Result<bool> {
    let syz = syzygies(gens)?;
    let shifts: Vec<u32> = gens.iter().map(|g| g.weighted_degree().max(0) as u32).collect();
    let low: Vec<ModuleElem<F>> = syz
        .iter()
        .filter(|s| s.degree(&shifts).is_some_and(|x| x <= d))
        .cloned()
        .collect();
    let ring = gens[0].ring();
    let sub = Submodule::new(ring, &shifts, &low);
    Ok(syz.iter().all(|s| sub.contains(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::minors;

    #[test]
    fn koszul_syzygy_of_regular_sequence() {
        let r = Ring::indexed(Rationals, "x", 3);
        let (f, g) = (r.var(0).pow(2), r.var(1).pow(3));
        let syz = syzygies(&[f.clone(), g.clone()]).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        let koszul = [g.clone(), f.neg()];
        let c = s.comps[0].lead_coeff().unwrap().clone();
        let inv = Rationals.inv(&c).unwrap();
        assert_eq!(s.comps[0].scale(&inv), koszul[0]);
        assert_eq!(s.comps[1].scale(&inv), koszul[1]);
    }

    #[test]
    fn twisted_cubic_has_two_linear_syzygies() {
        let r = Ring::indexed(PrimeField::new(32003).unwrap(), "x", 4);
        let x = r.vars();
        let m = vec![
            vec![x[0].clone(), x[1].clone(), x[2].clone()],
            vec![x[1].clone(), x[2].clone(), x[3].clone()],
        ];
        let gens = minors(&m, 2);
        let syz = syzygies(&gens).unwrap();
        for s in &syz {
            assert!(s.apply(&gens).is_zero());
        }
        let shifts = vec![2; 3];
        let linear = syz.iter().filter(|s| s.degree(&shifts) == Some(3)).count();
        assert_eq!(linear, 2);
        assert!(syzygies_generated_in_degree(&gens, 3).unwrap());
    }

    #[test]
    fn koszul_generators_are_not_linear() {
        let r = Ring::indexed(Rationals, "x", 3);
        let gens = vec![r.var(0).pow(2), r.var(1).pow(2), r.var(2).pow(2)];
        assert!(!syzygies_generated_in_degree(&gens, 3).unwrap());
        assert!(syzygies_generated_in_degree(&gens, 4).unwrap());
    }
}
