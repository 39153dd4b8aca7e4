//! Gröbner bases of homogeneous ideals, normal forms and syzygies.

pub mod engine;
mod syz;

use std::sync::Arc;

pub use engine::{Ctx, GbOptions, Reducer, Terms};
pub use syz::{syzygies, syzygies_generated_in_degree, syzygies_with, ModuleElem, Submodule};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{MonomialOrder, Mono, Poly, Ring};

/// A reduced Gröbner basis: monic, auto-reduced, sorted by ascending lead
/// monomial in the ring's order.
#[derive(Clone)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    elements: Vec<Poly<F>>,
    truncated_at: Option<u32>,
}

impl<F: Field> std::fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

pub(crate) fn ring_ctx<F: Field>(ring: &Ring<F>) -> Ctx {
    Ctx {
        order: ring.order(),
        nvars: ring.nvars(),
        weights: ring.weights().to_vec(),
        module: None,
    }
}

fn check_gens<F: Field>(ring: &Arc<Ring<F>>, gens: &[Poly<F>]) -> Result<()> {
    for g in gens {
        if !g.ring().same_as(ring) {
            return Err(Error::RingMismatch("generators from different rings".into()));
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("generator {g}")));
        }
    }
    Ok(())
}

impl<F: Field> GroebnerBasis<F> {
    /// Reduced basis of the ideal generated by `gens` under the ring's order.
    pub fn compute(ring: &Arc<Ring<F>>, gens: &[Poly<F>]) -> Result<Self> {
        Self::compute_with(ring, gens, GbOptions::default())
    }

    pub fn compute_with(ring: &Arc<Ring<F>>, gens: &[Poly<F>], opts: GbOptions) -> Result<Self> {
        check_gens(ring, gens)?;
        let ctx = ring_ctx(ring);
        let raw = gens.iter().map(|g| g.terms().to_vec()).collect();
        let out = engine::buchberger(ring.field(), &ctx, raw, opts);
        debug_assert!(
            opts.deg_bound.is_some() || engine::satisfies_buchberger(ring.field(), &ctx, &out),
            "Buchberger criterion fails on an emitted basis"
        );
        Ok(GroebnerBasis {
            ring: ring.clone(),
            elements: out.into_iter().map(|t| Poly::from_sorted_terms(ring, t)).collect(),
            truncated_at: opts.deg_bound,
        })
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Poly<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Degree bound used for a truncated computation, if any.
    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.lead_mono().is_some_and(|m| m.is_one()))
    }

    pub fn lead_monomials(&self) -> Vec<Mono> {
        self.elements.iter().filter_map(|g| g.lead_mono()).collect()
    }

    pub fn reducer(&self) -> Reducer<F> {
        let raw: Vec<Terms<F::Elem>> = self.elements.iter().map(|g| g.terms().to_vec()).collect();
        Reducer::new(self.ring.field().clone(), ring_ctx(&self.ring), &raw)
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        assert!(f.ring().same_as(&self.ring), "normal form across rings");
        let raw: Vec<Terms<F::Elem>> = self.elements.iter().map(|g| g.terms().to_vec()).collect();
        let nf = engine::normal_form(self.ring.field(), &ring_ctx(&self.ring), &raw, f.terms().to_vec());
        Poly::from_sorted_terms(&self.ring, nf)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every S-pair reduces to zero and all leads are monic.
    pub fn satisfies_buchberger(&self) -> bool {
        let raw: Vec<Terms<F::Elem>> = self.elements.iter().map(|g| g.terms().to_vec()).collect();
        engine::satisfies_buchberger(self.ring.field(), &ring_ctx(&self.ring), &raw)
    }

    /// No lead monomial divides another and the basis is tail-reduced.
    pub fn is_reduced(&self) -> bool {
        let leads = self.lead_monomials();
        for (i, g) in self.elements.iter().enumerate() {
            if !self.ring.field().is_one(g.lead_coeff().unwrap()) {
                return false;
            }
            for (j, l) in leads.iter().enumerate() {
                if g.terms().iter().enumerate().any(|(k, (_, m))| (k > 0 || i != j) && l.divides(m)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of `gens` under `order` (generators are moved to a
/// copy of their ring carrying that order).
pub fn groebner<F: Field>(gens: &[Poly<F>], order: MonomialOrder) -> Result<GroebnerBasis<F>> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidArgument("groebner needs at least one generator".into()));
    };
    let base = first.ring().clone();
    let ring = if base.order() == order { base.clone() } else { base.with_order(order)? };
    let mut moved = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.ring().same_as(&base) {
            return Err(Error::RingMismatch("generators from different rings".into()));
        }
        moved.push(g.to_ring(&ring));
    }
    GroebnerBasis::compute(&ring, &moved)
}

pub fn normal_form<F: Field>(f: &Poly<F>, gb: &GroebnerBasis<F>) -> Poly<F> {
    gb.normal_form(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::minors;

    #[test]
    fn single_variable_is_reduced() {
        let r = Ring::indexed(Rationals, "x", 3);
        let gb = groebner(&[r.var(0)], MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.elements(), &[r.var(0)]);
    }

    #[test]
    fn linear_elimination() {
        let r = Ring::indexed(Rationals, "x", 2);
        let (x, y) = (r.var(0), r.var(1));
        let gb = groebner(&[x.sub(&y), x.add(&y)], MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.elements(), &[y.clone(), x.clone()]);
    }

    #[test]
    fn twisted_cubic_minors_are_a_basis() {
        let r = Ring::indexed(Rationals, "x", 4);
        let x = r.vars();
        let m = vec![
            vec![x[0].clone(), x[1].clone(), x[2].clone()],
            vec![x[1].clone(), x[2].clone(), x[3].clone()],
        ];
        let gens = minors(&m, 2);
        let gb = groebner(&gens, MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(gb.elements().iter().all(|g| g.degree() == 2));
        assert!(gb.satisfies_buchberger());
        assert!(gb.is_reduced());
        for g in &gens {
            assert!(gb.contains(g));
        }
        assert!(!gb.contains(&r.one()));
        assert_eq!(gb.normal_form(&r.one()), r.one());
    }

    #[test]
    fn lex_basis_of_cyclic_three_mod_p() {
        // homogenized cyclic-3 in four variables
        let f = PrimeField::new(32003).unwrap();
        let r = Ring::indexed(f, "x", 4);
        let x = r.vars();
        let g1 = x[0].add(&x[1]).add(&x[2]);
        let g2 = x[0].mul(&x[1]).add(&x[1].mul(&x[2])).add(&x[2].mul(&x[0]));
        let g3 = x[0].mul(&x[1]).mul(&x[2]).sub(&x[3].pow(3));
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::BlockElim(2)] {
            let gb = groebner(&[g1.clone(), g2.clone(), g3.clone()], order).unwrap();
            assert!(gb.satisfies_buchberger(), "{order:?}");
            assert!(gb.is_reduced(), "{order:?}");
        }
    }

    #[test]
    fn groebner_is_idempotent() {
        let f = PrimeField::new(32003).unwrap();
        let r = Ring::indexed(f, "x", 3);
        let x = r.vars();
        let gens = vec![
            x[0].pow(2).sub(&x[1].mul(&x[2])),
            x[1].pow(2).sub(&x[0].mul(&x[2])),
        ];
        let gb = groebner(&gens, MonomialOrder::GrevLex).unwrap();
        let again = groebner(gb.elements(), MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.elements(), again.elements());
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let r = Ring::indexed(Rationals, "x", 2);
        let f = r.var(0).add(&r.one());
        assert!(matches!(
            groebner(&[f], MonomialOrder::GrevLex),
            Err(Error::NotHomogeneous(_))
        ));
    }
}
