use std::sync::Arc;

use cfr::gb::{syzygies, GroebnerBasis, ModuleElem, Submodule};
use cfr::ideals::IdealHandle;
use cfr::poly::Mono;
use cfr::{Field, MonomialOrder, Poly, PrimeField, Ring};
use proptest::prelude::*;

const P: u64 = 32771;

fn ring(order: MonomialOrder) -> Arc<Ring<PrimeField>> {
    let names = ["x", "y", "z", "w"].map(String::from).to_vec();
    Ring::new(PrimeField::new(P).unwrap(), names, order).unwrap()
}

fn poly(r: &Arc<Ring<PrimeField>>, terms: &[(u32, [u32; 4])]) -> Poly<PrimeField> {
    let f = r.field();
    Poly::from_terms(r, terms.iter().map(|(c, e)| (f.from_i64(*c as i64), r.mono(e))).collect())
}

/// Terms of total degree ≤ 3.
fn terms() -> impl Strategy<Value = Vec<(u32, [u32; 4])>> {
    prop::collection::vec((1..P as u32, [0..3u32, 0..2u32, 0..2u32, 0..2u32]), 0..6)
}

/// A homogeneous form of degree `d`: coefficients on the degree-d monomials.
fn form(d: u32) -> impl Strategy<Value = Vec<u32>> {
    let n = ring(MonomialOrder::GrevLex).monomials_of_degree(d).len();
    prop::collection::vec(0..P as u32, n)
}

fn homogeneous(r: &Arc<Ring<PrimeField>>, d: u32, coeffs: &[u32]) -> Poly<PrimeField> {
    let f = r.field();
    let monos: Vec<Mono> = r.monomials_of_degree(d);
    Poly::from_terms(r, coeffs.iter().zip(monos).map(|(c, m)| (f.from_i64(*c as i64), m)).collect())
}

fn lead_term(f: &Poly<PrimeField>) -> Poly<PrimeField> {
    Poly::from_terms(f.ring(), vec![f.lead().unwrap().clone()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in terms(), b in terms(), c in terms()) {
        let r = ring(MonomialOrder::GrevLex);
        let (f, g, h) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
        prop_assert_eq!(f.mul(&r.one()), f.clone());
    }

    #[test]
    fn orders_are_multiplicative(a in terms(), b in terms()) {
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let r = ring(order);
            let (f, g) = (poly(&r, &a), poly(&r, &b));
            if f.is_zero() || g.is_zero() {
                continue;
            }
            prop_assert_eq!(f.mul(&g).lead_mono(), lead_term(&f).mul(&lead_term(&g)).lead_mono());
            prop_assert!(f.is_canonical());
        }
    }

    #[test]
    fn homogeneous_evaluation_scales(c in form(3), pt in [1..P as u32, 0..P as u32, 0..P as u32, 0..P as u32], t in 1..P as u32) {
        let r = ring(MonomialOrder::GrevLex);
        let field = r.field();
        let f = homogeneous(&r, 3, &c);
        let pt: Vec<u32> = pt.to_vec();
        let scaled: Vec<u32> = pt.iter().map(|x| field.mul(x, &t)).collect();
        let lhs = f.evaluate(&scaled).unwrap();
        let rhs = field.mul(&f.evaluate(&pt).unwrap(), &field.mul(&t, &field.mul(&t, &t)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn groebner_bases_satisfy_buchberger_and_absorb(c1 in form(2), c2 in form(2), c3 in form(3), m in form(1), k in form(2)) {
        let r = ring(MonomialOrder::GrevLex);
        let gens = vec![homogeneous(&r, 2, &c1), homogeneous(&r, 2, &c2), homogeneous(&r, 3, &c3)];
        let gb = GroebnerBasis::compute(&r, &gens).unwrap();
        prop_assert!(gb.satisfies_buchberger());
        prop_assert!(gb.is_reduced());
        let i = IdealHandle::new(&r, gens.clone()).unwrap();
        for g in &gens {
            prop_assert!(i.contains(g));
        }
        let h = homogeneous(&r, 1, &m).mul(&gens[0]).add(&homogeneous(&r, 2, &k).mul(&gens[1]));
        prop_assert!(i.contains(&h));
    }

    #[test]
    fn saturation_is_idempotent(c1 in form(2), c2 in form(2)) {
        let r = ring(MonomialOrder::GrevLex);
        let x = r.var(0);
        // an ideal with embedded components along x = 0
        let gens = vec![homogeneous(&r, 2, &c1).mul(&x), homogeneous(&r, 2, &c2).mul(&x.pow(2))];
        let i = IdealHandle::new(&r, gens).unwrap();
        let sat = i.saturate_by(&x).unwrap();
        prop_assert!(sat.contains_ideal(&i));
        prop_assert!(sat.saturate_by(&x).unwrap().equals(&sat));
        let gb = sat.gb();
        prop_assert!(gb.satisfies_buchberger());
    }

    #[test]
    fn syzygies_are_exact(c1 in form(2), c2 in form(2), c3 in form(2)) {
        let r = ring(MonomialOrder::GrevLex);
        let gens: Vec<_> = [c1, c2, c3].iter().map(|c| homogeneous(&r, 2, c)).collect();
        prop_assume!(gens.iter().all(|g| !g.is_zero()));
        let syz = syzygies(&gens).unwrap();
        for s in &syz {
            prop_assert!(s.apply(&gens).is_zero());
        }
        // every Koszul relation lies in the module they generate
        let sub = Submodule::new(&r, &[2, 2, 2], &syz);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let mut comps = vec![r.zero(); 3];
            comps[i] = gens[j].clone();
            comps[j] = gens[i].neg();
            let koszul = ModuleElem { comps };
            prop_assert!(sub.contains(&koszul));
        }
    }
}
