//! Homogeneous ideals with cached Gröbner bases and Hilbert data.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::{syzygies, GbOptions, GroebnerBasis};
use crate::hilbert::{monomial_count, HilbertSeries};
use crate::poly::{minors, subsets, Mono, MonomialOrder, Poly, Ring};

/// A homogeneous ideal. Handles are immutable; operations return new ones.
pub struct IdealHandle<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Vec<Poly<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
    hilbert: OnceLock<HilbertSeries>,
}

impl<F: Field> Clone for IdealHandle<F> {
    fn clone(&self) -> Self {
        let out = IdealHandle {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb: OnceLock::new(),
            hilbert: OnceLock::new(),
        };
        if let Some(g) = self.gb.get() {
            let _ = out.gb.set(g.clone());
        }
        if let Some(h) = self.hilbert.get() {
            let _ = out.hilbert.set(h.clone());
        }
        out
    }
}

impl<F: Field> std::fmt::Debug for IdealHandle<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdealHandle").field("gens", &self.gens).finish()
    }
}

impl<F: Field> IdealHandle<F> {
    /// Zero generators are dropped; all others must be homogeneous.
    pub fn new(ring: &Arc<Ring<F>>, gens: Vec<Poly<F>>) -> Result<Self> {
        for g in &gens {
            if !g.ring().same_as(ring) {
                return Err(Error::RingMismatch("ideal generator from another ring".into()));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("ideal generator {g}")));
            }
        }
        Ok(IdealHandle {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
            hilbert: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        IdealHandle::new(ring, Vec::new()).expect("empty ideal")
    }

    pub fn unit(ring: &Arc<Ring<F>>) -> Self {
        IdealHandle::new(ring, vec![ring.one()]).expect("unit ideal")
    }

    /// The ideal generated by a reduced Gröbner basis, with the basis cached.
    pub fn from_gb(gb: GroebnerBasis<F>) -> Self {
        let out = IdealHandle {
            ring: gb.ring().clone(),
            gens: gb.elements().to_vec(),
            gb: OnceLock::new(),
            hilbert: OnceLock::new(),
        };
        let _ = out.gb.set(gb);
        out
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    /// Reduced Gröbner basis in the ring's order, computed once.
    pub fn gb(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| {
            GroebnerBasis::compute(&self.ring, &self.gens).expect("generators checked on construction")
        })
    }

    pub fn hilbert(&self) -> &HilbertSeries {
        self.hilbert.get_or_init(|| {
            assert!(self.ring.is_standard_graded(), "Hilbert data needs a standard grading");
            HilbertSeries::from_leads(&self.gb().lead_monomials(), self.ring.nvars())
        })
    }

    /// Projective dimension and degree of `V(I)`; `(-1, 0)` when empty.
    pub fn dim_degree(&self) -> (i64, i64) {
        self.hilbert().dim_degree()
    }

    /// `dim_K I_d`.
    pub fn graded_piece_dim(&self, d: i64) -> i128 {
        if d < 0 {
            return 0;
        }
        monomial_count(self.ring.nvars(), d) - self.hilbert().hilbert_function(d)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.gb().contains(f)
    }

    pub fn contains_ideal(&self, other: &IdealHandle<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality of ideals (equal reduced bases).
    pub fn equals(&self, other: &IdealHandle<F>) -> bool {
        self.gb().elements() == other.gb().elements()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check_ring(&self, other: &IdealHandle<F>) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch("ideals from different rings".into()))
        }
    }

    pub fn sum(&self, other: &IdealHandle<F>) -> Result<Self> {
        self.check_ring(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        IdealHandle::new(&self.ring, g)
    }

    pub fn product(&self, other: &IdealHandle<F>) -> Result<Self> {
        self.check_ring(other)?;
        IdealHandle::new(&self.ring, crate::poly::pairwise_products(&self.gens, &other.gens))
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1-t)·J`; `t` has weight 0 so
    /// the generators stay homogeneous.
    pub fn intersect(&self, other: &IdealHandle<F>) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(IdealHandle::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let mut names = vec![fresh_name(&self.ring, "t")];
        names.extend(self.ring.names().iter().cloned());
        let mut weights = vec![0u16];
        weights.extend(self.ring.weights());
        let big = Ring::with_weights(self.field().clone(), names, weights, MonomialOrder::BlockElim(1))?;
        let map: Vec<usize> = (1..=n).collect();
        let t = big.var(0);
        let one_minus_t = big.one().sub(&t);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(t.mul(&f.embed(&big, &map)));
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.embed(&big, &map)));
        }
        let gb = GroebnerBasis::compute(&big, &gens)?;
        let keep: Vec<usize> = (1..=n).collect();
        let out = gb
            .elements()
            .iter()
            .filter(|g| g.lead_mono().is_some_and(|m| m.exp(0) == 0))
            .filter_map(|g| g.restrict(&self.ring, &keep))
            .collect();
        IdealHandle::new(&self.ring, out)
    }

    /// `(I : g)` from the syzygies of `(g, f_1, ..., f_r)`.
    pub fn quotient_by(&self, g: &Poly<F>) -> Result<Self> {
        if !g.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch("quotient by a form of another ring".into()));
        }
        if g.is_zero() {
            return Ok(IdealHandle::unit(&self.ring));
        }
        if self.is_zero() {
            return Ok(IdealHandle::zero(&self.ring));
        }
        let mut cols = vec![g.clone()];
        cols.extend(self.gb().elements().iter().cloned());
        let syz = syzygies(&cols)?;
        let out: Vec<Poly<F>> = syz.into_iter().map(|s| s.comps[0].clone()).collect();
        IdealHandle::new(&self.ring, out)
    }

    /// `(I : J) = ∩_{g ∈ gens J} (I : g)`.
    pub fn quotient(&self, other: &IdealHandle<F>) -> Result<Self> {
        self.check_ring(other)?;
        let mut acc: Option<IdealHandle<F>> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| IdealHandle::unit(&self.ring)))
    }

    /// `(I : J^∞)` by iterated quotients until the ideal stabilizes.
    pub fn saturate(&self, other: &IdealHandle<F>) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if next.equals(&cur) {
                return Ok(IdealHandle::from_gb(cur.gb().clone()));
            }
            cur = next;
        }
    }

    /// `(I : g^∞)` for a single form: adjoin `y` of weight `deg g`, compute a
    /// basis of `I + (y - g)` in reverse lex with `y` last, strip powers of
    /// `y`, and put `y = g` back.
    pub fn saturate_by(&self, g: &Poly<F>) -> Result<Self> {
        if !g.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch("saturation by a form of another ring".into()));
        }
        if !g.is_homogeneous() || g.is_zero() {
            return Err(Error::NotHomogeneous("saturating form".into()));
        }
        if self.is_zero() || g.is_constant() {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let dg = g.weighted_degree() as u16;
        let mut names = self.ring.names().to_vec();
        names.push(fresh_name(&self.ring, "y"));
        let mut weights = self.ring.weights().to_vec();
        weights.push(dg);
        let big = Ring::with_weights(self.field().clone(), names, weights, MonomialOrder::GrevLex)?;
        let map: Vec<usize> = (0..n).collect();
        let mut gens: Vec<Poly<F>> = self.gens.iter().map(|f| f.embed(&big, &map)).collect();
        gens.push(big.var(n).sub(&g.embed(&big, &map)));
        let gb = GroebnerBasis::compute(&big, &gens)?;
        let mut subs: Vec<Poly<F>> = self.ring.vars();
        subs.push(g.clone());
        let mut out = Vec::new();
        for h in gb.elements() {
            let e = h.terms().iter().map(|(_, m)| m.exp(n)).min().unwrap_or(0);
            let mut ex = vec![0u32; n + 1];
            ex[n] = e;
            let ye = big.mono(&ex);
            let stripped = Poly::from_terms(
                &big,
                h.terms().iter().map(|(c, m)| (c.clone(), m.div(&ye))).collect(),
            );
            out.push(stripped.compose(&subs));
        }
        IdealHandle::new(&self.ring, out)
    }

    /// `(I : J^∞)` as `(I : g^∞)` for a random homogeneous `g ∈ J`
    /// (exact for all `g` outside a proper closed subset).
    pub fn saturate_generic<R: Rng + ?Sized>(&self, other: &IdealHandle<F>, rng: &mut R) -> Result<Self> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        let g = random_element_of(other, rng);
        if g.is_zero() {
            return Ok(IdealHandle::unit(&self.ring));
        }
        self.saturate_by(&g)
    }

    /// Saturation by the irrelevant ideal via a random linear form.
    pub fn saturate_irrelevant<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Self> {
        let field = self.field();
        let coeffs: Vec<F::Elem> = (0..self.ring.nvars()).map(|_| field.random(rng, crate::rng::WINDOW)).collect();
        let l = self.ring.linear_form(&coeffs);
        if l.is_zero() {
            return self.saturate_irrelevant(rng);
        }
        self.saturate_by(&l)
    }

    /// `I ∩ K[x_k, ..., x_{n-1}]`, generators kept in the same ring.
    pub fn eliminate(&self, first_k: usize) -> Result<Self> {
        let n = self.ring.nvars();
        if first_k == 0 || first_k >= n {
            return Err(Error::InvalidArgument(format!("cannot eliminate {first_k} of {n} variables")));
        }
        let er = self.ring.with_order(MonomialOrder::BlockElim(first_k))?;
        let gens: Vec<Poly<F>> = self.gens.iter().map(|g| g.to_ring(&er)).collect();
        let gb = GroebnerBasis::compute(&er, &gens)?;
        let out = gb
            .elements()
            .iter()
            .filter(|g| g.lead_mono().is_some_and(|m| (0..first_k).all(|i| m.exp(i) == 0)))
            .map(|g| g.to_ring(&self.ring))
            .collect();
        IdealHandle::new(&self.ring, out)
    }

    /// Moves generators that only involve the variables `keep` into `ring`.
    pub fn restrict(&self, ring: &Arc<Ring<F>>, keep: &[usize]) -> Result<IdealHandle<F>> {
        let mut out = Vec::new();
        for g in &self.gens {
            out.push(
                g.restrict(ring, keep)
                    .ok_or_else(|| Error::InvalidArgument("generator involves eliminated variables".into()))?,
            );
        }
        IdealHandle::new(ring, out)
    }

    /// `I + (c×c minors of the Jacobian)`. When the number of minors exceeds
    /// `limit`, the minors of `trials` random compressions `A·Jac` (A of
    /// size c × #gens) are used instead.
    pub fn singular_locus_with<R: Rng + ?Sized>(
        &self,
        codim: usize,
        limit: usize,
        trials: usize,
        rng: &mut R,
    ) -> Result<Self> {
        let n = self.ring.nvars();
        let gens = self.gens.clone();
        let jac: Vec<Vec<Poly<F>>> = gens
            .iter()
            .map(|g| (0..n).map(|i| g.partial(i)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let count = binom_usize(gens.len(), codim) * binom_usize(n, codim);
        let mut out = gens.clone();
        if count <= limit {
            out.extend(minors(&jac, codim));
        } else {
            let field = self.field();
            for _ in 0..trials {
                let a: Vec<Vec<F::Elem>> = (0..codim)
                    .map(|_| (0..gens.len()).map(|_| field.random(rng, crate::rng::WINDOW)).collect())
                    .collect();
                let comp: Vec<Vec<Poly<F>>> = a
                    .iter()
                    .map(|row| {
                        (0..n)
                            .map(|j| {
                                row.iter()
                                    .zip(&jac)
                                    .fold(self.ring.zero(), |acc, (c, jr)| acc.add(&jr[j].scale(c)))
                            })
                            .collect()
                    })
                    .collect();
                out.extend(minors(&comp, codim));
            }
        }
        IdealHandle::new(&self.ring, out)
    }

    /// Exact singular locus for a hypersurface or a small Jacobian.
    pub fn singular_locus(&self, codim: usize) -> Result<Self> {
        let mut rng = crate::rng::stage_rng(0, "singular-locus");
        self.singular_locus_with(codim, usize::MAX, 0, &mut rng)
    }

    /// Number of minimal generators in each degree.
    pub fn generator_profile(&self) -> BTreeMap<u32, usize> {
        minimal_generators(&self.ring, &self.gens)
            .iter()
            .fold(BTreeMap::new(), |mut acc, g| {
                *acc.entry(g.weighted_degree() as u32).or_insert(0) += 1;
                acc
            })
    }

    /// A minimal generating set extracted from the generators.
    pub fn minimal_gens(&self) -> Vec<Poly<F>> {
        minimal_generators(&self.ring, &self.gens)
    }

    /// Random homogeneous combination of the generators of degree `d`
    /// (generators of lower degree are multiplied by random forms).
    pub fn random_element_in_degree<R: Rng + ?Sized>(&self, d: u32, rng: &mut R) -> Poly<F> {
        let field = self.field();
        let mut acc = self.ring.zero();
        for g in &self.gens {
            let dg = g.weighted_degree() as u32;
            if dg > d {
                continue;
            }
            let m = random_form(&self.ring, d - dg, rng);
            acc = acc.add(&m.mul(g));
        }
        let _ = field;
        acc
    }
}

fn binom_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

fn fresh_name<F: Field>(ring: &Ring<F>, base: &str) -> String {
    let mut name = format!("{base}_aux");
    while ring.names().contains(&name) {
        name.push('_');
    }
    name
}

/// A random form of degree `d` with coefficients from the field's window.
pub fn random_form<F: Field, R: Rng + ?Sized>(ring: &Arc<Ring<F>>, d: u32, rng: &mut R) -> Poly<F> {
    let field = ring.field();
    let terms = ring
        .monomials_of_degree(d)
        .into_iter()
        .map(|m| (field.random(rng, crate::rng::WINDOW), m))
        .collect();
    Poly::from_terms(ring, terms)
}

/// Random homogeneous element of an ideal, in the top generator degree.
pub fn random_element_of<F: Field, R: Rng + ?Sized>(ideal: &IdealHandle<F>, rng: &mut R) -> Poly<F> {
    let d = ideal.gens().iter().map(|g| g.weighted_degree() as u32).max().unwrap_or(0);
    ideal.random_element_in_degree(d, rng)
}

/// Keeps the generators not in the ideal of the previously kept ones
/// (processed by increasing degree, then input order).
pub fn minimal_generators<F: Field>(ring: &Arc<Ring<F>>, gens: &[Poly<F>]) -> Vec<Poly<F>> {
    let field = ring.field();
    let mut sorted: Vec<&Poly<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by_key(|g| g.weighted_degree());
    let mut kept: Vec<Poly<F>> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let d = sorted[i].weighted_degree();
        let j = i + sorted[i..].iter().take_while(|g| g.weighted_degree() == d).count();
        // normal forms are linear in a fixed degree, so independence of the
        // normal forms modulo the lower part decides minimality
        let gb = (!kept.is_empty())
            .then(|| GroebnerBasis::compute_with(ring, &kept, GbOptions { deg_bound: Some(d as u32), reduced: true }).ok())
            .flatten();
        let mut echelon: Vec<(Mono, Poly<F>)> = Vec::new();
        for g in &sorted[i..j] {
            let mut r = match &gb {
                Some(gb) => gb.normal_form(g),
                None => (*g).clone(),
            };
            for (lead, row) in &echelon {
                let c = r.coefficient(lead);
                if !field.is_zero(&c) {
                    r = r.sub(&row.scale(&c));
                }
            }
            if let Some((c, m)) = r.terms().first().cloned() {
                let inv = field.inv(&c).expect("nonzero lead");
                echelon.push((m, r.scale(&inv)));
                kept.push((*g).clone());
            }
        }
        i = j;
    }
    kept
}

/// Ideal of a rational point: the 2×2 minors of `[p; x]`.
pub fn point_ideal<F: Field>(ring: &Arc<Ring<F>>, p: &[F::Elem]) -> Result<IdealHandle<F>> {
    let n = ring.nvars();
    let field = ring.field();
    let piv = p
        .iter()
        .position(|c| !field.is_zero(c))
        .ok_or_else(|| Error::InvalidArgument("zero vector is not a point".into()))?;
    let x = ring.vars();
    let gens = (0..n)
        .filter(|&i| i != piv)
        .map(|i| x[i].scale(&p[piv]).sub(&x[piv].scale(&p[i])))
        .collect();
    IdealHandle::new(ring, gens)
}

/// Ideal of the linear span of points (rows), as the linear forms vanishing on them.
pub fn span_ideal<F: Field>(ring: &Arc<Ring<F>>, points: &[Vec<F::Elem>]) -> Result<IdealHandle<F>> {
    let field = ring.field();
    let ker = crate::linalg::kernel(field, &points.to_vec(), ring.nvars());
    IdealHandle::new(ring, ker.iter().map(|v| ring.linear_form(v)).collect())
}

/// All `k`-subsets helper re-exported for callers building minors.
pub fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    subsets(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::rng::stage_rng;

    fn q(n: usize) -> Arc<Ring<Rationals>> {
        Ring::indexed(Rationals, "x", n)
    }

    fn id<F: Field>(r: &Arc<Ring<F>>, g: Vec<Poly<F>>) -> IdealHandle<F> {
        IdealHandle::new(r, g).unwrap()
    }

    #[test]
    fn sum_and_product() {
        let r = q(3);
        let (x, y) = (r.var(0), r.var(1));
        let s = id(&r, vec![x.clone()]).sum(&id(&r, vec![y.clone()])).unwrap();
        assert!(s.equals(&id(&r, vec![x.clone(), y.clone()])));
        let p = id(&r, vec![x.clone()]).product(&id(&r, vec![y.clone()])).unwrap();
        assert!(p.equals(&id(&r, vec![x.mul(&y)])));
    }

    #[test]
    fn intersections() {
        let r = q(3);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let a = id(&r, vec![x.clone()]).intersect(&id(&r, vec![y.clone()])).unwrap();
        assert!(a.equals(&id(&r, vec![x.mul(&y)])));
        let b = id(&r, vec![x.clone(), y.clone()])
            .intersect(&id(&r, vec![x.clone(), z.clone()]))
            .unwrap();
        assert!(b.equals(&id(&r, vec![x.clone(), y.mul(&z)])));
        let i = id(&r, vec![x.pow(2), y.mul(&z)]);
        assert!(i.intersect(&i).unwrap().equals(&i));
    }

    #[test]
    fn quotients() {
        let r = q(2);
        let (x, y) = (r.var(0), r.var(1));
        assert!(id(&r, vec![x.pow(2)]).quotient(&id(&r, vec![x.clone()])).unwrap().equals(&id(&r, vec![x.clone()])));
        assert!(id(&r, vec![x.mul(&y)]).quotient(&id(&r, vec![y.clone()])).unwrap().equals(&id(&r, vec![x.clone()])));
        let i = id(&r, vec![x.pow(2), x.mul(&y).mul(&y)]);
        assert!(i.quotient(&IdealHandle::unit(&r)).unwrap().equals(&i));
    }

    #[test]
    fn saturations_agree() {
        let r = q(3);
        let (x, y) = (r.var(0), r.var(1));
        let i = id(&r, vec![x.pow(2), x.mul(&y)]);
        let j = id(&r, vec![x.clone()]);
        let expect = id(&r, vec![x.clone()]);
        // (x^2, xy) : x^∞ is the unit ideal; : y^∞ is (x)
        let by_y = id(&r, vec![y.clone()]);
        assert!(i.saturate(&by_y).unwrap().equals(&expect));
        assert!(i.saturate_by(&y).unwrap().equals(&expect));
        assert!(i.saturate(&j).unwrap().is_unit());
        let sat = i.saturate(&by_y).unwrap();
        assert!(sat.saturate(&by_y).unwrap().equals(&sat));
    }

    #[test]
    fn saturation_removes_embedded_point() {
        let f = PrimeField::new(32003).unwrap();
        let r = Ring::indexed(f, "x", 3);
        let x = r.vars();
        // line x0 = 0 with an embedded point at (0:0:1)
        let i = id(&r, vec![x[0].pow(2), x[0].mul(&x[1])]);
        let mut rng = stage_rng(1, "t");
        let s = i.saturate_irrelevant(&mut rng).unwrap();
        assert_eq!(s.dim_degree(), (1, 1));
        let m = id(&r, x.clone());
        assert!(i.saturate(&m).unwrap().equals(&s));
        let g = i.saturate_generic(&m, &mut rng).unwrap();
        assert!(g.equals(&s));
    }

    #[test]
    fn elimination_of_twisted_cubic() {
        // K[s, t, x0..x3] with x_i - s^{3-i} t^i: eliminate s, t
        let r = Ring::new(
            Rationals,
            ["s", "t", "x0", "x1", "x2", "x3"].iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let v = r.vars();
        // homogeneous with weights (1,1,3,3,3,3)
        let rw = Ring::with_weights(Rationals, r.names().to_vec(), vec![1, 1, 3, 3, 3, 3], MonomialOrder::GrevLex).unwrap();
        let vw: Vec<Poly<Rationals>> = v.iter().map(|p| p.to_ring(&rw)).collect();
        let gens: Vec<Poly<Rationals>> = (0..4)
            .map(|i| vw[2 + i].sub(&vw[0].pow(3 - i as u32).mul(&vw[1].pow(i as u32))))
            .collect();
        let i = id(&rw, gens);
        let e = i.eliminate(2).unwrap();
        let p3 = Ring::indexed(Rationals, "x", 4);
        let e3 = e.restrict(&p3, &[2, 3, 4, 5]).unwrap();
        assert_eq!(e3.dim_degree(), (1, 3));
        let x = p3.vars();
        assert!(e3.contains(&x[0].mul(&x[2]).sub(&x[1].pow(2))));
        for g in e.gens() {
            assert!(i.contains(g));
        }
        let _ = id(&r, vec![]);
    }

    #[test]
    fn elimination_without_relations() {
        let r = q(3);
        let x = r.vars();
        let i = id(&r, vec![x[0].mul(&x[2]).sub(&x[1].mul(&x[2]))]);
        // x0*x2 - x1*x2 has no generator free of x0 beyond the zero ideal
        assert!(i.eliminate(1).unwrap().is_zero());
    }

    #[test]
    fn dim_degree_basics() {
        let r = Ring::indexed(Rationals, "x", 6);
        assert_eq!(IdealHandle::zero(&r).dim_degree(), (5, 1));
        assert_eq!(IdealHandle::unit(&r).dim_degree(), (-1, 0));
    }

    #[test]
    fn singular_loci() {
        let r = Ring::indexed(Rationals, "x", 6);
        let x = r.vars();
        let quadric = x.iter().fold(r.zero(), |a, v| a.add(&v.pow(2)));
        assert_eq!(id(&r, vec![quadric]).singular_locus(1).unwrap().dim_degree(), (-1, 0));
        let cone = x[0].mul(&x[1]).sub(&x[2].pow(2));
        let s = id(&r, vec![cone]).singular_locus(1).unwrap();
        assert_eq!(s.dim_degree().0, 2);
        assert!(s.saturate(&id(&r, x.clone())).unwrap().equals(&id(&r, vec![x[0].clone(), x[1].clone(), x[2].clone()])));
    }

    #[test]
    fn graded_piece_and_profile() {
        let r = Ring::indexed(Rationals, "x", 4);
        let x = r.vars();
        let m = vec![
            vec![x[0].clone(), x[1].clone(), x[2].clone()],
            vec![x[1].clone(), x[2].clone(), x[3].clone()],
        ];
        let mut gens = minors(&m, 2);
        gens.push(x[0].mul(&gens[0]));
        let i = id(&r, gens);
        assert_eq!(i.graded_piece_dim(2), 3);
        assert_eq!(i.graded_piece_dim(3), 20 - 10);
        assert_eq!(i.generator_profile(), BTreeMap::from([(2, 3)]));
    }

    #[test]
    fn point_ideal_is_a_reduced_point() {
        let r = Ring::indexed(Rationals, "x", 4);
        let p: Vec<_> = [1, -2, 0, 5].iter().map(|&v| Rationals.from_i64(v)).collect();
        let i = point_ideal(&r, &p).unwrap();
        assert_eq!(i.dim_degree(), (0, 1));
        let sp = span_ideal(&r, &[p.clone()]).unwrap();
        assert!(sp.equals(&i));
    }
}
