//! Rational maps `P^m ⇢ P^n` given by forms of one degree.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::GroebnerBasis;
use crate::ideals::{random_element_of, IdealHandle};
use crate::linalg;
use crate::poly::serial::{to_json, PolyJson};
use crate::poly::{FxHashMap, MonomialOrder, Mono, Poly, Ring};
use crate::rng::{stage_rng, WINDOW};

/// Number of fresh random draws before a randomized step gives up.
pub const RETRIES: usize = 5;

pub struct RationalMap<F: Field> {
    source: Arc<Ring<F>>,
    target: Arc<Ring<F>>,
    forms: Vec<Poly<F>>,
    seed: u64,
    base: OnceLock<IdealHandle<F>>,
    multidegree: OnceLock<Vec<i64>>,
}

impl<F: Field> Clone for RationalMap<F> {
    fn clone(&self) -> Self {
        let out = RationalMap {
            source: self.source.clone(),
            target: self.target.clone(),
            forms: self.forms.clone(),
            seed: self.seed,
            base: OnceLock::new(),
            multidegree: OnceLock::new(),
        };
        if let Some(b) = self.base.get() {
            let _ = out.base.set(b.clone());
        }
        if let Some(m) = self.multidegree.get() {
            let _ = out.multidegree.set(m.clone());
        }
        out
    }
}

impl<F: Field> std::fmt::Debug for RationalMap<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RationalMap(P^{} -> P^{}, degree {})",
            self.source.nvars() - 1,
            self.target.nvars() - 1,
            self.degree()
        )
    }
}

impl<F: Field> RationalMap<F> {
    pub fn new(source: &Arc<Ring<F>>, target: &Arc<Ring<F>>, forms: Vec<Poly<F>>) -> Result<Self> {
        if forms.len() != target.nvars() {
            return Err(Error::InvalidArgument(format!(
                "{} forms for a target with {} coordinates",
                forms.len(),
                target.nvars()
            )));
        }
        if forms.iter().all(|f| f.is_zero()) {
            return Err(Error::InvalidArgument("all forms vanish".into()));
        }
        let mut deg = None;
        for f in &forms {
            if !f.ring().same_as(source) {
                return Err(Error::RingMismatch("map form outside the source ring".into()));
            }
            if !f.is_homogeneous() {
                return Err(Error::NotHomogeneous("map form".into()));
            }
            if !f.is_zero() {
                match deg {
                    None => deg = Some(f.degree()),
                    Some(d) if d != f.degree() => {
                        return Err(Error::NotHomogeneous("map forms of different degrees".into()))
                    }
                    _ => {}
                }
            }
        }
        Ok(RationalMap {
            source: source.clone(),
            target: target.clone(),
            forms,
            seed: 0,
            base: OnceLock::new(),
            multidegree: OnceLock::new(),
        })
    }

    /// Map into `P^{forms.len()-1}` with coordinates `y0, y1, ...`.
    pub fn to_projective(source: &Arc<Ring<F>>, forms: Vec<Poly<F>>, prefix: &str) -> Result<Self> {
        let names = (0..forms.len()).map(|i| format!("{prefix}{i}")).collect();
        let target = Ring::new(source.field().clone(), names, MonomialOrder::GrevLex)?;
        Self::new(source, &target, forms)
    }

    pub fn identity(ring: &Arc<Ring<F>>) -> Self {
        Self::new(ring, ring, ring.vars()).expect("identity map")
    }

    /// Seed for the randomized analyses (multidegree, fibres, saturations).
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Declares the (saturated) base-locus ideal, skipping its computation.
    pub fn with_base(self, base: IdealHandle<F>) -> Self {
        let _ = self.base.set(base);
        self
    }

    pub fn source(&self) -> &Arc<Ring<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring<F>> {
        &self.target
    }

    pub fn forms(&self) -> &[Poly<F>] {
        &self.forms
    }

    pub fn degree(&self) -> i64 {
        self.forms.iter().map(|f| f.degree()).max().unwrap_or(-1)
    }

    pub fn evaluate(&self, a: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.forms.iter().map(|f| f.evaluate(a)).collect()
    }

    /// Composition `self ∘ other` (first `other`, then `self`).
    pub fn compose(&self, other: &RationalMap<F>) -> Result<RationalMap<F>> {
        if !other.target.same_as(&self.source) {
            return Err(Error::RingMismatch("composition of incompatible maps".into()));
        }
        let forms = self
            .forms
            .iter()
            .map(|f| f.substitute(&other.forms))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalMap::new(&other.source, &self.target, forms)?.with_seed(self.seed))
    }

    /// Saturation of `(forms)` by the irrelevant ideal.
    pub fn base_locus(&self) -> &IdealHandle<F> {
        self.base.get_or_init(|| {
            let i = IdealHandle::new(&self.source, self.forms.clone()).expect("homogeneous forms");
            let mut rng = stage_rng(self.seed, "base-locus");
            i.saturate_irrelevant(&mut rng).expect("saturation in the source ring")
        })
    }

    /// Products `φ^α` for all target monomials of degree `d`, keyed by
    /// monomial; built incrementally from degree `d-1`.
    fn powers(&self, d: u32) -> Vec<(Mono, Poly<F>)> {
        let n = self.target.nvars();
        let mut level: Vec<(Vec<u32>, Poly<F>)> = vec![(vec![0; n], self.source.one())];
        for _ in 0..d {
            let mut next = Vec::new();
            for (e, p) in &level {
                let start = e.iter().rposition(|&x| x > 0).unwrap_or(0);
                for j in start..n {
                    let mut e2 = e.clone();
                    e2[j] += 1;
                    next.push((e2, p.mul(&self.forms[j])));
                }
            }
            level = next;
        }
        level.into_iter().map(|(e, p)| (self.target.mono(&e), p)).collect()
    }

    /// Target forms of degree `d` that vanish on `φ(V(sub))` (on the whole
    /// image when `sub` is `None`), by linear algebra on `φ^α`, reduced
    /// modulo a basis of `sub` when given.
    pub fn image_in_degree(&self, d: u32, sub: Option<&GroebnerBasis<F>>) -> Vec<Poly<F>> {
        let field = self.source.field();
        let pw = self.powers(d);
        let images: Vec<Poly<F>> = pw
            .iter()
            .map(|(_, p)| match sub {
                Some(gb) => gb.normal_form(p),
                None => p.clone(),
            })
            .collect();
        let mut index: FxHashMap<Mono, usize> = FxHashMap::default();
        for p in &images {
            for (_, m) in p.terms() {
                let k = index.len();
                index.entry(*m).or_insert(k);
            }
        }
        let nrows = index.len();
        let ncols = pw.len();
        let mut mat = vec![vec![field.zero(); ncols]; nrows];
        for (j, p) in images.iter().enumerate() {
            for (c, m) in p.terms() {
                mat[index[m]][j] = c.clone();
            }
        }
        let ker = linalg::kernel(field, &mat, ncols);
        ker.into_iter()
            .map(|v| {
                let terms = linalg::clear_denominators(field, &v)
                    .into_iter()
                    .zip(&pw)
                    .filter(|(c, _)| !field.is_zero(c))
                    .map(|(c, (m, _))| (c, *m))
                    .collect();
                Poly::from_terms(&self.target, terms)
            })
            .collect()
    }

    /// Basis of `I(image)_d` for every `d ≤ cap`, in increasing degree.
    pub fn image_up_to_degree(&self, cap: u32) -> Result<Vec<Poly<F>>> {
        if cap == 0 {
            return Err(Error::InvalidArgument("degree cap must be positive".into()));
        }
        Ok((1..=cap).flat_map(|d| self.image_in_degree(d, None)).collect())
    }

    /// Equations of degree ≤ `cap` of the image of `V(sub)`.
    pub fn image_of_up_to_degree(&self, sub: &IdealHandle<F>, cap: u32) -> Result<Vec<Poly<F>>> {
        if !sub.ring().same_as(&self.source) {
            return Err(Error::RingMismatch("subvariety outside the source".into()));
        }
        let gb = sub.gb();
        if gb.is_unit() {
            return Err(Error::ImageEmpty);
        }
        Ok((1..=cap).flat_map(|d| self.image_in_degree(d, Some(gb))).collect())
    }

    /// Ideal of the closure of `φ(V(sub))` by elimination from the graph.
    pub fn image_graph(&self, sub: &IdealHandle<F>) -> Result<IdealHandle<F>> {
        let m = self.source.nvars();
        let n = self.target.nvars();
        let mut names: Vec<String> = self.source.names().to_vec();
        for nm in self.target.names() {
            let mut s = nm.clone();
            while names.contains(&s) {
                s.push('\'');
            }
            names.push(s);
        }
        let big = Ring::new(self.source.field().clone(), names, MonomialOrder::GrevLex)?;
        let xmap: Vec<usize> = (0..m).collect();
        let phi: Vec<Poly<F>> = self.forms.iter().map(|f| f.embed(&big, &xmap)).collect();
        let y: Vec<Poly<F>> = (0..n).map(|j| big.var(m + j)).collect();
        let mut gens: Vec<Poly<F>> = sub.gens().iter().map(|g| g.embed(&big, &xmap)).collect();
        for j in 0..n {
            for k in j + 1..n {
                let g = y[j].mul(&phi[k]).sub(&y[k].mul(&phi[j]));
                if !g.is_zero() {
                    gens.push(g);
                }
            }
        }
        let graph = IdealHandle::new(&big, gens)?;
        let mut rng = stage_rng(self.seed, "image-graph");
        let base = self.base_locus();
        let g = random_element_of(base, &mut rng);
        let g = if g.is_zero() { self.source.var(0) } else { g };
        let graph = graph.saturate_by(&g.embed(&big, &xmap))?;
        let elim = graph.eliminate(m)?;
        let keep: Vec<usize> = (m..m + n).collect();
        let img = elim.restrict(&self.target, &keep)?;
        let img = img.saturate_irrelevant(&mut rng)?;
        if img.is_unit() {
            return Err(Error::ImageEmpty);
        }
        Ok(img)
    }

    /// Random linear subspace `P^i ⊂ P^m` as a map `P^i → P^m` with a
    /// random integer matrix.
    fn random_subspace<R: Rng + ?Sized>(&self, i: usize, rng: &mut R) -> (Arc<Ring<F>>, Vec<Poly<F>>) {
        let field = self.source.field();
        let sub = Ring::indexed(field.clone(), "w", i + 1);
        let forms = (0..self.source.nvars())
            .map(|_| {
                let c: Vec<F::Elem> = (0..=i).map(|_| field.random(rng, WINDOW)).collect();
                sub.linear_form(&c)
            })
            .collect();
        (sub, forms)
    }

    /// Projective degrees `d_0, ..., d_m`. `d_i` is the degree of the
    /// residual (to the base locus) of `i` general members of the linear
    /// system, read off after restriction to a general `P^i`.
    pub fn multidegree(&self) -> Result<Vec<i64>> {
        if let Some(m) = self.multidegree.get() {
            return Ok(m.clone());
        }
        let m = self.source.nvars() - 1;
        let base = self.base_locus().clone();
        let mut out = vec![1i64];
        for i in 1..=m {
            out.push(self.projective_degree(i, &base)?);
        }
        let _ = self.multidegree.set(out.clone());
        Ok(out)
    }

    fn projective_degree(&self, i: usize, base: &IdealHandle<F>) -> Result<i64> {
        let field = self.source.field();
        let m = self.source.nvars() - 1;
        let mut rng = stage_rng(self.seed, &format!("multidegree-{i}"));
        for _ in 0..RETRIES {
            let (sub, lin) = if i == m {
                (self.source.clone(), self.source.vars())
            } else {
                self.random_subspace(i, &mut rng)
            };
            let combos: Vec<Poly<F>> = (0..i)
                .map(|_| {
                    self.forms.iter().fold(self.source.zero(), |acc, f| {
                        acc.add(&f.scale(&field.random(&mut rng, WINDOW)))
                    })
                })
                .collect();
            let restricted: Vec<Poly<F>> = combos.iter().map(|f| f.compose(&lin)).collect();
            let ideal = IdealHandle::new(&sub, restricted)?;
            let base_r: Vec<Poly<F>> = base.gens().iter().map(|g| g.compose(&lin)).collect();
            let base_r = IdealHandle::new(&sub, base_r)?;
            let res = if base_r.is_zero() {
                continue;
            } else {
                let g = random_element_of(&base_r, &mut rng);
                if g.is_zero() {
                    continue;
                }
                ideal.saturate_by(&g)?
            };
            let (dim, deg) = res.dim_degree();
            if dim == 0 {
                return Ok(deg);
            }
            if dim == -1 {
                return Ok(0);
            }
        }
        Err(Error::genericity(&format!("multidegree d_{i}"), RETRIES, "restriction not zero-dimensional"))
    }

    /// Degree of the generic fibre, from the fibre over the image of a
    /// random source point.
    pub fn map_degree(&self) -> Result<i64> {
        let field = self.source.field();
        let base = self.base_locus().clone();
        let mut rng = stage_rng(self.seed, "map-degree");
        for _ in 0..RETRIES {
            let a: Vec<F::Elem> = (0..self.source.nvars()).map(|_| field.random(&mut rng, WINDOW)).collect();
            let b = self.evaluate(&a)?;
            if b.iter().all(|c| field.is_zero(c)) {
                continue;
            }
            let ker = linalg::kernel(field, &vec![b.clone()], self.target.nvars());
            let gens: Vec<Poly<F>> = ker
                .iter()
                .map(|v| {
                    self.forms
                        .iter()
                        .zip(v)
                        .fold(self.source.zero(), |acc, (f, c)| acc.add(&f.scale(c)))
                })
                .collect();
            let fibre = IdealHandle::new(&self.source, gens)?;
            let g = random_element_of(&base, &mut rng);
            let fibre = if g.is_zero() { fibre.saturate_irrelevant(&mut rng)? } else { fibre.saturate_by(&g)? };
            let (dim, deg) = fibre.dim_degree();
            return match dim {
                0 => Ok(deg),
                d if d > 0 => Err(Error::NotGenericallyFinite),
                _ => continue,
            };
        }
        Err(Error::genericity("map degree", RETRIES, "empty fibre over sampled points"))
    }

    /// `φ^*(J)`: substitute the forms and saturate by the base locus.
    pub fn pullback(&self, j: &IdealHandle<F>) -> Result<IdealHandle<F>> {
        if !j.ring().same_as(&self.target) {
            return Err(Error::RingMismatch("pullback of an ideal outside the target".into()));
        }
        let gens = j
            .gens()
            .iter()
            .map(|g| g.substitute(&self.forms))
            .collect::<Result<Vec<_>>>()?;
        let pulled = IdealHandle::new(&self.source, gens)?;
        if pulled.is_zero() {
            return Ok(pulled);
        }
        let mut rng = stage_rng(self.seed, "pullback");
        let g = random_element_of(self.base_locus(), &mut rng);
        if g.is_zero() {
            return pulled.saturate_irrelevant(&mut rng);
        }
        pulled.saturate_by(&g)
    }

    /// Degree of the inverse of a Cremona transformation: `d_{n-1}`.
    pub fn inverse_degree_of_cremona(&self) -> Result<i64> {
        if self.source.nvars() != self.target.nvars() {
            return Err(Error::InvalidArgument("not a self-map of a projective space".into()));
        }
        let deg = self.map_degree()?;
        if deg != 1 {
            return Err(Error::NotBirational(deg));
        }
        let md = self.multidegree()?;
        Ok(md[md.len() - 2])
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            source_dim: self.source.nvars() - 1,
            target_dim: self.target.nvars() - 1,
            forms: self.forms.iter().map(to_json).collect(),
            multidegree: self.multidegree.get().cloned(),
        }
    }
}

/// JSON descriptor of a rational map.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub source_dim: usize,
    pub target_dim: usize,
    pub forms: Vec<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multidegree: Option<Vec<i64>>,
}

/// Number of forms per degree in a list.
pub fn degree_profile<F: Field>(forms: &[Poly<F>]) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for f in forms {
        *out.entry(f.degree().max(0) as u32).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::minors;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn veronese_conic() {
        let p1 = Ring::indexed(Rationals, "s", 2);
        let (s, t) = (p1.var(0), p1.var(1));
        let phi = RationalMap::to_projective(&p1, vec![s.pow(2), s.mul(&t), t.pow(2)], "y").unwrap();
        let eqs = phi.image_up_to_degree(2).unwrap();
        assert_eq!(eqs.len(), 1);
        let y = phi.target().vars();
        let expect = y[0].mul(&y[2]).sub(&y[1].pow(2));
        assert!(eqs[0].make_monic() == expect.make_monic());
        for g in &eqs {
            assert!(g.substitute(phi.forms()).unwrap().is_zero());
        }
    }

    #[test]
    fn twisted_cubic_by_graph() {
        let p1 = Ring::indexed(fp(), "s", 2);
        let (s, t) = (p1.var(0), p1.var(1));
        let phi = RationalMap::to_projective(&p1, vec![s.pow(3), s.pow(2).mul(&t), s.mul(&t.pow(2)), t.pow(3)], "y").unwrap();
        let img = phi.image_graph(&IdealHandle::zero(&p1)).unwrap();
        assert_eq!(img.dim_degree(), (1, 3));
        let y = phi.target().vars();
        let m = vec![
            vec![y[0].clone(), y[1].clone(), y[2].clone()],
            vec![y[1].clone(), y[2].clone(), y[3].clone()],
        ];
        let oracle = IdealHandle::new(phi.target(), minors(&m, 2)).unwrap();
        assert!(img.equals(&oracle));
        let interp = IdealHandle::new(phi.target(), phi.image_up_to_degree(2).unwrap()).unwrap();
        assert!(interp.equals(&oracle));
    }

    #[test]
    fn image_of_a_point() {
        let p2 = Ring::indexed(fp(), "x", 3);
        let x = p2.vars();
        let phi = RationalMap::to_projective(&p2, vec![x[0].pow(2), x[0].mul(&x[1]), x[1].pow(2), x[2].pow(2)], "y").unwrap();
        let f = fp();
        let pt: Vec<u32> = vec![1, 2, 3];
        let pi = crate::ideals::point_ideal(&p2, &pt).unwrap();
        let img = phi.image_graph(&pi).unwrap();
        assert_eq!(img.dim_degree(), (0, 1));
        let lin = phi.image_of_up_to_degree(&pi, 1).unwrap();
        assert_eq!(lin.len(), 3);
        let _ = f;
    }

    #[test]
    fn identity_and_cremona() {
        let p2 = Ring::indexed(fp(), "x", 3);
        let id = RationalMap::identity(&p2);
        assert!(id.base_locus().is_unit());
        assert_eq!(id.multidegree().unwrap(), vec![1, 1, 1]);
        let x = p2.vars();
        let cremona = RationalMap::new(&p2, &p2, vec![x[1].mul(&x[2]), x[0].mul(&x[2]), x[0].mul(&x[1])]).unwrap();
        assert_eq!(cremona.multidegree().unwrap(), vec![1, 2, 1]);
        assert_eq!(cremona.map_degree().unwrap(), 1);
        assert_eq!(cremona.inverse_degree_of_cremona().unwrap(), 2);
    }

    #[test]
    fn identity_of_p5() {
        let p5 = Ring::indexed(fp(), "x", 6);
        assert_eq!(RationalMap::identity(&p5).multidegree().unwrap(), vec![1; 6]);
    }

    #[test]
    fn double_cover_of_the_line() {
        let p1 = Ring::indexed(fp(), "s", 2);
        let phi = RationalMap::to_projective(&p1, vec![p1.var(0).pow(2), p1.var(1).pow(2)], "y").unwrap();
        assert_eq!(phi.map_degree().unwrap(), 2);
    }

    #[test]
    fn pullbacks() {
        let p2 = Ring::indexed(fp(), "x", 3);
        let id = RationalMap::identity(&p2);
        assert!(id.pullback(&IdealHandle::unit(&p2)).unwrap().is_unit());
        let x = p2.vars();
        let j = IdealHandle::new(&p2, vec![x[0].pow(2), x[0].mul(&x[1])]).unwrap();
        assert!(id.pullback(&j).unwrap().equals(&j));
        // the embedded point at the base point of the Cremona map goes away
        let cremona = RationalMap::new(&p2, &p2, vec![x[1].mul(&x[2]), x[0].mul(&x[2]), x[0].mul(&x[1])]).unwrap();
        let y = p2.vars();
        let line = IdealHandle::new(&p2, vec![y[0].clone()]).unwrap();
        let pulled = cremona.pullback(&line).unwrap();
        assert!(pulled.equals(&IdealHandle::new(&p2, vec![x[1].mul(&x[2])]).unwrap()));
    }
}
