//! Graded modules over `A = R/I` given by presentations, and the degree-t
//! part of `Hom_A(M, A)`; with `M` the conormal module this gives h⁰ of the
//! normal sheaf.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::{syzygies, ModuleElem};
use crate::ideals::{minimal_generators, IdealHandle};
use crate::linalg;
use crate::poly::{FxHashMap, Mono, Poly, Ring};

/// `coker(⊕ R(-e_j) → ⊕ R(-d_i))` as a module over `A = R/I`; relations
/// are columns whose i-th entry has degree `e_j - d_i`.
#[derive(Clone, Debug)]
pub struct GradedModule<F: Field> {
    pub base: IdealHandle<F>,
    pub degrees: Vec<i64>,
    pub relations: Vec<ModuleElem<F>>,
}

impl<F: Field> GradedModule<F> {
    /// The free module `⊕ A(-d_i)`.
    pub fn free(base: IdealHandle<F>, degrees: Vec<i64>) -> Self {
        GradedModule {
            base,
            degrees,
            relations: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        self.base.ring()
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
}

/// Writes `f` as `Σ c_i g_i` with homogeneous `c_i`, by linear algebra in
/// degree `deg f`.
pub fn express_in<F: Field>(gens: &[Poly<F>], f: &Poly<F>) -> Option<Vec<Poly<F>>> {
    let ring = f.ring();
    let field = ring.field();
    let d = f.degree();
    if d < 0 {
        return Some(vec![ring.zero(); gens.len()]);
    }
    let mut cols: Vec<(usize, Mono, Poly<F>)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let dg = g.degree();
        if dg < 0 || dg > d {
            continue;
        }
        for m in ring.monomials_of_degree((d - dg) as u32) {
            cols.push((i, m, g.mul_term(&field.one(), &m)));
        }
    }
    let monos = ring.monomials_of_degree(d as u32);
    let index: FxHashMap<Mono, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    // augmented system [cols | f]
    let n = cols.len();
    let mut mat = vec![vec![field.zero(); n + 1]; monos.len()];
    for (j, (_, _, p)) in cols.iter().enumerate() {
        for (c, m) in p.terms() {
            mat[index[m]][j] = c.clone();
        }
    }
    for (c, m) in f.terms() {
        mat[index[m]][n] = c.clone();
    }
    let ker = linalg::kernel(field, &mat, n + 1);
    let v = ker.into_iter().find(|v| !field.is_zero(&v[n]))?;
    let scale = field.neg(&field.inv(&v[n]).expect("nonzero"));
    let mut out: Vec<Vec<(F::Elem, Mono)>> = vec![Vec::new(); gens.len()];
    for (j, (i, m, _)) in cols.iter().enumerate() {
        if !field.is_zero(&v[j]) {
            out[*i].push((field.mul(&v[j], &scale), *m));
        }
    }
    Some(out.into_iter().map(|t| Poly::from_terms(ring, t)).collect())
}

/// Presentation of `I/(I² + (F))` over `A = R/I` (of `I/I²` without `F`):
/// minimal generators of `I`, their syzygies reduced modulo `I`, and the
/// expression of `F` in the generators.
pub fn conormal_presentation<F: Field>(ideal: &IdealHandle<F>, f: Option<&Poly<F>>) -> Result<GradedModule<F>> {
    let ring = ideal.ring();
    let gens = minimal_generators(ring, ideal.gens());
    let gb = ideal.gb();
    let mut relations = Vec::new();
    for s in syzygies(&gens)? {
        let r = ModuleElem {
            comps: s.comps.iter().map(|c| gb.normal_form(c)).collect(),
        };
        if !r.is_zero() {
            relations.push(r);
        }
    }
    if let Some(f) = f {
        if !ideal.contains(f) {
            return Err(Error::NotInIdeal);
        }
        let coeffs = express_in(&gens, f).ok_or(Error::NotInIdeal)?;
        let r = ModuleElem {
            comps: coeffs.iter().map(|c| gb.normal_form(c)).collect(),
        };
        if !r.is_zero() {
            relations.push(r);
        }
    }
    Ok(GradedModule {
        base: IdealHandle::from_gb(gb.clone()),
        degrees: gens.iter().map(|g| g.degree()).collect(),
        relations,
    })
}

/// Monomials of degree `d` outside the lead ideal: a basis of `A_d`.
fn standard_monomials<F: Field>(base: &IdealHandle<F>, d: i64) -> Vec<Mono> {
    if d < 0 {
        return Vec::new();
    }
    let leads = base.gb().lead_monomials();
    base.ring()
        .monomials_of_degree(d as u32)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect()
}

/// A basis of `Hom_A(M, A)_t`, each element given by the images of the
/// generators of `M`.
pub fn hom_into_a_basis<F: Field>(m: &GradedModule<F>, t: i64) -> Vec<Vec<Poly<F>>> {
    let ring = m.ring();
    let field = ring.field();
    let gb = m.base.gb();
    let unknowns: Vec<(usize, Mono)> = m
        .degrees
        .iter()
        .enumerate()
        .flat_map(|(i, &d)| standard_monomials(&m.base, d + t).into_iter().map(move |mono| (i, mono)))
        .collect();
    let n = unknowns.len();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for r in &m.relations {
        // the image Σ r_i a_i, expanded over the normal-form monomials
        let mut index: FxHashMap<Mono, usize> = FxHashMap::default();
        let mut cols: Vec<Vec<(usize, F::Elem)>> = Vec::with_capacity(n);
        for (i, mono) in &unknowns {
            let p = gb.normal_form(&r.comps[*i].mul_term(&field.one(), mono));
            let mut col = Vec::with_capacity(p.len());
            for (c, mm) in p.terms() {
                let k = index.len();
                let k = *index.entry(*mm).or_insert(k);
                col.push((k, c.clone()));
            }
            cols.push(col);
        }
        let mut block = vec![vec![field.zero(); n]; index.len()];
        for (j, col) in cols.into_iter().enumerate() {
            for (k, c) in col {
                block[k][j] = c;
            }
        }
        rows.extend(block);
    }
    linalg::kernel(field, &rows, n)
        .into_iter()
        .map(|v| {
            let mut images: Vec<Vec<(F::Elem, Mono)>> = vec![Vec::new(); m.rank()];
            for (c, (i, mono)) in v.into_iter().zip(&unknowns) {
                if !field.is_zero(&c) {
                    images[*i].push((c, *mono));
                }
            }
            images.into_iter().map(|t| Poly::from_terms(ring, t)).collect()
        })
        .collect()
}

/// `dim_K Hom_A(M, A)_t`.
pub fn hom_into_a_degree<F: Field>(m: &GradedModule<F>, t: i64) -> usize {
    hom_into_a_basis(m, t).len()
}

/// `h⁰` of the normal sheaf of `V(I)` in P^n (no `F`) or in the
/// hypersurface `V(F)`, as `dim Hom_A(conormal, A)_0`.
pub fn h0_normal<F: Field>(ideal: &IdealHandle<F>, f: Option<&Poly<F>>) -> Result<usize> {
    Ok(hom_into_a_degree(&conormal_presentation(ideal, f)?, 0))
}
