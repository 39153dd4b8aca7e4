//! The 5-secant conic through a point: secant cone, cone of lines in the
//! image of the cubic map, the extra line and its pullback; plus sampling
//! of smooth and nodal cubics through a surface.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideals::{point_ideal, random_element_of, IdealHandle};
use crate::linalg;
use crate::maps::{RationalMap, RETRIES};
use crate::poly::{minors, Poly, Ring};
use crate::rng::{stage_rng, sub_seed, WINDOW};
use crate::surfaces::{SurfaceId, SurfaceInstance};

/// Curves of degree `e` meeting a surface in a scheme of length `r·e - 1`,
/// cut out residually by hypersurfaces of degree `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceSpec {
    pub r: u32,
    pub e: u32,
    pub secancy: u32,
}

impl CongruenceSpec {
    pub fn new(r: u32, e: u32) -> Self {
        CongruenceSpec { r, e, secancy: r * e - 1 }
    }

    pub fn conics_by_cubics() -> Self {
        Self::new(3, 2)
    }
}

/// Outcome of one trial of the conic construction at a random point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceCertificate {
    pub surface_id: Option<SurfaceId>,
    pub field_char: u64,
    pub seed: u64,
    pub trial: usize,
    pub point: Vec<String>,
    pub secant_line_count: i64,
    pub lines_in_z: i64,
    pub extra_line_degree: i64,
    pub conic_dim_deg: (i64, i64),
    pub intersection_length: i64,
    pub unique: bool,
    pub passed: bool,
    /// Degree cap of the equations of the image used for the cone of lines.
    pub cap: u32,
    pub failed_stage: Option<String>,
    /// Milliseconds per stage; the only field that differs between reruns.
    #[serde(default)]
    pub timings_ms: BTreeMap<String, u64>,
}

impl CongruenceCertificate {
    /// The integers every trial must reproduce:
    /// `(secant lines, lines in Z, extra line, conic, length)`.
    pub fn counts(&self) -> (i64, i64, i64, (i64, i64), i64) {
        (
            self.secant_line_count,
            self.lines_in_z,
            self.extra_line_degree,
            self.conic_dim_deg,
            self.intersection_length,
        )
    }

    /// Copy without the timing data, for reproducibility comparisons.
    pub fn without_timings(&self) -> Self {
        CongruenceCertificate {
            timings_ms: BTreeMap::new(),
            ..self.clone()
        }
    }

    fn evaluate_pass(&mut self, spec: &CongruenceSpec) {
        self.unique = self.extra_line_degree == 1;
        self.passed = self.failed_stage.is_none()
            && self.extra_line_degree == 1
            && self.conic_dim_deg == (1, spec.e as i64)
            && self.intersection_length == spec.secancy as i64
            && self.lines_in_z == self.secant_line_count + 1;
    }
}

/// Basis of `I_d`, from the products of the generators with monomials.
pub fn graded_piece_basis<F: Field>(ideal: &IdealHandle<F>, d: u32) -> Vec<Poly<F>> {
    let ring = ideal.ring();
    let field = ring.field();
    let mut cands = Vec::new();
    for g in ideal.gens() {
        let dg = g.weighted_degree();
        if dg < 0 || dg as u32 > d {
            continue;
        }
        for m in ring.monomials_of_degree(d - dg as u32) {
            cands.push(g.mul_term(&field.one(), &m));
        }
    }
    let monos = ring.monomials_of_degree(d);
    let index: crate::poly::FxHashMap<_, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let rows: Vec<Vec<F::Elem>> = cands.iter().map(|p| p.coefficients_on(&index, monos.len())).collect();
    linalg::row_basis(field, &rows)
        .into_iter()
        .map(|row| {
            let terms = row
                .into_iter()
                .zip(&monos)
                .filter(|(c, _)| !field.is_zero(c))
                .map(|(c, m)| (c, *m))
                .collect();
            Poly::from_terms(ring, terms)
        })
        .collect()
}

/// Coordinates centred at a point: `x = B·u` with `B = [p | e_j, j ≠ pivot]`.
/// Returns the forms `x_i(u)` and `u_j(x)`.
pub fn recentre<F: Field>(ring: &Arc<Ring<F>>, p: &[F::Elem]) -> Result<(Vec<Poly<F>>, Vec<Poly<F>>)> {
    let field = ring.field();
    let n = ring.nvars();
    let piv = p
        .iter()
        .position(|c| !field.is_zero(c))
        .ok_or_else(|| Error::InvalidArgument("zero vector is not a point".into()))?;
    let mut cols: Vec<Vec<F::Elem>> = vec![p.to_vec()];
    for j in (0..n).filter(|&j| j != piv) {
        let mut e = vec![field.zero(); n];
        e[j] = field.one();
        cols.push(e);
    }
    // b[i][j] = i-th coordinate of the j-th column
    let b: Vec<Vec<F::Elem>> = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
    let binv = linalg::inverse(field, &b).expect("columns form a basis");
    let x_of_u = b.iter().map(|row| ring.linear_form(row)).collect();
    let u_of_x = binv.iter().map(|row| ring.linear_form(row)).collect();
    Ok((x_of_u, u_of_x))
}

/// Splits a form by the exponent of the first variable: entry `k` collects
/// the terms with `u0^k`, divided by `u0^k`.
fn split_by_first<F: Field>(f: &Poly<F>) -> Vec<Poly<F>> {
    let ring = f.ring();
    let deg = f.degree().max(0) as usize;
    let mut parts: Vec<Vec<(F::Elem, crate::poly::Mono)>> = vec![Vec::new(); deg + 1];
    let mut e0 = vec![0u32; ring.nvars()];
    for (c, m) in f.terms() {
        let k = m.exp(0);
        e0[0] = k;
        parts[k as usize].push((c.clone(), m.div(&ring.mono(&e0))));
    }
    parts.into_iter().map(|t| Poly::from_terms(ring, t)).collect()
}

/// Removes the embedded structure a cone may carry at its vertex, by
/// saturating with a random linear form through the vertex (`u_of_x[1..]`
/// are the coordinates vanishing there).
fn clear_vertex<F: Field>(cone: IdealHandle<F>, u_of_x: &[Poly<F>], seed: u64) -> Result<IdealHandle<F>> {
    if cone.is_zero() {
        return Ok(cone);
    }
    let field = cone.field().clone();
    let mut rng = stage_rng(seed, "cone-vertex");
    let l = u_of_x[1..]
        .iter()
        .fold(cone.ring().zero(), |acc, u| acc.add(&u.scale(&field.random(&mut rng, WINDOW))));
    if l.is_zero() {
        return Ok(cone);
    }
    cone.saturate_by(&l)
}

/// Cone of lines through `z` contained in `V(forms)`: in coordinates
/// centred at `z`, the coefficients `G_k` of `G(s·z + t·w)` for `k ≥ 1`,
/// moved back to the original coordinates.
pub fn cone_of_lines<F: Field>(z: &[F::Elem], forms: &[Poly<F>]) -> Result<IdealHandle<F>> {
    let Some(first) = forms.first() else {
        return Err(Error::InvalidArgument("no equations".into()));
    };
    let ring = first.ring().clone();
    let field = ring.field();
    for g in forms {
        if !field.is_zero(&g.evaluate(z)?) {
            return Err(Error::PointNotOnVariety);
        }
    }
    let (x_of_u, u_of_x) = recentre(&ring, z)?;
    let mut gens = Vec::new();
    for g in forms {
        let gu = g.compose(&x_of_u);
        let parts = split_by_first(&gu);
        // parts[deg] is G(z) = 0; the rest only involve the direction
        for h in parts.into_iter().rev().skip(1) {
            if !h.is_zero() {
                gens.push(h.compose(&u_of_x));
            }
        }
    }
    clear_vertex(IdealHandle::new(&ring, gens)?, &u_of_x, 0)
}

/// Secant lines to the surface through `p`, as a cone with vertex `p`.
///
/// With `K` the cubics through the surface and `p`, written in coordinates
/// centred at `p` as `K(s·p + t·w) = s²t·A(w) + st²·B(w) + t³·C(w)`, a line
/// of direction `w` meets the surface twice off `p` exactly when the binary
/// quadrics `A_i s² + B_i st + C_i t²` are all proportional, i.e. on the
/// 2×2 minors of the matrix with rows `(A_i, B_i, C_i)`.
pub fn secant_cone<F: Field>(cubics: &[Poly<F>], p: &[F::Elem]) -> Result<IdealHandle<F>> {
    let Some(first) = cubics.first() else {
        return Err(Error::InvalidArgument("no cubics through the surface".into()));
    };
    let ring = first.ring().clone();
    let field = ring.field();
    let vals: Vec<F::Elem> = cubics.iter().map(|g| g.evaluate(p)).collect::<Result<_>>()?;
    let Some(piv) = vals.iter().position(|v| !field.is_zero(v)) else {
        return Err(Error::PointOnSurface);
    };
    let through_p: Vec<Poly<F>> = cubics
        .iter()
        .zip(&vals)
        .enumerate()
        .filter(|(i, _)| *i != piv)
        .map(|(_, (g, v))| g.scale(&vals[piv]).sub(&cubics[piv].scale(v)))
        .collect();
    let (x_of_u, u_of_x) = recentre(&ring, p)?;
    let rows: Vec<Vec<Poly<F>>> = through_p
        .iter()
        .map(|k| {
            let parts = split_by_first(&k.compose(&x_of_u));
            let get = |i: usize| parts.get(i).cloned().unwrap_or_else(|| ring.zero());
            vec![get(2), get(1), get(0)]
        })
        .collect();
    let gens: Vec<Poly<F>> = minors(&rows, 2).iter().map(|m| m.compose(&u_of_x)).collect();
    clear_vertex(IdealHandle::new(&ring, gens)?, &u_of_x, 0)
}

/// Reusable data of the construction for one surface: the cubic map and
/// the equations of its image.
pub struct CongruencePipeline<F: Field> {
    pub surface_id: Option<SurfaceId>,
    pub spec: CongruenceSpec,
    pub ideal: IdealHandle<F>,
    pub cubics: Vec<Poly<F>>,
    pub phi: RationalMap<F>,
    pub cap: u32,
    pub z_equations: Vec<Poly<F>>,
    pub seed: u64,
}

impl<F: Field> CongruencePipeline<F> {
    /// `ideal` is the saturated ideal of the surface.
    pub fn new(surface_id: Option<SurfaceId>, ideal: IdealHandle<F>, seed: u64, cap: u32) -> Result<Self> {
        let cubics = graded_piece_basis(&ideal, 3);
        if cubics.len() < 2 {
            return Err(Error::InvalidArgument("fewer than two cubics through the surface".into()));
        }
        let phi = RationalMap::to_projective(ideal.ring(), cubics.clone(), "y")?
            .with_seed(sub_seed(seed, "cubic-map"))
            .with_base(ideal.clone());
        let z_equations = phi.image_up_to_degree(cap)?;
        Ok(CongruencePipeline {
            surface_id,
            spec: CongruenceSpec::conics_by_cubics(),
            ideal,
            cubics,
            phi,
            cap,
            z_equations,
            seed,
        })
    }

    pub fn from_surface(surface: &SurfaceInstance<F>, cap: u32) -> Result<Self> {
        Self::new(Some(surface.recipe.id), surface.ideal.clone(), surface.seed, cap)
    }

    pub fn field(&self) -> &F {
        self.ideal.field()
    }

    /// A random point off the surface.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Vec<F::Elem>> {
        let field = self.field();
        for _ in 0..RETRIES {
            let p: Vec<F::Elem> = (0..self.ideal.ring().nvars()).map(|_| field.random(rng, WINDOW)).collect();
            let on = self
                .cubics
                .iter()
                .all(|g| g.evaluate(&p).map(|v| field.is_zero(&v)).unwrap_or(true));
            if !on {
                return Ok(p);
            }
        }
        Err(Error::genericity("random point", RETRIES, "every sample lies on the surface"))
    }

    pub fn secant_cone(&self, p: &[F::Elem]) -> Result<IdealHandle<F>> {
        secant_cone(&self.cubics, p)
    }

    /// Equations of `φ(E)` up to degree 2 (E a union of lines through p).
    pub fn image_of(&self, e: &IdealHandle<F>, cap: u32) -> Result<IdealHandle<F>> {
        let gens = self.phi.image_of_up_to_degree(e, cap)?;
        IdealHandle::new(self.phi.target(), gens)
    }

    /// Runs the construction at `p`; returns the conic (when reached) and
    /// the certificate.
    pub fn five_secant_conic(&self, p: &[F::Elem], trial: usize) -> (Option<IdealHandle<F>>, CongruenceCertificate) {
        let field = self.field();
        let mut cert = CongruenceCertificate {
            surface_id: self.surface_id,
            field_char: field.characteristic(),
            seed: self.seed,
            trial,
            point: p.iter().map(|c| field.format(c)).collect(),
            secant_line_count: 0,
            lines_in_z: 0,
            extra_line_degree: 0,
            conic_dim_deg: (-1, 0),
            intersection_length: 0,
            unique: false,
            passed: false,
            cap: self.cap,
            failed_stage: None,
            timings_ms: BTreeMap::new(),
        };
        let conic = self.run(p, trial, &mut cert);
        if let Err(e) = &conic {
            if cert.failed_stage.is_none() {
                cert.failed_stage = Some(format!("error: {e}"));
            }
        }
        cert.evaluate_pass(&self.spec);
        (conic.ok().flatten(), cert)
    }

    fn run(&self, p: &[F::Elem], trial: usize, cert: &mut CongruenceCertificate) -> Result<Option<IdealHandle<F>>> {
        let mut rng = stage_rng(self.seed, &format!("trial-{trial}"));
        let mut clock = Instant::now();
        let mut lap = |cert: &mut CongruenceCertificate, name: &str| {
            cert.timings_ms.insert(name.to_string(), clock.elapsed().as_millis() as u64);
            clock = Instant::now();
        };
        let fail = |cert: &mut CongruenceCertificate, stage: &str, detail: String| {
            cert.failed_stage = Some(format!("{stage}: {detail}"));
            Ok(None)
        };

        let e = self.secant_cone(p)?;
        let (dim_e, deg_e) = e.dim_degree();
        lap(cert, "secant_cone");
        if dim_e != 1 {
            return fail(cert, "secant cone", format!("dim/degree ({dim_e}, {deg_e})"));
        }
        cert.secant_line_count = deg_e;

        let z = self.phi.evaluate(p)?;
        let v = cone_of_lines(&z, &self.z_equations)?;
        let (dim_v, deg_v) = v.dim_degree();
        lap(cert, "cone_of_lines");
        if dim_v != 1 {
            return fail(cert, "cone of lines", format!("dim/degree ({dim_v}, {deg_v})"));
        }
        cert.lines_in_z = deg_v;

        let phi_e = self.image_of(&e, 2)?;
        let g = random_element_of(&phi_e, &mut rng);
        if g.is_zero() {
            return fail(cert, "extra line", "image of the secant cone is everything".into());
        }
        let l = v.saturate_by(&g)?;
        let (dim_l, deg_l) = l.dim_degree();
        lap(cert, "extra_line");
        if dim_l != 1 {
            return fail(cert, "extra line", format!("dim/degree ({dim_l}, {deg_l})"));
        }
        cert.extra_line_degree = deg_l;
        if deg_l != 1 {
            return fail(cert, "extra line", format!("degree {deg_l}"));
        }

        let linear: Vec<Poly<F>> = l.gb().elements().iter().filter(|h| h.degree() == 1).cloned().collect();
        let l_lin = IdealHandle::new(self.phi.target(), linear)?;
        let c = self.phi.pullback(&l_lin)?;
        cert.conic_dim_deg = c.dim_degree();
        lap(cert, "conic");
        let through_p = c
            .gens()
            .iter()
            .all(|h| h.evaluate(p).map(|x| self.field().is_zero(&x)).unwrap_or(false));
        if !through_p {
            return fail(cert, "conic", "does not pass through the point".into());
        }

        let meet = c.sum(&self.ideal)?;
        let (dim_m, deg_m) = meet.dim_degree();
        lap(cert, "intersection");
        if dim_m != 0 {
            return fail(cert, "intersection", format!("dim/degree ({dim_m}, {deg_m})"));
        }
        cert.intersection_length = deg_m;
        Ok(Some(c))
    }

    /// Cone of lines at `φ(p)` from the equations of degree ≤ `cap`.
    pub fn cone_of_lines_with_cap(&self, p: &[F::Elem], cap: u32) -> Result<IdealHandle<F>> {
        let eqs = if cap == self.cap { self.z_equations.clone() } else { self.phi.image_up_to_degree(cap)? };
        cone_of_lines(&self.phi.evaluate(p)?, &eqs)
    }

    /// Runs `trials` independent trials.
    pub fn verify(&self, trials: usize) -> Result<Vec<CongruenceCertificate>> {
        if trials == 0 {
            return Err(Error::InvalidArgument("at least one trial".into()));
        }
        (0..trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = stage_rng(self.seed, &format!("point-{t}"));
                let p = self.random_point(&mut rng)?;
                Ok(self.five_secant_conic(&p, t).1)
            })
            .collect()
    }
}

/// Degree cap for the equations of the image: quadrics suffice unless the
/// image lies on none, as for the surface with ten triple points.
pub fn default_cap(id: Option<SurfaceId>) -> u32 {
    match id {
        Some(SurfaceId::S38) => 3,
        _ => 2,
    }
}

/// Builds the pipeline for a surface and runs `trials` trials.
pub fn verify_congruence<F: Field>(
    surface: &SurfaceInstance<F>,
    trials: usize,
    cap: u32,
) -> Result<Vec<CongruenceCertificate>> {
    CongruencePipeline::from_surface(surface, cap)?.verify(trials)
}

/// Singular locus of a hypersurface, with its support tested against `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub dim_degree: (i64, i64),
    /// The singular locus is supported exactly at the expected point.
    pub supported_at_point: bool,
}

/// `(F, ∂F)` saturated, and whether it is supported at `q` alone.
pub fn singularity_report<F: Field>(f: &Poly<F>, q: Option<&[F::Elem]>) -> Result<SingularityReport> {
    let ring = f.ring();
    let sing = IdealHandle::new(ring, vec![f.clone()])?.singular_locus(1)?;
    let (dim, deg) = sing.dim_degree();
    let supported_at_point = match q {
        Some(q) if dim == 0 => {
            // every linear form through q is nilpotent modulo the locus
            let sat = sing.saturate_irrelevant(&mut stage_rng(0, "singular-support"))?;
            let pq = point_ideal(ring, q)?;
            pq.gens().iter().all(|l| sat.contains(&l.pow(deg.max(1) as u32)))
        }
        _ => false,
    };
    Ok(SingularityReport {
        dim_degree: (dim, deg),
        supported_at_point,
    })
}

pub fn is_smooth<F: Field>(f: &Poly<F>) -> Result<bool> {
    Ok(singularity_report(f, None)?.dim_degree.0 == -1)
}

/// A random cubic through the surface, certified smooth.
pub fn random_smooth_cubic<F: Field>(ideal: &IdealHandle<F>, seed: u64) -> Result<Poly<F>> {
    random_smooth_cubic_by(ideal, seed, is_smooth)
}

/// [`random_smooth_cubic`] with the smoothness test supplied by the caller;
/// over ℚ a smooth reduction modulo a prime is a cheaper certificate.
pub fn random_smooth_cubic_by<F: Field>(
    ideal: &IdealHandle<F>,
    seed: u64,
    smooth: impl Fn(&Poly<F>) -> Result<bool>,
) -> Result<Poly<F>> {
    let cubics = graded_piece_basis(ideal, 3);
    if cubics.is_empty() {
        return Err(Error::InvalidArgument("no cubics through the surface".into()));
    }
    let field = ideal.field();
    let mut rng = stage_rng(seed, "smooth-cubic");
    for _ in 0..RETRIES {
        let f = cubics
            .iter()
            .fold(ideal.ring().zero(), |acc, g| acc.add(&g.scale(&field.random(&mut rng, WINDOW))));
        if !f.is_zero() && smooth(&f)? {
            return Ok(f);
        }
    }
    Err(Error::genericity("smooth cubic", RETRIES, "every sampled cubic is singular"))
}

/// A random cubic through the surface singular at `q`, certified to have
/// an ordinary double point at `q` and no other singularity.
pub fn random_nodal_cubic<F: Field>(ideal: &IdealHandle<F>, q: &[F::Elem], seed: u64) -> Result<Poly<F>> {
    random_nodal_cubic_by(ideal, q, seed, |f| singularity_report(f, Some(q)))
}

/// [`random_nodal_cubic`] with the singularity report supplied by the caller.
pub fn random_nodal_cubic_by<F: Field>(
    ideal: &IdealHandle<F>,
    q: &[F::Elem],
    seed: u64,
    report: impl Fn(&Poly<F>) -> Result<SingularityReport>,
) -> Result<Poly<F>> {
    let cubics = graded_piece_basis(ideal, 3);
    let field = ideal.field();
    if cubics.iter().all(|g| field.is_zero(&g.evaluate(q).unwrap_or_else(|_| field.zero()))) {
        return Err(Error::PointOnSurface);
    }
    let n = ideal.ring().nvars();
    // rows: ∂_i of each cubic at q; we need combinations killing all of them
    let grads: Vec<Vec<F::Elem>> = cubics
        .iter()
        .map(|g| (0..n).map(|i| g.partial(i).and_then(|d| d.evaluate(q))).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let cond: Vec<Vec<F::Elem>> = (0..n).map(|i| grads.iter().map(|row| row[i].clone()).collect()).collect();
    let ker = linalg::kernel(field, &cond, cubics.len());
    if ker.is_empty() {
        return Err(Error::genericity("nodal cubic", 0, "no cubic through the surface is singular at the point"));
    }
    let mut rng = stage_rng(seed, "nodal-cubic");
    for _ in 0..RETRIES {
        let weights: Vec<F::Elem> = ker.iter().map(|_| field.random(&mut rng, WINDOW)).collect();
        let coeffs: Vec<F::Elem> = (0..cubics.len())
            .map(|j| {
                ker.iter()
                    .zip(&weights)
                    .fold(field.zero(), |acc, (v, w)| field.add(&acc, &field.mul(&v[j], w)))
            })
            .collect();
        let f = cubics
            .iter()
            .zip(&coeffs)
            .fold(ideal.ring().zero(), |acc, (g, c)| acc.add(&g.scale(c)));
        if f.is_zero() {
            continue;
        }
        let rep = report(&f)?;
        if rep.dim_degree == (0, 1) && rep.supported_at_point {
            return Ok(f);
        }
    }
    Err(Error::genericity("nodal cubic", RETRIES, "singular locus larger than one node"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::surfaces::{build_surface, SurfaceRecipe};

    fn fp() -> PrimeField {
        PrimeField::new(1_000_003).unwrap()
    }

    #[test]
    fn conics_by_cubics_relation() {
        let s = CongruenceSpec::conics_by_cubics();
        assert_eq!(s.secancy, 5);
        assert_eq!(CongruenceSpec::new(3, 3).secancy, 8);
    }

    #[test]
    fn lines_on_a_quadric_surface() {
        let r = Ring::indexed(Rationals, "x", 4);
        let x = r.vars();
        let q = x[0].mul(&x[3]).sub(&x[1].mul(&x[2]));
        let z: Vec<_> = [1, 0, 0, 0].iter().map(|&c| Rationals.from_i64(c)).collect();
        let v = cone_of_lines(&z, &[q.clone()]).unwrap();
        assert_eq!(v.dim_degree(), (1, 2));
        // away from the coordinate point too
        let z2: Vec<_> = [1, 2, 3, 6].iter().map(|&c| Rationals.from_i64(c)).collect();
        assert_eq!(cone_of_lines(&z2, &[q.clone()]).unwrap().dim_degree(), (1, 2));
        let off: Vec<_> = [1, 1, 1, 2].iter().map(|&c| Rationals.from_i64(c)).collect();
        assert!(matches!(cone_of_lines(&off, &[q]), Err(Error::PointNotOnVariety)));
    }

    #[test]
    fn recentred_coordinates_are_inverse() {
        let r = Ring::indexed(fp(), "x", 4);
        let p = vec![0u32, 5, 7, 1];
        let (xu, ux) = recentre(&r, &p).unwrap();
        for i in 0..4 {
            assert_eq!(r.var(i).compose(&xu).compose(&ux), r.var(i));
        }
        // u = e0 maps to p
        let e0 = vec![1u32, 0, 0, 0];
        let img: Vec<u32> = xu.iter().map(|f| f.evaluate(&e0).unwrap()).collect();
        assert_eq!(img, p);
    }

    #[test]
    fn graded_pieces_of_the_twisted_cubic() {
        let r = Ring::indexed(fp(), "x", 4);
        let x = r.vars();
        let m = vec![
            vec![x[0].clone(), x[1].clone(), x[2].clone()],
            vec![x[1].clone(), x[2].clone(), x[3].clone()],
        ];
        let i = IdealHandle::new(&r, minors(&m, 2)).unwrap();
        assert_eq!(graded_piece_basis(&i, 2).len(), 3);
        // 20 cubics, 10 on the curve
        assert_eq!(graded_piece_basis(&i, 3).len(), 10);
        assert_eq!(i.graded_piece_dim(3), 10);
    }

    #[test]
    fn fermat_cubic_is_smooth() {
        let r = Ring::indexed(Rationals, "x", 6);
        let f = r.vars().iter().fold(r.zero(), |acc, x| acc.add(&x.pow(3)));
        assert!(is_smooth(&f).unwrap());
    }

    #[test]
    fn cone_and_reducible_fixtures() {
        let f = fp();
        let r = Ring::indexed(f.clone(), "x", 6);
        let x = r.vars();
        // cone over the Fermat cubic threefold, vertex e0
        let cone = (1..6).fold(r.zero(), |acc, i| acc.add(&x[i].pow(3)));
        let e0 = vec![1u32, 0, 0, 0, 0, 0];
        let rep = singularity_report(&cone, Some(&e0)).unwrap();
        assert_eq!(rep.dim_degree.0, 0);
        assert!(rep.supported_at_point);
        // quadric times hyperplane: singular along a threefold
        let q = (0..6).fold(r.zero(), |acc, i| acc.add(&x[i].pow(2)));
        let red = q.mul(&x[0].add(&x[1]));
        assert!(singularity_report(&red, None).unwrap().dim_degree.0 >= 3);
    }

    #[test]
    fn s26_trial_over_a_prime() {
        let s = build_surface(&SurfaceRecipe::of(SurfaceId::S26), fp(), 3).unwrap();
        let pipe = CongruencePipeline::from_surface(&s, 2).unwrap();
        let certs = pipe.verify(1).unwrap();
        let c = &certs[0];
        assert_eq!(c.counts(), (5, 6, 1, (1, 2), 5), "{c:?}");
        assert!(c.passed && c.unique);
    }
}
