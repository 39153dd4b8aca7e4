//! The three surface families: plane linear systems, projections, the
//! interpolated ideal in P⁵ and the numerical invariants.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldDesc};
use crate::ideals::{minimal_generators, IdealHandle};
use crate::linalg;
pub use crate::linalg::clear_denominators;
use crate::maps::{RationalMap, RETRIES};
use crate::poly::serial::{to_json, PolyJson};
use crate::poly::{Poly, Ring};
use crate::rng::{stage_rng, WINDOW};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceId {
    S14,
    S26,
    S38,
}

impl SurfaceId {
    pub const ALL: [SurfaceId; 3] = [SurfaceId::S14, SurfaceId::S26, SurfaceId::S38];

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s14" | "14" => Ok(SurfaceId::S14),
            "s26" | "26" => Ok(SurfaceId::S26),
            "s38" | "38" => Ok(SurfaceId::S38),
            _ => Err(Error::Parse(format!("unknown surface id {s:?} (expected s14, s26 or s38)"))),
        }
    }

    /// The discriminant the surface realizes.
    pub fn discriminant(self) -> i64 {
        match self {
            SurfaceId::S14 => 14,
            SurfaceId::S26 => 26,
            SurfaceId::S38 => 38,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SurfaceId::S14 => "s14",
            SurfaceId::S26 => "s26",
            SurfaceId::S38 => "s38",
        }
    }
}

impl std::fmt::Display for SurfaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProjectionStep {
    FromGeneralPoint,
    FromPointOnSecant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceRecipe {
    pub id: SurfaceId,
    pub plane_degree: u32,
    /// `(multiplicity, count)` pairs.
    pub base_points: Vec<(u32, usize)>,
    pub steps: Vec<ProjectionStep>,
}

impl SurfaceRecipe {
    pub fn of(id: SurfaceId) -> Self {
        match id {
            SurfaceId::S14 => SurfaceRecipe {
                id,
                plane_degree: 4,
                base_points: vec![(1, 8)],
                steps: vec![ProjectionStep::FromGeneralPoint],
            },
            SurfaceId::S26 => SurfaceRecipe {
                id,
                plane_degree: 3,
                base_points: vec![(1, 2)],
                steps: vec![ProjectionStep::FromPointOnSecant, ProjectionStep::FromGeneralPoint],
            },
            SurfaceId::S38 => SurfaceRecipe {
                id,
                plane_degree: 10,
                base_points: vec![(3, 10)],
                steps: vec![],
            },
        }
    }

    /// Expected dimension of the plane linear system.
    pub fn system_dimension(&self) -> usize {
        let d = self.plane_degree as usize;
        let forms = (d + 1) * (d + 2) / 2;
        let conds: usize = self.base_points.iter().map(|&(m, c)| c * (m as usize * (m as usize + 1) / 2)).sum();
        forms - conds
    }

    pub fn invariants(&self) -> SurfaceInvariants {
        match self.id {
            SurfaceId::S14 => SurfaceInvariants { d: 8, pi: 3, k2: 1, chi_top: 11, chi_o: 1, nu: 0 },
            SurfaceId::S26 => SurfaceInvariants { d: 7, pi: 1, k2: 7, chi_top: 5, chi_o: 1, nu: 1 },
            SurfaceId::S38 => SurfaceInvariants { d: 10, pi: 6, k2: -1, chi_top: 13, chi_o: 1, nu: 0 },
        }
    }

    /// Generator profile of the surface before its last projection.
    pub fn intermediate_profile(&self) -> Option<BTreeMap<u32, usize>> {
        match self.id {
            SurfaceId::S14 => Some(BTreeMap::from([(2, 7)])),
            SurfaceId::S26 => Some(BTreeMap::from([(2, 7), (3, 1)])),
            SurfaceId::S38 => None,
        }
    }

    pub fn expected_profile(&self) -> BTreeMap<u32, usize> {
        match self.id {
            SurfaceId::S14 => BTreeMap::from([(3, 13)]),
            SurfaceId::S26 => BTreeMap::from([(3, 14)]),
            SurfaceId::S38 => BTreeMap::from([(3, 10)]),
        }
    }
}

/// Numerical data of a surface and of its smooth model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub d: i64,
    /// sectional genus
    pub pi: i64,
    pub k2: i64,
    pub chi_top: i64,
    pub chi_o: i64,
    /// nodes of the embedded surface
    pub nu: i64,
}

impl SurfaceInvariants {
    /// `H·K` by adjunction.
    pub fn hk(&self) -> i64 {
        2 * self.pi - 2 - self.d
    }

    /// Numerator coefficients `[c0, c1, c2]` over 2 of the Hilbert polynomial
    /// of the embedded surface: `d/2 t² + (d/2 + 1 - π) t + χ(O) - ν`.
    pub fn hilbert_polynomial_times_two(&self) -> [i128; 3] {
        [
            2 * (self.chi_o - self.nu) as i128,
            (self.d + 2 - 2 * self.pi) as i128,
            self.d as i128,
        ]
    }
}

/// Secant lines through a general point of P⁵, from the double point
/// formula; each node takes one away.
pub fn apparent_double_points(inv: &SurfaceInvariants) -> i64 {
    inv.d * (inv.d - 5) / 2 - 5 * (inv.pi - 1) + 6 * inv.chi_o - inv.k2 - inv.nu
}

/// `S²` inside a smooth cubic fourfold.
pub fn self_intersection_in_cubic(inv: &SurfaceInvariants) -> i64 {
    6 * inv.d + 3 * inv.hk() + inv.k2 - inv.chi_top + 2 * inv.nu
}

pub fn discriminant(d_surface: i64, s2: i64) -> i64 {
    3 * s2 - d_surface * d_surface
}

/// Even `d > 6`, not divisible by 4 or 9, and with no odd prime factor
/// congruent to 2 mod 3.
pub fn is_admissible(d: i64) -> bool {
    if d <= 6 || d % 2 != 0 || d % 4 == 0 || d % 9 == 0 {
        return false;
    }
    let mut n = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            if p % 2 == 1 && p % 3 == 2 {
                return false;
            }
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    !(n > 2 && n % 3 == 2)
}

fn falling(a: u32, b: u32) -> i64 {
    (0..b).map(|k| (a - k) as i64).product()
}

/// Plane forms of degree `degree` with multiplicity at least `m` at each
/// point: every partial derivative of order `< m` vanishes there.
pub fn linear_system<F: Field>(
    ring: &Arc<Ring<F>>,
    degree: u32,
    points: &[(Vec<F::Elem>, u32)],
) -> Result<Vec<Poly<F>>> {
    let field = ring.field();
    let n = ring.nvars();
    let monos = ring.monomials_of_degree(degree);
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (p, m) in points {
        if p.len() != n {
            return Err(Error::InvalidArgument("point of the wrong length".into()));
        }
        for k in 0..*m {
            for beta in ring.monomials_of_degree(k) {
                let row = monos
                    .iter()
                    .map(|a| {
                        if !beta.divides(a) {
                            return field.zero();
                        }
                        let mut v = field.one();
                        for i in 0..n {
                            let (ai, bi) = (a.exp(i), beta.exp(i));
                            v = field.mul(&v, &field.from_i64(falling(ai, bi)));
                            v = field.mul(&v, &field.pow(&p[i], (ai - bi) as u64));
                        }
                        v
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    let ker = linalg::kernel(field, &rows, monos.len());
    Ok(ker
        .into_iter()
        .map(|v| {
            let v = clear_denominators(field, &v);
            let terms = v.into_iter().zip(&monos).filter(|(c, _)| !field.is_zero(c)).map(|(c, m)| (c, *m)).collect();
            Poly::from_terms(ring, terms)
        })
        .collect())
}

/// A random nonzero vector with entries in the coefficient window.
pub fn random_vector<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> Vec<F::Elem> {
    loop {
        let v: Vec<F::Elem> = (0..n).map(|_| field.random(rng, WINDOW)).collect();
        if v.iter().any(|c| !field.is_zero(c)) {
            return v;
        }
    }
}

/// Forms of the linear projection from `center`: a basis of the linear
/// forms vanishing at it, composed with `forms`.
pub fn project_from<F: Field>(forms: &[Poly<F>], center: &[F::Elem]) -> Vec<Poly<F>> {
    let field = forms[0].field();
    let ker = linalg::kernel(field, &vec![center.to_vec()], forms.len());
    ker.iter()
        .map(|v| {
            let v = clear_denominators(field, v);
            forms
                .iter()
                .zip(&v)
                .fold(forms[0].ring().zero(), |acc, (f, c)| acc.add(&f.scale(c)))
        })
        .collect()
}

/// Ideal of the image of a plane parameterization, interpolated up to
/// degree `cap` and certified by its Hilbert polynomial and saturation.
pub fn interpolated_ideal<F: Field, R: Rng + ?Sized>(
    map: &RationalMap<F>,
    cap: u32,
    hp2: &[i128; 3],
    rng: &mut R,
) -> Result<IdealHandle<F>> {
    let gens = map.image_up_to_degree(cap)?;
    let gens = minimal_generators(map.target(), &gens);
    let ideal = IdealHandle::new(map.target(), gens)?;
    if !ideal.hilbert().hilbert_polynomial_is(hp2, 2) {
        return Err(Error::genericity(
            "surface ideal",
            0,
            &format!("unexpected Hilbert polynomial, dim/degree {:?}", ideal.dim_degree()),
        ));
    }
    let sat = ideal.saturate_irrelevant(rng)?;
    if !sat.equals(&ideal) {
        return Err(Error::genericity("surface ideal", 0, "interpolated ideal is not saturated"));
    }
    Ok(ideal)
}

/// The quintic del Pezzo surface in P⁵, the image of the plane by cubics
/// through four random points. It lies on five quadrics, so it cannot carry
/// a congruence of 5-secant conics: a negative fixture.
pub fn quintic_del_pezzo<F: Field>(field: F, seed: u64) -> Result<IdealHandle<F>> {
    let plane = Ring::indexed(field.clone(), "t", 3);
    let mut rng = stage_rng(seed, "quintic-del-pezzo");
    let points: Vec<(Vec<F::Elem>, u32)> = (0..4).map(|_| (random_vector(&field, 3, &mut rng), 1)).collect();
    let forms = linear_system(&plane, 3, &points)?;
    let map = RationalMap::to_projective(&plane, forms, "x")?;
    let inv = SurfaceInvariants {
        d: 5,
        pi: 1,
        k2: 5,
        chi_top: 7,
        chi_o: 1,
        nu: 0,
    };
    interpolated_ideal(&map, 3, &inv.hilbert_polynomial_times_two(), &mut rng)
}

/// A constructed surface with its parameterization from the plane.
#[derive(Clone, Debug)]
pub struct SurfaceInstance<F: Field> {
    pub recipe: SurfaceRecipe,
    pub seed: u64,
    pub plane: Arc<Ring<F>>,
    pub ambient: Arc<Ring<F>>,
    pub base_points: Vec<Vec<F::Elem>>,
    pub param: RationalMap<F>,
    pub ideal: IdealHandle<F>,
    pub profile: BTreeMap<u32, usize>,
    /// Profile of the surface before the last projection, when there is one.
    pub intermediate_profile: Option<BTreeMap<u32, usize>>,
    /// Ideal of that surface in P⁶ (not kept in the JSON record).
    pub intermediate: Option<IdealHandle<F>>,
    /// Number of resampled attempts before success.
    pub retries: usize,
}

impl<F: Field> SurfaceInstance<F> {
    pub fn field(&self) -> &F {
        self.ambient.field()
    }

    pub fn invariants(&self) -> SurfaceInvariants {
        self.recipe.invariants()
    }

    /// The degree-3 part of the ideal as a list of cubics (a basis).
    pub fn cubics(&self) -> Vec<Poly<F>> {
        self.ideal.gens().iter().filter(|g| g.degree() == 3).cloned().collect()
    }

    /// The map `P⁵ ⇢ P^N` defined by the cubics through the surface.
    pub fn cubic_map(&self) -> Result<RationalMap<F>> {
        let cubics = self.cubics();
        Ok(RationalMap::to_projective(&self.ambient, cubics, "y")?
            .with_seed(crate::rng::sub_seed(self.seed, "cubic-map"))
            .with_base(self.ideal.clone()))
    }

    pub fn contains_point(&self, p: &[F::Elem]) -> Result<bool> {
        let field = self.field();
        for g in self.ideal.gens() {
            if !field.is_zero(&g.evaluate(p)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Singular locus of the surface, from `trials` random compressions of
    /// the Jacobian.
    pub fn singular_locus(&self, trials: usize) -> Result<IdealHandle<F>> {
        let mut rng = stage_rng(self.seed, "surface-singular-locus");
        let sing = self.ideal.singular_locus_with(3, 0, trials, &mut rng)?;
        sing.saturate_irrelevant(&mut rng)
    }

    pub fn to_json(&self) -> SurfaceJson {
        let field = self.field();
        SurfaceJson {
            recipe: self.recipe.id,
            field: field.desc(),
            seed: self.seed,
            base_points: self
                .base_points
                .iter()
                .map(|p| p.iter().map(|c| field.format(c)).collect())
                .collect(),
            param: self.param.forms().iter().map(to_json).collect(),
            ideal: self.ideal.gens().iter().map(to_json).collect(),
            profile: self.profile.clone(),
            intermediate_profile: self.intermediate_profile.clone(),
            dim_degree: self.ideal.dim_degree(),
            invariants: self.invariants(),
            self_intersection: self_intersection_in_cubic(&self.invariants()),
            discriminant: discriminant(self.invariants().d, self_intersection_in_cubic(&self.invariants())),
            apparent_double_points: apparent_double_points(&self.invariants()),
        }
    }

    /// Rebuilds an instance from its JSON record (no recomputation beyond
    /// parsing; the ideal is trusted as recorded).
    pub fn from_json(field: F, json: &SurfaceJson) -> Result<Self> {
        let plane = Ring::indexed(field.clone(), "t", 3);
        let ambient = Ring::indexed(field.clone(), "x", 6);
        let parse = |p: &PolyJson, ring: &Arc<Ring<F>>| crate::poly::serial::from_json(ring, p);
        let param_forms = json.param.iter().map(|p| parse(p, &plane)).collect::<Result<Vec<_>>>()?;
        let gens = json.ideal.iter().map(|p| parse(p, &ambient)).collect::<Result<Vec<_>>>()?;
        let base_points = json
            .base_points
            .iter()
            .map(|p| p.iter().map(|c| field.parse(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let ideal = IdealHandle::new(&ambient, gens)?;
        let param = RationalMap::new(&plane, &ambient, param_forms)?.with_seed(json.seed);
        Ok(SurfaceInstance {
            recipe: SurfaceRecipe::of(json.recipe),
            seed: json.seed,
            plane,
            ambient,
            base_points,
            param,
            ideal,
            profile: json.profile.clone(),
            intermediate_profile: json.intermediate_profile.clone(),
            intermediate: None,
            retries: 0,
        })
    }
}

/// `surface.json`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfaceJson {
    pub recipe: SurfaceId,
    pub field: FieldDesc,
    pub seed: u64,
    pub base_points: Vec<Vec<String>>,
    pub param: Vec<PolyJson>,
    pub ideal: Vec<PolyJson>,
    pub profile: BTreeMap<u32, usize>,
    pub intermediate_profile: Option<BTreeMap<u32, usize>>,
    pub dim_degree: (i64, i64),
    pub invariants: SurfaceInvariants,
    pub self_intersection: i64,
    pub discriminant: i64,
    pub apparent_double_points: i64,
}

fn build_attempt<F: Field, R: Rng + ?Sized>(
    recipe: &SurfaceRecipe,
    plane: &Arc<Ring<F>>,
    ambient: &Arc<Ring<F>>,
    seed: u64,
    rng: &mut R,
) -> Result<SurfaceInstance<F>> {
    let field = plane.field();
    let mut base_points = Vec::new();
    let mut conditions = Vec::new();
    for &(m, count) in &recipe.base_points {
        for _ in 0..count {
            let p = random_vector(field, 3, rng);
            base_points.push(p.clone());
            conditions.push((p, m));
        }
    }
    let system = linear_system(plane, recipe.plane_degree, &conditions)?;
    if system.len() != recipe.system_dimension() {
        return Err(Error::genericity("linear system", 0, "base points impose dependent conditions"));
    }
    let inv = recipe.invariants();
    let hp2 = inv.hilbert_polynomial_times_two();
    let mut forms = system;
    let mut intermediate_profile = None;
    let mut intermediate = None;
    for (k, step) in recipe.steps.iter().enumerate() {
        let center = match step {
            ProjectionStep::FromGeneralPoint => random_vector(field, forms.len(), rng),
            ProjectionStep::FromPointOnSecant => {
                let a = random_vector(field, 3, rng);
                let b = random_vector(field, 3, rng);
                let fa: Vec<F::Elem> = forms.iter().map(|f| f.evaluate(&a)).collect::<Result<_>>()?;
                let fb: Vec<F::Elem> = forms.iter().map(|f| f.evaluate(&b)).collect::<Result<_>>()?;
                let (s, t) = (field.random(rng, WINDOW), field.random(rng, WINDOW));
                fa.iter().zip(&fb).map(|(x, y)| field.add(&field.mul(&s, x), &field.mul(&t, y))).collect()
            }
        };
        if k + 1 == recipe.steps.len() {
            // the surface before the last projection must have the expected
            // ideal (this also certifies the previous centre)
            let pre = RationalMap::to_projective(plane, forms.clone(), "z")?;
            let pre_ideal = interpolated_ideal(&pre, 3, &hp2, rng)?;
            let profile = pre_ideal.generator_profile();
            if Some(&profile) != recipe.intermediate_profile().as_ref() {
                return Err(Error::genericity(
                    "intermediate surface",
                    0,
                    &format!("generator profile {profile:?}"),
                ));
            }
            let on_surface = pre_ideal
                .gens()
                .iter()
                .all(|g| g.evaluate(&center).map(|v| field.is_zero(&v)).unwrap_or(false));
            if on_surface {
                return Err(Error::genericity("projection", 0, "centre on the surface"));
            }
            intermediate_profile = Some(profile);
            intermediate = Some(pre_ideal);
        }
        forms = project_from(&forms, &center);
    }
    let param = RationalMap::new(plane, ambient, forms)?.with_seed(seed);
    let ideal = interpolated_ideal(&param, 3, &hp2, rng)?;
    let profile = ideal.generator_profile();
    if profile != recipe.expected_profile() {
        return Err(Error::genericity("surface ideal", 0, &format!("generator profile {profile:?}")));
    }
    Ok(SurfaceInstance {
        recipe: recipe.clone(),
        seed,
        plane: plane.clone(),
        ambient: ambient.clone(),
        base_points,
        param,
        ideal,
        profile,
        intermediate_profile,
        intermediate,
        retries: 0,
    })
}

/// Builds the surface of `recipe` over `field`, resampling up to
/// [`RETRIES`] times when a genericity check fails.
pub fn build_surface<F: Field>(recipe: &SurfaceRecipe, field: F, seed: u64) -> Result<SurfaceInstance<F>> {
    let plane = Ring::indexed(field.clone(), "t", 3);
    let ambient = Ring::indexed(field, "x", 6);
    let mut rng = stage_rng(seed, &format!("surface-{}", recipe.id));
    let mut last = String::new();
    for attempt in 0..RETRIES {
        match build_attempt(recipe, &plane, &ambient, seed, &mut rng) {
            Ok(mut s) => {
                s.retries = attempt;
                return Ok(s);
            }
            Err(Error::Genericity { detail, .. }) => last = detail,
            Err(e) => return Err(e),
        }
    }
    Err(Error::genericity(&format!("build {}", recipe.id), RETRIES, &last))
}
