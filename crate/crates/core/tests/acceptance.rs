//! Acceptance suite: one pass/fail line per criterion, every criterion over
//! two primes. Runs without the libtest harness so the lines always print.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use cfr::congruence::{
    default_cap, random_nodal_cubic, random_smooth_cubic, singularity_report, CongruenceCertificate,
    CongruencePipeline,
};
use cfr::gb::syzygies_generated_in_degree;
use cfr::ideals::IdealHandle;
use cfr::maps::degree_profile;
use cfr::modcoh::h0_normal;
use cfr::rng::stage_rng;
use cfr::surfaces::{
    apparent_double_points, build_surface, discriminant, is_admissible, quintic_del_pezzo,
    self_intersection_in_cubic, SurfaceId, SurfaceInstance, SurfaceRecipe,
};
use cfr::{Field, PrimeField};

const PRIMES: [u64; 2] = [1_000_003, 2_147_483_629];

type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn surface(id: SurfaceId, p: u64) -> SurfaceInstance<PrimeField> {
    build_surface(&SurfaceRecipe::of(id), fp(p), 1).unwrap()
}

fn certificates(s: &SurfaceInstance<PrimeField>, trials: usize) -> Vec<CongruenceCertificate> {
    CongruencePipeline::from_surface(s, default_cap(Some(s.recipe.id)))
        .unwrap()
        .verify(trials)
        .unwrap()
}

fn check_counts(id: SurfaceId, p: u64, certs: &[CongruenceCertificate], expected: (i64, i64, i64, (i64, i64), i64)) -> Check {
    for c in certs {
        ensure(c.passed && c.counts() == expected, || {
            format!("{id} over {p}: counts {:?}, failed stage {:?}", c.counts(), c.failed_stage)
        })?;
    }
    Ok(())
}

/// The session for the septic: map degree and multidegree, then every
/// stage of the conic construction at a random point.
fn criterion_1() -> Check {
    for p in PRIMES {
        let s = surface(SurfaceId::S26, p);
        let phi = s.cubic_map().unwrap();
        ensure(phi.map_degree().unwrap() == 1, || format!("map degree over {p}"))?;
        let md = phi.multidegree().unwrap();
        ensure(md == vec![1, 3, 9, 20, 32, 34], || format!("multidegree {md:?} over {p}"))?;
        let pipe = CongruencePipeline::from_surface(&s, 2).unwrap();
        let pt = pipe.random_point(&mut stage_rng(1, "acceptance-point")).unwrap();
        let e = pipe.secant_cone(&pt).unwrap().dim_degree();
        ensure(e == (1, 5), || format!("secant cone {e:?} over {p}"))?;
        let v = pipe.cone_of_lines_with_cap(&pt, 2).unwrap().dim_degree();
        ensure(v == (1, 6), || format!("cone of lines {v:?} over {p}"))?;
        let (conic, cert) = pipe.five_secant_conic(&pt, 0);
        ensure(cert.passed && cert.extra_line_degree == 1, || format!("certificate {cert:?}"))?;
        let conic = conic.unwrap();
        let c = conic.dim_degree();
        ensure(c == (1, 2), || format!("conic {c:?} over {p}"))?;
        let m = conic.sum(&s.ideal).unwrap().dim_degree();
        ensure(m == (0, 5), || format!("conic on the surface {m:?} over {p}"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    for p in PRIMES {
        let s = surface(SurfaceId::S14, p);
        ensure(s.ideal.graded_piece_dim(3) == 13, || "h0(I(3))".into())?;
        let phi = s.cubic_map().unwrap();
        ensure(phi.target().nvars() == 13, || "Z does not lie in P12".into())?;
        let eqs = phi.image_up_to_degree(2).unwrap();
        let profile = degree_profile(&eqs);
        ensure(profile == BTreeMap::from([(2, 16)]), || format!("quadrics {profile:?}"))?;
        let z = IdealHandle::new(phi.target(), eqs).unwrap().dim_degree();
        ensure(z == (5, 28), || format!("Z {z:?} over {p}"))?;
        check_counts(SurfaceId::S14, p, &certificates(&s, 2), (7, 8, 1, (1, 2), 5))?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    for p in PRIMES {
        let s = surface(SurfaceId::S38, p);
        ensure(s.profile == BTreeMap::from([(3, 10)]), || format!("profile {:?}", s.profile))?;
        ensure(s.ideal.graded_piece_dim(2) == 0, || "a quadric contains the surface".into())?;
        ensure(syzygies_generated_in_degree(&s.cubics(), 4).unwrap(), || {
            "syzygies not generated by linear ones".into()
        })?;
        let certs = certificates(&s, 2);
        check_counts(SurfaceId::S38, p, &certs, (7, 8, 1, (1, 2), 5))?;
        let pipe = CongruencePipeline::from_surface(&s, 3).unwrap();
        let q = pipe.random_point(&mut stage_rng(1, "acceptance-node")).unwrap();
        let f = random_nodal_cubic(&s.ideal, &q, 1).map_err(|e| e.to_string())?;
        let rep = singularity_report(&f, Some(&q)).unwrap();
        ensure(rep.dim_degree == (0, 1) && rep.supported_at_point, || format!("node {rep:?}"))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    for p in PRIMES {
        let a = surface(SurfaceId::S14, p).intermediate_profile;
        ensure(a == Some(BTreeMap::from([(2, 7)])), || format!("octic in P6 {a:?}"))?;
        let b = surface(SurfaceId::S26, p).intermediate_profile;
        ensure(b == Some(BTreeMap::from([(2, 7), (3, 1)])), || format!("septic in P6 {b:?}"))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    for p in PRIMES {
        let s = surface(SurfaceId::S26, p);
        let f = random_smooth_cubic(&s.ideal, 1).unwrap();
        let h = h0_normal(&s.ideal, Some(&f)).unwrap();
        ensure(h == 1, || format!("septic in X: {h} over {p}"))?;
        let s = surface(SurfaceId::S14, p);
        let f = random_smooth_cubic(&s.ideal, 1).unwrap();
        let h = h0_normal(&s.ideal, Some(&f)).unwrap();
        ensure(h == 7, || format!("octic in X: {h} over {p}"))?;
        let h = h0_normal(&s.ideal, None).unwrap();
        ensure(h == 49, || format!("octic in P5: {h} over {p}"))?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let inv = |id| SurfaceRecipe::of(id).invariants();
    let s2: Vec<i64> = SurfaceId::ALL.iter().map(|&id| self_intersection_in_cubic(&inv(id))).collect();
    ensure(s2 == vec![26, 25, 46], || format!("self-intersections {s2:?}"))?;
    let disc: Vec<i64> = SurfaceId::ALL.iter().zip(&s2).map(|(&id, &x)| discriminant(inv(id).d, x)).collect();
    ensure(disc == vec![14, 26, 38], || format!("discriminants {disc:?}"))?;
    let adp = [SurfaceId::S14, SurfaceId::S38].map(|id| apparent_double_points(&inv(id)));
    ensure(adp == [7, 7], || format!("apparent double points {adp:?}"))?;
    ensure([14, 26, 38, 42].iter().all(|&d| is_admissible(d)), || "admissible values".into())?;
    ensure([8, 12, 18, 20, 24].iter().all(|&d| !is_admissible(d)), || "non-admissible values".into())
}

/// Structural properties on the real data: Buchberger's criterion,
/// saturation, syzygies, scaling, the certificate identity, agreement of
/// the two primes and the failure of a surface on quadrics.
fn criterion_7() -> Check {
    let mut counts = Vec::new();
    for p in PRIMES {
        for id in SurfaceId::ALL {
            let s = surface(id, p);
            ensure(s.ideal.gb().satisfies_buchberger(), || format!("{id}: Buchberger criterion"))?;
            let sat = s.ideal.saturate_irrelevant(&mut stage_rng(1, "acceptance-sat")).unwrap();
            ensure(sat.equals(&s.ideal), || format!("{id}: ideal not saturated"))?;
            let twice = sat.saturate_irrelevant(&mut stage_rng(2, "acceptance-sat")).unwrap();
            ensure(twice.equals(&sat), || format!("{id}: saturation not idempotent"))?;
            let cubics = s.cubics();
            for syz in cfr::gb::syzygies(&cubics).unwrap() {
                ensure(syz.apply(&cubics).is_zero(), || format!("{id}: syzygy does not vanish"))?;
            }
            let field = s.field();
            let pt: Vec<u32> = (1..=6).collect();
            let t = 5u32;
            let scaled: Vec<u32> = pt.iter().map(|x| field.mul(x, &t)).collect();
            for g in &cubics {
                let lhs = g.evaluate(&scaled).unwrap();
                let rhs = field.mul(&g.evaluate(&pt).unwrap(), &125);
                ensure(lhs == rhs, || format!("{id}: homogeneous scaling"))?;
            }
            let certs = certificates(&s, 2);
            for c in &certs {
                ensure(c.lines_in_z == c.secant_line_count + 1, || format!("{id}: line identity {c:?}"))?;
            }
            counts.push((id, certs.iter().map(|c| c.counts()).collect::<Vec<_>>()));
        }
        let dp5 = quintic_del_pezzo(fp(p), 1).unwrap();
        let certs = CongruencePipeline::new(None, dp5, 1, 2).unwrap().verify(2).unwrap();
        for c in &certs {
            ensure(!c.passed && c.extra_line_degree == 0, || format!("surface on quadrics passed: {c:?}"))?;
        }
    }
    let (a, b) = counts.split_at(SurfaceId::ALL.len());
    ensure(a == b, || format!("primes disagree: {a:?} vs {b:?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("session reproduction for the septic (d = 26)", criterion_1),
        ("counts for the octic (d = 14)", criterion_2),
        ("counts for the decic (d = 38)", criterion_3),
        ("generator profiles of the surfaces in P6", criterion_4),
        ("normal sheaf h0 values", criterion_5),
        ("numeric ledger", criterion_6),
        ("property suites", criterion_7),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1}s): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
