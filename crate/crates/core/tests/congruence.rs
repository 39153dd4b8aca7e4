mod common;

use cfr::congruence::{
    default_cap, graded_piece_basis, random_nodal_cubic, random_smooth_cubic, singularity_report, CongruencePipeline,
};
use cfr::rng::stage_rng;
use cfr::surfaces::{quintic_del_pezzo, SurfaceId};
use cfr::Field;
use common::{fp, surface, PRIMES};

/// `(secant lines, lines in Z, extra line, conic, length on S)`.
fn expected(id: SurfaceId) -> (i64, i64, i64, (i64, i64), i64) {
    match id {
        SurfaceId::S26 => (5, 6, 1, (1, 2), 5),
        _ => (7, 8, 1, (1, 2), 5),
    }
}

#[test]
fn every_surface_passes_with_the_expected_counts_on_two_primes() {
    for id in SurfaceId::ALL {
        for p in PRIMES {
            let s = surface(id, p, 2);
            let certs = CongruencePipeline::from_surface(&s, default_cap(Some(id)))
                .unwrap()
                .verify(2)
                .unwrap();
            for c in certs {
                assert!(c.passed, "{id} over {p}: {c:?}");
                assert_eq!(c.counts(), expected(id), "{id} over {p}");
                assert_eq!(c.lines_in_z, c.secant_line_count + 1);
            }
        }
    }
}

#[test]
fn septic_stages_match_the_reference_session() {
    let s = surface(SurfaceId::S26, PRIMES[0], 1);
    let pipe = CongruencePipeline::from_surface(&s, 2).unwrap();
    let p = pipe.random_point(&mut stage_rng(4, "point")).unwrap();
    assert_eq!(pipe.secant_cone(&p).unwrap().dim_degree(), (1, 5));
    assert_eq!(pipe.cone_of_lines_with_cap(&p, 2).unwrap().dim_degree(), (1, 6));
    let (conic, cert) = pipe.five_secant_conic(&p, 0);
    assert!(cert.passed, "{cert:?}");
    let conic = conic.unwrap();
    assert_eq!(conic.dim_degree(), (1, 2));
    assert_eq!(conic.sum(&s.ideal).unwrap().dim_degree(), (0, 5));
    // the conic passes through the point
    let field = s.field();
    assert!(conic.gens().iter().all(|g| field.is_zero(&g.evaluate(&p).unwrap())));
}

#[test]
fn cone_of_lines_is_stable_under_the_degree_cap() {
    for id in [SurfaceId::S14, SurfaceId::S26] {
        let s = surface(id, PRIMES[0], 3);
        let pipe = CongruencePipeline::from_surface(&s, 2).unwrap();
        let p = pipe.random_point(&mut stage_rng(3, "cap")).unwrap();
        let a = pipe.cone_of_lines_with_cap(&p, 2).unwrap();
        let b = pipe.cone_of_lines_with_cap(&p, 3).unwrap();
        assert!(a.equals(&b), "{id}");
    }
}

#[test]
fn certificates_are_reproducible_apart_from_timings() {
    let run = || {
        let s = surface(SurfaceId::S14, PRIMES[1], 9);
        let certs = CongruencePipeline::from_surface(&s, 2).unwrap().verify(2).unwrap();
        certs.iter().map(|c| serde_json::to_string(&c.without_timings()).unwrap()).collect::<Vec<_>>()
    };
    assert_eq!(run(), run());
}

#[test]
fn surface_on_quadrics_has_no_congruence() {
    let i = quintic_del_pezzo(fp(PRIMES[0]), 1).unwrap();
    let pipe = CongruencePipeline::new(None, i, 1, 2).unwrap();
    for c in pipe.verify(2).unwrap() {
        assert!(!c.passed);
        assert!(!c.unique);
        // the extra line never appears
        assert_eq!(c.extra_line_degree, 0);
        assert!(c.failed_stage.as_deref().unwrap().starts_with("extra line"), "{c:?}");
    }
}

#[test]
fn smooth_cubics_through_each_surface() {
    for id in SurfaceId::ALL {
        let s = surface(id, PRIMES[0], 1);
        let f = random_smooth_cubic(&s.ideal, 8).unwrap();
        assert!(s.ideal.contains(&f));
        assert_eq!(singularity_report(&f, None).unwrap().dim_degree, (-1, 0));
    }
}

#[test]
fn nodal_cubic_through_the_decic_has_one_reduced_node() {
    let s = surface(SurfaceId::S38, PRIMES[0], 1);
    let pipe = CongruencePipeline::from_surface(&s, 3).unwrap();
    let q = pipe.random_point(&mut stage_rng(2, "node")).unwrap();
    // the cubics through S singular at q form a space of dimension 10 - 6
    assert_eq!(graded_piece_basis(&s.ideal, 3).len(), 10);
    let f = random_nodal_cubic(&s.ideal, &q, 2).unwrap();
    assert!(s.ideal.contains(&f));
    let rep = singularity_report(&f, Some(&q)).unwrap();
    assert_eq!(rep.dim_degree, (0, 1));
    assert!(rep.supported_at_point);
}

#[test]
fn reducible_cubic_is_singular_along_a_threefold() {
    let s = surface(SurfaceId::S38, PRIMES[0], 1);
    let r = s.ambient.clone();
    let q = (0..6).fold(r.zero(), |acc, i| acc.add(&r.var(i).pow(2)));
    let f = q.mul(&r.var(0));
    assert!(singularity_report(&f, None).unwrap().dim_degree.0 >= 3);
}
