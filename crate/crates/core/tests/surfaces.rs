mod common;

use std::collections::BTreeMap;

use cfr::gb::syzygies_generated_in_degree;
use cfr::surfaces::{apparent_double_points, discriminant, is_admissible, self_intersection_in_cubic, SurfaceId};
use common::{surface, PRIMES};

fn profile(pairs: &[(u32, usize)]) -> BTreeMap<u32, usize> {
    pairs.iter().copied().collect()
}

#[test]
fn octic_surface_ideal() {
    let s = surface(SurfaceId::S14, PRIMES[0], 1);
    assert_eq!(s.profile, profile(&[(3, 13)]));
    assert_eq!(s.ideal.dim_degree(), (2, 8));
    assert_eq!(s.ideal.graded_piece_dim(2), 0);
    assert_eq!(s.ideal.graded_piece_dim(3), 13);
    assert_eq!(s.intermediate_profile, Some(profile(&[(2, 7)])));
}

#[test]
fn septic_surface_ideal() {
    let s = surface(SurfaceId::S26, PRIMES[0], 1);
    assert_eq!(s.profile, profile(&[(3, 14)]));
    assert_eq!(s.ideal.dim_degree(), (2, 7));
    assert_eq!(s.ideal.graded_piece_dim(3), 14);
    assert_eq!(s.intermediate_profile, Some(profile(&[(2, 7), (3, 1)])));
}

#[test]
fn decic_surface_ideal_and_linear_syzygies() {
    let s = surface(SurfaceId::S38, PRIMES[0], 1);
    assert_eq!(s.profile, profile(&[(3, 10)]));
    assert_eq!(s.ideal.dim_degree(), (2, 10));
    assert_eq!(s.ideal.graded_piece_dim(2), 0);
    assert!(syzygies_generated_in_degree(&s.cubics(), 4).unwrap());
}

#[test]
fn two_primes_agree_on_every_surface() {
    for id in SurfaceId::ALL {
        let [a, b] = PRIMES.map(|p| surface(id, p, 5));
        assert_eq!(a.profile, b.profile, "{id}");
        assert_eq!(a.intermediate_profile, b.intermediate_profile, "{id}");
        assert_eq!(a.ideal.dim_degree(), b.ideal.dim_degree(), "{id}");
    }
}

#[test]
fn seeds_reproduce_the_same_ideal() {
    let a = surface(SurfaceId::S26, PRIMES[0], 11);
    let b = surface(SurfaceId::S26, PRIMES[0], 11);
    assert_eq!(a.ideal.gens(), b.ideal.gens());
    assert_eq!(serde_json::to_string(&a.to_json()).unwrap(), serde_json::to_string(&b.to_json()).unwrap());
}

#[test]
fn numeric_invariants() {
    let inv = |id| cfr::surfaces::SurfaceRecipe::of(id).invariants();
    let s2: Vec<i64> = SurfaceId::ALL.iter().map(|&id| self_intersection_in_cubic(&inv(id))).collect();
    assert_eq!(s2, vec![26, 25, 46]);
    let disc: Vec<i64> = SurfaceId::ALL
        .iter()
        .zip(&s2)
        .map(|(&id, &s)| discriminant(inv(id).d, s))
        .collect();
    assert_eq!(disc, vec![14, 26, 38]);
    assert_eq!(apparent_double_points(&inv(SurfaceId::S14)), 7);
    assert_eq!(apparent_double_points(&inv(SurfaceId::S38)), 7);
    assert!([14, 26, 38, 42].iter().all(|&d| is_admissible(d)));
    assert!([8, 12, 18, 20, 24].iter().all(|&d| !is_admissible(d)));
}
