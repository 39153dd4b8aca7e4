mod common;

use std::collections::BTreeMap;

use cfr::ideals::IdealHandle;
use cfr::maps::{degree_profile, RationalMap};
use cfr::surfaces::SurfaceId;
use common::{surface, PRIMES};

#[test]
fn septic_cubic_map_is_birational_with_known_multidegree() {
    let s = surface(SurfaceId::S26, PRIMES[0], 1);
    let phi = s.cubic_map().unwrap();
    assert_eq!(phi.target().nvars(), 14);
    assert_eq!(phi.map_degree().unwrap(), 1);
    assert_eq!(phi.multidegree().unwrap(), vec![1, 3, 9, 20, 32, 34]);
}

#[test]
fn octic_image_is_cut_out_by_sixteen_quadrics() {
    let s = surface(SurfaceId::S14, PRIMES[0], 1);
    let phi = s.cubic_map().unwrap();
    assert_eq!(phi.target().nvars(), 13);
    let eqs = phi.image_up_to_degree(2).unwrap();
    assert_eq!(degree_profile(&eqs), [(2, 16)].into_iter().collect::<BTreeMap<_, _>>());
    let z = IdealHandle::new(phi.target(), eqs).unwrap();
    assert_eq!(z.dim_degree(), (5, 28));
    assert_eq!(phi.multidegree().unwrap().last(), Some(&28));
}

#[test]
fn decic_image_lies_on_no_quadric() {
    let s = surface(SurfaceId::S38, PRIMES[0], 1);
    let phi = s.cubic_map().unwrap();
    assert!(phi.image_up_to_degree(2).unwrap().is_empty());
    let cubics = phi.image_up_to_degree(3).unwrap();
    assert!(!cubics.is_empty());
    assert_eq!(phi.map_degree().unwrap(), 1);
}

#[test]
fn quadrics_through_the_intermediate_surfaces_give_a_cremona_map() {
    for id in [SurfaceId::S14, SurfaceId::S26] {
        let s = surface(id, PRIMES[0], 1);
        let pre = s.intermediate.as_ref().unwrap();
        let quadrics: Vec<_> = pre.gens().iter().filter(|g| g.degree() == 2).cloned().collect();
        assert_eq!(quadrics.len(), 7, "{id}");
        let psi = RationalMap::to_projective(pre.ring(), quadrics, "w").unwrap().with_seed(3);
        assert_eq!(psi.multidegree().unwrap(), vec![1, 2, 4, 8, 8, 4, 1], "{id}");
        assert_eq!(psi.inverse_degree_of_cremona().unwrap(), 4, "{id}");
    }
}
