//! The quadrics through the surface in P⁶ (before the last projection)
//! define a Cremona transformation; its inverse has degree d_5.
//!
//! `cargo run --release --example cremona_inverse -- [s14|s26] [prime]`

use std::time::Instant;

use cfr::field::PrimeField;
use cfr::maps::RationalMap;
use cfr::surfaces::{build_surface, SurfaceId, SurfaceRecipe};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id = SurfaceId::parse(args.first().map(String::as_str).unwrap_or("s14")).unwrap();
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_003);
    let s = build_surface(&SurfaceRecipe::of(id), PrimeField::new(p).unwrap(), 1).unwrap();
    let ideal = s.intermediate.expect("surface with a projection step");
    let quadrics: Vec<_> = ideal.gens().iter().filter(|g| g.degree() == 2).cloned().collect();
    let ring = ideal.ring().clone();
    let t = Instant::now();
    let psi = RationalMap::new(&ring, &ring, quadrics).unwrap().with_seed(1);
    println!("{id}: base locus of the quadrics {:?}", psi.base_locus().dim_degree());
    println!("  multidegree {:?}", psi.multidegree().unwrap());
    println!("  inverse defined by forms of degree {}", psi.inverse_degree_of_cremona().unwrap());
    println!("  ({:.2?})", t.elapsed());
}
