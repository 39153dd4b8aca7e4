//! Degree, multidegree and image equations of the cubic map of a surface.
//!
//! `cargo run --release --example map_analysis -- [s14|s26|s38] [prime]`

use std::time::Instant;

use cfr::field::PrimeField;
use cfr::ideals::IdealHandle;
use cfr::maps::degree_profile;
use cfr::surfaces::{build_surface, SurfaceId, SurfaceRecipe};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id = SurfaceId::parse(args.first().map(String::as_str).unwrap_or("s26")).unwrap();
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_003);
    let s = build_surface(&SurfaceRecipe::of(id), PrimeField::new(p).unwrap(), 1).unwrap();
    let phi = s.cubic_map().unwrap();
    println!("{id}: cubic map P5 -> P{}", phi.target().nvars() - 1);
    let t = Instant::now();
    println!("  map degree {} ({:.2?})", phi.map_degree().unwrap(), t.elapsed());
    let t = Instant::now();
    println!("  multidegree {:?} ({:.2?})", phi.multidegree().unwrap(), t.elapsed());
    let t = Instant::now();
    let eqs = phi.image_up_to_degree(2).unwrap();
    println!("  equations of the image up to degree 2: {:?}", degree_profile(&eqs));
    if !eqs.is_empty() {
        let z = IdealHandle::new(phi.target(), eqs).unwrap();
        println!("  their zero locus: dim/degree {:?} ({:.2?})", z.dim_degree(), t.elapsed());
    }
}
