//! The two cones at a random point: secant lines to the surface through
//! `p`, and lines in the image of the cubic map through `φ(p)`.
//!
//! `cargo run --release --example secant_cone -- [s14|s26|s38] [prime]`

use cfr::congruence::{default_cap, CongruencePipeline};
use cfr::field::PrimeField;
use cfr::rng::stage_rng;
use cfr::surfaces::{build_surface, SurfaceId, SurfaceRecipe};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id = SurfaceId::parse(args.first().map(String::as_str).unwrap_or("s26")).unwrap();
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_003);
    let s = build_surface(&SurfaceRecipe::of(id), PrimeField::new(p).unwrap(), 1).unwrap();
    let cap = default_cap(Some(id));
    let pipe = CongruencePipeline::from_surface(&s, cap).unwrap();
    let pt = pipe.random_point(&mut stage_rng(1, "example-point")).unwrap();
    let e = pipe.secant_cone(&pt).unwrap();
    println!("{id}: secant cone at p has dim/degree {:?}", e.dim_degree());
    let v = pipe.cone_of_lines_with_cap(&pt, cap).unwrap();
    println!("  cone of lines in Z at phi(p): {:?}", v.dim_degree());
    let w = pipe.cone_of_lines_with_cap(&pt, cap + 1).unwrap();
    println!("  unchanged with equations up to degree {}: {}", cap + 1, v.equals(&w));
    let image = pipe.image_of(&e, 2).unwrap();
    println!("  image of the secant lines: {:?}", image.dim_degree());
}
