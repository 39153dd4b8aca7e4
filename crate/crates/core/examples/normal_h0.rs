//! h⁰ of the normal sheaf of a surface in P5 and in a smooth cubic fourfold
//! containing it.
//!
//! `cargo run --release --example normal_h0 -- [s14|s26|s38] [prime]`

use std::time::Instant;

use cfr::congruence::random_smooth_cubic;
use cfr::field::PrimeField;
use cfr::modcoh::h0_normal;
use cfr::surfaces::{build_surface, SurfaceId, SurfaceRecipe};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id = SurfaceId::parse(args.first().map(String::as_str).unwrap_or("s26")).unwrap();
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_003);
    let s = build_surface(&SurfaceRecipe::of(id), PrimeField::new(p).unwrap(), 1).unwrap();
    let t = Instant::now();
    let f = random_smooth_cubic(&s.ideal, 7).unwrap();
    println!("{id}: smooth cubic through the surface ({:.2?})", t.elapsed());
    let t = Instant::now();
    println!("  h0(N_S/X) = {} ({:.2?})", h0_normal(&s.ideal, Some(&f)).unwrap(), t.elapsed());
    let t = Instant::now();
    println!("  h0(N_S/P5) = {} ({:.2?})", h0_normal(&s.ideal, None).unwrap(), t.elapsed());
}
