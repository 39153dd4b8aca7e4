//! Build one of the three surfaces and print its ideal data.
//!
//! `cargo run --release --example build_surface -- s38 [prime|0] [seed]`

use std::time::Instant;

use cfr::field::{Field, PrimeField, Rationals};
use cfr::surfaces::{build_surface, SurfaceId, SurfaceRecipe};

fn report<F: Field>(id: SurfaceId, field: F, seed: u64) {
    let t = Instant::now();
    let s = build_surface(&SurfaceRecipe::of(id), field, seed).expect("surface construction");
    println!("{id}: dim/degree {:?}", s.ideal.dim_degree());
    println!("  generator profile {:?}", s.profile);
    if let Some(p) = &s.intermediate_profile {
        println!("  before the last projection {p:?}");
    }
    println!("  h0(I(2)) = {}, h0(I(3)) = {}", s.ideal.graded_piece_dim(2), s.ideal.graded_piece_dim(3));
    println!("  built in {:.2?} after {} resamples", t.elapsed(), s.retries);
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id = SurfaceId::parse(args.first().map(String::as_str).unwrap_or("s26")).unwrap();
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_003);
    let seed: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(1);
    if p == 0 {
        report(id, Rationals, seed);
    } else {
        report(id, PrimeField::new(p).unwrap(), seed);
    }
}
