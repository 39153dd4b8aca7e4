//! Syzygies among the cubics through each surface and whether the linear
//! ones generate them.
//!
//! `cargo run --release --example linear_syzygies -- [s14|s26|s38] [prime]`

use std::collections::BTreeMap;

use cfr::field::PrimeField;
use cfr::gb::{syzygies, syzygies_generated_in_degree};
use cfr::surfaces::{build_surface, SurfaceId, SurfaceRecipe};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ids: Vec<SurfaceId> = match args.first() {
        Some(s) => vec![SurfaceId::parse(s).unwrap()],
        None => SurfaceId::ALL.to_vec(),
    };
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_003);
    for id in ids {
        let s = build_surface(&SurfaceRecipe::of(id), PrimeField::new(p).unwrap(), 1).unwrap();
        let cubics = s.cubics();
        let shifts = vec![3; cubics.len()];
        let mut by_degree: BTreeMap<u32, usize> = BTreeMap::new();
        for syz in syzygies(&cubics).unwrap() {
            *by_degree.entry(syz.degree(&shifts).unwrap()).or_default() += 1;
        }
        println!(
            "{id}: {} cubics, syzygy basis by degree {by_degree:?}, generated by linear ones: {}",
            cubics.len(),
            syzygies_generated_in_degree(&cubics, 4).unwrap()
        );
    }
}
