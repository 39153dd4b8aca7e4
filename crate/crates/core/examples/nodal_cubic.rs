//! A cubic through the surface with a single node at a random point.
//!
//! `cargo run --release --example nodal_cubic -- [s14|s26|s38] [prime]`

use cfr::congruence::{random_nodal_cubic, singularity_report, CongruencePipeline};
use cfr::field::PrimeField;
use cfr::rng::stage_rng;
use cfr::surfaces::{build_surface, SurfaceId, SurfaceRecipe};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id = SurfaceId::parse(args.first().map(String::as_str).unwrap_or("s38")).unwrap();
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_003);
    let s = build_surface(&SurfaceRecipe::of(id), PrimeField::new(p).unwrap(), 1).unwrap();
    let pipe = CongruencePipeline::from_surface(&s, 2).unwrap();
    let q = pipe.random_point(&mut stage_rng(1, "node")).unwrap();
    match random_nodal_cubic(&s.ideal, &q, 1) {
        Ok(f) => {
            let rep = singularity_report(&f, Some(&q)).unwrap();
            println!("{id}: singular locus {:?}, supported at the node: {}", rep.dim_degree, rep.supported_at_point);
        }
        Err(e) => println!("{id}: {e}"),
    }
}
