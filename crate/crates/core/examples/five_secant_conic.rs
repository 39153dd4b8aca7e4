//! Find the 5-secant conic through random points for each surface.
//!
//! `cargo run --release --example five_secant_conic -- [s14|s26|s38] [cap] [trials] [prime]`

use std::time::Instant;

use cfr::congruence::CongruencePipeline;
use cfr::field::PrimeField;
use cfr::surfaces::{build_surface, SurfaceId, SurfaceRecipe};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ids: Vec<SurfaceId> = match args.first() {
        Some(s) => vec![SurfaceId::parse(s).unwrap()],
        None => SurfaceId::ALL.to_vec(),
    };
    let cap: u32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let trials: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(1);
    let p: u64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(1_000_003);
    for id in ids {
        let t = Instant::now();
        let s = build_surface(&SurfaceRecipe::of(id), PrimeField::new(p).unwrap(), 1).unwrap();
        let pipe = CongruencePipeline::from_surface(&s, cap).unwrap();
        println!("{id}: {} equations of Z up to degree {cap} ({:.2?})", pipe.z_equations.len(), t.elapsed());
        for c in pipe.verify(trials).unwrap() {
            println!(
                "  trial {}: counts {:?} passed {} {}",
                c.trial,
                c.counts(),
                c.passed,
                c.failed_stage.as_deref().unwrap_or("")
            );
            println!("    timings {:?}", c.timings_ms);
        }
    }
}
