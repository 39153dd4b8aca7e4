//! A surface on quadrics carries no congruence of 5-secant conics: the
//! construction breaks at the extra line.
//!
//! `cargo run --release --example surface_on_quadrics -- [trials] [prime]`

use cfr::congruence::CongruencePipeline;
use cfr::field::PrimeField;
use cfr::surfaces::quintic_del_pezzo;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let trials: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(2);
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_003);
    let ideal = quintic_del_pezzo(PrimeField::new(p).unwrap(), 1).unwrap();
    println!(
        "quintic del Pezzo: dim/degree {:?}, {} quadrics, {} cubics",
        ideal.dim_degree(),
        ideal.graded_piece_dim(2),
        ideal.graded_piece_dim(3)
    );
    let pipe = CongruencePipeline::new(None, ideal, 1, 2).unwrap();
    for c in pipe.verify(trials).unwrap() {
        println!(
            "  trial {}: counts {:?}, passed {}, failed at {}",
            c.trial,
            c.counts(),
            c.passed,
            c.failed_stage.as_deref().unwrap_or("-")
        );
    }
}
