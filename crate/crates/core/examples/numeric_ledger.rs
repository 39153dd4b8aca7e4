//! Invariants of the three surfaces and the admissible discriminants.
//!
//! `cargo run --example numeric_ledger -- [max d]`

use cfr::surfaces::{
    apparent_double_points, discriminant, is_admissible, self_intersection_in_cubic, SurfaceId, SurfaceRecipe,
};

fn main() {
    let max: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    for id in SurfaceId::ALL {
        let inv = SurfaceRecipe::of(id).invariants();
        let s2 = self_intersection_in_cubic(&inv);
        println!(
            "{id}: degree {}, sectional genus {}, K^2 = {}, S^2 = {s2}, discriminant {}, apparent double points {}",
            inv.d,
            inv.pi,
            inv.k2,
            discriminant(inv.d, s2),
            apparent_double_points(&inv)
        );
    }
    let admissible: Vec<i64> = (8..=max).filter(|&d| is_admissible(d)).collect();
    println!("admissible discriminants up to {max}: {admissible:?}");
}
