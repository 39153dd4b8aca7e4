#![allow(dead_code)]

use cfr::field::PrimeField;
use cfr::surfaces::{build_surface, SurfaceId, SurfaceInstance, SurfaceRecipe};

/// Two primes from the pipeline range.
pub const PRIMES: [u64; 2] = [1_000_003, 2_147_483_629];

pub fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn surface(id: SurfaceId, p: u64, seed: u64) -> SurfaceInstance<PrimeField> {
    build_surface(&SurfaceRecipe::of(id), fp(p), seed).unwrap()
}
