//! Exact Gröbner-basis toolkit for surfaces in P⁵ and their congruences of
//! 5-secant conics.

pub mod error;
pub mod congruence;
pub mod field;
pub mod gb;
pub mod hilbert;
pub mod ideals;
pub mod linalg;
pub mod maps;
pub mod modcoh;
pub mod poly;
pub mod rng;
pub mod surfaces;

pub use error::{Error, Result};
pub use field::{Field, FieldDesc, PrimeField, Rationals};
pub use poly::{MonomialOrder, Poly, Ring};
