//! Gröbner bases, Hilbert data, saturation and elimination on small ideals.
//!
//! `cargo run --example ideal_basics`

use cfr::ideals::IdealHandle;
use cfr::poly::minors;
use cfr::{Rationals, Ring};

fn main() {
    let r = Ring::indexed(Rationals, "x", 4);
    let x = r.vars();
    // twisted cubic
    let m = vec![
        vec![x[0].clone(), x[1].clone(), x[2].clone()],
        vec![x[1].clone(), x[2].clone(), x[3].clone()],
    ];
    let c = IdealHandle::new(&r, minors(&m, 2)).unwrap();
    println!("twisted cubic: {} basis elements, dim/degree {:?}", c.gb().len(), c.dim_degree());
    for g in c.gb().elements() {
        println!("  {g}");
    }
    // the same curve with an embedded point at (1:0:0:0), removed again by
    // saturating with a linear form through the point
    let fat = IdealHandle::new(&r, vec![x[1].clone(), x[2].clone(), x[3].clone()]).unwrap();
    let emb = c.intersect(&fat.product(&fat).unwrap()).unwrap();
    let sat = emb.saturate_by(&x[3]).unwrap();
    println!(
        "with an embedded point: equal to the curve {}, dim/degree {:?}; after saturation equal {}",
        emb.equals(&c),
        emb.dim_degree(),
        sat.equals(&c)
    );
    // eliminating x0 projects from (1:0:0:0), a point of the curve: a conic
    let proj = c.eliminate(1).unwrap();
    println!("projection from a point of the curve: {:?}", proj.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>());
}
