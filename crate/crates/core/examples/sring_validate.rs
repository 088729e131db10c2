//! Validates candidate partitions as Schur rings and prints structure constants.
//!
//!     cargo run --example sring_validate

use std::sync::Arc;

use schurring::group::{build_cyclic, build_symmetric, ElementSet};
use schurring::sring::SRing;

fn parts(sets: &[&[usize]]) -> Vec<ElementSet> {
    sets.iter().map(|s| ElementSet::new(s.iter().copied())).collect()
}

fn show(a: &SRing) {
    let c = a.constants();
    println!(
        "  rank {}, central {}, commutative {}, primitive {}",
        a.rank(),
        a.is_central(),
        a.is_commutative(),
        a.is_primitive()
    );
    for x in 0..a.rank() {
        for y in 0..a.rank() {
            let row: Vec<u64> = (0..a.rank()).map(|z| c.get(x, y, z)).collect();
            println!("  c[{x}][{y}] = {row:?}");
        }
    }
}

fn main() {
    let z6 = Arc::new(build_cyclic(6).unwrap());
    println!("Z6, {{0}} {{3}} {{1,2,4,5}}:");
    show(&SRing::from_partition(&z6, parts(&[&[0], &[3], &[1, 2, 4, 5]])).unwrap());

    println!("Z6, {{0}} {{1,5}} {{2,3,4}}:");
    match SRing::from_partition(&z6, parts(&[&[0], &[1, 5], &[2, 3, 4]])) {
        Ok(_) => println!("  valid"),
        Err(e) => println!("  rejected: {e}"),
    }

    let s3 = Arc::new(build_symmetric(3).unwrap());
    println!("S3 class algebra:");
    show(&SRing::class_algebra(&s3));
    for h in SRing::class_algebra(&s3).a_subgroups().members {
        println!("  A-subgroup {:?}", h.members.as_slice());
    }
}
