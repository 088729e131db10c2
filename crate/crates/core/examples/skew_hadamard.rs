//! Rank 3 S-rings from skew Hadamard difference sets; Paley sets over Z_p.
//!
//!     cargo run --example skew_hadamard

use std::sync::Arc;

use schurring::group::{build_cyclic, ElementSet};
use schurring::verifiers::{paley_set, skew_hadamard_rank3};

fn main() {
    for p in [3, 7, 11, 19, 23, 31, 43] {
        let g = Arc::new(build_cyclic(p as usize).unwrap());
        let x = paley_set(p).unwrap();
        let (a, d) = skew_hadamard_rank3(&g, &x).unwrap();
        println!("Z{p}: {:?}, rank {}, {:?}", d.verdict, a.rank(), d.notes);
    }

    let g = Arc::new(build_cyclic(7).unwrap());
    match skew_hadamard_rank3(&g, &ElementSet::new([1, 2, 3])) {
        Ok((_, d)) => println!("Z7 {{1,2,3}}: {:?} {:?}", d.verdict, d.notes),
        Err(e) => println!("Z7 {{1,2,3}}: {e}"),
    }
}
