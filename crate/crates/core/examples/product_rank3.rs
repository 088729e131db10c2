//! The rank 3 S-ring over G x G with basic sets {e}, the two axes, and the rest.
//!
//!     cargo run --example product_rank3

use schurring::corpus::group_by_name;
use schurring::verifiers::build_product_rank3;

fn main() {
    for name in ["Z2", "Z3", "Z5", "S3", "Q8", "A4"] {
        let g = group_by_name(name, 512).unwrap();
        let (a, d) = build_product_rank3(&g, &g).unwrap();
        let sizes: Vec<usize> = a.basic_sets().iter().map(|s| s.len()).collect();
        println!(
            "{name}x{name}: sizes {sizes:?}, central {}, primitive {}, {:?}",
            a.is_central(),
            a.is_primitive(),
            d.verdict
        );
    }
}
