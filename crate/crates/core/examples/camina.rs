//! Camina pairs and central primitivity of Camina groups.
//!
//!     cargo run --example camina

use std::sync::Arc;

use schurring::corpus::group_by_name;
use schurring::sring::EnumerationLimits;
use schurring::verifiers::{camina_b_group_check, camina_pairs};

fn main() {
    let limits = EnumerationLimits::default();
    for name in ["S3", "D8", "Q8", "A4", "F20", "F21", "Extraspecial27", "Z6"] {
        let g = Arc::new(group_by_name(name, 512).unwrap());
        let pairs: Vec<usize> = camina_pairs(&g).iter().map(|c| c.subgroup.len()).collect();
        let d = camina_b_group_check(&g, &limits).unwrap();
        println!("{name:>15}: Camina subgroups of orders {pairs:?}, check {:?}", d.verdict);
    }
}
