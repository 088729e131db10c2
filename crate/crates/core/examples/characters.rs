//! Numerical character tables of commutative S-rings.
//!
//!     cargo run --example characters

use std::sync::Arc;

use schurring::corpus::group_by_name;
use schurring::rationality::{central_characters, is_rational_numeric, DEFAULT_CHARACTER_SEED, DEFAULT_TOLERANCE};
use schurring::sring::SRing;

fn print_table(name: &str, a: &SRing) {
    let table = central_characters(a, DEFAULT_CHARACTER_SEED).unwrap();
    println!(
        "{name}: rank {}, residual {:.1e}, rational {}",
        table.rank,
        table.residual,
        is_rational_numeric(&table, DEFAULT_TOLERANCE)
    );
    for row in &table.values {
        let cells: Vec<String> = row
            .iter()
            .map(|z| if z.im.abs() < 1e-9 { format!("{:8.4}", z.re) } else { format!("{:.3}{:+.3}i", z.re, z.im) })
            .collect();
        println!("  {}", cells.join("  "));
    }
}

fn main() {
    for name in ["S3", "Q8", "Z5", "A5"] {
        let g = Arc::new(group_by_name(name, 512).unwrap());
        print_table(name, &SRing::class_algebra(&g));
    }
    let z7 = Arc::new(group_by_name("Z7", 512).unwrap());
    print_table("Z7 trivial", &SRing::trivial(&z7));
}
