//! Enumerates every central Schur ring of a few groups.
//!
//!     cargo run --example enumerate [-- WORKERS]

use std::sync::Arc;
use std::time::Instant;

use schurring::corpus::group_by_name;
use schurring::sring::{enumerate_central_srings, EnumerationLimits};

fn main() {
    let workers = std::env::args().nth(1).and_then(|w| w.parse().ok()).unwrap_or(1);
    let limits = EnumerationLimits { workers, ..Default::default() };
    for name in ["Z12", "D18", "Q8", "A4", "A5", "F21", "S3xS3", "Extraspecial27"] {
        let g = Arc::new(group_by_name(name, 512).unwrap());
        let start = Instant::now();
        let rings = enumerate_central_srings(&g, &limits).unwrap();
        let primitive = rings.iter().filter(|a| a.rank() > 2 && a.is_primitive()).count();
        println!(
            "{name:>15}: {:>2} classes, {:>4} central S-rings, {primitive} proper primitive ({:?})",
            g.class_count(),
            rings.len(),
            start.elapsed()
        );
    }

    let d8 = Arc::new(group_by_name("D8", 512).unwrap());
    for a in enumerate_central_srings(&d8, &limits).unwrap() {
        println!("D8 rank {}: {:?}", a.rank(), a.canonical_form());
    }
}
