//! Non-abelian simple groups carry a proper primitive rational central S-ring.
//!
//!     cargo run --example simple_groups

use std::sync::Arc;

use schurring::corpus::{build_psl27, group_by_name};
use schurring::sring::EnumerationLimits;
use schurring::verifiers::{generalized_b_group_diagnostic, simple_group_witness, Witness};

fn main() {
    let groups = [("A5", Arc::new(group_by_name("A5", 512).unwrap())), ("PSL(2,7)", Arc::new(build_psl27()))];
    for (name, g) in &groups {
        let d = simple_group_witness(g).unwrap();
        println!("{name}: {:?}", d.verdict);
        for w in &d.witnesses {
            if let Witness::SRing { basic_sets, rank, primitive, .. } = w {
                let sizes: Vec<usize> = basic_sets.iter().map(Vec::len).collect();
                println!("  rank {rank}, primitive {primitive}, basic set sizes {sizes:?}");
            }
        }
        let b = generalized_b_group_diagnostic(g, &EnumerationLimits::default()).unwrap();
        println!("  generalized B-group: {}", if b.verdict == schurring::verifiers::Verdict::Refuted { "no" } else { "yes" });
    }
}
