//! Multipliers, trace sets and the rational closure of central S-rings.
//!
//!     cargo run --example rational_closure

use std::sync::Arc;

use schurring::corpus::group_by_name;
use schurring::rationality::{is_rational, multiplier_action, rational_closure, trace_set, verify_automorphism};
use schurring::sring::SRing;

fn main() {
    let a5 = Arc::new(group_by_name("A5", 512).unwrap());
    let m7 = multiplier_action(&a5, 7).unwrap();
    println!("A5: x -> x^7 permutes classes as {:?}", m7.class_perm);

    let algebra = SRing::class_algebra(&a5);
    let report = verify_automorphism(&algebra, 7).unwrap();
    println!("  sigma_7 preserves {} structure constants", report.triples_checked);
    println!("  class algebra rational: {}", is_rational(&algebra).unwrap());

    let fives = &a5.conjugacy_classes().classes[1];
    println!("  trace of a 5-class has {} elements", trace_set(&a5, fives).len());

    let tc = rational_closure(&algebra).unwrap();
    println!("  rational closure: rank {} -> {}, orbits {:?}", algebra.rank(), tc.closed.rank(), tc.orbits);
    println!("  closure primitive: {}", tc.closed.is_primitive());

    for name in ["Z5", "Z8", "Q8", "F21"] {
        let g = Arc::new(group_by_name(name, 512).unwrap());
        let tc = rational_closure(&SRing::class_algebra(&g)).unwrap();
        println!("{name}: class algebra rank {}, rational closure {:?}", g.class_count(), tc.closed.canonical_form());
    }
}
