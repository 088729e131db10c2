//! Central S-rings over groups with a normal cyclic Sylow subgroup are imprimitive,
//! together with the congruences behind it.
//!
//!     cargo run --example wielandt

use std::sync::Arc;

use schurring::corpus::group_by_name;
use schurring::sring::EnumerationLimits;
use schurring::verifiers::{check_centralizer_congruence, check_coset_lemma, check_multiplier_congruence, wielandt_central_check};

fn main() {
    let limits = EnumerationLimits::default();
    for name in ["S3", "D18", "Z12", "F21", "Dic12", "A5"] {
        let g = Arc::new(group_by_name(name, 512).unwrap());
        let d = wielandt_central_check(&g, &limits).unwrap();
        println!("{name}: {:?} {:?}", d.verdict, d.notes);
        for (p, _) in g.normal_cyclic_sylow_primes() {
            let c = check_centralizer_congruence(&g, p).unwrap();
            let h = check_coset_lemma(&g, p).unwrap();
            println!("  p = {p}: centralizer congruence {:?}, coset lemma {:?}", c.verdict, h.verdict);
        }
    }

    let d18 = Arc::new(group_by_name("D18", 512).unwrap());
    for class in 0..d18.class_count() {
        let d = check_multiplier_congruence(&d18, class, 3).unwrap();
        println!("D18 class {class}, p = 3: {:?}", d.verdict);
    }
}
