//! Builds a few groups and prints their conjugacy classes and normal structure.
//!
//!     cargo run --example groups

use schurring::arith::prime_divisors;
use schurring::corpus::build_psl27;
use schurring::group::{build_dihedral, build_frobenius, from_permutation_generators, parse_generators, Group};

fn describe(name: &str, g: &Group) {
    let classes = g.conjugacy_classes();
    println!("{name}: order {}, {} classes, sizes {:?}", g.order(), classes.len(), classes.sizes());
    println!("  center {:?}", g.center().members.as_slice());
    for p in prime_divisors(g.order() as u64) {
        if let Ok(Some(s)) = g.normal_sylow_subgroup(p) {
            println!("  normal Sylow {p}-subgroup of order {} (cyclic: {})", s.order(), g.is_cyclic(&s));
        }
    }
    println!("  {} normal subgroups, simple: {}", g.normal_subgroups().len(), g.is_simple());
}

fn main() {
    describe("D18", &build_dihedral(18).unwrap());
    describe("F21", &build_frobenius(7, 3).unwrap());

    let gens = parse_generators("(1 2 3 4 5), (1 2 3)").unwrap();
    describe("<(1 2 3 4 5), (1 2 3)>", &from_permutation_generators(&gens, 512).unwrap());

    describe("PSL(2,7)", &build_psl27());
}
