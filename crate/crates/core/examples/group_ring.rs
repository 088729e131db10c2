//! Exact arithmetic in the integral group ring.
//!
//!     cargo run --example group_ring

use std::sync::Arc;

use num_bigint::BigInt;
use schurring::group::{build_cyclic, build_symmetric, ElementSet};
use schurring::ring::{power_map_set, sigma_m, CoeffTransform, GroupRingElement};

fn main() {
    let s3 = Arc::new(build_symmetric(3).unwrap());
    let classes = &s3.conjugacy_classes().classes;
    let rotations = GroupRingElement::set_sum(&s3, &classes[1]);
    let reflections = GroupRingElement::set_sum(&s3, &classes[2]);

    // class sums multiply into integer combinations of class sums
    let square = reflections.mul(&reflections).unwrap();
    println!("T^2 class coefficients: {:?}", square.class_coefficients().unwrap());
    let mixed = rotations.mul(&reflections).unwrap();
    println!("C T class coefficients: {:?}", mixed.class_coefficients().unwrap());

    // a large power stays exact
    let big = reflections.pow(40).unwrap();
    println!("T^40 at the identity: {}", big.coeff(0));

    // X^p mod p against the image of X under x -> x^p
    let z12 = Arc::new(build_cyclic(12).unwrap());
    let x = ElementSet::new([1, 5, 7, 11]);
    let sum = GroupRingElement::set_sum(&z12, &x);
    let p = 13;
    let reduced = sum.pow(p).unwrap().transform(&CoeffTransform::mod_p(p)).unwrap();
    println!("support of X^{p} mod {p}: {:?}", reduced.support().as_slice());
    println!("X^({p}): {:?}", power_map_set(&z12, &x, p as i64).as_slice());
    println!("agrees with sigma_{p}: {}", sigma_m(&sum, p as i64).unwrap() == reduced);

    let scaled = sum.scale(&BigInt::from(-3)).add(&GroupRingElement::one(&z12)).unwrap();
    println!("1 - 3X = {}", scaled.to_json());
}
