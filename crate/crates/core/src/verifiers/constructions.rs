//! Explicit rank-3 S-rings and the generalized B-group diagnostic.

use std::sync::Arc;

use num_bigint::BigInt;

use super::theorems::enumerate_or_scope;
use super::{subject, Diagnosis, Result, VerifyError, Witness};
use crate::arith;
use crate::group::{direct_product, ElementSet, Group};
use crate::ring::GroupRingElement;
use crate::sring::{EnumerationLimits, SRing};

/// Rank-3 central S-ring over `G1 x G2` with basic sets `{e}`, the
/// nonidentity elements with one trivial coordinate, and the rest.
///
/// Primitivity is computed, not assumed: for `|G1| = |G2| = 2` the last
/// basic set together with `e` is a subgroup.
pub fn build_product_rank3(g1: &Group, g2: &Group) -> Result<(SRing, Diagnosis)> {
    let n = g1.order();
    if n != g2.order() || n < 2 {
        return Err(VerifyError::InvalidArgument(format!(
            "factors must have equal order above 1, got {} and {}",
            g1.order(),
            g2.order()
        )));
    }
    let g = Arc::new(direct_product(g1, g2)?);
    let axis = ElementSet::new((0..n * n).filter(|&x| x != 0 && (x / n == 0 || x % n == 0)));
    let rest = ElementSet::full(n * n).difference(&axis).difference(&ElementSet::singleton(0));
    let a = SRing::from_partition(&g, vec![ElementSet::singleton(0), axis, rest])?;
    let mut d = Diagnosis::new("product_rank3", subject(&g));
    d.witnesses.push(Witness::sring(&a));
    if !a.is_central() || a.rank() != 3 {
        d.refute(Witness::sring(&a));
        return Ok((a, d.note("construction is not a central rank-3 S-ring")));
    }
    if !a.is_primitive() {
        let d = d.out_of_scope(format!(
            "rank-3 S-ring is imprimitive for factors of order {n}; no conclusion about generalized B-groups"
        ));
        return Ok((a, d));
    }
    if !a.is_proper_central() {
        return Ok((a, d.out_of_scope("rank-3 S-ring coincides with the class algebra")));
    }
    Ok((a, d.note("not a generalized B-group: proper primitive central rank-3 S-ring")))
}

/// The quadratic residues modulo a prime `p`, as elements of `Z_p`.
pub fn paley_set(p: u64) -> Result<ElementSet> {
    if !arith::is_prime(p) || p % 4 != 3 {
        return Err(VerifyError::InvalidArgument(format!("{p} is not a prime congruent to 3 mod 4")));
    }
    Ok(ElementSet::new((1..p).map(|x| (x * x % p) as usize)))
}

/// Checks that `X` is a skew Hadamard difference set, i.e. `X^-1` is the
/// complement of `X` in `G#` and `X Y = |X| e + ((|X|-1)/2)(X + Y)` with
/// `Y = X^-1`, and returns the rank-3 S-ring `{e}, X, Y`.
pub fn skew_hadamard_rank3(g: &Arc<Group>, x: &ElementSet) -> Result<(SRing, Diagnosis)> {
    let n = g.order();
    if n % 2 == 0 {
        return Err(VerifyError::InvalidArgument(format!("group order {n} is even")));
    }
    if x.iter().any(|e| e >= n) {
        return Err(VerifyError::InvalidArgument("element out of range".into()));
    }
    let y = ElementSet::new(x.iter().map(|e| g.inv(e)));
    if !x.is_disjoint(&y) {
        return Err(VerifyError::NotSkew(format!("{x} meets its inverse")));
    }
    let nonidentity = ElementSet::full(n).difference(&ElementSet::singleton(0));
    if x.union(&y) != nonidentity {
        return Err(VerifyError::NotSkew(format!("{x} and its inverse do not cover G#")));
    }
    let xs = GroupRingElement::set_sum(g, x);
    let ys = GroupRingElement::set_sum(g, &y);
    let product = xs.mul(&ys)?;
    let k = x.len() as i64;
    let expected = GroupRingElement::basis(g, 0)
        .scale(&BigInt::from(k))
        .add(&xs.add(&ys)?.scale(&BigInt::from((k - 1) / 2)))?;
    if let Some(e) = (0..n).find(|&e| product.coeff(e) != expected.coeff(e)) {
        return Err(VerifyError::IdentityFails {
            element: e,
            expected: expected.coeff(e).to_string(),
            found: product.coeff(e).to_string(),
        });
    }
    let a = SRing::from_partition(g, vec![ElementSet::singleton(0), x.clone(), y])?;
    let d = Diagnosis::new("skew_hadamard_rank3", subject(g))
        .note(format!("primitive: {}, central: {}", a.is_primitive(), a.is_central()));
    let mut d = d;
    d.witnesses.push(Witness::sring(&a));
    Ok((a, d))
}

/// Confirmed when no proper central S-ring is primitive; otherwise refuted
/// with every proper primitive central S-ring as a witness.
pub fn generalized_b_group_diagnostic(g: &Arc<Group>, limits: &EnumerationLimits) -> Result<Diagnosis> {
    let d = Diagnosis::new("generalized_b_group", subject(g));
    match enumerate_or_scope(g, limits)? {
        Ok(rings) => Ok(generalized_b_on(g, &rings)),
        Err(reason) => Ok(d.out_of_scope(reason)),
    }
}

pub(super) fn generalized_b_on(g: &Arc<Group>, rings: &[SRing]) -> Diagnosis {
    let mut d = Diagnosis::new("generalized_b_group", subject(g));
    // a group can simply fail to be a generalized B-group; that is not a theorem failure
    d.theorem = false;
    let proper: Vec<&SRing> = rings.iter().filter(|a| a.is_proper_central()).collect();
    for a in &proper {
        if a.is_primitive() {
            d.refute(Witness::sring(a));
        }
    }
    let verdict = if d.witnesses.is_empty() { "generalized B-group" } else { "not a generalized B-group" };
    d.note(format!("{verdict}; {} central S-rings, {} proper", rings.len(), proper.len()))
}
