//! Congruences for powers of class sums, and the coset lemma.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{subject, Diagnosis, Result, VerifyError, Witness};
use crate::arith;
use crate::group::{ElementSet, Group, Subgroup};
use crate::ring::{CoeffTransform, GroupRingElement};

fn require_prime(p: u64) -> Result<()> {
    if !arith::is_prime(p) {
        return Err(VerifyError::InvalidArgument(format!("{p} is not prime")));
    }
    Ok(())
}

/// Writes the `p`-th power of the class sum of `class` as `sum a_Y Y` and
/// checks `a_Y |Y| = |X|` (mod `p`) when `Y = X^(p)` and `0` otherwise.
pub fn check_multiplier_congruence(g: &Arc<Group>, class: usize, p: u64) -> Result<Diagnosis> {
    require_prime(p)?;
    let table = g.conjugacy_classes();
    let x = table.classes.get(class).ok_or_else(|| {
        VerifyError::InvalidArgument(format!("class index {class} out of range"))
    })?;
    let mut d = Diagnosis::new("multiplier_congruence", subject(g))
        .note(format!("class {class}, p = {p}"));
    let power = GroupRingElement::set_sum(g, x).pow(p)?;
    let coeffs = match power.class_coefficients() {
        Ok(c) => c,
        Err(e) => {
            d.refute(Witness::set(format!("power of class sum is not central: {e}"), x));
            return Ok(d);
        }
    };
    let target = table.class_of[g.pow(x.min_element().unwrap(), p as i64)];
    let modulus = BigInt::from(p);
    for (y, a) in coeffs.iter().enumerate() {
        let residue = (a * table.classes[y].len()).mod_floor(&modulus).to_u64().unwrap();
        let expected = if y == target { x.len() as u64 % p } else { 0 };
        if residue != expected {
            d.refute(Witness::Congruence { class, prime: p, target: y, residue, expected });
        }
    }
    Ok(d)
}

/// The normal Sylow `p`-subgroup when it exists, is cyclic and nontrivial.
fn cyclic_normal_sylow(g: &Group, p: u64) -> Result<Option<Subgroup>> {
    require_prime(p)?;
    if g.order() as u64 % p != 0 {
        return Ok(None);
    }
    Ok(g.normal_sylow_subgroup(p)?.filter(|s| g.is_cyclic(s)))
}

/// `sum_{y in Y} y^p` counted with multiplicity.
fn power_image(g: &Arc<Group>, y: &ElementSet, p: u64) -> GroupRingElement {
    let mut coeffs = vec![0i64; g.order()];
    for x in y.iter() {
        coeffs[g.pow(x, p as i64)] += 1;
    }
    GroupRingElement::from_i64(g, &coeffs).expect("length matches group order")
}

/// With `P` a normal cyclic Sylow `p`-subgroup, checks for every class `Y`
/// that `Y^p` is congruent mod `p` to the power image of `Y` when `Y`
/// centralizes `P`, and to zero otherwise.
pub fn check_centralizer_congruence(g: &Arc<Group>, p: u64) -> Result<Diagnosis> {
    let d = Diagnosis::new("centralizer_congruence", subject(g)).note(format!("p = {p}"));
    let Some(sylow) = cyclic_normal_sylow(g, p)? else {
        return Ok(d.out_of_scope(format!("no nontrivial normal cyclic Sylow {p}-subgroup")));
    };
    let mut d = d;
    let c = g.centralizer(&sylow.members);
    let reduce = CoeffTransform::mod_p(p);
    for (i, y) in g.conjugacy_classes().classes.iter().enumerate() {
        let lhs = GroupRingElement::set_sum(g, y).pow(p)?.transform(&reduce)?;
        let inside = y.is_subset(&c.members);
        let rhs = if inside {
            power_image(g, y, p).transform(&reduce)?
        } else {
            GroupRingElement::zero(g)
        };
        if let Some(e) = (0..g.order()).find(|&e| lhs.coeff(e) != rhs.coeff(e)) {
            let label = if inside { "inside centralizer" } else { "outside centralizer" };
            d.refute(Witness::Coefficient {
                label: format!("class {i} ({label})"),
                element: e,
                expected: rhs.coeff(e).to_string(),
                found: lhs.coeff(e).to_string(),
            });
        }
    }
    d.witnesses.insert(0, Witness::subgroup("centralizer of Sylow subgroup", &c));
    Ok(d)
}

/// With `H` the subgroup of order `p` of a normal cyclic Sylow
/// `p`-subgroup `P`: every `x` has `Hx` inside its class or centralizes `P`.
pub fn check_coset_lemma(g: &Arc<Group>, p: u64) -> Result<Diagnosis> {
    let d = Diagnosis::new("coset_lemma", subject(g)).note(format!("p = {p}"));
    let Some(sylow) = cyclic_normal_sylow(g, p)? else {
        return Ok(d.out_of_scope(format!("no nontrivial normal cyclic Sylow {p}-subgroup")));
    };
    let mut d = d;
    let h: Vec<usize> =
        sylow.members.iter().filter(|&x| g.element_order(x) as u64 <= p).collect();
    let c = g.centralizer(&sylow.members);
    let class_of = &g.conjugacy_classes().class_of;
    let mut spread = 0;
    for x in 0..g.order() {
        let inside = h.iter().all(|&k| class_of[g.mul(k, x)] == class_of[x]);
        if inside {
            continue;
        }
        spread += 1;
        if !c.contains(x) {
            d.refute(Witness::Element { label: "coset leaves class outside centralizer".into(), element: x });
        }
    }
    Ok(d.note(format!("{spread} elements with Hx not inside their class, all checked against the centralizer")))
}
