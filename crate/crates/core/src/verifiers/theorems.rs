//! Imprimitivity under a normal cyclic Sylow subgroup, Camina groups,
//! separating subgroups and simple groups.

use std::sync::Arc;

use serde::Serialize;

use super::{subject, Diagnosis, Result, VerifyError, Witness};
use crate::arith;
use crate::group::{ElementSet, Group, Subgroup};
use crate::rationality::{is_rational, rational_closure, trace_set};
use crate::sring::{enumerate_central_srings, EnumerationLimits, SRing, SRingError};

/// Enumerates central S-rings, turning cap violations into a scope note.
pub(super) fn enumerate_or_scope(
    g: &Arc<Group>,
    limits: &EnumerationLimits,
) -> Result<std::result::Result<Vec<SRing>, String>> {
    match enumerate_central_srings(g, limits) {
        Ok(rings) => Ok(Ok(rings)),
        Err(e @ (SRingError::ClassCountExceeded { .. } | SRingError::ResultLimitExceeded(_))) => {
            Ok(Err(e.to_string()))
        }
        Err(e) => Err(e.into()),
    }
}

fn is_composite(n: usize) -> bool {
    n > 3 && !arith::is_prime(n as u64)
}

/// Every nontrivial central S-ring over a group of composite order with a
/// normal cyclic Sylow subgroup is imprimitive.
pub fn wielandt_central_check(g: &Arc<Group>, limits: &EnumerationLimits) -> Result<Diagnosis> {
    let d = Diagnosis::new("wielandt", subject(g));
    if let Some(reason) = wielandt_scope(g) {
        return Ok(d.out_of_scope(reason));
    }
    match enumerate_or_scope(g, limits)? {
        Ok(rings) => Ok(wielandt_on(g, &rings)),
        Err(reason) => Ok(d.out_of_scope(reason)),
    }
}

fn wielandt_scope(g: &Group) -> Option<String> {
    if !is_composite(g.order()) {
        return Some(format!("order {} is not composite", g.order()));
    }
    if g.normal_cyclic_sylow_primes().is_empty() {
        return Some("no normal cyclic Sylow subgroup".into());
    }
    None
}

pub(super) fn wielandt_on(g: &Arc<Group>, rings: &[SRing]) -> Diagnosis {
    let mut d = Diagnosis::new("wielandt", subject(g));
    if let Some(reason) = wielandt_scope(g) {
        return d.out_of_scope(reason);
    }
    let primes: Vec<String> =
        g.normal_cyclic_sylow_primes().iter().map(|(p, _)| p.to_string()).collect();
    let mut checked = 0;
    for a in rings.iter().filter(|a| a.rank() > 2) {
        checked += 1;
        if a.is_primitive() {
            d.refute(Witness::sring(a));
        }
    }
    d.note(format!(
        "normal cyclic Sylow primes [{}]; {checked} nontrivial central S-rings checked",
        primes.join(", ")
    ))
}

/// A proper nontrivial normal subgroup `H` whose nontrivial cosets each lie
/// in a single conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaminaPair {
    pub subgroup: Vec<usize>,
}

pub fn camina_pairs(g: &Group) -> Vec<CaminaPair> {
    let n = g.order();
    let class_of = &g.conjugacy_classes().class_of;
    g.normal_subgroups()
        .into_iter()
        .filter(|h| h.order() > 1 && h.order() < n)
        .filter(|h| {
            (0..n)
                .filter(|&x| !h.contains(x))
                .all(|x| h.members.iter().all(|k| class_of[g.mul(k, x)] == class_of[x]))
        })
        .map(|h| CaminaPair { subgroup: h.members.into_vec() })
        .collect()
}

/// A group with a Camina pair has no proper primitive central S-ring.
pub fn camina_b_group_check(g: &Arc<Group>, limits: &EnumerationLimits) -> Result<Diagnosis> {
    let d = Diagnosis::new("camina", subject(g));
    if camina_pairs(g).is_empty() {
        return Ok(d.out_of_scope("no Camina pair"));
    }
    match enumerate_or_scope(g, limits)? {
        Ok(rings) => Ok(camina_on(g, &rings)),
        Err(reason) => Ok(d.out_of_scope(reason)),
    }
}

pub(super) fn camina_on(g: &Arc<Group>, rings: &[SRing]) -> Diagnosis {
    let mut d = Diagnosis::new("camina", subject(g));
    let pairs = camina_pairs(g);
    if pairs.is_empty() {
        return d.out_of_scope("no Camina pair");
    }
    let proper: Vec<&SRing> = rings.iter().filter(|a| a.is_proper_central()).collect();
    for a in &proper {
        if a.is_primitive() {
            d.refute(Witness::sring(a));
        }
    }
    if d.witnesses.is_empty() {
        for p in &pairs {
            d.witnesses.push(Witness::Subgroup { label: "Camina subgroup".into(), members: p.subgroup.clone() });
        }
    }
    d.note(format!("{} Camina pairs; {} proper central S-rings checked", pairs.len(), proper.len()))
}

/// The three hypotheses on a basic set `X` and subgroup `H`, together with
/// `X0 = {x in X : xH not inside X}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationInstance {
    pub x: Vec<usize>,
    pub h: Vec<usize>,
    pub meets: bool,
    pub escapes: bool,
    pub inner_in_radical: bool,
    pub x0: Vec<usize>,
}

impl SeparationInstance {
    pub fn new(g: &Group, x: &ElementSet, h: &Subgroup) -> Self {
        let inside = x.intersection(&h.members);
        let outside = x.difference(&h.members);
        let inner = g.generated_subgroup(&inside);
        let rad = g.radical(&outside);
        let x0 = ElementSet::new(
            x.iter().filter(|&y| !h.members.iter().all(|k| x.contains(g.mul(y, k)))),
        );
        SeparationInstance {
            x: x.as_slice().to_vec(),
            h: h.members.as_slice().to_vec(),
            meets: !inside.is_empty(),
            escapes: !outside.is_empty(),
            inner_in_radical: inner.members.is_subset(&rad.members),
            x0: x0.into_vec(),
        }
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.meets && self.escapes && self.inner_in_radical
    }
}

/// Under the separation hypotheses, `X = <X> \ rad(X)` and
/// `rad(X) <= H <= <X>`.
pub fn separating_subgroup_check(a: &SRing, x: usize, h: &Subgroup) -> Result<Diagnosis> {
    let g = a.group();
    if x >= a.rank() {
        return Err(VerifyError::InvalidArgument(format!("basic set index {x} out of range")));
    }
    if !g.is_subgroup(&h.members) {
        return Err(VerifyError::InvalidArgument(format!("{} is not a subgroup", h.members)));
    }
    let mut d = Diagnosis::new("separating", subject(g));
    let xs = a.basic_set(x);
    let inst = SeparationInstance::new(g, xs, h);
    if !inst.hypotheses_hold() {
        let mut failed = Vec::new();
        if !inst.meets {
            failed.push("X meets H");
        }
        if !inst.escapes {
            failed.push("X leaves H");
        }
        if !inst.inner_in_radical {
            failed.push("<X & H> inside rad(X \\ H)");
        }
        return Ok(d.out_of_scope(format!("hypothesis unmet: {}", failed.join(", "))));
    }
    if separation_conclusion(&mut d, g, xs, h) {
        d.notes.push("flagged for review: H is not inside <X>".into());
    }
    Ok(d)
}

/// Returns whether the instance was flagged for `H` reaching outside `<X>`.
fn separation_conclusion(d: &mut Diagnosis, g: &Group, xs: &ElementSet, h: &Subgroup) -> bool {
    let span = g.generated_subgroup(xs);
    let rad = g.radical(xs);
    let shape = span.members.difference(&rad.members);
    if &shape != xs {
        d.refute(Witness::set("X differs from <X> minus rad(X)", xs));
        d.witnesses.push(Witness::subgroup("H", h));
    }
    if !rad.members.is_subset(&h.members) {
        d.refute(Witness::subgroup("rad(X) is not inside H", h));
        d.witnesses.push(Witness::set("X", xs));
    }
    if !h.members.is_subset(&span.members) {
        // The hypotheses only see H through X & H and X \ H, so they are
        // unchanged when H is replaced by H & <X>; this part is flagged only.
        d.witnesses.push(Witness::subgroup("flagged: H is not inside <X>", h));
        d.witnesses.push(Witness::set("X", xs));
        return true;
    }
    false
}

/// Runs the separation check over every basic set of `a` and every normal
/// or cyclic subgroup of the group.
pub fn separating_subgroup_survey(a: &SRing) -> Diagnosis {
    let g = a.group();
    let mut subgroups = g.normal_subgroups();
    for c in g.cyclic_subgroups() {
        if !subgroups.iter().any(|s| s.members == c.members) {
            subgroups.push(c);
        }
    }
    let mut d = Diagnosis::new("separating", subject(g));
    let (mut met, mut flagged) = (0, 0);
    for xs in a.basic_sets() {
        for h in &subgroups {
            if SeparationInstance::new(g, xs, h).hypotheses_hold() {
                met += 1;
                flagged += usize::from(separation_conclusion(&mut d, g, xs, h));
            }
        }
    }
    let total = a.rank() * subgroups.len();
    d.note(format!(
        "rank {}: {met} of {total} (basic set, subgroup) pairs meet the hypotheses, {flagged} flagged with H outside <X>",
        a.rank()
    ))
}

/// For a noncyclic simple group that is not rational, the rational closure
/// of the class algebra is a proper primitive central S-ring.
pub fn simple_group_witness(g: &Arc<Group>) -> Result<Diagnosis> {
    let mut d = Diagnosis::new("simple_group", subject(g));
    if g.is_abelian() {
        return Ok(d.out_of_scope("abelian simple groups are cyclic"));
    }
    if !g.is_simple() {
        return Ok(d.out_of_scope("group is not simple"));
    }
    let a = SRing::class_algebra(g);
    if is_rational(&a)? {
        return Ok(d.out_of_scope("rational simple group: every class is fixed by all multipliers"));
    }
    let reps: Vec<usize> = a.basic_sets().iter().map(|c| c.min_element().unwrap()).collect();
    let pair = reps.iter().skip(1).find_map(|&x| {
        reps.iter().skip(1).find(|&&y| g.element_order(y) != g.element_order(x)).map(|&y| (x, y))
    });
    let Some((x, y)) = pair else {
        return Ok(d.out_of_scope("all nonidentity elements have the same order"));
    };
    let class_of = &g.conjugacy_classes().class_of;
    let tx = trace_set(g, a.basic_set(class_of[x]));
    let ty = trace_set(g, a.basic_set(class_of[y]));
    if tx == ty {
        d.refute(Witness::Element { label: "trace equals that of an element of another order".into(), element: x });
    }
    let tc = rational_closure(&a)?;
    let closed = &tc.closed;
    if closed.rank() < 3 || closed.same_partition(&a) || !closed.is_primitive() {
        d.refute(Witness::sring(closed));
    } else {
        d.witnesses.push(Witness::sring(closed));
    }
    let d = d.note(format!(
        "elements {x} and {y} have orders {} and {}; rational closure has rank {}",
        g.element_order(x),
        g.element_order(y),
        closed.rank()
    ));
    if d.verdict == super::Verdict::Confirmed {
        Ok(d.note("not a generalized B-group: the rational closure is proper and primitive"))
    } else {
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        build_alternating, build_cyclic, build_dihedral, build_frobenius, build_quaternion,
        build_symmetric,
    };
    use crate::verifiers::Verdict;

    fn limits() -> EnumerationLimits {
        EnumerationLimits::default()
    }

    #[test]
    fn wielandt_small() {
        for g in [build_symmetric(3).unwrap(), build_dihedral(18).unwrap(), build_cyclic(4).unwrap()] {
            let d = wielandt_central_check(&Arc::new(g), &limits()).unwrap();
            assert_eq!(d.verdict, Verdict::Confirmed, "{d:?}");
        }
        let z5 = Arc::new(build_cyclic(5).unwrap());
        assert_eq!(wielandt_central_check(&z5, &limits()).unwrap().verdict, Verdict::OutOfScope);
        let a5 = Arc::new(build_alternating(5).unwrap());
        assert_eq!(wielandt_central_check(&a5, &limits()).unwrap().verdict, Verdict::OutOfScope);
    }

    #[test]
    fn camina_pairs_small() {
        let s3 = build_symmetric(3).unwrap();
        assert_eq!(camina_pairs(&s3), vec![CaminaPair { subgroup: vec![0, 3, 4] }]);
        let d8 = build_dihedral(8).unwrap();
        assert_eq!(camina_pairs(&d8), vec![CaminaPair { subgroup: d8.center().members.into_vec() }]);
        let q8 = build_quaternion();
        assert_eq!(camina_pairs(&q8), vec![CaminaPair { subgroup: q8.center().members.into_vec() }]);
        assert!(camina_pairs(&build_cyclic(6).unwrap()).is_empty());
        let f21 = build_frobenius(7, 3).unwrap();
        let pairs = camina_pairs(&f21);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].subgroup.len(), 7);
    }

    #[test]
    fn camina_groups_confirmed() {
        for g in [build_dihedral(8).unwrap(), build_frobenius(7, 3).unwrap()] {
            let d = camina_b_group_check(&Arc::new(g), &limits()).unwrap();
            assert_eq!(d.verdict, Verdict::Confirmed, "{d:?}");
        }
        let z6 = Arc::new(build_cyclic(6).unwrap());
        assert_eq!(camina_b_group_check(&z6, &limits()).unwrap().verdict, Verdict::OutOfScope);
    }

    #[test]
    fn separation_instances() {
        let s3 = Arc::new(build_symmetric(3).unwrap());
        let a = SRing::class_algebra(&s3);
        let a3 = s3.subgroup(ElementSet::new([0, 3, 4])).unwrap();
        let d = separating_subgroup_check(&a, 2, &a3).unwrap();
        assert_eq!(d.verdict, Verdict::OutOfScope);

        // trivial ring on Z6 with H = {0, 3}: hypotheses hold and so do the conclusions
        let z6 = Arc::new(build_cyclic(6).unwrap());
        let t = SRing::trivial(&z6);
        let h = z6.subgroup(ElementSet::new([0, 3])).unwrap();
        let inst = SeparationInstance::new(&z6, t.basic_set(1), &h);
        assert!(inst.hypotheses_hold());
        assert_eq!(separating_subgroup_check(&t, 1, &h).unwrap().verdict, Verdict::Confirmed);

        let d18 = Arc::new(build_dihedral(18).unwrap());
        let a = SRing::class_algebra(&d18);
        let refl = (0..a.rank()).find(|&i| a.basic_set(i).len() == 9).unwrap();
        let h3 = d18.subgroup(ElementSet::new([0, 3, 6])).unwrap();
        assert_eq!(separating_subgroup_check(&a, refl, &h3).unwrap().verdict, Verdict::OutOfScope);
        assert_eq!(separating_subgroup_survey(&a).verdict, Verdict::Confirmed);
    }

    #[test]
    fn a5_simple_witness() {
        let a5 = Arc::new(build_alternating(5).unwrap());
        let d = simple_group_witness(&a5).unwrap();
        assert_eq!(d.verdict, Verdict::Confirmed, "{d:?}");
        match &d.witnesses[0] {
            Witness::SRing { rank, primitive, .. } => assert!(*rank == 4 && *primitive),
            w => panic!("unexpected witness {w:?}"),
        }
        let z5 = Arc::new(build_cyclic(5).unwrap());
        assert_eq!(simple_group_witness(&z5).unwrap().verdict, Verdict::OutOfScope);
        let s3 = Arc::new(build_symmetric(3).unwrap());
        assert_eq!(simple_group_witness(&s3).unwrap().verdict, Verdict::OutOfScope);
    }
}
