//! Multipliers `x -> x^m` acting on central S-rings, traces, rational
//! closures and rationality tests.

mod characters;

use thiserror::Error;

use crate::arith;
use crate::group::{ElementSet, Group};
use crate::ring::power_map_set;
use crate::sring::{SRing, SRingError};

pub use characters::{
    central_characters, is_rational_numeric, values_galois_consistent, CharacterReport,
    CharacterTableA, ComplexValue, DEFAULT_CHARACTER_SEED, DEFAULT_TOLERANCE,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RationalityError {
    #[error("multiplier {m} is not coprime to the group order {n}")]
    GcdNotOne { m: i64, n: usize },
    #[error("S-ring is not central")]
    NotCentral,
    #[error("S-ring is not commutative")]
    NonCommutative,
    #[error("multiplier theorem violated: {0}")]
    TheoremViolation(String),
    #[error("random combination stayed degenerate after {0} attempts")]
    DegenerateCombination(usize),
    #[error(transparent)]
    SRing(#[from] SRingError),
}

pub type Result<T, E = RationalityError> = std::result::Result<T, E>;

/// The permutation of conjugacy classes induced by `x -> x^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierAction {
    pub m: i64,
    pub class_perm: Vec<usize>,
}

fn check_unit(g: &Group, m: i64) -> Result<()> {
    if arith::gcd_i64(m, g.order() as i64) != 1 {
        return Err(RationalityError::GcdNotOne { m, n: g.order() });
    }
    Ok(())
}

pub fn multiplier_action(g: &Group, m: i64) -> Result<MultiplierAction> {
    check_unit(g, m)?;
    let table = g.conjugacy_classes();
    let class_perm = table
        .classes
        .iter()
        .map(|c| table.class_of[g.pow(c.min_element().unwrap(), m)])
        .collect();
    Ok(MultiplierAction { m, class_perm })
}

/// The permutation `X -> X^(m)` of basic sets of a central S-ring.
///
/// A non-basic image would contradict the multiplier theorem and is
/// reported as [`RationalityError::TheoremViolation`].
pub fn sigma_action(a: &SRing, m: i64) -> Result<Vec<usize>> {
    let g = a.group();
    check_unit(g, m)?;
    if !a.is_central() {
        return Err(RationalityError::NotCentral);
    }
    let mut perm = Vec::with_capacity(a.rank());
    let mut hit = vec![false; a.rank()];
    for (i, x) in a.basic_sets().iter().enumerate() {
        let image = power_map_set(g, x, m);
        let j = a.set_of(image.min_element().unwrap());
        if a.basic_set(j) != &image {
            return Err(RationalityError::TheoremViolation(format!(
                "image of basic set {i} {x} under m={m} is {image}, not a basic set"
            )));
        }
        if hit[j] {
            return Err(RationalityError::TheoremViolation(format!(
                "m={m} maps two basic sets onto {j}"
            )));
        }
        hit[j] = true;
        perm.push(j);
    }
    Ok(perm)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismReport {
    pub m: i64,
    pub perm: Vec<usize>,
    pub triples_checked: usize,
}

/// Checks `c[X^(m)][Y^(m)][Z^(m)] = c[X][Y][Z]` over all triples of basic sets.
pub fn verify_automorphism(a: &SRing, m: i64) -> Result<AutomorphismReport> {
    let perm = sigma_action(a, m)?;
    let c = a.constants();
    let r = a.rank();
    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                if c.get(perm[x], perm[y], perm[z]) != c.get(x, y, z) {
                    return Err(RationalityError::TheoremViolation(format!(
                        "structure constant ({x},{y},{z}) not preserved by m={m}"
                    )));
                }
            }
        }
    }
    Ok(AutomorphismReport { m, perm, triples_checked: r * r * r })
}

/// Union of `X^(m)` over all `m` coprime to the group order.
pub fn trace_set(g: &Group, x: &ElementSet) -> ElementSet {
    let n = g.order() as u64;
    let mut out = ElementSet::empty();
    for m in arith::units_mod(n) {
        out = out.union(&power_map_set(g, x, m as i64));
    }
    out
}

/// A central S-ring together with its fusion by multiplier orbits.
#[derive(Debug, Clone)]
pub struct TraceClosure {
    pub original: SRing,
    /// Orbits of basic-set indices, each sorted, ordered by least member.
    pub orbits: Vec<Vec<usize>>,
    pub closed: SRing,
}

pub fn rational_closure(a: &SRing) -> Result<TraceClosure> {
    let g = a.group();
    if !a.is_central() {
        return Err(RationalityError::NotCentral);
    }
    let r = a.rank();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for m in arith::units_mod(g.order() as u64) {
        let perm = sigma_action(a, m as i64)?;
        for (i, &j) in perm.iter().enumerate() {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut root_index = vec![usize::MAX; r];
    for i in 0..r {
        let root = find(&mut parent, i);
        if root_index[root] == usize::MAX {
            root_index[root] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[root_index[root]].push(i);
    }
    let parts = orbits
        .iter()
        .map(|o| ElementSet::new(o.iter().flat_map(|&i| a.basic_set(i).iter())))
        .collect();
    let closed = SRing::from_partition(g, parts).map_err(|e| {
        RationalityError::TheoremViolation(format!("rational closure is not an S-ring: {e}"))
    })?;
    Ok(TraceClosure { original: a.clone(), orbits, closed })
}

/// Every multiplier fixes every basic set.
pub fn is_rational(a: &SRing) -> Result<bool> {
    for m in arith::units_mod(a.group().order() as u64) {
        let perm = sigma_action(a, m as i64)?;
        if perm.iter().enumerate().any(|(i, &j)| i != j) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::{build_alternating, build_cyclic, build_dihedral, build_symmetric};

    fn five_classes(a: &SRing) -> Vec<usize> {
        let g = a.group();
        (0..a.rank())
            .filter(|&i| g.element_order(a.basic_set(i).min_element().unwrap()) == 5)
            .collect()
    }

    #[test]
    fn identity_multiplier() {
        let g = Arc::new(build_dihedral(18).unwrap());
        let a = SRing::class_algebra(&g);
        for m in [1i64, 19, -17] {
            let perm = sigma_action(&a, m).unwrap();
            assert_eq!(perm, (0..a.rank()).collect::<Vec<_>>());
        }
        assert!(matches!(sigma_action(&a, 3), Err(RationalityError::GcdNotOne { .. })));
    }

    #[test]
    fn a5_multipliers() {
        let g = Arc::new(build_alternating(5).unwrap());
        let a = SRing::class_algebra(&g);
        let five = five_classes(&a);
        let perm = sigma_action(&a, 7).unwrap();
        for i in 0..a.rank() {
            let expected = if i == five[0] { five[1] } else if i == five[1] { five[0] } else { i };
            assert_eq!(perm[i], expected);
        }
        let rep = verify_automorphism(&a, 7).unwrap();
        assert_eq!(rep.triples_checked, 125);
        assert!(!is_rational(&a).unwrap());
        let tc = rational_closure(&a).unwrap();
        assert_eq!(tc.closed.rank(), 4);
        assert!(tc.closed.is_primitive());
        let tr = trace_set(&g, a.basic_set(five[0]));
        assert_eq!(tr.len(), 24);
        assert!(tr.iter().all(|x| g.element_order(x) == 5));
    }

    #[test]
    fn s3_is_rational() {
        let g = Arc::new(build_symmetric(3).unwrap());
        let a = SRing::class_algebra(&g);
        assert_eq!(sigma_action(&a, 5).unwrap(), vec![0, 1, 2]);
        assert!(is_rational(&a).unwrap());
        assert!(rational_closure(&a).unwrap().closed.same_partition(&a));
        assert!(is_rational(&SRing::trivial(&g)).unwrap());
    }

    #[test]
    fn cyclic_five_closure_is_trivial() {
        let g = Arc::new(build_cyclic(5).unwrap());
        let a = SRing::class_algebra(&g);
        assert!(!is_rational(&a).unwrap());
        let tc = rational_closure(&a).unwrap();
        assert!(tc.closed.same_partition(&SRing::trivial(&g)));
        assert_eq!(tc.orbits, vec![vec![0], vec![1, 2, 3, 4]]);
    }

    #[test]
    fn traces_of_subgroups_and_identity() {
        let g = build_dihedral(18).unwrap();
        assert_eq!(trace_set(&g, &ElementSet::singleton(0)), ElementSet::singleton(0));
        for h in g.normal_subgroups().iter().chain(g.cyclic_subgroups().iter()) {
            assert_eq!(trace_set(&g, &h.members), h.members);
        }
    }

    #[test]
    fn trivial_ring_automorphism() {
        let g = Arc::new(build_cyclic(7).unwrap());
        let t = SRing::trivial(&g);
        for m in 1..7 {
            assert_eq!(verify_automorphism(&t, m).unwrap().perm, vec![0, 1]);
        }
        let d = Arc::new(build_dihedral(18).unwrap());
        verify_automorphism(&SRing::class_algebra(&d), 5).unwrap();
    }

    #[test]
    fn non_central_rejected() {
        let g = Arc::new(build_symmetric(3).unwrap());
        let a = SRing::from_partition(
            &g,
            vec![ElementSet::singleton(0), ElementSet::singleton(1), ElementSet::new([2, 3, 4, 5])],
        )
        .unwrap();
        assert_eq!(sigma_action(&a, 5), Err(RationalityError::NotCentral));
    }
}
