//! Schur rings over finite groups.
//!
//! An [`SRing`] is stored as its partition of the group into basic sets,
//! validated against S1 (`{e}` is basic), S2 (closure under inversion) and
//! S3 (products of basic sums are constant on basic sets). Structure
//! constants are computed once at validation time.

mod doc;
mod enumerate;

use std::sync::Arc;

use thiserror::Error;

use crate::group::{ElementSet, Group, Subgroup};

pub use doc::{EnumerationReport, GroupRef, SRingDoc};
pub use enumerate::{enumerate_central_srings, EnumerationLimits};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SRingError {
    #[error("parts do not partition the group: {0}")]
    NotPartition(String),
    #[error("S1 fails: the identity is not a singleton part (its part is {0})")]
    S1Violation(ElementSet),
    #[error("S2 fails: the inverse of {0} is not a part")]
    S2Violation(ElementSet),
    #[error(
        "S3 fails: product of {x} and {y} has coefficient {c1} at {z1} but {c2} at {z2} in the same part"
    )]
    S3Violation { x: ElementSet, y: ElementSet, z1: usize, z2: usize, c1: u64, c2: u64 },
    #[error("group has {classes} conjugacy classes, above the cap of {cap}")]
    ClassCountExceeded { classes: usize, cap: usize },
    #[error("enumeration produced more than {0} S-rings")]
    ResultLimitExceeded(usize),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = SRingError> = std::result::Result<T, E>;

/// Dense tensor `c[X][Y][Z]` over basic-set indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    rank: usize,
    data: Vec<u64>,
}

impl StructureConstants {
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> u64 {
        self.data[(x * self.rank + y) * self.rank + z]
    }

    /// The left-multiplication matrix of basic set `x`: entry `(z, y)` is `c[x][y][z]`.
    pub fn left_matrix(&self, x: usize) -> Vec<Vec<u64>> {
        (0..self.rank)
            .map(|z| (0..self.rank).map(|y| self.get(x, y, z)).collect())
            .collect()
    }
}

/// A validated S-ring.
#[derive(Debug, Clone)]
pub struct SRing {
    group: Arc<Group>,
    basic_sets: Vec<ElementSet>,
    set_of: Vec<usize>,
    inverse_of: Vec<usize>,
    is_central: bool,
    constants: StructureConstants,
}

/// A-subgroups with their join and meet tables (indices into `members`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASubgroupLattice {
    pub members: Vec<Subgroup>,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
}

impl SRing {
    /// Validates `parts` as the basic sets of an S-ring over `group`.
    pub fn from_partition(group: &Arc<Group>, parts: Vec<ElementSet>) -> Result<SRing> {
        let n = group.order();
        let mut set_of = vec![usize::MAX; n];
        let mut parts = parts;
        parts.sort_by_key(ElementSet::canonical_key);
        for (i, p) in parts.iter().enumerate() {
            if p.is_empty() {
                return Err(SRingError::NotPartition("empty part".into()));
            }
            for x in p.iter() {
                if x >= n {
                    return Err(SRingError::NotPartition(format!("element {x} out of range")));
                }
                if set_of[x] != usize::MAX {
                    return Err(SRingError::NotPartition(format!("element {x} in two parts")));
                }
                set_of[x] = i;
            }
        }
        if let Some(x) = set_of.iter().position(|&s| s == usize::MAX) {
            return Err(SRingError::NotPartition(format!("element {x} is not covered")));
        }
        let e_part = &parts[set_of[0]];
        if e_part.len() != 1 {
            return Err(SRingError::S1Violation(e_part.clone()));
        }
        let mut inverse_of = vec![0; parts.len()];
        for (i, p) in parts.iter().enumerate() {
            let target = set_of[group.inv(p.min_element().unwrap())];
            let ok = parts[target].len() == p.len() && p.iter().all(|x| set_of[group.inv(x)] == target);
            if !ok {
                return Err(SRingError::S2Violation(p.clone()));
            }
            inverse_of[i] = target;
        }
        let constants = compute_constants(group, &parts, &set_of)?;
        let classes = group.conjugacy_classes();
        let is_central = classes
            .classes
            .iter()
            .all(|c| c.iter().all(|x| set_of[x] == set_of[c.min_element().unwrap()]));
        Ok(SRing { group: group.clone(), basic_sets: parts, set_of, inverse_of, is_central, constants })
    }

    /// The class algebra `Z(ZG)`: basic sets are the conjugacy classes.
    pub fn class_algebra(group: &Arc<Group>) -> SRing {
        let classes = group.conjugacy_classes().classes.clone();
        SRing::from_partition(group, classes).expect("the class algebra is an S-ring")
    }

    /// The rank-2 ring spanned by `e` and the sum of all elements
    /// (rank 1 over the trivial group).
    pub fn trivial(group: &Arc<Group>) -> SRing {
        let n = group.order();
        let mut parts = vec![ElementSet::singleton(0)];
        if n > 1 {
            parts.push(ElementSet::new(1..n));
        }
        SRing::from_partition(group, parts).expect("the trivial partition is an S-ring")
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn basic_sets(&self) -> &[ElementSet] {
        &self.basic_sets
    }

    pub fn basic_set(&self, i: usize) -> &ElementSet {
        &self.basic_sets[i]
    }

    pub fn rank(&self) -> usize {
        self.basic_sets.len()
    }

    /// Index of the basic set containing element `x`.
    pub fn set_of(&self, x: usize) -> usize {
        self.set_of[x]
    }

    /// Index of the basic set `X^-1`.
    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse_of[i]
    }

    pub fn is_central(&self) -> bool {
        self.is_central
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|x| {
            (0..r).all(|y| (0..r).all(|z| self.constants.get(x, y, z) == self.constants.get(y, x, z)))
        })
    }

    /// Basic sets as sorted element lists, themselves sorted lexicographically.
    pub fn canonical_form(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> =
            self.basic_sets.iter().map(|s| s.as_slice().to_vec()).collect();
        v.sort();
        v
    }

    /// True iff `x` is a union of basic sets.
    pub fn is_a_set(&self, x: &ElementSet) -> bool {
        x.iter().all(|g| {
            let b = &self.basic_sets[self.set_of[g]];
            b.is_subset(x)
        })
    }

    /// Basic-set indices whose union is `x`, if `x` is an A-set.
    pub fn decompose(&self, x: &ElementSet) -> Option<Vec<usize>> {
        if !self.is_a_set(x) {
            return None;
        }
        let mut idx: Vec<usize> = x.iter().map(|g| self.set_of[g]).collect();
        idx.sort_unstable();
        idx.dedup();
        Some(idx)
    }

    pub fn a_subgroups(&self) -> ASubgroupLattice {
        let seeds = self
            .basic_sets
            .iter()
            .map(|x| self.group.generated_subgroup(x).members)
            .collect();
        let members = self.group.join_closure(seeds);
        let find = |s: &ElementSet| members.iter().position(|h| &h.members == s);
        let k = members.len();
        let mut join = vec![vec![0; k]; k];
        let mut meet = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                let u = members[i].members.union(&members[j].members);
                join[i][j] = find(&self.group.generated_subgroup(&u).members)
                    .expect("A-subgroups closed under join");
                meet[i][j] = find(&members[i].members.intersection(&members[j].members))
                    .expect("A-subgroups closed under meet");
            }
        }
        ASubgroupLattice { members, join, meet }
    }

    /// Only `{e}` and the whole group are A-subgroups; tested as
    /// `<X> = G` for every nonidentity basic set `X`.
    pub fn is_primitive(&self) -> bool {
        let n = self.group.order();
        self.basic_sets
            .iter()
            .skip(1)
            .all(|x| self.group.generated_subgroup(x).order() == n)
    }

    /// `rad(X)` of the basic set with index `i`.
    pub fn radical_of_basic(&self, i: usize) -> Subgroup {
        let r = self.group.radical(&self.basic_sets[i]);
        debug_assert!(self.is_a_set(&r.members), "radical of a basic set is an A-set");
        r
    }

    /// True iff every basic set of `self` is a union of basic sets of `finer`.
    pub fn is_fusion_of(&self, finer: &SRing) -> bool {
        *self.group == *finer.group
            && finer
                .basic_sets
                .iter()
                .all(|y| y.iter().all(|g| self.set_of[g] == self.set_of[y.min_element().unwrap()]))
    }

    /// Central, of rank above 2, and strictly coarser than the class algebra.
    pub fn is_proper_central(&self) -> bool {
        self.is_central && self.rank() > 2 && self.rank() < self.group.class_count()
    }

    /// Same group and same basic sets.
    pub fn same_partition(&self, other: &SRing) -> bool {
        *self.group == *other.group && self.basic_sets == other.basic_sets
    }
}

fn compute_constants(
    group: &Group,
    parts: &[ElementSet],
    set_of: &[usize],
) -> Result<StructureConstants> {
    let n = group.order();
    let r = parts.len();
    let mut data = vec![0u64; r * r * r];
    let mut counts = vec![0u64; n];
    for (i, x) in parts.iter().enumerate() {
        for (j, y) in parts.iter().enumerate() {
            counts.iter_mut().for_each(|c| *c = 0);
            for a in x.iter() {
                for b in y.iter() {
                    counts[group.mul(a, b)] += 1;
                }
            }
            for (k, z) in parts.iter().enumerate() {
                let z1 = z.min_element().unwrap();
                let c1 = counts[z1];
                if let Some(z2) = z.iter().find(|&g| counts[g] != c1) {
                    return Err(SRingError::S3Violation {
                        x: x.clone(),
                        y: y.clone(),
                        z1,
                        z2,
                        c1,
                        c2: counts[z2],
                    });
                }
                data[(i * r + j) * r + k] = c1;
            }
            debug_assert!(counts.iter().enumerate().all(|(g, &c)| c == data[(i * r + j) * r + set_of[g]]));
        }
    }
    Ok(StructureConstants { rank: r, data })
}
