use std::fmt;

use serde::{Deserialize, Serialize};

/// A sorted, duplicate-free set of element indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn new<I: IntoIterator<Item = usize>>(items: I) -> Self {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }

    pub fn empty() -> Self {
        ElementSet(Vec::new())
    }

    pub fn singleton(x: usize) -> Self {
        ElementSet(vec![x])
    }

    /// All indices `0..n`.
    pub fn full(n: usize) -> Self {
        ElementSet((0..n).collect())
    }

    /// Builds a set from a membership mask.
    pub fn from_mask(mask: &[bool]) -> Self {
        ElementSet(
            mask.iter()
                .enumerate()
                .filter_map(|(i, &m)| m.then_some(i))
                .collect(),
        )
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.0 {
            m[x] = true;
        }
        m
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_element(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.iter().filter(|&x| other.contains(x)).collect())
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.iter().filter(|&x| !other.contains(x)).collect())
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| !other.contains(x))
    }

    /// Sort key used for canonical ordering of basic sets and classes.
    pub fn canonical_key(&self) -> (usize, usize) {
        (self.len(), self.min_element().unwrap_or(usize::MAX))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::new(iter)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
