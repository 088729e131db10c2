//! Exhaustive enumeration of central S-rings.
//!
//! A central S-ring is a partition of the conjugacy classes (with the
//! identity class alone) whose block sums multiply with coefficients
//! constant on blocks. The search fixes one block at a time: the block
//! containing the least unassigned class, chosen among classes that are
//! still indistinguishable by every product of completed blocks. Those
//! indistinguishability cells are refined after each new block, so a
//! candidate block never straddles two cells.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use super::{Result, SRing, SRingError};
use crate::group::{ElementSet, Group};

/// Hard ceiling imposed by the bitmask representation of class sets.
const MAX_MASK_CLASSES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_classes: usize,
    pub max_results: usize,
    /// Worker threads for the top-level branches; 1 runs inline.
    pub workers: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_classes: 14, max_results: 1_000_000, workers: 1 }
    }
}

/// All central S-rings over `group`, sorted by rank and then by canonical form.
pub fn enumerate_central_srings(group: &Arc<Group>, limits: &EnumerationLimits) -> Result<Vec<SRing>> {
    let k = group.class_count();
    if k > limits.max_classes || k > MAX_MASK_CLASSES {
        return Err(SRingError::ClassCountExceeded { classes: k, cap: limits.max_classes.min(MAX_MASK_CLASSES) });
    }
    let search = Search::new(group);
    let root = Node {
        unassigned: search.all & !1,
        blocks: vec![1],
        cells: if k > 1 { vec![search.all & !1] } else { vec![] },
    };
    let counter = AtomicUsize::new(0);
    let partitions: Vec<Vec<u64>> = if limits.workers > 1 && root.unassigned != 0 {
        let children = search.children(&root);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(limits.workers)
            .build()
            .map_err(|e| SRingError::Internal(e.to_string()))?;
        let parts: Vec<Result<Vec<Vec<u64>>>> = pool.install(|| {
            children
                .into_par_iter()
                .map(|child| {
                    let mut out = Vec::new();
                    search.dfs(child, &mut out, &counter, limits.max_results)?;
                    Ok(out)
                })
                .collect()
        });
        let mut all = Vec::new();
        for p in parts {
            all.extend(p?);
        }
        all
    } else {
        let mut out = Vec::new();
        search.dfs(root, &mut out, &counter, limits.max_results)?;
        out
    };

    let classes = &group.conjugacy_classes().classes;
    let mut rings = partitions
        .into_iter()
        .map(|blocks| {
            let parts = blocks
                .iter()
                .map(|&m| ElementSet::new(bits(m).flat_map(|c| classes[c].iter())))
                .collect();
            SRing::from_partition(group, parts)
                .map_err(|e| SRingError::Internal(format!("enumerated partition failed validation: {e}")))
        })
        .collect::<Result<Vec<SRing>>>()?;
    rings.sort_by_cached_key(|a| (a.rank(), a.canonical_form()));
    rings.dedup_by(|a, b| a.same_partition(b));
    Ok(rings)
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

struct Search {
    k: usize,
    all: u64,
    inv_class: Vec<usize>,
    /// `cc[(a k + b) k + w]`: coefficient at any element of class `w` in the product of class sums `a` and `b`.
    cc: Vec<u64>,
}

struct Node {
    unassigned: u64,
    blocks: Vec<u64>,
    cells: Vec<u64>,
}

impl Search {
    fn new(group: &Group) -> Self {
        let table = group.conjugacy_classes();
        let k = table.len();
        let mut cc = vec![0u64; k * k * k];
        for (w, cw) in table.classes.iter().enumerate() {
            let z = cw.min_element().unwrap();
            for (a, ca) in table.classes.iter().enumerate() {
                for x in ca.iter() {
                    let b = table.class_of[group.mul(group.inv(x), z)];
                    cc[(a * k + b) * k + w] += 1;
                }
            }
        }
        let inv_class = (0..k).map(|c| group.inverse_class(c)).collect();
        let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        Search { k, all, inv_class, cc }
    }

    fn inverse_mask(&self, m: u64) -> u64 {
        bits(m).fold(0, |acc, c| acc | 1 << self.inv_class[c])
    }

    fn product(&self, x: u64, y: u64) -> Vec<u64> {
        let k = self.k;
        let mut v = vec![0u64; k];
        for a in bits(x) {
            for b in bits(y) {
                let base = (a * k + b) * k;
                for (w, slot) in v.iter_mut().enumerate() {
                    *slot += self.cc[base + w];
                }
            }
        }
        v
    }

    fn children(&self, node: &Node) -> Vec<Node> {
        let mut out = Vec::new();
        if node.unassigned == 0 {
            return out;
        }
        let c = node.unassigned.trailing_zeros() as usize;
        let cbit = 1u64 << c;
        let cell = *node.cells.iter().find(|&&cl| cl & cbit != 0).expect("cells cover unassigned");
        let others = cell & !cbit;
        let mut sub = others;
        loop {
            if let Some(child) = self.extend(node, cbit | sub) {
                out.push(child);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        out
    }

    /// Tries to close block `b` (and its inverse block) at `node`.
    fn extend(&self, node: &Node, b: u64) -> Option<Node> {
        let binv = self.inverse_mask(b);
        let mut new_blocks = vec![b];
        if binv & b != 0 {
            if binv != b {
                return None;
            }
        } else {
            if !node.cells.iter().any(|&cl| binv & !cl == 0) {
                return None;
            }
            new_blocks.push(binv);
        }
        let taken = b | binv;
        let mut blocks = node.blocks.clone();
        blocks.extend(&new_blocks);
        let mut cells: Vec<u64> =
            node.cells.iter().map(|&cl| cl & !taken).filter(|&cl| cl != 0).collect();
        for &nb in &new_blocks {
            for &y in &blocks {
                let v = self.product(nb, y);
                for &z in &blocks {
                    let first = v[z.trailing_zeros() as usize];
                    if bits(z).any(|w| v[w] != first) {
                        return None;
                    }
                }
                cells = refine(&cells, &v);
            }
        }
        Some(Node { unassigned: node.unassigned & !taken, blocks, cells })
    }

    fn dfs(&self, node: Node, out: &mut Vec<Vec<u64>>, counter: &AtomicUsize, max: usize) -> Result<()> {
        if node.unassigned == 0 {
            if counter.fetch_add(1, Ordering::Relaxed) + 1 > max {
                return Err(SRingError::ResultLimitExceeded(max));
            }
            out.push(node.blocks);
            return Ok(());
        }
        for child in self.children(&node) {
            self.dfs(child, out, counter, max)?;
        }
        Ok(())
    }
}

/// Splits every cell by the values of `v`.
fn refine(cells: &[u64], v: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(cells.len());
    for &cl in cells {
        let mut groups: Vec<(u64, u64)> = Vec::new();
        for w in bits(cl) {
            match groups.iter_mut().find(|(val, _)| *val == v[w]) {
                Some((_, m)) => *m |= 1 << w,
                None => groups.push((v[w], 1 << w)),
            }
        }
        out.extend(groups.into_iter().map(|(_, m)| m));
    }
    out
}
