//! Brute-force reference computations that only read the Cayley table.

#![allow(dead_code)]

use std::collections::BTreeSet;

use schurring::group::Group;

/// Conjugacy classes by direct conjugation, each sorted, ordered by least element.
pub fn classes(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|h| g.mul(g.mul(g.inv(h), x), h)).collect();
        for &y in &class {
            seen[y] = true;
        }
        out.push(class.into_iter().collect());
    }
    out
}

pub fn indicator(n: usize, set: &[usize]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &x in set {
        v[x] += 1;
    }
    v
}

pub fn convolve(g: &Group, a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = g.order();
    let mut out = vec![0; n];
    for x in 0..n {
        if a[x] == 0 {
            continue;
        }
        for y in 0..n {
            out[g.mul(x, y)] += a[x] * b[y];
        }
    }
    out
}

/// `(sum of X)^p` with coefficients reduced mod `p`, by repeated multiplication.
pub fn power_mod(g: &Group, set: &[usize], p: u64) -> Vec<u64> {
    let n = g.order();
    let base = indicator(n, set);
    let mut acc = vec![0u64; n];
    acc[0] = 1;
    for _ in 0..p {
        let mut next = vec![0u64; n];
        for x in 0..n {
            if acc[x] == 0 {
                continue;
            }
            for y in 0..n {
                if base[y] != 0 {
                    let z = g.mul(x, y);
                    next[z] = (next[z] + acc[x]) % p;
                }
            }
        }
        acc = next;
    }
    acc
}

/// Checks the Schur ring axioms for a partition of the group directly.
pub fn is_sring(g: &Group, blocks: &[Vec<usize>]) -> bool {
    let n = g.order();
    let mut block_of = vec![usize::MAX; n];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            if block_of[x] != usize::MAX {
                return false;
            }
            block_of[x] = i;
        }
    }
    if block_of.contains(&usize::MAX) || !blocks.iter().any(|b| b == &vec![0]) {
        return false;
    }
    for b in blocks {
        let inv: BTreeSet<usize> = b.iter().map(|&x| g.inv(x)).collect();
        if !blocks.iter().any(|c| c.iter().copied().collect::<BTreeSet<_>>() == inv) {
            return false;
        }
    }
    let sums: Vec<Vec<i64>> = blocks.iter().map(|b| indicator(n, b)).collect();
    for a in &sums {
        for b in &sums {
            let prod = convolve(g, a, b);
            for block in blocks {
                if block.iter().any(|&z| prod[z] != prod[block[0]]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every set partition of `items`, as lists of blocks.
pub fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn go(items: &[usize], i: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == items.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(items[i]);
            go(items, i + 1, cur, out);
            cur[b].pop();
        }
        cur.push(vec![items[i]]);
        go(items, i + 1, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(items, 0, &mut Vec::new(), &mut out);
    out
}

/// All central S-rings, found by testing every partition of the nontrivial
/// classes, in canonical form: sorted blocks, sorted by least element.
pub fn central_srings(g: &Group) -> Vec<Vec<Vec<usize>>> {
    let cls = classes(g);
    let nontrivial: Vec<usize> = (1..cls.len()).collect();
    let mut out = Vec::new();
    for partition in set_partitions(&nontrivial) {
        let mut blocks: Vec<Vec<usize>> = vec![vec![0]];
        for part in partition {
            let mut b: Vec<usize> = part.iter().flat_map(|&c| cls[c].iter().copied()).collect();
            b.sort_unstable();
            blocks.push(b);
        }
        blocks.sort();
        if is_sring(g, &blocks) {
            out.push(blocks);
        }
    }
    out.sort();
    out
}

/// Normal subgroups that make a Camina pair, found by scanning cosets.
pub fn camina_subgroups(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    let cls = classes(g);
    let class_of = |x: usize| cls.iter().position(|c| c.contains(&x)).unwrap();
    let mut out = Vec::new();
    for mask in 0u64..(1 << (cls.len() - 1)) {
        let mut h: Vec<usize> = vec![0];
        for (i, c) in cls.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                h.extend(c);
            }
        }
        h.sort_unstable();
        if h.len() == 1 || h.len() == n || n % h.len() != 0 {
            continue;
        }
        let closed = h.iter().all(|&a| h.iter().all(|&b| h.binary_search(&g.mul(a, b)).is_ok()));
        if !closed {
            continue;
        }
        let camina = (0..n)
            .filter(|x| h.binary_search(x).is_err())
            .all(|x| h.iter().all(|&k| class_of(g.mul(k, x)) == class_of(x)));
        if camina {
            out.push(h);
        }
    }
    out.sort();
    out
}
