//! Finite groups given by full multiplication tables.
//!
//! Element `0` is always the identity. Everything derived from a [`Group`]
//! (classes, orders, subgroups) is computed directly from the table.

mod build;
mod doc;
mod perm;
mod set;

use std::collections::VecDeque;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith;

pub use build::{
    build_alternating, build_cyclic, build_dicyclic, build_dihedral, build_extraspecial,
    build_frobenius, build_quaternion, build_symmetric, direct_product, direct_product_capped,
};
pub use doc::GroupDoc;
pub use perm::{from_permutation_generators, parse_generators, Permutation};
pub use set::ElementSet;

/// Default bound on group order for constructions that can grow.
pub const DEFAULT_SIZE_CAP: usize = 512;

/// Orders up to this bound get a full associativity check on construction.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;

const SAMPLED_TRIPLES: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table must be a nonempty square, got {0}")]
    BadShape(String),
    #[error("table entry {value} at ({row},{col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("table is not a Latin square: {0}")]
    NotLatin(String),
    #[error("no identity element in table")]
    MissingIdentity,
    #[error("identity must be element 0, found at {0}")]
    IdentityNotZero(usize),
    #[error("associativity fails for ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("group order {order} exceeds size cap {cap}")]
    SizeCapExceeded { order: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

/// A finite group as an exact Cayley table.
#[derive(Debug, Clone)]
pub struct Group {
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    names: Option<Vec<String>>,
    family: Option<String>,
    classes: OnceLock<ConjClassTable>,
    orders: OnceLock<Vec<usize>>,
}

/// Conjugacy classes in canonical order: by size, then by least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassTable {
    pub classes: Vec<ElementSet>,
    pub class_of: Vec<usize>,
}

impl ConjClassTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ElementSet::len).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    pub members: ElementSet,
    pub is_normal: bool,
}

impl PartialEq for Group {
    /// Groups compare by their tables; labels and names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mult == other.mult
    }
}

impl Eq for Group {}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }
}

impl Group {
    /// Validates a multiplication table and wraps it as a group.
    ///
    /// Checks the Latin-square property, that element 0 is the identity, and
    /// associativity (exhaustively up to [`FULL_ASSOCIATIVITY_LIMIT`], on a
    /// fixed random sample of triples above).
    pub fn from_table(
        table: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
        family: Option<String>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::BadShape(format!("{} rows", n)));
        }
        let mut mult = Vec::with_capacity(n * n);
        for (r, row) in table.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v, order: n });
                }
                mult.push(v);
            }
        }
        if let Some(ns) = &names {
            if ns.len() != n {
                return Err(GroupError::BadShape(format!("{} names for order {}", ns.len(), n)));
            }
        }
        Self::from_flat(n, mult, names, family)
    }

    pub(crate) fn from_flat(
        n: usize,
        mult: Vec<usize>,
        names: Option<Vec<String>>,
        family: Option<String>,
    ) -> Result<Self> {
        check_latin(n, &mult)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mult[e * n + x] == x && mult[x * n + e] == x))
            .ok_or(GroupError::MissingIdentity)?;
        if identity != 0 {
            return Err(GroupError::IdentityNotZero(identity));
        }
        let mut inv = vec![0; n];
        for x in 0..n {
            // Latin rows guarantee exactly one solution.
            inv[x] = (0..n).find(|&y| mult[x * n + y] == 0).unwrap();
        }
        let g = Group {
            order: n,
            mult,
            inv,
            names,
            family,
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        };
        g.check_associativity()?;
        Ok(g)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let bad = |x: usize, y: usize, z: usize| {
            self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z))
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for x in 0..n {
                for y in 0..n {
                    let xy = self.mul(x, y);
                    for z in 0..n {
                        if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                            return Err(GroupError::NotAssociative(x, y, z));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if bad(x, y, z) {
                    return Err(GroupError::NotAssociative(x, y, z));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv[g], x), g)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn family(&self) -> Option<&str> {
        self.family.as_deref()
    }

    pub fn with_family(mut self, family: impl Into<String>) -> Self {
        self.family = Some(family.into());
        self
    }

    pub fn name_of(&self, x: usize) -> String {
        match &self.names {
            Some(ns) => ns[x].clone(),
            None => x.to_string(),
        }
    }

    /// The table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// `x^m` for any integer `m`; negative powers go through the inverse.
    pub fn pow(&self, x: usize, m: i64) -> usize {
        let ord = self.element_order(x) as i64;
        let k = m.rem_euclid(ord);
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders()[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.orders.get_or_init(|| {
            (0..self.order)
                .map(|x| {
                    let mut k = 1;
                    let mut y = x;
                    while y != 0 {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn exponent(&self) -> usize {
        self.element_orders()
            .iter()
            .fold(1u64, |acc, &k| acc / arith::gcd(acc, k as u64) * k as u64) as usize
    }

    pub fn conjugacy_classes(&self) -> &ConjClassTable {
        self.classes.get_or_init(|| {
            let n = self.order;
            let mut seen = vec![false; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if seen[x] {
                    continue;
                }
                let cls = ElementSet::new((0..n).map(|g| self.conj(x, g)));
                for y in cls.iter() {
                    seen[y] = true;
                }
                classes.push(cls);
            }
            classes.sort_by_key(ElementSet::canonical_key);
            let mut class_of = vec![0; n];
            for (i, c) in classes.iter().enumerate() {
                for x in c.iter() {
                    class_of[x] = i;
                }
            }
            ConjClassTable { classes, class_of }
        })
    }

    pub fn class_count(&self) -> usize {
        self.conjugacy_classes().len()
    }

    /// Index of the class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        let cls = self.conjugacy_classes();
        cls.class_of[self.inv(cls.classes[c].min_element().unwrap())]
    }

    /// Least subgroup containing `x`; `<{}> = {e}`.
    pub fn generated_subgroup(&self, x: &ElementSet) -> Subgroup {
        let members = self.closure_mask(x.as_slice());
        self.subgroup_unchecked(ElementSet::from_mask(&members))
    }

    fn closure_mask(&self, gens: &[usize]) -> Vec<bool> {
        let n = self.order;
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            for &g in gens {
                let k = self.mul(h, g);
                if !mask[k] {
                    mask[k] = true;
                    queue.push_back(k);
                }
            }
        }
        mask
    }

    fn subgroup_unchecked(&self, members: ElementSet) -> Subgroup {
        let is_normal = self.is_normal_set(&members);
        Subgroup { members, is_normal }
    }

    /// Checks that `members` is a subgroup and wraps it.
    pub fn subgroup(&self, members: ElementSet) -> Result<Subgroup> {
        if !self.is_subgroup(&members) {
            return Err(GroupError::NotSubgroup(members.to_string()));
        }
        Ok(self.subgroup_unchecked(members))
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        if !s.contains(0) || self.order % s.len() != 0 {
            return false;
        }
        let mask = s.mask(self.order);
        s.iter().all(|x| s.iter().all(|y| mask[self.mul(x, y)]))
    }

    fn is_normal_set(&self, s: &ElementSet) -> bool {
        let mask = s.mask(self.order);
        s.iter().all(|x| (0..self.order).all(|g| mask[self.conj(x, g)]))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normal_set(&h.members)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: ElementSet::full(self.order), is_normal: true }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: ElementSet::singleton(0), is_normal: true }
    }

    /// `{g : gX = Xg = X}`.
    pub fn radical(&self, x: &ElementSet) -> Subgroup {
        let mask = x.mask(self.order);
        let members = ElementSet::new((0..self.order).filter(|&g| {
            x.iter().all(|y| mask[self.mul(g, y)] && mask[self.mul(y, g)])
        }));
        self.subgroup_unchecked(members)
    }

    pub fn centralizer(&self, s: &ElementSet) -> Subgroup {
        let members = ElementSet::new(
            (0..self.order).filter(|&g| s.iter().all(|x| self.mul(g, x) == self.mul(x, g))),
        );
        self.subgroup_unchecked(members)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&ElementSet::full(self.order))
    }

    /// Elements of `p`-power order when they form a subgroup of the full
    /// `p`-part order; this is exactly the normal Sylow `p`-subgroup.
    pub fn normal_sylow_subgroup(&self, p: u64) -> Result<Option<Subgroup>> {
        let n = self.order as u64;
        if !arith::is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        if n % p != 0 {
            return Err(GroupError::InvalidArgument(format!("{p} does not divide {n}")));
        }
        let full = arith::p_part(n, p) as usize;
        let pelts = ElementSet::new(
            (0..self.order).filter(|&x| arith::is_prime_power_of(self.element_order(x) as u64, p)),
        );
        if pelts.len() != full || !self.is_subgroup(&pelts) {
            return Ok(None);
        }
        Ok(Some(self.subgroup_unchecked(pelts)))
    }

    pub fn is_cyclic(&self, h: &Subgroup) -> bool {
        h.members.iter().any(|x| self.element_order(x) == h.order())
    }

    /// Primes `p` for which the group has a normal cyclic Sylow `p`-subgroup.
    pub fn normal_cyclic_sylow_primes(&self) -> Vec<(u64, Subgroup)> {
        arith::prime_divisors(self.order as u64)
            .into_iter()
            .filter_map(|p| {
                let s = self.normal_sylow_subgroup(p).ok().flatten()?;
                self.is_cyclic(&s).then_some((p, s))
            })
            .collect()
    }

    /// Closes a family of subgroups under joins. The result is sorted by
    /// order and then by members.
    pub fn join_closure(&self, seeds: Vec<ElementSet>) -> Vec<Subgroup> {
        let mut all: Vec<ElementSet> = Vec::new();
        let push = |s: ElementSet, all: &mut Vec<ElementSet>| {
            if !all.contains(&s) {
                all.push(s);
                true
            } else {
                false
            }
        };
        push(ElementSet::singleton(0), &mut all);
        for s in seeds {
            push(s, &mut all);
        }
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = all.clone();
            for (i, a) in snapshot.iter().enumerate() {
                for b in &snapshot[i + 1..] {
                    if a.is_subset(b) || b.is_subset(a) {
                        continue;
                    }
                    let j = self.generated_subgroup(&a.union(b)).members;
                    changed |= push(j, &mut all);
                }
            }
        }
        all.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        all.into_iter().map(|s| self.subgroup_unchecked(s)).collect()
    }

    /// All normal subgroups: joins of normal closures of conjugacy classes.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let seeds = self
            .conjugacy_classes()
            .classes
            .iter()
            .map(|c| self.generated_subgroup(c).members)
            .collect();
        self.join_closure(seeds)
    }

    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut out: Vec<ElementSet> = Vec::new();
        for x in 0..self.order {
            let s = self.generated_subgroup(&ElementSet::singleton(x)).members;
            if !out.contains(&s) {
                out.push(s);
            }
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out.into_iter().map(|s| self.subgroup_unchecked(s)).collect()
    }

    /// No normal subgroups other than `{e}` and the group itself.
    pub fn is_simple(&self) -> bool {
        self.order > 1 && self.normal_subgroups().len() == 2
    }

    /// Relabels the elements by a permutation fixing 0: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Group> {
        let n = self.order;
        if perm.len() != n || perm[0] != 0 {
            return Err(GroupError::InvalidArgument("relabeling must fix 0".into()));
        }
        let mut mult = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                mult[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        let names = self.names.as_ref().map(|ns| {
            let mut out = vec![String::new(); n];
            for x in 0..n {
                out[perm[x]] = ns[x].clone();
            }
            out
        });
        Group::from_flat(n, mult, names, self.family.clone())
    }
}

fn check_latin(n: usize, mult: &[usize]) -> Result<()> {
    let mut seen = vec![0usize; n];
    for r in 0..n {
        let stamp = r + 1;
        for c in 0..n {
            let v = mult[r * n + c];
            if seen[v] == stamp {
                return Err(GroupError::NotLatin(format!("row {r} repeats {v}")));
            }
            seen[v] = stamp;
        }
    }
    seen.iter_mut().for_each(|s| *s = 0);
    for c in 0..n {
        let stamp = c + 1;
        for r in 0..n {
            let v = mult[r * n + c];
            if seen[v] == stamp {
                return Err(GroupError::NotLatin(format!("column {c} repeats {v}")));
            }
            seen[v] = stamp;
        }
    }
    Ok(())
}
