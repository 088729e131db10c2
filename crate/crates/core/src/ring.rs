//! Exact arithmetic in the integral group ring `ZG`.
//!
//! Elements are dense coefficient vectors of arbitrary-precision integers,
//! so powers of class sums never overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::group::{ElementSet, Group};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("operands live over different groups")]
    GroupMismatch,
    #[error("multiplier {m} is not coprime to the group order {n}")]
    NotCoprime { m: i64, n: usize },
    #[error("element is not constant on conjugacy classes (elements {0} and {1} differ)")]
    NotCentral(usize, usize),
    #[error("coefficient transform undefined at {0}")]
    TransformUndefined(BigInt),
    #[error("exponent must be positive")]
    ZeroPower,
    #[error("modulus must be positive")]
    BadModulus,
    #[error("coefficient vector has length {got}, expected {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("cannot parse group ring element: {0}")]
    Parse(String),
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;

/// An element `sum a_g g` of `ZG`.
#[derive(Clone, Debug)]
pub struct GroupRingElement {
    group: Arc<Group>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElement {}

fn same_group(a: &Arc<Group>, b: &Arc<Group>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A coefficient-wise map `Z -> Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffTransform {
    /// 1 on nonzero coefficients, 0 on zero.
    SupportIndicator,
    /// Least nonnegative remainder modulo a positive integer.
    ModRemainder(BigInt),
    /// Explicit table; values not listed are an error.
    Table(BTreeMap<BigInt, BigInt>),
}

impl CoeffTransform {
    pub fn mod_p(p: u64) -> Self {
        CoeffTransform::ModRemainder(BigInt::from(p))
    }

    pub fn apply(&self, a: &BigInt) -> Result<BigInt> {
        match self {
            CoeffTransform::SupportIndicator => {
                Ok(if a.is_zero() { BigInt::zero() } else { BigInt::one() })
            }
            CoeffTransform::ModRemainder(m) => {
                if !m.is_positive() {
                    return Err(RingError::BadModulus);
                }
                Ok(a.mod_floor(m))
            }
            CoeffTransform::Table(t) => {
                t.get(a).cloned().ok_or_else(|| RingError::TransformUndefined(a.clone()))
            }
        }
    }
}

impl GroupRingElement {
    pub fn zero(group: &Arc<Group>) -> Self {
        GroupRingElement { group: group.clone(), coeffs: vec![BigInt::zero(); group.order()] }
    }

    /// The identity `e` of the ring.
    pub fn one(group: &Arc<Group>) -> Self {
        Self::basis(group, 0)
    }

    pub fn basis(group: &Arc<Group>, x: usize) -> Self {
        let mut z = Self::zero(group);
        z.coeffs[x] = BigInt::one();
        z
    }

    /// The set sum of `x`, i.e. its 0/1 indicator vector.
    pub fn set_sum(group: &Arc<Group>, x: &ElementSet) -> Self {
        let mut z = Self::zero(group);
        for g in x.iter() {
            z.coeffs[g] = BigInt::one();
        }
        z
    }

    pub fn from_coeffs(group: &Arc<Group>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(RingError::BadLength { got: coeffs.len(), expected: group.order() });
        }
        Ok(GroupRingElement { group: group.clone(), coeffs })
    }

    pub fn from_i64(group: &Arc<Group>, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(group, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, x: usize) -> &BigInt {
        &self.coeffs[x]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(RingError::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(GroupRingElement { group: self.group.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(GroupRingElement { group: self.group.clone(), coeffs })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Convolution: `(ab)_g = sum_{xy = g} a_x b_y`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let g = &self.group;
        let mut out = vec![BigInt::zero(); g.order()];
        let right: Vec<(usize, &BigInt)> =
            other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()).collect();
        for (x, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(y, b) in &right {
                out[g.mul(x, y)] += a * b;
            }
        }
        Ok(GroupRingElement { group: self.group.clone(), coeffs: out })
    }

    /// `self^k` for `k >= 1` by square-and-multiply.
    pub fn pow(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(RingError::ZeroPower);
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut e = k;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base)?,
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base)?;
        }
        Ok(acc.expect("k >= 1"))
    }

    /// Applies `f` to every coefficient.
    pub fn transform(&self, f: &CoeffTransform) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|a| f.apply(a)).collect::<Result<Vec<_>>>()?;
        Ok(GroupRingElement { group: self.group.clone(), coeffs })
    }

    pub fn support(&self) -> ElementSet {
        ElementSet::new(
            self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, _)| i),
        )
    }

    /// True iff coefficients are constant on every conjugacy class.
    pub fn is_central(&self) -> bool {
        self.class_coefficients().is_ok()
    }

    /// One coefficient per conjugacy class; errors if not class-constant.
    pub fn class_coefficients(&self) -> Result<Vec<BigInt>> {
        let classes = self.group.conjugacy_classes();
        classes
            .classes
            .iter()
            .map(|c| {
                let first = c.min_element().unwrap();
                for x in c.iter() {
                    if self.coeffs[x] != self.coeffs[first] {
                        return Err(RingError::NotCentral(first, x));
                    }
                }
                Ok(self.coeffs[first].clone())
            })
            .collect()
    }

    /// Sparse JSON `{ "coeffs": { "<index>": "<decimal>" } }`.
    pub fn to_json(&self) -> String {
        let doc = SparseDoc {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| (i, a.to_string()))
                .collect(),
        };
        serde_json::to_string(&doc).expect("sparse document serializes")
    }

    pub fn from_json(group: &Arc<Group>, text: &str) -> Result<Self> {
        let doc: SparseDoc =
            serde_json::from_str(text).map_err(|e| RingError::Parse(e.to_string()))?;
        let mut z = Self::zero(group);
        for (i, s) in doc.coeffs {
            if i >= group.order() {
                return Err(RingError::Parse(format!("element index {i} out of range")));
            }
            z.coeffs[i] = s.parse().map_err(|_| RingError::Parse(format!("bad integer {s:?}")))?;
        }
        Ok(z)
    }
}

#[derive(Serialize, Deserialize)]
struct SparseDoc {
    coeffs: BTreeMap<usize, String>,
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{}", a, self.group.name_of(i))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `X^(m) = {x^m : x in X}`; `m` may be any integer.
pub fn power_map_set(group: &Group, x: &ElementSet, m: i64) -> ElementSet {
    ElementSet::new(x.iter().map(|g| group.pow(g, m)))
}

/// The class-sum map `sum a_i X_i -> sum a_i X_i^(m)` on central elements.
pub fn sigma_m(xi: &GroupRingElement, m: i64) -> Result<GroupRingElement> {
    let g = xi.group();
    let n = g.order();
    if arith::gcd_i64(m, n as i64) != 1 {
        return Err(RingError::NotCoprime { m, n });
    }
    let per_class = xi.class_coefficients()?;
    let classes = g.conjugacy_classes();
    let mut out = GroupRingElement::zero(g);
    for (c, a) in classes.classes.iter().zip(per_class) {
        if a.is_zero() {
            continue;
        }
        for y in power_map_set(g, c, m).iter() {
            out.coeffs[y] += &a;
        }
    }
    Ok(out)
}
