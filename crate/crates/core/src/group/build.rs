//! Constructors for the standard families used throughout the crate.

use super::perm::{group_from_permutations, Permutation};
use super::{Group, GroupError, Result, DEFAULT_SIZE_CAP};
use crate::arith;

/// Largest order the family builders will produce.
const FAMILY_ORDER_LIMIT: usize = 4096;

fn check_family_order(order: usize) -> Result<()> {
    if order > FAMILY_ORDER_LIMIT {
        return Err(GroupError::SizeCapExceeded { order, cap: FAMILY_ORDER_LIMIT });
    }
    Ok(())
}

fn from_fn(
    n: usize,
    names: Vec<String>,
    family: String,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<Group> {
    let mut mult = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mult.push(mul(x, y));
        }
    }
    Group::from_flat(n, mult, Some(names), Some(family))
}

/// The cyclic group `Z_n`, element `k` standing for `k mod n`.
pub fn build_cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(GroupError::InvalidArgument("cyclic order must be positive".into()));
    }
    check_family_order(n)?;
    let names = (0..n).map(|k| k.to_string()).collect();
    from_fn(n, names, format!("Z{n}"), |x, y| (x + y) % n)
}

/// Dihedral group of order `two_n`. Index `k < m` is the rotation `r^k`,
/// index `m + k` is the reflection `s r^k`.
pub fn build_dihedral(two_n: usize) -> Result<Group> {
    if two_n == 0 || two_n % 2 != 0 {
        return Err(GroupError::InvalidArgument(format!(
            "dihedral order must be positive and even, got {two_n}"
        )));
    }
    check_family_order(two_n)?;
    let m = two_n / 2;
    let names = (0..m)
        .map(|k| format!("r{k}"))
        .chain((0..m).map(|k| format!("sr{k}")))
        .collect();
    // (s^a r^i)(s^b r^j) = s^(a+b) r^(j + (-1)^b i)
    from_fn(two_n, names, format!("D{two_n}"), |x, y| {
        let (a, i) = (x / m, x % m);
        let (b, j) = (y / m, y % m);
        let rot = if b == 0 { (i + j) % m } else { (j + m - i) % m };
        ((a + b) % 2) * m + rot
    })
}

/// Dicyclic group of order `4m`: `a^(2m) = 1`, `x^2 = a^m`, `x^-1 a x = a^-1`.
/// Index `k < 2m` is `a^k`, index `2m + k` is `x a^k`.
pub fn build_dicyclic(m: usize) -> Result<Group> {
    if m < 1 {
        return Err(GroupError::InvalidArgument("dicyclic parameter must be >= 1".into()));
    }
    let h = 2 * m;
    check_family_order(2 * h)?;
    let names = (0..h)
        .map(|k| format!("a{k}"))
        .chain((0..h).map(|k| format!("xa{k}")))
        .collect();
    // a^i x = x a^-i, x x = a^m.
    from_fn(2 * h, names, format!("Dic{}", 4 * m), |p, q| {
        let (s, i) = (p / h, p % h);
        let (t, j) = (q / h, q % h);
        match (s, t) {
            (0, 0) => (i + j) % h,
            (0, 1) => h + (j + h - i) % h,
            (1, 0) => h + (i + j) % h,
            _ => (m + j + h - i) % h,
        }
    })
}

/// The quaternion group of order 8.
pub fn build_quaternion() -> Group {
    build_dicyclic(2).expect("Q8 construction").with_family("Q8")
}

/// Extraspecial group of order `p^3` and exponent `p` (`p` odd), realized as
/// upper unitriangular 3x3 matrices over `F_p`. `(a, b, c)` is the matrix with
/// superdiagonal `a, b` and corner `c`, stored at index `a p^2 + b p + c`.
pub fn build_extraspecial(p: u64) -> Result<Group> {
    if !arith::is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if p == 2 {
        return Err(GroupError::InvalidArgument("extraspecial builder needs an odd prime".into()));
    }
    let p = p as usize;
    let n = p * p * p;
    check_family_order(n)?;
    let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
    let names = (0..n)
        .map(|x| {
            let (a, b, c) = split(x);
            format!("[{a},{b},{c}]")
        })
        .collect();
    from_fn(n, names, format!("Extraspecial{n}"), |x, y| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        let na = (a + a2) % p;
        let nb = (b + b2) % p;
        let nc = (c + c2 + a * b2) % p;
        na * p * p + nb * p + nc
    })
}

/// `Z_p ⋊ Z_q` with the complement acting by a unit of order `q` mod `p`.
/// Index `k p + a` is `y^k x^a` where `x` generates the kernel.
pub fn build_frobenius(p: u64, q: u64) -> Result<Group> {
    if !arith::is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if q <= 1 || (p - 1) % q != 0 {
        return Err(GroupError::InvalidArgument(format!("q={q} must be > 1 and divide p-1={}", p - 1)));
    }
    let r = arith::unit_of_order(p, q).expect("unit group of F_p is cyclic");
    let (p, q) = (p as usize, q as usize);
    let n = p * q;
    check_family_order(n)?;
    let rpow: Vec<usize> = (0..q).map(|k| arith::pow_mod(r, k as u64, p as u64) as usize).collect();
    let names = (0..n).map(|x| format!("y{}x{}", x / p, x % p)).collect();
    // y x y^-1 = x^r, so x^a y^l = y^l x^(a r^-l) and
    // (y^k x^a)(y^l x^b) = y^(k+l) x^(a r^(q-l) + b).
    from_fn(n, names, format!("F{n}"), |u, v| {
        let (k, a) = (u / p, u % p);
        let (l, b) = (v / p, v % p);
        let twist = rpow[(q - l) % q];
        ((k + l) % q) * p + (a * twist + b) % p
    })
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn permutation_family(k: usize, even_only: bool, family: String) -> Result<Group> {
    if k > 6 {
        return Err(GroupError::SizeCapExceeded { order: (1..=k).product(), cap: 720 });
    }
    let perms: Vec<Permutation> = all_permutations(k)
        .into_iter()
        .map(Permutation::from_images)
        .filter(|p| !even_only || p.is_even())
        .collect();
    group_from_permutations(perms, family)
}

/// Symmetric group on `k <= 6` points, elements in lexicographic image order.
pub fn build_symmetric(k: usize) -> Result<Group> {
    permutation_family(k, false, format!("S{k}"))
}

/// Alternating group on `k <= 6` points.
pub fn build_alternating(k: usize) -> Result<Group> {
    permutation_family(k, true, format!("A{k}"))
}

/// Componentwise product; `(a, b)` is stored at `a |G2| + b`.
pub fn direct_product(g1: &Group, g2: &Group) -> Result<Group> {
    direct_product_capped(g1, g2, DEFAULT_SIZE_CAP)
}

pub fn direct_product_capped(g1: &Group, g2: &Group, cap: usize) -> Result<Group> {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    if n > cap {
        return Err(GroupError::SizeCapExceeded { order: n, cap });
    }
    let names = (0..n)
        .map(|x| format!("({},{})", g1.name_of(x / n2), g2.name_of(x % n2)))
        .collect();
    let family = format!(
        "{}x{}",
        g1.family().unwrap_or("G"),
        g2.family().unwrap_or("G")
    );
    from_fn(n, names, family, |x, y| {
        g1.mul(x / n2, y / n2) * n2 + g2.mul(x % n2, y % n2)
    })
}
