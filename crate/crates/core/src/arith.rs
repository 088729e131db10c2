//! Small integer helpers used across the crate.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> u64 {
    gcd(a.unsigned_abs(), b.unsigned_abs())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&k| is_prime(k)).collect()
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_prime_power_of(k: u64, p: u64) -> bool {
    k >= 1 && p_part(k, p) == k
}

/// Residues in `1..=n` coprime to `n` (just `[1]` for `n == 1`).
pub fn units_mod(n: u64) -> Vec<u64> {
    if n <= 1 {
        return vec![1];
    }
    (1..n).filter(|&m| gcd(m, n) == 1).collect()
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `a` modulo `n`, assuming `gcd(a, n) == 1`.
pub fn mult_order(a: u64, n: u64) -> u64 {
    let mut k = 1;
    let mut x = a % n;
    while x != 1 % n {
        x = x * a % n;
        k += 1;
    }
    k
}

/// Smallest residue of multiplicative order exactly `q` modulo the prime `p`.
pub fn unit_of_order(p: u64, q: u64) -> Option<u64> {
    (1..p).find(|&a| mult_order(a, p) == q)
}

/// Least nonnegative residue of `m` modulo `n`.
pub fn residue(m: i64, n: u64) -> u64 {
    m.rem_euclid(n as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_facts() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(primes_up_to(13), vec![2, 3, 5, 7, 11, 13]);
        assert_eq!(prime_divisors(60), vec![2, 3, 5]);
        assert_eq!(p_part(72, 2), 8);
        assert_eq!(units_mod(12), vec![1, 5, 7, 11]);
        assert_eq!(unit_of_order(7, 3), Some(2));
        assert_eq!(mult_order(2, 5), 4);
        assert_eq!(residue(-1, 6), 5);
    }
}
