//! Named groups: the built-in corpus and a parser for group names.

use crate::arith;
use crate::group::{
    build_alternating, build_cyclic, build_dicyclic, build_dihedral, build_extraspecial,
    build_frobenius, build_quaternion, build_symmetric, direct_product_capped,
    from_permutation_generators, parse_generators, Group, GroupError, Result,
};

/// Bumped whenever the membership of [`builtin`] changes.
pub const CORPUS_VERSION: u32 = 1;

/// `PSL(2,7)` acting on the projective line over `F_7`, with `infinity`
/// as point 8 and `x` as point `x + 1`.
pub const PSL27_GENERATORS: &str = "(1 2 3 4 5 6 7), (2 3 5)(4 7 6), (1 8)(2 7)(3 4)(5 6)";

pub fn build_psl27() -> Group {
    let gens = parse_generators(PSL27_GENERATORS).expect("generators parse");
    from_permutation_generators(&gens, 168)
        .expect("PSL(2,7) has order 168")
        .with_family("PSL(2,7)")
}

/// Names of the built-in corpus, in run order: cyclic groups of order up
/// to 24, dihedral groups of order 4 to 30, then the named groups.
pub fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=24).map(|n| format!("Z{n}")).collect();
    names.extend((2..=15).map(|m| format!("D{}", 2 * m)));
    for s in ["Q8", "S3", "S4", "A4", "A5", "F20", "F21", "Extraspecial27", "Z3xZ3", "S3xS3"] {
        names.push(s.to_string());
    }
    names
}

pub fn builtin() -> Vec<(String, Group)> {
    builtin_names()
        .into_iter()
        .map(|name| {
            let g = group_by_name(&name, crate::group::DEFAULT_SIZE_CAP).expect("corpus names parse");
            (name, g)
        })
        .collect()
}

/// Parses names such as `Z12`, `D18`, `Q8`, `Dic12`, `S4`, `A5`, `F21`,
/// `Extraspecial27`, `PSL(2,7)` and products `Z3xZ3`.
pub fn group_by_name(name: &str, size_cap: usize) -> Result<Group> {
    let name = name.trim();
    let bad = || GroupError::Parse(format!("unknown group name {name:?}"));
    if let Some((a, b)) = split_product(name) {
        let g1 = group_by_name(a, size_cap)?;
        let g2 = group_by_name(b, size_cap)?;
        return direct_product_capped(&g1, &g2, size_cap);
    }
    if name.eq_ignore_ascii_case("PSL(2,7)") || name.eq_ignore_ascii_case("PSL27") {
        return Ok(build_psl27());
    }
    if name == "Q8" {
        return Ok(build_quaternion());
    }
    let number = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    if let Some(n) = number("Extraspecial") {
        let p = (2..=n as u64).find(|&p| arith::is_prime(p) && (p * p * p) as usize == n).ok_or_else(bad)?;
        return build_extraspecial(p);
    }
    if let Some(n) = number("Dic") {
        if n % 4 != 0 {
            return Err(bad());
        }
        return build_dicyclic(n / 4);
    }
    let g = if let Some(n) = number("Z") {
        build_cyclic(n)?
    } else if let Some(n) = number("D") {
        build_dihedral(n)?
    } else if let Some(k) = number("S") {
        build_symmetric(k)?
    } else if let Some(k) = number("A") {
        build_alternating(k)?
    } else if let Some(n) = number("F") {
        let (p, q) = frobenius_factors(n as u64).ok_or_else(bad)?;
        build_frobenius(p, q)?
    } else {
        return Err(bad());
    };
    if g.order() > size_cap {
        return Err(GroupError::SizeCapExceeded { order: g.order(), cap: size_cap });
    }
    Ok(g)
}

/// `n = p q` with `p` prime and `q > 1` dividing `p - 1`, largest `p` first.
fn frobenius_factors(n: u64) -> Option<(u64, u64)> {
    let mut primes = arith::prime_divisors(n);
    primes.reverse();
    primes.into_iter().map(|p| (p, n / p)).find(|&(p, q)| q > 1 && (p - 1) % q == 0)
}

/// Splits at the first `x` (or `×`) that follows a digit or `)`.
fn split_product(name: &str) -> Option<(&str, &str)> {
    let chars: Vec<(usize, char)> = name.char_indices().collect();
    for w in chars.windows(2) {
        let ((_, prev), (i, c)) = (w[0], w[1]);
        if (c == 'x' || c == '×') && (prev.is_ascii_digit() || prev == ')') {
            return Some((&name[..i], &name[i + c.len_utf8()..]));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psl27() {
        let g = build_psl27();
        assert_eq!(g.order(), 168);
        assert_eq!(g.class_count(), 6);
        assert!(g.is_simple());
        let mut sizes = g.conjugacy_classes().sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 21, 24, 24, 42, 56]);
    }

    #[test]
    fn names() {
        assert_eq!(group_by_name("Z12", 512).unwrap().order(), 12);
        assert_eq!(group_by_name("D18", 512).unwrap().class_count(), 6);
        assert_eq!(group_by_name("F20", 512).unwrap().order(), 20);
        assert_eq!(group_by_name("F21", 512).unwrap().class_count(), 5);
        assert_eq!(group_by_name("Extraspecial27", 512).unwrap().class_count(), 11);
        assert_eq!(group_by_name("Z3xZ3", 512).unwrap().order(), 9);
        assert_eq!(group_by_name("S3xS3", 512).unwrap().class_count(), 9);
        assert_eq!(group_by_name("Dic12", 512).unwrap().order(), 12);
        assert_eq!(group_by_name("PSL(2,7)", 512).unwrap().order(), 168);
        assert!(group_by_name("Y7", 512).is_err());
        assert!(group_by_name("F15", 512).is_err());
        assert!(matches!(group_by_name("Z600", 512), Err(GroupError::SizeCapExceeded { .. })));
    }

    #[test]
    fn corpus_builds() {
        let corpus = builtin();
        assert_eq!(corpus.len(), 24 + 14 + 10);
        for (name, g) in &corpus {
            assert!(g.order() >= 1, "{name}");
        }
    }
}
