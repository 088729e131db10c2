//! Irreducible characters of a commutative S-ring, computed spectrally.
//!
//! The left-multiplication matrices `M_X` (entry `(Z, Y)` is `c[X][Y][Z]`)
//! commute. Conjugating by `D^(1/2)` with `D = diag(|Z|)` makes
//! `N_(X^-1) = N_X^T`, so a random combination
//! `sum t_X (N_X + N_X^T) + i sum s_X (N_X - N_X^T)` is Hermitian and, for
//! generic weights, has simple spectrum. Its eigenvectors diagonalize every
//! `N_X` at once; the eigenvalue of `N_X` on eigenvector `pi` is `pi(X)`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{RationalityError, Result};
use crate::sring::SRing;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_CHARACTER_SEED: u64 = 42;

const MAX_RETRIES: usize = 8;
const GAP_THRESHOLD: f64 = 1e-6;

/// Rows are characters, columns are basic sets; entry `pi(X)`.
#[derive(Debug, Clone)]
pub struct CharacterTableA {
    pub rank: usize,
    pub values: Vec<Vec<Complex64>>,
    /// Largest of `|N_X v - pi(X) v|` and the deviation of the
    /// eigenprojections from summing to the identity.
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

/// `{ "rank", "values": [[{re, im}]], "residual", "rational" }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub rank: usize,
    pub values: Vec<Vec<ComplexValue>>,
    pub residual: f64,
    pub rational: bool,
}

impl CharacterTableA {
    pub fn column(&self, x: usize) -> Vec<Complex64> {
        self.values.iter().map(|row| row[x]).collect()
    }

    pub fn report(&self, tol: f64) -> CharacterReport {
        let clean = |v: f64| if v.abs() < tol { 0.0 } else { v };
        CharacterReport {
            rank: self.rank,
            values: self
                .values
                .iter()
                .map(|row| row.iter().map(|z| ComplexValue { re: clean(z.re), im: clean(z.im) }).collect())
                .collect(),
            residual: self.residual,
            rational: is_rational_numeric(self, tol),
        }
    }
}

fn normalized_matrices(a: &SRing) -> Vec<DMatrix<f64>> {
    let r = a.rank();
    let sqrt_sizes: Vec<f64> = a.basic_sets().iter().map(|s| (s.len() as f64).sqrt()).collect();
    let c = a.constants();
    (0..r)
        .map(|x| DMatrix::from_fn(r, r, |z, y| sqrt_sizes[z] * c.get(x, y, z) as f64 / sqrt_sizes[y]))
        .collect()
}

pub fn central_characters(a: &SRing, seed: u64) -> Result<CharacterTableA> {
    if !a.is_commutative() {
        return Err(RationalityError::NonCommutative);
    }
    let r = a.rank();
    let mats = normalized_matrices(a);
    let cmats: Vec<DMatrix<Complex64>> =
        mats.iter().map(|m| m.map(|v| Complex64::new(v, 0.0))).collect();
    for attempt in 0..=MAX_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let mut h = DMatrix::<Complex64>::zeros(r, r);
        for m in &mats {
            let t: f64 = rng.gen_range(-1.0..1.0);
            let s: f64 = rng.gen_range(-1.0..1.0);
            let sym = m + m.transpose();
            let anti = m - m.transpose();
            h += sym.map(|v| Complex64::new(t * v, 0.0)) + anti.map(|v| Complex64::new(0.0, s * v));
        }
        let eig = SymmetricEigen::new(h);
        let mut sorted: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        sorted.sort_by(f64::total_cmp);
        let scale = 1.0 + sorted.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let gap = sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        if r > 1 && gap < GAP_THRESHOLD * scale {
            continue;
        }
        let mut residual = 0.0f64;
        let mut rows = Vec::with_capacity(r);
        for k in 0..r {
            let v: DVector<Complex64> = eig.eigenvectors.column(k).into_owned();
            let row: Vec<Complex64> = cmats
                .iter()
                .map(|m| {
                    let mv = m * &v;
                    let val = v.dotc(&mv);
                    residual = residual.max((mv - &v * val).norm());
                    val
                })
                .collect();
            rows.push(row);
        }
        let vv = &eig.eigenvectors * eig.eigenvectors.adjoint();
        let ident = DMatrix::<Complex64>::identity(r, r);
        residual = residual.max((vv - ident).norm());
        rows.sort_by_cached_key(|row| row_key(row));
        return Ok(CharacterTableA { rank: r, values: rows, residual });
    }
    Err(RationalityError::DegenerateCombination(MAX_RETRIES + 1))
}

/// Rounded key giving a canonical row order independent of the eigensolver.
fn row_key(row: &[Complex64]) -> Vec<(i64, i64)> {
    row.iter()
        .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
        .map(|(re, im)| (-re, -im))
        .collect()
}

/// Every character value lies within `tol` of a rational integer.
pub fn is_rational_numeric(table: &CharacterTableA, tol: f64) -> bool {
    table
        .values
        .iter()
        .flatten()
        .all(|z| z.im.abs() < tol && (z.re - z.re.round()).abs() < tol)
}

/// For a basic-set permutation `perm` induced by a multiplier, checks that
/// column `X` and column `perm[X]` carry the same multiset of values.
pub fn values_galois_consistent(table: &CharacterTableA, perm: &[usize], tol: f64) -> bool {
    (0..table.rank).all(|x| {
        let mut left = table.column(x);
        let mut right = table.column(perm[x]);
        let key = |z: &Complex64| ((z.re / tol).round() as i64, (z.im / tol).round() as i64);
        left.sort_by_key(key);
        right.sort_by_key(key);
        let mut used = vec![false; right.len()];
        left.iter().all(|l| {
            match (0..right.len()).find(|&j| !used[j] && (right[j] - l).norm() < 1e3 * tol) {
                Some(j) => {
                    used[j] = true;
                    true
                }
                None => false,
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::{build_alternating, build_cyclic, build_symmetric};
    use crate::rationality::sigma_action;

    fn sorted_real(col: Vec<Complex64>) -> Vec<f64> {
        let mut v: Vec<f64> = col.iter().map(|z| z.re).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn s3_columns() {
        let g = Arc::new(build_symmetric(3).unwrap());
        let a = SRing::class_algebra(&g);
        let t = central_characters(&a, DEFAULT_CHARACTER_SEED).unwrap();
        assert!(t.residual < 1e-9);
        // column 2 is the transposition class
        let col = sorted_real(t.column(2));
        for (got, want) in col.iter().zip([-3.0, 0.0, 3.0]) {
            assert!((got - want).abs() < 1e-9);
        }
        assert!(t.column(0).iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-12));
        assert!(is_rational_numeric(&t, DEFAULT_TOLERANCE));
    }

    #[test]
    fn trivial_ring_columns() {
        let g = Arc::new(build_cyclic(7).unwrap());
        let t = central_characters(&SRing::trivial(&g), 1).unwrap();
        let col = sorted_real(t.column(1));
        assert!((col[0] + 1.0).abs() < 1e-9 && (col[1] - 6.0).abs() < 1e-9);
        assert!(is_rational_numeric(&t, DEFAULT_TOLERANCE));
    }

    #[test]
    fn z5_is_irrational() {
        let g = Arc::new(build_cyclic(5).unwrap());
        let a = SRing::class_algebra(&g);
        let t = central_characters(&a, DEFAULT_CHARACTER_SEED).unwrap();
        assert!(!is_rational_numeric(&t, DEFAULT_TOLERANCE));
        // pi(X) for X = {1} are the fifth roots of unity
        for z in t.column(1) {
            assert!((z.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn a5_galois_shadow() {
        let g = Arc::new(build_alternating(5).unwrap());
        let a = SRing::class_algebra(&g);
        let t = central_characters(&a, DEFAULT_CHARACTER_SEED).unwrap();
        assert!(!is_rational_numeric(&t, DEFAULT_TOLERANCE));
        let perm = sigma_action(&a, 7).unwrap();
        assert!(values_galois_consistent(&t, &perm, DEFAULT_TOLERANCE));
        // classes sorted by size: 1, 12, 12, 15, 20; swapping a 5-class with the involutions fails
        assert!(!values_galois_consistent(&t, &[0, 3, 2, 1, 4], DEFAULT_TOLERANCE));
    }

    #[test]
    fn deterministic_for_seed() {
        let g = Arc::new(build_alternating(5).unwrap());
        let a = SRing::class_algebra(&g);
        let r1 = serde_json::to_string(&central_characters(&a, 9).unwrap().report(1e-8)).unwrap();
        let r2 = serde_json::to_string(&central_characters(&a, 9).unwrap().report(1e-8)).unwrap();
        assert_eq!(r1, r2);
    }
}
