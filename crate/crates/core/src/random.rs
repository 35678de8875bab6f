//! Seeded generators for random rational data.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{Matrix, ShapeRatio};
use crate::quotient::QuotientVector;
use crate::rational::{frac, Rational};

/// RNG for trial `trial` under base seed `seed`: one ChaCha stream per trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Numerator in `[-bound, bound]`, denominator in `[1, bound]`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let bound = bound.max(1);
    frac(rng.random_range(-bound..=bound), rng.random_range(1..=bound))
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rational(rng, bound)).expect("random shapes are positive")
}

/// Random member of component `k` of ratio `mu`.
pub fn component_matrix<R: Rng + ?Sized>(rng: &mut R, mu: ShapeRatio, k: usize, bound: i64) -> Matrix {
    let (m, n) = mu.shape(k);
    matrix(rng, m, n, bound)
}

/// A random matrix in component `k` that is irreducible (its own root).
///
/// Redraws on the rare reducible sample; `k = 1` components are always
/// irreducible.
pub fn irreducible<R: Rng + ?Sized>(rng: &mut R, mu: ShapeRatio, k: usize, bound: i64) -> Matrix {
    loop {
        let a = component_matrix(rng, mu, k, bound);
        if crate::equivalence::root(&a).multiplicity == 1 {
            return a;
        }
    }
}

/// Shape ratios whose component `k` fits inside `max_rows x max_cols`.
pub fn ratios_fitting(max_rows: usize, max_cols: usize, k: usize) -> Vec<ShapeRatio> {
    let mut out = Vec::new();
    for y in 1..=max_rows / k {
        for x in 1..=max_cols / k {
            if y.gcd(&x) == 1 {
                out.push(ShapeRatio::new(y, x).expect("positive"));
            }
        }
    }
    out
}

/// Picks a component index in `1..=max_index` and a ratio whose component
/// of that index fits in `max_rows x max_cols`.
pub fn ratio_and_index<R: Rng + ?Sized>(rng: &mut R, max_rows: usize, max_cols: usize, max_index: usize) -> (ShapeRatio, usize) {
    let k = rng.random_range(1..=max_index.min(max_rows).min(max_cols));
    let ratios = ratios_fitting(max_rows, max_cols, k);
    (ratios[rng.random_range(0..ratios.len())], k)
}

/// A random class of ratio `mu` whose root sits in component `k`.
pub fn class<R: Rng + ?Sized>(rng: &mut R, mu: ShapeRatio, k: usize, bound: i64) -> QuotientVector {
    QuotientVector::of(&irreducible(rng, mu, k, bound))
}
