//! Identity-lift equivalence: `A ~ B` iff `A ⊗ I_α = B ⊗ I_β` for some
//! positive `α, β`.
//!
//! Every class `⟨A⟩ = {A_1, A_1 ⊗ I_2, A_1 ⊗ I_3, ...}` has a unique
//! irreducible root `A_1`, found here by scanning candidate multiplicities
//! over the common divisors of the shape, largest first.

use num_integer::Integer;
use num_traits::Zero;

use crate::matrix::{Matrix, ShapeRatio};

/// `matrix = divisor ⊗ I_multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub divisor: Matrix,
    pub multiplicity: usize,
}

/// An equivalence class held by its irreducible root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixClass {
    root: Matrix,
    shape_ratio: ShapeRatio,
}

impl MatrixClass {
    pub fn root(&self) -> &Matrix {
        &self.root
    }

    pub fn into_root(self) -> Matrix {
        self.root
    }

    pub fn shape_ratio(&self) -> ShapeRatio {
        self.shape_ratio
    }

    /// Component index of the root, minimal over the class.
    pub fn index(&self) -> usize {
        self.root.rows() / self.shape_ratio.mu_y()
    }

    pub fn is_zero(&self) -> bool {
        self.root.is_zero()
    }
}

/// Returns `B` with `a = B ⊗ I_k` if every `k x k` block of `a` is a scalar
/// multiple of the identity.
pub fn is_multiple(a: &Matrix, k: usize) -> Option<Matrix> {
    let (m, n) = a.shape();
    if k == 0 || m % k != 0 || n % k != 0 {
        return None;
    }
    if k == 1 {
        return Some(a.clone());
    }
    let (bm, bn) = (m / k, n / k);
    for bi in 0..bm {
        for bj in 0..bn {
            let b = &a[(bi * k, bj * k)];
            for r in 0..k {
                for s in 0..k {
                    let v = &a[(bi * k + r, bj * k + s)];
                    let ok = if r == s { v == b } else { v.is_zero() };
                    if !ok {
                        return None;
                    }
                }
            }
        }
    }
    Some(Matrix::from_fn(bm, bn, |i, j| a[(i * k, j * k)].clone()).expect("block grid is non-empty"))
}

/// Divisors of `n` in decreasing order.
fn divisors_desc(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.into_iter().chain(small.into_iter().rev()).collect()
}

/// Irreducible root and the multiplicity that reconstructs `a`.
pub fn root(a: &Matrix) -> Factorization {
    let g = a.rows().gcd(&a.cols());
    for k in divisors_desc(g) {
        if let Some(divisor) = is_multiple(a, k) {
            return Factorization { divisor, multiplicity: k };
        }
    }
    unreachable!("k = 1 always divides")
}

/// Equivalence decided by comparing roots.
pub fn equivalent(a: &Matrix, b: &Matrix) -> bool {
    if a.shape_ratio() != b.shape_ratio() {
        return false;
    }
    root(a).divisor == root(b).divisor
}

/// The coprime lift factors `(α, β)` bringing `a` and `b` to a common shape,
/// if the shapes admit one.
pub fn minimal_lifts(a: &Matrix, b: &Matrix) -> Option<(usize, usize)> {
    let (mu_a, ka) = ShapeRatio::of_shape(a.rows(), a.cols());
    let (mu_b, kb) = ShapeRatio::of_shape(b.rows(), b.cols());
    if mu_a != mu_b {
        return None;
    }
    let l = ka.lcm(&kb);
    Some((l / ka, l / kb))
}

/// Equivalence decided directly: lift both to their least common shape and
/// compare entrywise. Independent of root extraction.
pub fn equivalent_by_lift(a: &Matrix, b: &Matrix) -> bool {
    theta(a, b).is_some()
}

/// Least common multiple `Θ = A ⊗ I_α = B ⊗ I_β` with `α, β` coprime.
pub fn theta(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    let (alpha, beta) = minimal_lifts(a, b)?;
    let lifted = a.lift(alpha);
    (lifted == b.lift(beta)).then_some(lifted)
}

/// Greatest common divisor `Λ` with `A = Λ ⊗ I_β` and `B = Λ ⊗ I_α`.
pub fn lambda_gcd(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    if a.shape_ratio() != b.shape_ratio() {
        return None;
    }
    let ra = root(a).divisor;
    (ra == root(b).divisor).then_some(ra)
}

/// Shape ratio and component index: `rows = k mu_y`, `cols = k mu_x`.
pub fn classify(a: &Matrix) -> (ShapeRatio, usize) {
    ShapeRatio::of_shape(a.rows(), a.cols())
}

pub fn class_of(a: &Matrix) -> MatrixClass {
    let root = root(a).divisor;
    let shape_ratio = root.shape_ratio();
    MatrixClass { root, shape_ratio }
}
