//! Vector-space and inner-product structure on a fixed shape ratio.
//!
//! Matrices of one ratio `mu` but different component indices are combined
//! by lifting both to the lcm component. Classes are kept as roots and
//! re-canonicalised after every operation, so class equality is structural.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::equivalence::{class_of, MatrixClass};
use crate::error::{DomainError, Result};
use crate::matrix::{Matrix, ShapeRatio};
use crate::rational::{self, Rational};

/// An element of the quotient space `Σ_mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientVector {
    class: MatrixClass,
}

impl QuotientVector {
    pub fn of(a: &Matrix) -> Self {
        QuotientVector { class: class_of(a) }
    }

    /// The zero class of ratio `mu`, rooted at the `mu_y x mu_x` zero matrix.
    pub fn zero(mu: ShapeRatio) -> Self {
        QuotientVector::of(&Matrix::zeros(mu.mu_y(), mu.mu_x()).expect("ratio terms are positive"))
    }

    pub fn class(&self) -> &MatrixClass {
        &self.class
    }

    pub fn root(&self) -> &Matrix {
        self.class.root()
    }

    pub fn shape_ratio(&self) -> ShapeRatio {
        self.class.shape_ratio()
    }

    pub fn index(&self) -> usize {
        self.class.index()
    }

    pub fn is_zero(&self) -> bool {
        self.class.is_zero()
    }
}

impl From<MatrixClass> for QuotientVector {
    fn from(class: MatrixClass) -> Self {
        QuotientVector { class }
    }
}

fn ratio_mismatch(op: &'static str, a: &Matrix, b: &Matrix) -> DomainError {
    DomainError::ShapeRatioMismatch {
        op,
        left: a.shape_ratio(),
        left_rows: a.rows(),
        left_cols: a.cols(),
        right: b.shape_ratio(),
        right_rows: b.rows(),
        right_cols: b.cols(),
    }
}

/// Lifts `a` and `b` to their common component `t = lcm(p, q)`.
/// Returns the two lifts and `t`.
pub fn common_lift(op: &'static str, a: &Matrix, b: &Matrix) -> Result<(Matrix, Matrix, usize)> {
    let (la, lb, t) = lift_factors(op, a, b)?;
    Ok((a.lift(la), b.lift(lb), t))
}

/// `A ⊞ B`: sum at the lcm component.
pub fn lplus(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let (la, lb, _) = common_lift("lplus", a, b)?;
    Ok(la.add(&lb).expect("common lift has equal shapes"))
}

/// `A ⊟ B = A ⊞ (-B)`.
pub fn lminus(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let (la, lb, _) = common_lift("lminus", a, b)?;
    Ok(la.sub(&lb).expect("common lift has equal shapes"))
}

/// Component indices and lcm component of two same-ratio matrices.
fn lift_factors(op: &'static str, a: &Matrix, b: &Matrix) -> Result<(usize, usize, usize)> {
    let (mu_a, p) = ShapeRatio::of_shape(a.rows(), a.cols());
    let (mu_b, q) = ShapeRatio::of_shape(b.rows(), b.cols());
    if mu_a != mu_b {
        return Err(ratio_mismatch(op, a, b));
    }
    let t = p.lcm(&q);
    Ok((t / p, t / q, t))
}

/// `(A ⊗ I_la | B ⊗ I_lb)_F` without materialising either lift.
///
/// Walks the nonzero diagonal positions of `A ⊗ I_la` and picks up the
/// matching entry of `B ⊗ I_lb`, which is nonzero only when the row and
/// column offsets agree modulo `lb`.
fn lifted_frobenius(a: &Matrix, la: usize, b: &Matrix, lb: usize) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let mut y_sum = Rational::zero();
            for d in 0..la {
                let (r, c) = (i * la + d, j * la + d);
                if r % lb == c % lb {
                    y_sum += &b[(r / lb, c / lb)];
                }
            }
            if !y_sum.is_zero() {
                acc += x * y_sum;
            }
        }
    }
    acc
}

/// Weighted inner product `(1/t) (A ⊗ I_{t/α} | B ⊗ I_{t/β})_F`.
pub fn weighted_inner(a: &Matrix, b: &Matrix) -> Result<Rational> {
    let (la, lb, t) = lift_factors("weighted_inner", a, b)?;
    Ok(lifted_frobenius(a, la, b, lb) / rational::int(t as i64))
}

/// `(A | A)_W = ‖A‖_F² / k` for `A` in component `k`.
pub fn weighted_norm_sq(a: &Matrix) -> Rational {
    let k = ShapeRatio::of_shape(a.rows(), a.cols()).1;
    crate::matrix::frobenius_norm_sq(a) / rational::int(k as i64)
}

/// Squared weighted distance `‖A ⊟ B‖_W²` between two matrices.
pub fn weighted_distance_sq(a: &Matrix, b: &Matrix) -> Result<Rational> {
    let (la, lb, t) = lift_factors("weighted_distance", a, b)?;
    let (fa, fb) = (crate::matrix::frobenius_norm_sq(a), crate::matrix::frobenius_norm_sq(b));
    let lifted = fa * rational::int(la as i64) + fb * rational::int(lb as i64)
        - lifted_frobenius(a, la, b, lb) * rational::int(2);
    Ok(lifted / rational::int(t as i64))
}

fn class_ratio_check(op: &'static str, x: &QuotientVector, y: &QuotientVector) -> Result<()> {
    if x.shape_ratio() != y.shape_ratio() {
        return Err(ratio_mismatch(op, x.root(), y.root()));
    }
    Ok(())
}

pub fn class_add(x: &QuotientVector, y: &QuotientVector) -> Result<QuotientVector> {
    class_ratio_check("class_add", x, y)?;
    Ok(QuotientVector::of(&lplus(x.root(), y.root())?))
}

pub fn class_sub(x: &QuotientVector, y: &QuotientVector) -> Result<QuotientVector> {
    class_ratio_check("class_sub", x, y)?;
    Ok(QuotientVector::of(&lminus(x.root(), y.root())?))
}

pub fn class_scale(r: &Rational, x: &QuotientVector) -> QuotientVector {
    QuotientVector::of(&x.root().scale(r))
}

/// Inner product of classes, evaluated on the roots. Any representatives give
/// the same value.
pub fn class_inner(x: &QuotientVector, y: &QuotientVector) -> Result<Rational> {
    class_ratio_check("class_inner", x, y)?;
    weighted_inner(x.root(), y.root())
}

pub fn norm_sq(x: &QuotientVector) -> Rational {
    weighted_norm_sq(x.root())
}

/// `‖x‖` rendered to `digits` decimal places.
pub fn norm(x: &QuotientVector, digits: usize) -> String {
    rational::sqrt_decimal(&norm_sq(x), digits).expect("norms are nonnegative")
}

pub fn distance_sq(x: &QuotientVector, y: &QuotientVector) -> Result<Rational> {
    class_ratio_check("distance", x, y)?;
    weighted_distance_sq(x.root(), y.root())
}

pub fn distance(x: &QuotientVector, y: &QuotientVector, digits: usize) -> Result<String> {
    Ok(rational::sqrt_decimal(&distance_sq(x, y)?, digits).expect("distances are nonnegative"))
}

/// `⟨A⟩ ↦ ⟨Aᵀ⟩`, an isometry from `Σ_mu` onto `Σ_{1/mu}`.
pub fn transpose_class(x: &QuotientVector) -> QuotientVector {
    // the transpose of an irreducible root is irreducible
    QuotientVector::of(&x.root().transpose())
}

/// The representative `root ⊗ I_k`.
pub fn embed(x: &QuotientVector, k: usize) -> Result<Matrix> {
    if k == 0 {
        return Err(DomainError::NonPositive { op: "embed", name: "k" });
    }
    Ok(x.root().lift(k))
}

/// `λx ⊞ (1-λ)y` for `λ ∈ [0, 1]`.
pub fn convex_path(x: &QuotientVector, y: &QuotientVector, lambda: &Rational) -> Result<QuotientVector> {
    if lambda.is_negative() || *lambda > BigRational::one() {
        return Err(DomainError::WeightOutOfRange { op: "convex_path", value: lambda.to_string() });
    }
    class_ratio_check("convex_path", x, y)?;
    let mu = BigRational::one() - lambda;
    let combined = lplus(&x.root().scale(lambda), &y.root().scale(&mu))?;
    Ok(QuotientVector::of(&combined))
}
