//! Orthogonal projection of a class onto a single component `M_mu^α`.
//!
//! For `x = ⟨A⟩` with `A` in component `β`, let `t = lcm(α, β)` and
//! `k = t/α`. Splitting `A ⊗ I_{t/β}` into `k x k` blocks `A_{i,j}`, the
//! nearest `C ∈ M_mu^α` has `c_{i,j} = tr(A_{i,j}) / k`. The residual
//! `A ⊗ I_{t/β} - C ⊗ I_k` then has traceless blocks, hence is orthogonal to
//! everything of the form `X ⊗ I_k`.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{DomainError, Result};
use crate::matrix::Matrix;
use crate::par::{map_trials, Execution};
use crate::quotient::{class_sub, norm_sq, weighted_distance_sq, QuotientVector};
use crate::random;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionResult {
    /// Class of the minimiser `C`.
    pub projection: QuotientVector,
    /// `x ⊟ projection`.
    pub residual: QuotientVector,
    /// The minimiser itself, as a member of component `target_index`.
    pub minimizer: Matrix,
    pub target_index: usize,
    pub source_index: usize,
    /// `t = lcm(target_index, source_index)`.
    pub lift_index: usize,
    /// `k = t / target_index`.
    pub block_size: usize,
    pub distance_sq_to_target: Rational,
}

struct Lifted {
    lifted: Matrix,
    minimizer: Matrix,
    source_index: usize,
    lift_index: usize,
    block_size: usize,
}

fn lift_and_average(x: &QuotientVector, alpha: usize) -> Result<Lifted> {
    if alpha == 0 {
        return Err(DomainError::NonPositive { op: "project", name: "target index" });
    }
    let mu = x.shape_ratio();
    let beta = x.index();
    let t = alpha.lcm(&beta);
    let k = t / alpha;
    let lifted = x.root().lift(t / beta);
    let (rows, cols) = mu.shape(alpha);
    let k_r = rational::int(k as i64);
    let minimizer = Matrix::from_fn(rows, cols, |i, j| lifted.block_trace(i, j, k) / &k_r)
        .expect("target component is non-empty");
    Ok(Lifted { lifted, minimizer, source_index: beta, lift_index: t, block_size: k })
}

/// Projects `x` onto the component with index `alpha` of its shape ratio.
pub fn project(x: &QuotientVector, alpha: usize) -> Result<ProjectionResult> {
    let Lifted { minimizer, source_index, lift_index, block_size, .. } = lift_and_average(x, alpha)?;
    let projection = QuotientVector::of(&minimizer);
    let residual = class_sub(x, &projection)?;
    let distance_sq_to_target = norm_sq(&residual);
    Ok(ProjectionResult {
        projection,
        residual,
        minimizer,
        target_index: alpha,
        source_index,
        lift_index,
        block_size,
        distance_sq_to_target,
    })
}

/// The residual at the common lift: `root ⊗ I_{t/β} - C ⊗ I_k`.
pub fn residual_matrix(x: &QuotientVector, alpha: usize) -> Result<Matrix> {
    let l = lift_and_average(x, alpha)?;
    Ok(l.lifted.sub(&l.minimizer.lift(l.block_size)).expect("both sides are t-component lifts"))
}

/// Outcome of a randomised minimality check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinimalityReport {
    pub trials: u64,
    /// Competitors strictly farther than the projection.
    pub strict: u64,
    /// Competitors at exactly the projection's distance and equivalent to it.
    pub ties: u64,
    /// Competitors closer than the projection, or as close without being equivalent.
    pub violations: u64,
}

impl MinimalityReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.strict + self.ties == self.trials
    }
}

enum Outcome {
    Strict,
    Tie,
    Violation,
}

const DEFAULT_SEED: u64 = 0x05ee_d0fc_1a55;
const COMPETITOR_BOUND: i64 = 10;

/// Compares `x`'s projection onto component `alpha` against `trials` random
/// competitors in that component. Returns true iff none is closer and every
/// tie is the projection's own class.
pub fn verify_minimality(x: &QuotientVector, alpha: usize, trials: u64) -> Result<bool> {
    Ok(minimality_report(x, alpha, trials, DEFAULT_SEED, Execution::default())?.passed())
}

/// Same as [`verify_minimality`] with an explicit seed and execution mode.
///
/// Even trials draw a fresh matrix; odd trials perturb the minimiser by a
/// small random matrix, which may be zero and so exercises the tie case.
pub fn minimality_report(
    x: &QuotientVector,
    alpha: usize,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<MinimalityReport> {
    let result = project(x, alpha)?;
    let best = &result.distance_sq_to_target;
    let mu = x.shape_ratio();
    let outcomes = map_trials(exec, trials, |trial| {
        let mut rng = random::trial_rng(seed, trial);
        let competitor = if trial % 2 == 0 {
            random::component_matrix(&mut rng, mu, alpha, COMPETITOR_BOUND)
        } else {
            let z = random::component_matrix(&mut rng, mu, alpha, 1);
            let z = z.scale(&random::rational(&mut rng, 2));
            result.minimizer.add(&z).expect("same component")
        };
        let d = weighted_distance_sq(x.root(), &competitor).expect("same shape ratio");
        if d > *best {
            Outcome::Strict
        } else if d == *best && QuotientVector::of(&competitor) == result.projection {
            Outcome::Tie
        } else {
            Outcome::Violation
        }
    });
    let mut report = MinimalityReport { trials, ..Default::default() };
    for o in outcomes {
        match o {
            Outcome::Strict => report.strict += 1,
            Outcome::Tie => report.ties += 1,
            Outcome::Violation => report.violations += 1,
        }
    }
    Ok(report)
}

/// Exact check that `projection ⊥ residual`.
pub fn is_orthogonal(result: &ProjectionResult) -> bool {
    crate::quotient::class_inner(&result.projection, &result.residual)
        .map(|v| v.is_zero())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::frobenius_inner;
    use crate::quotient::{class_add, class_inner};
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows)
    }

    fn example_a() -> QuotientVector {
        QuotientVector::of(&m(&[
            &[1, 2, -3, 0, 2, 1],
            &[2, 1, -2, -1, 1, 0],
            &[0, -1, -1, 3, 1, -2],
        ]))
    }

    #[test]
    fn own_component_is_fixed() {
        let x = QuotientVector::of(&m(&[&[1, 2], &[3, 4]]));
        let r = project(&x, 2).unwrap();
        assert_eq!(r.projection, x);
        assert!(r.residual.is_zero());
        assert_eq!(r.block_size, 1);
        assert!(residual_matrix(&x, 2).unwrap().is_zero());
    }

    #[test]
    fn diagonal_onto_scalars() {
        let x = QuotientVector::of(&m(&[&[1, 0], &[0, 3]]));
        let r = project(&x, 1).unwrap();
        assert_eq!(r.projection.root(), &m(&[&[2]]));
        assert_eq!(r.residual.root(), &m(&[&[-1, 0], &[0, 1]]));
        assert_eq!((r.lift_index, r.block_size), (2, 2));
        assert_eq!(class_inner(&r.projection, &r.residual).unwrap(), int(0));
        assert_eq!(r.distance_sq_to_target, int(1));
    }

    #[test]
    fn example_projection_root() {
        let r = project(&example_a(), 2).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![int(1), int(0), frac(1, 3), int(0)],
            vec![int(0), frac(-1, 3), int(0), int(-1)],
        ])
        .unwrap();
        assert_eq!(r.projection.root(), &expected);
        assert_eq!((r.source_index, r.lift_index, r.block_size), (3, 6, 3));
        assert!(is_orthogonal(&r));
    }

    #[test]
    fn lifted_residual_is_orthogonal() {
        let x = example_a();
        let r = project(&x, 2).unwrap();
        let e = residual_matrix(&x, 2).unwrap();
        assert_eq!(e.shape(), (6, 12));
        // brute-force dot product against C ⊗ I_3
        let c = r.minimizer.lift(3);
        let mut dot = int(0);
        for i in 0..6 {
            for j in 0..12 {
                dot += &c[(i, j)] * &e[(i, j)];
            }
        }
        assert_eq!(dot, int(0));
        assert_eq!(frobenius_inner(&c, &e).unwrap(), int(0));
    }

    #[test]
    fn minimality_on_example() {
        assert!(verify_minimality(&example_a(), 2, 200).unwrap());
        let rep = minimality_report(&example_a(), 1, 200, 9, Execution::Sequential).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn pythagoras_for_shifted_competitor() {
        let x = example_a();
        let r = project(&x, 2).unwrap();
        let z = QuotientVector::of(&m(&[&[0, 1, 0, 0], &[2, 0, 0, -1]]));
        let competitor = class_add(&r.projection, &z).unwrap();
        let d = crate::quotient::distance_sq(&x, &competitor).unwrap();
        assert_eq!(d, &r.distance_sq_to_target + norm_sq(&z));
        assert!(d > r.distance_sq_to_target);
        assert_eq!(crate::quotient::distance_sq(&x, &r.projection).unwrap(), r.distance_sq_to_target);
    }

    #[test]
    fn zero_target_rejected() {
        assert!(project(&example_a(), 0).is_err());
        assert!(residual_matrix(&example_a(), 0).is_err());
    }
}
