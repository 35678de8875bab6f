//! Named property suites, runnable from the command line with
//! `crossdim verify --suite <name>`.
//!
//! Each suite draws `cases` independent random instances (one RNG stream per
//! case) and counts the cases whose identity fails to hold exactly.

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::equivalence::{equivalent, equivalent_by_lift, is_multiple, root};
use crate::error::Result;
use crate::matrix::{frobenius_inner, kron, identity, Matrix, ShapeRatio};
use crate::par::{map_trials, Execution};
use crate::projection::{minimality_report, project, residual_matrix};
use crate::quotient::{
    class_add, class_inner, class_scale, class_sub, distance_sq, embed, norm_sq, transpose_class,
    weighted_distance_sq, weighted_inner, QuotientVector,
};
use crate::random::{self, trial_rng};
use crate::rational::{frac, int, Rational};
use crate::stp::stp;

pub const SUITES: &[&str] = &[
    "example-6-4",
    "orthogonality",
    "representative-independence",
    "lift-scaling",
    "vector-space",
    "inner-product",
    "metric",
    "equivalence",
    "stp",
    "isometry",
    "projection-laws",
    "minimality",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs suite `name`; `None` if no suite has that name.
pub fn run_suite(name: &str, cases: u64, seed: u64, exec: Execution) -> Option<SuiteReport> {
    let idx = SUITES.iter().position(|s| *s == name)?;
    let name = SUITES[idx];
    let report = match name {
        "example-6-4" => example_6_4(),
        "minimality" => minimality(cases, seed, exec),
        _ => {
            let check: fn(&mut rand_chacha::ChaCha8Rng) -> Result<bool> = match name {
                "orthogonality" => orthogonality,
                "representative-independence" => representative_independence,
                "lift-scaling" => lift_scaling,
                "vector-space" => vector_space,
                "inner-product" => inner_product,
                "metric" => metric,
                "equivalence" => equivalence_oracle,
                "stp" => stp_contracts,
                "isometry" => isometry,
                "projection-laws" => projection_laws,
                _ => unreachable!(),
            };
            let failures = map_trials(exec, cases, |i| !check(&mut trial_rng(seed, i)).unwrap_or(false))
                .into_iter()
                .filter(|&f| f)
                .count() as u64;
            SuiteReport { name, cases, failures, notes: Vec::new() }
        }
    };
    Some(report)
}

const BOUND: i64 = 10;

pub fn example_matrix() -> Matrix {
    Matrix::from_ints(&[
        [1, 2, -3, 0, 2, 1],
        [2, 1, -2, -1, 1, 0],
        [0, -1, -1, 3, 1, -2],
    ])
}

pub fn example_projection() -> Matrix {
    Matrix::from_rows(vec![
        vec![int(1), int(0), frac(1, 3), int(0)],
        vec![int(0), frac(-1, 3), int(0), int(-1)],
    ])
    .expect("literal")
}

/// The 6x12 residual printed alongside the worked example.
pub fn example_residual() -> Matrix {
    let t = frac(1, 3);
    let rows: [[Rational; 12]; 6] = [
        [int(0), int(0), int(2), int(0), int(-3), int(0), -t.clone(), int(0), int(2), int(0), int(1), int(0)],
        [int(0), int(0), int(0), int(2), int(0), int(-3), int(0), -t.clone(), int(0), int(2), int(0), int(1)],
        [int(2), int(0), int(0), int(0), int(-2), int(0), int(-1), int(0), frac(2, 3), int(0), int(0), int(0)],
        [int(0), int(2), int(0), frac(4, 3), int(0), int(-2), int(0), int(-1), int(0), int(2), int(0), int(0)],
        [int(0), int(0), int(-1), int(0), frac(-2, 3), int(0), int(3), int(0), int(1), int(0), int(-1), int(0)],
        [int(0), int(0), int(0), int(-1), int(0), frac(-2, 3), int(0), int(3), int(0), int(1), int(0), int(-1)],
    ];
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect()).expect("literal")
}

fn example_6_4() -> SuiteReport {
    let x = QuotientVector::of(&example_matrix());
    let mut failures = 0;
    let mut notes = Vec::new();
    let r = project(&x, 2).expect("positive target");
    if r.projection.root() != &example_projection() {
        failures += 1;
        notes.push(format!("projection root differs:\n{}", r.projection.root()));
    }
    let e = residual_matrix(&x, 2).expect("positive target");
    if e != example_residual() {
        failures += 1;
        notes.push(format!("residual differs:\n{e}"));
    }
    let orth = class_inner(&r.projection, &r.residual).expect("same ratio");
    if !orth.is_zero() {
        failures += 1;
    }
    notes.push(format!("(P(A) | E) = {orth}"));
    let ea = class_inner(&r.residual, &x).expect("same ratio");
    notes.push(format!("(E | A) = {ea} = |E|^2 = {}", norm_sq(&r.residual)));
    SuiteReport { name: "example-6-4", cases: 3, failures, notes }
}

fn minimality(cases: u64, seed: u64, exec: Execution) -> SuiteReport {
    const COMPETITORS: u64 = 200;
    let mut failures = 0;
    for case in 0..cases {
        let (x, alpha) = if case == 0 {
            (QuotientVector::of(&example_matrix()), 2)
        } else {
            let mut rng = trial_rng(seed, case);
            let (mu, beta) = random::ratio_and_index(&mut rng, 4, 8, 4);
            (random::class(&mut rng, mu, beta, BOUND), rng.random_range(1..=4))
        };
        let rep = minimality_report(&x, alpha, COMPETITORS, seed ^ case, exec).expect("positive target");
        if !rep.passed() {
            failures += 1;
        }
    }
    SuiteReport {
        name: "minimality",
        cases,
        failures,
        notes: vec![format!("{COMPETITORS} competitors per instance")],
    }
}

fn same_ratio_classes<R: Rng>(rng: &mut R, n: usize) -> Vec<QuotientVector> {
    let (mu, _) = random::ratio_and_index(rng, 4, 8, 3);
    (0..n)
        .map(|_| {
            let k = rng.random_range(1..=3);
            random::class(rng, mu, k, BOUND)
        })
        .collect()
}

fn orthogonality<R: Rng>(rng: &mut R) -> Result<bool> {
    let (mu, beta) = random::ratio_and_index(rng, 4, 8, 4);
    let x = random::class(rng, mu, beta, BOUND);
    let r = project(&x, rng.random_range(1..=4))?;
    Ok(class_inner(&r.projection, &r.residual)?.is_zero()
        && norm_sq(&x) == norm_sq(&r.projection) + norm_sq(&r.residual))
}

fn representative_independence<R: Rng>(rng: &mut R) -> Result<bool> {
    let (mu, _) = random::ratio_and_index(rng, 4, 8, 3);
    let (ka, kb) = (rng.random_range(1..=3), rng.random_range(1..=3));
    let a = random::component_matrix(rng, mu, ka, BOUND);
    let b = random::component_matrix(rng, mu, kb, BOUND);
    let (r, s) = (rng.random_range(1..=5), rng.random_range(1..=5));
    Ok(weighted_inner(&a.lift(r), &b.lift(s))? == weighted_inner(&a, &b)?)
}

fn lift_scaling<R: Rng>(rng: &mut R) -> Result<bool> {
    let (m, n) = (rng.random_range(1..=4), rng.random_range(1..=4));
    let a = random::matrix(rng, m, n, BOUND);
    let b = random::matrix(rng, m, n, BOUND);
    let k = rng.random_range(1..=6);
    let ik = identity(k)?;
    Ok(frobenius_inner(&kron(&a, &ik), &kron(&b, &ik))? == int(k as i64) * frobenius_inner(&a, &b)?)
}

fn vector_space<R: Rng>(rng: &mut R) -> Result<bool> {
    let v = same_ratio_classes(rng, 3);
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let (a, b) = (random::rational(rng, BOUND), random::rational(rng, BOUND));
    let zero = QuotientVector::zero(x.shape_ratio());
    let assoc = class_add(&class_add(x, y)?, z)? == class_add(x, &class_add(y, z)?)?;
    let comm = class_add(x, y)? == class_add(y, x)?;
    let ident = class_add(x, &zero)? == *x;
    let inverse = class_add(x, &class_scale(&-Rational::one(), x))? == zero;
    let dist_vec = class_scale(&a, &class_add(x, y)?) == class_add(&class_scale(&a, x), &class_scale(&a, y))?;
    let dist_scalar = class_scale(&(&a + &b), x) == class_add(&class_scale(&a, x), &class_scale(&b, x))?;
    let compat = class_scale(&(&a * &b), x) == class_scale(&a, &class_scale(&b, x));
    let unit = class_scale(&Rational::one(), x) == *x;
    Ok(assoc && comm && ident && inverse && dist_vec && dist_scalar && compat && unit)
}

/// `sqrt(c) <= sqrt(a) + sqrt(b)` decided exactly for nonnegative `a, b, c`.
pub fn sqrt_triangle(a: &Rational, b: &Rational, c: &Rational) -> bool {
    let s = c - a - b;
    !s.is_positive() || &s * &s <= int(4) * a * b
}

fn inner_product<R: Rng>(rng: &mut R) -> Result<bool> {
    let v = same_ratio_classes(rng, 3);
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let a = random::rational(rng, BOUND);
    let xy = class_inner(x, y)?;
    let symmetric = xy == class_inner(y, x)?;
    let additive = class_inner(&class_add(x, y)?, z)? == class_inner(x, z)? + class_inner(y, z)?;
    let homogeneous = class_inner(&class_scale(&a, x), y)? == &a * &xy;
    let xx = class_inner(x, x)?;
    let positive = !xx.is_negative() && (xx.is_zero() == x.is_zero());
    let (nx, ny) = (norm_sq(x), norm_sq(y));
    let parallelogram = norm_sq(&class_add(x, y)?) + norm_sq(&class_sub(x, y)?) == int(2) * &nx + int(2) * &ny;
    let schwarz = &xy * &xy <= &nx * &ny;
    let triangle = sqrt_triangle(&nx, &ny, &norm_sq(&class_add(x, y)?));
    Ok(symmetric && additive && homogeneous && positive && parallelogram && schwarz && triangle)
}

fn metric<R: Rng>(rng: &mut R) -> Result<bool> {
    let v = same_ratio_classes(rng, 3);
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let dxy = distance_sq(x, y)?;
    let indiscernible = dxy.is_zero() == (x == y) && distance_sq(x, &QuotientVector::of(&embed(x, 3)?))?.is_zero();
    let symmetric = dxy == distance_sq(y, x)?;
    let triangle = sqrt_triangle(&dxy, &distance_sq(y, z)?, &distance_sq(x, z)?);
    Ok(indiscernible && symmetric && triangle)
}

/// Brute-force maximality: every valid divisor index divides the root's.
pub fn root_is_maximal(a: &Matrix) -> bool {
    let f = root(a);
    let g = num_integer::gcd(a.rows(), a.cols());
    kron(&f.divisor, &identity(f.multiplicity).expect("positive")) == *a
        && root(&f.divisor).multiplicity == 1
        && (1..=g).filter(|j| is_multiple(a, *j).is_some()).all(|j| f.multiplicity.is_multiple_of(j))
}

fn equivalence_oracle<R: Rng>(rng: &mut R) -> Result<bool> {
    let (m, n) = (rng.random_range(1..=3), rng.random_range(1..=3));
    let r = random::matrix(rng, m, n, 3);
    let a = r.lift(rng.random_range(1..=4));
    let mut b = r.lift(rng.random_range(1..=4));
    let perturb = rng.random_bool(0.5);
    if perturb {
        let (i, j) = (rng.random_range(0..b.rows()), rng.random_range(0..b.cols()));
        b = Matrix::from_fn(b.rows(), b.cols(), |p, q| {
            if (p, q) == (i, j) { &b[(p, q)] + int(1) } else { b[(p, q)].clone() }
        })?;
    }
    let by_root = equivalent(&a, &b);
    Ok(by_root == equivalent_by_lift(&a, &b) && by_root != perturb && root_is_maximal(&a) && root_is_maximal(&b))
}

fn stp_contracts<R: Rng>(rng: &mut R) -> Result<bool> {
    let mut d = || rng.random_range(1..=4);
    let (m, n, p, q, s, u) = (d(), d(), d(), d(), d(), d());
    let a = random::matrix(rng, m, n, BOUND);
    let conformable = random::matrix(rng, n, q, BOUND);
    let coincide = stp(&a, &conformable) == a.matmul(&conformable)?;
    let b = random::matrix(rng, p, q, BOUND);
    let c = random::matrix(rng, s, u, BOUND);
    let assoc = stp(&stp(&a, &b), &c) == stp(&a, &stp(&b, &c));
    Ok(coincide && assoc)
}

fn isometry<R: Rng>(rng: &mut R) -> Result<bool> {
    let v = same_ratio_classes(rng, 2);
    let (x, y) = (&v[0], &v[1]);
    let d = distance_sq(x, y)?;
    let (tx, ty) = (transpose_class(x), transpose_class(y));
    let k = rng.random_range(2..=4);
    Ok(distance_sq(&tx, &ty)? == d
        && transpose_class(&tx) == *x
        && tx.shape_ratio() == ShapeRatio::reciprocal(&x.shape_ratio())
        && weighted_distance_sq(&embed(x, k)?, &embed(y, k)?)? == d)
}

fn projection_laws<R: Rng>(rng: &mut R) -> Result<bool> {
    let v = same_ratio_classes(rng, 2);
    let (x, y) = (&v[0], &v[1]);
    let alpha = rng.random_range(1..=4);
    let px = project(x, alpha)?;
    let again = project(&px.projection, alpha)?;
    let idempotent = again.projection == px.projection && again.residual.is_zero();
    let r = rng.random_range(1..=4);
    let lifted = project(&QuotientVector::of(&x.root().lift(r)), alpha)?;
    let independent = lifted.projection == px.projection;
    let linear = project(&class_add(x, y)?, alpha)?.projection == class_add(&px.projection, &project(y, alpha)?.projection)?;
    Ok(idempotent && independent && linear)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_briefly() {
        for name in SUITES {
            let rep = run_suite(name, 20, 11, Execution::default()).unwrap();
            assert!(rep.passed(), "{name}: {rep:?}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", 1, 0, Execution::Sequential).is_none());
    }

    #[test]
    fn sqrt_triangle_cases() {
        // sqrt(1) + sqrt(1) >= sqrt(4), tight
        assert!(sqrt_triangle(&int(1), &int(1), &int(4)));
        assert!(!sqrt_triangle(&int(1), &int(1), &int(5)));
        assert!(sqrt_triangle(&int(9), &int(0), &int(9)));
    }
}
