//! Cross-dimensional matrix algebra over exact rationals.
//!
//! * [`stp`] — the semi-tensor product `A ⋉ B = (A ⊗ I_{t/n})(B ⊗ I_{t/p})`,
//!   `t = lcm(n, p)`.
//! * [`equivalence`] — `A ~ B` iff `A ⊗ I_α = B ⊗ I_β`; irreducible roots,
//!   least common multiples and greatest common divisors of matrices.
//! * [`quotient`] — the quotient space `Σ_mu` of one shape ratio: lifted
//!   addition `⊞`, weighted inner product, norm, metric, transpose isometry.
//! * [`projection`] — nearest point of a class in a fixed component.
//!
//! Everything is exact, so algebraic identities are checked with `==`.
//! Norms and distances are exposed squared; decimal square roots are only
//! produced for display.
//!
//! ```
//! use crossdim::{Matrix, quotient::{QuotientVector, class_inner}};
//!
//! let x = QuotientVector::of(&Matrix::from_ints(&[[2]]));
//! let y = QuotientVector::of(&Matrix::from_ints(&[[1, 0], [0, 3]]));
//! assert_eq!(class_inner(&x, &y).unwrap(), crossdim::rational::int(4));
//! ```

pub mod cli;
pub mod equivalence;
pub mod error;
pub mod matrix;
pub mod par;
pub mod projection;
pub mod quotient;
pub mod random;
pub mod rational;
pub mod stp;
pub mod suites;

pub use equivalence::{class_of, root, Factorization, MatrixClass};
pub use error::DomainError;
pub use matrix::{frobenius_inner, frobenius_norm_sq, identity, kron, Matrix, ShapeRatio};
pub use par::Execution;
pub use projection::{project, ProjectionResult};
pub use quotient::QuotientVector;
pub use rational::Rational;
pub use stp::stp;
