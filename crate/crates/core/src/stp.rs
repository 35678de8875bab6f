//! The semi-tensor product.

use num_integer::Integer;

use crate::matrix::Matrix;

/// Left semi-tensor product of an `m x n` and a `p x q` matrix.
///
/// With `t = lcm(n, p)` this is `(A ⊗ I_{t/n}) (B ⊗ I_{t/p})`, an
/// `(m t/n) x (q t/p)` matrix. When `n = p` both lifts are trivial and the
/// result is the conventional product.
pub fn stp(a: &Matrix, b: &Matrix) -> Matrix {
    let (m, n) = a.shape();
    let (p, q) = b.shape();
    let product = if n == p {
        a.matmul(b)
    } else {
        let t = n.lcm(&p);
        a.lift(t / n).matmul(&b.lift(t / p))
    }
    .expect("lifted inner dimensions agree");
    let t = n.lcm(&p);
    debug_assert_eq!(product.shape(), (m * t / n, q * t / p));
    product
}
