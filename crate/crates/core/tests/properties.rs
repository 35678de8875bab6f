use crossdim::equivalence::{class_of, classify, equivalent, equivalent_by_lift, lambda_gcd, root, theta};
use crossdim::projection::project;
use crossdim::quotient::{class_add, convex_path, distance_sq, QuotientVector};
use crossdim::rational::{frac, int, Rational};
use crossdim::{frobenius_inner, frobenius_norm_sq, identity, kron, Matrix, ShapeRatio};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-10i64..=10, 1i64..=10).prop_map(|(n, d)| frac(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(rational(), rows * cols).prop_map(move |v| Matrix::new(rows, cols, v).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

/// Same-shape triple.
fn triple() -> impl Strategy<Value = (Matrix, Matrix, Matrix)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (matrix(r, c), matrix(r, c), matrix(r, c)))
}

/// Two classes of a shared ratio, roots in components 1..=3.
fn class_pair() -> impl Strategy<Value = (QuotientVector, QuotientVector)> {
    (1usize..=2, 1usize..=2, 1usize..=3, 1usize..=3).prop_flat_map(|(y, x, ka, kb)| {
        let mu = ShapeRatio::new(y, x).unwrap();
        let (ra, ca) = mu.shape(ka);
        let (rb, cb) = mu.shape(kb);
        (matrix(ra, ca), matrix(rb, cb))
            .prop_map(|(a, b)| (QuotientVector::of(&a), QuotientVector::of(&b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn kron_mixed_product(
        (a, c) in (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(m, n, p)| (matrix(m, n), matrix(n, p))),
        (b, d) in (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(m, n, p)| (matrix(m, n), matrix(n, p))),
    ) {
        let lhs = kron(&a, &b).matmul(&kron(&c, &d)).unwrap();
        let rhs = kron(&a.matmul(&c).unwrap(), &b.matmul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_bilinear_and_symmetric((a, b, c) in triple(), s in rational()) {
        let ab = frobenius_inner(&a, &b).unwrap();
        prop_assert_eq!(&ab, &frobenius_inner(&b, &a).unwrap());
        let lhs = frobenius_inner(&a.scale(&s).add(&b).unwrap(), &c).unwrap();
        let rhs = &s * frobenius_inner(&a, &c).unwrap() + frobenius_inner(&b, &c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_lift_scaling((a, b, _) in triple(), k in 1usize..=6) {
        let ik = identity(k).unwrap();
        prop_assert_eq!(
            frobenius_inner(&kron(&a, &ik), &kron(&b, &ik)).unwrap(),
            int(k as i64) * frobenius_inner(&a, &b).unwrap()
        );
    }

    #[test]
    fn norm_zero_iff_zero_matrix(a in any_matrix()) {
        prop_assert_eq!(frobenius_norm_sq(&a) == int(0), a.is_zero());
    }

    #[test]
    fn root_reconstructs_and_is_idempotent(a in any_matrix(), k in 1usize..=4) {
        let lifted = kron(&a, &identity(k).unwrap());
        let f = root(&lifted);
        prop_assert_eq!(&kron(&f.divisor, &identity(f.multiplicity).unwrap()), &lifted);
        prop_assert_eq!(root(&f.divisor).multiplicity, 1);
        prop_assert_eq!(f.multiplicity % k, 0);
    }

    #[test]
    fn equivalence_laws(a in any_matrix(), j in 1usize..=4, k in 1usize..=4) {
        let (aj, ak) = (a.lift(j), a.lift(k));
        prop_assert!(equivalent(&a, &a));
        prop_assert_eq!(equivalent(&a, &aj), equivalent(&aj, &a));
        prop_assert!(equivalent(&a, &aj) && equivalent(&aj, &ak) && equivalent(&a, &ak));
        prop_assert!(equivalent_by_lift(&aj, &ak));
        let t = theta(&aj, &ak).unwrap();
        prop_assert!(equivalent(&t, &a));
        prop_assert_eq!(lambda_gcd(&aj, &ak).unwrap(), root(&a).divisor);
    }

    #[test]
    fn different_ratios_never_equivalent(a in any_matrix(), b in any_matrix()) {
        if classify(&a).0 != classify(&b).0 {
            prop_assert!(!equivalent(&a, &b));
            prop_assert!(!equivalent_by_lift(&a, &b));
            prop_assert!(theta(&a, &b).is_none());
        }
    }

    #[test]
    fn class_add_well_defined((x, y) in class_pair(), r in 1usize..=4, s in 1usize..=4) {
        let lifted = class_add(
            &QuotientVector::of(&x.root().lift(r)),
            &QuotientVector::of(&y.root().lift(s)),
        ).unwrap();
        prop_assert_eq!(lifted, class_add(&x, &y).unwrap());
    }

    #[test]
    fn convex_path_distance((x, y) in class_pair(), step in 0i64..=4) {
        let lambda = frac(step, 4);
        let p = convex_path(&x, &y, &lambda).unwrap();
        let one_minus = int(1) - &lambda;
        prop_assert_eq!(
            distance_sq(&p, &x).unwrap(),
            &one_minus * &one_minus * distance_sq(&x, &y).unwrap()
        );
    }

    #[test]
    fn projection_laws((x, y) in class_pair(), alpha in 1usize..=4, r in 1usize..=4) {
        let px = project(&x, alpha).unwrap();
        let again = project(&px.projection, alpha).unwrap();
        prop_assert_eq!(&again.projection, &px.projection);
        prop_assert!(again.residual.is_zero());
        let via_lift = project(&QuotientVector::of(&x.root().lift(r)), alpha).unwrap();
        prop_assert_eq!(&via_lift.projection, &px.projection);
        let sum = project(&class_add(&x, &y).unwrap(), alpha).unwrap().projection;
        prop_assert_eq!(sum, class_add(&px.projection, &project(&y, alpha).unwrap().projection).unwrap());
    }

    #[test]
    fn class_of_collapses_lifts(a in any_matrix(), k in 1usize..=5) {
        prop_assert_eq!(class_of(&a), class_of(&a.lift(k)));
    }

    #[test]
    fn documents_round_trip(a in any_matrix()) {
        let text = crossdim::cli::format::to_text(&a);
        prop_assert_eq!(&crossdim::cli::parse_matrix(&text).unwrap(), &a);
        let json = crossdim::cli::format::to_structured(&a).to_string();
        prop_assert_eq!(&crossdim::cli::parse_matrix(&json).unwrap(), &a);
    }
}
