use proptest::prelude::*;
use serredual::exactla::{ExactMatrix, Field};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::prime(7).unwrap())]
}

fn matrix(field: Field, max: usize) -> impl Strategy<Value = ExactMatrix> {
    (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-4i64..=4, r * c).prop_map(move |v| {
            ExactMatrix::from_vec(
                field,
                r,
                c,
                v.into_iter().map(|x| field.from_i64(x)).collect(),
            )
        })
    })
}

fn any_matrix() -> impl Strategy<Value = ExactMatrix> {
    fields().prop_flat_map(|f| matrix(f, 5))
}

/// `[I_r; B]` (n x r) times `[I_r | C]` (r x m) has rank exactly `r`.
fn known_rank() -> impl Strategy<Value = (ExactMatrix, usize)> {
    (fields(), 0usize..=3, 0usize..=3, 0usize..=3).prop_flat_map(
        |(f, r, extra_rows, extra_cols)| {
            let (n, m) = (r + extra_rows, r + extra_cols);
            (
                prop::collection::vec(-3i64..=3, extra_rows * r),
                prop::collection::vec(-3i64..=3, r * extra_cols),
            )
                .prop_map(move |(b, c)| {
                    let conv =
                        |v: Vec<i64>| v.into_iter().map(|x| f.from_i64(x)).collect::<Vec<_>>();
                    let left = ExactMatrix::identity(f, r).vstack(&ExactMatrix::from_vec(
                        f,
                        extra_rows,
                        r,
                        conv(b),
                    ));
                    let right = ExactMatrix::identity(f, r).hstack(&ExactMatrix::from_vec(
                        f,
                        r,
                        extra_cols,
                        conv(c),
                    ));
                    let a = left.mul(&right);
                    assert_eq!((a.rows(), a.cols()), (n, m));
                    (a, r)
                })
        },
    )
}

proptest! {
    #[test]
    fn rank_of_product_construction((a, r) in known_rank()) {
        prop_assert_eq!(a.rank(), r);
        prop_assert_eq!(a.transpose().rank(), r);
    }

    #[test]
    fn rank_plus_nullity(a in any_matrix()) {
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.cols(), a.cols());
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rref_is_idempotent_and_preserves_rank(a in any_matrix()) {
        let (r, pivots) = a.rref();
        prop_assert_eq!(r.rref().0, r.clone());
        prop_assert_eq!(pivots.len(), a.rank());
        for (row, &c) in pivots.iter().enumerate() {
            prop_assert!(*r.get(row, c) == a.field().one());
        }
    }

    #[test]
    fn solve_returns_preimages(a in any_matrix(), seed in prop::collection::vec(-3i64..=3, 5)) {
        let f = a.field();
        let x: Vec<_> = (0..a.cols()).map(|i| f.from_i64(seed[i])).collect();
        let b = a.mul_vec(&x);
        let y = a.solve(&b).expect("b is in the image");
        prop_assert_eq!(a.mul_vec(&y), b);
    }

    #[test]
    fn inverse_is_two_sided((a, r) in known_rank()) {
        match a.inverse() {
            Some(inv) => {
                prop_assert!(a.is_square() && a.rows() == r);
                prop_assert_eq!(a.mul(&inv), ExactMatrix::identity(a.field(), r));
                prop_assert_eq!(inv.mul(&a), ExactMatrix::identity(a.field(), r));
            }
            None => prop_assert!(!a.is_square() || a.rows() > r),
        }
    }

    #[test]
    fn scalars_round_trip_through_text(n in -50i64..50, d in 1i64..20, f in fields()) {
        let q = Field::Rationals.div(&Field::Rationals.from_i64(n), &Field::Rationals.from_i64(d));
        if let Ok(s) = f.from_rational(q) {
            prop_assert_eq!(f.parse(&f.format(&s)).unwrap(), s);
        }
    }
}
