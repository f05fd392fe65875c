use super::*;
use proptest::prelude::*;

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn int_matrix(rows: &[&[Coeff]]) -> RingMatrix<Coeff> {
    RingMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn cofactor_det(m: &[Vec<Coeff>]) -> Coeff {
    if m.is_empty() {
        return 1;
    }
    let n = m.len();
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<Coeff>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| *x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

#[test]
fn single_relation_square_presentation() {
    let t = "1 - x + x*y";
    let m = RingMatrix::parse("[ 1 - x + x*y, 0, -1 + x - x*y ]").unwrap();
    assert_eq!(elementary_divisor(&m, 3, 2, DEFAULT_MINOR_CAP).unwrap(), lp(t));
    assert!(elementary_divisor(&m, 3, 1, DEFAULT_MINOR_CAP).unwrap().is_zero());
    assert!(elementary_divisor(&m, 3, 0, DEFAULT_MINOR_CAP).unwrap().is_zero());
    assert_eq!(rank_over_fractions(&m), 1);
}

#[test]
fn identity_divisors() {
    let m = RingMatrix::<LaurentPoly>::identity(4);
    for k in 0..6 {
        assert_eq!(elementary_divisor(&m, 4, k, DEFAULT_MINOR_CAP).unwrap(), LaurentPoly::one());
    }
    assert!(elementary_divisor(&m, 4, -1, DEFAULT_MINOR_CAP).unwrap().is_zero());
}

#[test]
fn zero_matrix_rank() {
    assert_eq!(rank_over_fractions(&RingMatrix::<LaurentPoly>::zeros(3, 4)), 0);
}

#[test]
fn integer_snf_small() {
    let r = smith_normal_form(&int_matrix(&[&[2, 4], &[6, 8]]));
    assert_eq!(r.diagonal, vec![2, 4]);
    let m = int_matrix(&[&[2, 4], &[6, 8]]);
    assert_eq!(r.u.mul(&m).unwrap().mul(&r.v).unwrap(), r.s);
}

#[test]
fn diagonal_input_is_kept() {
    let r = smith_normal_form(&int_matrix(&[&[-3, 0], &[0, 6]]));
    assert_eq!(r.diagonal, vec![3, 6]);
}

#[test]
fn cap_is_enforced() {
    let m = RingMatrix::<LaurentPoly>::identity(12);
    let e = elementary_divisor(&m, 12, 6, 10).unwrap_err();
    assert!(matches!(e, Error::CapExceeded { .. }));
}

#[test]
fn rational_snf_univariate() {
    let m = RingMatrix::parse("[x - 1, 0]\n[0, x^2 - 1]\n[2*x - 2, x + 1]").unwrap();
    let q = to_rational_laurent(&m, "x").unwrap();
    let r = smith_normal_form(&q);
    assert_eq!(r.u.mul(&q).unwrap().mul(&r.v).unwrap(), r.s);
    let d: Vec<String> = r.diagonal.iter().map(|d| d.to_laurent("x").unwrap().to_string()).collect();
    assert_eq!(d, vec!["1", "x^2 - 1"]);
}

fn small_int() -> impl Strategy<Value = Coeff> {
    -6i128..=6
}

fn int_mat(r: usize, c: usize) -> impl Strategy<Value = Vec<Vec<Coeff>>> {
    proptest::collection::vec(proptest::collection::vec(small_int(), c), r)
}

fn to_lp(m: &[Vec<Coeff>]) -> RingMatrix<LaurentPoly> {
    RingMatrix::from_rows(m.iter().map(|r| r.iter().map(|&c| LaurentPoly::constant(c)).collect()).collect())
        .unwrap()
}

fn poly_mat(r: usize, c: usize) -> impl Strategy<Value = RingMatrix<LaurentPoly>> {
    let entry = proptest::collection::vec((-2i32..=2, -3i128..=3), 0..3)
        .prop_map(|t| LaurentPoly::from_univariate("x", t));
    proptest::collection::vec(proptest::collection::vec(entry, c), r)
        .prop_map(|rows| RingMatrix::from_rows(rows).unwrap())
}

proptest! {
    #[test]
    fn det_matches_cofactor(m in int_mat(3, 3)) {
        let d = cofactor_det(&m);
        let l = to_lp(&m);
        prop_assert_eq!(elementary_divisor(&l, 3, 0, DEFAULT_MINOR_CAP).unwrap(), LaurentPoly::constant(d.abs()));
        prop_assert_eq!(determinant(&l).unwrap(), LaurentPoly::constant(d));
    }

    #[test]
    fn rank_matches_minor_oracle(m in int_mat(3, 4)) {
        let l = to_lp(&m);
        let oracle = (0..=3usize).rev()
            .find(|&k| k == 0 || !minor_gcd(&l, k, DEFAULT_MINOR_CAP).unwrap().is_zero())
            .unwrap();
        prop_assert_eq!(rank_over_fractions(&l), oracle);
    }

    #[test]
    fn divisibility_chain(m in poly_mat(3, 3)) {
        let d: Vec<LaurentPoly> = (0..4).map(|k| elementary_divisor(&m, 3, k, DEFAULT_MINOR_CAP).unwrap()).collect();
        for k in 0..3 {
            prop_assert!(d[k + 1].divides(&d[k]), "Δ{} = {} does not divide Δ{} = {}", k + 1, d[k + 1], k, d[k]);
        }
    }

    #[test]
    fn block_sum_multiplies_orders(a in poly_mat(2, 2), b in poly_mat(1, 1)) {
        let s = direct_sum(&a, &b);
        let lhs = elementary_divisor(&s, 3, 0, DEFAULT_MINOR_CAP).unwrap();
        let ra = elementary_divisor(&a, 2, 0, DEFAULT_MINOR_CAP).unwrap();
        let rb = elementary_divisor(&b, 1, 0, DEFAULT_MINOR_CAP).unwrap();
        prop_assert_eq!(lhs, (&ra * &rb).normalize());
    }

    #[test]
    fn torsion_iff_full_rank(m in poly_mat(3, 3)) {
        let d0 = elementary_divisor(&m, 3, 0, DEFAULT_MINOR_CAP).unwrap();
        prop_assert_eq!(!d0.is_zero(), rank_over_fractions(&m) == 3);
    }

    #[test]
    fn integer_snf_consistent(m in int_mat(3, 4)) {
        let im = RingMatrix::from_rows(m.clone()).unwrap();
        let r = smith_normal_form(&im);
        prop_assert_eq!(r.u.mul(&im).unwrap().mul(&r.v).unwrap(), r.s.clone());
        prop_assert!(r.s.is_diagonal());
        prop_assert_eq!(determinant(&r.u).unwrap().abs(), 1);
        prop_assert_eq!(determinant(&r.v).unwrap().abs(), 1);
        for w in r.diagonal.windows(2) {
            prop_assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0));
        }
        // Products of leading diagonal entries are elementary divisors.
        let l = to_lp(&m);
        let mut prod = 1;
        for (j, d) in r.diagonal.iter().enumerate() {
            prod *= d;
            let dk = elementary_divisor(&l, 4, (4 - j - 1) as i64, DEFAULT_MINOR_CAP).unwrap();
            prop_assert_eq!(dk, LaurentPoly::constant(prod));
        }
    }

    #[test]
    fn rational_snf_consistent(m in poly_mat(3, 3)) {
        let q = to_rational_laurent(&m, "x").unwrap();
        let r = smith_normal_form(&q);
        prop_assert_eq!(r.u.mul(&q).unwrap().mul(&r.v).unwrap(), r.s.clone());
        prop_assert!(r.s.is_diagonal());
        prop_assert_eq!(determinant(&r.u).unwrap().size(), 0);
        prop_assert_eq!(determinant(&r.v).unwrap().size(), 0);
        for w in r.diagonal.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || w[1].div_exact(&w[0]).is_some());
        }
    }
}
