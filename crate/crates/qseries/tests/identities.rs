use num_bigint::BigInt;
use partition_core::Family;
use proptest::prelude::*;
use qseries::{
    family_gf, multisum_rrg, poch_inf, restricted_gf, theta_sum, BigSeries, Series, SeriesError,
    Sign, ThetaSpec, WideSeries,
};

fn euler(n: usize) -> Series {
    poch_inf(Sign::Plus, 1, 1, n).unwrap()
}

#[test]
fn pentagonal_number_theorem() {
    let n = 80;
    let pent: Series = theta_sum(ThetaSpec::new(3, -1).unwrap(), n).unwrap();
    assert_eq!(euler(n), pent);
}

#[test]
fn triple_product_instances() {
    for k in 2..=6u32 {
        for a in 1..=k {
            let n = 60;
            let m = 2 * k + 1;
            let prod = poch_inf::<i64>(Sign::Plus, m, m, n)
                .unwrap()
                .mul(&poch_inf(Sign::Plus, a, m, n).unwrap())
                .unwrap()
                .mul(&poch_inf(Sign::Plus, m - a, m, n).unwrap())
                .unwrap();
            assert_eq!(prod, theta_sum(ThetaSpec::gordon(k, a), n).unwrap(), "k={k} a={a}");
        }
    }
}

#[test]
fn multisum_equals_product_side() {
    for k in 2..=4u32 {
        for a in 1..=k {
            let n = 20;
            let m = 2 * k + 1;
            let a_side: Series = restricted_gf(&[0, a, m - a], m, n).unwrap();
            assert_eq!(multisum_rrg::<i64>(k, a, n).unwrap(), a_side, "k={k} a={a}");
            assert_eq!(family_gf::<i64>(Family::A, k, a, n).unwrap(), a_side);
        }
    }
}

#[test]
fn partition_gf_roundtrip() {
    // brute-force p(n) against 1/(q;q)
    let n = 25;
    let inv = euler(n).invert_unit().unwrap();
    for w in 0..=n {
        assert_eq!(*inv.coeff(w), partition_core::partitions(w as u32).len() as i64);
    }
}

#[test]
fn coefficient_types_agree() {
    let n = 40;
    let narrow = euler(n).invert_unit().unwrap();
    let wide: WideSeries = poch_inf(Sign::Plus, 1, 1, n).unwrap().invert_unit().unwrap();
    let big: BigSeries = poch_inf(Sign::Plus, 1, 1, n).unwrap().invert_unit().unwrap();
    for w in 0..=n {
        assert_eq!(i128::from(*narrow.coeff(w)), *wide.coeff(w));
        assert_eq!(BigInt::from(*narrow.coeff(w)), *big.coeff(w));
    }
}

#[test]
fn overflow_is_reported_not_wrapped() {
    // p(500) is about 2.3e21, beyond i64 but within i128
    let n = 500;
    let narrow = euler(n).invert_unit();
    assert_eq!(narrow, Err(SeriesError::Overflow));
    let wide: WideSeries = poch_inf(Sign::Plus, 1, 1, n).unwrap().invert_unit().unwrap();
    let big: BigSeries = poch_inf(Sign::Plus, 1, 1, n).unwrap().invert_unit().unwrap();
    assert_eq!(BigInt::from(*wide.coeff(n)), *big.coeff(n));
    assert_eq!(big.coeff(n).to_string(), "2300165032574323995027");
}

#[test]
fn prelude_relations() {
    let n = 60;
    let p = |s, a, m| poch_inf::<i64>(s, a, m, n).unwrap();
    // (-q;q^2)(q;q) = (q^2;q^4)(q^2;q^2)
    assert_eq!(
        p(Sign::Minus, 1, 2).mul(&p(Sign::Plus, 1, 1)).unwrap(),
        p(Sign::Plus, 2, 4).mul(&p(Sign::Plus, 2, 2)).unwrap()
    );
    // (-q^2;q^2)(q^2;q^4) = 1
    assert_eq!(p(Sign::Minus, 2, 2).mul(&p(Sign::Plus, 2, 4)).unwrap(), Series::one(n));
}

fn small_series(n: usize) -> impl Strategy<Value = Series> {
    proptest::collection::vec(-50i64..50, n + 1).prop_map(|c| Series::from_coeffs(c).unwrap())
}

proptest! {
    #[test]
    fn mul_commutes_and_associates(x in small_series(8), y in small_series(8), z in small_series(8)) {
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(
            x.mul(&y).unwrap().mul(&z).unwrap(),
            x.mul(&y.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.mul(&y.add(&z).unwrap()).unwrap(), x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn inverse_is_two_sided(mut c in proptest::collection::vec(-9i64..9, 10), neg in any::<bool>()) {
        c[0] = if neg { -1 } else { 1 };
        let x = Series::from_coeffs(c).unwrap();
        let y = x.invert_unit().unwrap();
        prop_assert_eq!(x.mul(&y).unwrap(), Series::one(9));
    }
}
