//! Property tests for the exact-arithmetic substrate, the lattice maps, and
//! the move-chain engines.

use aztec_gaps::exact::{
    hyperfactorial, pochhammer, rational_pow, ExactValue, GammaProduct, HalfInt,
};
use aztec_gaps::forms::moves::{alpha_corr_ratio, WindowCluster};
use aztec_gaps::forms::slits::{p_slit, slit_ratio, SlitOrientation};
use aztec_gaps::lattice::DefectConfig;
use aztec_gaps::oracle::count_config;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_product_times_inverse_is_one(args in prop::collection::vec((1i64..=100, 1i64..=100), 1..6)) {
        let mut g = GammaProduct::new();
        for (a, b) in &args {
            g = g.times(HalfInt(*a)).over(HalfInt(*b));
        }
        let v = g.eval().unwrap();
        let w = g.inverse().eval().unwrap();
        prop_assert!(v.mul(&w).is_one());
    }

    #[test]
    fn pochhammer_equals_gamma_ratio(a in 1i64..=20, m in 0u64..=40) {
        // (a/2)_m = Γ(a/2 + m) / Γ(a/2)
        let p = pochhammer(&HalfInt(a).as_rational(), m).unwrap();
        let g = GammaProduct::new()
            .times(HalfInt(a + 2 * m as i64))
            .over(HalfInt(a))
            .eval()
            .unwrap();
        prop_assert_eq!(p, g);
    }

    #[test]
    fn hyperfactorial_recurrence(n in 1u64..=40) {
        // H(n+1) = H(n)·n!
        let lhs = hyperfactorial(n + 1);
        let fact = GammaProduct::new().times_int(n as i64 + 1).eval().unwrap();
        prop_assert_eq!(lhs, hyperfactorial(n).mul(&fact));
    }

    #[test]
    fn exact_value_field_laws(
        (n1, d1) in (-50i64..=50, 1i64..=30),
        (n2, d2) in (1i64..=50, 1i64..=30),
        r in 1i64..=60,
        p in -4i64..=4,
    ) {
        let x = ExactValue::from_ratio(n1, d1)
            .mul(&ExactValue::pi_half_power(p))
            .mul(&ExactValue::sqrt_rational(rat(r, 1)));
        let y = ExactValue::from_ratio(n2, d2).mul(&ExactValue::sqrt_rational(rat(r + 1, 1)));
        // (x·y)/y = x, and the product log splits
        let xy = x.mul(&y);
        prop_assert_eq!(xy.div(&y), x.clone());
        if n1 > 0 {
            let lx = x.log().unwrap();
            let ly = y.log().unwrap();
            let lxy = xy.log().unwrap();
            prop_assert!((lxy - lx - ly).abs() < 1e-9);
        }
    }

    #[test]
    fn rational_pow_splits(k1 in -6i64..=6, k2 in -6i64..=6) {
        let b = rat(3, 2);
        let lhs = rational_pow(&b, k1 + k2);
        let rhs = rational_pow(&b, k1) * rational_pow(&b, k2);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rotation_is_involution_and_preserves_counts(
        n in 1u32..=2,
        h in 1i64..=4,
        s in 1i64..=4,
    ) {
        prop_assume!(h != s);
        let w = 2 * n as i64;
        prop_assume!(h <= w && s <= w);
        let cfg = DefectConfig::new(n, vec![h], vec![s]).unwrap();
        let r = cfg.rotate_180();
        prop_assert_eq!(r.rotate_180(), cfg.clone());
        let a = count_config(&cfg).unwrap().value;
        let b = count_config(&r).unwrap().value;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn normalized_slit_symmetry_random(a in 0u64..=8, b in 0u64..=8, d in 0u64..=8) {
        let lhs = slit_ratio(a, b, d, SlitOrientation::HoleFirst).unwrap();
        let rhs = slit_ratio(a, d, b, SlitOrientation::HoleFirst).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn slit_ratio_equals_p_form_random(a in 0u64..=6, b in 0u64..=6, d in 0u64..=6) {
        let lhs = slit_ratio(a, b, d, SlitOrientation::HoleFirst).unwrap();
        let rhs = p_slit(a).unwrap()
            .mul(&p_slit(b).unwrap())
            .mul(&p_slit(d).unwrap())
            .mul(&p_slit(a + b + d).unwrap())
            .div(&p_slit(a + b).unwrap())
            .div(&p_slit(a + d).unwrap())
            .div(&p_slit(b + d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn alpha_moves_compose(
        shift1 in 1i64..=3,
        shift2 in 1i64..=3,
        alpha_num in -2i64..=2,
    ) {
        // path independence: ratio(a→b)·ratio(b→c) = ratio(a→c), and
        // ratio(a→b)·ratio(b→a) = 1
        let alpha = rat(alpha_num, 3);
        let a = WindowCluster::new(vec![0, 3], vec![5]);
        let b = a.translate(shift1);
        let c = b.translate(shift2);
        let r_ab = alpha_corr_ratio(&alpha, &a, &b).unwrap();
        let r_bc = alpha_corr_ratio(&alpha, &b, &c).unwrap();
        let r_ac = alpha_corr_ratio(&alpha, &a, &c).unwrap();
        prop_assert_eq!(r_ab.mul(&r_bc), r_ac);
        let r_ba = alpha_corr_ratio(&alpha, &b, &a).unwrap();
        prop_assert!(r_ab.mul(&r_ba).is_one());
    }
}

#[test]
fn alpha_moves_compose_mixed_shapes() {
    // non-translation reshaping: holes and separations move independently
    let alpha = rat(1, 4);
    let a = WindowCluster::new(vec![0, 4], vec![2]);
    let b = WindowCluster::new(vec![1, 6], vec![3]);
    let c = WindowCluster::new(vec![2, 8], vec![5]);
    let r_ab = alpha_corr_ratio(&alpha, &a, &b).unwrap();
    let r_bc = alpha_corr_ratio(&alpha, &b, &c).unwrap();
    let r_ac = alpha_corr_ratio(&alpha, &a, &c).unwrap();
    assert_eq!(r_ab.mul(&r_bc), r_ac);
}

#[test]
fn defect_counts_bounded_by_diamond() {
    // k=l configs never beat the plain diamond
    for n in 1..=3u32 {
        let w = 2 * n as i64;
        let plain = count_config(&DefectConfig::diamond(n)).unwrap().value;
        for h in 1..=w {
            for s in 1..=w {
                if h == s {
                    continue;
                }
                let cfg = DefectConfig::new(n, vec![h], vec![s]).unwrap();
                assert!(count_config(&cfg).unwrap().value <= plain, "n={n} h={h} s={s}");
            }
        }
    }
}
