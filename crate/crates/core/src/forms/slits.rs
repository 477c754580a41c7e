//! Fluctuating slits `[∘×]_a` / `[×∘]_a`: their center correlations, the
//! Gamma-product ratios for pairs of slits, and exact multi-slit chains.

use crate::exact::{ExactError, ExactValue, GammaProduct};
use crate::forms::dipoles::{center_dipole_corr, DipoleError};
use crate::lattice::{Dipole, DipoleKind};

/// Orientation of a slit: `∘×` (monomer first) or `×∘` (separation first).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlitOrientation {
    HoleFirst,
    SepFirst,
}

/// A chain of fluctuating slits along the axis: slit `i` has `lengths[i]`
/// dipoles, and `gaps[i]` unaffected sites separate slits `i` and `i+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlitSpec {
    pub lengths: Vec<u64>,
    pub orientations: Vec<SlitOrientation>,
    pub gaps: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SlitError {
    #[error("slit spec malformed: {0}")]
    Malformed(String),
    #[error(transparent)]
    Dipole(#[from] DipoleError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl SlitSpec {
    pub fn new(
        lengths: Vec<u64>,
        orientations: Vec<SlitOrientation>,
        gaps: Vec<u64>,
    ) -> Result<Self, SlitError> {
        if lengths.is_empty() {
            return Err(SlitError::Malformed("no slits".into()));
        }
        if orientations.len() != lengths.len() {
            return Err(SlitError::Malformed("one orientation per slit required".into()));
        }
        if gaps.len() + 1 != lengths.len() {
            return Err(SlitError::Malformed(format!(
                "{} slits need {} gaps, got {}",
                lengths.len(),
                lengths.len() - 1,
                gaps.len()
            )));
        }
        if lengths.iter().any(|&a| a == 0) {
            return Err(SlitError::Malformed("slit lengths must be positive".into()));
        }
        Ok(SlitSpec { lengths, orientations, gaps })
    }

    /// The dipole family induced on the axis, slits laid out left to right
    /// starting at position 1.
    pub fn dipoles(&self) -> Vec<Dipole> {
        let mut out = Vec::new();
        let mut pos = 1i64; // leftmost unoccupied site
        for (i, (&a, orientation)) in self.lengths.iter().zip(&self.orientations).enumerate() {
            for j in 0..a as i64 {
                let start = pos + 2 * j;
                let kind = match (orientation, start % 2 != 0) {
                    (SlitOrientation::HoleFirst, true) => DipoleKind::OddHoleSep,
                    (SlitOrientation::HoleFirst, false) => DipoleKind::EvenHoleSep,
                    (SlitOrientation::SepFirst, true) => DipoleKind::EvenSepHole,
                    (SlitOrientation::SepFirst, false) => DipoleKind::OddSepHole,
                };
                let s = if start % 2 != 0 { (start - 1) / 2 } else { start / 2 };
                out.push(Dipole::new(kind, s));
            }
            pos += 2 * a as i64;
            if i < self.gaps.len() {
                pos += self.gaps[i] as i64;
            }
        }
        out
    }
}

/// `ω([∘×]_a) = ω([×∘]_a) = (1/2^a) ∏_{i=1}^a Γ²(i)/(Γ(i−½)Γ(i+½))`,
/// the center correlation of one slit; `a = 0` gives 1.
pub fn slit_corr(a: u64) -> Result<ExactValue, SlitError> {
    let mut g = GammaProduct::new();
    for i in 1..=a as i64 {
        g = g.times_int(i).times_int(i).over_half(2 * i - 1).over_half(2 * i + 1);
    }
    let two = num_rational::BigRational::from_integer(2.into());
    Ok(g.eval()?.scale(&crate::exact::rational_pow(&two, -(a as i64))))
}

/// `P_m = 2^m ω([∘×]_m) = ∏_{i=1}^m Γ²(i)/(Γ(i−½)Γ(i+½))`, the recurring
/// slit product.
pub fn p_slit(m: u64) -> Result<ExactValue, SlitError> {
    let mut g = GammaProduct::new();
    for i in 1..=m as i64 {
        g = g.times_int(i).times_int(i).over_half(2 * i - 1).over_half(2 * i + 1);
    }
    Ok(g.eval()?)
}

/// Slit-pair ratios.
///
/// * `same`: `ω([∘×]_a,[∘×]_b;2d) / ω([∘×]_{a+b})`, the product of Gamma
///   ratios over `i = 1..a` (even gap, like orientations).
/// * `opposite`: `ω([∘×]_a,[×∘]_b;2d+1) / ω([∘×]_a,[∘×]_b;2d)` (odd gap,
///   opposite orientations).
///
/// The remaining parities carry no interaction: those correlations factor
/// exactly into the product of the individual slit correlations.
pub fn slit_ratio(
    a: u64,
    b: u64,
    d: u64,
    orientation: SlitOrientation,
) -> Result<ExactValue, SlitError> {
    match orientation {
        SlitOrientation::HoleFirst => {
            let (a, b, d) = (a as i64, b as i64, d as i64);
            let mut g = GammaProduct::new();
            for i in 1..=a {
                // [Γ(a+b+d−i+1)Γ(a−i+1) / (Γ(a+b−i+1)Γ(a+d−i+1))]²
                g = g
                    .times_int(a + b + d - i + 1)
                    .times_int(a + b + d - i + 1)
                    .times_int(a - i + 1)
                    .times_int(a - i + 1)
                    .over_int(a + b - i + 1)
                    .over_int(a + b - i + 1)
                    .over_int(a + d - i + 1)
                    .over_int(a + d - i + 1);
                // Γ(a+d−i+½)Γ(a+d−i+³⁄₂)Γ(a+b−i+½)Γ(a+b−i+³⁄₂)
                //   / (Γ(a+b+d−i+½)Γ(a+b+d−i+³⁄₂)Γ(a−i+½)Γ(a−i+³⁄₂))
                g = g
                    .times_half(2 * (a + d - i) + 1)
                    .times_half(2 * (a + d - i) + 3)
                    .times_half(2 * (a + b - i) + 1)
                    .times_half(2 * (a + b - i) + 3)
                    .over_half(2 * (a + b + d - i) + 1)
                    .over_half(2 * (a + b + d - i) + 3)
                    .over_half(2 * (a - i) + 1)
                    .over_half(2 * (a - i) + 3);
            }
            Ok(g.eval()?)
        }
        SlitOrientation::SepFirst => {
            let (a, b, d) = (a as i64, b as i64, d as i64);
            // Γ(a+b+d+1)Γ(a+d+½)Γ(b+d+½)Γ(d+1)
            //   / (Γ(a+b+d+½)Γ(a+d+1)Γ(b+d+1)Γ(d+½))
            let g = GammaProduct::new()
                .times_int(a + b + d + 1)
                .times_half(2 * (a + d) + 1)
                .times_half(2 * (b + d) + 1)
                .times_int(d + 1)
                .over_half(2 * (a + b + d) + 1)
                .over_int(a + d + 1)
                .over_int(b + d + 1)
                .over_half(2 * d + 1);
            Ok(g.eval()?)
        }
    }
}

/// Exact center correlation of a whole chain of like-oriented slits with even
/// gaps, evaluated through the induced dipole family.
pub fn multi_slit_corr(spec: &SlitSpec) -> Result<ExactValue, SlitError> {
    if spec.orientations.iter().any(|&o| o != SlitOrientation::HoleFirst) {
        return Err(SlitError::Malformed("multi-slit chains take ∘× slits only".into()));
    }
    if spec.gaps.iter().any(|&d| d % 2 != 0) {
        return Err(SlitError::Malformed("multi-slit chains take even gaps only".into()));
    }
    Ok(center_dipole_corr(&spec.dipoles())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn slit_corr_values() {
        assert_eq!(slit_corr(0).unwrap(), ExactValue::one());
        assert_eq!(slit_corr(1).unwrap(), ExactValue::pi_half_power(-2));
        assert_eq!(slit_corr(2).unwrap(), ExactValue::pi_half_power(-4).scale(&rat(4, 3)));
    }

    #[test]
    fn slit_corr_matches_center_dipoles() {
        for a in 1..=5u64 {
            let spec = SlitSpec::new(vec![a], vec![SlitOrientation::HoleFirst], vec![]).unwrap();
            assert_eq!(multi_slit_corr(&spec).unwrap(), slit_corr(a).unwrap(), "a={a}");
        }
    }

    #[test]
    fn sep_first_slit_same_value() {
        // ω([×∘]_a) = ω([∘×]_a): evaluate the ×∘ chain through dipoles
        for a in 1..=4u64 {
            let spec = SlitSpec::new(vec![a], vec![SlitOrientation::SepFirst], vec![]).unwrap();
            let v = center_dipole_corr(&spec.dipoles()).unwrap();
            assert_eq!(v, slit_corr(a).unwrap(), "a={a}");
        }
    }

    #[test]
    fn slit_ratio_same_a1b1d1() {
        // 4/5, also equal to (16/15)/(4/3) from center dipole families
        let v = slit_ratio(1, 1, 1, SlitOrientation::HoleFirst).unwrap();
        assert_eq!(v, ExactValue::from_ratio(4, 5));
    }

    #[test]
    fn slit_ratio_same_degenerate_cases() {
        // d=0: adjacent slits merge; b=0: empty second slit
        for (a, b, d) in [(3, 2, 0), (3, 0, 4), (0, 0, 0)] {
            assert_eq!(
                slit_ratio(a, b, d, SlitOrientation::HoleFirst).unwrap(),
                ExactValue::one(),
                "a={a} b={b} d={d}"
            );
        }
    }

    #[test]
    fn slit_ratio_same_equals_p_form() {
        // ω(a,b;2d)/ω_{a+b} = P_a P_b P_d P_{a+b+d} / (P_{a+b} P_{a+d} P_{b+d})
        for (a, b, d) in [(1u64, 1u64, 1u64), (2, 1, 1), (2, 3, 2), (4, 2, 3)] {
            let lhs = slit_ratio(a, b, d, SlitOrientation::HoleFirst).unwrap();
            let rhs = p_slit(a)
                .unwrap()
                .mul(&p_slit(b).unwrap())
                .mul(&p_slit(d).unwrap())
                .mul(&p_slit(a + b + d).unwrap())
                .div(&p_slit(a + b).unwrap())
                .div(&p_slit(a + d).unwrap())
                .div(&p_slit(b + d).unwrap());
            assert_eq!(lhs, rhs, "a={a} b={b} d={d}");
        }
    }

    #[test]
    fn slit_ratio_same_matches_dipole_route() {
        // two independent routes: Gamma product vs center dipole families
        for (a, b, d) in [(1u64, 1u64, 1u64), (2, 1, 1), (1, 2, 1), (2, 2, 2)] {
            let route1 = slit_ratio(a, b, d, SlitOrientation::HoleFirst).unwrap();
            let spec = SlitSpec::new(
                vec![a, b],
                vec![SlitOrientation::HoleFirst; 2],
                vec![2 * d],
            )
            .unwrap();
            let route2 = multi_slit_corr(&spec).unwrap().div(&slit_corr(a + b).unwrap());
            assert_eq!(route1, route2, "a={a} b={b} d={d}");
        }
    }

    #[test]
    fn slit_ratio_opposite_matches_dipole_route() {
        // ω([∘×]_a,[×∘]_b;2d+1)/ω([∘×]_a,[∘×]_b;2d) through dipole families:
        // both chains start at 1; odd gap 2d+1 puts the ×∘ slit on even parity.
        for (a, b, d) in [(1u64, 1u64, 0u64), (1, 1, 1), (2, 1, 1), (2, 2, 0), (3, 2, 2)] {
            let route1 = slit_ratio(a, b, d, SlitOrientation::SepFirst).unwrap();
            let num_spec = SlitSpec::new(
                vec![a, b],
                vec![SlitOrientation::HoleFirst, SlitOrientation::SepFirst],
                vec![2 * d + 1],
            )
            .unwrap();
            let num = center_dipole_corr(&num_spec.dipoles()).unwrap();
            let den_spec =
                SlitSpec::new(vec![a, b], vec![SlitOrientation::HoleFirst; 2], vec![2 * d])
                    .unwrap();
            let den = center_dipole_corr(&den_spec.dipoles()).unwrap();
            assert_eq!(route1, num.div(&den), "a={a} b={b} d={d}");
        }
    }

    #[test]
    fn multi_slit_two_slit_example() {
        // (1,1;2): (4/5)·(4/(3π²)) = 16/(15π²)
        let spec =
            SlitSpec::new(vec![1, 1], vec![SlitOrientation::HoleFirst; 2], vec![2]).unwrap();
        let v = multi_slit_corr(&spec).unwrap();
        assert_eq!(v, ExactValue::pi_half_power(-4).scale(&rat(16, 15)));
    }

    #[test]
    fn multi_slit_factorizes_via_ratio() {
        // ω(a,b;2d) = ratio · ω_{a+b}
        for (a, b, d) in [(1u64, 2u64, 1u64), (2, 2, 1), (3, 1, 2)] {
            let spec =
                SlitSpec::new(vec![a, b], vec![SlitOrientation::HoleFirst; 2], vec![2 * d])
                    .unwrap();
            let whole = multi_slit_corr(&spec).unwrap();
            let assembled = slit_ratio(a, b, d, SlitOrientation::HoleFirst)
                .unwrap()
                .mul(&slit_corr(a + b).unwrap());
            assert_eq!(whole, assembled);
        }
    }

    #[test]
    fn odd_gap_like_slits_do_not_interact() {
        // ω([∘×]_a,[∘×]_b;2d+1) = ω_a·ω_b exactly
        for (a, b, d) in [(1u64, 1u64, 0u64), (2, 1, 1), (2, 3, 2)] {
            let spec = SlitSpec::new(
                vec![a, b],
                vec![SlitOrientation::HoleFirst; 2],
                vec![2 * d + 1],
            )
            .unwrap();
            let joint = center_dipole_corr(&spec.dipoles()).unwrap();
            let prod = slit_corr(a).unwrap().mul(&slit_corr(b).unwrap());
            assert!(joint.try_sub(&prod).unwrap().is_zero(), "a={a} b={b} d={d}");
        }
    }

    #[test]
    fn even_gap_opposite_slits_do_not_interact() {
        // ω([∘×]_a,[×∘]_b;2d) = ω_a·ω_b exactly
        for (a, b, d) in [(1u64, 1u64, 1u64), (2, 2, 1), (3, 1, 2)] {
            let spec = SlitSpec::new(
                vec![a, b],
                vec![SlitOrientation::HoleFirst, SlitOrientation::SepFirst],
                vec![2 * d],
            )
            .unwrap();
            let joint = center_dipole_corr(&spec.dipoles()).unwrap();
            let prod = slit_corr(a).unwrap().mul(&slit_corr(b).unwrap());
            assert!(joint.try_sub(&prod).unwrap().is_zero(), "a={a} b={b} d={d}");
        }
    }

    #[test]
    fn normalized_symmetry_in_b_and_d() {
        // ω(a,b;2d)/ω_{a+b} = ω(a,d;2b)/ω_{a+d}, exactly
        let lhs = slit_ratio(1, 2, 1, SlitOrientation::HoleFirst).unwrap();
        let rhs = slit_ratio(1, 1, 2, SlitOrientation::HoleFirst).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, ExactValue::from_ratio(27, 35));
    }

    #[test]
    fn spec_validation() {
        assert!(SlitSpec::new(vec![], vec![], vec![]).is_err());
        assert!(SlitSpec::new(vec![1, 1], vec![SlitOrientation::HoleFirst; 2], vec![]).is_err());
        assert!(SlitSpec::new(vec![0], vec![SlitOrientation::HoleFirst], vec![]).is_err());
    }
}
