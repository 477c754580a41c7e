//! Dipole correlations: the four-case finite-size formula, the exact
//! odd/even factorization for families, pair gaps, and the bulk and center
//! scaling limits.

use crate::exact::{pochhammer_half, ExactError, ExactValue};
use crate::forms::efunc::{e_squared, EFuncError};
use crate::lattice::{Dipole, DipoleKind};
use num_rational::BigRational;
use num_traits::{One, Signed};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DipoleError {
    #[error("dipole spans {0}..{1}, outside 1..={2}")]
    OutOfRange(i64, i64, i64),
    #[error("dipoles overlap at position {0}")]
    Overlap(i64),
    #[error("bulk position must lie in (0,2), got {0}")]
    BadBulkPosition(BigRational),
    #[error(transparent)]
    EFunc(#[from] EFuncError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn check_fits(n: u32, d: &Dipole) -> Result<(), DipoleError> {
    let (a, b) = d.span();
    if !d.fits(n) {
        return Err(DipoleError::OutOfRange(a, b, 2 * n as i64));
    }
    Ok(())
}

fn check_disjoint(ds: &[Dipole]) -> Result<(), DipoleError> {
    let mut occupied = std::collections::BTreeSet::new();
    for d in ds {
        for p in [d.hole_pos(), d.sep_pos()] {
            if !occupied.insert(p) {
                return Err(DipoleError::Overlap(p));
            }
        }
    }
    Ok(())
}

/// Finite-size correlation `ω_{2n}(D)` of a single dipole: the four-case
/// Pochhammer ratio, an exact rational.
pub fn dipole_corr(n: u32, d: &Dipole) -> Result<ExactValue, DipoleError> {
    check_fits(n, d)?;
    let s = d.s as u64;
    let n = n as u64;
    let v = match d.kind {
        DipoleKind::OddHoleSep => pochhammer_half(1, s + 1)?
            .mul(&pochhammer_half(1, n - s - 1)?)
            .div(&pochhammer_half(2, s)?.mul(&pochhammer_half(2, n - s - 1)?)),
        DipoleKind::EvenHoleSep => pochhammer_half(1, s)?
            .mul(&pochhammer_half(1, n - s)?)
            .div(&pochhammer_half(2, s - 1)?.mul(&pochhammer_half(2, n - s)?)),
        DipoleKind::EvenSepHole | DipoleKind::OddSepHole => pochhammer_half(1, s)?
            .mul(&pochhammer_half(1, n - s)?)
            .div(&pochhammer_half(2, s)?.mul(&pochhammer_half(2, n - s - 1)?)),
    };
    Ok(v)
}

/// Splits a family into (odd, even) sub-families and returns the product of
/// the two interaction factors `E²(odd)·E²(even)`.
fn family_e_squared(ds: &[Dipole]) -> Result<BigRational, DipoleError> {
    let mut total = BigRational::one();
    for odd in [true, false] {
        let part: Vec<&Dipole> = ds.iter().filter(|d| d.is_odd() == odd).collect();
        let holes: Vec<i64> = part.iter().map(|d| d.hole_pos()).collect();
        let seps: Vec<i64> = part.iter().map(|d| d.sep_pos()).collect();
        total *= e_squared(&holes, &seps)?;
    }
    Ok(total)
}

/// Finite-size correlation of a dipole family:
/// `ω_{2n}(𝒟) = ∏ ω_{2n}(D) · E²(𝒟_odd) · E²(𝒟_even)`.
///
/// The exact factorization means odd and even dipoles never interact.
pub fn dipole_family_corr(n: u32, ds: &[Dipole]) -> Result<ExactValue, DipoleError> {
    check_disjoint(ds)?;
    let mut v = ExactValue::one();
    for d in ds {
        v = v.mul(&dipole_corr(n, d)?);
    }
    Ok(v.scale(&family_e_squared(ds)?))
}

/// Fisher–Stephenson-style pair gap
/// `Ω_{2n}(D₁,D₂) = ω_{2n}(D₁,D₂) − ω_{2n}(D₁)·ω_{2n}(D₂)`,
/// exactly zero for opposite-parity pairs.
pub fn dipole_gap(n: u32, d1: &Dipole, d2: &Dipole) -> Result<ExactValue, DipoleError> {
    let joint = dipole_family_corr(n, &[*d1, *d2])?;
    let product = dipole_corr(n, d1)?.mul(&dipole_corr(n, d2)?);
    Ok(joint.try_sub(&product)?)
}

/// Scaling-limit correlation of dipole collections shrinking to axis points
/// `0 < α₁ < ⋯ < α_k < 2`:
/// `∏_i ∏_{D∈𝒟_i} (1/π)(α_i/(2−α_i))^{ε(D)/2} · ∏_i E²(𝒟_o^{(i)}) E²(𝒟_e^{(i)})`.
///
/// Interactions between different collections die off in the limit, so only
/// per-collection interaction factors remain.
pub fn bulk_dipole_corr(
    alphas: &[BigRational],
    collections: &[Vec<Dipole>],
) -> Result<ExactValue, DipoleError> {
    assert_eq!(alphas.len(), collections.len(), "one α per collection");
    if alphas.windows(2).any(|w| w[0] >= w[1]) {
        return Err(DipoleError::BadBulkPosition(alphas[0].clone()));
    }
    let two = BigRational::from_integer(2.into());
    let mut v = ExactValue::one();
    for (alpha, ds) in alphas.iter().zip(collections) {
        if !alpha.is_positive() || *alpha >= two {
            return Err(DipoleError::BadBulkPosition(alpha.clone()));
        }
        check_disjoint(ds)?;
        let ratio = alpha / (&two - alpha);
        for d in ds {
            v = v.mul(&ExactValue::pi_half_power(-2));
            v = v.mul(&ExactValue::rational_half_power(&ratio, d.epsilon()));
        }
        v = v.scale(&family_e_squared(ds)?);
    }
    Ok(v)
}

/// Correlation at the center of the scaled Aztec diamond (the `α = 1`
/// specialization): `∏_D (1/π) · E²(odd) · E²(even)`. The pair factor for two
/// like dipoles at parameters `s < t` is `(2t−2s)²/((2t−2s−1)(2t−2s+1))`,
/// with the numerator squared as the interaction function dictates.
pub fn center_dipole_corr(ds: &[Dipole]) -> Result<ExactValue, DipoleError> {
    check_disjoint(ds)?;
    let mut v = ExactValue::pi_half_power(-2 * ds.len() as i64);
    v = v.scale(&family_e_squared(ds)?);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn exact(n: i64, d: i64) -> ExactValue {
        ExactValue::from_ratio(n, d)
    }

    #[test]
    fn single_dipole_values() {
        let d = Dipole::new(DipoleKind::OddHoleSep, 0);
        assert_eq!(dipole_corr(1, &d).unwrap(), exact(1, 2));
        assert_eq!(dipole_corr(2, &d).unwrap(), exact(1, 4));
        let d = Dipole::new(DipoleKind::OddHoleSep, 1);
        assert_eq!(dipole_corr(2, &d).unwrap(), exact(3, 4));
    }

    #[test]
    fn out_of_range_rejected() {
        let d = Dipole::new(DipoleKind::OddHoleSep, 1); // occupies 3,4
        assert!(dipole_corr(1, &d).is_err());
    }

    #[test]
    fn family_example_two_odd() {
        // ω_4({∘₁×₂},{∘₃×₄}) = (1/4)(3/4)(4/3) = 1/4
        let ds = [Dipole::new(DipoleKind::OddHoleSep, 0), Dipole::new(DipoleKind::OddHoleSep, 1)];
        assert_eq!(dipole_family_corr(2, &ds).unwrap(), exact(1, 4));
    }

    #[test]
    fn family_reduces_to_single() {
        let ds = [Dipole::new(DipoleKind::OddHoleSep, 0)];
        assert_eq!(dipole_family_corr(1, &ds).unwrap(), exact(1, 2));
    }

    #[test]
    fn mixed_parity_family_is_product_of_parts() {
        // one odd + one even dipole: no cross interaction factor
        let odd = Dipole::new(DipoleKind::OddHoleSep, 0); // 1,2
        let even = Dipole::new(DipoleKind::EvenSepHole, 1); // 3,4
        let n = 3;
        let family = dipole_family_corr(n, &[odd, even]).unwrap();
        let product = dipole_corr(n, &odd).unwrap().mul(&dipole_corr(n, &even).unwrap());
        assert_eq!(family, product);
    }

    #[test]
    fn overlap_rejected() {
        let a = Dipole::new(DipoleKind::OddHoleSep, 0); // 1,2
        let b = Dipole::new(DipoleKind::EvenHoleSep, 1); // 2,3
        assert!(matches!(dipole_family_corr(2, &[a, b]), Err(DipoleError::Overlap(2))));
    }

    #[test]
    fn gap_odd_pair() {
        // s=0, t=1, both ∘× odd: Ω = ω₁ω₂/((2t−2s−1)(2t−2s+1)) = ω₁ω₂/3
        let n = 3;
        let d1 = Dipole::new(DipoleKind::OddHoleSep, 0);
        let d2 = Dipole::new(DipoleKind::OddHoleSep, 1);
        let w1 = dipole_corr(n, &d1).unwrap();
        let w2 = dipole_corr(n, &d2).unwrap();
        let expect = w1.mul(&w2).scale(&rat(1, 3));
        assert_eq!(dipole_gap(n, &d1, &d2).unwrap(), expect);
    }

    #[test]
    fn gap_opposite_orientation_pair() {
        // ∘× odd at s=0 with ×∘ odd at t=1: Ω = −ω₁ω₂/(2t−2s−1)² = −ω₁ω₂
        let n = 3;
        let d1 = Dipole::new(DipoleKind::OddHoleSep, 0); // 1,2
        let d2 = Dipole::new(DipoleKind::OddSepHole, 2); // sep 4, hole 5
        let w1 = dipole_corr(n, &d1).unwrap();
        let w2 = dipole_corr(n, &d2).unwrap();
        // t−s taken from hole parameters: holes at 1 and 5 => 2t−2s = 4
        let expect = w1.mul(&w2).scale(&rat(-1, 9));
        assert_eq!(dipole_gap(n, &d1, &d2).unwrap(), expect);
    }

    #[test]
    fn gap_opposite_parity_is_exact_zero() {
        let n = 3;
        let d1 = Dipole::new(DipoleKind::OddHoleSep, 0); // odd, 1,2
        let d2 = Dipole::new(DipoleKind::EvenHoleSep, 2); // even, 4,5
        assert!(dipole_gap(n, &d1, &d2).unwrap().is_zero());
    }

    #[test]
    fn bulk_single_dipole() {
        // ε=+1 at generic α: (1/π)√(α/(2−α)); at α=1 both signs give 1/π
        let d = Dipole::new(DipoleKind::OddHoleSep, 0);
        let v = bulk_dipole_corr(&[rat(1, 1)], &[vec![d]]).unwrap();
        assert_eq!(v, ExactValue::pi_half_power(-2));
        let d = Dipole::new(DipoleKind::OddSepHole, 1);
        let v = bulk_dipole_corr(&[rat(1, 1)], &[vec![d]]).unwrap();
        assert_eq!(v, ExactValue::pi_half_power(-2));
        // α=1/2, ε=+1: (1/π)√(1/3)
        let d = Dipole::new(DipoleKind::OddHoleSep, 0);
        let v = bulk_dipole_corr(&[rat(1, 2)], &[vec![d]]).unwrap();
        let expect = ExactValue::pi_half_power(-2)
            .mul(&ExactValue::sqrt_rational(rat(1, 3)));
        assert_eq!(v, expect);
    }

    #[test]
    fn bulk_two_collections_product() {
        let d1 = vec![Dipole::new(DipoleKind::OddHoleSep, 0)];
        let d2 = vec![Dipole::new(DipoleKind::OddHoleSep, 5)];
        let joint = bulk_dipole_corr(&[rat(1, 2), rat(3, 2)], &[d1.clone(), d2.clone()]).unwrap();
        let a = bulk_dipole_corr(&[rat(1, 2)], &[d1]).unwrap();
        let b = bulk_dipole_corr(&[rat(3, 2)], &[d2]).unwrap();
        assert_eq!(joint, a.mul(&b));
    }

    #[test]
    fn bulk_rejects_bad_alpha() {
        let d = vec![Dipole::new(DipoleKind::OddHoleSep, 0)];
        assert!(bulk_dipole_corr(&[rat(2, 1)], &[d.clone()]).is_err());
        assert!(bulk_dipole_corr(&[rat(0, 1)], &[d]).is_err());
    }

    #[test]
    fn center_single_dipole() {
        let ds = [Dipole::new(DipoleKind::OddHoleSep, 0)];
        assert_eq!(center_dipole_corr(&ds).unwrap(), ExactValue::pi_half_power(-2));
    }

    #[test]
    fn center_two_odd_dipoles() {
        // s=0,1: (1/π²)·(2²/(1·3)) = (1/π²)(4/3)
        let ds = [Dipole::new(DipoleKind::OddHoleSep, 0), Dipole::new(DipoleKind::OddHoleSep, 1)];
        let expect = ExactValue::pi_half_power(-4).scale(&rat(4, 3));
        assert_eq!(center_dipole_corr(&ds).unwrap(), expect);
    }

    #[test]
    fn center_opposite_parity_zero_cross_term() {
        let odd = Dipole::new(DipoleKind::OddHoleSep, 0);
        let even = Dipole::new(DipoleKind::EvenHoleSep, 2); // hole 4, sep 5
        let joint = center_dipole_corr(&[odd, even]).unwrap();
        let prod = center_dipole_corr(&[odd]).unwrap().mul(&center_dipole_corr(&[even]).unwrap());
        assert!(joint.try_sub(&prod).unwrap().is_zero());
    }

    #[test]
    fn center_pair_factor_is_e_squared() {
        // the squared-numerator pair factor against the interaction function
        for (s, t) in [(0i64, 1i64), (0, 3), (2, 5)] {
            let ds =
                [Dipole::new(DipoleKind::OddHoleSep, s), Dipole::new(DipoleKind::OddHoleSep, t)];
            let joint = center_dipole_corr(&ds).unwrap();
            let d = 2 * (t - s);
            let pair = rat(d * d, (d - 1) * (d + 1));
            let expect = ExactValue::pi_half_power(-4).scale(&pair);
            assert_eq!(joint, expect);
        }
    }
}
