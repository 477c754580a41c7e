//! The Coulomb-style interaction function over hole/separation position sets:
//! `e(H,S) = ∏|h_i−h_j|^½ ∏|s_i−s_j|^½ / ∏∏|h_i−s_j|^½`.

use crate::exact::ExactValue;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EFuncError {
    #[error("coincident points at {0}")]
    CoincidentPoints(i64),
}

/// `e(H,S)²` as an exact rational.
pub fn e_squared(holes: &[i64], seps: &[i64]) -> Result<BigRational, EFuncError> {
    let mut num = BigInt::one();
    for (i, &a) in holes.iter().enumerate() {
        for &b in &holes[i + 1..] {
            if a == b {
                return Err(EFuncError::CoincidentPoints(a));
            }
            num *= BigInt::from((a - b).abs());
        }
    }
    for (i, &a) in seps.iter().enumerate() {
        for &b in &seps[i + 1..] {
            if a == b {
                return Err(EFuncError::CoincidentPoints(a));
            }
            num *= BigInt::from((a - b).abs());
        }
    }
    let mut den = BigInt::one();
    for &a in holes {
        for &b in seps {
            if a == b {
                return Err(EFuncError::CoincidentPoints(a));
            }
            den *= BigInt::from((a - b).abs());
        }
    }
    Ok(BigRational::new(num, den))
}

/// `e(H,S)` itself, as an exact value carrying the radical.
pub fn e_value(holes: &[i64], seps: &[i64]) -> Result<ExactValue, EFuncError> {
    Ok(ExactValue::sqrt_rational(e_squared(holes, seps)?))
}
