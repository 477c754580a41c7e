//! Fixed-point arithmetic on big integers: value = mantissa / 2^256.
//! Enough working precision (~77 decimal digits) to extract the
//! Glaisher–Kinkelin constant to well over 30 digits by series evaluation
//! and Richardson extrapolation.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Binary fractional digits carried by every [`Fixed`].
pub const PREC: u32 = 256;

/// A signed fixed-point number with 256 fractional bits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fixed(BigInt);

impl Fixed {
    pub fn zero() -> Self {
        Fixed(BigInt::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Fixed(BigInt::from(n) << PREC)
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Fixed((BigInt::from(num) << PREC) / BigInt::from(den))
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fixed(self.0.abs())
    }

    pub fn shr(&self, bits: u32) -> Self {
        Fixed(&self.0 >> bits)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Fixed(&self.0 * BigInt::from(k))
    }

    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0);
        Fixed(&self.0 / BigInt::from(k))
    }

    pub fn div(&self, other: &Fixed) -> Self {
        assert!(!other.0.is_zero());
        Fixed((&self.0 << PREC) / &other.0)
    }

    pub fn to_f64(&self) -> f64 {
        // split off the integer part to keep full precision in the fraction
        let int = &self.0 >> PREC;
        let frac = &self.0 - (&int << PREC);
        int.to_f64().unwrap_or(f64::NAN)
            + frac.to_f64().unwrap_or(0.0) / 2f64.powi(PREC as i32)
    }

    /// Decimal rendering with `digits` fractional digits (truncated).
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let neg = self.0.is_negative();
        let abs = self.0.abs();
        let int = &abs >> PREC;
        let mut frac = &abs - (&int << PREC);
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&int.to_string());
        out.push('.');
        for _ in 0..digits {
            frac *= BigInt::from(10);
            let d = (&frac >> PREC).to_u8().expect("single digit");
            out.push((b'0' + d) as char);
            frac -= (&frac >> PREC) << PREC;
        }
        out
    }
}

impl Add for &Fixed {
    type Output = Fixed;
    fn add(self, rhs: &Fixed) -> Fixed {
        Fixed(&self.0 + &rhs.0)
    }
}

impl Sub for &Fixed {
    type Output = Fixed;
    fn sub(self, rhs: &Fixed) -> Fixed {
        Fixed(&self.0 - &rhs.0)
    }
}

impl Mul for &Fixed {
    type Output = Fixed;
    fn mul(self, rhs: &Fixed) -> Fixed {
        Fixed((&self.0 * &rhs.0) >> PREC)
    }
}

impl Neg for &Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed(-&self.0)
    }
}

/// `atanh(1/m) = Σ_{t≥0} 1/((2t+1) m^{2t+1})` for integer `m ≥ 2`.
fn atanh_inv(m: i64) -> Fixed {
    let mut sum = Fixed::zero();
    let mut power = Fixed::from_ratio(1, m); // 1/m^{2t+1}
    let m2 = m * m;
    let mut t = 0i64;
    loop {
        if power.0.is_zero() {
            break;
        }
        sum = &sum + &power.div_int(2 * t + 1);
        power = power.div_int(m2);
        t += 1;
    }
    sum
}

/// `atan(1/m)` by the alternating series, for Machin's formula.
fn atan_inv(m: i64) -> Fixed {
    let mut sum = Fixed::zero();
    let mut power = Fixed::from_ratio(1, m);
    let m2 = m * m;
    let mut t = 0i64;
    loop {
        if power.0.is_zero() {
            break;
        }
        let term = power.div_int(2 * t + 1);
        if t % 2 == 0 {
            sum = &sum + &term;
        } else {
            sum = &sum - &term;
        }
        power = power.div_int(m2);
        t += 1;
    }
    sum
}

/// `ln 2` to full precision.
pub fn ln2() -> Fixed {
    atanh_inv(3).mul_int(2)
}

/// `π` by Machin's formula `16 atan(1/5) − 4 atan(1/239)`.
pub fn pi() -> Fixed {
    &atan_inv(5).mul_int(16) - &atan_inv(239).mul_int(4)
}

/// `ln x` for `x > 0` via power-of-two reduction and the atanh series
/// `ln v = 2 atanh((v−1)/(v+1))` on `v ∈ [1, 2)`.
pub fn ln(x: &Fixed) -> Fixed {
    assert!(!x.is_negative() && !x.0.is_zero(), "ln needs a positive argument");
    // scale x by 2^e into [1, 2)
    let bits = x.0.bits() as i64 - 1 - PREC as i64;
    let v = if bits >= 0 { x.shr(bits as u32) } else { Fixed(&x.0 << (-bits) as u32) };
    let one = Fixed::from_int(1);
    let num = &v - &one;
    let den = &v + &one;
    let y = num.div(&den); // |y| < 1/3
    let y2 = &y * &y;
    let mut sum = Fixed::zero();
    let mut power = y;
    let mut t = 0i64;
    loop {
        if power.0.is_zero() {
            break;
        }
        sum = &sum + &power.div_int(2 * t + 1);
        power = &power * &y2;
        t += 1;
    }
    &sum.mul_int(2) + &ln2().mul_int(bits)
}

/// `ln n!` exactly summed as `Σ ln k`; cached per call site by the caller.
pub fn ln_int(n: i64) -> Fixed {
    ln(&Fixed::from_int(n))
}

/// `exp x` for moderate |x| by the Taylor series.
pub fn exp(x: &Fixed) -> Fixed {
    let mut sum = Fixed::from_int(1);
    let mut term = Fixed::from_int(1);
    let mut t = 1i64;
    loop {
        term = (&term * x).div_int(t);
        if term.0.is_zero() {
            break;
        }
        sum = &sum + &term;
        t += 1;
        if t > 500 {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln2_value() {
        let v = ln2().to_f64();
        assert!((v - std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn pi_value() {
        let v = pi().to_f64();
        assert!((v - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn ln_small_integers() {
        for n in [2i64, 3, 10, 97, 512] {
            let v = ln(&Fixed::from_int(n)).to_f64();
            assert!((v - (n as f64).ln()).abs() < 1e-14, "ln {n}");
        }
    }

    #[test]
    fn exp_round_trip() {
        let x = Fixed::from_ratio(-248, 1000);
        let v = exp(&x).to_f64();
        assert!((v - (-0.248f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn decimal_rendering() {
        let third = Fixed::from_ratio(1, 3);
        let s = third.to_decimal_string(10);
        assert_eq!(s, "0.3333333333");
        let neg = Fixed::from_ratio(-5, 4);
        assert_eq!(neg.to_decimal_string(2), "-1.25");
    }

    #[test]
    fn division() {
        let a = Fixed::from_int(10);
        let b = Fixed::from_int(4);
        assert_eq!(a.div(&b), Fixed::from_ratio(5, 2));
    }
}
