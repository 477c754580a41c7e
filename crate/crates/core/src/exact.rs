//! Exact arithmetic substrate: values of the form `c · π^(p/2) · √r` with
//! big-rational `c` and `r`, products of Gamma values at integer and
//! half-integer arguments, Pochhammer symbols, and factorial towers.
//!
//! Every closed-form correlation in this crate evaluates to such a value, and
//! all identity checks compare them exactly. Floating point enters only
//! through [`ExactValue::log`] / [`ExactValue::to_f64`].

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Errors from exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    /// Gamma or Pochhammer evaluation hit a zero or negative factor.
    #[error("non-positive argument in Gamma/Pochhammer evaluation: {0}")]
    NonPositiveArgument(String),
    /// Logarithm of a non-positive value.
    #[error("log of non-positive value")]
    LogOfNonPositive,
    /// Sum/difference of radically incompatible values.
    #[error("values are not compatible for exact addition (π powers or radicands differ)")]
    Incompatible,
}

/// An exact value `coeff · π^(pi_half_power/2) · √radicand`.
///
/// `radicand` is a positive rational; equality is decided componentwise via
/// sign, π exponent and the exact rational `coeff²·radicand`, so it does not
/// depend on how far the square-free normalization got.
#[derive(Debug, Clone)]
pub struct ExactValue {
    coeff: BigRational,
    pi_half_power: i64,
    radicand: BigRational,
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Pulls the largest square divisor out of `n` (n > 0), returning (root, rest)
/// with `n = root² · rest`. Trial division by small primes plus a perfect
/// square check on the remainder; radicands here stay small so this is enough
/// for printing, and equality never relies on it.
fn extract_square_part(n: &BigUint) -> (BigUint, BigUint) {
    let mut rest = n.clone();
    let mut root = BigUint::one();
    let mut p = 2u64;
    while p < 1000 {
        let pp = BigUint::from(p * p);
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            root *= BigUint::from(p);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let s = rest.sqrt();
    if &s * &s == rest {
        root *= &s;
        rest = BigUint::one();
    }
    (root, rest)
}

impl ExactValue {
    /// Exact 1.
    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    /// Exact 0.
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    /// A plain rational value.
    pub fn from_rational(c: BigRational) -> Self {
        ExactValue { coeff: c, pi_half_power: 0, radicand: BigRational::one() }
    }

    /// A plain integer value.
    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(big(n))
    }

    /// A ratio of two machine integers (d must be nonzero).
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// `√r` of a positive rational `r`.
    pub fn sqrt_rational(r: BigRational) -> Self {
        assert!(r.is_positive(), "radicand must be positive");
        let mut v = ExactValue { coeff: BigRational::one(), pi_half_power: 0, radicand: r };
        v.normalize();
        v
    }

    /// `base^(half_power/2)` of a positive rational base.
    pub fn rational_half_power(base: &BigRational, half_power: i64) -> Self {
        assert!(base.is_positive(), "base must be positive");
        let whole = half_power.div_euclid(2);
        let rem = half_power.rem_euclid(2);
        let mut v = Self::from_rational(rational_pow(base, whole));
        if rem == 1 {
            v = v.mul(&Self::sqrt_rational(base.clone()));
        }
        v
    }

    /// `π^(half_power/2)`.
    pub fn pi_half_power(half_power: i64) -> Self {
        ExactValue {
            coeff: BigRational::one(),
            pi_half_power: half_power,
            radicand: BigRational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// The rational coefficient.
    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    /// The exponent `p` in the `π^(p/2)` factor.
    pub fn pi_half(&self) -> i64 {
        self.pi_half_power
    }

    /// The (positive) radicand under the square root.
    pub fn radicand(&self) -> &BigRational {
        &self.radicand
    }

    /// The value as a plain rational, if it is one (π-free, square radicand
    /// already folded by normalization).
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.pi_half_power == 0 && self.radicand.is_one() {
            Some(&self.coeff)
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.coeff.is_zero() {
            self.pi_half_power = 0;
            self.radicand = BigRational::one();
            return;
        }
        // num/den under the root -> (num·den)/den², so a single integer radicand.
        if !self.radicand.is_one() {
            let num = self.radicand.numer().to_biguint().expect("radicand > 0");
            let den = self.radicand.denom().to_biguint().expect("radicand > 0");
            let inner = &num * &den;
            let (root, rest) = extract_square_part(&inner);
            // √(num/den) = root·√rest / den
            self.coeff *= BigRational::new(BigInt::from(root), BigInt::from(den));
            self.radicand = BigRational::from_integer(BigInt::from(rest));
        }
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut v = ExactValue {
            coeff: &self.coeff * &other.coeff,
            pi_half_power: self.pi_half_power + other.pi_half_power,
            radicand: &self.radicand * &other.radicand,
        };
        v.normalize();
        v
    }

    /// Exact quotient (`other` must be nonzero).
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by exact zero");
        self.mul(&other.inv())
    }

    /// Exact reciprocal.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of exact zero");
        // 1/(c·√r) = (1/(c·r))·√r
        let mut v = ExactValue {
            coeff: (&self.coeff * &self.radicand).recip(),
            pi_half_power: -self.pi_half_power,
            radicand: self.radicand.clone(),
        };
        v.normalize();
        v
    }

    /// Exact integer power.
    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one();
        }
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Multiply by a plain rational.
    pub fn scale(&self, r: &BigRational) -> Self {
        let mut v = self.clone();
        v.coeff *= r;
        v.normalize();
        v
    }

    /// Exact sum; defined when the two values live on the same `π^(p/2)·√r`
    /// ray (radicands proportional by a rational square). Errors otherwise.
    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_half_power != other.pi_half_power {
            return Err(ExactError::Incompatible);
        }
        // other = c₂√r₂; if r₂/r₁ = (u/v)² then c₂√r₂ = c₂(u/v)√r₁.
        let ratio = &other.radicand / &self.radicand;
        match rational_exact_sqrt(&ratio) {
            Some(s) => {
                let mut v = ExactValue {
                    coeff: &self.coeff + &other.coeff * s,
                    pi_half_power: self.pi_half_power,
                    radicand: self.radicand.clone(),
                };
                v.normalize();
                Ok(v)
            }
            None => Err(ExactError::Incompatible),
        }
    }

    /// Exact difference under the same compatibility rule as [`Self::try_add`].
    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_add(&other.scale(&-BigRational::one()))
    }

    /// Natural log, assembled from component logs: `ln|c| + (p/2)ln π + ½ ln r`.
    /// The big integers are never expanded into floats.
    pub fn log(&self) -> Result<f64, ExactError> {
        if !self.coeff.is_positive() {
            return Err(ExactError::LogOfNonPositive);
        }
        let pi_ln = std::f64::consts::PI.ln();
        Ok(ln_rational(&self.coeff)
            + 0.5 * self.pi_half_power as f64 * pi_ln
            + 0.5 * ln_rational(&self.radicand))
    }

    /// The value as an f64 (sign · exp of the component-log), saturating on
    /// overflow.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let sign = if self.coeff.is_negative() { -1.0 } else { 1.0 };
        let abs = self.scale(&BigRational::from_integer(BigInt::from(
            if self.coeff.is_negative() { -1 } else { 1 },
        )));
        sign * abs.log().expect("abs value is positive").exp()
    }
}

impl PartialEq for ExactValue {
    fn eq(&self, other: &Self) -> bool {
        if self.coeff.is_zero() && other.coeff.is_zero() {
            return true;
        }
        // c₁√r₁·π^(p₁/2) = c₂√r₂·π^(p₂/2) iff signs and π powers agree and
        // c₁²r₁ = c₂²r₂ exactly.
        self.coeff.is_positive() == other.coeff.is_positive()
            && self.pi_half_power == other.pi_half_power
            && &self.coeff * &self.coeff * &self.radicand
                == &other.coeff * &other.coeff * &other.radicand
    }
}

impl Eq for ExactValue {}

impl fmt::Display for ExactValue {
    /// Canonical rendering `c * pi^(p/2) * sqrt(r)`, omitting unit factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.pi_half_power != 0 {
            write!(f, " * pi^({}/2)", self.pi_half_power)?;
        }
        if !self.radicand.is_one() {
            write!(f, " * sqrt({})", self.radicand)?;
        }
        Ok(())
    }
}

/// `base^k` for rational base and signed integer exponent.
pub fn rational_pow(base: &BigRational, k: i64) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    let b = if k < 0 { base.recip() } else { base.clone() };
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// Exact square root of a positive rational, if it is a perfect square.
fn rational_exact_sqrt(r: &BigRational) -> Option<BigRational> {
    let num = r.numer().to_biguint()?;
    let den = r.denom().to_biguint()?;
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &sn * &sn == num && &sd * &sd == den {
        Some(BigRational::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

/// `ln` of a positive big rational with ~1e-15 absolute accuracy, without ever
/// converting the big integers to floats directly.
pub fn ln_rational(r: &BigRational) -> f64 {
    assert!(r.is_positive());
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let bits_n = num.bits() as i64;
    let bits_d = den.bits() as i64;
    // Near-unity ratios: divide with 96 guard bits so the quotient keeps full
    // f64 precision, avoiding the cancellation of ln(num) − ln(den).
    if (bits_n - bits_d).abs() < 512 {
        let q = (num << 96u32) / den;
        ln_biguint(&q) - 96.0 * std::f64::consts::LN_2
    } else {
        ln_biguint(num) - ln_biguint(den)
    }
}

fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 53 {
        return n.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 53;
    let top = (n >> shift).to_f64().expect("53 bits fit");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// A half-integer `h/2` (h ≥ 1), the argument domain of every Gamma value in
/// the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn from_half_odd(twice: i64) -> Self {
        HalfInt(twice)
    }

    /// Twice the value.
    pub fn doubled(&self) -> i64 {
        self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0 % 2 == 0
    }

    pub fn as_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A formal product/quotient of Gamma values at positive half-integer
/// arguments.
#[derive(Debug, Clone, Default)]
pub struct GammaProduct {
    numer: Vec<HalfInt>,
    denom: Vec<HalfInt>,
}

impl GammaProduct {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Γ(n)` in the numerator (integer argument).
    pub fn times_int(mut self, n: i64) -> Self {
        self.numer.push(HalfInt::from_int(n));
        self
    }

    /// `Γ(n)` in the denominator.
    pub fn over_int(mut self, n: i64) -> Self {
        self.denom.push(HalfInt::from_int(n));
        self
    }

    /// `Γ(h/2)` in the numerator.
    pub fn times_half(mut self, h: i64) -> Self {
        self.numer.push(HalfInt(h));
        self
    }

    /// `Γ(h/2)` in the denominator.
    pub fn over_half(mut self, h: i64) -> Self {
        self.denom.push(HalfInt(h));
        self
    }

    pub fn times(mut self, arg: HalfInt) -> Self {
        self.numer.push(arg);
        self
    }

    pub fn over(mut self, arg: HalfInt) -> Self {
        self.denom.push(arg);
        self
    }

    /// The formal inverse (numerator and denominator swapped).
    pub fn inverse(&self) -> Self {
        GammaProduct { numer: self.denom.clone(), denom: self.numer.clone() }
    }

    /// Append another product.
    pub fn extend(mut self, other: &GammaProduct) -> Self {
        self.numer.extend_from_slice(&other.numer);
        self.denom.extend_from_slice(&other.denom);
        self
    }

    /// Evaluate to a canonical [`ExactValue`]. Integer arguments contribute
    /// factorials; each half-integer argument `m+1/2` contributes
    /// `(2m)!/(4^m·m!)·√π`, so the net π exponent is half the half-integer
    /// argument surplus of the numerator.
    pub fn eval(&self) -> Result<ExactValue, ExactError> {
        let mut numer = self.numer.clone();
        let mut denom = self.denom.clone();
        // Cancel identical arguments first; keeps the factorials small.
        numer.sort_unstable();
        denom.sort_unstable();
        let (mut i, mut j) = (0, 0);
        let (mut keep_n, mut keep_d) = (Vec::new(), Vec::new());
        while i < numer.len() && j < denom.len() {
            match numer[i].cmp(&denom[j]) {
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => {
                    keep_n.push(numer[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    keep_d.push(denom[j]);
                    j += 1;
                }
            }
        }
        keep_n.extend_from_slice(&numer[i..]);
        keep_d.extend_from_slice(&denom[j..]);

        // Accumulate integer numerator/denominator separately and reduce
        // once at the end; per-factor rational reduction is quadratic in the
        // product size for long Gamma chains.
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut pi_half = 0i64;
        for arg in keep_n {
            let (n, d, p) = gamma_parts(arg)?;
            num *= n;
            den *= d;
            pi_half += p;
        }
        for arg in keep_d {
            let (n, d, p) = gamma_parts(arg)?;
            num *= d;
            den *= n;
            pi_half -= p;
        }
        Ok(ExactValue {
            coeff: BigRational::new(num, den),
            pi_half_power: pi_half,
            radicand: BigRational::one(),
        })
    }
}

/// `Γ(arg)` as `(num, den, pi_half)` meaning `(num/den) · π^(pi_half/2)`;
/// requires `arg > 0`. The parts are left unreduced.
fn gamma_parts(arg: HalfInt) -> Result<(BigInt, BigInt, i64), ExactError> {
    if arg.0 <= 0 {
        return Err(ExactError::NonPositiveArgument(arg.to_string()));
    }
    if arg.is_integer() {
        let n = arg.0 / 2;
        Ok((factorial_big(n as u64 - 1), BigInt::one(), 0))
    } else {
        // Γ(m + 1/2) = (2m)! / (4^m m!) · √π  for m ≥ 0
        let m = ((arg.0 - 1) / 2) as u64;
        let num = factorial_big(2 * m);
        let den = (BigInt::one() << (2 * m as usize)) * factorial_big(m);
        Ok((num, den, 1))
    }
}

/// `n!` as a big integer.
pub fn factorial_big(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Pochhammer symbol `(a)_m = a(a+1)···(a+m−1)` for rational `a` with `2a`
/// integral. Errors if the product crosses a zero or negative factor.
pub fn pochhammer(a: &BigRational, m: u64) -> Result<ExactValue, ExactError> {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..m {
        if !term.is_positive() {
            return Err(ExactError::NonPositiveArgument(term.to_string()));
        }
        acc *= &term;
        term += BigRational::one();
    }
    Ok(ExactValue::from_rational(acc))
}

/// Pochhammer with `a = h/2` given as a half-integer.
pub fn pochhammer_half(h: i64, m: u64) -> Result<ExactValue, ExactError> {
    pochhammer(&HalfInt(h).as_rational(), m)
}

/// Hyperfactorial `H(n) = 0!·1!···(n−1)!`.
pub fn hyperfactorial(n: u64) -> ExactValue {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for k in 1..n {
        fact *= BigInt::from(k);
        acc *= &fact;
    }
    ExactValue::from_rational(BigRational::from_integer(acc))
}

/// Even superfactorial `E(n) = 2!·4!···(2n)!` (the unsquared product; the
/// squared variant appears in some asymptotic statements).
pub fn even_superfactorial(n: u64) -> ExactValue {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for k in 1..=2 * n {
        fact *= BigInt::from(k);
        if k % 2 == 0 {
            acc *= &fact;
        }
    }
    ExactValue::from_rational(BigRational::from_integer(acc))
}

/// `2^k` as an exact value (k may be negative).
pub fn pow2(k: i64) -> ExactValue {
    let shifted = BigInt::one() << k.unsigned_abs() as usize;
    let r = if k >= 0 {
        BigRational::from_integer(shifted)
    } else {
        BigRational::new(BigInt::one(), shifted)
    };
    ExactValue::from_rational(r)
}
