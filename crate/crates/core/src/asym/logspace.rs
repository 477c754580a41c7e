//! Log-space evaluation of the exact products at sizes where the rationals
//! would be astronomically large: compensated (Kahan) sums over per-factor
//! logs of Gamma values at integer and half-integer arguments.

use std::sync::Mutex;
use std::sync::OnceLock;

/// Kahan-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

struct GammaTables {
    /// `lnΓ(i)` for `i = 1..len` (index 0 unused).
    ln_int: Vec<f64>,
    /// `lnΓ(i+1/2)` for `i = 0..len`.
    ln_half: Vec<f64>,
}

static TABLES: OnceLock<Mutex<GammaTables>> = OnceLock::new();

fn tables() -> &'static Mutex<GammaTables> {
    TABLES.get_or_init(|| {
        Mutex::new(GammaTables {
            ln_int: vec![f64::NAN, 0.0],
            ln_half: vec![0.5 * std::f64::consts::PI.ln()],
        })
    })
}

fn ensure(limit: usize) {
    let mut t = tables().lock().expect("gamma table lock");
    // lnΓ(i+1) = lnΓ(i) + ln i, with Kahan compensation along the recurrence
    let mut k = Kahan::new();
    if t.ln_int.len() <= limit {
        let start = t.ln_int.len();
        k.add(t.ln_int[start - 1]);
        for i in start..=limit {
            k.add(((i - 1) as f64).ln());
            t.ln_int.push(k.value());
        }
    }
    if t.ln_half.len() <= limit {
        let start = t.ln_half.len();
        let mut k = Kahan::new();
        k.add(t.ln_half[start - 1]);
        for i in start..=limit {
            k.add((i as f64 - 0.5).ln());
            t.ln_half.push(k.value());
        }
    }
}

/// `lnΓ(n)` for integer `n ≥ 1`.
pub fn ln_gamma_int(n: u64) -> f64 {
    ensure(n as usize);
    tables().lock().expect("gamma table lock").ln_int[n as usize]
}

/// `lnΓ(n + 1/2)` for integer `n ≥ 0`.
pub fn ln_gamma_half(n: u64) -> f64 {
    ensure(n as usize + 1);
    tables().lock().expect("gamma table lock").ln_half[n as usize]
}

/// `lnΓ(h/2)` for positive half-units `h` (`h = 2m` → `lnΓ(m)`).
pub fn ln_gamma_half_units(h: i64) -> f64 {
    assert!(h > 0, "Gamma argument must be positive");
    if h % 2 == 0 {
        ln_gamma_int((h / 2) as u64)
    } else {
        ln_gamma_half(((h - 1) / 2) as u64)
    }
}

/// `ln P_m` for the slit product `P_m = ∏_{i=1}^m Γ²(i)/(Γ(i−½)Γ(i+½))`.
pub fn ln_p_slit(m: u64) -> f64 {
    let mut k = Kahan::new();
    for i in 1..=m {
        k.add(2.0 * ln_gamma_int(i));
        k.add(-ln_gamma_half(i - 1));
        k.add(-ln_gamma_half(i));
    }
    k.value()
}

/// `ln P_a(s)` for `a` in half-units.
pub fn ln_p_product(a_doubled: i64, s: u64) -> f64 {
    let mut k = Kahan::new();
    for i in 1..=s as i64 {
        let arg = 2 * i + a_doubled;
        k.add(2.0 * ln_gamma_half_units(arg));
        k.add(-ln_gamma_half_units(arg - 1));
        k.add(-ln_gamma_half_units(arg + 1));
    }
    k.value()
}

/// `ln Q(s,n)` for `n` in half-units.
pub fn ln_q_product(s: u64, n_doubled: i64) -> f64 {
    let mut k = Kahan::new();
    for i in 1..=s as i64 {
        k.add(ln_gamma_int(i as u64));
        k.add(ln_gamma_half_units(n_doubled - 2 * i));
        k.add(-ln_gamma_half_units(2 * i + 1));
        k.add(-ln_gamma_half_units(n_doubled - 2 * i - 1));
    }
    k.value()
}

/// `ln H(n)` for the hyperfactorial.
pub fn ln_hyperfactorial(n: u64) -> f64 {
    let mut k = Kahan::new();
    for i in 1..n {
        k.add((n - i) as f64 * (i as f64).ln());
    }
    k.value()
}

/// `ln E(n)` for the even superfactorial `2!4!⋯(2n)!`.
pub fn ln_even_superfactorial(n: u64) -> f64 {
    let mut k = Kahan::new();
    for i in 1..=n {
        k.add(ln_gamma_int(2 * i + 1));
    }
    k.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{even_superfactorial, hyperfactorial};
    use crate::forms::monomers::{p_product, q_product};
    use crate::forms::slits::p_slit;

    #[test]
    fn gamma_tables_match_known_values() {
        assert_eq!(ln_gamma_int(1), 0.0);
        assert_eq!(ln_gamma_int(2), 0.0_f64.max(1f64.ln()));
        assert!((ln_gamma_int(11) - 3628800f64.ln()).abs() < 1e-10);
        // Γ(1/2) = √π, Γ(7/2) = 15√π/8
        assert!((ln_gamma_half(0) - std::f64::consts::PI.sqrt().ln()).abs() < 1e-14);
        let g72 = (15.0 * std::f64::consts::PI.sqrt() / 8.0).ln();
        assert!((ln_gamma_half(3) - g72).abs() < 1e-12);
    }

    #[test]
    fn log_products_match_exact_small() {
        for m in [1u64, 3, 7] {
            let exact = p_slit(m).unwrap().log().unwrap();
            assert!((ln_p_slit(m) - exact).abs() < 1e-11, "m={m}");
        }
        let exact = p_product(3, 5).unwrap().log().unwrap();
        assert!((ln_p_product(3, 5) - exact).abs() < 1e-11);
        let exact = q_product(3, 21).unwrap().log().unwrap();
        assert!((ln_q_product(3, 21) - exact).abs() < 1e-11);
        let exact = hyperfactorial(40).log().unwrap();
        assert!(((ln_hyperfactorial(40) - exact) / exact).abs() < 1e-12);
        let exact = even_superfactorial(20).log().unwrap();
        assert!(((ln_even_superfactorial(20) - exact) / exact).abs() < 1e-12);
    }
}
