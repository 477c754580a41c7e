//! Monomer-only Aztec rectangles: the nested-product count ratio for holes
//! at `{2s_i+i}` and its equivalent P/Q-product form, evaluated exactly
//! along both routes.

use crate::exact::{pochhammer_half, ExactError, ExactValue, GammaProduct, HalfInt};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonomerError {
    #[error("positions must satisfy 0 ≤ s₁ < ⋯ < s_k ≤ n, got {0:?} with n={1}")]
    BadPositions(Vec<u64>, u64),
    #[error("Q(s,·) needs all Gamma arguments positive (s={0}, 2n={1})")]
    QDomain(u64, i64),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn check_positions(n: u64, s: &[u64]) -> Result<(), MonomerError> {
    let ok = s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&v| v <= n);
    if ok {
        Ok(())
    } else {
        Err(MonomerError::BadPositions(s.to_vec(), n))
    }
}

/// `P_a(s) = ∏_{i=1}^s Γ²(i+a)/(Γ(i+a−½)Γ(i+a+½))` with `a` a positive
/// integer or half-integer given as `2a`.
pub fn p_product(a_doubled: i64, s: u64) -> Result<ExactValue, MonomerError> {
    let mut g = GammaProduct::new();
    for i in 1..=s as i64 {
        let arg = HalfInt(2 * i + a_doubled);
        g = g
            .times(arg)
            .times(arg)
            .over(HalfInt(arg.doubled() - 1))
            .over(HalfInt(arg.doubled() + 1));
    }
    Ok(g.eval()?)
}

/// `Q(s,n) = ∏_{i=1}^s Γ(i)Γ(n−i)/(Γ(i+½)Γ(n−i−½))` with `n` a positive
/// integer or half-integer given as `2n`.
pub fn q_product(s: u64, n_doubled: i64) -> Result<ExactValue, MonomerError> {
    // smallest argument: n − s − ½ must be positive
    if n_doubled - 2 * s as i64 - 1 <= 0 {
        return Err(MonomerError::QDomain(s, n_doubled));
    }
    let mut g = GammaProduct::new();
    for i in 1..=s as i64 {
        g = g
            .times_int(i)
            .times(HalfInt(n_doubled - 2 * i))
            .over_half(2 * i + 1)
            .over(HalfInt(n_doubled - 2 * i - 1));
    }
    Ok(g.eval()?)
}

/// `M(AR_{2n,2n+k}({2s₁+1,…,2s_k+k},∅)) / 2^{n(2n+1)}` for
/// `0 ≤ s₁ < ⋯ < s_k ≤ n`, evaluated along both printed routes, which must
/// agree exactly:
///
/// * the nested Pochhammer product over `j = 1..k`, `i = 1..s_j` (with the
///   sentinel `s_{k+1} = n`), each bracket squared;
/// * the squared product of `Q(s_j, n+(k−j+3)/2)` and paired
///   `P_{(m−j)/2}(s_m)/P_{(m−j)/2}(s_m−s_j)` factors.
pub fn monomer_even_count_ratio(n: u64, s_list: &[u64]) -> Result<ExactValue, MonomerError> {
    check_positions(n, s_list)?;
    let a = eval_nested_pochhammer(n, s_list)?;
    let b = eval_pq_form(n, s_list)?;
    debug_assert_eq!(a, b, "the two evaluation routes disagree");
    Ok(a)
}

/// Route 1: the nested Pochhammer product.
pub fn eval_nested_pochhammer(n: u64, s_list: &[u64]) -> Result<ExactValue, MonomerError> {
    check_positions(n, s_list)?;
    let k = s_list.len();
    let mut total = ExactValue::one();
    for j in 0..k {
        // sentinel s_{k+1} = n
        let next = if j + 1 < k { s_list[j + 1] } else { n };
        for i in 1..=s_list[j] {
            let i = i as i64;
            // (1)_{i−1}/(3/2)_{i−1} · (3/2)_{s_{j+1}−i}/(1)_{s_{j+1}−i}
            let mut bracket = pochhammer_half(2, (i - 1) as u64)?
                .div(&pochhammer_half(3, (i - 1) as u64)?)
                .mul(
                    &pochhammer_half(3, (next as i64 - i) as u64)?
                        .div(&pochhammer_half(2, (next as i64 - i) as u64)?),
                );
            // chain over the later monomers m = j+2..=k (1-based), each factor
            // (s_m−i+(m−j+3)/2)_{len} / (s_m−i+(m−j+2)/2)_{len}
            for m in (j + 1)..k {
                let gap = (m - j) as i64; // = m₁ − j₁ for the 1-based indices
                let len = if m + 1 < k { s_list[m + 1] - s_list[m] } else { n - s_list[m] };
                let base = 2 * (s_list[m] as i64 - i); // doubled s_m − i
                bracket = bracket.mul(
                    &pochhammer_half(base + gap + 3, len)?
                        .div(&pochhammer_half(base + gap + 2, len)?),
                );
            }
            total = total.mul(&bracket).mul(&bracket);
        }
    }
    Ok(total)
}

/// Route 2: the P/Q-product form.
pub fn eval_pq_form(n: u64, s_list: &[u64]) -> Result<ExactValue, MonomerError> {
    check_positions(n, s_list)?;
    let k = s_list.len();
    let mut inner = ExactValue::one();
    for j in 0..k {
        // Q(s_j, n + (k−j+3)/2) with j 1-based ⇒ here (k−j+2)/…: careful with
        // the 0-based offset: 1-based j₁ = j+1, shift = (k − j₁ + 3)/2.
        // doubled shift for Q's second argument: (k−j₁+3) half-units
        let shift_doubled = k as i64 - (j as i64 + 1) + 3;
        let n_doubled = 2 * n as i64 + shift_doubled;
        inner = inner.mul(&q_product(s_list[j], n_doubled)?);
        for m in (j + 1)..k {
            let a_doubled = (m - j) as i64; // a = (m₁−j₁)/2 in half units
            inner = inner
                .mul(&p_product(a_doubled, s_list[m])?)
                .div(&p_product(a_doubled, s_list[m] - s_list[j])?);
        }
    }
    Ok(inner.mul(&inner))
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
    fn p_product_examples() {
        // P_{1/2}(1) = Γ²(3/2)/(Γ(1)Γ(2)) = π/4
        assert_eq!(
            p_product(1, 1).unwrap(),
            ExactValue::pi_half_power(2).scale(&rat(1, 4))
        );
        // P_1(1) = Γ²(2)/(Γ(3/2)Γ(5/2)) = 8/(3π)
        assert_eq!(
            p_product(2, 1).unwrap(),
            ExactValue::pi_half_power(-2).scale(&rat(8, 3))
        );
        // empty product
        assert_eq!(p_product(5, 0).unwrap(), ExactValue::one());
    }

    #[test]
    fn q_product_examples() {
        // Q(1, 7/2) = Γ(1)Γ(5/2)/(Γ(3/2)Γ(1)) = 3/2
        assert_eq!(q_product(1, 7).unwrap(), ExactValue::from_ratio(3, 2));
        // Q(0, ·) = 1
        assert_eq!(q_product(0, 9).unwrap(), ExactValue::one());
    }

    #[test]
    fn q_product_domain() {
        assert!(q_product(3, 7).is_err());
    }

    #[test]
    fn single_monomer_examples() {
        // k=1, n=1, s=1 -> 1 ; k=1, n=2, s=1 -> 9/4
        assert_eq!(monomer_even_count_ratio(1, &[1]).unwrap(), ExactValue::one());
        assert_eq!(monomer_even_count_ratio(2, &[1]).unwrap(), ExactValue::from_ratio(9, 4));
        // k=0
        assert_eq!(monomer_even_count_ratio(3, &[]).unwrap(), ExactValue::one());
        // s=0 is the base position
        assert_eq!(monomer_even_count_ratio(4, &[0]).unwrap(), ExactValue::one());
    }

    #[test]
    fn both_routes_agree_small_sweep() {
        for n in 1..=5u64 {
            for k in 1..=3usize {
                // all strictly increasing k-subsets of 0..=n
                let mut stack = vec![(Vec::new(), 0u64)];
                while let Some((prefix, start)) = stack.pop() {
                    if prefix.len() == k {
                        let a = eval_nested_pochhammer(n, &prefix).unwrap();
                        let b = eval_pq_form(n, &prefix).unwrap();
                        assert_eq!(a, b, "n={n} s={prefix:?}");
                        continue;
                    }
                    for v in start..=n {
                        let mut p = prefix.clone();
                        p.push(v);
                        stack.push((p, v + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn bad_positions_rejected() {
        assert!(monomer_even_count_ratio(3, &[2, 2]).is_err());
        assert!(monomer_even_count_ratio(3, &[4]).is_err());
    }
}
