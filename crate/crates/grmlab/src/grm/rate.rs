//! Rates of generalized Reed-Muller codes: exact counting by convolution,
//! the Gaussian limit, and the rate-difference bound.

use super::GrmError;
use crate::rat::Rat;
use num::bigint::BigInt;
use num::{One, Zero};
use statrs::function::erf::erf;

/// Standard normal cdf Φ.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * (1.0 + erf(x / std::f64::consts::SQRT_2))
}

/// Number of exponent vectors d ∈ [q]^m with Σ dᵢ ≤ r, computed by
/// convolving the single-digit degree distribution m times. No enumeration
/// of the q^m vectors, so m = 30 is cheap at any supported q.
pub fn monomial_count(q: usize, r: usize, m: usize) -> BigInt {
    let cap = r.min(m * (q - 1));
    let mut ways = vec![BigInt::zero(); cap + 1];
    ways[0] = BigInt::one();
    for _ in 0..m {
        let mut next = vec![BigInt::zero(); cap + 1];
        for (s, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for d in 0..q.min(cap - s + 1) {
                next[s + d] += w;
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// Exact rate plus its Gaussian approximation and the approximation's
/// Berry-Esseen error bound.
#[derive(Debug, Clone)]
pub struct RateReport {
    /// |{d ∈ [q]^m : Σdᵢ ≤ r}| / q^m.
    pub exact: Rat,
    /// Φ((r − mμ)/(σ√m)) with μ = (q−1)/2, σ² = (q²−1)/12.
    pub gaussian: f64,
    /// min(ρ/(2σ³√m), 1/√m), with ρ the third absolute central moment of a
    /// uniform digit: q(q²−2)/32 for even q, (q²−1)²/(32q) for odd q.
    pub be_bound: f64,
}

/// Rate of RM_q(r, m) with its Gaussian approximation.
pub fn rate(q: usize, r: usize, m: usize) -> RateReport {
    assert!(q >= 2 && m >= 1, "rate needs q >= 2 and m >= 1");
    let count = monomial_count(q, r, m);
    let total = BigInt::from(q).pow(m as u32);
    let exact = Rat::new(count, total);

    let qf = q as f64;
    let mf = m as f64;
    let mu = (qf - 1.0) / 2.0;
    let sigma = ((qf * qf - 1.0) / 12.0).sqrt();
    let alpha = (r as f64 - mf * mu) / (sigma * mf.sqrt());
    let gaussian = normal_cdf(alpha);

    let rho = if q % 2 == 0 {
        qf * (qf * qf - 2.0) / 32.0
    } else {
        (qf * qf - 1.0) * (qf * qf - 1.0) / (32.0 * qf)
    };
    let be = rho / (2.0 * sigma.powi(3) * mf.sqrt());
    RateReport { exact, gaussian, be_bound: be.min(1.0 / mf.sqrt()) }
}

/// The rate-difference bound 4k/√(m−k) on R_q(r, m−k) − R_q(r, m).
#[derive(Debug, Clone, Copy)]
pub struct RateDiffReport {
    pub bound: f64,
    /// Whether the bound's hypotheses hold: 0 ≤ r ≤ m(q−1) and 0 ≤ k < m−r.
    pub hypothesis_holds: bool,
}

pub fn rate_diff_bound(
    q: usize,
    r: usize,
    m: usize,
    k: usize,
) -> Result<RateDiffReport, GrmError> {
    if k >= m {
        return Err(GrmError::KTooLarge { k, m });
    }
    let bound = 4.0 * k as f64 / ((m - k) as f64).sqrt();
    let hypothesis_holds = r <= m * (q - 1) && r + k < m;
    Ok(RateDiffReport { bound, hypothesis_holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int, rat_to_f64};

    fn brute_count(q: usize, r: usize, m: usize) -> u64 {
        let total = (q as u64).pow(m as u32);
        (0..total)
            .filter(|&n| {
                let mut n = n;
                let mut deg = 0;
                for _ in 0..m {
                    deg += (n % q as u64) as usize;
                    n /= q as u64;
                }
                deg <= r
            })
            .count() as u64
    }

    #[test]
    fn exact_rate_examples() {
        assert_eq!(rate(2, 1, 2).exact, rat(3, 4));
        assert_eq!(rate(3, 2, 2).exact, rat(2, 3));
        assert_eq!(rate(4, 9, 3).exact, rat_int(1));
        assert_eq!(rate(2, 0, 5).exact, rat(1, 32));
    }

    #[test]
    fn count_matches_enumeration() {
        for q in 2..=5 {
            for m in 1..=4 {
                for r in 0..=m * (q - 1) {
                    assert_eq!(
                        monomial_count(q, r, m),
                        BigInt::from(brute_count(q, r, m)),
                        "q={q} r={r} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn gaussian_approximation_within_be_bound() {
        for q in [2, 3, 4, 5] {
            for m in [4, 9, 16, 25, 30] {
                for r in 0..=m * (q - 1) {
                    let rep = rate(q, r, m);
                    let err = (rat_to_f64(&rep.exact) - rep.gaussian).abs();
                    assert!(
                        err <= rep.be_bound + 1e-12,
                        "q={q} r={r} m={m}: err {err} > {}",
                        rep.be_bound
                    );
                    assert!(rep.be_bound <= 1.0 / (m as f64).sqrt());
                }
            }
        }
    }

    #[test]
    fn midpoint_rate_is_half_by_symmetry() {
        let rep = rate(3, 4, 4);
        assert!(rep.exact > rat(1, 2));
        let low = rate(3, 3, 4);
        let sum = &low.exact + &rep.exact;
        assert_eq!(sum, rat_int(1));
    }

    #[test]
    fn diff_bound_values() {
        let rep = rate_diff_bound(2, 3, 9, 2).unwrap();
        assert!((rep.bound - 8.0 / 7f64.sqrt()).abs() < 1e-12);
        assert!(rep.hypothesis_holds);
        let diff =
            rat_to_f64(&rate(2, 3, 7).exact) - rat_to_f64(&rate(2, 3, 9).exact);
        assert!(diff <= rep.bound);

        let zero = rate_diff_bound(5, 2, 6, 0).unwrap();
        assert_eq!(zero.bound, 0.0);
        assert!(matches!(rate_diff_bound(2, 1, 4, 4), Err(GrmError::KTooLarge { .. })));
        assert!(!rate_diff_bound(2, 3, 4, 1).unwrap().hypothesis_holds);
    }
}
