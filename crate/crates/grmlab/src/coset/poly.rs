//! Exact polynomials on [0,1] in the basis {t^a (1−t)^(D−a) : a = 0..D},
//! the natural form for quantities summed over erasure patterns. Integrals
//! over [0,1] reduce to Beta integrals a!·b!/(a+b+1)!.

use crate::rat::{beta_integral, factorial, rat_int, Rat};
use num::{One, Zero};

fn binomial(n: usize, k: usize) -> Rat {
    let num = factorial(n as u64);
    let den = factorial(k as u64) * factorial((n - k) as u64);
    Rat::new(num, den)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErasurePolynomial {
    pub degree: usize,
    /// `coeffs[a]` multiplies t^a (1−t)^(degree−a).
    pub coeffs: Vec<Rat>,
}

impl ErasurePolynomial {
    pub fn zero(degree: usize) -> Self {
        ErasurePolynomial { degree, coeffs: vec![Rat::zero(); degree + 1] }
    }

    /// The constant 1, written out in the degree-D basis.
    pub fn one(degree: usize) -> Self {
        let coeffs = (0..=degree).map(|a| binomial(degree, a)).collect();
        ErasurePolynomial { degree, coeffs }
    }

    pub fn evaluate(&self, t: &Rat) -> Rat {
        let s = Rat::one() - t;
        let mut t_pow = Rat::one();
        let mut powers_t = Vec::with_capacity(self.degree + 1);
        for _ in 0..=self.degree {
            powers_t.push(t_pow.clone());
            t_pow *= t;
        }
        let mut acc = Rat::zero();
        let mut s_pow = Rat::one();
        for a in (0..=self.degree).rev() {
            acc += &self.coeffs[a] * &powers_t[a] * &s_pow;
            s_pow *= &s;
        }
        acc
    }

    /// ∫₀¹ of the polynomial, exactly.
    pub fn integral(&self) -> Rat {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(a, c)| c * beta_integral(a as u64, (self.degree - a) as u64))
            .sum()
    }

    /// The same polynomial written in the degree-(D+k) basis, by multiplying
    /// with (t + (1−t))^k.
    pub fn elevate(&self, k: usize) -> Self {
        let mut out = ErasurePolynomial::zero(self.degree + k);
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..=k {
                out.coeffs[a + j] += c * binomial(k, j);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degrees must match");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        ErasurePolynomial { degree: self.degree, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degrees must match");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        ErasurePolynomial { degree: self.degree, coeffs }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * s).collect();
        ErasurePolynomial { degree: self.degree, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = ErasurePolynomial::zero(self.degree + other.degree);
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (b, d) in other.coeffs.iter().enumerate() {
                out.coeffs[a + b] += c * d;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Two polynomials are the same function iff they agree after elevation
    /// to a common degree.
    pub fn same_function(&self, other: &Self) -> bool {
        let d = self.degree.max(other.degree);
        self.elevate(d - self.degree) == other.elevate(d - other.degree)
    }

    /// Coefficients as "num/den" strings, index a = t-power.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(crate::rat::format_rat).collect()
    }
}

pub fn rat_usize(n: usize) -> Rat {
    rat_int(n as i64)
}
