//! Exact arithmetic in the finite field 𝔽_q for prime-power q ≤ 64, and the
//! rank enumeration of vectors over 𝔽_q.
//!
//! Elements are represented by their *rank* in `[q] = {0, …, q−1}`: rank 0 is
//! the field zero, and rank `i+1` is `βⁱ` for the field's primitive element
//! β. In rank space multiplication is index arithmetic modulo `q−1`; only
//! addition needs a table, which is built from the polynomial representation
//! at construction time.

use thiserror::Error;

/// A field element, identified by its rank in `[q]`.
pub type Elem = usize;

#[derive(Debug, Error, PartialEq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NonPrime(u32),
    #[error("field size p^e = {0} is unsupported (need e in 1..=4 and p^e <= 64)")]
    UnsupportedSize(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("q^m = {q}^{m} does not fit in a machine index")]
    Overflow { q: usize, m: usize },
}

/// An explicit model of 𝔽_q with tabulated arithmetic.
///
/// Construction is deterministic: the modulus is the monic irreducible
/// polynomial of degree `e` with the smallest base-`p` encoding
/// `Σ cᵢ pⁱ`, and β is the primitive element whose polynomial
/// representation has the smallest such encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    /// Prime characteristic.
    pub p: u32,
    /// Extension degree.
    pub e: u32,
    /// Field size `p^e`.
    pub q: usize,
    /// Monic modulus coefficients `c_0, …, c_e` (constant term first, `c_e = 1`).
    pub modulus: Vec<u32>,
    /// Base-`p` encoding of the primitive element β's polynomial representation.
    pub beta_encoding: u32,
    /// `log_table[a] = i` for nonzero rank `a = i+1` with `βⁱ` the element.
    pub log_table: Vec<usize>,
    /// `antilog_table[i] = i+1`, the rank of `βⁱ`.
    pub antilog_table: Vec<usize>,
    add_table: Vec<Elem>,
    neg_table: Vec<Elem>,
    /// `poly_of_rank[a]` is the base-`p` encoding of rank `a`'s polynomial.
    poly_of_rank: Vec<u32>,
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense coefficient vector (constant term first) over 𝔽_p, trailing zeros trimmed.
type Poly = Vec<u32>;

fn poly_trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn poly_add(f: &[u32], g: &[u32], p: u32) -> Poly {
    let n = f.len().max(g.len());
    let mut out = vec![0; n];
    for i in 0..n {
        let a = f.get(i).copied().unwrap_or(0);
        let b = g.get(i).copied().unwrap_or(0);
        out[i] = (a + b) % p;
    }
    poly_trim(out)
}

fn poly_mul(f: &[u32], g: &[u32], p: u32) -> Poly {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    poly_trim(out)
}

/// Remainder of `f` modulo the monic polynomial `m`.
fn poly_rem(f: &[u32], m: &[u32], p: u32) -> Poly {
    let mut r: Poly = poly_trim(f.to_vec());
    let deg_m = m.len() - 1;
    while r.len() > deg_m {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - deg_m;
        for (i, &c) in m.iter().enumerate() {
            let sub = (lead * c) % p;
            let idx = i + shift;
            r[idx] = (r[idx] + p - sub) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_encode(f: &[u32], p: u32) -> u32 {
    f.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_decode(mut enc: u32, p: u32) -> Poly {
    let mut f = vec![];
    while enc > 0 {
        f.push(enc % p);
        enc /= p;
    }
    f
}

/// True iff monic `m` has no monic factor of degree in `1..=deg(m)/2`.
fn poly_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let lo = p.pow(d as u32);
        let hi = p.pow(d as u32 + 1);
        for enc in lo..hi {
            let g = poly_decode(enc, p);
            if *g.last().unwrap() == 1 && poly_rem(m, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Constructs 𝔽_{p^e} with the deterministic modulus and primitive element.
pub fn field_make(p: u32, e: u32) -> Result<FieldSpec, GfError> {
    if !is_prime(p) {
        return Err(GfError::NonPrime(p));
    }
    let q64 = (p as u64).pow(e);
    if e == 0 || e > 4 || q64 > 64 {
        return Err(GfError::UnsupportedSize(q64));
    }
    let q = q64 as usize;

    let modulus = {
        let mut found = None;
        for low_enc in 0..q as u32 {
            let mut m = poly_decode(low_enc, p);
            m.resize(e as usize + 1, 0);
            m[e as usize] = 1;
            if poly_irreducible(&m, p) {
                found = Some(m);
                break;
            }
        }
        found.expect("a monic irreducible of each degree exists over every prime field")
    };

    let order = |enc: u32| -> usize {
        let f = poly_decode(enc, p);
        let mut acc = f.clone();
        let mut k = 1;
        while poly_encode(&acc, p) != 1 {
            acc = poly_rem(&poly_mul(&acc, &f, p), &modulus, p);
            k += 1;
        }
        k
    };
    let beta_encoding = (1..q as u32)
        .find(|&enc| order(enc) == q - 1)
        .expect("the multiplicative group of a finite field is cyclic");

    let mut poly_of_rank = vec![0u32; q];
    let beta = poly_decode(beta_encoding, p);
    let mut acc: Poly = vec![1];
    for i in 0..q - 1 {
        poly_of_rank[i + 1] = poly_encode(&acc, p);
        if i + 1 < q - 1 {
            acc = poly_rem(&poly_mul(&acc, &beta, p), &modulus, p);
        }
    }
    let mut rank_of_poly = vec![0usize; q];
    for (rank, &enc) in poly_of_rank.iter().enumerate() {
        rank_of_poly[enc as usize] = rank;
    }

    let mut add_table = vec![0; q * q];
    for a in 0..q {
        for b in 0..q {
            let s = poly_add(
                &poly_decode(poly_of_rank[a], p),
                &poly_decode(poly_of_rank[b], p),
                p,
            );
            add_table[a * q + b] = rank_of_poly[poly_encode(&s, p) as usize];
        }
    }
    let mut neg_table = vec![0; q];
    for a in 0..q {
        let f = poly_decode(poly_of_rank[a], p);
        let nf: Poly = poly_trim(f.iter().map(|&c| (p - c) % p).collect());
        neg_table[a] = rank_of_poly[poly_encode(&nf, p) as usize];
    }

    Ok(FieldSpec {
        p,
        e,
        q,
        modulus,
        beta_encoding,
        log_table: (0..q.saturating_sub(1)).collect(),
        antilog_table: (1..q).collect(),
        add_table,
        neg_table,
        poly_of_rank,
    })
}

impl FieldSpec {
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add_table[a * self.q + b]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg_table[a]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            0
        } else {
            (a - 1 + b - 1) % (self.q - 1) + 1
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, GfError> {
        if a == 0 {
            Err(GfError::ZeroInverse)
        } else {
            Ok((self.q - 1 - (a - 1)) % (self.q - 1) + 1)
        }
    }

    /// `a` raised to `k`, with the evaluation convention `0⁰ = 1`.
    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        if k == 0 {
            1
        } else if a == 0 {
            0
        } else {
            ((a - 1) * k) % (self.q - 1) + 1
        }
    }

    /// The primitive element β, as a rank.
    pub fn beta(&self) -> Elem {
        if self.q == 2 {
            1
        } else {
            2
        }
    }

    /// Base-`p` polynomial encoding of a rank (useful for display and tests).
    pub fn poly_encoding(&self, a: Elem) -> u32 {
        self.poly_of_rank[a]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.q
    }
}

/// The bijection between `𝔽_q^m` (as rank vectors, coordinate 0 least
/// significant) and `[q^m]`, given by `n = Σ vᵢ qⁱ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorEnumeration {
    pub q: usize,
    pub m: usize,
    /// `q^m`.
    pub size: usize,
}

pub fn enumerate(q: usize, m: usize) -> Result<VectorEnumeration, GfError> {
    let size = (q as u128).checked_pow(m as u32).filter(|&s| s <= usize::MAX as u128);
    match size {
        Some(size) => Ok(VectorEnumeration { q, m, size: size as usize }),
        None => Err(GfError::Overflow { q, m }),
    }
}

impl VectorEnumeration {
    pub fn vec_to_index(&self, v: &[Elem]) -> usize {
        debug_assert_eq!(v.len(), self.m);
        v.iter().rev().fold(0, |acc, &d| acc * self.q + d)
    }

    pub fn index_to_vec(&self, mut n: usize) -> Vec<Elem> {
        debug_assert!(n < self.size);
        let mut v = vec![0; self.m];
        for d in v.iter_mut() {
            *d = n % self.q;
            n /= self.q;
        }
        v
    }
}

/// All `(p, e)` pairs accepted by [`field_make`], in increasing `q` order.
pub fn supported_fields() -> Vec<(u32, u32)> {
    let mut out = vec![];
    for p in 2..=61 {
        if !is_prime(p) {
            continue;
        }
        for e in 1..=4u32 {
            if (p as u64).pow(e) <= 64 {
                out.push((p, e));
            }
        }
    }
    out.sort_by_key(|&(p, e)| (p as u64).pow(e));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(field_make(4, 1).unwrap_err(), GfError::NonPrime(4));
        assert_eq!(field_make(1, 1).unwrap_err(), GfError::NonPrime(1));
        assert_eq!(field_make(2, 5).unwrap_err(), GfError::UnsupportedSize(32));
        assert_eq!(field_make(67, 1).unwrap_err(), GfError::UnsupportedSize(67));
        assert_eq!(field_make(3, 4).unwrap_err(), GfError::UnsupportedSize(81));
    }

    #[test]
    fn f2_is_the_unique_two_element_field() {
        let f = field_make(2, 1).unwrap();
        assert_eq!(f.q, 2);
        assert_eq!(f.beta_encoding, 1);
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn f3_picks_two_as_primitive() {
        let f = field_make(3, 1).unwrap();
        assert_eq!(f.beta_encoding, 2);
        assert_eq!(f.mul(f.beta(), f.beta()), 1);
        assert_eq!(f.add(2, 2), 1);
    }

    #[test]
    fn f4_uses_x2_plus_x_plus_1() {
        let f = field_make(2, 2).unwrap();
        assert_eq!(f.modulus, vec![1, 1, 1]);
        assert_eq!(f.beta_encoding, 2);
        let beta = f.beta();
        let beta_sq = f.mul(beta, beta);
        assert_eq!(beta_sq, f.add(beta, 1));
        assert_eq!((0..3).map(|i| f.pow(beta, i)).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn f8_uses_x3_plus_x_plus_1() {
        let f = field_make(2, 3).unwrap();
        assert_eq!(f.modulus, vec![1, 1, 0, 1]);
    }

    #[test]
    fn field_axioms_exhaustive_small_q() {
        for (p, e) in supported_fields() {
            let f = field_make(p, e).unwrap();
            if f.q > 16 {
                continue;
            }
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_identity_all_supported_fields() {
        for (p, e) in supported_fields() {
            let f = field_make(p, e).unwrap();
            for a in f.elements() {
                let mut acc = 1;
                for _ in 0..f.q {
                    acc = f.mul(acc, a);
                }
                assert_eq!(acc, a, "a^q != a in GF({})", f.q);
            }
        }
    }

    #[test]
    fn zero_power_conventions() {
        let f = field_make(3, 1).unwrap();
        assert_eq!(f.pow(0, 0), 1);
        assert_eq!(f.pow(0, 2), 0);
        assert_eq!(f.pow(2, 0), 1);
    }

    #[test]
    fn enumeration_examples() {
        let en = enumerate(2, 2).unwrap();
        assert_eq!(en.vec_to_index(&[0, 0]), 0);
        assert_eq!(en.vec_to_index(&[1, 0]), 1);
        assert_eq!(en.vec_to_index(&[0, 1]), 2);
        assert_eq!(en.vec_to_index(&[1, 1]), 3);
        assert_eq!(en.index_to_vec(0), vec![0, 0]);
    }

    #[test]
    fn enumeration_round_trip() {
        for (q, m) in [(2, 5), (3, 3), (4, 2), (5, 2), (8, 2)] {
            let en = enumerate(q, m).unwrap();
            for n in 0..en.size {
                assert_eq!(en.vec_to_index(&en.index_to_vec(n)), n);
            }
        }
    }

    #[test]
    fn enumeration_overflow() {
        assert!(matches!(enumerate(64, 11), Err(GfError::Overflow { .. })));
    }

    #[test]
    fn log_antilog_are_inverse_rank_maps() {
        let f = field_make(5, 1).unwrap();
        for i in 0..f.q - 1 {
            assert_eq!(f.log_table[f.antilog_table[i] - 1], i);
        }
    }
}
