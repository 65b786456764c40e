//! Generalized Reed-Muller codes RM_q(r, m): monomial sets, generator
//! matrices by polynomial evaluation, rates, puncturing, affine
//! automorphisms, alphabet relabelings, and coset structure.

pub mod rate;

pub use rate::{monomial_count, normal_cdf, rate, rate_diff_bound, RateDiffReport, RateReport};

use crate::gf::{enumerate, field_make, Elem, FieldSpec, GfError};
use crate::linalg::{gf_rank, gf_rref};
use crate::perm::{symmetric_group, PermGroup, Permutation};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

/// Largest code length q^m for materialized evaluation.
pub const MAX_EVAL: usize = 1 << 20;
/// Largest codeword count q^k for exhaustive enumeration.
pub const MAX_ENUM: u128 = 1 << 20;
/// Caps for the relabeling-group search.
pub const MAX_RELABEL_Q: usize = 5;
pub const MAX_RELABEL_WORDS: u128 = 1 << 16;

#[derive(Debug, Error, PartialEq)]
pub enum GrmError {
    #[error("degree r = {r} is outside 0..={max}")]
    DegreeOutOfRange { r: usize, max: usize },
    #[error("{0}")]
    TooLarge(String),
    #[error("k = {k} must be smaller than m = {m}")]
    KTooLarge { k: usize, m: usize },
    #[error("index set is empty")]
    EmptyIndexSet,
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("matrix is singular over the field")]
    SingularMatrix,
    #[error("position 0 is identically zero across the code")]
    DegeneratePosition,
    #[error("bad generator matrix: {0}")]
    BadMatrix(String),
    #[error("bad code file: {0}")]
    BadFile(String),
    #[error(transparent)]
    Gf(#[from] GfError),
}

/// The exponent vectors d ∈ [q]^m with total degree Σdᵢ ≤ r, listed in the
/// rank-enumeration order of d. Its size is the dimension of RM_q(r, m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    pub q: usize,
    pub r: usize,
    pub m: usize,
    pub exponents: Vec<Vec<usize>>,
}

pub fn monomial_set(q: usize, r: usize, m: usize) -> Result<MonomialSet, GrmError> {
    assert!(q >= 2 && m >= 1, "need q >= 2 and m >= 1");
    let max = m * (q - 1);
    if r > max {
        return Err(GrmError::DegreeOutOfRange { r, max });
    }
    let en = enumerate(q, m)?;
    if en.size > MAX_EVAL {
        return Err(GrmError::TooLarge(format!("q^m = {} exceeds {MAX_EVAL}", en.size)));
    }
    let exponents = (0..en.size)
        .map(|n| en.index_to_vec(n))
        .filter(|d| d.iter().sum::<usize>() <= r)
        .collect();
    Ok(MonomialSet { q, r, m, exponents })
}

/// RM_q(r, m) with its monomial-evaluation generator matrix. Row i is the
/// evaluation of the i-th monomial at all q^m points in rank order, so the
/// generator is deterministic given the field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrmCode {
    pub spec: FieldSpec,
    pub r: usize,
    pub m: usize,
    /// Code length N = q^m.
    pub n: usize,
    pub monomials: MonomialSet,
    pub generator: Vec<Vec<Elem>>,
}

/// Budget (in field operations, roughly k²·N) under which the generator-rank
/// check runs at construction.
const RANK_CHECK_BUDGET: u128 = 1 << 27;

pub fn grm_make(spec: &FieldSpec, r: usize, m: usize) -> Result<GrmCode, GrmError> {
    let q = spec.q;
    let monomials = monomial_set(q, r, m)?;
    let en = enumerate(q, m)?;
    let points: Vec<Vec<Elem>> = (0..en.size).map(|i| en.index_to_vec(i)).collect();
    let generator: Vec<Vec<Elem>> = monomials
        .exponents
        .iter()
        .map(|d| {
            points
                .iter()
                .map(|v| {
                    d.iter()
                        .zip(v)
                        .fold(1, |acc, (&e, &vi)| spec.mul(acc, spec.pow(vi, e)))
                })
                .collect()
        })
        .collect();
    let k = generator.len();
    if (k as u128) * (k as u128) * (en.size as u128) <= RANK_CHECK_BUDGET {
        assert_eq!(
            gf_rank(spec, &generator),
            k,
            "monomial evaluations must be linearly independent"
        );
    }
    Ok(GrmCode { spec: spec.clone(), r, m, n: en.size, monomials, generator })
}

impl GrmCode {
    pub fn q(&self) -> usize {
        self.spec.q
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn as_linear(&self) -> LinearCode {
        LinearCode::new(&self.spec, self.n, self.generator.clone())
            .expect("a generator matrix is always a valid row set")
    }

    pub fn to_json(&self) -> String {
        let file = CodeFile {
            q: self.q(),
            r: self.r,
            m: self.m,
            generator: self
                .generator
                .iter()
                .map(|row| row.iter().map(|&e| elem_to_char(e)).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("code serialization cannot fail")
    }

    /// Rebuilds the code named by the file and checks the stored generator
    /// against the deterministic reconstruction.
    pub fn from_json(text: &str) -> Result<GrmCode, GrmError> {
        let file: CodeFile =
            serde_json::from_str(text).map_err(|e| GrmError::BadFile(e.to_string()))?;
        let (p, e) = prime_power(file.q)
            .ok_or_else(|| GrmError::BadFile(format!("q = {} is not a prime power", file.q)))?;
        let spec = field_make(p, e)?;
        let code = grm_make(&spec, file.r, file.m)?;
        let stored: Result<Vec<Vec<Elem>>, GrmError> = file
            .generator
            .iter()
            .map(|row| {
                row.chars()
                    .map(|c| {
                        char_to_elem(c).filter(|&v| v < file.q).ok_or_else(|| {
                            GrmError::BadFile(format!("bad digit {c:?}"))
                        })
                    })
                    .collect()
            })
            .collect();
        if stored? != code.generator {
            return Err(GrmError::BadFile(
                "stored generator does not match the code it names".into(),
            ));
        }
        Ok(code)
    }
}

#[derive(Serialize, Deserialize)]
struct CodeFile {
    q: usize,
    r: usize,
    m: usize,
    generator: Vec<String>,
}

const DIGITS: &[u8; 64] = b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ-_";

fn elem_to_char(e: Elem) -> char {
    DIGITS[e] as char
}

fn char_to_elem(c: char) -> Option<Elem> {
    DIGITS.iter().position(|&d| d as char == c)
}

fn prime_power(q: usize) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    if rest == 1 {
        Some((p as u32, e))
    } else {
        None
    }
}

/// A linear code held by a canonical generator: the reduced row-echelon basis
/// of its row space. Two codes are equal iff their generators are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    pub spec: FieldSpec,
    /// Code length.
    pub n: usize,
    /// RREF basis rows; the dimension is the row count.
    pub generator: Vec<Vec<Elem>>,
    /// Pivot column of each generator row.
    pub pivots: Vec<usize>,
}

impl LinearCode {
    pub fn new(spec: &FieldSpec, n: usize, rows: Vec<Vec<Elem>>) -> Result<Self, GrmError> {
        for row in &rows {
            if row.len() != n {
                return Err(GrmError::BadMatrix(format!(
                    "row length {} != code length {n}",
                    row.len()
                )));
            }
            if row.iter().any(|&e| e >= spec.q) {
                return Err(GrmError::BadMatrix("entry outside the field".into()));
            }
        }
        let (generator, pivots) = gf_rref(spec, &rows);
        Ok(LinearCode { spec: spec.clone(), n, generator, pivots })
    }

    pub fn q(&self) -> usize {
        self.spec.q
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    /// Number of codewords q^k.
    pub fn codeword_count(&self) -> u128 {
        (self.q() as u128).pow(self.dimension() as u32)
    }

    pub fn encode(&self, message: &[Elem]) -> Vec<Elem> {
        assert_eq!(message.len(), self.dimension());
        let mut word = vec![0; self.n];
        for (u, row) in message.iter().zip(&self.generator) {
            if *u == 0 {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w = self.spec.add(*w, self.spec.mul(*u, g));
            }
        }
        word
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, word: &[Elem]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let mut w = word.to_vec();
        for (row, &piv) in self.generator.iter().zip(&self.pivots) {
            if w[piv] != 0 {
                let factor = w[piv];
                for (wi, &g) in w.iter_mut().zip(row) {
                    *wi = self.spec.sub(*wi, self.spec.mul(factor, g));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// All codewords, in message rank order.
    pub fn enumerate_codewords(&self) -> Result<Vec<Vec<Elem>>, GrmError> {
        if self.codeword_count() > MAX_ENUM {
            return Err(GrmError::TooLarge(format!(
                "q^k = {} exceeds {MAX_ENUM}",
                self.codeword_count()
            )));
        }
        let en = enumerate(self.q(), self.dimension())?;
        Ok((0..en.size).map(|i| self.encode(&en.index_to_vec(i))).collect())
    }
}

/// Uniform random codeword from the seed alone.
pub fn sample_codeword(code: &LinearCode, seed: u64) -> Vec<Elem> {
    sample_codeword_rng(code, &mut ChaCha12Rng::seed_from_u64(seed))
}

pub fn sample_codeword_rng<R: Rng>(code: &LinearCode, rng: &mut R) -> Vec<Elem> {
    let message: Vec<Elem> =
        (0..code.dimension()).map(|_| rng.random_range(0..code.q())).collect();
    code.encode(&message)
}

/// Restricts the code to the columns in `indices` (which must be strictly
/// increasing) and re-reduces the generator.
pub fn puncture(code: &LinearCode, indices: &[usize]) -> Result<LinearCode, GrmError> {
    if indices.is_empty() {
        return Err(GrmError::EmptyIndexSet);
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) || *indices.last().unwrap() >= code.n {
        return Err(GrmError::InvalidIndexSet(
            "indices must be strictly increasing and within the code length".into(),
        ));
    }
    let rows: Vec<Vec<Elem>> = code
        .generator
        .iter()
        .map(|row| indices.iter().map(|&i| row[i]).collect())
        .collect();
    LinearCode::new(&code.spec, indices.len(), rows)
}

/// Punctures RM_q(r, m) to its first q^(m−k) positions and checks that the
/// result equals RM_q(min(r, (m−k)(q−1)), m−k) as a row space.
pub fn grm_puncture_first(code: &GrmCode, k: usize) -> Result<LinearCode, GrmError> {
    if k >= code.m {
        return Err(GrmError::KTooLarge { k, m: code.m });
    }
    let keep = code.q().pow((code.m - k) as u32);
    let indices: Vec<usize> = (0..keep).collect();
    let punctured = puncture(&code.as_linear(), &indices)?;
    let m2 = code.m - k;
    let r2 = code.r.min(m2 * (code.q() - 1));
    let reference = grm_make(&code.spec, r2, m2)?.as_linear();
    assert_eq!(
        punctured.generator, reference.generator,
        "punctured row space must equal the shorter code"
    );
    Ok(punctured)
}

/// The index permutation i ↦ τ(A·τ⁻¹(i) + b) induced by an invertible affine
/// change of variables.
pub fn affine_index_perm(
    code: &GrmCode,
    a: &[Vec<Elem>],
    b: &[Elem],
) -> Result<Permutation, GrmError> {
    let m = code.m;
    let spec = &code.spec;
    if a.len() != m || a.iter().any(|row| row.len() != m) || b.len() != m {
        return Err(GrmError::BadMatrix(format!("affine map must be {m}×{m} plus length-{m} shift")));
    }
    if gf_rank(spec, a) != m {
        return Err(GrmError::SingularMatrix);
    }
    let en = enumerate(spec.q, m)?;
    let mut images = Vec::with_capacity(code.n);
    for i in 0..code.n {
        let v = en.index_to_vec(i);
        let w: Vec<Elem> = (0..m)
            .map(|j| {
                let dot = (0..m).fold(0, |acc, l| spec.add(acc, spec.mul(a[j][l], v[l])));
                spec.add(dot, b[j])
            })
            .collect();
        images.push(en.vec_to_index(&w));
    }
    Ok(Permutation::new(images).expect("invertible affine maps permute the points"))
}

/// True iff permuting symbol positions by `pi` maps the code onto itself.
pub fn is_automorphism(code: &LinearCode, pi: &Permutation) -> bool {
    if pi.degree() != code.n {
        return false;
    }
    let rows: Vec<Vec<Elem>> = code
        .generator
        .iter()
        .map(|row| (0..code.n).map(|i| row[pi.apply(i)]).collect())
        .collect();
    let permuted = LinearCode::new(&code.spec, code.n, rows)
        .expect("permuting columns preserves matrix validity");
    permuted.generator == code.generator
}

/// The group of alphabet relabelings σ with (σ(c₀), …, σ(c_{N−1})) in the
/// code for every codeword, found by exhaustive search over Sym(q).
pub fn relabel_group(code: &LinearCode) -> Result<PermGroup, GrmError> {
    let q = code.q();
    if q > MAX_RELABEL_Q || code.codeword_count() > MAX_RELABEL_WORDS {
        return Err(GrmError::TooLarge(format!(
            "relabel search caps at q <= {MAX_RELABEL_Q} and q^k <= {MAX_RELABEL_WORDS}"
        )));
    }
    let words: HashSet<Vec<Elem>> = code.enumerate_codewords()?.into_iter().collect();
    let sym = symmetric_group(q).expect("q <= 5 here");
    let members: Vec<Permutation> = sym
        .elements
        .into_iter()
        .filter(|sigma| {
            words
                .iter()
                .all(|c| words.contains(&c.iter().map(|&x| sigma.apply(x)).collect::<Vec<_>>()))
        })
        .collect();
    Ok(PermGroup { q, generators: members.clone(), elements: members })
}

/// A basis for coset sampling at position 0: one row with c₀ = 1 plus the
/// rows spanning the subcode with c₀ = 0.
#[derive(Debug, Clone)]
pub struct CosetBasis {
    pub spec: FieldSpec,
    pub n: usize,
    pub pivot_row: Vec<Elem>,
    pub free_rows: Vec<Vec<Elem>>,
}

pub fn coset_basis(code: &LinearCode) -> Result<CosetBasis, GrmError> {
    if code.pivots.first() != Some(&0) {
        return Err(GrmError::DegeneratePosition);
    }
    Ok(CosetBasis {
        spec: code.spec.clone(),
        n: code.n,
        pivot_row: code.generator[0].clone(),
        free_rows: code.generator[1..].to_vec(),
    })
}

impl CosetBasis {
    fn combine(&self, x0: Elem, coeffs: &[Elem]) -> Vec<Elem> {
        let spec = &self.spec;
        let mut word: Vec<Elem> =
            self.pivot_row.iter().map(|&g| spec.mul(x0, g)).collect();
        for (&u, row) in coeffs.iter().zip(&self.free_rows) {
            if u == 0 {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w = spec.add(*w, spec.mul(u, g));
            }
        }
        word
    }

    /// Uniform sample from the coset {c : c₀ = x0}.
    pub fn sample<R: Rng>(&self, x0: Elem, rng: &mut R) -> Vec<Elem> {
        let coeffs: Vec<Elem> =
            (0..self.free_rows.len()).map(|_| rng.random_range(0..self.spec.q)).collect();
        self.combine(x0, &coeffs)
    }

    /// All codewords with c₀ = x0, in rank order of the free coefficients.
    pub fn enumerate(&self, x0: Elem) -> Result<Vec<Vec<Elem>>, GrmError> {
        let count = (self.spec.q as u128).pow(self.free_rows.len() as u32 + 1);
        if count > MAX_ENUM {
            return Err(GrmError::TooLarge(format!("q^k = {count} exceeds {MAX_ENUM}")));
        }
        let en = enumerate(self.spec.q, self.free_rows.len())?;
        Ok((0..en.size).map(|i| self.combine(x0, &en.index_to_vec(i))).collect())
    }
}

/// The coset {c ∈ 𝓒 : c₀ = x0}; the q cosets partition the code equally.
pub fn coset(code: &LinearCode, x0: Elem) -> Result<Vec<Vec<Elem>>, GrmError> {
    coset_basis(code)?.enumerate(x0)
}

#[cfg(test)]
mod tests;
