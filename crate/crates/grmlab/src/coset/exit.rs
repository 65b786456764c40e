//! EXIT curves over erasure patterns and the area identities
//! I(X_S;Y_S)/|S| = ∫₀¹ I(X₀;Y₀|Y_{S∖{0}}(t)) dt and
//! H(X_S|Y_S)/|S| = ∫₀¹ H(X₀|Y_S, X_{S∖{0}}(t)) dt.
//!
//! Coefficients are per-pattern conditional informations in qits; the
//! pattern structure is exact, the entropy evaluations are floating point.

use super::{exact_budget, check_inputs, CosetError};
use crate::channel::{info, DiscreteChannel};
use crate::gf::Elem;
use crate::grm::{puncture, LinearCode};
use crate::rat::{beta_integral, rat_to_f64, Rat};
use num::Zero;
use serde::Serialize;
use std::collections::HashMap;

/// A polynomial Σ_a c_a t^a (1−t)^(D−a) with floating coefficients in qits.
#[derive(Debug, Clone, Serialize)]
pub struct ExitCurve {
    pub degree: usize,
    pub coeffs: Vec<f64>,
}

impl ExitCurve {
    fn zero(degree: usize) -> Self {
        ExitCurve { degree, coeffs: vec![0.0; degree + 1] }
    }

    pub fn evaluate(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(a, c)| c * t.powi(a as i32) * (1.0 - t).powi((self.degree - a) as i32))
            .sum()
    }

    /// ∫₀¹ via exact Beta weights.
    pub fn integral(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(a, c)| c * rat_to_f64(&beta_integral(a as u64, (self.degree - a) as u64)))
            .sum()
    }
}

/// Both sides of an area identity for the subset `s`, plus the spread of
/// per-position integrals (zero for a transitive code).
#[derive(Debug, Clone, Serialize)]
pub struct AreaReport {
    pub subset: Vec<usize>,
    pub integral: f64,
    pub rhs: f64,
    pub gap: f64,
    pub position_spread: f64,
}

fn validate_subset(n: usize, s: &[usize]) -> Result<(), CosetError> {
    if s.first() != Some(&0) {
        return Err(CosetError::ZeroNotInS);
    }
    if s.windows(2).any(|w| w[0] >= w[1]) || *s.last().unwrap() >= n {
        return Err(CosetError::Grm(crate::grm::GrmError::InvalidIndexSet(
            "subset must be strictly increasing and within the code length".into(),
        )));
    }
    Ok(())
}

fn subset_words(
    code: &LinearCode,
    w: &DiscreteChannel,
    s: &[usize],
) -> Result<Vec<Vec<Elem>>, CosetError> {
    let sub = puncture(code, s)?;
    let budget = exact_budget();
    let out_pow = (w.n_outputs() as u128).checked_pow(s.len() as u32);
    let patterns = 1u128.checked_shl((s.len() - 1) as u32);
    let ok = match (out_pow, patterns) {
        (Some(o), Some(p)) => sub.codeword_count().saturating_mul(o) <= budget && p <= budget,
        _ => false,
    };
    if !ok {
        return Err(CosetError::TooLargeForExact(format!(
            "{} punctured words times |Y|^{} exceeds the budget {budget}",
            sub.codeword_count(),
            s.len()
        )));
    }
    Ok(sub.enumerate_codewords()?)
}

/// Unnormalized per-class likelihood tables: `table[v][y]` sums the product
/// likelihood over words with `word[pos] = v`, for output tuples on
/// `positions` (first listed position least significant).
fn class_tables(
    words: &[Vec<Elem>],
    w: &DiscreteChannel,
    positions: &[usize],
    pos: usize,
    q: usize,
) -> Vec<Vec<Rat>> {
    let n_out = w.n_outputs().pow(positions.len() as u32);
    let mut tables = vec![vec![Rat::zero(); n_out]; q];
    for word in words {
        let mut dist = vec![Rat::from_integer(1.into())];
        for &i in positions {
            let row = w.row(word[i]);
            let mut next = Vec::with_capacity(dist.len() * row.len());
            for yv in row {
                for d in &dist {
                    next.push(d * yv);
                }
            }
            dist = next;
        }
        let class = &mut tables[word[pos]];
        for (t, d) in class.iter_mut().zip(&dist) {
            *t += d;
        }
    }
    tables
}

/// The curve t ↦ I(X_pos; Y_pos | Y_rest(t)) for a uniform codeword from
/// `words`, in the pattern basis.
fn mi_curve(words: &[Vec<Elem>], w: &DiscreteChannel, pos: usize) -> ExitCurve {
    let m = words[0].len();
    let others: Vec<usize> = (0..m).filter(|&i| i != pos).collect();
    let d = others.len();
    let total = words.len() as f64;
    let mut curve = ExitCurve::zero(d);
    for mask in 0usize..1 << d {
        let unerased: Vec<usize> = (0..d).filter(|j| mask & (1 << j) == 0).map(|j| others[j]).collect();
        let tables = class_tables(words, w, &unerased, pos, w.q);
        let n_out = tables[0].len();
        let mut term = 0.0;
        for y in 0..n_out {
            let s: Rat = tables.iter().map(|t| &t[y]).sum();
            if s.is_zero() {
                continue;
            }
            let prior: Vec<Rat> = tables.iter().map(|t| &t[y] / &s).collect();
            let mi = info(w, &prior).expect("posterior is an exact prior").mutual_information_qits;
            term += rat_to_f64(&s) / total * mi;
        }
        curve.coeffs[mask.count_ones() as usize] += term;
    }
    curve
}

/// Per-word full-observation likelihoods as floats, one row per word over all
/// output tuples on every position.
fn word_dists(words: &[Vec<Elem>], w: &DiscreteChannel) -> Vec<Vec<f64>> {
    let m = words[0].len();
    words
        .iter()
        .map(|word| {
            let mut dist = vec![1.0f64];
            for i in 0..m {
                let row: Vec<f64> = w.row(word[i]).iter().map(rat_to_f64).collect();
                let mut next = Vec::with_capacity(dist.len() * row.len());
                for &yv in &row {
                    for &dv in &dist {
                        next.push(dv * yv);
                    }
                }
                dist = next;
            }
            dist
        })
        .collect()
}

/// H(X_S | Y_S) in qits for a uniform codeword from `words`.
fn h_words_given_outputs(words: &[Vec<Elem>], w: &DiscreteChannel) -> f64 {
    let dists = word_dists(words, w);
    let n_out = dists[0].len();
    let lnq = (w.q as f64).ln();
    let total = words.len() as f64;
    let mut h = 0.0;
    for y in 0..n_out {
        let mass: f64 = dists.iter().map(|d| d[y]).sum();
        if mass <= 0.0 {
            continue;
        }
        for d in &dists {
            if d[y] > 0.0 {
                h += d[y] / total * (mass / d[y]).ln();
            }
        }
    }
    h / lnq
}

/// The curve t ↦ H(X_pos | Y_S, X_rest(t)) in the pattern basis; the pattern
/// now erases the *input* symbols at the other positions.
fn entropy_curve(words: &[Vec<Elem>], w: &DiscreteChannel, pos: usize) -> ExitCurve {
    let m = words[0].len();
    let others: Vec<usize> = (0..m).filter(|&i| i != pos).collect();
    let d = others.len();
    let dists = word_dists(words, w);
    let n_out = dists[0].len();
    let q = w.q;
    let lnq = (q as f64).ln();
    let total = words.len() as f64;
    let mut curve = ExitCurve::zero(d);
    for mask in 0usize..1 << d {
        let observed: Vec<usize> =
            (0..d).filter(|j| mask & (1 << j) == 0).map(|j| others[j]).collect();
        let mut groups: HashMap<Vec<Elem>, Vec<usize>> = HashMap::new();
        for (idx, word) in words.iter().enumerate() {
            let key: Vec<Elem> = observed.iter().map(|&i| word[i]).collect();
            groups.entry(key).or_default().push(idx);
        }
        let mut term = 0.0;
        for members in groups.values() {
            for y in 0..n_out {
                let mut class_mass = vec![0.0f64; q];
                for &idx in members {
                    class_mass[words[idx][pos]] += dists[idx][y];
                }
                let group_mass: f64 = class_mass.iter().sum();
                if group_mass <= 0.0 {
                    continue;
                }
                for &cm in &class_mass {
                    if cm > 0.0 {
                        term += cm / total * (group_mass / cm).ln();
                    }
                }
            }
        }
        curve.coeffs[(mask.count_ones() as usize).min(d)] += term / lnq;
    }
    curve
}

/// The EXIT curve I(X₀;Y₀|Y_{S∖{0}}(t)) for S = all positions.
pub fn exit_curve(code: &LinearCode, w: &DiscreteChannel) -> Result<ExitCurve, CosetError> {
    let s: Vec<usize> = (0..code.n).collect();
    exit_curve_subset(code, w, &s)
}

pub fn exit_curve_subset(
    code: &LinearCode,
    w: &DiscreteChannel,
    s: &[usize],
) -> Result<ExitCurve, CosetError> {
    check_inputs(code, w)?;
    validate_subset(code.n, s)?;
    let words = subset_words(code, w, s)?;
    Ok(mi_curve(&words, w, 0))
}

/// Verifies the mutual-information area identity on the subset `s`: the
/// integral of the position-0 curve must equal I(X_S;Y_S)/|S|, and every
/// position's integral must agree (the transitivity consequence).
pub fn area_check(
    code: &LinearCode,
    w: &DiscreteChannel,
    s: &[usize],
) -> Result<AreaReport, CosetError> {
    check_inputs(code, w)?;
    validate_subset(code.n, s)?;
    let words = subset_words(code, w, s)?;
    let sub = puncture(code, s)?;
    let integrals: Vec<f64> = (0..s.len()).map(|p| mi_curve(&words, w, p).integral()).collect();
    let spread = spread_of(&integrals);
    if spread > 1e-8 {
        return Err(CosetError::NotTransitive(format!(
            "per-position integrals spread by {spread:.3e} on subset {s:?}"
        )));
    }
    let rhs = (sub.dimension() as f64 - h_words_given_outputs(&words, w)) / s.len() as f64;
    Ok(AreaReport {
        subset: s.to_vec(),
        integral: integrals[0],
        rhs,
        gap: (integrals[0] - rhs).abs(),
        position_spread: spread,
    })
}

/// Verifies the entropy area identity on the subset `s`: the integral of
/// t ↦ H(X₀|Y_S, X_{S∖{0}}(t)) must equal H(X_S|Y_S)/|S|.
pub fn entropy_area_check(
    code: &LinearCode,
    w: &DiscreteChannel,
    s: &[usize],
) -> Result<AreaReport, CosetError> {
    check_inputs(code, w)?;
    validate_subset(code.n, s)?;
    let words = subset_words(code, w, s)?;
    let integrals: Vec<f64> =
        (0..s.len()).map(|p| entropy_curve(&words, w, p).integral()).collect();
    let spread = spread_of(&integrals);
    if spread > 1e-8 {
        return Err(CosetError::NotTransitive(format!(
            "per-position integrals spread by {spread:.3e} on subset {s:?}"
        )));
    }
    let rhs = h_words_given_outputs(&words, w) / s.len() as f64;
    Ok(AreaReport {
        subset: s.to_vec(),
        integral: integrals[0],
        rhs,
        gap: (integrals[0] - rhs).abs(),
        position_spread: spread,
    })
}

fn spread_of(values: &[f64]) -> f64 {
    let max = values.iter().cloned().fold(f64::MIN, f64::max);
    let min = values.iter().cloned().fold(f64::MAX, f64::min);
    max - min
}
