//! Discrete memoryless channels with q-ary input: standard form, Blackwell
//! equivalence, overlap matrix and principal inertia components, information
//! measures, erasure composition, group symmetrization, symmetry-group
//! search, and symbol-error bounds.
//!
//! Transition probabilities are always held as exact rationals. Channels
//! built from floats carry their entries as exact dyadic values with rows
//! renormalized exactly, and the `exact` flag switches comparisons (atom
//! merging, Blackwell equality, symmetry search) from exact equality to a
//! 1e-10 tolerance. Floating point is used only for eigenvalues and
//! entropies.

pub mod builtins;
mod concavity;

pub use concavity::{strong_concavity_gap, GapReport, JointChain};

use crate::gf::is_prime;
use crate::linalg::{mat_mul, sym_eigenvalues_desc, trace};
use crate::perm::{PermGroup, Permutation, Transitivity};
use crate::rat::{
    format_rat, parse_rat, rat_from_f64, rat_int, rat_to_f64, ParseRatError, Rat,
};
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// Output label reserved for the erasure symbol added by [`erasure_compose`].
pub const ERASURE_LABEL: &str = "⊥";

/// Per-coordinate tolerance for merging and comparing float-valued channels.
pub const FLOAT_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum ChannelError {
    #[error("invalid channel dimensions: {0}")]
    InvalidDimensions(String),
    #[error("negative entry at input {input}, output {output}")]
    NegativeEntry { input: usize, output: usize },
    #[error("row {input} sums to {sum}, not 1")]
    RowNotNormalized { input: usize, sum: String },
    #[error("input alphabet sizes differ: {0} vs {1}")]
    InputSizeMismatch(usize, usize),
    #[error("invalid prior: {0}")]
    InvalidPrior(String),
    #[error("erasure probability {0} is outside [0,1]")]
    TOutOfRange(String),
    #[error("group degree {0} does not match channel input size {1}")]
    DegreeMismatch(usize, usize),
    #[error("symmetry search supports q <= 8, got q = {0}")]
    DegreeTooLarge(usize),
    #[error("joint distribution is not Markov: {0}")]
    NotMarkov(String),
    #[error("symmetry search did not return a group (float tolerance too coarse)")]
    GroupCheckFailed,
    #[error(transparent)]
    ParseRat(#[from] ParseRatError),
    #[error("channel file: {0}")]
    Json(#[from] serde_json::Error),
}

/// A q-input discrete memoryless channel. Rows index inputs, columns index
/// the labeled outputs; every row is an exact probability vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteChannel {
    pub q: usize,
    pub outputs: Vec<String>,
    matrix: Vec<Vec<Rat>>,
    /// True when every entry was supplied as a rational; comparisons are then
    /// exact rather than tolerance-based.
    pub exact: bool,
}

impl DiscreteChannel {
    /// Builds a channel from exact rational rows. Rows must sum to exactly 1;
    /// all-zero output columns are dropped.
    pub fn from_rational(
        outputs: Vec<String>,
        matrix: Vec<Vec<Rat>>,
    ) -> Result<Self, ChannelError> {
        Self::build(outputs, matrix, true)
    }

    /// Builds a channel from float rows. Entries become exact dyadic
    /// rationals; rows must sum to 1 within 1e-9 and are renormalized
    /// exactly.
    pub fn from_floats(
        outputs: Vec<String>,
        matrix: Vec<Vec<f64>>,
    ) -> Result<Self, ChannelError> {
        let mut rows = Vec::with_capacity(matrix.len());
        for (x, row) in matrix.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (y, &v) in row.iter().enumerate() {
                let r = rat_from_f64(v)
                    .ok_or_else(|| ChannelError::InvalidDimensions(format!(
                        "entry ({x},{y}) is not finite"
                    )))?;
                out.push(r);
            }
            rows.push(out);
        }
        Self::build(outputs, rows, false)
    }

    fn build(
        outputs: Vec<String>,
        mut matrix: Vec<Vec<Rat>>,
        exact: bool,
    ) -> Result<Self, ChannelError> {
        let q = matrix.len();
        if q < 2 {
            return Err(ChannelError::InvalidDimensions(format!(
                "need at least 2 inputs, got {q}"
            )));
        }
        let n = outputs.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(ChannelError::InvalidDimensions(format!(
                "matrix rows must all have the {n} labeled outputs"
            )));
        }
        let float_slack = rat_from_f64(1e-9).unwrap();
        for (x, row) in matrix.iter_mut().enumerate() {
            for (y, v) in row.iter().enumerate() {
                if v.is_negative() {
                    return Err(ChannelError::NegativeEntry { input: x, output: y });
                }
            }
            let sum: Rat = row.iter().sum();
            if sum != Rat::one() {
                if exact || (&sum - Rat::one()).abs() > float_slack {
                    return Err(ChannelError::RowNotNormalized {
                        input: x,
                        sum: format_rat(&sum),
                    });
                }
                for v in row.iter_mut() {
                    *v /= &sum;
                }
            }
        }
        let keep: Vec<usize> = (0..n)
            .filter(|&y| matrix.iter().any(|row| !row[y].is_zero()))
            .collect();
        if keep.len() < n {
            matrix = matrix
                .into_iter()
                .map(|row| keep.iter().map(|&y| row[y].clone()).collect())
                .collect();
        }
        let outputs = keep.iter().map(|&y| outputs[y].clone()).collect();
        Ok(DiscreteChannel { q, outputs, matrix, exact })
    }

    pub fn n_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn entry(&self, x: usize, y: usize) -> &Rat {
        &self.matrix[x][y]
    }

    pub fn row(&self, x: usize) -> &[Rat] {
        &self.matrix[x]
    }

    /// The reference measure of output `y`: the column sum Σ_x W(y|x).
    pub fn wbar(&self, y: usize) -> Rat {
        self.matrix.iter().map(|row| row[y].clone()).sum()
    }

    /// The posterior over inputs given output `y` under the uniform prior,
    /// i.e. the column normalized by its sum.
    pub fn posterior(&self, y: usize) -> Vec<Rat> {
        let wbar = self.wbar(y);
        self.matrix.iter().map(|row| &row[y] / &wbar).collect()
    }

    pub fn to_json(&self) -> String {
        let file = ChannelFile {
            q: self.q,
            outputs: self.outputs.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| {
                            if self.exact {
                                EntryJson::Text(format_rat(v))
                            } else {
                                EntryJson::Number(rat_to_f64(v))
                            }
                        })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("channel serialization cannot fail")
    }

    /// Parses the channel file format. String entries are read as exact
    /// rationals; any numeric entry marks the channel as float-valued.
    pub fn from_json(text: &str) -> Result<Self, ChannelError> {
        let file: ChannelFile = serde_json::from_str(text)?;
        if file.matrix.len() != file.q {
            return Err(ChannelError::InvalidDimensions(format!(
                "declared q = {} but matrix has {} rows",
                file.q,
                file.matrix.len()
            )));
        }
        let exact = file
            .matrix
            .iter()
            .flatten()
            .all(|e| matches!(e, EntryJson::Text(_)));
        let mut rows = Vec::with_capacity(file.q);
        for row in &file.matrix {
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                out.push(match e {
                    EntryJson::Text(s) => parse_rat(s)?,
                    EntryJson::Number(v) => rat_from_f64(*v).ok_or_else(|| {
                        ChannelError::InvalidDimensions("non-finite entry".into())
                    })?,
                });
            }
            rows.push(out);
        }
        Self::build(file.outputs, rows, exact)
    }
}

#[derive(Serialize, Deserialize)]
struct ChannelFile {
    q: usize,
    outputs: Vec<String>,
    matrix: Vec<Vec<EntryJson>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryJson {
    Number(f64),
    Text(String),
}

/// The standard form of a channel: its output is the posterior vector itself.
/// `atoms` are the distinct posteriors, `masses` their reference-measure
/// weights (summing to q), and `input_dists[x]` the induced distribution over
/// atoms for input `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardChannel {
    pub q: usize,
    pub atoms: Vec<Vec<Rat>>,
    pub masses: Vec<Rat>,
    pub input_dists: Vec<Vec<Rat>>,
    pub exact: bool,
}

impl StandardChannel {
    pub fn n_atoms(&self) -> usize {
        self.atoms.len()
    }

    /// Re-expresses the standard channel as a plain channel whose output `j`
    /// is atom `j`.
    pub fn to_channel(&self) -> DiscreteChannel {
        let outputs = (0..self.n_atoms()).map(|j| format!("a{j}")).collect();
        let matrix = self.input_dists.clone();
        DiscreteChannel { q: self.q, outputs, matrix, exact: self.exact }
    }
}

fn atoms_close(a: &[Rat], b: &[Rat], tol: &Rat) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= *tol)
}

/// Groups outputs by their posterior vector, producing the standard channel.
/// Posteriors merge exactly for exact channels and within a per-coordinate
/// 1e-10 tolerance otherwise; atoms are sorted lexicographically so the
/// result is canonical.
pub fn standardize(w: &DiscreteChannel) -> StandardChannel {
    let tol = rat_from_f64(FLOAT_TOL).unwrap();
    let mut atoms: Vec<Vec<Rat>> = vec![];
    let mut masses: Vec<Rat> = vec![];
    let mut cols: Vec<Vec<Rat>> = vec![];
    for y in 0..w.n_outputs() {
        let post = w.posterior(y);
        let found = if w.exact {
            atoms.iter().position(|a| *a == post)
        } else {
            atoms.iter().position(|a| atoms_close(a, &post, &tol))
        };
        let j = match found {
            Some(j) => j,
            None => {
                atoms.push(post);
                masses.push(Rat::zero());
                cols.push(vec![Rat::zero(); w.q]);
                atoms.len() - 1
            }
        };
        masses[j] += w.wbar(y);
        for x in 0..w.q {
            cols[j][x] += w.entry(x, y).clone();
        }
    }
    let mut order: Vec<usize> = (0..atoms.len()).collect();
    order.sort_by(|&i, &j| atoms[i].cmp(&atoms[j]));
    let atoms: Vec<Vec<Rat>> = order.iter().map(|&i| atoms[i].clone()).collect();
    let masses: Vec<Rat> = order.iter().map(|&i| masses[i].clone()).collect();
    let input_dists = (0..w.q)
        .map(|x| order.iter().map(|&j| cols[j][x].clone()).collect())
        .collect();
    StandardChannel { q: w.q, atoms, masses, input_dists, exact: w.exact }
}

/// True iff the two channels have the same standard channel: exact multiset
/// equality of (atom, mass) pairs when both are exact, tolerance matching
/// otherwise.
pub fn blackwell_equal(w1: &DiscreteChannel, w2: &DiscreteChannel) -> Result<bool, ChannelError> {
    if w1.q != w2.q {
        return Err(ChannelError::InputSizeMismatch(w1.q, w2.q));
    }
    let s1 = standardize(w1);
    let s2 = standardize(w2);
    if s1.n_atoms() != s2.n_atoms() {
        return Ok(false);
    }
    if s1.exact && s2.exact {
        return Ok(s1.atoms == s2.atoms && s1.masses == s2.masses);
    }
    let tol = rat_from_f64(FLOAT_TOL).unwrap();
    let mut used = vec![false; s2.n_atoms()];
    for (a, mass) in s1.atoms.iter().zip(&s1.masses) {
        let found = (0..s2.n_atoms()).find(|&j| {
            !used[j]
                && atoms_close(a, &s2.atoms[j], &tol)
                && (mass - &s2.masses[j]).abs() <= tol
        });
        match found {
            Some(j) => used[j] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// The overlap matrix of a channel together with its spectrum.
#[derive(Debug, Clone)]
pub struct OverlapReport {
    /// Q = W·diag(1ᵀW)⁻¹·Wᵀ, exact.
    pub q_mat: Vec<Vec<Rat>>,
    /// Eigenvalues λ_0 ≥ … ≥ λ_{q−1} of Q (floating).
    pub pics: Vec<f64>,
    /// Discrepancy δ = (tr Q − tr Q²)/q, exact.
    pub delta: Rat,
    /// χ²-information tr Q − 1, exact.
    pub chi2: Rat,
}

impl OverlapReport {
    pub fn trace_q(&self) -> Rat {
        trace(&self.q_mat)
    }

    /// λ_{q−1}, clamped to 0 when the eigensolver returns a value in
    /// (−1e-10, 0).
    pub fn lambda_min(&self) -> f64 {
        let v = *self.pics.last().unwrap();
        if v < 0.0 && v > -FLOAT_TOL {
            0.0
        } else {
            v
        }
    }

    /// δ recomputed from the spectrum as (1/q)Σ_{x≥1} λ_x(1−λ_x).
    pub fn delta_from_pics(&self) -> f64 {
        let q = self.pics.len() as f64;
        self.pics.iter().skip(1).map(|l| l * (1.0 - l)).sum::<f64>() / q
    }

    pub fn delta_f64(&self) -> f64 {
        rat_to_f64(&self.delta)
    }
}

/// Builds the spectrum report for an externally computed overlap matrix.
pub fn overlap_report_from_matrix(q_mat: Vec<Vec<Rat>>) -> OverlapReport {
    let q = q_mat.len();
    let tr = trace(&q_mat);
    let tr_sq = trace(&mat_mul(&q_mat, &q_mat));
    let delta = (&tr - &tr_sq) / rat_int(q as i64);
    let chi2 = &tr - Rat::one();
    let pics = sym_eigenvalues_desc(&q_mat);
    OverlapReport { q_mat, pics, delta, chi2 }
}

/// Computes the overlap matrix Q[x][x′] = Σ_y W(y|x)·W(y|x′)/W̄(y) exactly,
/// plus its eigenvalues, discrepancy, and χ²-information.
pub fn overlap(w: &DiscreteChannel) -> OverlapReport {
    let q = w.q;
    let wbars: Vec<Rat> = (0..w.n_outputs()).map(|y| w.wbar(y)).collect();
    let mut q_mat = vec![vec![Rat::zero(); q]; q];
    for x in 0..q {
        for x2 in x..q {
            let mut s = Rat::zero();
            for y in 0..w.n_outputs() {
                if !w.entry(x, y).is_zero() && !w.entry(x2, y).is_zero() {
                    s += w.entry(x, y) * w.entry(x2, y) / &wbars[y];
                }
            }
            q_mat[x][x2] = s.clone();
            q_mat[x2][x] = s;
        }
    }
    overlap_report_from_matrix(q_mat)
}

/// Entropy and mutual-information terms in base-q units (qits).
#[derive(Debug, Clone, Copy)]
pub struct InfoReport {
    pub mutual_information_qits: f64,
    pub h_x_qits: f64,
    pub h_y_qits: f64,
    pub h_x_given_y_qits: f64,
}

fn check_prior(q: usize, prior: &[Rat]) -> Result<(), ChannelError> {
    if prior.len() != q {
        return Err(ChannelError::InvalidPrior(format!(
            "length {} != q = {}",
            prior.len(),
            q
        )));
    }
    if prior.iter().any(|p| p.is_negative()) {
        return Err(ChannelError::InvalidPrior("negative mass".into()));
    }
    let sum: Rat = prior.iter().sum();
    if sum != Rat::one() {
        return Err(ChannelError::InvalidPrior(format!("sums to {}", format_rat(&sum))));
    }
    Ok(())
}

/// Uniform prior on `[q]`.
pub fn uniform_prior(q: usize) -> Vec<Rat> {
    vec![Rat::new(1.into(), (q as i64).into()); q]
}

/// Mutual information I(X;Y) and entropy terms for a given prior, in qits.
pub fn info(w: &DiscreteChannel, prior: &[Rat]) -> Result<InfoReport, ChannelError> {
    check_prior(w.q, prior)?;
    let lnq = (w.q as f64).ln();
    let p: Vec<f64> = prior.iter().map(rat_to_f64).collect();
    let n = w.n_outputs();
    let mut py = vec![0.0; n];
    for (x, &px) in p.iter().enumerate() {
        for y in 0..n {
            py[y] += px * rat_to_f64(w.entry(x, y));
        }
    }
    let mut mi = 0.0;
    for (x, &px) in p.iter().enumerate() {
        if px == 0.0 {
            continue;
        }
        for y in 0..n {
            let wyx = rat_to_f64(w.entry(x, y));
            if wyx > 0.0 {
                mi += px * wyx * (wyx / py[y]).ln();
            }
        }
    }
    let h = |v: &[f64]| -> f64 {
        -v.iter().filter(|&&t| t > 0.0).map(|&t| t * t.ln()).sum::<f64>()
    };
    let h_x = h(&p) / lnq;
    let h_y = h(&py) / lnq;
    let mi = mi / lnq;
    Ok(InfoReport {
        mutual_information_qits: mi,
        h_x_qits: h_x,
        h_y_qits: h_y,
        h_x_given_y_qits: h_x - mi,
    })
}

/// I(X;Y) in qits under the uniform prior; for symmetric channels this is the
/// capacity.
pub fn capacity_uniform(w: &DiscreteChannel) -> f64 {
    info(w, &uniform_prior(w.q))
        .expect("uniform prior is always valid")
        .mutual_information_qits
}

/// Composes `w` with an erasure channel: with probability `t` the output is
/// replaced by the erasure symbol ⊥. If `w` already has a ⊥ column the new
/// erasure mass folds into it, so composing twice matches a single composition
/// with the combined erasure probability.
pub fn erasure_compose(w: &DiscreteChannel, t: &Rat) -> Result<DiscreteChannel, ChannelError> {
    if t.is_negative() || *t > Rat::one() {
        return Err(ChannelError::TOutOfRange(format_rat(t)));
    }
    let keep = Rat::one() - t;
    let mut outputs = w.outputs.clone();
    let mut matrix: Vec<Vec<Rat>> = w
        .matrix
        .iter()
        .map(|row| row.iter().map(|v| v * &keep).collect())
        .collect();
    match w.outputs.iter().position(|lab| lab == ERASURE_LABEL) {
        Some(y) => {
            for row in matrix.iter_mut() {
                row[y] += t.clone();
            }
        }
        None => {
            outputs.push(ERASURE_LABEL.to_string());
            for row in matrix.iter_mut() {
                row.push(t.clone());
            }
        }
    }
    DiscreteChannel::build(outputs, matrix, w.exact)
}

/// Symmetrizes `w` by a permutation group H on its inputs: a uniform random
/// σ ∈ H is applied to the input and revealed with the output, giving the
/// channel (y,σ) ← x with probability W(y|σx)/|H|.
pub fn symmetrize(w: &DiscreteChannel, h: &PermGroup) -> Result<DiscreteChannel, ChannelError> {
    if h.q != w.q {
        return Err(ChannelError::DegreeMismatch(h.q, w.q));
    }
    let order = rat_int(h.order() as i64);
    let mut outputs = Vec::with_capacity(w.n_outputs() * h.order());
    let mut matrix = vec![Vec::with_capacity(outputs.capacity()); w.q];
    for (k, sigma) in h.elements.iter().enumerate() {
        for y in 0..w.n_outputs() {
            outputs.push(format!("{}@{}", w.outputs[y], k));
            for (x, row) in matrix.iter_mut().enumerate() {
                row.push(w.entry(sigma.apply(x), y) / &order);
            }
        }
    }
    DiscreteChannel::build(outputs, matrix, w.exact)
}

fn all_permutations(q: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = Vec::with_capacity(q);
    let mut used = vec![false; q];
    fn rec(q: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for v in 0..q {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(q, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(q, &mut cur, &mut used, &mut out);
    out
}

/// Finds the symmetry group G of `w`: all σ with σWˢ_x = Wˢ_{σx} for every
/// input x, decided on the standard channel. A permutation belongs to G iff
/// it permutes the atom set (acting on posterior coordinates) while
/// preserving atom masses.
pub fn symmetry_group(w: &DiscreteChannel) -> Result<PermGroup, ChannelError> {
    if w.q > crate::perm::MAX_DEGREE {
        return Err(ChannelError::DegreeTooLarge(w.q));
    }
    let s = standardize(w);
    let tol = rat_from_f64(FLOAT_TOL).unwrap();
    let exact_index: HashMap<&[Rat], usize> = s
        .atoms
        .iter()
        .enumerate()
        .map(|(j, a)| (a.as_slice(), j))
        .collect();
    let find_atom = |v: &[Rat]| -> Option<usize> {
        if s.exact {
            exact_index.get(v).copied()
        } else {
            s.atoms.iter().position(|a| atoms_close(a, v, &tol))
        }
    };
    let mass_eq = |a: &Rat, b: &Rat| -> bool {
        if s.exact {
            a == b
        } else {
            (a - b).abs() <= tol
        }
    };
    let mut members = vec![];
    'sigma: for images in all_permutations(w.q) {
        for (j, atom) in s.atoms.iter().enumerate() {
            let mut permuted = vec![Rat::zero(); w.q];
            for (x, val) in atom.iter().enumerate() {
                permuted[images[x]] = val.clone();
            }
            match find_atom(&permuted) {
                Some(k) if mass_eq(&s.masses[j], &s.masses[k]) => {}
                _ => continue 'sigma,
            }
        }
        members.push(Permutation::new(images).unwrap());
    }
    members.sort();
    let group = PermGroup { q: w.q, generators: members.clone(), elements: members };
    verify_is_group(&group)?;
    Ok(group)
}

/// Confirms closure under inverse and composition. Failure is only possible
/// for float channels whose atoms sit near the comparison tolerance.
fn verify_is_group(g: &PermGroup) -> Result<(), ChannelError> {
    let n = g.order();
    if n == 0 || !g.contains(&Permutation::identity(g.q)) {
        return Err(ChannelError::GroupCheckFailed);
    }
    for a in &g.elements {
        if !g.contains(&a.inverse()) {
            return Err(ChannelError::GroupCheckFailed);
        }
    }
    let firsts = if n * n <= 2_000_000 { n } else { 16 };
    for a in &g.elements[..firsts.min(n)] {
        for b in &g.elements {
            if !g.contains(&a.compose(b)) {
                return Err(ChannelError::GroupCheckFailed);
            }
        }
    }
    Ok(())
}

/// Exact MAP symbol-error rate and its overlap-matrix upper bound.
#[derive(Debug, Clone)]
pub struct SerReport {
    /// 1 − Σ_y max_x p[x]·W(y|x), the MAP decoder's error probability.
    pub ser_exact: Rat,
    /// 1 − tr(diag(p)·Q); always ≥ ser_exact.
    pub overlap_bound: Rat,
}

/// MAP symbol-error rate under `prior` (argmax ties broken toward the lowest
/// input index, which does not affect the value), and the overlap bound.
pub fn ser(w: &DiscreteChannel, prior: &[Rat]) -> Result<SerReport, ChannelError> {
    check_prior(w.q, prior)?;
    let mut correct = Rat::zero();
    for y in 0..w.n_outputs() {
        let best = (0..w.q)
            .map(|x| &prior[x] * w.entry(x, y))
            .max()
            .unwrap();
        correct += best;
    }
    let rep = overlap(w);
    let mut tr_pq = Rat::zero();
    for x in 0..w.q {
        tr_pq += &prior[x] * &rep.q_mat[x][x];
    }
    Ok(SerReport {
        ser_exact: Rat::one() - correct,
        overlap_bound: Rat::one() - tr_pq,
    })
}

/// Which hypothesis of the trace-constraint bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceCase {
    /// G doubly transitive.
    DoublyTransitive,
    /// G transitive, q prime, and 4q²δ < 1.
    TransitivePrime,
    /// Neither hypothesis holds; the bound is reported but not asserted.
    NotApplicable,
}

#[derive(Debug, Clone)]
pub struct TraceConstraintReport {
    pub tr_q: Rat,
    pub delta: Rat,
    pub condition_case: TraceCase,
    /// Whether min_{b∈{1,q}} |tr Q − b| ≤ 2qδ.
    pub bound_holds: bool,
    /// 2qδ − min_b |tr Q − b| (nonnegative iff the bound holds).
    pub margin: Rat,
}

/// Evaluates the constraint min_{b∈{1,q}} |tr Q − b| ≤ 2qδ together with
/// which of its hypotheses the channel satisfies.
pub fn trace_constraint_check(w: &DiscreteChannel) -> Result<TraceConstraintReport, ChannelError> {
    let rep = overlap(w);
    let tr_q = rep.trace_q();
    let delta = rep.delta.clone();
    let g = symmetry_group(w)?;
    let trans = crate::perm::transitivity(&g);
    let qr = rat_int(w.q as i64);
    let condition_case = match trans {
        Transitivity::DoublyTransitive => TraceCase::DoublyTransitive,
        Transitivity::Transitive
            if is_prime(w.q as u32)
                && rat_int(4) * &qr * &qr * &delta < Rat::one() =>
        {
            TraceCase::TransitivePrime
        }
        _ => TraceCase::NotApplicable,
    };
    let dist = (&tr_q - Rat::one()).abs().min((&tr_q - &qr).abs());
    let margin = rat_int(2) * &qr * &delta - dist;
    Ok(TraceConstraintReport {
        tr_q,
        delta,
        condition_case,
        bound_holds: !margin.is_negative(),
        margin,
    })
}
