//! The coset channel of a linear code: exact posterior analysis over erasure
//! patterns, the discrepancy δ(t) and its average, overlap and SER bounds,
//! EXIT curves, and Monte Carlo estimation.
//!
//! Position 0 carries the coset input X₀; the remaining N−1 positions are
//! observed through the base channel W, each independently erased with
//! probability t. Every ∫₀¹…dt reduces to exact Beta integrals because all
//! curves are kept in the basis {t^a (1−t)^b}.

pub mod exit;
pub mod mc;
pub mod poly;

pub use exit::{area_check, entropy_area_check, exit_curve, exit_curve_subset, AreaReport, ExitCurve};
pub use mc::{mc_coset, McReport};
pub use poly::ErasurePolynomial;

use crate::channel::{
    capacity_uniform, overlap, overlap_report_from_matrix, symmetry_group, ChannelError,
    DiscreteChannel, OverlapReport,
};
use crate::gf::{is_prime, Elem};
use crate::grm::{coset_basis, GrmError, LinearCode};
use crate::perm::Transitivity;
use crate::rat::{format_rat, rat, rat_to_f64, Rat};
use num::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CosetError {
    #[error("exact analysis too large: {0}")]
    TooLargeForExact(String),
    #[error("subset must contain position 0")]
    ZeroNotInS,
    #[error("per-position EXIT integrals differ: {0}")]
    NotTransitive(String),
    #[error("the family's intersection is not {{0}}")]
    IntersectionNotZero,
    #[error("minimal eigenvalue of the base overlap matrix is not positive")]
    ZeroMinPIC,
    #[error("need m >= q^2, got m = {m} with q = {q}")]
    MTooSmall { m: usize, q: usize },
    #[error("bad Monte Carlo parameters: {0}")]
    McParams(String),
    #[error(transparent)]
    Grm(#[from] GrmError),
    #[error(transparent)]
    Channel(#[from] ChannelError),
}

/// Elementary-term budget for exact analysis, overridable through the
/// GRMLAB_EXACT_BUDGET environment variable.
pub fn exact_budget() -> u128 {
    std::env::var("GRMLAB_EXACT_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1 << 26)
}

fn check_inputs(code: &LinearCode, w: &DiscreteChannel) -> Result<(), CosetError> {
    if code.q() != w.q {
        return Err(CosetError::Channel(ChannelError::InputSizeMismatch(code.q(), w.q)));
    }
    Ok(())
}

fn check_budget(code: &LinearCode, w: &DiscreteChannel) -> Result<(), CosetError> {
    let n = code.n;
    let coset_size = code.codeword_count() / code.q() as u128;
    let budget = exact_budget();
    let out_pow = (w.n_outputs() as u128).checked_pow((n - 1) as u32);
    let patterns = 1u128.checked_shl((n - 1) as u32);
    let ok = match (out_pow, patterns) {
        (Some(o), Some(p)) => coset_size.saturating_mul(o) <= budget && p <= budget,
        _ => false,
    };
    if !ok {
        return Err(CosetError::TooLargeForExact(format!(
            "coset size {} times |Y|^{} exceeds the budget {}",
            coset_size,
            n - 1,
            budget
        )));
    }
    Ok(())
}

/// Per-codeword likelihood tables over output tuples on the `unerased`
/// positions: `table[x0][y]` = P(y | X₀ = x0), summed over the coset and
/// normalized. Output tuples are indexed with the first listed position least
/// significant.
fn likelihood_tables(
    cosets: &[Vec<Vec<Elem>>],
    w: &DiscreteChannel,
    unerased: &[usize],
) -> Vec<Vec<Rat>> {
    let n_out = w.n_outputs().pow(unerased.len() as u32);
    let coset_size = cosets[0].len();
    let inv = Rat::new(1.into(), (coset_size as i64).into());
    cosets
        .iter()
        .map(|words| {
            let mut table = vec![Rat::zero(); n_out];
            for word in words {
                let mut dist = vec![Rat::one()];
                for &i in unerased {
                    let row = w.row(word[i]);
                    let mut next = Vec::with_capacity(dist.len() * row.len());
                    for yv in row {
                        for d in &dist {
                            next.push(d * yv);
                        }
                    }
                    dist = next;
                }
                for (t, d) in table.iter_mut().zip(&dist) {
                    *t += d;
                }
            }
            table.iter().map(|t| t * &inv).collect()
        })
        .collect()
}

struct PatternStats {
    q_mat: Vec<Vec<Rat>>,
    trace: Rat,
    /// Σ_y max_x P(y|x), the exact MAP success mass for this pattern.
    map_mass: Rat,
}

fn pattern_stats(q: usize, tables: &[Vec<Rat>]) -> PatternStats {
    let n_out = tables[0].len();
    let mut q_mat = vec![vec![Rat::zero(); q]; q];
    let mut map_mass = Rat::zero();
    for y in 0..n_out {
        let s: Rat = tables.iter().map(|t| &t[y]).sum();
        if s.is_zero() {
            continue;
        }
        map_mass += tables.iter().map(|t| &t[y]).max().unwrap();
        for x in 0..q {
            if tables[x][y].is_zero() {
                continue;
            }
            for x2 in x..q {
                if tables[x2][y].is_zero() {
                    continue;
                }
                let v = &tables[x][y] * &tables[x2][y] / &s;
                q_mat[x][x2] += &v;
                if x2 != x {
                    q_mat[x2][x] += &v;
                }
            }
        }
    }
    let trace = (0..q).map(|x| q_mat[x][x].clone()).sum();
    PatternStats { q_mat, trace, map_mass }
}

/// Exact analysis of the coset channel: one overlap matrix per erasure
/// pattern, combined into polynomials in the erasure probability t.
pub struct CosetAnalysis {
    pub code: LinearCode,
    pub w: DiscreteChannel,
    /// Code length N; the coset channel has N−1 observed positions.
    pub n: usize,
    /// Indexed by erasure bitmask (bit j set ⟺ position j+1 erased).
    patterns: Vec<PatternStats>,
}

impl CosetAnalysis {
    pub fn new(code: &LinearCode, w: &DiscreteChannel) -> Result<Self, CosetError> {
        check_inputs(code, w)?;
        check_budget(code, w)?;
        let n = code.n;
        let basis = coset_basis(code)?;
        let cosets: Result<Vec<_>, _> = (0..code.q()).map(|x0| basis.enumerate(x0)).collect();
        let cosets = cosets?;
        let mut patterns = Vec::with_capacity(1 << (n - 1));
        for mask in 0usize..1 << (n - 1) {
            let unerased: Vec<usize> =
                (0..n - 1).filter(|j| mask & (1 << j) == 0).map(|j| j + 1).collect();
            let tables = likelihood_tables(&cosets, w, &unerased);
            patterns.push(pattern_stats(code.q(), &tables));
        }
        Ok(CosetAnalysis { code: code.clone(), w: w.clone(), n, patterns })
    }

    pub fn q(&self) -> usize {
        self.code.q()
    }

    /// Code rate k/N, exact.
    pub fn rate_exact(&self) -> Rat {
        rat(self.code.dimension() as i64, self.n as i64)
    }

    pub fn rate(&self) -> f64 {
        rat_to_f64(&self.rate_exact())
    }

    fn degree(&self) -> usize {
        self.n - 1
    }

    /// tr Q(t) as a degree-(N−1) polynomial: each pattern contributes its own
    /// trace with weight t^|E| (1−t)^(N−1−|E|).
    pub fn trace_poly(&self) -> ErasurePolynomial {
        let mut p = ErasurePolynomial::zero(self.degree());
        for (mask, st) in self.patterns.iter().enumerate() {
            p.coeffs[mask.count_ones() as usize] += &st.trace;
        }
        p
    }

    /// tr Q(t) restricted to the observation positions in `a_set`
    /// (a subset of {1..N−1}), as a degree-|a_set| polynomial.
    pub fn sub_trace_poly(&self, a_set: &[usize]) -> ErasurePolynomial {
        let amask: usize = a_set.iter().map(|&p| 1 << (p - 1)).sum();
        let full = (1usize << self.degree()) - 1;
        let rest = full & !amask;
        let mut p = ErasurePolynomial::zero(a_set.len());
        let mut sub = amask;
        loop {
            let erased_in_a = sub.count_ones() as usize;
            p.coeffs[erased_in_a] += &self.patterns[rest | sub].trace;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & amask;
        }
        p
    }

    /// δ(t) exactly, degree 2(N−1): the linear trace part minus the quadratic
    /// tr(Q(t)²) part, over q.
    pub fn delta_poly(&self) -> ErasurePolynomial {
        let d = self.degree();
        let linear = self.trace_poly().elevate(d);
        let mut quad = ErasurePolynomial::zero(2 * d);
        let n_pat = self.patterns.len();
        for e1 in 0..n_pat {
            let a1 = e1.count_ones() as usize;
            for e2 in e1..n_pat {
                let a2 = e2.count_ones() as usize;
                let mut tr_prod = Rat::zero();
                for x in 0..self.q() {
                    for x2 in 0..self.q() {
                        if !self.patterns[e1].q_mat[x][x2].is_zero() {
                            tr_prod += &self.patterns[e1].q_mat[x][x2]
                                * &self.patterns[e2].q_mat[x][x2];
                        }
                    }
                }
                if e2 == e1 {
                    quad.coeffs[a1 + a2] += &tr_prod;
                } else {
                    quad.coeffs[a1 + a2] += tr_prod * rat(2, 1);
                }
            }
        }
        let inv_q = rat(1, self.q() as i64);
        linear.sub(&quad).scale(&inv_q)
    }

    /// δ_avg = ∫₀¹ δ(t) dt, exact.
    pub fn delta_avg(&self) -> Rat {
        self.delta_poly().integral()
    }

    /// SER of the MAP decision on the coset channel as a degree-(N−1)
    /// polynomial in t.
    pub fn ser_poly(&self) -> ErasurePolynomial {
        let mut mass = ErasurePolynomial::zero(self.degree());
        for (mask, st) in self.patterns.iter().enumerate() {
            mass.coeffs[mask.count_ones() as usize] += &st.map_mass;
        }
        let inv_q = rat(1, self.q() as i64);
        ErasurePolynomial::one(self.degree()).sub(&mass.scale(&inv_q))
    }

    /// Q(t) = Σ_E w_E(t) Q_E at an exact t, with its spectrum report.
    pub fn overlap_at(&self, t: &Rat) -> Result<OverlapReport, CosetError> {
        if t < &Rat::zero() || t > &Rat::one() {
            return Err(CosetError::Channel(ChannelError::TOutOfRange(format_rat(t))));
        }
        let d = self.degree();
        let s = Rat::one() - t;
        let mut t_pows = vec![Rat::one()];
        let mut s_pows = vec![Rat::one()];
        for i in 0..d {
            t_pows.push(&t_pows[i] * t);
            s_pows.push(&s_pows[i] * &s);
        }
        let q = self.q();
        let mut q_mat = vec![vec![Rat::zero(); q]; q];
        for (mask, st) in self.patterns.iter().enumerate() {
            let a = mask.count_ones() as usize;
            let weight = &t_pows[a] * &s_pows[d - a];
            if weight.is_zero() {
                continue;
            }
            for x in 0..q {
                for x2 in 0..q {
                    if !st.q_mat[x][x2].is_zero() {
                        q_mat[x][x2] += &st.q_mat[x][x2] * &weight;
                    }
                }
            }
        }
        Ok(overlap_report_from_matrix(q_mat))
    }

    /// tr Q(t) at an exact t.
    pub fn trace_at(&self, t: &Rat) -> Rat {
        self.trace_poly().evaluate(t)
    }
}

/// The coset channel V at t = 0: outputs are all tuples over the N−1 observed
/// positions, V(y|x₀) averages the memoryless likelihood over the coset.
pub fn coset_channel(
    code: &LinearCode,
    w: &DiscreteChannel,
) -> Result<DiscreteChannel, CosetError> {
    check_inputs(code, w)?;
    check_budget(code, w)?;
    let basis = coset_basis(code)?;
    let cosets: Result<Vec<_>, _> = (0..code.q()).map(|x0| basis.enumerate(x0)).collect();
    let cosets = cosets?;
    let unerased: Vec<usize> = (1..code.n).collect();
    let tables = likelihood_tables(&cosets, w, &unerased);
    let labels = tuple_labels(w, unerased.len());
    Ok(DiscreteChannel::from_rational(labels, tables)?)
}

fn tuple_labels(w: &DiscreteChannel, len: usize) -> Vec<String> {
    let mut labels = vec![String::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(labels.len() * w.n_outputs());
        for yl in &w.outputs {
            for l in &labels {
                if l.is_empty() {
                    next.push(yl.clone());
                } else {
                    next.push(format!("{l},{yl}"));
                }
            }
        }
        labels = next;
    }
    labels
}

/// The coset channel V_t at an exact erasure probability t, with one output
/// block per erasure pattern.
pub fn coset_channel_at(
    code: &LinearCode,
    w: &DiscreteChannel,
    t: &Rat,
) -> Result<DiscreteChannel, CosetError> {
    check_inputs(code, w)?;
    check_budget(code, w)?;
    if t < &Rat::zero() || t > &Rat::one() {
        return Err(CosetError::Channel(ChannelError::TOutOfRange(format_rat(t))));
    }
    let n = code.n;
    let d = n - 1;
    let basis = coset_basis(code)?;
    let cosets: Result<Vec<_>, _> = (0..code.q()).map(|x0| basis.enumerate(x0)).collect();
    let cosets = cosets?;
    let s = Rat::one() - t;
    let mut t_pows = vec![Rat::one()];
    let mut s_pows = vec![Rat::one()];
    for i in 0..d {
        t_pows.push(&t_pows[i] * t);
        s_pows.push(&s_pows[i] * &s);
    }
    let mut labels = Vec::new();
    let mut rows = vec![Vec::new(); code.q()];
    for mask in 0usize..1 << d {
        let a = mask.count_ones() as usize;
        let weight = &t_pows[a] * &s_pows[d - a];
        let unerased: Vec<usize> =
            (0..d).filter(|j| mask & (1 << j) == 0).map(|j| j + 1).collect();
        let tables = likelihood_tables(&cosets, w, &unerased);
        for l in tuple_labels(w, unerased.len()) {
            labels.push(format!("e{mask}:{l}"));
        }
        for (row, table) in rows.iter_mut().zip(&tables) {
            for v in table {
                row.push(v * &weight);
            }
        }
    }
    Ok(DiscreteChannel::from_rational(labels, rows)?)
}

/// Exact check that the conditional law of the posterior given X = c depends
/// only on c₀: the posterior-valued output distribution is compared as a
/// multiset across all members of each coset.
pub fn representative_independent(
    code: &LinearCode,
    w: &DiscreteChannel,
) -> Result<bool, CosetError> {
    check_inputs(code, w)?;
    check_budget(code, w)?;
    let basis = coset_basis(code)?;
    let cosets: Result<Vec<_>, _> = (0..code.q()).map(|x0| basis.enumerate(x0)).collect();
    let cosets = cosets?;
    let unerased: Vec<usize> = (1..code.n).collect();
    let tables = likelihood_tables(&cosets, w, &unerased);
    let n_out = tables[0].len();
    let posterior = |y: usize| -> Option<Vec<Rat>> {
        let s: Rat = tables.iter().map(|t| &t[y]).sum();
        if s.is_zero() {
            return None;
        }
        Some(tables.iter().map(|t| &t[y] / &s).collect())
    };
    for words in &cosets {
        let mut reference: Option<HashMap<Vec<Rat>, Rat>> = None;
        for word in words {
            let mut dist: HashMap<Vec<Rat>, Rat> = HashMap::new();
            for y in 0..n_out {
                let Some(post) = posterior(y) else { continue };
                let mut prob = Rat::one();
                let mut idx = y;
                for &i in &unerased {
                    let digit = idx % w.n_outputs();
                    idx /= w.n_outputs();
                    prob *= w.entry(word[i], digit);
                    if prob.is_zero() {
                        break;
                    }
                }
                if prob.is_zero() {
                    continue;
                }
                *dist.entry(post).or_insert_with(Rat::zero) += prob;
            }
            match &reference {
                None => reference = Some(dist),
                Some(r) => {
                    if r != &dist {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// tr Q(t) against its capacity-rate lower bound q^(C − R/(1−t)).
#[derive(Debug, Clone, Serialize)]
pub struct WeakBoundReport {
    pub t: f64,
    pub tr_q: f64,
    pub tr_q_exact: String,
    pub lower_bound: f64,
    pub capacity: f64,
    pub rate: f64,
    /// True when R < C and t < 1 − R/C, the bound's domain.
    pub in_range: bool,
    pub holds: Option<bool>,
}

pub fn weak_bound_check(an: &CosetAnalysis, t: &Rat) -> Result<WeakBoundReport, CosetError> {
    if t < &Rat::zero() || t > &Rat::one() {
        return Err(CosetError::Channel(ChannelError::TOutOfRange(format_rat(t))));
    }
    let tr = an.trace_at(t);
    let c = capacity_uniform(&an.w);
    let r = an.rate();
    let tf = rat_to_f64(t);
    let in_range = r < c && tf < 1.0 - r / c;
    let lower_bound = (an.q() as f64).powf(c - r / (1.0 - tf));
    let tr_f = rat_to_f64(&tr);
    Ok(WeakBoundReport {
        t: tf,
        tr_q: tr_f,
        tr_q_exact: format_rat(&tr),
        lower_bound,
        capacity: c,
        rate: r,
        in_range,
        holds: if in_range { Some(tr_f >= lower_bound - 1e-12) } else { None },
    })
}

/// Which hypothesis of the discrepancy SER bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SerBoundCase {
    DoublyTransitive,
    TransitivePrime,
    NotApplicable,
}

/// Exact coset-channel SER at t with the discrepancy bound
/// 4·δ_avg/(1 − R/C) evaluated for the unerased channel when its hypotheses
/// hold.
#[derive(Debug, Clone, Serialize)]
pub struct CosetSerReport {
    pub t: f64,
    pub ser: f64,
    pub ser_exact: String,
    pub ser_at_zero: f64,
    pub delta_avg: f64,
    pub rate: f64,
    pub capacity: f64,
    /// δ_avg ≤ (1 − R/C)(q^((C−R)/2) − 1)/q.
    pub gate_holds: bool,
    pub symmetry: Option<Transitivity>,
    pub case: SerBoundCase,
    pub applicable: bool,
    pub bound: Option<f64>,
    pub holds: Option<bool>,
}

pub fn coset_ser(an: &CosetAnalysis, t: &Rat) -> Result<CosetSerReport, CosetError> {
    if t < &Rat::zero() || t > &Rat::one() {
        return Err(CosetError::Channel(ChannelError::TOutOfRange(format_rat(t))));
    }
    let ser_poly = an.ser_poly();
    let ser_exact = ser_poly.evaluate(t);
    let ser_zero = rat_to_f64(&ser_poly.evaluate(&Rat::zero()));
    let delta_avg = rat_to_f64(&an.delta_avg());
    let c = capacity_uniform(&an.w);
    let r = an.rate();
    let q = an.q() as f64;
    let slack = 1.0 - r / c;
    let gate_holds = r < c && delta_avg <= slack * (q.powf((c - r) / 2.0) - 1.0) / q;
    let symmetry = if an.q() <= 8 {
        let v = coset_channel(&an.code, &an.w)?;
        Some(crate::perm::transitivity(&symmetry_group(&v)?))
    } else {
        None
    };
    let case = match symmetry {
        Some(Transitivity::DoublyTransitive) => SerBoundCase::DoublyTransitive,
        Some(Transitivity::Transitive)
            if is_prime(an.q() as u32) && delta_avg < slack / (8.0 * q * q) =>
        {
            SerBoundCase::TransitivePrime
        }
        _ => SerBoundCase::NotApplicable,
    };
    let applicable = gate_holds && case != SerBoundCase::NotApplicable;
    let bound = if r < c { Some(4.0 * delta_avg / slack) } else { None };
    Ok(CosetSerReport {
        t: rat_to_f64(t),
        ser: rat_to_f64(&ser_exact),
        ser_exact: format_rat(&ser_exact),
        ser_at_zero: ser_zero,
        delta_avg,
        rate: r,
        capacity: c,
        gate_holds,
        symmetry,
        case,
        applicable,
        bound: if applicable { bound } else { None },
        holds: if applicable { bound.map(|b| ser_zero <= b) } else { None },
    })
}

/// One term of the entropy-rate cover bound.
#[derive(Debug, Clone, Serialize)]
pub struct RateCoverTerm {
    pub set: Vec<usize>,
    pub dim: usize,
    pub excess: f64,
}

/// δ_avg ≤ (2 ln q / λ²_min) · Σ_B (H(X_B)/|B| − R), with H(X_B) the base-q
/// entropy log_q|𝒞_B| of the uniform punctured codeword.
#[derive(Debug, Clone, Serialize)]
pub struct RateCoverReport {
    pub lambda_min: f64,
    pub rate: f64,
    pub terms: Vec<RateCoverTerm>,
    pub sum_excess: f64,
    pub sum_excess_exact: String,
    pub bound: f64,
}

pub fn rate_cover_bound(
    code: &LinearCode,
    w: &DiscreteChannel,
    family: &[Vec<usize>],
) -> Result<RateCoverReport, CosetError> {
    check_inputs(code, w)?;
    check_family(code.n, family)?;
    let lambda_min = overlap(w).lambda_min();
    if lambda_min <= 0.0 {
        return Err(CosetError::ZeroMinPIC);
    }
    let q = code.q() as f64;
    let rate = rat(code.dimension() as i64, code.n as i64);
    let mut terms = Vec::new();
    let mut sum = Rat::zero();
    for set in family {
        let sub = crate::grm::puncture(code, set)?;
        let dim = sub.dimension();
        let excess = rat(dim as i64, set.len() as i64) - &rate;
        sum += &excess;
        terms.push(RateCoverTerm {
            set: set.clone(),
            dim,
            excess: rat_to_f64(&excess),
        });
    }
    let sum_f = rat_to_f64(&sum);
    Ok(RateCoverReport {
        lambda_min,
        rate: rat_to_f64(&rate),
        terms,
        sum_excess: sum_f,
        sum_excess_exact: format_rat(&sum),
        bound: 2.0 * q.ln() / (lambda_min * lambda_min) * sum_f,
    })
}

fn check_family(n: usize, family: &[Vec<usize>]) -> Result<(), CosetError> {
    if family.is_empty() {
        return Err(CosetError::IntersectionNotZero);
    }
    for set in family {
        if set.is_empty() || set.windows(2).any(|w| w[0] >= w[1]) || *set.last().unwrap() >= n {
            return Err(CosetError::Grm(GrmError::InvalidIndexSet(
                "family sets must be strictly increasing and within the code length".into(),
            )));
        }
    }
    let mut inter: Vec<usize> = family[0].clone();
    for set in &family[1..] {
        inter.retain(|i| set.binary_search(i).is_ok());
    }
    if inter != vec![0] {
        return Err(CosetError::IntersectionNotZero);
    }
    Ok(())
}

/// The per-subset discrepancy terms T_A(t) = (tr Q(t) − tr Q_A(t))/q for
/// A = B∖{0}, each a degree-(N−1) polynomial. Their sum dominates δ(t)
/// pointwise on [0,1].
pub fn discrepancy_decomposition(
    an: &CosetAnalysis,
    family: &[Vec<usize>],
) -> Result<Vec<ErasurePolynomial>, CosetError> {
    check_family(an.n, family)?;
    let full = an.trace_poly();
    let inv_q = rat(1, an.q() as i64);
    let d = an.n - 1;
    family
        .iter()
        .map(|set| {
            let a_set: Vec<usize> = set.iter().copied().filter(|&p| p != 0).collect();
            let sub = an.sub_trace_poly(&a_set).elevate(d - a_set.len());
            Ok(full.sub(&sub).scale(&inv_q))
        })
        .collect()
}

/// The subset family from the generalized Reed-Muller discrepancy bound:
/// k = ⌈½ log_q m⌉, B₀ the first q^(m−k) positions, and B_i = [q^m]∖{i} for
/// 0 < i < q^(m−k).
pub fn grm_cover_family(q: usize, m: usize) -> Result<(usize, Vec<Vec<usize>>), CosetError> {
    if m < q * q {
        return Err(CosetError::MTooSmall { m, q });
    }
    let mut k = 0usize;
    while (q as u128).pow(2 * k as u32) < m as u128 {
        k += 1;
    }
    let n = (q as u128).pow(m as u32);
    let prefix = (q as u128).pow((m - k) as u32);
    if n > (1 << 30) {
        return Err(CosetError::TooLargeForExact(format!("q^m = {n} positions")));
    }
    let n = n as usize;
    let prefix = prefix as usize;
    let mut family = vec![(0..prefix).collect::<Vec<_>>()];
    for i in 1..prefix {
        family.push((0..n).filter(|&j| j != i).collect());
    }
    Ok((k, family))
}

/// The closed-form discrepancy bound for RM_q(r, m) on a channel with minimal
/// overlap eigenvalue λ: (2 ln q / λ²)·(7 + 3 log_q m)/√m, valid for m ≥ q².
pub fn dexit_grm_bound(q: usize, m: usize, lambda_min: f64) -> Result<f64, CosetError> {
    if m < q * q {
        return Err(CosetError::MTooSmall { m, q });
    }
    if lambda_min <= 0.0 {
        return Err(CosetError::ZeroMinPIC);
    }
    let qf = q as f64;
    let mf = m as f64;
    let log_q_m = mf.ln() / qf.ln();
    Ok(2.0 * qf.ln() / (lambda_min * lambda_min) * (7.0 + 3.0 * log_q_m) / mf.sqrt())
}

#[cfg(test)]
mod tests;
