//! Strong-concavity gap for Markov chains S − T − X − Y.

use super::{info, overlap, ChannelError, DiscreteChannel};
use crate::rat::{rat_from_f64, rat_to_f64, Rat};
use num::{One, Signed, Zero};

/// An explicit joint distribution of (S, T, X) over finite alphabets, with X
/// feeding a channel to produce Y.
#[derive(Debug, Clone)]
pub struct JointChain {
    pub ns: usize,
    pub nt: usize,
    pub nx: usize,
    /// p(s,t,x) indexed by ((s·nt) + t)·nx + x.
    p: Vec<Rat>,
}

impl JointChain {
    pub fn new(ns: usize, nt: usize, nx: usize, p: Vec<Rat>) -> Result<Self, ChannelError> {
        if ns == 0 || nt == 0 || nx == 0 || p.len() != ns * nt * nx {
            return Err(ChannelError::InvalidDimensions(format!(
                "joint table length {} != {}·{}·{}",
                p.len(),
                ns,
                nt,
                nx
            )));
        }
        if p.iter().any(|v| v.is_negative()) {
            return Err(ChannelError::InvalidPrior("negative joint mass".into()));
        }
        let total: Rat = p.iter().sum();
        if total != Rat::one() {
            return Err(ChannelError::InvalidPrior("joint mass does not sum to 1".into()));
        }
        Ok(JointChain { ns, nt, nx, p })
    }

    pub fn prob(&self, s: usize, t: usize, x: usize) -> &Rat {
        &self.p[(s * self.nt + t) * self.nx + x]
    }

    fn marginal_st(&self, s: usize, t: usize) -> Rat {
        (0..self.nx).map(|x| self.prob(s, t, x).clone()).sum()
    }

    fn marginal_t(&self, t: usize) -> Rat {
        (0..self.ns).map(|s| self.marginal_st(s, t)).sum()
    }

    fn marginal_tx(&self, t: usize, x: usize) -> Rat {
        (0..self.ns).map(|s| self.prob(s, t, x).clone()).sum()
    }

    /// Conditional pmf of X given S = s (None when p(s) = 0).
    fn x_given_s(&self, s: usize) -> Option<Vec<Rat>> {
        let ps: Rat = (0..self.nt).map(|t| self.marginal_st(s, t)).sum();
        if ps.is_zero() {
            return None;
        }
        Some(
            (0..self.nx)
                .map(|x| {
                    (0..self.nt).map(|t| self.prob(s, t, x).clone()).sum::<Rat>() / &ps
                })
                .collect(),
        )
    }

    fn x_given_t(&self, t: usize) -> Option<Vec<Rat>> {
        let pt = self.marginal_t(t);
        if pt.is_zero() {
            return None;
        }
        Some((0..self.nx).map(|x| self.marginal_tx(t, x) / &pt).collect())
    }

    /// Checks the factorization p(s,t,x)·p(t) = p(s,t)·p(t,x) within `tol`.
    fn check_markov(&self, tol: &Rat) -> Result<(), ChannelError> {
        for t in 0..self.nt {
            let pt = self.marginal_t(t);
            for s in 0..self.ns {
                let pst = self.marginal_st(s, t);
                for x in 0..self.nx {
                    let lhs = self.prob(s, t, x) * &pt;
                    let rhs = &pst * self.marginal_tx(t, x);
                    if (lhs - rhs).abs() > *tol {
                        return Err(ChannelError::NotMarkov(format!(
                            "p(x|s,t) != p(x|t) at s={s}, t={t}, x={x}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Both sides of the strong-concavity inequality, in qits.
#[derive(Debug, Clone, Copy)]
pub struct GapReport {
    /// I(X;Y|S) − I(X;Y|T).
    pub lhs_qits: f64,
    /// (λ²_{q−1} / 2 ln q) · E‖E[e_X|T] − E[e_X|S]‖².
    pub rhs: f64,
}

/// Evaluates both sides of the inequality
/// I(X;Y|S) − I(X;Y|T) ≥ (λ²_{q−1}/2 ln q)·E‖E[e_X|T] − E[e_X|S]‖²
/// for a chain S − T − X observed through `w`. The Markov factorization is
/// required to hold within 1e-12.
pub fn strong_concavity_gap(
    chain: &JointChain,
    w: &DiscreteChannel,
) -> Result<GapReport, ChannelError> {
    if chain.nx != w.q {
        return Err(ChannelError::InputSizeMismatch(chain.nx, w.q));
    }
    chain.check_markov(&rat_from_f64(1e-12).unwrap())?;

    let cond_mi_given_s: f64 = (0..chain.ns)
        .map(|s| {
            let ps: Rat = (0..chain.nt).map(|t| chain.marginal_st(s, t)).sum();
            match chain.x_given_s(s) {
                Some(prior) => {
                    rat_to_f64(&ps)
                        * info(w, &prior).expect("conditional pmf is a valid prior")
                            .mutual_information_qits
                }
                None => 0.0,
            }
        })
        .sum();
    let cond_mi_given_t: f64 = (0..chain.nt)
        .map(|t| {
            let pt = chain.marginal_t(t);
            match chain.x_given_t(t) {
                Some(prior) => {
                    rat_to_f64(&pt)
                        * info(w, &prior).expect("conditional pmf is a valid prior")
                            .mutual_information_qits
                }
                None => 0.0,
            }
        })
        .sum();

    let mut expected_sq = Rat::zero();
    for s in 0..chain.ns {
        let Some(px_s) = chain.x_given_s(s) else { continue };
        for t in 0..chain.nt {
            let pst = chain.marginal_st(s, t);
            if pst.is_zero() {
                continue;
            }
            let px_t = chain.x_given_t(t).expect("p(t) > 0 when p(s,t) > 0");
            let sq: Rat = px_t
                .iter()
                .zip(&px_s)
                .map(|(a, b)| {
                    let d = a - b;
                    &d * &d
                })
                .sum();
            expected_sq += pst * sq;
        }
    }

    let lambda_min = overlap(w).lambda_min();
    let lnq = (w.q as f64).ln();
    Ok(GapReport {
        lhs_qits: cond_mi_given_s - cond_mi_given_t,
        rhs: lambda_min * lambda_min / (2.0 * lnq) * rat_to_f64(&expected_sq),
    })
}
