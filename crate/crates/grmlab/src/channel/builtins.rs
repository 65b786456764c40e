//! Constructors for the standard parametric channels.

use super::{erasure_compose, ChannelError, DiscreteChannel};
use crate::rat::{rat_int, Rat};
use num::{One, Zero};

fn digit_labels(q: usize) -> Vec<String> {
    (0..q).map(|y| y.to_string()).collect()
}

/// The noiseless channel Y = X.
pub fn identity(q: usize) -> DiscreteChannel {
    let matrix = (0..q)
        .map(|x| {
            (0..q)
                .map(|y| if x == y { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    DiscreteChannel::from_rational(digit_labels(q), matrix)
        .expect("identity rows are valid distributions")
}

/// A channel whose output is independent of its input.
pub fn uninformative(q: usize) -> DiscreteChannel {
    let matrix = vec![vec![Rat::one()]; q];
    DiscreteChannel::from_rational(vec!["*".to_string()], matrix)
        .expect("single sure output is a valid distribution")
}

/// q-ary symmetric channel: the input survives with probability 1−p and is
/// otherwise replaced by one of the q−1 other symbols uniformly.
pub fn qsc(q: usize, p: &Rat) -> Result<DiscreteChannel, ChannelError> {
    if q < 2 {
        return Err(ChannelError::InvalidDimensions("qsc needs q >= 2".into()));
    }
    let off = p / rat_int(q as i64 - 1);
    let keep = Rat::one() - p;
    let matrix = (0..q)
        .map(|x| {
            (0..q)
                .map(|y| if x == y { keep.clone() } else { off.clone() })
                .collect()
        })
        .collect();
    DiscreteChannel::from_rational(digit_labels(q), matrix)
}

/// Binary symmetric channel with crossover probability p.
pub fn bsc(p: &Rat) -> Result<DiscreteChannel, ChannelError> {
    qsc(2, p)
}

/// q-ary erasure channel: the input is erased with probability ε.
pub fn qec(q: usize, eps: &Rat) -> Result<DiscreteChannel, ChannelError> {
    erasure_compose(&identity(q), eps)
}

/// Binary Z-channel: input 0 is reproduced faithfully, input 1 flips to 0
/// with probability α.
pub fn z_channel(alpha: &Rat) -> Result<DiscreteChannel, ChannelError> {
    let matrix = vec![
        vec![Rat::one(), Rat::zero()],
        vec![alpha.clone(), Rat::one() - alpha],
    ];
    DiscreteChannel::from_rational(digit_labels(2), matrix)
}

/// Additive-noise channel on the *integers* mod q: Y = X + N (mod q) with
/// N ~ `noise`. Note this uses cyclic addition, not 𝔽_q addition, so for
/// prime-power q it is genuinely different from a field-additive channel.
pub fn mod_additive(q: usize, noise: &[Rat]) -> Result<DiscreteChannel, ChannelError> {
    if q < 2 || noise.len() != q {
        return Err(ChannelError::InvalidDimensions(format!(
            "noise pmf must have length q = {q}"
        )));
    }
    let matrix = (0..q)
        .map(|x| (0..q).map(|y| noise[(y + q - x) % q].clone()).collect())
        .collect();
    DiscreteChannel::from_rational(digit_labels(q), matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn qsc_rows() {
        let w = qsc(3, &rat(1, 10)).unwrap();
        assert_eq!(*w.entry(0, 0), rat(9, 10));
        assert_eq!(*w.entry(0, 1), rat(1, 20));
        assert_eq!(*w.entry(2, 1), rat(1, 20));
    }

    #[test]
    fn qec_has_erasure_column() {
        let w = qec(3, &rat(1, 4)).unwrap();
        assert_eq!(w.n_outputs(), 4);
        assert_eq!(w.outputs[3], super::super::ERASURE_LABEL);
        assert_eq!(*w.entry(1, 1), rat(3, 4));
        assert_eq!(*w.entry(1, 3), rat(1, 4));
        assert_eq!(*w.entry(1, 0), rat(0, 1));
    }

    #[test]
    fn z_channel_shape() {
        let w = z_channel(&rat(1, 3)).unwrap();
        assert_eq!(*w.entry(0, 0), rat(1, 1));
        assert_eq!(*w.entry(1, 0), rat(1, 3));
        assert_eq!(*w.entry(1, 1), rat(2, 3));
    }

    #[test]
    fn mod_additive_uses_cyclic_shifts() {
        let noise = vec![rat(1, 2), rat(0, 1), rat(1, 2), rat(0, 1)];
        let w = mod_additive(4, &noise).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(*w.entry(x, y), noise[(y + 4 - x) % 4]);
            }
        }
        assert_eq!(*w.entry(3, 1), rat(1, 2));
        assert_eq!(*w.entry(3, 0), rat(0, 1));
    }

    #[test]
    fn identity_and_uninformative() {
        let w = identity(4);
        assert_eq!(w.n_outputs(), 4);
        assert_eq!(*w.entry(2, 2), rat(1, 1));
        let u = uninformative(4);
        assert_eq!(u.n_outputs(), 1);
    }
}
