//! Exact-arithmetic toolkit for generalized Reed-Muller codes over small
//! fields, symmetric discrete channels, and coset-channel analysis.
//!
//! The crate is organized bottom-up: finite-field arithmetic ([`gf`]),
//! permutation groups on channel inputs ([`perm`]), discrete memoryless
//! channels with exact rational transition matrices ([`channel`]),
//! generalized Reed-Muller codes ([`grm`]), coset-channel and EXIT-curve
//! analysis ([`coset`]), and a self-checking verification suite ([`verify`]).

pub mod channel;
pub mod coset;
pub mod gf;
pub mod grm;
pub mod linalg;
pub mod perm;
pub mod rat;
pub mod verify;
