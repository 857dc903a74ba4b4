//! Exact Kuperberg and Turaev-Viro invariants of closed 3-manifolds.
//!
//! Algebraic data is generic over [`scalars::Scalar`]; each scalar type
//! carries a field context (`S::Field`). The aliases below fix the common
//! choices.

pub mod fusion;
pub mod group;
pub mod heegaard;
pub mod hopf;
pub mod kuperberg;
pub mod scalars;

use scalars::{ExactScalar, Fp, NfElem, Rational};

pub type QHopf = hopf::HopfData<Rational>;
pub type FpHopf = hopf::HopfData<Fp>;
pub type NfHopf = hopf::HopfData<NfElem>;
/// Hopf data whose field is chosen at runtime.
pub type ExactHopf = hopf::HopfData<ExactScalar>;

pub type QFusion = fusion::FusionData<Rational>;
pub type NfFusion = fusion::FusionData<NfElem>;
pub type ExactFusion = fusion::FusionData<ExactScalar>;
