use thiserror::Error;

use crate::freudenthal::BasisId;
use crate::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight basis mismatch: expected {expected:?}, found {found:?}")]
    BasisMismatch { expected: BasisId, found: BasisId },

    #[error("weight has {found} coordinates but basis {basis:?} has rank {rank}")]
    RankMismatch {
        basis: BasisId,
        rank: usize,
        found: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("({z1},{z2},{z3}) is not a spherical triple")]
    NotSpherical { z1: i64, z2: i64, z3: i64 },

    #[error("metric parameters must be positive (t0 = {t0}, t1 = {t1})")]
    NonPositiveMetric { t0: Rational, t1: Rational },

    #[error("parallel point t0 = t1 = {0}: r1 is undefined (infinite)")]
    ParallelPoint(Rational),

    #[error("invalid normal parameters r0 = {r0}, r1 = {r1}: need r0 > 0 and r1 in (-inf, -r0) or (0, inf)")]
    InvalidNormalParams { r0: Rational, r1: Rational },

    #[error("invalid Sasaki parameters alpha = {alpha}, delta = {delta}: {reason}")]
    InvalidSasakiParams {
        alpha: Rational,
        delta: Rational,
        reason: &'static str,
    },

    #[error("t1 = {0} is not the square of a rational number, delta = 1/sqrt(t1) is irrational")]
    NotARationalSquare(Rational),

    #[error("spectral bound must be nonnegative, got {0}")]
    NegativeBound(Rational),

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("oracle bound exceeded: requested z1 = {requested}, limit is {limit}")]
    OracleBoundExceeded { requested: u32, limit: u32 },
}
