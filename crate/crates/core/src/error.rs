use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid Lehmer pair (R, Q) = ({r}, {q}): {reason}")]
    InvalidPair {
        r: String,
        q: String,
        reason: String,
    },

    #[error("invalid index s = {0}: {1}")]
    InvalidIndex(u64, &'static str),

    #[error("invalid discriminant {0}: {1}")]
    InvalidDiscriminant(String, &'static str),

    #[error("invalid descent instance: {0}")]
    InvalidInstance(String),

    /// No witness exists for an instance satisfying every precondition of
    /// the descent lemma. This falsifies the lemma and must never be ignored.
    #[error("no descent witness for d = {d}, k = {k}, X = {x}, Y = {y}, Z = {z}")]
    NoWitness {
        d: u64,
        k: u64,
        x: String,
        y: String,
        z: u32,
    },

    #[error("invalid candidate tuple: {0}")]
    InvalidCandidate(String),

    /// Square-free reduction reached `u = 1`, the case settled by the known
    /// classification of `X^2 + 2^L 3^M = Y^N` (only `N = 3, 4` occur).
    #[error("exponent {0} is a perfect square; the square-free part u = 1 falls under the X^2 + 2^L 3^M = Y^N catalog (N = 3 or 4), incompatible with gcd(N, 6) = 1")]
    SquareExponent(u64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}
