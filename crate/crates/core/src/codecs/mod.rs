//! Universal integer codecs over arbitrary-precision positive integers.
//!
//! The ω codec is the primary subject; γ and δ are included as baselines.
//! All codewords are MSB-first [`BitString`]s and all operations are pure.

mod gamma_delta;
mod omega;

pub use gamma_delta::{
    delta_decode, delta_encode, delta_len, gamma_decode, gamma_encode, gamma_len,
};
pub use omega::{omega_decode, omega_encode, omega_len};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::bits::BitString;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    /// Positive integers start at 1.
    #[error("integer must be >= 1")]
    Zero,
    /// The stream ended in the middle of a codeword.
    #[error("bit stream ends mid-codeword at bit {position}")]
    TruncatedStream { position: usize },
}

/// An arbitrary-precision integer known to be ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosInt(BigUint);

impl PosInt {
    pub fn new(value: BigUint) -> Result<Self, CodecError> {
        if value == BigUint::ZERO {
            return Err(CodecError::Zero);
        }
        Ok(Self(value))
    }

    /// Panics if `value` is zero.
    pub fn from_u64(value: u64) -> Self {
        assert!(value >= 1, "PosInt requires value >= 1");
        Self(BigUint::from(value))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Binary length β(n) = ⌊log2 n⌋ + 1, computed exactly.
    pub fn bit_len(&self) -> u64 {
        self.0.bits()
    }
}

impl From<PosInt> for BigUint {
    fn from(n: PosInt) -> Self {
        n.0
    }
}

impl TryFrom<BigUint> for PosInt {
    type Error = CodecError;

    fn try_from(value: BigUint) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl fmt::Display for PosInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parse error for decimal positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePosIntError {
    #[error("not a decimal integer: {0}")]
    NotANumber(String),
    #[error("integer must be >= 1")]
    Zero,
}

impl FromStr for PosInt {
    type Err = ParsePosIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: BigUint = s
            .parse()
            .map_err(|_| ParsePosIntError::NotANumber(s.to_owned()))?;
        PosInt::new(v).map_err(|_| ParsePosIntError::Zero)
    }
}

/// β(n) = ⌊log2 n⌋ + 1: the number of bits in the binary representation.
pub fn beta(n: &PosInt) -> u64 {
    n.bit_len()
}

pub(crate) fn bit_len_u64(v: u64) -> u32 {
    debug_assert!(v >= 1);
    64 - v.leading_zeros()
}

/// Iterated base-2 logarithm: how many times log2 must be applied before the
/// value drops to ≤ 1.
pub fn log_star2(x: f64) -> u32 {
    assert!(x > 0.0 && x.is_finite(), "log_star2 requires finite x > 0");
    let mut v = x;
    let mut count = 0;
    while v > 1.0 {
        v = v.log2();
        count += 1;
    }
    count
}

/// Encodes each integer in turn into one concatenated stream.
pub fn encode_sequence<'a>(
    encode: impl Fn(&PosInt) -> BitString,
    values: impl IntoIterator<Item = &'a PosInt>,
) -> BitString {
    let mut out = BitString::new();
    for v in values {
        out.append(&encode(v));
    }
    out
}

/// Greedily decodes codewords until the stream is exhausted.
pub fn decode_sequence(
    decode: impl Fn(&BitString, usize) -> Result<(PosInt, usize), CodecError>,
    stream: &BitString,
) -> Result<Vec<PosInt>, CodecError> {
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < stream.len() {
        let (value, consumed) = decode(stream, pos)?;
        out.push(value);
        pos += consumed;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&PosInt::from_u64(1)), 1);
        assert_eq!(beta(&PosInt::from_u64(4)), 3);
        let big = PosInt::new(BigUint::from(1u8) << 200).unwrap();
        assert_eq!(beta(&big), 201);
    }

    #[test]
    fn posint_rejects_zero() {
        assert_eq!(PosInt::new(BigUint::ZERO), Err(CodecError::Zero));
        assert_eq!("0".parse::<PosInt>(), Err(ParsePosIntError::Zero));
        assert!("12abc".parse::<PosInt>().is_err());
        assert_eq!("17".parse::<PosInt>().unwrap(), PosInt::from_u64(17));
    }

    #[test]
    fn log_star2_examples() {
        assert_eq!(log_star2(1.0), 0);
        assert_eq!(log_star2(16.0), 3);
        assert_eq!(log_star2(65536.0), 4);
        assert_eq!(log_star2(2.0), 1);
        assert_eq!(log_star2(5.0), 3); // 5 → 2.32 → 1.21 → 0.28
    }
}
