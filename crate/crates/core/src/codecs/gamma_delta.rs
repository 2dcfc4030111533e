//! Elias γ and δ baselines.
//!
//! γ writes ⌊log2 n⌋ zeros then the binary form of n; δ writes γ(β(n))
//! followed by the β(n)−1 low bits of n.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::{bit_len_u64, CodecError, PosInt};
use crate::bits::BitString;

pub fn gamma_encode(n: &PosInt) -> BitString {
    let bits = n.bit_len();
    let mut out = BitString::with_capacity((2 * bits - 1) as usize);
    for _ in 0..bits - 1 {
        out.push(false);
    }
    out.push_biguint_msb(n.value(), bits);
    out
}

pub fn gamma_decode(stream: &BitString, start: usize) -> Result<(PosInt, usize), CodecError> {
    let mut zeros = 0usize;
    loop {
        match stream.get(start + zeros) {
            None => return Err(CodecError::TruncatedStream { position: start + zeros }),
            Some(false) => zeros += 1,
            Some(true) => break,
        }
    }
    let value_bits = zeros + 1;
    let value = stream
        .read_biguint_msb(start + zeros, value_bits)
        .ok_or(CodecError::TruncatedStream { position: stream.len() })?;
    Ok((
        PosInt::new(value).expect("leading 1 bit"),
        zeros + value_bits,
    ))
}

/// γ codelength: 2⌊log2 n⌋ + 1.
pub fn gamma_len(n: &PosInt) -> u64 {
    2 * (n.bit_len() - 1) + 1
}

pub fn delta_encode(n: &PosInt) -> BitString {
    let bits = n.bit_len();
    let mut out = gamma_encode(&PosInt::from_u64(bits));
    out.push_biguint_msb(n.value(), bits - 1); // low bits, leading 1 implied
    out
}

pub fn delta_decode(stream: &BitString, start: usize) -> Result<(PosInt, usize), CodecError> {
    let (bits, header) = gamma_decode(stream, start)?;
    let bits = bits.to_u64().and_then(|b| b.to_usize()).ok_or(
        CodecError::TruncatedStream { position: start },
    )?;
    let low = stream
        .read_biguint_msb(start + header, bits - 1)
        .ok_or(CodecError::TruncatedStream { position: stream.len() })?;
    let value = (BigUint::one() << (bits - 1)) | low;
    Ok((
        PosInt::new(value).expect("has its leading bit set"),
        header + bits - 1,
    ))
}

/// δ codelength: ⌊log2 n⌋ + 2⌊log2(⌊log2 n⌋ + 1)⌋ + 1.
pub fn delta_len(n: &PosInt) -> u64 {
    let floor_log = n.bit_len() - 1;
    floor_log + 2 * u64::from(bit_len_u64(floor_log + 1) - 1) + 1
}

pub(crate) fn gamma_len_u64(n: u64) -> u32 {
    2 * (bit_len_u64(n) - 1) + 1
}

pub(crate) fn delta_len_u64(n: u64) -> u32 {
    let floor_log = bit_len_u64(n) - 1;
    floor_log + 2 * (bit_len_u64(u64::from(floor_log) + 1) - 1) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_encode(&PosInt::from_u64(1)).to_string(), "1");
        assert_eq!(gamma_encode(&PosInt::from_u64(5)).to_string(), "00101");
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_encode(&PosInt::from_u64(5)).to_string(), "01101");
        assert_eq!(delta_encode(&PosInt::from_u64(1)).to_string(), "1");
    }

    #[test]
    fn lengths_match_formulas() {
        for n in 1..5000u64 {
            let v = PosInt::from_u64(n);
            assert_eq!(gamma_encode(&v).len() as u64, gamma_len(&v));
            assert_eq!(delta_encode(&v).len() as u64, delta_len(&v));
            assert_eq!(u64::from(gamma_len_u64(n)), gamma_len(&v));
            assert_eq!(u64::from(delta_len_u64(n)), delta_len(&v));
        }
    }

    #[test]
    fn roundtrips() {
        for n in 1..5000u64 {
            let v = PosInt::from_u64(n);
            let g = gamma_encode(&v);
            assert_eq!(gamma_decode(&g, 0).unwrap(), (v.clone(), g.len()));
            let d = delta_encode(&v);
            assert_eq!(delta_decode(&d, 0).unwrap(), (v, d.len()));
        }
    }

    #[test]
    fn truncated() {
        let s: BitString = "00".parse().unwrap();
        assert!(matches!(
            gamma_decode(&s, 0),
            Err(CodecError::TruncatedStream { .. })
        ));
        let s: BitString = "011".parse().unwrap();
        assert!(matches!(
            delta_decode(&s, 0),
            Err(CodecError::TruncatedStream { .. })
        ));
    }
}
