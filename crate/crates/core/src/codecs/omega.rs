//! Elias ω: recursive self-delimiting integer code.
//!
//! Encoding prepends the binary form of each successive length group and
//! terminates with a single 0 bit; decoding reads groups of growing size
//! until it meets that 0.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::{bit_len_u64, CodecError, PosInt};
use crate::bits::BitString;

/// Exact ω codeword for `n`.
pub fn omega_encode(n: &PosInt) -> BitString {
    let mut out = BitString::with_capacity(omega_len(n) as usize);
    // Collect the group chain n, β(n)−1, β(β(n)−1)−1, … down to (but not
    // including) 1, then emit it smallest group first.
    match n.to_u64() {
        Some(head) => {
            push_groups_u64(&mut out, head);
        }
        None => {
            let big = n.value();
            push_groups_u64(&mut out, big.bits() - 1);
            out.push_biguint_msb(big, big.bits());
        }
    }
    out.push(false); // termination marker
    out
}

fn push_groups_u64(out: &mut BitString, head: u64) {
    let mut chain = Vec::new();
    let mut v = head;
    while v > 1 {
        chain.push(v);
        v = u64::from(bit_len_u64(v)) - 1;
    }
    for &group in chain.iter().rev() {
        out.push_u64_msb(group, bit_len_u64(group));
    }
}

/// Decodes one ω codeword starting at bit `start`.
///
/// Returns the integer and the exact number of bits consumed.
pub fn omega_decode(stream: &BitString, start: usize) -> Result<(PosInt, usize), CodecError> {
    let mut pos = start;
    let mut value = BigUint::one();
    loop {
        match stream.get(pos) {
            None => return Err(CodecError::TruncatedStream { position: pos }),
            Some(false) => {
                return Ok((PosInt::new(value).expect("groups start with a 1 bit"), pos + 1 - start))
            }
            Some(true) => {
                // next group is value+1 bits long, including this leading 1
                let group_bits = value
                    .to_usize()
                    .and_then(|v| v.checked_add(1))
                    .filter(|&g| pos + g <= stream.len())
                    .ok_or(CodecError::TruncatedStream { position: pos })?;
                value = stream
                    .read_biguint_msb(pos, group_bits)
                    .expect("range checked above");
                pos += group_bits;
            }
        }
    }
}

/// ω codelength in bits: 1 + Σ β(n_j) over the chain n_{j+1} = β(n_j) − 1.
///
/// Always equals `omega_encode(n).len()`.
pub fn omega_len(n: &PosInt) -> u64 {
    match n.to_u64() {
        Some(v) => u64::from(omega_len_u64(v)),
        None => {
            let b = n.bit_len();
            b + u64::from(omega_len_u64(b - 1))
        }
    }
}

/// Fast path for machine-sized arguments; the Kraft engine leans on this.
pub(crate) fn omega_len_u64(n: u64) -> u32 {
    debug_assert!(n >= 1);
    let mut total = 1;
    let mut v = n;
    while v > 1 {
        let b = bit_len_u64(v);
        total += b;
        v = u64::from(b) - 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(n: u64) -> String {
        omega_encode(&PosInt::from_u64(n)).to_string()
    }

    #[test]
    fn encode_hand_executed_examples() {
        assert_eq!(enc(1), "0");
        assert_eq!(enc(5), "101010");
        assert_eq!(enc(16), "10100100000");
        assert_eq!(enc(16).len(), 11);
        assert_eq!(enc(2), "100");
        assert_eq!(enc(3), "110");
    }

    #[test]
    fn len_examples_and_recursion() {
        let len = |n: u64| omega_len(&PosInt::from_u64(n));
        assert_eq!(len(1), 1);
        assert_eq!(len(4), 6);
        assert_eq!(len(100), 13);
        // §-style recursion: ℓ(n) = ℓ(β(n)−1) + β(n)
        for n in 2..5000u64 {
            let b = PosInt::from_u64(n).bit_len();
            assert_eq!(len(n), len(b - 1) + b);
        }
    }

    #[test]
    fn decode_examples() {
        let s: BitString = "101010".parse().unwrap();
        assert_eq!(omega_decode(&s, 0).unwrap(), (PosInt::from_u64(5), 6));
        let s: BitString = "0".parse().unwrap();
        assert_eq!(omega_decode(&s, 0).unwrap(), (PosInt::from_u64(1), 1));
    }

    #[test]
    fn decode_concatenation() {
        let s: BitString = "0100110".parse().unwrap(); // "0" + "100" + "110"
        let values = super::super::decode_sequence(omega_decode, &s).unwrap();
        let got: Vec<u64> = values.iter().map(|v| v.to_u64().unwrap()).collect();
        assert_eq!(got, vec![1, 2, 3]);
    }

    #[test]
    fn truncated_streams_are_reported() {
        for bad in ["1", "10", "101", "10101", "1010"] {
            let s: BitString = bad.parse().unwrap();
            assert!(matches!(
                omega_decode(&s, 0),
                Err(CodecError::TruncatedStream { .. })
            ));
        }
    }

    #[test]
    fn roundtrip_small_range() {
        for n in 1..20_000u64 {
            let v = PosInt::from_u64(n);
            let code = omega_encode(&v);
            assert_eq!(code.len() as u64, omega_len(&v));
            assert_eq!(omega_decode(&code, 0).unwrap(), (v, code.len()));
        }
    }

    #[test]
    fn roundtrip_big_integer() {
        let n = PosInt::new((BigUint::one() << 200) + 12345u32).unwrap();
        let code = omega_encode(&n);
        assert_eq!(code.len() as u64, omega_len(&n));
        assert_eq!(omega_decode(&code, 0).unwrap(), (n, code.len()));
    }
}
