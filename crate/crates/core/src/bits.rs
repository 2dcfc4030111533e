//! MSB-first bit strings: the carrier type for codewords and encoded streams.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

/// A finite sequence of bits, packed MSB-first into bytes.
///
/// Pad bits in the final byte are kept at zero, so equality and hashing work
/// directly on the packed representation. Concatenation is associative with
/// the empty string as identity.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    bytes: Vec<u8>,
    len: usize,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            bytes: Vec::with_capacity(bits.div_ceil(8)),
            len: 0,
        }
    }

    /// Number of bits.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push(&mut self, bit: bool) {
        let slot = self.len % 8;
        if slot == 0 {
            self.bytes.push(0);
        }
        if bit {
            *self.bytes.last_mut().unwrap() |= 1 << (7 - slot);
        }
        self.len += 1;
    }

    pub fn get(&self, index: usize) -> Option<bool> {
        if index >= self.len {
            return None;
        }
        Some(self.bytes[index / 8] >> (7 - index % 8) & 1 == 1)
    }

    /// Appends all bits of `other`, preserving order.
    pub fn append(&mut self, other: &BitString) {
        if self.len % 8 == 0 {
            // byte-aligned fast path: other's padding is already zero
            self.bytes.extend_from_slice(&other.bytes);
            self.len += other.len;
            return;
        }
        for bit in other.iter() {
            self.push(bit);
        }
    }

    /// Pushes the `bits` low-order bits of `value`, most significant first.
    pub fn push_u64_msb(&mut self, value: u64, bits: u32) {
        debug_assert!(bits <= 64);
        for shift in (0..bits).rev() {
            self.push(value >> shift & 1 == 1);
        }
    }

    /// Pushes the `bits` low-order bits of `value`, most significant first.
    pub fn push_biguint_msb(&mut self, value: &BigUint, bits: u64) {
        for shift in (0..bits).rev() {
            self.push(value.bit(shift));
        }
    }

    /// Reads `bits` bits starting at `start` as an unsigned big integer,
    /// most significant bit first. `None` if the range runs past the end.
    pub fn read_biguint_msb(&self, start: usize, bits: usize) -> Option<BigUint> {
        if start.checked_add(bits)? > self.len {
            return None;
        }
        let mut out = BigUint::ZERO;
        let mut i = start;
        let end = start + bits;
        // leading whole bytes can be consumed eight at a time once aligned
        while i < end {
            if i % 8 == 0 && i + 8 <= end {
                out = (out << 8u8) | BigUint::from(self.bytes[i / 8]);
                i += 8;
            } else {
                out <<= 1u8;
                if self.get(i) == Some(true) {
                    out |= BigUint::from(1u8);
                }
                i += 1;
            }
        }
        Some(out)
    }

    /// Packed bytes, MSB-first, final byte zero-padded.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Rebuilds a bit string from packed bytes. `None` when the byte count
    /// does not match `len` or any pad bit is nonzero.
    pub fn from_bytes(bytes: Vec<u8>, len: usize) -> Option<Self> {
        if bytes.len() != len.div_ceil(8) {
            return None;
        }
        if len % 8 != 0 {
            let pad_mask = 0xffu8 >> (len % 8);
            if bytes.last().copied().unwrap_or(0) & pad_mask != 0 {
                return None;
            }
        }
        Some(Self { bytes, len })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i).unwrap())
    }

    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        self.len <= other.len && self.iter().zip(other.iter()).all(|(a, b)| a == b)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(\"{self}\")")
    }
}

/// Error parsing a bit string from text: only '0' and '1' are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseBitsError {
    pub position: usize,
    pub found: char,
}

impl fmt::Display for ParseBitsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid bit character {:?} at position {}",
            self.found, self.position
        )
    }
}

impl std::error::Error for ParseBitsError {}

impl FromStr for BitString {
    type Err = ParseBitsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = BitString::with_capacity(s.len());
        for (position, found) in s.chars().enumerate() {
            match found {
                '0' => out.push(false),
                '1' => out.push(true),
                _ => return Err(ParseBitsError { position, found }),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_get_roundtrip() {
        let mut b = BitString::new();
        for i in 0..19 {
            b.push(i % 3 == 0);
        }
        assert_eq!(b.len(), 19);
        for i in 0..19 {
            assert_eq!(b.get(i), Some(i % 3 == 0));
        }
        assert_eq!(b.get(19), None);
    }

    #[test]
    fn parse_and_display() {
        let b: BitString = "101010".parse().unwrap();
        assert_eq!(b.to_string(), "101010");
        assert_eq!(b.len(), 6);
        let err = "10x".parse::<BitString>().unwrap_err();
        assert_eq!(err.position, 2);
    }

    #[test]
    fn append_identity_and_assoc() {
        let a: BitString = "110".parse().unwrap();
        let empty = BitString::new();
        let mut left = a.clone();
        left.append(&empty);
        assert_eq!(left, a);
        let mut right = empty.clone();
        right.append(&a);
        assert_eq!(right, a);
    }

    #[test]
    fn unaligned_append() {
        let mut a: BitString = "10110".parse().unwrap();
        let b: BitString = "0011101".parse().unwrap();
        a.append(&b);
        assert_eq!(a.to_string(), "101100011101");
    }

    #[test]
    fn biguint_read_write() {
        let mut b = BitString::new();
        b.push(true); // offset so reads are unaligned
        let v = BigUint::from(0xdead_beef_u64);
        b.push_biguint_msb(&v, 37);
        assert_eq!(b.read_biguint_msb(1, 37), Some(v));
        assert_eq!(b.read_biguint_msb(1, 38), None);
    }

    #[test]
    fn bytes_roundtrip_rejects_bad_padding() {
        let b: BitString = "1110001".parse().unwrap();
        let again = BitString::from_bytes(b.as_bytes().to_vec(), b.len()).unwrap();
        assert_eq!(again, b);
        assert!(BitString::from_bytes(vec![0xff], 7).is_none());
        assert!(BitString::from_bytes(vec![0xfe, 0x00], 7).is_none());
    }
}
