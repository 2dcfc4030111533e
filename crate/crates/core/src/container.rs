//! Container file format for encoded integer streams.
//!
//! Layout: magic `OMGA`, one version byte (0x01), one codec byte
//! (0x01 = ω, 0x02 = γ, 0x03 = δ), an 8-byte little-endian bit count, then
//! payload bytes packed MSB-first. Pad bits in the final byte must be zero
//! and are excluded by the bit count.

use std::io::{self, Read, Write};

use thiserror::Error;

use crate::bits::BitString;
use crate::codecs::{self, CodecError, PosInt};

pub const MAGIC: [u8; 4] = *b"OMGA";
pub const VERSION: u8 = 0x01;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodecId {
    Omega = 0x01,
    Gamma = 0x02,
    Delta = 0x03,
}

impl CodecId {
    pub fn from_byte(byte: u8) -> Option<Self> {
        match byte {
            0x01 => Some(CodecId::Omega),
            0x02 => Some(CodecId::Gamma),
            0x03 => Some(CodecId::Delta),
            _ => None,
        }
    }

    pub fn as_byte(self) -> u8 {
        self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            CodecId::Omega => "omega",
            CodecId::Gamma => "gamma",
            CodecId::Delta => "delta",
        }
    }

    pub fn encode(self, n: &PosInt) -> BitString {
        match self {
            CodecId::Omega => codecs::omega_encode(n),
            CodecId::Gamma => codecs::gamma_encode(n),
            CodecId::Delta => codecs::delta_encode(n),
        }
    }

    pub fn decode(self, stream: &BitString, start: usize) -> Result<(PosInt, usize), CodecError> {
        match self {
            CodecId::Omega => codecs::omega_decode(stream, start),
            CodecId::Gamma => codecs::gamma_decode(stream, start),
            CodecId::Delta => codecs::delta_decode(stream, start),
        }
    }

    pub fn len_bits(self, n: &PosInt) -> u64 {
        match self {
            CodecId::Omega => codecs::omega_len(n),
            CodecId::Gamma => codecs::gamma_len(n),
            CodecId::Delta => codecs::delta_len(n),
        }
    }
}

#[derive(Debug, Error)]
pub enum ContainerError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("bad magic bytes {0:02x?}, expected \"OMGA\"")]
    BadMagic([u8; 4]),
    #[error("unsupported container version {0:#04x}")]
    UnsupportedVersion(u8),
    #[error("unknown codec byte {0:#04x}")]
    UnknownCodec(u8),
    #[error("payload truncated: header declares {expected_bits} bits")]
    TruncatedPayload { expected_bits: u64 },
    #[error("nonzero pad bits in final payload byte")]
    NonzeroPadding,
    #[error("declared bit count {0} does not fit in memory")]
    BitCountOverflow(u64),
}

/// Writes one encoded stream with its header.
pub fn write_stream<W: Write>(
    writer: &mut W,
    codec: CodecId,
    bits: &BitString,
) -> io::Result<()> {
    writer.write_all(&MAGIC)?;
    writer.write_all(&[VERSION, codec.as_byte()])?;
    writer.write_all(&(bits.len() as u64).to_le_bytes())?;
    writer.write_all(bits.as_bytes())?;
    Ok(())
}

/// Reads one encoded stream, validating header and padding.
pub fn read_stream<R: Read>(reader: &mut R) -> Result<(CodecId, BitString), ContainerError> {
    let mut magic = [0u8; 4];
    reader.read_exact(&mut magic)?;
    if magic != MAGIC {
        return Err(ContainerError::BadMagic(magic));
    }
    let mut head = [0u8; 2];
    reader.read_exact(&mut head)?;
    if head[0] != VERSION {
        return Err(ContainerError::UnsupportedVersion(head[0]));
    }
    let codec = CodecId::from_byte(head[1]).ok_or(ContainerError::UnknownCodec(head[1]))?;
    let mut count = [0u8; 8];
    reader.read_exact(&mut count)?;
    let bit_count = u64::from_le_bytes(count);
    let byte_count = usize::try_from(bit_count.div_ceil(8))
        .map_err(|_| ContainerError::BitCountOverflow(bit_count))?;
    let mut payload = vec![0u8; byte_count];
    reader
        .read_exact(&mut payload)
        .map_err(|_| ContainerError::TruncatedPayload {
            expected_bits: bit_count,
        })?;
    let bits = BitString::from_bytes(payload, bit_count as usize)
        .ok_or(ContainerError::NonzeroPadding)?;
    Ok((codec, bits))
}

/// Encodes a list of integers into one concatenated bit stream.
pub fn encode_integers(codec: CodecId, values: &[PosInt]) -> BitString {
    codecs::encode_sequence(|n| codec.encode(n), values)
}

/// Decodes a concatenated bit stream back into integers.
pub fn decode_integers(codec: CodecId, stream: &BitString) -> Result<Vec<PosInt>, CodecError> {
    codecs::decode_sequence(|s, p| codec.decode(s, p), stream)
}
