//! LZSS-style container for uniform-cost token streams.
//!
//! Layout (see `docs/FORMAT.md`):
//!
//! ```text
//! "LZPL" | version u8 = 1 | W u8 | L u8 | original length u64 LE
//! per token, MSB first:
//!   0 + 8-bit literal
//!   1 + W-bit (offset - 1) + L-bit (length - 1)
//! zero bits up to the next byte boundary
//! ```

use std::io;

use bitstream_io::{BigEndian, BitRead, BitReader, BitWrite, BitWriter};

use crate::config::{DictionaryConfig, ScaleLimits, Window};
use crate::error::{Error, Result};
use crate::parsers::{parse_with, Strategy};
use crate::token::{stats, ParseStats, Parsing, Token};

pub const MAGIC: &[u8; 4] = b"LZPL";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodecParams {
    offset_bits: u8,
    length_bits: u8,
}

impl CodecParams {
    pub fn new(offset_bits: u8, length_bits: u8) -> Result<Self> {
        check_range("offset_bits", offset_bits, 1, 24)?;
        check_range("length_bits", length_bits, 1, 16)?;
        Ok(CodecParams {
            offset_bits,
            length_bits,
        })
    }

    pub fn offset_bits(&self) -> u8 {
        self.offset_bits
    }

    pub fn length_bits(&self) -> u8 {
        self.length_bits
    }

    /// Window `h = 2^W`; also the largest encodable offset.
    pub fn window(&self) -> usize {
        1 << self.offset_bits
    }

    /// Largest encodable pointer length, `2^L`.
    pub fn max_len(&self) -> usize {
        1 << self.length_bits
    }

    pub fn dictionary_config(&self) -> DictionaryConfig {
        DictionaryConfig::lz77(Window::Bounded(self.window())).with_max_len(self.max_len())
    }

    /// Payload size of a parsing: one flag bit per token, 8 bits per
    /// literal, `W + L` bits per pointer.
    pub fn payload_bits(&self, s: &ParseStats) -> u64 {
        s.token_count as u64
            + 8 * s.literal_count as u64
            + (self.offset_bits as u64 + self.length_bits as u64) * s.pointer_count as u64
    }
}

impl Default for CodecParams {
    fn default() -> Self {
        CodecParams {
            offset_bits: 12,
            length_bits: 4,
        }
    }
}

fn check_range(name: &'static str, value: u8, min: u8, max: u8) -> Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange {
            name,
            value: value as u64,
            min: min as u64,
            max: max as u64,
        })
    }
}

pub fn encode(text: &[u8], params: CodecParams, strategy: Strategy) -> Result<Vec<u8>> {
    encode_with_stats(text, params, strategy, &ScaleLimits::default()).map(|(bytes, _)| bytes)
}

/// Encodes `text` and returns the stream with the parse statistics
/// (`encoded_bits` holds the payload size before padding).
pub fn encode_with_stats(
    text: &[u8],
    params: CodecParams,
    strategy: Strategy,
    limits: &ScaleLimits,
) -> Result<(Vec<u8>, ParseStats)> {
    if strategy == Strategy::Reverse {
        return Err(Error::FamilyMismatch { expected: "static" });
    }
    let config = params.dictionary_config();
    let parsing = parse_with(strategy, &config, text, limits)?;
    let bytes = write_stream(text.len(), &parsing, params)?;
    let mut s = stats(&parsing);
    s.encoded_bits = params.payload_bits(&s);
    Ok((bytes, s))
}

/// Serializes an already computed LZ77 parsing.
pub fn write_stream(text_len: usize, parsing: &Parsing, params: CodecParams) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(HEADER_LEN + text_len);
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.push(params.offset_bits);
    out.push(params.length_bits);
    out.extend_from_slice(&(text_len as u64).to_le_bytes());

    let mut w = BitWriter::endian(out, BigEndian);
    for (position, token) in parsing.iter() {
        match *token {
            Token::Literal(b) => {
                w.write_bit(false).map_err(io_bug)?;
                w.write(8, b).map_err(io_bug)?;
            }
            Token::Pointer { offset, length } => {
                if offset == 0
                    || offset > params.window()
                    || length == 0
                    || length > params.max_len()
                {
                    return Err(Error::PointerOutOfRange {
                        position,
                        offset,
                        length,
                    });
                }
                w.write_bit(true).map_err(io_bug)?;
                w.write(params.offset_bits as u32, (offset - 1) as u32)
                    .map_err(io_bug)?;
                w.write(params.length_bits as u32, (length - 1) as u32)
                    .map_err(io_bug)?;
            }
            Token::Phrase { .. } => return Err(Error::FamilyMismatch { expected: "lz77" }),
        }
    }
    w.byte_align().map_err(io_bug)?;
    Ok(w.into_writer())
}

fn io_bug(e: io::Error) -> Error {
    // writing into a Vec cannot fail
    panic!("in-memory bit writer failed: {e}")
}

fn truncated(_: io::Error) -> Error {
    Error::TruncatedStream
}

pub fn decode(stream: &[u8]) -> Result<Vec<u8>> {
    if stream.len() < MAGIC.len() || &stream[..4] != MAGIC {
        return Err(if MAGIC.starts_with(stream) {
            Error::TruncatedStream
        } else {
            Error::BadMagic
        });
    }
    if stream.len() < HEADER_LEN {
        return Err(Error::TruncatedStream);
    }
    if stream[4] != VERSION {
        return Err(Error::UnsupportedVersion(stream[4]));
    }
    let params = CodecParams::new(stream[5], stream[6])?;
    let total = u64::from_le_bytes(stream[7..15].try_into().expect("8 bytes")) as usize;

    let payload = &stream[HEADER_LEN..];
    // every token needs at least 9 bits and yields at least one symbol,
    // so a claimed length can only be trusted up to the payload size times
    // the longest pointer
    let mut out = Vec::with_capacity(total.min(payload.len().saturating_mul(8)));
    let mut r = BitReader::endian(payload, BigEndian);
    while out.len() < total {
        let position = out.len();
        if r.read_bit().map_err(truncated)? {
            let offset = r
                .read::<u32>(params.offset_bits as u32)
                .map_err(truncated)? as usize
                + 1;
            let length = r
                .read::<u32>(params.length_bits as u32)
                .map_err(truncated)? as usize
                + 1;
            if offset > position || position + length > total {
                return Err(Error::PointerOutOfRange {
                    position,
                    offset,
                    length,
                });
            }
            // byte by byte so overlapping copies replicate
            let from = position - offset;
            for k in 0..length {
                let b = out[from + k];
                out.push(b);
            }
        } else {
            out.push(r.read::<u8>(8).map_err(truncated)?);
        }
    }
    Ok(out)
}
