//! 0/1 vectors of dimension at most 63, packed into one word.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Largest supported vector dimension. One word keeps dot products single
/// popcounts; nothing at desk scale needs more coordinates.
pub const MAX_DIMENSION: usize = 63;

/// A 0/1 vector. Coordinate `i` is bit `i` of the mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitVector {
    dim: usize,
    bits: u64,
}

impl BitVector {
    pub fn zeros(dim: usize) -> BitVector {
        assert!(dim <= MAX_DIMENSION);
        BitVector { dim, bits: 0 }
    }

    pub fn ones(dim: usize) -> BitVector {
        assert!(dim <= MAX_DIMENSION);
        BitVector {
            dim,
            bits: (1u64 << dim) - 1,
        }
    }

    pub fn unit(dim: usize, coord: usize) -> BitVector {
        assert!(dim <= MAX_DIMENSION && coord < dim);
        BitVector {
            dim,
            bits: 1u64 << coord,
        }
    }

    /// The all-ones vector with the listed coordinates cleared.
    pub fn ones_minus(dim: usize, coords: &[usize]) -> BitVector {
        let mut v = BitVector::ones(dim);
        for &c in coords {
            assert!(c < dim);
            v.bits &= !(1u64 << c);
        }
        v
    }

    pub fn from_mask(dim: usize, mask: u64) -> BitVector {
        assert!(dim <= MAX_DIMENSION);
        debug_assert_eq!(mask & !mask_for(dim), 0);
        BitVector { dim, bits: mask }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn get(&self, coord: usize) -> bool {
        self.bits >> coord & 1 == 1
    }

    /// Number of ones; equals the dot product with itself.
    #[inline]
    pub fn norm(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Number of coordinates where both vectors are 1.
    pub fn dot(&self, other: &BitVector) -> Result<usize> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok((self.bits & other.bits).count_ones() as usize)
    }
}

#[inline]
pub fn mask_for(dim: usize) -> u64 {
    if dim == 0 {
        0
    } else {
        (1u64 << dim) - 1
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge {
                d: s.len(),
                max: MAX_DIMENSION,
            });
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1u64 << i,
                '0' => {}
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "bad bit character {other:?}"
                    )))
                }
            }
        }
        Ok(BitVector { dim: s.len(), bits })
    }
}
