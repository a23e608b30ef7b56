//! Even polygonal chains described by face lengths and gluing offsets.
//!
//! A chain is written as whitespace-separated tokens, one per face from left
//! to right. Terminal faces are a bare even length `L`; every internal face
//! is `L@d`, where `d` is the number of edges of that face lying strictly
//! between its left and right shared edges on one side. For example
//! `6 6@2 6` is anthracene and `4 4@1 4@1 4` a straight chain of four squares.
//!
//! An internal face is a kink exactly when `d` is odd: the two shared edges
//! then have the same parity around the face and lie in a common perfect
//! matching of the face cycle.

mod decompose;
mod generate;
mod realize;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use decompose::{
    all_kink_decomposition, all_kink_decomposition_by_peeling, kink_flags, maximal_linear_chain_count,
    segment_decomposition, spectrum_chain, BlockDecomposition, FaceRange, KinkFlags, SegmentDecomposition,
};
pub use generate::{generate, Family};
pub use realize::{realize, Realized};
pub use witness::min_witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("face length {0} is odd")]
    OddLength(usize),
    #[error("face length {0} is below 4")]
    TooShort(usize),
    #[error("offset {d} out of range for a face of length {length}")]
    OffsetOutOfRange { d: usize, length: usize },
    #[error("internal face {0} needs an offset")]
    MissingOffset(usize),
    #[error("terminal face {0} must not carry an offset")]
    UnexpectedOffset(usize),
    #[error("bad modes: {0}")]
    BadModes(String),
    #[error("chain witness search failed: {0}")]
    Witness(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainSpec {
    lengths: Vec<usize>,
    /// `offsets[k]` belongs to internal face `k + 1`.
    offsets: Vec<usize>,
}

impl ChainSpec {
    pub fn new(lengths: Vec<usize>, offsets: Vec<usize>) -> Result<Self, ChainError> {
        if lengths.is_empty() {
            return Err(ChainError::Syntax("empty chain".into()));
        }
        for &l in &lengths {
            if l % 2 == 1 {
                return Err(ChainError::OddLength(l));
            }
            if l < 4 {
                return Err(ChainError::TooShort(l));
            }
        }
        let internal = lengths.len().saturating_sub(2);
        if offsets.len() != internal {
            return Err(ChainError::Syntax(format!(
                "{} internal faces but {} offsets",
                internal,
                offsets.len()
            )));
        }
        for (k, &d) in offsets.iter().enumerate() {
            let length = lengths[k + 1];
            if d > length - 2 {
                return Err(ChainError::OffsetOutOfRange { d, length });
            }
        }
        Ok(ChainSpec { lengths, offsets })
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Offset of face `i` (0-based), internal faces only.
    pub fn offset(&self, i: usize) -> Option<usize> {
        if i == 0 || i + 1 >= self.len() {
            None
        } else {
            Some(self.offsets[i - 1])
        }
    }

    pub fn is_internal(&self, i: usize) -> bool {
        i > 0 && i + 1 < self.len()
    }

    pub fn is_kink(&self, i: usize) -> bool {
        self.offset(i).is_some_and(|d| d % 2 == 1)
    }

    /// The subchain made of faces `first..=last`; its end faces lose their
    /// offsets.
    pub fn subchain(&self, first: usize, last: usize) -> ChainSpec {
        let lengths = self.lengths[first..=last].to_vec();
        let offsets = (first + 1..last).map(|i| self.offsets[i - 1]).collect();
        ChainSpec { lengths, offsets }
    }

    /// Replaces every offset `d` of a face of length `L` by `L - 2 - d`.
    pub fn mirrored(&self) -> ChainSpec {
        let offsets = self.offsets.iter().enumerate().map(|(k, &d)| self.lengths[k + 1] - 2 - d).collect();
        ChainSpec { lengths: self.lengths.clone(), offsets }
    }
}

pub fn parse_chain(text: &str) -> Result<ChainSpec, ChainError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(ChainError::Syntax("empty chain".into()));
    }
    let n = tokens.len();
    let mut lengths = Vec::with_capacity(n);
    let mut offsets = Vec::with_capacity(n.saturating_sub(2));
    for (i, tok) in tokens.iter().enumerate() {
        let internal = i > 0 && i + 1 < n;
        let number = |s: &str| {
            s.parse::<usize>().map_err(|_| ChainError::Syntax(format!("bad number {s:?} in token {tok:?}")))
        };
        match tok.split_once('@') {
            Some((l, d)) => {
                if !internal {
                    return Err(ChainError::UnexpectedOffset(i + 1));
                }
                lengths.push(number(l)?);
                offsets.push(number(d)?);
            }
            None => {
                if internal {
                    return Err(ChainError::MissingOffset(i + 1));
                }
                lengths.push(number(tok)?);
            }
        }
    }
    ChainSpec::new(lengths, offsets)
}

impl FromStr for ChainSpec {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_chain(s)
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.lengths.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match self.offset(i) {
                Some(d) => write!(f, "{l}@{d}")?,
                None => write!(f, "{l}")?,
            }
        }
        Ok(())
    }
}
