//! Error type shared by every operator and the experiment harness.

use thiserror::Error;

/// Errors produced by chromosome validation, operator preconditions, and
/// the experiment harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum XoverError {
    #[error("chromosome must contain at least one gene")]
    EmptyChromosome,

    #[error("gene at position {index} is {value}, expected a finite number")]
    NonFiniteGene { index: usize, value: f64 },

    #[error("gene at position {index} is {value}, expected 0 or 1")]
    InvalidBit { index: usize, value: u8 },

    #[error("genes are not a permutation of 1..={len}")]
    InvalidPermutation { len: usize },

    #[error("parent lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("cut point {cut} outside valid range 1..={max} for length-{len} parents")]
    CutOutOfRange { cut: usize, max: usize, len: usize },

    #[error("cut points must be strictly increasing")]
    CutsNotIncreasing,

    #[error("mask length {mask} does not match parent length {len}")]
    MaskLengthMismatch { mask: usize, len: usize },

    #[error("{name} = {value} outside [{min}, {max}]")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("{name} = {value} must be finite")]
    NonFiniteParam { name: &'static str, value: f64 },

    #[error("gene index {index} outside 1..={len}")]
    GeneIndexOutOfRange { index: usize, len: usize },

    #[error("segment [{lo}, {hi}] invalid for length {len}")]
    SegmentOutOfRange { lo: usize, hi: usize, len: usize },

    #[error("cannot summarize an empty value sequence")]
    EmptyValues,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("numeric overflow in cell (operator={operator}, alpha={alpha}, tf={tf}) at generation {generation}")]
    NumericOverflow {
        operator: String,
        alpha: f64,
        tf: String,
        generation: usize,
    },

    #[error("cell (operator={operator}, alpha={alpha}, tf={tf}) failed: {source}")]
    CellFailure {
        operator: String,
        alpha: f64,
        tf: String,
        #[source]
        source: Box<XoverError>,
    },
}

pub type Result<T> = std::result::Result<T, XoverError>;
