use alloc::string::String;

use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension {n} exceeds the configured cap of {cap}")]
    DimensionTooLarge { n: usize, cap: usize },

    #[error("basis index e{index} is out of range for a space of dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("expected a 1-vector, found grades {grades}")]
    NotAVector { grades: String },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("matrix has shape {rows}x{cols}, expected {expected}x{expected}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
    },

    /// Condition (iv) needs an automorphism of order two: `alpha^2 = id` on `V`.
    #[error(
        "not an involution: alpha^2 != id on V (grading automorphism must square to the identity)"
    )]
    NotInvolution,

    /// `alpha(V) ⊆ V` forces `alpha|_V` to be an isometry of `g`.
    #[error("not an isometry: alpha|_V does not preserve g, so it cannot restrict an algebra automorphism with alpha(V) in V")]
    NotIsometry,

    #[error("basis is not closed under the product: b{left} * b{right} leaves the span")]
    NotClosed { left: usize, right: usize },

    #[error("basis element b{index} is linearly dependent on the preceding ones")]
    NotIndependent { index: usize },

    #[error("structure constants are not associative: (b{0} b{1}) b{2} != b{0} (b{1} b{2})")]
    NonAssociative(usize, usize, usize),

    #[error("trace form is degenerate; the algebra is not semisimple")]
    Degenerate,

    #[error("unknown algebra class: {0}")]
    UnknownClass(String),
}
