//! Exact linear algebra over the rationals.

mod matrix;
mod rational;
pub mod sparse;
mod subspace;

pub use matrix::Matrix;
pub use rational::{q, qi, ParseRationalError, Rational};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
}

/// RREF and rank of `m`.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    m.rref()
}

/// Canonical basis of `{v : m v = 0}`.
pub fn null_space(m: &Matrix) -> Subspace {
    m.null_space()
}

/// Dot product of two equal-length vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_bracket_derivation_system_has_rank_zero() {
        // All nine coefficients of the derivation identity vanish when the bracket is zero.
        let m = Matrix::zeros(27, 9);
        assert_eq!(rref(&m).1, 0);
        assert_eq!(null_space(&m).dim(), 9);
    }
}
