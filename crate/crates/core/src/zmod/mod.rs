//! Exact linear algebra over `Z` and `Z_d`.

pub mod arith;
mod gl;
mod matrix;
mod module;
mod smith;

use core::fmt;

pub use gl::{enumerate_invertible, gl_order, InvertibleMatrices, DEFAULT_BUDGET};
pub use matrix::{det_mod, is_invertible_mod, IntMatrix, ZdMatrix};
pub use module::{cokernel_mod, ZdModuleStructure};
pub use smith::{smith_normal_form, SmithForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZmodError {
    ShapeMismatch { expected: usize, found: usize },
    NotSquare { rows: usize, cols: usize },
    InvalidModulus(u64),
    ModulusMismatch(u64, u64),
    InvalidFactor { factor: u64, modulus: u64 },
    NotDivisorChain,
    BudgetExceeded { estimated_order: u128, budget: u128 },
}

impl fmt::Display for ZmodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ShapeMismatch { expected, found } => write!(f, "shape mismatch: expected {expected}, found {found}"),
            Self::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Self::InvalidModulus(d) => write!(f, "invalid modulus {d}"),
            Self::ModulusMismatch(a, b) => write!(f, "modulus mismatch: {a} vs {b}"),
            Self::InvalidFactor { factor, modulus } => {
                write!(f, "invariant factor {factor} is not a nontrivial divisor of {modulus}")
            }
            Self::NotDivisorChain => f.write_str("invariant factors do not form a divisor chain"),
            Self::BudgetExceeded { estimated_order, budget } => {
                write!(f, "search space of order {estimated_order} exceeds budget {budget}")
            }
        }
    }
}

impl core::error::Error for ZmodError {}
