//! Oriented link diagrams in PD notation, braids and their closures, and the
//! invariants the surgery and double branched cover pipelines consume.
//!
//! # PD conventions
//!
//! A crossing `X[a, b, c, d]` lists its four edge labels counterclockwise,
//! starting from the incoming under-strand. The under-strand therefore runs
//! `a -> c`. The over-strand runs either `d -> b` or `b -> d`:
//!
//! ```text
//!        c                    c
//!        ^                    ^
//!   d ---|--> b          d <--|--- b
//!        |                    |
//!        a                    a
//!   positive (+1)        negative (-1)
//! ```
//!
//! The sign is the usual right-hand sign: rotating the over-strand
//! direction counterclockwise by less than a half-turn lands on the
//! under-strand direction for positive crossings.
//!
//! Components are listed as edge labels in traversal order. A component
//! with one edge that meets no crossing is a crossingless circle.

mod braid;
mod diagram;
mod goeritz;
mod magnus;
mod milnor;

use core::fmt;

pub use braid::BraidWord;
pub use diagram::{Crossing, LinkDiagram};
pub use goeritz::{dbc_homology, dbc_presentation, determinant, goeritz_matrix, DbcReference};
pub use milnor::milnor_triple;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkError {
    NoComponents,
    EmptyComponent(usize),
    LabelCount { label: u32, count: usize },
    DuplicateLabel(u32),
    UnknownLabel(u32),
    UnassignedLabel(u32),
    OrientationLength { expected: usize, found: usize },
    InvalidSign { crossing: usize, sign: i8 },
    AmbiguousOrientation { component: usize },
    InconsistentOrientation { crossing: usize },
    ComponentMismatch { component: usize, label: u32 },
    ComponentOrder { component: usize },
    ComponentIndex { index: usize, count: usize },
    SameComponent(usize),
    NotAPermutation,
    OddCrossingSum { i: usize, j: usize },
    WrongComponentCount { expected: usize, found: usize },
    NonzeroLinking { i: usize, j: usize, value: i64 },
    EmptyDiagram,
    SplitDiagram { pieces: usize },
    NotPlanar,
    NoStrands,
    GeneratorOutOfRange { generator: i32, strands: usize },
    PositionOutOfRange { position: usize, len: usize },
    NotADMove { position: usize },
    InvalidModulus(u64),
}

impl fmt::Display for LinkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoComponents => f.write_str("diagram has no components"),
            Self::EmptyComponent(i) => write!(f, "component {i} lists no edges"),
            Self::LabelCount { label, count } => {
                write!(f, "edge label {label} appears {count} times in crossings, expected 2")
            }
            Self::DuplicateLabel(l) => write!(f, "edge label {l} is listed in more than one place"),
            Self::UnknownLabel(l) => write!(f, "edge label {l} appears in no crossing"),
            Self::UnassignedLabel(l) => write!(f, "edge label {l} belongs to no component"),
            Self::OrientationLength { expected, found } => {
                write!(f, "expected {expected} crossing signs, found {found}")
            }
            Self::InvalidSign { crossing, sign } => write!(f, "crossing {crossing} has sign {sign}, expected +1 or -1"),
            Self::AmbiguousOrientation { component } => write!(
                f,
                "orientation of component {component} cannot be read off the PD code; supply crossing signs"
            ),
            Self::InconsistentOrientation { crossing } => {
                write!(f, "strand orientations disagree at crossing {crossing}")
            }
            Self::ComponentMismatch { component, label } => {
                write!(f, "traversing component {component} reaches edge {label} of another component")
            }
            Self::ComponentOrder { component } => {
                write!(f, "edges of component {component} are not listed in traversal order")
            }
            Self::ComponentIndex { index, count } => write!(f, "component {index} out of range ({count} components)"),
            Self::SameComponent(i) => write!(f, "linking number needs two distinct components, got {i} twice"),
            Self::NotAPermutation => f.write_str("component order is not a permutation"),
            Self::OddCrossingSum { i, j } => {
                write!(f, "signed crossing count between components {i} and {j} is odd; diagram is not planar")
            }
            Self::WrongComponentCount { expected, found } => {
                write!(f, "expected {expected} components, found {found}")
            }
            Self::NonzeroLinking { i, j, value } => {
                write!(f, "components {i} and {j} have linking number {value}, expected 0")
            }
            Self::EmptyDiagram => f.write_str("diagram has no crossings"),
            Self::SplitDiagram { pieces } => write!(f, "diagram splits into {pieces} pieces"),
            Self::NotPlanar => f.write_str("PD code does not describe a planar diagram"),
            Self::NoStrands => f.write_str("a braid needs at least one strand"),
            Self::GeneratorOutOfRange { generator, strands } => {
                write!(f, "generator {generator} out of range for {strands} strands")
            }
            Self::PositionOutOfRange { position, len } => {
                write!(f, "position {position} out of range for a word of length {len}")
            }
            Self::NotADMove { position } => write!(f, "no matching d-move at position {position}"),
            Self::InvalidModulus(d) => write!(f, "invalid modulus {d}"),
        }
    }
}

impl core::error::Error for LinkError {}
