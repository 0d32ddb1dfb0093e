//! Exact invariants of weak `d`-congruence of closed oriented 3-manifolds.
//!
//! Weak type-`d` surgery is `q/(d·s)` Dehn surgery with `q` prime to `d·s`;
//! the equivalence it generates is weak `d`-congruence. This crate computes
//! invariants that such surgeries preserve and uses them to certify that two
//! manifolds are *not* weakly `d`-congruent:
//!
//! * [`zmod`]: Smith normal form, cokernels over `Z_d`, enumeration of `GL(n, Z_d)`.
//! * [`surgery`]: rational surgery presentations, `Z_d` homology, surgery moves, a catalog.
//! * [`cup`]: the trilinear cup-product form on `H^1(M; Z_d)` and its obstruction.
//! * [`burnside`]: finite certificates that free Burnside groups are nonabelian.
//! * [`link`]: PD diagrams and braids, linking and Milnor numbers, Goeritz
//!   matrices and double branched cover homology.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod burnside;
pub mod cup;
pub mod link;
pub mod surgery;
pub mod verdict;
pub mod zmod;

pub use verdict::{CongruenceVerdict, Evidence, VerdictStatus};
