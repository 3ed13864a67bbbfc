//! Exact group arithmetic for the Heisenberg group `M1` of order `p^3`,
//! its holomorph, regular subgroups and the skew braces they induce.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod automorphism;
pub mod brace;
pub mod classification;
pub mod error;
pub mod families;
pub mod fp;
pub mod heisenberg;
pub mod holomorph;
pub mod oracle;
pub mod subgroup;

pub use automorphism::{AutM1Elt, Gl2};
pub use error::Error;
pub use fp::Prime;
pub use heisenberg::M1Elt;
pub use holomorph::HolElt;
pub use subgroup::{CanonicalKey, GroupType, SubgroupHol};
