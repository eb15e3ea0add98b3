//! Steiner quadruple systems admitting almost simple groups with socle
//! PSL_n(q).
//!
//! The crate builds the three families of SQS(q + 1) on the projective line
//! that are invariant under PSL_2(q), verifies their design properties and
//! automorphism groups, and confirms the classification empirically by
//! searching for group-invariant designs over orbit incidence matrices.
//!
//! Layers, bottom up:
//!
//! - [`field`]: GF(p^d) with reproducible integer element codes.
//! - [`geometry`]: point indexing for PG(1, q) and PG(n-1, q).
//! - [`group`], [`orbit`]: semilinear projective groups, orbits,
//!   stabilizers.
//! - [`design`]: t-design verification, derived designs, file format.
//! - [`constructions`]: the three families, classification and the
//!   invariant-design search.

pub mod cli;
pub mod constructions;
pub mod design;
pub mod error;
pub mod field;
pub mod geometry;
pub mod group;
pub mod orbit;
pub mod subsets;

pub use design::{Block, Design, VerificationReport};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use group::{Family, GroupElement, GroupSpec, Limits, ProjectiveGroup, Semilinear};
pub use orbit::{is_flag_transitive, stabilizer_action_on_block, BlockOrbit, Stabilizer, SubsetOrbits};
