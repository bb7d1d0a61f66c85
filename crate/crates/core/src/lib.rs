//! Cyclic 2-factorizations of `K_{m×n}` into 4-cycles or hamiltonian cycles.
//!
//! Vertices are the residues of `Z_mn`; the parts are the cosets of `mZ_mn`.
//! A factorization is described by a 2-starter, a short list of 2-regular
//! graphs whose translates make up every factor.

pub mod blocks;
pub mod construct;
pub mod error;
pub mod feasibility;
pub mod group;
pub mod io;
pub mod search;
pub mod starter;
pub mod verify;

pub use construct::{
    build, construct, construct_with, plan, plan_with, BuildOptions, Construction, ConstructionPlan,
};
pub use error::{Error, Result};
pub use feasibility::{c4_exists, feasible, ham_exists, Exists, FeasibilityVerdict};
pub use group::{CompactTrail, GroupContext, Residue};
pub use search::{enumerate_all, search_starter, SearchConfig};
pub use starter::{Factorization, TwoRegularGraph, TwoStarter};
pub use verify::{verify_cyclic, verify_factorization, CycleLength, VerificationCertificate};
