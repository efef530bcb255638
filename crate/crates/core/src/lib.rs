//! Finite quandles built from finite groups, their directed Cayley graphs,
//! and exhaustive checks of how those graphs decompose.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`] holds finite groups as multiplication tables together with
//!   automorphisms, subgroups, cosets and commutators.
//! * [`quandle`] builds quandles (trivial, conjugation, core, dihedral,
//!   Alexander, generalized Alexander) and their right translations, inner
//!   groups and forward orbits.
//! * [`graph`] turns a quandle into its Cayley digraph and analyses it.
//! * [`verify`] runs one checker per structural result and sweeps whole
//!   families of groups and automorphisms.
//! * [`dsl`] parses the small group and automorphism spec language used by
//!   the command line and by suite configs.

pub mod dsl;
pub mod graph;
pub mod group;
pub mod partition;
pub mod quandle;
pub mod verify;
