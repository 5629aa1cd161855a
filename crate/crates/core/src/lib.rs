//! Constructions and symmetry checks for sharply k-arc-transitive digraphs.
//!
//! The central family is the level-coordinate digraph over a base digraph
//! `delta`: vertices `(i; x_0, .., x_{k-1})` with `i` an integer level, and an
//! arc `(i; x) -> (i+1; y)` whenever `y` differs from `x` only in coordinate
//! `i mod k`, and there along an arc of `delta`. The crate builds its cyclic
//! quotients and finite windows ([`constructions`]), computes automorphism
//! groups by partition refinement ([`autsearch`]) with Schreier-Sims group
//! arithmetic ([`perm`]), and decides arc-transitivity on k-arcs
//! ([`transitivity`]). Two-fold automorphisms and stability of the base digraph
//! live in [`tfaut`]. [`commands`] holds the descriptor format and presets
//! used by the `zdigraph` binary.
//!
//! ```
//! use zdigraph::constructions::{theta_cycle, z_quotient, ZLayout};
//! use zdigraph::transitivity::transitivity_profile;
//!
//! let zq = z_quotient(&theta_cycle(3)?, 2, 6)?;
//! let profile = transitivity_profile(zq.graph(), 3, Default::default())?;
//! assert_eq!(profile.orbit_counts, vec![1, 1, 1, 2]);
//! assert!(profile.is_sharply(2));
//! # Ok::<(), zdigraph::Error>(())
//! ```

pub mod autsearch;
pub mod commands;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod perm;
pub mod tfaut;
pub mod transitivity;

pub use error::{Error, Result};
