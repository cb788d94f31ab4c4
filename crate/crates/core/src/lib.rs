//! Linear resolutions and linear quotients of monomial ideals, decided through
//! the combinatorics of their lcm-lattices.
//!
//! The crate is organised bottom-up:
//!
//! - [`monomial`]: exact monomial and monomial-ideal arithmetic, colon ideals,
//!   linear-quotient orderings and polarization.
//! - [`poset`] and [`lattice`]: finite posets and the lcm-lattice `L(I)`.
//! - [`homology`]: simplicial complexes, order complexes, exact reduced
//!   homology, Cohen-Macaulayness and shellability.
//! - [`shelling`]: recursive atom orderings (CL-shellability) and the
//!   Vince-Wachs poset construction.
//! - [`duality`]: Stanley-Reisner ideals, Alexander duals and intersection
//!   lattices.
//! - [`betti`]: multigraded Betti numbers from the lcm-lattice, with an
//!   independent upper-Koszul oracle.
//! - [`graphs`]: simple graphs, chordality and edge ideals.
//! - [`harness`]: corpus generation and two-sided theorem checks.

pub mod betti;
pub mod duality;
pub mod error;
pub mod graphs;
pub mod harness;
pub mod homology;
pub mod lattice;
pub mod monomial;
pub mod poset;
pub mod search;
pub mod shelling;

pub use error::{Error, Result};
pub use search::{Budget, Search};

/// Version string embedded in every JSON report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
