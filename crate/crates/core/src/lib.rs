//! Exact-arithmetic verification suite for the two-parameter K3 families
//! attached to the five 3-dimensional 5-vertex reflexive polytopes.
//!
//! The crate rebuilds, from first principles and in exact rational
//! arithmetic, the elliptic fibrations of the four families, their
//! Néron-Severi and transcendental lattices, the period power series and
//! the rank-4 period differential systems, the associated Pfaffian
//! connections, and the transformation of the first family's period
//! equation into the uniformizing equation of the Hilbert modular
//! orbifold for Q(sqrt 5).  Floating point is confined to the numerical
//! monodromy transport in [`monodromy`].

pub mod exactcore;
pub mod polytopes;
pub mod fibrations;
pub mod lattices;
pub mod periods;
pub mod pfaffian;
pub mod monodromy;
pub mod hilbert;
pub mod cli;
