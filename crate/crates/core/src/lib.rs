//! Top intersection numbers on the Grassmannian of lines in projective
//! space, computed four independent ways and cross-checked.
//!
//! The number kappa(a, b, n) is the coefficient extracted when the word
//! D1^a D2^b of derivation operators is applied to the top wedge of an
//! exterior algebra attached to the Grassmannian G(1, n+1) of lines in
//! P^(n+1); it equals the degree of a Schubert cycle, and along the
//! diagonal it reproduces the Catalan numbers. This crate computes the
//! same numbers by:
//!
//! * direct operator application in the exterior algebra ([`exterior`],
//!   [`intersect`]) — the ground-truth route;
//! * a two-term recursion on the associated triangle K(m, n)
//!   ([`closed_form::k_recursive`]);
//! * two closed formulas, an alternating Catalan sum and a double sum of
//!   binomial/factorial terms ([`closed_form`]);
//! * counting constrained lattice walks through a city map with one-way
//!   streets, gates and road blocks ([`traffic`]) — "Catalan traffic".
//!
//! [`verify`] runs all routes over a triangle of queries and reports
//! cell-by-cell agreement. All values are exact big integers.

pub mod closed_form;
pub mod error;
pub mod exterior;
pub mod intersect;
pub mod traffic;
pub mod verify;

pub use error::{Error, Result};
pub use exterior::{BasisElement, ExtVector, NormalizedTerm, Sign};
pub use intersect::{KTable, KappaQuery};
pub use traffic::{Bounds, CityPoint, Move, PathCountGrid, Zone};
pub use verify::{RouteName, RouteReport};
