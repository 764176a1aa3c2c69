//! Free k-braid groups and the picture-valued invariants of planar motions
//! built from them.
//!
//! * [`group`]: words in the free k-braid group `G_n^k`, relation moves,
//!   reduction to minimal representatives, word and conjugacy problems.
//! * [`poly`]: exact univariate polynomials over the rationals with real
//!   root isolation.
//! * [`dynamics`]: piecewise-linear motions of points in the plane, exact
//!   detection of collinearity / concyclicity moments and the type word.
//! * [`braid`]: classical Artin braids realized as planar motions and their
//!   trisecant invariant.
//! * [`picture`]: strand diagrams (SVG) and minimal graphs (DOT).

pub mod braid;
pub mod dynamics;
pub mod error;
pub mod group;
pub mod picture;
pub mod poly;

pub use error::{Error, Result};
pub use group::{GroupSignature, Multiindex, Verdict, Word};
