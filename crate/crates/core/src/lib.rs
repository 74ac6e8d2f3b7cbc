//! Exact computations for smooth curves of low degree in `P^5`: Castelnuovo
//! bounds and Brill–Noether counts, line-bundle cohomology on the rational
//! surfaces that carry such curves, surface-model enumeration, Hilbert
//! function profiles, and a classification catalog for `5 <= d <= 15` with a
//! checker that recomputes every stored number.

pub mod catalog;
pub mod error;
pub mod hilbert_profile;
pub mod invariants;
pub mod model_enumerator;
pub mod surface_cohomology;

pub use error::{Error, Result};
