//! Exact projective and triangle geometry for configurations of cevian
//! lines that are isogonal or isotomic in pairs.
//!
//! Everything incidence-related is computed over arbitrary-precision
//! rationals, so every concurrency, collinearity and conconicity claim is
//! decided by an exact zero test. The only floating-point code lives in
//! [`morley`], where the lines are given by angles.
//!
//! The crate is `no_std` (it needs `alloc`); enable the `std` feature to
//! get `std::error::Error` impls through `thiserror`.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod conic;
pub mod config;
mod error;
mod linalg;
pub mod morley;
pub mod projective;
pub mod rng;
pub mod suite;
pub mod triangle;

pub use conic::{
    carnot_product, conconic6, conconic6_det, conic_tangent_to_lines, conic_through_points,
    dual_conic, is_tangent, on_conic, Conic, DualConic,
};
pub use config::{build_configuration, derived_points, h_points, Configuration, DerivedPoints, Feet, Mode, TraceSet};
pub use error::GeomError;
pub use projective::{collinear, concurrent, join, meet, proj_equal, ProjLine, ProjPoint, Rat};
pub use triangle::{
    isogonal_conjugate, isogonal_trace, isotomic_conjugate, isotomic_trace, perpendicular_foot, Bary, Side,
    Trace, Triangle,
};
