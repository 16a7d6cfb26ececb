//! Schwarz-Christoffel maps of the complex upper and lower half-planes.
//!
//! A map is defined through its derivative
//!
//! ```text
//! dw/dz = C / ((z - x_1)^k_1 (z - x_2)^k_2 ... (z - x_n)^k_n)
//! ```
//!
//! and an additive constant `K`. Every non-integer power is taken with the
//! angle convention `arg in (-pi, pi]` and the phase rule
//! `arg((z - x_i)^k_i) = k_i * arg(z - x_i)`, which is what makes the images of
//! the lines just above and just below the real axis fit together.
//!
//! Module map:
//!
//! - [`complex_kernel`]: principal angles and branch-consistent powers.
//! - [`sc`]: map specifications, derivative, contour quadrature and the
//!   boundary skeleton (vertices, turns, orientations, segment lengths).
//! - [`special`]: Gauss hypergeometric series, incomplete elliptic integral of
//!   the second kind, principal `acosh`, gamma.
//! - [`gallery`]: five worked maps with closed forms used as oracles.
//! - [`grid`]: images of coordinate lines and the analyticity checks.

pub mod complex_kernel;
mod contour;
mod error;
pub mod gallery;
pub mod grid;
pub mod quadrature;
pub mod sc;
pub mod special;

pub use complex_kernel::{branch_power, principal_angle, wrap_principal, PrincipalAngle};
pub use error::{Error, Result};
pub use gallery::{ExampleName, GalleryEntry};
pub use grid::{LineRequest, Mapper, Orientation, Polyline};
pub use num_complex::Complex64;
pub use quadrature::QuadratureConfig;
pub use sc::{BoundaryImage, ContourType, HalfPlane, PreVertex, QuadratureReport, SCSpec};
