//! Special functions behind the closed-form gallery maps.

mod elliptic;
mod gamma;
mod hypergeometric;

pub use elliptic::{ellip_e_incomplete, EllipticArgs};
pub use gamma::gamma;
pub use hypergeometric::{hyp2f1, HypergeometricParams};

use num_complex::Complex64;

use crate::complex_kernel::{arg, ln, polar_power};

fn sqrt(z: Complex64) -> Complex64 {
    polar_power(z.norm(), arg(z), 0.5)
}

/// Inverse hyperbolic cosine with `Re >= 0` and `Im` in `(-pi, pi]`.
///
/// Computed as `2 ln(sqrt((z + 1) / 2) + sqrt((z - 1) / 2))` with each square
/// root principal, so points on the axis left of `-1` take the upper-side
/// value `ln(|z| + sqrt(z^2 - 1)) + i pi`.
pub fn acosh_principal(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    2.0 * ln(sqrt((z + one) * 0.5) + sqrt((z - one) * 0.5))
}
