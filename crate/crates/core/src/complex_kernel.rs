//! Angle convention and branch-consistent powers.
//!
//! Angles of complex numbers live in the half-open interval `(-pi, pi]`. The
//! negative real axis therefore has angle `+pi` regardless of the sign of a
//! zero imaginary part. Powers `(z - x)^k` take the phase `k * arg(z - x)`
//! without re-wrapping.

use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::{Error, Result};

/// An angle in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PrincipalAngle(f64);

impl PrincipalAngle {
    /// Accepts `radians` only if it already lies in `(-pi, pi]`.
    pub fn new(radians: f64) -> Result<Self> {
        if radians > -PI && radians <= PI {
            Ok(Self(radians))
        } else {
            Err(Error::Domain(format!(
                "{radians} is outside the principal interval (-pi, pi]"
            )))
        }
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

impl From<PrincipalAngle> for f64 {
    fn from(angle: PrincipalAngle) -> f64 {
        angle.0
    }
}

impl fmt::Display for PrincipalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Angle of `omega` in `(-pi, pi]`.
pub fn principal_angle(omega: Complex64) -> Result<PrincipalAngle> {
    if !omega.re.is_finite() || !omega.im.is_finite() {
        return Err(Error::Domain(format!("angle of non-finite value {omega}")));
    }
    if omega.re == 0.0 && omega.im == 0.0 {
        return Err(Error::Domain("angle of 0 is undefined".into()));
    }
    Ok(PrincipalAngle(arg(omega)))
}

/// `theta + 2 pi m` for the unique integer `m` landing in `(-pi, pi]`.
pub fn wrap_principal(theta: f64) -> Result<PrincipalAngle> {
    if !theta.is_finite() {
        return Err(Error::Domain(format!(
            "cannot wrap non-finite angle {theta}"
        )));
    }
    Ok(PrincipalAngle(wrap(theta)))
}

/// `|z - x_i|^k_i * exp(i k_i arg(z - x_i))`.
pub fn branch_power(z: Complex64, x_i: f64, k_i: f64) -> Result<Complex64> {
    let d = z - x_i;
    if d.re == 0.0 && d.im == 0.0 {
        return Err(Error::SingularPoint(z));
    }
    if !d.re.is_finite() || !d.im.is_finite() || !k_i.is_finite() {
        return Err(Error::Domain(format!(
            "non-finite input to branch_power: {z}, {k_i}"
        )));
    }
    Ok(polar_power(d.norm(), arg(d), k_i))
}

/// Unchecked principal angle; `atan2` with `-pi` folded onto `+pi`.
pub(crate) fn arg(omega: Complex64) -> f64 {
    let theta = omega.im.atan2(omega.re);
    if theta == -PI {
        PI
    } else {
        theta
    }
}

pub(crate) fn wrap(theta: f64) -> f64 {
    let mut t = PI - (PI - theta).rem_euclid(TAU);
    // rem_euclid may round up to TAU itself
    if t <= -PI {
        t += TAU;
    }
    t
}

/// `modulus^k * exp(i k angle)`.
pub(crate) fn polar_power(modulus: f64, angle: f64, k: f64) -> Complex64 {
    if k == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    Complex64::from_polar(modulus.powf(k), k * angle)
}

/// Natural logarithm with the `(-pi, pi]` angle convention.
pub(crate) fn ln(omega: Complex64) -> Complex64 {
    Complex64::new(omega.norm().ln(), arg(omega))
}
