use num_complex::Complex64;

use crate::contour::{ContourIntegrator, LinearFactor, PowerProduct};
use crate::sc::{HalfPlane, QuadratureReport};
use crate::{Error, Result};

const DETOUR_RADIUS: f64 = 1e-6;
const TOLERANCE: f64 = 1e-13;
const BUDGET: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticArgs {
    z_upper: Complex64,
    modulus: f64,
}

impl EllipticArgs {
    pub fn new(z_upper: Complex64, modulus: f64) -> Result<Self> {
        if !(modulus >= 0.0 && modulus.is_finite()) {
            return Err(Error::Argument(format!(
                "elliptic modulus must be finite and non-negative, got {modulus}"
            )));
        }
        if !(z_upper.re.is_finite() && z_upper.im.is_finite()) {
            return Err(Error::Argument("upper limit must be finite".into()));
        }
        Ok(Self { z_upper, modulus })
    }

    pub fn z_upper(&self) -> Complex64 {
        self.z_upper
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }
}

/// `E(Z, k) = integral from 0 to Z of sqrt(1 - k^2 t^2) / sqrt(1 - t^2) dt`.
///
/// Both radicands are split into linear factors `(1 -+ k t)`, `(1 -+ t)`, each
/// raised to its half power with the principal angle. The path is the straight
/// segment `0 -> Z`; branch points passed within `1e-6` are bypassed on a small
/// arc, on the side of `Z` when `Z` is real. Branch points at `Z` itself are
/// integrable and give the one-sided limit.
pub fn ellip_e_incomplete(args: EllipticArgs) -> Result<Complex64> {
    let k = args.modulus;
    let z = args.z_upper;
    if z == Complex64::new(0.0, 0.0) {
        return Ok(z);
    }
    let factor = |b: f64, exponent: f64| LinearFactor {
        a: 1.0,
        b,
        exponent,
    };
    let integrand = PowerProduct::new(
        Complex64::new(1.0, 0.0),
        [
            factor(-k, 0.5),
            factor(k, 0.5),
            factor(-1.0, -0.5),
            factor(1.0, -0.5),
        ],
    );
    let side = if z.im >= 0.0 {
        HalfPlane::Upper
    } else {
        HalfPlane::Lower
    };
    let integrator = ContourIntegrator {
        integrand: &integrand,
        side,
        tol: TOLERANCE * z.norm().max(1.0),
        budget: BUDGET,
        detour_radius: DETOUR_RADIUS,
    };
    let path = [Complex64::new(0.0, 0.0), z];
    let out = integrator.along(&path)?;
    if !out.converged {
        return Err(Error::Convergence(Box::new(QuadratureReport {
            value: out.value,
            abs_error_estimate: out.error,
            subdivisions: out.subdivisions,
            path: path.to_vec(),
        })));
    }
    Ok(out.value)
}
