//! The five worked maps, each with a closed form used as an independent
//! oracle for the quadrature.
//!
//! Closed forms are exact in the upper half-plane. Types a and b continue
//! directly into the lower half-plane; for the others the lower image is the
//! mirror image of the upper one in the last boundary line (through the image
//! of the last prevertex, in direction `arg C`).

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::complex_kernel::{arg, polar_power};
use crate::sc::{reflect, HalfPlane, PreVertex, SCSpec};
use crate::special::{
    acosh_principal, ellip_e_incomplete, hyp2f1, EllipticArgs, HypergeometricParams,
};
use crate::{Error, QuadratureConfig, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleName {
    TypeA,
    TypeB,
    TypeC,
    TypeD,
    Pillar,
}

impl ExampleName {
    pub const ALL: [ExampleName; 5] = [
        ExampleName::TypeA,
        ExampleName::TypeB,
        ExampleName::TypeC,
        ExampleName::TypeD,
        ExampleName::Pillar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleName::TypeA => "type-a",
            ExampleName::TypeB => "type-b",
            ExampleName::TypeC => "type-c",
            ExampleName::TypeD => "type-d",
            ExampleName::Pillar => "pillar",
        }
    }
}

impl fmt::Display for ExampleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| {
                Error::Argument(format!(
                    "unknown example '{s}' (expected type-a, type-b, type-c, type-d or pillar)"
                ))
            })
    }
}

/// `F(1/2, 2/3; 3/2; 1)`, the side of the type c triangle.
pub fn alpha() -> f64 {
    hyp2f1(c_params(), Complex64::new(1.0, 0.0))
        .expect("convergent at 1")
        .re
}

/// `sqrt(2) F(1/4, 3/4; 5/4; 1)`, half the hypotenuse of the type d triangle.
pub fn type_d_leg() -> f64 {
    2f64.sqrt()
        * hyp2f1(d_params(), Complex64::new(1.0, 0.0))
            .expect("convergent at 1")
            .re
}

fn c_params() -> HypergeometricParams {
    HypergeometricParams::new(0.5, 2.0 / 3.0, 1.5).expect("valid parameters")
}

fn d_params() -> HypergeometricParams {
    HypergeometricParams::new(0.25, 0.75, 1.25).expect("valid parameters")
}

#[derive(Debug, Clone, PartialEq)]
pub struct GalleryEntry {
    pub name: ExampleName,
    pub spec: SCSpec,
    /// `(z0, w0)` with `w0` taken from the closed form.
    pub anchor: (Complex64, Complex64),
}

pub fn entry(name: ExampleName) -> GalleryEntry {
    let pv = |list: &[(f64, f64)]| -> Vec<PreVertex> {
        list.iter()
            .map(|&(x, k)| PreVertex::new(x, k).expect("valid prevertex"))
            .collect()
    };
    let one = Complex64::new(1.0, 0.0);
    let (kay, prevertices, base) = match name {
        ExampleName::TypeA => (Complex64::new(0.0, 0.0), pv(&[(0.0, 0.5)]), 0.0),
        ExampleName::TypeB => (
            Complex64::new(0.0, 0.0),
            pv(&[(-1.0, 0.5), (1.0, 0.5)]),
            1.0,
        ),
        ExampleName::TypeC => (
            Complex64::from_polar(alpha(), 2.0 * PI / 3.0),
            pv(&[(-1.0, 2.0 / 3.0), (1.0, 2.0 / 3.0)]),
            0.0,
        ),
        ExampleName::TypeD => (
            Complex64::new(0.0, type_d_leg()),
            pv(&[(-1.0, 0.75), (0.0, 0.5), (1.0, 0.75)]),
            0.0,
        ),
        ExampleName::Pillar => (
            Complex64::new(0.0, 1.3),
            pv(&[(-2.0, 0.5), (-1.0, -0.5), (1.0, -0.5), (2.0, 0.5)]),
            0.0,
        ),
    };
    let spec = SCSpec::new(one, kay, prevertices)
        .and_then(|s| s.with_base(base))
        .expect("gallery specs are valid");
    let mut entry = GalleryEntry {
        name,
        spec,
        anchor: (Complex64::new(0.0, 0.5), Complex64::new(0.0, 0.0)),
    };
    entry.anchor.1 = entry
        .closed_form(entry.anchor.0)
        .expect("anchor inside the closed-form domain");
    entry
}

impl GalleryEntry {
    /// Closed-form value of the map. Real `z` gives the limit from the upper
    /// half-plane.
    ///
    /// Types c and d are only available for `|z| <= 1` (a `Domain` error
    /// tells the caller to fall back to quadrature).
    pub fn closed_form(&self, z: Complex64) -> Result<Complex64> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Argument(format!("non-finite point {z}")));
        }
        match self.name {
            ExampleName::TypeA | ExampleName::TypeB => self.upper_form(z),
            _ if z.im < 0.0 => {
                let pivot = self.pivot_image()?;
                let mirrored = self.upper_form(z.conj())?;
                Ok(reflect(mirrored, pivot, arg(self.spec.c())))
            }
            _ => self.upper_form(z),
        }
    }

    /// One-sided limit of the closed form at the real point `x`.
    pub fn boundary_limit(&self, x: f64, half: HalfPlane) -> Result<Complex64> {
        let upper = self.upper_form(Complex64::new(x, 0.0))?;
        Ok(match half {
            HalfPlane::Upper => upper,
            HalfPlane::Lower => reflect(upper, self.pivot_image()?, arg(self.spec.c())),
        })
    }

    fn pivot_image(&self) -> Result<Complex64> {
        let last = self
            .spec
            .prevertices()
            .last()
            .expect("gallery maps have prevertices");
        self.upper_form(Complex64::new(last.x, 0.0))
    }

    fn upper_form(&self, z: Complex64) -> Result<Complex64> {
        let kay = self.spec.kay();
        let sqrt = |v: Complex64| polar_power(v.norm(), arg(v), 0.5);
        match self.name {
            ExampleName::TypeA => Ok(2.0 * sqrt(z) + kay),
            ExampleName::TypeB => Ok(acosh_principal(z) + kay),
            ExampleName::TypeC => {
                check_disk(z)?;
                let f = hyp2f1(c_params(), z * z)?;
                Ok(-Complex64::from_polar(1.0, PI / 3.0) * z * f + kay)
            }
            ExampleName::TypeD => {
                check_disk(z)?;
                let f = hyp2f1(d_params(), z * z)?;
                Ok(-2.0 * Complex64::from_polar(1.0, PI / 4.0) * sqrt(z) * f + kay)
            }
            ExampleName::Pillar => Ok(ellip_e_incomplete(EllipticArgs::new(z * 0.5, 2.0)?)? + kay),
        }
    }
}

fn check_disk(z: Complex64) -> Result<()> {
    if z.norm() > 1.0 {
        return Err(Error::Domain(format!(
            "closed form needs |z| <= 1, got |z| = {}",
            z.norm()
        )));
    }
    Ok(())
}

/// Pillar height `a` and width `b`: the lengths of the boundary segments over
/// `[1, 2]` and `[-1, 1]`.
pub fn pillar_dimensions() -> (f64, f64) {
    let spec = entry(ExampleName::Pillar).spec;
    let cfg = QuadratureConfig::default();
    let a = spec.segment_length(3, &cfg).expect("integrable segment");
    let b = spec.segment_length(2, &cfg).expect("integrable segment");
    (a, b)
}
