//! Schwarz-Christoffel map specifications and their evaluation.
//!
//! A spec fixes `C`, `K` and the prevertices `(x_i, k_i)`. The additive
//! constant is tied to a real base point: the upper-side limit of the map at
//! `base` equals `K`. Lower half-plane values are the continuation of the same
//! function across the ray to the right of the last prevertex, so the images
//! of both half-planes share their final piece.

mod boundary;
mod map;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::complex_kernel::branch_power;
use crate::contour::{LinearFactor, PowerProduct};
use crate::{Error, Result};

pub use boundary::{reflect, BoundaryImage};

/// Tolerance of the `|sum k| = 1` and `|sum k| = 2` tests.
pub const TYPE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreVertex {
    pub x: f64,
    pub k: f64,
}

impl PreVertex {
    pub fn new(x: f64, k: f64) -> Result<Self> {
        if !x.is_finite() || !k.is_finite() {
            return Err(Error::InvalidSpec(format!(
                "non-finite prevertex ({x}, {k})"
            )));
        }
        if k.abs() > 2.0 {
            return Err(Error::InvalidSpec(format!("exponent {k} outside [-2, 2]")));
        }
        Ok(Self { x, k })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfPlane {
    Upper,
    Lower,
}

impl HalfPlane {
    /// `+1` for the upper half-plane, `-1` for the lower.
    pub fn sign(self) -> f64 {
        match self {
            HalfPlane::Upper => 1.0,
            HalfPlane::Lower => -1.0,
        }
    }

    /// `None` on the real axis.
    pub fn of(z: Complex64) -> Option<Self> {
        if z.im > 0.0 {
            Some(HalfPlane::Upper)
        } else if z.im < 0.0 {
            Some(HalfPlane::Lower)
        } else {
            None
        }
    }
}

/// Shape class of the boundary image, by `|sum k_i|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContourType {
    /// `|sum k| < 1`
    A,
    /// `|sum k| = 1`
    B,
    /// `1 < |sum k| < 2`
    C,
    /// `|sum k| = 2`
    D,
}

impl ContourType {
    pub fn letter(self) -> char {
        match self {
            ContourType::A => 'a',
            ContourType::B => 'b',
            ContourType::C => 'c',
            ContourType::D => 'd',
        }
    }
}

/// One contour integral of the map derivative.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureReport {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub subdivisions: usize,
    /// Waypoints of the polygonal path that was integrated.
    pub path: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SCSpec {
    c: Complex64,
    kay: Complex64,
    prevertices: Vec<PreVertex>,
    base: f64,
}

impl SCSpec {
    /// Validates the prevertex ordering, the exponent-sum band `[-2, 2]` and
    /// `C != 0`. The base point defaults to the first prevertex whose
    /// segment integral converges (`k < 1`).
    pub fn new(c: Complex64, kay: Complex64, prevertices: Vec<PreVertex>) -> Result<Self> {
        if !(c.re.is_finite() && c.im.is_finite()) || c.norm() == 0.0 {
            return Err(Error::InvalidSpec(format!(
                "C must be finite and non-zero, got {c}"
            )));
        }
        if !(kay.re.is_finite() && kay.im.is_finite()) {
            return Err(Error::InvalidSpec(format!("K must be finite, got {kay}")));
        }
        for p in &prevertices {
            PreVertex::new(p.x, p.k)?;
        }
        if let Some(w) = prevertices.windows(2).find(|w| w[0].x >= w[1].x) {
            return Err(Error::InvalidSpec(format!(
                "prevertices must be strictly increasing, found {} then {}",
                w[0].x, w[1].x
            )));
        }
        let sum: f64 = prevertices.iter().map(|p| p.k).sum();
        if sum.abs() > 2.0 + TYPE_TOLERANCE {
            return Err(Error::InvalidSpec(format!(
                "sum of exponents {sum} outside [-2, 2]"
            )));
        }
        let base = default_base(&prevertices);
        Ok(Self {
            c,
            kay,
            prevertices,
            base,
        })
    }

    /// Moves the point where the map takes the value `K` (upper-side limit).
    pub fn with_base(mut self, base: f64) -> Result<Self> {
        if !base.is_finite() {
            return Err(Error::InvalidSpec(format!(
                "base point {base} is not finite"
            )));
        }
        if let Some(p) = self.prevertices.iter().find(|p| p.x == base && p.k >= 1.0) {
            return Err(Error::InvalidSpec(format!(
                "base point {base} is a prevertex with k = {} whose image is at infinity",
                p.k
            )));
        }
        self.base = base;
        Ok(self)
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn kay(&self) -> Complex64 {
        self.kay
    }

    pub fn prevertices(&self) -> &[PreVertex] {
        &self.prevertices
    }

    pub fn n(&self) -> usize {
        self.prevertices.len()
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn sum_k(&self) -> f64 {
        self.prevertices.iter().map(|p| p.k).sum()
    }

    /// `C / prod (z - x_i)^k_i` with the phase of each factor fixed to
    /// `k_i * arg(z - x_i)`.
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        let mut denominator = Complex64::new(1.0, 0.0);
        for p in &self.prevertices {
            denominator *= branch_power(z, p.x, p.k)?;
        }
        Ok(self.c / denominator)
    }

    pub fn classify(&self) -> ContourType {
        let s = self.sum_k().abs();
        if (s - 1.0).abs() <= TYPE_TOLERANCE {
            ContourType::B
        } else if (s - 2.0).abs() <= TYPE_TOLERANCE {
            ContourType::D
        } else if s < 1.0 {
            ContourType::A
        } else {
            ContourType::C
        }
    }

    pub(crate) fn integrand(&self) -> PowerProduct {
        PowerProduct::new(
            self.c,
            self.prevertices.iter().map(|p| LinearFactor {
                a: -p.x,
                b: 1.0,
                exponent: -p.k,
            }),
        )
    }

    /// Direction change `k_i pi` at each vertex; negated for the lower image.
    pub fn turn_angles(&self, half: HalfPlane) -> Vec<f64> {
        self.prevertices
            .iter()
            .map(|p| half.sign() * p.k * PI)
            .map(|t| if t == 0.0 { 0.0 } else { t })
            .collect()
    }
}

fn default_base(prevertices: &[PreVertex]) -> f64 {
    if let Some(p) = prevertices.iter().find(|p| p.k < 1.0) {
        return p.x;
    }
    match prevertices {
        [] => 0.0,
        [only] => only.x - 1.0,
        [first, second, ..] => 0.5 * (first.x + second.x),
    }
}
