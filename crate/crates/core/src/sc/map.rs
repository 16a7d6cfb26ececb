use num_complex::Complex64;

use super::{HalfPlane, QuadratureReport, SCSpec};
use crate::contour::{ContourIntegrator, PathOutcome};
use crate::{Error, QuadratureConfig, Result};

/// Fraction of the path length a straight path must keep from every
/// prevertex; closer paths are lifted away from the axis.
const STRAIGHT_CLEARANCE: f64 = 0.25;

/// Point on the real axis where both half-plane images meet, with its image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Pivot {
    pub x: f64,
    pub w: Complex64,
    pub error: f64,
}

impl SCSpec {
    /// `w0 + C * integral from z0 to z` along a path inside the half-plane
    /// holding both points.
    pub fn map_point(
        &self,
        z: Complex64,
        anchor: (Complex64, Complex64),
        cfg: &QuadratureConfig,
    ) -> Result<QuadratureReport> {
        let (z0, w0) = anchor;
        let half = self.half_plane_of(z)?;
        if self.half_plane_of(z0)? != half {
            return Err(Error::Argument(format!(
                "{z0} and {z} lie in different half-planes"
            )));
        }
        if z == z0 {
            return Ok(QuadratureReport {
                value: w0,
                abs_error_estimate: 0.0,
                subdivisions: 0,
                path: vec![z0],
            });
        }
        self.check_clearance(z0, cfg)?;
        self.check_clearance(z, cfg)?;
        let path = self.admissible_path(z0, z, half);
        self.integrate_path(path, w0, half, cfg)
    }

    /// Like [`SCSpec::map_point`] along caller-chosen waypoints, all in one
    /// open half-plane.
    pub fn map_along(
        &self,
        path: &[Complex64],
        w0: Complex64,
        cfg: &QuadratureConfig,
    ) -> Result<QuadratureReport> {
        let first = *path
            .first()
            .ok_or_else(|| Error::Argument("empty path".into()))?;
        let half = self.half_plane_of(first)?;
        for &z in path {
            if self.half_plane_of(z)? != half {
                return Err(Error::Argument(format!(
                    "path point {z} leaves the half-plane"
                )));
            }
            self.check_clearance(z, cfg)?;
        }
        self.integrate_path(path.to_vec(), w0, half, cfg)
    }

    /// Value of the map at an off-axis point, integrated from the pivot on
    /// the real axis.
    pub fn evaluate(&self, z: Complex64, cfg: &QuadratureConfig) -> Result<QuadratureReport> {
        let half = self.half_plane_of(z)?;
        self.check_clearance(z, cfg)?;
        let pivot = self.pivot(cfg)?;
        let start = Complex64::new(pivot.x, 0.0);
        let lift = z.im.abs().max(1.0) * half.sign();
        let path = if z.re == pivot.x {
            vec![start, z]
        } else {
            dedup(vec![
                start,
                Complex64::new(pivot.x, lift),
                Complex64::new(z.re, lift),
                z,
            ])
        };
        let mut report = self.integrate_path(path, pivot.w, half, cfg)?;
        report.abs_error_estimate += pivot.error;
        Ok(report)
    }

    /// Limit of the map at the real point `x` approached from `half`.
    pub fn boundary_value(
        &self,
        x: f64,
        half: HalfPlane,
        cfg: &QuadratureConfig,
    ) -> Result<Complex64> {
        if !x.is_finite() {
            return Err(Error::Argument(format!("boundary point {x} is not finite")));
        }
        let pivot = self.pivot(cfg)?;
        let out = self.axis_integral(pivot.x, x, half, cfg)?;
        Ok(pivot.w + out.value)
    }

    /// Integral of the derivative from `from` to `to` on the real axis, one
    /// sided. Falls back to a path through the half-plane when a prevertex
    /// with `k >= 1` lies strictly between the two points.
    pub(crate) fn axis_integral(
        &self,
        from: f64,
        to: f64,
        half: HalfPlane,
        cfg: &QuadratureConfig,
    ) -> Result<PathOutcome> {
        let (lo, hi) = if from <= to { (from, to) } else { (to, from) };
        if let Some(p) = self
            .prevertices
            .iter()
            .find(|p| p.k >= 1.0 && (p.x == from || p.x == to))
        {
            return Err(Error::Divergence(format!(
                "the image of prevertex {} (k = {}) is at infinity",
                p.x, p.k
            )));
        }
        let blocked = self
            .prevertices
            .iter()
            .any(|p| p.k >= 1.0 && p.x > lo && p.x < hi);
        let path = if blocked {
            let h = half.sign();
            vec![
                Complex64::new(from, 0.0),
                Complex64::new(from, h),
                Complex64::new(to, h),
                Complex64::new(to, 0.0),
            ]
        } else {
            vec![Complex64::new(from, 0.0), Complex64::new(to, 0.0)]
        };
        let integrand = self.integrand();
        let out = ContourIntegrator {
            integrand: &integrand,
            side: half,
            tol: cfg.abs_tol,
            budget: cfg.max_subdivisions,
            detour_radius: 0.0,
        }
        .along(&path)?;
        if !out.converged {
            return Err(Error::Convergence(Box::new(QuadratureReport {
                value: out.value,
                abs_error_estimate: out.error,
                subdivisions: out.subdivisions,
                path,
            })));
        }
        Ok(out)
    }

    /// The rightmost prevertex with a finite image (or a point just right of
    /// the last prevertex), together with its image.
    pub(crate) fn pivot(&self, cfg: &QuadratureConfig) -> Result<Pivot> {
        let x = match self.prevertices.last() {
            None => self.base,
            Some(last) if last.k < 1.0 => last.x,
            Some(last) => last.x + 1.0,
        };
        let out = self.axis_integral(self.base, x, HalfPlane::Upper, cfg)?;
        Ok(Pivot {
            x,
            w: self.kay + out.value,
            error: out.error,
        })
    }

    fn half_plane_of(&self, z: Complex64) -> Result<HalfPlane> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Argument(format!("non-finite point {z}")));
        }
        match HalfPlane::of(z) {
            Some(h) => Ok(h),
            None if self.prevertices.iter().any(|p| p.x == z.re) => Err(Error::SingularPoint(z)),
            None => Err(Error::Argument(format!(
                "{z} lies on the real axis; use boundary_value with a half-plane"
            ))),
        }
    }

    fn check_clearance(&self, z: Complex64, cfg: &QuadratureConfig) -> Result<()> {
        match self
            .prevertices
            .iter()
            .find(|p| (z - p.x).norm() < cfg.clearance)
        {
            Some(_) => Err(Error::SingularPoint(z)),
            None => Ok(()),
        }
    }

    /// Straight segment when it keeps clear of the prevertices, otherwise a
    /// three-leg path lifted away from the real axis.
    fn admissible_path(&self, z0: Complex64, z: Complex64, half: HalfPlane) -> Vec<Complex64> {
        let len = (z - z0).norm();
        let nearest = self
            .prevertices
            .iter()
            .map(|p| segment_distance(z0, z, Complex64::new(p.x, 0.0)))
            .fold(f64::INFINITY, f64::min);
        if nearest >= STRAIGHT_CLEARANCE * len {
            return vec![z0, z];
        }
        let h = z0.im.abs().max(z.im.abs()).max(0.5 * len) * half.sign();
        dedup(vec![
            z0,
            Complex64::new(z0.re, h),
            Complex64::new(z.re, h),
            z,
        ])
    }

    fn integrate_path(
        &self,
        path: Vec<Complex64>,
        w0: Complex64,
        half: HalfPlane,
        cfg: &QuadratureConfig,
    ) -> Result<QuadratureReport> {
        let integrand = self.integrand();
        let out = ContourIntegrator {
            integrand: &integrand,
            side: half,
            tol: cfg.abs_tol,
            budget: cfg.max_subdivisions,
            detour_radius: 0.0,
        }
        .along(&path)?;
        let report = QuadratureReport {
            value: w0 + out.value,
            abs_error_estimate: out.error,
            subdivisions: out.subdivisions,
            path,
        };
        if out.converged {
            Ok(report)
        } else {
            Err(Error::Convergence(Box::new(report)))
        }
    }
}

fn dedup(mut path: Vec<Complex64>) -> Vec<Complex64> {
    path.dedup();
    path
}

fn segment_distance(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (a + d * t - p).norm()
}
