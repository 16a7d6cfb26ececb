use std::f64::consts::PI;

use num_complex::Complex64;

use super::{HalfPlane, QuadratureReport, SCSpec, TYPE_TOLERANCE};
use crate::complex_kernel::{arg, wrap, PrincipalAngle};
use crate::quadrature;
use crate::{Error, QuadratureConfig, Result};

/// Polygonal image of the line just above (or below) the real axis.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryImage {
    pub half: HalfPlane,
    /// `w_i` (upper) or `W_i` (lower); `None` where `k_i >= 1` sends the
    /// vertex to infinity.
    pub vertices: Vec<Option<Complex64>>,
    /// Direction change at each vertex, `+k_i pi` (upper) or `-k_i pi` (lower).
    pub turns: Vec<f64>,
    /// Direction of the piece arriving from `z = -infinity`.
    pub alpha0: PrincipalAngle,
    /// Direction of the piece leaving towards `z = +infinity`.
    pub alpha_n: PrincipalAngle,
    /// True when `z = infinity` maps to a finite point (exponent sum above one).
    pub w_infinity_finite: bool,
    /// Image of `z = infinity` reached along the final piece.
    pub w_infinity: Option<Complex64>,
    /// Image of `z = infinity` reached backwards along the initial piece.
    pub w_infinity_from_start: Option<Complex64>,
    /// `|w_{i+1} - w_i|`, infinite next to a vertex at infinity.
    pub segment_lengths: Vec<f64>,
}

impl BoundaryImage {
    /// Distance between the two routes to `w_infinity`; zero for a closed
    /// contour.
    pub fn closure_gap(&self) -> Option<f64> {
        match (self.w_infinity, self.w_infinity_from_start) {
            (Some(a), Some(b)) => Some((a - b).norm()),
            _ => None,
        }
    }
}

/// Mirror image of `w` in the line through `through` with direction `angle`.
pub fn reflect(w: Complex64, through: Complex64, angle: f64) -> Complex64 {
    through + Complex64::from_polar(1.0, 2.0 * angle) * (w - through).conj()
}

impl SCSpec {
    /// Initial and final directions `(alpha_0, alpha_n)` of the boundary image.
    pub fn orientations(&self, half: HalfPlane) -> (PrincipalAngle, PrincipalAngle) {
        let angle_c = arg(self.c);
        let alpha0 = wrap(angle_c - half.sign() * PI * self.sum_k());
        (
            PrincipalAngle::new(alpha0).expect("wrapped angle"),
            PrincipalAngle::new(angle_c).expect("principal angle"),
        )
    }

    /// `|w_{i+1} - w_i|` for the segment between prevertices `i` and `i + 1`,
    /// counted from one.
    pub fn segment_length(&self, i: usize, cfg: &QuadratureConfig) -> Result<f64> {
        if i == 0 || i >= self.n() {
            return Err(Error::Argument(format!(
                "segment index {i} out of range for {} prevertices",
                self.n()
            )));
        }
        let (left, right) = (self.prevertices[i - 1], self.prevertices[i]);
        if left.k >= 1.0 || right.k >= 1.0 {
            return Ok(f64::INFINITY);
        }
        let out = self.axis_integral(left.x, right.x, HalfPlane::Upper, cfg)?;
        Ok(out.value.norm())
    }

    pub fn boundary_image(&self, half: HalfPlane, cfg: &QuadratureConfig) -> Result<BoundaryImage> {
        let n = self.n();
        let mut vertices: Vec<Option<Complex64>> = vec![None; n];
        for i in (0..n).rev() {
            let p = self.prevertices[i];
            if p.k >= 1.0 {
                continue;
            }
            vertices[i] = Some(match vertices.get(i + 1).copied().flatten() {
                Some(next) => {
                    next + self
                        .axis_integral(self.prevertices[i + 1].x, p.x, half, cfg)?
                        .value
                }
                None => self.boundary_value(p.x, half, cfg)?,
            });
        }
        let segment_lengths = vertices
            .windows(2)
            .map(|w| match (w[0], w[1]) {
                (Some(a), Some(b)) => (b - a).norm(),
                _ => f64::INFINITY,
            })
            .collect();
        let (alpha0, alpha_n) = self.orientations(half);
        // types c and d with a negative exponent sum still send infinity to infinity
        let w_infinity_finite = self.sum_k() > 1.0 + TYPE_TOLERANCE;
        let (w_infinity, w_infinity_from_start) = if w_infinity_finite && n > 0 {
            (
                Some(self.infinity_image(half, true, cfg)?),
                Some(self.infinity_image(half, false, cfg)?),
            )
        } else {
            (None, None)
        };
        Ok(BoundaryImage {
            half,
            vertices,
            turns: self.turn_angles(half),
            alpha0,
            alpha_n,
            w_infinity_finite,
            w_infinity,
            w_infinity_from_start,
            segment_lengths,
        })
    }

    /// `w(infinity)` following the axis to `+infinity` (`rightwards`) or to
    /// `-infinity`. Requires `sum k > 1`.
    ///
    /// Beyond `X = center +- R` the tail is mapped to a finite interval by
    /// `x = center +- sigma^(-p)` with `p = 1 / (sum k - 1)`, which makes the
    /// transformed integrand bounded and smooth.
    fn infinity_image(
        &self,
        half: HalfPlane,
        rightwards: bool,
        cfg: &QuadratureConfig,
    ) -> Result<Complex64> {
        let s = self.sum_k();
        let first = self.prevertices[0].x;
        let last = self.prevertices[self.n() - 1].x;
        let center = 0.5 * (first + last);
        let radius = 0.5 * (last - first) + 1.0;
        let p = 1.0 / (s - 1.0);
        let sigma_max = radius.powf(1.0 - s);
        let direction = if rightwards { 1.0 } else { -1.0 };
        let start = center + direction * radius;
        let side = if rightwards { HalfPlane::Upper } else { half };
        let w_start = self.boundary_value(start, side, cfg)?;
        let tail = quadrature::integrate(
            |sigma| {
                let t = sigma.powf(p);
                let mag: f64 = self
                    .prevertices
                    .iter()
                    .map(|v| (1.0 + direction * (center - v.x) * t).powf(-v.k))
                    .product();
                Complex64::new(p * mag, 0.0)
            },
            0.0,
            sigma_max,
            cfg.abs_tol / self.c.norm(),
            cfg.max_subdivisions,
        );
        if !tail.converged {
            return Err(Error::Convergence(Box::new(QuadratureReport {
                value: tail.value,
                abs_error_estimate: tail.error,
                subdivisions: tail.subdivisions,
                path: vec![Complex64::new(start, 0.0)],
            })));
        }
        // all factors are positive to the right; to the left each carries the
        // one-sided angle +-pi
        let phase = if rightwards {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::from_polar(1.0, -half.sign() * PI * s)
        };
        let tail = self.c * phase * tail.value;
        Ok(if rightwards {
            w_start + tail
        } else {
            w_start - tail
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sc::PreVertex;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spec(pv: &[(f64, f64)]) -> SCSpec {
        SCSpec::new(
            c(1.0, 0.0),
            c(0.0, 0.0),
            pv.iter()
                .map(|&(x, k)| PreVertex::new(x, k).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn orientation_examples() {
        let a = spec(&[(0.0, 0.5)]);
        let (a0, an) = a.orientations(HalfPlane::Upper);
        assert!((a0.radians() + PI / 2.0).abs() < 1e-15);
        assert_eq!(an.radians(), 0.0);
        let (a0, an) = a.orientations(HalfPlane::Lower);
        assert!((a0.radians() - PI / 2.0).abs() < 1e-15);
        assert_eq!(an.radians(), 0.0);
        let rotated = SCSpec::new(
            c(0.0, 2.0),
            c(0.0, 0.0),
            vec![
                PreVertex::new(-1.0, 0.5).unwrap(),
                PreVertex::new(1.0, -0.5).unwrap(),
            ],
        )
        .unwrap();
        for half in [HalfPlane::Upper, HalfPlane::Lower] {
            let (a0, an) = rotated.orientations(half);
            assert_eq!(a0, an);
            assert!((an.radians() - PI / 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn segment_lengths() {
        let cfg = QuadratureConfig::default();
        let b = spec(&[(-1.0, 0.5), (1.0, 0.5)]);
        assert!((b.segment_length(1, &cfg).unwrap() - PI).abs() < 1e-9);
        assert!(matches!(b.segment_length(0, &cfg), Err(Error::Argument(_))));
        assert!(matches!(b.segment_length(2, &cfg), Err(Error::Argument(_))));
        let infinite = spec(&[(-1.0, 1.0), (1.0, 0.5)]);
        assert_eq!(infinite.segment_length(1, &cfg).unwrap(), f64::INFINITY);
    }

    #[test]
    fn type_b_vertices() {
        let cfg = QuadratureConfig::default();
        let b = spec(&[(-1.0, 0.5), (1.0, 0.5)]).with_base(1.0).unwrap();
        let up = b.boundary_image(HalfPlane::Upper, &cfg).unwrap();
        assert!((up.vertices[0].unwrap() - c(0.0, PI)).norm() < 1e-9);
        assert!(up.vertices[1].unwrap().norm() < 1e-12);
        assert!(!up.w_infinity_finite);
        assert!(up.w_infinity.is_none());
        let down = b.boundary_image(HalfPlane::Lower, &cfg).unwrap();
        assert!((down.vertices[0].unwrap() - c(0.0, -PI)).norm() < 1e-9);
    }

    #[test]
    fn vertex_at_infinity_is_flagged() {
        let cfg = QuadratureConfig::default();
        let s = spec(&[(-1.0, 0.5), (0.0, 1.0), (1.0, 0.25)]);
        let img = s.boundary_image(HalfPlane::Upper, &cfg).unwrap();
        assert!(img.vertices[0].is_some());
        assert!(img.vertices[1].is_none());
        assert!(img.vertices[2].is_some());
        assert_eq!(img.segment_lengths, vec![f64::INFINITY, f64::INFINITY]);
    }

    #[test]
    fn reflection_helper() {
        let w = reflect(c(1.0, 1.0), c(0.0, 0.0), 0.0);
        assert!((w - c(1.0, -1.0)).norm() < 1e-15);
        let w = reflect(c(1.0, 0.0), c(0.0, 0.0), PI / 4.0);
        assert!((w - c(0.0, 1.0)).norm() < 1e-15);
    }
}
