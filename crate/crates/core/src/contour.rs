//! Contour integrals of products of linear-factor powers
//! `scale * prod (a_j + b_j z)^e_j` along polygonal paths.
//!
//! Roots sitting on a path endpoint are removed analytically with the
//! substitution `z = p + (q - p) s^(1/(1+e))`, which turns the factor
//! `(z - p)^e` and the Jacobian into a constant. Roots passing within the
//! detour radius of a leg are bypassed on a small circular arc. Points lying
//! exactly on the real axis take one-sided limits from the configured side.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::complex_kernel::{arg, polar_power};
use crate::quadrature;
use crate::sc::HalfPlane;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct LinearFactor {
    pub a: f64,
    pub b: f64,
    pub exponent: f64,
}

impl LinearFactor {
    fn root(&self) -> f64 {
        -self.a / self.b
    }

    /// Whether the root needs special handling on a path.
    fn is_branching(&self) -> bool {
        !(self.exponent >= 0.0 && self.exponent.fract() == 0.0)
    }

    fn angle(&self, v: Complex64, on_axis: bool, side: HalfPlane) -> f64 {
        if on_axis && v.im == 0.0 && v.re < 0.0 {
            // Im(a + b (x + i delta)) carries the sign of b * delta
            if self.b * side.sign() > 0.0 {
                PI
            } else {
                -PI
            }
        } else {
            arg(v)
        }
    }

    fn power(&self, v: Complex64, on_axis: bool, side: HalfPlane) -> Complex64 {
        polar_power(v.norm(), self.angle(v, on_axis, side), self.exponent)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct PowerProduct {
    scale: Complex64,
    factors: Vec<LinearFactor>,
}

impl PowerProduct {
    /// Identical factors are merged; constant and zero-exponent factors are
    /// folded into the scale.
    pub fn new(scale: Complex64, factors: impl IntoIterator<Item = LinearFactor>) -> Self {
        let mut scale = scale;
        let mut merged: Vec<LinearFactor> = Vec::new();
        for f in factors {
            if f.exponent == 0.0 {
                continue;
            }
            if f.b == 0.0 {
                scale *= polar_power(f.a.abs(), arg(Complex64::new(f.a, 0.0)), f.exponent);
                continue;
            }
            match merged.iter_mut().find(|m| m.a == f.a && m.b == f.b) {
                Some(m) => m.exponent += f.exponent,
                None => merged.push(f),
            }
        }
        merged.retain(|f| f.exponent != 0.0);
        Self {
            scale,
            factors: merged,
        }
    }

    fn eval_skipping(
        &self,
        z: Complex64,
        on_axis: bool,
        side: HalfPlane,
        skip: Option<usize>,
    ) -> Complex64 {
        let mut acc = self.scale;
        for (j, f) in self.factors.iter().enumerate() {
            if Some(j) == skip {
                continue;
            }
            acc *= f.power(f.a + f.b * z, on_axis, side);
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct PathOutcome {
    pub value: Complex64,
    pub error: f64,
    pub subdivisions: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
enum Piece {
    Line {
        from: Complex64,
        to: Complex64,
        start_root: Option<usize>,
        end_root: Option<usize>,
    },
    Arc {
        center: Complex64,
        radius: f64,
        theta0: f64,
        sweep: f64,
    },
}

pub(crate) struct ContourIntegrator<'a> {
    pub integrand: &'a PowerProduct,
    /// Side used for one-sided limits on the real axis.
    pub side: HalfPlane,
    pub tol: f64,
    pub budget: usize,
    /// Roots closer than this to the interior of a leg are bypassed on an
    /// arc; zero integrates straight through them.
    pub detour_radius: f64,
}

impl ContourIntegrator<'_> {
    pub fn along(&self, waypoints: &[Complex64]) -> Result<PathOutcome> {
        let mut pieces = Vec::new();
        for leg in waypoints.windows(2) {
            self.split_leg(leg[0], leg[1], &mut pieces)?;
        }
        let mut out = PathOutcome {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
            subdivisions: 0,
            converged: true,
        };
        if pieces.is_empty() {
            return Ok(out);
        }
        let tol = self.tol / pieces.len() as f64;
        for piece in pieces {
            let budget = self.budget.saturating_sub(out.subdivisions);
            let r = self.integrate_piece(piece, tol, budget);
            out.value += r.value;
            out.error += r.error;
            out.subdivisions += r.subdivisions;
            out.converged &= r.converged;
        }
        Ok(out)
    }

    fn check_integrable(&self, j: usize, at: Complex64) -> Result<()> {
        let f = &self.integrand.factors[j];
        if f.exponent <= -1.0 {
            Err(Error::Divergence(format!(
                "integrand behaves like (z - {})^{} at the path point {at}",
                f.root(),
                f.exponent
            )))
        } else {
            Ok(())
        }
    }

    fn split_leg(&self, a: Complex64, b: Complex64, pieces: &mut Vec<Piece>) -> Result<()> {
        if a == b {
            return Ok(());
        }
        let d = b - a;
        let len2 = d.norm_sqr();
        let len = len2.sqrt();
        let mut start_root = None;
        let mut end_root = None;
        // (parameter, kind): kind None = plain split, Some(j) = root j sits on the path
        let mut cuts: Vec<(f64, Option<usize>)> = Vec::new();
        let mut arcs: Vec<(f64, f64, usize)> = Vec::new();
        for (j, f) in self.integrand.factors.iter().enumerate() {
            if !f.is_branching() {
                continue;
            }
            let p = Complex64::new(f.root(), 0.0);
            if a == p {
                self.check_integrable(j, a)?;
                start_root = Some(j);
                continue;
            }
            if b == p {
                self.check_integrable(j, b)?;
                end_root = Some(j);
                continue;
            }
            let t = ((p - a) * d.conj()).re / len2;
            if t <= 0.0 || t >= 1.0 {
                continue;
            }
            // roots are real, so a horizontal leg passes at exactly |Im a|
            let dist = if d.im == 0.0 {
                a.im.abs()
            } else {
                (a + d * t - p).norm()
            };
            if dist == 0.0 && self.detour_radius == 0.0 {
                self.check_integrable(j, p)?;
                cuts.push((t, Some(j)));
            } else if dist < self.detour_radius {
                let half_chord = (self.detour_radius.powi(2) - dist * dist).sqrt() / len;
                let (t0, t1) = (t - half_chord, t + half_chord);
                if t0 > 0.0 && t1 < 1.0 {
                    arcs.push((t0, t1, j));
                } else {
                    cuts.push((t, None));
                }
            } else {
                cuts.push((t, None));
            }
        }
        let mut events: Vec<(f64, f64, Option<usize>, Option<usize>)> = cuts
            .into_iter()
            .map(|(t, root)| (t, t, root, None))
            .chain(arcs.into_iter().map(|(t0, t1, j)| (t0, t1, None, Some(j))))
            .collect();
        events.sort_by(|x, y| x.0.total_cmp(&y.0));

        let mut from = a;
        let mut from_root = start_root;
        for (t0, t1, root, arc_root) in events {
            let entry = a + d * t0;
            let entry = match root {
                Some(j) => Complex64::new(self.integrand.factors[j].root(), 0.0),
                None => entry,
            };
            pieces.push(Piece::Line {
                from,
                to: entry,
                start_root: from_root,
                end_root: root,
            });
            match arc_root {
                Some(j) => {
                    let center = Complex64::new(self.integrand.factors[j].root(), 0.0);
                    let exit = a + d * t1;
                    let theta0 = arg(entry - center);
                    let mut sweep = crate::complex_kernel::wrap(arg(exit - center) - theta0);
                    let chord_mid = a + d * (0.5 * (t0 + t1));
                    if (chord_mid - center).norm() == 0.0 || (sweep.abs() - PI).abs() < 1e-12 {
                        // the chord runs through the root; pass on the configured side
                        sweep = if (theta0 + 0.5 * PI).sin() * self.side.sign() > 0.0 {
                            PI
                        } else {
                            -PI
                        };
                    }
                    pieces.push(Piece::Arc {
                        center,
                        radius: self.detour_radius,
                        theta0,
                        sweep,
                    });
                    from = exit;
                    from_root = None;
                }
                None => {
                    from = entry;
                    from_root = root;
                }
            }
        }
        pieces.push(Piece::Line {
            from,
            to: b,
            start_root: from_root,
            end_root,
        });
        pieces.retain(|p| !matches!(p, Piece::Line { from, to, .. } if from == to));
        Ok(())
    }

    fn integrate_piece(&self, piece: Piece, tol: f64, budget: usize) -> quadrature::Integral {
        match piece {
            Piece::Line {
                from,
                to,
                start_root,
                end_root,
            } => match (start_root, end_root) {
                (Some(_), Some(_)) => {
                    let mid = 0.5 * (from + to);
                    let mid = if from.im == 0.0 && to.im == 0.0 {
                        Complex64::new(mid.re, 0.0)
                    } else {
                        mid
                    };
                    let left =
                        self.line_from_root(from, mid, start_root.unwrap(), tol / 2.0, budget);
                    let right = self.line_from_root(
                        to,
                        mid,
                        end_root.unwrap(),
                        tol / 2.0,
                        budget.saturating_sub(left.subdivisions),
                    );
                    combine(left, negate(right))
                }
                (Some(j), None) => self.line_from_root(from, to, j, tol, budget),
                (None, Some(j)) => negate(self.line_from_root(to, from, j, tol, budget)),
                (None, None) => {
                    let on_axis = from.im == 0.0 && to.im == 0.0;
                    let d = to - from;
                    quadrature::integrate(
                        |t| {
                            let z = from + d * t;
                            let z = if on_axis {
                                Complex64::new(z.re, 0.0)
                            } else {
                                z
                            };
                            self.integrand.eval_skipping(z, on_axis, self.side, None) * d
                        },
                        0.0,
                        1.0,
                        tol,
                        budget,
                    )
                }
            },
            Piece::Arc {
                center,
                radius,
                theta0,
                sweep,
            } => quadrature::integrate(
                |theta| {
                    let e = Complex64::from_polar(1.0, theta);
                    let z = center + e * radius;
                    self.integrand.eval_skipping(z, false, self.side, None)
                        * Complex64::new(0.0, radius)
                        * e
                },
                theta0,
                theta0 + sweep,
                tol,
                budget,
            ),
        }
    }

    /// Integral from the root of factor `j` (at `from`) to `to`.
    fn line_from_root(
        &self,
        from: Complex64,
        to: Complex64,
        j: usize,
        tol: f64,
        budget: usize,
    ) -> quadrature::Integral {
        let f = self.integrand.factors[j];
        let on_axis = from.im == 0.0 && to.im == 0.0;
        let d = to - from;
        if f.exponent >= 0.0 {
            return quadrature::integrate(
                |t| {
                    let z = from + d * t;
                    let z = if on_axis {
                        Complex64::new(z.re, 0.0)
                    } else {
                        z
                    };
                    self.integrand.eval_skipping(z, on_axis, self.side, None) * d
                },
                0.0,
                1.0,
                tol,
                budget,
            );
        }
        let m = 1.0 / (1.0 + f.exponent);
        let direction = f.b * d;
        // (b (z - p))^e * dz/ds with the s-dependence cancelled
        let constant = polar_power(
            direction.norm(),
            f.angle(direction, on_axis, self.side),
            f.exponent,
        ) * d
            * m;
        quadrature::integrate(
            |s| {
                let z = from + d * s.powf(m);
                let z = if on_axis {
                    Complex64::new(z.re, 0.0)
                } else {
                    z
                };
                constant * self.integrand.eval_skipping(z, on_axis, self.side, Some(j))
            },
            0.0,
            1.0,
            tol,
            budget,
        )
    }
}

fn negate(mut r: quadrature::Integral) -> quadrature::Integral {
    r.value = -r.value;
    r
}

fn combine(a: quadrature::Integral, b: quadrature::Integral) -> quadrature::Integral {
    quadrature::Integral {
        value: a.value + b.value,
        error: a.error + b.error,
        subdivisions: a.subdivisions + b.subdivisions,
        converged: a.converged && b.converged,
    }
}
