//! Images of coordinate lines and pointwise checks of analyticity.

use num_complex::Complex64;

use crate::complex_kernel::{arg, wrap, PrincipalAngle};
use crate::gallery::{ExampleName, GalleryEntry};
use crate::quadrature;
use crate::sc::{HalfPlane, SCSpec};
use crate::{Error, QuadratureConfig, Result};

/// A jump larger than this multiple of the median step is a break candidate.
const BREAK_FACTOR: f64 = 50.0;
const REFINE_STEPS: usize = 40;
/// Secant length used to measure image tangents.
const SECANT: f64 = 1e-6;
/// The hypergeometric closed forms converge slowly near `|z| = 1`; beyond
/// this radius grids use quadrature.
const SERIES_RADIUS: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A segment of the line `y = level` (horizontal) or `x = level` (vertical).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineRequest {
    orientation: Orientation,
    level: f64,
    lo: f64,
    hi: f64,
    samples: usize,
}

impl LineRequest {
    pub fn new(
        orientation: Orientation,
        level: f64,
        lo: f64,
        hi: f64,
        samples: usize,
    ) -> Result<Self> {
        if !(level.is_finite() && lo.is_finite() && hi.is_finite()) {
            return Err(Error::Argument("line coordinates must be finite".into()));
        }
        if lo >= hi {
            return Err(Error::Argument(format!("empty span [{lo}, {hi}]")));
        }
        if samples < 2 {
            return Err(Error::Argument(format!(
                "need at least 2 samples, got {samples}"
            )));
        }
        if orientation == Orientation::Horizontal && level == 0.0 {
            return Err(Error::Argument(
                "horizontal lines need a nonzero level; use +-epsilon for the real axis".into(),
            ));
        }
        Ok(Self {
            orientation,
            level,
            lo,
            hi,
            samples,
        })
    }

    pub fn horizontal(y: f64, lo: f64, hi: f64, samples: usize) -> Result<Self> {
        Self::new(Orientation::Horizontal, y, lo, hi, samples)
    }

    pub fn vertical(x: f64, lo: f64, hi: f64, samples: usize) -> Result<Self> {
        Self::new(Orientation::Vertical, x, lo, hi, samples)
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn level(&self) -> f64 {
        self.level
    }

    pub fn span(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    fn point(&self, t: f64) -> Complex64 {
        match self.orientation {
            Orientation::Horizontal => Complex64::new(t, self.level),
            Orientation::Vertical => Complex64::new(self.level, t),
        }
    }
}

/// Grid used for figures: horizontal lines at `+-epsilon` and `+-0.6 j`,
/// `j = 1..5`, over `x in [-6, 6]`; vertical lines `x = -5..5` over
/// `y in [-3, 3]`.
pub fn default_grid(epsilon: f64, samples: usize) -> Result<Vec<LineRequest>> {
    let mut levels: Vec<f64> = (1..=5).map(|j| 0.6 * j as f64).collect();
    levels.push(epsilon);
    levels.sort_by(f64::total_cmp);
    let mut lines = Vec::new();
    for &y in levels.iter().rev() {
        lines.push(LineRequest::horizontal(-y, -6.0, 6.0, samples)?);
    }
    for &y in &levels {
        lines.push(LineRequest::horizontal(y, -6.0, 6.0, samples)?);
    }
    for x in -5..=5 {
        lines.push(LineRequest::vertical(x as f64, -3.0, 3.0, samples)?);
    }
    Ok(lines)
}

/// Sampled image of one line.
///
/// A vertical line crossing the real axis carries both one-sided limits at
/// the crossing (source point `x + 0i` twice, lower limit first); its length
/// is therefore `samples + 2`, less any grid point falling exactly on the
/// axis. `breaks[j]` marks a discontinuity between points `j - 1` and `j`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Polyline {
    pub points: Vec<Complex64>,
    pub source_points: Vec<Complex64>,
    pub breaks: Vec<usize>,
    /// Samples dropped because they sit on a singular prevertex.
    pub skipped: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("sampling stopped after {} points: {cause}", .partial.points.len())]
pub struct SampleError {
    pub partial: Box<Polyline>,
    #[source]
    pub cause: Error,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MapSource {
    Spec(SCSpec),
    Gallery(GalleryEntry),
}

/// Evaluates a map from either a bare specification (quadrature only) or a
/// gallery entry (closed form where available).
#[derive(Debug, Clone, PartialEq)]
pub struct Mapper {
    source: MapSource,
    cfg: QuadratureConfig,
}

impl Mapper {
    pub fn new(source: MapSource, cfg: QuadratureConfig) -> Self {
        Self { source, cfg }
    }

    pub fn from_spec(spec: SCSpec, cfg: QuadratureConfig) -> Self {
        Self::new(MapSource::Spec(spec), cfg)
    }

    pub fn from_entry(entry: GalleryEntry, cfg: QuadratureConfig) -> Self {
        Self::new(MapSource::Gallery(entry), cfg)
    }

    pub fn spec(&self) -> &SCSpec {
        match &self.source {
            MapSource::Spec(s) => s,
            MapSource::Gallery(e) => &e.spec,
        }
    }

    pub fn source(&self) -> &MapSource {
        &self.source
    }

    pub fn config(&self) -> &QuadratureConfig {
        &self.cfg
    }

    fn entry_for(&self, z: Complex64) -> Option<&GalleryEntry> {
        match &self.source {
            MapSource::Gallery(e) => match e.name {
                ExampleName::TypeC | ExampleName::TypeD if z.norm() > SERIES_RADIUS => None,
                _ => Some(e),
            },
            MapSource::Spec(_) => None,
        }
    }

    /// Image of an off-axis point.
    pub fn value(&self, z: Complex64) -> Result<Complex64> {
        self.value_from(z, None)
    }

    /// Image of `z`, integrating from `anchor` when no closed form applies and
    /// the anchor shares the half-plane of `z`.
    fn value_from(
        &self,
        z: Complex64,
        anchor: Option<(Complex64, Complex64)>,
    ) -> Result<Complex64> {
        if HalfPlane::of(z).is_none() {
            return Err(Error::Argument(format!(
                "{z} lies on the real axis; use a one-sided limit"
            )));
        }
        if let Some(e) = self.entry_for(z) {
            match e.closed_form(z) {
                Err(Error::Domain(_)) => {}
                other => return other,
            }
        }
        let spec = self.spec();
        match anchor {
            Some(a) if HalfPlane::of(a.0) == HalfPlane::of(z) => {
                Ok(spec.map_point(z, a, &self.cfg)?.value)
            }
            _ => Ok(spec.evaluate(z, &self.cfg)?.value),
        }
    }

    /// One-sided limit at the real point `x`.
    pub fn limit(&self, x: f64, half: HalfPlane) -> Result<Complex64> {
        if let Some(e) = self.entry_for(Complex64::new(x, 0.0)) {
            match e.boundary_limit(x, half) {
                Err(Error::Domain(_)) => {}
                other => return other,
            }
        }
        self.spec().boundary_value(x, half, &self.cfg)
    }

    /// `integral from z to z + step of (f'(t) - f'(z)) dt`, with the
    /// difference formed from `log1p`/`expm1` of the factor ratios so it
    /// keeps full relative accuracy for short steps.
    fn excess_integral(
        &self,
        z: Complex64,
        step: Complex64,
        slope: Complex64,
    ) -> Result<Complex64> {
        let spec = self.spec();
        let offsets: Vec<(Complex64, f64)> = spec
            .prevertices()
            .iter()
            .map(|p| (step / (z - p.x), p.k))
            .collect();
        let out = quadrature::integrate(
            |t| {
                let log_ratio: Complex64 = offsets.iter().map(|&(u, k)| -k * log1p(u * t)).sum();
                slope * expm1(log_ratio) * step
            },
            0.0,
            1.0,
            0.0,
            64,
        );
        if !out.converged {
            return Err(Error::Convergence(Box::new(crate::QuadratureReport {
                value: out.value,
                abs_error_estimate: out.error,
                subdivisions: out.subdivisions,
                path: vec![z, z + step],
            })));
        }
        Ok(out.value)
    }
}

/// A map of the plane sampled pointwise.
pub trait PlaneMap {
    fn map(&self, z: Complex64) -> Result<Complex64>;

    /// `sum of weight * (w(z + step) - w(z))` over `terms`.
    fn increments(&self, z: Complex64, terms: &[(f64, Complex64)]) -> Result<Complex64> {
        let w0 = self.map(z)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for &(weight, step) in terms {
            acc += weight * (self.map(z + step)? - w0);
        }
        Ok(acc)
    }
}

/// A map with a known derivative.
pub trait ConformalMap: PlaneMap {
    fn derivative(&self, z: Complex64) -> Result<Complex64>;
}

impl<F: Fn(Complex64) -> Complex64> PlaneMap for F {
    fn map(&self, z: Complex64) -> Result<Complex64> {
        Ok(self(z))
    }
}

impl PlaneMap for Mapper {
    fn map(&self, z: Complex64) -> Result<Complex64> {
        self.value(z)
    }

    /// Integrates the derivative over each short step instead of
    /// differencing two map values, so the stencils see no cancellation
    /// error from the size of `w`.
    fn increments(&self, z: Complex64, terms: &[(f64, Complex64)]) -> Result<Complex64> {
        let half = HalfPlane::of(z);
        let nearest = self
            .spec()
            .prevertices()
            .iter()
            .map(|p| (z - p.x).norm())
            .fold(f64::INFINITY, f64::min);
        for &(_, step) in terms {
            if half.is_none() || HalfPlane::of(z + step) != half {
                return Err(Error::Domain(format!(
                    "step {step} from {z} leaves the open half-plane"
                )));
            }
            if step.norm() >= 0.5 * nearest {
                return Err(Error::Domain(format!(
                    "step {step} from {z} comes too close to a prevertex"
                )));
            }
        }
        let slope = self.spec().derivative(z)?;
        let mut linear = Complex64::new(0.0, 0.0);
        let mut rest = Complex64::new(0.0, 0.0);
        for &(weight, step) in terms {
            linear += weight * step;
            rest += weight * self.excess_integral(z, step, slope)?;
        }
        Ok(slope * linear + rest)
    }
}

impl ConformalMap for Mapper {
    fn derivative(&self, z: Complex64) -> Result<Complex64> {
        self.spec().derivative(z)
    }
}

fn log1p(u: Complex64) -> Complex64 {
    let modulus = 0.5 * (2.0 * u.re + u.norm_sqr()).ln_1p();
    Complex64::new(modulus, u.im.atan2(1.0 + u.re))
}

fn expm1(v: Complex64) -> Complex64 {
    let half_sin = (0.5 * v.im).sin();
    let cos_m1 = -2.0 * half_sin * half_sin;
    Complex64::new(v.re.exp_m1() * v.im.cos() + cos_m1, v.re.exp() * v.im.sin())
}

fn check_stencil(z: Complex64, h: f64) -> Result<()> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Argument(format!("step must be positive, got {h}")));
    }
    if z.im.abs() <= h {
        return Err(Error::Domain(format!(
            "stencil of step {h} around {z} touches the real axis"
        )));
    }
    Ok(())
}

/// `max(|u_x - v_y|, |u_y + v_x|)` from central differences of step `h`.
pub fn cauchy_riemann_residual<M: PlaneMap + ?Sized>(map: &M, z: Complex64, h: f64) -> Result<f64> {
    check_stencil(z, h)?;
    let i = Complex64::new(0.0, 1.0);
    let real = Complex64::new(h, 0.0);
    let dx = map.increments(z, &[(1.0, real), (-1.0, -real)])? / (2.0 * h);
    let dy = map.increments(z, &[(1.0, i * h), (-1.0, -i * h)])? / (2.0 * h);
    Ok((dx.re - dy.im).abs().max((dy.re + dx.im).abs()))
}

/// `(|Laplacian u|, |Laplacian v|)` from the five-point stencil of step `h`.
pub fn harmonic_residual<M: PlaneMap + ?Sized>(
    map: &M,
    z: Complex64,
    h: f64,
) -> Result<(f64, f64)> {
    check_stencil(z, h)?;
    let i = Complex64::new(0.0, 1.0);
    let real = Complex64::new(h, 0.0);
    let sum = map.increments(z, &[(1.0, real), (1.0, -real), (1.0, i * h), (1.0, -i * h)])?;
    let lap = sum / (h * h);
    Ok((lap.re.abs(), lap.im.abs()))
}

/// Direction `phi` of the image of a curve leaving `z` at angle `theta`,
/// predicted from the derivative, and its distance from the direction of a
/// short image secant.
pub fn tangent_orientation_check<M: ConformalMap + ?Sized>(
    map: &M,
    z: Complex64,
    theta: f64,
) -> Result<(PrincipalAngle, f64)> {
    let d = map.derivative(z)?;
    if d == Complex64::new(0.0, 0.0) || !(d.re.is_finite() && d.im.is_finite()) {
        return Err(Error::SingularPoint(z));
    }
    let phi = wrap(theta + arg(d));
    let secant = map.increments(z, &[(1.0, Complex64::from_polar(SECANT, theta))])?;
    let residual = wrap(phi - arg(secant)).abs();
    Ok((PrincipalAngle::new(phi)?, residual))
}

enum Station {
    Point(Complex64),
    Limit(f64, HalfPlane),
}

fn stations(req: &LineRequest) -> Vec<Station> {
    let n = req.samples;
    let ts: Vec<f64> = (0..n)
        .map(|j| {
            if j + 1 == n {
                req.hi
            } else {
                req.lo + (req.hi - req.lo) * j as f64 / (n - 1) as f64
            }
        })
        .collect();
    if req.orientation == Orientation::Horizontal {
        return ts.iter().map(|&t| Station::Point(req.point(t))).collect();
    }
    let x = req.level;
    let mut out = Vec::with_capacity(n + 2);
    for (j, &t) in ts.iter().enumerate() {
        if t == 0.0 {
            if j == 0 {
                out.push(Station::Limit(x, HalfPlane::Upper));
            } else if j + 1 == n {
                out.push(Station::Limit(x, HalfPlane::Lower));
            } else {
                out.push(Station::Limit(x, HalfPlane::Lower));
                out.push(Station::Limit(x, HalfPlane::Upper));
            }
            continue;
        }
        out.push(Station::Point(req.point(t)));
        if t < 0.0 && ts.get(j + 1).is_some_and(|&next| next > 0.0) {
            out.push(Station::Limit(x, HalfPlane::Lower));
            out.push(Station::Limit(x, HalfPlane::Upper));
        }
    }
    out
}

/// Maps the samples of `req`, chaining quadrature from the previous sample
/// when no closed form applies, and flags discontinuities.
///
/// Consecutive images further apart than 50 times the median step are
/// bisected; the break stands only if the jump survives repeated halving of
/// the source interval, which separates true jumps from steep corners.
pub fn sample_line(
    mapper: &Mapper,
    req: &LineRequest,
) -> std::result::Result<Polyline, SampleError> {
    let mut line = Polyline::default();
    let mut sides: Vec<HalfPlane> = Vec::new();
    let mut anchor: Option<(Complex64, Complex64)> = None;
    let mut pending_break = false;
    let fail = |line: &Polyline, cause: Error| SampleError {
        partial: Box::new(line.clone()),
        cause,
    };
    for station in stations(req) {
        let (z, half, result) = match station {
            Station::Point(z) => (
                z,
                HalfPlane::of(z).expect("off-axis"),
                mapper.value_from(z, anchor),
            ),
            Station::Limit(x, half) => (Complex64::new(x, 0.0), half, mapper.limit(x, half)),
        };
        let w = match result {
            Ok(w) => w,
            Err(Error::SingularPoint(_) | Error::Divergence(_)) => {
                if line.skipped.last() != Some(&z) {
                    line.skipped.push(z);
                }
                pending_break = true;
                continue;
            }
            Err(cause) => return Err(fail(&line, cause)),
        };
        let idx = line.points.len();
        let crosses = sides.last().is_some_and(|&prev| prev != half);
        if pending_break && idx > 0 {
            line.breaks.push(idx);
        } else if crosses {
            let prev = line.points[idx - 1];
            if (w - prev).norm() > 1e-7 * (1.0 + w.norm().max(prev.norm())) {
                line.breaks.push(idx);
            }
        }
        pending_break = false;
        line.points.push(w);
        line.source_points.push(z);
        sides.push(half);
        anchor = match station {
            Station::Point(_) => Some((z, w)),
            Station::Limit(..) => None,
        };
    }
    confirm_jumps(mapper, &mut line, &sides).map_err(|cause| fail(&line, cause))?;
    Ok(line)
}

fn confirm_jumps(mapper: &Mapper, line: &mut Polyline, sides: &[HalfPlane]) -> Result<()> {
    let steps: Vec<f64> = line
        .points
        .windows(2)
        .map(|p| (p[1] - p[0]).norm())
        .collect();
    if steps.is_empty() {
        return Ok(());
    }
    let mut sorted = steps.clone();
    sorted.sort_by(f64::total_cmp);
    let median = sorted[sorted.len() / 2];
    let mut found = Vec::new();
    for (j, &d) in steps.iter().enumerate() {
        let idx = j + 1;
        if d <= BREAK_FACTOR * median || line.breaks.contains(&idx) || sides[j] != sides[idx] {
            continue;
        }
        let a = (line.source_points[j], line.points[j]);
        let b = (line.source_points[idx], line.points[idx]);
        if persists(mapper, a, b)? {
            found.push(idx);
        }
    }
    line.breaks.extend(found);
    line.breaks.sort_unstable();
    line.breaks.dedup();
    Ok(())
}

/// Whether the jump between two samples survives bisection of the source
/// interval.
fn persists(mapper: &Mapper, a: (Complex64, Complex64), b: (Complex64, Complex64)) -> Result<bool> {
    let initial = (b.1 - a.1).norm();
    let (mut a, mut b) = (a, b);
    for _ in 0..REFINE_STEPS {
        let zm = 0.5 * (a.0 + b.0);
        if HalfPlane::of(zm).is_none() {
            break;
        }
        let wm = match mapper.value(zm) {
            Ok(w) => w,
            Err(Error::SingularPoint(_)) => break,
            Err(e) => return Err(e),
        };
        if (wm - a.1).norm() >= (b.1 - wm).norm() {
            b = (zm, wm);
        } else {
            a = (zm, wm);
        }
    }
    Ok((b.1 - a.1).norm() > 0.5 * initial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::entry;
    use crate::sc::PreVertex;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn type_a() -> Mapper {
        Mapper::from_entry(entry(ExampleName::TypeA), QuadratureConfig::default())
    }

    #[test]
    fn request_validation() {
        assert!(LineRequest::horizontal(0.0, -1.0, 1.0, 10).is_err());
        assert!(LineRequest::vertical(0.0, 1.0, 1.0, 10).is_err());
        assert!(LineRequest::vertical(0.0, -1.0, 1.0, 1).is_err());
        assert!(LineRequest::vertical(0.0, -1.0, 1.0, 2).is_ok());
    }

    #[test]
    fn vertical_lines_of_type_a() {
        let m = type_a();
        let left = sample_line(&m, &LineRequest::vertical(-4.0, -3.0, 3.0, 60).unwrap()).unwrap();
        assert_eq!(left.points.len(), 62);
        assert_eq!(left.breaks, vec![31]);
        assert_eq!(left.source_points[30], c(-4.0, 0.0));
        assert_eq!(left.source_points[31], c(-4.0, 0.0));
        assert!((left.points[30] - c(0.0, -4.0)).norm() < 1e-12);
        assert!((left.points[31] - c(0.0, 4.0)).norm() < 1e-12);
        let right = sample_line(&m, &LineRequest::vertical(4.0, -3.0, 3.0, 60).unwrap()).unwrap();
        assert!(right.breaks.is_empty());
    }

    #[test]
    fn exact_zero_sample_becomes_a_pair() {
        let m = type_a();
        let line = sample_line(&m, &LineRequest::vertical(-1.0, -1.0, 1.0, 3).unwrap()).unwrap();
        assert_eq!(line.points.len(), 4);
        assert_eq!(line.breaks, vec![2]);
    }

    #[test]
    fn corner_is_not_a_break() {
        // the image of y = epsilon turns through a right angle at w = 0
        let m = type_a();
        let line =
            sample_line(&m, &LineRequest::horizontal(1e-6, -9.0, 9.0, 101).unwrap()).unwrap();
        assert!(line.breaks.is_empty());
        let spec_only =
            Mapper::from_spec(entry(ExampleName::TypeA).spec, QuadratureConfig::default());
        let quad = sample_line(
            &spec_only,
            &LineRequest::horizontal(1e-6, -9.0, 9.0, 101).unwrap(),
        )
        .unwrap();
        assert!(quad.breaks.is_empty());
        for (p, q) in line.points.iter().zip(&quad.points) {
            assert!((p - q).norm() < 1e-7);
        }
    }

    #[test]
    fn singular_prevertex_is_skipped() {
        let spec = SCSpec::new(
            c(1.0, 0.0),
            c(0.0, 0.0),
            vec![PreVertex::new(0.0, 1.0).unwrap()],
        )
        .unwrap();
        let m = Mapper::from_spec(spec, QuadratureConfig::default());
        let line = sample_line(&m, &LineRequest::vertical(0.0, -1.0, 1.0, 4).unwrap()).unwrap();
        assert_eq!(line.points.len(), 4);
        assert_eq!(line.skipped, vec![c(0.0, 0.0)]);
        assert_eq!(line.breaks, vec![2]);
    }

    #[test]
    fn surrogate_residuals() {
        let square = |z: Complex64| z * z;
        assert!(cauchy_riemann_residual(&square, c(0.7, 0.4), 1e-4).unwrap() < 1e-8);
        let (hu, hv) = harmonic_residual(&square, c(0.7, 0.4), 1e-3).unwrap();
        assert!(hu < 1e-9 && hv < 1e-9);
        let skew = |z: Complex64| c(z.re + z.im, z.re - z.im);
        assert!((cauchy_riemann_residual(&skew, c(0.3, 0.5), 1e-4).unwrap() - 2.0).abs() < 1e-9);
        let bowl = |z: Complex64| c(z.re * z.re, 0.0);
        let (hu, _) = harmonic_residual(&bowl, c(0.3, 0.5), 1e-3).unwrap();
        assert!((hu - 2.0).abs() < 1e-6);
        assert!(matches!(
            cauchy_riemann_residual(&square, c(0.0, 1e-5), 1e-4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gallery_residuals() {
        let a = type_a();
        assert!(cauchy_riemann_residual(&a, c(1.0, 1.0), 1e-4).unwrap() < 1e-6);
        let b = Mapper::from_entry(entry(ExampleName::TypeB), QuadratureConfig::default());
        let (hu, hv) = harmonic_residual(&b, c(2.0, 1.0), 1e-3).unwrap();
        assert!(hu <= 1e-4 && hv <= 1e-4);
    }

    #[test]
    fn tangent_examples() {
        let identity = Mapper::from_spec(
            SCSpec::new(c(1.0, 0.0), c(0.0, 0.0), vec![]).unwrap(),
            QuadratureConfig::default(),
        );
        let (phi, residual) = tangent_orientation_check(&identity, c(0.2, 0.3), 1.0).unwrap();
        assert!((phi.radians() - 1.0).abs() < 1e-15 && residual < 1e-12);
        let a = type_a();
        let (phi, residual) = tangent_orientation_check(&a, c(1.0, 1.0), 0.0).unwrap();
        assert!((phi.radians() + PI / 8.0).abs() < 1e-14 && residual < 1e-4);
        let (phi, _) = tangent_orientation_check(&a, c(1.0, 1.0), PI / 2.0).unwrap();
        assert!((phi.radians() - 3.0 * PI / 8.0).abs() < 1e-14);
    }

    #[test]
    fn accurate_small_differences() {
        let u = c(1e-9, -2e-9);
        assert!((log1p(u) - u).norm() < 1e-17);
        assert!((expm1(u) - u).norm() < 1e-17);
        let v = c(0.3, -0.2);
        assert!((log1p(v) - (v + 1.0).ln()).norm() < 1e-15);
        assert!((expm1(v) - (v.exp() - 1.0)).norm() < 1e-15);
    }
}
