use num_complex::Complex64;

use super::gamma::{gamma, recip_gamma};
use crate::{Error, Result};

const MAX_TERMS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    a: f64,
    b: f64,
    c: f64,
}

impl HypergeometricParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::Argument(
                "hypergeometric parameters must be finite".into(),
            ));
        }
        if c <= 0.0 && c.fract() == 0.0 {
            return Err(Error::Argument(format!(
                "c = {c} is zero or a negative integer"
            )));
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// Gauss hypergeometric function `2F1(a, b; c; zeta)` inside the unit disk
/// and at `zeta = 1`.
pub fn hyp2f1(params: HypergeometricParams, zeta: Complex64) -> Result<Complex64> {
    let HypergeometricParams { a, b, c } = params;
    if zeta == Complex64::new(1.0, 0.0) {
        let excess = c - a - b;
        if excess <= 0.0 {
            return Err(Error::Divergence(format!(
                "2F1 at 1 needs c - a - b > 0, got {excess}"
            )));
        }
        return Ok(Complex64::new(
            gamma(c) * gamma(excess) * recip_gamma(c - a) * recip_gamma(c - b),
            0.0,
        ));
    }
    if zeta.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "2F1 series needs |zeta| < 1, got |zeta| = {}",
            zeta.norm()
        )));
    }
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for n in 0..MAX_TERMS {
        let n = n as f64;
        term *= zeta * ((a + n) * (b + n) / ((c + n) * (n + 1.0)));
        sum += term;
        if term.norm() < 1e-15 * (1.0 + sum.norm()) {
            return Ok(sum);
        }
    }
    Err(Error::Domain(format!(
        "2F1 series did not settle within {MAX_TERMS} terms at |zeta| = {}",
        zeta.norm()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn examples() {
        let p = HypergeometricParams::new(0.5, 2.0 / 3.0, 1.5).unwrap();
        assert_eq!(hyp2f1(p, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let alpha = hyp2f1(p, c(1.0, 0.0)).unwrap();
        assert!((alpha.re - 2.1).abs() < 0.05);
        let log = HypergeometricParams::new(1.0, 1.0, 2.0).unwrap();
        let v = hyp2f1(log, c(0.5, 0.0)).unwrap();
        assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn elementary_identities() {
        // (1 - z)^(-a) and asin(z) / z
        let p = HypergeometricParams::new(0.7, 1.0, 1.0).unwrap();
        let z = c(0.3, -0.4);
        let expected = (c(1.0, 0.0) - z).powf(-0.7);
        assert!((hyp2f1(p, z).unwrap() - expected).norm() < 1e-14);
        let p = HypergeometricParams::new(0.5, 0.5, 1.5).unwrap();
        let z = c(0.2, 0.3);
        let expected = z.sqrt().asin() / z.sqrt();
        assert!((hyp2f1(p, z).unwrap() - expected).norm() < 1e-14);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            HypergeometricParams::new(1.0, 1.0, -2.0),
            Err(Error::Argument(_))
        ));
        let p = HypergeometricParams::new(1.0, 1.0, 2.0).unwrap();
        assert!(matches!(hyp2f1(p, c(1.0, 0.0)), Err(Error::Divergence(_))));
        assert!(matches!(hyp2f1(p, c(0.0, 1.0)), Err(Error::Domain(_))));
        assert!(matches!(hyp2f1(p, c(-1.0, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn terminating_series() {
        let p = HypergeometricParams::new(-2.0, 1.0, 1.0).unwrap();
        let z = c(0.4, 0.1);
        let expected = (c(1.0, 0.0) - z).powi(2);
        assert!((hyp2f1(p, z).unwrap() - expected).norm() < 1e-15);
        let at_one = hyp2f1(
            HypergeometricParams::new(-2.0, 1.0, 3.0).unwrap(),
            c(1.0, 0.0),
        );
        // Chu-Vandermonde: (c - b)_2 / (c)_2 = (2 * 3) / (3 * 4)
        assert!((at_one.unwrap().re - 0.5).abs() < 1e-13);
    }
}
