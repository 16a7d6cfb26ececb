//! Reference computations that share no code with the library.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Tanh-sinh quadrature on `[a, b]`. The integrand receives the abscissa and
/// its distances to both ends, exact near the endpoints.
pub fn tanh_sinh<F: Fn(f64, f64, f64) -> Complex64>(f: F, a: f64, b: f64) -> Complex64 {
    let half = 0.5 * (b - a);
    let mut h = 1.0;
    let mut previous = Complex64::new(f64::NAN, 0.0);
    for _ in 0..12 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut j: i64 = -((6.0 / h) as i64);
        while (j as f64) * h <= 6.0 {
            let s = j as f64 * h;
            let u = 0.5 * PI * s.sinh();
            let weight = 0.5 * PI * s.cosh() / (u.cosh() * u.cosh());
            // 1 - tanh(u) and 1 + tanh(u) without cancellation
            let right = (-u).exp() / u.cosh();
            let left = u.exp() / u.cosh();
            let dl = half * left;
            let dr = half * right;
            if dl > 0.0 && dr > 0.0 {
                sum += weight * f(a + dl, dl, dr);
            }
            j += 1;
        }
        let estimate = sum * h * half;
        if (estimate - previous).norm() <= 1e-14 * (1.0 + estimate.norm()) {
            return estimate;
        }
        previous = estimate;
        h *= 0.5;
    }
    previous
}

/// Euler's integral for `2F1(a, b; c; z)`, valid for `c > b > 0`.
pub fn hyp2f1_euler(a: f64, b: f64, c: f64, z: Complex64) -> Complex64 {
    use statrs::function::gamma::gamma;
    let scale = gamma(c) / (gamma(b) * gamma(c - b));
    let one = Complex64::new(1.0, 0.0);
    scale
        * tanh_sinh(
            |t, dt0, dt1| {
                let kernel = dt0.powf(b - 1.0) * dt1.powf(c - b - 1.0);
                kernel * (one - z * t).powf(-a)
            },
            0.0,
            1.0,
        )
}

/// `integral from 0 to x of sqrt(1 - k^2 t^2) / sqrt(1 - t^2) dt` for real
/// `0 < x < min(1, 1/k)`.
pub fn ellip_e_real(x: f64, k: f64) -> f64 {
    tanh_sinh(
        |t, _, _| Complex64::new(((1.0 - k * k * t * t) / (1.0 - t * t)).sqrt(), 0.0),
        0.0,
        x,
    )
    .re
}

/// Trapezoid rule with `n` panels over `[0, pi]` for an integrand that
/// extends to a smooth even periodic function.
pub fn periodic_trapezoid<F: Fn(f64) -> f64>(f: F, n: usize) -> f64 {
    let h = PI / n as f64;
    let inner: f64 = (1..n).map(|j| f(j as f64 * h)).sum();
    h * (inner + 0.5 * (f(0.0) + f(PI)))
}

/// Pillar height over `[1, 2]` with `x = 1.5 - 0.5 cos(theta)`.
pub fn pillar_a_oracle() -> f64 {
    periodic_trapezoid(
        |theta| {
            let x = 1.5 - 0.5 * theta.cos();
            (0.5 * theta).sin().powi(2) * ((x + 1.0) / (x + 2.0)).sqrt()
        },
        4096,
    )
}

/// Pillar width over `[-1, 1]` with `x = cos(theta)`.
pub fn pillar_b_oracle() -> f64 {
    periodic_trapezoid(
        |theta| theta.sin().powi(2) / (4.0 - theta.cos().powi(2)).sqrt(),
        4096,
    )
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Point with `x` in `[-x_max, x_max]` and `|y|` in `[y_min, y_max]`, in the
/// upper half-plane when `upper`.
pub fn random_point(
    rng: &mut ChaCha8Rng,
    x_max: f64,
    y_min: f64,
    y_max: f64,
    upper: bool,
) -> Complex64 {
    let x = rng.gen_range(-x_max..=x_max);
    let y = rng.gen_range(y_min..=y_max);
    c(x, if upper { y } else { -y })
}
