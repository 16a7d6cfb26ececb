//! Globally adaptive 21-point Gauss-Kronrod quadrature for complex-valued
//! integrands of a real parameter.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

/// Tolerances shared by every contour integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Target absolute error of one integral.
    pub abs_tol: f64,
    /// Bisection budget of one integral (summed over the legs of a path).
    pub max_subdivisions: usize,
    /// Minimum distance kept between complex paths and prevertices.
    pub clearance: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            max_subdivisions: 1 << 14,
            clearance: 1e-8,
        }
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Result of one adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: Complex64,
    pub error: f64,
    pub subdivisions: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    abs_value: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    let mut abs_value = fc.norm() * WGK[10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        let sum = f1 + f2;
        kronrod += sum * WGK[j];
        abs_value += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += sum * WG[j / 2];
        }
    }
    let value = kronrod * half;
    let mut error = ((kronrod - gauss) * half).norm();
    if !error.is_finite() || !value.re.is_finite() || !value.im.is_finite() {
        error = f64::INFINITY;
    }
    Panel {
        a,
        b,
        value,
        error,
        abs_value: abs_value * half.abs(),
    }
}

/// Integrates `f` over `[a, b]`, bisecting the panel with the largest error
/// estimate until the summed estimate meets `tol` or `budget` bisections
/// are spent. Panels too narrow to split in floating point are retired.
pub fn integrate<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    budget: usize,
) -> Integral {
    if a == b {
        return Integral {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
            subdivisions: 0,
            converged: true,
        };
    }
    let first = gk21(&mut f, a, b);
    let mut heap = BinaryHeap::new();
    let mut retired: Vec<Panel> = Vec::new();
    heap.push(first);
    let mut subdivisions = 0;

    loop {
        let (value, error, abs_value) = heap
            .iter()
            .chain(retired.iter())
            .fold((Complex64::new(0.0, 0.0), 0.0, 0.0), |(v, e, s), p| {
                (v + p.value, e + p.error, s + p.abs_value)
            });
        // a request below the rounding level of the sum cannot be met
        let floor = 50.0 * f64::EPSILON * abs_value;
        let converged = error <= tol.max(floor);
        if converged || subdivisions >= budget || heap.is_empty() {
            return Integral {
                value,
                error,
                subdivisions,
                converged: converged && error.is_finite(),
            };
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        let width = (worst.b - worst.a).abs();
        if width <= 1e3 * f64::EPSILON * worst.a.abs().max(worst.b.abs()).max(f64::MIN_POSITIVE)
            || mid == worst.a
            || mid == worst.b
        {
            retired.push(worst);
            continue;
        }
        heap.push(gk21(&mut f, worst.a, mid));
        heap.push(gk21(&mut f, mid, worst.b));
        subdivisions += 1;
    }
}
