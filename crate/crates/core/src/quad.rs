//! Adaptive Gauss–Kronrod (10/21-point) quadrature for complex integrands
//! on finite intervals.
//!
//! The improper integrals of this crate all have explicit decay envelopes, so
//! callers truncate with [`decay_radius`] and hand a finite interval here.
//! Panels are refined worst-first; the final sum runs over panels in
//! left-to-right order so results are bitwise reproducible.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::numeric::{Accumulator, Complex, Real};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Absolute error target.
    pub tolerance: Real,
    pub max_subdivisions: usize,
    pub truncation_radius_override: Option<Real>,
}

pub const MIN_TOLERANCE: Real = 1e-14;
pub const MAX_SUBDIVISIONS: usize = 1_000_000;

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-12,
            max_subdivisions: 400_000,
            truncation_radius_override: None,
        }
    }
}

impl QuadratureConfig {
    pub fn new(
        tolerance: Real,
        max_subdivisions: usize,
        truncation_radius_override: Option<Real>,
    ) -> Result<Self> {
        let cfg = Self {
            tolerance,
            max_subdivisions,
            truncation_radius_override,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_tolerance(tolerance: Real) -> Result<Self> {
        Self::new(tolerance, Self::default().max_subdivisions, None)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance >= MIN_TOLERANCE && self.tolerance.is_finite()) {
            return Err(Error::Domain(format!(
                "quadrature tolerance {} below the double-precision floor {MIN_TOLERANCE}",
                self.tolerance
            )));
        }
        if self.max_subdivisions == 0 || self.max_subdivisions > MAX_SUBDIVISIONS {
            return Err(Error::Domain(format!(
                "max_subdivisions {} outside 1..={MAX_SUBDIVISIONS}",
                self.max_subdivisions
            )));
        }
        if let Some(r) = self.truncation_radius_override {
            if !(r > 0.0 && r.is_finite()) {
                return Err(Error::Domain(format!("truncation radius {r} must be positive")));
            }
        }
        Ok(())
    }

    /// Same limits, tighter or looser absolute target.
    pub fn scaled(&self, factor: Real) -> Self {
        Self {
            tolerance: (self.tolerance * factor).max(MIN_TOLERANCE * 1e-2),
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex,
    pub error: Real,
    pub panels: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [Real; 11] = [
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
const WG: [Real; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [Real; 11] = [
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

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: Real,
    b: Real,
    value: Complex,
    error: Real,
    resabs: Real,
}

impl Panel {
    fn eval(f: &impl Fn(Real) -> Complex, a: Real, b: Real) -> Self {
        let center = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let fc = f(center);
        let mut kronrod = fc * WGK[10];
        let mut gauss = Complex::new(0.0, 0.0);
        let mut resabs = WGK[10] * fc.norm();
        let mut fv = [(Complex::new(0.0, 0.0), Complex::new(0.0, 0.0)); 10];
        for (j, slot) in fv.iter_mut().enumerate() {
            let dx = half * XGK[j];
            let f1 = f(center - dx);
            let f2 = f(center + dx);
            kronrod += (f1 + f2) * WGK[j];
            resabs += WGK[j] * (f1.norm() + f2.norm());
            if j % 2 == 1 {
                gauss += (f1 + f2) * WG[j / 2];
            }
            *slot = (f1, f2);
        }
        let mean = kronrod * 0.5;
        let mut resasc = WGK[10] * (fc - mean).norm();
        for (j, (f1, f2)) in fv.iter().enumerate() {
            resasc += WGK[j] * ((f1 - mean).norm() + (f2 - mean).norm());
        }
        let scale = half.abs();
        let value = kronrod * half;
        let resabs = resabs * scale;
        let resasc = resasc * scale;
        let mut error = ((kronrod - gauss) * half).norm();
        if resasc != 0.0 && error != 0.0 {
            error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
        }
        Panel {
            a,
            b,
            value,
            error,
            resabs,
        }
    }
}

struct Ranked(Panel);

impl PartialEq for Ranked {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Ranked {}
impl PartialOrd for Ranked {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Ranked {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .error
            .total_cmp(&other.0.error)
            .then_with(|| other.0.a.total_cmp(&self.0.a))
    }
}

/// Integrates `f` over `[a, b]`, starting from `initial_panels` equal panels.
pub fn integrate(
    f: impl Fn(Real) -> Complex,
    a: Real,
    b: Real,
    initial_panels: usize,
    tolerance: Real,
    max_panels: usize,
) -> Result<Estimate> {
    if !(a.is_finite() && b.is_finite()) || b < a {
        return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
    }
    if a == b {
        return Ok(Estimate {
            value: Complex::new(0.0, 0.0),
            error: 0.0,
            panels: 0,
        });
    }
    let n0 = initial_panels.clamp(1, max_panels.max(1));
    let width = (b - a) / n0 as Real;
    let mut heap = BinaryHeap::with_capacity(2 * n0);
    let mut finished = Vec::new();
    for i in 0..n0 {
        let lo = a + width * i as Real;
        let hi = if i + 1 == n0 { b } else { a + width * (i + 1) as Real };
        heap.push(Ranked(Panel::eval(&f, lo, hi)));
    }
    let mut count = n0;
    let mut total_err: Real = heap.iter().map(|p| p.0.error).sum();
    let mut total_abs: Real = heap.iter().map(|p| p.0.resabs).sum();
    let mut since_resum = 0usize;

    loop {
        let floor = 100.0 * Real::EPSILON * total_abs;
        if total_err <= tolerance.max(floor) {
            break;
        }
        let Some(Ranked(worst)) = heap.pop() else {
            break;
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            // cannot split further in floating point
            finished.push(worst);
            total_err -= worst.error;
            continue;
        }
        let left = Panel::eval(&f, worst.a, mid);
        let right = Panel::eval(&f, mid, worst.b);
        total_err += left.error + right.error - worst.error;
        total_abs += left.resabs + right.resabs - worst.resabs;
        heap.push(Ranked(left));
        heap.push(Ranked(right));
        count += 1;
        since_resum += 1;
        if since_resum == 1024 {
            total_err = heap.iter().map(|p| p.0.error).sum();
            total_abs = heap.iter().map(|p| p.0.resabs).sum::<Real>()
                + finished.iter().map(|p| p.resabs).sum::<Real>();
            since_resum = 0;
        }
        if count > max_panels {
            let estimate: Real = heap.iter().map(|p| p.0.error).sum();
            return Err(Error::QuadratureFailure {
                estimate,
                target: tolerance,
                panels: count,
            });
        }
    }

    let mut panels: Vec<Panel> = heap.into_iter().map(|r| r.0).chain(finished).collect();
    panels.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut acc = Accumulator::new();
    let mut error = 0.0;
    for p in &panels {
        acc.add(p.value);
        error += p.error;
    }
    let floor = 100.0 * Real::EPSILON * panels.iter().map(|p| p.resabs).sum::<Real>();
    if error > tolerance.max(floor) {
        return Err(Error::QuadratureFailure {
            estimate: error,
            target: tolerance,
            panels: count,
        });
    }
    Ok(Estimate {
        value: acc.value(),
        error,
        panels: count,
    })
}

/// Smallest `R > 0` with `amplitude · e^{-gauss·R² - linear·R} <= target`.
///
/// `linear` may be negative (exponential growth beaten by the Gaussian); at
/// least one of the rates must give decay.
pub fn decay_radius(gauss: Real, linear: Real, amplitude: Real, target: Real) -> Real {
    let need = (amplitude / target).ln().max(0.0);
    if gauss > 1e-300 {
        (-linear + (linear * linear + 4.0 * gauss * need).sqrt()) / (2.0 * gauss)
    } else {
        assert!(linear > 0.0, "integrand envelope does not decay");
        need / linear
    }
}
