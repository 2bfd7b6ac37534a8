//! Numeric primitives shared across the crate.
//!
//! Everything floating-point goes through [`Real`] and [`Complex`], so a
//! wider number type can be swapped in at this one boundary.

use std::f64::consts::PI;

pub type Real = f64;
pub type Complex = num_complex::Complex<Real>;

pub const I: Complex = Complex::new(0.0, 1.0);

/// `e^{2πi·num/den}` with the exponent reduced exactly before the
/// trigonometric evaluation. Quarter turns come out exact.
pub fn turn(num: i64, den: u64) -> Complex {
    assert!(den > 0, "zero denominator");
    let den_i = den as i128;
    let mut r = (num as i128).rem_euclid(den_i);
    // symmetric residue keeps the angle in (-π, π]
    if 2 * r > den_i {
        r -= den_i;
    }
    if r == 0 {
        return Complex::new(1.0, 0.0);
    }
    if 2 * r == den_i {
        return Complex::new(-1.0, 0.0);
    }
    if 4 * r == den_i {
        return I;
    }
    if 4 * r == -den_i {
        return -I;
    }
    let angle = 2.0 * PI * (r as Real) / (den as Real);
    Complex::new(angle.cos(), angle.sin())
}

pub fn is_zero(z: Complex) -> bool {
    z.re == 0.0 && z.im == 0.0
}

/// Principal `z^{3/2}`.
pub fn pow_three_halves(z: Complex) -> Complex {
    z * z.sqrt()
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Accumulator {
    sum: Complex,
    comp: Complex,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: Complex) {
        self.sum.re = neumaier(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = neumaier(self.sum.im, x.im, &mut self.comp.im);
    }

    pub fn value(&self) -> Complex {
        self.sum + self.comp
    }
}

fn neumaier(sum: Real, x: Real, comp: &mut Real) -> Real {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

/// Ordinary least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[Real], ys: &[Real]) -> Real {
    assert_eq!(xs.len(), ys.len());
    assert!(xs.len() >= 2, "need at least two points");
    let lx: Vec<Real> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<Real> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as Real;
    let mx = lx.iter().sum::<Real>() / n;
    let my = ly.iter().sum::<Real>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for (x, y) in lx.iter().zip(&ly) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns_are_exact() {
        assert_eq!(turn(1, 4), I);
        assert_eq!(turn(-1, 4), -I);
        assert_eq!(turn(3, 4), -I);
        assert_eq!(turn(2, 4), Complex::new(-1.0, 0.0));
        assert_eq!(turn(0, 7), Complex::new(1.0, 0.0));
        assert_eq!(turn(96 * 5, 96), Complex::new(1.0, 0.0));
        assert_eq!(turn(24 * 3 + 6, 24), I);
    }

    #[test]
    fn turn_matches_exp() {
        for (n, d) in [(1, 3), (-23 * 41, 96), (5, 12), (-25, 24 * 201)] {
            let expect = (2.0 * PI * n as f64 / d as f64 * I).exp();
            assert!((turn(n, d) - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn slope_of_power_law() {
        let xs: Vec<f64> = (1..10).map(|k| k as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x.powf(-2.5)).collect();
        assert!((loglog_slope(&xs, &ys) + 2.5).abs() < 1e-12);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = Accumulator::new();
        acc.add(Complex::new(1e16, 0.0));
        for _ in 0..10 {
            acc.add(Complex::new(1.0, 0.0));
        }
        acc.add(Complex::new(-1e16, 0.0));
        assert_eq!(acc.value().re, 10.0);
    }
}
