//! Coefficients of the asymptotic expansions of `φ` and `ψ`, and the
//! truncated expansions themselves.
//!
//! Radially at `q = 1`: `φ(e^{-t}) ~ Σ a_n tⁿ/n!`. At roots of unity of
//! growing order:
//!
//! ```text
//! ζ_{24m}^{-1} φ(ζ_m) ~ √(2mi) ζ_96^{-23m} + Σ (ζ_{24m}^{-1} b_n + ζ_{24m}^{-25} c_n) / mⁿ,   m = 2k+1
//! ζ_{96k}^{-1} ψ(ζ_{4k}) ~ √(2ki) ζ_24^k - ½ Σ (ζ_{96k}^{-1} b_n + ζ_{96k}^{-25} c_n) / (4k)ⁿ
//! ```
//!
//! with `b_n = a(-1)_n`, `c_n = a(-5)_n` and
//! `a(A)_n = πⁿ Σ_{a+2b=n} (-1)^{a+b} (3i)^a A^{2b} E_{2a+2b} / (a!(2b)!)`,
//! the Taylor coefficients in `1/m` of `h(A/m; 12/m)`.
//!
//! All coefficients are exact; floating point enters only when a truncated
//! sum is evaluated.

mod exact;

pub use exact::{ratio_to_f64 as exact_to_f64, GaussianRational, PiMultiple};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::euler::{euler_numbers, EulerTable};
use crate::numeric::{loglog_slope, turn, Complex, Real, I};
use crate::qseries::{eval_at_root, RootOfUnity, SeriesId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// `coeffs[n]` multiplies `tⁿ`.
    PowersOfT,
    /// `coeffs[n]` multiplies `m^{-n}`.
    PowersOfInvM,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticSeries {
    pub scale: Scale,
    pub coeffs: Vec<Complex>,
    /// Prefactor convention, human readable.
    pub meta: String,
}

impl AsymptoticSeries {
    pub fn new(scale: Scale, coeffs: Vec<Complex>, meta: impl Into<String>) -> Self {
        assert!(!coeffs.is_empty(), "an asymptotic series needs at least one coefficient");
        Self {
            scale,
            coeffs,
            meta: meta.into(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `Σ coeffs[n]·xⁿ` where `x` is `t` or `1/m`.
    pub fn eval(&self, x: Real) -> Complex {
        self.coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| acc * x + c)
    }

    /// First `n` whose term `|coeffs[n]·xⁿ|` exceeds the previous one. A
    /// truncation hint only; nothing uses it automatically.
    pub fn first_growing_term(&self, x: Real) -> Option<usize> {
        let mags: Vec<Real> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.norm() * x.abs().powi(n as i32))
            .collect();
        (1..mags.len()).find(|&n| mags[n] > mags[n - 1])
    }
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::one()];
    for k in 1..=n {
        let next = &f[k - 1] * BigInt::from(k);
        f.push(next);
    }
    f
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// `a_n = Σ_{a+2b+c=n} n!/(a!(2b)!c!) (3/2)^a (5/2)^{2b} E_{2a+2b}
///      + Σ_{a+2b=n} n!/(a!(2b)!) (3/2)^a (1/2)^{2b} E_{2a+2b}`.
pub fn coeff_a(n: usize, table: &EulerTable) -> Result<BigRational> {
    table.even(n)?;
    let f = factorials(n);
    let three_halves = rat(3, 2);
    let five_halves_sq = rat(25, 4);
    let half_sq = rat(1, 4);
    let mut total = BigRational::zero();
    for b in 0..=n / 2 {
        for a in 0..=n - 2 * b {
            let c = n - a - 2 * b;
            let e = BigRational::from_integer(table.even(a + b)?.clone());
            let multinomial = BigRational::new(f[n].clone(), &f[a] * &f[2 * b] * &f[c]);
            let powers = num_traits::pow(three_halves.clone(), a) * num_traits::pow(five_halves_sq.clone(), b);
            total += multinomial * powers * e;
        }
        let a = n - 2 * b;
        let e = BigRational::from_integer(table.even(a + b)?.clone());
        let multinomial = BigRational::new(f[n].clone(), &f[a] * &f[2 * b]);
        let powers = num_traits::pow(three_halves.clone(), a) * num_traits::pow(half_sq.clone(), b);
        total += multinomial * powers * e;
    }
    Ok(total)
}

/// `a(A)_n` as an exact Gaussian rational times `πⁿ`.
pub fn coeff_a_of(n: usize, big_a: &BigRational, table: &EulerTable) -> Result<PiMultiple> {
    table.even(n)?;
    let f = factorials(n);
    let three = BigInt::from(3);
    let a_sq = big_a * big_a;
    let mut total = GaussianRational::zero();
    for b in 0..=n / 2 {
        let a = n - 2 * b;
        let e = BigRational::from_integer(table.even(a + b)?.clone());
        let sign = if (a + b).is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
        let weight = sign * num_traits::pow(a_sq.clone(), b) * e / BigRational::from_integer(&f[a] * &f[2 * b]);
        total += GaussianRational::imaginary_power(&three, a).scale(&weight);
    }
    Ok(PiMultiple {
        coeff: total,
        pi_power: n,
    })
}

pub fn coeff_b(n: usize, table: &EulerTable) -> Result<PiMultiple> {
    coeff_a_of(n, &rat(-1, 1), table)
}

pub fn coeff_c(n: usize, table: &EulerTable) -> Result<PiMultiple> {
    coeff_a_of(n, &rat(-5, 1), table)
}

/// `φ(e^{-t}) ~ Σ_n (a_n/n!) tⁿ` as a series in `t`.
pub fn phi_radial_series(order: usize) -> AsymptoticSeries {
    let table = euler_numbers(order);
    let f = factorials(order);
    let coeffs = (0..=order)
        .map(|n| {
            let a = coeff_a(n, &table).expect("table sized to order");
            let c = a / BigRational::from_integer(f[n].clone());
            Complex::new(exact::ratio_to_f64(&c), 0.0)
        })
        .collect();
    AsymptoticSeries::new(Scale::PowersOfT, coeffs, "phi(e^-t) ~ sum a_n/n! t^n")
}

/// `S_N(t) = Σ_{n≤N} a_n tⁿ/n!`, meaningful for small `t ≤ 1`.
pub fn phi_radial_partial_sum(order: usize, t: Real) -> Real {
    debug_assert!(t > 0.0 && t <= 1.0, "radial expansion used outside 0 < t <= 1");
    phi_radial_series(order).eval(t).re
}

/// Numeric `b_n`, `c_n` for `n ≤ order`.
#[derive(Debug, Clone)]
pub struct RootExpansion {
    b: Vec<Complex>,
    c: Vec<Complex>,
}

impl RootExpansion {
    pub fn new(order: usize) -> Self {
        let table = euler_numbers(order);
        let b = (0..=order)
            .map(|n| coeff_b(n, &table).expect("table sized to order").to_complex())
            .collect();
        let c = (0..=order)
            .map(|n| coeff_c(n, &table).expect("table sized to order").to_complex())
            .collect();
        Self { b, c }
    }

    pub fn order(&self) -> usize {
        self.b.len() - 1
    }

    fn tail(&self, m: u64, den: u64) -> Complex {
        let w1 = turn(-1, den);
        let w25 = turn(-25, den);
        let inv = 1.0 / m as Real;
        let mut acc = Complex::new(0.0, 0.0);
        let mut pow = 1.0;
        for (b, c) in self.b.iter().zip(&self.c) {
            acc += (w1 * b + w25 * c) * pow;
            pow *= inv;
        }
        acc
    }

    /// Main term `√(2mi)·ζ_96^{-23m}`, `m = 2k+1`.
    pub fn phi_main(k: u64) -> Complex {
        let m = 2 * k + 1;
        (2.0 * m as Real * I).sqrt() * turn(-23 * m as i64, 96)
    }

    /// Main term `√(2ki)·ζ_24^k`.
    pub fn psi_main(k: u64) -> Complex {
        (2.0 * k as Real * I).sqrt() * turn(k as i64, 24)
    }

    pub fn phi(&self, k: u64) -> Complex {
        let m = 2 * k + 1;
        Self::phi_main(k) + self.tail(m, 24 * m)
    }

    pub fn psi(&self, k: u64) -> Complex {
        Self::psi_main(k) - 0.5 * self.tail(4 * k, 96 * k)
    }
}

/// Truncated expansion of `ζ_{24(2k+1)}^{-1} φ(ζ_{2k+1})` through `n = order`.
pub fn phi_root_asymptotic(k: u64, order: usize) -> Complex {
    RootExpansion::new(order).phi(k)
}

/// Truncated expansion of `ζ_{96k}^{-1} ψ(ζ_{4k})` through `n = order`.
pub fn psi_root_asymptotic(k: u64, order: usize) -> Complex {
    RootExpansion::new(order).psi(k)
}

/// Exact `ζ_{24(2k+1)}^{-1} φ(ζ_{2k+1})` from the finite sum. Partial
/// products peak near `10^7` at `k = 100`, which bounds the rounding error
/// there at about `10^{-9}`; it grows exponentially in `k`.
pub fn phi_root_exact(k: u64) -> Result<Complex> {
    let m = 2 * k + 1;
    let r = RootOfUnity::new(1, m)?;
    Ok(turn(-1, 24 * m) * eval_at_root(SeriesId::Phi, r)?)
}

/// Exact `ζ_{96k}^{-1} ψ(ζ_{4k})` from the finite sum.
pub fn psi_root_exact(k: u64) -> Result<Complex> {
    if k == 0 {
        return Err(Error::Domain("psi expansion needs k >= 1".into()));
    }
    let r = RootOfUnity::new(1, 4 * k)?;
    Ok(turn(-1, 96 * k) * eval_at_root(SeriesId::Psi, r)?)
}

/// Log-log fit of the truncation error over a range of orders `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorFit {
    pub order: usize,
    pub ms: Vec<u64>,
    pub errors: Vec<Real>,
    /// Decay exponent: minus the least-squares slope of `ln err` vs `ln m`.
    pub decay: Real,
    /// The same fit over the upper half of the `m` values only.
    pub tail_decay: Real,
    /// `arg((exact - tail)/main)` at the largest `m`; a constant phase error
    /// in the main term would survive here while the rest tends to zero.
    pub phase_offset: Real,
}

/// Fits `|exact - asymptotic(order)|` for `φ` (odd `m = 2k+1`) or `ψ`
/// (`m = 4k`) over every admissible `m` in `m_min..=m_max`.
pub fn fit_root_error(series: SeriesId, m_min: u64, m_max: u64, order: usize) -> Result<ErrorFit> {
    let exp = RootExpansion::new(order);
    let mut ms = Vec::new();
    let mut errors = Vec::new();
    let mut phase_offset: Real = 0.0;
    for m in m_min..=m_max {
        let (exact, approx, main) = match series {
            SeriesId::Phi if m % 2 == 1 && m >= 3 => {
                let k = (m - 1) / 2;
                (phi_root_exact(k)?, exp.phi(k), RootExpansion::phi_main(k))
            }
            SeriesId::Psi if m % 4 == 0 => {
                let k = m / 4;
                (psi_root_exact(k)?, exp.psi(k), RootExpansion::psi_main(k))
            }
            SeriesId::Phi | SeriesId::Psi => continue,
            other => {
                return Err(Error::Domain(format!("no root expansion for {other}")));
            }
        };
        let tail = approx - main;
        phase_offset = ((exact - tail) / main).arg();
        ms.push(m);
        errors.push((exact - approx).norm());
    }
    if ms.len() < 2 {
        return Err(Error::Domain(format!("fewer than two admissible m in {m_min}..={m_max}")));
    }
    let xs: Vec<Real> = ms.iter().map(|&m| m as Real).collect();
    let decay = -loglog_slope(&xs, &errors);
    let half = xs.len() / 2;
    let tail_decay = -loglog_slope(&xs[half..], &errors[half..]);
    Ok(ErrorFit {
        order,
        ms,
        errors,
        decay,
        tail_decay,
        phase_offset,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn table(n: usize) -> EulerTable {
        euler_numbers(n)
    }

    #[test]
    fn a_coefficients() {
        let t = table(4);
        assert_eq!(coeff_a(0, &t).unwrap(), rat(2, 1));
        assert_eq!(coeff_a(1, &t).unwrap(), rat(-2, 1));
        assert!(matches!(coeff_a(5, &t), Err(Error::TableTooSmall { .. })));
    }

    #[test]
    fn a_of_big_a() {
        let t = table(4);
        for big_a in [rat(-1, 1), rat(-5, 1), rat(7, 3)] {
            let v = coeff_a_of(0, &big_a, &t).unwrap();
            assert!(v.is_one());
        }
        let b1 = coeff_b(1, &t).unwrap();
        assert_eq!(b1.coeff, GaussianRational::new(rat(0, 1), rat(3, 1)));
        assert_eq!(b1.pi_power, 1);
        let c2 = coeff_c(2, &t).unwrap();
        assert_eq!(c2.coeff, GaussianRational::from_real(rat(-10, 1)));
        assert!((c2.to_complex() - Complex::new(-10.0 * PI * PI, 0.0)).norm() < 1e-12);
        assert_eq!(coeff_b(0, &t).unwrap().to_complex(), Complex::new(1.0, 0.0));
        assert_eq!(coeff_c(0, &t).unwrap().to_complex(), Complex::new(1.0, 0.0));
        // hand value: b_2 = π²(-(9/2)·5 + 1/2) = -22π²
        assert_eq!(coeff_b(2, &t).unwrap().coeff, GaussianRational::from_real(rat(-22, 1)));
    }

    #[test]
    fn coefficient_calls_are_reproducible() {
        let t = table(12);
        for n in 0..=12 {
            assert_eq!(coeff_a(n, &t).unwrap(), coeff_a(n, &t).unwrap());
            let x = coeff_c(n, &t).unwrap().to_complex();
            let y = coeff_c(n, &t).unwrap().to_complex();
            assert_eq!(x.re.to_bits(), y.re.to_bits());
        }
    }

    #[test]
    fn radial_partial_sums() {
        assert_eq!(phi_radial_partial_sum(0, 0.3), 2.0);
        assert!((phi_radial_partial_sum(1, 0.01) - 1.98).abs() < 1e-15);
    }

    #[test]
    fn main_term_magnitude() {
        for k in [1u64, 5, 40] {
            let m = (2 * k + 1) as f64;
            assert!((RootExpansion::phi_main(k).norm() - (2.0 * m).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn psi_at_i() {
        let lhs = psi_root_exact(1).unwrap();
        assert!((lhs - turn(-1, 96) * I).norm() < 1e-15);
    }

    #[test]
    fn higher_order_improves_at_large_k() {
        let exact = phi_root_exact(20).unwrap();
        let e0 = (exact - phi_root_asymptotic(20, 0)).norm();
        let e3 = (exact - phi_root_asymptotic(20, 3)).norm();
        assert!(e3 < e0);
        let exact = psi_root_exact(10).unwrap();
        assert!((exact - psi_root_asymptotic(10, 3)).norm() < (exact - psi_root_asymptotic(10, 0)).norm());
    }

    #[test]
    fn first_growing_term_hint() {
        let s = AsymptoticSeries::new(
            Scale::PowersOfInvM,
            vec![Complex::new(1.0, 0.0), Complex::new(1.0, 0.0), Complex::new(100.0, 0.0)],
            "",
        );
        assert_eq!(s.first_growing_term(0.5), Some(2));
        assert_eq!(s.first_growing_term(0.001), None);
    }

    #[test]
    fn root_error_fit_has_no_phase_offset() {
        for s in [SeriesId::Phi, SeriesId::Psi] {
            let fit = fit_root_error(s, 21, 201, 3).unwrap();
            assert!(fit.phase_offset.abs() < 1e-3, "{s}: {}", fit.phase_offset);
            let fit = fit_root_error(s, 21, 201, 2).unwrap();
            assert!((fit.tail_decay - 3.0).abs() < 0.2, "{s}: {}", fit.tail_decay);
        }
        assert!(fit_root_error(SeriesId::F, 3, 9, 1).is_err());
    }

    #[test]
    fn radial_remainder_order() {
        use crate::qseries::{eval_phi, AlphaPoint, Form};
        let rem = |t: f64| {
            let exact = eval_phi(AlphaPoint::real(t).unwrap(), Form::SumForm, 1e-17).unwrap().re;
            (exact - phi_radial_partial_sum(4, t)).abs()
        };
        let ratio = rem(0.02) / rem(0.01);
        assert!((16.0 * 0.7..=64.0 * 1.3).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn h_expansion_consistency() {
        use crate::mordell::{mordell_h, QuadratureConfig};
        let cfg = QuadratureConfig::default();
        let t = table(4);
        for a in [-1i64, -5] {
            let big_a = rat(a, 1);
            let coeffs: Vec<Complex> = (0..=4).map(|n| coeff_a_of(n, &big_a, &t).unwrap().to_complex()).collect();
            // below m ≈ 400 the large b_2, c_2 keep the fit pre-asymptotic
            let ms: Vec<u64> = (401..=1601).step_by(200).collect();
            let hs: Vec<Complex> = ms
                .iter()
                .map(|&m| {
                    let mf = m as f64;
                    mordell_h(Complex::new(a as f64 / mf, 0.0), Complex::new(12.0 / mf, 0.0), &cfg).unwrap()
                })
                .collect();
            for order in 0..=4 {
                let errs: Vec<f64> = ms
                    .iter()
                    .zip(&hs)
                    .map(|(&m, h)| {
                        let x = 1.0 / m as f64;
                        let approx = coeffs[..=order].iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| acc * x + c);
                        (h - approx).norm()
                    })
                    .collect();
                let xs: Vec<f64> = ms.iter().map(|&m| m as f64).collect();
                let decay = -loglog_slope(&xs, &errs);
                assert!((decay - (order as f64 + 1.0)).abs() <= 0.2, "A={a} N={order} decay={decay}");
            }
        }
    }

    #[test]
    fn psi_error_halving() {
        let exp = RootExpansion::new(2);
        let err = |k: u64| (psi_root_exact(k).unwrap() - exp.psi(k)).norm();
        let ratio = err(25) / err(50);
        assert!((8.0 * 0.6..=8.0 * 1.4).contains(&ratio), "ratio {ratio}");
    }
}
