//! Euler numbers `E_{2n}`, the Taylor coefficients of `sech x`, as exact
//! integers, plus a quadrature check of the moment identity
//! `E_{2n} = (-1)^n 2^{2n} ∫_ℝ w^{2n}/cosh(πw) dw`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::{Complex, Real};
use crate::quad::{self, QuadratureConfig};

/// `E_0, E_2, …, E_{2M}`; odd-index Euler numbers vanish and are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTable {
    values: Vec<BigInt>,
}

impl EulerTable {
    /// Largest `M` with `E_{2M}` present.
    pub fn max_half_index(&self) -> usize {
        self.values.len() - 1
    }

    /// `E_{2n}`.
    pub fn even(&self, n: usize) -> Result<&BigInt> {
        self.values.get(n).ok_or(Error::TableTooSmall {
            have: 2 * self.max_half_index(),
            need: 2 * n,
        })
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1u32)];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Exact `E_0..E_{2M}` from `Σ_{k≤n} C(2n,2k) E_{2k} = 0` for `n ≥ 1`.
pub fn euler_numbers(m: usize) -> EulerTable {
    let mut values: Vec<BigInt> = Vec::with_capacity(m + 1);
    values.push(BigInt::from(1u32));
    for n in 1..=m {
        let row = binomial_row(2 * n);
        let mut s = BigInt::zero();
        for (k, e) in values.iter().enumerate() {
            s += &row[2 * k] * e;
        }
        values.push(-s);
    }
    EulerTable { values }
}

pub const MAX_INTEGRAL_INDEX: usize = 10;

/// Relative residual `|(-1)^n 4^n ∫ w^{2n}/cosh(πw) dw - E_{2n}| / max(1, |E_{2n}|)`.
pub fn euler_integral_residual(n: usize, cfg: &QuadratureConfig) -> Result<Real> {
    if n > MAX_INTEGRAL_INDEX {
        return Err(Error::Domain(format!(
            "moment index {n} above {MAX_INTEGRAL_INDEX}: integrand exceeds double range for the check"
        )));
    }
    cfg.validate()?;
    let exact = euler_numbers(n).even(n)?.to_f64().expect("E_20 fits in f64");
    let scale = 4f64.powi(n as i32);
    // ∫_ℝ = 2∫_0^∞; the moment tolerance is tightened so the relative
    // residual after scaling by 4^n stays below cfg.tolerance·max(1,|E|)
    let target = 0.5 * cfg.tolerance * exact.abs().max(1.0) / scale;
    let radius = cfg
        .truncation_radius_override
        .unwrap_or_else(|| moment_radius(n, target * 1e-2));
    let p = 2 * n as i32;
    let est = quad::integrate(
        |w| Complex::new(w.powi(p) * sech_pi(w), 0.0),
        0.0,
        radius,
        16 + 2 * n,
        target,
        cfg.max_subdivisions,
    )?;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let value = sign * scale * 2.0 * est.value.re;
    Ok((value - exact).abs() / exact.abs().max(1.0))
}

fn sech_pi(w: Real) -> Real {
    let e = (-PI * w.abs()).exp();
    2.0 * e / (1.0 + e * e)
}

/// `W*` with `2 W*^{2n} e^{-πW*} < target`, by fixed-point iteration on the log.
fn moment_radius(n: usize, target: Real) -> Real {
    let k = 2.0 * n as Real;
    let mut w: Real = 1.0;
    for _ in 0..100 {
        let next = ((2.0 / target).ln() + k * w.max(1.0).ln()) / PI;
        if (next - w).abs() < 1e-12 {
            break;
        }
        w = next;
    }
    w.max(1.0)
}
