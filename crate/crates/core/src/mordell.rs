//! The Mordell integral `h(z;τ) = ∫_ℝ e^{πiτx² - 2πzx}/cosh(πx) dx` and the
//! obstruction integral `W(α)` appearing in Watson's transformations.
//!
//! `h` is integrated along the line `x = s·e^{iθ}` with `θ = (π/2 - arg τ)/2`,
//! which turns `e^{πiτx²}` into a pure Gaussian in `s`. The poles of `sech`
//! sit on the imaginary axis and `|θ| ≤ π/4`, so the rotation never crosses
//! them. The rotated integral is also the continuous boundary value of `h`
//! from the upper half-plane when `τ` is real, for every `z`.
//!
//! `W` is available through three independent routes: its defining integral
//! (`Re α > 0`), the rescaled integral that also converges for imaginary `α`,
//! and the pair of `h`-values at `τ = πi/(6α)`. On the imaginary axis the
//! `h`-route is taken after Zwegers' `τ ↦ -1/τ`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numeric::{pow_three_halves, turn, Complex, Real, I};
use crate::qseries::AlphaPoint;
use crate::quad::{self, decay_radius};

pub use crate::quad::QuadratureConfig;

fn initial_panels(count: Real, cfg: &QuadratureConfig) -> usize {
    (count.ceil() as usize).clamp(8, cfg.max_subdivisions / 2)
}

/// `h(z;τ)` for `Im τ > 0`, or for real `τ ≠ 0` as the boundary value from
/// above.
pub fn mordell_h(z: Complex, tau: Complex, cfg: &QuadratureConfig) -> Result<Complex> {
    cfg.validate()?;
    if !(z.re.is_finite() && z.im.is_finite() && tau.re.is_finite() && tau.im.is_finite()) {
        return Err(Error::Domain("non-finite argument to h".into()));
    }
    if tau.im < 0.0 {
        return Err(Error::Domain(format!("tau = {tau} below the real axis")));
    }
    if tau.norm() == 0.0 {
        return Err(Error::Domain("tau = 0".into()));
    }
    let theta = 0.5 * (0.5 * PI - tau.arg());
    let dir = Complex::from_polar(1.0, theta);
    let two_pi_z = 2.0 * PI * z;
    let gauss = PI * I * tau * dir * dir;
    let integrand = |s: Real| {
        let x = dir * s;
        let g = gauss * s * s;
        let num = (g + two_pi_z * x - PI * x).exp() + (g - two_pi_z * x - PI * x).exp();
        num / (1.0 + (-2.0 * PI * x).exp())
    };
    let target = 0.5 * cfg.tolerance;
    let rate = PI * tau.norm();
    let linear = PI * theta.cos() - 2.0 * PI * z.norm();
    let radius = cfg
        .truncation_radius_override
        .unwrap_or_else(|| decay_radius(rate, linear, 5.0, 1e-2 * target));
    let panels = 8.0 + 2.0 * radius * (z.norm() + 1.0) + radius * radius.sqrt();
    let est = quad::integrate(
        integrand,
        0.0,
        radius,
        initial_panels(panels, cfg),
        target,
        cfg.max_subdivisions,
    )?;
    Ok(2.0 * dir * est.value)
}

/// `|h(z/τ; -1/τ) - √(-iτ) e^{-πiz²/τ} h(z;τ)|`, principal square root.
pub fn zwegers_residual(z: Complex, tau: Complex, cfg: &QuadratureConfig) -> Result<Real> {
    let lhs = mordell_h(z / tau, -1.0 / tau, cfg)?;
    let rhs = (-I * tau).sqrt() * (-PI * I * z * z / tau).exp() * mordell_h(z, tau, cfg)?;
    Ok((lhs - rhs).norm())
}

/// `(cosh(a·y) + cosh(b·y)) / cosh(c·y)` rewritten for `Re y ≥ 0`, with
/// `extra` folded into every exponent.
fn cosh_ratio(extra: Complex, y: Complex, a: Real, b: Real, c: Real) -> Complex {
    let num = (extra + (a - c) * y).exp()
        + (extra - (a + c) * y).exp()
        + (extra + (b - c) * y).exp()
        + (extra - (b + c) * y).exp();
    num / (1.0 + (-2.0 * c * y).exp())
}

/// `W(α) = ∫_0^∞ e^{-(3/2)αx²} (cosh(5αx/2) + cosh(αx/2)) / cosh(3αx) dx`.
pub fn w_direct(p: AlphaPoint, cfg: &QuadratureConfig) -> Result<Complex> {
    cfg.validate()?;
    p.require_interior()?;
    let alpha = p.alpha();
    let integrand = |x: Real| cosh_ratio(-1.5 * alpha * x * x, alpha * x, 2.5, 0.5, 3.0);
    let target = cfg.tolerance;
    let radius = cfg
        .truncation_radius_override
        .unwrap_or_else(|| decay_radius(1.5 * alpha.re, 0.5 * alpha.re, 40.0, 1e-2 * target));
    // poles of sech(3αx) come within π·Re α/(6|α|²) of the real axis
    let pole_gap = PI * alpha.re / (6.0 * alpha.norm_sqr());
    let chirp = 1.5 * alpha.im.abs() * radius * radius / PI;
    let panels = 16.0 + radius / pole_gap + chirp;
    let est = quad::integrate(
        integrand,
        0.0,
        radius,
        initial_panels(panels, cfg),
        target,
        cfg.max_subdivisions,
    )?;
    Ok(est.value)
}

/// `W(α) = (π/3α) ∫_0^∞ e^{-π²u²/(6α)} (cosh(5πu/6) + cosh(πu/6)) / cosh(πu) du`,
/// valid for `Re α ≥ 0`, `α ≠ 0`.
pub fn w_extended(p: AlphaPoint, cfg: &QuadratureConfig) -> Result<Complex> {
    cfg.validate()?;
    let alpha = p.alpha();
    let inv = 1.0 / alpha;
    let prefactor = PI / 3.0 * inv;
    let gauss = PI * PI / 6.0 * inv;
    let integrand =
        |u: Real| cosh_ratio(-gauss * u * u, Complex::new(PI * u, 0.0), 5.0 / 6.0, 1.0 / 6.0, 1.0);
    let target = cfg.tolerance / prefactor.norm();
    let radius = cfg
        .truncation_radius_override
        .unwrap_or_else(|| decay_radius(gauss.re, PI / 6.0, 4.0, 1e-2 * target));
    let chirp = gauss.im.abs() * radius * radius / PI;
    let est = quad::integrate(
        integrand,
        0.0,
        radius,
        initial_panels(16.0 + radius + chirp, cfg),
        target,
        cfg.max_subdivisions,
    )?;
    Ok(prefactor * est.value)
}

/// `W(α) = (π/6α)[h(-1/12; πi/(6α)) + h(-5/12; πi/(6α))]` for `Re α > 0`.
pub fn w_via_h(p: AlphaPoint, cfg: &QuadratureConfig) -> Result<Complex> {
    cfg.validate()?;
    p.require_interior()?;
    let alpha = p.alpha();
    let prefactor = PI / (6.0 * alpha);
    let tau = PI * I / (6.0 * alpha);
    let inner = cfg.scaled(0.5 / prefactor.norm());
    let h1 = mordell_h(Complex::new(-1.0 / 12.0, 0.0), tau, &inner)?;
    let h5 = mordell_h(Complex::new(-5.0 / 12.0, 0.0), tau, &inner)?;
    Ok(prefactor * (h1 + h5))
}

/// `W(-2πil/m)` through the transformed `h`-integrals at real `τ = 12l/m`:
///
/// `W = √(mi/(12l)) [e^{-πil/(12m)} h(-l/m; 12l/m) + e^{-25πil/(12m)} h(-5l/m; 12l/m)]`.
///
/// Negative `l` uses `W(ᾱ) = conj W(α)`.
pub fn w_imaginary(l: i64, m: u64, cfg: &QuadratureConfig) -> Result<Complex> {
    if l == 0 || m == 0 {
        return Err(Error::Domain(format!("alpha = -2πi·{l}/{m} must be nonzero")));
    }
    if l < 0 {
        return Ok(w_imaginary(-l, m, cfg)?.conj());
    }
    cfg.validate()?;
    let lf = l as Real;
    let mf = m as Real;
    let tau = Complex::new(12.0 * lf / mf, 0.0);
    let prefactor = (I * mf / (12.0 * lf)).sqrt();
    let inner = cfg.scaled(0.5 / prefactor.norm());
    let h1 = mordell_h(Complex::new(-lf / mf, 0.0), tau, &inner)?;
    let h5 = mordell_h(Complex::new(-5.0 * lf / mf, 0.0), tau, &inner)?;
    let den = 24 * m;
    Ok(prefactor * (turn(-l, den) * h1 + turn(-25 * l, den) * h5))
}

/// `W(-2πi/m)`.
pub fn w_at_imaginary(m: u64, cfg: &QuadratureConfig) -> Result<Complex> {
    w_imaginary(1, m, cfg)
}

/// `|W(π²/α) - (α/π)^{3/2} W(α)|`, principal branch.
pub fn reflection_residual(p: AlphaPoint, cfg: &QuadratureConfig) -> Result<Real> {
    p.require_interior()?;
    let alpha = p.alpha();
    let image = AlphaPoint::new(PI * (PI / alpha))?;
    let lhs = w_extended(image, cfg)?;
    let rhs = pow_three_halves(alpha / PI) * w_extended(p, cfg)?;
    Ok((lhs - rhs).norm())
}

/// The three routes `[direct, extended, via h]` at one interior point.
pub fn w_all_forms(p: AlphaPoint, cfg: &QuadratureConfig) -> Result<[Complex; 3]> {
    Ok([w_direct(p, cfg)?, w_extended(p, cfg)?, w_via_h(p, cfg)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn pt(re: f64, im: f64) -> AlphaPoint {
        AlphaPoint::new(c(re, im)).unwrap()
    }

    /// Plain real-axis quadrature of h, valid when the integrand decays there.
    fn h_on_real_axis(z: Complex, tau: Complex) -> Complex {
        let f = |x: f64| {
            let e = (PI * I * tau * x * x - 2.0 * PI * z * x).exp() + (PI * I * tau * x * x + 2.0 * PI * z * x).exp();
            e / (PI * x).cosh()
        };
        let decay = PI * (1.0 - 2.0 * z.re.abs());
        let r = decay_radius(PI * tau.im.max(0.0), decay, 4.0, 1e-16);
        let panels = (10.0 + tau.norm() * r * r) as usize;
        quad::integrate(f, 0.0, r, panels, 1e-13, 1_000_000).unwrap().value
    }

    #[test]
    fn h_tends_to_one_as_tau_shrinks() {
        let v = mordell_h(c(0.0, 0.0), c(0.0, 1e-3), &cfg()).unwrap();
        assert!(v.re > 0.99 && v.re < 1.0 && v.im.abs() < 1e-12);
        // first-order term: 1 - π·Im τ/4
        assert!((v.re - (1.0 - PI * 1e-3 / 4.0)).abs() < 1e-5);
    }

    #[test]
    fn h_is_even_in_z() {
        for (z, tau) in [(c(0.3, -0.2), c(0.4, 1.1)), (c(-0.7, 0.5), c(-1.0, 0.6)), (c(0.1, 0.0), c(2.0, 0.0))] {
            let a = mordell_h(z, tau, &cfg()).unwrap();
            let b = mordell_h(-z, tau, &cfg()).unwrap();
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn rotated_contour_matches_real_axis() {
        for (z, tau) in [(c(0.1, 0.0), c(0.0, 2.0)), (c(-0.2, 0.3), c(0.5, 1.5)), (c(-1.0 / 12.0, 0.0), c(12.0 / 5.0, 0.0))] {
            let rotated = mordell_h(z, tau, &cfg()).unwrap();
            let direct = h_on_real_axis(z, tau);
            assert!((rotated - direct).norm() < 1e-10, "{z} {tau}: {rotated} vs {direct}");
        }
    }

    #[test]
    fn real_tau_boundary_is_refinement_stable() {
        let z = c(-1.0 / 12.0, 0.0);
        let tau = c(12.0 / 5.0, 0.0);
        let coarse = mordell_h(z, tau, &QuadratureConfig::with_tolerance(1e-10).unwrap()).unwrap();
        let fine = mordell_h(z, tau, &QuadratureConfig::with_tolerance(1e-13).unwrap()).unwrap();
        assert!(coarse.norm().is_finite());
        assert!((coarse - fine).norm() < 1e-9);
    }

    #[test]
    fn h_domain() {
        assert!(mordell_h(c(0.0, 0.0), c(1.0, -0.1), &cfg()).is_err());
        assert!(mordell_h(c(0.0, 0.0), c(0.0, 0.0), &cfg()).is_err());
    }

    #[test]
    fn zwegers_examples() {
        assert!(zwegers_residual(c(0.0, 0.0), c(0.0, 1.0), &cfg()).unwrap() < 1e-10);
        assert!(zwegers_residual(c(0.1, 0.0), c(0.0, 2.0), &cfg()).unwrap() < 1e-9);
        assert!(zwegers_residual(c(-1.0 / 12.0, 0.0), c(0.5, 2.0), &cfg()).unwrap() < 1e-9);
    }

    #[test]
    fn w_routes_agree() {
        let one = pt(1.0, 0.0);
        let d = w_direct(one, &cfg()).unwrap();
        assert!((d - w_extended(one, &cfg()).unwrap()).norm() < 1e-9);
        assert!((d - w_via_h(one, &cfg()).unwrap()).norm() < 1e-9);
        assert!(d.im.abs() < 1e-10);
        // reference value from arbitrary-precision quadrature
        assert!((d.re - 1.010_661_909_288_739_7).abs() < 1e-11);

        let p = pt(2.0, -1.0);
        assert!((w_direct(p, &cfg()).unwrap() - w_via_h(p, &cfg()).unwrap()).norm() < 1e-9);
        let p = pt(0.5, 0.3);
        assert!((w_via_h(p, &cfg()).unwrap() - w_extended(p, &cfg()).unwrap()).norm() < 1e-9);
    }

    #[test]
    fn w_direct_needs_interior() {
        let p = AlphaPoint::new(c(0.0, -1.0)).unwrap();
        assert!(matches!(w_direct(p, &cfg()), Err(Error::Domain(_))));
        assert!(w_extended(p, &cfg()).is_ok());
    }

    #[test]
    fn conjugation_symmetry() {
        for (re, im) in [(0.7, 1.3), (0.0, -2.0), (2.0, 0.4)] {
            let a = w_extended(pt(re, im), &cfg()).unwrap();
            let b = w_extended(pt(re, -im), &cfg()).unwrap();
            assert!((a.conj() - b).norm() < 1e-10);
        }
    }

    #[test]
    fn imaginary_axis_routes_agree() {
        for m in [1u64, 2, 3, 5, 7, 12, 40] {
            let alpha = AlphaPoint::new(c(0.0, -2.0 * PI / m as f64)).unwrap();
            let ext = w_extended(alpha, &cfg()).unwrap();
            let via = w_at_imaginary(m, &cfg()).unwrap();
            assert!((ext - via).norm() < 1e-8, "m = {m}: {ext} vs {via}");
        }
        for (l, m) in [(2i64, 5u64), (4, 9), (7, 12), (5, 8), (-3, 7)] {
            let alpha = AlphaPoint::new(c(0.0, -2.0 * PI * l as f64 / m as f64)).unwrap();
            let ext = w_extended(alpha, &cfg()).unwrap();
            let via = w_imaginary(l, m, &cfg()).unwrap();
            assert!((ext - via).norm() < 1e-8, "l/m = {l}/{m}: {ext} vs {via}");
        }
    }

    #[test]
    fn imaginary_w_grows_like_sqrt_m() {
        let ms: Vec<f64> = (0..8).map(|i| (50 * (1 << i)) as f64).collect();
        let ws: Vec<f64> = ms.iter().map(|&m| w_at_imaginary(m as u64, &cfg()).unwrap().norm()).collect();
        let slope = crate::numeric::loglog_slope(&ms, &ws);
        assert!((slope - 0.5).abs() < 0.05, "slope {slope}");
    }

    #[test]
    fn reflection_identity() {
        assert_eq!(reflection_residual(pt(PI, 0.0), &cfg()).unwrap(), 0.0);
        assert!(reflection_residual(pt(1.0, 0.0), &cfg()).unwrap() < 1e-9);
        assert!(reflection_residual(pt(2.0, 1.0), &cfg()).unwrap() < 1e-9);
        let w = w_via_h(pt(PI, 0.0), &cfg()).unwrap();
        assert!((w - w_extended(pt(PI, 0.0), &cfg()).unwrap()).norm() < 1e-9);
    }
}
