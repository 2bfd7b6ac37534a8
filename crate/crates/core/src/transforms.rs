//! Watson's transformations under `q ↦ q₁ = e^{-π²/α}` and their limits at
//! roots of unity.
//!
//! ```text
//! q^{-1/24} φ(q) = √(4π/α) q₁^{-1/24} ψ(q₁) + √(6α/π) W(α)
//! q^{-1/24} ψ(q) = √(π/4α) q₁^{-1/24} φ(q₁) - √(3α/2π) W(α)
//! ```
//!
//! At `α = -2πil/m` both sides are finite sums plus an `h`-integral; the
//! images of the roots depend on the integer `l` itself, not only on the
//! root `ζ_m^l`, because `α` does.
//!
//! ```
//! use mocktheta::transforms::root_image;
//! use mocktheta::qseries::RootOfUnity;
//!
//! // ζ_3 ↦ ζ_4^{-3} = i
//! let img = root_image(RootOfUnity::new(1, 3).unwrap()).unwrap();
//! assert_eq!((img.numerator(), img.order()), (1, 4));
//! ```

use std::f64::consts::PI;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::mordell::{w_extended, w_imaginary, QuadratureConfig};
use crate::numeric::{turn, Complex, Real};
use crate::qseries::{eval_at_root, eval_phi, eval_psi, AlphaPoint, Form, Parity, RootOfUnity, SeriesId};

/// Series tolerance for the interior sums; far below any residual threshold.
const SERIES_TOL: Real = 1e-16;

/// A point and its image under `α ↦ π²/α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformPair {
    pub source: AlphaPoint,
    pub image: AlphaPoint,
}

impl TransformPair {
    pub fn new(source: AlphaPoint) -> Result<Self> {
        Ok(Self {
            source,
            image: q1_of(source)?,
        })
    }

    /// `|α·α₁ - π²|`.
    pub fn product_defect(&self) -> Real {
        (self.source.alpha() * self.image.alpha() - PI * PI).norm()
    }
}

/// `α₁ = π²/α`, computed as `π·(π/α)` so that `α = π` maps to itself exactly.
pub fn q1_of(p: AlphaPoint) -> Result<AlphaPoint> {
    let alpha = p.alpha();
    let image = PI * (PI / alpha);
    AlphaPoint::new(Complex::new(image.re.max(0.0), image.im))
}

/// `e^{-π²/α}` for `α = -2πil/m`, which is `e^{2πi(-m)/(4l)}`.
fn image_of_exponent(l: i64, m: u64) -> Result<RootOfUnity> {
    if l == 0 {
        return Err(Error::Domain("alpha = 0 has no image".into()));
    }
    let den = 4 * l.unsigned_abs();
    let num = if l > 0 { -(m as i64) } else { m as i64 };
    RootOfUnity::new(num, den)
}

/// Image of `ζ_m^l` (reduced, `0 < l < m`) under `q ↦ q₁`:
/// `ζ_{2k+1}^l ↦ ζ_{4l}^{-(2k+1)}` and `ζ_{4k}^l ↦ ζ_l^{-k}`.
pub fn root_image(r: RootOfUnity) -> Result<RootOfUnity> {
    match r.parity() {
        Parity::Odd | Parity::Fourfold if r.numerator() != 0 => {
            image_of_exponent(r.numerator(), r.order())
        }
        Parity::Odd | Parity::Fourfold => Err(Error::Domain("q = 1 has no image".into())),
        Parity::Other => Err(Error::WrongParity {
            series: "q -> q1",
            root: r.to_string(),
            required: "odd order or order divisible by 4",
        }),
    }
}

/// Each square-root prefactor below is taken principal on its own; splitting
/// off a common `√α` would change branches.
fn watson_terms(p: AlphaPoint, cfg: &QuadratureConfig) -> Result<(Complex, Complex, AlphaPoint)> {
    let image = q1_of(p)?;
    let w = w_extended(p, cfg)?;
    Ok((w, p.alpha(), image))
}

/// `|q^{-1/24}φ(q) - √(4π/α) q₁^{-1/24}ψ(q₁) - √(6α/π)W(α)|`.
pub fn watson_phi_residual(p: AlphaPoint, cfg: &QuadratureConfig) -> Result<Real> {
    p.require_interior()?;
    let (w, alpha, image) = watson_terms(p, cfg)?;
    let lhs = p.q_pow(-1.0 / 24.0) * eval_phi(p, Form::SumForm, SERIES_TOL)?;
    let rhs = (4.0 * PI / alpha).sqrt() * image.q_pow(-1.0 / 24.0) * eval_psi(image, Form::SumForm, SERIES_TOL)?
        + (6.0 * alpha / PI).sqrt() * w;
    Ok((lhs - rhs).norm())
}

/// `|q^{-1/24}ψ(q) - √(π/4α) q₁^{-1/24}φ(q₁) + √(3α/2π)W(α)|`.
pub fn watson_psi_residual(p: AlphaPoint, cfg: &QuadratureConfig) -> Result<Real> {
    p.require_interior()?;
    let (w, alpha, image) = watson_terms(p, cfg)?;
    let lhs = p.q_pow(-1.0 / 24.0) * eval_psi(p, Form::SumForm, SERIES_TOL)?;
    let rhs = (PI / (4.0 * alpha)).sqrt() * image.q_pow(-1.0 / 24.0) * eval_phi(image, Form::SumForm, SERIES_TOL)?
        - (3.0 * alpha / (2.0 * PI)).sqrt() * w;
    Ok((lhs - rhs).norm())
}

/// Ratio of the two ways of writing the `W` term of the `φ` equation:
/// `√(6α/π)·W(α)` against `√(2π/3α)·∫_0^∞ e^{-π²u²/6α}(cosh(5πu/6)+cosh(πu/6))/cosh(πu) du`,
/// the latter recovered from `W = (π/3α)·∫`. Equal to one when the constants
/// agree.
pub fn integral_prefactor_ratio(p: AlphaPoint) -> Complex {
    let alpha = p.alpha();
    let via_w = (6.0 * alpha / PI).sqrt() * (PI / (3.0 * alpha));
    let direct = (2.0 * PI / (3.0 * alpha)).sqrt();
    via_w / direct
}

fn check_coprime(l: i64, m: u64) -> Result<()> {
    if l == 0 || (l.unsigned_abs()).gcd(&m) != 1 {
        return Err(Error::Domain(format!("l = {l} must be coprime to {m}")));
    }
    Ok(())
}

/// `e^{2πi·num/den}` for a possibly negative `den`.
fn turn_signed(num: i64, den: i64) -> Complex {
    if den < 0 {
        turn(-num, den.unsigned_abs())
    } else {
        turn(num, den as u64)
    }
}

/// Residual of the `φ` equation at `α = -2πil/(2k+1)`, every series term an
/// exact finite sum and `W` from the `h`-route on the imaginary axis.
pub fn quantum_residual_phi(k: u64, l: i64, cfg: &QuadratureConfig) -> Result<Real> {
    let m = 2 * k + 1;
    check_coprime(l, m)?;
    let r = RootOfUnity::new(l, m)?;
    let image = image_of_exponent(l, m)?;
    let alpha = Complex::new(0.0, -2.0 * PI * l as Real / m as Real);
    let lhs = turn(-l, 24 * m) * eval_at_root(SeriesId::Phi, r)?;
    // q₁^{-1/24} = e^{α₁/24}, α₁ = πim/(2l)
    let q1_pow = turn_signed(m as i64, 96 * l);
    let rhs = (4.0 * PI / alpha).sqrt() * q1_pow * eval_at_root(SeriesId::Psi, image)?
        + (6.0 * alpha / PI).sqrt() * w_imaginary(l, m, cfg)?;
    Ok((lhs - rhs).norm())
}

/// Residual of the `ψ` equation at `α = -2πil/(4k)`.
pub fn quantum_residual_psi(k: u64, l: i64, cfg: &QuadratureConfig) -> Result<Real> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    let m = 4 * k;
    check_coprime(l, m)?;
    let r = RootOfUnity::new(l, m)?;
    let image = image_of_exponent(l, m)?;
    let alpha = Complex::new(0.0, -2.0 * PI * l as Real / m as Real);
    let lhs = turn(-l, 24 * m) * eval_at_root(SeriesId::Psi, r)?;
    // α₁ = 2πik/l
    let q1_pow = turn_signed(k as i64, 24 * l);
    let rhs = (PI / (4.0 * alpha)).sqrt() * q1_pow * eval_at_root(SeriesId::Phi, image)?
        - (3.0 * alpha / (2.0 * PI)).sqrt() * w_imaginary(l, m, cfg)?;
    Ok((lhs - rhs).norm())
}
