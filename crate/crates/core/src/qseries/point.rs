use std::fmt;

use crate::error::{Error, Result};
use crate::numeric::{Complex, Real};

/// A point of the closed unit disc written as `q = e^{-alpha}`.
///
/// Fractional powers of `q` are always taken as `e^{-s·alpha}`, which makes
/// `q^{-1/24}` single valued.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaPoint {
    alpha: Complex,
}

impl AlphaPoint {
    /// Requires `Re(alpha) >= 0` and `alpha != 0`.
    pub fn new(alpha: Complex) -> Result<Self> {
        if !(alpha.re.is_finite() && alpha.im.is_finite()) {
            return Err(Error::Domain(format!("alpha = {alpha} is not finite")));
        }
        if alpha.re < 0.0 {
            return Err(Error::Domain(format!("Re(alpha) = {} < 0 gives |q| > 1", alpha.re)));
        }
        if alpha.re == 0.0 && alpha.im == 0.0 {
            return Err(Error::Domain("alpha = 0 (q = 1) has no alpha-representation here; use a root of unity".into()));
        }
        Ok(Self { alpha })
    }

    pub fn real(alpha: Real) -> Result<Self> {
        Self::new(Complex::new(alpha, 0.0))
    }

    /// Principal logarithm: `alpha = -Log q`, so `Im(alpha)` lies in `(-π, π]`.
    pub fn from_q(q: Complex) -> Result<Self> {
        let r = q.norm();
        if r == 0.0 || r > 1.0 {
            return Err(Error::Domain(format!("|q| = {r} must lie in (0, 1]")));
        }
        Self::new(-q.ln())
    }

    pub fn alpha(&self) -> Complex {
        self.alpha
    }

    pub fn q(&self) -> Complex {
        (-self.alpha).exp()
    }

    /// `q^s = e^{-s·alpha}`.
    pub fn q_pow(&self, s: Real) -> Complex {
        (-s * self.alpha).exp()
    }

    pub fn is_interior(&self) -> bool {
        self.alpha.re > 0.0
    }

    /// The modular variable `z` in `alpha = -πiz`.
    pub fn z(&self) -> Complex {
        self.alpha / Complex::new(0.0, -std::f64::consts::PI)
    }

    pub(crate) fn require_interior(&self) -> Result<()> {
        if self.is_interior() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "alpha = {} is on the unit circle; interior evaluation needs Re(alpha) > 0",
                self.alpha
            )))
        }
    }
}

impl fmt::Display for AlphaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={}", self.alpha)
    }
}
