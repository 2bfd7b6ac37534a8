use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;

use super::AlphaPoint;
use crate::error::{Error, Result};
use crate::numeric::{turn, Complex, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Odd order.
    Odd,
    /// Order divisible by four.
    Fourfold,
    Other,
}

/// The root of unity `ζ_N^l = e^{2πil/N}`, stored as a reduced fraction with
/// `0 <= l < N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    num: i64,
    den: u64,
}

impl RootOfUnity {
    /// Reduces `l/N`; `ζ_4^2` and `ζ_2^1` are the same root.
    pub fn new(l: i64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("root of unity with order 0".into()));
        }
        let n_i = n as i64;
        let l = l.rem_euclid(n_i);
        let g = l.gcd(&n_i);
        Ok(Self {
            num: l / g,
            den: n / g as u64,
        })
    }

    pub fn one() -> Self {
        Self { num: 0, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn parity(&self) -> Parity {
        if self.den % 2 == 1 {
            Parity::Odd
        } else if self.den.is_multiple_of(4) {
            Parity::Fourfold
        } else {
            Parity::Other
        }
    }

    /// `ζ^e`, with the exponent reduced modulo the order first.
    pub fn pow(&self, e: i64) -> Complex {
        turn(self.exponent(e), self.den)
    }

    /// Residue of `l·e` modulo `N`.
    pub fn exponent(&self, e: i64) -> i64 {
        let n = self.den as i128;
        ((self.num as i128) * (e as i128)).rem_euclid(n) as i64
    }

    /// `ζ^e == 1`, decided on integers.
    pub fn pow_is_one(&self, e: i64) -> bool {
        self.exponent(e) == 0
    }

    /// `ζ^e == -1`, decided on integers.
    pub fn pow_is_minus_one(&self, e: i64) -> bool {
        2 * self.exponent(e) as i128 == self.den as i128
    }

    pub fn value(&self) -> Complex {
        self.pow(1)
    }

    /// `alpha = -2πil/N`, purely imaginary.
    pub fn alpha(&self) -> Complex {
        Complex::new(0.0, -2.0 * PI * self.num as Real / self.den as Real)
    }

    /// The point `ζ·e^{-t}` on the radius through this root.
    pub fn radial_point(&self, t: Real) -> Result<AlphaPoint> {
        AlphaPoint::new(Complex::new(t, 0.0) + self.alpha())
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
