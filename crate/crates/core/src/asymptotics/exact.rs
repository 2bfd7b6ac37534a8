use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numeric::{Complex, Real};

/// `re + im·i` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_real(BigRational::zero())
    }

    /// `(k·i)^a`.
    pub fn imaginary_power(k: &BigInt, a: usize) -> Self {
        let mag = BigRational::from_integer(num_traits::pow(k.clone(), a));
        match a % 4 {
            0 => Self::new(mag, BigRational::zero()),
            1 => Self::new(BigRational::zero(), mag),
            2 => Self::new(-mag, BigRational::zero()),
            _ => Self::new(BigRational::zero(), -mag),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn to_complex(&self) -> Complex {
        Complex::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

pub fn ratio_to_f64(r: &BigRational) -> Real {
    r.to_f64().unwrap_or(Real::NAN)
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

/// An exact Gaussian rational times `π^n`; the power of `π` stays symbolic
/// until [`PiMultiple::to_complex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiMultiple {
    pub coeff: GaussianRational,
    pub pi_power: usize,
}

impl PiMultiple {
    pub fn to_complex(&self) -> Complex {
        self.coeff.to_complex() * std::f64::consts::PI.powi(self.pi_power as i32)
    }

    pub fn is_one(&self) -> bool {
        self.pi_power == 0 && self.coeff.re.is_one() && self.coeff.im.is_zero()
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*pi^{}", self.coeff, self.pi_power)
    }
}
