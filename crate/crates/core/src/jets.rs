//! Truncated Taylor series in `t` and the radial expansion of the sum forms
//! at a root of unity, `q = ζ·e^{-t}`.
//!
//! Each factor `1 ∓ ζ^e e^{-et}` of a Pochhammer product is expanded as a
//! jet. When `ζ^e = ±1` its constant term is set to exactly zero, so the
//! product's valuation is known from integer arithmetic and the infinite sum
//! collapses to finitely many jets at any fixed order.
//!
//! ```
//! use mocktheta::jets::radial_expansion;
//! use mocktheta::qseries::{RootOfUnity, SeriesId};
//!
//! let s = radial_expansion(SeriesId::Phi, RootOfUnity::one(), 3).unwrap();
//! assert!((s.coeffs[1].re + 2.0).abs() < 1e-12);
//! ```

use crate::asymptotics::{AsymptoticSeries, Scale};
use crate::error::{Error, Result};
use crate::numeric::{Complex, Real};
use crate::qseries::{RootOfUnity, SeriesId};

const ZERO_THRESHOLD: Real = 1e-12;

/// `Σ_{n≤order} coeffs[n]·tⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorJet {
    coeffs: Vec<Complex>,
}

impl TaylorJet {
    pub fn new(coeffs: Vec<Complex>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least a constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Complex::new(0.0, 0.0); order + 1])
    }

    pub fn constant(c: Complex, order: usize) -> Self {
        let mut j = Self::zero(order);
        j.coeffs[0] = c;
        j
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex> {
        self.coeffs
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.coeffs.len();
        let mut out = vec![Complex::new(0.0, 0.0); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == Complex::new(0.0, 0.0) {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(out))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn scale(&self, c: Complex) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Index of the first coefficient above `1e-12·(1 + max|c|)`; `order + 1`
    /// for a jet that is zero to working precision.
    pub fn valuation(&self) -> usize {
        let max = self.coeffs.iter().map(|c| c.norm()).fold(0.0, Real::max);
        let cut = ZERO_THRESHOLD * (1.0 + max);
        self.coeffs
            .iter()
            .position(|c| c.norm() > cut)
            .unwrap_or(self.coeffs.len())
    }
}

pub fn jet_mul(a: &TaylorJet, b: &TaylorJet) -> Result<TaylorJet> {
    a.try_mul(b)
}

pub fn jet_add(a: &TaylorJet, b: &TaylorJet) -> Result<TaylorJet> {
    a.try_add(b)
}

pub fn jet_scale(a: &TaylorJet, c: Complex) -> TaylorJet {
    a.scale(c)
}

/// `q^e = ζ^e e^{-et}` as a jet.
fn power_jet(r: RootOfUnity, e: i64, order: usize) -> TaylorJet {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = r.pow(e);
    for n in 0..=order {
        coeffs.push(c);
        c *= -(e as Real) / (n + 1) as Real;
    }
    TaylorJet::new(coeffs)
}

/// `q = ζ·e^{-t}` as a jet.
pub fn jet_q(r: RootOfUnity, order: usize) -> TaylorJet {
    power_jet(r, 1, order)
}

/// `1 + sign·q^e`, with the constant term exactly zero when `sign·ζ^e = -1`.
/// Returns whether that happened.
fn factor_jet(r: RootOfUnity, e: i64, sign: Real, order: usize) -> (TaylorJet, bool) {
    let mut j = power_jet(r, e, order).scale(Complex::new(sign, 0.0));
    let vanishes = if sign < 0.0 { r.pow_is_one(e) } else { r.pow_is_minus_one(e) };
    j.coeffs[0] = if vanishes {
        Complex::new(0.0, 0.0)
    } else {
        j.coeffs[0] + 1.0
    };
    (j, vanishes)
}

/// `1 - q^e` at `q = ζ e^{-t}`, one factor of `(q;q²)_n` when `e` is odd.
pub fn pochhammer_factor(r: RootOfUnity, e: i64, order: usize) -> TaylorJet {
    factor_jet(r, e, -1.0, order).0
}

/// Expansion of `s(ζ e^{-t})` in powers of `t` through `tⁿ`, `n = order`,
/// from the sum form. `c_0` is the value at the root.
pub fn radial_expansion(s: SeriesId, r: RootOfUnity, order: usize) -> Result<AsymptoticSeries> {
    s.check_root(r)?;
    let mut total = TaylorJet::zero(order);
    let mut prefix = TaylorJet::constant(Complex::new(1.0, 0.0), order);
    // number of factors of the prefix with an exactly zero constant term
    let mut zeros = 0usize;
    let mut n: i64 = 0;
    while zeros <= order {
        let term = match s {
            SeriesId::F => prefix.clone(),
            SeriesId::G | SeriesId::Phi => prefix.scale(Complex::new(if n % 2 == 0 { 1.0 } else { -1.0 }, 0.0)),
            SeriesId::Psi => prefix.try_mul(&power_jet(r, n + 1, order))?,
        };
        total = total.try_add(&term)?;
        let (factor, vanishes) = match s {
            SeriesId::F => factor_jet(r, n + 1, -1.0, order),
            SeriesId::G | SeriesId::Phi => factor_jet(r, 2 * n + 1, -1.0, order),
            SeriesId::Psi => factor_jet(r, 2 * n + 2, 1.0, order),
        };
        prefix = prefix.try_mul(&factor)?;
        zeros += vanishes as usize;
        n += 1;
    }
    if s == SeriesId::Phi {
        total = total.scale(Complex::new(2.0, 0.0));
    }
    Ok(AsymptoticSeries::new(
        Scale::PowersOfT,
        total.into_coeffs(),
        format!("{}(zeta e^-t) at zeta = e^(2 pi i {r}), coefficients of t^n", s.name()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::phi_radial_series;
    use crate::qseries::eval_at_root;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn mismatched_orders() {
        let a = TaylorJet::zero(2);
        let b = TaylorJet::zero(3);
        assert_eq!(a.try_mul(&b), Err(Error::OrderMismatch { left: 2, right: 3 }));
        assert!(jet_add(&a, &b).is_err());
    }

    #[test]
    fn product_by_hand() {
        let a = TaylorJet::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(0.0, 1.0)]);
        let b = TaylorJet::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)]);
        let p = jet_mul(&a, &b).unwrap();
        assert_eq!(p.coeffs(), &[c(0.0, 0.0), c(1.0, 0.0), c(5.0, 0.0)]);
        assert_eq!(p.valuation(), 1);
        assert_eq!(TaylorJet::zero(4).valuation(), 5);
        assert_eq!(jet_scale(&a, c(0.0, 1.0)).coeffs()[0], c(0.0, 1.0));
    }

    #[test]
    fn q_jet() {
        let r = RootOfUnity::new(1, 4).unwrap();
        let j = jet_q(r, 3);
        assert_eq!(j.coeffs()[0], c(0.0, 1.0));
        assert!((j.coeffs()[3] - c(0.0, -1.0 / 6.0)).norm() < 1e-16);
    }

    #[test]
    fn pochhammer_valuation_counts_vanishing_factors() {
        // (q;q²)_n at ζ_{2k+1}^l
        for (l, k) in [(1i64, 0u64), (1, 1), (2, 2), (3, 3)] {
            let r = RootOfUnity::new(l, 2 * k + 1).unwrap();
            let order = 6;
            let mut prefix = TaylorJet::constant(c(1.0, 0.0), order);
            let mut last = 0;
            for n in 0..12u64 {
                let v = prefix.valuation().min(order + 1);
                let expect = ((n + k) / (2 * k + 1)) as usize;
                assert_eq!(v, expect.min(order + 1), "l={l} k={k} n={n}");
                assert!(v >= last);
                last = v;
                let (f, _) = factor_jet(r, 2 * n as i64 + 1, -1.0, order);
                prefix = prefix.try_mul(&f).unwrap();
            }
        }
    }

    #[test]
    fn constant_term_is_value_at_root() {
        let cases = [
            (SeriesId::Phi, RootOfUnity::new(1, 3).unwrap()),
            (SeriesId::Phi, RootOfUnity::new(2, 5).unwrap()),
            (SeriesId::G, RootOfUnity::new(3, 7).unwrap()),
            (SeriesId::Psi, RootOfUnity::new(1, 4).unwrap()),
            (SeriesId::Psi, RootOfUnity::new(3, 8).unwrap()),
            (SeriesId::F, RootOfUnity::new(1, 6).unwrap()),
        ];
        for (s, r) in cases {
            let e = radial_expansion(s, r, 4).unwrap();
            let v = eval_at_root(s, r).unwrap();
            assert!((e.coeffs[0] - v).norm() < 1e-12, "{s} at {r}");
        }
    }

    #[test]
    fn phi_at_one_matches_euler_coefficients() {
        let jets = radial_expansion(SeriesId::Phi, RootOfUnity::one(), 8).unwrap();
        let exact = phi_radial_series(8);
        assert!((jets.coeffs[0] - c(2.0, 0.0)).norm() < 1e-14);
        assert!((jets.coeffs[1] - c(-2.0, 0.0)).norm() < 1e-12);
        for n in 0..=8 {
            let rel = (jets.coeffs[n] - exact.coeffs[n]).norm() / exact.coeffs[n].norm();
            assert!(rel < 1e-9, "n={n} rel={rel}");
        }
    }

    #[test]
    fn psi_at_i() {
        let e = radial_expansion(SeriesId::Psi, RootOfUnity::new(1, 4).unwrap(), 0).unwrap();
        assert!((e.coeffs[0] - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn expansion_matches_interior_values() {
        // φ(ζ_3 e^{-t}) against the truncated expansion; coefficients grow
        // factorially, so t has to be small
        let r = RootOfUnity::new(1, 3).unwrap();
        let e = radial_expansion(SeriesId::Phi, r, 6).unwrap();
        let t = 2e-4;
        let p = r.radial_point(t).unwrap();
        let direct = crate::qseries::eval_phi(p, crate::qseries::Form::SumForm, 1e-16).unwrap();
        assert!((direct - e.eval(t)).norm() < 1e-10);
    }

    #[test]
    fn wrong_parity() {
        let r = RootOfUnity::new(1, 4).unwrap();
        assert!(matches!(radial_expansion(SeriesId::Phi, r, 2), Err(Error::WrongParity { .. })));
    }

    fn jet_strategy() -> impl Strategy<Value = TaylorJet> {
        prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 5)
            .prop_map(|v| TaylorJet::new(v.into_iter().map(|(a, b)| Complex::new(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn product_commutes(a in jet_strategy(), b in jet_strategy()) {
            let ab = a.try_mul(&b).unwrap();
            let ba = b.try_mul(&a).unwrap();
            for (x, y) in ab.coeffs().iter().zip(ba.coeffs()) {
                prop_assert!((x - y).norm() <= 1e-12 * (1.0 + x.norm()));
            }
        }

        #[test]
        fn product_distributes(a in jet_strategy(), b in jet_strategy(), d in jet_strategy()) {
            let lhs = a.try_mul(&b.try_add(&d).unwrap()).unwrap();
            let rhs = a.try_mul(&b).unwrap().try_add(&a.try_mul(&d).unwrap()).unwrap();
            for (x, y) in lhs.coeffs().iter().zip(rhs.coeffs()) {
                prop_assert!((x - y).norm() <= 1e-10 * (1.0 + x.norm()));
            }
        }
    }
}
