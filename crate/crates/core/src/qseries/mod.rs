//! q-Pochhammer symbols and the series `F`, `G`, `φ`, `ψ`.
//!
//! Inside the disc the series are summed directly in either of their two
//! printed forms. At an admissible root of unity the sum form degenerates:
//! some factor of the running Pochhammer product vanishes exactly, and every
//! later term carries that factor. The vanishing index is found by integer
//! arithmetic on exponents, never by comparing floats against zero.
//!
//! ```
//! use mocktheta::qseries::{eval_at_root, RootOfUnity, SeriesId};
//!
//! let phi_at_one = eval_at_root(SeriesId::Phi, RootOfUnity::one()).unwrap();
//! assert_eq!(phi_at_one.re, 2.0);
//! ```

mod point;
mod root;

pub use point::AlphaPoint;
pub use root::{Parity, RootOfUnity};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numeric::{Accumulator, Complex, Real};

/// Hard cap on the number of terms summed by the stopping rule.
pub const MAX_TERMS: usize = 20_000;

/// Consecutive small terms required before a sum is declared converged.
const SMALL_RUN: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesId {
    /// Kontsevich's strange function `Σ (q;q)_n`.
    F,
    /// `Σ (-1)^n (q;q²)_n`, equal to `φ/2`.
    G,
    Phi,
    Psi,
}

impl SeriesId {
    pub fn name(&self) -> &'static str {
        match self {
            SeriesId::F => "F",
            SeriesId::G => "G",
            SeriesId::Phi => "phi",
            SeriesId::Psi => "psi",
        }
    }

    pub fn admits(&self, parity: Parity) -> bool {
        match self {
            SeriesId::F => true,
            SeriesId::G | SeriesId::Phi => parity == Parity::Odd,
            SeriesId::Psi => parity == Parity::Fourfold,
        }
    }

    fn required(&self) -> &'static str {
        match self {
            SeriesId::F => "any order",
            SeriesId::G | SeriesId::Phi => "odd order",
            SeriesId::Psi => "order divisible by 4",
        }
    }

    pub(crate) fn check_root(&self, r: RootOfUnity) -> Result<()> {
        if self.admits(r.parity()) {
            Ok(())
        } else {
            Err(Error::WrongParity {
                series: self.name(),
                root: r.to_string(),
                required: self.required(),
            })
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "f" => Ok(SeriesId::F),
            "g" => Ok(SeriesId::G),
            "phi" => Ok(SeriesId::Phi),
            "psi" => Ok(SeriesId::Psi),
            other => Err(format!("unknown series '{other}' (expected f, g, phi, psi)")),
        }
    }
}

/// Which of the two printed expansions to sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    /// `φ = Σ q^{n²}/(-q²;q²)_n`, `ψ = Σ_{n≥1} q^{n²}/(q;q²)_n`.
    Eulerian,
    /// `φ = 1 + Σ (-1)^n q^{2n+1}(q;q²)_n`, `ψ = Σ q^{n+1}(-q²;q²)_n`.
    SumForm,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Eulerian => "eulerian",
            Form::SumForm => "sumform",
        })
    }
}

impl FromStr for Form {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "eulerian" => Ok(Form::Eulerian),
            "sumform" | "sum" => Ok(Form::SumForm),
            other => Err(format!("unknown form '{other}' (expected eulerian, sumform)")),
        }
    }
}

/// `(a;b)_n = ∏_{j<n} (1 - a·b^j)`.
pub fn qpochhammer(a: Complex, b: Complex, n: usize) -> Complex {
    let one = Complex::new(1.0, 0.0);
    let mut prod = one;
    let mut ab = a;
    for _ in 0..n {
        prod *= one - ab;
        ab *= b;
    }
    prod
}

/// Sums `init + Σ term(n)` until `|term| < tol·max(1, |partial|)` holds for
/// three terms in a row.
fn sum_until_small(
    init: Complex,
    tol: Real,
    mut term: impl FnMut(usize) -> Complex,
) -> Result<Complex> {
    let mut acc = Accumulator::new();
    acc.add(init);
    let mut run = 0;
    for n in 0..MAX_TERMS {
        let t = term(n);
        acc.add(t);
        let scale = acc.value().norm().max(1.0);
        if t.norm() < tol * scale {
            run += 1;
            if run == SMALL_RUN {
                return Ok(acc.value());
            }
        } else {
            run = 0;
        }
    }
    Err(Error::NonConvergence { terms: MAX_TERMS })
}

fn check_tol(tol: Real) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("tolerance {tol} must be positive")))
    }
}

/// `q^m` as `e^{-m·alpha}`; avoids drift from repeated multiplication.
fn qp(alpha: Complex, m: u64) -> Complex {
    (-(m as Real) * alpha).exp()
}

pub fn eval_phi(p: AlphaPoint, form: Form, tol: Real) -> Result<Complex> {
    p.require_interior()?;
    check_tol(tol)?;
    let alpha = p.alpha();
    let one = Complex::new(1.0, 0.0);
    match form {
        Form::Eulerian => {
            let mut denom = one;
            sum_until_small(Complex::new(0.0, 0.0), tol, |n| {
                let n = n as u64;
                if n > 0 {
                    denom *= one + qp(alpha, 2 * n);
                }
                qp(alpha, n * n) / denom
            })
        }
        Form::SumForm => {
            let mut prefix = one;
            sum_until_small(one, tol, |n| {
                let n = n as u64;
                if n > 0 {
                    prefix *= one - qp(alpha, 2 * n - 1);
                }
                let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
                sign * qp(alpha, 2 * n + 1) * prefix
            })
        }
    }
}

pub fn eval_psi(p: AlphaPoint, form: Form, tol: Real) -> Result<Complex> {
    p.require_interior()?;
    check_tol(tol)?;
    let alpha = p.alpha();
    let one = Complex::new(1.0, 0.0);
    match form {
        Form::Eulerian => {
            let mut denom = one;
            sum_until_small(Complex::new(0.0, 0.0), tol, |i| {
                let n = i as u64 + 1;
                denom *= one - qp(alpha, 2 * n - 1);
                qp(alpha, n * n) / denom
            })
        }
        Form::SumForm => {
            let mut prefix = one;
            sum_until_small(Complex::new(0.0, 0.0), tol, |n| {
                let n = n as u64;
                if n > 0 {
                    prefix *= one + qp(alpha, 2 * n);
                }
                qp(alpha, n + 1) * prefix
            })
        }
    }
}

/// `G(q)`, which inside the disc is defined as `φ(q)/2` through the sum form.
pub fn eval_g(p: AlphaPoint, tol: Real) -> Result<Complex> {
    Ok(eval_phi(p, Form::SumForm, tol)? / 2.0)
}

/// Index `j` of the first exactly vanishing factor of the sum form's
/// Pochhammer product at `r`: `1 - ζ^{2j+1}` for `G`/`φ`, `1 + ζ^{2j+2}`
/// for `ψ`, `1 - ζ^{j+1}` for `F`. Terms `n > j` of the finite sum vanish.
pub fn vanishing_index(s: SeriesId, r: RootOfUnity) -> Result<usize> {
    s.check_root(r)?;
    let n = r.order() as i64;
    let hit = |j: i64| match s {
        SeriesId::F => r.pow_is_one(j + 1),
        SeriesId::G | SeriesId::Phi => r.pow_is_one(2 * j + 1),
        SeriesId::Psi => r.pow_is_minus_one(2 * j + 2),
    };
    // exponents are periodic mod N, so a vanishing factor appears within 2N steps
    (0..2 * n)
        .find(|&j| hit(j))
        .map(|j| j as usize)
        .ok_or_else(|| Error::Domain(format!("no vanishing factor for {s} at {r}")))
}

/// Exact value of `s` at an admissible root of unity via the degenerate
/// finite sum.
pub fn eval_at_root(s: SeriesId, r: RootOfUnity) -> Result<Complex> {
    let last = vanishing_index(s, r)?;
    let one = Complex::new(1.0, 0.0);
    let mut acc = Accumulator::new();
    let mut prefix = one;
    for n in 0..=last {
        let n_i = n as i64;
        let term = match s {
            SeriesId::F => prefix,
            SeriesId::G | SeriesId::Phi => {
                if n % 2 == 0 {
                    prefix
                } else {
                    -prefix
                }
            }
            SeriesId::Psi => r.pow(n_i + 1) * prefix,
        };
        acc.add(term);
        prefix *= match s {
            SeriesId::F => one - r.pow(n_i + 1),
            SeriesId::G | SeriesId::Phi => one - r.pow(2 * n_i + 1),
            SeriesId::Psi => one + r.pow(2 * n_i + 2),
        };
    }
    let v = acc.value();
    Ok(if s == SeriesId::Phi { 2.0 * v } else { v })
}

/// Evaluates `s` inside the disc: `F` is not available there.
pub fn eval_interior(s: SeriesId, p: AlphaPoint, form: Form, tol: Real) -> Result<Complex> {
    match s {
        SeriesId::Phi => eval_phi(p, form, tol),
        SeriesId::Psi => eval_psi(p, form, tol),
        SeriesId::G => match form {
            Form::SumForm => eval_g(p, tol),
            Form::Eulerian => Ok(eval_phi(p, Form::Eulerian, tol)? / 2.0),
        },
        SeriesId::F => Err(Error::Domain(
            "F has no convergent expansion inside the disc; evaluate it at a root of unity".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(qpochhammer(c(0.3, 0.0), c(0.7, 0.0), 0), c(1.0, 0.0));
        assert!((qpochhammer(c(0.5, 0.0), c(0.25, 0.0), 2) - c(0.4375, 0.0)).norm() < 1e-15);
        assert_eq!(qpochhammer(c(-1.0, 0.0), c(-1.0, 0.0), 3), c(0.0, 0.0));
    }

    #[test]
    fn phi_at_origin() {
        let p = AlphaPoint::real(50.0).unwrap();
        for form in [Form::Eulerian, Form::SumForm] {
            assert!((eval_phi(p, form, 1e-15).unwrap() - c(1.0, 0.0)).norm() < 1e-20);
            assert!(eval_psi(p, form, 1e-15).unwrap().norm() < 1e-20);
        }
    }

    #[test]
    fn forms_agree_at_tenth() {
        let p = AlphaPoint::from_q(c(0.1, 0.0)).unwrap();
        let a = eval_phi(p, Form::Eulerian, 1e-16).unwrap();
        let b = eval_phi(p, Form::SumForm, 1e-16).unwrap();
        assert!((a - b).norm() < 1e-12);
        let a = eval_psi(p, Form::Eulerian, 1e-16).unwrap();
        let b = eval_psi(p, Form::SumForm, 1e-16).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn psi_forms_agree_on_imaginary_axis() {
        let p = AlphaPoint::from_q(c(0.0, 0.6)).unwrap();
        let a = eval_psi(p, Form::Eulerian, 1e-16).unwrap();
        let b = eval_psi(p, Form::SumForm, 1e-16).unwrap();
        assert!(a.norm().is_finite());
        assert!((a - b).norm() < 1e-10);
    }

    #[test]
    fn g_is_half_phi() {
        let q = c(0.5 * (std::f64::consts::PI / 3.0).cos(), 0.5 * (std::f64::consts::PI / 3.0).sin());
        let p = AlphaPoint::from_q(q).unwrap();
        let g = eval_g(p, 1e-16).unwrap();
        let phi = eval_phi(p, Form::Eulerian, 1e-16).unwrap();
        assert!((2.0 * g - phi).norm() < 1e-10);

        let p = AlphaPoint::from_q(c(0.3, 0.0)).unwrap();
        assert!((2.0 * eval_g(p, 1e-16).unwrap() - eval_phi(p, Form::SumForm, 1e-16).unwrap()).norm() < 1e-12);
    }

    // G(0) is φ(0)/2 = 1/2 under the disc extension, although the formal
    // finite sum at q = 0 would give 1.
    #[test]
    fn g_at_origin_follows_the_extension() {
        let p = AlphaPoint::real(50.0).unwrap();
        assert!((eval_g(p, 1e-15).unwrap() - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn interior_only() {
        let r = RootOfUnity::new(1, 3).unwrap();
        let p = AlphaPoint::new(r.alpha()).unwrap();
        assert!(matches!(eval_phi(p, Form::Eulerian, 1e-12), Err(Error::Domain(_))));
        assert!(eval_phi(AlphaPoint::real(1.0).unwrap(), Form::Eulerian, 0.0).is_err());
    }

    #[test]
    fn close_to_circle_hits_term_cap() {
        let p = AlphaPoint::real(1e-5).unwrap();
        assert!(matches!(
            eval_psi(p, Form::SumForm, 1e-15),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn special_values_at_roots() {
        assert_eq!(eval_at_root(SeriesId::Phi, RootOfUnity::one()).unwrap(), c(2.0, 0.0));
        assert_eq!(eval_at_root(SeriesId::Psi, RootOfUnity::new(1, 4).unwrap()).unwrap(), c(0.0, 1.0));
        assert_eq!(eval_at_root(SeriesId::Psi, RootOfUnity::new(3, 4).unwrap()).unwrap(), c(0.0, -1.0));
        assert_eq!(eval_at_root(SeriesId::F, RootOfUnity::one()).unwrap(), c(1.0, 0.0));
        assert_eq!(eval_at_root(SeriesId::F, RootOfUnity::new(1, 2).unwrap()).unwrap(), c(3.0, 0.0));
    }

    #[test]
    fn parity_is_enforced() {
        let r = RootOfUnity::new(1, 4).unwrap();
        assert!(matches!(eval_at_root(SeriesId::Phi, r), Err(Error::WrongParity { .. })));
        let r = RootOfUnity::new(1, 3).unwrap();
        assert!(matches!(eval_at_root(SeriesId::Psi, r), Err(Error::WrongParity { .. })));
        let r = RootOfUnity::new(1, 6).unwrap();
        assert!(eval_at_root(SeriesId::G, r).is_err());
        assert!(eval_at_root(SeriesId::F, r).is_ok());
    }

    #[test]
    fn vanishing_indices() {
        for k in 0..20u64 {
            let n = 2 * k + 1;
            for l in 0..n as i64 {
                let r = RootOfUnity::new(l, n).unwrap();
                if r.order() != n {
                    continue;
                }
                assert_eq!(vanishing_index(SeriesId::Phi, r).unwrap(), k as usize);
            }
        }
        for k in 1..20u64 {
            for l in (1..4 * k as i64).step_by(2) {
                let r = RootOfUnity::new(l, 4 * k).unwrap();
                if r.order() != 4 * k {
                    continue;
                }
                assert_eq!(vanishing_index(SeriesId::Psi, r).unwrap(), (k - 1) as usize);
            }
        }
    }
}
