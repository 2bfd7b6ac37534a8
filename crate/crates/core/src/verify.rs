//! Named batteries of numerical identity checks. Sample points come from a
//! seeded ChaCha stream, so a suite run is reproducible bit for bit.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::asymptotics::{coeff_a, exact_to_f64, fit_root_error, phi_radial_partial_sum};
use crate::error::{Error, Result};
use crate::euler::{euler_integral_residual, euler_numbers, MAX_INTEGRAL_INDEX};
use crate::jets::{pochhammer_factor, radial_expansion, TaylorJet};
use crate::mordell::{reflection_residual, w_all_forms, zwegers_residual, QuadratureConfig};
use crate::numeric::{Complex, Real};
use crate::qseries::{eval_phi, AlphaPoint, Form, RootOfUnity, SeriesId};
use crate::transforms::{quantum_residual_phi, quantum_residual_psi, watson_phi_residual, watson_psi_residual};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Watson,
    Zwegers,
    Reflection,
    Quantum,
    Euler,
    WForms,
    Radial,
    RootsAsymptotic,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Watson,
        Suite::Zwegers,
        Suite::Reflection,
        Suite::Quantum,
        Suite::Euler,
        Suite::WForms,
        Suite::Radial,
        Suite::RootsAsymptotic,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Watson => "watson",
            Suite::Zwegers => "zwegers",
            Suite::Reflection => "remark22",
            Suite::Quantum => "quantum",
            Suite::Euler => "euler",
            Suite::WForms => "wforms",
            Suite::Radial => "radial",
            Suite::RootsAsymptotic => "roots-asymptotic",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// Pass iff `value <= threshold`.
    AtMost,
    /// Pass iff `value >= threshold`.
    AtLeast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub inputs: Vec<(String, String)>,
    pub value: Real,
    pub threshold: Real,
    pub bound: Bound,
    pub note: Option<String>,
}

impl Check {
    fn new(name: &str, inputs: Vec<(String, String)>, value: Result<Real>, threshold: Real, bound: Bound) -> Self {
        let (value, note) = match value {
            Ok(v) => (v, None),
            Err(e) => (Real::NAN, Some(e.to_string())),
        };
        Self {
            name: name.to_string(),
            inputs,
            value,
            threshold,
            bound,
            note,
        }
    }

    fn at_most(name: &str, inputs: Vec<(String, String)>, value: Result<Real>, threshold: Real) -> Self {
        Self::new(name, inputs, value, threshold, Bound::AtMost)
    }

    fn at_least(name: &str, inputs: Vec<(String, String)>, value: Result<Real>, threshold: Real) -> Self {
        Self::new(name, inputs, value, threshold, Bound::AtLeast)
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(match self.note {
            Some(n) => format!("{n}; {note}"),
            None => note,
        });
        self
    }

    pub fn passed(&self) -> bool {
        match self.bound {
            Bound::AtMost => self.value <= self.threshold,
            Bound::AtLeast => self.value >= self.threshold,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteParams {
    pub seed: u64,
    /// Points drawn by the sampled suites.
    pub samples: usize,
    pub k_max: u64,
    pub n_max: usize,
    pub quad: QuadratureConfig,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            seed: 0x6d6f_636b,
            samples: 20,
            k_max: 10,
            n_max: 6,
            quad: QuadratureConfig::default(),
        }
    }
}

fn kv(key: &str, value: impl fmt::Display) -> (String, String) {
    (key.to_string(), value.to_string())
}

fn fmt_complex(z: Complex) -> String {
    format!("{:.17e}{:+.17e}i", z.re, z.im)
}

fn sample_alpha(rng: &mut ChaCha8Rng) -> AlphaPoint {
    let re = rng.random_range(0.3..=3.0);
    let im = rng.random_range(-3.0..=3.0);
    AlphaPoint::new(Complex::new(re, im)).expect("sampled in the right half-plane")
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<Vec<Check>> {
    params.quad.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let cfg = &params.quad;
    Ok(match suite {
        Suite::Watson => watson(&mut rng, params),
        Suite::Zwegers => (0..params.samples)
            .map(|_| {
                let tau = Complex::new(rng.random_range(-1.0..=1.0), rng.random_range(0.5..=3.0));
                let radius: Real = rng.random_range(0.0..=1.0);
                let z = Complex::from_polar(radius, rng.random_range(-PI..=PI));
                Check::at_most(
                    "zwegers",
                    vec![kv("z", fmt_complex(z)), kv("tau", fmt_complex(tau))],
                    zwegers_residual(z, tau, cfg),
                    1e-9,
                )
            })
            .collect(),
        Suite::Reflection => {
            let mut checks = vec![Check::at_most(
                "reflection-fixed-point",
                vec![kv("alpha", fmt_complex(Complex::new(PI, 0.0)))],
                AlphaPoint::real(PI).and_then(|p| reflection_residual(p, cfg)),
                0.0,
            )];
            checks.extend((0..params.samples).map(|_| {
                let p = sample_alpha(&mut rng);
                Check::at_most("reflection", vec![kv("alpha", fmt_complex(p.alpha()))], reflection_residual(p, cfg), 1e-9)
            }));
            checks
        }
        Suite::Quantum => quantum(params),
        Suite::Euler => euler(params),
        Suite::WForms => {
            let mut checks = Vec::new();
            for _ in 0..params.samples {
                let p = sample_alpha(&mut rng);
                let inputs = vec![kv("alpha", fmt_complex(p.alpha()))];
                match w_all_forms(p, cfg) {
                    Ok([d, e, h]) => {
                        for (name, a, b) in [("direct-extended", d, e), ("direct-via-h", d, h), ("extended-via-h", e, h)] {
                            checks.push(Check::at_most(name, inputs.clone(), Ok((a - b).norm()), 1e-9));
                        }
                    }
                    Err(e) => checks.push(Check::at_most("wforms", inputs, Err(e), 1e-9)),
                }
            }
            checks
        }
        Suite::Radial => radial(params),
        Suite::RootsAsymptotic => roots_asymptotic(),
    })
}

fn watson(rng: &mut ChaCha8Rng, params: &SuiteParams) -> Vec<Check> {
    let cfg = &params.quad;
    let mut checks = Vec::new();
    for _ in 0..params.samples {
        let p = sample_alpha(rng);
        let inputs = vec![kv("alpha", fmt_complex(p.alpha()))];
        checks.push(Check::at_most("watson-phi", inputs.clone(), watson_phi_residual(p, cfg), 1e-8));
        checks.push(Check::at_most("watson-psi", inputs, watson_psi_residual(p, cfg), 1e-8));
    }
    // approach to α = -2πil/(2k+1) from inside the disc
    for (k, l) in [(1u64, 1i64), (2, 1), (1, 2)] {
        let m = 2 * k + 1;
        for t in [1e-1, 1e-2, 1e-3] {
            let alpha = Complex::new(t, -2.0 * PI * l as Real / m as Real);
            let res = AlphaPoint::new(alpha).and_then(|p| watson_phi_residual(p, cfg));
            checks.push(Check::at_most(
                "watson-phi-near-root",
                vec![kv("k", k), kv("l", l), kv("t", format!("{t:e}"))],
                res,
                1e-6,
            ));
        }
    }
    checks
}

/// Numerators `1 ≤ l < m` coprime to `m`.
pub fn coprime_numerators(m: u64) -> impl Iterator<Item = i64> {
    (1..m).filter(move |l| l.gcd(&m) == 1).map(|l| l as i64)
}

fn quantum(params: &SuiteParams) -> Vec<Check> {
    let cfg = &params.quad;
    let mut checks = Vec::new();
    for k in 1..=params.k_max {
        for l in coprime_numerators(2 * k + 1) {
            checks.push(Check::at_most(
                "quantum-phi",
                vec![kv("k", k), kv("l", l)],
                quantum_residual_phi(k, l, cfg),
                1e-6,
            ));
        }
        for l in coprime_numerators(4 * k) {
            checks.push(Check::at_most(
                "quantum-psi",
                vec![kv("k", k), kv("l", l)],
                quantum_residual_psi(k, l, cfg),
                1e-6,
            ));
        }
    }
    checks
}

fn euler(params: &SuiteParams) -> Vec<Check> {
    let n_max = params.n_max.min(MAX_INTEGRAL_INDEX);
    let mut checks: Vec<Check> = (0..=n_max)
        .map(|n| Check::at_most("euler-integral", vec![kv("n", n)], euler_integral_residual(n, &params.quad), 1e-9))
        .collect();
    if params.n_max > MAX_INTEGRAL_INDEX {
        checks.push(Check::at_most(
            "euler-integral",
            vec![kv("n", params.n_max)],
            euler_integral_residual(params.n_max, &params.quad),
            1e-9,
        ));
    }
    checks
}

fn radial(params: &SuiteParams) -> Vec<Check> {
    const ORDER: usize = 8;
    let mut checks = Vec::new();
    let table = euler_numbers(ORDER);
    let jets = radial_expansion(SeriesId::Phi, RootOfUnity::one(), ORDER);
    let mut factorial = 1.0;
    for n in 0..=ORDER {
        if n > 0 {
            factorial *= n as Real;
        }
        let rel = jets.as_ref().map_err(Clone::clone).and_then(|jets| {
            let exact = exact_to_f64(&coeff_a(n, &table)?) / factorial;
            Ok((jets.coeffs[n].re - exact).abs() / exact.abs())
        });
        checks.push(Check::at_most("radial-coefficient", vec![kv("n", n)], rel, 1e-9));
    }
    let remainder = |t: Real| -> Result<Real> {
        let exact = eval_phi(AlphaPoint::real(t)?, Form::SumForm, 1e-17)?.re;
        Ok((exact - phi_radial_partial_sum(4, t)).abs())
    };
    let ratio = remainder(0.02).and_then(|a| Ok(a / remainder(0.01)?));
    let in_band = ratio.clone().map(|r| if (16.0 * 0.7..=64.0 * 1.3).contains(&r) { 0.0 } else { 1.0 });
    checks.push(
        Check::at_most("radial-remainder-order", vec![kv("order", 4), kv("t", "0.02/0.01")], in_band, 0.0)
            .with_note(format!("ratio {:.6}", ratio.unwrap_or(Real::NAN))),
    );
    checks.extend(valuation_checks(params.n_max.max(5) as u64));
    checks
}

/// Shortfall `max(0, ⌊(n+k)/(2k+1)⌋ - valuation)` of `(q;q²)_n` at
/// `ζ_{2k+1}^l` for every `k ≤ k_max`, coprime `l` and `n ≤ 4(2k+1)`.
pub fn valuation_checks(k_max: u64) -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 0..=k_max {
        let m = 2 * k + 1;
        let ls: Vec<i64> = if m == 1 { vec![0] } else { coprime_numerators(m).collect() };
        for l in ls {
            let r = RootOfUnity::new(l, m).expect("m >= 1");
            let n_max = 4 * m;
            let order = ((n_max + k) / m) as usize;
            let mut prefix = TaylorJet::constant(Complex::new(1.0, 0.0), order);
            let mut worst: i64 = 0;
            for n in 0..=n_max {
                let need = ((n + k) / m) as i64;
                let have = prefix.valuation() as i64;
                worst = worst.max(need - have);
                let factor = pochhammer_factor(r, 2 * n as i64 + 1, order);
                prefix = prefix.try_mul(&factor).expect("equal orders");
            }
            checks.push(Check::at_most(
                "valuation-bound",
                vec![kv("k", k), kv("l", l)],
                Ok(worst as Real),
                0.0,
            ));
        }
    }
    checks
}

fn roots_asymptotic() -> Vec<Check> {
    let mut checks = Vec::new();
    for (series, lo, hi) in [(SeriesId::Phi, 21, 201), (SeriesId::Psi, 24, 200)] {
        for order in 0..=3usize {
            let fit = fit_root_error(series, lo, hi, order);
            let note = fit.as_ref().ok().map(|f| format!("phase offset {:.3e} rad at m = {}; upper-half decay {:.3}", f.phase_offset, f.ms.last().copied().unwrap_or(0), f.tail_decay));
            let mut check = Check::at_least(
                "roots-asymptotic-decay",
                vec![kv("series", series), kv("order", order), kv("m", format!("{lo}..{hi}"))],
                fit.map(|f| f.decay),
                order as Real + 0.8,
            );
            if let Some(n) = note {
                check = check.with_note(n);
            }
            checks.push(check);
        }
    }
    checks
}
