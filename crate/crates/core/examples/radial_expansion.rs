//! Taylor coefficients of `φ(ζ e^{-t})` from jets, against the exact
//! coefficients at `ζ = 1`.

use mocktheta::asymptotics::{phi_radial_partial_sum, phi_radial_series};
use mocktheta::jets::radial_expansion;
use mocktheta::qseries::{eval_phi, RootOfUnity, SeriesId};
use mocktheta::{AlphaPoint, Form};

fn main() -> mocktheta::Result<()> {
    let exact = phi_radial_series(8);
    let jets = radial_expansion(SeriesId::Phi, RootOfUnity::one(), 8)?;
    println!(" n  a_n/n! (exact)           jets");
    for n in 0..=8 {
        println!("{n:>2}  {:+.15e}  {:+.15e}", exact.coeffs[n].re, jets.coeffs[n].re);
    }

    for t in [0.04, 0.02, 0.01] {
        let v = eval_phi(AlphaPoint::real(t)?, Form::SumForm, 1e-17)?.re;
        println!("t = {t}: phi(e^-t) - S_4(t) = {:.3e}", v - phi_radial_partial_sum(4, t));
    }

    for (s, l, n) in [(SeriesId::Phi, 1, 3), (SeriesId::Psi, 1, 4), (SeriesId::Psi, 3, 8)] {
        let r = RootOfUnity::new(l, n)?;
        let e = radial_expansion(s, r, 4)?;
        let shown: Vec<String> = e.coeffs.iter().map(|c| format!("{c:.4}")).collect();
        println!("{} at {r}: [{}]", s.name(), shown.join(", "));
    }
    Ok(())
}
