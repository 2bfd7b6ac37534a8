//! The two expansions of each series agree inside the disc.

use mocktheta::qseries::{eval_g, eval_phi, eval_psi};
use mocktheta::{AlphaPoint, Complex, Form};

fn main() -> mocktheta::Result<()> {
    for q in [
        Complex::new(0.5, 0.0),
        Complex::new(0.3, 0.6),
        Complex::new(-0.85, 0.1),
        Complex::from_polar(0.9, 2.0),
    ] {
        let p = AlphaPoint::from_q(q)?;
        let phi_e = eval_phi(p, Form::Eulerian, 1e-16)?;
        let phi_s = eval_phi(p, Form::SumForm, 1e-16)?;
        let psi_e = eval_psi(p, Form::Eulerian, 1e-16)?;
        let psi_s = eval_psi(p, Form::SumForm, 1e-16)?;
        let g = eval_g(p, 1e-16)?;
        println!("q = {q:.3}");
        println!("  phi  {phi_e:.15}  |eulerian - sum| = {:.1e}  |2G - phi| = {:.1e}", (phi_e - phi_s).norm(), (2.0 * g - phi_e).norm());
        println!("  psi  {psi_e:.15}  |eulerian - sum| = {:.1e}", (psi_e - psi_s).norm());
    }
    Ok(())
}
