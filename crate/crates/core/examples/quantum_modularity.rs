//! The transformation formulas at roots of unity, where every series is a
//! finite sum.

use mocktheta::qseries::RootOfUnity;
use mocktheta::transforms::{quantum_residual_phi, quantum_residual_psi, root_image};
use mocktheta::verify::coprime_numerators;
use mocktheta::QuadratureConfig;

fn main() -> mocktheta::Result<()> {
    let cfg = QuadratureConfig::default();
    for k in 1..=4u64 {
        for l in coprime_numerators(2 * k + 1) {
            let r = RootOfUnity::new(l, 2 * k + 1)?;
            println!("phi at {r} -> psi at {}: residual {:.1e}", root_image(r)?, quantum_residual_phi(k, l, &cfg)?);
        }
        for l in coprime_numerators(4 * k) {
            let r = RootOfUnity::new(l, 4 * k)?;
            println!("psi at {r} -> phi at {}: residual {:.1e}", root_image(r)?, quantum_residual_psi(k, l, &cfg)?);
        }
    }
    Ok(())
}
