//! Residuals of the two transformation formulas under `α ↦ π²/α`.

use std::f64::consts::PI;

use mocktheta::transforms::{watson_phi_residual, watson_psi_residual, TransformPair};
use mocktheta::{AlphaPoint, Complex, QuadratureConfig};

fn main() -> mocktheta::Result<()> {
    let cfg = QuadratureConfig::default();
    for alpha in [
        Complex::new(1.0, 0.0),
        Complex::new(0.8, 0.5),
        Complex::new(PI, 0.0),
        Complex::new(0.3, -2.9),
    ] {
        let pair = TransformPair::new(AlphaPoint::new(alpha)?)?;
        println!(
            "alpha = {alpha:.4}  alpha1 = {:.4}  phi residual {:.1e}  psi residual {:.1e}",
            pair.image.alpha(),
            watson_phi_residual(pair.source, &cfg)?,
            watson_psi_residual(pair.source, &cfg)?
        );
    }

    // approaching ζ_3 radially; ψ itself diverges there, φ and its image stay finite
    for t in [1e-1, 1e-2, 1e-3] {
        let p = AlphaPoint::new(Complex::new(t, -2.0 * PI / 3.0))?;
        println!("alpha = {t:.0e} - 2 pi i/3  phi residual {:.1e}", watson_phi_residual(p, &cfg)?);
    }
    Ok(())
}
