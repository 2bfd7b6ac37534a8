//! The Mordell integral `h(z;τ)` and the three routes to `W(α)`.

use std::f64::consts::PI;

use mocktheta::mordell::{mordell_h, reflection_residual, w_all_forms, w_at_imaginary, w_extended, zwegers_residual};
use mocktheta::{AlphaPoint, Complex, QuadratureConfig};

fn main() -> mocktheta::Result<()> {
    let cfg = QuadratureConfig::default();
    let tau = Complex::new(0.3, 1.2);
    for z in [Complex::new(0.0, 0.0), Complex::new(0.25, 0.0), Complex::new(0.4, -0.3)] {
        let h = mordell_h(z, tau, &cfg)?;
        let res = zwegers_residual(z, tau, &cfg)?;
        println!("h({z:.2}; {tau:.2}) = {h:.15}   tau -> -1/tau residual {res:.1e}");
    }

    for alpha in [Complex::new(1.0, 0.0), Complex::new(0.5, 2.0), Complex::new(PI, 0.0)] {
        let p = AlphaPoint::new(alpha)?;
        let [d, e, h] = w_all_forms(p, &cfg)?;
        println!(
            "W({alpha:.2}) = {d:.15}   |direct - extended| {:.1e}  |direct - via h| {:.1e}  reflection {:.1e}",
            (d - e).norm(),
            (d - h).norm(),
            reflection_residual(p, &cfg)?
        );
    }

    // on the imaginary axis only the rescaled integral and the h-route converge
    for m in [1u64, 3, 12] {
        let p = AlphaPoint::new(Complex::new(0.0, -2.0 * PI / m as f64))?;
        let a = w_at_imaginary(m, &cfg)?;
        let b = w_extended(p, &cfg)?;
        println!("W(-2 pi i/{m}) = {a:.15}   |h-route - rescaled| {:.1e}", (a - b).norm());
    }
    Ok(())
}
