//! Large-order asymptotics of `φ(ζ_m)` and `ψ(ζ_m)` against the exact values.

use mocktheta::asymptotics::{coeff_b, coeff_c, fit_root_error, phi_root_exact, RootExpansion};
use mocktheta::euler::euler_numbers;
use mocktheta::SeriesId;

fn main() -> mocktheta::Result<()> {
    let table = euler_numbers(6);
    for n in 0..=6 {
        println!("b_{n} = {}   c_{n} = {}", coeff_b(n, &table)?, coeff_c(n, &table)?);
    }

    let exp = RootExpansion::new(3);
    for k in [5u64, 20, 50, 100] {
        let exact = phi_root_exact(k)?;
        println!("k = {k:>3}: exact {exact:.10}  asymptotic {:.10}", exp.phi(k));
    }

    for series in [SeriesId::Phi, SeriesId::Psi] {
        for order in 0..=3 {
            let fit = fit_root_error(series, 21, 201, order)?;
            println!(
                "{} N = {order}: decay {:.3} over m in 21..201, {:.3} over the upper half, phase offset {:.1e}",
                series.name(),
                fit.decay,
                fit.tail_decay,
                fit.phase_offset
            );
        }
    }
    Ok(())
}
