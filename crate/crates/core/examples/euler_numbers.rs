//! Exact Euler numbers and their moment integrals against `sech`.

use mocktheta::euler::{euler_integral_residual, euler_numbers};
use mocktheta::QuadratureConfig;

fn main() -> mocktheta::Result<()> {
    let table = euler_numbers(20);
    for (n, e) in table.values().iter().enumerate() {
        println!("E_{:<2} = {e}", 2 * n);
    }
    let cfg = QuadratureConfig::default();
    for n in 0..=8 {
        println!("n = {n}: relative residual of the moment integral {:.2e}", euler_integral_residual(n, &cfg)?);
    }
    Ok(())
}
