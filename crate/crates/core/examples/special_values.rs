//! Exact values of the series at roots of unity from their finite sums.

use mocktheta::qseries::{eval_at_root, vanishing_index, RootOfUnity, SeriesId};

fn main() -> mocktheta::Result<()> {
    let cases = [
        (SeriesId::Phi, 0, 1),
        (SeriesId::Psi, 1, 4),
        (SeriesId::Psi, -1, 4),
        (SeriesId::Phi, 1, 3),
        (SeriesId::Phi, 2, 7),
        (SeriesId::G, 1, 5),
        (SeriesId::Psi, 3, 8),
        (SeriesId::F, 1, 6),
    ];
    for (s, l, n) in cases {
        let r = RootOfUnity::new(l, n)?;
        let v = eval_at_root(s, r)?;
        let last = vanishing_index(s, r)?;
        println!("{:>3}(e^(2 pi i {r})) = {:+.15} {:+.15}i   ({} terms)", s.name(), v.re, v.im, last + 1);
    }
    // φ is not defined through its sum form at even roots
    let err = eval_at_root(SeriesId::Phi, RootOfUnity::new(1, 4)?).unwrap_err();
    println!("phi at 1/4: {err}");
    Ok(())
}
