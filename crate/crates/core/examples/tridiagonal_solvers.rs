//! The banded solvers behind the inversions, on one constant-coefficient
//! system: Thomas and DST-I for open boundaries, Sherman–Morrison and the
//! FFT for periodic ones.

use fustft::solver::{
    solve_circulant_fft, solve_periodic_tridiagonal, solve_toeplitz_dst, solve_tridiagonal,
    toeplitz_condition, BinSystem,
};
use fustft::Complex64;

fn main() -> fustft::Result<()> {
    let (a, b, n) = (1.0, -0.45, 1000);
    let rhs: Vec<Complex64> = (0..n)
        .map(|j| Complex64::new((j as f64 * 0.1).sin(), (j as f64 * 0.03).cos()))
        .collect();

    let open = BinSystem::open(vec![a; n], vec![b; n - 1], rhs.clone());
    let thomas = solve_tridiagonal(&open)?;
    let dst = solve_toeplitz_dst(a, b, &rhs)?;
    println!(
        "open:     Thomas residual {:.1e}, DST residual {:.1e}, condition {:.1}",
        open.relative_residual(&thomas),
        open.relative_residual(&dst),
        toeplitz_condition(a, b, n)
    );

    let cyclic = BinSystem::periodic(vec![a; n], vec![b; n], rhs.clone());
    let sm = solve_periodic_tridiagonal(&cyclic)?;
    let fft = solve_circulant_fft(a, b, &rhs)?;
    println!(
        "periodic: Sherman-Morrison residual {:.1e}, FFT residual {:.1e}, condition {:.1}",
        cyclic.relative_residual(&sm),
        cyclic.relative_residual(&fft.x),
        fft.condition
    );
    Ok(())
}
