//! Periodic tridiagonal systems by a rank-one boundary correction.
//!
//! With corner coupling `c` and `γ = −a_0`, the matrix splits as
//! `A = A' + u vᵀ` where `u = (γ, 0, …, 0, c)`, `v = (1, 0, …, 0, c/γ)` and
//! `A'` is tridiagonal with `a'_0 = a_0 − γ`, `a'_{n−1} = a_{n−1} − c²/γ`.
//! Sherman–Morrison then needs two solves with the same factorization.

use num_complex::Complex64;

use super::{BinSystem, TridiagonalLu};
use crate::error::{FustftError, Result};

/// Relative floor on `1 + vᵀA'^{-1}u`; below it `A` is numerically singular.
const CORRECTION_TOL: f64 = 1e-12;

pub fn solve_periodic_tridiagonal(sys: &BinSystem) -> Result<Vec<Complex64>> {
    let mut steps = 0;
    solve_periodic_tridiagonal_counted(sys, &mut steps)
}

pub fn solve_periodic_tridiagonal_counted(
    sys: &BinSystem,
    steps: &mut usize,
) -> Result<Vec<Complex64>> {
    if !sys.periodic {
        return Err(FustftError::DimensionMismatch(
            "open-boundary system passed to the periodic solver".into(),
        ));
    }
    sys.check_shape()?;
    let n = sys.len();
    if n < 3 {
        return Err(FustftError::DimensionMismatch(format!(
            "periodic tridiagonal systems need at least 3 unknowns, got {n}"
        )));
    }
    let corner = sys.offdiag[n - 1];
    let gamma = -sys.diag[0];
    let mut diag = sys.diag.clone();
    diag[0] -= gamma;
    diag[n - 1] -= corner * corner / gamma;
    let lu = TridiagonalLu::factor(&diag, &sys.offdiag[..n - 1], steps)?;

    let mut y = sys.rhs.clone();
    lu.solve_in_place(&mut y, steps);

    let mut z = vec![Complex64::new(0.0, 0.0); n];
    z[0] = Complex64::new(gamma, 0.0);
    z[n - 1] = Complex64::new(corner, 0.0);
    lu.solve_in_place(&mut z, steps);

    let ratio = corner / gamma;
    let vz = z[0] + z[n - 1] * ratio;
    let vy = y[0] + y[n - 1] * ratio;
    let denom = Complex64::new(1.0, 0.0) + vz;
    let threshold = CORRECTION_TOL * (1.0 + vz.norm());
    if denom.norm() < threshold {
        return Err(FustftError::NearSingular {
            bin: None,
            pivot: denom.norm(),
            threshold,
        });
    }
    let factor = vy / denom;
    for (yj, zj) in y.iter_mut().zip(&z) {
        *yj -= zj * factor;
        *steps += 1;
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ones_solution() {
        let sys = BinSystem::periodic(
            vec![3.0, 2.5, 4.0, 3.5, 2.0],
            vec![0.4, -0.9, 1.1, 0.2, -0.6],
            vec![Complex64::new(0.0, 0.0); 5],
        );
        let ones = vec![Complex64::new(1.0, 0.0); 5];
        let sys = BinSystem {
            rhs: sys.apply(&ones),
            ..sys
        };
        let x = solve_periodic_tridiagonal(&sys).unwrap();
        for v in x {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn corner_coupling_is_used() {
        // With only the corner nonzero the system couples unknowns 0 and n−1.
        let sys = BinSystem::periodic(
            vec![2.0, 2.0, 2.0],
            vec![0.0, 0.0, 1.0],
            vec![
                Complex64::new(3.0, 0.0),
                Complex64::new(2.0, 0.0),
                Complex64::new(3.0, 0.0),
            ],
        );
        let x = solve_periodic_tridiagonal(&sys).unwrap();
        for v in x {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn singular_circulant_is_reported() {
        // a = 2, b = −1 circulant is the graph Laplacian: constant null vector.
        let n = 8;
        let sys = BinSystem::periodic(
            vec![2.0; n],
            vec![-1.0; n],
            (0..n).map(|j| Complex64::new(j as f64, 0.0)).collect(),
        );
        assert!(matches!(
            solve_periodic_tridiagonal(&sys),
            Err(FustftError::NearSingular { .. })
        ));
    }

    #[test]
    fn too_small() {
        let sys = BinSystem::periodic(
            vec![2.0; 2],
            vec![0.1; 2],
            vec![Complex64::new(1.0, 0.0); 2],
        );
        assert!(solve_periodic_tridiagonal(&sys).is_err());
    }
}
