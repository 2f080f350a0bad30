mod common;

use common::*;
use fustft::solver::{
    dst1, solve_periodic_tridiagonal_counted, solve_tridiagonal_counted, BinSystem,
};
use rand::Rng;

fn spd(r: &mut rand::rngs::StdRng, n: usize, periodic: bool) -> BinSystem {
    let links = if periodic { n } else { n - 1 };
    let off: Vec<f64> = (0..links).map(|_| r.random_range(-0.45..0.45)).collect();
    let diag = vec![1.0; n];
    let rhs = random_vec(r, n);
    if periodic {
        BinSystem::periodic(diag, off, rhs)
    } else {
        BinSystem::open(diag, off, rhs)
    }
}

fn steps(n: usize, periodic: bool) -> usize {
    let mut r = rng(n as u64);
    let sys = spd(&mut r, n, periodic);
    let mut count = 0;
    if periodic {
        solve_periodic_tridiagonal_counted(&sys, &mut count).unwrap();
    } else {
        solve_tridiagonal_counted(&sys, &mut count).unwrap();
    }
    count
}

#[test]
fn operation_count_is_affine() {
    for periodic in [false, true] {
        let s: Vec<usize> = [16, 32, 64, 128, 1024]
            .iter()
            .map(|&n| steps(n, periodic))
            .collect();
        let slope = s[1] - s[0];
        assert_eq!(s[2] - s[1], 2 * slope);
        assert_eq!(s[3] - s[2], 4 * slope);
        assert_eq!(s[4] - s[3], 56 * slope);
    }
}

#[test]
fn dst_is_its_own_inverse_up_to_scale() {
    let mut r = rng(31);
    for n in [1, 2, 7, 64, 255] {
        let x = random_vec(&mut r, n);
        let back: Vec<_> = dst1(&dst1(&x))
            .iter()
            .map(|v| v * (2.0 / (n as f64 + 1.0)))
            .collect();
        assert!(rel_diff(&back, &x) < 1e-13);
    }
}
