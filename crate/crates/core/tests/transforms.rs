mod common;

use common::*;
use fustft::oracle::naive_forward;
use fustft::transform::{adjoint, adjoint_periodic, forward, forward_periodic};
use fustft::{Complex64, Signal, TransformConfig, TransformKind, Window};
use proptest::prelude::*;
use rand::Rng;

fn config_for(kind: TransformKind, lw: usize, hop: usize, nz: usize) -> TransformConfig {
    match kind {
        TransformKind::Fostft => TransformConfig::fostft(lw, hop, nz).unwrap(),
        _ => TransformConfig::new(kind, lw, hop).unwrap(),
    }
}

/// A periodic length accepted by every kind: a multiple of `lcm(ξ, L_w/2)`,
/// with an even frame count.
fn periodic_len(lw: usize, hop: usize, scale: usize) -> usize {
    let h = lw / 2;
    let (mut a, mut b) = (hop, h);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    let unit = 2 * hop * h / a;
    unit * (lw / unit + 1 + scale)
}

fn kind_strategy() -> impl Strategy<Value = TransformKind> {
    prop::sample::select(TransformKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_and_adjoint(
        kind in kind_strategy(),
        quarter in 1usize..5,
        hop_frac in 0.0f64..1.0,
        nz in 1usize..9,
        periodic in any::<bool>(),
        extra in 1usize..40,
        seed in any::<u64>(),
    ) {
        let lw = 4 * quarter;
        let hop = 1 + ((lw / 2 - 1) as f64 * hop_frac) as usize;
        let cfg = config_for(kind, lw, hop, nz);
        let w = Window::sine(lw).unwrap();
        let lx = if periodic { periodic_len(lw, hop, extra % 3) } else { lw + extra };
        let mut r = rng(seed);
        let x = random_signal(&mut r, lx);
        let y = random_signal(&mut r, lx);
        let alpha = Complex64::new(r.random_range(-2.0..2.0), r.random_range(-2.0..2.0));
        let beta = Complex64::new(r.random_range(-2.0..2.0), r.random_range(-2.0..2.0));
        let combo = Signal::from_complex(
            x.samples.iter().zip(&y.samples).map(|(a, b)| alpha * a + beta * b).collect(),
        );
        let fwd = |s: &Signal| if periodic {
            forward_periodic(s, &w, &cfg).unwrap()
        } else {
            forward(s, &w, &cfg).unwrap()
        };
        let (sx, sy) = (fwd(&x), fwd(&y));
        let expect: Vec<Complex64> =
            sx.data().iter().zip(sy.data()).map(|(a, b)| alpha * a + beta * b).collect();
        prop_assert!(rel_diff(fwd(&combo).data(), &expect) <= 1e-12);

        let z = random_spectrogram(&mut r, &sx);
        let back = if periodic { adjoint_periodic(&z, &w).unwrap() } else { adjoint(&z, &w).unwrap() };
        let gap = (dot(sx.data(), z.data()) - dot(&x.samples, &back.samples)).norm();
        prop_assert!(gap <= 1e-12 * norm(&x.samples) * norm(z.data()) * (lw as f64));
    }
}

#[test]
fn fast_transforms_match_naive_sums() {
    let mut r = rng(21);
    for trial in 0..200 {
        let kind = TransformKind::ALL[trial % 5];
        let lw = 4 * r.random_range(1..5);
        let hop = r.random_range(1..=lw / 2);
        let cfg = config_for(kind, lw, hop, r.random_range(1..=lw));
        let w = Window::hann(lw).unwrap();
        let periodic = trial % 3 == 0;
        let lx = if periodic {
            periodic_len(lw, hop, trial % 2)
        } else {
            lw + r.random_range(1..4 * lw)
        };
        let x = random_signal(&mut r, lx);
        let fast = if periodic {
            forward_periodic(&x, &w, &cfg).unwrap()
        } else {
            forward(&x, &w, &cfg).unwrap()
        };
        let naive = naive_forward(&x.samples, &w, &cfg, periodic);
        assert!(
            rel_diff(fast.data(), &naive) <= 1e-12,
            "{kind} L_w={lw} ξ={hop}"
        );
    }
}

#[test]
fn undersampled_grids_are_decimated_oversampled_grids() {
    let mut r = rng(22);
    for lw in [8, 16, 64] {
        for hop in [1, lw / 4, lw / 2] {
            let x = random_signal(&mut r, 3 * lw + 5);
            let w = Window::hann(lw).unwrap();
            let stft = forward(
                &x,
                &w,
                &TransformConfig::new(TransformKind::Stft, lw, hop).unwrap(),
            )
            .unwrap();
            let over = forward(&x, &w, &TransformConfig::fostft(lw, hop, lw).unwrap()).unwrap();
            let spec =
                |kind| forward(&x, &w, &TransformConfig::new(kind, lw, hop).unwrap()).unwrap();
            let (fi, fii, fiii) = (
                spec(TransformKind::FustftI),
                spec(TransformKind::FustftII),
                spec(TransformKind::FustftIII),
            );
            for l in 0..stft.frames() {
                for k in 0..lw / 2 {
                    assert!((fi.get(k, l) - stft.get(2 * k, l)).norm() < 1e-12);
                    assert!((fii.get(k, l) - stft.get(2 * k + 1, l)).norm() < 1e-12);
                    assert!((fii.get(k, l) - over.get(4 * k + 2, l)).norm() < 1e-12);
                    let expect = if l % 2 == 0 {
                        fi.get(k, l)
                    } else {
                        fii.get(k, l)
                    };
                    assert_eq!(fiii.get(k, l), expect);
                }
            }
        }
    }
}

#[test]
fn near_nonredundant_at_half_shift() {
    for lw in [8, 256, 2048] {
        let h = lw / 2;
        for lx in [lw + 1, 10 * lw + 3, 44_100] {
            let cfg = TransformConfig::new(TransformKind::FustftII, lw, h).unwrap();
            let frames = cfg.frame_count(lx).unwrap();
            assert_eq!(cfg.bins() * frames, h * (lx + h).div_ceil(h));
            assert!(cfg.bins() * frames < lx + lw);
        }
    }
}
