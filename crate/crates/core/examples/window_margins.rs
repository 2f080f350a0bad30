//! Positive-definiteness margins of the normal equations for the sine and
//! Hann windows, and the degenerate whole-point-even sine window.

use fustft::{validate_fustft_window, Window};

fn main() -> fustft::Result<()> {
    let lw = 512;
    for hop in [lw / 2, lw / 4, lw / 8, 100] {
        for (name, w) in [("sine", Window::sine(lw)?), ("hann", Window::hann(lw)?)] {
            let report = validate_fustft_window(&w, hop)?;
            for m in &report.margins {
                println!(
                    "{name:<4} xi={hop:<4} {:<10} min(a - 2|b|) = {:.3e} at i={}",
                    m.kind.to_string(),
                    m.margin,
                    m.argmin
                );
            }
        }
    }

    let wpe = Window::sine_whole_point(lw)?;
    let report = validate_fustft_window(&wpe, lw / 2)?;
    let m = report.margins[0];
    println!(
        "whole-point sine, xi=L_w/2: margin {:.1e} at i={} (a = {:.3e})",
        m.margin, m.argmin, m.diagonal
    );
    Ok(())
}
