//! Reproduces the layout of the exact and noisy inversion tables on the
//! synthetic voiced signal (not the original recording).
//!
//! ```text
//! cargo run --release --example tables -- 15
//! ```

use fustft::bench::{run, BenchConfig};
use fustft::synth::{voiced, VoicedParams};

fn main() -> fustft::Result<()> {
    let seconds = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3.0);
    let x = voiced(&VoicedParams {
        seconds,
        ..Default::default()
    });
    for row in run(&x, &BenchConfig::default())? {
        println!("{row}");
    }
    Ok(())
}
