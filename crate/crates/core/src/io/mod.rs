//! File formats: the spectrogram container, WAV audio and power CSV.

pub mod container;
pub mod csv;
pub mod wav;

pub use self::csv::{read_power_csv, write_power_csv, PowerTable};
pub use container::{read_spectrogram, write_spectrogram, FORMAT_VERSION, MAGIC};
pub use wav::{read_wav, write_wav};

use std::io::Write;
use std::path::Path;

use crate::error::Result;

/// Writes through a temporary file in the target directory, then renames.
pub(crate) fn atomic_write<F>(path: &Path, fill: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    {
        let mut buf = std::io::BufWriter::new(tmp.as_file_mut());
        fill(&mut buf)?;
        buf.flush()?;
    }
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
