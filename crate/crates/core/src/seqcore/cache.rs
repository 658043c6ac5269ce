use std::path::{Path, PathBuf};
use std::sync::Mutex;

use super::{io, Provenance, Sequence};
use crate::error::Result;

/// Disk cache of generated sequences keyed by (provenance, n_max).
///
/// Files use the sequence text format. Writes go through a temp file and a
/// rename, so readers never observe a partial file.
#[derive(Debug)]
pub struct SequenceCache {
    dir: PathBuf,
    write_lock: Mutex<()>,
}

impl SequenceCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SequenceCache {
            dir: dir.into(),
            write_lock: Mutex::new(()),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, provenance: &Provenance, n_max: usize) -> PathBuf {
        let key: String = provenance
            .to_string()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
            .collect();
        self.dir.join(format!("{key}__{n_max}.seq"))
    }

    pub fn get_or_generate(
        &self,
        provenance: &Provenance,
        n_max: usize,
        generate: impl FnOnce() -> Result<Sequence>,
    ) -> Result<Sequence> {
        let path = self.path_for(provenance, n_max);
        if path.exists() {
            if let Ok(loaded) = io::load_sequence(&path) {
                return Sequence::new(
                    loaded.terms().to_vec(),
                    loaded.offset(),
                    provenance.clone(),
                );
            }
        }
        let seq = generate()?;
        let _guard = self.write_lock.lock().expect("cache lock poisoned");
        io::save_sequence(&seq, &path)?;
        Ok(seq)
    }
}
