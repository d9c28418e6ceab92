//! Output files that only appear once a command has succeeded.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{io_err, CliResult};

/// Collects file contents in memory and writes them all at the end. If any
/// write fails, files already written by this batch are removed again.
#[derive(Default)]
pub struct Outputs {
    files: Vec<(PathBuf, Vec<u8>)>,
}

impl Outputs {
    pub fn add(&mut self, path: impl Into<PathBuf>, bytes: Vec<u8>) {
        self.files.push((path.into(), bytes));
    }

    pub fn commit(self) -> CliResult {
        let mut written: Vec<&Path> = Vec::new();
        for (path, bytes) in &self.files {
            if let Err(e) = fs::write(path, bytes) {
                let _ = fs::remove_file(path);
                for p in written {
                    let _ = fs::remove_file(p);
                }
                return Err(io_err(path, e));
            }
            written.push(path);
        }
        Ok(())
    }
}

/// Removes a directory tree on drop unless disarmed.
pub struct DirGuard {
    path: Option<PathBuf>,
}

impl DirGuard {
    /// Guards `path` only if it does not exist yet; an existing directory
    /// is never removed.
    pub fn create(path: &Path) -> CliResult<Self> {
        let fresh = !path.exists();
        fs::create_dir_all(path).map_err(|e| io_err(path, e))?;
        Ok(DirGuard {
            path: fresh.then(|| path.to_owned()),
        })
    }

    pub fn disarm(mut self) {
        self.path = None;
    }
}

impl Drop for DirGuard {
    fn drop(&mut self) {
        if let Some(p) = self.path.take() {
            let _ = fs::remove_dir_all(p);
        }
    }
}
