//! Resumable progress for the orderly search.
//!
//! The file records the search shape, the indices of finished top-level
//! branches, and what each finished branch produced, so a resumed run only
//! walks the branches still missing.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchResult {
    pub index: usize,
    pub nodes: u64,
    /// Canonical families found in the branch, as word lists.
    pub found: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub vertices: usize,
    pub uniformity: usize,
    pub split_depth: usize,
    pub branch_count: usize,
    /// Finished branch indices, ascending.
    pub completed: Vec<usize>,
    pub branches: Vec<BranchResult>,
}

impl Checkpoint {
    pub fn new(vertices: usize, uniformity: usize, split_depth: usize, branch_count: usize) -> Self {
        Checkpoint {
            vertices,
            uniformity,
            split_depth,
            branch_count,
            completed: Vec::new(),
            branches: Vec::new(),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Ok(serde_json::from_str(&s)?)
    }

    /// Writes through a temporary file so an interrupted save never truncates progress.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string(self)?)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn check_matches(&self, vertices: usize, uniformity: usize, split_depth: usize, branch_count: usize) -> Result<()> {
        let want = (vertices, uniformity, split_depth, branch_count);
        let have = (self.vertices, self.uniformity, self.split_depth, self.branch_count);
        if want != have {
            return Err(Error::Parse(format!(
                "checkpoint is for (vertices, uniformity, split, branches) = {have:?}, this run is {want:?}"
            )));
        }
        Ok(())
    }

    pub fn is_done(&self, index: usize) -> bool {
        self.completed.binary_search(&index).is_ok()
    }

    pub fn record(&mut self, result: BranchResult) {
        if let Err(pos) = self.completed.binary_search(&result.index) {
            self.completed.insert(pos, result.index);
            let at = self.branches.partition_point(|b| b.index < result.index);
            self.branches.insert(at, result);
        }
    }
}
