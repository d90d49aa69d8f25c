//! Root system and Coxeter group of type H3 or H4, built once and shared.

use std::path::Path;

use crate::cache;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ring::GoldenNumber;
use crate::roots::{CoxeterType, DiagramSpec, RootSystem};

#[derive(Clone, Debug)]
pub struct HCoxeter {
    kind: CoxeterType,
    system: RootSystem<GoldenNumber>,
    group: GroupTable,
}

impl HCoxeter {
    pub fn build(kind: CoxeterType) -> Result<Self> {
        HCoxeter::build_cached(kind, None)
    }

    /// Like [`HCoxeter::build`], reusing a group-table cache under
    /// `cache_dir` when present and valid, and writing one otherwise.
    pub fn build_cached(kind: CoxeterType, cache_dir: Option<&Path>) -> Result<Self> {
        if !kind.is_golden() {
            return Err(Error::UnsupportedDiagram(format!("{kind} is not of type H")));
        }
        let system = RootSystem::build(DiagramSpec::of(kind))?;
        let group = match cache_dir {
            Some(dir) => cache::load_or_build(dir, kind.name(), &system)?,
            None => GroupTable::coxeter(&system)?,
        };
        Ok(HCoxeter { kind, system, group })
    }

    pub fn kind(&self) -> CoxeterType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn system(&self) -> &RootSystem<GoldenNumber> {
        &self.system
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }
}
