//! On-disk cache for enumerated group tables.
//!
//! Layout (little endian): magic `HBGT`, format version, rank, degree,
//! generator count, element count, generator permutations, then per element
//! its signed permutation and canonical word, followed by a SHA-256 of
//! everything before it. A cache that fails any check is rebuilt.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupTable};
use crate::roots::{RootSystem, SignedRoot};
use crate::scalar::Coefficient;

const MAGIC: &[u8; 4] = b"HBGT";
const VERSION: u32 = 1;

pub fn cache_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("group-{name}.v{VERSION}.bin"))
}

/// Load the Coxeter group of `system` from `dir`, or enumerate and store it.
pub fn load_or_build<S: Coefficient>(dir: &Path, name: &str, system: &RootSystem<S>) -> Result<GroupTable> {
    let path = cache_path(dir, name);
    if let Ok(bytes) = fs::read(&path) {
        if let Ok(table) = decode(&bytes, system) {
            return Ok(table);
        }
    }
    let table = GroupTable::coxeter(system)?;
    fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    fs::write(&path, encode(&table)).map_err(|e| Error::Cache(e.to_string()))?;
    Ok(table)
}

pub fn encode(table: &GroupTable) -> Vec<u8> {
    let degree = table.generators().first().map_or(0, |g| g.degree());
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    for v in [VERSION, table.rank() as u32, degree as u32, table.generators().len() as u32, table.len() as u32] {
        out.extend_from_slice(&v.to_le_bytes());
    }
    let put_perm = |out: &mut Vec<u8>, e: &GroupElement| {
        for s in e.perm() {
            out.extend_from_slice(&s.raw().to_le_bytes());
        }
    };
    for g in table.generators() {
        put_perm(&mut out, g);
    }
    for id in table.ids() {
        put_perm(&mut out, table.element(id));
        let w = table.word(id);
        out.push(w.len() as u8);
        out.extend_from_slice(w);
    }
    let digest = Sha256::digest(&out).to_vec();
    out.extend_from_slice(&digest);
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.bytes.len());
        let end = end.ok_or_else(|| Error::Cache("truncated".into()))?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn perm(&mut self, degree: usize) -> Result<GroupElement> {
        let raw = self.take(2 * degree)?;
        let mut perm = Vec::with_capacity(degree);
        for c in raw.chunks_exact(2) {
            let v = u16::from_le_bytes([c[0], c[1]]);
            let s = SignedRoot::new((v >> 1) as usize, v & 1 == 1);
            if s.index() >= degree {
                return Err(Error::Cache("root index out of range".into()));
            }
            perm.push(s);
        }
        Ok(GroupElement::from_perm(perm))
    }
}

pub fn decode<S: Coefficient>(bytes: &[u8], system: &RootSystem<S>) -> Result<GroupTable> {
    if bytes.len() < 32 + 24 {
        return Err(Error::Cache("truncated".into()));
    }
    let (payload, digest) = bytes.split_at(bytes.len() - 32);
    if Sha256::digest(payload).as_slice() != digest {
        return Err(Error::Cache("checksum mismatch".into()));
    }
    let mut r = Reader { bytes: payload, pos: 0 };
    if r.take(4)? != MAGIC || r.u32()? != VERSION {
        return Err(Error::Cache("bad header".into()));
    }
    let rank = r.u32()? as usize;
    let degree = r.u32()? as usize;
    let ngens = r.u32()? as usize;
    let count = r.u32()? as usize;
    if rank != system.rank() || degree != system.len() || ngens != system.rank() {
        return Err(Error::Cache("stale: system shape changed".into()));
    }
    let gens = (0..ngens).map(|_| r.perm(degree)).collect::<Result<Vec<_>>>()?;
    for (i, g) in gens.iter().enumerate() {
        if g.perm() != system.simple_reflection(i) {
            return Err(Error::Cache("stale: generators changed".into()));
        }
    }
    let mut elements = Vec::with_capacity(count);
    let mut words = Vec::with_capacity(count);
    let mut index = HashMap::with_capacity(count);
    for i in 0..count {
        let e = r.perm(degree)?;
        let len = r.take(1)?[0] as usize;
        let word = r.take(len)?.to_vec();
        if index.insert(e.key(rank), i as u32).is_some() {
            return Err(Error::Cache("duplicate element".into()));
        }
        elements.push(e);
        words.push(word);
    }
    if r.pos != payload.len() {
        return Err(Error::Cache("trailing bytes".into()));
    }
    GroupTable::from_parts(rank, gens, elements, words, index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GoldenNumber;
    use crate::roots::{CoxeterType, DiagramSpec};

    #[test]
    fn round_trip_and_corruption() {
        let s = RootSystem::<GoldenNumber>::build(DiagramSpec::of(CoxeterType::H3)).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let t = load_or_build(dir.path(), "H3", &s).unwrap();
        let path = cache_path(dir.path(), "H3");
        let bytes = fs::read(&path).unwrap();
        let back = decode(&bytes, &s).unwrap();
        assert_eq!(back.len(), t.len());
        for id in t.ids() {
            assert_eq!(back.word(id), t.word(id));
            assert_eq!(back.element(id), t.element(id));
        }

        let mut bad = bytes.clone();
        bad[40] ^= 1;
        assert!(matches!(decode(&bad, &s), Err(Error::Cache(_))));
        fs::write(&path, &bad).unwrap();
        // stale cache is rebuilt and rewritten
        let again = load_or_build(dir.path(), "H3", &s).unwrap();
        assert_eq!(again.len(), 120);
        assert_eq!(fs::read(&path).unwrap(), bytes);

        let h4 = RootSystem::<GoldenNumber>::build(DiagramSpec::of(CoxeterType::H4)).unwrap();
        assert!(decode(&bytes, &h4).is_err());
    }
}
