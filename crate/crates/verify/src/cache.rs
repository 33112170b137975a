//! On-disk cache of the W(E6) element table.
//!
//! Layout: the line `picard-weyl-cache v1`, the line `sha256 <hex>` holding
//! the digest of the payload, then the payload: generator count and element
//! count as little-endian `u32`, followed by every matrix (generators first)
//! as 36 signed bytes in row-major order.

use std::fs;
use std::io;
use std::path::Path;
use std::time::{Duration, Instant};

use picard_core::weyl::{generate_group, generator_matrices, GroupTable, WeylElement};
use picard_core::WeylError;
use sha2::{Digest, Sha256};

pub const CACHE_HEADER: &str = "picard-weyl-cache v1";

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache io: {0}")]
    Io(#[from] io::Error),
    #[error("unrecognized cache header {0:?}")]
    Version(String),
    #[error("checksum mismatch: stored {stored}, computed {computed}")]
    Checksum { stored: String, computed: String },
    #[error("malformed cache payload: {0}")]
    Format(&'static str),
    #[error("cached table is not a group: {0}")]
    Group(#[from] WeylError),
}

fn encode(group: &GroupTable) -> Result<Vec<u8>, CacheError> {
    let gens = group.generators();
    let elems = group.elements();
    let mut out = Vec::with_capacity(8 + 36 * (gens.len() + elems.len()));
    for n in [gens.len(), elems.len()] {
        let n = u32::try_from(n).map_err(|_| CacheError::Format("table too large"))?;
        out.extend_from_slice(&n.to_le_bytes());
    }
    for g in gens.iter().chain(elems) {
        for v in g.0.iter().flatten() {
            let b = i8::try_from(*v).map_err(|_| CacheError::Format("entry out of byte range"))?;
            out.push(b as u8);
        }
    }
    Ok(out)
}

fn decode(payload: &[u8]) -> Result<GroupTable, CacheError> {
    let count = |k: usize| -> Result<usize, CacheError> {
        let bytes = payload.get(4 * k..4 * k + 4).ok_or(CacheError::Format("missing counts"))?;
        Ok(u32::from_le_bytes(bytes.try_into().expect("4 bytes")) as usize)
    };
    let (ng, ne) = (count(0)?, count(1)?);
    let body = &payload[8..];
    if body.len() != 36 * (ng + ne) {
        return Err(CacheError::Format("payload length does not match counts"));
    }
    let mut mats = body.chunks_exact(36).map(|c| {
        let mut m = [[0i32; 6]; 6];
        for (k, b) in c.iter().enumerate() {
            m[k / 6][k % 6] = i32::from(*b as i8);
        }
        WeylElement(m)
    });
    let generators: Vec<WeylElement> = mats.by_ref().take(ng).collect();
    let elements: Vec<WeylElement> = mats.collect();
    Ok(GroupTable::from_trusted_parts(generators, elements)?)
}

fn digest(payload: &[u8]) -> String {
    hex::encode(Sha256::digest(payload).as_slice())
}

pub fn cache_group(path: &Path, group: &GroupTable) -> Result<(), CacheError> {
    let payload = encode(group)?;
    let mut bytes = format!("{CACHE_HEADER}\nsha256 {}\n", digest(&payload)).into_bytes();
    bytes.extend_from_slice(&payload);
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, bytes)?;
    Ok(())
}

pub fn load_group(path: &Path) -> Result<GroupTable, CacheError> {
    let bytes = fs::read(path)?;
    let mut rest = bytes.as_slice();
    let mut line = || -> Result<String, CacheError> {
        let end = rest.iter().position(|&b| b == b'\n').ok_or(CacheError::Format("missing header line"))?;
        let s = String::from_utf8_lossy(&rest[..end]).into_owned();
        rest = &rest[end + 1..];
        Ok(s)
    };
    let header = line()?;
    if header != CACHE_HEADER {
        return Err(CacheError::Version(header));
    }
    let sum = line()?;
    let stored = sum.strip_prefix("sha256 ").ok_or(CacheError::Format("missing checksum line"))?.to_string();
    let computed = digest(rest);
    if stored != computed {
        return Err(CacheError::Checksum { stored, computed });
    }
    decode(rest)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheSource {
    /// No cache path was given.
    Generated,
    /// The cache was missing and has been written.
    Stored,
    /// The cache was unreadable and has been rewritten.
    Regenerated(String),
    Loaded,
}

#[derive(Debug)]
pub struct CachedGroup {
    pub group: GroupTable,
    pub source: CacheSource,
    /// Time spent generating, if the table was generated.
    pub generate: Option<Duration>,
    /// Time spent loading the cache. After a fresh store this is a timed
    /// reload of the file just written.
    pub load: Option<Duration>,
}

/// Loads the table from `path`, generating and storing it when the file is
/// missing or fails validation.
pub fn load_or_generate(path: Option<&Path>) -> Result<CachedGroup, CacheError> {
    let generate = || -> Result<(GroupTable, Duration), CacheError> {
        let t = Instant::now();
        let g = generate_group(&generator_matrices())?;
        Ok((g, t.elapsed()))
    };
    let Some(path) = path else {
        let (group, d) = generate()?;
        return Ok(CachedGroup { group, source: CacheSource::Generated, generate: Some(d), load: None });
    };
    let source = if path.exists() {
        let t = Instant::now();
        match load_group(path) {
            Ok(group) => {
                return Ok(CachedGroup { group, source: CacheSource::Loaded, generate: None, load: Some(t.elapsed()) })
            }
            Err(e) => CacheSource::Regenerated(e.to_string()),
        }
    } else {
        CacheSource::Stored
    };
    let (group, d) = generate()?;
    cache_group(path, &group)?;
    let t = Instant::now();
    let reloaded = load_group(path)?;
    let load = t.elapsed();
    if reloaded.elements() != group.elements() {
        return Err(CacheError::Format("reload differs from the stored table"));
    }
    Ok(CachedGroup { group, source, generate: Some(d), load: Some(load) })
}
