//! Persistent on-disk cache of Kloosterman tables.
//!
//! File layout, all integers little-endian:
//!
//! ```text
//! magic      4 bytes   "KLT1" (i64 coefficients) or "KLT2" (big integers)
//! nplus1     u32
//! p          u32
//! r          u32
//! generator  u32       encoding of the generator used for indexing
//! body       (q−1)·(p−1) coefficients, a-index-major
//! ```
//!
//! A `KLT1` coefficient is an `i64`. A `KLT2` coefficient is a `u32` byte
//! count followed by that many bytes of two's-complement little-endian
//! integer. Writers pick `KLT1` whenever every coefficient fits.

use super::table::{Backend, KlTable};
use super::KlError;
use crate::exactalg::{fq_context, CycElem};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "KLMOMENT_CACHE_DIR";

const MAGIC_SMALL: &[u8; 4] = b"KLT1";
const MAGIC_BIG: &[u8; 4] = b"KLT2";

/// Serializes a table; `force_big` selects the big-integer encoding even
/// when every coefficient fits in 64 bits.
pub fn encode_table(table: &KlTable, force_big: bool) -> Vec<u8> {
    let fits = table
        .values()
        .iter()
        .all(|v| v.coeffs().iter().all(|c| c.to_i64().is_some()));
    let big = force_big || !fits;
    let mut out = Vec::new();
    out.extend_from_slice(if big { MAGIC_BIG } else { MAGIC_SMALL });
    for field in [table.nplus1(), table.p(), table.r(), table.generator()] {
        out.extend_from_slice(&field.to_le_bytes());
    }
    for v in table.values() {
        for c in v.coeffs() {
            if big {
                let bytes = c.to_signed_bytes_le();
                out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
                out.extend_from_slice(&bytes);
            } else {
                out.extend_from_slice(&c.to_i64().expect("checked above").to_le_bytes());
            }
        }
    }
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], KlError> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.bytes.len());
        let end = end.ok_or_else(|| KlError::CacheFormat("truncated file".into()))?;
        let out = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(out)
    }
    fn u32(&mut self) -> Result<u32, KlError> {
        Ok(u32::from_le_bytes(
            self.take(4)?.try_into().expect("4 bytes"),
        ))
    }
    fn i64(&mut self) -> Result<i64, KlError> {
        Ok(i64::from_le_bytes(
            self.take(8)?.try_into().expect("8 bytes"),
        ))
    }
}

/// Parses a serialized table, checking the header against the
/// deterministic field model.
pub fn decode_table(bytes: &[u8]) -> Result<KlTable, KlError> {
    let mut rd = Reader { bytes, pos: 0 };
    let magic = rd.take(4)?;
    let big = match magic {
        m if m == MAGIC_SMALL => false,
        m if m == MAGIC_BIG => true,
        _ => return Err(KlError::CacheFormat("unknown magic".into())),
    };
    let (nplus1, p, r, generator) = (rd.u32()?, rd.u32()?, rd.u32()?, rd.u32()?);
    let ctx = fq_context(p, r)?;
    if ctx.generator() != generator {
        return Err(KlError::CacheFormat(format!(
            "generator {generator} differs from the canonical generator {}",
            ctx.generator()
        )));
    }
    let phi = p as usize - 1;
    let mut values = Vec::with_capacity(ctx.q() as usize - 1);
    for _ in 0..ctx.q() - 1 {
        let mut coeffs = Vec::with_capacity(phi);
        for _ in 0..phi {
            let c = if big {
                let len = rd.u32()? as usize;
                BigInt::from_signed_bytes_le(rd.take(len)?)
            } else {
                BigInt::from(rd.i64()?)
            };
            coeffs.push(c);
        }
        values.push(CycElem::integral(p, coeffs)?);
    }
    if rd.pos != bytes.len() {
        return Err(KlError::CacheFormat("trailing bytes".into()));
    }
    Ok(KlTable::from_parts(
        nplus1,
        ctx,
        1,
        Backend::Convolution,
        values,
    ))
}

/// A directory of cached tables, one file per `(n+1, p, r)`.
#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    /// Uses `dir`, creating it if needed.
    pub fn new(dir: impl AsRef<Path>) -> Result<Self, KlError> {
        let dir = dir.as_ref().to_path_buf();
        std::fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
        Ok(Self { dir })
    }

    /// Uses the directory named by [`CACHE_ENV`], if set.
    pub fn from_env() -> Result<Option<Self>, KlError> {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Self::new(PathBuf::from(d)).map(Some),
            _ => Ok(None),
        }
    }

    /// Cache directory.
    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// File holding the table for `(n+1, p, r)`.
    pub fn path_for(&self, nplus1: u32, p: u32, r: u32) -> PathBuf {
        self.dir.join(format!("kl_n{nplus1}_p{p}_r{r}.klt"))
    }

    /// Loads a cached table, `Ok(None)` when absent.
    pub fn load(&self, nplus1: u32, p: u32, r: u32) -> Result<Option<KlTable>, KlError> {
        let path = self.path_for(nplus1, p, r);
        match std::fs::read(&path) {
            Ok(bytes) => {
                let t = decode_table(&bytes)?;
                if (t.nplus1(), t.p(), t.r()) != (nplus1, p, r) {
                    return Err(KlError::CacheFormat(format!(
                        "{} holds a different table",
                        path.display()
                    )));
                }
                Ok(Some(t))
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(io_err(&path, e)),
        }
    }

    /// Writes a table atomically: a temporary file in the same directory is
    /// renamed over the destination. Only tables for the standard character
    /// are cached.
    pub fn store(&self, table: &KlTable) -> Result<(), KlError> {
        if table.psi_scale() != 1 {
            return Ok(());
        }
        let path = self.path_for(table.nplus1(), table.p(), table.r());
        let mut tmp =
            tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| io_err(&self.dir, e))?;
        tmp.write_all(&encode_table(table, false))
            .map_err(|e| io_err(tmp.path(), e))?;
        tmp.persist(&path).map_err(|e| io_err(&path, e.error))?;
        Ok(())
    }
}

fn io_err(path: &Path, source: std::io::Error) -> KlError {
    KlError::CacheIo {
        path: path.display().to_string(),
        source,
    }
}
