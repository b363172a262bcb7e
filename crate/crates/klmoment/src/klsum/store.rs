//! Process-wide table provider with an in-memory layer over the disk cache.

use super::cache::TableCache;
use super::table::{kl_table_scaled, Backend, KlTable};
use super::KlError;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

type Key = (u32, u32, u32, u32);

/// Builds Kloosterman tables on demand and memoizes them. Tables for the
/// standard character are also persisted when a disk cache is configured.
#[derive(Debug)]
pub struct KlStore {
    backend: Backend,
    disk: Option<TableCache>,
    mem: Mutex<HashMap<Key, Arc<KlTable>>>,
}

impl Default for KlStore {
    fn default() -> Self {
        Self::new(Backend::Convolution)
    }
}

impl KlStore {
    /// Memory-only store using `backend` for new tables.
    pub fn new(backend: Backend) -> Self {
        Self {
            backend,
            disk: None,
            mem: Mutex::new(HashMap::new()),
        }
    }

    /// Adds a disk cache layer.
    pub fn with_cache(mut self, cache: TableCache) -> Self {
        self.disk = Some(cache);
        self
    }

    /// Backend used for new tables.
    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// Disk cache, if configured.
    pub fn disk(&self) -> Option<&TableCache> {
        self.disk.as_ref()
    }

    /// Table of `Kl_{n+1}(·; p^r)` for the standard character.
    pub fn table(&self, nplus1: u32, p: u32, r: u32) -> Result<Arc<KlTable>, KlError> {
        self.table_scaled(nplus1, p, r, 1)
    }

    /// Table for the character `x ↦ ψ(c·x)`.
    pub fn table_scaled(
        &self,
        nplus1: u32,
        p: u32,
        r: u32,
        c: u32,
    ) -> Result<Arc<KlTable>, KlError> {
        let key = (nplus1, p, r, c);
        if let Some(t) = self.mem.lock().expect("table store").get(&key) {
            return Ok(t.clone());
        }
        let loaded = match (&self.disk, c) {
            (Some(d), 1) => d.load(nplus1, p, r)?,
            _ => None,
        };
        let table = match loaded {
            Some(t) => t,
            None => {
                let t = kl_table_scaled(nplus1, p, r, self.backend, c)?;
                if let Some(d) = &self.disk {
                    d.store(&t)?;
                }
                t
            }
        };
        let table = Arc::new(table);
        self.mem
            .lock()
            .expect("table store")
            .entry(key)
            .or_insert_with(|| table.clone());
        Ok(table)
    }
}
