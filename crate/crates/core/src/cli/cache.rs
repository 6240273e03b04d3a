//! On-disk tables of structure constants of `H̄^p` in the basis `B^p`, one JSON file per
//! configuration, named by a SHA-256 of the parameters and the code
//! version.
//!
//! Writers take an exclusive lock on `<dir>/.lock`, readers a shared one.
//! Entries are written to a temporary file and renamed into place.

use std::fs::{self, File, OpenOptions};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::config::RunConfig;
use super::suites::{build, Outcome, Timer};
use super::CliError;
use crate::check::Check;
use crate::exact_linear::SpecField;
use crate::modified_ak::ModifiedContext;
use crate::parabolic::ParabolicContext;

pub const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");
const PREFIX: &str = "cs-";

/// Content key of a configuration: the seed is irrelevant to the table.
pub fn cache_key(cfg: &RunConfig) -> String {
    let (field, q, big_q) = cfg.params.describe();
    let canonical = format!(
        "n={};r={};m={:?};p={:?};field={field};q={q};Q={big_q:?};version={CODE_VERSION}",
        cfg.n,
        cfg.r,
        cfg.m,
        cfg.p.parts()
    );
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

/// One cached table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub code_version: String,
    pub config: Value,
    /// `B^p` as `(λ, position of S, position of T)` of the underlying `φ_{ST}`
    pub basis: Vec<(Vec<Vec<usize>>, usize, usize)>,
    /// `(x, y, [(z, c)])`: `b_x b_y = Σ c b_z`, indices into `basis`
    pub products: Vec<(usize, usize, Vec<(usize, String)>)>,
}

struct Lock(File);

impl Lock {
    fn open(dir: &Path, exclusive: bool) -> Result<Self, CliError> {
        fs::create_dir_all(dir)?;
        let f = OpenOptions::new().create(true).truncate(false).write(true).open(dir.join(".lock"))?;
        if exclusive {
            f.lock()?;
        } else {
            f.lock_shared()?;
        }
        Ok(Lock(f))
    }
}

impl Drop for Lock {
    fn drop(&mut self) {
        let _ = self.0.unlock();
    }
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{PREFIX}{key}.json"))
}

fn entries(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let mut out: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
            name.starts_with(PREFIX) && name.ends_with(".json")
        })
        .collect();
    out.sort();
    Ok(out)
}

fn table<F: SpecField>(cfg: &RunConfig, key: String) -> Result<CacheEntry, CliError> {
    let s = build::<F>(cfg)?;
    let pc = ParabolicContext::new(&s, cfg.p.clone())?;
    let mc = ModifiedContext::new(&pc)?;
    let basis = mc
        .basis()
        .iter()
        .map(|&i| {
            let l = s.label(i);
            (s.cat.plus()[l.lambda].to_arrays(), l.ps, l.pt)
        })
        .collect();
    let elems: Vec<_> = (0..mc.dim()).map(|k| mc.basis_elem(k)).collect();
    let mut products = Vec::new();
    for (a, x) in elems.iter().enumerate() {
        for (b, y) in elems.iter().enumerate() {
            let z: Vec<(usize, String)> =
                mc.mul(x, y).iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.to_string())).collect();
            if !z.is_empty() {
                products.push((a, b, z));
            }
        }
    }
    Ok(CacheEntry {
        key,
        code_version: CODE_VERSION.into(),
        config: serde_json::to_value(cfg.echo())?,
        basis,
        products,
    })
}

pub fn build_entry<F: SpecField>(cfg: &RunConfig, dir: &Path, t: &Timer) -> Result<Outcome, CliError> {
    let key = cache_key(cfg);
    let _lock = Lock::open(dir, true)?;
    let path = entry_path(dir, &key);
    let hit = path.exists();
    let entry = if hit {
        serde_json::from_str::<CacheEntry>(&fs::read_to_string(&path)?)?
    } else {
        let e = table::<F>(cfg, key.clone())?;
        t.stage("structure constants of H̄^p");
        let tmp = dir.join(format!(".{PREFIX}{key}.tmp"));
        fs::write(&tmp, serde_json::to_string(&e)?)?;
        fs::rename(&tmp, &path)?;
        e
    };
    let checks = vec![Check::new("cache entry matches its key", entry.key == key)];
    let data = json!({
        "key": key,
        "hit": hit,
        "file": path.file_name().and_then(|n| n.to_str()),
        "dim": entry.basis.len(),
        "nonzero_products": entry.products.len(),
    });
    Ok(Outcome { checks, data })
}

pub fn inspect(dir: &Path) -> Result<Outcome, CliError> {
    let _lock = Lock::open(dir, false)?;
    let mut listed = Vec::new();
    let mut bad = Vec::new();
    for path in entries(dir)? {
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("").to_string();
        match serde_json::from_str::<CacheEntry>(&fs::read_to_string(&path)?) {
            Ok(e) => {
                if name != format!("{PREFIX}{}.json", e.key) {
                    bad.push(format!("{name} holds key {}", e.key));
                }
                listed.push(json!({
                    "file": name,
                    "key": e.key,
                    "code_version": e.code_version,
                    "config": e.config,
                    "dim": e.basis.len(),
                }));
            }
            Err(err) => bad.push(format!("{name}: {err}")),
        }
    }
    let checks = vec![Check::from_witnesses("cache entries are readable and correctly named", bad)];
    Ok(Outcome { checks, data: json!({ "entries": listed }) })
}

pub fn purge(dir: &Path) -> Result<Outcome, CliError> {
    let _lock = Lock::open(dir, true)?;
    let files = entries(dir)?;
    for f in &files {
        fs::remove_file(f)?;
    }
    Ok(Outcome { checks: Vec::new(), data: json!({ "removed": files.len() }) })
}
