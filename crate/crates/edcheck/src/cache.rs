//! On-disk cache of group closures.
//!
//! One file per closure, named after [`cache_key`]. Each line is one group
//! element in BFS order: for every matrix entry, row-major, the `degree`
//! base-p digits of its residue, most significant first. Loaded lists are
//! replayed against the generators before use, so a corrupt or stale file is
//! detected, reported as a warning and recomputed.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context as _, Result};
use edcheck_core::group::{cache_key, GroupError, Normalization};
use edcheck_core::{FiniteField, FqMat, MatrixGroup};

pub fn encode_element(m: &FqMat) -> String {
    let f = m.field();
    let p = f.characteristic();
    let width = f.degree() as usize;
    let mut out = String::with_capacity(m.data().len() * width);
    for &x in m.data() {
        let mut digits = vec![0u32; width];
        let mut v = x as u32;
        for d in digits.iter_mut().rev() {
            *d = v % p;
            v /= p;
        }
        out.extend(digits.iter().map(|&d| char::from_digit(d, 36).expect("digit below 36")));
    }
    out
}

pub fn decode_element(field: FiniteField, degree: usize, line: &str) -> Option<FqMat> {
    let p = field.characteristic();
    let width = field.degree() as usize;
    let chars: Vec<char> = line.chars().collect();
    if chars.len() != degree * degree * width {
        return None;
    }
    let mut data = Vec::with_capacity(degree * degree);
    for chunk in chars.chunks(width) {
        let mut v = 0u32;
        for c in chunk {
            let d = c.to_digit(36).filter(|&d| d < p)?;
            v = v * p + d;
        }
        data.push(v as u8);
    }
    Some(FqMat::new(field, degree, degree, data))
}

#[derive(Clone, Debug)]
pub struct GroupCache {
    dir: PathBuf,
}

impl GroupCache {
    /// Uses `dir`, creating it if needed.
    pub fn open(dir: &Path) -> Result<GroupCache> {
        fs::create_dir_all(dir).with_context(|| format!("cannot create cache directory {}", dir.display()))?;
        Ok(GroupCache { dir: dir.to_path_buf() })
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.txt"))
    }

    fn load(&self, path: &Path, gens: &[FqMat], norm: Normalization) -> Result<MatrixGroup> {
        let text = fs::read_to_string(path)?;
        let field = gens[0].field();
        let degree = gens[0].rows();
        let mut elements = Vec::new();
        for (n, line) in text.lines().enumerate() {
            match decode_element(field, degree, line.trim()) {
                Some(m) => elements.push(m),
                None => bail!("line {} is not an element of GL{}({})", n + 1, degree, field),
            }
        }
        Ok(MatrixGroup::from_elements(gens, norm, elements)?)
    }

    fn store(&self, path: &Path, group: &MatrixGroup) -> Result<()> {
        let mut text = String::new();
        for e in group.elements() {
            text.push_str(&encode_element(e));
            text.push('\n');
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// The closure of `gens`, read from the cache when a valid entry exists
    /// and written to it otherwise.
    pub fn closure(&self, gens: &[FqMat], norm: Normalization, cap: usize) -> Result<MatrixGroup> {
        let key = cache_key(gens[0].field(), gens[0].rows(), norm, gens);
        let path = self.path_for(&key);
        if path.exists() {
            match self.load(&path, gens, norm) {
                Ok(g) => {
                    log::debug!("loaded {} elements from {}", g.order(), path.display());
                    return Ok(g);
                }
                Err(e) => log::warn!("cache entry {} is corrupt ({e:#}); recomputing", path.display()),
            }
        }
        let group = MatrixGroup::closure_with(gens, norm, cap)?;
        if let Err(e) = self.store(&path, &group) {
            log::warn!("cannot write cache entry {}: {e:#}", path.display());
        }
        Ok(group)
    }
}

/// Closure through an optional cache.
pub fn closure(
    cache: Option<&GroupCache>,
    gens: &[FqMat],
    norm: Normalization,
    cap: usize,
) -> Result<MatrixGroup> {
    match cache {
        Some(c) => c.closure(gens, norm, cap),
        None => Ok(MatrixGroup::closure_with(gens, norm, cap).map_err(|e: GroupError| anyhow::anyhow!(e))?),
    }
}
