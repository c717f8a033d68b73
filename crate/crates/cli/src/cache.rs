//! On-disk cache of `lambda` reports keyed by a digest of the inputs.

use std::io;
use std::path::PathBuf;

use homcode_core::homspace::SEARCH_CAP;
use homcode_core::report::{AnalysisReport, Method};
use sha2::{Digest, Sha256};

/// Bump when the report layout changes.
const FORMAT: &str = "homcode-lambda-v1";

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: PathBuf) -> Self {
        Cache { dir }
    }

    /// `$HOMCODE_CACHE_DIR`, else `$XDG_CACHE_HOME/homcode`, else
    /// `$HOME/.cache/homcode`.
    pub fn from_env() -> Option<Self> {
        let var = |k: &str| {
            std::env::var_os(k)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from)
        };
        var("HOMCODE_CACHE_DIR")
            .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("homcode")))
            .or_else(|| var("HOME").map(|d| d.join(".cache").join("homcode")))
            .map(Cache::new)
    }

    pub fn key(g_canonical: &str, h_canonical: &str, method: Method) -> String {
        let mut hasher = Sha256::new();
        let cap = SEARCH_CAP.to_string();
        for part in [FORMAT, g_canonical, h_canonical, method.as_str(), &cap] {
            hasher.update((part.len() as u64).to_le_bytes());
            hasher.update(part.as_bytes());
        }
        hex::encode(hasher.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A missing or unreadable entry is a miss.
    pub fn load(&self, key: &str) -> Option<AnalysisReport> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn store(&self, key: &str, report: &AnalysisReport) -> io::Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let tmp = self
            .dir
            .join(format!("{key}.json.tmp{}", std::process::id()));
        std::fs::write(
            &tmp,
            serde_json::to_vec_pretty(report).map_err(io::Error::other)?,
        )?;
        std::fs::rename(tmp, self.path(key))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use homcode_core::make_named;

    #[test]
    fn keys_separate_inputs() {
        let a = Cache::key("A5", "A5", Method::Both);
        assert_eq!(a.len(), 64);
        assert_eq!(a, Cache::key("A5", "A5", Method::Both));
        assert_ne!(a, Cache::key("A5", "A5", Method::Brute));
        assert_ne!(
            Cache::key("A5", "A6", Method::Both),
            Cache::key("A5A", "6", Method::Both)
        );
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("nested"));
        let g = make_named("S3").unwrap();
        let h = make_named("C6").unwrap();
        let r = AnalysisReport::compute("S3", &g, "C6", &h, Method::Both, false).unwrap();
        let key = Cache::key("S3", "C6", Method::Both);
        assert!(cache.load(&key).is_none());
        cache.store(&key, &r).unwrap();
        assert_eq!(cache.load(&key).unwrap(), r);
    }
}
