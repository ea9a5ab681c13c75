//! Resource bounds for brute-force work.
//!
//! Defaults can be overridden by `NCMOTZKIN_LIMITS`, e.g.
//! `partitions=12,paths=14,order=100`, and then by command line flags.

use ncmotzkin::partitions::DEFAULT_MAX_PARTITION_N;

pub const LIMITS_ENV: &str = "NCMOTZKIN_LIMITS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest partition size for brute-force counts.
    pub partitions: usize,
    /// Largest x-length for exhaustive path enumeration.
    pub paths: usize,
    /// Largest series order.
    pub order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            partitions: DEFAULT_MAX_PARTITION_N,
            paths: 16,
            order: 200,
        }
    }
}

impl Limits {
    pub fn parse_overrides(mut self, text: &str) -> Result<Self, String> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value in {LIMITS_ENV}, got {item:?}"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| format!("bad number for {key}: {value:?}"))?;
            match key.trim() {
                "partitions" => self.partitions = value,
                "paths" => self.paths = value,
                "order" => self.order = value,
                other => return Err(format!("unknown limit {other:?}")),
            }
        }
        Ok(self)
    }

    pub fn check(what: &str, requested: usize, bound: usize) -> Result<(), String> {
        if requested > bound {
            Err(format!("{what} = {requested} exceeds the configured bound {bound}"))
        } else {
            Ok(())
        }
    }
}
