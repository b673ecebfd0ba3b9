//! Brute-force caps. Every enumeration that is exponential in the group
//! order is guarded by one of these limits; all of them can be overridden
//! from the CLI (`--caps`) or the `VCYC_CAPS` environment variable.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group order for which subgroups are enumerated.
    pub subgroup_order: usize,
    /// Largest group order for which the automorphism group is enumerated.
    pub aut_order: usize,
    /// Largest node count accepted by the exhaustive orientation oracle.
    pub bf_nodes: usize,
    /// Largest finite kernel order used when generating the corpus.
    pub corpus_k_order: usize,
    /// Largest ambient order built by the semidirect embedding.
    pub embed_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subgroup_order: 64,
            aut_order: 16,
            bf_nodes: 20,
            corpus_k_order: 8,
            embed_order: 64,
        }
    }
}

impl Caps {
    pub fn check(&self, what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::CapExceeded { what, limit, actual })
        } else {
            Ok(())
        }
    }

    /// Parse overrides of the form `key=value,key=value`.
    pub fn apply_overrides(&mut self, spec: &str) -> Result<()> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad cap override `{item}`, expected key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad cap value in `{item}`")))?;
            match key.trim() {
                "subgroup_order" => self.subgroup_order = value,
                "aut_order" => self.aut_order = value,
                "bf_nodes" => self.bf_nodes = value,
                "corpus_k_order" => self.corpus_k_order = value,
                "embed_order" => self.embed_order = value,
                other => return Err(Error::Parse(format!("unknown cap `{other}`"))),
            }
        }
        Ok(())
    }

    /// Defaults plus `VCYC_CAPS` from the environment, if set.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Ok(spec) = std::env::var("VCYC_CAPS") {
            caps.apply_overrides(&spec)?;
        }
        Ok(caps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let mut caps = Caps::default();
        caps.apply_overrides("subgroup_order=32, bf_nodes=10").unwrap();
        assert_eq!(caps.subgroup_order, 32);
        assert_eq!(caps.bf_nodes, 10);
        assert_eq!(caps.aut_order, 16);
    }

    #[test]
    fn bad_override_rejected() {
        let mut caps = Caps::default();
        assert!(caps.apply_overrides("nope=3").is_err());
        assert!(caps.apply_overrides("aut_order=x").is_err());
    }
}
