//! Size limits for every enumeration in the crate.
//!
//! All limits live in [`Caps`]. The defaults can be overridden from the
//! `COXSHUFFLE_CAPS` environment variable (`key=value` pairs separated by
//! commas, e.g. `COXSHUFFLE_CAPS=a=5,budget=200000`) or field by field by the
//! CLI. The group-order ceiling is a hard limit: the multiplication table is
//! stored as `u16` entries and its size grows with `|W|^2`.

use crate::error::{Error, Result};

pub const CAPS_ENV: &str = "COXSHUFFLE_CAPS";

/// Largest group the crate will ever enumerate, whatever the caps say.
pub const HARD_MAX_ORDER: usize = 5040;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest rank for `A_n` (so `S_{n+1}`).
    pub max_rank_a: usize,
    pub max_rank_b: usize,
    pub min_rank_d: usize,
    pub max_rank_d: usize,
    pub min_dihedral: usize,
    pub max_dihedral: usize,
    /// Largest field size for polynomial enumeration.
    pub max_q: u32,
    pub max_degree: usize,
    /// Largest `|W|` for which a transition matrix is built.
    pub max_matrix_order: usize,
    pub max_necklace_s: u32,
    pub max_necklace_m: usize,
    /// Upper bound on the number of objects any single enumeration visits.
    pub enumeration_budget: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_rank_a: 6,
            max_rank_b: 5,
            min_rank_d: 4,
            max_rank_d: 5,
            min_dihedral: 3,
            max_dihedral: 12,
            max_q: 13,
            max_degree: 12,
            max_matrix_order: HARD_MAX_ORDER,
            max_necklace_s: 6,
            max_necklace_m: 6,
            enumeration_budget: 5_000_000,
        }
    }
}

impl Caps {
    /// Defaults with any overrides found in `COXSHUFFLE_CAPS` applied.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPS_ENV) {
            Ok(spec) => Caps::default().with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }

    /// Applies `key=value` overrides. Unknown keys are rejected.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for pair in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("cap override {pair:?} is not key=value")))?;
            let parsed: u128 = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("cap {key} has non-numeric value {value:?}")))?;
            let small = || usize::try_from(parsed).map_err(|_| Error::InvalidParameter(format!("cap {key} too large")));
            match key.trim() {
                "a" => self.max_rank_a = small()?,
                "b" => self.max_rank_b = small()?,
                "d" => self.max_rank_d = small()?,
                "p" => self.max_dihedral = small()?,
                "q" => self.max_q = u32::try_from(parsed).map_err(|_| Error::InvalidParameter("cap q too large".into()))?,
                "degree" => self.max_degree = small()?,
                "order" => self.max_matrix_order = small()?.min(HARD_MAX_ORDER),
                "s" => self.max_necklace_s = u32::try_from(parsed).map_err(|_| Error::InvalidParameter("cap s too large".into()))?,
                "m" => self.max_necklace_m = small()?,
                "budget" => self.enumeration_budget = parsed,
                other => return Err(Error::InvalidParameter(format!("unknown cap {other:?}"))),
            }
        }
        Ok(self)
    }

    pub(crate) fn check_budget(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.enumeration_budget {
            Err(Error::budget(what, needed, self.enumeration_budget))
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_apply_and_clamp() {
        let caps = Caps::default().with_overrides("a=4, budget=10,order=99999").unwrap();
        assert_eq!(caps.max_rank_a, 4);
        assert_eq!(caps.enumeration_budget, 10);
        assert_eq!(caps.max_matrix_order, HARD_MAX_ORDER);
        assert!(Caps::default().with_overrides("zz=1").is_err());
        assert!(Caps::default().with_overrides("a").is_err());
    }
}
