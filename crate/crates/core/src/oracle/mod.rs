//! Bounds for graphs outside the covered families, and the complement
//! conjecture scanner.

mod alpha;
mod bounds;
mod gcc;
mod numeric;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use alpha::independence_number;
pub use bounds::{
    mvr_bounds, CertClass, LowerBound, LowerReason, MvrBounds, UpperBound, UpperSource, Witness,
};
pub use gcc::{gcc_check, gcc_scan, GccStatus, GccVerdict, LineError, ScanReport};
pub use numeric::{check_numeric, numeric_rep_search, NumericRep};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    /// Largest accepted |inner product| for pairs that must be orthogonal.
    pub zero_tolerance: f64,
    /// Smallest accepted |inner product| for pairs that must not be.
    pub nonzero_floor: f64,
    pub rng_seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            restarts: 200,
            max_iterations: 5000,
            zero_tolerance: 1e-7,
            nonzero_floor: 1e-4,
            rng_seed: 0,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.zero_tolerance > 0.0 && self.zero_tolerance < self.nonzero_floor) {
            return Err(Error::arg(format!(
                "zero tolerance {} must be positive and below the nonzero floor {}",
                self.zero_tolerance, self.nonzero_floor
            )));
        }
        Ok(())
    }
}

/// FNV-1a of `text` mixed with `seed`; per-graph seeds stay stable across runs and platforms.
pub(crate) fn seed_for(seed: u64, text: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for b in text.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}
