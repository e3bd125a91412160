//! Timing of the factored fast paths against their big-integer oracles.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::arith::{lcm_list, Natural};
use crate::error::{Error, Result};
use crate::identities::{lcm_binom_row_direct, lcm_binom_row_identity, lcm_range_factored};

/// Sizes above this skip the direct oracle unless told otherwise.
pub const DEFAULT_CUTOFF: u64 = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchSubject {
    /// `lcm{C(k,0..k)}`: closed form vs. fold over the row.
    RowLcm,
    /// `lcm(1..n)`: factored sieve vs. fold over `1..n`.
    RangeLcm,
}

impl BenchSubject {
    pub fn name(self) -> &'static str {
        match self {
            BenchSubject::RowLcm => "row-lcm",
            BenchSubject::RangeLcm => "range-lcm",
        }
    }
}

impl fmt::Display for BenchSubject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchSubject {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "row-lcm" => Ok(BenchSubject::RowLcm),
            "range-lcm" => Ok(BenchSubject::RangeLcm),
            other => Err(format!("unknown bench subject `{other}` (expected row-lcm or range-lcm)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub size: u64,
    /// Mean seconds per call of the factored path.
    pub fast_secs: f64,
    /// Mean seconds per call of the direct oracle; absent above the cutoff.
    pub direct_secs: Option<f64>,
    pub speedup: Option<f64>,
    /// Whether both paths produced the same value; absent above the cutoff.
    pub values_match: Option<bool>,
}

/// Mean wall-clock time of `f`, repeating until about 50ms have elapsed.
pub fn mean_time<T>(mut f: impl FnMut() -> T) -> (Duration, T) {
    const BUDGET: Duration = Duration::from_millis(50);
    let start = Instant::now();
    let mut out = f();
    let mut runs = 1u32;
    while start.elapsed() < BUDGET && runs < 10_000 {
        out = f();
        runs += 1;
    }
    (start.elapsed() / runs, out)
}

fn fast_value(subject: BenchSubject, size: u64) -> Result<crate::FactoredNatural> {
    match subject {
        BenchSubject::RowLcm => lcm_binom_row_identity(size),
        BenchSubject::RangeLcm => lcm_range_factored(size),
    }
}

fn direct_value(subject: BenchSubject, size: u64) -> Result<Natural> {
    match subject {
        BenchSubject::RowLcm => Ok(lcm_binom_row_direct(size)),
        BenchSubject::RangeLcm => {
            let xs: Vec<Natural> = (1..=size).map(Natural::from).collect();
            lcm_list(&xs)
        }
    }
}

pub fn bench(subject: BenchSubject, sizes: &[u64], cutoff: u64) -> Result<Vec<BenchRow>> {
    if sizes.contains(&0) {
        return Err(Error::ZeroValue);
    }
    sizes
        .iter()
        .map(|&size| {
            let (fast, factored) = mean_time(|| fast_value(subject, size));
            let factored = factored?;
            let mut row = BenchRow {
                size,
                fast_secs: fast.as_secs_f64(),
                direct_secs: None,
                speedup: None,
                values_match: None,
            };
            if size <= cutoff {
                let (direct, value) = mean_time(|| direct_value(subject, size));
                let value = value?;
                row.direct_secs = Some(direct.as_secs_f64());
                row.speedup = Some(direct.as_secs_f64() / fast.as_secs_f64().max(1e-12));
                row.values_match = Some(factored.value() == value);
            }
            Ok(row)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes_time_both_paths() {
        for subject in [BenchSubject::RowLcm, BenchSubject::RangeLcm] {
            let rows = bench(subject, &[100], DEFAULT_CUTOFF).unwrap();
            assert_eq!(rows.len(), 1);
            assert_eq!(rows[0].values_match, Some(true));
            assert!(rows[0].direct_secs.is_some() && rows[0].speedup.is_some());
        }
    }

    #[test]
    fn cutoff_skips_direct_path() {
        let rows = bench(BenchSubject::RowLcm, &[100_000], DEFAULT_CUTOFF).unwrap();
        assert_eq!(rows[0].direct_secs, None);
        assert_eq!(rows[0].values_match, None);
        let rows = bench(BenchSubject::RangeLcm, &[20, 30], 25).unwrap();
        assert!(rows[0].direct_secs.is_some());
        assert!(rows[1].direct_secs.is_none());
    }

    #[test]
    fn zero_size_rejected() {
        assert!(bench(BenchSubject::RowLcm, &[5, 0], DEFAULT_CUTOFF).is_err());
    }

    #[test]
    fn subject_names() {
        assert_eq!("row-lcm".parse::<BenchSubject>().unwrap(), BenchSubject::RowLcm);
        assert_eq!("range-lcm".parse::<BenchSubject>().unwrap(), BenchSubject::RangeLcm);
        assert!("lcm".parse::<BenchSubject>().is_err());
    }
}
