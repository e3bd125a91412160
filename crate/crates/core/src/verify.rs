//! Oracle-equivalence and bound checks, and deterministic range sweeps over
//! them.
//!
//! A check never aborts on a mismatch: it returns a [`CheckReport`] with
//! `passed = false` and a witness describing the first divergence.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{binomial_row, lcm_list, primes_upto, FactoredNatural, Natural};
use crate::error::{Error, Result};
use crate::identities::{
    lcm_binom_row_direct, lcm_binom_row_identity, lcm_range_factored, row_max_vp,
    row_max_vp_bruteforce, vp_lcm_range, vp_row_lcm_formula, vp_successor_formula,
};
use crate::padic::{vp, vp_binomial_kummer, Valuation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Theorem1,
    Prop1,
    Eq3,
    Eq4,
    Eq5,
    LowerBound,
    ProofChain,
    Hanson,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Theorem1,
        Check::Prop1,
        Check::Eq3,
        Check::Eq4,
        Check::Eq5,
        Check::LowerBound,
        Check::ProofChain,
        Check::Hanson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Prop1 => "prop1",
            Check::Eq3 => "eq3",
            Check::Eq4 => "eq4",
            Check::Eq5 => "eq5",
            Check::LowerBound => "lower-bound",
            Check::ProofChain => "proof-chain",
            Check::Hanson => "hanson",
        }
    }

    /// Smallest input the check accepts.
    pub fn min_input(self) -> u64 {
        match self {
            Check::Theorem1 | Check::Prop1 => 0,
            _ => 1,
        }
    }

    pub fn run(self, input: u64) -> Result<CheckReport> {
        match self {
            Check::Theorem1 => Ok(check_theorem1(input)),
            Check::Prop1 => Ok(check_prop1(input)),
            Check::Eq3 => check_eq3(input),
            Check::Eq4 => check_eq4(input),
            Check::Eq5 => check_eq5(input),
            Check::LowerBound => check_lower_bound(input),
            Check::ProofChain => check_proof_chain(input),
            Check::Hanson => check_hanson(input),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-");
        Check::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One side of a check: an exact value or a factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Value(Natural),
    Factored(FactoredNatural),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Value(v) => fmt::Display::fmt(v, f),
            Quantity::Factored(x) => fmt::Display::fmt(x, f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_name: Check,
    pub input: u64,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub passed: bool,
    /// Present exactly when `passed` is false.
    pub witness: Option<String>,
}

impl CheckReport {
    fn new(check: Check, input: u64, lhs: Quantity, rhs: Quantity, witness: Option<String>) -> Self {
        CheckReport {
            check_name: check,
            input,
            lhs,
            rhs,
            passed: witness.is_none(),
            witness,
        }
    }
}

/// Outcome of a sweep. Everything except `elapsed_secs` is independent of
/// the worker count.
#[derive(Clone, Debug, Serialize)]
pub struct RangeSummary {
    pub check_name: Check,
    pub from: u64,
    pub to: u64,
    pub total: u64,
    pub failures: u64,
    pub first_failure: Option<u64>,
    /// Every failing input, ascending.
    pub failing_inputs: Vec<u64>,
    pub elapsed_secs: f64,
}

impl RangeSummary {
    /// Equality on everything but wall-clock time.
    pub fn same_outcome(&self, other: &RangeSummary) -> bool {
        self.check_name == other.check_name
            && self.from == other.from
            && self.to == other.to
            && self.total == other.total
            && self.failures == other.failures
            && self.first_failure == other.first_failure
            && self.failing_inputs == other.failing_inputs
    }
}

fn factored_witness(a: &FactoredNatural, b: &FactoredNatural) -> Option<String> {
    a.first_difference(b)
        .map(|(p, x, y)| format!("p = {p}: exponent {x} vs {y}"))
}

/// Row lcm via the closed form against the big-integer fold over the row.
pub fn check_theorem1(k: u64) -> CheckReport {
    let direct = lcm_binom_row_direct(k);
    let identity = match lcm_binom_row_identity(k) {
        Ok(f) => f,
        Err(e) => {
            return CheckReport::new(
                Check::Theorem1,
                k,
                Quantity::Factored(FactoredNatural::new()),
                Quantity::Value(direct),
                Some(e.to_string()),
            )
        }
    };
    let value = identity.value();
    let witness = (value != direct).then(|| {
        match FactoredNatural::from_smooth(&direct, k.saturating_add(1)) {
            Ok(df) => factored_witness(&identity, &df)
                .unwrap_or_else(|| format!("values differ: {value} vs {direct}")),
            Err(_) => format!("values differ: {value} vs {direct}"),
        }
    });
    CheckReport::new(Check::Theorem1, k, Quantity::Value(value), Quantity::Value(direct), witness)
}

fn check_primes(k: u64) -> Vec<u64> {
    primes_upto(k.saturating_add(1).max(2))
}

/// Closed-form row maximum against a scan of the row, plus attainment at
/// `l = p^N - 1`, for every prime up to `k + 1`.
pub fn check_prop1(k: u64) -> CheckReport {
    let mut closed = BTreeMap::new();
    let mut brute = BTreeMap::new();
    let mut witness = None;
    for p in check_primes(k) {
        let r = row_max_vp(k, p).expect("prime base");
        let b = row_max_vp_bruteforce(k, p).expect("prime base");
        closed.insert(p, r.max_valuation.get());
        brute.insert(p, b.get());
        if witness.is_some() {
            continue;
        }
        if r.max_valuation != b {
            witness = Some(format!(
                "p = {p}: closed form {} vs row scan {b}",
                r.max_valuation
            ));
        } else if let Some(l) = r.attained_at {
            let at = vp_binomial_kummer(k, l, p).expect("witness index within row");
            if at != r.max_valuation {
                witness = Some(format!(
                    "p = {p}: v_p(C({k},{l})) = {at} but row maximum is {}",
                    r.max_valuation
                ));
            }
        }
    }
    CheckReport::new(
        Check::Prop1,
        k,
        Quantity::Factored(FactoredNatural::from_prime_map(closed)),
        Quantity::Factored(FactoredNatural::from_prime_map(brute)),
        witness,
    )
}

/// `{p: ⌊log_p n⌋}` against the factorization of the folded `lcm(1..n)`.
/// Smooth factorization also confirms that primes above `n` do not divide it.
pub fn check_eq3(n: u64) -> Result<CheckReport> {
    let formula = lcm_range_factored(n)?;
    let xs: Vec<Natural> = (1..=n).map(Natural::from).collect();
    let folded = lcm_list(&xs)?;
    let (rhs, witness) = match FactoredNatural::from_smooth(&folded, n) {
        Ok(direct) => {
            let w = factored_witness(&formula, &direct);
            (Quantity::Factored(direct), w)
        }
        Err(e) => (Quantity::Value(folded), Some(e.to_string())),
    };
    Ok(CheckReport::new(Check::Eq3, n, Quantity::Factored(formula), rhs, witness))
}

/// `v_p(k+1)` from the digits of `k` against direct division, for every
/// prime up to `k + 1`.
pub fn check_eq4(k: u64) -> Result<CheckReport> {
    if k == 0 {
        return Err(Error::ZeroValue);
    }
    let mut formula = BTreeMap::new();
    let mut direct = BTreeMap::new();
    for p in check_primes(k) {
        formula.insert(p, vp_successor_formula(k, p)?.get());
        direct.insert(p, vp(k + 1, p)?.get());
    }
    let lhs = FactoredNatural::from_prime_map(formula);
    let rhs = FactoredNatural::from_prime_map(direct);
    let witness = factored_witness(&lhs, &rhs);
    Ok(CheckReport::new(Check::Eq4, k, Quantity::Factored(lhs), Quantity::Factored(rhs), witness))
}

/// The row-lcm valuation formula against the difference of the range-lcm and
/// successor valuations, and against the row maximum.
pub fn check_eq5(k: u64) -> Result<CheckReport> {
    if k == 0 {
        return Err(Error::ZeroValue);
    }
    let mut formula = BTreeMap::new();
    let mut difference = BTreeMap::new();
    let mut witness = None;
    for p in check_primes(k) {
        let f = vp_row_lcm_formula(k, p)?;
        let top = vp_lcm_range(k + 1, p)?;
        let bottom = vp_successor_formula(k, p)?;
        let row_max = row_max_vp(k, p)?.max_valuation;
        formula.insert(p, f.get());
        let diff = top.checked_sub(bottom);
        difference.insert(p, diff.map_or(0, Valuation::get));
        if witness.is_none() {
            if diff != Some(f) {
                witness = Some(format!("p = {p}: formula {f} vs {top} - {bottom}"));
            } else if row_max != f {
                witness = Some(format!("p = {p}: formula {f} vs row maximum {row_max}"));
            }
        }
    }
    Ok(CheckReport::new(
        Check::Eq5,
        k,
        Quantity::Factored(FactoredNatural::from_prime_map(formula)),
        Quantity::Factored(FactoredNatural::from_prime_map(difference)),
        witness,
    ))
}

/// `lcm(1..n) >= 2^(n-1)`, exactly.
pub fn check_lower_bound(n: u64) -> Result<CheckReport> {
    let lcm = lcm_range_factored(n)?;
    let lhs = lcm.value();
    let rhs = Natural::pow(2, n - 1);
    let witness = (lhs < rhs).then(|| format!("{lhs} < 2^{}", n - 1));
    Ok(CheckReport::new(Check::LowerBound, n, Quantity::Value(lhs), Quantity::Value(rhs), witness))
}

/// Each link of
/// `lcm(1..n) = n * lcm(row n-1) >= n * max_i C(n-1, i) >= Σ_i C(n-1, i) = 2^(n-1)`.
/// The report's sides are `lcm(1..n)` and `2^(n-1)`; the witness names the
/// first broken link.
pub fn check_proof_chain(n: u64) -> Result<CheckReport> {
    let lcm = lcm_range_factored(n)?.value();
    let k = n - 1;
    let row = binomial_row(k);
    let row_lcm = lcm_binom_row_direct(k);
    let scaled_lcm = &row_lcm * n;
    let max = row.iter().max().expect("row is non-empty");
    let scaled_max = max * n;
    let sum: Natural = row.iter().cloned().sum();
    let power = Natural::pow(2, k);

    let witness = if lcm != scaled_lcm {
        Some(format!("(a) lcm(1..{n}) = {lcm} but {n} * lcm(row {k}) = {scaled_lcm}"))
    } else if sum != power {
        Some(format!("(b) row {k} sums to {sum}, not 2^{k}"))
    } else if scaled_max < sum {
        Some(format!("(b) {n} * max C({k}, i) = {scaled_max} < 2^{k}"))
    } else if lcm < scaled_max {
        Some(format!("(c) lcm(1..{n}) = {lcm} < {n} * max C({k}, i) = {scaled_max}"))
    } else {
        None
    };
    Ok(CheckReport::new(Check::ProofChain, n, Quantity::Value(lcm), Quantity::Value(power), witness))
}

/// `lcm(1..n) <= 3^n`, exactly.
pub fn check_hanson(n: u64) -> Result<CheckReport> {
    let lhs = lcm_range_factored(n)?.value();
    let rhs = Natural::pow(3, n);
    let witness = (lhs > rhs).then(|| format!("{lhs} > 3^{n}"));
    Ok(CheckReport::new(Check::Hanson, n, Quantity::Value(lhs), Quantity::Value(rhs), witness))
}

/// `ln lcm(1..n) / n`, summed from the factorization.
pub fn psi_ratio(n: u64) -> Result<f64> {
    Ok(lcm_range_factored(n)?.ln() / n as f64)
}

/// Runs `check` on every input in `[from, to]` with `workers` threads
/// (0 is treated as 1).
pub fn sweep(check: Check, from: u64, to: u64, workers: usize) -> Result<RangeSummary> {
    if from > to {
        return Err(Error::InvalidRange { from, to });
    }
    if from < check.min_input() {
        return Err(Error::ZeroValue);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let start = Instant::now();
    let outcomes: Vec<(u64, bool)> = pool.install(|| {
        (from..=to)
            .into_par_iter()
            .map(|x| check.run(x).map(|r| (x, r.passed)))
            .collect::<Result<Vec<_>>>()
    })?;
    let elapsed_secs = start.elapsed().as_secs_f64();
    let mut failing_inputs: Vec<u64> = outcomes
        .into_iter()
        .filter_map(|(x, ok)| (!ok).then_some(x))
        .collect();
    failing_inputs.sort_unstable();
    Ok(RangeSummary {
        check_name: check,
        from,
        to,
        total: to - from + 1,
        failures: failing_inputs.len() as u64,
        first_failure: failing_inputs.first().copied(),
        failing_inputs,
        elapsed_secs,
    })
}

/// [`sweep`] with the check named by string.
pub fn verify_range(check: &str, from: u64, to: u64, workers: usize) -> Result<RangeSummary> {
    sweep(check.parse()?, from, to, workers)
}
