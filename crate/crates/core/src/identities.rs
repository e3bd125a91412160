//! Closed forms for the lcm of a binomial row.
//!
//! For a prime `p` and `k = Σ c_i p^i` with leading index `N`:
//!
//! ```text
//! max_l v_p(C(k, l)) = v_p(C(k, p^N - 1)) = 0                          if k = p^(N+1) - 1
//!                                          = N - min{i | c_i != p - 1}  otherwise
//! v_p(lcm(1..k+1))  = N + 1 if k = p^(N+1) - 1, else N
//! v_p(k + 1)        = N + 1 if k = p^(N+1) - 1, else min{i | c_i != p - 1}
//! ```
//!
//! Subtracting the last two lines reproduces the first, so
//! `lcm{C(k,0), ..., C(k,k)} = lcm(1..k+1) / (k+1)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{binomial_row, lcm_list, primes_upto, require_prime, FactoredNatural, Natural};
use crate::error::{Error, Result};
use crate::padic::{expand, first_non_max_digit, vp_binomial_kummer, Valuation};

/// Largest `p`-adic valuation across row `k` and the index where it is attained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RowMaxResult {
    pub k: u64,
    pub p: u64,
    pub max_valuation: Valuation,
    /// `p^N - 1`; absent for `k = 0`.
    pub attained_at: Option<u64>,
}

fn pow_checked(p: u64, e: usize) -> u64 {
    p.checked_pow(u32::try_from(e).expect("digit index fits u32"))
        .expect("p^N <= k fits u64")
}

pub fn row_max_vp(k: u64, p: u64) -> Result<RowMaxResult> {
    let e = expand(k, p)?;
    let Some(n_top) = e.top_index() else {
        return Ok(RowMaxResult {
            k,
            p,
            max_valuation: Valuation(0),
            attained_at: None,
        });
    };
    let max_valuation = match first_non_max_digit(&e)? {
        None => 0,
        Some(i0) => (n_top - i0) as u64,
    };
    Ok(RowMaxResult {
        k,
        p,
        max_valuation: Valuation(max_valuation),
        attained_at: Some(pow_checked(p, n_top) - 1),
    })
}

/// `max_{0<=l<=k} v_p(C(k, l))` by scanning the row with Kummer's borrow count.
pub fn row_max_vp_bruteforce(k: u64, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    let mut best = Valuation(0);
    // the row is symmetric
    for l in 0..=k / 2 {
        best = best.max(vp_binomial_kummer(k, l, p)?);
    }
    Ok(best)
}

/// Largest `e` with `p^e <= n`, which is `v_p(lcm(1..n))`. Uses exact
/// multiplication, not logarithms.
pub fn vp_lcm_range(n: u64, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::ZeroValue);
    }
    let mut e = 0;
    let mut power = p;
    while power <= n {
        e += 1;
        match power.checked_mul(p) {
            Some(next) => power = next,
            None => break,
        }
    }
    Ok(Valuation(e))
}

/// `v_p(k + 1)` read off the digits of `k`: `N + 1` when every digit is
/// `p - 1`, otherwise the index of the first digit that is not.
pub fn vp_successor_formula(k: u64, p: u64) -> Result<Valuation> {
    let e = expand(k, p)?;
    let n_top = e.top_index().ok_or(Error::ZeroValue)?;
    Ok(Valuation(match first_non_max_digit(&e)? {
        None => n_top as u64 + 1,
        Some(i0) => i0 as u64,
    }))
}

/// `v_p(lcm(1..k+1) / (k+1))` from the digits of `k`: 0 when every digit is
/// `p - 1`, otherwise `N - i_0`.
pub fn vp_row_lcm_formula(k: u64, p: u64) -> Result<Valuation> {
    let e = expand(k, p)?;
    let n_top = e.top_index().ok_or(Error::ZeroValue)?;
    Ok(Valuation(match first_non_max_digit(&e)? {
        None => 0,
        Some(i0) => (n_top - i0) as u64,
    }))
}

/// `lcm(1..n)` as `{p: ⌊log_p n⌋}` over the primes up to `n`.
pub fn lcm_range_factored(n: u64) -> Result<FactoredNatural> {
    if n == 0 {
        return Err(Error::ZeroValue);
    }
    let mut factors = BTreeMap::new();
    for p in primes_upto(n) {
        factors.insert(p, vp_lcm_range(n, p)?.get());
    }
    Ok(FactoredNatural::from_prime_map(factors))
}

/// `lcm{C(k,0), ..., C(k,k)}` as `lcm(1..k+1) / (k+1)`, computed in exponent
/// space.
pub fn lcm_binom_row_identity(k: u64) -> Result<FactoredNatural> {
    if k == 0 {
        return Ok(FactoredNatural::new());
    }
    let n = k.checked_add(1).ok_or(Error::OutOfRange { n: u64::MAX, k })?;
    let successor = FactoredNatural::from_u64(n)?;
    let mut factors = BTreeMap::new();
    for p in primes_upto(n) {
        let top = vp_lcm_range(n, p)?.get();
        let bottom = successor.exponent(p);
        let e = top.checked_sub(bottom).ok_or_else(|| {
            Error::InternalInvariant(format!(
                "negative exponent at k = {k}, p = {p}: v_p(lcm(1..k+1)) = {top} < v_p(k+1) = {bottom}"
            ))
        })?;
        factors.insert(p, e);
    }
    Ok(FactoredNatural::from_prime_map(factors))
}

/// The row lcm by folding big-integer lcm over the literal row.
pub fn lcm_binom_row_direct(k: u64) -> Natural {
    let row = binomial_row(k);
    let half = row.len().div_ceil(2);
    lcm_list(&row[..half]).expect("binomial coefficients are positive")
}
