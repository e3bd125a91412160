//! Base-`p` expansions and `p`-adic valuations.
//!
//! The valuation of a binomial coefficient is computed two independent ways:
//! by counting borrows in the schoolbook base-`p` subtraction `n - k`
//! (Kummer), and from factorial valuations `Σ ⌊n/p^i⌋` (Legendre). The carry
//! count of `k + (n - k)` gives a third, equivalent route.

use std::fmt;

use serde::Serialize;

use crate::arith::{require_prime, Natural};
use crate::error::{Error, Result};

/// Exponent of a prime in an integer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Valuation(pub u64);

impl Valuation {
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn checked_sub(self, rhs: Valuation) -> Option<Valuation> {
        self.0.checked_sub(rhs.0).map(Valuation)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl From<u64> for Valuation {
    fn from(v: u64) -> Self {
        Valuation(v)
    }
}

/// Digits `c_0, ..., c_N` of `value` in base `base`, least significant first.
/// The expansion of 0 has no digits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseExpansion {
    value: u64,
    base: u64,
    digits: Vec<u64>,
}

impl BaseExpansion {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Index `N` of the leading (non-zero) digit; `None` for 0.
    pub fn top_index(&self) -> Option<usize> {
        self.digits.len().checked_sub(1)
    }

    /// Whether every digit equals `p - 1`, i.e. `value = p^(N+1) - 1`.
    /// False for 0.
    pub fn is_all_max(&self) -> bool {
        !self.digits.is_empty() && self.digits.iter().all(|&c| c == self.base - 1)
    }

    /// `Σ c_i p^i`, recomputed from the digits.
    pub fn evaluate(&self) -> Natural {
        self.digits
            .iter()
            .rev()
            .fold(Natural::zero(), |acc, &c| acc * self.base + Natural::from(c))
    }
}

pub fn expand(k: u64, p: u64) -> Result<BaseExpansion> {
    require_prime(p)?;
    let mut digits = Vec::new();
    let mut rest = k;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    Ok(BaseExpansion {
        value: k,
        base: p,
        digits,
    })
}

/// `i_0 = min{i | c_i != p - 1}`, or `None` when every digit is `p - 1`.
pub fn first_non_max_digit(e: &BaseExpansion) -> Result<Option<usize>> {
    if e.value == 0 {
        return Err(Error::ZeroValue);
    }
    Ok(e.digits.iter().position(|&c| c != e.base - 1))
}

pub fn vp(n: u64, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::ZeroValue);
    }
    let mut e = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    Ok(Valuation(e))
}

/// Valuation of an arbitrary-precision value.
pub fn vp_natural(n: &Natural, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    if n.is_zero() {
        return Err(Error::ZeroValue);
    }
    if p == 2 {
        return Ok(Valuation(n.trailing_zeros().unwrap_or(0)));
    }
    let mut e = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem_u64(p);
        if r != 0 {
            return Ok(Valuation(e));
        }
        m = q;
        e += 1;
    }
}

/// Number of borrows in the base-`p` subtraction `n - k`, digit 0 first,
/// which equals `v_p(C(n, k))`.
pub fn vp_binomial_kummer(n: u64, k: u64, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    if k > n {
        return Err(Error::OutOfRange { n, k });
    }
    let (mut a, mut b) = (n, k);
    let mut borrow = 0;
    let mut borrows = 0;
    while b > 0 || borrow > 0 {
        let top = a % p;
        let sub = b % p + borrow;
        borrow = u64::from(top < sub);
        borrows += borrow;
        a /= p;
        b /= p;
    }
    Ok(Valuation(borrows))
}

/// Number of carries in the base-`p` addition `a + b`.
pub fn carries_when_adding(a: u64, b: u64, p: u64) -> Result<u64> {
    require_prime(p)?;
    let (mut x, mut y) = (a, b);
    let mut carry = 0;
    let mut carries = 0;
    while x > 0 || y > 0 || carry > 0 {
        // digits are < p, so the sum stays below 2p
        let s = x % p + y % p + carry;
        carry = u64::from(s >= p);
        carries += carry;
        x /= p;
        y /= p;
    }
    Ok(carries)
}

/// Legendre: `v_p(n!) = Σ_{i≥1} ⌊n/p^i⌋`.
pub fn vp_factorial(n: u64, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    let mut total = 0;
    let mut m = n / p;
    while m > 0 {
        total += m;
        m /= p;
    }
    Ok(Valuation(total))
}

/// `v_p(n!) - v_p(k!) - v_p((n-k)!)`.
pub fn vp_binomial_legendre(n: u64, k: u64, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    if k > n {
        return Err(Error::OutOfRange { n, k });
    }
    let top = vp_factorial(n, p)?.0;
    let bottom = vp_factorial(k, p)?.0 + vp_factorial(n - k, p)?.0;
    top.checked_sub(bottom)
        .map(Valuation)
        .ok_or_else(|| Error::InternalInvariant(format!("v_{p}(C({n},{k})) came out negative")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, primes_upto};
    use proptest::prelude::*;

    fn v(e: u64) -> Valuation {
        Valuation(e)
    }

    #[test]
    fn expand_examples() {
        let zero = expand(0, 2).unwrap();
        assert!(zero.digits().is_empty());
        assert_eq!(zero.top_index(), None);
        let five = expand(5, 2).unwrap();
        assert_eq!(five.digits(), &[1, 0, 1]);
        assert_eq!(five.top_index(), Some(2));
        let seven = expand(7, 2).unwrap();
        assert_eq!(seven.digits(), &[1, 1, 1]);
        assert!(seven.is_all_max());
        assert_eq!(expand(5, 4), Err(Error::NotPrime(4)));
        assert_eq!(expand(5, 1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn first_non_max_digit_examples() {
        assert_eq!(first_non_max_digit(&expand(7, 2).unwrap()), Ok(None));
        assert_eq!(first_non_max_digit(&expand(5, 2).unwrap()), Ok(Some(1)));
        assert_eq!(first_non_max_digit(&expand(4, 2).unwrap()), Ok(Some(0)));
        assert_eq!(first_non_max_digit(&expand(0, 3).unwrap()), Err(Error::ZeroValue));
    }

    #[test]
    fn vp_examples() {
        assert_eq!(vp(1, 5), Ok(v(0)));
        assert_eq!(vp(12, 2), Ok(v(2)));
        assert_eq!(vp(6, 2), Ok(v(1)));
        assert_eq!(vp(0, 2), Err(Error::ZeroValue));
        assert_eq!(vp(12, 6), Err(Error::NotPrime(6)));
        assert_eq!(vp_natural(&Natural::from(0), 3), Err(Error::ZeroValue));
        assert_eq!(vp_natural(&Natural::pow(3, 500), 3), Ok(v(500)));
        assert_eq!(vp_natural(&Natural::pow(2, 77), 2), Ok(v(77)));
    }

    #[test]
    fn kummer_examples() {
        for l in 0..=7 {
            assert_eq!(vp_binomial_kummer(7, l, 2), Ok(v(0)), "l = {l}");
        }
        assert_eq!(vp_binomial_kummer(5, 2, 2), Ok(v(1)));
        assert_eq!(vp_binomial_kummer(10, 4, 3), Ok(v(1)));
        assert_eq!(vp_binomial_kummer(3, 4, 2), Err(Error::OutOfRange { n: 3, k: 4 }));
        assert_eq!(vp_binomial_kummer(3, 1, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn carries_examples() {
        assert_eq!(carries_when_adding(0, 9, 3), Ok(0));
        // 10 + 11 in base 2 carries only out of index 1
        assert_eq!(carries_when_adding(2, 3, 2), Ok(1));
        assert_eq!(carries_when_adding(3, 3, 2), Ok(2));
        assert_eq!(carries_when_adding(4, 6, 3), Ok(1));
        assert_eq!(carries_when_adding(u64::MAX, 1, 2), Ok(64));
        assert_eq!(carries_when_adding(1, 1, 10), Err(Error::NotPrime(10)));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(vp_factorial(0, 7), Ok(v(0)));
        assert_eq!(vp_factorial(10, 2), Ok(v(8)));
        assert_eq!(vp_factorial(10, 3), Ok(v(4)));
        assert_eq!(vp_binomial_legendre(9, 0, 2), Ok(v(0)));
        assert_eq!(vp_binomial_legendre(5, 2, 2), Ok(v(1)));
        assert_eq!(vp_binomial_legendre(10, 4, 3), Ok(v(1)));
        assert_eq!(vp_binomial_legendre(2, 3, 2), Err(Error::OutOfRange { n: 2, k: 3 }));
    }

    #[test]
    fn kummer_legendre_carries_agree_exhaustively() {
        for p in primes_upto(50) {
            for n in 0..=300 {
                for k in 0..=n {
                    let kummer = vp_binomial_kummer(n, k, p).unwrap();
                    assert_eq!(kummer, vp_binomial_legendre(n, k, p).unwrap(), "({n},{k},{p})");
                    assert_eq!(kummer.get(), carries_when_adding(k, n - k, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn kummer_matches_direct_valuation() {
        for n in 0..=120 {
            for k in 0..=n {
                let c = binomial(n, k).unwrap();
                for p in primes_upto(50) {
                    assert_eq!(vp_binomial_kummer(n, k, p).unwrap(), vp_natural(&c, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn all_max_iff_successor_is_power() {
        for p in primes_upto(30) {
            for k in 1..=5000u64 {
                let mut q = k + 1;
                while q % p == 0 {
                    q /= p;
                }
                let all_max = first_non_max_digit(&expand(k, p).unwrap()).unwrap().is_none();
                assert_eq!(all_max, q == 1, "k = {k}, p = {p}");
            }
        }
    }

    fn prime_upto_100() -> impl Strategy<Value = u64> {
        prop::sample::select(primes_upto(100))
    }

    proptest! {
        #[test]
        fn expansion_round_trip(k in 0u64..=1_000_000, p in prime_upto_100()) {
            let e = expand(k, p).unwrap();
            prop_assert_eq!(e.evaluate(), Natural::from(k));
            prop_assert!(e.digits().iter().all(|&c| c < p));
            if k > 0 {
                prop_assert_ne!(*e.digits().last().unwrap(), 0);
            }
        }

        #[test]
        fn kummer_equals_legendre_large(n in 0u64..=1_000_000_000, frac in 0.0f64..=1.0, p in prime_upto_100()) {
            let k = ((n as f64) * frac) as u64;
            prop_assert_eq!(vp_binomial_kummer(n, k, p).unwrap(), vp_binomial_legendre(n, k, p).unwrap());
        }
    }
}
