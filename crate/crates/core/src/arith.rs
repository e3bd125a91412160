//! Exact arithmetic: arbitrary-precision naturals, gcd/lcm, binomial
//! coefficients, prime sieving, and the prime-exponent representation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision non-negative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `base^exp`.
    pub fn pow(base: u64, exp: u64) -> Self {
        let mut acc = BigUint::one();
        let mut sq = BigUint::from(base);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Natural(acc)
    }

    /// `self / divisor` when the division is exact, `None` otherwise
    /// (including division by zero).
    pub fn checked_div_exact(&self, divisor: &Natural) -> Option<Natural> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(Natural(q))
    }

    /// Remainder and quotient by a machine word. Panics on a zero divisor.
    pub(crate) fn div_rem_u64(&self, d: u64) -> (Natural, u64) {
        let (q, r) = self.0.div_rem(&BigUint::from(d));
        (Natural(q), r.to_u64().expect("remainder below a u64 divisor"))
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Number of significant bits (0 for zero).
    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn trailing_zeros(&self) -> Option<u64> {
        self.0.trailing_zeros()
    }

    /// Natural logarithm, accurate to double precision for any size.
    pub fn ln(&self) -> f64 {
        let bits = self.bits();
        if bits <= 1000 {
            return self.0.to_f64().unwrap_or(f64::INFINITY).ln();
        }
        let shift = bits - 64;
        let top = (&self.0 >> shift).to_f64().expect("64-bit mantissa");
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }
}

impl From<u64> for Natural {
    fn from(v: u64) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Natural {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        BigUint::from_str(s).map(Natural)
    }
}

impl Add for Natural {
    type Output = Natural;
    fn add(self, rhs: Natural) -> Natural {
        Natural(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Natural> for &'a Natural {
    type Output = Natural;
    fn add(self, rhs: &'a Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl Mul for Natural {
    type Output = Natural;
    fn mul(self, rhs: Natural) -> Natural {
        Natural(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Natural> for &'a Natural {
    type Output = Natural;
    fn mul(self, rhs: &'a Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for &Natural {
    type Output = Natural;
    fn mul(self, rhs: u64) -> Natural {
        Natural(&self.0 * rhs)
    }
}

impl Mul<u64> for Natural {
    type Output = Natural;
    fn mul(self, rhs: u64) -> Natural {
        Natural(self.0 * rhs)
    }
}

impl std::iter::Sum for Natural {
    fn sum<I: Iterator<Item = Natural>>(iter: I) -> Natural {
        iter.fold(Natural::zero(), |a, b| a + b)
    }
}

// Decimal strings on the wire: many consumers have no native bignum type.
impl Serialize for Natural {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_str_radix(10))
    }
}

impl<'de> Deserialize<'de> for Natural {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    Natural(a.0.gcd(&b.0))
}

pub fn lcm_pair(a: &Natural, b: &Natural) -> Result<Natural> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let g = a.0.gcd(&b.0);
    Ok(Natural(&a.0 * (&b.0 / g)))
}

/// Left fold of [`lcm_pair`]; the empty list gives 1.
pub fn lcm_list<'a, I>(xs: I) -> Result<Natural>
where
    I: IntoIterator<Item = &'a Natural>,
{
    let mut acc = BigUint::one();
    for x in xs {
        if x.is_zero() {
            return Err(Error::ZeroOperand);
        }
        if acc.is_one() {
            acc = x.0.clone();
            continue;
        }
        let g = acc.gcd(&x.0);
        if g != x.0 {
            acc *= &x.0 / g;
        }
    }
    Ok(Natural(acc))
}

/// Exact `C(n, k)` by the multiplicative scheme `r <- r * (n-k+i) / i`.
/// Every intermediate division is exact because the running value times
/// `(n-k+i)` equals `i * C(n-k+i, i)`.
pub fn binomial(n: u64, k: u64) -> Result<Natural> {
    if k > n {
        return Err(Error::OutOfRange { n, k });
    }
    let k = k.min(n - k);
    let base = n - k;
    let mut r = BigUint::one();
    for i in 1..=k {
        r *= base + i;
        r /= i;
    }
    Ok(Natural(r))
}

/// The whole row `C(k, 0), ..., C(k, k)` via `C(k, l+1) = C(k, l) * (k-l) / (l+1)`.
pub fn binomial_row(k: u64) -> Vec<Natural> {
    let len = usize::try_from(k).expect("row length fits in memory") + 1;
    let mut row: Vec<Natural> = Vec::with_capacity(len);
    let mut cur = BigUint::one();
    for l in 0..=k {
        if l > k - l {
            let mirror = row[(k - l) as usize].clone();
            row.push(mirror);
            continue;
        }
        row.push(Natural(cur.clone()));
        cur *= k - l;
        cur /= l + 1;
    }
    row
}

/// Sieve of Eratosthenes over odd numbers.
pub fn primes_upto(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = usize::try_from(n).expect("sieve bound fits in memory");
    // index i stands for 2i + 1
    let half = (n - 1) / 2 + 1;
    let mut composite = vec![false; half];
    composite[0] = true;
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= n {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = Vec::with_capacity(if n > 10 { n / (n as f64).ln() as usize * 5 / 4 } else { 4 });
    primes.push(2);
    primes.extend(
        composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| (2 * i + 1) as u64),
    );
    primes
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for every `u64`: trial division by small primes,
/// then strong-pseudoprime tests to the first twelve prime bases, which has
/// no pseudoprimes below 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// A positive integer stored as its prime factorization: ascending primes,
/// each with a strictly positive exponent. Structural equality is value
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredNatural {
    factors: BTreeMap<u64, u64>,
}

impl FactoredNatural {
    /// The empty factorization, i.e. 1.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a factorization from `(prime, exponent)` pairs. Zero exponents
    /// are dropped and a repeated prime multiplies (exponents add).
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut factors = BTreeMap::new();
        for (p, e) in pairs {
            require_prime(p)?;
            if e > 0 {
                *factors.entry(p).or_insert(0) += e;
            }
        }
        Ok(FactoredNatural { factors })
    }

    /// Factorizes a machine word by trial division.
    pub fn from_u64(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroValue);
        }
        let mut factors = BTreeMap::new();
        let mut m = n;
        let tz = m.trailing_zeros() as u64;
        if tz > 0 {
            factors.insert(2, tz);
            m >>= tz;
        }
        let mut d = 3u64;
        while d.saturating_mul(d) <= m {
            if m.is_multiple_of(d) {
                let mut e = 0;
                while m.is_multiple_of(d) {
                    m /= d;
                    e += 1;
                }
                factors.insert(d, e);
            }
            d += 2;
        }
        if m > 1 {
            factors.insert(m, 1);
        }
        Ok(FactoredNatural { factors })
    }

    /// Factorizes `n` over the primes up to `bound`; fails if anything is
    /// left over.
    pub fn from_smooth(n: &Natural, bound: u64) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::ZeroValue);
        }
        let mut factors = BTreeMap::new();
        let mut rest = n.clone();
        if let Some(tz) = rest.trailing_zeros().filter(|&tz| tz > 0 && bound >= 2) {
            factors.insert(2, tz);
            rest = Natural(rest.0 >> tz);
        }
        for p in primes_upto(bound).into_iter().skip(1) {
            if rest.is_one() {
                break;
            }
            let mut e = 0;
            loop {
                let (q, r) = rest.div_rem_u64(p);
                if r != 0 {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                factors.insert(p, e);
            }
        }
        if !rest.is_one() {
            return Err(Error::NotSmooth(n.to_string(), bound));
        }
        Ok(FactoredNatural { factors })
    }

    /// Crate-internal constructor for maps already known to hold primes.
    pub(crate) fn from_prime_map(mut factors: BTreeMap<u64, u64>) -> Self {
        factors.retain(|_, e| *e > 0);
        debug_assert!(factors.keys().all(|&p| is_prime(p)));
        FactoredNatural { factors }
    }

    pub fn exponent(&self, p: u64) -> u64 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    /// `(prime, exponent)` pairs in ascending prime order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn value(&self) -> Natural {
        let mut powers: Vec<BigUint> = self
            .factors
            .iter()
            .map(|(&p, &e)| Natural::pow(p, e).0)
            .collect();
        if powers.is_empty() {
            return Natural::one();
        }
        // balanced product tree
        while powers.len() > 1 {
            powers = powers
                .chunks(2)
                .map(|pair| match pair {
                    [a, b] => a * b,
                    [a] => a.clone(),
                    _ => unreachable!(),
                })
                .collect();
        }
        Natural(powers.pop().expect("non-empty"))
    }

    /// Pointwise maximum of exponents.
    pub fn lcm(&self, other: &FactoredNatural) -> FactoredNatural {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            let slot = factors.entry(p).or_insert(0);
            *slot = (*slot).max(e);
        }
        FactoredNatural { factors }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &FactoredNatural) -> bool {
        self.factors.iter().all(|(&p, &e)| other.exponent(p) >= e)
    }

    /// `ln` of the value, computed from the exponents.
    pub fn ln(&self) -> f64 {
        self.factors
            .iter()
            .map(|(&p, &e)| e as f64 * (p as f64).ln())
            .sum()
    }

    /// First prime (ascending) at which the two exponents differ.
    pub fn first_difference(&self, other: &FactoredNatural) -> Option<(u64, u64, u64)> {
        self.factors
            .keys()
            .chain(other.factors.keys())
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|p| (p, self.exponent(p), other.exponent(p)))
            .find(|(_, a, b)| a != b)
    }
}

impl fmt::Display for FactoredNatural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for FactoredNatural {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|(p, e)| [p, e]))
    }
}

impl<'de> Deserialize<'de> for FactoredNatural {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[u64; 2]>::deserialize(d)?;
        let mut last = None;
        for [p, e] in &pairs {
            if e == &0 || last.is_some_and(|q| q >= *p) {
                return Err(serde::de::Error::custom(
                    "factor pairs must have ascending primes and positive exponents",
                ));
            }
            last = Some(*p);
        }
        FactoredNatural::from_pairs(pairs.into_iter().map(|[p, e]| (p, e)))
            .map_err(serde::de::Error::custom)
    }
}

pub fn factored_value(f: &FactoredNatural) -> Natural {
    f.value()
}

pub fn factored_lcm(a: &FactoredNatural, b: &FactoredNatural) -> FactoredNatural {
    a.lcm(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn fact(pairs: &[(u64, u64)]) -> FactoredNatural {
        FactoredNatural::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&nat(0), &nat(5)), nat(5));
        assert_eq!(gcd(&nat(12), &nat(18)), nat(6));
        assert_eq!(gcd(&nat(7), &nat(7)), nat(7));
        assert_eq!(gcd(&nat(0), &nat(0)), nat(0));
    }

    #[test]
    fn lcm_pair_examples() {
        assert_eq!(lcm_pair(&nat(1), &nat(9)).unwrap(), nat(9));
        assert_eq!(lcm_pair(&nat(4), &nat(6)).unwrap(), nat(12));
        assert_eq!(lcm_pair(&nat(0), &nat(3)), Err(Error::ZeroOperand));
        assert_eq!(lcm_pair(&nat(3), &nat(0)), Err(Error::ZeroOperand));
    }

    #[test]
    fn lcm_list_examples() {
        assert_eq!(lcm_list([]).unwrap(), nat(1));
        let xs: Vec<_> = (1..=6).map(nat).collect();
        assert_eq!(lcm_list(&xs).unwrap(), nat(60));
        let row: Vec<_> = [1, 5, 10, 10, 5, 1].into_iter().map(nat).collect();
        assert_eq!(lcm_list(&row).unwrap(), nat(10));
        let bad = [nat(2), nat(0)];
        assert_eq!(lcm_list(&bad), Err(Error::ZeroOperand));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(12, 0).unwrap(), nat(1));
        assert_eq!(binomial(5, 2).unwrap(), nat(10));
        assert_eq!(binomial(7, 3).unwrap(), nat(35));
        assert_eq!(binomial(3, 4), Err(Error::OutOfRange { n: 3, k: 4 }));
        assert_eq!(binomial(0, 0).unwrap(), nat(1));
    }

    #[test]
    fn pascal_rule_up_to_500() {
        let mut prev = vec![nat(1)];
        for n in 1..=500u64 {
            for k in 0..=n {
                let left = if k == 0 { nat(0) } else { prev[(k - 1) as usize].clone() };
                let right = if k == n { nat(0) } else { prev[k as usize].clone() };
                assert_eq!(binomial(n, k).unwrap(), left + right, "C({n},{k})");
            }
            prev = (0..=n).map(|k| binomial(n, k).unwrap()).collect();
        }
    }

    #[test]
    fn binomial_row_matches_binomial() {
        for k in [0u64, 1, 2, 7, 40, 101] {
            let row = binomial_row(k);
            assert_eq!(row.len() as u64, k + 1);
            for (l, c) in row.iter().enumerate() {
                assert_eq!(c, &binomial(k, l as u64).unwrap());
            }
        }
    }

    #[test]
    fn primes_upto_examples() {
        assert!(primes_upto(0).is_empty());
        assert!(primes_upto(1).is_empty());
        assert_eq!(primes_upto(2), vec![2]);
        assert_eq!(primes_upto(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_upto(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        fn trial(n: u64) -> bool {
            n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
        }
        let sieved = primes_upto(10_000);
        let expected: Vec<u64> = (0..=10_000).filter(|&n| trial(n)).collect();
        assert_eq!(sieved, expected);
        for n in 0..=200 {
            let want: Vec<u64> = (0..=n).filter(|&m| trial(m)).collect();
            assert_eq!(primes_upto(n), want, "n = {n}");
        }
        for n in 0..=10_000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
    }

    #[test]
    fn is_prime_examples() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(!is_prime(91));
        // strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_prime(3_215_031_751));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(u64::MAX));
        assert!(!is_prime(4_294_967_291 * 4_294_967_279));
    }

    #[test]
    fn factored_value_examples() {
        assert_eq!(factored_value(&FactoredNatural::new()), nat(1));
        assert_eq!(factored_value(&fact(&[(2, 2), (3, 1), (5, 1)])), nat(60));
        assert_eq!(factored_value(&fact(&[(2, 3), (3, 2), (5, 1), (7, 1)])), nat(2520));
    }

    #[test]
    fn factored_lcm_examples() {
        assert_eq!(factored_lcm(&FactoredNatural::new(), &fact(&[(3, 2)])), fact(&[(3, 2)]));
        assert_eq!(
            factored_lcm(&fact(&[(2, 1), (3, 1)]), &fact(&[(2, 2)])),
            fact(&[(2, 2), (3, 1)])
        );
        assert_eq!(factored_lcm(&fact(&[(5, 1)]), &fact(&[(5, 1)])), fact(&[(5, 1)]));
    }

    #[test]
    fn factored_invariants_enforced() {
        assert_eq!(FactoredNatural::from_pairs([(4, 1)]), Err(Error::NotPrime(4)));
        let f = fact(&[(3, 0), (2, 1), (2, 2)]);
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![(2, 3)]);
        assert_eq!(FactoredNatural::from_u64(0), Err(Error::ZeroValue));
        assert!(FactoredNatural::from_u64(1).unwrap().is_one());
        assert_eq!(
            FactoredNatural::from_smooth(&nat(22), 7),
            Err(Error::NotSmooth("22".into(), 7))
        );
        assert_eq!(FactoredNatural::from_smooth(&nat(2520), 7).unwrap().to_string(), "2^3 * 3^2 * 5 * 7");
    }

    #[test]
    fn hundred_thousand_digit_values() {
        // 2^340000 has 102,351 decimal digits
        let big = Natural::pow(2, 340_000);
        let digits = big.to_string();
        assert_eq!(digits.len(), 102_351);
        let back: Natural = digits.parse().unwrap();
        assert_eq!(back, big);
        let squared = &big * &big;
        assert_eq!(squared.checked_div_exact(&big), Some(big.clone()));
        assert_eq!((&big + &Natural::one()).checked_div_exact(&big), None);
        assert!((big.ln() - 340_000.0 * std::f64::consts::LN_2).abs() < 1e-6);
    }

    #[test]
    fn serde_shapes() {
        let f = fact(&[(2, 3), (7, 1)]);
        assert_eq!(serde_json::to_string(&f).unwrap(), "[[2,3],[7,1]]");
        assert_eq!(serde_json::to_string(&nat(2520)).unwrap(), "\"2520\"");
        assert!(serde_json::from_str::<FactoredNatural>("[[3,1],[2,1]]").is_err());
        assert!(serde_json::from_str::<FactoredNatural>("[[2,0]]").is_err());
    }

    fn small_factored() -> impl Strategy<Value = FactoredNatural> {
        prop::collection::btree_map(prop::sample::select(primes_upto(60)), 1u64..6, 0..6)
            .prop_map(|m| FactoredNatural::from_pairs(m).unwrap())
    }

    proptest! {
        #[test]
        fn lcm_times_gcd_is_product(a in 1u64..1_000_000_000, b in 1u64..1_000_000_000) {
            let (a, b) = (nat(a), nat(b));
            prop_assert_eq!(&lcm_pair(&a, &b).unwrap() * &gcd(&a, &b), &a * &b);
        }

        #[test]
        fn factored_lcm_matches_value_lcm(f in small_factored(), g in small_factored()) {
            let lhs = factored_value(&factored_lcm(&f, &g));
            let rhs = lcm_pair(&factored_value(&f), &factored_value(&g)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn factor_round_trip(n in 1u64..1_000_000_000_000) {
            let f = FactoredNatural::from_u64(n).unwrap();
            prop_assert!(f.iter().all(|(p, e)| is_prime(p) && e >= 1));
            prop_assert_eq!(f.value(), nat(n));
        }
    }
}
