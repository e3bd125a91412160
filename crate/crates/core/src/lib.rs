//! Exact computation and verification of the lcm of a row of binomial
//! coefficients.
//!
//! The central fact is
//!
//! ```text
//! lcm{C(k,0), C(k,1), ..., C(k,k)} = lcm(1, 2, ..., k+1) / (k+1)
//! ```
//!
//! which turns a fold over `k + 1` big integers into a per-prime exponent
//! computation. The crate provides:
//!
//! - [`arith`]: arbitrary-precision naturals, gcd/lcm, binomials, the prime
//!   sieve, and [`FactoredNatural`].
//! - [`padic`]: base-`p` digits and `p`-adic valuations, with Kummer's borrow
//!   count and Legendre's factorial formula as independent routes.
//! - [`identities`]: the row-maximum valuation, the per-prime valuation
//!   formulas, `lcm(1..n)` in factored form, and the fast row-lcm path.
//! - [`verify`]: checks of each identity against brute-force oracles, the
//!   `2^(n-1) <= lcm(1..n) <= 3^n` bounds, and parallel range sweeps.
//! - [`cli`]: the command-line front end used by the `lcm-binom` binary.
//!
//! ```
//! use lcm_binom::{identities, Natural};
//!
//! let fast = identities::lcm_binom_row_identity(7).unwrap();
//! assert_eq!(fast.value(), Natural::from(105));
//! assert_eq!(identities::lcm_binom_row_direct(7), Natural::from(105));
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod identities;
pub mod padic;
pub mod verify;

pub use arith::{FactoredNatural, Natural};
pub use error::{Error, Result};
pub use padic::{BaseExpansion, Valuation};
