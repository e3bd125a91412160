//! lcm of a binomial row computed as lcm(1..k+1)/(k+1) in exponent space,
//! checked against folding lcm over the row itself.
//!
//!     cargo run --release --example row_lcm -- 12

use lcm_binom::identities::{lcm_binom_row_direct, lcm_binom_row_identity, lcm_range_factored};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let upto: u64 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(12);

    for k in 0..=upto {
        let fast = lcm_binom_row_identity(k)?;
        let direct = lcm_binom_row_direct(k);
        assert_eq!(fast.value(), direct);
        let range = lcm_range_factored(k + 1)?;
        println!(
            "k = {k:>3}: lcm(row) = {direct:<24} = lcm(1..{}) / {} = {} / {}   [{fast}]",
            k + 1,
            k + 1,
            range.value(),
            k + 1
        );
    }

    let big = lcm_binom_row_identity(100_000)?;
    println!(
        "k = 100000: {} distinct primes, ln(value) = {:.1}",
        big.num_primes(),
        big.ln()
    );
    Ok(())
}
