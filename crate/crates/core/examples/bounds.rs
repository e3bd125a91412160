//! 2^(n-1) <= lcm(1..n) <= 3^n, the chain behind the lower bound, and the
//! trend of ln lcm(1..n) / n.
//!
//!     cargo run --release --example bounds

use lcm_binom::verify::{check_hanson, check_lower_bound, check_proof_chain, psi_ratio};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [1, 2, 7, 8, 20, 50] {
        let low = check_lower_bound(n)?;
        let high = check_hanson(n)?;
        let chain = check_proof_chain(n)?;
        println!(
            "n = {n:>2}: 2^{} = {} <= lcm = {} <= 3^{n} = {}   chain ok: {}",
            n - 1,
            low.rhs,
            low.lhs,
            high.rhs,
            chain.passed
        );
    }

    println!();
    for n in [10, 100, 1_000, 10_000, 100_000, 1_000_000] {
        println!("ln lcm(1..{n}) / {n} = {:.6}", psi_ratio(n)?);
    }
    Ok(())
}
