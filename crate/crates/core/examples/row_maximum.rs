//! Largest p-adic valuation along a row of Pascal's triangle, read off the
//! base-p digits of k, next to a scan of the whole row.
//!
//!     cargo run --example row_maximum -- 2

use lcm_binom::identities::{row_max_vp, row_max_vp_bruteforce};
use lcm_binom::padic::{expand, first_non_max_digit};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(2);

    println!("{:>5} {:>14} {:>3} {:>4} {:>6} {:>5} {:>7}", "k", "digits", "N", "i0", "max", "scan", "at l");
    for k in (1..=40).chain([63, 64, 100, 255, 1000]) {
        let e = expand(k, p)?;
        let digits: String = e.digits().iter().rev().map(|d| d.to_string()).collect();
        let i0 = first_non_max_digit(&e)?.map_or("-".to_string(), |i| i.to_string());
        let r = row_max_vp(k, p)?;
        let scan = row_max_vp_bruteforce(k, p)?;
        assert_eq!(r.max_valuation, scan);
        println!(
            "{k:>5} {digits:>14} {:>3} {i0:>4} {:>6} {scan:>5} {:>7}",
            e.top_index().unwrap_or(0),
            r.max_valuation,
            r.attained_at.unwrap_or(0)
        );
    }
    Ok(())
}
