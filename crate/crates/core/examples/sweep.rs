//! Every check swept over a range on several worker threads. The summaries
//! do not depend on the worker count.
//!
//!     cargo run --release --example sweep -- 300 4

use lcm_binom::verify::{sweep, Check};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let to: u64 = args.next().map(|a| a.parse()).transpose()?.unwrap_or(300);
    let workers: usize = args.next().map(|a| a.parse()).transpose()?.unwrap_or(4);

    for check in Check::ALL {
        let s = sweep(check, check.min_input(), to, workers)?;
        println!(
            "{:<12} [{}, {}] total {:>5}  failures {}  {:.3}s",
            check.name(),
            s.from,
            s.to,
            s.total,
            s.failures,
            s.elapsed_secs
        );
    }
    Ok(())
}
