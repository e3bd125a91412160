//! Timing of the factored paths against the big-integer folds.
//!
//!     cargo run --release --example fast_path -- 100,1000,5000,100000

use lcm_binom::cli::bench::{bench, BenchSubject, DEFAULT_CUTOFF};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sizes: Vec<u64> = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "100,1000,5000,100000".into())
        .split(',')
        .map(str::parse)
        .collect::<Result<_, _>>()?;

    for subject in [BenchSubject::RowLcm, BenchSubject::RangeLcm] {
        println!("{subject}");
        println!("{:>8} {:>12} {:>12} {:>9}", "size", "factored", "direct", "speedup");
        for row in bench(subject, &sizes, DEFAULT_CUTOFF)? {
            let direct = row.direct_secs.map_or("skipped".into(), |s| format!("{:.6}s", s));
            let speedup = row.speedup.map_or("-".into(), |s| format!("{s:.0}x"));
            assert_ne!(row.values_match, Some(false));
            println!("{:>8} {:>11.6}s {direct:>12} {speedup:>9}", row.size, row.fast_secs);
        }
    }
    Ok(())
}
