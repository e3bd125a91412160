//! Driving the command-line front end in-process and reading its JSON
//! records back.
//!
//!     cargo run --example json_lines

use lcm_binom::cli::{run, OutputRecord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in [
        "vp-binom 5 2 2 --json",
        "digits 2024 3 --json",
        "lcm-binom-row 30 --json",
        "lcm-range 6000 --json",
        "verify eq4 --from 1 --to 500 --json",
    ] {
        let out = run(std::iter::once("lcm-binom").chain(line.split_whitespace()));
        for text in out.stdout.lines() {
            let rec: OutputRecord = serde_json::from_str(text)?;
            let shown = rec.output.to_string();
            let shown = if shown.len() > 70 { format!("{}...", &shown[..70]) } else { shown };
            println!("exit {} {} {:?} -> {shown}", out.status, rec.op, rec.input);
        }
    }
    Ok(())
}
