//! Runs the theorem registry (or the property suite) and prints a table.
//!
//! ```text
//! cargo run --release --example verify -- [FILTER] [--properties] [--threads N]
//! ```

use hyperinfect::verify::{run_properties, run_verification, VerifyOptions};

fn main() {
    let mut opts = VerifyOptions::default();
    let mut properties = false;
    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        match arg.as_str() {
            "--properties" => properties = true,
            "--threads" => opts.threads = args.next().and_then(|t| t.parse().ok()).unwrap_or(1),
            filter => opts.filter = Some(filter.to_string()),
        }
    }
    let report = if properties { run_properties(&opts) } else { run_verification(&opts) }.expect("verification starts");
    print!("{}", report.to_pretty());
    std::process::exit(if report.is_success() { 0 } else { 1 });
}
