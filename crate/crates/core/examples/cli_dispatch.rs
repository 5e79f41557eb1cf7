//! Drives the command-line front end in-process.
//!
//!     cargo run --example cli_dispatch

use witnesslab::cli::dispatch;

fn main() {
    for argv in [
        &["witnesslab", "ram", "-1", "-1"][..],
        &["witnesslab", "distinguish", "-1", "-1", "-1", "-3"],
        &["witnesslab", "crux", "--place", "t", "--phi1", "-1,-1,t", "--phi2", "-1,-1,-1"],
        &["witnesslab", "distinguish", "1", "1", "-1", "-1"],
    ] {
        let result = dispatch(argv.iter().copied());
        println!("$ {}", argv.join(" "));
        println!("{}", result.stdout().trim_end());
        if let Some(err) = result.stderr() {
            println!("  stderr: {}", err.trim_end());
        }
        println!("  exit {}", result.exit_code());
    }
}
