//! Run all three independent oracles (character sums, walk moments,
//! modular rank) against the closed-form extended Hamming spectrum.
//!
//! Run with: cargo run --release --example oracle_verification

use exthamming::oracle::{verify_family_spectrum, VerifyOptions};
use exthamming::{GraphFamily, GraphSpec};

fn main() -> exthamming::Result<()> {
    for n in [2u32, 3] {
        let spec = GraphSpec::new(GraphFamily::ExtendedHamming, n, None)?;
        let report = verify_family_spectrum(&spec, &VerifyOptions::default())?;
        println!("EH({n},2^{n}): overall {}", if report.overall { "PASS" } else { "FAIL" });
        for check in &report.checks {
            println!("  [{}] {}: {}", if check.pass { "ok" } else { "!!" }, check.name, check.details);
        }
    }
    Ok(())
}
