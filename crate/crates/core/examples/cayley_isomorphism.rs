//! Verify, edge by edge, that EH(n,2^n) is the Cayley graph of F_2^{n^2}
//! with the single-block connection set plus the all-blocks-one element.
//!
//! Run with: cargo run --example cayley_isomorphism

use exthamming::cayley::{build_phi_map, cayley_graph, connection_set_eh, verify_isomorphism};
use exthamming::families::extended_hamming;

fn main() -> exthamming::Result<()> {
    for n in [2u32, 3] {
        let s = connection_set_eh(n)?;
        println!("n = {n}: |S| = {} (valency n(2^n - 1) + 1)", s.len());

        let eh = extended_hamming(n)?;
        let cay = cayley_graph(n * n, &s)?;
        let phi = build_phi_map(n)?;
        let report = verify_isomorphism(&eh, &cay, &phi)?;
        println!(
            "  isomorphism: {} ({} edges checked; {})",
            if report.ok { "verified" } else { "FAILED" },
            report.edges_checked,
            report.note
        );
    }
    Ok(())
}
