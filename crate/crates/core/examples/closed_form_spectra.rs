//! Print the closed-form spectra of all four families at desk scale.
//!
//! Run with: cargo run --example closed_form_spectra

use exthamming::spectra::{
    aggregate_eh, spectrum_extended_hamming_fine, spectrum_folded_hypercube, spectrum_hamming,
    spectrum_hypercube, Spectrum,
};

fn show(name: &str, s: &Spectrum) {
    let entries: Vec<String> = s
        .entries()
        .iter()
        .map(|(ev, m)| format!("{ev}^{m}"))
        .collect();
    println!("{name:12} {{{}}}  (|V| = {})", entries.join(", "), s.total_multiplicity());
}

fn main() -> exthamming::Result<()> {
    for n in 1..=4 {
        show(&format!("Q_{n}"), &spectrum_hypercube(n)?);
    }
    for n in 2..=4 {
        show(&format!("FQ_{n}"), &spectrum_folded_hypercube(n)?);
    }
    for n in 2..=3 {
        show(&format!("H({n},2^{n})"), &spectrum_hamming(n)?);
    }
    for n in 2..=3 {
        let fine = spectrum_extended_hamming_fine(n)?;
        show(&format!("EH({n},2^{n})"), &aggregate_eh(&fine)?);
        println!("  fine (i,t) table:");
        for row in &fine.rows {
            println!("    i={} t={}  theta={:>4}  m={}", row.i, row.t, row.theta, row.multiplicity);
        }
    }
    Ok(())
}
