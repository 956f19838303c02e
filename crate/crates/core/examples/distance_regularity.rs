//! The Hamming graph is distance regular; the extended Hamming graph is
//! not, and the checker produces a concrete witness pair.
//!
//! Run with: cargo run --example distance_regularity

use exthamming::families::{extended_hamming, hamming, hypercube};
use exthamming::graph::decode_vertex;
use exthamming::metrics::{distance_regularity_check, recheck_witness};

fn main() -> exthamming::Result<()> {
    let q3 = distance_regularity_check(&hypercube(3)?)?;
    println!("Q_3: distance regular = {}, intersection array = {:?}", q3.is_dr, q3.intersection_array);

    let h = distance_regularity_check(&hamming(2, 4)?)?;
    println!("H(2,4): distance regular = {}, intersection array = {:?}", h.is_dr, h.intersection_array);

    for n in [2u32, 3] {
        let eh = extended_hamming(n)?;
        let report = distance_regularity_check(&eh)?;
        println!("EH({n},2^{n}): distance regular = {}", report.is_dr);
        if let Some(w) = &report.witness {
            let m = 1u64 << n;
            let (c1, c2) = recheck_witness(&eh, w)?;
            println!(
                "  witness: from source {:?}, vertices {:?} and {:?} both at distance {} \
                 have {:?}-counts {} vs {} (recheck: {} vs {})",
                decode_vertex(w.source1, n, m)?,
                decode_vertex(w.vertex1, n, m)?,
                decode_vertex(w.vertex2, n, m)?,
                w.r,
                w.kind,
                w.count1,
                w.count2,
                c1,
                c2
            );
        }
    }
    Ok(())
}
