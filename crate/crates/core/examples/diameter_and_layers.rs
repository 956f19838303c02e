//! BFS distance partitions and exact diameters: the extended Hamming graph
//! keeps the Hamming diameter n, while the folded hypercube halves it.
//!
//! Run with: cargo run --example diameter_and_layers

use exthamming::families::{extended_hamming, folded_hypercube, hypercube};
use exthamming::metrics::{bfs, diameter};

fn main() -> exthamming::Result<()> {
    for n in [2u32, 3, 4] {
        let eh = extended_hamming(n)?;
        let part = bfs(&eh, 0)?;
        println!(
            "EH({n},2^{n}): diameter {} — layer sizes from vertex 0: {:?}",
            diameter(&eh)?,
            part.cell_sizes()
        );
    }
    for n in [3u32, 4, 5] {
        println!(
            "Q_{n} diameter {}, FQ_{n} diameter {}",
            diameter(&hypercube(n)?)?,
            diameter(&folded_hypercube(n)?)?
        );
    }
    Ok(())
}
