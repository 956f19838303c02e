//! Build family instances and write them as edge lists through the library
//! API (the `generate` subcommand does the same from the shell).
//!
//! Run with: cargo run --example write_graph_files

use std::io::Write;

use exthamming::families::extended_hamming;

fn main() -> exthamming::Result<()> {
    let eh2 = extended_hamming(2)?;
    let path = std::env::temp_dir().join("eh_n2.edgelist");
    let mut file = std::io::BufWriter::new(std::fs::File::create(&path)?);
    for (u, v) in eh2.edges() {
        writeln!(file, "{u} {v}")?;
    }
    file.flush()?;
    println!(
        "wrote {} ({} vertices, {} edges)",
        path.display(),
        eh2.vertex_count(),
        eh2.edge_count()
    );
    Ok(())
}
