//! Construction and exact spectral verification of hypercubes `Q_n`, folded
//! hypercubes `FQ_n`, Hamming graphs `H(n,2^n)`, and extended Hamming graphs
//! `EH(n,2^n)`.
//!
//! Every closed-form spectrum here is checkable against independent
//! brute-force oracles (character sums, closed-walk moments, modular rank)
//! at desk scale; see the `oracle` module and the runnable examples.

pub mod cayley;
pub mod cli;
pub mod error;
pub mod families;
pub mod gf2;
pub mod graph;
pub mod metrics;
pub mod oracle;
pub mod spectra;

pub use error::{Error, Result};
pub use families::{
    extended_hamming, folded_hypercube, hamming, hypercube, GraphFamily, GraphSpec,
};
pub use graph::Graph;
pub use spectra::Spectrum;
