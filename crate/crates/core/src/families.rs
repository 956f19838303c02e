//! Constructors for the graph families: hypercube `Q_n`, folded hypercube
//! `FQ_n`, Hamming `H(n,m)`, and extended Hamming `EH(n,2^n)`.

use crate::error::{Error, Result};
use crate::graph::{self, Family, Graph, MAX_VERTICES};

/// The four families reachable from the CLI, with their short tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum GraphFamily {
    #[serde(rename = "q")]
    Hypercube,
    #[serde(rename = "fq")]
    FoldedHypercube,
    #[serde(rename = "h")]
    Hamming,
    #[serde(rename = "eh")]
    ExtendedHamming,
}

impl GraphFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            GraphFamily::Hypercube => "q",
            GraphFamily::FoldedHypercube => "fq",
            GraphFamily::Hamming => "h",
            GraphFamily::ExtendedHamming => "eh",
        }
    }
}

/// A family tag plus parameters; the single source of truth for constructors.
///
/// `m` is forced to 2 for Q/FQ and to `2^n` for EH; for Hamming it defaults
/// to `2^n` (the alphabet with closed-form spectra here) when not given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GraphSpec {
    pub family: GraphFamily,
    pub n: u32,
    pub m: u64,
}

impl GraphSpec {
    pub fn new(family: GraphFamily, n: u32, m: Option<u64>) -> Result<Self> {
        let spec = match family {
            GraphFamily::Hypercube | GraphFamily::FoldedHypercube => {
                if let Some(m) = m {
                    if m != 2 {
                        return Err(Error::InvalidParameter(format!(
                            "family {} has fixed alphabet m = 2, got {m}",
                            family.tag()
                        )));
                    }
                }
                GraphSpec { family, n, m: 2 }
            }
            GraphFamily::Hamming => {
                if n == 0 || n > 63 {
                    return Err(Error::InvalidParameter("hamming requires 1 <= n <= 63".into()));
                }
                let m = m.unwrap_or(1u64 << n);
                if m < 2 {
                    return Err(Error::InvalidParameter("hamming requires m >= 2".into()));
                }
                GraphSpec { family, n, m }
            }
            GraphFamily::ExtendedHamming => {
                if n < 2 {
                    return Err(Error::InvalidParameter(
                        "extended hamming requires n >= 2 (the complementary edge of n = 1 \
                         duplicates an existing edge)"
                            .into(),
                    ));
                }
                if n > 5 {
                    return Err(Error::InvalidParameter(
                        "extended hamming guardrail: n <= 5".into(),
                    ));
                }
                let forced = 1u64 << n;
                if let Some(m) = m {
                    if m != forced {
                        return Err(Error::InvalidParameter(format!(
                            "extended hamming has fixed alphabet m = 2^n = {forced}, got {m}"
                        )));
                    }
                }
                GraphSpec { family, n, m: forced }
            }
        };
        Ok(spec)
    }

    /// Build the explicit graph (subject to the size guardrails).
    pub fn build(&self) -> Result<Graph> {
        match self.family {
            GraphFamily::Hypercube => hypercube(self.n),
            GraphFamily::FoldedHypercube => folded_hypercube(self.n),
            GraphFamily::Hamming => hamming(self.n, self.m),
            GraphFamily::ExtendedHamming => extended_hamming(self.n),
        }
    }
}

/// The hypercube `Q_n`: n-bit strings, edges flip one bit.
pub fn hypercube(n: u32) -> Result<Graph> {
    if n == 0 || n > 26 {
        return Err(Error::InvalidParameter("hypercube requires 1 <= n <= 26".into()));
    }
    let size = 1usize << n;
    let g = Graph::build(size, |v| (0..n).map(|i| (v ^ (1 << i)) as u32).collect())?;
    g.with_metadata(Family::Hypercube, Some(n as usize), true)
}

/// The folded hypercube `FQ_n`: `Q_n` plus the complement matching.
pub fn folded_hypercube(n: u32) -> Result<Graph> {
    if !(2..=26).contains(&n) {
        return Err(Error::InvalidParameter(
            "folded hypercube requires 2 <= n <= 26 (at n = 1 the complementary edge \
             coincides with the hypercube edge)"
                .into(),
        ));
    }
    let size = 1usize << n;
    let mask = size - 1;
    let g = Graph::build(size, |v| {
        let mut list: Vec<u32> = (0..n).map(|i| (v ^ (1 << i)) as u32).collect();
        list.push((v ^ mask) as u32);
        list
    })?;
    g.with_metadata(Family::FoldedHypercube, Some(n as usize + 1), true)
}

/// The Hamming graph `H(n,m)`: n-tuples over an m-letter alphabet, adjacent
/// iff they differ in exactly one coordinate.
pub fn hamming(n: u32, m: u64) -> Result<Graph> {
    if n == 0 || m < 2 {
        return Err(Error::InvalidParameter("hamming requires n >= 1, m >= 2".into()));
    }
    let total = (m as u128)
        .checked_pow(n)
        .filter(|&t| t <= MAX_VERTICES as u128)
        .ok_or(Error::TooLarge {
            vertices: (m as u128).checked_pow(n).unwrap_or(u128::MAX),
            limit: MAX_VERTICES,
        })?;
    let size = total as usize;
    // Positional weights m^{n-1-k} for coordinate k (coordinate 0 most significant).
    let mut weight = vec![1u64; n as usize];
    for k in (0..n as usize - 1).rev() {
        weight[k] = weight[k + 1] * m;
    }
    let g = Graph::build(size, |v| {
        let digits = graph::decode_vertex(v, n, m).expect("index in range");
        let mut list = Vec::with_capacity((n as usize) * (m as usize - 1));
        for k in 0..n as usize {
            let base = v as u64 - digits[k] * weight[k];
            for c in 0..m {
                if c != digits[k] {
                    list.push((base + c * weight[k]) as u32);
                }
            }
        }
        list
    })?;
    g.with_metadata(Family::Hamming, Some((n as u64 * (m - 1)) as usize), true)
}

/// Coordinate-wise complement `u -> u^c` with `u_i + u^c_i = 2^n - 1`; under
/// the big-endian encoding this is the index map `v -> (2^n)^n - 1 - v`.
pub fn complement_vertex(v: usize, n: u32) -> Result<usize> {
    if n == 0 || (n as u64) * (n as u64) > 63 {
        return Err(Error::InvalidParameter("complement_vertex requires 1 <= n^2 <= 63".into()));
    }
    let total = 1usize << (n * n);
    if v >= total {
        return Err(Error::OutOfRange {
            what: "vertex index",
            value: v as u64,
            allowed: format!("< 2^(n^2) = {total}"),
        });
    }
    Ok(total - 1 - v)
}

/// The extended Hamming graph `EH(n,2^n)`: `H(n,2^n)` plus the perfect
/// matching joining each tuple to its coordinate-wise complement.
pub fn extended_hamming(n: u32) -> Result<Graph> {
    let spec = GraphSpec::new(GraphFamily::ExtendedHamming, n, None)?;
    let m = spec.m;
    let base = hamming(n, m)?;
    let size = base.vertex_count();
    let g = Graph::build(size, |v| {
        let mut list = base.neighbors(v).to_vec();
        list.push((size - 1 - v) as u32);
        list
    })?;
    let degree = (n as u64 * (m - 1) + 1) as usize;
    g.with_metadata(Family::ExtendedHamming, Some(degree), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, complete_graph};

    #[test]
    fn hypercube_small() {
        let q1 = hypercube(1).unwrap();
        assert!(q1.same_edges(&complete_graph(2).unwrap()));
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert_eq!(q3.regular_degree(), Some(3));
        assert!(hypercube(0).is_err());
        assert!(hypercube(27).is_err());
    }

    #[test]
    fn hypercube_equals_product_power_of_k2() {
        for n in 1..=6u32 {
            let k2 = complete_graph(2).unwrap();
            let mut p = complete_graph(2).unwrap();
            for _ in 1..n {
                p = cartesian_product(&p, &k2).unwrap();
            }
            assert!(p.same_edges(&hypercube(n).unwrap()), "n={n}");
        }
    }

    #[test]
    fn folded_hypercube_small() {
        let fq2 = folded_hypercube(2).unwrap();
        assert!(fq2.same_edges(&complete_graph(4).unwrap()));
        assert!(folded_hypercube(1).is_err());
        let fq3 = folded_hypercube(3).unwrap();
        assert_eq!(fq3.regular_degree(), Some(4));
        // Restricted to hypercube edges it is the hypercube.
        let q3 = hypercube(3).unwrap();
        for (u, v) in q3.edges() {
            assert!(fq3.has_edge(u as usize, v as usize));
        }
        assert_eq!(fq3.edge_count(), q3.edge_count() + 4);
    }

    #[test]
    fn hamming_basics() {
        assert!(hamming(1, 5).unwrap().same_edges(&complete_graph(5).unwrap()));
        let h24 = hamming(2, 4).unwrap();
        assert_eq!(h24.vertex_count(), 16);
        assert_eq!(h24.regular_degree(), Some(6));
        assert_eq!(h24.edge_count(), 48);
    }

    #[test]
    fn hamming_equals_product_power() {
        for (n, m) in [(2u32, 4u64), (3, 4), (2, 8), (4, 2), (3, 3)] {
            let km = complete_graph(m as usize).unwrap();
            let mut p = complete_graph(m as usize).unwrap();
            for _ in 1..n {
                p = cartesian_product(&p, &km).unwrap();
            }
            assert!(p.same_edges(&hamming(n, m).unwrap()), "n={n} m={m}");
        }
    }

    #[test]
    fn complement_vertex_involution_no_fixed_point() {
        for n in 2..=4u32 {
            let total = 1usize << (n * n);
            for v in 0..total.min(1 << 16) {
                let c = complement_vertex(v, n).unwrap();
                assert_ne!(c, v, "fixed point at n={n} v={v}");
                assert_eq!(complement_vertex(c, n).unwrap(), v);
            }
        }
        assert_eq!(complement_vertex(0, 2).unwrap(), 15);
        assert!(complement_vertex(16, 2).is_err());
    }

    #[test]
    fn extended_hamming_shape() {
        let eh2 = extended_hamming(2).unwrap();
        assert_eq!(eh2.vertex_count(), 16);
        assert_eq!(eh2.regular_degree(), Some(7));
        assert_eq!(eh2.edge_count(), 56);
        let eh3 = extended_hamming(3).unwrap();
        assert_eq!(eh3.vertex_count(), 512);
        assert_eq!(eh3.regular_degree(), Some(22));
        assert!(extended_hamming(1).is_err());
        assert!(extended_hamming(6).is_err());
    }

    #[test]
    fn extended_hamming_is_disjoint_union_of_hamming_and_matching() {
        for n in 2..=3u32 {
            let m = 1u64 << n;
            let h = hamming(n, m).unwrap();
            let eh = extended_hamming(n).unwrap();
            let size = h.vertex_count();
            for v in 0..size {
                let c = complement_vertex(v, n).unwrap();
                // u and u^c differ in every coordinate, so never Hamming-adjacent.
                assert!(!h.has_edge(v, c));
                assert!(eh.has_edge(v, c));
            }
            assert_eq!(eh.edge_count(), h.edge_count() + size / 2);
            for (u, v) in h.edges() {
                assert!(eh.has_edge(u as usize, v as usize));
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(GraphSpec::new(GraphFamily::Hypercube, 3, Some(3)).is_err());
        assert!(GraphSpec::new(GraphFamily::ExtendedHamming, 1, None).is_err());
        assert!(GraphSpec::new(GraphFamily::Hamming, 2, Some(1)).is_err());
        let s = GraphSpec::new(GraphFamily::ExtendedHamming, 3, None).unwrap();
        assert_eq!(s.m, 8);
        let s = GraphSpec::new(GraphFamily::Hamming, 2, None).unwrap();
        assert_eq!(s.m, 4);
    }
}
