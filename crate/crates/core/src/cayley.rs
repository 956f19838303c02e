//! Cayley graphs over `F_2^k`, the connection set presenting `EH(n,2^n)`,
//! the vertex relabeling map built from `phi`, and exact isomorphism
//! verification by exhaustive edge mapping.

use crate::error::{Error, Result};
use crate::gf2::phi;
use crate::graph::{Family, Graph};

/// An identity-free, inverse-closed subset of `F_2^k` (in a 2-group every
/// element is its own inverse, so inverse closure is structural).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    k: u32,
    elements: Vec<u64>,
}

impl ConnectionSet {
    pub fn new(k: u32, mut elements: Vec<u64>) -> Result<Self> {
        if k == 0 || k > 63 {
            return Err(Error::InvalidParameter("connection set requires 1 <= k <= 63".into()));
        }
        elements.sort_unstable();
        elements.dedup();
        for &e in &elements {
            if e == 0 {
                return Err(Error::InvalidParameter(
                    "connection set must exclude the identity".into(),
                ));
            }
            if e >> k != 0 {
                return Err(Error::OutOfRange {
                    what: "connection set element",
                    value: e,
                    allowed: format!("< 2^{k}"),
                });
            }
        }
        Ok(Self { k, elements })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: u64) -> bool {
        self.elements.binary_search(&e).is_ok()
    }
}

/// The connection set `S` presenting `EH(n,2^n)` over `F_2^{n^2}`:
/// all elements with exactly one nonzero n-bit block (block 1 most
/// significant), plus the element whose every block is the bit pattern of
/// the group identity symbol "1". Cardinality `n (2^n - 1) + 1`.
pub fn connection_set_eh(n: u32) -> Result<ConnectionSet> {
    if n < 2 {
        return Err(Error::InvalidParameter("connection_set_eh requires n >= 2".into()));
    }
    let k = n * n;
    if k > 63 {
        return Err(Error::InvalidParameter(
            "connection_set_eh guardrail: n^2 <= 63".into(),
        ));
    }
    let mut elements = Vec::with_capacity((n as usize) * ((1usize << n) - 1) + 1);
    for block in 0..n {
        // Block `block` (0 = most significant) occupies bits
        // [(n-1-block)*n, (n-block)*n).
        let shift = (n - 1 - block) * n;
        for g in 1..(1u64 << n) {
            elements.push(g << shift);
        }
    }
    let mut all_ones_blocks = 0u64;
    for block in 0..n {
        all_ones_blocks |= 1u64 << ((n - 1 - block) * n);
    }
    elements.push(all_ones_blocks);
    ConnectionSet::new(k, elements)
}

/// The Cayley graph `Cay(F_2^k, S)`: `u ~ v` iff `u XOR v` lies in `S`.
pub fn cayley_graph(k: u32, s: &ConnectionSet) -> Result<Graph> {
    if s.k() != k {
        return Err(Error::WidthMismatch(s.k(), k));
    }
    if k > 26 {
        return Err(Error::InvalidParameter("cayley_graph guardrail: k <= 26".into()));
    }
    let size = 1usize << k;
    let g = Graph::build(size, |v| {
        s.elements().iter().map(|&e| (v as u64 ^ e) as u32).collect()
    })?;
    g.with_metadata(Family::Cayley, Some(s.len()), true)
}

/// A bijective vertex relabeling of `[0, 2^k)`.
#[derive(Clone, Debug)]
pub struct VertexMap {
    forward: Vec<usize>,
    pub n: u32,
    pub m: u64,
}

impl VertexMap {
    pub fn new(forward: Vec<usize>, n: u32, m: u64) -> Result<Self> {
        let mut seen = vec![false; forward.len()];
        for &img in &forward {
            if img >= forward.len() || seen[img] {
                return Err(Error::Audit("vertex map is not a permutation".into()));
            }
            seen[img] = true;
        }
        Ok(Self { forward, n, m })
    }

    pub fn map(&self, v: usize) -> usize {
        self.forward[v]
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// The map `Phi(u_1,...,u_n) = (phi(u_1),...,phi(u_n))` as a permutation of
/// `[0, 2^{n^2})`: digit `u_i` of the base-`2^n` vertex index becomes the
/// n-bit block `phi(u_i)`, block 1 most significant. A pure bit reshuffle
/// of digits through `phi`.
pub fn build_phi_map(n: u32) -> Result<VertexMap> {
    if n < 2 || n * n > 26 {
        return Err(Error::InvalidParameter(
            "build_phi_map requires n >= 2 and n^2 <= 26".into(),
        ));
    }
    let m = 1u64 << n;
    let size = 1usize << (n * n);
    let mut forward = vec![0usize; size];
    for (v, slot) in forward.iter_mut().enumerate() {
        let mut bits: u64 = 0;
        let mut rest = v as u64;
        // Extract digits least significant first, placing blocks accordingly.
        for block in (0..n).rev() {
            let digit = rest % m;
            rest /= m;
            let shift = (n - 1 - block) * n;
            bits |= phi(digit, n)?.bits() << shift;
        }
        *slot = bits as usize;
    }
    VertexMap::new(forward, n, m)
}

/// Outcome of an exhaustive edge-preservation audit.
#[derive(Clone, Debug, serde::Serialize)]
pub struct IsoReport {
    pub ok: bool,
    pub edges_checked: usize,
    /// First edge of `g1` whose image is not an edge of `g2`, if any.
    pub violation: Option<(usize, usize)>,
    pub note: String,
}

/// Verify that `map` carries every edge of `g1` onto an edge of `g2`.
/// Together with equal edge counts and bijectivity this certifies an
/// isomorphism.
pub fn verify_isomorphism(g1: &Graph, g2: &Graph, map: &VertexMap) -> Result<IsoReport> {
    if g1.vertex_count() != g2.vertex_count() || g1.vertex_count() != map.len() {
        return Err(Error::SizeMismatch(format!(
            "|V(g1)| = {}, |V(g2)| = {}, |map| = {}",
            g1.vertex_count(),
            g2.vertex_count(),
            map.len()
        )));
    }
    if g1.edge_count() != g2.edge_count() {
        return Ok(IsoReport {
            ok: false,
            edges_checked: 0,
            violation: None,
            note: format!(
                "edge counts differ: {} vs {}",
                g1.edge_count(),
                g2.edge_count()
            ),
        });
    }
    let mut checked = 0usize;
    for (u, v) in g1.edges() {
        let (mu, mv) = (map.map(u as usize), map.map(v as usize));
        if !g2.has_edge(mu, mv) {
            return Ok(IsoReport {
                ok: false,
                edges_checked: checked,
                violation: Some((u as usize, v as usize)),
                note: format!("edge ({u},{v}) maps to non-edge ({mu},{mv})"),
            });
        }
        checked += 1;
    }
    Ok(IsoReport {
        ok: true,
        edges_checked: checked,
        violation: None,
        note: "all edges preserved; edge counts equal; map bijective".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{extended_hamming, folded_hypercube, hamming, hypercube};

    fn basis_set(n: u32) -> ConnectionSet {
        ConnectionSet::new(n, (0..n).map(|i| 1u64 << i).collect()).unwrap()
    }

    #[test]
    fn connection_set_eh_cardinality_and_shape() {
        let s2 = connection_set_eh(2).unwrap();
        assert_eq!(s2.len(), 7);
        assert!(s2.contains(0b0101), "all-blocks-one element for n = 2");
        let s3 = connection_set_eh(3).unwrap();
        assert_eq!(s3.len(), 22);
        assert!(!s3.contains(0));
        let mut sorted = s3.elements().to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), s3.len());
        assert!(connection_set_eh(1).is_err());
    }

    #[test]
    fn connection_set_rejects_identity() {
        assert!(ConnectionSet::new(3, vec![0, 1]).is_err());
        assert!(ConnectionSet::new(3, vec![8]).is_err());
    }

    #[test]
    fn cayley_standard_presentations() {
        for n in [2u32, 3, 4] {
            let q = cayley_graph(n, &basis_set(n)).unwrap();
            assert!(q.same_edges(&hypercube(n).unwrap()), "Q_{n}");

            let mut elems: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
            elems.push((1u64 << n) - 1);
            let s = ConnectionSet::new(n, elems).unwrap();
            let fq = cayley_graph(n, &s).unwrap();
            assert!(fq.same_edges(&folded_hypercube(n).unwrap()), "FQ_{n}");
        }
    }

    #[test]
    fn cayley_eh_regularity() {
        let g = cayley_graph(4, &connection_set_eh(2).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(g.regular_degree(), Some(7));
    }

    #[test]
    fn phi_map_values() {
        let map = build_phi_map(2).unwrap();
        assert_eq!(map.map(0), 0);
        // Tuple (3,3): phi(3) = 0b01 at n = 2, blocks (01,01) = 0b0101 = 5.
        assert_eq!(map.map(15), 5);
        assert!(build_phi_map(3).is_ok());
        assert!(build_phi_map(6).is_err());
    }

    #[test]
    fn isomorphism_identity_map() {
        let h = hamming(2, 4).unwrap();
        let id = VertexMap::new((0..16).collect(), 2, 4).unwrap();
        assert!(verify_isomorphism(&h, &h, &id).unwrap().ok);
    }

    #[test]
    fn theorem_isomorphism_eh_vs_cayley() {
        for n in [2u32, 3] {
            let eh = extended_hamming(n).unwrap();
            let cay = cayley_graph(n * n, &connection_set_eh(n).unwrap()).unwrap();
            let map = build_phi_map(n).unwrap();
            let report = verify_isomorphism(&eh, &cay, &map).unwrap();
            assert!(report.ok, "n={n}: {}", report.note);
            assert_eq!(report.edges_checked, eh.edge_count());
        }
    }

    #[test]
    fn isomorphism_detects_transposition() {
        let eh = extended_hamming(2).unwrap();
        let cay = cayley_graph(4, &connection_set_eh(2).unwrap()).unwrap();
        let map = build_phi_map(2).unwrap();
        let mut forward: Vec<usize> = (0..16).map(|v| map.map(v)).collect();
        forward.swap(1, 2);
        let bad = VertexMap::new(forward, 2, 4).unwrap();
        let report = verify_isomorphism(&eh, &cay, &bad).unwrap();
        assert!(!report.ok);
        assert!(report.violation.is_some());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let a = hypercube(2).unwrap();
        let b = hypercube(3).unwrap();
        let id = VertexMap::new((0..4).collect(), 2, 2).unwrap();
        assert!(verify_isomorphism(&a, &b, &id).is_err());
    }
}
