//! Immutable simple undirected graphs in CSR form, mixed-radix vertex
//! encoding for tuple vertex sets, and the Cartesian product.

use crate::error::{Error, Result};

/// Refuse to materialize graphs above this many vertices.
pub const MAX_VERTICES: usize = 1 << 26;

/// Graph family tags carried as metadata by the constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hypercube,
    FoldedHypercube,
    Hamming,
    ExtendedHamming,
    Cayley,
    Complete,
    Product,
}

/// Immutable simple undirected graph.
///
/// Neighbor lists are strictly ascending; adjacency is symmetric; no
/// self-loops. Both are audited on construction.
#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    family: Option<Family>,
    regular_degree: Option<usize>,
    vertex_transitive: bool,
}

impl Graph {
    /// Build from a per-vertex neighbor generator. Lists are sorted and
    /// audited (strictly ascending, symmetric, loop-free).
    pub fn build<F>(vertex_count: usize, mut neighbors_of: F) -> Result<Self>
    where
        F: FnMut(usize) -> Vec<u32>,
    {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter("graph must have at least one vertex".into()));
        }
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooLarge {
                vertices: vertex_count as u128,
                limit: MAX_VERTICES,
            });
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        let mut flat: Vec<u32> = Vec::new();
        offsets.push(0);
        for v in 0..vertex_count {
            let mut list = neighbors_of(v);
            list.sort_unstable();
            flat.extend_from_slice(&list);
            offsets.push(flat.len());
        }
        let g = Self {
            offsets,
            neighbors: flat,
            family: None,
            regular_degree: None,
            vertex_transitive: false,
        };
        g.audit()?;
        Ok(g)
    }

    pub fn from_neighbor_lists(lists: Vec<Vec<u32>>) -> Result<Self> {
        let n = lists.len();
        Self::build(n, |v| lists[v].clone())
    }

    pub(crate) fn with_metadata(
        mut self,
        family: Family,
        regular_degree: Option<usize>,
        vertex_transitive: bool,
    ) -> Result<Self> {
        if let Some(d) = regular_degree {
            for v in 0..self.vertex_count() {
                if self.degree(v) != d {
                    return Err(Error::Audit(format!(
                        "vertex {v} has degree {} but regular degree {d} was claimed",
                        self.degree(v)
                    )));
                }
            }
        }
        self.family = Some(family);
        self.regular_degree = regular_degree;
        self.vertex_transitive = vertex_transitive;
        Ok(self)
    }

    fn audit(&self) -> Result<()> {
        let n = self.vertex_count();
        for v in 0..n {
            let list = self.neighbors(v);
            let mut prev: Option<u32> = None;
            for &u in list {
                if u as usize >= n {
                    return Err(Error::Audit(format!("neighbor {u} of {v} out of range")));
                }
                if u as usize == v {
                    return Err(Error::Audit(format!("self-loop at vertex {v}")));
                }
                if let Some(p) = prev {
                    if u <= p {
                        return Err(Error::Audit(format!(
                            "neighbor list of {v} not strictly ascending at {u}"
                        )));
                    }
                }
                prev = Some(u);
                if !self.has_edge_raw(u as usize, v as u32) {
                    return Err(Error::Audit(format!("asymmetric edge {v} -> {u}")));
                }
            }
        }
        Ok(())
    }

    fn has_edge_raw(&self, u: usize, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && v < self.vertex_count() && self.has_edge_raw(u, v as u32)
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn regular_degree(&self) -> Option<usize> {
        self.regular_degree
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_transitive
    }

    /// Edges as `(u, v)` with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| (u as u32) < v)
                .map(move |v| (u as u32, v))
        })
    }

    /// Edge-set equality (vertex counts and sorted neighbor lists identical).
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.offsets == other.offsets && self.neighbors == other.neighbors
    }
}

/// Mixed-radix encoding of an n-tuple over `{0,...,m-1}`; coordinate 1 is
/// the most significant digit.
pub fn encode_vertex(tuple: &[u64], m: u64) -> Result<usize> {
    if tuple.is_empty() || m == 0 {
        return Err(Error::InvalidParameter("empty tuple or zero alphabet".into()));
    }
    let mut index: u128 = 0;
    for &c in tuple {
        if c >= m {
            return Err(Error::OutOfRange {
                what: "tuple coordinate",
                value: c,
                allowed: format!("0..{m}"),
            });
        }
        index = index * m as u128 + c as u128;
        if index > usize::MAX as u128 {
            return Err(Error::InvalidParameter(format!(
                "m^n = {m}^{} overflows the vertex index width",
                tuple.len()
            )));
        }
    }
    Ok(index as usize)
}

/// Inverse of [`encode_vertex`].
pub fn decode_vertex(v: usize, n: u32, m: u64) -> Result<Vec<u64>> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("n and m must be positive".into()));
    }
    let total = (m as u128).checked_pow(n).ok_or_else(|| {
        Error::InvalidParameter(format!("m^n = {m}^{n} overflows"))
    })?;
    if (v as u128) >= total {
        return Err(Error::OutOfRange {
            what: "vertex index",
            value: v as u64,
            allowed: format!("< {m}^{n}"),
        });
    }
    let mut digits = vec![0u64; n as usize];
    let mut rest = v as u64;
    for k in (0..n as usize).rev() {
        digits[k] = rest % m;
        rest /= m;
    }
    Ok(digits)
}

/// The complete graph `K_m`.
pub fn complete_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter("complete graph needs m >= 1".into()));
    }
    let g = Graph::build(m, |v| {
        (0..m as u32).filter(|&u| u as usize != v).collect()
    })?;
    g.with_metadata(Family::Complete, Some(m - 1), true)
}

/// Cartesian product: vertex `(u, v)` is encoded as `u * |V(h)| + v`;
/// `(u,v) ~ (u',v')` iff one coordinate is equal and the other adjacent.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let nh = h.vertex_count();
    let total = (g.vertex_count() as u128) * (nh as u128);
    if total > MAX_VERTICES as u128 {
        return Err(Error::TooLarge { vertices: total, limit: MAX_VERTICES });
    }
    let prod = Graph::build(total as usize, |w| {
        let (u, v) = (w / nh, w % nh);
        let mut list: Vec<u32> =
            Vec::with_capacity(g.degree(u) + h.degree(v));
        for &u2 in g.neighbors(u) {
            list.push((u2 as usize * nh + v) as u32);
        }
        for &v2 in h.neighbors(v) {
            list.push((u * nh + v2 as usize) as u32);
        }
        list
    })?;
    let degree = match (g.regular_degree(), h.regular_degree()) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    };
    prod.with_metadata(
        Family::Product,
        degree,
        g.is_vertex_transitive() && h.is_vertex_transitive(),
    )
}
