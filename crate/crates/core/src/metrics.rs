//! BFS distance partitions, exact diameter, and the distance-regularity
//! checker with witness extraction.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// BFS layering from a fixed source.
#[derive(Clone, Debug)]
pub struct DistancePartition {
    pub source: usize,
    /// `cells[r]` holds the vertices at distance `r`, ascending.
    pub cells: Vec<Vec<u32>>,
    pub eccentricity: usize,
}

impl DistancePartition {
    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }
}

fn bfs_distances(g: &Graph, source: usize) -> Vec<i32> {
    let mut dist = vec![-1i32; g.vertex_count()];
    dist[source] = 0;
    let mut frontier = vec![source as u32];
    let mut d = 0i32;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u as usize) {
                if dist[w as usize] < 0 {
                    dist[w as usize] = d;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Breadth-first distance partition; errors if the graph is disconnected.
pub fn bfs(g: &Graph, source: usize) -> Result<DistancePartition> {
    if source >= g.vertex_count() {
        return Err(Error::OutOfRange {
            what: "bfs source",
            value: source as u64,
            allowed: format!("< {}", g.vertex_count()),
        });
    }
    let dist = bfs_distances(g, source);
    if let Some(unreached) = dist.iter().position(|&d| d < 0) {
        return Err(Error::Disconnected { start: source, unreached });
    }
    let ecc = *dist.iter().max().expect("nonempty") as usize;
    let mut cells = vec![Vec::new(); ecc + 1];
    for (v, &d) in dist.iter().enumerate() {
        cells[d as usize].push(v as u32);
    }
    Ok(DistancePartition {
        source,
        cells,
        eccentricity: ecc,
    })
}

/// Exact diameter. For vertex-transitive graphs a single BFS from vertex 0
/// suffices (all eccentricities coincide); otherwise every source is swept.
pub fn diameter(g: &Graph) -> Result<usize> {
    if g.is_vertex_transitive() {
        Ok(bfs(g, 0)?.eccentricity)
    } else {
        all_pairs_diameter(g)
    }
}

/// Maximum eccentricity over all sources, regardless of metadata.
pub fn all_pairs_diameter(g: &Graph) -> Result<usize> {
    let mut best = 0usize;
    for v in 0..g.vertex_count() {
        best = best.max(bfs(g, v)?.eccentricity);
    }
    Ok(best)
}

/// Which intersection number differed in a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IntersectionKind {
    /// `c_r`: neighbors one layer closer to the source.
    C,
    /// `b_r`: neighbors one layer further from the source.
    B,
}

/// Two vertices at equal distance from their sources whose intersection
/// counts differ. For a within-source witness the two sources coincide.
#[derive(Clone, Debug, serde::Serialize)]
pub struct DrWitness {
    pub source1: usize,
    pub vertex1: usize,
    pub source2: usize,
    pub vertex2: usize,
    pub r: usize,
    pub kind: IntersectionKind,
    pub count1: usize,
    pub count2: usize,
}

/// Verdict of the distance-regularity check.
#[derive(Clone, Debug, serde::Serialize)]
pub struct DRReport {
    pub is_dr: bool,
    /// `(b_0..b_{d-1}, c_1..c_d)` when distance regular.
    pub intersection_array: Option<(Vec<usize>, Vec<usize>)>,
    pub witness: Option<DrWitness>,
    /// True when only a sample of sources was scanned.
    pub sampled: bool,
}

/// Source budget for the exhaustive scan.
pub const DR_VERTEX_BUDGET: usize = 4096;

/// Exhaustive distance-regularity check: for every source and every vertex
/// at distance `r`, `c_r` and `b_r` are recomputed and required to depend
/// on `r` only. First failure in (source, layer, vertex) scan order is
/// returned as the witness.
pub fn distance_regularity_check(g: &Graph) -> Result<DRReport> {
    if g.vertex_count() > DR_VERTEX_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "distance_regularity_check scans all sources only up to {DR_VERTEX_BUDGET} \
             vertices; use distance_regularity_check_sampled for larger graphs"
        )));
    }
    let sources: Vec<usize> = (0..g.vertex_count()).collect();
    dr_scan(g, &sources, false)
}

/// Sampled variant for graphs above the all-sources budget: scans vertex 0
/// plus `samples` random sources. The report is marked `sampled`.
pub fn distance_regularity_check_sampled(
    g: &Graph,
    samples: usize,
    seed: u64,
) -> Result<DRReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sources = vec![0usize];
    for _ in 0..samples {
        sources.push(rng.gen_range(0..g.vertex_count()));
    }
    sources.sort_unstable();
    sources.dedup();
    dr_scan(g, &sources, true)
}

fn dr_scan(g: &Graph, sources: &[usize], sampled: bool) -> Result<DRReport> {
    // Per distance r: established (count, exemplar source, exemplar vertex).
    let mut expected_c: Vec<Option<(usize, usize, usize)>> = Vec::new();
    let mut expected_b: Vec<Option<(usize, usize, usize)>> = Vec::new();
    let mut max_ecc = 0usize;

    for &s in sources {
        let dist = bfs_distances(g, s);
        if let Some(unreached) = dist.iter().position(|&d| d < 0) {
            return Err(Error::Disconnected { start: s, unreached });
        }
        let ecc = *dist.iter().max().expect("nonempty") as usize;
        max_ecc = max_ecc.max(ecc);
        while expected_c.len() <= max_ecc {
            expected_c.push(None);
            expected_b.push(None);
        }
        // Layer-order, then vertex-order within the layer.
        let mut layers = vec![Vec::new(); ecc + 1];
        for (v, &d) in dist.iter().enumerate() {
            layers[d as usize].push(v);
        }
        for (r, layer) in layers.iter().enumerate().skip(1) {
            for &u in layer {
                let mut c = 0usize;
                let mut b = 0usize;
                for &w in g.neighbors(u) {
                    let dw = dist[w as usize] as usize;
                    if dw + 1 == r {
                        c += 1;
                    } else if dw == r + 1 {
                        b += 1;
                    }
                }
                for (kind, count, slot) in [
                    (IntersectionKind::C, c, &mut expected_c[r]),
                    (IntersectionKind::B, b, &mut expected_b[r]),
                ] {
                    match slot {
                        None => *slot = Some((count, s, u)),
                        Some((want, ws, wu)) => {
                            if *want != count {
                                return Ok(DRReport {
                                    is_dr: false,
                                    intersection_array: None,
                                    witness: Some(DrWitness {
                                        source1: *ws,
                                        vertex1: *wu,
                                        source2: s,
                                        vertex2: u,
                                        r,
                                        kind,
                                        count1: *want,
                                        count2: count,
                                    }),
                                    sampled,
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    let d = max_ecc;
    let degree = g.degree(sources[0]);
    let mut b_arr = vec![degree]; // b_0 = degree
    b_arr.extend(expected_b[1..d].iter().map(|e| e.expect("layer visited").0));
    let c_arr: Vec<usize> = expected_c[1..=d]
        .iter()
        .map(|e| e.expect("layer visited").0)
        .collect();
    Ok(DRReport {
        is_dr: true,
        intersection_array: Some((b_arr, c_arr)),
        witness: None,
        sampled,
    })
}

/// Recompute both witness counts directly from adjacency, independently of
/// the scan. Returns `(count1, count2)`.
pub fn recheck_witness(g: &Graph, w: &DrWitness) -> Result<(usize, usize)> {
    let count_at = |source: usize, vertex: usize| -> Result<usize> {
        let dist = bfs_distances(g, source);
        if dist[vertex] as usize != w.r {
            return Err(Error::Audit(format!(
                "witness vertex {vertex} is at distance {} from {source}, not {}",
                dist[vertex], w.r
            )));
        }
        let target = match w.kind {
            IntersectionKind::C => w.r as i32 - 1,
            IntersectionKind::B => w.r as i32 + 1,
        };
        Ok(g.neighbors(vertex)
            .iter()
            .filter(|&&x| dist[x as usize] == target)
            .count())
    };
    Ok((count_at(w.source1, w.vertex1)?, count_at(w.source2, w.vertex2)?))
}
