//! Independent brute-force verification engines.
//!
//! Three oracles with independent failure modes:
//! - character sums give the exact spectrum of any Cayley graph over
//!   `F_2^k` without an eigensolver;
//! - closed-walk trace moments validate a claimed spectrum against the
//!   literal constructed graph;
//! - modular rank of `A - lambda*I` over several random prime fields
//!   certifies individual multiplicities without trusting the Cayley
//!   presentation.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cayley::{connection_set_eh, ConnectionSet};
use crate::error::{Error, Result};
use crate::families::{GraphFamily, GraphSpec};
use crate::graph::Graph;
use crate::spectra::{
    aggregate_eh, spectrum_extended_hamming_fine, spectrum_folded_hypercube, spectrum_hamming,
    spectrum_hypercube, Spectrum,
};

/// One named check with its verdict.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

/// A bundle of checks; `overall` is their conjunction.
#[derive(Clone, Debug, serde::Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn from_checks(checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.pass);
        Self { checks, overall }
    }
}

/// Exact spectrum of `Cay(F_2^k, S)` by character sums: for every
/// `a in F_2^k` the value `sum_{s in S} (-1)^{popcount(a & s)}` is an
/// eigenvalue, and the tally over all `a` is the spectrum.
pub fn character_spectrum(k: u32, s: &ConnectionSet) -> Result<Spectrum> {
    if s.k() != k {
        return Err(Error::WidthMismatch(s.k(), k));
    }
    if k > 20 {
        return Err(Error::BudgetExceeded(format!(
            "character_spectrum guardrail: k <= 20, got {k}"
        )));
    }
    let mut tally: std::collections::BTreeMap<i64, u64> = Default::default();
    for a in 0..(1u64 << k) {
        let mut sum: i64 = 0;
        for &e in s.elements() {
            if (a & e).count_ones() % 2 == 0 {
                sum += 1;
            } else {
                sum -= 1;
            }
        }
        *tally.entry(sum).or_default() += 1;
    }
    Ok(Spectrum::from_pairs(
        tally.into_iter().map(|(ev, m)| (ev, BigUint::from(m))),
    ))
}

/// Work-unit budget for [`walk_moments`] (vertex-touch count of the DP).
pub const DEFAULT_MOMENT_BUDGET: u128 = 10_000_000_000;

fn moment_cost(g: &Graph, kmax: u32) -> u128 {
    if kmax <= 2 {
        g.vertex_count() as u128
    } else {
        (g.vertex_count() as u128) * 2 * (g.edge_count() as u128) * (kmax as u128)
    }
}

/// `[tr(A^2), ..., tr(A^kmax)]` as exact closed-walk counts, by dense
/// dynamic programming per source vertex. `tr(A^2)` is the degree sum.
pub fn walk_moments(g: &Graph, kmax: u32, budget: Option<u128>) -> Result<Vec<BigUint>> {
    if kmax < 2 {
        return Err(Error::InvalidParameter("walk_moments requires kmax >= 2".into()));
    }
    let budget = budget.unwrap_or(DEFAULT_MOMENT_BUDGET);
    if moment_cost(g, kmax) > budget {
        let feasible = (2..=kmax).rev().find(|&k| moment_cost(g, k) <= budget);
        return Err(Error::BudgetExceeded(format!(
            "walk_moments cost {} exceeds budget {budget}; feasible kmax: {}",
            moment_cost(g, kmax),
            feasible.map_or("none".to_string(), |k| k.to_string())
        )));
    }
    let nv = g.vertex_count();
    let mut moments = vec![BigUint::zero(); (kmax - 1) as usize];
    // tr(A^2) = sum of degrees.
    moments[0] = (0..nv).map(|v| BigUint::from(g.degree(v))).sum();
    if kmax == 2 {
        return Ok(moments);
    }
    let mut cur = vec![BigUint::zero(); nv];
    let mut next = vec![BigUint::zero(); nv];
    for source in 0..nv {
        for x in cur.iter_mut() {
            x.set_zero();
        }
        cur[source] = BigUint::from(1u8);
        for k in 1..=kmax {
            for x in next.iter_mut() {
                x.set_zero();
            }
            for (u, count) in cur.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for &w in g.neighbors(u) {
                    next[w as usize] += count;
                }
            }
            std::mem::swap(&mut cur, &mut next);
            if k >= 3 {
                moments[(k - 2) as usize] += &cur[source];
            }
        }
    }
    Ok(moments)
}

/// Check `sum lambda^k * m(lambda) == tr(A^k)` for every provided moment,
/// in exact arithmetic. Failures are report entries, not errors.
pub fn check_moments(spectrum: &Spectrum, moments: &[BigUint]) -> VerificationReport {
    let mut checks = Vec::with_capacity(moments.len());
    for (idx, tr) in moments.iter().enumerate() {
        let k = idx as u32 + 2;
        let from_spectrum = spectrum.power_sum(k);
        let from_graph = BigInt::from(tr.clone());
        checks.push(Check {
            name: format!("moment k={k}"),
            pass: from_spectrum == from_graph,
            details: format!("spectrum power sum {from_spectrum}, closed walks {from_graph}"),
        });
    }
    VerificationReport::from_checks(checks)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Random primes near 2^62, deterministic in the seed.
fn random_primes(count: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut primes = Vec::with_capacity(count);
    while primes.len() < count {
        let candidate = rng.gen_range((1u64 << 61)..(1u64 << 62)) | 1;
        if is_prime_u64(candidate) && !primes.contains(&candidate) {
            primes.push(candidate);
        }
    }
    primes
}

/// Rank of the dense matrix over `F_p` by Gaussian elimination.
fn rank_mod_p(matrix: &[u64], n: usize, p: u64) -> usize {
    let mut m = matrix.to_vec();
    let mut rank = 0usize;
    for col in 0..n {
        let pivot_row = (rank..n).find(|&r| !m[r * n + col].is_multiple_of(p));
        let Some(pr) = pivot_row else { continue };
        if pr != rank {
            for c in 0..n {
                m.swap(rank * n + c, pr * n + c);
            }
        }
        let inv = powmod(m[rank * n + col], p - 2, p);
        for r in rank + 1..n {
            let factor = mulmod(m[r * n + col] % p, inv, p);
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let sub = mulmod(factor, m[rank * n + c], p);
                let cur = m[r * n + c] % p;
                m[r * n + c] = (cur + p - sub) % p;
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Vertex-count budget for dense elimination.
pub const RANK_VERTEX_BUDGET: usize = 4096;

/// Multiplicity certificate from modular rank.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RankCertificate {
    pub eigenvalue: i64,
    /// `|V| - max rank observed` — an upper bound on the true multiplicity
    /// that equals it with overwhelming probability.
    pub multiplicity: usize,
    pub primes: Vec<u64>,
    pub ranks: Vec<usize>,
    /// All primes agreed on the rank.
    pub certified: bool,
}

/// `mult(lambda) = |V| - rank(A - lambda*I)`, with the rank computed over
/// several independent random primes near 2^62. Rank over a prime field
/// never exceeds the rational rank, so the maximum over primes lower-bounds
/// the rational rank and `|V| - max rank` upper-bounds the multiplicity;
/// agreement across all primes is reported as certification.
pub fn multiplicity_by_rank(g: &Graph, lambda: i64, seed: u64) -> Result<RankCertificate> {
    multiplicity_by_rank_with(g, lambda, 3, seed)
}

pub fn multiplicity_by_rank_with(
    g: &Graph,
    lambda: i64,
    num_primes: usize,
    seed: u64,
) -> Result<RankCertificate> {
    let nv = g.vertex_count();
    if nv > RANK_VERTEX_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "multiplicity_by_rank budget: |V| <= {RANK_VERTEX_BUDGET}, got {nv}"
        )));
    }
    if num_primes == 0 {
        return Err(Error::InvalidParameter("need at least one prime".into()));
    }
    let primes = random_primes(num_primes, seed);
    let mut ranks = Vec::with_capacity(num_primes);
    for &p in &primes {
        let diag = if lambda >= 0 {
            (p - (lambda as u64 % p)) % p
        } else {
            ((-lambda) as u64) % p
        };
        let mut matrix = vec![0u64; nv * nv];
        for v in 0..nv {
            for &w in g.neighbors(v) {
                matrix[v * nv + w as usize] = 1;
            }
            matrix[v * nv + v] = diag;
        }
        ranks.push(rank_mod_p(&matrix, nv, p));
    }
    let max_rank = *ranks.iter().max().expect("nonempty");
    let certified = ranks.iter().all(|&r| r == max_rank);
    Ok(RankCertificate {
        eigenvalue: lambda,
        multiplicity: nv - max_rank,
        primes,
        ranks,
        certified,
    })
}

/// The 2-group Cayley presentation of a family instance, when one exists
/// with `k` small enough for the character oracle.
pub fn cayley_presentation(spec: &GraphSpec) -> Result<Option<(u32, ConnectionSet)>> {
    let basis = |n: u32| -> Result<ConnectionSet> {
        ConnectionSet::new(n, (0..n).map(|i| 1u64 << i).collect())
    };
    let out = match spec.family {
        GraphFamily::Hypercube => Some((spec.n, basis(spec.n)?)),
        GraphFamily::FoldedHypercube => {
            let mut elems: Vec<u64> = (0..spec.n).map(|i| 1u64 << i).collect();
            elems.push((1u64 << spec.n) - 1);
            Some((spec.n, ConnectionSet::new(spec.n, elems)?))
        }
        GraphFamily::Hamming => {
            if spec.m == 2 {
                Some((spec.n, basis(spec.n)?))
            } else if spec.m == 1u64 << spec.n && spec.n * spec.n <= 63 {
                // H(n,2^n): the EH connection set without the all-blocks-one
                // element.
                let full = connection_set_eh(spec.n)?;
                let k = spec.n * spec.n;
                let elems: Vec<u64> = full
                    .elements()
                    .iter()
                    .copied()
                    .filter(|&e| {
                        // Keep only single-block elements: high bits beyond one
                        // block cleared after removing the lowest block.
                        let n = spec.n;
                        let block_mask = (1u64 << n) - 1;
                        let mut blocks = 0;
                        for b in 0..n {
                            if (e >> (b * n)) & block_mask != 0 {
                                blocks += 1;
                            }
                        }
                        blocks == 1
                    })
                    .collect();
                Some((k, ConnectionSet::new(k, elems)?))
            } else {
                None
            }
        }
        GraphFamily::ExtendedHamming => Some((spec.n * spec.n, connection_set_eh(spec.n)?)),
    };
    Ok(out)
}

/// Closed-form spectrum for a family instance.
pub fn closed_form_spectrum(spec: &GraphSpec) -> Result<Spectrum> {
    match spec.family {
        GraphFamily::Hypercube => spectrum_hypercube(spec.n),
        GraphFamily::FoldedHypercube => spectrum_folded_hypercube(spec.n),
        GraphFamily::Hamming => {
            if spec.m == 1u64 << spec.n {
                spectrum_hamming(spec.n)
            } else if spec.m == 2 {
                spectrum_hypercube(spec.n)
            } else {
                Err(Error::InvalidParameter(format!(
                    "no closed-form spectrum for H({}, {}); the theorem covers m = 2^n",
                    spec.n, spec.m
                )))
            }
        }
        GraphFamily::ExtendedHamming => {
            aggregate_eh(&spectrum_extended_hamming_fine(spec.n)?)
        }
    }
}

/// Which engines to run and with what budgets.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub character: bool,
    pub moments: bool,
    pub rank: bool,
    pub kmax: u32,
    pub moment_budget: u128,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            character: true,
            moments: true,
            rank: true,
            kmax: 6,
            moment_budget: DEFAULT_MOMENT_BUDGET,
            seed: 0,
        }
    }
}

/// Build the family instance, its closed-form spectrum, and run the
/// selected oracles against them.
pub fn verify_family_spectrum(spec: &GraphSpec, opts: &VerifyOptions) -> Result<VerificationReport> {
    verify_spectrum_claim(spec, &closed_form_spectrum(spec)?, opts)
}

/// Like [`verify_family_spectrum`] but against a caller-supplied spectrum
/// claim (used by mutation testing and the CLI perturbation hook).
pub fn verify_spectrum_claim(
    spec: &GraphSpec,
    claimed: &Spectrum,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let mut checks = Vec::new();

    if opts.character {
        match cayley_presentation(spec)? {
            Some((k, s)) if k <= 20 => {
                let oracle = character_spectrum(k, &s)?;
                checks.push(Check {
                    name: "character".into(),
                    pass: &oracle == claimed,
                    details: if &oracle == claimed {
                        format!("{} character sums match all {} eigenvalues", 1u64 << k, oracle.entries().len())
                    } else {
                        format!(
                            "character oracle {:?} differs from claim {:?}",
                            oracle.entries(),
                            claimed.entries()
                        )
                    },
                });
            }
            Some((k, _)) => checks.push(Check {
                name: "character".into(),
                pass: true,
                details: format!("skipped: k = {k} exceeds character budget (20)"),
            }),
            None => checks.push(Check {
                name: "character".into(),
                pass: true,
                details: "skipped: no 2-group Cayley presentation".into(),
            }),
        }
    }

    if opts.moments || opts.rank {
        let graph = spec.build()?;
        if opts.moments {
            // Clamp kmax to what the budget allows rather than refusing.
            let feasible = (2..=opts.kmax)
                .rev()
                .find(|&k| moment_cost(&graph, k) <= opts.moment_budget);
            match feasible {
                Some(k) => {
                    let moments = walk_moments(&graph, k, Some(opts.moment_budget))?;
                    let report = check_moments(claimed, &moments);
                    let note = if k < opts.kmax {
                        format!(" (kmax clamped to {k} by budget)")
                    } else {
                        String::new()
                    };
                    for mut c in report.checks {
                        c.details.push_str(&note);
                        checks.push(c);
                    }
                }
                None => checks.push(Check {
                    name: "moments".into(),
                    pass: true,
                    details: "skipped: no feasible kmax within budget".into(),
                }),
            }
            // Total multiplicity must equal |V| regardless of moments.
            let total = claimed.total_multiplicity();
            checks.push(Check {
                name: "multiplicity total".into(),
                pass: total == BigUint::from(graph.vertex_count()),
                details: format!("sum m = {total}, |V| = {}", graph.vertex_count()),
            });
        }
        if opts.rank {
            if graph.vertex_count() <= RANK_VERTEX_BUDGET {
                let mut certified_total = 0usize;
                let mut all_ok = true;
                let mut notes = Vec::new();
                for (ev, m) in claimed.entries() {
                    let cert = multiplicity_by_rank(&graph, *ev, opts.seed)?;
                    let ok = cert.certified && BigUint::from(cert.multiplicity) == *m;
                    all_ok &= ok;
                    certified_total += cert.multiplicity;
                    if !ok {
                        notes.push(format!(
                            "lambda = {ev}: claimed {m}, rank gives {} (certified: {})",
                            cert.multiplicity, cert.certified
                        ));
                    }
                }
                all_ok &= certified_total == graph.vertex_count();
                checks.push(Check {
                    name: "rank".into(),
                    pass: all_ok,
                    details: if all_ok {
                        format!(
                            "all {} multiplicities certified over 3 primes; sum = |V|",
                            claimed.entries().len()
                        )
                    } else {
                        notes.join("; ")
                    },
                });
            } else {
                checks.push(Check {
                    name: "rank".into(),
                    pass: true,
                    details: format!(
                        "skipped: |V| = {} exceeds rank budget {RANK_VERTEX_BUDGET}",
                        graph.vertex_count()
                    ),
                });
            }
        }
    }

    Ok(VerificationReport::from_checks(checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{extended_hamming, hamming, hypercube};
    use num_traits::One;

    #[test]
    fn character_matches_hypercube_formula() {
        for n in 1..=8u32 {
            let s = ConnectionSet::new(n, (0..n).map(|i| 1u64 << i).collect()).unwrap();
            assert_eq!(
                character_spectrum(n, &s).unwrap(),
                spectrum_hypercube(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn character_eh2() {
        let s = connection_set_eh(2).unwrap();
        let spec = character_spectrum(4, &s).unwrap();
        let expect = aggregate_eh(&spectrum_extended_hamming_fine(2).unwrap()).unwrap();
        assert_eq!(spec, expect);
        // a = 0 contributes the degree.
        assert_eq!(spec.top().unwrap().0, 7);
    }

    #[test]
    fn character_order_invariant_and_total() {
        let mut elems = connection_set_eh(2).unwrap().elements().to_vec();
        elems.reverse();
        let s = ConnectionSet::new(4, elems).unwrap();
        let spec = character_spectrum(4, &s).unwrap();
        assert_eq!(spec.total_multiplicity(), BigUint::from(16u8));
        assert_eq!(spec, character_spectrum(4, &connection_set_eh(2).unwrap()).unwrap());
    }

    #[test]
    fn moments_basics() {
        let q3 = hypercube(3).unwrap();
        let m = walk_moments(&q3, 5, None).unwrap();
        assert_eq!(m[0], BigUint::from(24u8)); // |V| * d
        assert_eq!(m[1], BigUint::zero()); // bipartite: no closed 3-walks
        assert_eq!(m[3], BigUint::zero());

        let eh2 = extended_hamming(2).unwrap();
        let m = walk_moments(&eh2, 2, None).unwrap();
        assert_eq!(m[0], BigUint::from(112u8));
    }

    #[test]
    fn moments_budget_error_names_feasible_kmax() {
        let q3 = hypercube(3).unwrap();
        let err = walk_moments(&q3, 6, Some(100)).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("feasible kmax"), "{msg}");
    }

    #[test]
    fn check_moments_pass_and_mutation() {
        let h = hamming(2, 4).unwrap();
        let spec = spectrum_hamming(2).unwrap();
        let moments = walk_moments(&h, 6, None).unwrap();
        assert!(check_moments(&spec, &moments).overall);

        // Perturb one multiplicity: k = 2 must fail.
        let bad = Spectrum::from_pairs(spec.entries().iter().enumerate().map(|(i, (ev, m))| {
            let m = if i == 1 { m + BigUint::one() } else { m.clone() };
            (*ev, m)
        }));
        let report = check_moments(&bad, &moments);
        assert!(!report.overall);
        assert!(!report.checks[0].pass);
    }

    #[test]
    fn rank_certifies_multiplicities() {
        let h = hamming(2, 4).unwrap();
        let cert = multiplicity_by_rank(&h, 6, 0).unwrap();
        assert_eq!(cert.multiplicity, 1);
        assert!(cert.certified);

        let eh2 = extended_hamming(2).unwrap();
        assert_eq!(multiplicity_by_rank(&eh2, -1, 0).unwrap().multiplicity, 5);
        // 5 = lambda_0 - 1 is not an eigenvalue.
        assert_eq!(multiplicity_by_rank(&eh2, 5, 0).unwrap().multiplicity, 0);
    }

    #[test]
    fn primes_are_prime_and_seeded() {
        let a = random_primes(3, 0);
        let b = random_primes(3, 0);
        assert_eq!(a, b);
        for p in a {
            assert!(is_prime_u64(p));
            assert!(p > 1 << 61);
        }
        assert!(is_prime_u64(4611686018427387847)); // known prime near 2^62
        assert!(!is_prime_u64(4611686018427387845));
    }

    #[test]
    fn orchestrator_eh2_all_pass() {
        let spec = GraphSpec::new(GraphFamily::ExtendedHamming, 2, None).unwrap();
        let report = verify_family_spectrum(&spec, &VerifyOptions::default()).unwrap();
        assert!(report.overall, "{:?}", report.checks);
    }

    #[test]
    fn orchestrator_skips_rank_above_budget() {
        let spec = GraphSpec::new(GraphFamily::Hypercube, 13, None).unwrap();
        let report = verify_family_spectrum(
            &spec,
            &VerifyOptions {
                moments: false,
                ..VerifyOptions::default()
            },
        )
        .unwrap();
        assert!(report.overall);
        let rank = report.checks.iter().find(|c| c.name == "rank").unwrap();
        assert!(rank.details.contains("skipped"));
    }
}
