//! Closed-form spectrum calculators for the four families, the fine-grained
//! `(i,t)` eigenvalue table of the extended Hamming graph, and the diagonal
//! Krawtchouk evaluation.
//!
//! Multiplicities are arbitrary precision: `(2^n - 1)^i` already overflows
//! 64 bits at n = 5, i = 5.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A multiset of integer eigenvalues with exact multiplicities, sorted
/// strictly descending by eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<(i64, BigUint)>,
}

impl Spectrum {
    /// Merge raw pairs by eigenvalue, drop zero multiplicities, sort
    /// descending.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, BigUint)>) -> Self {
        let mut merged: std::collections::BTreeMap<i64, BigUint> = Default::default();
        for (ev, m) in pairs {
            if !m.is_zero() {
                *merged.entry(ev).or_default() += m;
            }
        }
        Spectrum {
            entries: merged.into_iter().rev().collect(),
        }
    }

    pub fn entries(&self) -> &[(i64, BigUint)] {
        &self.entries
    }

    pub fn multiplicity(&self, eigenvalue: i64) -> BigUint {
        self.entries
            .iter()
            .find(|(ev, _)| *ev == eigenvalue)
            .map(|(_, m)| m.clone())
            .unwrap_or_default()
    }

    /// Largest eigenvalue (the degree, for connected regular graphs).
    pub fn top(&self) -> Option<(i64, &BigUint)> {
        self.entries.first().map(|(ev, m)| (*ev, m))
    }

    pub fn total_multiplicity(&self) -> BigUint {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// `sum of eigenvalue^k * multiplicity`, exact.
    pub fn power_sum(&self, k: u32) -> BigInt {
        let mut acc = BigInt::zero();
        for (ev, m) in &self.entries {
            acc += BigInt::from(*ev).pow(k) * BigInt::from(m.clone());
        }
        acc
    }
}

fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    binomial(BigUint::from(n), BigUint::from(k))
}

/// Spectrum of the hypercube `Q_n`: eigenvalue `n - 2i` with multiplicity
/// `C(n,i)` for `0 <= i <= n`.
pub fn spectrum_hypercube(n: u32) -> Result<Spectrum> {
    if n == 0 {
        return Err(Error::InvalidParameter("hypercube spectrum requires n >= 1".into()));
    }
    Ok(Spectrum::from_pairs((0..=n as u64).map(|i| {
        (n as i64 - 2 * i as i64, big_binomial(n as u64, i))
    })))
}

/// One merged eigenvalue of `FQ_n` with the hypercube indices `i` that
/// contributed to it.
#[derive(Clone, Debug)]
pub struct FoldedEntry {
    pub eigenvalue: i64,
    pub multiplicity: BigUint,
    pub contributing_i: Vec<u32>,
}

/// Merge table for the folded hypercube spectrum: raw pairs
/// `(n - 2i + (-1)^i, C(n,i))` merged by eigenvalue, keeping which `i`
/// values collided (e.g. i = 1 and i = 2 both give 0 at n = 3).
pub fn folded_hypercube_table(n: u32) -> Result<Vec<FoldedEntry>> {
    if n < 2 {
        return Err(Error::InvalidParameter("folded hypercube spectrum requires n >= 2".into()));
    }
    let mut merged: std::collections::BTreeMap<i64, (BigUint, Vec<u32>)> = Default::default();
    for i in 0..=n {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let theta = n as i64 - 2 * i as i64 + sign;
        let slot = merged.entry(theta).or_default();
        slot.0 += big_binomial(n as u64, i as u64);
        slot.1.push(i);
    }
    Ok(merged
        .into_iter()
        .rev()
        .map(|(eigenvalue, (multiplicity, contributing_i))| FoldedEntry {
            eigenvalue,
            multiplicity,
            contributing_i,
        })
        .collect())
}

/// Spectrum of the folded hypercube `FQ_n`: eigenvalues `n - 2i + (-1)^i`
/// with multiplicity `C(n,i)`, equal values merged.
pub fn spectrum_folded_hypercube(n: u32) -> Result<Spectrum> {
    Ok(Spectrum::from_pairs(
        folded_hypercube_table(n)?
            .into_iter()
            .map(|e| (e.eigenvalue, e.multiplicity)),
    ))
}

/// Spectrum of the Hamming graph `H(n,2^n)`: eigenvalue `2^n (n-i) - n`
/// with multiplicity `C(n,i) (2^n - 1)^i`.
pub fn spectrum_hamming(n: u32) -> Result<Spectrum> {
    if n == 0 || n > 57 {
        return Err(Error::InvalidParameter(
            "hamming spectrum requires 1 <= n <= 57 (eigenvalues must fit i64)".into(),
        ));
    }
    let m = 1i64 << n;
    let q1 = BigUint::from((1u64 << n) - 1);
    Ok(Spectrum::from_pairs((0..=n as u64).map(|i| {
        (
            m * (n as i64 - i as i64) - n as i64,
            big_binomial(n as u64, i) * q1.pow(i as u32),
        )
    })))
}

/// One row of the fine extended Hamming table: eigenvalue
/// `theta = lambda_i + (-1)^t` with multiplicity
/// `C(n,i) C(i,t) 2^{(n-1)t} (2^{n-1} - 1)^{i-t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FineRow {
    pub i: u32,
    pub t: u32,
    pub theta: i64,
    pub multiplicity: BigUint,
}

/// The fine-grained `(i,t)` eigenvalue table of `EH(n,2^n)`.
#[derive(Clone, Debug)]
pub struct FineSpectrumEH {
    pub n: u32,
    pub rows: Vec<FineRow>,
}

impl FineSpectrumEH {
    pub fn total_multiplicity(&self) -> BigUint {
        self.rows.iter().map(|r| &r.multiplicity).sum()
    }
}

fn hamming_lambda(n: u32, i: u32) -> i64 {
    (1i64 << n) * (n as i64 - i as i64) - n as i64
}

/// Fine spectrum of the extended Hamming graph `EH(n,2^n)`, rows indexed by
/// `0 <= i <= n`, `0 <= t <= i`.
pub fn spectrum_extended_hamming_fine(n: u32) -> Result<FineSpectrumEH> {
    if !(2..=57).contains(&n) {
        return Err(Error::InvalidParameter(
            "extended hamming fine spectrum requires 2 <= n <= 57".into(),
        ));
    }
    let half = BigUint::from(2u32).pow(n - 1);
    let half_minus_one = &half - BigUint::one();
    let mut rows = Vec::new();
    for i in 0..=n {
        let lambda = hamming_lambda(n, i);
        for t in 0..=i {
            let sign = if t % 2 == 0 { 1 } else { -1 };
            let multiplicity = big_binomial(n as u64, i as u64)
                * big_binomial(i as u64, t as u64)
                * half.pow(t)
                * half_minus_one.pow(i - t);
            rows.push(FineRow {
                i,
                t,
                theta: lambda + sign,
                multiplicity,
            });
        }
    }
    Ok(FineSpectrumEH { n, rows })
}

/// Closed-form multiplicities of `lambda_i + 1` and `lambda_i - 1` in
/// `EH(n,2^n)`: `m_i^{+/-} = C(n,i) ((2^n - 1)^i +/- (-1)^i) / 2`.
pub fn eh_mult_plus_minus(n: u32, i: u32) -> Result<(BigUint, BigUint)> {
    if n < 2 || i > n {
        return Err(Error::InvalidParameter("eh_mult_plus_minus requires n >= 2, i <= n".into()));
    }
    let q1 = BigInt::from((1u64 << n) - 1).pow(i);
    let sign = if i.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let binom = BigInt::from(big_binomial(n as u64, i as u64));
    let two = BigInt::from(2);
    let plus = &binom * (&q1 + &sign) / &two;
    let minus = &binom * (&q1 - &sign) / &two;
    debug_assert!(!plus.is_negative() && !minus.is_negative());
    Ok((
        plus.to_biguint().expect("nonnegative"),
        minus.to_biguint().expect("nonnegative"),
    ))
}

/// Merge the fine table into a [`Spectrum`], asserting structurally that
/// `lambda_i + 1` never collides with `lambda_{i'} - 1` (a collision would
/// need `2^n (i' - i) = 2`, impossible for n >= 2), and cross-checking the
/// merged multiplicities against the closed form [`eh_mult_plus_minus`].
pub fn aggregate_eh(fine: &FineSpectrumEH) -> Result<Spectrum> {
    let n = fine.n;
    // theta -> (mult, parity of t that produced it)
    let mut merged: std::collections::BTreeMap<i64, (BigUint, u32)> = Default::default();
    for row in &fine.rows {
        let parity = row.t % 2;
        let slot = merged.entry(row.theta).or_insert_with(|| (BigUint::zero(), parity));
        if slot.1 != parity {
            return Err(Error::Audit(format!(
                "eigenvalue {} produced by both lambda+1 and lambda-1 rows",
                row.theta
            )));
        }
        slot.0 += &row.multiplicity;
    }
    // Cross-check each merged value against the m_i^{+/-} closed form.
    for i in 0..=n {
        let lambda = hamming_lambda(n, i);
        let (plus, minus) = eh_mult_plus_minus(n, i)?;
        let got_plus = merged
            .get(&(lambda + 1))
            .map(|(m, _)| m.clone())
            .unwrap_or_default();
        let got_minus = merged
            .get(&(lambda - 1))
            .map(|(m, _)| m.clone())
            .unwrap_or_default();
        if got_plus != plus || got_minus != minus {
            return Err(Error::Audit(format!(
                "fine-table aggregation disagrees with m_i^+- closed form at i = {i}"
            )));
        }
    }
    Ok(Spectrum::from_pairs(
        merged.into_iter().map(|(ev, (m, _))| (ev, m)),
    ))
}

/// Diagonal Krawtchouk value
/// `K_n(i) = sum_j (-1)^j (q-1)^{n-j} C(i,j) C(n-i,n-j)`.
///
/// Only the `j = i` term survives (`C(i,j) = 0` for `j > i`,
/// `C(n-i,n-j) = 0` for `j < i`), so the value is
/// `(-1)^i (q-1)^{n-i}`. Both the literal sum and the closed form are
/// computed and asserted equal.
pub fn krawtchouk_diag(n: u32, i: u32, q: u64) -> Result<BigInt> {
    if i > n || q < 2 {
        return Err(Error::InvalidParameter(
            "krawtchouk_diag requires 0 <= i <= n and q >= 2".into(),
        ));
    }
    let q1 = BigInt::from(q - 1);
    let mut literal = BigInt::zero();
    for j in 0..=n {
        let term = q1.pow(n - j)
            * BigInt::from(big_binomial(i as u64, j as u64))
            * BigInt::from(big_binomial((n - i) as u64, (n - j) as u64));
        if j % 2 == 0 {
            literal += term;
        } else {
            literal -= term;
        }
    }
    let closed = if i.is_multiple_of(2) {
        q1.pow(n - i)
    } else {
        -q1.pow(n - i)
    };
    if literal != closed {
        return Err(Error::Audit(format!(
            "krawtchouk literal sum {literal} != closed form {closed} at n={n} i={i} q={q}"
        )));
    }
    Ok(literal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(pairs: &[(i64, u64)]) -> Spectrum {
        Spectrum::from_pairs(pairs.iter().map(|&(e, m)| (e, BigUint::from(m))))
    }

    #[test]
    fn hypercube_spectrum_small() {
        assert_eq!(spectrum_hypercube(1).unwrap(), spec(&[(1, 1), (-1, 1)]));
        assert_eq!(
            spectrum_hypercube(3).unwrap(),
            spec(&[(3, 1), (1, 3), (-1, 3), (-3, 1)])
        );
        for n in 1..=30u32 {
            let s = spectrum_hypercube(n).unwrap();
            assert_eq!(s.total_multiplicity(), BigUint::from(2u8).pow(n));
            assert!(s.power_sum(1).is_zero());
        }
    }

    #[test]
    fn folded_hypercube_spectrum_small() {
        assert_eq!(spectrum_folded_hypercube(2).unwrap(), spec(&[(3, 1), (-1, 3)]));
        assert_eq!(
            spectrum_folded_hypercube(3).unwrap(),
            spec(&[(4, 1), (0, 6), (-4, 1)])
        );
        assert_eq!(
            spectrum_folded_hypercube(4).unwrap(),
            spec(&[(5, 1), (1, 10), (-3, 5)])
        );
        assert!(spectrum_folded_hypercube(1).is_err());
    }

    #[test]
    fn folded_merge_table_surfaces_collisions() {
        // At n = 3, theta_1 = theta_2 = 0.
        let table = folded_hypercube_table(3).unwrap();
        let zero = table.iter().find(|e| e.eigenvalue == 0).unwrap();
        assert_eq!(zero.contributing_i, vec![1, 2]);
        assert_eq!(zero.multiplicity, BigUint::from(6u8));
    }

    #[test]
    fn hamming_spectrum_small() {
        assert_eq!(spectrum_hamming(2).unwrap(), spec(&[(6, 1), (2, 6), (-2, 9)]));
        assert_eq!(
            spectrum_hamming(3).unwrap(),
            spec(&[(21, 1), (13, 21), (5, 147), (-3, 343)])
        );
        for n in 1..=8u32 {
            let s = spectrum_hamming(n).unwrap();
            assert_eq!(s.total_multiplicity(), BigUint::from(2u8).pow(n * n));
            assert!(s.power_sum(1).is_zero());
            // Top eigenvalue is the degree n(2^n - 1), simple.
            let (top, m) = s.top().unwrap();
            assert_eq!(top, n as i64 * ((1 << n) - 1));
            assert_eq!(m, &BigUint::one());
        }
    }

    #[test]
    fn eh_fine_rows_n2() {
        let fine = spectrum_extended_hamming_fine(2).unwrap();
        assert_eq!(fine.rows.len(), 6);
        let row00 = &fine.rows[0];
        assert_eq!((row00.i, row00.t, row00.theta), (0, 0, 7));
        assert_eq!(row00.multiplicity, BigUint::one());
        let row21 = fine.rows.iter().find(|r| (r.i, r.t) == (2, 1)).unwrap();
        assert_eq!(row21.theta, -3);
        assert_eq!(row21.multiplicity, BigUint::from(4u8));
    }

    #[test]
    fn eh_fine_total_is_2_pow_n_squared() {
        for n in 2..=8u32 {
            let fine = spectrum_extended_hamming_fine(n).unwrap();
            assert_eq!(
                fine.total_multiplicity(),
                BigUint::from(2u8).pow(n * n),
                "n={n}"
            );
        }
    }

    #[test]
    fn eh_aggregate_small() {
        let s2 = aggregate_eh(&spectrum_extended_hamming_fine(2).unwrap()).unwrap();
        assert_eq!(s2, spec(&[(7, 1), (3, 2), (1, 4), (-1, 5), (-3, 4)]));
        // lambda_0 - 1 = 5 has multiplicity zero and is dropped.
        assert!(s2.multiplicity(5).is_zero());

        let s3 = aggregate_eh(&spectrum_extended_hamming_fine(3).unwrap()).unwrap();
        assert_eq!(
            s3,
            spec(&[(22, 1), (14, 9), (12, 12), (6, 75), (4, 72), (-2, 171), (-4, 172)])
        );
        assert_eq!(s3.total_multiplicity(), BigUint::from(512u16));
        assert!(s3.power_sum(1).is_zero());
        assert_eq!(s3.power_sum(2), BigInt::from(512i64 * 22));
    }

    #[test]
    fn eh_plus_minus_identity() {
        for n in 2..=10u32 {
            let fine = spectrum_extended_hamming_fine(n).unwrap();
            for i in 0..=n {
                let (plus, minus) = eh_mult_plus_minus(n, i).unwrap();
                let even: BigUint = fine
                    .rows
                    .iter()
                    .filter(|r| r.i == i && r.t % 2 == 0)
                    .map(|r| &r.multiplicity)
                    .sum();
                let odd: BigUint = fine
                    .rows
                    .iter()
                    .filter(|r| r.i == i && r.t % 2 == 1)
                    .map(|r| &r.multiplicity)
                    .sum();
                assert_eq!(even, plus, "n={n} i={i}");
                assert_eq!(odd, minus, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn krawtchouk_values() {
        assert_eq!(krawtchouk_diag(3, 1, 2).unwrap(), BigInt::from(-1));
        assert_eq!(krawtchouk_diag(4, 2, 2).unwrap(), BigInt::from(1));
        assert_eq!(krawtchouk_diag(3, 1, 8).unwrap(), BigInt::from(-49));
        for n in 0..=64u32 {
            for i in 0..=n {
                let expect = if i % 2 == 0 { 1 } else { -1 };
                assert_eq!(krawtchouk_diag(n, i, 2).unwrap(), BigInt::from(expect));
            }
        }
        assert!(krawtchouk_diag(2, 3, 2).is_err());
        assert!(krawtchouk_diag(2, 1, 1).is_err());
    }
}
