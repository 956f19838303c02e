//! The additive group of `F_{2^n}` as bit vectors, and the pairing bijection
//! `phi` between the alphabet `{0, ..., 2^n - 1}` and group elements.
//!
//! Only the group structure is needed: addition is bitwise XOR and the
//! distinguished element "1" is the bit pattern `...001`. No irreducible
//! polynomial, no field multiplication.

use crate::error::{Error, Result};

/// Maximum bit width so every element fits a single machine word.
pub const MAX_WIDTH: u32 = 63;

/// An element of the elementary abelian 2-group `F_2^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    bits: u64,
    width: u32,
}

impl GroupElem {
    pub fn new(bits: u64, width: u32) -> Result<Self> {
        if width == 0 || width > MAX_WIDTH {
            return Err(Error::OutOfRange {
                what: "group width",
                value: width as u64,
                allowed: format!("1..={MAX_WIDTH}"),
            });
        }
        if bits >> width != 0 {
            return Err(Error::OutOfRange {
                what: "group element bits",
                value: bits,
                allowed: format!("< 2^{width}"),
            });
        }
        Ok(Self { bits, width })
    }

    pub fn zero(width: u32) -> Result<Self> {
        Self::new(0, width)
    }

    /// The distinguished element with bit pattern `...001`.
    pub fn one(width: u32) -> Result<Self> {
        Self::new(1, width)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> u32 {
        self.width
    }
}

/// Group addition: bitwise XOR. Every element is its own inverse.
pub fn group_add(a: GroupElem, b: GroupElem) -> Result<GroupElem> {
    if a.width != b.width {
        return Err(Error::WidthMismatch(a.width, b.width));
    }
    GroupElem::new(a.bits ^ b.bits, a.width)
}

fn check_alphabet(x: u64, n: u32) -> Result<()> {
    if n == 0 || n > MAX_WIDTH {
        return Err(Error::OutOfRange {
            what: "alphabet width n",
            value: n as u64,
            allowed: format!("1..={MAX_WIDTH}"),
        });
    }
    if x >> n != 0 {
        return Err(Error::OutOfRange {
            what: "alphabet symbol",
            value: x,
            allowed: format!("0..=2^{n}-1"),
        });
    }
    Ok(())
}

/// The bijection `phi: {0,...,2^n-1} -> F_2^n` with
/// `phi(2^n - 1 - x) = phi(x) + 1` for all x.
///
/// Concrete rule: `phi(x) = 2x` for `x < 2^{n-1}`, else
/// `phi(x) = 2(2^n - 1 - x) + 1`. Complement pairs `{x, 2^n-1-x}` straddle
/// the midpoint, so exactly one branch applies to each member of a pair and
/// the two images differ in the low bit only.
pub fn phi(x: u64, n: u32) -> Result<GroupElem> {
    check_alphabet(x, n)?;
    let top = (1u64 << n) - 1;
    let half = 1u64 << (n - 1);
    let bits = if x < half { 2 * x } else { 2 * (top - x) + 1 };
    GroupElem::new(bits, n)
}

/// Inverse of [`phi`].
pub fn phi_inv(g: GroupElem, n: u32) -> Result<u64> {
    if g.width != n {
        return Err(Error::WidthMismatch(g.width, n));
    }
    check_alphabet(g.bits, n)?;
    let top = (1u64 << n) - 1;
    let x = if g.bits & 1 == 0 {
        g.bits / 2
    } else {
        top - (g.bits - 1) / 2
    };
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn add_is_xor() {
        let a = GroupElem::new(0b101, 3).unwrap();
        let b = GroupElem::new(0b011, 3).unwrap();
        assert_eq!(group_add(a, b).unwrap().bits(), 0b110);
    }

    #[test]
    fn add_self_is_zero_and_identity() {
        for x in 0..8u64 {
            let g = GroupElem::new(x, 3).unwrap();
            assert_eq!(group_add(g, g).unwrap().bits(), 0);
            let z = GroupElem::zero(3).unwrap();
            assert_eq!(group_add(g, z).unwrap(), g);
        }
    }

    #[test]
    fn add_width_mismatch() {
        let a = GroupElem::new(1, 3).unwrap();
        let b = GroupElem::new(1, 4).unwrap();
        assert!(matches!(group_add(a, b), Err(Error::WidthMismatch(3, 4))));
    }

    #[test]
    fn phi_forced_values() {
        // x = 0 and its complement x = 7 at n = 3.
        assert_eq!(phi(0, 3).unwrap().bits(), 0b000);
        assert_eq!(phi(7, 3).unwrap().bits(), 0b001);
        // From the stated rule.
        assert_eq!(phi(2, 3).unwrap().bits(), 0b100);
        assert_eq!(phi(5, 3).unwrap().bits(), 0b101);
    }

    #[test]
    fn phi_table_n2() {
        let table: Vec<u64> = (0..4).map(|x| phi(x, 2).unwrap().bits()).collect();
        assert_eq!(table, vec![0, 2, 3, 1]);
        assert_eq!(phi_inv(GroupElem::new(0b11, 2).unwrap(), 2).unwrap(), 2);
        assert_eq!(phi_inv(GroupElem::new(0b001, 3).unwrap(), 3).unwrap(), 7);
    }

    #[test]
    fn phi_defining_property_and_bijection_exhaustive() {
        for n in 1..=12u32 {
            let top = (1u64 << n) - 1;
            let one = GroupElem::one(n).unwrap();
            let mut seen = vec![false; 1 << n];
            for x in 0..=top {
                let gx = phi(x, n).unwrap();
                let gc = phi(top - x, n).unwrap();
                assert_eq!(gc, group_add(gx, one).unwrap(), "n={n} x={x}");
                assert!(!seen[gx.bits() as usize], "phi not injective at n={n}");
                seen[gx.bits() as usize] = true;
                assert_eq!(phi_inv(gx, n).unwrap(), x);
            }
        }
    }

    #[test]
    fn phi_rejects_out_of_range() {
        assert!(phi(8, 3).is_err());
        assert!(phi(0, 0).is_err());
        assert!(phi(0, 64).is_err());
    }

    proptest! {
        #[test]
        fn add_assoc_comm_selfinv(a in 0u64..(1 << 16), b in 0u64..(1 << 16), c in 0u64..(1 << 16)) {
            let w = 16;
            let (a, b, c) = (
                GroupElem::new(a, w).unwrap(),
                GroupElem::new(b, w).unwrap(),
                GroupElem::new(c, w).unwrap(),
            );
            let ab_c = group_add(group_add(a, b).unwrap(), c).unwrap();
            let a_bc = group_add(a, group_add(b, c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(group_add(a, b).unwrap(), group_add(b, a).unwrap());
            prop_assert_eq!(group_add(a, a).unwrap().bits(), 0);
        }
    }
}
