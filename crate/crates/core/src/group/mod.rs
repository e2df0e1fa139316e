//! Finite groups stored as dense Cayley tables.
//!
//! Elements are the indices `0..n`. Index 0 is always the identity, so the
//! punctured power graph is obtained by dropping vertex 0.

mod families;
mod perm;
mod spectrum;
mod table;

pub use families::{
    alternating, build_cyclic, build_dihedral, build_elementary_abelian, build_from_permutations,
    build_generalized_quaternion, build_heisenberg, direct_product, symmetric,
};
pub use perm::{parse_cycles, Permutation};
pub use spectrum::SpectrumInfo;
pub use table::{load_cayley_table, write_cayley_table};

use std::collections::BTreeSet;

use thiserror::Error;

/// Largest group order any constructor or loader will produce.
pub const MAX_GROUP_ORDER: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {0} exceeds the cap of {MAX_GROUP_ORDER}")]
    CapExceeded(usize),
    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("permutation {0} is not a bijection")]
    NotBijective(usize),
    #[error("generators act on domains of different sizes ({0} and {1})")]
    DomainMismatch(usize, usize),
    #[error("malformed table at line {line}: {reason}")]
    MalformedRow { line: usize, reason: String },
    #[error("row or column {0} of the table is not a permutation")]
    NotLatinSquare(String),
    #[error("table has no two-sided identity element")]
    MissingIdentity,
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(u32, u32, u32),
    #[error(transparent)]
    Io(#[from] IoErrorKind),
}

/// Wrapper so that `GroupError` stays `Clone + PartialEq`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("i/o error: {0}")]
pub struct IoErrorKind(pub String);

impl From<std::io::Error> for GroupError {
    fn from(e: std::io::Error) -> Self {
        GroupError::Io(IoErrorKind(e.to_string()))
    }
}

pub type Result<T> = std::result::Result<T, GroupError>;

/// A finite group with elements `0..order` and identity `0`.
///
/// Immutable after construction; cheap to share across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    label: String,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl Group {
    /// Builds a group from a row-major table whose identity is already index 0.
    ///
    /// The caller guarantees the group axioms; [`Group::validate`] checks them.
    pub(crate) fn from_table(label: impl Into<String>, order: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            if let Some(b) = row.iter().position(|&v| v == 0) {
                inverse[a] = b as u32;
            }
        }
        let mut group = Group {
            order,
            table,
            inverse,
            orders: Vec::new(),
            label: label.into(),
        };
        group.orders = (0..order).map(|x| group.compute_order(x as u32)).collect();
        group
    }

    fn compute_order(&self, x: u32) -> u32 {
        let mut y = x;
        let mut t = 1;
        while y != 0 {
            y = self.mul(y, x);
            t += 1;
            if t as usize > self.order {
                // only reachable for tables that are not groups
                return 0;
            }
        }
        t
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inverse(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    /// Row `a` of the multiplication table.
    pub fn row(&self, a: u32) -> &[u32] {
        &self.table[a as usize * self.order..(a as usize + 1) * self.order]
    }

    pub fn pow(&self, x: u32, mut e: u64) -> u32 {
        let mut base = x;
        let mut acc = 0u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn check_index(&self, x: u32) -> Result<()> {
        if (x as usize) < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index: x as usize,
                order: self.order,
            })
        }
    }

    /// Least `t >= 1` with `x^t = 1`.
    pub fn element_order(&self, x: u32) -> Result<u32> {
        self.check_index(x)?;
        Ok(self.orders[x as usize])
    }

    /// Element orders indexed by element, without bounds checks.
    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    /// Powers of `x` in generation order, starting from the identity.
    pub fn cyclic_subgroup(&self, x: u32) -> Result<Vec<u32>> {
        self.check_index(x)?;
        Ok(self.cyclic_subgroup_unchecked(x))
    }

    pub(crate) fn cyclic_subgroup_unchecked(&self, x: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.orders[x as usize] as usize);
        let mut y = 0u32;
        loop {
            out.push(y);
            y = self.mul(y, x);
            if y == 0 {
                break;
            }
        }
        out
    }

    pub fn commute(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn center(&self) -> BTreeSet<u32> {
        self.elements()
            .filter(|&z| self.elements().all(|x| self.commute(z, x)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a..self.order as u32).all(|b| self.commute(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.order)
    }

    /// `Some(p)` when the order is a power of the prime `p` (and > 1).
    pub fn p_group_prime(&self) -> Option<u64> {
        crate::number_theory::prime_power(self.order as u64).map(|(p, _)| p)
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        self.orders
            .iter()
            .fold(1u64, |acc, &o| acc.lcm(&(o as u64)))
    }

    pub fn spectrum(&self) -> SpectrumInfo {
        SpectrumInfo::of(self)
    }

    /// Every non-identity element has prime power order.
    pub fn is_eppo(&self) -> bool {
        self.spectrum().is_eppo()
    }

    /// Every non-identity element has prime order.
    pub fn is_epo(&self) -> bool {
        self.spectrum().is_epo()
    }

    /// Number of subgroups of order `p`.
    pub fn count_order_p_subgroups(&self, p: u64) -> Result<u64> {
        if !crate::number_theory::is_prime(p) {
            return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
        }
        let s = self.orders.iter().filter(|&&o| o as u64 == p).count() as u64;
        Ok(s / (p - 1))
    }

    /// Matches the presentation `<x, y | x^(2n) = 1, y^2 = x^n, y x y^-1 = x^-1>`
    /// of order `4n` with `n >= 2`.
    pub fn is_generalized_quaternion(&self) -> bool {
        if self.order < 8 || !self.order.is_multiple_of(4) {
            return false;
        }
        let n = (self.order / 4) as u64;
        self.elements()
            .filter(|&x| self.orders[x as usize] as u64 == 2 * n)
            .any(|x| {
                let powers = self.cyclic_subgroup_unchecked(x);
                let mut inside = vec![false; self.order];
                powers.iter().for_each(|&v| inside[v as usize] = true);
                let xn = self.pow(x, n);
                let x_inv = self.inverse(x);
                self.elements().any(|y| {
                    !inside[y as usize]
                        && self.mul(y, y) == xn
                        && self.mul(self.mul(y, x), self.inverse(y)) == x_inv
                })
            })
    }

    /// Checks every group axiom.
    ///
    /// Latin-square and identity checks are exhaustive. Associativity uses
    /// Light's test against a generating set, which is exact.
    pub fn validate(&self) -> Result<()> {
        table::check_latin(self.order, &self.table)?;
        for x in self.elements() {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(GroupError::MissingIdentity);
            }
        }
        table::check_associative_light(self)
    }
}
