use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::Group;
use crate::number_theory::{is_prime, prime_divisors, prime_power};

/// Order statistics of a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumInfo {
    /// Set of element orders.
    pub pi_e: BTreeSet<u64>,
    /// Elements of `pi_e` that are maximal under divisibility.
    pub mu: BTreeSet<u64>,
    /// Number of elements of each order.
    pub s: BTreeMap<u64, u64>,
    /// Primes dividing the group order.
    pub pi: BTreeSet<u64>,
    pub group_order: u64,
}

impl SpectrumInfo {
    pub fn of(g: &Group) -> Self {
        let mut s = BTreeMap::new();
        for &o in g.element_orders() {
            *s.entry(o as u64).or_insert(0u64) += 1;
        }
        Self::from_counts(g.order() as u64, s)
    }

    /// Builds the derived sets from per-order counts.
    pub fn from_counts(group_order: u64, s: BTreeMap<u64, u64>) -> Self {
        let pi_e: BTreeSet<u64> = s.keys().copied().collect();
        let mu = pi_e
            .iter()
            .copied()
            .filter(|&m| !pi_e.iter().any(|&n| n != m && n % m == 0))
            .collect();
        let pi = prime_divisors(group_order.max(1))
            .unwrap_or_default()
            .into_iter()
            .collect();
        SpectrumInfo {
            pi_e,
            mu,
            s,
            pi,
            group_order,
        }
    }

    pub fn count(&self, order: u64) -> u64 {
        self.s.get(&order).copied().unwrap_or(0)
    }

    pub fn max_order(&self) -> u64 {
        self.pi_e.iter().next_back().copied().unwrap_or(1)
    }

    pub fn is_eppo(&self) -> bool {
        self.pi_e
            .iter()
            .filter(|&&n| n > 1)
            .all(|&n| prime_power(n).is_some())
    }

    pub fn is_epo(&self) -> bool {
        self.pi_e.iter().filter(|&&n| n > 1).all(|&n| is_prime(n))
    }

    /// `pi_e` is contained in `allowed`.
    pub fn within(&self, allowed: &[u64]) -> bool {
        self.pi_e.iter().all(|n| allowed.contains(n))
    }
}
