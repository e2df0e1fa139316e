//! Integer helpers used by the degree and edge-count formulas.
//!
//! Everything here works on exact `u64` arithmetic. Operations that can
//! overflow report it through [`NumberTheoryError::Overflow`] instead of
//! wrapping.

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberTheoryError {
    #[error("argument must be positive")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("moduli {a} and {b} share the factor {gcd}")]
    NotCoprime { a: u64, b: u64, gcd: u64 },
    #[error("empty congruence system")]
    EmptySystem,
    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, NumberTheoryError>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factorize(mut n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(NumberTheoryError::Zero);
    }
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// The set of primes dividing `n`.
pub fn prime_divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.into_iter().map(|(p, _)| p).collect())
}

/// Returns `Some((p, k))` when `n = p^k` with `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).ok()?.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let mut phi = n;
    for (p, _) in factorize(n)? {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(NumberTheoryError::Zero);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// A system `x ≡ r_i (mod m_i)` with pairwise coprime moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSystem {
    congruences: Vec<(u64, u64)>,
}

impl CongruenceSystem {
    /// Builds the system, reducing residues and checking that the moduli are
    /// positive and pairwise coprime.
    pub fn new(congruences: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let congruences: Vec<(u64, u64)> = congruences.into_iter().collect();
        if congruences.is_empty() {
            return Err(NumberTheoryError::EmptySystem);
        }
        for (i, &(_, a)) in congruences.iter().enumerate() {
            if a == 0 {
                return Err(NumberTheoryError::Zero);
            }
            for &(_, b) in &congruences[i + 1..] {
                let g = a.gcd(&b);
                if g != 1 {
                    return Err(NumberTheoryError::NotCoprime { a, b, gcd: g });
                }
            }
        }
        let congruences = congruences.into_iter().map(|(r, m)| (r % m, m)).collect();
        Ok(Self { congruences })
    }

    pub fn congruences(&self) -> &[(u64, u64)] {
        &self.congruences
    }
}

/// Solves the system, returning `(x, M)` with `0 <= x < M` and `M` the
/// product of the moduli.
pub fn crt_solve(system: &CongruenceSystem) -> Result<(u64, u64)> {
    let (mut x, mut modulus) = (0u128, 1u128);
    for &(r, m) in system.congruences() {
        let m = m as u128;
        // x + modulus * t ≡ r (mod m)
        let inv = mod_inverse((modulus % m) as i128, m as i128)
            .ok_or(NumberTheoryError::Overflow("crt_solve"))? as u128;
        let diff = (r as u128 + m - x % m) % m;
        let t = diff * inv % m;
        x += modulus * t;
        modulus = modulus
            .checked_mul(m)
            .filter(|&v| v <= u64::MAX as u128)
            .ok_or(NumberTheoryError::Overflow("crt_solve"))?;
    }
    Ok((x as u64, modulus as u64))
}

fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    if m == 1 {
        return Some(0);
    }
    let ext = a.extended_gcd(&m);
    (ext.gcd == 1).then(|| ext.x.rem_euclid(m))
}

/// Both sides of `Σ_{i=1..n} φ(p^i)(2p^i − φ(p^i) − 3) = 2·C(p^n − 1, 2)`.
///
/// The caller compares the two values; nothing here assumes they agree.
pub fn phi_identity_sides(p: u64, n: u32) -> Result<(u64, u64)> {
    const WHAT: &str = "phi_identity_sides";
    if !is_prime(p) {
        return Err(NumberTheoryError::NotPrime(p));
    }
    if n == 0 {
        return Err(NumberTheoryError::Zero);
    }
    let overflow = || NumberTheoryError::Overflow(WHAT);
    let mut lhs = 0u64;
    let mut pi = 1u64;
    for _ in 0..n {
        pi = pi.checked_mul(p).ok_or_else(overflow)?;
        let phi = euler_phi(pi)?;
        // 2p^i − φ(p^i) − 3 is never negative for a prime p.
        let factor = pi
            .checked_mul(2)
            .and_then(|v| v.checked_sub(phi))
            .and_then(|v| v.checked_sub(3))
            .ok_or_else(overflow)?;
        lhs = phi
            .checked_mul(factor)
            .and_then(|t| lhs.checked_add(t))
            .ok_or_else(overflow)?;
    }
    let m = pi - 1;
    // 2·C(m, 2) = m(m − 1)
    let rhs = m.checked_mul(m.saturating_sub(1)).ok_or_else(overflow)?;
    Ok((lhs, rhs))
}
