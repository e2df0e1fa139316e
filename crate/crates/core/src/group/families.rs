//! Constructors for the concrete group families.

use std::collections::HashMap;

use super::perm::Permutation;
use super::{Group, GroupError, Result, MAX_GROUP_ORDER};
use crate::number_theory::is_prime;

fn check_cap(order: usize) -> Result<()> {
    if order > MAX_GROUP_ORDER {
        Err(GroupError::CapExceeded(order))
    } else {
        Ok(())
    }
}

fn tabulate(order: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<u32> {
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(mul(a, b) as u32);
        }
    }
    table
}

/// The cyclic group `Z_n` under addition mod `n`.
pub fn build_cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(GroupError::InvalidParameter(
            "cyclic group order must be >= 1".into(),
        ));
    }
    check_cap(n)?;
    Ok(Group::from_table(
        format!("Z{n}"),
        n,
        tabulate(n, |a, b| (a + b) % n),
    ))
}

/// `(Z_p)^k`, elements encoded as base-`p` digit vectors.
pub fn build_elementary_abelian(p: usize, k: u32) -> Result<Group> {
    if !is_prime(p as u64) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(GroupError::InvalidParameter("rank must be >= 1".into()));
    }
    let order = (p as u64)
        .checked_pow(k)
        .filter(|&o| o <= MAX_GROUP_ORDER as u64)
        .ok_or(GroupError::CapExceeded(usize::MAX))? as usize;
    let add = |mut a: usize, mut b: usize| {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..k {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    };
    Ok(Group::from_table(
        format!("Z{p}^{k}"),
        order,
        tabulate(order, add),
    ))
}

/// The generalized quaternion group `Q_{4m} = <x, y | x^{2m} = 1, y^2 = x^m, x^y = x^{-1}>`.
///
/// `x^i y^j` is stored at index `2i + j`.
pub fn build_generalized_quaternion(m: usize) -> Result<Group> {
    if m < 2 {
        return Err(GroupError::InvalidParameter("Q_4m needs m >= 2".into()));
    }
    let order = 4 * m;
    check_cap(order)?;
    let n2 = 2 * m;
    let mul = |a: usize, b: usize| {
        let (i, j) = (a / 2, a % 2);
        let (k, l) = (b / 2, b % 2);
        // y x^k = x^{-k} y, y^2 = x^m
        let (mut e, f) = if j == 0 {
            (i + k, l)
        } else {
            (i + n2 - k, 1 + l)
        };
        let f = if f == 2 {
            e += m;
            0
        } else {
            f
        };
        e %= n2;
        2 * e + f
    };
    Ok(Group::from_table(
        format!("Q{order}"),
        order,
        tabulate(order, mul),
    ))
}

/// The dihedral group of order `2m`; rotation `r^i` is index `i`, reflection
/// `r^i s` is index `m + i`.
pub fn build_dihedral(m: usize) -> Result<Group> {
    if m < 3 {
        return Err(GroupError::InvalidParameter(
            "dihedral group needs m >= 3".into(),
        ));
    }
    let order = 2 * m;
    check_cap(order)?;
    let mul = |a: usize, b: usize| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        // s r^k = r^{-k} s
        let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
        rot + m * ((j + l) % 2)
    };
    Ok(Group::from_table(
        format!("D{order}"),
        order,
        tabulate(order, mul),
    ))
}

/// The Heisenberg group mod an odd prime `p`: triples `(a, b, c)` with
/// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
pub fn build_heisenberg(p: usize) -> Result<Group> {
    if p == 2 || !is_prime(p as u64) {
        return Err(GroupError::InvalidParameter(format!(
            "Heisenberg group needs an odd prime, got {p}"
        )));
    }
    let order = p * p * p;
    check_cap(order)?;
    let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
    let mul = |x: usize, y: usize| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        let na = (a + a2) % p;
        let nb = (b + b2) % p;
        let nc = (c + c2 + a * b2) % p;
        na * p * p + nb * p + nc
    };
    Ok(Group::from_table(
        format!("Heis({p})"),
        order,
        tabulate(order, mul),
    ))
}

/// Closure of a set of permutations under composition.
///
/// Elements are numbered in breadth-first discovery order, identity first.
pub fn build_from_permutations(
    label: impl Into<String>,
    generators: &[Permutation],
) -> Result<Group> {
    let degree = generators.first().map_or(0, Permutation::degree);
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(GroupError::DomainMismatch(degree, g.degree()));
    }
    let identity = Permutation::identity(degree);
    let mut index: HashMap<Permutation, u32> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in generators {
            let next = current.then(g);
            if !index.contains_key(&next) {
                if elements.len() == MAX_GROUP_ORDER {
                    return Err(GroupError::CapExceeded(MAX_GROUP_ORDER + 1));
                }
                index.insert(next.clone(), elements.len() as u32);
                elements.push(next);
            }
        }
    }
    let order = elements.len();
    let mut table = Vec::with_capacity(order * order);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.then(b)]);
        }
    }
    Ok(Group::from_table(label, order, table))
}

/// The symmetric group on `d` points, generated by `(0 1)` and `(0 1 .. d-1)`.
pub fn symmetric(d: usize) -> Result<Group> {
    if d == 0 {
        return Err(GroupError::InvalidParameter("degree must be >= 1".into()));
    }
    let mut gens = Vec::new();
    if d >= 2 {
        gens.push(Permutation::from_cycles(d, &[vec![0, 1]])?);
        gens.push(Permutation::from_cycles(d, &[(0..d as u32).collect()])?);
    }
    build_from_permutations(format!("S{d}"), &gens)
}

/// The alternating group on `d` points.
pub fn alternating(d: usize) -> Result<Group> {
    if d == 0 {
        return Err(GroupError::InvalidParameter("degree must be >= 1".into()));
    }
    let mut gens = Vec::new();
    if d >= 3 {
        gens.push(Permutation::from_cycles(d, &[vec![0, 1, 2]])?);
        let long: Vec<u32> = if d % 2 == 1 {
            (0..d as u32).collect()
        } else {
            (1..d as u32).collect()
        };
        gens.push(Permutation::from_cycles(d, &[long])?);
    }
    build_from_permutations(format!("A{d}"), &gens)
}

/// `G x H` with componentwise multiplication; `(a, b)` is index `a|H| + b`.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    let order = g
        .order()
        .checked_mul(h.order())
        .ok_or(GroupError::CapExceeded(usize::MAX))?;
    check_cap(order)?;
    let hn = h.order();
    let mul = |x: usize, y: usize| {
        let a = g.mul((x / hn) as u32, (y / hn) as u32) as usize;
        let b = h.mul((x % hn) as u32, (y % hn) as u32) as usize;
        a * hn + b
    };
    Ok(Group::from_table(
        format!("{} x {}", g.label(), h.label()),
        order,
        tabulate(order, mul),
    ))
}
