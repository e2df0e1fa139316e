use std::fmt;

use super::{GroupError, Result};

/// A permutation of `{0, .., d-1}` stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    /// Wraps an image vector, rejecting anything that is not a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for (i, &v) in images.iter().enumerate() {
            match seen.get_mut(v as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(GroupError::NotBijective(i)),
            }
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from disjoint cycles on a domain of `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(GroupError::InvalidParameter(format!(
                        "point {} outside domain of size {degree}",
                        a.max(b)
                    )));
                }
                if touched[a as usize] {
                    return Err(GroupError::NotBijective(a as usize));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.0[point as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    /// The same permutation acting on a larger domain, fixing the new points.
    pub fn extended(&self, degree: usize) -> Permutation {
        let mut images = self.0.clone();
        images.extend(self.0.len() as u32..degree.max(self.0.len()) as u32);
        Permutation(images)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut cur = self.0[start];
            while cur as usize != start {
                seen[cur as usize] = true;
                cycle.push(cur);
                cur = self.0[cur as usize];
            }
            let body: Vec<String> = cycle.iter().map(u32::to_string).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Parses cycle notation such as `"(0 1 2)(3 4)"`; commas are accepted as
/// separators. Returns the cycles and the smallest domain containing them.
pub fn parse_cycles(text: &str) -> Result<(Vec<Vec<u32>>, usize)> {
    let bad = |reason: &str| GroupError::InvalidParameter(format!("{reason} in {text:?}"));
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    let mut degree = 0usize;
    while !rest.is_empty() {
        rest = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let body = &rest[..close];
        let cycle = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u32>().map_err(|_| bad("bad point")))
            .collect::<Result<Vec<u32>>>()?;
        if let Some(&m) = cycle.iter().max() {
            degree = degree.max(m as usize + 1);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok((cycles, degree))
}
