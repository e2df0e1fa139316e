use std::collections::HashMap;

use crate::graph::{GraphError, UndirectedGraph};

/// Largest vertex count accepted by [`are_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 256;

/// Searches for an isomorphism from `a` onto `b`.
///
/// Returns `map` with `map[v]` the image of vertex `v` of `a`. Colour
/// refinement runs on the disjoint union of both graphs; ties are broken by
/// individualizing a vertex of `a` against each candidate in `b`.
pub fn are_isomorphic(
    a: &UndirectedGraph,
    b: &UndirectedGraph,
) -> Result<Option<Vec<u32>>, GraphError> {
    for g in [a, b] {
        if g.vertex_count() > ISOMORPHISM_LIMIT {
            return Err(GraphError::TooLarge(g.vertex_count(), ISOMORPHISM_LIMIT));
        }
    }
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    let union = Union { a, b };
    let colors = vec![0u32; 2 * a.vertex_count()];
    Ok(union.search(colors))
}

/// Checks that `map` is a bijection carrying edges onto edges both ways.
pub fn verify_isomorphism(a: &UndirectedGraph, b: &UndirectedGraph, map: &[u32]) -> bool {
    let n = a.vertex_count();
    if b.vertex_count() != n || map.len() != n || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m as usize >= n || hit[m as usize] {
            return false;
        }
        hit[m as usize] = true;
    }
    a.edges()
        .all(|(u, v)| b.has_edge(map[u as usize], map[v as usize]))
}

struct Union<'g> {
    a: &'g UndirectedGraph,
    b: &'g UndirectedGraph,
}

impl Union<'_> {
    fn half(&self) -> usize {
        self.a.vertex_count()
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.half();
        let (list, offset) = if v < n {
            (self.a.neighbors(v as u32), 0)
        } else {
            (self.b.neighbors((v - n) as u32), n)
        };
        list.iter().map(move |&w| w as usize + offset)
    }

    /// Refines until stable; `None` when the halves get different colour counts.
    fn refine(&self, mut colors: Vec<u32>) -> Option<Vec<u32>> {
        let total = colors.len();
        let mut classes = count_classes(&colors);
        loop {
            let signatures: Vec<(u32, Vec<u32>)> = (0..total)
                .map(|v| {
                    let mut around: Vec<u32> = self.neighbors(v).map(|w| colors[w]).collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
            distinct.sort();
            distinct.dedup();
            let rank: HashMap<&(u32, Vec<u32>), u32> = distinct
                .iter()
                .enumerate()
                .map(|(i, s)| (*s, i as u32))
                .collect();
            colors = signatures.iter().map(|s| rank[s]).collect();
            if !self.balanced(&colors) {
                return None;
            }
            let refined = distinct.len();
            if refined == classes {
                return Some(colors);
            }
            classes = refined;
        }
    }

    fn balanced(&self, colors: &[u32]) -> bool {
        let n = self.half();
        let mut counts: HashMap<u32, i64> = HashMap::new();
        for (v, &c) in colors.iter().enumerate() {
            *counts.entry(c).or_default() += if v < n { 1 } else { -1 };
        }
        counts.values().all(|&c| c == 0)
    }

    fn search(&self, colors: Vec<u32>) -> Option<Vec<u32>> {
        let colors = self.refine(colors)?;
        let n = self.half();
        let mut members: HashMap<u32, Vec<usize>> = HashMap::new();
        for (v, &c) in colors.iter().enumerate().take(n) {
            members.entry(c).or_default().push(v);
        }
        let target = members
            .iter()
            .filter(|(_, vs)| vs.len() > 1)
            .min_by_key(|(&c, vs)| (vs.len(), c))
            .map(|(&c, vs)| (c, vs[0]));
        let Some((color, v)) = target else {
            let mut map = vec![0u32; n];
            for w in n..2 * n {
                let u = members[&colors[w]][0];
                map[u] = (w - n) as u32;
            }
            return verify_isomorphism(self.a, self.b, &map).then_some(map);
        };
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        let mut tried: Vec<usize> = Vec::new();
        for w in n..2 * n {
            if colors[w] != color || tried.iter().any(|&t| self.twins(t, w)) {
                continue;
            }
            tried.push(w);
            let mut next = colors.clone();
            next[v] = fresh;
            next[w] = fresh;
            if let Some(map) = self.search(next) {
                return Some(map);
            }
        }
        None
    }

    /// Vertices of `b` with the same neighbours apart from each other; mapping
    /// onto one succeeds exactly when mapping onto the other does.
    fn twins(&self, x: usize, y: usize) -> bool {
        let n = self.half();
        let (x, y) = ((x - n) as u32, (y - n) as u32);
        let strip = |v: u32, other: u32| -> Vec<u32> {
            self.b
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| w != other)
                .collect()
        };
        strip(x, y) == strip(y, x)
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::group::{build_cyclic, build_elementary_abelian, build_heisenberg, symmetric};
    use crate::power_graph::build_punctured;

    fn permuted(g: &UndirectedGraph, perm: &[u32]) -> UndirectedGraph {
        UndirectedGraph::from_edges(
            g.vertex_count(),
            g.edges().map(|(u, v)| (perm[u as usize], perm[v as usize])),
        )
    }

    #[test]
    fn finds_hidden_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [
            build_punctured(&symmetric(4).unwrap()),
            build_punctured(&build_cyclic(12).unwrap()),
            build_punctured(&build_heisenberg(3).unwrap()),
        ] {
            let mut perm: Vec<u32> = (0..g.vertex_count() as u32).collect();
            perm.shuffle(&mut rng);
            let h = permuted(&g, &perm);
            let map = are_isomorphic(&g, &h).unwrap().expect("isomorphic");
            assert!(verify_isomorphism(&g, &h, &map));
        }
    }

    #[test]
    fn order_27_pair_is_isomorphic() {
        let e = build_punctured(&build_elementary_abelian(3, 3).unwrap());
        let h = build_punctured(&build_heisenberg(3).unwrap());
        let map = are_isomorphic(&e, &h).unwrap().unwrap();
        assert!(verify_isomorphism(&e, &h, &map));
    }

    #[test]
    fn distinguishes_regular_graphs() {
        // C6 and two triangles: same degree sequence, not isomorphic
        let c6 = UndirectedGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)));
        let two = UndirectedGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(are_isomorphic(&c6, &two).unwrap(), None);
        assert_eq!(are_isomorphic(&c6, &c6).unwrap().map(|m| m.len()), Some(6));

        let z8 = build_punctured(&build_cyclic(8).unwrap());
        let z9 = build_punctured(&build_cyclic(9).unwrap());
        assert_eq!(are_isomorphic(&z8, &z9).unwrap(), None);
    }

    #[test]
    fn rejects_large_graphs() {
        let big = UndirectedGraph::from_edges(ISOMORPHISM_LIMIT + 1, []);
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(GraphError::TooLarge(..))
        ));
    }

    #[test]
    fn verify_rejects_bad_maps() {
        let p = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert!(verify_isomorphism(&p, &p, &[2, 1, 0]));
        assert!(!verify_isomorphism(&p, &p, &[1, 0, 2]));
        assert!(!verify_isomorphism(&p, &p, &[0, 0, 2]));
    }
}
