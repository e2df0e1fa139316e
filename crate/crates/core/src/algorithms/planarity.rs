use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::connected_components;
use crate::graph::{GraphError, UndirectedGraph};

/// Largest vertex count accepted by [`is_planar`].
pub const PLANARITY_LIMIT: usize = 10_000;

/// Combinatorial embedding: the cyclic order of neighbours around each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    rotation: Vec<Vec<u32>>,
}

impl Embedding {
    pub fn rotation(&self, v: u32) -> &[u32] {
        &self.rotation[v as usize]
    }

    /// Face boundaries traced from the rotation system.
    pub fn faces(&self) -> Vec<Vec<u32>> {
        let position: HashMap<(u32, u32), usize> = self
            .rotation
            .iter()
            .enumerate()
            .flat_map(|(v, list)| {
                list.iter()
                    .enumerate()
                    .map(move |(i, &u)| ((v as u32, u), i))
            })
            .collect();
        let mut seen: HashSet<(u32, u32)> = HashSet::new();
        let mut faces = Vec::new();
        for (u, list) in self.rotation.iter().enumerate() {
            for &v in list {
                let mut dart = (u as u32, v);
                if seen.contains(&dart) {
                    continue;
                }
                let mut face = Vec::new();
                while seen.insert(dart) {
                    face.push(dart.0);
                    let (x, y) = dart;
                    let around = &self.rotation[y as usize];
                    let next = around[(position[&(y, x)] + 1) % around.len()];
                    dart = (y, next);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// The rotations list exactly the neighbours of each vertex and every
    /// component satisfies `v − e + f = 2`.
    pub fn is_valid_for(&self, graph: &UndirectedGraph) -> bool {
        if self.rotation.len() != graph.vertex_count() {
            return false;
        }
        for (v, list) in self.rotation.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v as u32) {
                return false;
            }
        }
        let faces = self.faces();
        let components = connected_components(graph);
        let mut component_of = vec![0usize; graph.vertex_count()];
        for (i, comp) in components.iter().enumerate() {
            for &v in comp {
                component_of[v as usize] = i;
            }
        }
        let mut face_count = vec![0i64; components.len()];
        for face in &faces {
            face_count[component_of[face[0] as usize]] += 1;
        }
        components.iter().enumerate().all(|(i, comp)| {
            let v = comp.len() as i64;
            let e: i64 = comp.iter().map(|&x| graph.degree(x) as i64).sum::<i64>() / 2;
            v - e + face_count[i].max(1) == 2
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Kuratowski {
    K5,
    #[serde(rename = "K3,3")]
    K33,
}

/// A subdivision of `K5` or `K3,3` inside a graph.
///
/// Paths run between branch vertices, endpoints included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: Kuratowski,
    pub branch_vertices: Vec<u32>,
    pub paths: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Decides planarity, with an embedding or a Kuratowski subdivision as proof.
pub fn is_planar(graph: &UndirectedGraph) -> Result<Planarity, GraphError> {
    let n = graph.vertex_count();
    if n > PLANARITY_LIMIT {
        return Err(GraphError::TooLarge(n, PLANARITY_LIMIT));
    }
    let adj: Vec<Vec<u32>> = (0..n as u32).map(|v| graph.neighbors(v).to_vec()).collect();
    Ok(match embed(&adj) {
        Some(rotation) => Planarity::Planar(Embedding { rotation }),
        None => Planarity::NonPlanar(kuratowski_witness(&adj)),
    })
}

/// Checks a claimed subdivision against the graph: disjoint internal paths,
/// existing edges and the right pattern of connected branch pairs.
pub fn verify_kuratowski(graph: &UndirectedGraph, witness: &KuratowskiWitness) -> bool {
    let n = graph.vertex_count() as u32;
    let branch: HashSet<u32> = witness.branch_vertices.iter().copied().collect();
    let (branches, paths) = match witness.kind {
        Kuratowski::K5 => (5, 10),
        Kuratowski::K33 => (6, 9),
    };
    if branch.len() != branches
        || witness.branch_vertices.len() != branches
        || witness.paths.len() != paths
        || branch.iter().any(|&v| v >= n)
    {
        return false;
    }
    let mut interior_used: HashSet<u32> = HashSet::new();
    let mut pairs: HashSet<(u32, u32)> = HashSet::new();
    for path in &witness.paths {
        if path.len() < 2 || path.iter().any(|&v| v >= n) {
            return false;
        }
        let (s, t) = (path[0], path[path.len() - 1]);
        if s == t || !branch.contains(&s) || !branch.contains(&t) {
            return false;
        }
        if !path.windows(2).all(|w| graph.has_edge(w[0], w[1])) {
            return false;
        }
        for &v in &path[1..path.len() - 1] {
            if branch.contains(&v) || !interior_used.insert(v) {
                return false;
            }
        }
        if !pairs.insert((s.min(t), s.max(t))) {
            return false;
        }
    }
    match witness.kind {
        Kuratowski::K5 => true,
        Kuratowski::K33 => {
            let mut side: HashMap<u32, bool> = HashMap::new();
            let mut stack = vec![witness.branch_vertices[0]];
            side.insert(witness.branch_vertices[0], false);
            while let Some(v) = stack.pop() {
                for &(a, b) in &pairs {
                    let other = match (a == v, b == v) {
                        (true, _) => b,
                        (_, true) => a,
                        _ => continue,
                    };
                    match side.get(&other) {
                        Some(&s) if s == side[&v] => return false,
                        Some(_) => {}
                        None => {
                            side.insert(other, !side[&v]);
                            stack.push(other);
                        }
                    }
                }
            }
            side.len() == 6 && side.values().filter(|&&s| s).count() == 3
        }
    }
}

fn edge_total(adj: &[Vec<u32>]) -> usize {
    adj.iter().map(Vec::len).sum::<usize>() / 2
}

/// Rotation system of a planar embedding, or `None` if none exists.
fn embed(adj: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = adj.len();
    let active = adj.iter().filter(|l| !l.is_empty()).count();
    if active >= 3 && edge_total(adj) > 3 * active - 6 {
        return None;
    }
    let mut rotation = vec![Vec::new(); n];
    for block in biconnected_blocks(adj) {
        if let [(u, v)] = block[..] {
            rotation[u as usize].push(v);
            rotation[v as usize].push(u);
            continue;
        }
        let mut verts: Vec<u32> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        if block.len() > 3 * verts.len() - 6 {
            return None;
        }
        let local: HashMap<u32, u32> = verts
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        let mut ladj = vec![Vec::new(); verts.len()];
        for &(u, v) in &block {
            let (a, b) = (local[&u], local[&v]);
            ladj[a as usize].push(b);
            ladj[b as usize].push(a);
        }
        for list in &mut ladj {
            list.sort_unstable();
        }
        let faces = embed_biconnected(&ladj)?;
        for (i, list) in rotation_from_faces(&ladj, &faces).into_iter().enumerate() {
            rotation[verts[i] as usize].extend(list.into_iter().map(|x| verts[x as usize]));
        }
    }
    Some(rotation)
}

/// Edge sets of the biconnected components.
fn biconnected_blocks(adj: &[Vec<u32>]) -> Vec<Vec<(u32, u32)>> {
    const UNSEEN: u32 = u32::MAX;
    let n = adj.len();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut blocks = Vec::new();
    let mut stack: Vec<(u32, u32, usize)> = Vec::new();
    for root in 0..n as u32 {
        if disc[root as usize] != UNSEEN {
            continue;
        }
        disc[root as usize] = time;
        low[root as usize] = time;
        time += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, i) = *frame;
            if i < adj[v as usize].len() {
                frame.2 += 1;
                let w = adj[v as usize][i];
                if w == parent {
                    continue;
                }
                if disc[w as usize] == UNSEEN {
                    edges.push((v, w));
                    disc[w as usize] = time;
                    low[w as usize] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w as usize] < disc[v as usize] {
                    edges.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                    if low[v as usize] >= disc[parent as usize] {
                        let mut block = Vec::new();
                        while let Some(e) = edges.pop() {
                            block.push(e);
                            if e == (parent, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

fn find_cycle(adj: &[Vec<u32>]) -> Vec<u32> {
    let n = adj.len();
    let mut parent = vec![u32::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut stack = vec![(0u32, 0usize)];
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if top.1 < adj[v as usize].len() {
            let w = adj[v as usize][top.1];
            top.1 += 1;
            if depth[w as usize] == usize::MAX {
                depth[w as usize] = depth[v as usize] + 1;
                parent[w as usize] = v;
                stack.push((w, 0));
            } else if w != parent[v as usize] && depth[w as usize] < depth[v as usize] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x as usize];
                    cycle.push(x);
                }
                return cycle;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("biconnected blocks with three or more vertices contain a cycle")
}

struct Fragment {
    attachments: Vec<u32>,
    /// Interior vertices; empty for a single chord.
    interior: Vec<u32>,
}

fn fragments(adj: &[Vec<u32>], in_h: &[bool], h_edges: &HashSet<(u32, u32)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n as u32 {
        if !in_h[u as usize] {
            continue;
        }
        for &v in &adj[u as usize] {
            if u < v && in_h[v as usize] && !h_edges.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    interior: Vec::new(),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if in_h[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        let mut interior = vec![start as u32];
        let mut attachments = Vec::new();
        let mut head = 0;
        while head < interior.len() {
            let v = interior[head];
            head += 1;
            for &w in &adj[v as usize] {
                if in_h[w as usize] {
                    attachments.push(w);
                } else if !seen[w as usize] {
                    seen[w as usize] = true;
                    interior.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            interior,
        });
    }
    out
}

/// Path through a fragment between two distinct attachments.
fn fragment_path(adj: &[Vec<u32>], in_h: &[bool], frag: &Fragment) -> Vec<u32> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let a1 = frag.attachments[0];
    let mut parent: HashMap<u32, u32> = HashMap::new();
    let mut queue: Vec<u32> = Vec::new();
    for &w in &adj[a1 as usize] {
        if !in_h[w as usize] && frag.interior.contains(&w) {
            parent.insert(w, a1);
            queue.push(w);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        if let Some(&a2) = adj[x as usize]
            .iter()
            .find(|&&y| in_h[y as usize] && y != a1)
        {
            let mut path = vec![a2, x];
            let mut cur = x;
            while let Some(&p) = parent.get(&cur) {
                path.push(p);
                if p == a1 {
                    break;
                }
                cur = p;
            }
            path.reverse();
            return path;
        }
        for &y in &adj[x as usize] {
            if !in_h[y as usize] && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push(y);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

/// Path-addition embedding of a biconnected graph; returns oriented faces.
fn embed_biconnected(adj: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = adj.len();
    let total = edge_total(adj);
    let cycle = find_cycle(adj);
    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(u32, u32)> = HashSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v as usize] = true;
        let w = cycle[(i + 1) % cycle.len()];
        h_edges.insert((v.min(w), v.max(w)));
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces = vec![cycle, reversed];
    while h_edges.len() < total {
        let frags = fragments(adj, &in_h, &h_edges);
        let face_sets: Vec<FixedBitSet> = faces
            .iter()
            .map(|f| {
                let mut set = FixedBitSet::with_capacity(n);
                f.iter().for_each(|&v| set.insert(v as usize));
                set
            })
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|&a| face_sets[f][a as usize]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = choice.expect("unembedded edges form a fragment");
        let path = fragment_path(adj, &in_h, &frags[fi]);
        let face = &faces[face_index];
        let len = face.len();
        let a1 = path[0];
        let a2 = path[path.len() - 1];
        let i1 = face
            .iter()
            .position(|&v| v == a1)
            .expect("attachment on face");
        let i2 = face
            .iter()
            .position(|&v| v == a2)
            .expect("attachment on face");
        let arc = |from: usize, to: usize| -> Vec<u32> {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % len;
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut first = arc(i1, i2);
        first.extend(interior.iter().rev());
        let mut second = arc(i2, i1);
        second.extend(interior.iter());
        faces[face_index] = first;
        faces.push(second);
        for w in path.windows(2) {
            in_h[w[0] as usize] = true;
            in_h[w[1] as usize] = true;
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Some(faces)
}

fn rotation_from_faces(adj: &[Vec<u32>], faces: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut next: HashMap<(u32, u32), u32> = HashMap::new();
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let (u, v, w) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            next.insert((v, u), w);
        }
    }
    adj.iter()
        .enumerate()
        .map(|(v, list)| {
            let v = v as u32;
            let Some(&start) = list.first() else {
                return Vec::new();
            };
            let mut out = vec![start];
            let mut cur = next[&(v, start)];
            while cur != start && out.len() <= list.len() {
                out.push(cur);
                cur = next[&(v, cur)];
            }
            out
        })
        .collect()
}

fn adjacency(n: usize, edges: &[(u32, u32)], active: &[bool]) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); n];
    for (&(u, v), _) in edges.iter().zip(active).filter(|(_, &a)| a) {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// Shrinks a non-planar graph to an edge-minimal non-planar subgraph, which is
/// a subdivision of `K5` or `K3,3`, and reads off its branch vertices.
fn kuratowski_witness(adj: &[Vec<u32>]) -> KuratowskiWitness {
    let n = adj.len();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&v| (Reverse(adj[v as usize].len()), v));

    let all_edges: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| {
            adj[u as usize]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
        .collect();
    let induced_edges = |keep: &[bool]| -> Vec<(u32, u32)> {
        all_edges
            .iter()
            .copied()
            .filter(|&(u, v)| keep[u as usize] && keep[v as usize])
            .collect()
    };
    let nonplanar =
        |edges: &[(u32, u32)], active: &[bool]| embed(&adjacency(n, edges, active)).is_none();
    let prefix_nonplanar = |k: usize| {
        let mut keep = vec![false; n];
        order[..k].iter().for_each(|&v| keep[v as usize] = true);
        let edges = induced_edges(&keep);
        nonplanar(&edges, &vec![true; edges.len()])
    };

    // nonplanarity is monotone in the prefix length
    let (mut lo, mut hi) = (0usize, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if prefix_nonplanar(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut keep = vec![false; n];
    order[..lo].iter().for_each(|&v| keep[v as usize] = true);
    for &v in order[..lo].iter().rev() {
        keep[v as usize] = false;
        let edges = induced_edges(&keep);
        if !nonplanar(&edges, &vec![true; edges.len()]) {
            keep[v as usize] = true;
        }
    }
    let edges = induced_edges(&keep);
    let mut active = vec![true; edges.len()];
    for i in (0..edges.len()).rev() {
        active[i] = false;
        if !nonplanar(&edges, &active) {
            active[i] = true;
        }
    }
    let minimal = adjacency(n, &edges, &active);

    let branch_vertices: Vec<u32> = (0..n as u32)
        .filter(|&v| minimal[v as usize].len() >= 3)
        .collect();
    let mut paths = Vec::new();
    for &b in &branch_vertices {
        for &first in &minimal[b as usize] {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while minimal[cur as usize].len() == 2 {
                let next = minimal[cur as usize]
                    .iter()
                    .copied()
                    .find(|&w| w != prev)
                    .expect("degree two");
                path.push(next);
                prev = cur;
                cur = next;
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();
    let kind = if branch_vertices.len() == 5 {
        Kuratowski::K5
    } else {
        Kuratowski::K33
    };
    KuratowskiWitness {
        kind,
        branch_vertices,
        paths,
    }
}
