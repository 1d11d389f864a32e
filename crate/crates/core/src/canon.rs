//! Canonical labeling by exhaustive search over an individualization-refinement
//! tree.
//!
//! Each node of the search tree is an ordered partition of the vertices that is
//! equitable (every vertex of a cell has the same number of neighbors in every
//! other cell). Leaves are discrete partitions, read as labelings; the canonical
//! form is the largest adjacency code over all leaves. Two prunings keep the tree
//! small: twin vertices in a target cell are explored once, and so are vertices in
//! the same orbit of automorphisms already discovered that fix the current
//! individualized prefix.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::io::to_graph6;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Label-invariant encoding: equal byte strings iff the graphs are isomorphic.
///
/// The bytes are the graph6 encoding of the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(to_graph6(&canonical_graph(g)?).into_bytes())
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let perm = canonical_labeling(g)?;
    Ok(g.relabel(&perm))
}

/// Permutation `perm` with `perm[v]` the canonical label of `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<Vertex>> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::CapExceeded {
            what: "canonical form",
            order: n,
            cap: MAX_CANONICAL_ORDER,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut search = Search {
        n,
        adj,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut root = vec![(0..n).collect::<Vec<_>>()];
    search.refine(&mut root);
    search.descend(root, &mut Vec::new());
    let (_, order) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        perm[v] = label;
    }
    Ok(perm)
}

/// Whether `a` and `b` are isomorphic.
pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

type Partition = Vec<Vec<Vertex>>;

struct Search {
    n: usize,
    adj: Vec<u32>,
    /// Best code so far and the vertex order that produced it.
    best: Option<(Vec<u32>, Vec<Vertex>)>,
    automorphisms: Vec<Vec<Vertex>>,
}

impl Search {
    /// Splits cells by neighbor counts into every cell until the partition is equitable.
    fn refine(&self, partition: &mut Partition) {
        loop {
            let masks: Vec<u32> = partition
                .iter()
                .map(|c| c.iter().fold(0u32, |m, &v| m | (1 << v)))
                .collect();
            let mut next: Partition = Vec::with_capacity(self.n);
            let mut changed = false;
            for cell in partition.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, Vertex)> = cell
                    .iter()
                    .map(|&v| {
                        let sig = masks
                            .iter()
                            .map(|&m| (self.adj[v] & m).count_ones())
                            .collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let start = next.len();
                let mut current: Vec<Vertex> = Vec::new();
                for i in 0..keyed.len() {
                    if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                        next.push(std::mem::take(&mut current));
                    }
                    current.push(keyed[i].1);
                }
                next.push(current);
                if next.len() - start > 1 {
                    changed = true;
                }
            }
            *partition = next;
            if !changed {
                return;
            }
        }
    }

    fn descend(&mut self, partition: Partition, prefix: &mut Vec<Vertex>) {
        let Some(target) = partition.iter().position(|c| c.len() > 1) else {
            self.visit_leaf(&partition);
            return;
        };
        let cell = partition[target].clone();
        let orbits = self.orbits_fixing(prefix);
        let mut explored: Vec<Vertex> = Vec::new();
        for &u in &cell {
            let redundant = explored
                .iter()
                .any(|&w| orbits[w] == orbits[u] || self.twins(u, w));
            if redundant {
                continue;
            }
            explored.push(u);
            let mut child = Vec::with_capacity(partition.len() + 1);
            child.extend_from_slice(&partition[..target]);
            child.push(vec![u]);
            child.push(cell.iter().copied().filter(|&w| w != u).collect());
            child.extend_from_slice(&partition[target + 1..]);
            self.refine(&mut child);
            prefix.push(u);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn twins(&self, u: Vertex, w: Vertex) -> bool {
        let strip = !((1u32 << u) | (1u32 << w));
        self.adj[u] & strip == self.adj[w] & strip
    }

    fn visit_leaf(&mut self, partition: &Partition) {
        let order: Vec<Vertex> = partition.iter().map(|c| c[0]).collect();
        let mut label = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i;
        }
        let code: Vec<u32> = order
            .iter()
            .map(|&v| {
                let mut row = 0u32;
                let mut bits = self.adj[v];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    row |= 1 << (31 - label[w]);
                }
                row
            })
            .collect();
        match &self.best {
            Some((best, best_order)) if *best == code => {
                let mut gamma = vec![0; self.n];
                for (a, b) in best_order.iter().zip(&order) {
                    gamma[*a] = *b;
                }
                if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                    self.automorphisms.push(gamma);
                }
            }
            Some((best, _)) if *best > code => {}
            _ => self.best = Some((code, order)),
        }
    }

    /// Orbit representatives under the discovered automorphisms fixing `prefix` pointwise.
    fn orbits_fixing(&self, prefix: &[Vertex]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for v in 0..self.n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn path_labelings_collapse() {
        for n in [3, 4, 5] {
            let forms: std::collections::BTreeSet<_> = permutations(n)
                .iter()
                .map(|p| canonical_form(&path(n).relabel(p)).unwrap())
                .collect();
            assert_eq!(forms.len(), 1);
        }
    }

    #[test]
    fn separates_star_and_path() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(
            canonical_form(&star).unwrap(),
            canonical_form(&path(4)).unwrap()
        );
        assert!(!isomorphic(&star, &path(4)).unwrap());
    }

    #[test]
    fn symmetric_graphs_are_fast_and_stable() {
        let k =
            Graph::from_edges(12, (0..12).flat_map(|i| (i + 1..12).map(move |j| (i, j)))).unwrap();
        assert_eq!(canonical_graph(&k).unwrap(), k);
        let empty = Graph::empty(12);
        assert_eq!(canonical_graph(&empty).unwrap(), empty);
        // Petersen graph: vertex-transitive, no twins.
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        let pet = Graph::from_edges(10, e).unwrap();
        let relabeled = pet.relabel(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert!(isomorphic(&pet, &relabeled).unwrap());
    }

    #[test]
    fn cap() {
        assert!(matches!(
            canonical_form(&Graph::empty(17)),
            Err(Error::CapExceeded { .. })
        ));
    }
}
