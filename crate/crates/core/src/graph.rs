//! Simple undirected graphs on the vertex set `0..n` and the structural
//! queries used by the spectral and enumeration code.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Vertex identifier. Vertices of a graph of order `n` are exactly `0..n`.
pub type Vertex = usize;

/// Immutable simple undirected graph.
///
/// Edges are stored normalized as `(u, v)` with `u < v`, sorted; neighbor
/// lists are sorted as well, so two graphs with the same labeled edge set
/// compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(skip)]
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, repeated edges and labels outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted_set(n, set))
    }

    fn from_sorted_set(n: usize, set: BTreeSet<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.n,
            })
        }
    }

    fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges.iter().copied().collect()
    }

    /// Copy of this graph with `{u, v}` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut set = self.edge_set();
        if !set.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        Ok(Self::from_sorted_set(self.n, set))
    }

    /// Copy of this graph with `{u, v}` removed.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        let mut set = self.edge_set();
        if !set.remove(&(u.min(v), u.max(v))) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(Self::from_sorted_set(self.n, set))
    }

    /// Adds a new vertex (labeled `n`) adjacent to `v`.
    pub fn with_pendant(&self, v: Vertex) -> Result<Self> {
        self.check_vertex(v)?;
        let mut set = self.edge_set();
        set.insert((v, self.n));
        Ok(Self::from_sorted_set(self.n + 1, set))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let set = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Self::from_sorted_set(self.n, set)
    }

    /// Distances from `s` by breadth-first search; `None` for unreachable vertices.
    pub fn bfs_distances(&self, s: Vertex) -> Vec<Option<usize>> {
        self.bfs_avoiding(s, None)
    }

    fn bfs_avoiding(&self, s: Vertex, removed: Option<Vertex>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if Some(w) != removed && dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.size() + 1 == self.n && self.is_connected()
    }

    /// Connected with exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.size() == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Connected components of `self − v`, each sorted, ordered by smallest label.
    pub fn components_at(&self, v: Vertex) -> Result<ComponentDecomposition> {
        self.check_vertex(v)?;
        self.require_connected()?;
        let mut seen = vec![false; self.n];
        seen[v] = true;
        let mut components = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        Ok(ComponentDecomposition {
            base_vertex: v,
            components,
        })
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> Result<bool> {
        Ok(self.components_at(v)?.components.len() >= 2)
    }

    pub fn cut_vertices(&self) -> Result<Vec<Vertex>> {
        let mut out = Vec::new();
        for v in 0..self.n {
            if self.is_cut_vertex(v)? {
                out.push(v);
            }
        }
        Ok(out)
    }

    pub fn pendant_vertices(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn pendant_count(&self) -> usize {
        self.adj.iter().filter(|a| a.len() == 1).count()
    }

    pub fn diameter(&self) -> Result<usize> {
        self.require_connected()?;
        let mut best = 0;
        for s in 0..self.n {
            let far = self
                .bfs_distances(s)
                .into_iter()
                .map(|d| d.unwrap())
                .max()
                .unwrap_or(0);
            best = best.max(far);
        }
        Ok(best)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        // BFS from every root; a non-tree edge (u, w) closes a walk of length
        // d(u) + d(w) + 1 which is at least the girth, with equality attained
        // from some root on a shortest cycle.
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Whether edge `{u, v}` lies on no cycle.
    pub fn is_bridge(&self, u: Vertex, v: Vertex) -> Result<bool> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let g = self.without_edge(u, v)?;
        Ok(g.bfs_distances(u)[v].is_none())
    }

    /// Whether the induced subgraph on `vertices` is complete.
    pub fn induces_clique(&self, vertices: &[Vertex]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Attaches two new paths `v v_1 .. v_k` and `v u_1 .. u_l` at `v`.
    ///
    /// New vertices are labeled `n, n+1, ..` with the `v`-path first.
    pub fn attach_paths(&self, v: Vertex, k: usize, l: usize) -> Result<PathAttachment> {
        self.check_vertex(v)?;
        if k == 0 || l == 0 {
            return Err(Error::Domain(format!(
                "attached path lengths must be positive, got k={k}, l={l}"
            )));
        }
        let mut set = self.edge_set();
        let p: Vec<Vertex> = (self.n..self.n + k).collect();
        let q: Vec<Vertex> = (self.n + k..self.n + k + l).collect();
        for path in [&p, &q] {
            let mut prev = v;
            for &w in path.iter() {
                set.insert((prev.min(w), prev.max(w)));
                prev = w;
            }
        }
        Ok(PathAttachment {
            graph: Self::from_sorted_set(self.n + k + l, set),
            root: v,
            p,
            q,
        })
    }

    /// Attaches a single new path of `len` vertices at `v`.
    pub fn attach_path(&self, v: Vertex, len: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let mut set = self.edge_set();
        let mut prev = v;
        for w in self.n..self.n + len {
            set.insert((prev, w));
            prev = w;
        }
        Ok(Self::from_sorted_set(self.n + len, set))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// The connected components of `G − v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDecomposition {
    pub base_vertex: Vertex,
    /// Sorted vertex sets, ordered by smallest contained label.
    pub components: Vec<Vec<Vertex>>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Index of the component containing `w`, if any.
    pub fn component_of(&self, w: Vertex) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.binary_search(&w).is_ok())
    }
}

/// A graph `G_{k,l}` together with the identity of its two attached paths.
///
/// `p` lists `v_1 .. v_k` and `q` lists `u_1 .. u_l`, both ordered away from `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathAttachment {
    pub graph: Graph,
    pub root: Vertex,
    pub p: Vec<Vertex>,
    pub q: Vec<Vertex>,
}

impl PathAttachment {
    /// Moves the last edge of the `p` path to the end of the `q` path.
    ///
    /// Removes `{v_{k-1}, v_k}` (with `v_0 = root`) and adds `{u_l, v_k}`. The
    /// result is tagged as `G_{k-1,l+1}`, so grafting can be repeated.
    pub fn graft(&self) -> Result<PathAttachment> {
        let k = self.p.len();
        if k == 0 {
            return Err(Error::Domain("cannot graft: the p path is empty".into()));
        }
        let vk = self.p[k - 1];
        let before = if k >= 2 { self.p[k - 2] } else { self.root };
        let ul = self.q.last().copied().unwrap_or(self.root);
        for (a, b) in [(before, vk), (self.root, *self.p.first().unwrap())] {
            if !self.graph.has_edge(a, b) {
                return Err(Error::Domain(format!(
                    "path tags do not match the graph: {{{a}, {b}}} missing"
                )));
            }
        }
        let graph = self.graph.without_edge(before, vk)?.with_edge(ul, vk)?;
        let mut q = self.q.clone();
        q.push(vk);
        Ok(PathAttachment {
            graph,
            root: self.root,
            p: self.p[..k - 1].to_vec(),
            q,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        path(n).with_edge(0, n - 1).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::InvalidVertex { vertex: 3, .. })
        ));
    }

    #[test]
    fn components_of_small_graphs() {
        let p3 = path(3);
        let d = p3.components_at(1).unwrap();
        assert_eq!(d.components, vec![vec![0], vec![2]]);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.components_at(0).unwrap().components, vec![vec![1, 2, 3]]);
        // triangle 0,1,2 with pendant 3 at 2
        let c31 = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(
            c31.components_at(2).unwrap().components,
            vec![vec![0, 1], vec![3]]
        );
        assert!(matches!(
            p3.components_at(5),
            Err(Error::InvalidVertex { .. })
        ));
        let disc = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(disc.components_at(0), Err(Error::Disconnected));
    }

    #[test]
    fn cut_vertices_and_pendants() {
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert!(star.is_cut_vertex(0).unwrap());
        assert!(!star.is_cut_vertex(1).unwrap());
        let c5 = cycle(5);
        assert!((0..5).all(|v| !c5.is_cut_vertex(v).unwrap()));
        assert_eq!(path(2).pendant_vertices(), vec![0, 1]);
        assert!(cycle(6).pendant_vertices().is_empty());
    }

    #[test]
    fn diameter_and_girth() {
        for n in 1..8 {
            assert_eq!(path(n).diameter().unwrap(), n - 1);
            assert_eq!(path(n).girth(), None);
        }
        for n in 3..9 {
            assert_eq!(cycle(n).girth(), Some(n));
            assert_eq!(cycle(n).diameter().unwrap(), n / 2);
        }
        let disc = Graph::empty(2);
        assert_eq!(disc.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn attach_and_graft() {
        let single = Graph::empty(1);
        let g11 = single.attach_paths(0, 1, 1).unwrap();
        assert_eq!(g11.graph, path(3).relabel(&[1, 0, 2]));
        let g23 = single.attach_paths(0, 2, 3).unwrap();
        assert_eq!(g23.graph.order(), 6);
        assert_eq!(g23.graph.size(), 5);
        assert_eq!(g23.graph.diameter().unwrap(), 5);
        assert_eq!(g23.graph.degree(0), 2);

        let grafted = g11.graft().unwrap();
        assert_eq!(grafted.graph.size(), 2);
        assert!(grafted.p.is_empty());
        assert_eq!(grafted.q, vec![2, 1]);
        assert!(grafted.graph.has_edge(2, 1));
        assert_eq!(
            grafted.graft().unwrap_err(),
            Error::Domain("cannot graft: the p path is empty".into())
        );
        assert!(single.attach_paths(0, 0, 1).is_err());
    }

    #[test]
    fn bridges() {
        let c31 = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(c31.is_bridge(2, 3).unwrap());
        assert!(!c31.is_bridge(0, 1).unwrap());
        assert!(c31.is_bridge(0, 3).is_err());
    }
}
