//! Bottleneck matrices, Perron components and characteristic sets.
//!
//! For a vertex `v` of a connected graph and a component `C` of `G − v`, the
//! principal submatrix `L̂(C)` of the Laplacian on `C` is a nonsingular
//! M-matrix; its inverse is entrywise positive (the bottleneck matrix of `C`)
//! and its dominant eigenvalue is the Perron value of `C`. The functions here
//! compute those objects and solve the balance equations tying Perron values
//! at a cut vertex (or across a bridge) to the algebraic connectivity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ComponentDecomposition, Graph, Vertex};
use crate::linalg::{largest_eigenvalue, norm2, norm_inf, perron_pair, SymMatrix};
use crate::spectral::{laplacian, Spectrum};

/// Relative tolerance for deciding that two Perron values tie.
pub const PERRON_TIE_TOL: f64 = 1e-9;

/// Zero threshold for Fiedler coordinates, relative to `‖Y‖∞`.
pub const ZERO_TOL: f64 = 1e-8;

const BALANCE_X_TOL: f64 = 1e-12;
const GAMMA_EDGE: f64 = 1e-9;

/// The inverse of `L̂(C)` with its Perron pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BottleneckMatrix {
    pub base_vertex: Vertex,
    /// Component vertices; row `i` of `matrix` belongs to `component[i]`.
    pub component: Vec<Vertex>,
    pub matrix: SymMatrix,
    pub perron_value: f64,
    pub perron_vector: Vec<f64>,
}

fn find_component(g: &Graph, v: Vertex, c: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut want = c.to_vec();
    want.sort_unstable();
    let decomposition = g.components_at(v)?;
    decomposition
        .components
        .into_iter()
        .find(|comp| *comp == want)
        .ok_or(Error::NotAComponent(v))
}

fn attach_perron(
    base_vertex: Vertex,
    component: Vec<Vertex>,
    matrix: SymMatrix,
) -> Result<BottleneckMatrix> {
    let pair = perron_pair(&matrix)?;
    Ok(BottleneckMatrix {
        base_vertex,
        component,
        matrix,
        perron_value: pair.value,
        perron_vector: pair.vector,
    })
}

/// Bottleneck matrix of component `c` at `v`, by numeric inversion of `L̂(C)`.
pub fn bottleneck(g: &Graph, v: Vertex, c: &[Vertex]) -> Result<BottleneckMatrix> {
    let component = find_component(g, v, c)?;
    let sub = laplacian(g).principal(&component);
    let inv = sub
        .inverse()
        .map_err(|_| Error::Internal("principal Laplacian submatrix is singular".into()))?;
    attach_perron(v, component, inv)
}

/// Bottleneck matrix of a tree component built combinatorially: entry `(i, j)`
/// counts the edges shared by the paths from `i` and from `j` to `v`.
pub fn bottleneck_tree(t: &Graph, v: Vertex, c: &[Vertex]) -> Result<BottleneckMatrix> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let component = find_component(t, v, c)?;
    // Parent pointers toward v; the shared-edge count of the two v-paths is
    // the depth of the lowest common ancestor in the tree rooted at v.
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut order = vec![v];
    parent[v] = v;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                depth[w] = depth[u] + 1;
                order.push(w);
            }
        }
    }
    let lca_depth = |mut a: Vertex, mut b: Vertex| -> usize {
        while depth[a] > depth[b] {
            a = parent[a];
        }
        while depth[b] > depth[a] {
            b = parent[b];
        }
        while a != b {
            a = parent[a];
            b = parent[b];
        }
        depth[a]
    };
    let matrix = SymMatrix::from_fn(component.len(), |a, b| {
        lca_depth(component[a], component[b]) as f64
    });
    attach_perron(v, component, matrix)
}

/// One component at `v` annotated with its Perron value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronComponent {
    pub vertices: Vec<Vertex>,
    pub perron_value: f64,
    pub is_perron: bool,
}

/// Components at a vertex with Perron values and flags.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronDecomposition {
    pub base_vertex: Vertex,
    pub components: Vec<PerronComponent>,
}

impl PerronDecomposition {
    pub fn perron_indices(&self) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&i| self.components[i].is_perron)
            .collect()
    }

    pub fn max_perron_value(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.perron_value)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn as_decomposition(&self) -> ComponentDecomposition {
        ComponentDecomposition {
            base_vertex: self.base_vertex,
            components: self.components.iter().map(|c| c.vertices.clone()).collect(),
        }
    }
}

/// Components of `g` at `v`, each with its Perron value; those within
/// [`PERRON_TIE_TOL`] (relative) of the maximum are flagged as Perron components.
pub fn perron_components_at(g: &Graph, v: Vertex) -> Result<PerronDecomposition> {
    let decomposition = g.components_at(v)?;
    let lap = laplacian(g);
    let mut components = Vec::with_capacity(decomposition.len());
    for comp in decomposition.components {
        let inv = lap
            .principal(&comp)
            .inverse()
            .map_err(|_| Error::Internal("principal Laplacian submatrix is singular".into()))?;
        let value = perron_pair(&inv)?.value;
        components.push(PerronComponent {
            vertices: comp,
            perron_value: value,
            is_perron: false,
        });
    }
    let top = components
        .iter()
        .map(|c| c.perron_value)
        .fold(f64::NEG_INFINITY, f64::max);
    for c in &mut components {
        c.is_perron = c.perron_value >= top * (1.0 - PERRON_TIE_TOL);
    }
    Ok(PerronDecomposition {
        base_vertex: v,
        components,
    })
}

/// Characteristic vertices and edges of a graph with respect to a Fiedler vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacteristicSet {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub fiedler_used: Vec<f64>,
    pub mu: f64,
    pub mu_multiplicity: usize,
}

impl CharacteristicSet {
    pub fn len(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every vertex that is a characteristic vertex or an endpoint of a characteristic edge.
    pub fn touched_vertices(&self) -> Vec<Vertex> {
        let mut out = self.vertices.clone();
        for &(a, b) in &self.edges {
            out.push(a);
            out.push(b);
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Classifies the characteristic set of `g` for the given vector `y`.
///
/// `y` must be an eigenvector for the algebraic connectivity of `g`; the
/// Laplacian residual and the eigenvalue are checked first.
pub fn characteristic_set(g: &Graph, y: &[f64]) -> Result<CharacteristicSet> {
    characteristic_set_with(g, y, ZERO_TOL)
}

pub fn characteristic_set_with(g: &Graph, y: &[f64], zero_tol: f64) -> Result<CharacteristicSet> {
    if y.len() != g.order() {
        return Err(Error::NotFiedler(format!(
            "vector has length {}, graph has order {}",
            y.len(),
            g.order()
        )));
    }
    let spectrum = Spectrum::of_graph(g)?;
    let lap = laplacian(g);
    let ny = norm2(y);
    if ny == 0.0 {
        return Err(Error::NotFiedler("zero vector".into()));
    }
    let ly = lap.mul_vec(y);
    let rayleigh = ly.iter().zip(y).map(|(a, b)| a * b).sum::<f64>() / (ny * ny);
    let residual = ly
        .iter()
        .zip(y)
        .map(|(a, b)| (a - spectrum.mu * b).powi(2))
        .sum::<f64>()
        .sqrt();
    let scale = lap.frobenius_norm().max(1.0);
    if residual > 1e-8 * scale * ny || (rayleigh - spectrum.mu).abs() > 1e-8 * scale {
        return Err(Error::NotFiedler(format!(
            "residual {residual:.3e} against mu = {:.12}",
            spectrum.mu
        )));
    }
    let eps = zero_tol * norm_inf(y);
    let zero = |v: Vertex| y[v].abs() <= eps;
    let vertices = (0..g.order())
        .filter(|&v| zero(v) && g.neighbors(v).iter().any(|&w| !zero(w)))
        .collect();
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| !zero(a) && !zero(b) && y[a] * y[b] < 0.0)
        .collect();
    Ok(CharacteristicSet {
        vertices,
        edges,
        fiedler_used: y.to_vec(),
        mu: spectrum.mu,
        mu_multiplicity: spectrum.mu_multiplicity,
    })
}

/// Characteristic set for the sign-normalized Fiedler vector of `g`.
pub fn characteristic_set_of(g: &Graph) -> Result<CharacteristicSet> {
    let spectrum = Spectrum::of_graph(g)?;
    characteristic_set(g, &spectrum.fiedler)
}

/// Solution of the balance equation at a cut vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BalanceSolution {
    pub base_vertex: Vertex,
    /// Index (into the canonical component order) of the Perron component used as `C_1`.
    pub perron_component: usize,
    pub x: f64,
    /// Common value of both sides at `x`.
    pub common_value: f64,
    pub mu_est: f64,
}

/// The two sides of the balance equation at `v` with `C_1` the chosen Perron component.
struct BalanceSides {
    first: SymMatrix,
    rest: SymMatrix,
}

impl BalanceSides {
    fn new(g: &Graph, v: Vertex, perron_component: usize) -> Result<Self> {
        let decomposition = g.components_at(v)?;
        if decomposition.len() < 2 {
            return Err(Error::NotCutVertex(v));
        }
        let lap = laplacian(g);
        let mut inverses = Vec::with_capacity(decomposition.len());
        for comp in &decomposition.components {
            inverses.push(lap.principal(comp).inverse().map_err(|_| {
                Error::Internal("principal Laplacian submatrix is singular".into())
            })?);
        }
        let first = inverses.remove(perron_component);
        let zero = SymMatrix::zeros(1);
        let mut blocks: Vec<&SymMatrix> = inverses.iter().collect();
        blocks.push(&zero);
        Ok(BalanceSides {
            first,
            rest: SymMatrix::direct_sum(&blocks),
        })
    }

    /// `λ(L̂(C_1)^{-1} − xJ)`.
    fn left(&self, x: f64) -> Result<f64> {
        largest_eigenvalue(&self.first.add_constant(-x))
    }

    /// `ρ(L̂(C_2)^{-1} ⊕ .. ⊕ L̂(C_k)^{-1} ⊕ [0] + xJ)`.
    fn right(&self, x: f64) -> Result<f64> {
        largest_eigenvalue(&self.rest.add_constant(x))
    }
}

fn first_perron_component(g: &Graph, v: Vertex) -> Result<usize> {
    let pd = perron_components_at(g, v)?;
    if pd.components.len() < 2 {
        return Err(Error::NotCutVertex(v));
    }
    Ok(pd.perron_indices()[0])
}

/// Finds `x >= 0` balancing the Perron component at cut vertex `v` against the
/// rest, by bisection on `[0, λ(L̂(C_1)^{-1})]`; `1 / common value` is the
/// algebraic connectivity.
pub fn solve_balance(g: &Graph, v: Vertex) -> Result<BalanceSolution> {
    let c1 = first_perron_component(g, v)?;
    let sides = BalanceSides::new(g, v, c1)?;
    let diff = |x: f64| -> Result<f64> { Ok(sides.left(x)? - sides.right(x)?) };
    let mut lo = 0.0;
    let mut hi = sides.left(0.0)?;
    let at_zero = diff(lo)?;
    if at_zero < -PERRON_TIE_TOL * hi {
        return Err(Error::Internal(
            "balance difference negative at x = 0; C_1 is not a Perron component".into(),
        ));
    }
    if at_zero <= PERRON_TIE_TOL * hi {
        // Tied Perron components balance at x = 0.
        hi = 0.0;
    } else if diff(hi)? > 0.0 {
        return Err(Error::Internal("balance bracket exhausted".into()));
    }
    while hi - lo > BALANCE_X_TOL {
        let mid = 0.5 * (lo + hi);
        if diff(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    let common = 0.5 * (sides.left(x)? + sides.right(x)?);
    Ok(BalanceSolution {
        base_vertex: v,
        perron_component: c1,
        x,
        common_value: common,
        mu_est: 1.0 / common,
    })
}

/// If both sides of the balance equation at `v` agree at `x` (within `1e-9`),
/// returns `α = 1 / common value`, which is then a Laplacian eigenvalue of `g`.
///
/// Agreement that does not produce an eigenvalue is reported as an internal error.
pub fn check_balance(g: &Graph, v: Vertex, x: f64) -> Result<Option<f64>> {
    if x < 0.0 {
        return Err(Error::Domain(format!(
            "balance parameter must be >= 0, got {x}"
        )));
    }
    let c1 = first_perron_component(g, v)?;
    let sides = BalanceSides::new(g, v, c1)?;
    let (l, r) = (sides.left(x)?, sides.right(x)?);
    if (l - r).abs() > 1e-9 * l.abs().max(1.0) {
        return Ok(None);
    }
    let alpha = 2.0 / (l + r);
    let spectrum = Spectrum::of_graph(g)?;
    let nearest = spectrum
        .eigenvalues
        .iter()
        .map(|e| (e - alpha).abs())
        .fold(f64::INFINITY, f64::min);
    if nearest > 1e-8 {
        return Err(Error::Internal(format!(
            "balanced value {alpha} is not a Laplacian eigenvalue (gap {nearest:.3e})"
        )));
    }
    Ok(Some(alpha))
}

/// Bridge balance across edge `{a, b}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeBalance {
    pub edge: (Vertex, Vertex),
    pub gamma: f64,
    pub mu_est: f64,
}

/// For a bridge `{a, b}`: when the side containing `a` is the unique Perron
/// component at `b` and vice versa, returns the `γ ∈ (0, 1)` with
/// `λ(L̂(C_a)^{-1} − γJ) = λ(L̂(C_b)^{-1} − (1−γ)J)` and `1 / common value`.
///
/// In that case the algebraic connectivity is simple and the characteristic
/// set is exactly `{a, b}`; both facts are checked and a violation is an
/// internal error. Returns `None` when the Perron condition fails.
pub fn solve_edge_gamma(g: &Graph, a: Vertex, b: Vertex) -> Result<Option<EdgeBalance>> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge(a, b));
    }
    if !g.is_bridge(a, b)? {
        return Err(Error::EdgeOnCycle(a, b));
    }
    let at_b = perron_components_at(g, b)?;
    let at_a = perron_components_at(g, a)?;
    let side_a = at_b.as_decomposition().component_of(a).unwrap();
    let side_b = at_a.as_decomposition().component_of(b).unwrap();
    let unique_perron = |pd: &PerronDecomposition, i: usize| pd.perron_indices() == vec![i];
    if !unique_perron(&at_b, side_a) || !unique_perron(&at_a, side_b) {
        return Ok(None);
    }
    let lap = laplacian(g);
    let inv_a = lap.principal(&at_b.components[side_a].vertices).inverse()?;
    let inv_b = lap.principal(&at_a.components[side_b].vertices).inverse()?;
    let left = |gamma: f64| largest_eigenvalue(&inv_a.add_constant(-gamma));
    let right = |gamma: f64| largest_eigenvalue(&inv_b.add_constant(-(1.0 - gamma)));
    let diff = |gamma: f64| -> Result<f64> { Ok(left(gamma)? - right(gamma)?) };
    let (mut lo, mut hi) = (GAMMA_EDGE, 1.0 - GAMMA_EDGE);
    if diff(lo)? <= 0.0 || diff(hi)? >= 0.0 {
        return Err(Error::Internal(format!(
            "edge {{{a}, {b}}} satisfies the Perron condition but has no balancing gamma"
        )));
    }
    while hi - lo > BALANCE_X_TOL {
        let mid = 0.5 * (lo + hi);
        if diff(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let gamma = 0.5 * (lo + hi);
    let common = 0.5 * (left(gamma)? + right(gamma)?);
    let cs = characteristic_set_of(g)?;
    let edge = (a.min(b), a.max(b));
    if cs.mu_multiplicity != 1 || !cs.vertices.is_empty() || cs.edges != vec![edge] {
        return Err(Error::Internal(format!(
            "bridge {{{a}, {b}}} balances but the characteristic set is {:?}/{:?}",
            cs.vertices, cs.edges
        )));
    }
    Ok(Some(EdgeBalance {
        edge,
        gamma,
        mu_est: 1.0 / common,
    }))
}

/// Whether cut vertex `v` is characteristic, decided by Perron components.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutVertexCharacterization {
    pub vertex: Vertex,
    pub is_characteristic: bool,
    /// `1 / ρ` of a Perron component when at least two tie.
    pub mu_formula: Option<f64>,
}

/// A cut vertex is characteristic iff at least two Perron components sit at it,
/// and then the algebraic connectivity is the reciprocal of their Perron value.
pub fn cut_vertex_characteristic(g: &Graph, v: Vertex) -> Result<CutVertexCharacterization> {
    let pd = perron_components_at(g, v)?;
    if pd.components.len() < 2 {
        return Err(Error::NotCutVertex(v));
    }
    let is_characteristic = pd.perron_indices().len() >= 2;
    let mu_formula = is_characteristic.then(|| 1.0 / pd.max_perron_value());
    Ok(CutVertexCharacterization {
        vertex: v,
        is_characteristic,
        mu_formula,
    })
}
