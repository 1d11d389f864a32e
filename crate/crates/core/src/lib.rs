//! Algebraic connectivity of graphs: Laplacian spectra, bottleneck matrices and
//! Perron components, characteristic sets, named extremal families, and
//! exhaustive checks of extremal statements over small graph classes.

pub mod canon;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod perron;
pub mod spectral;

pub use canon::{canonical_form, canonical_graph, isomorphic};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{ComponentDecomposition, Graph, PathAttachment, Vertex};
pub use io::{parse_edge_list, parse_graph, parse_graph6, to_edge_list, to_graph6};
pub use perron::{
    bottleneck, bottleneck_tree, characteristic_set, characteristic_set_of, perron_components_at,
    solve_balance, solve_edge_gamma, CharacteristicSet,
};
pub use spectral::{algebraic_connectivity, laplacian, mu, Spectrum};
