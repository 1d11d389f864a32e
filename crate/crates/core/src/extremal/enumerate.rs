//! Isomorph-free generation of trees, connected graphs and unicyclic graphs.
//!
//! All generators grow graphs one vertex (or one edge) at a time from the
//! previous order and keep one representative per canonical form. The
//! representative is the canonically relabeled graph, and output is sorted
//! by canonical form, so results do not depend on the worker count.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_TREE_ORDER: usize = 12;
pub const MAX_CONNECTED_ORDER: usize = 9;
pub const MAX_UNICYCLIC_ORDER: usize = 10;

fn cap(what: &'static str, order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::CapExceeded { what, order, cap })
    } else {
        Ok(())
    }
}

/// Runs `f` over `items` in `workers` contiguous chunks and concatenates the results in order.
pub(crate) fn parallel_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                scope.spawn(move || part.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    })
}

/// Deduplicates candidates by canonical form; the value kept is the canonical graph.
fn dedupe(candidates: Vec<Graph>, workers: usize) -> Result<Vec<(Vec<u8>, Graph)>> {
    let keyed = parallel_map(&candidates, workers, |g| -> Result<(Vec<u8>, Graph)> {
        let c = canonical_graph(g)?;
        Ok((canonical_form(&c)?, c))
    });
    let mut seen = BTreeMap::new();
    for item in keyed {
        let (form, g) = item?;
        seen.entry(form).or_insert(g);
    }
    Ok(seen.into_iter().collect())
}

/// One tree per isomorphism class on `n` vertices, `1 <= n <= 12`.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_trees_keyed(n, 1)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

pub fn enumerate_trees_keyed(n: usize, workers: usize) -> Result<Vec<(Vec<u8>, Graph)>> {
    if n == 0 {
        return Err(Error::Domain("trees need at least one vertex".into()));
    }
    cap("tree enumeration", n, MAX_TREE_ORDER)?;
    let mut level = vec![(canonical_form(&Graph::empty(1))?, Graph::empty(1))];
    for _ in 1..n {
        let candidates: Vec<Graph> = level
            .iter()
            .flat_map(|(_, t)| (0..t.order()).map(move |v| t.with_pendant(v).unwrap()))
            .collect();
        level = dedupe(candidates, workers)?;
    }
    Ok(level)
}

/// One connected graph per isomorphism class on `n` vertices, `1 <= n <= 9`.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// adding a vertex with every nonempty neighborhood to each connected graph of
/// order `n − 1` reaches all classes.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected_keyed(n, 1)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

pub fn enumerate_connected_keyed(n: usize, workers: usize) -> Result<Vec<(Vec<u8>, Graph)>> {
    if n == 0 {
        return Err(Error::Domain(
            "connected graphs need at least one vertex".into(),
        ));
    }
    cap("connected-graph enumeration", n, MAX_CONNECTED_ORDER)?;
    let mut level = vec![(canonical_form(&Graph::empty(1))?, Graph::empty(1))];
    for m in 1..n {
        let parents: Vec<&Graph> = level.iter().map(|(_, g)| g).collect();
        let expanded = parallel_map(&parents, workers, |g| -> Result<Vec<(Vec<u8>, Graph)>> {
            let mut local = BTreeMap::new();
            for mask in 1u32..(1 << m) {
                let mut edges = g.edges().to_vec();
                edges.extend((0..m).filter(|&u| mask >> u & 1 == 1).map(|u| (u, m)));
                let h = Graph::from_edges(m + 1, edges)?;
                let c = canonical_graph(&h)?;
                local.entry(canonical_form(&c)?).or_insert(c);
            }
            Ok(local.into_iter().collect())
        });
        let mut merged = BTreeMap::new();
        for part in expanded {
            for (form, g) in part? {
                merged.entry(form).or_insert(g);
            }
        }
        level = merged.into_iter().collect();
    }
    Ok(level)
}

/// One unicyclic graph per isomorphism class on `n` vertices, `3 <= n <= 10`,
/// obtained by adding one edge to every tree.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_unicyclic_keyed(n, 1)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

pub fn enumerate_unicyclic_keyed(n: usize, workers: usize) -> Result<Vec<(Vec<u8>, Graph)>> {
    if n < 3 {
        return Ok(Vec::new());
    }
    cap("unicyclic enumeration", n, MAX_UNICYCLIC_ORDER)?;
    let trees = enumerate_trees_keyed(n, workers)?;
    let candidates: Vec<Graph> = trees
        .iter()
        .flat_map(|(_, t)| {
            (0..n)
                .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !t.has_edge(u, v))
                .map(|(u, v)| t.with_edge(u, v).unwrap())
        })
        .collect();
    dedupe(candidates, workers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let trees: Vec<usize> = (1..=9).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        let conn: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected(n).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
        let uni: Vec<usize> = (3..=7)
            .map(|n| enumerate_unicyclic(n).unwrap().len())
            .collect();
        assert_eq!(uni, vec![1, 2, 5, 13, 33]);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate_trees(13),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_connected(10),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_unicyclic(11),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn worker_count_does_not_change_output() {
        assert_eq!(
            enumerate_connected_keyed(6, 1).unwrap(),
            enumerate_connected_keyed(6, 4).unwrap()
        );
        assert_eq!(
            enumerate_unicyclic_keyed(7, 1).unwrap(),
            enumerate_unicyclic_keyed(7, 3).unwrap()
        );
    }
}
