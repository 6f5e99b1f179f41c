use crate::error::{Error, Result};

use super::graph::{edge, Edge, Graph};

/// `n`-dimensional Henneberg `|F|`-extension supported on `x` and `f`:
/// delete the edges of `f` and join a new vertex to every vertex of `x`.
/// The new vertex gets index `g.vertex_count()`.
pub fn henneberg_extend(g: &Graph, x: &[usize], f: &[Edge], n: usize) -> Result<Graph> {
    let mut support = x.to_vec();
    support.sort_unstable();
    support.dedup();
    if support.len() != x.len() {
        return Err(Error::BadSupport("vertex set contains duplicates".into()));
    }
    for &v in x {
        g.check_vertex(v)?;
    }
    if x.len() != n + f.len() {
        return Err(Error::BadSupport(format!(
            "|X| = {} but n + |F| = {}",
            x.len(),
            n + f.len()
        )));
    }
    for &(a, b) in f {
        if !(x.contains(&a) && x.contains(&b)) {
            return Err(Error::BadSupport(format!("edge ({a}, {b}) is not spanned by X")));
        }
        if !g.has_edge(a, b) {
            return Err(Error::BadSupport(format!("edge ({a}, {b}) is not an edge of G")));
        }
    }
    let mut dedup: Vec<Edge> = f.iter().map(|&(a, b)| edge(a, b)).collect();
    dedup.sort_unstable();
    dedup.dedup();
    if dedup.len() != f.len() {
        return Err(Error::BadSupport("F contains a repeated edge".into()));
    }
    let new_vertex = g.vertex_count();
    let edges = g
        .without_edges(f)
        .edge_list()
        .into_iter()
        .chain(x.iter().map(|&w| (w, new_vertex)));
    Graph::new(new_vertex + 1, edges)
}
