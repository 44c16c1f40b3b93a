use super::{Graph, GraphError};

/// The generalized Petersen graph G(n, k): outer cycle `u_i u_{i+1}`, spokes
/// `u_i v_i` and inner edges `v_i v_{i+k}`. Outer vertices are `0..n`, inner
/// vertices `n..2n`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(GraphError::PetersenDomain { n, k });
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
    }
    for i in 0..n {
        edges.push((i, n + i));
    }
    for i in 0..n {
        edges.push((n + i, n + (i + k) % n));
    }
    let g = Graph::from_edges(2 * n, &edges)?;
    debug_assert!(g.is_cubic() && g.is_simple());
    Ok(g)
}
