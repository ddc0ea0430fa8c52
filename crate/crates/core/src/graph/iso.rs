//! Isomorphism of directed multigraphs by backtracking over vertices.

use serde::Serialize;

use super::{DirectedGraph, EdgeId, VertexId};
use crate::{SearchExceedsLimit, DEFAULT_SEARCH_LIMIT};

/// Bijections on vertices and edges preserving source and range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphIsomorphism {
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}

struct Shape {
    n: usize,
    /// `mult[a * n + b]`: number of edges from `a` to `b`.
    mult: Vec<usize>,
    degree: Vec<(usize, usize, usize)>,
}

impl Shape {
    fn of(g: &DirectedGraph) -> Self {
        let n = g.vertex_count();
        let mut mult = vec![0; n * n];
        for e in g.edges() {
            mult[g.src(e).0 * n + g.rng(e).0] += 1;
        }
        let degree = g
            .vertices()
            .map(|v| (g.in_degree(v), g.out_degree(v), mult[v.0 * n + v.0]))
            .collect();
        Shape { n, mult, degree }
    }
}

pub fn graph_isomorphism(g: &DirectedGraph, h: &DirectedGraph) -> Result<Option<GraphIsomorphism>, SearchExceedsLimit> {
    graph_isomorphism_with_limit(g, h, DEFAULT_SEARCH_LIMIT)
}

pub fn graph_isomorphism_with_limit(
    g: &DirectedGraph,
    h: &DirectedGraph,
    limit: usize,
) -> Result<Option<GraphIsomorphism>, SearchExceedsLimit> {
    let mut found = None;
    search(g, h, limit, &mut |vmap| {
        found = Some(vmap.to_vec());
        true
    })?;
    Ok(found.map(|vmap| GraphIsomorphism { edge_map: pair_edges(g, h, &vmap), vertex_map: vmap }))
}

/// Number of isomorphisms `g -> h`, counting every pairing of parallel edges.
pub fn count_graph_isomorphisms(g: &DirectedGraph, h: &DirectedGraph, limit: usize) -> Result<u64, SearchExceedsLimit> {
    let shape = Shape::of(g);
    let edge_pairings: u64 = shape.mult.iter().map(|&m| (1..=m as u64).product::<u64>()).product();
    let mut vertex_maps = 0u64;
    search(g, h, limit, &mut |_| {
        vertex_maps += 1;
        false
    })?;
    Ok(vertex_maps * edge_pairings)
}

/// Parallel edges are paired in index order.
fn pair_edges(g: &DirectedGraph, h: &DirectedGraph, vmap: &[VertexId]) -> Vec<EdgeId> {
    let mut used = vec![false; h.edge_count()];
    g.edges()
        .map(|e| {
            let (s, r) = (vmap[g.src(e).0], vmap[g.rng(e).0]);
            let image = h
                .edges()
                .find(|&f| !used[f.0] && h.src(f) == s && h.rng(f) == r)
                .expect("edge multiplicities agree under the vertex map");
            used[image.0] = true;
            image
        })
        .collect()
}

/// Enumerates multiplicity-preserving vertex bijections; `visit` returns true to stop.
fn search(
    g: &DirectedGraph,
    h: &DirectedGraph,
    limit: usize,
    visit: &mut dyn FnMut(&[VertexId]) -> bool,
) -> Result<(), SearchExceedsLimit> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(());
    }
    let (sg, sh) = (Shape::of(g), Shape::of(h));
    let mut dg = sg.degree.clone();
    let mut dh = sh.degree.clone();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(());
    }
    let mut state = State { sg: &sg, sh: &sh, map: Vec::with_capacity(sg.n), used: vec![false; sh.n], steps: 0, limit };
    state.extend(visit)?;
    Ok(())
}

struct State<'a> {
    sg: &'a Shape,
    sh: &'a Shape,
    map: Vec<VertexId>,
    used: Vec<bool>,
    steps: usize,
    limit: usize,
}

impl State<'_> {
    fn extend(&mut self, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> Result<bool, SearchExceedsLimit> {
        let a = self.map.len();
        if a == self.sg.n {
            return Ok(visit(&self.map));
        }
        let (n, m) = (self.sg.n, self.sh.n);
        for b in 0..m {
            if self.used[b] || self.sg.degree[a] != self.sh.degree[b] {
                continue;
            }
            self.steps += 1;
            if self.steps > self.limit {
                return Err(SearchExceedsLimit(self.limit));
            }
            let consistent = self.map.iter().enumerate().all(|(c, d)| {
                self.sg.mult[a * n + c] == self.sh.mult[b * m + d.0] && self.sg.mult[c * n + a] == self.sh.mult[d.0 * m + b]
            });
            if !consistent {
                continue;
            }
            self.map.push(VertexId(b));
            self.used[b] = true;
            if self.extend(visit)? {
                return Ok(true);
            }
            self.map.pop();
            self.used[b] = false;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn check(g: &DirectedGraph, h: &DirectedGraph, iso: &GraphIsomorphism) {
        for e in g.edges() {
            let f = iso.edge_map[e.0];
            assert_eq!(iso.vertex_map[g.src(e).0], h.src(f));
            assert_eq!(iso.vertex_map[g.rng(e).0], h.rng(f));
        }
        let mut edges: Vec<_> = iso.edge_map.clone();
        edges.sort();
        edges.dedup();
        assert_eq!(edges.len(), h.edge_count());
    }

    #[test]
    fn renamed_g2() {
        let g = fixtures::g2();
        let h = DirectedGraph::from_names(&["b", "a"], &[("e", "a", "b")]).unwrap();
        let iso = graph_isomorphism(&g, &h).unwrap().unwrap();
        check(&g, &h, &iso);
    }

    #[test]
    fn g2_vs_g3() {
        assert_eq!(graph_isomorphism(&fixtures::g2(), &fixtures::g3()).unwrap(), None);
    }

    #[test]
    fn g3_swapped_edges() {
        let g = fixtures::g3();
        let h = DirectedGraph::from_names(&["u", "v"], &[("y", "u", "v"), ("x", "u", "v")]).unwrap();
        let iso = graph_isomorphism(&g, &h).unwrap().unwrap();
        check(&g, &h, &iso);
        assert_eq!(count_graph_isomorphisms(&g, &h, 1000).unwrap(), 2);
    }

    #[test]
    fn direction_matters() {
        let a = DirectedGraph::from_names(&["u", "v", "w"], &[("x", "u", "v"), ("y", "u", "w")]).unwrap();
        let b = DirectedGraph::from_names(&["u", "v", "w"], &[("x", "v", "u"), ("y", "w", "u")]).unwrap();
        assert_eq!(graph_isomorphism(&a, &b).unwrap(), None);
        assert_eq!(count_graph_isomorphisms(&a, &a, 1000).unwrap(), 2);
    }
}
