//! Directed graphs, paths and graph inverse semigroups.
//!
//! Paths are stored range-to-source: the path `α_n … α_1` keeps `α_n` (the
//! edge at the range end) first, so that concatenation `αβ` (requiring
//! `s(α) = r(β)`) is plain sequence concatenation. Every vertex carries an
//! empty path, which is a prefix of every path ranging at that vertex.

mod format;
mod gis;
mod iso;

use serde::Serialize;

pub use format::{dot_id, parse_graph, to_dot, write_graph};
pub use gis::{build_gis, build_gis_with, gis_inverse, gis_multiply, GisElement, GraphInverseSemigroup};
pub use iso::{count_graph_isomorphisms, graph_isomorphism, graph_isomorphism_with_limit, GraphIsomorphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub name: String,
    pub src: VertexId,
    pub rng: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate name {0}")]
    DuplicateName(String),
    #[error("edges are not composable at position {0}")]
    NotComposable(usize),
    #[error("paths do not share a source")]
    SourceMismatch,
    #[error("graph has a directed cycle")]
    NotAcyclic,
    #[error("graph has a directed cycle and no path length bound was given")]
    CyclicWithoutBound,
    #[error("element does not belong to this graph")]
    GraphMismatch,
}

/// A directed multigraph with named vertices and edges. Loops and parallel
/// edges are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl DirectedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<VertexId, GraphError> {
        let name = name.into();
        if self.vertices.contains(&name) {
            return Err(GraphError::DuplicateName(name));
        }
        self.vertices.push(name);
        Ok(VertexId(self.vertices.len() - 1))
    }

    pub fn add_edge(&mut self, name: impl Into<String>, src: VertexId, rng: VertexId) -> Result<EdgeId, GraphError> {
        let name = name.into();
        for v in [src, rng] {
            if v.0 >= self.vertices.len() {
                return Err(GraphError::UnknownVertex(v.0.to_string()));
            }
        }
        if self.edges.iter().any(|e| e.name == name) {
            return Err(GraphError::DuplicateName(name));
        }
        self.edges.push(Edge { name, src, rng });
        Ok(EdgeId(self.edges.len() - 1))
    }

    /// Builds a graph from vertex names and `(edge, src, rng)` name triples.
    pub fn from_names(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self, GraphError> {
        let mut g = DirectedGraph::new();
        for v in vertices {
            g.add_vertex(*v)?;
        }
        for (name, src, rng) in edges {
            let src = g.find_vertex(src).ok_or_else(|| GraphError::UnknownVertex(src.to_string()))?;
            let rng = g.find_vertex(rng).ok_or_else(|| GraphError::UnknownVertex(rng.to_string()))?;
            g.add_edge(*name, src, rng)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn src(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].src
    }

    pub fn rng(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].rng
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    pub fn find_vertex(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name).map(VertexId)
    }

    pub fn find_edge(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.name == name).map(EdgeId)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.src == v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.rng == v).count()
    }

    /// Edges ranging at `v`.
    pub fn edges_into(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().filter(move |&e| self.rng(e) == v)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Kahn's algorithm; `None` when there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let mut indeg: Vec<usize> = self.vertices().map(|v| self.in_degree(v)).collect();
        let mut ready: Vec<VertexId> = self.vertices().filter(|v| indeg[v.0] == 0).collect();
        ready.reverse();
        let mut order = Vec::with_capacity(self.vertex_count());
        while let Some(v) = ready.pop() {
            order.push(v);
            for e in &self.edges {
                if e.src == v {
                    indeg[e.rng.0] -= 1;
                    if indeg[e.rng.0] == 0 {
                        ready.push(e.rng);
                    }
                }
            }
        }
        (order.len() == self.vertex_count()).then_some(order)
    }
}

/// A finite path, possibly empty at a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    rng: VertexId,
    src: VertexId,
    /// Range-to-source: `edges[0]` is `α_n`.
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn empty(v: VertexId) -> Self {
        Path { rng: v, src: v, edges: Vec::new() }
    }

    pub fn edge(g: &DirectedGraph, e: EdgeId) -> Self {
        Path { rng: g.rng(e), src: g.src(e), edges: vec![e] }
    }

    /// `edges` listed range-to-source; consecutive edges must satisfy
    /// `src(edges[i]) = rng(edges[i + 1])`.
    pub fn from_edges(g: &DirectedGraph, edges: Vec<EdgeId>) -> Result<Self, GraphError> {
        let (first, last) = match (edges.first(), edges.last()) {
            (Some(f), Some(l)) => (*f, *l),
            _ => return Err(GraphError::NotComposable(0)),
        };
        if edges.iter().any(|e| e.0 >= g.edge_count()) {
            return Err(GraphError::GraphMismatch);
        }
        if let Some(i) = edges.windows(2).position(|w| g.src(w[0]) != g.rng(w[1])) {
            return Err(GraphError::NotComposable(i));
        }
        Ok(Path { rng: g.rng(first), src: g.src(last), edges })
    }

    pub fn rng(&self) -> VertexId {
        self.rng
    }

    pub fn src(&self) -> VertexId {
        self.src
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `self · other`, defined when `src(self) = rng(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.src != other.rng {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Path { rng: self.rng, src: other.src, edges })
    }

    /// `rest` with `self = prefix · rest`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if prefix.rng != self.rng || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path { rng: prefix.src, src: self.src, edges: self.edges[prefix.len()..].to_vec() })
    }

    pub fn has_prefix(&self, prefix: &Path) -> bool {
        prefix.rng == self.rng && self.edges.starts_with(&prefix.edges)
    }

    /// Neither path is a prefix of the other.
    pub fn incomparable(&self, other: &Path) -> bool {
        !self.has_prefix(other) && !other.has_prefix(self)
    }

    pub(crate) fn belongs_to(&self, g: &DirectedGraph) -> bool {
        if self.rng.0 >= g.vertex_count() || self.src.0 >= g.vertex_count() {
            return false;
        }
        match Path::from_edges(g, self.edges.clone()) {
            Ok(p) => p == *self,
            Err(_) => self.edges.is_empty() && self.rng == self.src,
        }
    }

    /// Vertex name for empty paths, concatenated edge names otherwise.
    pub fn display(&self, g: &DirectedGraph) -> String {
        if self.edges.is_empty() {
            g.vertex_name(self.rng).to_string()
        } else {
            self.edges.iter().map(|&e| g.edge_name(e)).collect()
        }
    }
}

/// All paths of length at most `max_len` (unbounded only for acyclic graphs),
/// ordered by length, then by edge sequence; empty paths come first in vertex order.
pub fn enumerate_paths(g: &DirectedGraph, max_len: Option<usize>) -> Result<Vec<Path>, GraphError> {
    if max_len.is_none() && !g.is_acyclic() {
        return Err(GraphError::CyclicWithoutBound);
    }
    let mut all: Vec<Path> = g.vertices().map(Path::empty).collect();
    let mut frontier: Vec<Path> = g.edges().map(|e| Path::edge(g, e)).collect();
    let mut len = 1;
    while !frontier.is_empty() && max_len.is_none_or(|m| len <= m) {
        frontier.sort_by(|a, b| a.edges.cmp(&b.edges));
        let next: Vec<Path> = frontier
            .iter()
            .flat_map(|p| {
                g.edges()
                    .filter(move |&e| g.rng(e) == p.src)
                    .map(move |e| p.concat(&Path::edge(g, e)).expect("composable by construction"))
            })
            .collect();
        all.append(&mut frontier);
        frontier = next;
        len += 1;
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(g: &DirectedGraph, paths: &[Path]) -> Vec<String> {
        paths.iter().map(|p| p.display(g)).collect()
    }

    #[test]
    fn acyclicity() {
        assert!(fixtures::g2().is_acyclic());
        assert!(fixtures::g4().is_acyclic());
        let looped = DirectedGraph::from_names(&["v"], &[("l", "v", "v")]).unwrap();
        assert!(!looped.is_acyclic());
    }

    #[test]
    fn path_enumeration() {
        let g2 = fixtures::g2();
        assert_eq!(names(&g2, &enumerate_paths(&g2, None).unwrap()), ["u", "v", "x"]);
        let g4 = fixtures::g4();
        assert_eq!(names(&g4, &enumerate_paths(&g4, None).unwrap()), ["u", "v", "w", "x", "z", "zx"]);
        let g1 = fixtures::g1();
        assert_eq!(names(&g1, &enumerate_paths(&g1, None).unwrap()), ["v"]);
    }

    #[test]
    fn cyclic_enumeration_needs_bound() {
        let looped = DirectedGraph::from_names(&["v"], &[("l", "v", "v")]).unwrap();
        assert_eq!(enumerate_paths(&looped, None), Err(GraphError::CyclicWithoutBound));
        let paths = enumerate_paths(&looped, Some(3)).unwrap();
        assert_eq!(names(&looped, &paths), ["v", "l", "ll", "lll"]);
    }

    #[test]
    fn prefixes() {
        let g4 = fixtures::g4();
        let (x, z) = (g4.find_edge("x").unwrap(), g4.find_edge("z").unwrap());
        let zx = Path::from_edges(&g4, vec![z, x]).unwrap();
        let zp = Path::edge(&g4, z);
        let w = Path::empty(g4.find_vertex("w").unwrap());
        assert_eq!(zx.strip_prefix(&zp), Some(Path::edge(&g4, x)));
        assert_eq!(zx.strip_prefix(&w), Some(zx.clone()));
        assert_eq!(zp.strip_prefix(&zx), None);
        assert!(Path::from_edges(&g4, vec![x, z]).is_err());
    }
}
