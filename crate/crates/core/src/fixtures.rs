//! Small named semigroups and graphs used by the tests, benches and CLI corpus.
//!
//! * `G1`: one vertex `v`, no edges.
//! * `G2`: `x: u -> v`.
//! * `G3`: parallel edges `x, y: u -> v`.
//! * `G4`: chain `x: u -> v`, `z: v -> w`.
//! * `S2`: the semilattice `{0, e}`.
//! * `SL5`: the lattice `{g, e, f, m, 0}` with `e`, `f` incomparable below `g` and `ef = m`.
//! * `Z2_0`: the two-element group `{1, a}` with a zero adjoined.
//! * `B2`: the five-element Brandt semigroup of rank-at-most-one partial bijections of `{1, 2}`.

use crate::graph::{build_gis, DirectedGraph, GraphInverseSemigroup, VertexId};
use crate::semigroup::{generate_from_partial_bijections, validate, GenerationOptions, MultiplicationTable, ValidatedSemigroup};

pub const SL5_G: usize = 0;
pub const SL5_E: usize = 1;
pub const SL5_F: usize = 2;
pub const SL5_M: usize = 3;
pub const SL5_ZERO: usize = 4;

pub const Z2_ZERO: usize = 0;
pub const Z2_ONE: usize = 1;
pub const Z2_A: usize = 2;

pub const B2_ZERO: usize = 0;
pub const B2_ID1: usize = 1;
pub const B2_1_TO_2: usize = 2;
pub const B2_2_TO_1: usize = 3;
pub const B2_ID2: usize = 4;

pub const VEE_ZERO: usize = 0;
pub const VEE_A: usize = 1;
pub const VEE_B: usize = 2;
pub const VEE_C: usize = 3;

pub fn g1() -> DirectedGraph {
    DirectedGraph::from_names(&["v"], &[]).unwrap()
}

pub fn g2() -> DirectedGraph {
    DirectedGraph::from_names(&["u", "v"], &[("x", "u", "v")]).unwrap()
}

pub fn g3() -> DirectedGraph {
    DirectedGraph::from_names(&["u", "v"], &[("x", "u", "v"), ("y", "u", "v")]).unwrap()
}

pub fn g4() -> DirectedGraph {
    DirectedGraph::from_names(&["u", "v", "w"], &[("x", "u", "v"), ("z", "v", "w")]).unwrap()
}

pub fn graph_fixtures() -> Vec<(&'static str, DirectedGraph)> {
    vec![("G1", g1()), ("G2", g2()), ("G3", g3()), ("G4", g4())]
}

pub fn gis_g1() -> GraphInverseSemigroup {
    build_gis(&g1()).unwrap()
}

pub fn gis_g2() -> GraphInverseSemigroup {
    build_gis(&g2()).unwrap()
}

pub fn gis_g3() -> GraphInverseSemigroup {
    build_gis(&g3()).unwrap()
}

pub fn gis_g4() -> GraphInverseSemigroup {
    build_gis(&g4()).unwrap()
}

/// Meet semilattice of bitmasks under intersection; the set must be closed.
fn semilattice(masks: &[u32], names: &[&str]) -> ValidatedSemigroup {
    let index = |m: u32| masks.iter().position(|&x| x == m).expect("closed under intersection");
    let zero = masks.iter().position(|&m| m == 0);
    let table = MultiplicationTable::from_fn(masks.len(), zero, |a, b| index(masks[a] & masks[b]))
        .unwrap()
        .with_names(names.iter().map(|s| s.to_string()).collect())
        .unwrap();
    validate(table).unwrap()
}

pub fn s2() -> ValidatedSemigroup {
    semilattice(&[0, 1], &["0", "e"])
}

pub fn sl5() -> ValidatedSemigroup {
    semilattice(&[0b111, 0b101, 0b110, 0b100, 0], &["g", "e", "f", "m", "0"])
}

/// `{0, a, b, c}` with `ab = c` and no common upper bound for `a`, `b`.
pub fn vee_semilattice() -> ValidatedSemigroup {
    semilattice(&[0, 0b101, 0b110, 0b100], &["0", "a", "b", "c"])
}

pub fn z2_0() -> ValidatedSemigroup {
    let rows = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
    let table = MultiplicationTable::new(rows, Some(0))
        .unwrap()
        .with_names(vec!["0".into(), "1".into(), "a".into()])
        .unwrap();
    validate(table).unwrap()
}

pub fn b2() -> ValidatedSemigroup {
    let g = generate_from_partial_bijections(2, &[vec![Some(1), None]], GenerationOptions::default()).unwrap();
    validate(g.table).unwrap()
}

/// The group `{id, swap}` on two points; no zero.
pub fn swap_group() -> ValidatedSemigroup {
    let g = generate_from_partial_bijections(2, &[vec![Some(1), Some(0)]], GenerationOptions::default()).unwrap();
    validate(g.table).unwrap()
}

/// Every named semigroup fixture.
pub fn semigroup_fixtures() -> Vec<(&'static str, ValidatedSemigroup)> {
    vec![
        ("S2", s2()),
        ("SL5", sl5()),
        ("VEE", vee_semilattice()),
        ("Z2_0", z2_0()),
        ("B2", b2()),
        ("SWAP", swap_group()),
        ("S(G1)", gis_g1().semigroup),
        ("S(G2)", gis_g2().semigroup),
        ("S(G3)", gis_g3().semigroup),
        ("S(G4)", gis_g4().semigroup),
    ]
}

/// All acyclic graphs on `0..=max_vertices` labelled vertices with at most
/// `max_edges` edges, one graph per multiset of (source, range) pairs.
/// Vertices are named `v0, v1, ..` and edges `e0, e1, ..`.
pub fn small_acyclic_graphs(max_vertices: usize, max_edges: usize) -> Vec<DirectedGraph> {
    let mut out = Vec::new();
    for n in 0..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
        let mut multiset = Vec::new();
        collect_multisets(&pairs, 0, max_edges, &mut multiset, &mut |edges| {
            let mut g = DirectedGraph::new();
            for v in 0..n {
                g.add_vertex(format!("v{v}")).unwrap();
            }
            for (i, &(s, r)) in edges.iter().enumerate() {
                g.add_edge(format!("e{i}"), VertexId(s), VertexId(r)).unwrap();
            }
            if g.is_acyclic() {
                out.push(g);
            }
        });
    }
    out
}

type Pair = (usize, usize);

fn collect_multisets(
    pairs: &[Pair],
    start: usize,
    remaining: usize,
    current: &mut Vec<Pair>,
    emit: &mut dyn FnMut(&[Pair]),
) {
    emit(current);
    if remaining == 0 {
        return;
    }
    for i in start..pairs.len() {
        current.push(pairs[i]);
        collect_multisets(pairs, i, remaining - 1, current, emit);
        current.pop();
    }
}
