//! The graph `Γ_S` of a finite inverse semigroup with zero, the canonical
//! family `{s_α}` indexed by its paths, and the decision whether `S` is
//! Morita equivalent to a graph inverse semigroup.
//!
//! `Γ_S` has one vertex per nonzero D-class. For each vertex `v` a
//! representative idempotent `e_v` is chosen, and every nonzero idempotent
//! `f ≪ e_v` contributes an edge `x_{v,f}` with source `[f]` and range `v`.
//! Different choices of representatives give isomorphic graphs.

use std::collections::HashMap;

use serde::Serialize;

use crate::exec::{self, Exec};
use crate::graph::{build_gis, enumerate_paths, to_dot, DirectedGraph, EdgeId, GraphInverseSemigroup, GisElement, Path, VertexId};
use crate::semigroup::ValidatedSemigroup;
use crate::semilattice::{build_poset, perrot_report_for, PerrotWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum GammaError {
    #[error("semigroup has no zero")]
    NoZero,
    #[error("semigroup is not combinatorial")]
    NotCombinatorial,
    /// Two elements link the endpoints of an edge; impossible when the
    /// semigroup is combinatorial.
    #[error("edge {0:?} has more than one linking element")]
    MultipleWitnesses(EdgeId),
    #[error("Γ_S has a directed cycle")]
    CyclicGamma,
    #[error("graph is not acyclic")]
    NotAcyclic,
}

/// Which idempotent of a D-class represents its vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum RepresentativePolicy {
    #[default]
    MinIndex,
    MaxIndex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaGraph {
    pub graph: DirectedGraph,
    /// D-class id (as in [`crate::semigroup::GreenData::d`]) of each vertex.
    pub vertex_class: Vec<usize>,
    /// `e_v` for each vertex.
    pub representative: Vec<usize>,
    /// `(v, f)` for each edge `x_{v,f}`.
    pub edge_data: Vec<(VertexId, usize)>,
}

impl GammaGraph {
    pub fn vertex_of_class(&self, class: usize) -> Option<VertexId> {
        self.vertex_class.iter().position(|&c| c == class).map(VertexId)
    }

    pub fn to_dot(&self) -> String {
        to_dot(&self.graph, "gamma")
    }
}

pub fn build_gamma(s: &ValidatedSemigroup, policy: RepresentativePolicy) -> Result<GammaGraph, GammaError> {
    let zero = s.zero().ok_or(GammaError::NoZero)?;
    let poset = build_poset(s).map_err(|_| GammaError::NoZero)?;
    let green = s.green_data();
    let zero_class = green.d[zero];

    let mut graph = DirectedGraph::new();
    let mut vertex_class = Vec::new();
    let mut representative = Vec::new();
    for class in 0..green.d_class_count() {
        if class == zero_class {
            continue;
        }
        let idempotents = s.idempotents().iter().copied().filter(|&e| green.d[e] == class);
        let rep = match policy {
            RepresentativePolicy::MinIndex => idempotents.min(),
            RepresentativePolicy::MaxIndex => idempotents.max(),
        }
        .expect("every D-class of an inverse semigroup contains an idempotent");
        let name = format!("[{}]", s.name(rep));
        if graph.add_vertex(name).is_err() {
            graph.add_vertex(format!("D{class}")).expect("class ids are unique");
        }
        vertex_class.push(class);
        representative.push(rep);
    }

    let class_vertex: HashMap<usize, VertexId> = vertex_class.iter().enumerate().map(|(v, &c)| (c, VertexId(v))).collect();
    let mut edge_data = Vec::new();
    for (v, &rep) in representative.iter().enumerate() {
        for f in poset.nonzero_covers_of(rep) {
            let src = class_vertex[&green.d[f]];
            let name = format!("x({},{})", s.name(rep), s.name(f));
            if graph.add_edge(name, src, VertexId(v)).is_err() {
                let k = graph.edge_count();
                graph.add_edge(format!("x{k}"), src, VertexId(v)).expect("generated edge names are unique");
            }
            edge_data.push((VertexId(v), f));
        }
    }
    if !graph.is_acyclic() {
        return Err(GammaError::CyclicGamma);
    }
    Ok(GammaGraph { graph, vertex_class, representative, edge_data })
}

/// `s_α` and `e_α = s_α s_α*` for every path `α` of `Γ_S`.
#[derive(Debug, Clone, Serialize)]
pub struct CanonicalFamily {
    pub paths: Vec<Path>,
    pub s: Vec<usize>,
    pub e: Vec<usize>,
    #[serde(skip)]
    index: HashMap<Path, usize>,
}

impl CanonicalFamily {
    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn s_of(&self, p: &Path) -> Option<usize> {
        self.index_of(p).map(|i| self.s[i])
    }

    pub fn e_of(&self, p: &Path) -> Option<usize> {
        self.index_of(p).map(|i| self.e[i])
    }
}

/// `s_v = e_v`; `s_x` for `x = x_{v,f}` is the element with
/// `s_x* s_x = e_{[f]}` and `s_x s_x* = f`; `s_α` is the product along `α`
/// from its range end.
pub fn canonical_family(s: &ValidatedSemigroup, gamma: &GammaGraph) -> Result<CanonicalFamily, GammaError> {
    if !s.is_combinatorial() {
        return Err(GammaError::NotCombinatorial);
    }
    let g = &gamma.graph;
    let mut edge_element = Vec::with_capacity(g.edge_count());
    for x in g.edges() {
        let (_, f) = gamma.edge_data[x.0];
        let source_rep = gamma.representative[g.src(x).0];
        let mut witnesses = s.elements().filter(|&y| s.dom(y) == source_rep && s.ran(y) == f);
        let first = witnesses.next().expect("f and its class representative are D-related");
        if witnesses.next().is_some() {
            return Err(GammaError::MultipleWitnesses(x));
        }
        edge_element.push(first);
    }
    let paths = enumerate_paths(g, None).map_err(|_| GammaError::CyclicGamma)?;
    let mut sv = Vec::with_capacity(paths.len());
    let mut ev = Vec::with_capacity(paths.len());
    for p in &paths {
        let value = match p.edges() {
            [] => gamma.representative[p.rng().0],
            edges => edges.iter().skip(1).fold(edge_element[edges[0].0], |acc, e| s.mul(acc, edge_element[e.0])),
        };
        sv.push(value);
        ev.push(s.ran(value));
    }
    let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    Ok(CanonicalFamily { paths, s: sv, e: ev, index })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    /// Path indices into [`CanonicalFamily::paths`].
    pub mu: usize,
    pub nu: usize,
    pub delta: usize,
    pub epsilon: usize,
    pub expected: usize,
    pub found: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LemmaReport {
    pub tuples_checked: usize,
    /// Tuples where `δ = νδ'` or `ν = δν'`.
    pub prefix_cases: usize,
    /// Tuples with incomparable `ν`, `δ` of common range, checked to multiply to 0.
    pub zero_cases: usize,
    /// Whether the zero branch was checked (requires P1 to hold locally).
    pub zero_branch_checked: bool,
    /// Paths `α` with `s_α* s_α != e_{s(α)}`.
    pub source_violations: Vec<usize>,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.source_violations.is_empty()
    }
}

pub fn lemma_products_check(s: &ValidatedSemigroup, gamma: &GammaGraph, fam: &CanonicalFamily) -> LemmaReport {
    lemma_products_check_with(s, gamma, fam, Exec::default())
}

/// Checks, over all path 4-tuples with `s(μ) = s(ν)` and `s(δ) = s(ε)`:
///
/// * `s_μ s_ν* s_δ s_ε* = s_{μδ'} s_ε*` when `δ = νδ'`,
/// * `= s_μ s_{εν'}*` when `ν = δν'`,
/// * `= 0` for incomparable `ν`, `δ` with `r(ν) = r(δ)` when `S` is locally P1,
///
/// and `s_α* s_α = e_{s(α)}` for every path.
pub fn lemma_products_check_with(s: &ValidatedSemigroup, gamma: &GammaGraph, fam: &CanonicalFamily, exec: Exec) -> LemmaReport {
    let zero = s.zero();
    let p1_local = build_poset(s).map(|p| perrot_report_for(s, &p).p1_local).unwrap_or(false);
    let paths = &fam.paths;
    let n = paths.len();
    let sv = &fam.s;

    let source_violations = (0..n)
        .filter(|&i| s.dom(sv[i]) != gamma.representative[paths[i].src().0])
        .collect();

    let per_mu = exec::map_collect(exec, n, |mu| {
        let mut prefix_cases = 0;
        let mut zero_cases = 0;
        let mut violations = Vec::new();
        let src = paths[mu].src();
        for nu in (0..n).filter(|&j| paths[j].src() == src) {
            let left = s.mul(sv[mu], s.inv(sv[nu]));
            for delta in 0..n {
                let partial = s.mul(left, sv[delta]);
                for epsilon in (0..n).filter(|&j| paths[j].src() == paths[delta].src()) {
                    let found = s.mul(partial, s.inv(sv[epsilon]));
                    let expected = if let Some(rest) = paths[delta].strip_prefix(&paths[nu]) {
                        prefix_cases += 1;
                        let mu_rest = paths[mu].concat(&rest).expect("s(μ) = s(ν) = r(δ')");
                        s.mul(fam.s_of(&mu_rest).expect("all paths are enumerated"), s.inv(sv[epsilon]))
                    } else if let Some(rest) = paths[nu].strip_prefix(&paths[delta]) {
                        prefix_cases += 1;
                        let eps_rest = paths[epsilon].concat(&rest).expect("s(ε) = s(δ) = r(ν')");
                        s.mul(sv[mu], s.inv(fam.s_of(&eps_rest).expect("all paths are enumerated")))
                    } else if p1_local && paths[nu].rng() == paths[delta].rng() {
                        zero_cases += 1;
                        zero.expect("Γ_S is only built with a zero")
                    } else {
                        continue;
                    };
                    if found != expected {
                        violations.push(LemmaViolation { mu, nu, delta, epsilon, expected, found });
                    }
                }
            }
        }
        (prefix_cases, zero_cases, violations)
    });

    let mut report = LemmaReport { zero_branch_checked: p1_local, source_violations, ..Default::default() };
    for (p, z, v) in per_mu {
        report.prefix_cases += p;
        report.zero_cases += z;
        report.violations.extend(v);
    }
    report.tuples_checked = report.prefix_cases + report.zero_cases;
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ReasonCode {
    NoZero,
    NotCombinatorial,
    P1LocalFail,
    P2LocalFail,
}

impl ReasonCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ReasonCode::NoZero => "NO_ZERO",
            ReasonCode::NotCombinatorial => "NOT_COMBINATORIAL",
            ReasonCode::P1LocalFail => "P1_LOCAL_FAIL",
            ReasonCode::P2LocalFail => "P2_LOCAL_FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub code: ReasonCode,
    /// Element indices: the H-related pair for `NOT_COMBINATORIAL`,
    /// `(e, f, g)` for `P1_LOCAL_FAIL`, empty for `NO_ZERO`.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum MoritaVerdict {
    Yes(GammaGraph),
    No(Vec<Reason>),
}

impl MoritaVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, MoritaVerdict::Yes(_))
    }

    pub fn reasons(&self) -> &[Reason] {
        match self {
            MoritaVerdict::Yes(_) => &[],
            MoritaVerdict::No(r) => r,
        }
    }

    pub fn has_reason(&self, code: ReasonCode) -> bool {
        self.reasons().iter().any(|r| r.code == code)
    }
}

pub fn check_morita_to_graph(s: &ValidatedSemigroup) -> MoritaVerdict {
    check_morita_to_graph_with(s, RepresentativePolicy::default())
}

/// YES iff `S` has a zero, is combinatorial, and satisfies P1 and P2 locally.
/// Every failing condition is reported.
pub fn check_morita_to_graph_with(s: &ValidatedSemigroup, policy: RepresentativePolicy) -> MoritaVerdict {
    let mut reasons = Vec::new();
    if s.zero().is_none() {
        reasons.push(Reason { code: ReasonCode::NoZero, witness: Vec::new() });
    }
    if let Some((a, b)) = s.green_data().nontrivial_h_pair() {
        reasons.push(Reason { code: ReasonCode::NotCombinatorial, witness: vec![a, b] });
    }
    if let Ok(poset) = build_poset(s) {
        let report = perrot_report_for(s, &poset);
        if !report.p1_local {
            let witness = report
                .witnesses
                .iter()
                .find_map(|w| match w {
                    PerrotWitness::P1Local { e, f, g } => Some(vec![*e, *f, *g]),
                    _ => None,
                })
                .unwrap_or_default();
            reasons.push(Reason { code: ReasonCode::P1LocalFail, witness });
        }
        if !report.p2_local {
            reasons.push(Reason { code: ReasonCode::P2LocalFail, witness: Vec::new() });
        }
    }
    if !reasons.is_empty() {
        return MoritaVerdict::No(reasons);
    }
    match build_gamma(s, policy) {
        Ok(gamma) => MoritaVerdict::Yes(gamma),
        Err(GammaError::NoZero) => MoritaVerdict::No(vec![Reason { code: ReasonCode::NoZero, witness: Vec::new() }]),
        Err(e) => unreachable!("Γ_S construction failed on a semigroup passing every condition: {e}"),
    }
}

/// `φ(α, β) = s_α s_β*`, `φ(0) = 0`, from `S(Γ_S)` to `S`.
#[derive(Debug, Clone, Serialize)]
pub struct CanonicalMorphism {
    #[serde(skip)]
    pub gis: GraphInverseSemigroup,
    pub map: Vec<usize>,
    pub homomorphism: bool,
    /// First pair `(a, b)` with `φ(ab) != φ(a)φ(b)`.
    pub homomorphism_witness: Option<(usize, usize)>,
    pub injective: bool,
    pub surjective: bool,
    pub image_size: usize,
}

pub fn canonical_morphism(s: &ValidatedSemigroup, gamma: &GammaGraph, fam: &CanonicalFamily) -> Result<CanonicalMorphism, GammaError> {
    canonical_morphism_with(s, gamma, fam, Exec::default())
}

pub fn canonical_morphism_with(
    s: &ValidatedSemigroup,
    gamma: &GammaGraph,
    fam: &CanonicalFamily,
    exec: Exec,
) -> Result<CanonicalMorphism, GammaError> {
    let gis = build_gis(&gamma.graph).map_err(|_| GammaError::NotAcyclic)?;
    let zero = s.zero().ok_or(GammaError::NoZero)?;
    let map: Vec<usize> = gis
        .elements
        .iter()
        .map(|x| match x {
            GisElement::Zero => zero,
            GisElement::Pair(a, b) => s.mul(fam.s_of(a).expect("path of Γ_S"), s.inv(fam.s_of(b).expect("path of Γ_S"))),
        })
        .collect();
    let t = &gis.semigroup;
    let n = t.len();
    let homomorphism_witness = exec::find_map_first(exec, n, |a| {
        (0..n)
            .find(|&b| map[t.mul(a, b)] != s.mul(map[a], map[b]))
            .map(|b| (a, b))
    });
    let mut image = map.clone();
    image.sort_unstable();
    image.dedup();
    let image_size = image.len();
    Ok(CanonicalMorphism {
        homomorphism: homomorphism_witness.is_none(),
        homomorphism_witness,
        injective: image_size == n,
        surjective: image_size == s.len(),
        image_size,
        map,
        gis,
    })
}
