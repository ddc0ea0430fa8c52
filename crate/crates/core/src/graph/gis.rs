//! Symbolic graph-inverse-semigroup elements and the finite table of `S(Γ)`.

use std::collections::HashMap;

use serde::Serialize;

use super::{enumerate_paths, DirectedGraph, GraphError, Path};
use crate::exec::{self, Exec};
use crate::semigroup::{validate_with, MultiplicationTable, ValidatedSemigroup};

/// `0` or a pair `(α, β)` of paths with `s(α) = s(β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum GisElement {
    Zero,
    Pair(Path, Path),
}

impl GisElement {
    pub fn pair(alpha: Path, beta: Path) -> Result<Self, GraphError> {
        if alpha.src() != beta.src() {
            return Err(GraphError::SourceMismatch);
        }
        Ok(GisElement::Pair(alpha, beta))
    }

    /// `(α, α)`.
    pub fn idempotent(alpha: Path) -> Self {
        GisElement::Pair(alpha.clone(), alpha)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, GisElement::Zero)
    }

    fn belongs_to(&self, g: &DirectedGraph) -> bool {
        match self {
            GisElement::Zero => true,
            GisElement::Pair(a, b) => a.src() == b.src() && a.belongs_to(g) && b.belongs_to(g),
        }
    }

    pub fn display(&self, g: &DirectedGraph) -> String {
        match self {
            GisElement::Zero => "0".to_string(),
            GisElement::Pair(a, b) => format!("({},{})", a.display(g), b.display(g)),
        }
    }
}

/// Product of two elements of `S(g)`:
/// `(α,β)(γ,ν) = (αγ', ν)` if `γ = βγ'`, `(α, νβ')` if `β = γβ'`, else `0`.
pub fn gis_multiply(g: &DirectedGraph, a: &GisElement, b: &GisElement) -> Result<GisElement, GraphError> {
    if !a.belongs_to(g) || !b.belongs_to(g) {
        return Err(GraphError::GraphMismatch);
    }
    Ok(multiply(a, b))
}

pub(crate) fn multiply(a: &GisElement, b: &GisElement) -> GisElement {
    let (GisElement::Pair(alpha, beta), GisElement::Pair(gamma, nu)) = (a, b) else {
        return GisElement::Zero;
    };
    if let Some(gamma_rest) = gamma.strip_prefix(beta) {
        let left = alpha.concat(&gamma_rest).expect("s(α) = s(β) = r(γ')");
        GisElement::Pair(left, nu.clone())
    } else if let Some(beta_rest) = beta.strip_prefix(gamma) {
        let right = nu.concat(&beta_rest).expect("s(ν) = s(γ) = r(β')");
        GisElement::Pair(alpha.clone(), right)
    } else {
        GisElement::Zero
    }
}

/// `(α,β)* = (β,α)`, `0* = 0`.
pub fn gis_inverse(a: &GisElement) -> GisElement {
    match a {
        GisElement::Zero => GisElement::Zero,
        GisElement::Pair(alpha, beta) => GisElement::Pair(beta.clone(), alpha.clone()),
    }
}

/// `S(Γ)` for a finite acyclic graph, as a validated table with a
/// bidirectional labelling. Index 0 is the zero; pairs follow ordered by the
/// path enumeration order of `α`, then of `β`.
#[derive(Debug, Clone)]
pub struct GraphInverseSemigroup {
    pub graph: DirectedGraph,
    pub semigroup: ValidatedSemigroup,
    pub elements: Vec<GisElement>,
    pub paths: Vec<Path>,
    index: HashMap<GisElement, usize>,
}

impl GraphInverseSemigroup {
    pub fn index_of(&self, x: &GisElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn element(&self, i: usize) -> &GisElement {
        &self.elements[i]
    }

    /// Index of the pair whose paths display as `alpha` and `beta`.
    pub fn lookup(&self, alpha: &str, beta: &str) -> Option<usize> {
        let find = |name: &str| self.paths.iter().find(|p| p.display(&self.graph) == name).cloned();
        let pair = GisElement::pair(find(alpha)?, find(beta)?).ok()?;
        self.index_of(&pair)
    }

    /// Index of `(α, α)`.
    pub fn idempotent_of(&self, alpha: &Path) -> Option<usize> {
        self.index_of(&GisElement::idempotent(alpha.clone()))
    }
}

pub fn build_gis(g: &DirectedGraph) -> Result<GraphInverseSemigroup, GraphError> {
    build_gis_with(g, Exec::default())
}

pub fn build_gis_with(g: &DirectedGraph, exec: Exec) -> Result<GraphInverseSemigroup, GraphError> {
    let paths = enumerate_paths(g, None).map_err(|_| GraphError::NotAcyclic)?;
    let mut elements = vec![GisElement::Zero];
    for a in &paths {
        for b in paths.iter().filter(|b| b.src() == a.src()) {
            elements.push(GisElement::Pair(a.clone(), b.clone()));
        }
    }
    let index: HashMap<GisElement, usize> = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    let n = elements.len();
    let products = exec::map_collect(exec, n * n, |k| index[&multiply(&elements[k / n], &elements[k % n])]);
    let names = elements.iter().map(|x| x.display(g)).collect();
    let table = MultiplicationTable::from_fn(n, Some(0), |a, b| products[a * n + b])
        .and_then(|t| t.with_names(names))
        .expect("S(Γ) is closed and 0 absorbs");
    let semigroup = validate_with(table, exec).expect("graph inverse semigroups are inverse semigroups");
    Ok(GraphInverseSemigroup { graph: g.clone(), semigroup, elements, paths, index })
}
