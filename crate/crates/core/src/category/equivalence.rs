use super::semigroup_cats::{left_category, path_category_for, PathCategoryError};
use super::{check_functor_with, karoubi, FunctorData, FunctorReport, SemigroupCategory, Triple};
use crate::exec::Exec;
use crate::gamma::{
    canonical_family, check_morita_to_graph_with, CanonicalFamily, GammaError, GammaGraph, MoritaVerdict, Reason, RepresentativePolicy,
};
use crate::graph::{build_gis_with, GisElement, GraphInverseSemigroup};
use crate::semigroup::ValidatedSemigroup;
use crate::semilattice::{build_poset, perrot_report_for, PerrotWitness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EquivalenceError {
    #[error("semigroup is not Morita equivalent to a graph inverse semigroup")]
    NotMoritaGraphType(Vec<Reason>),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    /// `F` sends morphism `morphism` of `C(T)` to a triple outside `C(S)`.
    #[error("image of morphism {morphism} is not a morphism of C(S)")]
    ImageNotAMorphism { morphism: usize },
}

/// `F: C(T) -> C(S)` for `T = S(Γ_S)`, with every intermediate object.
#[derive(Debug, Clone)]
pub struct EquivalenceFunctor {
    pub gamma: GammaGraph,
    pub family: CanonicalFamily,
    pub gis: GraphInverseSemigroup,
    /// `C(T)`, zero object included.
    pub source: SemigroupCategory,
    /// `C(S)`, zero object included.
    pub target: SemigroupCategory,
    pub functor: FunctorData,
}

impl EquivalenceFunctor {
    pub fn check(&self) -> FunctorReport {
        self.check_with(Exec::default())
    }

    pub fn check_with(&self, exec: Exec) -> FunctorReport {
        check_functor_with(&self.functor, &self.source.category, &self.target.category, exec).expect("maps are total by construction")
    }
}

pub fn build_equivalence_functor(s: &ValidatedSemigroup) -> Result<EquivalenceFunctor, EquivalenceError> {
    build_equivalence_functor_with(s, RepresentativePolicy::default(), Exec::default())
}

/// Objects `(α, α) ↦ e_α`, `0 ↦ 0`; morphisms `(E₁, t, E₂) ↦ (F E₁, φ(t), F E₂)`
/// where `φ(μ, ν) = s_μ s_ν*` and `φ(0) = 0`.
pub fn build_equivalence_functor_with(
    s: &ValidatedSemigroup,
    policy: RepresentativePolicy,
    exec: Exec,
) -> Result<EquivalenceFunctor, EquivalenceError> {
    let gamma = match check_morita_to_graph_with(s, policy) {
        MoritaVerdict::Yes(g) => g,
        MoritaVerdict::No(reasons) => return Err(EquivalenceError::NotMoritaGraphType(reasons)),
    };
    let family = canonical_family(s, &gamma)?;
    let gis = build_gis_with(&gamma.graph, exec).map_err(|_| GammaError::NotAcyclic)?;
    let t = &gis.semigroup;
    let zero = s.zero().expect("YES verdict implies a zero");
    let phi: Vec<usize> = gis
        .elements
        .iter()
        .map(|x| match x {
            GisElement::Zero => zero,
            GisElement::Pair(a, b) => s.mul(family.s_of(a).expect("path of Γ_S"), s.inv(family.s_of(b).expect("path of Γ_S"))),
        })
        .collect();

    let source = karoubi(t, true);
    let target = karoubi(s, true);
    let obj_map: Vec<usize> = source
        .objects
        .iter()
        .map(|&e| {
            let image = match gis.element(e) {
                GisElement::Zero => zero,
                GisElement::Pair(a, _) => family.e_of(a).expect("path of Γ_S"),
            };
            target.object_of(image).expect("idempotent of S")
        })
        .collect();
    let mor_map = source
        .triples
        .iter()
        .enumerate()
        .map(|(i, tr)| {
            let image = Triple {
                cod: target.objects[obj_map[source.object_of(tr.cod).expect("object")]],
                elem: phi[tr.elem],
                dom: target.objects[obj_map[source.object_of(tr.dom).expect("object")]],
            };
            target.morphism_of(image).ok_or(EquivalenceError::ImageNotAMorphism { morphism: i })
        })
        .collect::<Result<Vec<_>, _>>()?;
    debug_assert_eq!(t.len(), gis.elements.len());
    Ok(EquivalenceFunctor { gamma, family, gis, source, target, functor: FunctorData { obj_map, mor_map } })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PEquivalenceError {
    #[error("semigroup has no zero")]
    NoZero,
    #[error("idempotent {0} lies below more than one maximal idempotent")]
    P3Fails(usize),
    #[error("nonzero D-class {d_class} (idempotent {e}) has no maximal idempotent")]
    P4Fails { d_class: usize, e: usize },
}

/// The inclusion `P(S) -> L(S)` (zero object excluded) and its check.
#[derive(Debug, Clone)]
pub struct PEquivalence {
    pub path: SemigroupCategory,
    pub left: SemigroupCategory,
    pub functor: FunctorData,
    pub report: FunctorReport,
}

impl PEquivalence {
    pub fn holds(&self) -> bool {
        self.report.is_equivalence()
    }
}

pub fn p_equivalent_to_l(s: &ValidatedSemigroup) -> Result<PEquivalence, PEquivalenceError> {
    p_equivalent_to_l_with(s, Exec::default())
}

pub fn p_equivalent_to_l_with(s: &ValidatedSemigroup, exec: Exec) -> Result<PEquivalence, PEquivalenceError> {
    let poset = build_poset(s).map_err(|_| PEquivalenceError::NoZero)?;
    let report = perrot_report_for(s, &poset);
    for w in &report.witnesses {
        match *w {
            PerrotWitness::P3 { e, .. } => return Err(PEquivalenceError::P3Fails(e)),
            PerrotWitness::P4 { d_class, e } => return Err(PEquivalenceError::P4Fails { d_class, e }),
            _ => {}
        }
    }
    let path = path_category_for(s, &poset).map_err(|e| match e {
        PathCategoryError::NoZero => PEquivalenceError::NoZero,
        PathCategoryError::P3Fails(e) => PEquivalenceError::P3Fails(e),
    })?;
    let left = left_category(s, false);
    let obj_map = path.objects.iter().map(|&e| left.object_of(e).expect("maximal idempotents are nonzero")).collect();
    let mor_map = path.triples.iter().map(|&t| left.morphism_of(t).expect("arrows of P(S) lie in L(S)")).collect();
    let functor = FunctorData { obj_map, mor_map };
    let report = check_functor_with(&functor, &path.category, &left.category, exec).expect("maps are total by construction");
    Ok(PEquivalence { path, left, functor, report })
}
