//! Finite categories given by explicit composition tables, functors between
//! them, and exhaustive checks of the category laws and of functor
//! properties.

mod equivalence;
mod semigroup_cats;

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::exec::{self, Exec};
use crate::SearchExceedsLimit;

pub use equivalence::{
    build_equivalence_functor, build_equivalence_functor_with, p_equivalent_to_l, p_equivalent_to_l_with, EquivalenceError,
    EquivalenceFunctor, PEquivalence, PEquivalenceError,
};
pub use semigroup_cats::{karoubi, left_category, path_category, SemigroupCategory, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Morphism {
    pub dom: usize,
    pub cod: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CategoryError {
    #[error("identity of object {object} is missing or has the wrong endpoints")]
    BadIdentity { object: usize },
    #[error("morphism {morphism} has an endpoint outside the object set")]
    BadEndpoint { morphism: usize },
    #[error("composite of {g} after {f} is undefined")]
    MissingComposite { g: usize, f: usize },
    #[error("composite of {g} after {f} has the wrong endpoints")]
    BadComposite { g: usize, f: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "law")]
pub enum LawViolation {
    LeftIdentity { f: usize },
    RightIdentity { f: usize },
    Associativity { h: usize, g: usize, f: usize },
}

#[derive(Debug, Clone)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    names: Vec<String>,
    identities: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    hom: HashMap<(usize, usize), Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
    invertible: Option<Vec<bool>>,
}

impl FiniteCategory {
    /// `compose(g, f)` must return `g ∘ f` for every pair with
    /// `dom g = cod f`.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<(Morphism, String)>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self, CategoryError> {
        let n_obj = objects.len();
        let (morphisms, names): (Vec<Morphism>, Vec<String>) = morphisms.into_iter().unzip();
        if let Some(m) = morphisms.iter().position(|m| m.dom >= n_obj || m.cod >= n_obj) {
            return Err(CategoryError::BadEndpoint { morphism: m });
        }
        if identities.len() != n_obj {
            return Err(CategoryError::BadIdentity { object: identities.len().min(n_obj) });
        }
        for (o, &id) in identities.iter().enumerate() {
            if morphisms.get(id) != Some(&Morphism { dom: o, cod: o }) {
                return Err(CategoryError::BadIdentity { object: o });
            }
        }
        let mut outgoing = vec![Vec::new(); n_obj];
        let mut hom: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            outgoing[m.dom].push(i);
            hom.entry((m.dom, m.cod)).or_default().push(i);
        }
        let mut table = HashMap::new();
        for (f, mf) in morphisms.iter().enumerate() {
            for &g in &outgoing[mf.cod] {
                let h = compose(g, f).ok_or(CategoryError::MissingComposite { g, f })?;
                if morphisms.get(h) != Some(&Morphism { dom: mf.dom, cod: morphisms[g].cod }) {
                    return Err(CategoryError::BadComposite { g, f });
                }
                table.insert((g, f), h);
            }
        }
        Ok(FiniteCategory { objects, morphisms, names, identities, compose: table, hom, outgoing, invertible: None })
    }

    /// Supplies invertibility of every morphism, bypassing the search in
    /// [`FiniteCategory::is_isomorphism`].
    pub(crate) fn with_invertible(mut self, invertible: Vec<bool>) -> Self {
        debug_assert_eq!(invertible.len(), self.morphisms.len());
        self.invertible = Some(invertible);
        self
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphism_name(&self, m: usize) -> &str {
        &self.names[m]
    }

    pub fn morphism(&self, m: usize) -> Morphism {
        self.morphisms[m]
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    /// `g ∘ f`, defined when `dom g = cod f`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    /// Morphisms `a -> b`.
    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        self.hom.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    /// Morphisms with domain `a`.
    pub fn outgoing(&self, a: usize) -> &[usize] {
        &self.outgoing[a]
    }

    pub fn check_laws(&self) -> Result<(), LawViolation> {
        self.check_laws_with(Exec::default())
    }

    /// Identity laws for every morphism and associativity for every
    /// composable triple.
    pub fn check_laws_with(&self, exec: Exec) -> Result<(), LawViolation> {
        let found = exec::find_map_first(exec, self.morphisms.len(), |f| {
            let m = self.morphisms[f];
            if self.compose(self.identities[m.cod], f) != Some(f) {
                return Some(LawViolation::LeftIdentity { f });
            }
            if self.compose(f, self.identities[m.dom]) != Some(f) {
                return Some(LawViolation::RightIdentity { f });
            }
            for &g in &self.outgoing[m.cod] {
                let gf = self.compose[&(g, f)];
                for &h in &self.outgoing[self.morphisms[g].cod] {
                    let hg = self.compose[&(h, g)];
                    if self.compose[&(h, gf)] != self.compose[&(hg, f)] {
                        return Some(LawViolation::Associativity { h, g, f });
                    }
                }
            }
            None
        });
        found.map_or(Ok(()), Err)
    }

    pub fn is_isomorphism(&self, f: usize) -> bool {
        if let Some(inv) = &self.invertible {
            return inv[f];
        }
        self.inverse_of(f).is_some()
    }

    /// A two-sided inverse of `f`, by exhaustive search of the opposite
    /// hom-set.
    pub fn inverse_of(&self, f: usize) -> Option<usize> {
        let m = self.morphisms[f];
        self.hom(m.cod, m.dom).iter().copied().find(|&g| {
            self.compose(g, f) == Some(self.identities[m.dom]) && self.compose(f, g) == Some(self.identities[m.cod])
        })
    }

    /// Dense isomorphism-class id of each object, numbered by first occurrence.
    pub fn iso_classes(&self) -> Vec<usize> {
        self.iso_classes_with(Exec::default())
    }

    pub fn iso_classes_with(&self, exec: Exec) -> Vec<usize> {
        let invertible = exec::map_collect(exec, self.morphisms.len(), |f| {
            let m = self.morphisms[f];
            m.dom != m.cod && self.is_isomorphism(f)
        });
        let mut parent: Vec<usize> = (0..self.objects.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (f, &inv) in invertible.iter().enumerate() {
            if inv {
                let (a, b) = (find(&mut parent, self.morphisms[f].dom), find(&mut parent, self.morphisms[f].cod));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut ids = HashMap::new();
        (0..self.objects.len())
            .map(|o| {
                let root = find(&mut parent, o);
                let next = ids.len();
                *ids.entry(root).or_insert(next)
            })
            .collect()
    }

    /// The full subcategory on `objects` (in the given order), with the
    /// index in `self` of each of its morphisms.
    pub fn full_subcategory(&self, objects: &[usize]) -> (FiniteCategory, Vec<usize>) {
        let position: HashMap<usize, usize> = objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        let embedding: Vec<usize> = (0..self.morphisms.len())
            .filter(|&f| position.contains_key(&self.morphisms[f].dom) && position.contains_key(&self.morphisms[f].cod))
            .collect();
        let local: HashMap<usize, usize> = embedding.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let morphisms = embedding
            .iter()
            .map(|&f| {
                let m = self.morphisms[f];
                (Morphism { dom: position[&m.dom], cod: position[&m.cod] }, self.names[f].clone())
            })
            .collect();
        let identities = objects.iter().map(|&o| local[&self.identities[o]]).collect();
        let sub = FiniteCategory::new(
            objects.iter().map(|&o| self.objects[o].clone()).collect(),
            morphisms,
            identities,
            |g, f| self.compose(embedding[g], embedding[f]).map(|h| local[&h]),
        )
        .expect("a full subcategory is closed under composition");
        let sub = match &self.invertible {
            Some(inv) => sub.with_invertible(embedding.iter().map(|&f| inv[f]).collect()),
            None => sub,
        };
        (sub, embedding)
    }

    /// Full subcategory on the lowest-indexed object of each isomorphism class.
    pub fn skeleton(&self) -> FiniteCategory {
        let classes = self.iso_classes();
        let mut seen = HashSet::new();
        let reps: Vec<usize> = (0..self.objects.len()).filter(|&o| seen.insert(classes[o])).collect();
        self.full_subcategory(&reps).0
    }

    /// Object list, morphism list with endpoints, and composition table.
    pub fn to_text(&self) -> String {
        let mut out = format!("objects {}\n", self.objects.len());
        for (o, name) in self.objects.iter().enumerate() {
            out.push_str(&format!("object {o} {name} id={}\n", self.identities[o]));
        }
        out.push_str(&format!("morphisms {}\n", self.morphisms.len()));
        for (i, m) in self.morphisms.iter().enumerate() {
            out.push_str(&format!("morphism {i} {} : {} -> {}\n", self.names[i], m.dom, m.cod));
        }
        let mut pairs: Vec<_> = self.compose.iter().collect();
        pairs.sort();
        out.push_str(&format!("composites {}\n", pairs.len()));
        for ((g, f), h) in pairs {
            out.push_str(&format!("compose {g} {f} = {h}\n"));
        }
        out
    }
}

/// Searches for an isomorphism of categories `a -> b`, returning the object
/// and morphism maps. Intended for small skeletons.
pub fn category_isomorphism(
    a: &FiniteCategory,
    b: &FiniteCategory,
    limit: usize,
) -> Result<Option<FunctorData>, SearchExceedsLimit> {
    if a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count() {
        return Ok(None);
    }
    let mut search = IsoSearch { a, b, limit, steps: 0, obj: vec![usize::MAX; a.object_count()], used_obj: vec![false; b.object_count()] };
    search.objects(0)
}

struct IsoSearch<'a> {
    a: &'a FiniteCategory,
    b: &'a FiniteCategory,
    limit: usize,
    steps: usize,
    obj: Vec<usize>,
    used_obj: Vec<bool>,
}

impl IsoSearch<'_> {
    fn tick(&mut self) -> Result<(), SearchExceedsLimit> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(SearchExceedsLimit(self.limit));
        }
        Ok(())
    }

    fn objects(&mut self, i: usize) -> Result<Option<FunctorData>, SearchExceedsLimit> {
        if i == self.obj.len() {
            let order: Vec<usize> = (0..self.a.morphism_count()).collect();
            let mut mor = vec![usize::MAX; order.len()];
            let mut used = vec![false; order.len()];
            return Ok(self.morphisms(&order, 0, &mut mor, &mut used)?.then(|| FunctorData { obj_map: self.obj.clone(), mor_map: mor }));
        }
        for t in 0..self.b.object_count() {
            if self.used_obj[t] {
                continue;
            }
            self.tick()?;
            let consistent = (0..=i).all(|j| {
                let tj = if j == i { t } else { self.obj[j] };
                self.a.hom(i, j).len() == self.b.hom(t, tj).len() && self.a.hom(j, i).len() == self.b.hom(tj, t).len()
            });
            if !consistent {
                continue;
            }
            self.obj[i] = t;
            self.used_obj[t] = true;
            if let Some(found) = self.objects(i + 1)? {
                return Ok(Some(found));
            }
            self.used_obj[t] = false;
            self.obj[i] = usize::MAX;
        }
        Ok(None)
    }

    fn morphisms(&mut self, order: &[usize], k: usize, mor: &mut [usize], used: &mut [bool]) -> Result<bool, SearchExceedsLimit> {
        if k == order.len() {
            return Ok(self.a.compose.iter().all(|(&(g, f), &h)| self.b.compose(mor[g], mor[f]) == Some(mor[h])));
        }
        let f = order[k];
        let m = self.a.morphism(f);
        let (dom, cod) = (self.obj[m.dom], self.obj[m.cod]);
        let is_identity = self.a.identity(m.dom) == f;
        for &t in self.b.hom(dom, cod) {
            if used[t] || (is_identity && self.b.identity(dom) != t) {
                continue;
            }
            self.tick()?;
            mor[f] = t;
            let consistent = self.a.compose.iter().all(|(&(g, h), &c)| {
                let assigned = mor[g] != usize::MAX && mor[h] != usize::MAX && mor[c] != usize::MAX;
                !assigned || self.b.compose(mor[g], mor[h]) == Some(mor[c])
            });
            if consistent {
                used[t] = true;
                if self.morphisms(order, k + 1, mor, used)? {
                    return Ok(true);
                }
                used[t] = false;
            }
            mor[f] = usize::MAX;
        }
        Ok(false)
    }
}

/// Whether the skeletons of `a` and `b` are isomorphic, i.e. whether the
/// categories are equivalent. Exponential; bounded by `limit` search steps.
pub fn skeletons_isomorphic(a: &FiniteCategory, b: &FiniteCategory, limit: usize) -> Result<bool, SearchExceedsLimit> {
    Ok(category_isomorphism(&a.skeleton(), &b.skeleton(), limit)?.is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctorData {
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FunctorError {
    #[error("functor is not total: {what} map has {found} entries, expected {expected}")]
    NotTotal { what: &'static str, expected: usize, found: usize },
    #[error("{what} {index} is mapped outside the target")]
    OutOfRange { what: &'static str, index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum FunctorWitness {
    /// `F(f)` does not go from `F(dom f)` to `F(cod f)`.
    Endpoints { morphism: usize },
    Identity { object: usize },
    Composition { g: usize, f: usize },
    NotFaithful { first: usize, second: usize },
    /// A morphism of `hom(F a, F b)` outside the image of `hom(a, b)`.
    NotFull { from: usize, to: usize, missing: usize },
    NotEssentiallySurjective { object: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctorReport {
    pub functorial: bool,
    pub faithful: bool,
    pub full: bool,
    pub essentially_surjective: bool,
    /// First witness of each failing property.
    pub witnesses: Vec<FunctorWitness>,
}

impl FunctorReport {
    pub fn is_equivalence(&self) -> bool {
        self.functorial && self.faithful && self.full && self.essentially_surjective
    }
}

pub fn check_functor(f: &FunctorData, c: &FiniteCategory, d: &FiniteCategory) -> Result<FunctorReport, FunctorError> {
    check_functor_with(f, c, d, Exec::default())
}

pub fn check_functor_with(
    func: &FunctorData,
    c: &FiniteCategory,
    d: &FiniteCategory,
    exec: Exec,
) -> Result<FunctorReport, FunctorError> {
    if func.obj_map.len() != c.object_count() {
        return Err(FunctorError::NotTotal { what: "object", expected: c.object_count(), found: func.obj_map.len() });
    }
    if func.mor_map.len() != c.morphism_count() {
        return Err(FunctorError::NotTotal { what: "morphism", expected: c.morphism_count(), found: func.mor_map.len() });
    }
    if let Some(i) = func.obj_map.iter().position(|&o| o >= d.object_count()) {
        return Err(FunctorError::OutOfRange { what: "object", index: i });
    }
    if let Some(i) = func.mor_map.iter().position(|&m| m >= d.morphism_count()) {
        return Err(FunctorError::OutOfRange { what: "morphism", index: i });
    }
    let (fo, fm) = (&func.obj_map, &func.mor_map);
    let mut witnesses = Vec::new();

    let endpoint = (0..c.morphism_count()).find(|&m| {
        let (src, img) = (c.morphism(m), d.morphism(fm[m]));
        img.dom != fo[src.dom] || img.cod != fo[src.cod]
    });
    let identity = (0..c.object_count()).find(|&o| fm[c.identity(o)] != d.identity(fo[o]));
    let composition = exec::find_map_first(exec, c.morphism_count(), |f| {
        let cod = c.morphism(f).cod;
        c.outgoing(cod)
            .iter()
            .find(|&&g| d.compose(fm[g], fm[f]) != Some(fm[c.compose(g, f).expect("composable")]))
            .map(|&g| (g, f))
    });
    if let Some(m) = endpoint {
        witnesses.push(FunctorWitness::Endpoints { morphism: m });
    }
    if let Some(o) = identity {
        witnesses.push(FunctorWitness::Identity { object: o });
    }
    if let Some((g, f)) = composition {
        witnesses.push(FunctorWitness::Composition { g, f });
    }
    let functorial = endpoint.is_none() && identity.is_none() && composition.is_none();

    let n = c.object_count();
    let per_source = exec::map_collect(exec, n, |a| {
        let mut unfaithful = None;
        let mut not_full = None;
        for b in 0..n {
            let mut image = HashMap::new();
            for &m in c.hom(a, b) {
                if let Some(&first) = image.get(&fm[m]) {
                    unfaithful.get_or_insert((first, m));
                } else {
                    image.insert(fm[m], m);
                }
            }
            if let Some(&missing) = d.hom(fo[a], fo[b]).iter().find(|t| !image.contains_key(t)) {
                not_full.get_or_insert((a, b, missing));
            }
        }
        (unfaithful, not_full)
    });
    let unfaithful = per_source.iter().find_map(|p| p.0);
    let not_full = per_source.iter().find_map(|p| p.1);
    if let Some((first, second)) = unfaithful {
        witnesses.push(FunctorWitness::NotFaithful { first, second });
    }
    if let Some((from, to, missing)) = not_full {
        witnesses.push(FunctorWitness::NotFull { from, to, missing });
    }

    let classes = d.iso_classes_with(exec);
    let hit: HashSet<usize> = fo.iter().map(|&o| classes[o]).collect();
    let missed = (0..d.object_count()).find(|&o| !hit.contains(&classes[o]));
    if let Some(object) = missed {
        witnesses.push(FunctorWitness::NotEssentiallySurjective { object });
    }

    Ok(FunctorReport {
        functorial,
        faithful: unfaithful.is_none(),
        full: not_full.is_none(),
        essentially_surjective: missed.is_none(),
        witnesses,
    })
}

/// The identity functor of `c`.
pub fn identity_functor(c: &FiniteCategory) -> FunctorData {
    FunctorData { obj_map: (0..c.object_count()).collect(), mor_map: (0..c.morphism_count()).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The arrow category `0 -> 1`.
    fn arrow() -> FiniteCategory {
        let morphisms = vec![
            (Morphism { dom: 0, cod: 0 }, "id0".into()),
            (Morphism { dom: 1, cod: 1 }, "id1".into()),
            (Morphism { dom: 0, cod: 1 }, "a".into()),
        ];
        FiniteCategory::new(vec!["0".into(), "1".into()], morphisms, vec![0, 1], |g, f| match (g, f) {
            (0, 0) => Some(0),
            (1, 1) => Some(1),
            (2, 0) | (1, 2) => Some(2),
            _ => None,
        })
        .unwrap()
    }

    /// Two objects joined by mutually inverse arrows.
    fn iso_pair() -> FiniteCategory {
        let morphisms = vec![
            (Morphism { dom: 0, cod: 0 }, "id0".into()),
            (Morphism { dom: 1, cod: 1 }, "id1".into()),
            (Morphism { dom: 0, cod: 1 }, "a".into()),
            (Morphism { dom: 1, cod: 0 }, "b".into()),
        ];
        FiniteCategory::new(vec!["0".into(), "1".into()], morphisms, vec![0, 1], |g, f| {
            Some(match (g, f) {
                (0, 0) | (3, 2) => 0,
                (1, 1) | (2, 3) => 1,
                (2, 0) | (1, 2) => 2,
                (3, 1) | (0, 3) => 3,
                _ => return None,
            })
        })
        .unwrap()
    }

    fn terminal() -> FiniteCategory {
        FiniteCategory::new(vec!["*".into()], vec![(Morphism { dom: 0, cod: 0 }, "id".into())], vec![0], |_, _| Some(0)).unwrap()
    }

    /// The monoid `{1, e}` with `ee = e` as a one-object category.
    fn idempotent_monoid() -> FiniteCategory {
        let morphisms = vec![(Morphism { dom: 0, cod: 0 }, "1".into()), (Morphism { dom: 0, cod: 0 }, "e".into())];
        FiniteCategory::new(vec!["*".into()], morphisms, vec![0], |g, f| Some(g.max(f))).unwrap()
    }

    #[test]
    fn construction_checks_composites() {
        let morphisms = vec![(Morphism { dom: 0, cod: 0 }, "id".into()), (Morphism { dom: 0, cod: 0 }, "e".into())];
        let err = FiniteCategory::new(vec!["*".into()], morphisms, vec![0], |g, f| (g == 0 || f == 0).then_some(g.max(f)));
        assert_eq!(err.unwrap_err(), CategoryError::MissingComposite { g: 1, f: 1 });
    }

    #[test]
    fn laws_and_isomorphisms() {
        for c in [arrow(), iso_pair(), terminal()] {
            assert_eq!(c.check_laws(), Ok(()));
            assert_eq!(c.check_laws_with(Exec::Sequential), Ok(()));
        }
        assert!(!arrow().is_isomorphism(2));
        assert_eq!(iso_pair().inverse_of(2), Some(3));
        assert_eq!(arrow().iso_classes(), vec![0, 1]);
        assert_eq!(iso_pair().iso_classes(), vec![0, 0]);
        assert_eq!(iso_pair().skeleton().morphism_count(), 1);
    }

    #[test]
    fn broken_associativity_is_reported() {
        // {1, x, y} with xx = y and xy = yx = yy = 1: (xx)y = 1 but x(xy) = x
        let morphisms = (0..3).map(|i| (Morphism { dom: 0, cod: 0 }, format!("m{i}"))).collect();
        let table = [[0, 1, 2], [1, 2, 0], [2, 0, 0]];
        let c = FiniteCategory::new(vec!["*".into()], morphisms, vec![0], |g, f| Some(table[g][f])).unwrap();
        assert!(matches!(c.check_laws(), Err(LawViolation::Associativity { .. })));
    }

    #[test]
    fn functor_flags() {
        let c = iso_pair();
        let report = check_functor(&identity_functor(&c), &c, &c).unwrap();
        assert!(report.is_equivalence());
        assert!(report.witnesses.is_empty());

        // the inclusion of the terminal category into the iso pair is an equivalence
        let incl = FunctorData { obj_map: vec![1], mor_map: vec![1] };
        assert!(check_functor(&incl, &terminal(), &c).unwrap().is_equivalence());

        // but not into the arrow category
        let incl = FunctorData { obj_map: vec![0], mor_map: vec![0] };
        let report = check_functor(&incl, &terminal(), &arrow()).unwrap();
        assert!(report.functorial && report.faithful && report.full);
        assert!(!report.essentially_surjective);

        let collapse = FunctorData { obj_map: vec![0], mor_map: vec![0, 0] };
        let report = check_functor(&collapse, &idempotent_monoid(), &terminal()).unwrap();
        assert!(report.functorial && !report.faithful && report.full && report.essentially_surjective);
        assert_eq!(report.witnesses, [FunctorWitness::NotFaithful { first: 0, second: 1 }]);

        let unit = FunctorData { obj_map: vec![0], mor_map: vec![0] };
        let report = check_functor(&unit, &terminal(), &idempotent_monoid()).unwrap();
        assert!(report.functorial && report.faithful && !report.full);
    }

    #[test]
    fn corrupted_functor_is_not_functorial() {
        let c = iso_pair();
        let swapped = FunctorData { obj_map: vec![0, 1], mor_map: vec![1, 0, 2, 3] };
        let report = check_functor(&swapped, &c, &c).unwrap();
        assert!(!report.functorial);
        assert!(matches!(report.witnesses[0], FunctorWitness::Endpoints { morphism: 0 }));
        assert_eq!(
            check_functor(&FunctorData { obj_map: vec![0], mor_map: vec![] }, &c, &c),
            Err(FunctorError::NotTotal { what: "object", expected: 2, found: 1 })
        );
    }

    #[test]
    fn skeleton_isomorphism_search() {
        assert!(skeletons_isomorphic(&iso_pair(), &terminal(), 1000).unwrap());
        assert!(!skeletons_isomorphic(&arrow(), &terminal(), 1000).unwrap());
        let found = category_isomorphism(&arrow(), &arrow(), 1000).unwrap().unwrap();
        assert_eq!(found, identity_functor(&arrow()));
        assert_eq!(category_isomorphism(&iso_pair(), &iso_pair(), 0), Err(SearchExceedsLimit(0)));
    }

    #[test]
    fn text_form_lists_everything() {
        let text = arrow().to_text();
        assert!(text.contains("morphism 2 a : 0 -> 1"));
        assert!(text.contains("compose 1 2 = 2"));
        assert!(text.starts_with("objects 2\n"));
    }
}
