use std::collections::HashMap;

use serde::Serialize;

use super::{FiniteCategory, Morphism};
use crate::semigroup::ValidatedSemigroup;
use crate::semilattice::{build_poset, IdempotentPoset, SemilatticeError};

/// A morphism `(cod, elem, dom)` with `elem ∈ cod · S · dom`. Composition is
/// `(e, s, f)(f, t, g) = (e, st, g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    pub cod: usize,
    pub elem: usize,
    pub dom: usize,
}

/// A category built from a semigroup, with objects labelled by idempotents
/// and morphisms by triples.
#[derive(Debug, Clone)]
pub struct SemigroupCategory {
    pub category: FiniteCategory,
    /// Idempotent of each object.
    pub objects: Vec<usize>,
    pub triples: Vec<Triple>,
    object_index: HashMap<usize, usize>,
    triple_index: HashMap<Triple, usize>,
}

impl SemigroupCategory {
    fn build(s: &ValidatedSemigroup, objects: Vec<usize>, triples: Vec<Triple>, invertible: impl Fn(&Triple) -> bool) -> Self {
        let object_index: HashMap<usize, usize> = objects.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let triple_index: HashMap<Triple, usize> = triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let morphisms = triples
            .iter()
            .map(|t| {
                let m = Morphism { dom: object_index[&t.dom], cod: object_index[&t.cod] };
                (m, format!("({},{},{})", s.name(t.cod), s.name(t.elem), s.name(t.dom)))
            })
            .collect();
        let identities = objects.iter().map(|&e| triple_index[&Triple { cod: e, elem: e, dom: e }]).collect();
        let category = FiniteCategory::new(
            objects.iter().map(|&e| s.name(e)).collect(),
            morphisms,
            identities,
            |g, f| {
                let (tg, tf) = (triples[g], triples[f]);
                triple_index.get(&Triple { cod: tg.cod, elem: s.mul(tg.elem, tf.elem), dom: tf.dom }).copied()
            },
        )
        .expect("semigroup categories are closed under composition")
        .with_invertible(triples.iter().map(invertible).collect());
        SemigroupCategory { category, objects, triples, object_index, triple_index }
    }

    pub fn object_of(&self, e: usize) -> Option<usize> {
        self.object_index.get(&e).copied()
    }

    pub fn morphism_of(&self, t: Triple) -> Option<usize> {
        self.triple_index.get(&t).copied()
    }
}

fn object_idempotents(s: &ValidatedSemigroup, include_zero: bool) -> Vec<usize> {
    s.idempotents().iter().copied().filter(|&e| include_zero || !s.is_zero(e)).collect()
}

/// The idempotent splitting `C(S)`: objects the idempotents, morphisms
/// `(e, s, f)` with `ss* ≤ e` and `s*s ≤ f`.
pub fn karoubi(s: &ValidatedSemigroup, include_zero_object: bool) -> SemigroupCategory {
    let objects = object_idempotents(s, include_zero_object);
    let leq = |a: usize, b: usize| s.mul(a, b) == a;
    let mut triples = Vec::new();
    for &e in &objects {
        for x in s.elements() {
            if !leq(s.ran(x), e) {
                continue;
            }
            for &f in &objects {
                if leq(s.dom(x), f) {
                    triples.push(Triple { cod: e, elem: x, dom: f });
                }
            }
        }
    }
    SemigroupCategory::build(s, objects, triples, |t| t.cod == s.ran(t.elem) && t.dom == s.dom(t.elem))
}

/// `L(S)`: the morphisms `(f, s, s*s)` of `C(S)` with `ss* ≤ f`.
pub fn left_category(s: &ValidatedSemigroup, include_zero_object: bool) -> SemigroupCategory {
    let objects = object_idempotents(s, include_zero_object);
    let mut triples = Vec::new();
    for &f in &objects {
        for x in s.elements() {
            let d = s.dom(x);
            if s.mul(s.ran(x), f) == s.ran(x) && (include_zero_object || !s.is_zero(d)) {
                triples.push(Triple { cod: f, elem: x, dom: d });
            }
        }
    }
    SemigroupCategory::build(s, objects, triples, |t| t.cod == s.ran(t.elem))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathCategoryError {
    #[error("semigroup has no zero")]
    NoZero,
    #[error("idempotent {0} lies below more than one maximal idempotent")]
    P3Fails(usize),
}

/// `P(S)`: objects the maximal idempotents; arrows `(e, s)` with `s*s`
/// maximal and `(ss*)° = e`, from `s*s` to `e`. Arrow `(e, s)` is stored as
/// the triple `(e, s, s*s)`.
pub fn path_category(s: &ValidatedSemigroup) -> Result<SemigroupCategory, PathCategoryError> {
    let poset = build_poset(s).map_err(|_| PathCategoryError::NoZero)?;
    path_category_for(s, &poset)
}

pub(crate) fn path_category_for(s: &ValidatedSemigroup, poset: &IdempotentPoset) -> Result<SemigroupCategory, PathCategoryError> {
    let mut top = HashMap::new();
    for &e in poset.elems() {
        match poset.top(e) {
            Ok(m) => {
                top.insert(e, m);
            }
            Err(SemilatticeError::ZeroHasNoTop) => {}
            Err(_) => return Err(PathCategoryError::P3Fails(e)),
        }
    }
    let objects = poset.maximal_idempotents();
    let mut triples = Vec::new();
    for &e in &objects {
        for x in s.elements() {
            let d = s.dom(x);
            if objects.contains(&d) && top.get(&s.ran(x)) == Some(&e) {
                triples.push(Triple { cod: e, elem: x, dom: d });
            }
        }
    }
    Ok(SemigroupCategory::build(s, objects, triples, |t| t.cod == s.ran(t.elem)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn triples_named(c: &SemigroupCategory, s: &ValidatedSemigroup) -> Vec<String> {
        c.triples.iter().map(|t| format!("({},{},{})", s.name(t.cod), s.name(t.elem), s.name(t.dom))).collect()
    }

    #[test]
    fn karoubi_s2() {
        let s = fixtures::s2();
        let c = karoubi(&s, true);
        assert_eq!(c.category.object_count(), 2);
        let mut names = triples_named(&c, &s);
        names.sort();
        assert_eq!(names, ["(0,0,0)", "(0,0,e)", "(e,0,0)", "(e,0,e)", "(e,e,e)"]);
        let c = karoubi(&s, false);
        assert_eq!(triples_named(&c, &s), ["(e,0,e)", "(e,e,e)"]);
    }

    #[test]
    fn left_category_examples() {
        let s = fixtures::s2();
        let mut names = triples_named(&left_category(&s, true), &s);
        names.sort();
        assert_eq!(names, ["(0,0,0)", "(e,0,0)", "(e,e,e)"]);
        let b2 = fixtures::b2();
        let l = left_category(&b2, false);
        assert_eq!((l.category.object_count(), l.category.morphism_count()), (2, 4));
        for include in [false, true] {
            for (_, s) in fixtures::semigroup_fixtures() {
                let k = karoubi(&s, include);
                assert!(left_category(&s, include).triples.iter().all(|&t| k.morphism_of(t).is_some()));
            }
        }
    }

    #[test]
    fn laws_hold_on_all_fixtures() {
        for (name, s) in fixtures::semigroup_fixtures() {
            for include in [false, true] {
                assert_eq!(karoubi(&s, include).category.check_laws(), Ok(()), "{name}");
                assert_eq!(left_category(&s, include).category.check_laws(), Ok(()), "{name}");
            }
            if let Ok(p) = path_category(&s) {
                assert_eq!(p.category.check_laws(), Ok(()), "{name}");
            }
        }
    }

    #[test]
    fn shortcut_agrees_with_search() {
        for (name, s) in fixtures::semigroup_fixtures() {
            let c = karoubi(&s, true);
            let plain = FiniteCategory::new(
                (0..c.category.object_count()).map(|o| c.category.object_name(o).to_string()).collect(),
                (0..c.category.morphism_count()).map(|m| (c.category.morphism(m), String::new())).collect(),
                (0..c.category.object_count()).map(|o| c.category.identity(o)).collect(),
                |g, f| c.category.compose(g, f),
            )
            .unwrap();
            for m in 0..c.category.morphism_count() {
                assert_eq!(c.category.is_isomorphism(m), plain.is_isomorphism(m), "{name} {m}");
            }
        }
    }

    #[test]
    fn isomorphic_objects_are_d_related() {
        for (name, s) in fixtures::semigroup_fixtures() {
            let c = karoubi(&s, true);
            let classes = c.category.iso_classes();
            let d = &s.green_data().d;
            for (i, &e) in c.objects.iter().enumerate() {
                for (j, &f) in c.objects.iter().enumerate() {
                    assert_eq!(classes[i] == classes[j], d[e] == d[f], "{name}: {e} {f}");
                }
            }
        }
        let b2 = fixtures::b2();
        let c = karoubi(&b2, false);
        let classes = c.category.iso_classes();
        assert_eq!(classes[c.object_of(fixtures::B2_ID1).unwrap()], classes[c.object_of(fixtures::B2_ID2).unwrap()]);
    }

    #[test]
    fn path_category_examples() {
        let s2 = fixtures::s2();
        let p = path_category(&s2).unwrap();
        assert_eq!((p.category.object_count(), p.category.morphism_count()), (1, 1));
        let p = path_category(&fixtures::b2()).unwrap();
        assert_eq!((p.category.object_count(), p.category.morphism_count()), (2, 4));

        let g2 = fixtures::gis_g2();
        let s = &g2.semigroup;
        let p = path_category(s).unwrap();
        let (uu, vv) = (g2.lookup("u", "u").unwrap(), g2.lookup("v", "v").unwrap());
        assert_eq!(p.objects, [uu, vv]);
        let xu = g2.lookup("x", "u").unwrap();
        assert!(p.morphism_of(Triple { cod: vv, elem: xu, dom: uu }).is_some());
        assert_eq!(p.category.morphism_count(), 3);

        assert_eq!(path_category(&fixtures::vee_semilattice()).unwrap_err(), PathCategoryError::P3Fails(fixtures::VEE_C));
        assert_eq!(path_category(&fixtures::swap_group()).unwrap_err(), PathCategoryError::NoZero);
    }
}
