//! The semilattice of idempotents: order, covers, intervals and the Perrot report.

use serde::Serialize;

use crate::semigroup::ValidatedSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum SemilatticeError {
    #[error("semigroup has no zero")]
    NoZero,
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("idempotents {0} and {1} are not comparable as e <= f")]
    NotComparable(usize, usize),
    #[error("idempotent {0} lies below more than one maximal idempotent")]
    NotUnique(usize),
    #[error("the zero idempotent has no maximal idempotent attached")]
    ZeroHasNoTop,
}

/// `E(S)` with its natural order and cover relation.
///
/// Idempotents are addressed by their semigroup index; internally they are
/// stored at dense positions in increasing index order.
#[derive(Debug, Clone)]
pub struct IdempotentPoset {
    elems: Vec<usize>,
    pos: Vec<Option<usize>>,
    leq: Vec<bool>,
    covers: Vec<bool>,
    zero: usize,
}

/// Order and covers of `E(S)`; covers are found by interval emptiness.
pub fn build_poset(s: &ValidatedSemigroup) -> Result<IdempotentPoset, SemilatticeError> {
    let zero = s.zero().ok_or(SemilatticeError::NoZero)?;
    let elems = s.idempotents().to_vec();
    let k = elems.len();
    let mut pos = vec![None; s.len()];
    for (i, &e) in elems.iter().enumerate() {
        pos[e] = Some(i);
    }
    let mut leq = vec![false; k * k];
    for (i, &e) in elems.iter().enumerate() {
        for (j, &f) in elems.iter().enumerate() {
            leq[i * k + j] = s.mul(e, f) == e;
        }
    }
    let lt = |i: usize, j: usize| i != j && leq[i * k + j];
    let mut covers = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            covers[i * k + j] = lt(i, j) && !(0..k).any(|g| lt(i, g) && lt(g, j));
        }
    }
    Ok(IdempotentPoset { elems, pos, leq, covers, zero })
}

impl IdempotentPoset {
    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    fn position(&self, e: usize) -> Result<usize, SemilatticeError> {
        self.pos.get(e).copied().flatten().ok_or(SemilatticeError::NotIdempotent(e))
    }

    fn k(&self) -> usize {
        self.elems.len()
    }

    /// `e <= f`; false when either is not an idempotent.
    pub fn leq(&self, e: usize, f: usize) -> bool {
        match (self.position(e), self.position(f)) {
            (Ok(i), Ok(j)) => self.leq[i * self.k() + j],
            _ => false,
        }
    }

    pub fn lt(&self, e: usize, f: usize) -> bool {
        e != f && self.leq(e, f)
    }

    pub fn comparable(&self, e: usize, f: usize) -> bool {
        self.leq(e, f) || self.leq(f, e)
    }

    /// `f ≪ e`: `f < e` with nothing strictly between.
    pub fn is_cover(&self, f: usize, e: usize) -> bool {
        match (self.position(f), self.position(e)) {
            (Ok(i), Ok(j)) => self.covers[i * self.k() + j],
            _ => false,
        }
    }

    /// All `f ≪ e`, zero included when `e` is an atom.
    pub fn covers_of(&self, e: usize) -> Vec<usize> {
        self.elems.iter().copied().filter(|&f| self.is_cover(f, e)).collect()
    }

    /// `{f : 0 != f ≪ e}`.
    pub fn nonzero_covers_of(&self, e: usize) -> Vec<usize> {
        self.elems
            .iter()
            .copied()
            .filter(|&f| f != self.zero && self.is_cover(f, e))
            .collect()
    }

    /// All cover pairs `(lower, upper)` in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &f in &self.elems {
            for &e in &self.elems {
                if self.is_cover(f, e) {
                    out.push((f, e));
                }
            }
        }
        out
    }

    /// `{g : e <= g <= f}`, inclusive.
    pub fn interval(&self, e: usize, f: usize) -> Result<Vec<usize>, SemilatticeError> {
        self.position(e)?;
        self.position(f)?;
        if !self.leq(e, f) {
            return Err(SemilatticeError::NotComparable(e, f));
        }
        Ok(self.elems.iter().copied().filter(|&g| self.leq(e, g) && self.leq(g, f)).collect())
    }

    pub fn above(&self, e: usize) -> Vec<usize> {
        self.elems.iter().copied().filter(|&g| self.leq(e, g)).collect()
    }

    /// Nonzero idempotents with nothing strictly above them.
    pub fn maximal_idempotents(&self) -> Vec<usize> {
        self.elems
            .iter()
            .copied()
            .filter(|&e| e != self.zero && !self.elems.iter().any(|&g| self.lt(e, g)))
            .collect()
    }

    /// The maximal idempotents above `e`.
    pub fn maximal_above(&self, e: usize) -> Vec<usize> {
        self.maximal_idempotents().into_iter().filter(|&m| self.leq(e, m)).collect()
    }

    /// `e°`, the unique maximal idempotent above the nonzero idempotent `e`.
    pub fn top(&self, e: usize) -> Result<usize, SemilatticeError> {
        self.position(e)?;
        if e == self.zero {
            return Err(SemilatticeError::ZeroHasNoTop);
        }
        match self.maximal_above(e).as_slice() {
            [m] => Ok(*m),
            _ => Err(SemilatticeError::NotUnique(e)),
        }
    }

    /// Hasse diagram as DOT; an edge `f -> e` means `f ≪ e`.
    pub fn to_dot(&self, s: &ValidatedSemigroup) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for &e in &self.elems {
            out.push_str(&format!("  {};\n", crate::graph::dot_id(&s.name(e))));
        }
        for (f, e) in self.cover_pairs() {
            out.push_str(&format!(
                "  {} -> {};\n",
                crate::graph::dot_id(&s.name(f)),
                crate::graph::dot_id(&s.name(e))
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// A counterexample for a failed Perrot property, lowest indices first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "property")]
pub enum PerrotWitness {
    /// `ef != 0` with `e`, `f` incomparable.
    P1 { e: usize, f: usize },
    /// `e`, `f` incomparable below `g` with `ef != 0`.
    P1Local { e: usize, f: usize, g: usize },
    /// Nonzero `e` below two distinct maximal idempotents.
    P3 { e: usize, maximal: (usize, usize) },
    /// A nonzero D-class without a maximal idempotent; `e` is its lowest idempotent.
    P4 { d_class: usize, e: usize },
    /// A nonzero D-class with two maximal idempotents.
    Proper { d_class: usize, maximal: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerrotReport {
    pub p1: bool,
    pub p1_local: bool,
    pub p2: bool,
    pub p2_local: bool,
    pub p3: bool,
    pub p4: bool,
    pub proper: bool,
    pub witnesses: Vec<PerrotWitness>,
    /// Largest number of idempotents above a nonzero idempotent.
    pub max_idempotents_above: usize,
    /// Largest interval `[e, f]` with `0 != e <= f`.
    pub max_interval_size: usize,
}

pub fn perrot_report(s: &ValidatedSemigroup) -> Result<PerrotReport, SemilatticeError> {
    let poset = build_poset(s)?;
    Ok(perrot_report_for(s, &poset))
}

pub fn perrot_report_for(s: &ValidatedSemigroup, poset: &IdempotentPoset) -> PerrotReport {
    let zero = poset.zero();
    let es = poset.elems();
    let nonzero: Vec<usize> = es.iter().copied().filter(|&e| e != zero).collect();
    let mut witnesses = Vec::new();

    let p1_witness = nonzero.iter().enumerate().find_map(|(i, &e)| {
        nonzero[i + 1..]
            .iter()
            .find(|&&f| s.mul(e, f) != zero && !poset.comparable(e, f))
            .map(|&f| PerrotWitness::P1 { e, f })
    });
    let p1 = p1_witness.is_none();
    witnesses.extend(p1_witness);

    let p1_local_witness = nonzero.iter().enumerate().find_map(|(i, &e)| {
        nonzero[i + 1..].iter().find_map(|&f| {
            if poset.comparable(e, f) || s.mul(e, f) == zero {
                return None;
            }
            es.iter()
                .find(|&&g| poset.leq(e, g) && poset.leq(f, g))
                .map(|&g| PerrotWitness::P1Local { e, f, g })
        })
    });
    let p1_local = p1_local_witness.is_none();
    witnesses.extend(p1_local_witness);

    // Finite inputs: every interval and every up-set is finite.
    let max_idempotents_above = nonzero.iter().map(|&e| poset.above(e).len()).max().unwrap_or(0);
    let max_interval_size = nonzero
        .iter()
        .flat_map(|&e| poset.above(e).into_iter().map(move |f| (e, f)))
        .map(|(e, f)| poset.interval(e, f).map_or(0, |i| i.len()))
        .max()
        .unwrap_or(0);
    let p2 = true;
    let p2_local = true;

    let p3_witness = nonzero.iter().find_map(|&e| match poset.maximal_above(e).as_slice() {
        [a, b, ..] => Some(PerrotWitness::P3 { e, maximal: (*a, *b) }),
        _ => None,
    });
    let p3 = p3_witness.is_none();
    witnesses.extend(p3_witness);

    let green = s.green_data();
    let maximal = poset.maximal_idempotents();
    let zero_class = green.d[zero];
    let mut p4 = true;
    let mut unique_max = true;
    for class in 0..green.d_class_count() {
        if class == zero_class {
            continue;
        }
        let class_idempotents: Vec<usize> = nonzero.iter().copied().filter(|&e| green.d[e] == class).collect();
        let class_max: Vec<usize> = maximal.iter().copied().filter(|&e| green.d[e] == class).collect();
        match class_max.as_slice() {
            [] => {
                if p4 {
                    witnesses.push(PerrotWitness::P4 { d_class: class, e: class_idempotents[0] });
                }
                p4 = false;
            }
            [_] => {}
            [a, b, ..] => {
                if unique_max {
                    witnesses.push(PerrotWitness::Proper { d_class: class, maximal: (*a, *b) });
                }
                unique_max = false;
            }
        }
    }
    let proper = p1 && p2 && p3 && p4 && unique_max;

    PerrotReport { p1, p1_local, p2, p2_local, p3, p4, proper, witnesses, max_idempotents_above, max_interval_size }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, SL5_E, SL5_F, SL5_G, SL5_M, SL5_ZERO};

    #[test]
    fn sl5_covers() {
        let s = fixtures::sl5();
        let p = build_poset(&s).unwrap();
        let mut covers = p.cover_pairs();
        covers.sort();
        let mut expected = vec![(SL5_M, SL5_E), (SL5_M, SL5_F), (SL5_E, SL5_G), (SL5_F, SL5_G), (SL5_ZERO, SL5_M)];
        expected.sort();
        assert_eq!(covers, expected);
    }

    #[test]
    fn gis_g2_covers() {
        let g2 = fixtures::gis_g2();
        let s = &g2.semigroup;
        let p = build_poset(s).unwrap();
        let (uu, vv, xx) = (g2.lookup("u", "u").unwrap(), g2.lookup("v", "v").unwrap(), g2.lookup("x", "x").unwrap());
        let nonzero: Vec<_> = p.cover_pairs().into_iter().filter(|&(f, _)| f != p.zero()).collect();
        assert_eq!(nonzero, vec![(xx, vv)]);
        let mut max = p.maximal_idempotents();
        max.sort();
        let mut expected = vec![uu, vv];
        expected.sort();
        assert_eq!(max, expected);
    }

    #[test]
    fn s2_single_cover() {
        let s = fixtures::s2();
        let p = build_poset(&s).unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1)]);
        assert_eq!(p.maximal_idempotents(), vec![1]);
        assert_eq!(p.nonzero_covers_of(1), Vec::<usize>::new());
    }

    #[test]
    fn intervals() {
        let s = fixtures::sl5();
        let p = build_poset(&s).unwrap();
        assert_eq!(p.interval(SL5_ZERO, SL5_G).unwrap().len(), 5);
        assert_eq!(p.interval(SL5_E, SL5_E).unwrap(), vec![SL5_E]);
        let mut mg = p.interval(SL5_M, SL5_G).unwrap();
        mg.sort();
        assert_eq!(mg, vec![SL5_G, SL5_E, SL5_F, SL5_M]);
        assert_eq!(p.interval(SL5_E, SL5_F), Err(SemilatticeError::NotComparable(SL5_E, SL5_F)));
    }

    #[test]
    fn b2_maximal_and_top() {
        let s = fixtures::b2();
        let p = build_poset(&s).unwrap();
        assert_eq!(p.maximal_idempotents(), vec![fixtures::B2_ID1, fixtures::B2_ID2]);
        assert_eq!(p.top(fixtures::B2_ID2), Ok(fixtures::B2_ID2));
        assert_eq!(p.top(fixtures::B2_ZERO), Err(SemilatticeError::ZeroHasNoTop));
    }

    #[test]
    fn top_not_unique_in_sl4_shape() {
        // e, f maximal over m: m° is ambiguous
        let s = fixtures::vee_semilattice();
        let p = build_poset(&s).unwrap();
        assert!(matches!(p.top(fixtures::VEE_C), Err(SemilatticeError::NotUnique(_))));
    }

    #[test]
    fn no_zero() {
        let s = fixtures::swap_group();
        assert_eq!(build_poset(&s).unwrap_err(), SemilatticeError::NoZero);
    }

    #[test]
    fn perrot_sl5() {
        let r = perrot_report(&fixtures::sl5()).unwrap();
        assert!(!r.p1 && !r.p1_local);
        assert!(r.witnesses.contains(&PerrotWitness::P1 { e: SL5_E, f: SL5_F }));
        assert!(r.witnesses.contains(&PerrotWitness::P1Local { e: SL5_E, f: SL5_F, g: SL5_G }));
    }

    #[test]
    fn perrot_gis_g2_is_proper() {
        let r = perrot_report(&fixtures::gis_g2().semigroup).unwrap();
        assert!(r.p1 && r.p1_local && r.p2 && r.p2_local && r.p3 && r.p4 && r.proper);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn perrot_b2_not_proper() {
        let r = perrot_report(&fixtures::b2()).unwrap();
        assert!(r.p1 && r.p2 && r.p3 && r.p4);
        assert!(!r.proper);
        assert_eq!(
            r.witnesses,
            vec![PerrotWitness::Proper { d_class: 1, maximal: (fixtures::B2_ID1, fixtures::B2_ID2) }]
        );
    }

    #[test]
    fn covers_are_antichains_that_dominate() {
        for (_, s) in fixtures::semigroup_fixtures() {
            let Ok(p) = build_poset(&s) else { continue };
            for &e in p.elems() {
                let covers = p.covers_of(e);
                for &a in &covers {
                    for &b in &covers {
                        assert!(a == b || !p.comparable(a, b));
                    }
                }
                for &f in p.elems() {
                    if f != p.zero() && p.lt(f, e) {
                        assert!(covers.iter().any(|&c| p.leq(f, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn p1_implies_p1_local_on_corpus() {
        for (_, s) in fixtures::semigroup_fixtures() {
            if let Ok(r) = perrot_report(&s) {
                assert!(!r.p1 || r.p1_local);
                assert!(r.p2_local);
            }
        }
    }
}
