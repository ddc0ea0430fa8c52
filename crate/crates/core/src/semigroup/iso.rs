//! Isomorphism search between finite inverse semigroups.

use super::{GreenData, ValidatedSemigroup};
use crate::{SearchExceedsLimit, DEFAULT_SEARCH_LIMIT};

/// Per-element data preserved by every isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Signature {
    idempotent: bool,
    zero: bool,
    h_size: usize,
    l_size: usize,
    d_size: usize,
    /// Number of idempotents below `s*s`.
    below_dom: usize,
    /// (index, period) of the monogenic subsemigroup generated by `s`.
    index_period: (usize, usize),
}

fn signatures(s: &ValidatedSemigroup) -> Vec<Signature> {
    let green = s.green_data();
    let h_sizes = GreenData::class_sizes(&green.h);
    let l_sizes = GreenData::class_sizes(&green.l);
    let d_sizes = GreenData::class_sizes(&green.d);
    s.elements()
        .map(|x| {
            let dom = s.dom(x);
            Signature {
                idempotent: s.is_idempotent(x),
                zero: s.is_zero(x),
                h_size: h_sizes[green.h[x]],
                l_size: l_sizes[green.l[x]],
                d_size: d_sizes[green.d[x]],
                below_dom: s.idempotents().iter().filter(|&&f| s.mul(f, dom) == f).count(),
                index_period: monogenic(s, x),
            }
        })
        .collect()
}

fn monogenic(s: &ValidatedSemigroup, x: usize) -> (usize, usize) {
    let mut powers = vec![x];
    loop {
        let next = s.mul(*powers.last().unwrap(), x);
        if let Some(i) = powers.iter().position(|&p| p == next) {
            return (i + 1, powers.len() - i);
        }
        powers.push(next);
    }
}

pub fn semigroup_isomorphic(a: &ValidatedSemigroup, b: &ValidatedSemigroup) -> Result<Option<Vec<usize>>, SearchExceedsLimit> {
    semigroup_isomorphic_with_limit(a, b, DEFAULT_SEARCH_LIMIT)
}

/// A multiplication-preserving bijection `a -> b`, found by backtracking over
/// elements with candidates restricted to matching [`Signature`]s.
pub fn semigroup_isomorphic_with_limit(
    a: &ValidatedSemigroup,
    b: &ValidatedSemigroup,
    limit: usize,
) -> Result<Option<Vec<usize>>, SearchExceedsLimit> {
    if a.len() != b.len() || a.idempotents().len() != b.idempotents().len() {
        return Ok(None);
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    // Most constrained elements first: smallest candidate set.
    let mut order: Vec<usize> = a.elements().collect();
    order.sort_by_key(|&x| (sb.iter().filter(|s| **s == sa[x]).count(), x));
    let candidates: Vec<Vec<usize>> = a
        .elements()
        .map(|x| b.elements().filter(|&y| sb[y] == sa[x]).collect())
        .collect();

    let mut search = Search {
        a,
        b,
        order: &order,
        candidates: &candidates,
        map: vec![usize::MAX; a.len()],
        used: vec![false; b.len()],
        steps: 0,
        limit,
    };
    if search.extend(0)? {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    a: &'a ValidatedSemigroup,
    b: &'a ValidatedSemigroup,
    order: &'a [usize],
    candidates: &'a [Vec<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
    steps: usize,
    limit: usize,
}

impl Search<'_> {
    fn consistent(&self, x: usize) -> bool {
        let (a, b, map) = (self.a, self.b, &self.map);
        let fx = map[x];
        for y in a.elements() {
            let fy = map[y];
            if fy == usize::MAX {
                continue;
            }
            let xy = map[a.mul(x, y)];
            if xy != usize::MAX && xy != b.mul(fx, fy) {
                return false;
            }
            let yx = map[a.mul(y, x)];
            if yx != usize::MAX && yx != b.mul(fy, fx) {
                return false;
            }
        }
        let inv = map[a.inv(x)];
        inv == usize::MAX || inv == b.inv(fx)
    }

    fn extend(&mut self, depth: usize) -> Result<bool, SearchExceedsLimit> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let x = self.order[depth];
        for &y in &self.candidates[x] {
            if self.used[y] {
                continue;
            }
            self.steps += 1;
            if self.steps > self.limit {
                return Err(SearchExceedsLimit(self.limit));
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.consistent(x) && self.extend(depth + 1)? {
                return Ok(true);
            }
            self.map[x] = usize::MAX;
            self.used[y] = false;
        }
        Ok(false)
    }
}
