use serde::Serialize;

use super::MultiplicationTable;

/// Green's relations as partitions of the element set.
///
/// Class ids are dense and numbered by first occurrence in element order.
/// In an inverse semigroup `s L t` iff `s*s = t*t`, `s R t` iff `ss* = tt*`,
/// `H = L ∩ R`, and `s D t` iff the domain idempotents are D-related, where
/// idempotents `e D f` iff some `x` has `x*x = e` and `xx* = f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenData {
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub h: Vec<usize>,
    pub d: Vec<usize>,
    pub combinatorial: bool,
}

fn dense_ids<K: Eq + std::hash::Hash + Copy>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut seen = std::collections::HashMap::new();
    keys.map(|k| {
        let next = seen.len();
        *seen.entry(k).or_insert(next)
    })
    .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl GreenData {
    pub(crate) fn compute(table: &MultiplicationTable, inv: &[usize], idempotents: &[usize]) -> Self {
        let n = table.len();
        let dom: Vec<usize> = (0..n).map(|s| table.product(inv[s], s)).collect();
        let ran: Vec<usize> = (0..n).map(|s| table.product(s, inv[s])).collect();

        let l = dense_ids(dom.iter().copied());
        let r = dense_ids(ran.iter().copied());
        let h = dense_ids(dom.iter().copied().zip(ran.iter().copied()));

        // {(x*x, xx*)} is already an equivalence on E(S); union-find just labels it.
        let mut parent: Vec<usize> = (0..n).collect();
        for x in 0..n {
            let (a, b) = (find(&mut parent, dom[x]), find(&mut parent, ran[x]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let d = dense_ids((0..n).map(|s| find(&mut parent, dom[s])));
        debug_assert!(idempotents.iter().all(|&e| dom[e] == e));

        let combinatorial = h.iter().copied().collect::<std::collections::HashSet<_>>().len() == n;
        GreenData { l, r, h, d, combinatorial }
    }

    pub fn d_class_count(&self) -> usize {
        self.d.iter().max().map_or(0, |m| m + 1)
    }

    pub fn h_class_count(&self) -> usize {
        self.h.iter().max().map_or(0, |m| m + 1)
    }

    pub fn d_class(&self, class: usize) -> Vec<usize> {
        members(&self.d, class)
    }

    pub fn h_class(&self, class: usize) -> Vec<usize> {
        members(&self.h, class)
    }

    /// Lowest pair of distinct H-related elements, if any.
    pub fn nontrivial_h_pair(&self) -> Option<(usize, usize)> {
        let mut first = std::collections::HashMap::new();
        for (s, &c) in self.h.iter().enumerate() {
            if let Some(&t) = first.get(&c) {
                return Some((t, s));
            }
            first.insert(c, s);
        }
        None
    }

    pub(crate) fn class_sizes(partition: &[usize]) -> Vec<usize> {
        let mut sizes = vec![0; partition.iter().max().map_or(0, |m| m + 1)];
        for &c in partition {
            sizes[c] += 1;
        }
        sizes
    }
}

fn members(partition: &[usize], class: usize) -> Vec<usize> {
    partition
        .iter()
        .enumerate()
        .filter_map(|(s, &c)| (c == class).then_some(s))
        .collect()
}
