//! Inverse semigroups generated by partial bijections of a finite set.

use std::collections::{HashSet, VecDeque};

use super::MultiplicationTable;

/// A partial injective map on `{0, .., n-1}`; `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialBijection {
    images: Vec<Option<usize>>,
}

impl PartialBijection {
    /// `None` if some image is out of range or two points share an image.
    pub fn new(images: Vec<Option<usize>>) -> Option<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for y in images.iter().flatten() {
            if *y >= n || std::mem::replace(&mut hit[*y], true) {
                return None;
            }
        }
        Some(PartialBijection { images })
    }

    pub fn empty(domain_size: usize) -> Self {
        PartialBijection { images: vec![None; domain_size] }
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.images[x]
    }

    pub fn is_empty(&self) -> bool {
        self.images.iter().all(Option::is_none)
    }

    /// `self ∘ other`: apply `other` first. With this convention `s* s` is the
    /// identity on the domain of `s` and `s s*` the identity on its image.
    pub fn compose(&self, other: &PartialBijection) -> PartialBijection {
        PartialBijection {
            images: other.images.iter().map(|y| y.and_then(|y| self.images[y])).collect(),
        }
    }

    pub fn inverse(&self) -> PartialBijection {
        let mut images = vec![None; self.images.len()];
        for (x, y) in self.images.iter().enumerate() {
            if let Some(y) = y {
                images[*y] = Some(x);
            }
        }
        PartialBijection { images }
    }

    /// The graph `{(x, f(x))}` in increasing `x`.
    pub fn graph(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .filter_map(|(x, y)| y.map(|y| (x, y)))
            .collect()
    }

    /// Display name with 1-based points, e.g. `{1>2,2>1}`; the empty map is `0`.
    pub fn name(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let pairs: Vec<String> = self.graph().iter().map(|(x, y)| format!("{}>{}", x + 1, y + 1)).collect();
        format!("{{{}}}", pairs.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerationOptions {
    /// Adjoin the empty map even when the closure does not produce it.
    pub include_zero: bool,
    /// Maximum number of elements in the closure.
    pub limit: usize,
}

impl Default for GenerationOptions {
    fn default() -> Self {
        GenerationOptions { include_zero: false, limit: 10_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("generator {0} is not injective or maps outside the domain")]
    NotInjective(usize),
    #[error("generator {index} acts on {found} points, expected {expected}")]
    DomainMismatch { index: usize, expected: usize, found: usize },
    #[error("closure exceeds {0} elements")]
    ClosureExceedsLimit(usize),
}

/// The generated table together with the partial maps its elements denote.
#[derive(Debug, Clone)]
pub struct Generated {
    pub table: MultiplicationTable,
    pub maps: Vec<PartialBijection>,
}

/// Closes the generators under composition and inversion.
///
/// Elements are ordered with the empty map first (when present) and then by
/// the lexicographic order of their graphs. The empty map, when present, is
/// the zero of the table.
pub fn generate_from_partial_bijections(
    domain_size: usize,
    generators: &[Vec<Option<usize>>],
    options: GenerationOptions,
) -> Result<Generated, GenerateError> {
    let mut gens = Vec::with_capacity(2 * generators.len());
    for (index, images) in generators.iter().enumerate() {
        if images.len() != domain_size {
            return Err(GenerateError::DomainMismatch { index, expected: domain_size, found: images.len() });
        }
        let g = PartialBijection::new(images.clone()).ok_or(GenerateError::NotInjective(index))?;
        gens.push(g.inverse());
        gens.push(g);
    }

    // Every product of generators and their inverses is reached by
    // right-multiplying by one more generator; that set is closed under inverse.
    let mut seen: HashSet<PartialBijection> = HashSet::new();
    let mut queue = VecDeque::new();
    for g in &gens {
        if seen.insert(g.clone()) {
            queue.push_back(g.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.compose(g);
            if !seen.contains(&y) {
                if seen.len() >= options.limit {
                    return Err(GenerateError::ClosureExceedsLimit(options.limit));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    if options.include_zero {
        seen.insert(PartialBijection::empty(domain_size));
    }
    if seen.len() > options.limit {
        return Err(GenerateError::ClosureExceedsLimit(options.limit));
    }

    let mut maps: Vec<PartialBijection> = seen.into_iter().collect();
    maps.sort_by_cached_key(PartialBijection::graph);
    let index: std::collections::HashMap<&PartialBijection, usize> =
        maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let zero = maps.first().filter(|m| m.is_empty()).map(|_| 0);
    let table = MultiplicationTable::from_fn(maps.len(), zero, |a, b| index[&maps[a].compose(&maps[b])])
        .and_then(|t| t.with_names(maps.iter().map(PartialBijection::name).collect()))
        .expect("closure is closed under composition");
    Ok(Generated { table, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::validate;

    #[test]
    fn single_partial_map_generates_b2() {
        let g = generate_from_partial_bijections(2, &[vec![Some(1), None]], GenerationOptions::default()).unwrap();
        let names: Vec<String> = (0..5).map(|i| g.table.name(i)).collect();
        assert_eq!(names, ["0", "{1>1}", "{1>2}", "{2>1}", "{2>2}"]);
        assert_eq!(g.table.declared_zero(), Some(0));
        let s = validate(g.table).unwrap();
        assert_eq!(s.len(), 5);
        // {1>2} has domain {1} and image {2}
        assert_eq!(s.dom(2), 1);
        assert_eq!(s.ran(2), 4);
    }

    #[test]
    fn identity_on_one_point() {
        let g = generate_from_partial_bijections(1, &[vec![Some(0)]], GenerationOptions::default()).unwrap();
        assert_eq!(g.table.len(), 1);
        assert_eq!(g.table.declared_zero(), None);
    }

    #[test]
    fn swap_generates_group_without_zero() {
        let g = generate_from_partial_bijections(2, &[vec![Some(1), Some(0)]], GenerationOptions::default()).unwrap();
        assert_eq!(g.table.len(), 2);
        let s = validate(g.table).unwrap();
        assert_eq!(s.zero(), None);
    }

    #[test]
    fn requested_zero_is_adjoined() {
        let opts = GenerationOptions { include_zero: true, ..Default::default() };
        let g = generate_from_partial_bijections(2, &[vec![Some(1), Some(0)]], opts).unwrap();
        assert_eq!(g.table.len(), 3);
        assert_eq!(validate(g.table).unwrap().zero(), Some(0));
    }

    #[test]
    fn rejects_non_injective_generator() {
        let err = generate_from_partial_bijections(2, &[vec![Some(0), Some(0)]], GenerationOptions::default());
        assert_eq!(err.unwrap_err(), GenerateError::NotInjective(0));
    }

    #[test]
    fn closure_limit() {
        // full symmetric group on 4 points has 24 elements
        let gens = [vec![Some(1), Some(0), Some(2), Some(3)], vec![Some(1), Some(2), Some(3), Some(0)]];
        let opts = GenerationOptions { limit: 10, ..Default::default() };
        assert_eq!(
            generate_from_partial_bijections(4, &gens, opts).unwrap_err(),
            GenerateError::ClosureExceedsLimit(10)
        );
        assert_eq!(generate_from_partial_bijections(4, &gens, Default::default()).unwrap().table.len(), 24);
    }
}
