use std::collections::HashSet;

use super::{span, FiniteAbelianGroup, FiniteGroup};
use crate::error::{Limits, Result};

/// A subgroup, by a canonical generator list and its sorted element set.
///
/// The generators are the greedy ascending-index spanning set: scanning the
/// elements in index order, an element is kept when it is not generated by
/// the ones kept before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    pub generators: Vec<usize>,
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn generated_by<G: FiniteGroup + ?Sized>(g: &G, gens: &[usize]) -> Self {
        let elements = span(g, gens);
        Self::from_elements(g, elements)
    }

    /// `elements` must be sorted and closed.
    pub(crate) fn from_elements<G: FiniteGroup + ?Sized>(g: &G, elements: Vec<usize>) -> Self {
        let mut generators = Vec::new();
        let mut inside = vec![false; g.order()];
        inside[g.identity()] = true;
        for &x in &elements {
            if inside[x] {
                continue;
            }
            generators.push(x);
            for y in span(g, &generators) {
                inside[y] = true;
            }
        }
        Subgroup {
            generators,
            elements,
        }
    }

    pub fn trivial<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        Subgroup {
            generators: Vec::new(),
            elements: vec![g.identity()],
        }
    }

    pub fn whole<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        Self::from_elements(g, (0..g.order()).collect())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    fn sort_key(&self) -> (usize, &[usize]) {
        (self.elements.len(), &self.generators)
    }
}

/// All subgroups of an abelian group, sorted by (order, generators).
pub fn enumerate_subgroups(a: &FiniteAbelianGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_of(a, limits)
}

/// All subgroups of any finite group, found by repeatedly joining a known
/// subgroup with one more element. Sorted by (order, generators).
pub fn enumerate_subgroups_of<G: FiniteGroup + ?Sized>(
    g: &G,
    limits: &Limits,
) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_where(g, limits, |_| true)
}

/// Subgroups all of whose elements satisfy `keep`. The family is closed
/// under taking subgroups, so the search only joins through members of it.
pub fn enumerate_subgroups_where<G: FiniteGroup + ?Sized>(
    g: &G,
    limits: &Limits,
    keep: impl Fn(usize) -> bool,
) -> Result<Vec<Subgroup>> {
    limits.check_group("group", g.order())?;
    let n = g.order();
    let candidates: Vec<usize> = (0..n).filter(|&x| x != g.identity() && keep(x)).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let trivial = vec![g.identity()];
    seen.insert(trivial.clone());
    let mut found: Vec<(Vec<usize>, Vec<usize>)> = vec![(trivial, Vec::new())];
    let mut i = 0;
    while i < found.len() {
        let (current, base_gens) = found[i].clone();
        let mut inside = vec![false; n];
        for &x in &current {
            inside[x] = true;
        }
        for &x in &candidates {
            if inside[x] {
                continue;
            }
            let mut gens = base_gens.clone();
            gens.push(x);
            let joined = span(g, &gens);
            if joined.iter().all(|&y| keep(y)) && seen.insert(joined.clone()) {
                found.push((joined, gens));
            }
        }
        i += 1;
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|(els, _)| Subgroup::from_elements(g, els))
        .collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::CayleyGroup;

    #[test]
    fn small_counts() {
        let lim = Limits::default();
        let z2 = FiniteAbelianGroup::cyclic(2);
        assert_eq!(enumerate_subgroups(&z2, &lim).unwrap().len(), 2);
        let v4 = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        assert_eq!(enumerate_subgroups(&v4, &lim).unwrap().len(), 5);
        let triv = FiniteAbelianGroup::trivial();
        assert_eq!(enumerate_subgroups(&triv, &lim).unwrap().len(), 1);
    }

    #[test]
    fn sorted_and_starts_trivial() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        let subs = enumerate_subgroups(&g, &Limits::default()).unwrap();
        assert_eq!(subs[0].elements, vec![0]);
        assert_eq!(subs.last().unwrap().order(), 8);
        for w in subs.windows(2) {
            assert!(w[0].sort_key() < w[1].sort_key());
        }
    }

    #[test]
    fn nonabelian_s3_has_six_subgroups() {
        let s3 = crate::groups::library::symmetric3();
        let subs = enumerate_subgroups_of(&s3, &Limits::default()).unwrap();
        assert_eq!(subs.len(), 6);
        let orders: Vec<usize> = subs.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        let _ = CayleyGroup::trivial();
    }

    #[test]
    fn cap_is_enforced() {
        let g = FiniteAbelianGroup::cyclic(300);
        let err = enumerate_subgroups(&g, &Limits::default()).unwrap_err();
        assert!(err.is_cap_exceeded());
        assert!(err.to_string().contains("200"));
    }
}
