use super::FiniteGroup;
use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;

/// A map between finite groups, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupHom {
    images: Vec<usize>,
}

impl GroupHom {
    /// Validates that `images` is a homomorphism `source -> target`.
    pub fn new<S: FiniteGroup + ?Sized, T: FiniteGroup + ?Sized>(
        source: &S,
        target: &T,
        images: Vec<usize>,
    ) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "{} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.order()) {
            return Err(Error::InvalidHom(format!("image {bad} out of range")));
        }
        if images[source.identity()] != target.identity() {
            return Err(Error::InvalidHom("identity is not preserved".into()));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if images[source.op(a, b)] != target.op(images[a], images[b]) {
                    return Err(Error::InvalidHom(format!(
                        "f({}·{}) != f({})·f({})",
                        source.element_label(a),
                        source.element_label(b),
                        source.element_label(a),
                        source.element_label(b)
                    )));
                }
            }
        }
        Ok(GroupHom { images })
    }

    pub(crate) fn from_images(images: Vec<usize>) -> Self {
        GroupHom { images }
    }

    pub fn identity_on(order: usize) -> Self {
        GroupHom {
            images: (0..order).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.images.iter().all(|y| seen.insert(*y))
    }

    pub fn is_surjective(&self, target_order: usize) -> bool {
        let mut seen = vec![false; target_order];
        for &y in &self.images {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GroupHom) -> GroupHom {
        GroupHom {
            images: first.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_injective() {
            return None;
        }
        let mut inv = vec![UNSET; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            if y >= inv.len() {
                return None;
            }
            inv[y] = x;
        }
        Some(GroupHom { images: inv })
    }

    /// Elements mapped to the identity of the target.
    pub fn kernel(&self, target_identity: usize) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&x| self.images[x] == target_identity)
            .collect()
    }
}

/// Sorted elements of the subgroup generated by `gens`.
pub fn span<G: FiniteGroup + ?Sized>(g: &G, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut out = vec![g.identity()];
    seen[g.identity()] = true;
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for &s in gens {
            let y = g.op(x, s);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Deterministic generating set: scan elements by descending element order,
/// ties by ascending index, keeping each element not already generated.
pub fn generating_set<G: FiniteGroup + ?Sized>(g: &G) -> Vec<usize> {
    let mut candidates: Vec<usize> = (0..g.order()).collect();
    let orders: Vec<usize> = candidates.iter().map(|&x| g.element_order(x)).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
    let mut gens = Vec::new();
    let mut inside = vec![false; g.order()];
    inside[g.identity()] = true;
    let mut covered = 1;
    for x in candidates {
        if covered == g.order() {
            break;
        }
        if inside[x] {
            continue;
        }
        gens.push(x);
        let s = span(g, &gens);
        covered = s.len();
        for y in s {
            inside[y] = true;
        }
    }
    gens
}

/// Backtracking search over homomorphisms `source -> target` determined by
/// images of a fixed generator list.
pub(crate) struct HomSearch<'a, S: ?Sized, T: ?Sized> {
    pub source: &'a S,
    pub target: &'a T,
    pub generators: Vec<usize>,
    /// Allowed images for each generator, in search order.
    pub candidates: Vec<Vec<usize>>,
    pub injective: bool,
}

/// Runs the search, calling `visit` with every complete homomorphism (as an
/// image table) in lexicographic order of generator images. `visit` returns
/// `false` to stop. `accept` prunes partial assignments of generator images.
pub(crate) fn search_homs<S, T>(
    search: &HomSearch<'_, S, T>,
    accept: &mut dyn FnMut(&[usize]) -> bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) where
    S: FiniteGroup + ?Sized,
    T: FiniteGroup + ?Sized,
{
    let n = search.source.order();
    let mut map = vec![UNSET; n];
    map[search.source.identity()] = search.target.identity();
    let mut used = vec![false; search.target.order()];
    used[search.target.identity()] = true;
    let mut reached = vec![search.source.identity()];
    let mut assigned = Vec::with_capacity(search.generators.len());
    recurse(search, &mut map, &mut used, &mut reached, &mut assigned, accept, visit);
}

fn recurse<S, T>(
    search: &HomSearch<'_, S, T>,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    reached: &mut Vec<usize>,
    assigned: &mut Vec<usize>,
    accept: &mut dyn FnMut(&[usize]) -> bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool
where
    S: FiniteGroup + ?Sized,
    T: FiniteGroup + ?Sized,
{
    let depth = assigned.len();
    if depth == search.generators.len() {
        if reached.len() != search.source.order() {
            return true;
        }
        return visit(map);
    }
    let s = search.generators[depth];
    for &t in &search.candidates[depth] {
        assigned.push(t);
        if accept(assigned) {
            let mut m = map.clone();
            let mut u = used.clone();
            let mut r = reached.clone();
            if extend(search, &mut m, &mut u, &mut r, s, t, depth)
                && !recurse(search, &mut m, &mut u, &mut r, assigned, accept, visit)
            {
                assigned.pop();
                return false;
            }
        }
        assigned.pop();
    }
    true
}

/// Adds generator `s ↦ t` and closes the partial map under right
/// multiplication by all generators assigned so far.
fn extend<S, T>(
    search: &HomSearch<'_, S, T>,
    map: &mut [usize],
    used: &mut [bool],
    reached: &mut Vec<usize>,
    s: usize,
    t: usize,
    depth: usize,
) -> bool
where
    S: FiniteGroup + ?Sized,
    T: FiniteGroup + ?Sized,
{
    let src = search.source;
    let tgt = search.target;
    let gens = &search.generators[..=depth];
    let images: Vec<usize> = gens
        .iter()
        .enumerate()
        .map(|(i, &g)| if i == depth { t } else { map[g] })
        .collect();
    if map[s] != UNSET && map[s] != t {
        return false;
    }
    let mut i = 0;
    while i < reached.len() {
        let x = reached[i];
        let fx = map[x];
        for (&g, &fg) in gens.iter().zip(&images) {
            let y = src.op(x, g);
            let fy = tgt.op(fx, fg);
            if map[y] == UNSET {
                if search.injective && used[fy] {
                    return false;
                }
                map[y] = fy;
                used[fy] = true;
                reached.push(y);
            } else if map[y] != fy {
                return false;
            }
        }
        i += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{CayleyGroup, FiniteAbelianGroup};

    #[test]
    fn validates_homomorphisms() {
        let z4 = CayleyGroup::cyclic(4);
        let z2 = CayleyGroup::cyclic(2);
        let f = GroupHom::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(f.kernel(0), vec![0, 2]);
        assert!(f.is_surjective(2));
        assert!(!f.is_injective());
        assert!(GroupHom::new(&z2, &z4, vec![0, 1]).is_err());
        assert!(GroupHom::new(&z2, &z4, vec![0, 2]).is_ok());
    }

    #[test]
    fn generating_sets_generate() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        let gens = generating_set(&g);
        assert_eq!(span(&g, &gens).len(), 8);
        assert_eq!(gens.len(), 2);
        assert_eq!(generating_set(&CayleyGroup::trivial()), Vec::<usize>::new());
    }

    #[test]
    fn counts_all_homomorphisms_z4_to_z4() {
        let z4 = CayleyGroup::cyclic(4);
        let search = HomSearch {
            source: &z4,
            target: &z4,
            generators: generating_set(&z4),
            candidates: vec![(0..4).collect()],
            injective: false,
        };
        let mut count = 0;
        search_homs(&search, &mut |_| true, &mut |m| {
            assert!(GroupHom::new(&z4, &z4, m.to_vec()).is_ok());
            count += 1;
            true
        });
        assert_eq!(count, 4);
    }
}
