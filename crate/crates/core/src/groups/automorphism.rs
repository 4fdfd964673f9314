use std::collections::HashMap;

use super::{generating_set, search_homs, CayleyGroup, FiniteGroup, GroupHom, HomSearch};
use crate::error::{Error, Limits, Result};

/// A group of bijections of some finite set, as an explicit Cayley group.
/// Element `i` of `group` is the map `maps[i]`; index 0 is the identity map
/// and the rest follow in lexicographic order of image tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub group: CayleyGroup,
    pub maps: Vec<GroupHom>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn index_of(&self, map: &GroupHom) -> Option<usize> {
        self.maps.binary_search(map).ok()
    }

    /// Builds the composition table `(f·g)(x) = f(g(x))` of a set of maps that
    /// is closed under composition. Labels list the images of `on`.
    pub(crate) fn from_maps(
        mut maps: Vec<GroupHom>,
        label: impl Fn(usize) -> String,
        on: &[usize],
    ) -> Result<Self> {
        maps.sort();
        maps.dedup();
        let index: HashMap<&GroupHom, usize> = maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let n = maps.len();
        let mut table = vec![vec![0; n]; n];
        for (i, f) in maps.iter().enumerate() {
            for (j, g) in maps.iter().enumerate() {
                let fg = f.compose(g);
                table[i][j] = *index
                    .get(&fg)
                    .ok_or_else(|| Error::Internal("map set not closed under composition".into()))?;
            }
        }
        let labels = maps
            .iter()
            .map(|m| {
                if on.iter().all(|&x| m.apply(x) == x) {
                    "id".to_string()
                } else {
                    let parts: Vec<String> = on
                        .iter()
                        .map(|&x| format!("{}↦{}", label(x), label(m.apply(x))))
                        .collect();
                    format!("[{}]", parts.join(", "))
                }
            })
            .collect();
        let group = CayleyGroup::from_parts(table, Some(labels));
        Ok(AutomorphismGroup { group, maps })
    }
}

fn same_order_candidates<T: FiniteGroup + ?Sized>(target: &T, order: usize) -> Vec<usize> {
    (0..target.order())
        .filter(|&y| target.element_order(y) == order)
        .collect()
}

/// All isomorphisms `source -> target`, in lexicographic order of the images
/// of `generating_set(source)`. Stops with a cap error past `limit` maps.
pub fn isomorphisms<S, T>(source: &S, target: &T, limit: usize) -> Result<Vec<GroupHom>>
where
    S: FiniteGroup + ?Sized,
    T: FiniteGroup + ?Sized,
{
    if source.order() != target.order() {
        return Ok(Vec::new());
    }
    let generators = generating_set(source);
    let candidates = generators
        .iter()
        .map(|&s| same_order_candidates(target, source.element_order(s)))
        .collect();
    let search = HomSearch {
        source,
        target,
        generators,
        candidates,
        injective: true,
    };
    let mut out = Vec::new();
    let mut overflow = false;
    search_homs(&search, &mut |_| true, &mut |m| {
        if out.len() == limit {
            overflow = true;
            return false;
        }
        out.push(GroupHom::from_images(m.to_vec()));
        true
    });
    if overflow {
        return Err(Error::CapExceeded {
            what: "automorphism group".into(),
            size: limit as u128 + 1,
            cap: limit as u128,
        });
    }
    Ok(out)
}

/// First isomorphism in search order, if any. Element orders, order
/// histograms and commutativity are compared before searching.
///
/// Search order: generators of `g` are chosen greedily by descending element
/// order (ties by index); candidate images are the elements of `h` of the
/// same order, ascending by index; backtracking proceeds generator by
/// generator.
pub fn is_isomorphic<S, T>(g: &S, h: &T) -> Option<GroupHom>
where
    S: FiniteGroup + ?Sized,
    T: FiniteGroup + ?Sized,
{
    if g.order() != h.order()
        || g.order_profile() != h.order_profile()
        || g.is_abelian() != h.is_abelian()
    {
        return None;
    }
    let generators = generating_set(g);
    let candidates = generators
        .iter()
        .map(|&s| same_order_candidates(h, g.element_order(s)))
        .collect();
    let search = HomSearch {
        source: g,
        target: h,
        generators,
        candidates,
        injective: true,
    };
    let mut found = None;
    search_homs(&search, &mut |_| true, &mut |m| {
        found = Some(GroupHom::from_images(m.to_vec()));
        false
    });
    found
}

/// Full automorphism group of `g` with each element's image map.
pub fn automorphism_group<G: FiniteGroup + ?Sized>(g: &G, limits: &Limits) -> Result<AutomorphismGroup> {
    limits.check_group("group", g.order())?;
    let maps = isomorphisms(g, g, limits.group_cap)?;
    let gens = generating_set(g);
    AutomorphismGroup::from_maps(maps, |x| g.element_label(x), &gens)
}
