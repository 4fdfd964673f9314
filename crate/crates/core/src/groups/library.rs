//! Small named groups and isomorphism-type naming.
//!
//! Abelian groups are named from their invariant factors at any order. The
//! nonabelian table covers every nonabelian group of order at most 16.

use super::abelian::name_from_invariant_factors;
use super::{decompose_abelian, is_isomorphic, subscript, CayleyGroup, FiniteAbelianGroup, FiniteGroup};

/// `N ⋊_ω G` on pairs `(x, g)` indexed `x·|G| + g`, with product
/// `(x,g)(y,h) = (x + g·y + ω(g,h), gh)`. `action[g]` is the map `y ↦ g·y`.
pub(crate) fn twisted_product(
    n: &FiniteAbelianGroup,
    g: &CayleyGroup,
    action: &[Vec<usize>],
    cocycle: &dyn Fn(usize, usize) -> usize,
) -> CayleyGroup {
    let gn = g.order();
    let size = n.order() * gn;
    let table = (0..size)
        .map(|p| {
            let (x, a) = (p / gn, p % gn);
            (0..size)
                .map(|q| {
                    let (y, b) = (q / gn, q % gn);
                    let z = n.add(n.add(x, action[a][y]), cocycle(a, b));
                    z * gn + g.op(a, b)
                })
                .collect()
        })
        .collect();
    let labels = (0..size)
        .map(|p| format!("({},{})", n.element_label(p / gn), g.element_label(p % gn)))
        .collect();
    CayleyGroup::from_parts(table, Some(labels))
}

/// Action of `Z_k` on `n` where the generator acts by `gen_map`.
fn cyclic_action(n: &FiniteAbelianGroup, k: usize, gen_map: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    let mut out = vec![n.elements().collect::<Vec<_>>()];
    for i in 1..k {
        let prev: &Vec<usize> = &out[i - 1];
        out.push(prev.iter().map(|&x| gen_map(x)).collect());
    }
    out
}

/// `Z_m ⋊ Z_n` where the generator of `Z_n` acts by multiplication by `r`.
pub fn semidirect_cyclic(m: usize, n: usize, r: i64) -> CayleyGroup {
    let nm = FiniteAbelianGroup::cyclic(m);
    let action = cyclic_action(&nm, n, |x| nm.scale(x, r));
    twisted_product(&nm, &CayleyGroup::cyclic(n), &action, &|_, _| 0)
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> CayleyGroup {
    semidirect_cyclic(n, 2, -1)
}

pub fn symmetric3() -> CayleyGroup {
    dihedral(3)
}

/// Dicyclic group of order `4m`: `⟨a, x | a^{2m}, x² = a^m, x a x⁻¹ = a⁻¹⟩`.
pub fn dicyclic(m: usize) -> CayleyGroup {
    let n = FiniteAbelianGroup::cyclic(2 * m);
    let action = cyclic_action(&n, 2, |x| n.neg(x));
    twisted_product(&n, &CayleyGroup::cyclic(2), &action, &|a, b| {
        if a == 1 && b == 1 {
            m
        } else {
            0
        }
    })
}

fn alternating4() -> CayleyGroup {
    let v = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
    let rot = |x: usize| {
        let c = v.coords(x);
        v.index_unchecked(&[c[1], (c[0] + c[1]) % 2])
    };
    let action = cyclic_action(&v, 3, rot);
    twisted_product(&v, &CayleyGroup::cyclic(3), &action, &|_, _| 0)
}

fn klein_by_z4_swap() -> CayleyGroup {
    let v = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
    let swap = |x: usize| {
        let c = v.coords(x);
        v.index_unchecked(&[c[1], c[0]])
    };
    let action = cyclic_action(&v, 4, swap);
    twisted_product(&v, &CayleyGroup::cyclic(4), &action, &|_, _| 0)
}

fn pauli() -> CayleyGroup {
    let z4 = FiniteAbelianGroup::cyclic(4);
    let v = FiniteAbelianGroup::new(vec![2, 2]).unwrap().to_cayley();
    let action = vec![z4.elements().collect::<Vec<_>>(); 4];
    // f((a,b),(c,d)) = 2bc
    twisted_product(&z4, &v, &action, &|g, h| 2 * ((g % 2) * (h / 2)))
}

/// Every nonabelian group of order ≤ 16, by name.
pub fn nonabelian_library() -> Vec<(String, CayleyGroup)> {
    let z2 = CayleyGroup::cyclic(2);
    let d = |n: usize| format!("D{}", subscript(n));
    vec![
        (format!("S{}", subscript(3)), symmetric3()),
        (d(8), dihedral(4)),
        (format!("Q{}", subscript(8)), dicyclic(2)),
        (d(10), dihedral(5)),
        (format!("A{}", subscript(4)), alternating4()),
        (d(12), dihedral(6)),
        (format!("Dic{}", subscript(12)), dicyclic(3)),
        (d(14), dihedral(7)),
        (d(16), dihedral(8)),
        (format!("SD{}", subscript(16)), semidirect_cyclic(8, 2, 3)),
        (format!("M{}", subscript(16)), semidirect_cyclic(8, 2, 5)),
        (format!("Q{}", subscript(16)), dicyclic(4)),
        ("Z₄⋊Z₄".to_string(), semidirect_cyclic(4, 4, -1)),
        ("Z₂×D₈".to_string(), z2.product(&dihedral(4))),
        ("Z₂×Q₈".to_string(), z2.product(&dicyclic(2))),
        ("Z₂²⋊Z₄".to_string(), klein_by_z4_swap()),
        ("Z₄∘D₈".to_string(), pauli()),
    ]
}

/// Isomorphism type of `g`: invariant factors when abelian, otherwise the
/// library name, falling back to `order-n group, id unassigned`.
pub fn name_group<G: FiniteGroup + ?Sized>(g: &G) -> String {
    if g.is_abelian() {
        let all: Vec<usize> = (0..g.order()).collect();
        if let Ok(d) = decompose_abelian(g, &all) {
            return name_from_invariant_factors(d.group.factors());
        }
    }
    for (name, candidate) in nonabelian_library() {
        if candidate.order() == g.order() && is_isomorphic(g, &candidate).is_some() {
            return name;
        }
    }
    format!("order-{} group, id unassigned", g.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_is_complete_and_distinct() {
        let lib = nonabelian_library();
        let mut per_order = std::collections::BTreeMap::new();
        for (name, g) in &lib {
            assert!(!g.is_abelian(), "{name} is abelian");
            g.check_associative().unwrap();
            *per_order.entry(g.order()).or_insert(0) += 1;
        }
        // Known counts of nonabelian groups of order ≤ 16.
        let expected: std::collections::BTreeMap<usize, usize> =
            [(6, 1), (8, 2), (10, 1), (12, 3), (14, 1), (16, 9)].into_iter().collect();
        assert_eq!(per_order, expected);
        for (i, (a, ga)) in lib.iter().enumerate() {
            for (b, gb) in lib.iter().skip(i + 1) {
                assert!(is_isomorphic(ga, gb).is_none(), "{a} ≅ {b}");
            }
        }
    }

    #[test]
    fn names() {
        assert_eq!(name_group(&CayleyGroup::cyclic(4)), "Z₄");
        assert_eq!(name_group(&CayleyGroup::trivial()), "1");
        assert_eq!(name_group(&semidirect_cyclic(3, 4, -1)), "Dic₁₂");
        assert_eq!(name_group(&symmetric3()), "S₃");
        let big = dihedral(9);
        assert_eq!(name_group(&big), "order-18 group, id unassigned");
    }
}
