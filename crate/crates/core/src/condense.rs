//! Etale algebras in pointed categories and their condensation.

use std::collections::BTreeMap;

use crate::error::{Error, Limits, Result};
use crate::groups::{
    decompose_abelian, enumerate_subgroups_where, AbelianDecomposition, CayleyGroup, FiniteAbelianGroup,
    FiniteGroup, Subgroup,
};
use crate::metric::MetricGroup;
use crate::qz::QZ;

/// A connected etale algebra `⊕_{b∈B} b`, i.e. an isotropic subgroup `B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaleAlgebra {
    subgroup: Subgroup,
}

impl EtaleAlgebra {
    /// The algebra on the subgroup generated by `gens`.
    pub fn generated_by(m: &MetricGroup, gens: &[usize]) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&x| x >= m.order()) {
            return Err(Error::Invalid(format!("anyon index {bad} out of range")));
        }
        Self::from_subgroup(m, Subgroup::generated_by(m.group(), gens))
    }

    pub fn from_subgroup(m: &MetricGroup, subgroup: Subgroup) -> Result<Self> {
        if let Some(&x) = subgroup.elements.iter().find(|&&x| !m.q(x).is_zero()) {
            return Err(Error::NotIsotropic {
                element: m.label(x),
                value: m.q(x).to_string(),
            });
        }
        Ok(EtaleAlgebra { subgroup })
    }

    pub fn trivial(m: &MetricGroup) -> Self {
        EtaleAlgebra {
            subgroup: Subgroup::trivial(m.group()),
        }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn elements(&self) -> &[usize] {
        &self.subgroup.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.subgroup.generators
    }

    pub fn order(&self) -> usize {
        self.subgroup.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.subgroup.contains(x)
    }

    pub fn is_lagrangian(&self, m: &MetricGroup) -> bool {
        self.order() * self.order() == m.order()
    }

    /// Object notation, e.g. `1⊕e`.
    pub fn object_label(&self, m: &MetricGroup) -> String {
        self.elements()
            .iter()
            .map(|&x| if x == 0 { "1".to_string() } else { m.label(x) })
            .collect::<Vec<_>>()
            .join("⊕")
    }

    /// Generator notation, e.g. `⟨e⟩`.
    pub fn generator_label(&self, m: &MetricGroup) -> String {
        let parts: Vec<String> = self.generators().iter().map(|&x| m.label(x)).collect();
        format!("⟨{}⟩", parts.join(", "))
    }
}

/// All etale algebras, sorted by (order, generators).
pub fn enumerate_etale(m: &MetricGroup, limits: &Limits) -> Result<Vec<EtaleAlgebra>> {
    Ok(enumerate_subgroups_where(m.group(), limits, |x| m.q(x).is_zero())?
        .into_iter()
        .map(|subgroup| EtaleAlgebra { subgroup })
        .collect())
}

/// `B⊥ = {x : b(x, y) = 0 for all y ∈ B}`.
pub fn orthogonal_complement(m: &MetricGroup, b: &Subgroup) -> Subgroup {
    let elements = m
        .group()
        .elements()
        .filter(|&x| b.generators.iter().all(|&y| m.b(x, y).is_zero()))
        .collect();
    Subgroup::from_elements(m.group(), elements)
}

/// The condensed theory `C_A^loc ≅ B⊥/B` with its coordinate maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensedTheory {
    pub result: MetricGroup,
    pub complement: Subgroup,
    /// For each element of `B⊥` (by ambient index) its class in `result`.
    pub projection: BTreeMap<usize, usize>,
    /// Lexicographically least ambient representative of each class.
    pub representatives: Vec<usize>,
}

/// Local modules of `A`: the metric group `B⊥/B` with the induced form.
pub fn condense(m: &MetricGroup, a: &EtaleAlgebra) -> Result<CondensedTheory> {
    let g = m.group();
    let complement = orthogonal_complement(m, a.subgroup());
    // Coset representative: least element of x + B.
    let rep = |x: usize| a.elements().iter().map(|&b| g.add(x, b)).min().unwrap_or(x);
    let mut reps: Vec<usize> = complement.elements.iter().map(|&x| rep(x)).collect();
    reps.sort_unstable();
    reps.dedup();
    let position: BTreeMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let n = reps.len();
    let table = (0..n)
        .map(|i| (0..n).map(|j| position[&rep(g.add(reps[i], reps[j]))]).collect())
        .collect();
    let quotient = CayleyGroup::from_parts(table, None);
    let all: Vec<usize> = (0..n).collect();
    let dec: AbelianDecomposition = decompose_abelian(&quotient, &all)?;
    let representatives: Vec<usize> = dec.embed.iter().map(|&c| reps[c]).collect();
    let q = representatives.iter().map(|&r| m.q(r)).collect();
    let labels = m
        .labels()
        .map(|_| representatives.iter().map(|&r| m.label(r)).collect());
    let result = MetricGroup::new(dec.group.clone(), q, labels)?;
    let projection = complement
        .elements
        .iter()
        .map(|&x| {
            let cls = dec.project(position[&rep(x)]).expect("decomposition covers the quotient");
            (x, cls)
        })
        .collect();
    Ok(CondensedTheory {
        result,
        complement,
        projection,
        representatives,
    })
}

/// The character group `B̂`, identified with `Aut_C(A)`.
///
/// Characters are indexed by their values on a fixed basis `b_1..b_r` of
/// `B`: the character with coordinates `(k_1..k_r)` sends `b_i` to `k_i/d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterGroup {
    pub group: FiniteAbelianGroup,
    decomposition: AbelianDecomposition,
}

impl CharacterGroup {
    pub fn new(m: &MetricGroup, b: &Subgroup) -> Result<Self> {
        let decomposition = decompose_abelian(m.group(), &b.elements)?;
        Ok(CharacterGroup {
            group: decomposition.group.clone(),
            decomposition,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Basis of `B` (ambient indices) dual to the character coordinates.
    pub fn basis(&self) -> &[usize] {
        &self.decomposition.basis
    }

    /// `ξ(b)` for `b ∈ B`.
    pub fn eval(&self, xi: usize, b: usize) -> QZ {
        let c = self
            .group
            .coords(self.decomposition.project(b).expect("argument lies in B"));
        let k = self.group.coords(xi);
        c.iter()
            .zip(&k)
            .zip(self.group.factors())
            .map(|((&ci, &ki), &d)| QZ::frac((ci * ki) as i64, d as i64))
            .sum()
    }

    /// The character whose value on basis element `i` is `values[i]`.
    fn from_basis_values(&self, values: impl Iterator<Item = QZ>) -> usize {
        let coords: Vec<usize> = values
            .zip(self.group.factors())
            .map(|(v, &d)| (v.numerator() * d as i64 / v.denominator()) as usize)
            .collect();
        self.group.index_unchecked(&coords)
    }

    /// Ring operator `a ↦ b(a, ·)|_B`.
    pub fn ring(&self, m: &MetricGroup, a: usize) -> usize {
        self.from_basis_values(self.basis().iter().map(|&b| m.b(a, b)))
    }

    /// Pullback `b ↦ ξ(f(b))` along a map `f` that preserves `B`.
    pub fn pullback(&self, xi: usize, f: impl Fn(usize) -> usize) -> usize {
        self.from_basis_values(self.basis().iter().map(|&b| self.eval(xi, f(b))))
    }

    pub fn label(&self, xi: usize) -> String {
        if xi == 0 {
            return "1".into();
        }
        format!("χ{}", self.group.element_label(xi))
    }
}

/// `Aut_C(A) ≅ B̂` as an explicit group.
pub fn etale_aut_group(m: &MetricGroup, a: &EtaleAlgebra) -> Result<CharacterGroup> {
    CharacterGroup::new(m, a.subgroup())
}

/// The ring operator `C → Aut_C(A)` as an image table over all anyons.
pub fn ring_operator(m: &MetricGroup, chars: &CharacterGroup) -> Vec<usize> {
    m.group().elements().map(|a| chars.ring(m, a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{drinfeld_double_abelian, find_isometry, identify_theory};

    fn double(n: usize) -> MetricGroup {
        drinfeld_double_abelian(&FiniteAbelianGroup::cyclic(n), &Limits::default()).unwrap()
    }

    #[test]
    fn toric_code_algebras() {
        let m = double(2);
        let algs = enumerate_etale(&m, &Limits::default()).unwrap();
        // 1, 1⊕e, 1⊕m
        assert_eq!(algs.len(), 3);
        for a in &algs[1..] {
            let c = condense(&m, a).unwrap();
            assert_eq!(c.result.order(), 1);
            assert_eq!(c.complement.elements, a.elements());
        }
        let c = condense(&m, &algs[0]).unwrap();
        assert!(find_isometry(&c.result, &m).is_some());
    }

    #[test]
    fn isotropy_is_enforced() {
        let m = double(2);
        let err = EtaleAlgebra::generated_by(&m, &[3]).unwrap_err();
        assert!(matches!(err, Error::NotIsotropic { .. }));
    }

    #[test]
    fn double_z4_has_seven_algebras() {
        let m = double(4);
        let algs = enumerate_etale(&m, &Limits::default()).unwrap();
        let orders: Vec<usize> = algs.iter().map(EtaleAlgebra::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 4, 4, 4]);
        let idx = |a: i64, b: i64| m.group().index(&[a, b]).unwrap();
        let a2 = EtaleAlgebra::generated_by(&m, &[idx(2, 0)]).unwrap();
        let a2m2 = EtaleAlgebra::generated_by(&m, &[idx(2, 2)]).unwrap();
        assert_eq!(
            identify_theory(&condense(&m, &a2).unwrap().result),
            Some("toric code Z(Vec(Z₂))")
        );
        assert_eq!(
            identify_theory(&condense(&m, &a2m2).unwrap().result),
            Some("double semion")
        );
    }

    #[test]
    fn ring_operator_is_a_surjective_homomorphism_with_kernel_b_perp() {
        let m = double(4);
        for a in enumerate_etale(&m, &Limits::default()).unwrap() {
            let chars = etale_aut_group(&m, &a).unwrap();
            assert_eq!(chars.order(), a.order());
            let ring = ring_operator(&m, &chars);
            let g = m.group();
            for x in g.elements() {
                for y in g.elements() {
                    assert_eq!(ring[g.add(x, y)], chars.group.add(ring[x], ring[y]));
                }
            }
            let mut image = ring.clone();
            image.sort_unstable();
            image.dedup();
            assert_eq!(image.len(), chars.order());
            let kernel: Vec<usize> = g.elements().filter(|&x| ring[x] == 0).collect();
            assert_eq!(kernel, orthogonal_complement(&m, a.subgroup()).elements);
        }
    }
}
