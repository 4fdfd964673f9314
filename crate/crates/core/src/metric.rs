//! Pointed modular tensor categories as metric groups.

use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::groups::{
    generating_set, search_homs, AutomorphismGroup, FiniteAbelianGroup, FiniteGroup, GroupHom,
    HomSearch,
};
use crate::qz::QZ;

/// A finite abelian group with a nondegenerate quadratic form `q: M → Q/Z`.
///
/// `q(x)` is the twist exponent: `θ_x = exp(2πi·q(x))`. The associated
/// bilinear form `b(x,y) = q(x+y) − q(x) − q(y)` gives the mutual braiding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricGroup {
    group: FiniteAbelianGroup,
    q: Vec<QZ>,
    labels: Option<Vec<String>>,
}

/// Validating constructor. Rejects forms that violate the quadratic law
/// (with a witness) or are degenerate (with a transparent element).
pub fn make_metric_group(group: FiniteAbelianGroup, q: Vec<QZ>) -> Result<MetricGroup> {
    MetricGroup::new(group, q, None)
}

impl MetricGroup {
    pub fn new(group: FiniteAbelianGroup, q: Vec<QZ>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = group.order();
        if q.len() != n {
            return Err(Error::Invalid(format!(
                "q has {} values for a group of order {n}",
                q.len()
            )));
        }
        let m = MetricGroup {
            group,
            q,
            labels: None,
        };
        m.check_quadratic()?;
        m.check_nondegenerate()?;
        match labels {
            Some(l) => m.with_labels(l),
            None => Ok(m),
        }
    }

    fn check_quadratic(&self) -> Result<()> {
        let g = &self.group;
        if !self.q[0].is_zero() {
            return Err(Error::NotQuadratic(format!("q(0) = {} is nonzero", self.q[0])));
        }
        for x in g.elements() {
            if self.q[g.neg(x)] != self.q[x] {
                return Err(Error::NotQuadratic(format!(
                    "q(-x) != q(x) at x = {}",
                    self.label(x)
                )));
            }
            for k in 2..=g.element_order(x) as i64 {
                if self.q[g.scale(x, k)] != self.q[x] * (k * k) {
                    return Err(Error::NotQuadratic(format!(
                        "q({k}·x) != {}·q(x) at x = {}",
                        k * k,
                        self.label(x)
                    )));
                }
            }
        }
        // Additivity of b in the first slot against each unit vector implies
        // biadditivity everywhere.
        for i in 0..g.rank() {
            let u = g.unit(i);
            for x in g.elements() {
                for z in g.elements() {
                    if self.b(g.add(x, u), z) != self.b(x, z) + self.b(u, z) {
                        return Err(Error::NotQuadratic(format!(
                            "b is not biadditive: b(x+y,z) != b(x,z) + b(y,z) for (x,y,z) = ({}, {}, {})",
                            self.label(x),
                            self.label(u),
                            self.label(z)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_nondegenerate(&self) -> Result<()> {
        let g = &self.group;
        for x in g.elements().skip(1) {
            if (0..g.rank()).all(|i| self.b(x, g.unit(i)).is_zero()) {
                return Err(Error::Degenerate {
                    element: self.label(x),
                });
            }
        }
        Ok(())
    }

    /// The trivial category `Vec`.
    pub fn trivial() -> Self {
        MetricGroup {
            group: FiniteAbelianGroup::trivial(),
            q: vec![QZ::ZERO],
            labels: Some(vec!["1".into()]),
        }
    }

    /// `Z_n` with `q(k) = k²·q1`.
    pub fn cyclic(n: usize, q1: QZ) -> Result<Self> {
        let group = FiniteAbelianGroup::cyclic(n);
        let q = group.elements().map(|k| q1 * ((k * k) as i64)).collect();
        Self::new(group, q, None)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::Invalid(format!(
                "{} labels for {} anyons",
                labels.len(),
                self.order()
            )));
        }
        if !all_distinct(&labels) {
            return Err(Error::Invalid("anyon labels must be distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn q(&self, x: usize) -> QZ {
        self.q[x]
    }

    pub fn q_values(&self) -> &[QZ] {
        &self.q
    }

    pub fn b(&self, x: usize, y: usize) -> QZ {
        self.q[self.group.add(x, y)] - self.q[x] - self.q[y]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => self.group.element_label(x),
        }
    }

    pub fn find_label(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    /// Deligne product: coordinates of `self` first, `q` added.
    pub fn product(&self, other: &MetricGroup) -> MetricGroup {
        let group = self.group.product(&other.group);
        let m = other.order();
        let q = group
            .elements()
            .map(|x| self.q[x / m] + other.q[x % m])
            .collect();
        let labels = match (&self.labels, &other.labels) {
            _ if self.order() == 1 => other.labels.clone(),
            _ if m == 1 => self.labels.clone(),
            (Some(_), Some(_)) => {
                let joined = |sep: &str| -> Vec<String> {
                    group
                        .elements()
                        .map(|x| {
                            let (a, b) = (self.label(x / m), other.label(x % m));
                            match (x / m == 0, x % m == 0) {
                                (true, true) => "1".to_string(),
                                (true, false) => b,
                                (false, true) => a,
                                (false, false) => format!("{a}{sep}{b}"),
                            }
                        })
                        .collect()
                };
                [joined(""), joined("⊠")].into_iter().find(|l| all_distinct(l))
            }
            // Coordinate labels of the two sides could collide.
            _ => None,
        };
        MetricGroup { group, q, labels }
    }

    /// Same group with `q` negated (the reversed braiding).
    pub fn reversed(&self) -> MetricGroup {
        MetricGroup {
            group: self.group.clone(),
            q: self.q.iter().map(|&v| -v).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn is_isometry(&self, map: &GroupHom) -> bool {
        map.images().len() == self.order()
            && map.is_injective()
            && self.group.elements().all(|x| {
                self.group.elements().all(|y| {
                    map.apply(self.group.add(x, y)) == self.group.add(map.apply(x), map.apply(y))
                })
            })
            && self.group.elements().all(|x| self.q[map.apply(x)] == self.q[x])
    }

    /// Additive extension of images of the unit coordinate vectors.
    pub fn map_from_unit_images(&self, images: &[usize]) -> Result<GroupHom> {
        let g = &self.group;
        if images.len() != g.rank() {
            return Err(Error::Invalid(format!(
                "expected {} generator images, got {}",
                g.rank(),
                images.len()
            )));
        }
        for (i, &y) in images.iter().enumerate() {
            if g.scale(y, g.factors()[i] as i64) != 0 {
                return Err(Error::InvalidHom(format!(
                    "image {} of generator {i} has order not dividing {}",
                    self.label(y),
                    g.factors()[i]
                )));
            }
        }
        let map = g
            .elements()
            .map(|x| {
                g.coords(x)
                    .iter()
                    .zip(images)
                    .fold(0, |acc, (&c, &y)| g.add(acc, g.scale(y, c as i64)))
            })
            .collect();
        GroupHom::new(g, g, map)
    }
}

fn all_distinct(labels: &[String]) -> bool {
    let mut sorted: Vec<&String> = labels.iter().collect();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// An automorphism of the underlying group preserving `q` pointwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isometry(GroupHom);

impl Isometry {
    pub fn new(m: &MetricGroup, map: GroupHom) -> Result<Self> {
        if !m.is_isometry(&map) {
            return Err(Error::NotIsometry(format!(
                "map {:?} does not preserve the group law and q",
                map.images()
                    .iter()
                    .map(|&y| m.label(y))
                    .collect::<Vec<_>>()
            )));
        }
        Ok(Isometry(map))
    }

    pub fn identity(m: &MetricGroup) -> Self {
        Isometry(GroupHom::identity_on(m.order()))
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0.apply(x)
    }

    pub fn map(&self) -> &GroupHom {
        &self.0
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Isometry) -> Isometry {
        Isometry(self.0.compose(&first.0))
    }

    pub fn inverse(&self) -> Isometry {
        Isometry(self.0.inverse().expect("isometries are bijective"))
    }

    pub fn is_identity(&self) -> bool {
        self.0.images().iter().enumerate().all(|(x, &y)| x == y)
    }
}

/// Exact modular data: `S[x][y] = exp(2πi·b(x,y)) / √|M|`, `T[x] = exp(2πi·q(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularData {
    pub labels: Vec<String>,
    /// `b(x,y)` exponents; the matrix is these phases times the normalization.
    pub s_exponents: Vec<Vec<QZ>>,
    pub t_exponents: Vec<QZ>,
    /// `|M|`; the S normalization is `1/√|M|`.
    pub dimension_squared: usize,
}

impl ModularData {
    pub fn normalization(&self) -> String {
        let n = self.dimension_squared;
        let r = (n as f64).sqrt().round() as usize;
        if r * r == n {
            if r == 1 {
                "1".into()
            } else {
                format!("1/{r}")
            }
        } else {
            format!("1/√{n}")
        }
    }
}

pub fn modular_data(m: &MetricGroup) -> ModularData {
    let n = m.order();
    ModularData {
        labels: (0..n).map(|x| m.label(x)).collect(),
        s_exponents: (0..n).map(|x| (0..n).map(|y| m.b(x, y)).collect()).collect(),
        t_exponents: m.q.clone(),
        dimension_squared: n,
    }
}

/// `Z(Vec(A))` on `A × Â`, with `Â` identified with `A` through the pairing
/// `⟨a, χ⟩ = Σ aᵢχᵢ/dᵢ`; `q(a, χ) = ⟨a, χ⟩`.
pub fn drinfeld_double_abelian(a: &FiniteAbelianGroup, limits: &Limits) -> Result<MetricGroup> {
    limits.check_group("group", a.order())?;
    let group = a.product(a);
    let n = a.order();
    let q = group
        .elements()
        .map(|x| {
            let (flux, charge) = (a.coords(x / n), a.coords(x % n));
            flux.iter()
                .zip(&charge)
                .zip(a.factors())
                .map(|((&f, &c), &d)| QZ::frac((f * c) as i64, d as i64))
                .sum()
        })
        .collect();
    MetricGroup::new(group, q, None)
}

fn isometry_search<'a>(
    source: &'a MetricGroup,
    target: &'a MetricGroup,
) -> (HomSearch<'a, FiniteAbelianGroup, FiniteAbelianGroup>, Vec<usize>) {
    let gens = generating_set(&source.group);
    let candidates = gens
        .iter()
        .map(|&s| {
            let ord = source.group.element_order(s);
            target
                .group
                .elements()
                .filter(|&t| target.group.element_order(t) == ord && target.q[t] == source.q[s])
                .collect()
        })
        .collect();
    (
        HomSearch {
            source: &source.group,
            target: &target.group,
            generators: gens.clone(),
            candidates,
            injective: true,
        },
        gens,
    )
}

fn pairings_match(source: &MetricGroup, target: &MetricGroup, gens: &[usize], assigned: &[usize]) -> bool {
    let k = assigned.len() - 1;
    (0..=k).all(|i| source.b(gens[i], gens[k]) == target.b(assigned[i], assigned[k]))
}

/// Full isometry group, as maps with their composition table.
pub fn isometry_group(m: &MetricGroup, limits: &Limits) -> Result<AutomorphismGroup> {
    limits.check_group("metric group", m.order())?;
    let (search, gens) = isometry_search(m, m);
    let mut maps = Vec::new();
    let mut overflow = false;
    search_homs(
        &search,
        &mut |assigned| pairings_match(m, m, &gens, assigned),
        &mut |map| {
            if maps.len() == limits.group_cap {
                overflow = true;
                return false;
            }
            maps.push(GroupHom::from_images(map.to_vec()));
            true
        },
    );
    if overflow {
        return Err(Error::CapExceeded {
            what: "isometry group".into(),
            size: limits.group_cap as u128 + 1,
            cap: limits.group_cap as u128,
        });
    }
    for map in &maps {
        if !m.is_isometry(map) {
            return Err(Error::Internal("isometry search produced a non-isometry".into()));
        }
    }
    AutomorphismGroup::from_maps(maps, |x| m.label(x), &gens)
}

/// An isometry `a → b` if the metric groups are isometric.
pub fn find_isometry(a: &MetricGroup, b: &MetricGroup) -> Option<GroupHom> {
    if a.order() != b.order() {
        return None;
    }
    let mut qa = a.q.clone();
    let mut qb = b.q.clone();
    qa.sort();
    qb.sort();
    if qa != qb {
        return None;
    }
    let (search, gens) = isometry_search(a, b);
    let mut found = None;
    search_homs(
        &search,
        &mut |assigned| pairings_match(a, b, &gens, assigned),
        &mut |map| {
            found = Some(GroupHom::from_images(map.to_vec()));
            false
        },
    );
    found.filter(|f| (0..a.order()).all(|x| b.q[f.apply(x)] == a.q[x]))
}

/// Reference pointed categories used to name condensation outcomes.
pub fn reference_theories() -> Vec<(&'static str, MetricGroup)> {
    let lim = Limits::default();
    let z = FiniteAbelianGroup::cyclic;
    let semion = MetricGroup::cyclic(2, QZ::frac(1, 4)).unwrap();
    let three_fermion = MetricGroup::new(
        FiniteAbelianGroup::new(vec![2, 2]).unwrap(),
        vec![QZ::ZERO, QZ::frac(1, 2), QZ::frac(1, 2), QZ::frac(1, 2)],
        None,
    )
    .unwrap();
    vec![
        ("Vec", MetricGroup::trivial()),
        ("semion", semion.clone()),
        ("anti-semion", semion.reversed()),
        ("toric code Z(Vec(Z₂))", drinfeld_double_abelian(&z(2), &lim).unwrap()),
        ("double semion", semion.product(&semion.reversed())),
        ("three-fermion", three_fermion),
        ("Z(Vec(Z₃))", drinfeld_double_abelian(&z(3), &lim).unwrap()),
        ("Z(Vec(Z₄))", drinfeld_double_abelian(&z(4), &lim).unwrap()),
        (
            "Z(Vec(Z₂×Z₂))",
            drinfeld_double_abelian(&FiniteAbelianGroup::new(vec![2, 2]).unwrap(), &lim).unwrap(),
        ),
    ]
}

/// Name of a reference theory isometric to `m`, if any.
pub fn identify_theory(m: &MetricGroup) -> Option<&'static str> {
    reference_theories()
        .into_iter()
        .find(|(_, r)| find_isometry(m, r).is_some())
        .map(|(name, _)| name)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn toric() -> MetricGroup {
        drinfeld_double_abelian(&FiniteAbelianGroup::cyclic(2), &Limits::default()).unwrap()
    }

    #[test]
    fn toric_code_from_explicit_form() {
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let q = vec![QZ::ZERO, QZ::ZERO, QZ::ZERO, QZ::frac(1, 2)];
        let m = make_metric_group(g, q).unwrap();
        assert_eq!(m, toric());
    }

    #[test]
    fn degenerate_and_nonquadratic_forms_are_rejected() {
        let z2 = FiniteAbelianGroup::cyclic(2);
        let err = make_metric_group(z2.clone(), vec![QZ::ZERO, QZ::ZERO]).unwrap_err();
        assert_eq!(err, Error::Degenerate { element: "1".into() });
        // q(1) = 1/3 on Z2 violates q(2x) = 4q(x).
        let err = make_metric_group(z2, vec![QZ::ZERO, QZ::frac(1, 3)]).unwrap_err();
        assert!(matches!(err, Error::NotQuadratic(_)));
        // Not symmetric under negation on Z3.
        let z3 = FiniteAbelianGroup::cyclic(3);
        let err = make_metric_group(z3, vec![QZ::ZERO, QZ::frac(1, 3), QZ::ZERO]).unwrap_err();
        assert!(matches!(err, Error::NotQuadratic(_)));
        assert!(make_metric_group(FiniteAbelianGroup::trivial(), vec![QZ::ZERO]).is_ok());
    }

    #[test]
    fn toric_modular_data() {
        let md = modular_data(&toric());
        let half = QZ::frac(1, 2);
        let z = QZ::ZERO;
        assert_eq!(
            md.s_exponents,
            vec![
                vec![z, z, z, z],
                vec![z, z, half, half],
                vec![z, half, z, half],
                vec![z, half, half, z],
            ]
        );
        assert_eq!(md.t_exponents, vec![z, z, z, half]);
        assert_eq!(md.normalization(), "1/2");
        let trivial = modular_data(&MetricGroup::trivial());
        assert_eq!(trivial.s_exponents, vec![vec![z]]);
        assert_eq!(trivial.normalization(), "1");
    }

    #[test]
    fn double_of_z4_twists() {
        let m = drinfeld_double_abelian(&FiniteAbelianGroup::cyclic(4), &Limits::default()).unwrap();
        assert_eq!(m.order(), 16);
        // θ(α^a m^b) = i^{ab}
        for a in 0..4 {
            for b in 0..4 {
                let x = m.group().index(&[a, b]).unwrap();
                assert_eq!(m.q(x), QZ::frac(a * b, 4));
            }
        }
    }

    #[test]
    fn isometry_groups() {
        let lim = Limits::default();
        let t = isometry_group(&toric(), &lim).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(t.maps[1].images(), &[0, 2, 1, 3]);
        assert_eq!(isometry_group(&MetricGroup::trivial(), &lim).unwrap().order(), 1);
        let d3 = drinfeld_double_abelian(&FiniteAbelianGroup::cyclic(3), &lim).unwrap();
        let iso = isometry_group(&d3, &lim).unwrap();
        let g = d3.group();
        let neg = GroupHom::new(g, g, g.elements().map(|x| g.neg(x)).collect()).unwrap();
        assert!(iso.index_of(&neg).is_some());
        for f in &iso.maps {
            for h in &iso.maps {
                assert!(iso.index_of(&f.compose(h)).is_some());
            }
            assert!(iso.index_of(&f.inverse().unwrap()).is_some());
        }
    }

    #[test]
    fn named_theories() {
        assert_eq!(identify_theory(&toric()), Some("toric code Z(Vec(Z₂))"));
        let semion = MetricGroup::cyclic(2, QZ::frac(1, 4)).unwrap();
        let ds = semion.product(&semion.reversed());
        assert_eq!(identify_theory(&ds), Some("double semion"));
        assert!(find_isometry(&ds, &toric()).is_none());
    }

    #[test]
    fn map_from_units() {
        let m = toric();
        let swap = m.map_from_unit_images(&[1, 2]).unwrap();
        assert_eq!(swap.images(), &[0, 2, 1, 3]);
        assert!(Isometry::new(&m, swap).is_ok());
        let bad = m.map_from_unit_images(&[3, 2]).unwrap();
        assert!(Isometry::new(&m, bad).is_err());
    }
}
