//! Group cohomology with twisted coefficients, group extensions and their
//! splittings.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Limits, Result};
use crate::groups::library::twisted_product;
use crate::groups::{
    generating_set, search_homs, CayleyGroup, FiniteAbelianGroup, FiniteGroup, GroupHom, HomSearch,
};

/// A finite abelian group `M` with a left action of a finite group `G` by
/// automorphisms. `action[g][x]` is `g·x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffModule {
    pub group: CayleyGroup,
    pub module: FiniteAbelianGroup,
    action: Vec<Vec<usize>>,
}

impl CoeffModule {
    pub fn new(group: CayleyGroup, module: FiniteAbelianGroup, action: Vec<Vec<usize>>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::InvalidHom(format!(
                "action given for {} of {} group elements",
                action.len(),
                group.order()
            )));
        }
        for (g, map) in action.iter().enumerate() {
            let hom = GroupHom::new(&module, &module, map.clone())?;
            if !hom.is_injective() {
                return Err(Error::InvalidHom(format!(
                    "{} does not act bijectively",
                    group.element_label(g)
                )));
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.op(g, h);
                if module.elements().any(|x| action[gh][x] != action[g][action[h][x]]) {
                    return Err(Error::InvalidHom(format!(
                        "action is not multiplicative at ({}, {})",
                        group.element_label(g),
                        group.element_label(h)
                    )));
                }
            }
        }
        if module.elements().any(|x| action[group.identity()][x] != x) {
            return Err(Error::InvalidHom("identity does not act trivially".into()));
        }
        Ok(CoeffModule {
            group,
            module,
            action,
        })
    }

    pub fn trivial_action(group: CayleyGroup, module: FiniteAbelianGroup) -> Self {
        let action = vec![module.elements().collect(); group.order()];
        CoeffModule {
            group,
            module,
            action,
        }
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn g_label(&self, g: usize) -> String {
        self.group.element_label(g)
    }
}

/// A normalized 2-cochain `G × G → M`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain2 {
    n: usize,
    values: Vec<usize>,
}

impl Cochain2 {
    pub fn new(cm: &CoeffModule, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = cm.group.order();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(format!("cochain table must be {n}×{n}")));
        }
        let values: Vec<usize> = table.into_iter().flatten().collect();
        if let Some(&bad) = values.iter().find(|&&v| v >= cm.module.order()) {
            return Err(Error::Invalid(format!("cochain value {bad} out of range")));
        }
        Self::from_flat(cm, values)
    }

    pub(crate) fn from_flat(cm: &CoeffModule, values: Vec<usize>) -> Result<Self> {
        let n = cm.group.order();
        let e = cm.group.identity();
        for g in 0..n {
            for (a, b) in [(e, g), (g, e)] {
                if values[a * n + b] != 0 {
                    return Err(Error::NotNormalized {
                        g: cm.g_label(a),
                        h: cm.g_label(b),
                    });
                }
            }
        }
        Ok(Cochain2 { n, values })
    }

    pub fn zero(cm: &CoeffModule) -> Self {
        let n = cm.group.order();
        Cochain2 {
            n,
            values: vec![0; n * n],
        }
    }

    pub fn get(&self, g: usize, h: usize) -> usize {
        self.values[g * self.n + h]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.values.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn add(&self, cm: &CoeffModule, other: &Cochain2) -> Cochain2 {
        Cochain2 {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| cm.module.add(a, b))
                .collect(),
        }
    }

    pub fn neg(&self, cm: &CoeffModule) -> Cochain2 {
        Cochain2 {
            n: self.n,
            values: self.values.iter().map(|&a| cm.module.neg(a)).collect(),
        }
    }
}

/// Checks `g·ω(h,k) + ω(g,hk) = ω(gh,k) + ω(g,h)` for all triples.
pub fn is_twisted_2cocycle(cm: &CoeffModule, w: &Cochain2) -> Result<()> {
    match cocycle_failure(cm, w.values()) {
        None => Ok(()),
        Some((g, h, k)) => Err(Error::NotCocycle {
            g: cm.g_label(g),
            h: cm.g_label(h),
            k: cm.g_label(k),
        }),
    }
}

fn cocycle_failure(cm: &CoeffModule, w: &[usize]) -> Option<(usize, usize, usize)> {
    let (grp, m) = (&cm.group, &cm.module);
    let n = grp.order();
    for g in 0..n {
        for h in 0..n {
            let gh = grp.op(g, h);
            for k in 0..n {
                let lhs = m.add(cm.act(g, w[h * n + k]), w[g * n + grp.op(h, k)]);
                let rhs = m.add(w[gh * n + k], w[g * n + h]);
                if lhs != rhs {
                    return Some((g, h, k));
                }
            }
        }
    }
    None
}

/// `(δf)(g,h) = f(g) + g·f(h) − f(gh)` for a 1-cochain with `f(e) = 0`.
pub fn coboundary(cm: &CoeffModule, f: &[usize]) -> Cochain2 {
    let (grp, m) = (&cm.group, &cm.module);
    let n = grp.order();
    let values = (0..n * n)
        .map(|i| {
            let (g, h) = (i / n, i % n);
            m.sub(m.add(f[g], cm.act(g, f[h])), f[grp.op(g, h)])
        })
        .collect();
    Cochain2 { n, values }
}

/// All `f: G → M` with `f(e) = 0` and `f(gh) = f(g) + g·f(h) + c(g,h)`,
/// sorted lexicographically. `c` must be normalized.
///
/// Values on a generating set are enumerated and propagated along the Cayley
/// graph; each candidate is then checked on every pair.
pub fn twisted_crossed_homs(cm: &CoeffModule, c: &Cochain2, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let (grp, m) = (&cm.group, &cm.module);
    let n = grp.order();
    let gens = generating_set(grp);
    let raw = (m.order() as u128).checked_pow(gens.len() as u32).unwrap_or(u128::MAX);
    if raw > limits.cochain_cap {
        return Err(Error::CapExceeded {
            what: "generator assignment space".into(),
            size: raw,
            cap: limits.cochain_cap,
        });
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        if let Some(f) = propagate(cm, c, &gens, &assignment) {
            let ok = (0..n).all(|g| {
                (0..n).all(|h| f[grp.op(g, h)] == m.add(m.add(f[g], cm.act(g, f[h])), c.get(g, h)))
            });
            if ok {
                out.push(f);
            }
        }
        if !odometer(&mut assignment, m.order()) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

fn propagate(cm: &CoeffModule, c: &Cochain2, gens: &[usize], values: &[usize]) -> Option<Vec<usize>> {
    let (grp, m) = (&cm.group, &cm.module);
    let mut f = vec![usize::MAX; grp.order()];
    let e = grp.identity();
    f[e] = 0;
    let mut queue = std::collections::VecDeque::from([e]);
    while let Some(g) = queue.pop_front() {
        for (&s, &v) in gens.iter().zip(values) {
            let gs = grp.op(g, s);
            let val = m.add(m.add(f[g], cm.act(g, v)), c.get(g, s));
            if f[gs] == usize::MAX {
                f[gs] = val;
                queue.push_back(gs);
            } else if f[gs] != val {
                return None;
            }
        }
    }
    Some(f)
}

/// Increments a little-endian counter; false once it wraps around.
fn odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Partitions solutions of a twisted crossed-hom equation into classes under
/// `f ↦ f + (g ↦ ξ − g·ξ)`. Each class is listed as sorted indices into
/// `sols`; classes are ordered by their least member.
pub fn classes_mod_principal(cm: &CoeffModule, sols: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let m = &cm.module;
    let index: std::collections::HashMap<&Vec<usize>, usize> =
        sols.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut class_of = vec![usize::MAX; sols.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..sols.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let mut members = BTreeSet::new();
        for xi in m.elements() {
            let shifted: Vec<usize> = sols[i]
                .iter()
                .enumerate()
                .map(|(g, &v)| m.add(v, m.sub(xi, cm.act(g, xi))))
                .collect();
            if let Some(&j) = index.get(&shifted) {
                members.insert(j);
            }
        }
        for &j in &members {
            class_of[j] = classes.len();
        }
        classes.push(members.into_iter().collect());
    }
    classes
}

/// Crossed homomorphisms `Z¹(G, M)`.
pub fn one_cocycles(cm: &CoeffModule, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    twisted_crossed_homs(cm, &Cochain2::zero(cm), limits)
}

/// Representatives of `H¹(G, M)`: the least crossed homomorphism of each class.
pub fn h1_classes(cm: &CoeffModule, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let z1 = one_cocycles(cm, limits)?;
    Ok(classes_mod_principal(cm, &z1)
        .into_iter()
        .map(|c| z1[c[0]].clone())
        .collect())
}

/// Whether `a − b` is a coboundary. Both must be cocycles.
pub fn are_cohomologous(cm: &CoeffModule, a: &Cochain2, b: &Cochain2, limits: &Limits) -> Result<bool> {
    // δf = a − b  ⇔  f(gh) = f(g) + g·f(h) − (a − b)(g,h)
    let c = b.add(cm, &a.neg(cm));
    Ok(!twisted_crossed_homs(cm, &c, limits)?.is_empty())
}

/// Representatives of `H²(G, M)` by exhaustive enumeration of normalized
/// cochains. Each class is represented by its lexicographically least
/// cocycle, and classes are listed in that order (zero first).
pub fn h2_classes(cm: &CoeffModule, limits: &Limits) -> Result<Vec<Cochain2>> {
    let (grp, m) = (&cm.group, &cm.module);
    let n = grp.order();
    let e = grp.identity();
    let free: Vec<usize> = (0..n * n)
        .filter(|&i| i / n != e && i % n != e)
        .collect();
    let raw = (m.order() as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
    if raw > limits.cochain_cap {
        return Err(Error::CapExceeded {
            what: "2-cochain space".into(),
            size: raw,
            cap: limits.cochain_cap,
        });
    }
    let f_free: Vec<usize> = (0..n).filter(|&g| g != e).collect();
    let f_raw = (m.order() as u128).checked_pow(f_free.len() as u32).unwrap_or(u128::MAX);
    if f_raw > limits.cochain_cap {
        return Err(Error::CapExceeded {
            what: "1-cochain space".into(),
            size: f_raw,
            cap: limits.cochain_cap,
        });
    }
    let mut boundaries: HashSet<Vec<usize>> = HashSet::new();
    let mut digits = vec![0usize; f_free.len()];
    loop {
        let mut f = vec![0; n];
        for (&g, &v) in f_free.iter().zip(&digits) {
            f[g] = v;
        }
        boundaries.insert(coboundary(cm, &f).values);
        if !odometer(&mut digits, m.order()) {
            break;
        }
    }
    let boundaries: Vec<Vec<usize>> = boundaries.into_iter().collect();

    let mut covered: HashSet<Vec<usize>> = HashSet::new();
    let mut reps = Vec::new();
    let mut digits = vec![0usize; free.len()];
    let mut w = vec![0usize; n * n];
    loop {
        for (&i, &v) in free.iter().zip(&digits) {
            w[i] = v;
        }
        if !covered.contains(&w) && cocycle_failure(cm, &w).is_none() {
            for beta in &boundaries {
                covered.insert(w.iter().zip(beta).map(|(&a, &b)| m.add(a, b)).collect());
            }
            reps.push(Cochain2 { n, values: w.clone() });
        }
        if !odometer(&mut digits, m.order()) {
            break;
        }
    }
    Ok(reps)
}

/// A short exact sequence `1 → N → E → G → 1` of explicit groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionPresentation {
    pub kernel: CayleyGroup,
    pub quotient: CayleyGroup,
    pub group: CayleyGroup,
    pub inclusion: GroupHom,
    pub projection: GroupHom,
}

impl ExtensionPresentation {
    pub fn new(
        kernel: CayleyGroup,
        quotient: CayleyGroup,
        group: CayleyGroup,
        inclusion: GroupHom,
        projection: GroupHom,
    ) -> Result<Self> {
        let inc = GroupHom::new(&kernel, &group, inclusion.images().to_vec())?;
        let proj = GroupHom::new(&group, &quotient, projection.images().to_vec())?;
        if !inc.is_injective() {
            return Err(Error::InvalidExtension("inclusion is not injective".into()));
        }
        if !proj.is_surjective(quotient.order()) {
            return Err(Error::InvalidExtension("projection is not surjective".into()));
        }
        let mut image: Vec<usize> = inc.images().to_vec();
        image.sort_unstable();
        if proj.kernel(quotient.identity()) != image {
            return Err(Error::InvalidExtension("kernel of projection is not the image of inclusion".into()));
        }
        Ok(ExtensionPresentation {
            kernel,
            quotient,
            group,
            inclusion: inc,
            projection: proj,
        })
    }

    /// `M ⋊_w G` on pairs `(x, g)` with `(x,g)(y,h) = (x + g·y + w(g,h), gh)`.
    /// Fails when the product is not associative, i.e. `w` is not a cocycle.
    pub fn from_cocycle(cm: &CoeffModule, w: &Cochain2) -> Result<Self> {
        let group = twisted_product(&cm.module, &cm.group, cm.action(), &|g, h| w.get(g, h));
        group
            .check_associative()
            .map_err(|e| Error::InvalidExtension(format!("twisted product is not associative: {e}")))?;
        let gn = cm.group.order();
        let e = cm.group.identity();
        let inclusion = GroupHom::from_images(cm.module.elements().map(|x| x * gn + e).collect());
        let projection = GroupHom::from_images((0..group.order()).map(|p| p % gn).collect());
        Self::new(cm.module.to_cayley(), cm.group.clone(), group, inclusion, projection)
    }
}

/// A homomorphic section `σ: G → E` with `π∘σ = id`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingMap(GroupHom);

impl SplittingMap {
    pub fn new(ext: &ExtensionPresentation, map: GroupHom) -> Result<Self> {
        let map = GroupHom::new(&ext.quotient, &ext.group, map.images().to_vec())?;
        if (0..ext.quotient.order()).any(|g| ext.projection.apply(map.apply(g)) != g) {
            return Err(Error::InvalidExtension("map is not a section of the projection".into()));
        }
        Ok(SplittingMap(map))
    }

    pub fn apply(&self, g: usize) -> usize {
        self.0.apply(g)
    }

    pub fn map(&self) -> &GroupHom {
        &self.0
    }
}

/// Every splitting, in lexicographic order of generator images.
pub fn enumerate_splittings(ext: &ExtensionPresentation, limits: &Limits) -> Result<Vec<SplittingMap>> {
    let source = &ext.quotient;
    let target = &ext.group;
    limits.check_group("extension group", target.order())?;
    let generators = generating_set(source);
    let candidates: Vec<Vec<usize>> = generators
        .iter()
        .map(|&s| {
            (0..target.order())
                .filter(|&x| ext.projection.apply(x) == s)
                .collect()
        })
        .collect();
    let raw = candidates
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
        .unwrap_or(u128::MAX);
    if raw > limits.cochain_cap {
        return Err(Error::CapExceeded {
            what: "section search space".into(),
            size: raw,
            cap: limits.cochain_cap,
        });
    }
    let search = HomSearch {
        source,
        target,
        generators,
        candidates,
        injective: true,
    };
    let mut out = Vec::new();
    search_homs(&search, &mut |_| true, &mut |m| {
        out.push(SplittingMap(GroupHom::from_images(m.to_vec())));
        true
    });
    for s in &out {
        if (0..source.order()).any(|g| ext.projection.apply(s.apply(g)) != g) {
            return Err(Error::Internal("section search produced a non-section".into()));
        }
    }
    Ok(out)
}

/// Classes of splittings under conjugation by `ι(N)`, as sorted index lists
/// ordered by least member.
pub fn splitting_classes(ext: &ExtensionPresentation, splittings: &[SplittingMap]) -> Vec<Vec<usize>> {
    let e = &ext.group;
    let index: std::collections::HashMap<&SplittingMap, usize> =
        splittings.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut seen = vec![false; splittings.len()];
    let mut classes = Vec::new();
    for i in 0..splittings.len() {
        if seen[i] {
            continue;
        }
        let mut members = BTreeSet::new();
        for x in ext.kernel.elements() {
            let n = ext.inclusion.apply(x);
            let conj = SplittingMap(GroupHom::from_images(
                splittings[i].map().images().iter().map(|&y| e.conjugate(n, y)).collect(),
            ));
            if let Some(&j) = index.get(&conj) {
                members.insert(j);
            }
        }
        for &j in &members {
            seen[j] = true;
        }
        classes.push(members.into_iter().collect());
    }
    classes
}
