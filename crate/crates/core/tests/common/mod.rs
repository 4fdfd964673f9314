//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! The oracles here deliberately avoid the library's search routines: they
//! enumerate raw functions and subsets and check the defining equations.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use condensa::action::{first_obstruction, CategoricalAction};
use condensa::cohomology::{coboundary, CoeffModule};
use condensa::condense::{enumerate_etale, EtaleAlgebra};
use condensa::groups::library::symmetric3;
use condensa::groups::{generating_set, CayleyGroup, FiniteAbelianGroup, FiniteGroup, GroupHom};
use condensa::metric::{isometry_group, MetricGroup};
use condensa::{Limits, QZ};
use rand::seq::SliceRandom;
use rand::Rng;

/// Indecomposable metric groups of order at most `max`: odd cyclic forms
/// `a·x²/p^k`, 2-primary cyclic forms `a·x²/2^(k+1)` and the rank-two forms
/// `xy/2^k` and `(x² + xy + y²)/2^k`.
pub fn indecomposables(max: usize) -> Vec<(String, MetricGroup)> {
    let mut out = Vec::new();
    for n in 2..=max {
        let Some(p) = prime_power_base(n) else { continue };
        if p == 2 {
            let mut seen = HashSet::new();
            for a in [1i64, 3, 5, 7] {
                let q: Vec<QZ> = (0..n as i64).map(|x| QZ::frac(a * x * x, 2 * n as i64)).collect();
                if seen.insert(q.clone()) {
                    let g = FiniteAbelianGroup::new(vec![n]).unwrap();
                    out.push((format!("Z{n}[{a}x²/{}]", 2 * n), MetricGroup::new(g, q, None).unwrap()));
                }
            }
            if n * n <= max {
                let g = FiniteAbelianGroup::new(vec![n, n]).unwrap();
                let (hyp, ell): (Vec<QZ>, Vec<QZ>) = (0..n * n)
                    .map(|i| {
                        let (x, y) = ((i / n) as i64, (i % n) as i64);
                        (QZ::frac(x * y, n as i64), QZ::frac(x * x + x * y + y * y, n as i64))
                    })
                    .unzip();
                out.push((format!("A{n}"), MetricGroup::new(g.clone(), hyp, None).unwrap()));
                out.push((format!("B{n}"), MetricGroup::new(g, ell, None).unwrap()));
            }
        } else {
            let nonresidue = (2..p as i64).find(|&a| (1..p as i64).all(|x| (x * x - a).rem_euclid(p as i64) != 0));
            for a in [1, nonresidue.unwrap()] {
                let q = (0..n as i64).map(|x| QZ::frac(a * x * x, n as i64)).collect();
                let g = FiniteAbelianGroup::new(vec![n]).unwrap();
                out.push((format!("Z{n}[{a}x²/{n}]"), MetricGroup::new(g, q, None).unwrap()));
            }
        }
    }
    out
}

fn prime_power_base(n: usize) -> Option<usize> {
    let p = (2..=n).find(|p| n % p == 0)?;
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Every orthogonal sum of indecomposables with total order at most `max`,
/// including the trivial group. Every metric group of order at most `max`
/// is isometric to at least one entry.
pub fn all_metric_groups(max: usize) -> Vec<(String, MetricGroup)> {
    let parts = indecomposables(max);
    let mut out = vec![("Vec".to_string(), MetricGroup::trivial())];
    fn extend(
        parts: &[(String, MetricGroup)],
        start: usize,
        name: String,
        acc: MetricGroup,
        max: usize,
        out: &mut Vec<(String, MetricGroup)>,
    ) {
        for (i, (pn, p)) in parts.iter().enumerate().skip(start) {
            if acc.order() * p.order() > max {
                continue;
            }
            let next = acc.product(p);
            let nn = if name.is_empty() { pn.clone() } else { format!("{name}⊕{pn}") };
            out.push((nn.clone(), next.clone()));
            extend(parts, i, nn, next, max, out);
        }
    }
    extend(&parts, 0, String::new(), MetricGroup::trivial(), max, &mut out);
    out
}

/// `b(x, y) = q(x + y) − q(x) − q(y)` from the raw twist table.
pub fn bilinear(m: &MetricGroup, x: usize, y: usize) -> QZ {
    let g = m.group();
    m.q(g.add(x, y)) - m.q(x) - m.q(y)
}

pub fn mask_elements(mask: u128) -> Vec<usize> {
    (0..128).filter(|i| mask >> i & 1 == 1).collect()
}

/// All isotropic subgroups as bitmasks, grown one element at a time from
/// `{0}`. Requires `|M| ≤ 128`.
pub fn isotropic_subgroups(m: &MetricGroup) -> HashSet<u128> {
    assert!(m.order() <= 128);
    let g = m.group();
    let mut seen = HashSet::from([1u128]);
    let mut stack = vec![1u128];
    while let Some(h) = stack.pop() {
        let members = mask_elements(h);
        for x in g.elements() {
            if h >> x & 1 == 1 || !m.q(x).is_zero() {
                continue;
            }
            let mut next = 0u128;
            let mut k = 0;
            loop {
                for &y in &members {
                    next |= 1 << g.add(y, k);
                }
                k = g.add(k, x);
                if k == 0 {
                    break;
                }
            }
            if mask_elements(next).iter().all(|&y| m.q(y).is_zero()) && seen.insert(next) {
                stack.push(next);
            }
        }
    }
    seen
}

/// Calls `f` on every normalized map `G → N` (value 0 at the identity).
fn for_each_normalized(n_g: usize, e: usize, n_mod: usize, mut f: impl FnMut(&[usize])) {
    let free: Vec<usize> = (0..n_g).filter(|&g| g != e).collect();
    let mut v = vec![0usize; n_g];
    loop {
        f(&v);
        let mut i = 0;
        loop {
            if i == free.len() {
                return;
            }
            v[free[i]] += 1;
            if v[free[i]] < n_mod {
                break;
            }
            v[free[i]] = 0;
            i += 1;
        }
    }
}

/// `|N|^(|G|−1)`, the size of the normalized 1-cochain space.
pub fn one_cochain_space(cm: &CoeffModule) -> u128 {
    (cm.module.order() as u128).pow(cm.group.order() as u32 - 1)
}

/// Brute-force `(|Z¹|, |B¹|)` by scanning every normalized 1-cochain.
pub fn brute_h1(cm: &CoeffModule) -> (usize, usize) {
    let (grp, m) = (&cm.group, &cm.module);
    let n = grp.order();
    let mut z1 = 0;
    for_each_normalized(n, grp.identity(), m.order(), |f| {
        let ok = (0..n).all(|g| (0..n).all(|h| f[grp.op(g, h)] == m.add(f[g], cm.act(g, f[h]))));
        if ok {
            z1 += 1;
        }
    });
    let principal: HashSet<Vec<usize>> = m
        .elements()
        .map(|xi| (0..n).map(|g| m.sub(cm.act(g, xi), xi)).collect())
        .collect();
    (z1, principal.len())
}

/// Whether `w` equals `δf` for some normalized `f`, by scanning all `f`.
pub fn brute_is_coboundary(cm: &CoeffModule, w: &[Vec<usize>]) -> bool {
    let (grp, m) = (&cm.group, &cm.module);
    let n = grp.order();
    let mut found = false;
    for_each_normalized(n, grp.identity(), m.order(), |f| {
        if !found {
            found = (0..n).all(|g| {
                (0..n).all(|h| m.sub(m.add(f[g], cm.act(g, f[h])), f[grp.op(g, h)]) == w[g][h])
            });
        }
    });
    found
}

/// `|N|^((|G|−1)²)`, the size of the normalized 2-cochain space.
pub fn two_cochain_space(cm: &CoeffModule) -> u128 {
    let k = (cm.group.order() - 1) as u32;
    (cm.module.order() as u128).checked_pow(k * k).unwrap_or(u128::MAX)
}

/// Brute-force `|H²| = |Z²| / |B²|` over all normalized 2-cochains.
pub fn brute_h2_order(cm: &CoeffModule) -> usize {
    let (grp, m) = (&cm.group, &cm.module);
    let n = grp.order();
    let e = grp.identity();
    let free: Vec<(usize, usize)> =
        (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).filter(|&(g, h)| g != e && h != e).collect();
    let mut w = vec![vec![0usize; n]; n];
    let mut digits = vec![0usize; free.len()];
    let mut z2 = 0usize;
    loop {
        for (&(g, h), &d) in free.iter().zip(&digits) {
            w[g][h] = d;
        }
        let ok = (0..n).all(|g| {
            (0..n).all(|h| {
                (0..n).all(|k| {
                    m.add(cm.act(g, w[h][k]), w[g][grp.op(h, k)]) == m.add(w[grp.op(g, h)][k], w[g][h])
                })
            })
        });
        if ok {
            z2 += 1;
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                let mut b2 = HashSet::new();
                for_each_normalized(n, e, m.order(), |f| {
                    b2.insert(coboundary(cm, f).values().to_vec());
                });
                return z2 / b2.len();
            }
            digits[i] += 1;
            if digits[i] < m.order() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Checks that `map` is a bijective homomorphism `g → h` entry by entry.
pub fn is_isomorphism<G: FiniteGroup, H: FiniteGroup>(g: &G, h: &H, map: &GroupHom) -> bool {
    let n = g.order();
    if n != h.order() {
        return false;
    }
    let mut hit = vec![false; n];
    for x in 0..n {
        hit[map.apply(x)] = true;
    }
    hit.iter().all(|&b| b)
        && (0..n).all(|x| (0..n).all(|y| map.apply(g.op(x, y)) == h.op(map.apply(x), map.apply(y))))
}

/// Cayley table of `Z_m ⋊ Z_n` with the generator of `Z_n` acting by `x ↦ r·x`,
/// on pairs `(a, b)` indexed `a·n + b`.
pub fn semidirect_table(m: usize, n: usize, r: usize) -> CayleyGroup {
    let pow = |b: usize| (0..b).fold(1usize, |acc, _| acc * r % m);
    let table = (0..m * n)
        .map(|x| {
            let (a, b) = (x / n, x % n);
            (0..m * n)
                .map(|y| {
                    let (c, d) = (y / n, y % n);
                    ((a + pow(b) * c) % m) * n + (b + d) % n
                })
                .collect()
        })
        .collect();
    CayleyGroup::from_table(table, None).unwrap()
}

/// `S₃` as permutations of three points, composed right to left.
pub fn s3_permutations() -> CayleyGroup {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let table = perms
        .iter()
        .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
        .collect();
    CayleyGroup::from_table(table, None).unwrap()
}

/// Symmetry groups of order at most 6.
pub fn small_groups() -> Vec<(String, CayleyGroup)> {
    let mut out: Vec<(String, CayleyGroup)> =
        (1..=6).map(|n| (format!("Z{n}"), CayleyGroup::cyclic(n))).collect();
    out.push(("Z2xZ2".into(), FiniteAbelianGroup::new(vec![2, 2]).unwrap().to_cayley()));
    out.push(("S3".into(), symmetric3()));
    out
}

/// A random symmetry and an algebra passing the first obstruction.
pub struct RandomScenario {
    pub description: String,
    pub action: CategoricalAction,
    pub algebra: EtaleAlgebra,
}

/// Draws scenarios from a fixed pool of metric groups and small groups.
pub struct ScenarioSampler {
    metrics: Vec<(String, MetricGroup)>,
    groups: Vec<(String, CayleyGroup)>,
    isometries: HashMap<usize, Vec<GroupHom>>,
}

impl ScenarioSampler {
    pub fn new(max_metric: usize) -> Self {
        ScenarioSampler {
            metrics: all_metric_groups(max_metric),
            groups: small_groups(),
            isometries: HashMap::new(),
        }
    }

    fn isometries(&mut self, i: usize) -> &[GroupHom] {
        let m = &self.metrics[i].1;
        self.isometries.entry(i).or_insert_with(|| match isometry_group(m, &Limits::default()) {
            Ok(a) => a.maps,
            Err(_) => vec![GroupHom::identity_on(m.order())],
        })
    }

    pub fn sample(&mut self, rng: &mut impl Rng) -> RandomScenario {
        let mi = rng.gen_range(0..self.metrics.len());
        let (mname, m) = self.metrics[mi].clone();
        let (gname, g) = self.groups.choose(rng).unwrap().clone();
        let gens = generating_set(&g);
        let isos = self.isometries(mi).to_vec();
        let zero = vec![vec![0; g.order()]; g.order()];
        let mut base = None;
        for _ in 0..24 {
            let images: Vec<GroupHom> = gens.iter().map(|_| isos.choose(rng).unwrap().clone()).collect();
            if let Ok(a) = CategoricalAction::from_generators(m.clone(), g.clone(), &gens, &images, zero.clone()) {
                base = Some(a);
                break;
            }
        }
        let base = base.unwrap_or_else(|| CategoricalAction::trivial(m.clone(), g.clone()));
        let stable: Vec<EtaleAlgebra> = enumerate_etale(&m, &Limits::default())
            .unwrap()
            .into_iter()
            .filter(|a| first_obstruction(&base, a))
            .collect();
        let algebra = pick_nontrivial(rng, &stable, |a| a.order() > 1).clone();
        let omega = random_cocycle(rng, &base, &algebra);
        let alpha = g.elements().map(|x| base.alpha(x).map().clone()).collect();
        let action = CategoricalAction::new(m.clone(), g.clone(), alpha, omega).expect("sampled cocycle is valid");
        RandomScenario {
            description: format!("{mname} with {gname}, |B| = {}", algebra.order()),
            action,
            algebra,
        }
    }
}

/// Inflation of a cyclic cocycle `ω(g, h) = x·[π(g) + π(h) ≥ k]` along a random
/// `π: G → Z_k`, with `x` fixed by every `α_g`, plus a random coboundary.
/// `x` is preferably outside `B⊥`, so that it survives the ring operator.
pub fn random_cocycle(rng: &mut impl Rng, action: &CategoricalAction, algebra: &EtaleAlgebra) -> Vec<Vec<usize>> {
    let (g, m) = (action.group(), action.metric().group());
    let n = g.order();
    let fixed: Vec<usize> = m.elements().filter(|&x| g.elements().all(|h| action.alpha(h).apply(x) == x)).collect();
    let visible = |&x: &usize| algebra.elements().iter().any(|&b| !bilinear(action.metric(), x, b).is_zero());
    let x = *pick_nontrivial(rng, &fixed, visible);
    let homs: Vec<(usize, Vec<usize>)> = (1..=n)
        .filter(|k| n % k == 0)
        .flat_map(|k| {
            let zk = CayleyGroup::cyclic(k);
            let mut found = Vec::new();
            for_each_normalized(n, g.identity(), k, |f| {
                if GroupHom::new(g, &zk, f.to_vec()).is_ok() {
                    found.push((k, f.to_vec()));
                }
            });
            found
        })
        .collect();
    let (k, pi) = homs.choose(rng).unwrap().clone();
    let f: Vec<usize> = g.elements().map(|h| if h == g.identity() { 0 } else { rng.gen_range(0..m.order()) }).collect();
    let shift = coboundary(action.coeffs(), &f);
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let base = if pi[a] + pi[b] >= k { x } else { 0 };
                    m.add(base, shift.get(a, b))
                })
                .collect()
        })
        .collect()
}

/// Prefers (three times in four) an item satisfying `nontrivial`, when one exists.
fn pick_nontrivial<'a, T>(rng: &mut impl Rng, items: &'a [T], nontrivial: impl Fn(&T) -> bool) -> &'a T {
    let preferred: Vec<&T> = items.iter().filter(|x| nontrivial(x)).collect();
    if !preferred.is_empty() && rng.gen_bool(0.75) {
        preferred.choose(rng).unwrap()
    } else {
        items.choose(rng).unwrap()
    }
}

/// The same action with `ω` replaced by `ω + δf`.
pub fn shifted(action: &CategoricalAction, f: &[usize]) -> CategoricalAction {
    let (g, m) = (action.group(), action.metric().group());
    let d = coboundary(action.coeffs(), f);
    let omega = g
        .elements()
        .map(|a| g.elements().map(|b| m.add(action.omega(a, b), d.get(a, b))).collect())
        .collect();
    let alpha = g.elements().map(|x| action.alpha(x).map().clone()).collect();
    CategoricalAction::new(action.metric().clone(), g.clone(), alpha, omega).expect("shifted cocycle is valid")
}
