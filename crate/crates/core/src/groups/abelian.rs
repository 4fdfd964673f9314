use std::fmt;

use super::{subscript, CayleyGroup, FiniteGroup};
use crate::error::{Error, Result};

/// A finite abelian group `Z_{d₁} × … × Z_{dₖ}`.
///
/// The cyclic factors need not be in invariant-factor form: products of
/// doubles keep their natural block coordinates. [`invariant_factors`]
/// returns the canonical `d₁ | d₂ | …` form.
///
/// [`invariant_factors`]: FiniteAbelianGroup::invariant_factors
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    factors: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidGroup(format!(
                "cyclic factor {bad} must be at least 2"
            )));
        }
        let mut order: usize = 1;
        for &d in &factors {
            order = order
                .checked_mul(d)
                .ok_or_else(|| Error::InvalidGroup("group order overflows".into()))?;
        }
        let mut strides = vec![1; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        Ok(FiniteAbelianGroup {
            factors,
            strides,
            order,
        })
    }

    /// Constructor that insists on canonical invariant factors.
    pub fn from_invariant_factors(factors: Vec<usize>) -> Result<Self> {
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidGroup(format!(
                "invariant factors must divide each other, but {} does not divide {}",
                w[0], w[1]
            )));
        }
        Self::new(factors)
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new()).unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            Self::new(vec![n]).unwrap()
        }
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_canonical(&self) -> bool {
        self.factors.windows(2).all(|w| w[1] % w[0] == 0)
    }

    /// Canonical invariant factors, ascending, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<usize> {
        invariant_factors_of(&self.factors)
    }

    pub fn exponent(&self) -> usize {
        self.factors
            .iter()
            .fold(1, |acc, &d| num_integer::lcm(acc, d))
    }

    pub fn coords(&self, x: usize) -> Vec<usize> {
        debug_assert!(x < self.order);
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&d, &s)| (x / s) % d)
            .collect()
    }

    /// Element with the given coordinates, each reduced modulo its factor.
    pub fn index(&self, coords: &[i64]) -> Result<usize> {
        if coords.len() != self.factors.len() {
            return Err(Error::Invalid(format!(
                "expected {} coordinates, got {}",
                self.factors.len(),
                coords.len()
            )));
        }
        Ok(self
            .factors
            .iter()
            .zip(&self.strides)
            .zip(coords)
            .map(|((&d, &s), &c)| (c.rem_euclid(d as i64) as usize) * s)
            .sum())
    }

    pub(crate) fn index_unchecked(&self, coords: &[usize]) -> usize {
        self.factors
            .iter()
            .zip(&self.strides)
            .zip(coords)
            .map(|((&d, &s), &c)| (c % d) * s)
            .sum()
    }

    /// The i-th unit coordinate vector.
    pub fn unit(&self, i: usize) -> usize {
        self.strides[i]
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let mut out = 0;
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            out += (((x / s) % d + (y / s) % d) % d) * s;
        }
        out
    }

    pub fn neg(&self, x: usize) -> usize {
        let mut out = 0;
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            out += ((d - (x / s) % d) % d) * s;
        }
        out
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    pub fn scale(&self, x: usize, k: i64) -> usize {
        let mut out = 0;
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let c = ((x / s) % d) as i64;
            out += ((c * k).rem_euclid(d as i64) as usize) * s;
        }
        out
    }

    /// Direct product; coordinates of `self` come first.
    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self::new(factors).unwrap()
    }

    /// Name from invariant factors, e.g. `Z₂×Z₂`; the trivial group is `1`.
    pub fn name(&self) -> String {
        name_from_invariant_factors(&self.invariant_factors())
    }

    pub fn to_cayley(&self) -> CayleyGroup {
        let n = self.order;
        let table = (0..n)
            .map(|x| (0..n).map(|y| self.add(x, y)).collect())
            .collect();
        let labels = (0..n).map(|x| self.element_label(x)).collect();
        CayleyGroup::from_parts(table, Some(labels))
    }
}

impl FiniteGroup for FiniteAbelianGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn identity(&self) -> usize {
        0
    }

    fn op(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }

    fn inverse(&self, a: usize) -> usize {
        self.neg(a)
    }

    fn element_label(&self, a: usize) -> String {
        let c = self.coords(a);
        match c.len() {
            0 => "0".to_string(),
            1 => c[0].to_string(),
            _ => format!(
                "({})",
                c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }

    fn element_order(&self, a: usize) -> usize {
        self.coords(a)
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (&c, &d)| {
                num_integer::lcm(acc, d / num_integer::gcd(c, d))
            })
    }

    fn is_abelian(&self) -> bool {
        true
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn name_from_invariant_factors(factors: &[usize]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|&d| format!("Z{}", subscript(d)))
        .collect::<Vec<_>>()
        .join("×")
}

fn exact_log(mut c: usize, p: usize) -> u32 {
    let mut k = 0;
    while c > 1 {
        c /= p;
        k += 1;
    }
    k
}

fn prime_powers(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors of a product of cyclic groups of the given orders.
fn invariant_factors_of(cyclic: &[usize]) -> Vec<usize> {
    use std::collections::BTreeMap;
    let mut by_prime: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for &d in cyclic {
        for (p, e) in prime_powers(d) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    combine_prime_partitions(by_prime)
}

fn combine_prime_partitions(by_prime: std::collections::BTreeMap<usize, Vec<u32>>) -> Vec<usize> {
    let count = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1usize; count];
    for (p, mut exps) in by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (j, e) in exps.into_iter().enumerate() {
            out[count - 1 - j] *= p.pow(e);
        }
    }
    out
}

/// Structure of an abelian subgroup of some ambient group, with an explicit
/// basis and coordinate maps in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianDecomposition {
    /// The subgroup as an abstract group in canonical invariant-factor form.
    pub group: FiniteAbelianGroup,
    /// Ambient elements; `basis[i]` has order `group.factors()[i]`.
    pub basis: Vec<usize>,
    /// Decomposed element index -> ambient element.
    pub embed: Vec<usize>,
    project: Vec<Option<usize>>,
}

impl AbelianDecomposition {
    /// Decomposed index of an ambient element, if it lies in the subgroup.
    pub fn project(&self, ambient: usize) -> Option<usize> {
        self.project.get(ambient).copied().flatten()
    }
}

/// Decomposes the abelian subgroup formed by `elements` of `g` into cyclic
/// factors. Bases are found by backtracking over candidates in ascending
/// index order, largest factor first.
pub fn decompose_abelian<G: FiniteGroup + ?Sized>(g: &G, elements: &[usize]) -> Result<AbelianDecomposition> {
    let n = elements.len();
    let ambient = g.order();
    let mut member = vec![false; ambient];
    for &x in elements {
        member[x] = true;
    }
    if !member[g.identity()] {
        return Err(Error::InvalidGroup("subset does not contain the identity".into()));
    }
    for &a in elements {
        for &b in elements {
            let ab = g.op(a, b);
            if !member[ab] {
                return Err(Error::InvalidGroup("subset is not closed".into()));
            }
            if ab != g.op(b, a) {
                return Err(Error::InvalidGroup(format!(
                    "elements {} and {} do not commute",
                    g.element_label(a),
                    g.element_label(b)
                )));
            }
        }
    }

    // p-ranks from counting solutions of x^{p^k} = 1.
    let mut by_prime = std::collections::BTreeMap::new();
    for (p, e) in prime_powers(n) {
        let p_part = p.pow(e);
        let mut parts: Vec<u32> = Vec::new();
        let mut prev_log = 0u32;
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let c = elements.iter().filter(|&&x| g.pow(x, pk) == g.identity()).count();
            let log = exact_log(c, p);
            let at_least_k = log - prev_log;
            // at_least_k factors have exponent >= k
            for (i, part) in parts.iter_mut().enumerate() {
                if i < at_least_k as usize {
                    *part = k;
                }
            }
            while parts.len() < at_least_k as usize {
                parts.push(k);
            }
            prev_log = log;
            if c == p_part {
                break;
            }
            k += 1;
        }
        by_prime.insert(p, parts);
    }
    let invariant = combine_prime_partitions(by_prime);

    let mut desc = invariant.clone();
    desc.reverse();
    let mut chosen = Vec::new();
    let mut in_span = vec![false; ambient];
    in_span[g.identity()] = true;
    let span = vec![g.identity()];
    if !find_basis(g, elements, &desc, &mut chosen, &mut in_span, &span) {
        return Err(Error::Internal("no basis found for abelian subgroup".into()));
    }
    chosen.reverse();

    let group = FiniteAbelianGroup::from_invariant_factors(invariant)?;
    let mut embed = Vec::with_capacity(n);
    let mut project = vec![None; ambient];
    for idx in 0..group.order() {
        let coords = group.coords(idx);
        let x = coords
            .iter()
            .zip(&chosen)
            .fold(g.identity(), |acc, (&c, &b)| g.op(acc, g.pow(b, c)));
        embed.push(x);
        project[x] = Some(idx);
    }
    Ok(AbelianDecomposition {
        group,
        basis: chosen,
        embed,
        project,
    })
}

fn find_basis<G: FiniteGroup + ?Sized>(
    g: &G,
    elements: &[usize],
    remaining: &[usize],
    chosen: &mut Vec<usize>,
    in_span: &mut Vec<bool>,
    span: &[usize],
) -> bool {
    let Some((&d, rest)) = remaining.split_first() else {
        return true;
    };
    for &cand in elements {
        if in_span[cand] || g.element_order(cand) != d {
            continue;
        }
        let mut added = Vec::new();
        let mut ok = true;
        let mut power = cand;
        'outer: for _ in 1..d {
            for &s in span {
                let y = g.op(s, power);
                if in_span[y] {
                    ok = false;
                    break 'outer;
                }
                in_span[y] = true;
                added.push(y);
            }
            power = g.op(power, cand);
        }
        if ok {
            let mut next_span = span.to_vec();
            next_span.extend_from_slice(&added);
            chosen.push(cand);
            if find_basis(g, elements, rest, chosen, in_span, &next_span) {
                return true;
            }
            chosen.pop();
        }
        for y in added {
            in_span[y] = false;
        }
    }
    false
}
