use super::FiniteGroup;
use crate::error::{Error, Result};

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl CayleyGroup {
    /// Validates a multiplication table: square, Latin, with a two-sided
    /// identity, and associative (checked exhaustively).
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("entry {bad} out of range in row {i}")));
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "{} labels for {n} elements",
                    l.len()
                )));
            }
        }
        // Latin square.
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut row_seen[table[i][j]], true) {
                    return Err(Error::InvalidGroup(format!("row {i} repeats an entry")));
                }
                if std::mem::replace(&mut col_seen[table[j][i]], true) {
                    return Err(Error::InvalidGroup(format!("column {i} repeats an entry")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let group = Self::from_parts(table, labels);
        debug_assert_eq!(group.identity, identity);
        group.check_associative()?;
        Ok(group)
    }

    /// Builds from a table known to be a group table (internal constructions).
    pub(crate) fn from_parts(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Self {
        let n = table.len();
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| flat[e * n + x] == x))
            .expect("table without identity");
        let inverses = (0..n)
            .map(|x| (0..n).find(|&y| flat[x * n + y] == identity).expect("no inverse"))
            .collect();
        CayleyGroup {
            order: n,
            table: flat,
            identity,
            inverses,
            labels,
        }
    }

    /// Exhaustive associativity check; reports the first failing triple.
    pub fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.table[a * n + b];
                for c in 0..n {
                    if self.table[ab * n + c] != self.table[a * n + self.table[b * n + c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            self.element_label(a),
                            self.element_label(b),
                            self.element_label(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        Self::from_parts(vec![vec![0]], Some(vec!["e".into()]))
    }

    /// `Z_n` with elements labelled `e, g, g^2, …`.
    pub fn cyclic(n: usize) -> Self {
        let n = n.max(1);
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Self::from_parts(table, Some(labels))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidGroup(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Finds an element by label (or, failing that, by decimal index).
    pub fn find(&self, name: &str) -> Option<usize> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Some(i);
            }
        }
        name.parse::<usize>().ok().filter(|&i| i < self.order)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Direct product with lexicographic pair indexing `(a, b) -> a·|other| + b`.
    pub fn product(&self, other: &CayleyGroup) -> CayleyGroup {
        let m = other.order;
        let n = self.order * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.op(x / m, y / m) * m + other.op(x % m, y % m))
                    .collect()
            })
            .collect();
        let labels = (0..n)
            .map(|x| {
                format!(
                    "({},{})",
                    self.element_label(x / m),
                    other.element_label(x % m)
                )
            })
            .collect();
        Self::from_parts(table, Some(labels))
    }

    /// The subgroup on `elements` (which must be closed), re-indexed in the
    /// given order, together with the embedding into `self`.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(CayleyGroup, Vec<usize>)> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elements.iter().enumerate() {
            pos[x] = i;
        }
        let mut table = Vec::with_capacity(elements.len());
        for &a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for &b in elements {
                let p = pos[self.op(a, b)];
                if p == usize::MAX {
                    return Err(Error::InvalidGroup("subset is not closed".into()));
                }
                row.push(p);
            }
            table.push(row);
        }
        let labels = elements.iter().map(|&x| self.element_label(x)).collect();
        let sub = CayleyGroup::from_table(table, Some(labels))?;
        Ok((sub, elements.to_vec()))
    }

    /// Same group with elements permuted: new index `perm[old]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<CayleyGroup> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Invalid("relabeling is not a permutation".into()));
        }
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let table = (0..n)
            .map(|x| (0..n).map(|y| perm[self.op(inv[x], inv[y])]).collect())
            .collect();
        let labels = (0..n).map(|x| self.element_label(inv[x])).collect();
        Ok(Self::from_parts(table, Some(labels)))
    }

    /// Size of the center.
    pub fn center_order(&self) -> usize {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.op(z, x) == self.op(x, z)))
            .count()
    }
}

impl FiniteGroup for CayleyGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    fn element_label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }
}
