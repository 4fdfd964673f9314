//! Finite group substrate.
//!
//! Elements are always plain indices `0..order`. Abelian groups are stored by
//! their cyclic factors and use mixed-radix coordinates (first coordinate most
//! significant, so index order is lexicographic order on coordinate tuples);
//! everything else is an explicit Cayley table.

mod abelian;
mod automorphism;
mod cayley;
mod hom;
pub mod library;
mod subgroups;

pub use abelian::{decompose_abelian, AbelianDecomposition, FiniteAbelianGroup};
pub use automorphism::{automorphism_group, is_isomorphic, isomorphisms, AutomorphismGroup};
pub use cayley::CayleyGroup;
pub use hom::{generating_set, span, GroupHom};
pub use subgroups::{enumerate_subgroups, enumerate_subgroups_of, enumerate_subgroups_where, Subgroup};

pub(crate) use hom::{search_homs, HomSearch};

/// Common interface of both group representations.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn op(&self, a: usize, b: usize) -> usize;
    fn inverse(&self, a: usize) -> usize;

    /// Human-readable name of an element.
    fn element_label(&self, a: usize) -> String {
        a.to_string()
    }

    fn element_order(&self, a: usize) -> usize {
        let e = self.identity();
        let mut x = a;
        let mut k = 1;
        while x != e {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    fn pow(&self, a: usize, mut k: usize) -> usize {
        let mut acc = self.identity();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.op(acc, base);
            }
            base = self.op(base, base);
            k >>= 1;
        }
        acc
    }

    fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    fn conjugate(&self, by: usize, x: usize) -> usize {
        self.op(self.op(by, x), self.inverse(by))
    }

    /// Histogram of element orders, indexed by order.
    fn order_profile(&self) -> Vec<usize> {
        let n = self.order();
        let mut hist = vec![0; n + 1];
        for a in 0..n {
            hist[self.element_order(a)] += 1;
        }
        hist
    }
}

/// Unicode superscript rendering used in anyon labels (`m²`).
pub fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Unicode subscript rendering used in group names (`Z₄`, `Dic₁₂`).
pub fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}
