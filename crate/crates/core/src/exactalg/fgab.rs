//! Finitely generated abelian groups as invariant-factor chains.
//!
//! A group is stored as (d_1, ..., d_t) with d_i | d_{i+1}, unit factors
//! dropped, and d_i = 0 denoting a free Z summand (zeros sort last, since
//! everything divides 0). The trivial group is the empty chain.

use super::mat::MatZ;
use super::num::Int;
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FgAbGroup {
    factors: Vec<Int>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup { factors: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { factors: vec![Int::zero(); rank] }
    }

    pub fn cyclic(n: &Int) -> Self {
        Self::from_orders(std::slice::from_ref(n))
    }

    /// Builds the group ⊕ Z/n_i from an arbitrary list of cyclic orders
    /// (not necessarily a divisibility chain); n_i = 0 means a Z summand.
    pub fn from_orders(orders: &[Int]) -> Self {
        let nonunit: Vec<&Int> = orders.iter().filter(|d| !d.is_one()).collect();
        let n = nonunit.len();
        let mut m = MatZ::zeros(n, n);
        for (i, d) in nonunit.iter().enumerate() {
            m[(i, i)] = (*d).clone();
        }
        let snf = m.snf();
        let mut factors = snf.diag;
        // Rank-deficient diag entries (zeros) stay; pad for any all-zero rows.
        factors.resize(n, Int::zero());
        Self::from_chain(&factors)
    }

    /// Builds from a list already forming a divisibility chain (possibly with
    /// unit entries and zeros in any position).
    pub fn from_chain(chain: &[Int]) -> Self {
        let mut factors: Vec<Int> =
            chain.iter().filter(|d| !d.is_one()).map(|d| d.abs()).collect();
        factors.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
            (true, true) => std::cmp::Ordering::Equal,
            (true, false) => std::cmp::Ordering::Greater,
            (false, true) => std::cmp::Ordering::Less,
            (false, false) => a.cmp(b),
        });
        debug_assert!(factors.windows(2).all(|w| w[1].is_zero() || (&w[1] % &w[0]).is_zero()));
        FgAbGroup { factors }
    }

    pub fn factors(&self) -> &[Int] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion_factors(&self) -> Vec<Int> {
        self.factors.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Order of the group; None when infinite.
    pub fn order(&self) -> Option<Int> {
        if !self.is_finite() {
            return None;
        }
        Some(self.factors.iter().product())
    }

    /// Direct sum, renormalized to a chain.
    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders = self.factors.clone();
        orders.extend(other.factors.iter().cloned());
        Self::from_orders(&orders)
    }

    /// True when every element has order dividing 2.
    pub fn is_elementary_2(&self) -> bool {
        self.factors.iter().all(|d| *d == Int::from(2))
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for d in self.torsion_factors() {
            parts.push(format!("Z/{}", d));
        }
        let fr = self.free_rank();
        if fr == 1 {
            parts.push("Z".to_string());
        } else if fr > 1 {
            parts.push(format!("Z^{}", fr));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::num::int;

    #[test]
    fn canonicalization() {
        let g = FgAbGroup::from_orders(&[int(2), int(3)]);
        assert_eq!(g.to_string(), "Z/6");
        let g = FgAbGroup::from_orders(&[int(2), int(4), int(1)]);
        assert_eq!(g.factors(), &[int(2), int(4)]);
        let g = FgAbGroup::from_orders(&[int(6), int(4)]);
        assert_eq!(g.factors(), &[int(2), int(12)]);
        let g = FgAbGroup::from_orders(&[int(0), int(2)]);
        assert_eq!(g.to_string(), "Z/2 x Z");
        assert_eq!(g.free_rank(), 1);
        assert!(FgAbGroup::from_orders(&[int(1)]).is_trivial());
    }

    #[test]
    fn orders() {
        assert_eq!(FgAbGroup::from_orders(&[int(2), int(2)]).order(), Some(int(4)));
        assert_eq!(FgAbGroup::free(1).order(), None);
        assert_eq!(FgAbGroup::trivial().order(), Some(int(1)));
    }
}
