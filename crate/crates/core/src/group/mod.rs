//! Finite groups given by multiplication tables, and the cyclic-subgroup
//! quantities the strong-dimension formulas are built from.

mod build;
mod cyclic;
pub mod factor;
mod spec;

pub use build::{build_group, build_group_with, parse_cayley, parse_perm_file, to_cayley_text, BuildOptions, Permutation};
pub use cyclic::{alpha_p, chain_analysis, is_cp_group, maximal_cyclic_subgroups, ChainAnalysis, CyclicSubgroup, MaximalCyclicFamily};
pub use factor::{is_prime, sigma, sigma_of, PrimeFactorization};
pub use spec::GroupSpec;

use crate::error::{Error, Result};

/// Tables up to this order are checked for associativity on construction.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 128;

/// A finite group of order `n` on element indices `0..n`.
#[derive(Clone, Debug)]
pub struct Group {
    n: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    orders: Vec<usize>,
    spec: GroupSpec,
}

impl Group {
    /// Validates a row-major table and derives identity, inverses and
    /// element orders. Associativity is checked when `check_associativity`
    /// is set.
    pub fn from_table(n: usize, table: Vec<u32>, spec: GroupSpec, check_associativity: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if table.len() != n * n {
            return Err(Error::NotAGroup(format!("expected {} entries, got {}", n * n, table.len())));
        }
        if let Some(bad) = table.iter().find(|&&v| v as usize >= n) {
            return Err(Error::NotAGroup(format!("entry {bad} out of range 0..{n}")));
        }
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.fill(false);
            for j in 0..n {
                let v = table[i * n + j] as usize;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotAGroup(format!("row {i} repeats {v}")));
                }
            }
        }
        for j in 0..n {
            seen.fill(false);
            for i in 0..n {
                let v = table[i * n + j] as usize;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotAGroup(format!("column {j} repeats {v}")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e * n + j] as usize == j && table[j * n + e] as usize == j))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        if check_associativity {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a * n + b] as usize;
                    for c in 0..n {
                        let bc = table[b * n + c] as usize;
                        if table[ab * n + c] != table[a * n + bc] {
                            return Err(Error::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                        }
                    }
                }
            }
        }
        let inverse: Vec<usize> = (0..n)
            .map(|x| (0..n).find(|&y| table[x * n + y] as usize == identity).unwrap())
            .collect();
        let mut group = Group {
            n,
            table,
            identity,
            inverse,
            orders: Vec::new(),
            spec,
        };
        group.orders = (0..n).map(|x| group.compute_order(x)).collect();
        Ok(group)
    }

    fn compute_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Least `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k % self.orders[x]).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    /// The powers `e, x, x^2, ..., x^(|x|-1)`.
    pub fn powers(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.orders[x]);
        let mut y = self.identity;
        for _ in 0..self.orders[x] {
            out.push(y);
            y = self.mul(y, x);
        }
        out
    }

    /// Cyclicity is detected from the table, not from the spec.
    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.n)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn factorization(&self) -> PrimeFactorization {
        PrimeFactorization::of(self.n as u64)
    }

    pub fn is_p_group(&self) -> bool {
        self.n > 1 && self.factorization().is_prime_power()
    }

    /// Elements of order exactly 2.
    pub fn involutions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&x| self.orders[x] == 2)
    }
}

/// Multiplicative order of `x`.
pub fn element_order(g: &Group, x: usize) -> usize {
    g.element_order(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> Group {
        build_group(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn cyclic_orders() {
        let z6 = group("Z6");
        assert_eq!(element_order(&z6, 2), 3);
        assert_eq!(element_order(&z6, 0), 1);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(z6.mul(i, j), (i + j) % 6);
            }
        }
    }

    #[test]
    fn quaternion_y_has_order_four() {
        // Q8 layout: x^0..x^3 then y x^0..y x^3, so y is index 4.
        let q8 = group("Q8");
        assert_eq!(element_order(&q8, 4), 4);
        assert_eq!(q8.involutions().count(), 1);
        assert!(!q8.is_cyclic());
        assert!(!q8.is_abelian());
    }

    #[test]
    fn orders_divide_group_order() {
        for s in ["S4", "D18", "Q24", "Ab[2,6]", "Z3xQ8", "A5"] {
            let g = group(s);
            for x in 0..g.order() {
                assert_eq!(g.order() % g.element_order(x), 0, "{s}");
                assert_eq!(g.pow(x, g.element_order(x)), g.identity());
            }
        }
    }

    #[test]
    fn rejects_non_latin_tables() {
        let err = Group::from_table(2, vec![0, 1, 1, 1], GroupSpec::Cyclic(2), true).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // Latin square with identity 0 that is not associative.
        #[rustfmt::skip]
        let table = vec![
            0, 1, 2, 3, 4,
            1, 0, 3, 4, 2,
            2, 4, 0, 1, 3,
            3, 2, 4, 0, 1,
            4, 3, 1, 2, 0,
        ];
        let err = Group::from_table(5, table, GroupSpec::Cyclic(5), true).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(msg) if msg.contains('≠')));
    }
}
