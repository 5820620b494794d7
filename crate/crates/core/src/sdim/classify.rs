use std::fmt;

use serde::Serialize;

use crate::group::{is_cp_group, Group, MaximalCyclicFamily};

/// The three kinds of group whose power graph has strong dimension `n - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NMinus2Class {
    /// Cyclic of order `pq` for distinct primes `p`, `q`.
    CyclicPq,
    /// Generalized quaternion 2-group `Q_(2^m)`, `m >= 3`.
    GeneralizedQuaternion,
    /// Noncyclic CP-group whose maximal cyclic subgroups meet trivially.
    TrivialIntersectionCp,
}

impl NMinus2Class {
    pub fn label(self) -> &'static str {
        match self {
            NMinus2Class::CyclicPq => "i",
            NMinus2Class::GeneralizedQuaternion => "ii",
            NMinus2Class::TrivialIntersectionCp => "iii",
        }
    }
}

impl fmt::Display for NMinus2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            NMinus2Class::CyclicPq => "cyclic of order pq",
            NMinus2Class::GeneralizedQuaternion => "generalized quaternion 2-group",
            NMinus2Class::TrivialIntersectionCp => "noncyclic CP-group with trivially intersecting maximal cyclic subgroups",
        };
        write!(f, "({}) {text}", self.label())
    }
}

/// Structural test for `sdim = n - 2`, read from the table alone.
pub fn classify_n_minus_2(g: &Group) -> Option<NMinus2Class> {
    let f = g.factorization();
    if g.is_cyclic() {
        let squarefree_pq = f.distinct_primes() == 2 && f.total_exponent() == 2;
        return squarefree_pq.then_some(NMinus2Class::CyclicPq);
    }
    // noncyclic 2-group of order >= 8 with a unique involution
    if f.is_prime_power() && f.factors()[0].0 == 2 && g.order() >= 8 && g.involutions().count() == 1 {
        return Some(NMinus2Class::GeneralizedQuaternion);
    }
    if !is_cp_group(g) {
        return None;
    }
    let family = MaximalCyclicFamily::of(g);
    let trivial = family.all.iter().enumerate().all(|(i, a)| {
        family.all[i + 1..]
            .iter()
            .all(|b| a.intersection_order(b) == 1)
    });
    trivial.then_some(NMinus2Class::TrivialIntersectionCp)
}
