use std::time::{Duration, Instant};

use super::{sdim_oracle_with_cap, sdim_via_reduction, Method, SdimResult};
use crate::error::{Error, Result};
use crate::graph::power_graph;
use crate::group::{is_cp_group, sigma_of, Group, GroupSpec, MaximalCyclicFamily, PrimeFactorization};

/// `omega(R)` of the power graph from group structure alone:
/// `sigma_n` for cyclic groups, otherwise the maximum of `alpha_p` over the
/// prime divisors, joined for non-CP groups with `sigma_|M| + 1` over the
/// maximal cyclic subgroups of non-prime-power order.
pub fn omega_reduced_group(g: &Group) -> usize {
    let n = g.order();
    if g.is_cyclic() {
        return sigma_of(n as u64) as usize;
    }
    let family = MaximalCyclicFamily::of(g);
    let alpha = g
        .factorization()
        .primes()
        .map(|p| family.alpha_p(g, p))
        .max()
        .unwrap_or(0);
    if is_cp_group(g) {
        return alpha;
    }
    family
        .mixed_members()
        .map(|m| sigma_of(m.order() as u64) as usize + 1)
        .fold(alpha, usize::max)
}

/// Invariant factors `d_1 | ... | d_k` of a product of cyclic groups of the
/// given orders. Trivial factors are dropped.
pub fn invariant_factors(cyclic_orders: &[u64]) -> Vec<u64> {
    let mut exponents: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for &c in cyclic_orders.iter().filter(|&&c| c > 1) {
        for &(p, r) in PrimeFactorization::of(c).factors() {
            exponents.entry(p).or_default().push(r);
        }
    }
    let k = exponents.values().map(Vec::len).max().unwrap_or(0);
    for exps in exponents.values_mut() {
        exps.sort_unstable_by(|a, b| b.cmp(a));
    }
    // the largest factor collects the top exponent of every prime
    let mut factors: Vec<u64> = (0..k)
        .map(|i| {
            exponents
                .iter()
                .map(|(&p, exps)| exps.get(i).map_or(1, |&r| p.pow(r)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

fn abelian_invariants(spec: &GroupSpec) -> Option<Vec<u64>> {
    spec.abelian_cyclic_parts().map(|parts| invariant_factors(&parts))
}

/// Closed forms that apply to `g`, most specific first.
pub fn applicable_closed_forms(g: &Group) -> Vec<Method> {
    CLOSED_FORMS
        .iter()
        .copied()
        .filter(|&m| evaluate_closed_form(g, m).is_some())
        .collect()
}

const CLOSED_FORMS: [Method; 7] = [
    Method::ClosedFormCyclicPrimePower,
    Method::ClosedFormCyclic,
    Method::ClosedFormElementaryAbelian,
    Method::ClosedFormDihedral,
    Method::ClosedFormQuaternion,
    Method::ClosedFormAbelian,
    Method::ClosedFormPGroup,
];

/// Value of one closed form, or `None` when it does not apply to `g`.
/// Cyclicity and the p-group property are read from the table; the family
/// formulas are dispatched on the spec.
pub fn evaluate_closed_form(g: &Group, method: Method) -> Option<usize> {
    let n = g.order();
    let factorization = g.factorization();
    match method {
        Method::ClosedFormCyclicPrimePower => {
            (g.is_cyclic() && factorization.is_prime_power()).then(|| n - 1)
        }
        Method::ClosedFormCyclic => g.is_cyclic().then(|| n - sigma_of(n as u64) as usize),
        Method::ClosedFormPGroup => {
            if g.is_cyclic() || !g.is_p_group() {
                return None;
            }
            let p = factorization.factors()[0].0;
            let family = MaximalCyclicFamily::of(g);
            let longest = family.chain_analysis(g, p).ok()?.iter().map(|a| a.s).max()?;
            Some(n - longest)
        }
        Method::ClosedFormDihedral => match g.spec() {
            GroupSpec::Dihedral(order) => Some(*order as usize - (sigma_of(order / 2) as usize + 1)),
            _ => None,
        },
        Method::ClosedFormQuaternion => match g.spec() {
            GroupSpec::GeneralizedQuaternion(order) => Some(*order as usize - (sigma_of(order / 2) as usize + 1)),
            _ => None,
        },
        Method::ClosedFormElementaryAbelian => {
            let ds = abelian_invariants(g.spec())?;
            let p = *ds.first()?;
            (ds.len() >= 2 && ds.iter().all(|&d| d == p) && crate::group::is_prime(p))
                .then(|| n - 2)
        }
        Method::ClosedFormAbelian => {
            let ds = abelian_invariants(g.spec())?;
            if ds.len() < 2 || factorization.is_prime_power() {
                return None;
            }
            let product: u64 = ds.iter().product();
            Some(product as usize - (sigma_of(*ds.last()?) as usize + 1))
        }
        Method::GroupTheorem | Method::Diameter2Reduction | Method::GenericOracle => None,
    }
}

fn inconsistency(g: &Group, what: &str, got: usize, expected: usize) -> Error {
    Error::InternalInconsistency(format!(
        "{}: {what} gives {got}, group theorem gives {expected}",
        g.spec()
    ))
}

/// `n - omega(R)` from the group structure, cross-checked against every
/// applicable closed form and against the reduction on the power graph,
/// which also supplies the witness.
pub fn sdim_group(g: &Group) -> Result<SdimResult> {
    let n = g.order();
    let omega = omega_reduced_group(g);
    let value = n - omega;
    let closed = applicable_closed_forms(g);
    for &method in &closed {
        let got = evaluate_closed_form(g, method).expect("applicable closed form");
        if got != value {
            return Err(inconsistency(g, &method.to_string(), got, value));
        }
    }
    let reduction = sdim_via_reduction(&power_graph(g))?;
    if reduction.value != value {
        return Err(inconsistency(g, "the reduced-graph clique search", reduction.value, value));
    }
    if !reduction.verified {
        return Err(Error::InternalInconsistency(format!(
            "{}: reduction witness is not a strong resolving set",
            g.spec()
        )));
    }
    let closed_form = closed.first().copied();
    Ok(SdimResult {
        value,
        omega_reduced: Some(omega),
        method: closed_form.unwrap_or(Method::GroupTheorem),
        closed_form,
        witness: reduction.witness,
        verified: true,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderEntry {
    pub method: Method,
    pub value: usize,
    pub elapsed: Duration,
}

/// Every applicable method evaluated independently: the closed forms, the
/// group theorem, the reduction and (when `oracle_cap` admits the order)
/// the generic oracle. Agreement is left to the caller.
pub fn method_ladder(g: &Group, oracle_cap: Option<usize>) -> Result<Vec<LadderEntry>> {
    fn timed(method: Method, f: impl FnOnce() -> Result<usize>) -> Result<LadderEntry> {
        let start = Instant::now();
        let value = f()?;
        Ok(LadderEntry {
            method,
            value,
            elapsed: start.elapsed(),
        })
    }
    let n = g.order();
    let mut rows = Vec::new();
    for method in applicable_closed_forms(g) {
        rows.push(timed(method, || Ok(evaluate_closed_form(g, method).unwrap()))?);
    }
    rows.push(timed(Method::GroupTheorem, || Ok(n - omega_reduced_group(g)))?);
    rows.push(timed(Method::Diameter2Reduction, || {
        Ok(sdim_via_reduction(&power_graph(g))?.value)
    })?);
    if let Some(cap) = oracle_cap {
        if n <= cap {
            rows.push(timed(Method::GenericOracle, || {
                Ok(sdim_oracle_with_cap(&power_graph(g), cap)?.value)
            })?);
        }
    }
    Ok(rows)
}
