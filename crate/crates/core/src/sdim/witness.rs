//! Explicit cliques of pairwise non-twin vertices attaining `sigma_n` in the
//! cyclic case and `alpha_p` for a prime `p`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, MaximalCyclicFamily, PrimeFactorization};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicCliqueWitness {
    /// Element orders, each dividing the next.
    pub orders: Vec<u64>,
    /// Residues of `Z_n` realizing `orders`.
    pub elements: Vec<usize>,
}

/// Orders `p_m, p_m^2, ..., p_m^r_m, p_(m-1) p_m^r_m, ..., n` (largest prime
/// first), realized as the residues `n / order`. For prime powers the
/// sequence is the single order `p`.
pub fn clique_witness_cyclic(n: u64) -> CyclicCliqueWitness {
    let f = PrimeFactorization::of(n.max(1));
    let orders = match f.factors() {
        [] => vec![1],
        [(p, _)] => vec![*p],
        factors => {
            let mut acc = 1;
            let mut orders = Vec::new();
            for &(p, r) in factors.iter().rev() {
                for _ in 0..r {
                    acc *= p;
                    orders.push(acc);
                }
            }
            orders
        }
    };
    let elements = orders.iter().map(|&d| ((n / d) % n.max(1)) as usize).collect();
    CyclicCliqueWitness { orders, elements }
}

/// For the member `M_i` of `M_p` attaining `alpha_p`: elements `x_0, ..., x_lambda`
/// of order `p^j` inside `<c_(s')>`, followed by the chain generators
/// `c_(s'), ..., c_s`.
pub fn clique_witness_alpha_p(g: &Group, p: u64) -> Result<Vec<usize>> {
    let family = MaximalCyclicFamily::of(g);
    let analyses = family.chain_analysis(g, p)?;
    // first member attaining the maximum (max_by_key keeps the last)
    let best = analyses
        .iter()
        .rev()
        .max_by_key(|a| a.alpha())
        .ok_or(Error::EmptyFamily { p })?;
    let base = best.chain[best.s_prime - 1].generator;
    let base_order = g.element_order(base);
    let mut out = Vec::with_capacity(best.alpha());
    for j in 0..=best.lambda_exp {
        let step = base_order / (p as usize).pow(j as u32);
        out.push(g.pow(base, step));
    }
    out.extend(best.chain[best.s_prime - 1..].iter().map(|c| c.generator));
    Ok(out)
}
