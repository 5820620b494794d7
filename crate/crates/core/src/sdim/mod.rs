//! Strong metric dimension: the definitional check, the generic oracle,
//! the diameter-two reduction and the group-level formulas.

mod classify;
mod group;
mod witness;

pub use classify::{classify_n_minus_2, NMinus2Class};
pub use group::{
    applicable_closed_forms, evaluate_closed_form, invariant_factors, method_ladder, omega_reduced_group, sdim_group,
    LadderEntry,
};
pub use witness::{clique_witness_alpha_p, clique_witness_cyclic, CyclicCliqueWitness};

use std::fmt;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::clique::{max_clique, min_vertex_cover};
use crate::error::{Error, Result};
use crate::graph::{reduced_graph, Graph, UNREACHABLE};
use crate::group::Group;

/// Default vertex limit for [`sdim_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 200;

/// How a strong dimension value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    /// `n - 1` for cyclic groups of prime-power order.
    ClosedFormCyclicPrimePower,
    /// `n - sigma_n` for cyclic groups.
    ClosedFormCyclic,
    /// `n - max s_i` for noncyclic p-groups.
    ClosedFormPGroup,
    /// `2n - (sigma_n + 1)` for the dihedral group of order `2n`.
    ClosedFormDihedral,
    /// `4n - (sigma_2n + 1)` for the generalized quaternion group of order `4n`.
    ClosedFormQuaternion,
    /// `d_1 ... d_k - (sigma_dk + 1)` for noncyclic abelian groups of non-prime-power order.
    ClosedFormAbelian,
    /// `p^k - 2` for elementary abelian groups with `k >= 2`.
    ClosedFormElementaryAbelian,
    /// `n - omega(R)` with omega from the maximal cyclic subgroup structure.
    GroupTheorem,
    /// `n - omega(R)` with omega from an exact clique search on the reduced graph.
    Diameter2Reduction,
    /// Minimum vertex cover of the strong resolving graph.
    GenericOracle,
}

impl Method {
    pub const ALL: [Method; 10] = [
        Method::ClosedFormCyclicPrimePower,
        Method::ClosedFormCyclic,
        Method::ClosedFormPGroup,
        Method::ClosedFormDihedral,
        Method::ClosedFormQuaternion,
        Method::ClosedFormAbelian,
        Method::ClosedFormElementaryAbelian,
        Method::GroupTheorem,
        Method::Diameter2Reduction,
        Method::GenericOracle,
    ];

    pub fn is_closed_form(self) -> bool {
        !matches!(self, Method::GroupTheorem | Method::Diameter2Reduction | Method::GenericOracle)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SdimResult {
    pub value: usize,
    /// `omega(R)` when the value came from `n - omega(R)`.
    pub omega_reduced: Option<usize>,
    pub method: Method,
    /// Closed form that also applied, if any.
    pub closed_form: Option<Method>,
    /// Sorted strong resolving set of size `value`.
    pub witness: Option<Vec<usize>>,
    /// The witness passed [`is_strong_resolving_set`].
    pub verified: bool,
}

/// The JSON record emitted for a group computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub group: String,
    pub order: usize,
    pub sdim: usize,
    pub omega_reduced: Option<usize>,
    pub method: Method,
    pub closed_form: Option<Method>,
    pub witness: Option<Vec<usize>>,
    pub verified: bool,
}

impl ResultRecord {
    pub fn new(g: &Group, result: &SdimResult, include_witness: bool) -> Self {
        ResultRecord {
            group: g.spec().to_string(),
            order: g.order(),
            sdim: result.value,
            omega_reduced: result.omega_reduced,
            method: result.method,
            closed_form: result.closed_form,
            witness: if include_witness { result.witness.clone() } else { None },
            verified: result.verified,
        }
    }
}

fn connected_distances(graph: &Graph) -> Result<Vec<Vec<u32>>> {
    let dist = graph.distance_matrix();
    if dist.iter().flatten().any(|&d| d == UNREACHABLE) {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

/// Every pair `u != v` has some `w` in `set` with `v` on a shortest `w`-`u`
/// path or `u` on a shortest `w`-`v` path.
pub fn is_strong_resolving_set(graph: &Graph, set: &[usize]) -> Result<bool> {
    let n = graph.vertex_count();
    let dist = connected_distances(graph)?;
    if n <= 1 {
        return Ok(true);
    }
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0) as usize;
    let members = BitSet::from_indices(n, set.iter().copied());
    // layers[v][k] = vertices at distance k from v
    let layers: Vec<Vec<BitSet>> = dist
        .iter()
        .map(|row| {
            let mut by_distance = vec![BitSet::new(n); diameter + 1];
            for (w, &d) in row.iter().enumerate() {
                by_distance[d as usize].insert(w);
            }
            by_distance
        })
        .collect();
    let member_layers: Vec<Vec<BitSet>> = layers
        .iter()
        .map(|ls| ls.iter().map(|l| l.intersection(&members)).collect())
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            let d = dist[u][v] as usize;
            // w with d(w, u) = d(w, v) + d(v, u), or the same with u and v swapped
            let resolved = (0..=diameter - d).any(|k| {
                member_layers[v][k].intersects(&layers[u][k + d]) || member_layers[u][k].intersects(&layers[v][k + d])
            });
            if !resolved {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The condition that characterizes strong resolving sets of diameter-two
/// graphs: the vertices outside `set` form a clique with pairwise distinct
/// closed neighborhoods.
pub fn complement_is_non_twin_clique(graph: &Graph, set: &[usize]) -> bool {
    let inside = BitSet::from_indices(graph.vertex_count(), set.iter().copied());
    let outside: Vec<usize> = inside.complement().to_vec();
    graph.is_non_twin_clique(&outside)
}

/// Graph joining mutually maximally distant pairs: `d(u, v) >= d(u, w)` for
/// every neighbor `w` of `v`, and symmetrically.
pub fn strong_resolving_graph(graph: &Graph) -> Result<Graph> {
    let n = graph.vertex_count();
    let dist = connected_distances(graph)?;
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let d = dist[u][v];
            let far_from_u = graph.neighbors(v).iter().all(|w| dist[u][w] <= d);
            let far_from_v = graph.neighbors(u).iter().all(|w| dist[v][w] <= d);
            if far_from_u && far_from_v {
                out.add_edge(u, v);
            }
        }
    }
    Ok(out)
}

pub fn sdim_oracle(graph: &Graph) -> Result<SdimResult> {
    sdim_oracle_with_cap(graph, DEFAULT_ORACLE_CAP)
}

/// Strong dimension as the vertex cover number of the strong resolving graph.
pub fn sdim_oracle_with_cap(graph: &Graph, cap: usize) -> Result<SdimResult> {
    let n = graph.vertex_count();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let cover = min_vertex_cover(&strong_resolving_graph(graph)?);
    let verified = is_strong_resolving_set(graph, &cover)?;
    Ok(SdimResult {
        value: cover.len(),
        omega_reduced: None,
        method: Method::GenericOracle,
        closed_form: None,
        witness: Some(cover),
        verified,
    })
}

/// `n - omega(R)` for graphs of diameter at most two. The witness is every
/// vertex except the class representatives of a maximum clique of `R`.
pub fn sdim_via_reduction(graph: &Graph) -> Result<SdimResult> {
    let diameter = graph.diameter()?;
    if diameter > 2 {
        return Err(Error::DiameterTooLarge(diameter));
    }
    let reduced = reduced_graph(graph);
    let clique = max_clique(&reduced.quotient);
    let n = graph.vertex_count();
    let mut keep = BitSet::full(n);
    for &c in &clique.members {
        keep.remove(reduced.representatives[c]);
    }
    let witness = keep.to_vec();
    let verified = is_strong_resolving_set(graph, &witness)?;
    Ok(SdimResult {
        value: n - clique.size,
        omega_reduced: Some(clique.size),
        method: Method::Diameter2Reduction,
        closed_form: None,
        witness: Some(witness),
        verified,
    })
}
