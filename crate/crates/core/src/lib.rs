//! Exact strong metric dimension of power graphs of finite groups.
//!
//! The power graph of a group joins two distinct elements when one is a
//! power of the other. It always has diameter at most two, so its strong
//! metric dimension equals `n - omega(R)`, where `R` is the quotient by
//! closed twins. This crate computes `omega(R)` three independent ways
//! (from the maximal cyclic subgroup structure, by exact clique search on
//! `R`, and through a generic vertex-cover oracle) and checks that they
//! agree.
//!
//! ```
//! use sdim_core::{build_group, sdim_group};
//!
//! let d12 = build_group(&"D12".parse().unwrap()).unwrap();
//! let result = sdim_group(&d12).unwrap();
//! assert_eq!(result.value, 9);
//! assert!(result.verified);
//! ```

pub mod bitset;
pub mod clique;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod group;
pub mod sdim;

pub use clique::{max_clique, min_vertex_cover, CliqueResult};
pub use error::{Error, Result};
pub use graph::{bfs_distances, diameter, power_graph, reduced_graph, Graph, ReducedGraph};
pub use group::{
    alpha_p, build_group, build_group_with, chain_analysis, element_order, is_cp_group, maximal_cyclic_subgroups,
    sigma, BuildOptions, ChainAnalysis, CyclicSubgroup, Group, GroupSpec, MaximalCyclicFamily, PrimeFactorization,
};
pub use sdim::{
    classify_n_minus_2, clique_witness_alpha_p, clique_witness_cyclic, is_strong_resolving_set, omega_reduced_group,
    sdim_group, sdim_oracle, sdim_oracle_with_cap, sdim_via_reduction, strong_resolving_graph, Method, NMinus2Class,
    SdimResult,
};
