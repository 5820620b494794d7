//! Exact maximum clique by bitset branch and bound with a greedy colouring
//! bound, and minimum vertex cover through the complement graph.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Sorted vertex ids.
    pub members: Vec<usize>,
}

struct Search {
    /// Adjacency in search order (position 0 = highest degree).
    adj: Vec<BitSet>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search {
    /// Greedy sequential colouring of `candidates` in position order.
    /// Returns vertices with their colour, colours nondecreasing.
    fn colour(&self, candidates: &BitSet) -> Vec<(usize, usize)> {
        let mut ordered = Vec::with_capacity(candidates.count());
        let mut uncoloured = candidates.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.difference_with(&self.adj[v]);
                uncoloured.remove(v);
                ordered.push((v, colour));
            }
        }
        ordered
    }

    fn expand(&mut self, mut candidates: BitSet) {
        let ordered = self.colour(&candidates);
        for &(v, colour) in ordered.iter().rev() {
            if self.current.len() + colour <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = candidates.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }
}

/// Exact maximum clique. Vertices are searched by descending degree with
/// ties broken by smaller index, so equal inputs give equal answers.
pub fn max_clique(graph: &Graph) -> CliqueResult {
    let n = graph.vertex_count();
    if n == 0 {
        return CliqueResult {
            size: 0,
            members: Vec::new(),
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj = order
        .iter()
        .map(|&v| BitSet::from_indices(n, graph.neighbors(v).iter().map(|w| position[w])))
        .collect();
    let mut search = Search {
        adj,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.expand(BitSet::full(n));
    let mut members: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    members.sort_unstable();
    CliqueResult {
        size: members.len(),
        members,
    }
}

/// Exact minimum vertex cover: the complement of a maximum independent set,
/// found as a maximum clique of the complement graph. Sorted.
pub fn min_vertex_cover(graph: &Graph) -> Vec<usize> {
    let independent = max_clique(&graph.complement());
    let mut keep = vec![true; graph.vertex_count()];
    for &v in &independent.members {
        keep[v] = false;
    }
    (0..graph.vertex_count()).filter(|&v| keep[v]).collect()
}
