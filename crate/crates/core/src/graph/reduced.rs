use std::collections::HashMap;

use super::Graph;
use crate::bitset::BitSet;

/// Quotient of a graph by the closed-twin relation `N[x] = N[y]`.
#[derive(Clone, Debug)]
pub struct ReducedGraph {
    pub base: Graph,
    /// Smallest vertex of each class, ascending; class `c` is represented by
    /// `representatives[c]`.
    pub representatives: Vec<usize>,
    pub class_of: Vec<usize>,
    /// Graph on class ids `0..representatives.len()`.
    pub quotient: Graph,
}

impl ReducedGraph {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.class_count()];
        for (v, &c) in self.class_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.class_count()];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }
}

pub fn reduced_graph(graph: &Graph) -> ReducedGraph {
    let n = graph.vertex_count();
    // hashing the row finds candidates; map key equality confirms them exactly
    let mut class_by_row: HashMap<BitSet, usize> = HashMap::new();
    let mut representatives = Vec::new();
    let mut class_of = Vec::with_capacity(n);
    for v in 0..n {
        let next = representatives.len();
        let class = *class_by_row.entry(graph.closed_neighborhood(v)).or_insert(next);
        if class == next {
            representatives.push(v);
        }
        class_of.push(class);
    }
    let quotient = graph.induced(&representatives);
    ReducedGraph {
        base: graph.clone(),
        representatives,
        class_of,
        quotient,
    }
}
