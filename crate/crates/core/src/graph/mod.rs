//! Simple undirected graphs on `0..n` with bitset adjacency, the power graph
//! of a group, and the closed-twin reduction.

pub mod io;
mod reduced;

pub use reduced::{reduced_graph, ReducedGraph};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{CyclicSubgroup, Group};

/// Distance marker for vertices not reachable from the BFS source.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    rows: Vec<BitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![BitSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.rows[v] = BitSet::full(n);
            g.rows[v].remove(v);
        }
        g
    }

    /// Rejects loops and out-of-range endpoints; duplicate edges are merged.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::parse("edge list", format!("edge ({u}, {v}) out of range 0..{n}")));
            }
            if u == v {
                return Err(Error::parse("edge list", format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "loops are not allowed");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    /// `N[v]`: the neighbors of `v` together with `v`.
    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut row = self.rows[v].clone();
        row.insert(v);
        row
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.complement();
                c.remove(v);
                c
            })
            .collect();
        Graph { rows }
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// A clique whose members have pairwise distinct closed neighborhoods,
    /// i.e. a clique of the reduced graph lifted back to this graph.
    pub fn is_non_twin_clique(&self, vertices: &[usize]) -> bool {
        if !self.is_clique(vertices) {
            return false;
        }
        let closed: Vec<BitSet> = vertices.iter().map(|&v| self.closed_neighborhood(v)).collect();
        closed
            .iter()
            .enumerate()
            .all(|(i, a)| closed[i + 1..].iter().all(|b| a != b))
    }

    /// Breadth-first distances from `source`; [`UNREACHABLE`] marks vertices
    /// in other components.
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let n = self.vertex_count();
        let mut dist = vec![UNREACHABLE; n];
        dist[source] = 0;
        let mut unvisited = BitSet::full(n);
        unvisited.remove(source);
        let mut frontier = BitSet::new(n);
        frontier.insert(source);
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = BitSet::new(n);
            for v in &frontier {
                next.union_with(&self.rows[v]);
            }
            next.intersect_with(&unvisited);
            unvisited.difference_with(&next);
            for v in &next {
                dist[v] = level;
            }
            frontier = next;
        }
        dist
    }

    /// All-pairs distances, one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<u32>> {
        (0..self.vertex_count()).map(|v| self.bfs_distances(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest pairwise distance; 0 for graphs with fewer than two vertices.
    pub fn diameter(&self) -> Result<u32> {
        let mut best = 0;
        for v in 0..self.vertex_count() {
            let far = self.bfs_distances(v).into_iter().max().unwrap_or(0);
            if far == UNREACHABLE {
                return Err(Error::Disconnected);
            }
            best = best.max(far);
        }
        Ok(best)
    }
}

pub fn bfs_distances(graph: &Graph, v: usize) -> Vec<u32> {
    graph.bfs_distances(v)
}

pub fn diameter(graph: &Graph) -> Result<u32> {
    graph.diameter()
}

/// Two distinct elements are adjacent when one lies in the cyclic subgroup
/// generated by the other.
pub fn power_graph(g: &Group) -> Graph {
    let n = g.order();
    let mut graph = Graph::empty(n);
    let mut done = vec![false; n];
    for y in 0..n {
        if done[y] {
            continue;
        }
        // every generator of <y> has the same neighbors inside <y>
        let sub = CyclicSubgroup::generated_by(g, y);
        for &z in &sub.elements {
            if g.element_order(z) == sub.order() {
                done[z] = true;
                for &x in &sub.elements {
                    if x != z {
                        graph.add_edge(x, z);
                    }
                }
            }
        }
    }
    graph
}
