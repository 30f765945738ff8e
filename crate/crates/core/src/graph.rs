//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`. Each vertex stores its neighbourhood as a 64-bit set,
//! so neighbour iteration is always ascending and duplicate-free, and the
//! symmetric, loop-free invariants are enforced at construction.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{capacity, domain, input, Result};

/// Largest supported order.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        capacity("graph order", n, MAX_VERTICES)?;
        Ok(Graph { adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(input(format!("edge {u}-{v} out of range for n = {n}")));
            }
            if u == v {
                return Err(input(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(input(format!("duplicate edge {u}-{v}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbour bitsets. Used by the codecs and the enumerator.
    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj.iter().enumerate().all(|(v, &m)| m & (1 << v) == 0
            && (0..adj.len()).all(|u| (m >> u & 1) == (adj[u] >> v & 1))));
        Graph { adj }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.adj
    }

    /// Returns a copy with vertex `v` joined to every vertex in `neighbours`.
    pub(crate) fn with_new_vertex(&self, neighbours: u64) -> Graph {
        let v = self.adj.len();
        let mut adj = self.adj.clone();
        for (u, m) in adj.iter_mut().enumerate() {
            if neighbours >> u & 1 == 1 {
                *m |= 1 << v;
            }
        }
        adj.push(neighbours);
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(input(format!(
                "vertex {v} out of range for a graph of order {}",
                self.order()
            )))
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    /// Degree without bounds checking beyond the slice index.
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    /// Neighbours of `v` in ascending order.
    ///
    /// # Panics
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.order()).map(|v| self.deg(v)).collect();
        seq.sort_unstable();
        seq
    }

    /// `None` for an empty vertex set.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.deg(v)).min()
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// All-pairs hop distances by BFS from every vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.order())
            .map(|s| self.distances_from(s).expect("source in range"))
            .collect()
    }

    /// Vertex set reachable from vertex 0, as a bitset.
    fn component_of_first(&self) -> u64 {
        if self.adj.is_empty() {
            return 0;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// True when every vertex is reachable from vertex 0. The 0-vertex graph is not connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        n >= 1 && self.component_of_first().count_ones() as usize == n
    }

    /// Largest eccentricity. The single-vertex graph has diameter 0.
    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(domain("diameter is undefined for a disconnected graph"));
        }
        let mut best = 0;
        for s in 0..self.order() {
            let ecc = self
                .distances_from(s)?
                .into_iter()
                .map(|d| d.expect("connected"))
                .max()
                .unwrap_or(0);
            best = best.max(ecc);
        }
        Ok(best)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.order()
    }

    /// Every vertex whose deletion leaves a tree.
    ///
    /// Trees report their witnesses too (any leaf qualifies), but they are not
    /// quasi-trees; see [`Graph::is_quasi_tree`].
    pub fn quasi_tree_witnesses(&self) -> Result<QuasiTreeWitness> {
        if !self.is_connected() {
            return Err(domain("quasi-tree witnesses require a connected graph"));
        }
        let n = self.order();
        let m = self.edge_count();
        let witnesses = (0..n)
            .filter(|&v| {
                // G - v has n - 1 vertices and m - d(v) edges; it is a tree iff
                // it is connected with exactly n - 2 edges.
                n >= 2 && m - self.deg(v) + 2 == n && self.without(v).is_connected()
            })
            .collect();
        Ok(QuasiTreeWitness { witnesses })
    }

    /// Connected, not a tree, and some vertex deletion leaves a tree.
    pub fn is_quasi_tree(&self) -> bool {
        self.is_connected()
            && !self.is_tree()
            && self
                .quasi_tree_witnesses()
                .map(|w| !w.is_empty())
                .unwrap_or(false)
    }

    /// Connected with exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.edge_count() == self.order()
    }

    /// `G - v`, with the remaining vertices renumbered in their original order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.without(v))
    }

    fn without(&self, v: usize) -> Graph {
        let low = (1u64 << v) - 1;
        let squeeze = |m: u64| (m & low) | ((m >> 1) & !low);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &m)| squeeze(m & !(1 << v)))
            .collect();
        Graph { adj }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(input("permutation length differs from graph order"));
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(input("not a permutation of the vertex set"));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Vertices `v` with `G - v` a tree, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuasiTreeWitness {
    witnesses: Vec<usize>,
}

impl QuasiTreeWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.witnesses
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use proptest::prelude::*;

    fn complete(n: usize) -> Graph {
        FamilySpec::Complete(n).build().unwrap()
    }
    fn path(n: usize) -> Graph {
        FamilySpec::Path(n).build().unwrap()
    }
    fn cycle(n: usize) -> Graph {
        FamilySpec::Cycle(n).build().unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(complete(3).degree(0).unwrap(), 2);
        assert_eq!(path(5).degree(0).unwrap(), 1);
        assert_eq!(path(5).degree(4).unwrap(), 1);
        assert!(matches!(path(5).degree(5), Err(crate::Error::Input(_))));
        let v11 = FamilySpec::V(1, 1).build().unwrap();
        // vertices 0 and 1 are the degree-3 hubs of K4^-
        assert_eq!(v11.degree(0).unwrap(), 3);
        assert_eq!(v11.degree(1).unwrap(), 3);
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(complete(3).is_connected());
        assert!(cycle(4).is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn distances_and_diameter() {
        let d = path(3).distance_matrix();
        assert_eq!(d[0][2], Some(2));
        assert_eq!(cycle(4).distance_matrix()[0][2], Some(2));
        // U(7): pendant is vertex 4 on cycle vertex 0, path 5-6 hangs off vertex 2.
        let u7 = FamilySpec::U(7).build().unwrap();
        assert_eq!(u7.distance_matrix()[4][6], Some(5));
        assert_eq!(complete(3).diameter().unwrap(), 1);
        assert_eq!(path(5).diameter().unwrap(), 4);
        assert_eq!(FamilySpec::V(1, 1).build().unwrap().diameter().unwrap(), 4);
        assert_eq!(Graph::empty(1).unwrap().diameter().unwrap(), 0);
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(two_edges.diameter(), Err(crate::Error::Domain(_))));
        assert_eq!(two_edges.distance_matrix()[0][3], None);
    }

    #[test]
    fn min_degrees() {
        assert_eq!(complete(4).min_degree(), Some(3));
        assert_eq!(FamilySpec::U(8).build().unwrap().min_degree(), Some(1));
        assert_eq!(cycle(6).min_degree(), Some(2));
    }

    #[test]
    fn trees() {
        assert!(path(5).is_tree());
        assert!(!cycle(4).is_tree());
        assert!(FamilySpec::Star(5).build().unwrap().is_tree());
    }

    #[test]
    fn quasi_tree_classification() {
        let k4 = complete(4);
        assert!(k4.quasi_tree_witnesses().unwrap().is_empty());
        assert!(!k4.is_quasi_tree());
        assert_eq!(
            cycle(5).quasi_tree_witnesses().unwrap().vertices(),
            &[0, 1, 2, 3, 4]
        );
        assert!(cycle(5).is_quasi_tree());
        let p5 = path(5);
        assert!(!p5.quasi_tree_witnesses().unwrap().is_empty());
        assert!(!p5.is_quasi_tree());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two_edges.quasi_tree_witnesses().is_err());
    }

    #[test]
    fn vertex_deletion() {
        assert_eq!(complete(3).delete_vertex(1).unwrap(), complete(2));
        assert_eq!(
            cycle(4).delete_vertex(0).unwrap().degree_sequence(),
            vec![1, 1, 2]
        );
        assert!(cycle(4).delete_vertex(2).unwrap().is_tree());
        let v11 = FamilySpec::V(1, 1).build().unwrap();
        let t = v11.delete_vertex(0).unwrap();
        assert_eq!(t.order(), 5);
        assert!(t.is_tree());
        assert!(cycle(4).delete_vertex(4).is_err());
        // order-preserving renumbering
        let g = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let h = g.delete_vertex(1).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.insert_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    fn well_formed(g: &Graph) -> bool {
        let n = g.order();
        let degree_sum: usize = (0..n).map(|v| g.neighbors(v).count()).sum();
        (0..n).all(|v| {
            let nb: Vec<usize> = g.neighbors(v).collect();
            !nb.contains(&v)
                && nb.windows(2).all(|w| w[0] < w[1])
                && nb.iter().all(|&u| u < n && g.has_edge(u, v))
        }) && degree_sum == 2 * g.edge_count()
    }

    proptest! {
        #[test]
        fn deletion_preserves_invariants(g in arb_graph(8), pick in any::<usize>()) {
            let v = pick % g.order();
            let h = g.delete_vertex(v).unwrap();
            prop_assert!(well_formed(&h));
            prop_assert_eq!(h.order(), g.order() - 1);
            prop_assert_eq!(h.edge_count(), g.edge_count() - g.degree(v).unwrap());
            for (a, b) in h.edges() {
                let lift = |x: usize| if x >= v { x + 1 } else { x };
                prop_assert!(g.has_edge(lift(a), lift(b)));
            }
        }

        #[test]
        fn witnesses_leave_trees(g in arb_graph(8)) {
            if g.is_quasi_tree() {
                for &w in g.quasi_tree_witnesses().unwrap().vertices() {
                    prop_assert!(g.delete_vertex(w).unwrap().is_tree());
                    prop_assert!(g.edge_count() <= g.order() - 2 + g.degree(w).unwrap());
                }
            }
        }

        #[test]
        fn bfs_matrix_is_symmetric(g in arb_graph(8)) {
            let d = g.distance_matrix();
            for (u, row) in d.iter().enumerate() {
                prop_assert_eq!(row[u], Some(0));
                for (v, duv) in row.iter().enumerate() {
                    prop_assert_eq!(*duv, d[v][u]);
                }
            }
        }
    }
}
