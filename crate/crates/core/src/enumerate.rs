//! Isomorphism-free generation of small graphs.
//!
//! Canonical forms come from an individualisation-refinement search: the
//! vertex partition is refined to an equitable one (starting from degrees),
//! a vertex of the first non-trivial cell is individualised, and so on down to
//! discrete partitions. Each leaf gives a labelling; the canonical form is the
//! largest upper-triangle bitstring over all leaves. Branches whose fixed
//! prefix already compares below the best leaf are cut, and of two twin
//! vertices (same neighbourhood apart from each other) only one is tried.
//!
//! Classes are grown one vertex at a time, keeping one representative per
//! canonical form:
//!
//! * trees: add a leaf to every tree on `n − 1` vertices;
//! * connected graphs: join a new vertex to a nonempty subset of a connected
//!   graph on `n − 1` vertices (every connected graph has a non-cut vertex);
//! * quasi-trees: grow the class of connected graphs having a vertex whose
//!   deletion leaves a tree. That class is closed under deleting a suitable
//!   leaf of the remaining tree, so one-vertex extensions followed by the
//!   membership test reach all of it; the quasi-trees are its non-trees;
//! * unicyclic graphs: add one edge to a tree.
//!
//! [`quasi_trees_via_trees`] is a second, independent route to the
//! quasi-trees: join a new vertex `w` to at least two vertices of every tree
//! on `n − 1` vertices.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{capacity, input, Error, Result};
use crate::graph::{bits, Graph};

/// Hard cap for canonical labelling.
pub const CANONICAL_CAP: usize = 12;

/// The canonical upper-triangle adjacency string of a graph.
///
/// Bits run column by column, `(0,1), (0,2), (1,2), (0,3), …`, most
/// significant first, exactly as in graph6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Upper-triangle bits, right-aligned: the lowest `n(n−1)/2` bits are used.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The graph in canonical labelling.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = n * n.saturating_sub(1) / 2;
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_masks(adj)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::formats::encode_graph6(&self.to_graph()).expect("n <= 12"))
    }
}

/// Canonical form; isomorphic graphs, and only those, get equal forms.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    capacity("canonical labelling order", g.order(), CANONICAL_CAP)?;
    Ok(canon(g))
}

fn canon(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let mut adj = [0u16; CANONICAL_CAP];
    for (v, &m) in g.masks().iter().enumerate() {
        adj[v] = m as u16;
    }
    if n <= 1 {
        return CanonicalForm {
            n: n as u8,
            bits: 0,
        };
    }
    let mut search = Search {
        n,
        adj,
        total: n * (n - 1) / 2,
        best: None,
    };
    let mut cells = Cells::new();
    cells.push(((1u32 << n) - 1) as u16);
    search.refine(&mut cells);
    search.descend(&cells);
    CanonicalForm {
        n: n as u8,
        bits: search.best.expect("at least one leaf"),
    }
}

/// Ordered partition of the vertex set, one bitmask per cell.
type Cells = Vec<u16>;

struct Search {
    n: usize,
    adj: [u16; CANONICAL_CAP],
    total: usize,
    best: Option<u128>,
}

impl Search {
    /// Splits cells by their neighbour counts into every cell until stable.
    fn refine(&self, cells: &mut Cells) {
        let mut changed = true;
        while changed {
            changed = false;
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() > 1 {
                    let mut sigs: Vec<(u64, u16)> = bits(cell as u64)
                        .map(|v| {
                            let sig = cells.iter().fold(0u64, |acc, &c| {
                                (acc << 4) | (self.adj[v] & c).count_ones() as u64
                            });
                            (sig, 1u16 << v)
                        })
                        .collect();
                    sigs.sort_unstable();
                    if sigs.first().map(|s| s.0) != sigs.last().map(|s| s.0) {
                        let mut groups: Vec<u16> = Vec::new();
                        let mut last = None;
                        for (sig, bit) in sigs {
                            if last == Some(sig) {
                                *groups.last_mut().unwrap() |= bit;
                            } else {
                                groups.push(bit);
                                last = Some(sig);
                            }
                        }
                        let k = groups.len();
                        cells.splice(i..=i, groups);
                        i += k;
                        changed = true;
                        continue;
                    }
                }
                i += 1;
            }
        }
    }

    /// Bits for the first `k` positions of a labelling.
    fn prefix(&self, order: &[usize], k: usize) -> u128 {
        let mut out = 0u128;
        for j in 1..k {
            let col = self.adj[order[j]];
            for &vi in &order[..j] {
                out = (out << 1) | (col >> vi & 1) as u128;
            }
        }
        out
    }

    fn descend(&mut self, cells: &Cells) {
        let fixed: Vec<usize> = cells
            .iter()
            .take_while(|c| c.count_ones() == 1)
            .map(|c| c.trailing_zeros() as usize)
            .collect();
        let k = fixed.len();
        if let Some(best) = self.best {
            let width = k * k.saturating_sub(1) / 2;
            let here = self.prefix(&fixed, k);
            if here < best >> (self.total - width) {
                return;
            }
        }
        if k == self.n {
            let bits = self.prefix(&fixed, k);
            if self.best.is_none_or(|b| bits > b) {
                self.best = Some(bits);
            }
            return;
        }
        let target = k;
        let cell = cells[target];
        let mut tried: u16 = 0;
        for v in bits(cell as u64) {
            let twin = bits(tried as u64).any(|u| {
                let (bu, bv) = (1u16 << u, 1u16 << v);
                self.adj[u] & !bv == self.adj[v] & !bu
            });
            if twin {
                continue;
            }
            tried |= 1 << v;
            let mut child = cells.clone();
            child[target] = cell & !(1 << v);
            child.insert(target, 1 << v);
            self.refine(&mut child);
            self.descend(&child);
        }
    }
}

/// Graph classes the enumerator can generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Connected,
    Tree,
    Unicyclic,
    QuasiTree,
}

impl GraphClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::Connected => g.is_connected(),
            GraphClass::Tree => g.is_tree(),
            GraphClass::Unicyclic => g.is_unicyclic(),
            GraphClass::QuasiTree => g.is_quasi_tree(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Connected => "connected",
            GraphClass::Tree => "tree",
            GraphClass::Unicyclic => "unicyclic",
            GraphClass::QuasiTree => "quasi-tree",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "connected" => Ok(GraphClass::Connected),
            "tree" | "trees" => Ok(GraphClass::Tree),
            "unicyclic" => Ok(GraphClass::Unicyclic),
            "quasi-tree" | "quasitree" | "quasi-trees" => Ok(GraphClass::QuasiTree),
            _ => Err(input(format!("unknown graph class {s:?}"))),
        }
    }
}

/// Largest orders the enumerator accepts. The defaults keep every sweep at
/// desk scale; raising them is allowed up to [`CANONICAL_CAP`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub connected: usize,
    pub quasi_tree: usize,
    pub tree: usize,
    pub unicyclic: usize,
    pub via_trees: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            connected: 9,
            quasi_tree: 9,
            tree: 11,
            unicyclic: 11,
            via_trees: 10,
        }
    }
}

impl Limits {
    fn cap(&self, cls: GraphClass) -> usize {
        match cls {
            GraphClass::Connected => self.connected,
            GraphClass::QuasiTree => self.quasi_tree,
            GraphClass::Tree => self.tree,
            GraphClass::Unicyclic => self.unicyclic,
        }
        .min(CANONICAL_CAP)
    }
}

/// Graphs of one class and order, one per isomorphism class, in ascending
/// canonical-form order.
#[derive(Clone, Debug)]
pub struct GraphStream {
    forms: std::vec::IntoIter<CanonicalForm>,
}

impl GraphStream {
    pub fn forms(&self) -> &[CanonicalForm] {
        self.forms.as_slice()
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.forms.next().map(|f| f.to_graph())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.forms.size_hint()
    }
}

impl ExactSizeIterator for GraphStream {}

pub fn enumerate_class(n: usize, cls: GraphClass) -> Result<GraphStream> {
    enumerate_class_with(n, cls, &Limits::default())
}

pub fn enumerate_class_with(n: usize, cls: GraphClass, limits: &Limits) -> Result<GraphStream> {
    Ok(GraphStream {
        forms: class_forms(n, cls, limits)?.into_iter(),
    })
}

/// Sorted canonical forms of every graph of class `cls` on `n` vertices.
pub fn class_forms(n: usize, cls: GraphClass, limits: &Limits) -> Result<Vec<CanonicalForm>> {
    capacity("enumeration order", n, limits.cap(cls))?;
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(match cls {
        GraphClass::Tree => trees(n),
        GraphClass::Connected => grow(single_vertex(), 1, n, all_subsets(1), |_| true),
        GraphClass::QuasiTree if n < 3 => Vec::new(),
        GraphClass::QuasiTree => {
            let k2 = vec![canon(&Graph::from_edges(2, &[(0, 1)]).expect("K2"))];
            let near = grow(k2, 2, n, all_subsets(1), has_tree_deletion);
            near.into_iter()
                .filter(|f| !f.to_graph().is_tree())
                .collect()
        }
        GraphClass::Unicyclic => unicyclic(n),
    })
}

/// Second generation route for quasi-trees: every tree on `n − 1` vertices
/// plus a vertex `w` joined to at least two of its vertices.
pub fn quasi_trees_via_trees(n: usize) -> Result<GraphStream> {
    quasi_trees_via_trees_with(n, &Limits::default())
}

pub fn quasi_trees_via_trees_with(n: usize, limits: &Limits) -> Result<GraphStream> {
    capacity("quasi-tree order", n, limits.via_trees.min(CANONICAL_CAP))?;
    if n < 3 {
        return Ok(GraphStream {
            forms: Vec::new().into_iter(),
        });
    }
    let parents = trees(n - 1);
    let forms = extend_all(&parents, all_subsets(2), |g| g.is_quasi_tree());
    Ok(GraphStream {
        forms: forms.into_iter(),
    })
}

fn single_vertex() -> Vec<CanonicalForm> {
    vec![CanonicalForm { n: 1, bits: 0 }]
}

fn trees(n: usize) -> Vec<CanonicalForm> {
    let leaves = |g: &Graph| (0..g.order()).map(|v| 1u64 << v).collect::<Vec<_>>();
    grow(single_vertex(), 1, n, leaves, |_| true)
}

fn unicyclic(n: usize) -> Vec<CanonicalForm> {
    if n < 3 {
        return Vec::new();
    }
    let mut forms: Vec<CanonicalForm> = trees(n)
        .par_iter()
        .flat_map_iter(|t| {
            let g = t.to_graph();
            let mut local = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.insert_edge(u, v);
                        local.push(canon(&h));
                    }
                }
            }
            local
        })
        .collect();
    forms.par_sort_unstable();
    forms.dedup();
    forms
}

/// Neighbourhood choices for the new vertex: every subset of the old vertices
/// with at least `min` members.
fn all_subsets(min: u32) -> impl Fn(&Graph) -> Vec<u64> + Sync {
    move |g: &Graph| {
        (1u64..(1u64 << g.order()))
            .filter(|s| s.count_ones() >= min)
            .collect()
    }
}

/// Some vertex deletion leaves a tree.
fn has_tree_deletion(g: &Graph) -> bool {
    let n = g.order();
    let m = g.edge_count();
    (0..n).any(|v| m + 2 == n + g.deg(v) && g.delete_vertex(v).is_ok_and(|h| h.is_connected()))
}

fn grow<C, K>(
    start: Vec<CanonicalForm>,
    from: usize,
    to: usize,
    choices: C,
    keep: K,
) -> Vec<CanonicalForm>
where
    C: Fn(&Graph) -> Vec<u64> + Sync,
    K: Fn(&Graph) -> bool + Sync,
{
    let mut level = start;
    for _ in from..to {
        level = extend_all(&level, &choices, &keep);
    }
    level
}

fn extend_all<C, K>(parents: &[CanonicalForm], choices: C, keep: K) -> Vec<CanonicalForm>
where
    C: Fn(&Graph) -> Vec<u64> + Sync,
    K: Fn(&Graph) -> bool + Sync,
{
    let mut forms: Vec<CanonicalForm> = parents
        .par_iter()
        .flat_map_iter(|p| {
            let g = p.to_graph();
            let mut local: Vec<CanonicalForm> = choices(&g)
                .into_iter()
                .map(|s| g.with_new_vertex(s))
                .filter(|h| keep(h))
                .map(|h| canon(&h))
                .collect();
            local.sort_unstable();
            local.dedup();
            local
        })
        .collect();
    forms.par_sort_unstable();
    forms.dedup();
    forms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Brute-force canonical form: the largest bitstring over all n! relabellings.
    fn brute_form(g: &Graph) -> (usize, u128) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = 0u128;
        permute(&mut perm, 0, &mut |p| {
            let mut b = 0u128;
            for j in 1..n {
                for i in 0..j {
                    b = (b << 1) | g.has_edge(p[i], p[j]) as u128;
                }
            }
            best = best.max(b);
        });
        (n, best)
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    /// All labelled graphs on n vertices satisfying `keep`, deduplicated by brute force.
    fn brute_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> BTreeSet<(usize, u128)> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if keep(&g) {
                out.insert(brute_form(&g));
            }
        }
        out
    }

    /// Brute-force forms of the emitted graphs; also checks no two emitted graphs are isomorphic.
    fn form_set(stream: GraphStream) -> BTreeSet<(usize, u128)> {
        let len = stream.len();
        let set: BTreeSet<_> = stream.map(|g| brute_form(&g)).collect();
        assert_eq!(set.len(), len, "duplicate isomorphism class emitted");
        set
    }

    #[test]
    fn relabelled_cycle_has_one_form() {
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        let want = canonical_form(&c4).unwrap();
        let mut perm: Vec<usize> = (0..4).collect();
        permute(&mut perm, 0, &mut |p| {
            assert_eq!(canonical_form(&c4.relabel(p).unwrap()).unwrap(), want);
        });
    }

    #[test]
    fn paw_labellings_collapse() {
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let mut perm: Vec<usize> = (0..4).collect();
        let mut forms = BTreeSet::new();
        permute(&mut perm, 0, &mut |p| {
            forms.insert(canonical_form(&paw.relabel(p).unwrap()).unwrap());
        });
        assert_eq!(forms.len(), 1);
        let f = forms.into_iter().next().unwrap();
        assert_eq!(brute_form(&f.to_graph()), brute_form(&paw));
    }

    #[test]
    fn distinguishes_path_and_claw() {
        let p4 = canonical_form(&FamilySpec::Path(4).build().unwrap()).unwrap();
        let k13 = canonical_form(&FamilySpec::Star(4).build().unwrap()).unwrap();
        assert_ne!(p4, k13);
    }

    #[test]
    fn capacity_is_enforced() {
        let big = FamilySpec::Path(13).build().unwrap();
        assert!(matches!(canonical_form(&big), Err(Error::Capacity { .. })));
        assert!(enumerate_class(10, GraphClass::QuasiTree).is_err());
        assert!(enumerate_class(12, GraphClass::Tree).is_err());
        assert!(quasi_trees_via_trees(11).is_err());
    }

    #[test]
    fn symmetric_graphs_canonicalise() {
        // Large automorphism groups exercise the twin cut.
        for spec in [
            FamilySpec::Complete(12),
            FamilySpec::Star(12),
            FamilySpec::Cycle(12),
        ] {
            let g = spec.build().unwrap();
            let f = canonical_form(&g).unwrap();
            assert_eq!(f.to_graph().degree_sequence(), g.degree_sequence());
            let rev: Vec<usize> = (0..12).rev().collect();
            assert_eq!(canonical_form(&g.relabel(&rev).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn small_quasi_tree_catalogues() {
        let qt4: Vec<Graph> = enumerate_class(4, GraphClass::QuasiTree).unwrap().collect();
        assert_eq!(qt4.len(), 3);
        let mut degs: Vec<Vec<usize>> = qt4.iter().map(|g| g.degree_sequence()).collect();
        degs.sort();
        // C4, paw, K4-
        assert_eq!(
            degs,
            vec![vec![1, 2, 2, 3], vec![2, 2, 2, 2], vec![2, 2, 3, 3]]
        );

        let qt3: Vec<Graph> = enumerate_class(3, GraphClass::QuasiTree).unwrap().collect();
        assert_eq!(qt3, vec![FamilySpec::Complete(3).build().unwrap()]);
        assert_eq!(enumerate_class(2, GraphClass::QuasiTree).unwrap().len(), 0);

        let t5: Vec<Graph> = enumerate_class(5, GraphClass::Tree).unwrap().collect();
        assert_eq!(t5.len(), 3);
        for spec in [
            FamilySpec::Path(5),
            FamilySpec::Star(5),
            FamilySpec::K13Plus,
        ] {
            let f = canonical_form(&spec.build().unwrap()).unwrap();
            assert!(t5.iter().any(|t| canonical_form(t).unwrap() == f));
        }
    }

    #[test]
    fn enumeration_matches_labelled_brute_force() {
        for n in 1..=6 {
            assert_eq!(
                form_set(enumerate_class(n, GraphClass::Connected).unwrap()),
                brute_classes(n, |g| g.is_connected()),
                "connected n={n}"
            );
            assert_eq!(
                form_set(enumerate_class(n, GraphClass::QuasiTree).unwrap()),
                brute_classes(n, |g| g.is_quasi_tree()),
                "quasi-tree n={n}"
            );
            assert_eq!(
                form_set(enumerate_class(n, GraphClass::Tree).unwrap()),
                brute_classes(n, |g| g.is_tree()),
                "tree n={n}"
            );
            assert_eq!(
                form_set(enumerate_class(n, GraphClass::Unicyclic).unwrap()),
                brute_classes(n, |g| g.is_unicyclic()),
                "unicyclic n={n}"
            );
        }
    }

    #[test]
    fn tree_counts() {
        let known = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235];
        for (i, &count) in known.iter().enumerate() {
            assert_eq!(
                enumerate_class(i + 1, GraphClass::Tree).unwrap().len(),
                count
            );
        }
    }

    #[test]
    fn connected_counts() {
        // connected unlabelled graphs, n = 1..7
        let known = [1, 1, 2, 6, 21, 112, 853];
        for (i, &count) in known.iter().enumerate() {
            assert_eq!(
                enumerate_class(i + 1, GraphClass::Connected).unwrap().len(),
                count
            );
        }
    }

    #[test]
    fn two_quasi_tree_routes_agree() {
        for n in 1..=7 {
            let a = enumerate_class(n, GraphClass::QuasiTree).unwrap();
            let b = quasi_trees_via_trees(n).unwrap();
            assert_eq!(a.forms(), b.forms(), "n={n}");
        }
    }

    /// Vertices left after repeatedly stripping degree-1 vertices: the cycle of a unicyclic graph.
    fn core_vertices(g: &Graph) -> Vec<usize> {
        let mut alive: Vec<bool> = vec![true; g.order()];
        loop {
            let leaf = (0..g.order())
                .find(|&v| alive[v] && g.neighbors(v).filter(|&u| alive[u]).count() <= 1);
            match leaf {
                Some(v) => alive[v] = false,
                None => break,
            }
        }
        (0..g.order()).filter(|&v| alive[v]).collect()
    }

    #[test]
    fn class_inclusions() {
        for n in 3..=8 {
            let qt: BTreeSet<_> = class_forms(n, GraphClass::QuasiTree, &Limits::default())
                .unwrap()
                .into_iter()
                .collect();
            // A unicyclic graph is a quasi-tree exactly when one of its cycle
            // vertices has degree 2; the witnesses are those vertices.
            for f in class_forms(n, GraphClass::Unicyclic, &Limits::default()).unwrap() {
                let g = f.to_graph();
                let cycle = core_vertices(&g);
                let bare: Vec<usize> = cycle.iter().copied().filter(|&v| g.deg(v) == 2).collect();
                assert_eq!(qt.contains(&f), !bare.is_empty(), "n={n} {g:?}");
                assert_eq!(
                    g.quasi_tree_witnesses().unwrap().vertices(),
                    bare.as_slice()
                );
            }
            for g in enumerate_class(n, GraphClass::QuasiTree).unwrap() {
                assert!(g.edge_count() >= n);
                assert!(!g.quasi_tree_witnesses().unwrap().is_empty());
            }
        }
    }

    #[test]
    fn unicyclic_graphs_outside_the_quasi_trees() {
        // K3 with a pendant on every vertex: unicyclic, but every deletion
        // leaves a cycle or isolates a pendant.
        let net = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(net.is_unicyclic());
        assert!(!net.is_quasi_tree());
        let outside = |n| {
            let qt: BTreeSet<_> = class_forms(n, GraphClass::QuasiTree, &Limits::default())
                .unwrap()
                .into_iter()
                .collect();
            class_forms(n, GraphClass::Unicyclic, &Limits::default())
                .unwrap()
                .into_iter()
                .filter(|f| !qt.contains(f))
                .collect::<Vec<_>>()
        };
        assert!(outside(5).is_empty());
        assert_eq!(outside(6), vec![canonical_form(&net).unwrap()]);
        assert_eq!(outside(7).len(), 2);
    }

    #[test]
    fn deterministic_streams() {
        let a: Vec<_> = enumerate_class(7, GraphClass::QuasiTree)
            .unwrap()
            .forms()
            .to_vec();
        let b: Vec<_> = enumerate_class(7, GraphClass::QuasiTree)
            .unwrap()
            .forms()
            .to_vec();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn class_names_parse() {
        assert_eq!(
            "quasi-tree".parse::<GraphClass>().unwrap(),
            GraphClass::QuasiTree
        );
        assert_eq!(
            "Connected".parse::<GraphClass>().unwrap(),
            GraphClass::Connected
        );
        assert!("forest".parse::<GraphClass>().is_err());
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

    proptest! {
        #[test]
        fn invariant_under_relabelling(g in arb_graph(10), seed in any::<u64>()) {
            let n = g.order();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm).unwrap();
            let f = canonical_form(&g).unwrap();
            prop_assert_eq!(f, canonical_form(&h).unwrap());
            // the canonical graph is itself isomorphic to g
            prop_assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
        }

        /// Equal forms exactly when the brute-force forms (max over all n! labellings) are equal.
        #[test]
        fn separates_exactly_the_isomorphism_classes(g in arb_graph(7), h in arb_graph(7)) {
            let same = canonical_form(&g).unwrap() == canonical_form(&h).unwrap();
            prop_assert_eq!(same, brute_form(&g) == brute_form(&h));
        }
    }
}
