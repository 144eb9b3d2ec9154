//! Cycle decompositions, cycle porosity, cycle-width by brute force, the
//! hitting sets `Y_e` of the induced cuts, and the cops and robber game.
//!
//! Strong components of bidirected graphs use a stand-in definition: two
//! vertices are strongly connected when a chain of sign-switching cycles,
//! consecutive ones sharing a vertex, joins them. On directed graphs (through
//! their bidirected image) this is exactly strong connectivity. It is not the
//! definition the bidirected tree-width literature uses, so bidirected game
//! results say nothing about bidirected tree-width.

pub mod game;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::cycles::enumerate_cycles;
use crate::duality::{
    bidirected_vertex_duality, directed_vertex_duality, packing_lp, DualityReport, ElementKind,
    EngineOptions, Verification,
};
use crate::error::{Error, Result};
use crate::graph::{
    directed_to_bidirected, BidirectedGraph, CycleGraph, DirectedGraph, EdgeCut, SignedCycle,
    VertexSplit,
};
use crate::lp::{self, LpStatus};
use crate::oracles::{self, EnumerationBudget, Target};
use crate::rational::Rational;

/// A cubic tree whose leaves are the graph's vertices.
///
/// Tree nodes `0..n` are the leaves, node `v` standing for vertex `v`; nodes
/// from `n` on are internal. One vertex gives a single leaf and two give a
/// single edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    leaves: usize,
    nodes: usize,
    edges: Vec<[usize; 2]>,
    adjacency: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Checks that `edges` form a tree on `0..nodes` whose nodes below
    /// `leaves` are leaves and whose other nodes have degree 3.
    pub fn new(leaves: usize, edges: Vec<[usize; 2]>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidArgument(alloc::format!("not a cycle decomposition: {msg}")));
        let nodes = edges.iter().flatten().map(|&x| x + 1).max().unwrap_or(leaves).max(leaves);
        if leaves == 0 {
            return if edges.is_empty() { Ok(Self::assemble(0, 0, edges)) } else { bad("edges without leaves") };
        }
        if edges.len() + 1 != nodes {
            return bad("wrong number of edges for a tree");
        }
        let dec = Self::assemble(leaves, nodes, edges);
        for x in 0..nodes {
            let deg = dec.adjacency[x].len();
            let ok = if x < leaves { deg == 1 || leaves == 1 } else { deg == 3 };
            if !ok {
                return bad("degree condition fails");
            }
        }
        if dec.edges.iter().any(|[a, b]| a == b) {
            return bad("loop");
        }
        // Connected: the side of any edge plus the other side is everything.
        let mut seen = BitSet::from_indices([0]);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &e in &dec.adjacency[x] {
                let [a, b] = dec.edges[e];
                let y = if a == x { b } else { a };
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        if seen.len() != nodes {
            return bad("disconnected");
        }
        Ok(dec)
    }

    fn assemble(leaves: usize, nodes: usize, edges: Vec<[usize; 2]>) -> Self {
        let mut adjacency = vec![Vec::new(); nodes];
        for (i, &[a, b]) in edges.iter().enumerate() {
            adjacency[a].push(i);
            adjacency[b].push(i);
        }
        Self {
            leaves,
            nodes,
            edges,
            adjacency,
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn tree_edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// Tree edges at `node`.
    pub fn incident(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        node < self.leaves
    }

    /// Parent of every node when the tree hangs from node 0 (`None` for the
    /// root).
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.nodes];
        if self.nodes == 0 {
            return parent;
        }
        let mut seen = BitSet::from_indices([0]);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &e in &self.adjacency[x] {
                let y = self.other(e, x);
                if seen.insert(y) {
                    parent[y] = Some(x);
                    stack.push(y);
                }
            }
        }
        parent
    }

    pub fn other(&self, edge: usize, node: usize) -> usize {
        let [a, b] = self.edges[edge];
        if a == node {
            b
        } else {
            a
        }
    }

    /// Graph vertices at the leaves of the component of `T - edge` that
    /// contains `toward`.
    pub fn side(&self, edge: usize, toward: usize) -> BitSet {
        let mut out = BitSet::new();
        let mut seen = BitSet::from_indices([toward]);
        let mut stack = vec![toward];
        while let Some(x) = stack.pop() {
            if x < self.leaves {
                out.insert(x);
            }
            for &e in &self.adjacency[x] {
                if e == edge {
                    continue;
                }
                let y = self.other(e, x);
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        out
    }

    /// The endpoint of `edge` whose side becomes side A of the induced cut:
    /// a leaf end if there is one, otherwise the first end.
    pub fn side_a_end(&self, edge: usize) -> usize {
        let [a, b] = self.edges[edge];
        if !self.is_leaf(a) && self.is_leaf(b) {
            b
        } else {
            a
        }
    }

    /// Every leaf-labelled cubic tree on `n` leaves; `(2n-5)!!` of them for
    /// `n >= 3`. Leaf `i` is inserted by subdividing each existing edge in
    /// turn.
    pub fn all(n: usize) -> Vec<CycleDecomposition> {
        match n {
            0 => return vec![Self::assemble(0, 0, Vec::new())],
            1 => return vec![Self::assemble(1, 1, Vec::new())],
            2 => return vec![Self::assemble(2, 2, vec![[0, 1]])],
            _ => {}
        }
        let mut out = Vec::new();
        let start = vec![[0, n], [1, n], [2, n]];
        grow(n, 3, n + 1, start, &mut out);
        out
    }
}

fn grow(n: usize, next_leaf: usize, next_node: usize, edges: Vec<[usize; 2]>, out: &mut Vec<CycleDecomposition>) {
    if next_leaf == n {
        out.push(CycleDecomposition::assemble(n, next_node, edges));
        return;
    }
    for i in 0..edges.len() {
        let [a, b] = edges[i];
        let x = next_node;
        let mut e = edges.clone();
        e[i] = [a, x];
        e.push([x, b]);
        e.push([next_leaf, x]);
        grow(n, next_leaf + 1, next_node + 1, e, out);
    }
}

/// The cut of `graph` induced by a tree edge.
pub fn induced_cut<G: CycleGraph + ?Sized>(graph: &G, dec: &CycleDecomposition, tree_edge: usize) -> EdgeCut {
    EdgeCut::from_side(graph, dec.side(tree_edge, dec.side_a_end(tree_edge)))
}

/// Directed and bidirected graphs, the two kinds the width notions are
/// defined for.
pub trait WidthGraph: CycleGraph {
    /// The bidirected graph whose vertex split turns vertex-disjoint cycles
    /// into edge-disjoint ones.
    fn bidirected_image(&self) -> BidirectedGraph;

    /// Subdivides `edges` and runs the vertex engine with the subdivision
    /// vertices as `S`. Returns the report and `(edge, subdivision vertex)`.
    fn subdivided_vertex_duality(
        &self,
        edges: &[usize],
        opts: &EngineOptions,
    ) -> Result<(DualityReport, Vec<(usize, usize)>)>;

    /// Strong components of the graph minus `removed`, ordered by smallest
    /// vertex. `cycles` must be all cycles of the graph when
    /// [`WidthGraph::components_need_cycles`] holds.
    fn components_avoiding(&self, removed: &BitSet, cycles: &[SignedCycle]) -> Vec<BitSet>;

    fn components_need_cycles(&self) -> bool;
}

impl WidthGraph for DirectedGraph {
    fn bidirected_image(&self) -> BidirectedGraph {
        directed_to_bidirected(self)
    }

    fn subdivided_vertex_duality(
        &self,
        edges: &[usize],
        opts: &EngineOptions,
    ) -> Result<(DualityReport, Vec<(usize, usize)>)> {
        let sub = self.subdivide_edges(edges);
        let s: BitSet = sub.subdivision_vertices().into_iter().collect();
        Ok((directed_vertex_duality(&sub.graph, &s, opts)?, sub.subdivided))
    }

    fn components_avoiding(&self, removed: &BitSet, _cycles: &[SignedCycle]) -> Vec<BitSet> {
        let n = self.vertex_count();
        let reach = |from: usize, forward: bool| {
            let mut seen = BitSet::from_indices([from]);
            let mut stack = vec![from];
            while let Some(v) = stack.pop() {
                for &e in self.incident(v) {
                    let (t, h) = (self.tail(e), self.head(e));
                    let (x, y) = if forward { (t, h) } else { (h, t) };
                    if x == v && !removed.contains(y) && seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            seen
        };
        let mut assigned = removed.clone();
        let mut out = Vec::new();
        for v in 0..n {
            if assigned.contains(v) {
                continue;
            }
            let mut comp = reach(v, true);
            comp.intersect_with(&reach(v, false));
            assigned.union_with(&comp);
            out.push(comp);
        }
        out
    }

    fn components_need_cycles(&self) -> bool {
        false
    }
}

impl WidthGraph for BidirectedGraph {
    fn bidirected_image(&self) -> BidirectedGraph {
        self.clone()
    }

    fn subdivided_vertex_duality(
        &self,
        edges: &[usize],
        opts: &EngineOptions,
    ) -> Result<(DualityReport, Vec<(usize, usize)>)> {
        let sub = self.subdivide_edges(edges);
        let s: BitSet = sub.subdivision_vertices().into_iter().collect();
        Ok((bidirected_vertex_duality(&sub.graph, &s, opts)?, sub.subdivided))
    }

    fn components_avoiding(&self, removed: &BitSet, cycles: &[SignedCycle]) -> Vec<BitSet> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for c in cycles {
            if c.vertices().iter().any(|&v| removed.contains(v)) {
                continue;
            }
            let r0 = find(&mut parent, c.vertices()[0]);
            for &v in &c.vertices()[1..] {
                let r = find(&mut parent, v);
                parent[r] = r0;
            }
        }
        let mut groups: BTreeMap<usize, BitSet> = BTreeMap::new();
        let mut order = Vec::new();
        for v in (0..n).filter(|&v| !removed.contains(v)) {
            let r = find(&mut parent, v);
            if !groups.contains_key(&r) {
                order.push(r);
            }
            groups.entry(r).or_default().insert(v);
        }
        order.into_iter().map(|r| groups.remove(&r).unwrap()).collect()
    }

    fn components_need_cycles(&self) -> bool {
        true
    }
}

/// Strong components of `graph - removed`.
pub fn strong_components<G: WidthGraph + ?Sized>(
    graph: &G,
    removed: &BitSet,
    budget: &EnumerationBudget,
) -> Result<Vec<BitSet>> {
    let cycles = if graph.components_need_cycles() {
        enumerate_cycles(graph, budget.max_cycles)?
    } else {
        Vec::new()
    };
    Ok(graph.components_avoiding(removed, &cycles))
}

/// Cycle porosity of a cut, computed twice.
///
/// For bidirected graphs the LP on the vertex split can have fractional
/// vertices and its optimum can exceed the porosity; `value` then comes
/// from the brute-force side and [`Porosity::verified`] is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Porosity {
    pub value: usize,
    /// Brute-force value; `None` when over budget.
    pub oracle: Option<usize>,
    /// Optimum of the edge-disjoint packing LP on the vertex split.
    pub lp: Rational,
}

impl Porosity {
    /// Both routes ran and agree.
    pub fn verified(&self) -> bool {
        self.oracle.is_some_and(|o| Rational::from_integer(o as i64) == self.lp)
    }

    /// The LP optimum lies strictly above the brute-force value.
    pub fn relaxation_gap(&self) -> bool {
        self.oracle.is_some_and(|o| Rational::from_integer(o as i64) < self.lp)
    }
}

/// Shared state for the width computations on one graph: the cycle list and
/// the porosity of every cut seen so far, keyed by its edge set.
pub struct WidthContext<'g, G: ?Sized> {
    graph: &'g G,
    cycles: Option<Vec<SignedCycle>>,
    split: VertexSplit,
    opts: EngineOptions,
    cache: BTreeMap<BitSet, Porosity>,
}

impl<'g, G: WidthGraph + ?Sized> WidthContext<'g, G> {
    pub fn new(graph: &'g G, opts: &EngineOptions) -> Result<Self> {
        let cycles = match enumerate_cycles(graph, opts.budget.max_cycles) {
            Ok(c) => Some(c),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            graph,
            cycles,
            split: VertexSplit::new(&graph.bidirected_image()),
            opts: *opts,
            cache: BTreeMap::new(),
        })
    }

    pub fn graph(&self) -> &'g G {
        self.graph
    }

    /// All cycles, if they fit the budget.
    pub fn cycles(&self) -> Option<&[SignedCycle]> {
        self.cycles.as_deref()
    }

    pub fn porosity(&mut self, cut: &EdgeCut) -> Result<Porosity> {
        let key = cut.edge_set();
        if let Some(p) = self.cache.get(&key) {
            return Ok(p.clone());
        }
        let f: BitSet = key.iter().map(|e| self.split.edge_map[e]).collect();
        let sol = lp::solve(&packing_lp(self.split.graph.incidence_matrix(), &f, true));
        if sol.status != LpStatus::Optimal {
            return Err(Error::LpStatus(sol.status.as_str()));
        }
        let lp = sol.objective;
        let oracle = match &self.cycles {
            None => None,
            Some(cs) => match oracles::max_packing_among(
                cs,
                &Target::Edges(key.clone()),
                ElementKind::Vertex,
                self.opts.budget.max_subsets,
            ) {
                Ok(p) => Some(p.score),
                Err(Error::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e),
            },
        };
        let value = match oracle {
            // The LP is a relaxation, so it can only be larger.
            Some(o) if Rational::from_integer(o as i64) > lp => {
                return Err(Error::Certificate(alloc::format!("porosity: brute force {o} above LP {lp}")))
            }
            Some(o) => o,
            None => lp
                .to_i64()
                .filter(|_| lp.is_integer())
                .ok_or_else(|| Error::Integrality(alloc::format!("porosity LP optimum {lp}, brute force over budget")))?
                as usize,
        };
        let p = Porosity { value, oracle, lp };
        self.cache.insert(key, p.clone());
        Ok(p)
    }

    pub fn decomposition_width(&mut self, dec: &CycleDecomposition) -> Result<usize> {
        self.width_below(dec, usize::MAX)
    }

    /// Width of `dec`, or any value `>= limit` once it is clear the width
    /// reaches `limit`.
    fn width_below(&mut self, dec: &CycleDecomposition, limit: usize) -> Result<usize> {
        check_leaves(self.graph, dec)?;
        let mut w = 0;
        for e in 0..dec.tree_edges().len() {
            let cut = induced_cut(self.graph, dec, e);
            w = w.max(self.porosity(&cut)?.value);
            if w >= limit {
                break;
            }
        }
        Ok(w)
    }

    /// Minimum width over all cubic trees; the first optimal tree in
    /// enumeration order is the witness.
    pub fn cycle_width(&mut self, n_cap: usize) -> Result<(usize, CycleDecomposition)> {
        let n = self.graph.vertex_count();
        if n > n_cap {
            return Err(Error::BudgetExceeded {
                what: "cubic-tree vertex",
                limit: n_cap,
            });
        }
        let mut best: Option<(usize, CycleDecomposition)> = None;
        for dec in CycleDecomposition::all(n) {
            let limit = best.as_ref().map_or(usize::MAX, |b| b.0);
            let w = self.width_below(&dec, limit)?;
            if w < limit {
                let done = w == 0;
                best = Some((w, dec));
                if done {
                    break;
                }
            }
        }
        Ok(best.expect("at least one tree"))
    }

    /// `Y_e` for every tree edge.
    pub fn hitting_sets_ye(&mut self, dec: &CycleDecomposition) -> Result<Vec<YSet>> {
        check_leaves(self.graph, dec)?;
        let inner = EngineOptions {
            verify: Verification::Off,
            ..self.opts
        };
        let mut out = Vec::with_capacity(dec.tree_edges().len());
        for e in 0..dec.tree_edges().len() {
            let cut = induced_cut(self.graph, dec, e);
            let (report, subdivided) = self.graph.subdivided_vertex_duality(&cut.edges, &inner)?;
            let n = self.graph.vertex_count();
            let set: BitSet = report
                .hitting
                .elements
                .iter()
                .map(|x| {
                    if x < n {
                        return x;
                    }
                    let (edge, _) = subdivided.iter().find(|&&(_, s)| s == x).expect("subdivision vertex");
                    let [u, w] = self.graph.ends(*edge);
                    if cut.side_a.contains(u) {
                        u
                    } else {
                        w
                    }
                })
                .collect();
            let porosity = self.porosity(&cut)?.value;
            if report.packing.score != porosity || set.len() > porosity {
                return Err(Error::Certificate(alloc::format!(
                    "Y for tree edge {e}: {} vertices, packing {}, porosity {porosity}",
                    set.len(),
                    report.packing.score
                )));
            }
            let verified = match (&self.cycles, self.opts.verify) {
                (_, Verification::Off) | (None, _) => None,
                (Some(cs), _) => Some(oracles::hits_all_among(
                    cs,
                    &set,
                    &Target::Edges(cut.edge_set()),
                    ElementKind::Vertex,
                )),
            };
            if verified == Some(false) {
                return Err(Error::Certificate(alloc::format!(
                    "Y for tree edge {e} misses a cycle through the cut"
                )));
            }
            out.push(YSet {
                tree_edge: e,
                cut,
                set,
                porosity,
                verified,
            });
        }
        Ok(out)
    }
}

fn check_leaves<G: CycleGraph + ?Sized>(graph: &G, dec: &CycleDecomposition) -> Result<()> {
    if dec.leaf_count() != graph.vertex_count() {
        return Err(Error::InvalidArgument(alloc::format!(
            "decomposition has {} leaves for {} vertices",
            dec.leaf_count(),
            graph.vertex_count()
        )));
    }
    Ok(())
}

/// The hitting set of one induced cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YSet {
    pub tree_edge: usize,
    pub cut: EdgeCut,
    pub set: BitSet,
    pub porosity: usize,
    /// Whether `set` meets every cycle through the cut; `None` if unchecked.
    pub verified: Option<bool>,
}

pub fn cycle_porosity<G: WidthGraph + ?Sized>(graph: &G, cut: &EdgeCut, opts: &EngineOptions) -> Result<Porosity> {
    WidthContext::new(graph, opts)?.porosity(cut)
}

pub fn decomposition_width<G: WidthGraph + ?Sized>(
    graph: &G,
    dec: &CycleDecomposition,
    opts: &EngineOptions,
) -> Result<usize> {
    WidthContext::new(graph, opts)?.decomposition_width(dec)
}

pub fn cycle_width_bruteforce<G: WidthGraph + ?Sized>(
    graph: &G,
    n_cap: usize,
    opts: &EngineOptions,
) -> Result<(usize, CycleDecomposition)> {
    WidthContext::new(graph, opts)?.cycle_width(n_cap)
}

pub fn hitting_sets_ye<G: WidthGraph + ?Sized>(
    graph: &G,
    dec: &CycleDecomposition,
    opts: &EngineOptions,
) -> Result<Vec<YSet>> {
    WidthContext::new(graph, opts)?.hitting_sets_ye(dec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::UndirectedGraph;

    fn opts() -> EngineOptions {
        EngineOptions::default()
    }

    fn double_factorial(mut k: usize) -> usize {
        let mut r = 1;
        while k > 1 {
            r *= k;
            k -= 2;
        }
        r
    }

    #[test]
    fn cubic_tree_counts_and_shape() {
        for n in 3..=7 {
            let all = CycleDecomposition::all(n);
            assert_eq!(all.len(), double_factorial(2 * n - 5));
            for d in &all {
                let again = CycleDecomposition::new(n, d.tree_edges().to_vec()).unwrap();
                assert_eq!(&again, d);
                assert_eq!(d.tree_edges().len(), 2 * n - 3);
            }
        }
        assert_eq!(CycleDecomposition::all(1)[0].tree_edges().len(), 0);
        assert_eq!(CycleDecomposition::all(2)[0].tree_edges(), &[[0, 1]]);
        assert!(CycleDecomposition::new(4, vec![[0, 4], [1, 4], [2, 4], [3, 4]]).is_err());
    }

    #[test]
    fn leaf_edge_cut_is_singleton() {
        let d = DirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        for dec in CycleDecomposition::all(4) {
            for e in 0..dec.tree_edges().len() {
                let [a, b] = dec.tree_edges()[e];
                if let Some(leaf) = [a, b].into_iter().find(|&x| dec.is_leaf(x)) {
                    assert_eq!(induced_cut(&d, &dec, e).side_a, BitSet::from_indices([leaf]));
                }
            }
        }
    }

    #[test]
    fn k4_internal_edge_and_six_cycle_path() {
        let k4 = UndirectedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let dec = CycleDecomposition::new(4, vec![[0, 4], [1, 4], [4, 5], [2, 5], [3, 5]]).unwrap();
        let cut = induced_cut(&k4, &dec, 2);
        assert_eq!(cut.side_a.len(), 2);
        assert_eq!(cut.edges.len(), 4);
        // Caterpillar with leaves 0..6 in path order.
        let c6 = UndirectedGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let dec = CycleDecomposition::new(
            6,
            vec![[0, 6], [1, 6], [6, 7], [2, 7], [7, 8], [3, 8], [8, 9], [4, 9], [5, 9]],
        )
        .unwrap();
        let cut = induced_cut(&c6, &dec, 4);
        assert_eq!(cut.side_a.len(), 3);
        assert_eq!(cut.edges.len(), 2);
    }

    #[test]
    fn bidirected_porosity_relaxation_gap() {
        use crate::graph::Sign::{Minus, Plus};
        let b = BidirectedGraph::from_signed_edges(
            3,
            &[
                (1, 2, Minus, Minus),
                (2, 0, Plus, Minus),
                (2, 0, Plus, Plus),
                (0, 2, Plus, Plus),
                (2, 1, Minus, Plus),
                (2, 1, Plus, Minus),
                (2, 1, Plus, Plus),
            ],
        )
        .unwrap();
        let cut = EdgeCut::from_side(&b, BitSet::from_indices([0]));
        let p = cycle_porosity(&b, &cut, &opts()).unwrap();
        assert_eq!(p.oracle, Some(p.value));
        assert!(p.relaxation_gap(), "{p:?}");
        assert!(!p.verified());
    }

    #[test]
    fn porosity_examples() {
        let dag = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let cut = EdgeCut::from_side(&dag, BitSet::from_indices([0]));
        assert_eq!(cycle_porosity(&dag, &cut, &opts()).unwrap().value, 0);
        let c4 = DirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        // Contiguous halves are crossed twice, alternating ones four times.
        for (side, want) in [([0, 1], 2), ([0, 3], 2), ([0, 2], 4)] {
            let cut = EdgeCut::from_side(&c4, BitSet::from_indices(side));
            let p = cycle_porosity(&c4, &cut, &opts()).unwrap();
            assert_eq!(p.value, want);
            assert!(p.verified());
        }
        let digons = DirectedGraph::from_edges(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        let cut = EdgeCut::from_side(&digons, BitSet::from_indices([0, 2]));
        assert_eq!(cycle_porosity(&digons, &cut, &opts()).unwrap().value, 4);
    }

    #[test]
    fn cycle_width_examples() {
        let dag = DirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(cycle_width_bruteforce(&dag, 8, &opts()).unwrap().0, 0);
        let tri = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(cycle_width_bruteforce(&tri, 8, &opts()).unwrap().0, 2);
        let two = DirectedGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let (w, dec) = cycle_width_bruteforce(&two, 8, &opts()).unwrap();
        assert_eq!(w, 2);
        assert_eq!(decomposition_width(&two, &dec, &opts()).unwrap(), 2);
        assert!(cycle_width_bruteforce(&two, 5, &opts()).is_err());
    }

    #[test]
    fn ye_sets() {
        let dag = DirectedGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let dec = &CycleDecomposition::all(3)[0];
        assert!(hitting_sets_ye(&dag, dec, &opts()).unwrap().iter().all(|y| y.set.is_empty()));
        let tri = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        for y in hitting_sets_ye(&tri, dec, &opts()).unwrap() {
            assert_eq!(y.set.len(), 1);
            assert_eq!(y.verified, Some(true));
        }
        let two = DirectedGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let (w, dec) = cycle_width_bruteforce(&two, 8, &opts()).unwrap();
        for y in hitting_sets_ye(&two, &dec, &opts()).unwrap() {
            assert!(y.set.len() <= w);
            assert_eq!(y.verified, Some(true));
        }
    }

    #[test]
    fn directed_components() {
        let tri = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let b = EnumerationBudget::default();
        assert_eq!(
            strong_components(&tri, &BitSet::from_indices([1]), &b).unwrap(),
            vec![BitSet::from_indices([0]), BitSet::from_indices([2])]
        );
        let digon = DirectedGraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(strong_components(&digon, &BitSet::new(), &b).unwrap(), vec![BitSet::from_indices([0, 1])]);
        let joined =
            DirectedGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
        assert_eq!(strong_components(&joined, &BitSet::new(), &b).unwrap().len(), 2);
    }

    #[test]
    fn bidirected_components_match_directed_ones() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let b = EnumerationBudget::default();
        for _ in 0..100 {
            let n = rng.gen_range(1..7);
            let edges: Vec<(usize, usize)> = (0..rng.gen_range(0..10))
                .filter_map(|_| {
                    let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    (u != v).then_some((u, v))
                })
                .collect();
            let d = DirectedGraph::from_edges(n, &edges).unwrap();
            let removed: BitSet = (0..n).filter(|_| rng.gen_bool(0.2)).collect();
            assert_eq!(
                strong_components(&d, &removed, &b).unwrap(),
                strong_components(&directed_to_bidirected(&d), &removed, &b).unwrap()
            );
        }
    }
}
