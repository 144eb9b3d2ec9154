//! Undirected, directed and bidirected multigraphs.
//!
//! All three kinds are loop-free and allow parallel edges. Vertices and edges
//! are addressed by their index in the order fixed at construction; every
//! matrix row/column order and every tie-break in this crate derives from that
//! order. Names are carried along for I/O only.

pub(crate) mod transform;

pub use transform::{directed_to_bidirected, Subdivision, VertexSplit};

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl core::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.negate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Undirected,
    Directed,
    Bidirected,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Undirected => "undirected",
            GraphKind::Directed => "directed",
            GraphKind::Bidirected => "bidirected",
        }
    }
}

/// What the cycle machinery needs to know about a graph.
///
/// A walk leaves a vertex `v` along edge `e` only if `can_leave(v, e)` and
/// passes through `v` from `e_in` to `e_out` only if `can_pass(v, e_in, e_out)`.
/// Cycles are closed walks that pass every one of their vertices this way.
pub trait CycleGraph {
    fn kind(&self) -> GraphKind;
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    /// Endpoints of `e`; for directed graphs `[tail, head]`.
    fn ends(&self, e: usize) -> [usize; 2];
    /// Edges incident with `v`, in edge order.
    fn incident(&self, v: usize) -> &[usize];
    fn vertex_name(&self, v: usize) -> &str;
    fn edge_name(&self, e: usize) -> &str;
    fn can_leave(&self, v: usize, e: usize) -> bool;
    fn can_pass(&self, v: usize, e_in: usize, e_out: usize) -> bool;

    /// The endpoint of `e` other than `v`.
    fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.ends(e);
        if a == v {
            b
        } else {
            a
        }
    }

    fn vertex_index(&self, name: &str) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| self.vertex_name(v) == name)
    }

    fn edge_index(&self, name: &str) -> Option<usize> {
        (0..self.edge_count()).find(|&e| self.edge_name(e) == name)
    }
}

/// The sign-free part shared by the three graph kinds.
#[derive(Clone, PartialEq, Eq)]
struct Skeleton {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    ends: Vec<[usize; 2]>,
    incidence: Vec<Vec<usize>>,
}

impl Skeleton {
    fn new(vertex_names: Vec<String>, edges: Vec<(String, usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for name in &vertex_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {name:?}")));
            }
        }
        let mut seen = BTreeSet::new();
        for (name, u, v) in &edges {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate edge id {name:?}")));
            }
            if *u >= vertex_names.len() || *v >= vertex_names.len() {
                return Err(Error::InvalidGraph(format!(
                    "edge {name:?} has an endpoint out of range"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {name:?} is a loop")));
            }
        }
        Ok(Self::unchecked(
            vertex_names,
            edges.into_iter().map(|(n, u, v)| (n, [u, v])).collect(),
        ))
    }

    fn unchecked(vertex_names: Vec<String>, edges: Vec<(String, [usize; 2])>) -> Self {
        let mut incidence = vec![Vec::new(); vertex_names.len()];
        let mut edge_names = Vec::with_capacity(edges.len());
        let mut ends = Vec::with_capacity(edges.len());
        for (e, (name, [u, v])) in edges.into_iter().enumerate() {
            debug_assert!(u != v);
            incidence[u].push(e);
            incidence[v].push(e);
            edge_names.push(name);
            ends.push([u, v]);
        }
        Self {
            vertex_names,
            edge_names,
            ends,
            incidence,
        }
    }

    fn numbered(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            (0..n).map(|i| format!("v{i}")).collect(),
            edges
                .iter()
                .enumerate()
                .map(|(j, &(u, v))| (format!("e{j}"), u, v))
                .collect(),
        )
    }
}

macro_rules! skeleton_accessors {
    () => {
        fn vertex_count(&self) -> usize {
            self.skeleton.vertex_names.len()
        }
        fn edge_count(&self) -> usize {
            self.skeleton.ends.len()
        }
        fn ends(&self, e: usize) -> [usize; 2] {
            self.skeleton.ends[e]
        }
        fn incident(&self, v: usize) -> &[usize] {
            &self.skeleton.incidence[v]
        }
        fn vertex_name(&self, v: usize) -> &str {
            &self.skeleton.vertex_names[v]
        }
        fn edge_name(&self, e: usize) -> &str {
            &self.skeleton.edge_names[e]
        }
    };
}

#[derive(Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    skeleton: Skeleton,
}

impl UndirectedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<(String, usize, usize)>) -> Result<Self> {
        Ok(Self {
            skeleton: Skeleton::new(vertices, edges)?,
        })
    }

    /// Vertices `v0..`, edges `e0..` in the given order.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Ok(Self {
            skeleton: Skeleton::numbered(n, edges)?,
        })
    }
}

impl CycleGraph for UndirectedGraph {
    skeleton_accessors!();
    fn kind(&self) -> GraphKind {
        GraphKind::Undirected
    }
    fn can_leave(&self, _v: usize, _e: usize) -> bool {
        true
    }
    fn can_pass(&self, _v: usize, e_in: usize, e_out: usize) -> bool {
        e_in != e_out
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    skeleton: Skeleton,
}

impl DirectedGraph {
    /// Edges are `(id, tail, head)`.
    pub fn new(vertices: Vec<String>, edges: Vec<(String, usize, usize)>) -> Result<Self> {
        Ok(Self {
            skeleton: Skeleton::new(vertices, edges)?,
        })
    }

    /// Vertices `v0..`, edges `e0..` given as `(tail, head)`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Ok(Self {
            skeleton: Skeleton::numbered(n, edges)?,
        })
    }

    pub fn tail(&self, e: usize) -> usize {
        self.skeleton.ends[e][0]
    }

    pub fn head(&self, e: usize) -> usize {
        self.skeleton.ends[e][1]
    }

    /// Vertex-by-edge matrix with `+1` at the head and `-1` at the tail.
    pub fn incidence_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.vertex_count(), self.edge_count());
        for e in 0..self.edge_count() {
            m[(self.head(e), e)] = Rational::ONE;
            m[(self.tail(e), e)] = -Rational::ONE;
        }
        m
    }

    /// `(edge, head)` for every edge leaving `v`.
    pub fn out_neighbours(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.incident(v)
            .iter()
            .filter(move |&&e| self.tail(e) == v)
            .map(move |&e| (e, self.head(e)))
    }
}

impl CycleGraph for DirectedGraph {
    skeleton_accessors!();
    fn kind(&self) -> GraphKind {
        GraphKind::Directed
    }
    fn can_leave(&self, v: usize, e: usize) -> bool {
        self.tail(e) == v
    }
    fn can_pass(&self, _v: usize, e_in: usize, e_out: usize) -> bool {
        e_in != e_out
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct BidirectedGraph {
    skeleton: Skeleton,
    /// Signs at `ends[e][0]` and `ends[e][1]`.
    signs: Vec<[Sign; 2]>,
}

impl BidirectedGraph {
    /// Edges are `(id, u, v, sign at u, sign at v)`.
    pub fn new(vertices: Vec<String>, edges: Vec<(String, usize, usize, Sign, Sign)>) -> Result<Self> {
        let signs = edges.iter().map(|&(_, _, _, a, b)| [a, b]).collect();
        let skeleton = Skeleton::new(
            vertices,
            edges.into_iter().map(|(n, u, v, _, _)| (n, u, v)).collect(),
        )?;
        Ok(Self { skeleton, signs })
    }

    pub fn from_signed_edges(n: usize, edges: &[(usize, usize, Sign, Sign)]) -> Result<Self> {
        let skeleton =
            Skeleton::numbered(n, &edges.iter().map(|&(u, v, _, _)| (u, v)).collect::<Vec<_>>())?;
        Ok(Self {
            skeleton,
            signs: edges.iter().map(|&(_, _, a, b)| [a, b]).collect(),
        })
    }

    pub(crate) fn unchecked(
        vertex_names: Vec<String>,
        edges: Vec<(String, [usize; 2], [Sign; 2])>,
    ) -> Self {
        let signs = edges.iter().map(|(_, _, s)| *s).collect();
        let skeleton = Skeleton::unchecked(
            vertex_names,
            edges.into_iter().map(|(n, ends, _)| (n, ends)).collect(),
        );
        Self { skeleton, signs }
    }

    /// `[sign at ends[0], sign at ends[1]]`.
    pub fn signs(&self, e: usize) -> [Sign; 2] {
        self.signs[e]
    }

    /// Sign of the half-edge `(v, e)`. Panics if `v` is not an end of `e`.
    pub fn sign(&self, v: usize, e: usize) -> Sign {
        let [a, b] = self.skeleton.ends[e];
        if v == a {
            self.signs[e][0]
        } else {
            assert_eq!(v, b, "vertex {v} is not incident with edge {e}");
            self.signs[e][1]
        }
    }

    /// Vertex-by-edge matrix whose `(v, e)` entry is the sign of `e` at `v`.
    pub fn incidence_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.vertex_count(), self.edge_count());
        for e in 0..self.edge_count() {
            let [a, b] = self.skeleton.ends[e];
            m[(a, e)] = Rational::from_integer(self.signs[e][0].as_i64());
            m[(b, e)] = Rational::from_integer(self.signs[e][1].as_i64());
        }
        m
    }

    /// Whether every column sum of the incidence matrix restricted to
    /// `edges` vanishes.
    pub fn is_null_vector(&self, edges: &BitSet) -> bool {
        let mut balance = vec![0i64; self.vertex_count()];
        for e in edges.iter() {
            let [a, b] = self.skeleton.ends[e];
            balance[a] += self.signs[e][0].as_i64();
            balance[b] += self.signs[e][1].as_i64();
        }
        balance.iter().all(|&x| x == 0)
    }

    /// Every edge lies on a cycle and the underlying graph is connected.
    pub fn is_circular(&self, cycle_budget: usize) -> Result<bool> {
        let n = self.vertex_count();
        if n == 0 {
            return Ok(true);
        }
        let mut seen = BitSet::from_indices([0]);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &e in self.incident(v) {
                let w = self.other_end(e, v);
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != n {
            return Ok(false);
        }
        let cycles = crate::cycles::enumerate_cycles(self, cycle_budget)?;
        let mut covered = BitSet::new();
        for c in &cycles {
            covered.union_with(&c.edge_set());
        }
        Ok(covered.len() == self.edge_count())
    }
}

impl CycleGraph for BidirectedGraph {
    skeleton_accessors!();
    fn kind(&self) -> GraphKind {
        GraphKind::Bidirected
    }
    fn can_leave(&self, _v: usize, _e: usize) -> bool {
        true
    }
    fn can_pass(&self, v: usize, e_in: usize, e_out: usize) -> bool {
        e_in != e_out && self.sign(v, e_in) != self.sign(v, e_out)
    }
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_graph(self, f, |_| String::new())
    }
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_graph(self, f, |_| String::new())
    }
}

impl fmt::Debug for BidirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_graph(self, f, |e| {
            let [a, b] = self.signs[e];
            format!(" {}{}", a.symbol(), b.symbol())
        })
    }
}

fn debug_graph<G: CycleGraph>(
    g: &G,
    f: &mut fmt::Formatter<'_>,
    extra: impl Fn(usize) -> String,
) -> fmt::Result {
    write!(f, "{}(", g.kind().as_str())?;
    let sep = if g.kind() == GraphKind::Directed { "->" } else { "-" };
    for e in 0..g.edge_count() {
        let [a, b] = g.ends(e);
        if e > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{}:{}{sep}{}{}", g.edge_name(e), g.vertex_name(a), g.vertex_name(b), extra(e))?;
    }
    write!(f, "; n={})", g.vertex_count())
}

/// A vertex-simple closed walk `v0 e0 v1 e1 ... v(k-1) e(k-1) v0`, where `e_i`
/// joins `v_i` and `v_(i+1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycle {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl SignedCycle {
    /// Builds a cycle after checking it against `graph`.
    pub fn new<G: CycleGraph + ?Sized>(
        graph: &G,
        vertices: Vec<usize>,
        edges: Vec<usize>,
    ) -> Result<Self> {
        let c = Self { vertices, edges };
        c.validate(graph)?;
        Ok(c)
    }

    pub(crate) fn from_parts(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_set(&self) -> BitSet {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BitSet {
        self.edges.iter().copied().collect()
    }

    /// The same cycle traversed backwards from the same start vertex.
    pub fn reversed(&self) -> Self {
        let k = self.vertices.len();
        let mut vertices = Vec::with_capacity(k);
        let mut edges = Vec::with_capacity(k);
        vertices.push(self.vertices[0]);
        for i in (1..k).rev() {
            vertices.push(self.vertices[i]);
        }
        for i in (0..k).rev() {
            edges.push(self.edges[i]);
        }
        Self { vertices, edges }
    }

    /// Checks simplicity, that consecutive edges join consecutive vertices,
    /// and the pass/leave rules of `graph` at every vertex.
    pub fn validate<G: CycleGraph + ?Sized>(&self, graph: &G) -> Result<()> {
        let k = self.edges.len();
        let bad = |msg: &str| Err(Error::InvalidArgument(format!("not a cycle: {msg}")));
        if k < 2 || self.vertices.len() != k {
            return bad("needs at least two vertices and as many edges");
        }
        let vs: BTreeSet<_> = self.vertices.iter().collect();
        let es: BTreeSet<_> = self.edges.iter().collect();
        if vs.len() != k || es.len() != k {
            return bad("repeated vertex or edge");
        }
        for i in 0..k {
            let (v, e, w) = (self.vertices[i], self.edges[i], self.vertices[(i + 1) % k]);
            if v >= graph.vertex_count() || e >= graph.edge_count() {
                return bad("index out of range");
            }
            let [a, b] = graph.ends(e);
            if !((a == v && b == w) || (a == w && b == v)) {
                return bad("edge does not join consecutive vertices");
            }
            if !graph.can_leave(v, e) {
                return bad("edge traversed against its direction");
            }
            let e_in = self.edges[(i + k - 1) % k];
            if !graph.can_pass(v, e_in, e) {
                return bad("no sign switch at a vertex");
            }
        }
        Ok(())
    }

    /// `v0 -e0- v1 ...` using the graph's names.
    pub fn describe<G: CycleGraph + ?Sized>(&self, graph: &G) -> String {
        let mut s = String::new();
        for (v, e) in self.vertices.iter().zip(&self.edges) {
            s.push_str(graph.vertex_name(*v));
            s.push_str(" -");
            s.push_str(graph.edge_name(*e));
            s.push_str("- ");
        }
        s.push_str(graph.vertex_name(self.vertices[0]));
        s
    }
}

impl fmt::Debug for SignedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle(v={:?}, e={:?})", self.vertices, self.edges)
    }
}

/// A bipartition of the vertex set together with the edges crossing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub side_a: BitSet,
    pub side_b: BitSet,
    pub edges: Vec<usize>,
}

impl EdgeCut {
    pub fn from_side<G: CycleGraph + ?Sized>(graph: &G, side_a: BitSet) -> Self {
        let side_b: BitSet = (0..graph.vertex_count())
            .filter(|v| !side_a.contains(*v))
            .collect();
        let edges = (0..graph.edge_count())
            .filter(|&e| {
                let [u, v] = graph.ends(e);
                side_a.contains(u) != side_a.contains(v)
            })
            .collect();
        Self {
            side_a,
            side_b,
            edges,
        }
    }

    pub fn edge_set(&self) -> BitSet {
        self.edges.iter().copied().collect()
    }
}

/// Names of the vertices in `set`, in vertex order.
pub fn vertex_names<G: CycleGraph + ?Sized>(graph: &G, set: &BitSet) -> Vec<String> {
    set.iter().map(|v| graph.vertex_name(v).to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::enumerate_cycles;
    use Sign::{Minus, Plus};

    #[test]
    fn loops_and_duplicates_rejected() {
        assert!(DirectedGraph::from_edges(2, &[(0, 0)]).is_err());
        assert!(UndirectedGraph::from_edges(2, &[(1, 1)]).is_err());
        assert!(BidirectedGraph::from_signed_edges(2, &[(0, 0, Plus, Minus)]).is_err());
        assert!(DirectedGraph::from_edges(2, &[(0, 2)]).is_err());
        let dup = DirectedGraph::new(
            vec!["a".into(), "a".into()],
            vec![("x".into(), 0, 1)],
        );
        assert!(matches!(dup, Err(Error::InvalidGraph(_))));
        let dup_edge = DirectedGraph::new(
            vec!["a".into(), "b".into()],
            vec![("x".into(), 0, 1), ("x".into(), 1, 0)],
        );
        assert!(dup_edge.is_err());
        // Parallel edges and digons are fine.
        assert!(DirectedGraph::from_edges(2, &[(0, 1), (0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn sign_negation_is_involution() {
        for s in [Plus, Minus] {
            assert_ne!(s, -s);
            assert_eq!(s, -(-s));
        }
    }

    #[test]
    fn directed_incidence_single_edge() {
        let d = DirectedGraph::from_edges(2, &[(0, 1)]).unwrap();
        let m = d.incidence_matrix();
        assert_eq!(m[(0, 0)], -Rational::ONE);
        assert_eq!(m[(1, 0)], Rational::ONE);
    }

    #[test]
    fn directed_triangle_rows_sum_to_zero() {
        let d = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let m = d.incidence_matrix();
        for i in 0..3 {
            assert!(m.row(i).iter().sum::<Rational>().is_zero());
        }
    }

    #[test]
    fn bidirected_parallel_pair_block() {
        let b = BidirectedGraph::from_signed_edges(2, &[(0, 1, Plus, Minus), (0, 1, Minus, Plus)])
            .unwrap();
        let m = b.incidence_matrix();
        assert_eq!(m, RationalMatrix::from_integers(&[vec![1, -1], vec![-1, 1]]));
        assert_eq!(enumerate_cycles(&b, 100).unwrap().len(), 1);
    }

    #[test]
    fn cycle_validation() {
        let d = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(SignedCycle::new(&d, vec![0, 1, 2], vec![0, 1, 2]).is_ok());
        assert!(SignedCycle::new(&d, vec![0, 2, 1], vec![2, 1, 0]).is_err());
        let b = BidirectedGraph::from_signed_edges(2, &[(0, 1, Plus, Plus), (0, 1, Plus, Minus)])
            .unwrap();
        // Same sign at vertex 0: not a bidirected cycle.
        assert!(SignedCycle::new(&b, vec![0, 1], vec![0, 1]).is_err());
    }

    #[test]
    fn edge_cut_partitions() {
        let g = UndirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let cut = EdgeCut::from_side(&g, BitSet::from_indices([0, 1]));
        assert_eq!(cut.side_b.to_vec(), vec![2, 3]);
        assert_eq!(cut.edges, vec![1, 3]);
    }
}
