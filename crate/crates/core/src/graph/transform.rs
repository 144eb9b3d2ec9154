//! The graph transformations the duality engines and width machinery rely on.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{BidirectedGraph, CycleGraph, DirectedGraph, Sign, SignedCycle};

/// Forgets orientation, putting `+` at every head and `-` at every tail.
///
/// Vertex and edge indices are unchanged, and the sign-switching cycles of
/// the result are exactly the directed cycles of `d`.
pub fn directed_to_bidirected(d: &DirectedGraph) -> BidirectedGraph {
    let vertices = (0..d.vertex_count())
        .map(|v| d.vertex_name(v).to_string())
        .collect();
    let edges = (0..d.edge_count())
        .map(|e| {
            (
                d.edge_name(e).to_string(),
                d.ends(e),
                [Sign::Minus, Sign::Plus],
            )
        })
        .collect();
    BidirectedGraph::unchecked(vertices, edges)
}

/// Orients a cycle of `directed_to_bidirected(d)` along the edges of `d`.
pub(crate) fn orient_directed(d: &DirectedGraph, c: &SignedCycle) -> SignedCycle {
    if d.tail(c.edges()[0]) == c.vertices()[0] {
        c.clone()
    } else {
        c.reversed()
    }
}

/// Result of replacing every vertex `v` by `v+` and `v-`.
///
/// `v+` keeps the edges that had sign `+` at `v`, `v-` those with `-`, and a
/// new split edge joins them with `-` at `v+` and `+` at `v-`. Every vertex of
/// the split graph is incident with exactly one split edge and every pass
/// through it must use that edge, so edge-disjoint cycles of the split graph
/// are vertex-disjoint.
#[derive(Clone, Debug)]
pub struct VertexSplit {
    pub graph: BidirectedGraph,
    /// Vertex of the original graph -> its split edge.
    pub split_edge: Vec<usize>,
    /// Edge of the original graph -> the same edge in the split graph.
    pub edge_map: Vec<usize>,
    /// Vertex of the split graph -> the vertex it came from.
    pub owner: Vec<usize>,
    original_edges: usize,
}

impl VertexSplit {
    pub fn new(b: &BidirectedGraph) -> Self {
        let n = b.vertex_count();
        let m = b.edge_count();
        let plus = |v: usize| 2 * v;
        let minus = |v: usize| 2 * v + 1;
        let copy = |v: usize, s: Sign| match s {
            Sign::Plus => plus(v),
            Sign::Minus => minus(v),
        };
        let mut vertices = Vec::with_capacity(2 * n);
        let mut owner = Vec::with_capacity(2 * n);
        for v in 0..n {
            vertices.push(format!("{}+", b.vertex_name(v)));
            vertices.push(format!("{}-", b.vertex_name(v)));
            owner.extend([v, v]);
        }
        let mut edges: Vec<(String, [usize; 2], [Sign; 2])> = Vec::with_capacity(m + n);
        for e in 0..m {
            let [u, w] = b.ends(e);
            let [su, sw] = b.signs(e);
            edges.push((b.edge_name(e).to_string(), [copy(u, su), copy(w, sw)], [su, sw]));
        }
        for v in 0..n {
            edges.push((
                format!("[{}]", b.vertex_name(v)),
                [plus(v), minus(v)],
                [Sign::Minus, Sign::Plus],
            ));
        }
        Self {
            graph: BidirectedGraph::unchecked(vertices, edges),
            split_edge: (m..m + n).collect(),
            edge_map: (0..m).collect(),
            owner,
            original_edges: m,
        }
    }

    /// The original vertex whose split edge is `e`, if `e` is a split edge.
    pub fn split_vertex(&self, e: usize) -> Option<usize> {
        (e >= self.original_edges).then(|| e - self.original_edges)
    }

    /// The original edge `e` came from, if it is not a split edge.
    pub fn original_edge(&self, e: usize) -> Option<usize> {
        (e < self.original_edges).then_some(e)
    }

    /// Image of a cycle of the original graph.
    pub fn lift_cycle(&self, b: &BidirectedGraph, c: &SignedCycle) -> SignedCycle {
        let k = c.len();
        let mut vertices = Vec::with_capacity(2 * k);
        let mut edges = Vec::with_capacity(2 * k);
        for i in 0..k {
            let v = c.vertices()[i];
            let e_in = c.edges()[(i + k - 1) % k];
            let e_out = c.edges()[i];
            let s_in = b.sign(v, e_in);
            let s_out = b.sign(v, e_out);
            let copy = |s: Sign| if s == Sign::Plus { 2 * v } else { 2 * v + 1 };
            vertices.push(copy(s_in));
            edges.push(self.split_edge[v]);
            vertices.push(copy(s_out));
            edges.push(self.edge_map[e_out]);
        }
        SignedCycle::from_parts(vertices, edges)
    }

    /// Preimage of a cycle of the split graph, starting at the owner of the
    /// first vertex that is left along an original edge.
    pub fn project_cycle(&self, c: &SignedCycle) -> SignedCycle {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (&x, &e) in c.vertices().iter().zip(c.edges()) {
            if let Some(orig) = self.original_edge(e) {
                vertices.push(self.owner[x]);
                edges.push(orig);
            }
        }
        SignedCycle::from_parts(vertices, edges)
    }
}

/// A graph with some edges subdivided by a fresh vertex.
#[derive(Clone, Debug)]
pub struct Subdivision<G> {
    pub graph: G,
    /// Subdivided edge -> its subdivision vertex, for each edge of the input
    /// set in increasing order.
    pub subdivided: Vec<(usize, usize)>,
    /// Number of vertices and edges before subdivision.
    pub original_vertices: usize,
    pub original_edges: usize,
}

impl<G> Subdivision<G> {
    pub fn subdivision_vertices(&self) -> Vec<usize> {
        self.subdivided.iter().map(|&(_, x)| x).collect()
    }

    /// The original edge an edge of the subdivided graph belongs to.
    pub fn original_edge(&self, e: usize) -> usize {
        if e < self.original_edges {
            e
        } else {
            self.subdivided[e - self.original_edges].0
        }
    }

    /// Maps a cycle of the subdivided graph back to the original graph.
    pub fn project_cycle(&self, c: &SignedCycle) -> SignedCycle {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (&v, &e) in c.vertices().iter().zip(c.edges()) {
            if v < self.original_vertices {
                vertices.push(v);
                edges.push(self.original_edge(e));
            }
        }
        SignedCycle::from_parts(vertices, edges)
    }
}

fn normalized(edges: &[usize], m: usize) -> Vec<usize> {
    let mut f: Vec<usize> = edges.to_vec();
    f.sort_unstable();
    f.dedup();
    assert!(f.last().is_none_or(|&e| e < m), "edge out of range");
    f
}

impl DirectedGraph {
    /// Replaces each edge `t -> h` in `edges` by `t -> x -> h` with a fresh `x`.
    /// The first half keeps the edge's index, the second half is appended.
    pub fn subdivide_edges(&self, edges: &[usize]) -> Subdivision<DirectedGraph> {
        let (n, m) = (self.vertex_count(), self.edge_count());
        let f = normalized(edges, m);
        let mut vertices: Vec<String> = (0..n).map(|v| self.vertex_name(v).to_string()).collect();
        let mut new_edges: Vec<(String, [usize; 2])> = (0..m)
            .map(|e| (self.edge_name(e).to_string(), self.ends(e)))
            .collect();
        let mut subdivided = Vec::with_capacity(f.len());
        for &e in &f {
            let x = vertices.len();
            vertices.push(format!("{}*", self.edge_name(e)));
            let [t, h] = self.ends(e);
            new_edges[e].1 = [t, x];
            new_edges.push((format!("{}'", self.edge_name(e)), [x, h]));
            subdivided.push((e, x));
        }
        Subdivision {
            graph: DirectedGraph {
                skeleton: super::Skeleton::unchecked(vertices, new_edges),
            },
            subdivided,
            original_vertices: n,
            original_edges: m,
        }
    }
}

impl BidirectedGraph {
    /// Replaces each edge `u w` in `edges` by `u x` and `x w`; the outer
    /// half-edges keep their signs and `x` gets `+` on the first half and `-`
    /// on the second, so cycles correspond one to one.
    pub fn subdivide_edges(&self, edges: &[usize]) -> Subdivision<BidirectedGraph> {
        let (n, m) = (self.vertex_count(), self.edge_count());
        let f = normalized(edges, m);
        let mut vertices: Vec<String> = (0..n).map(|v| self.vertex_name(v).to_string()).collect();
        let mut new_edges: Vec<(String, [usize; 2], [Sign; 2])> = (0..m)
            .map(|e| (self.edge_name(e).to_string(), self.ends(e), self.signs(e)))
            .collect();
        let mut subdivided = Vec::with_capacity(f.len());
        for &e in &f {
            let x = vertices.len();
            vertices.push(format!("{}*", self.edge_name(e)));
            let [u, w] = self.ends(e);
            let [su, sw] = self.signs(e);
            new_edges[e].1 = [u, x];
            new_edges[e].2 = [su, Sign::Plus];
            new_edges.push((format!("{}'", self.edge_name(e)), [x, w], [Sign::Minus, sw]));
            subdivided.push((e, x));
        }
        Subdivision {
            graph: BidirectedGraph::unchecked(vertices, new_edges),
            subdivided,
            original_vertices: n,
            original_edges: m,
        }
    }
}
