//! Cycle enumeration, canonical forms and decomposition of edge supports
//! into edge-disjoint cycles.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{CycleGraph, GraphKind, SignedCycle};

/// Whether a cycle and its reversal are the same object for this kind.
fn reflective(kind: GraphKind) -> bool {
    kind != GraphKind::Directed
}

/// All cycles of `graph`, each reported once.
///
/// A cycle is reported starting at its smallest vertex. For undirected and
/// bidirected graphs, where a cycle and its reversal coincide, the direction
/// is the one whose `(second vertex, first edge)` is smaller; for 2-cycles on
/// parallel edges that means the smaller edge first. Cycles come out in the
/// order of a depth-first search driven by the vertex and edge order.
pub fn enumerate_cycles<G: CycleGraph + ?Sized>(
    graph: &G,
    max_cycles: usize,
) -> Result<Vec<SignedCycle>> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        on_path[start] = true;
        extend(
            graph,
            start,
            &mut vertices,
            &mut edges,
            &mut on_path,
            &mut out,
            max_cycles,
        )?;
        on_path[start] = false;
    }
    Ok(out)
}

fn extend<G: CycleGraph + ?Sized>(
    graph: &G,
    start: usize,
    vertices: &mut Vec<usize>,
    edges: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<SignedCycle>,
    max_cycles: usize,
) -> Result<()> {
    let v = *vertices.last().unwrap();
    let e_in = edges.last().copied();
    for &e in graph.incident(v) {
        if !graph.can_leave(v, e) || e_in.is_some_and(|ei| !graph.can_pass(v, ei, e)) {
            continue;
        }
        let w = graph.other_end(e, v);
        if w == start {
            let Some(&first) = edges.first() else {
                continue;
            };
            if e == first || !graph.can_pass(start, e, first) {
                continue;
            }
            if reflective(graph.kind()) {
                let k = vertices.len();
                if (vertices[1], first) > (vertices[k - 1], e) {
                    continue;
                }
            }
            if out.len() == max_cycles {
                return Err(Error::BudgetExceeded {
                    what: "cycle",
                    limit: max_cycles,
                });
            }
            let mut cycle_edges = edges.clone();
            cycle_edges.push(e);
            out.push(SignedCycle::from_parts(vertices.clone(), cycle_edges));
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            vertices.push(w);
            edges.push(e);
            extend(graph, start, vertices, edges, on_path, out, max_cycles)?;
            vertices.pop();
            edges.pop();
            on_path[w] = false;
        }
    }
    Ok(())
}

/// Rotates (and for reflective kinds possibly reverses) a cycle into the
/// form produced by [`enumerate_cycles`].
pub fn canonicalize<G: CycleGraph + ?Sized>(graph: &G, c: &SignedCycle) -> SignedCycle {
    let k = c.len();
    let pos = (0..k).min_by_key(|&i| c.vertices()[i]).unwrap_or(0);
    let rotated = SignedCycle::from_parts(
        (0..k).map(|i| c.vertices()[(pos + i) % k]).collect(),
        (0..k).map(|i| c.edges()[(pos + i) % k]).collect(),
    );
    if reflective(graph.kind()) {
        let rev = rotated.reversed();
        if (rev.vertices()[1], rev.edges()[0]) < (rotated.vertices()[1], rotated.edges()[0]) {
            return rev;
        }
    }
    rotated
}

/// Greedy walk decomposition of `support` into edge-disjoint cycles.
///
/// Repeatedly walks from the smallest vertex with unused support edges,
/// always taking the smallest feasible unused edge, and cuts off a cycle
/// whenever the walk returns to a vertex on it. This always succeeds on
/// Eulerian supports of undirected graphs, balanced supports of directed
/// graphs and 0/1 null vectors of vertex-split bidirected graphs. On general
/// bidirected graphs it may get stuck; the unpeeled edges are returned as the
/// error.
pub fn peel_cycles<G: CycleGraph + ?Sized>(
    graph: &G,
    support: &BitSet,
) -> core::result::Result<Vec<SignedCycle>, BitSet> {
    let mut remaining = support.clone();
    let mut cycles = Vec::new();
    let n = graph.vertex_count();
    let mut path_pos = vec![usize::MAX; n];
    'outer: while !remaining.is_empty() {
        let start = (0..n)
            .find(|&v| graph.incident(v).iter().any(|&e| remaining.contains(e)))
            .expect("support edge without endpoint");
        let mut pv = vec![start];
        let mut pe: Vec<usize> = Vec::new();
        path_pos[start] = 0;
        loop {
            let v = *pv.last().unwrap();
            let e_in = pe.last().copied();
            let next = graph.incident(v).iter().copied().find(|&e| {
                remaining.contains(e)
                    && graph.can_leave(v, e)
                    && e_in.is_none_or(|ei| graph.can_pass(v, ei, e))
            });
            let Some(e) = next else {
                remaining.extend(pe);
                return Err(remaining);
            };
            let w = graph.other_end(e, v);
            let i = path_pos[w];
            if i == usize::MAX {
                path_pos[w] = pv.len();
                pv.push(w);
                pe.push(e);
                remaining.remove(e);
                continue;
            }
            // w = pv[i] with i < pe.len(): the cycle leaves w along pe[i].
            if !graph.can_pass(w, e, pe[i]) {
                remaining.extend(pe);
                return Err(remaining);
            }
            let cv: Vec<usize> = pv[i..].to_vec();
            let mut ce: Vec<usize> = pe[i..].to_vec();
            ce.push(e);
            for &x in &pv[i + 1..] {
                path_pos[x] = usize::MAX;
            }
            remaining.remove(e);
            cycles.push(canonicalize(graph, &SignedCycle::from_parts(cv, ce)));
            pv.truncate(i + 1);
            pe.truncate(i);
            if pe.is_empty() {
                path_pos[pv[0]] = usize::MAX;
                continue 'outer;
            }
        }
    }
    Ok(cycles)
}

/// Exact decomposition of `support` into edge-disjoint cycles, by exact-cover
/// search over the cycles of `graph` inside the support. `None` if no
/// decomposition exists.
pub fn decompose_into_cycles<G: CycleGraph + ?Sized>(
    graph: &G,
    support: &BitSet,
    max_cycles: usize,
) -> Result<Option<Vec<SignedCycle>>> {
    let inside: Vec<(SignedCycle, BitSet)> = enumerate_cycles(graph, max_cycles)?
        .into_iter()
        .map(|c| {
            let es = c.edge_set();
            (c, es)
        })
        .filter(|(_, es)| es.is_subset(support))
        .collect();
    let mut chosen = Vec::new();
    if cover(&inside, support.clone(), &mut chosen) {
        Ok(Some(chosen.into_iter().map(|i| inside[i].0.clone()).collect()))
    } else {
        Ok(None)
    }
}

fn cover(cands: &[(SignedCycle, BitSet)], remaining: BitSet, chosen: &mut Vec<usize>) -> bool {
    let Some(e) = remaining.iter().next() else {
        return true;
    };
    for (i, (_, es)) in cands.iter().enumerate() {
        if es.contains(e) && es.is_subset(&remaining) {
            let mut rest = remaining.clone();
            rest.difference_with(es);
            chosen.push(i);
            if cover(cands, rest, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BidirectedGraph, DirectedGraph, Sign, UndirectedGraph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use Sign::{Minus, Plus};

    fn complete(n: usize) -> UndirectedGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        UndirectedGraph::from_edges(n, &edges).unwrap()
    }

    /// Independent count: a cycle is determined by its edge set, so count
    /// edge subsets that form a connected 2-regular subgraph.
    fn count_undirected_cycles_by_edge_subsets(g: &UndirectedGraph) -> usize {
        let m = g.edge_count();
        let mut count = 0;
        for mask in 1u32..(1 << m) {
            let edges: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
            let mut deg = vec![0; g.vertex_count()];
            for &e in &edges {
                let [u, v] = g.ends(e);
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d != 0 && d != 2) {
                continue;
            }
            // Connected?
            let start = g.ends(edges[0])[0];
            let mut seen = BitSet::from_indices([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &e in &edges {
                    let [a, b] = g.ends(e);
                    if a == v && seen.insert(b) {
                        stack.push(b);
                    }
                    if b == v && seen.insert(a) {
                        stack.push(a);
                    }
                }
            }
            if seen.len() == deg.iter().filter(|&&d| d == 2).count() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn k4_has_seven_cycles() {
        let k4 = complete(4);
        let cycles = enumerate_cycles(&k4, 100).unwrap();
        assert_eq!(cycles.len(), 7);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(count_undirected_cycles_by_edge_subsets(&k4), 7);
    }

    #[test]
    fn directed_triangle_has_one_cycle() {
        let d = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = enumerate_cycles(&d, 10).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].vertices(), &[0, 1, 2]);
    }

    #[test]
    fn budget_is_an_error() {
        let k5 = complete(5);
        assert!(matches!(
            enumerate_cycles(&k5, 5),
            Err(Error::BudgetExceeded { what: "cycle", limit: 5 })
        ));
    }

    #[test]
    fn parallel_edges_give_two_cycles() {
        let g = UndirectedGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let c = enumerate_cycles(&g, 10).unwrap();
        assert_eq!(c.len(), 3);
        for cyc in &c {
            assert!(cyc.edges()[0] < cyc.edges()[1]);
        }
    }

    #[test]
    fn enumeration_matches_independent_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let n = rng.gen_range(2..7);
            let m = rng.gen_range(1..11);
            let edges: Vec<_> = (0..m)
                .map(|_| {
                    let u = rng.gen_range(0..n);
                    let v = (u + rng.gen_range(1..n)) % n;
                    (u, v)
                })
                .collect();
            let g = UndirectedGraph::from_edges(n, &edges).unwrap();
            let cycles = enumerate_cycles(&g, 100_000).unwrap();
            assert_eq!(cycles.len(), count_undirected_cycles_by_edge_subsets(&g));
            for c in &cycles {
                c.validate(&g).unwrap();
                assert_eq!(&canonicalize(&g, &c.reversed()), c);
            }
        }
    }

    #[test]
    fn peel_directed_balanced_support() {
        // Two triangles sharing vertex 0 plus a digon.
        let d = DirectedGraph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (1, 3), (3, 1)],
        )
        .unwrap();
        let all: BitSet = (0..8).collect();
        let cycles = peel_cycles(&d, &all).unwrap();
        let mut covered = BitSet::new();
        for c in &cycles {
            c.validate(&d).unwrap();
            assert!(!covered.intersects(&c.edge_set()));
            covered.union_with(&c.edge_set());
        }
        assert_eq!(covered, all);
    }

    #[test]
    fn peel_undirected_eulerian() {
        let k5 = complete(5);
        let all: BitSet = (0..10).collect();
        let cycles = peel_cycles(&k5, &all).unwrap();
        assert_eq!(cycles.iter().map(SignedCycle::len).sum::<usize>(), 10);
        for c in &cycles {
            c.validate(&k5).unwrap();
        }
    }

    #[test]
    fn unbalanced_bidirected_support_does_not_decompose() {
        // Vertex 0 has two edges with sign + towards 1 and two with sign -
        // towards 2; the signs switch at 1 and 2. Balanced, but no cycle.
        let b = BidirectedGraph::from_signed_edges(
            3,
            &[
                (0, 1, Plus, Plus),
                (0, 1, Plus, Minus),
                (0, 2, Minus, Plus),
                (0, 2, Minus, Minus),
            ],
        )
        .unwrap();
        let all: BitSet = (0..4).collect();
        assert!(b.is_null_vector(&all));
        assert!(enumerate_cycles(&b, 10).unwrap().is_empty());
        assert_eq!(decompose_into_cycles(&b, &all, 10).unwrap(), None);
        assert!(peel_cycles(&b, &all).is_err());
    }
}
