//! Engine certificates on small random graphs, checked against the
//! exhaustive oracles through the public API only.

use cyclepack_core::cycles::enumerate_cycles;
use cyclepack_core::duality::{
    bidirected_vertex_duality, directed_edge_duality, directed_vertex_duality, undirected_edge_duality,
    DualityReport, ElementKind, EngineOptions, Verification,
};
use cyclepack_core::graph::directed_to_bidirected;
use cyclepack_core::oracles::{hits_all_among, max_packing_among, min_hitting_among, Target};
use cyclepack_core::widths::cycle_porosity;
use cyclepack_core::{BidirectedGraph, BitSet, CycleGraph, DirectedGraph, EdgeCut, Sign, UndirectedGraph};
use proptest::prelude::*;

const OPTS: EngineOptions = EngineOptions {
    budget: cyclepack_core::oracles::EnumerationBudget { max_cycles: 100_000, max_subsets: 1_000_000 },
    verify: Verification::Exhaustive,
};

fn mask_set(mask: u32, bound: usize) -> BitSet {
    BitSet::from_indices((0..bound).filter(|&i| mask >> i & 1 == 1))
}

fn arcs(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0..n, 0..n), 0..9).prop_map(|v| v.into_iter().filter(|(a, b)| a != b).collect())
}

fn digraph() -> impl Strategy<Value = DirectedGraph> {
    (2usize..6).prop_flat_map(arcs).prop_map(|e| {
        let n = e.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(2).max(2);
        DirectedGraph::from_edges(n, &e).unwrap()
    })
}

fn sign(x: bool) -> Sign {
    if x {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn bigraph() -> impl Strategy<Value = BidirectedGraph> {
    (2usize..5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n, any::<bool>(), any::<bool>()), 0..7)))
        .prop_map(|(n, e)| {
            let e: Vec<_> = e.into_iter().filter(|&(a, b, _, _)| a != b).map(|(a, b, x, y)| (a, b, sign(x), sign(y))).collect();
            BidirectedGraph::from_signed_edges(n, &e).unwrap()
        })
}

/// The packing is disjoint, scores what it claims, the hitting set meets every
/// target cycle, and both sides agree with the brute-force bounds.
fn check<G: CycleGraph>(g: &G, r: &DualityReport, target: &Target, disjoint: ElementKind) {
    let cycles = enumerate_cycles(g, 100_000).unwrap();
    let mut used = BitSet::new();
    let mut score = 0;
    for c in &r.packing.cycles {
        let own = match disjoint {
            ElementKind::Vertex => c.vertex_set(),
            ElementKind::Edge => c.edge_set(),
        };
        assert!(!own.intersects(&used), "packing not disjoint");
        used.union_with(&own);
        score += target.on_cycle(c).len();
    }
    assert_eq!(score, r.packing.score);
    assert!(hits_all_among(&cycles, &r.hitting.elements, target, r.hitting.kind));
    let max = max_packing_among(&cycles, target, disjoint, 1_000_000).unwrap().score;
    let min = min_hitting_among(&cycles, target, r.hitting.kind, 1_000_000).unwrap().elements.len();
    assert!(r.packing.score <= max && r.hitting.elements.len() >= min);
    assert!(r.packing.score >= r.hitting.elements.len(), "score {} < hitting {}", r.packing.score, r.hitting.elements.len());
    assert!(r.inequality_verified);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn directed_edges(d in digraph(), mask in any::<u32>()) {
        let f = mask_set(mask, d.edge_count());
        let r = directed_edge_duality(&d, &f, &OPTS).unwrap();
        check(&d, &r, &Target::Edges(f), ElementKind::Edge);
        prop_assert!(r.lp.as_ref().unwrap().objective.is_integer());
    }

    #[test]
    fn directed_vertices(d in digraph(), mask in any::<u32>()) {
        let s = mask_set(mask, d.vertex_count());
        let r = directed_vertex_duality(&d, &s, &OPTS).unwrap();
        check(&d, &r, &Target::Vertices(s), ElementKind::Vertex);
        prop_assert!(r.lp_fallback.is_none());
    }

    #[test]
    fn bidirected_vertices(b in bigraph(), mask in any::<u32>()) {
        let s = mask_set(mask, b.vertex_count());
        let r = bidirected_vertex_duality(&b, &s, &OPTS).unwrap();
        check(&b, &r, &Target::Vertices(s), ElementKind::Vertex);
        // A fallback answer carries no LP certificate.
        prop_assert!(r.lp_fallback.is_none() || r.lp.is_none());
    }

    #[test]
    fn undirected_edges(e in arcs(5), mask in any::<u32>()) {
        let g = UndirectedGraph::from_edges(5, &e).unwrap();
        let f = mask_set(mask, g.edge_count());
        let r = undirected_edge_duality(&g, &f, &OPTS).unwrap();
        check(&g, &r, &Target::Edges(f), ElementKind::Edge);
    }

    #[test]
    fn directed_cycles_survive_the_mapping(d in digraph()) {
        let b = directed_to_bidirected(&d);
        let a = enumerate_cycles(&d, 100_000).unwrap();
        let c = enumerate_cycles(&b, 100_000).unwrap();
        prop_assert_eq!(a.len(), c.len());
    }

    #[test]
    fn directed_porosity_lp_is_exact(d in digraph(), side in any::<u32>()) {
        let cut = EdgeCut::from_side(&d, mask_set(side, d.vertex_count()));
        let p = cycle_porosity(&d, &cut, &OPTS).unwrap();
        prop_assert!(p.verified());
    }
}
