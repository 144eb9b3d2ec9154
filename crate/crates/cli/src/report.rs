//! JSON reports. Object keys come out sorted, so a report is a pure
//! function of its inputs.

use cyclepack_core::duality::{DualityReport, LpCertificate};
use cyclepack_core::oracles::{
    EnumerationBudget, NullspaceFixture, SearchMode, SplitSurvey, Target, VertexQuestionReport,
};
use cyclepack_core::widths::game::{CopStrategy, GameOutcome};
use cyclepack_core::widths::{CycleDecomposition, Porosity, YSet};
use cyclepack_core::{BitSet, CycleGraph, EdgeCut, Rational, SignedCycle};
use serde_json::{json, Value};

use crate::format::{serialize_graph, to_file, AnyGraph};

pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn vertex_names(g: &dyn CycleGraph, set: &BitSet) -> Value {
    set.iter().map(|v| g.vertex_name(v)).collect()
}

pub fn edge_names(g: &dyn CycleGraph, set: &BitSet) -> Value {
    set.iter().map(|e| g.edge_name(e)).collect()
}

fn names_of(g: &dyn CycleGraph, set: &BitSet, vertices: bool) -> Value {
    if vertices {
        vertex_names(g, set)
    } else {
        edge_names(g, set)
    }
}

pub fn cycle(g: &dyn CycleGraph, c: &SignedCycle) -> Value {
    json!({
        "vertices": c.vertices().iter().map(|&v| g.vertex_name(v)).collect::<Vec<_>>(),
        "edges": c.edges().iter().map(|&e| g.edge_name(e)).collect::<Vec<_>>(),
    })
}

fn fraction(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn fractions(xs: &[Rational]) -> Value {
    xs.iter().map(fraction).collect()
}

pub fn budget(b: &EnumerationBudget) -> Value {
    json!({"max_cycles": b.max_cycles, "max_subsets": b.max_subsets})
}

pub fn target(g: &dyn CycleGraph, t: &Target) -> Value {
    let vertices = matches!(t, Target::Vertices(_));
    json!({
        "kind": if vertices { "vertices" } else { "edges" },
        "elements": names_of(g, t.set(), vertices),
    })
}

fn lp(c: &LpCertificate) -> Value {
    json!({
        "objective": fraction(&c.objective),
        "primal": fractions(&c.primal),
        "dual": fractions(&c.dual),
        "tableau_dual": fractions(&c.tableau_dual),
        "tableau_dual_integral": c.tableau_dual_integral,
        "columns": c.columns,
        "dual_support": c.dual_support.to_vec(),
        "cycle_inequalities": c.cycle_inequalities,
    })
}

pub fn duality(g: &dyn CycleGraph, r: &DualityReport) -> Value {
    let vertex_hitting = r.hitting.kind == cyclepack_core::duality::ElementKind::Vertex;
    json!({
        "graph_kind": r.graph_kind.as_str(),
        "target": target(g, &r.target),
        "packing": {
            "disjointness": r.packing.disjointness.as_str(),
            "score": r.packing.score,
            "cycles": r.packing.cycles.iter().map(|c| cycle(g, c)).collect::<Vec<_>>(),
        },
        "hitting": {
            "kind": r.hitting.kind.as_str(),
            "size": r.hitting.elements.len(),
            "elements": names_of(g, &r.hitting.elements, vertex_hitting),
            "hits_all": r.hitting.hits_all,
            "reduced_from": r.hitting.reduced_from,
        },
        "inequality_verified": r.inequality_verified,
        "conjectural": r.conjectural,
        "lp": r.lp.as_ref().map(lp),
        "lp_fallback": r.lp_fallback.as_ref().map(|f| json!({
            "reason": f.reason,
            "relaxation": fraction(&f.relaxation),
        })),
        "gf2_rank": r.gf2_rank,
        "rank_witness": r.rank_witness.as_ref().map(|w| edge_names(g, w)),
        "oracle_min": r.oracle_min,
        "oracle_max": r.oracle_max,
    })
}

pub fn cut(g: &dyn CycleGraph, c: &EdgeCut) -> Value {
    json!({
        "side_a": vertex_names(g, &c.side_a),
        "side_b": vertex_names(g, &c.side_b),
        "edges": c.edges.iter().map(|&e| g.edge_name(e)).collect::<Vec<_>>(),
    })
}

pub fn porosity(g: &dyn CycleGraph, c: &EdgeCut, p: &Porosity) -> Value {
    json!({
        "cut": cut(g, c),
        "porosity": p.value,
        "lp": fraction(&p.lp),
        "oracle": p.oracle,
        "verified": p.verified(),
        "relaxation_gap": p.relaxation_gap(),
    })
}

pub fn decomposition(g: &dyn CycleGraph, d: &CycleDecomposition) -> Value {
    let node = |x: usize| {
        if x < d.leaf_count() {
            Value::String(g.vertex_name(x).to_string())
        } else {
            Value::String(format!("t{}", x - d.leaf_count()))
        }
    };
    json!({
        "leaves": d.leaf_count(),
        "nodes": d.node_count(),
        "tree_edges": d.tree_edges().iter().map(|&[a, b]| json!([node(a), node(b)])).collect::<Vec<_>>(),
    })
}

pub fn y_sets(g: &dyn CycleGraph, ys: &[YSet]) -> Value {
    ys.iter()
        .map(|y| {
            json!({
                "tree_edge": y.tree_edge,
                "cut": cut(g, &y.cut),
                "y": vertex_names(g, &y.set),
                "porosity": y.porosity,
                "verified": y.verified,
            })
        })
        .collect()
}

pub fn strategy(g: &dyn CycleGraph, s: &CopStrategy) -> Value {
    json!({
        "width": s.width,
        "cop_budget": s.budget(),
        "decomposition": decomposition(g, &s.decomposition),
        "y": s.y.iter().map(|y| vertex_names(g, y)).collect::<Vec<_>>(),
    })
}

pub fn game(g: &dyn CycleGraph, o: &GameOutcome) -> Value {
    json!({
        "cop_budget": o.cop_budget,
        "max_cops": o.max_cops,
        "rounds": o.rounds,
        "positions": o.positions,
        "caught": o.transcript.last().is_some_and(|r| r.robber.is_none()),
        "transcript": o.transcript.iter().map(|r| json!({
            "round": r.round,
            "cops": vertex_names(g, &r.cops),
            "robber": r.robber.as_ref().map(|x| vertex_names(g, x)),
            "phase": r.phase,
        })).collect::<Vec<_>>(),
    })
}

fn mode(m: &SearchMode) -> Value {
    match m {
        SearchMode::Exhaustive => json!({"kind": "exhaustive"}),
        SearchMode::Sampled { seed, trials } => json!({"kind": "sampled", "seed": seed, "trials": trials}),
    }
}

pub fn graph_value(g: &AnyGraph) -> Value {
    serde_json::to_value(to_file(g)).expect("graph files always serialize")
}

pub fn vertex_question(r: &VertexQuestionReport) -> Value {
    let found = r.counterexample.as_ref().map(|w| {
        let g: &dyn CycleGraph = &w.graph;
        json!({
            "graph": graph_value(&AnyGraph::Undirected(w.graph.clone())),
            "s": vertex_names(g, &w.s),
            "packing_score": w.packing.score,
            "packing": w.packing.cycles.iter().map(|c| cycle(g, c)).collect::<Vec<_>>(),
            "min_hitting": vertex_names(g, &w.hitting.elements),
        })
    });
    json!({
        "search": "vertex-question",
        "n_max": r.n_max,
        "mode": mode(&r.mode),
        "graphs_checked": r.graphs_checked,
        "instances_checked": r.instances_checked,
        "coverage": r.coverage.iter().map(|&(n, g, i)| json!({"n": n, "graphs": g, "instances": i})).collect::<Vec<_>>(),
        "budget_exceeded": r.budget_exceeded,
        "status": if found.is_some() { "found" } else { "none found" },
        "counterexample": found,
    })
}

pub fn nullspace(f: &NullspaceFixture) -> Value {
    let g: &dyn CycleGraph = &f.graph;
    json!({
        "search": "nullspace",
        "status": "found",
        "graph": graph_value(&AnyGraph::Bidirected(f.graph.clone())),
        "support": edge_names(g, &f.support),
        "leftover": edge_names(g, &f.leftover),
        "trial": f.trial,
    })
}

pub fn split_survey(n_max: usize, multiplicity: usize, s: &SplitSurvey) -> Value {
    json!({
        "search": "split-survey",
        "n_max": n_max,
        "max_multiplicity": multiplicity,
        "graphs": s.graphs,
        "null_vectors": s.null_vectors,
        "status": if s.failures.is_empty() { "none found" } else { "found" },
        "failures": s.failures.iter().map(|(b, v)| json!({
            "graph": graph_value(&AnyGraph::Bidirected(b.clone())),
            "vector": edge_names(b, v),
        })).collect::<Vec<_>>(),
    })
}

/// Graph file text for a fixture found by a search.
pub fn fixture_file(f: &NullspaceFixture) -> String {
    serialize_graph(&AnyGraph::Bidirected(f.graph.clone()))
}
