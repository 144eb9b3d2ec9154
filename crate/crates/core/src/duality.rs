//! The four packing/covering engines and their certificates.
//!
//! Directed and bidirected engines set up the packing LP
//! `max f.x s.t. x <= 1, Mx <= 0` (for bidirected graphs on the vertex
//! split, with `M` halved and stacked with its negation), read a cycle
//! packing off an integral optimal vertex and a hitting set off the support
//! of an integral optimal dual vertex. The undirected edge engine works with
//! the cycle space over GF(2).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::cycles::{canonicalize, enumerate_cycles, peel_cycles};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graph::transform::orient_directed;
use crate::graph::{
    directed_to_bidirected, BidirectedGraph, CycleGraph, DirectedGraph, GraphKind, SignedCycle,
    UndirectedGraph, VertexSplit,
};
use crate::lp::{self, LinearProgram, LpStatus};
use crate::matrix::RationalMatrix;
use crate::oracles::{self, EnumerationBudget, Target};
use crate::rational::Rational;

/// Vertices or edges; used both for disjointness and for hitting sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementKind {
    Vertex,
    Edge,
}

impl ElementKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ElementKind::Vertex => "vertex",
            ElementKind::Edge => "edge",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingCertificate {
    pub cycles: Vec<SignedCycle>,
    pub disjointness: ElementKind,
    /// Target elements covered by the cycles.
    pub score: usize,
}

impl PackingCertificate {
    /// Recomputes the score and checks validity and disjointness.
    pub fn check<G: CycleGraph + ?Sized>(&self, graph: &G, target: &Target) -> Result<()> {
        let mut used = BitSet::new();
        let mut covered = BitSet::new();
        for c in &self.cycles {
            c.validate(graph)?;
            let e = oracles::elements(c, self.disjointness);
            if e.intersects(&used) {
                return Err(Error::Certificate(format!(
                    "packing cycles are not {}-disjoint",
                    self.disjointness.as_str()
                )));
            }
            used.union_with(&e);
            covered.union_with(&target.on_cycle(c));
        }
        if covered.len() != self.score {
            return Err(Error::Certificate(format!(
                "packing score {} but the cycles cover {}",
                self.score,
                covered.len()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingCertificate {
    pub kind: ElementKind,
    pub elements: BitSet,
    /// `None` when verification was off or over budget.
    pub hits_all: Option<bool>,
    /// Size before redundant elements were dropped, if any were.
    pub reduced_from: Option<usize>,
}

/// Exact LP data behind a directed or bidirected report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpCertificate {
    pub objective: Rational,
    pub primal: Vec<Rational>,
    /// Optimal vertex of the explicit dual program.
    pub dual: Vec<Rational>,
    /// Dual prices read off the final primal tableau.
    pub tableau_dual: Vec<Rational>,
    pub tableau_dual_integral: bool,
    /// Columns of the program: edges of the input (directed) or of the
    /// vertex split (bidirected).
    pub columns: usize,
    /// Support of the first `columns` dual entries, in LP column indices.
    pub dual_support: BitSet,
    /// `c.y1 >= c.f` for every target cycle `c`; `None` when not checked.
    pub cycle_inequalities: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub graph_kind: GraphKind,
    pub target: Target,
    pub packing: PackingCertificate,
    pub hitting: HittingCertificate,
    /// `packing.score >= |hitting|`.
    pub inequality_verified: bool,
    /// Set for settings where the inequality is open or known to fail; the
    /// comparison is then only reported.
    pub conjectural: bool,
    pub lp: Option<LpCertificate>,
    pub gf2_rank: Option<usize>,
    /// Target edges indexing a row basis of the GF(2) matrix; they meet
    /// every target cycle.
    pub rank_witness: Option<BitSet>,
    pub oracle_min: Option<usize>,
    pub oracle_max: Option<usize>,
    /// Set when the LP route gave no integral certificate and both sides
    /// came from the brute-force oracles instead.
    pub lp_fallback: Option<LpFallback>,
}

/// Why a bidirected report does not rest on the LP.
///
/// The half-scaled stacked matrix of the bidirected engine is not 1-regular
/// in general: the packing polytope of a vertex split can have
/// half-integral vertices (two unbalanced closed walks joined by a path),
/// and its optimum can exceed the best cycle packing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpFallback {
    pub reason: String,
    /// Optimum of the LP relaxation.
    pub relaxation: Rational,
}

/// How much brute force backs a report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Verification {
    Off,
    /// Check that the hitting set meets every target cycle.
    #[default]
    Oracle,
    /// Also compute the brute-force optimum on both sides and compare.
    Exhaustive,
}

impl Verification {
    pub fn as_str(self) -> &'static str {
        match self {
            Verification::Off => "off",
            Verification::Oracle => "oracle",
            Verification::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineOptions {
    pub budget: EnumerationBudget,
    pub verify: Verification,
}

fn check_range(set: &BitSet, bound: usize, what: &str) -> Result<()> {
    match set.iter().last() {
        Some(x) if x >= bound => Err(Error::InvalidArgument(format!("{what} {x} out of range"))),
        _ => Ok(()),
    }
}

/// Cycles of `graph`, or `None` when the cycle budget runs out.
fn cycles_within<G: CycleGraph + ?Sized>(graph: &G, budget: &EnumerationBudget) -> Result<Option<Vec<SignedCycle>>> {
    match enumerate_cycles(graph, budget.max_cycles) {
        Ok(c) => Ok(Some(c)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `max f.x s.t. x <= 1, M x <= 0, x >= 0`, or with `half` set
/// `x <= 1, M x / 2 <= 0, -M x / 2 <= 0`.
pub fn packing_lp(incidence: RationalMatrix, f: &BitSet, half: bool) -> LinearProgram {
    let (n, m) = (incidence.rows(), incidence.cols());
    let id = RationalMatrix::identity(m);
    let (a, rows) = if half {
        let h = incidence.scaled(&Rational::new(1, 2));
        let neg = h.scaled(&-Rational::ONE);
        (RationalMatrix::vstack(&[&id, &h, &neg]), m + 2 * n)
    } else {
        (RationalMatrix::vstack(&[&id, &incidence]), m + n)
    };
    let mut b = vec![Rational::ZERO; rows];
    for x in b.iter_mut().take(m) {
        *x = Rational::ONE;
    }
    let c = (0..m)
        .map(|e| if f.contains(e) { Rational::ONE } else { Rational::ZERO })
        .collect();
    LinearProgram::new(a, b, c).expect("dimensions agree by construction")
}

fn integrality(msg: String) -> Error {
    Error::Integrality(msg)
}

/// Solves the packing LP and insists on an integral primal and dual.
/// Returns the certificate and the primal support.
fn solve_packing(lp_: &LinearProgram) -> Result<(LpCertificate, BitSet)> {
    let m = lp_.c.len();
    let sol = lp::solve(lp_);
    if sol.status != LpStatus::Optimal {
        return Err(Error::LpStatus(sol.status.as_str()));
    }
    let mut support = BitSet::new();
    for (e, x) in sol.primal.iter().enumerate() {
        if *x == Rational::ONE {
            support.insert(e);
        } else if !x.is_zero() {
            return Err(integrality(format!("primal entry {e} is {x}")));
        }
    }
    let dual = lp::solve_dual_basic(lp_)?;
    if dual.objective != sol.objective {
        return Err(integrality(format!(
            "dual objective {} differs from primal {}",
            dual.objective, sol.objective
        )));
    }
    if let Some((i, y)) = dual.y.iter().enumerate().find(|(_, y)| !y.is_integer()) {
        return Err(integrality(format!("dual entry {i} is {y}")));
    }
    if !lp::check_optimal_pair(lp_, &sol.primal, &dual.y) {
        return Err(integrality(String::from("primal/dual pair fails the optimality check")));
    }
    let dual_support: BitSet = (0..m).filter(|&i| !dual.y[i].is_zero()).collect();
    let y1_sum: Rational = dual.y[..m].iter().cloned().sum();
    if y1_sum != sol.objective || Rational::from_integer(dual_support.len() as i64) > y1_sum {
        return Err(integrality(String::from("dual support larger than its weight")));
    }
    let tableau_dual_integral = sol.dual.iter().all(Rational::is_integer);
    Ok((
        LpCertificate {
            objective: sol.objective,
            primal: sol.primal,
            dual: dual.y,
            tableau_dual: sol.dual,
            tableau_dual_integral,
            columns: m,
            dual_support,
            cycle_inequalities: None,
        },
        support,
    ))
}

/// `sum_{e in C} y_e >= |C ∩ F|` for every cycle given by its edge set.
fn cycle_inequalities<'a>(y: &[Rational], f: &BitSet, edge_sets: impl Iterator<Item = BitSet> + 'a) -> bool {
    edge_sets.into_iter().all(|es| {
        let lhs: Rational = es.iter().map(|e| y[e].clone()).sum();
        lhs >= Rational::from_integer(es.intersection_len(f) as i64)
    })
}

fn score_of(cycles: &[SignedCycle], target: &Target) -> usize {
    let mut covered = BitSet::new();
    for c in cycles {
        covered.union_with(&target.on_cycle(c));
    }
    covered.len()
}

/// Drops elements in index order while the rest still meets every target
/// cycle. The dual support is kept in the LP certificate.
fn reduce(hitting: &mut HittingCertificate, cycles: &[SignedCycle], target: &Target) {
    let before = hitting.elements.len();
    for x in hitting.elements.to_vec() {
        hitting.elements.remove(x);
        if !oracles::hits_all_among(cycles, &hitting.elements, target, hitting.kind) {
            hitting.elements.insert(x);
        }
    }
    if hitting.elements.len() < before {
        hitting.reduced_from = Some(before);
    }
}

/// Fills in verification fields shared by every engine.
#[allow(clippy::too_many_arguments)]
fn finish<G: CycleGraph + ?Sized>(
    graph: &G,
    target: Target,
    packing: PackingCertificate,
    mut hitting: HittingCertificate,
    cycles: Option<&[SignedCycle]>,
    opts: &EngineOptions,
    score_is_optimal: bool,
    conjectural: bool,
) -> Result<DualityReport> {
    packing.check(graph, &target)?;
    let (mut oracle_min, mut oracle_max) = (None, None);
    if opts.verify != Verification::Off && hitting.hits_all.is_none() {
        hitting.hits_all =
            cycles.map(|cs| oracles::hits_all_among(cs, &hitting.elements, &target, hitting.kind));
    }
    if let (Some(true), Some(cs)) = (hitting.hits_all, cycles) {
        reduce(&mut hitting, cs, &target);
    }
    if opts.verify == Verification::Exhaustive {
        let cs = cycles.ok_or(Error::BudgetExceeded {
            what: "cycle",
            limit: opts.budget.max_cycles,
        })?;
        let max = oracles::max_packing_among(cs, &target, packing.disjointness, opts.budget.max_subsets)?;
        let min = oracles::min_hitting_among(cs, &target, hitting.kind, opts.budget.max_subsets)?;
        if score_is_optimal && max.score != packing.score {
            return Err(Error::Certificate(format!(
                "packing score {} but the brute-force maximum is {}",
                packing.score, max.score
            )));
        }
        if !conjectural && min.elements.len() > hitting.elements.len() {
            return Err(Error::Certificate(String::from("hitting set beats the brute-force minimum")));
        }
        oracle_max = Some(max.score);
        oracle_min = Some(min.elements.len());
    }
    if !conjectural && hitting.hits_all == Some(false) {
        return Err(Error::Certificate(String::from("hitting set misses a target cycle")));
    }
    let inequality_verified = packing.score >= hitting.elements.len();
    if !conjectural && !inequality_verified {
        return Err(Error::Certificate(format!(
            "packing score {} below hitting set size {}",
            packing.score,
            hitting.elements.len()
        )));
    }
    Ok(DualityReport {
        graph_kind: graph.kind(),
        target,
        packing,
        hitting,
        inequality_verified,
        conjectural,
        lp: None,
        lp_fallback: None,
        gf2_rank: None,
        rank_witness: None,
        oracle_min,
        oracle_max,
    })
}

/// Edge version for directed graphs: edge-disjoint cycles covering many
/// edges of `f` against edges meeting every cycle through `f`.
pub fn directed_edge_duality(d: &DirectedGraph, f: &BitSet, opts: &EngineOptions) -> Result<DualityReport> {
    check_range(f, d.edge_count(), "edge")?;
    let lp_ = packing_lp(d.incidence_matrix(), f, false);
    let (mut cert, support) = solve_packing(&lp_)?;
    let cycles = peel_cycles(d, &support)
        .map_err(|rest| integrality(format!("primal support does not peel, {} edges left", rest.len())))?;
    let target = Target::Edges(f.clone());
    if Rational::from_integer(score_of(&cycles, &target) as i64) != cert.objective {
        return Err(integrality(String::from("packing score differs from the LP optimum")));
    }
    let all = if opts.verify == Verification::Off {
        None
    } else {
        cycles_within(d, &opts.budget)?
    };
    if let Some(all) = &all {
        cert.cycle_inequalities = Some(cycle_inequalities(
            &cert.dual,
            f,
            all.iter().filter(|c| target.meets(c)).map(SignedCycle::edge_set),
        ));
    }
    let hitting = HittingCertificate {
        kind: ElementKind::Edge,
        elements: cert.dual_support.clone(),
        hits_all: None,
        reduced_from: None,
    };
    let packing = PackingCertificate {
        score: score_of(&cycles, &target),
        cycles,
        disjointness: ElementKind::Edge,
    };
    let mut report = finish(d, target, packing, hitting, all.as_deref(), opts, true, false)?;
    report.lp = Some(cert);
    Ok(report)
}

/// Maps the dual support on the split graph to vertices: a split edge to
/// its vertex, an original edge to its smaller end.
fn split_support_to_vertices(b: &BidirectedGraph, split: &VertexSplit, y: &BitSet) -> BitSet {
    y.iter()
        .map(|e| match split.split_vertex(e) {
            Some(v) => v,
            None => {
                let [u, w] = b.ends(split.original_edge(e).expect("edge of the split graph"));
                u.min(w)
            }
        })
        .collect()
}

/// Vertex version for bidirected graphs: vertex-disjoint cycles covering
/// many vertices of `s` against vertices meeting every cycle through `s`.
pub fn bidirected_vertex_duality(b: &BidirectedGraph, s: &BitSet, opts: &EngineOptions) -> Result<DualityReport> {
    check_range(s, b.vertex_count(), "vertex")?;
    let split = VertexSplit::new(b);
    let f: BitSet = s.iter().map(|v| split.split_edge[v]).collect();
    let lp_ = packing_lp(split.graph.incidence_matrix(), &f, true);
    match bidirected_lp_route(b, s, &split, &f, &lp_, opts) {
        Err(Error::Integrality(reason)) => {
            let relaxation = lp::solve(&lp_).objective;
            let all = enumerate_cycles(b, opts.budget.max_cycles)?;
            let target = Target::Vertices(s.clone());
            let packing = oracles::max_packing_among(&all, &target, ElementKind::Vertex, opts.budget.max_subsets)?;
            let hitting = oracles::min_hitting_among(&all, &target, ElementKind::Vertex, opts.budget.max_subsets)?;
            let mut report = finish(b, target, packing, hitting, Some(&all), opts, true, false)?;
            report.lp_fallback = Some(LpFallback { reason, relaxation });
            Ok(report)
        }
        other => other,
    }
}

fn bidirected_lp_route(
    b: &BidirectedGraph,
    s: &BitSet,
    split: &VertexSplit,
    f: &BitSet,
    lp_: &LinearProgram,
    opts: &EngineOptions,
) -> Result<DualityReport> {
    let (mut cert, support) = solve_packing(lp_)?;
    let lifted = peel_cycles(&split.graph, &support)
        .map_err(|rest| integrality(format!("primal support does not peel, {} edges left", rest.len())))?;
    let cycles: Vec<SignedCycle> = lifted
        .iter()
        .map(|c| canonicalize(b, &split.project_cycle(c)))
        .collect();
    let target = Target::Vertices(s.clone());
    if Rational::from_integer(score_of(&cycles, &target) as i64) != cert.objective {
        return Err(integrality(String::from("packing score differs from the LP optimum")));
    }
    let all = if opts.verify == Verification::Off {
        None
    } else {
        cycles_within(b, &opts.budget)?
    };
    if let Some(all) = &all {
        cert.cycle_inequalities = Some(cycle_inequalities(
            &cert.dual,
            f,
            all.iter()
                .filter(|c| target.meets(c))
                .map(|c| split.lift_cycle(b, c).edge_set()),
        ));
    }
    let hitting = HittingCertificate {
        kind: ElementKind::Vertex,
        elements: split_support_to_vertices(b, split, &cert.dual_support),
        hits_all: None,
        reduced_from: None,
    };
    let packing = PackingCertificate {
        score: score_of(&cycles, &target),
        cycles,
        disjointness: ElementKind::Vertex,
    };
    let mut report = finish(b, target, packing, hitting, all.as_deref(), opts, true, false)?;
    report.lp = Some(cert);
    Ok(report)
}

/// Vertex version for directed graphs, through the bidirected engine.
pub fn directed_vertex_duality(d: &DirectedGraph, s: &BitSet, opts: &EngineOptions) -> Result<DualityReport> {
    let b = directed_to_bidirected(d);
    // Verification reruns on `d` itself below.
    let inner = bidirected_vertex_duality(
        &b,
        s,
        &EngineOptions {
            verify: Verification::Off,
            ..*opts
        },
    )?;
    let cycles = inner
        .packing
        .cycles
        .iter()
        .map(|c| canonicalize(d, &orient_directed(d, c)))
        .collect();
    let packing = PackingCertificate {
        cycles,
        ..inner.packing
    };
    let all = if opts.verify == Verification::Off {
        None
    } else {
        cycles_within(d, &opts.budget)?
    };
    let mut lp_cert = inner.lp;
    if let (Some(all), Some(cert)) = (&all, lp_cert.as_mut()) {
        let split = VertexSplit::new(&b);
        let f: BitSet = s.iter().map(|v| split.split_edge[v]).collect();
        let target = Target::Vertices(s.clone());
        cert.cycle_inequalities = Some(cycle_inequalities(
            &cert.dual,
            &f,
            all.iter()
                .filter(|c| target.meets(c))
                .map(|c| split.lift_cycle(&b, c).edge_set()),
        ));
    }
    let hitting = HittingCertificate {
        hits_all: None,
        reduced_from: None,
        ..inner.hitting
    };
    let mut report = finish(d, inner.target, packing, hitting, all.as_deref(), opts, true, false)?;
    report.lp = lp_cert;
    report.lp_fallback = inner.lp_fallback;
    Ok(report)
}

/// Edge version for undirected graphs via GF(2).
///
/// With `A` the cycles through `f` and `M` the target-edge by cycle
/// incidence matrix, a nonsingular `r x r` block `N` of `M` (rows and
/// columns from the rank bases) admits `N z = 1`; the symmetric difference
/// of the chosen cycles is an even subgraph containing the `r` row-basis
/// edges and is peeled into edge-disjoint cycles. The hitting set is the
/// brute-force minimum.
pub fn undirected_edge_duality(g: &UndirectedGraph, f: &BitSet, opts: &EngineOptions) -> Result<DualityReport> {
    check_range(f, g.edge_count(), "edge")?;
    let target = Target::Edges(f.clone());
    let all = enumerate_cycles(g, opts.budget.max_cycles)?;
    let f_cycles: Vec<&SignedCycle> = all.iter().filter(|c| target.meets(c)).collect();
    let f_edges: Vec<usize> = f.iter().collect();
    let mut m = Gf2Matrix::zeros(f_edges.len(), f_cycles.len());
    for (j, c) in f_cycles.iter().enumerate() {
        for (i, &e) in f_edges.iter().enumerate() {
            if c.edges().contains(&e) {
                m.set(i, j, true);
            }
        }
    }
    let rank = m.rank();
    let r = rank.rank;
    let block = m.submatrix(&rank.row_basis, &rank.col_basis);
    let z = block
        .solve(&vec![true; r])
        .ok_or_else(|| Error::Certificate(String::from("rank block is singular")))?;
    let mut sym = BitSet::new();
    for (k, &zj) in z.iter().enumerate() {
        if zj {
            sym.symmetric_difference_with(&f_cycles[rank.col_basis[k]].edge_set());
        }
    }
    let cycles = peel_cycles(g, &sym)
        .map_err(|rest| Error::Certificate(format!("even subgraph does not peel, {} edges left", rest.len())))?;
    let witness: BitSet = rank.row_basis.iter().map(|&i| f_edges[i]).collect();
    if !witness.is_subset(&sym) {
        return Err(Error::Certificate(String::from("symmetric difference misses a basis edge")));
    }
    let packing = PackingCertificate {
        score: score_of(&cycles, &target),
        cycles,
        disjointness: ElementKind::Edge,
    };
    if packing.score < r {
        return Err(Error::Certificate(format!("packing score {} below rank {r}", packing.score)));
    }
    let min = oracles::min_hitting_among(&all, &target, ElementKind::Edge, opts.budget.max_subsets)?;
    let min_size = min.elements.len();
    let mut report = finish(g, target, packing, min, Some(&all), opts, false, false)?;
    report.gf2_rank = Some(r);
    report.rank_witness = Some(witness);
    report.oracle_min = Some(min_size);
    Ok(report)
}

/// Brute-force comparison where no min-max relation is known: the
/// undirected vertex version (an open question) and the bidirected edge
/// version (false in general). Nothing is asserted.
pub fn oracle_comparison<G: CycleGraph + ?Sized>(
    graph: &G,
    target: Target,
    opts: &EngineOptions,
) -> Result<DualityReport> {
    let bound = match target.kind() {
        ElementKind::Vertex => graph.vertex_count(),
        ElementKind::Edge => graph.edge_count(),
    };
    check_range(target.set(), bound, target.kind().as_str())?;
    let all = enumerate_cycles(graph, opts.budget.max_cycles)?;
    let kind = target.kind();
    let packing = oracles::max_packing_among(&all, &target, kind, opts.budget.max_subsets)?;
    let hitting = oracles::min_hitting_among(&all, &target, kind, opts.budget.max_subsets)?;
    let (max, min) = (packing.score, hitting.elements.len());
    let mut report = finish(graph, target, packing, hitting, Some(&all), opts, true, true)?;
    report.oracle_max = Some(max);
    report.oracle_min = Some(min);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Minus, Plus};

    fn set(v: &[usize]) -> BitSet {
        v.iter().copied().collect()
    }

    fn exhaustive() -> EngineOptions {
        EngineOptions {
            verify: Verification::Exhaustive,
            ..Default::default()
        }
    }

    fn triangle() -> DirectedGraph {
        DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn directed_edge_triangle() {
        let r = directed_edge_duality(&triangle(), &set(&[0, 1, 2]), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 3);
        assert!(r.hitting.elements.len() <= 3);
        assert_eq!(r.oracle_min, Some(1));
        assert_eq!(r.hitting.hits_all, Some(true));
        let lp = r.lp.unwrap();
        assert_eq!(lp.objective, Rational::from_integer(3));
        assert_eq!(lp.primal, vec![Rational::ONE; 3]);
        assert_eq!(lp.cycle_inequalities, Some(true));
    }

    #[test]
    fn vertex_triangle_reduces_to_one() {
        let r = directed_vertex_duality(&triangle(), &set(&[0, 1, 2]), &EngineOptions::default()).unwrap();
        assert_eq!(r.packing.score, 3);
        assert_eq!(r.hitting.elements.len(), 1);
        assert_eq!(r.hitting.reduced_from, Some(3));
        assert_eq!(r.lp.unwrap().dual_support.len(), 3);
        let off = EngineOptions {
            verify: Verification::Off,
            ..Default::default()
        };
        let r = directed_vertex_duality(&triangle(), &set(&[0, 1, 2]), &off).unwrap();
        assert_eq!(r.hitting.elements.len(), 3);
    }

    #[test]
    fn directed_edge_acyclic_and_digons() {
        let dag = DirectedGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let r = directed_edge_duality(&dag, &set(&[0, 1, 2, 3]), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 0);
        assert!(r.hitting.elements.is_empty());
        let two = DirectedGraph::from_edges(3, &[(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        let r = directed_edge_duality(&two, &set(&[0, 2]), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 2);
        assert_eq!(r.oracle_min, Some(2));
        assert_eq!(r.hitting.elements.len(), 2);
    }

    #[test]
    fn lp_on_shared_vertex_triangles() {
        // Triangles 0-1-2 and 0-3-4 through vertex 0; F = both edges into 0.
        let d = DirectedGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let r = directed_edge_duality(&d, &set(&[2, 5]), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 2);
        assert_eq!(r.oracle_max, Some(2));
    }

    /// No cycle passes through vertex 0, yet the LP on the split puts 1/2 on
    /// its split edge: two unbalanced digons at 0 and 2 joined through 2.
    fn handcuff() -> BidirectedGraph {
        BidirectedGraph::from_signed_edges(
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
        .unwrap()
    }

    #[test]
    fn fractional_split_lp_falls_back() {
        let b = handcuff();
        let r = bidirected_vertex_duality(&b, &set(&[0]), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 0);
        assert!(r.hitting.elements.is_empty());
        assert!(r.lp.is_none());
        let fb = r.lp_fallback.unwrap();
        assert_eq!(fb.relaxation, Rational::new(1, 2));
    }

    #[test]
    fn split_packing_matrix_not_one_regular() {
        let split = VertexSplit::new(&handcuff());
        let f: BitSet = [split.split_edge[0]].into_iter().collect();
        let a = packing_lp(split.graph.incidence_matrix(), &f, true).a;
        assert!(!crate::matrix::is_k_regular(&a, 1, 4));
        assert!(crate::matrix::is_k_regular(&split.graph.incidence_matrix(), 2, 4));
    }

    #[test]
    fn bidirected_two_cycle() {
        let b = BidirectedGraph::from_signed_edges(2, &[(0, 1, Plus, Minus), (0, 1, Minus, Plus)]).unwrap();
        let r = bidirected_vertex_duality(&b, &set(&[0]), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 1);
        assert_eq!(r.hitting.elements.len(), 1);
        assert!(r.hitting.elements == set(&[0]) || r.hitting.elements == set(&[1]));
        let empty = bidirected_vertex_duality(&b, &BitSet::new(), &exhaustive()).unwrap();
        assert_eq!(empty.packing.score, 0);
        assert!(empty.hitting.elements.is_empty());
    }

    #[test]
    fn bidirected_image_of_two_triangles() {
        let d = DirectedGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let b = directed_to_bidirected(&d);
        let r = bidirected_vertex_duality(&b, &(0..6).collect(), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 6);
        assert_eq!(r.oracle_min, Some(2));
        assert!(r.hitting.elements.len() <= 6);
    }

    #[test]
    fn directed_vertex_cases() {
        let r = directed_vertex_duality(&triangle(), &set(&[1]), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 1);
        assert_eq!(r.hitting.elements.len(), 1);
        assert_eq!(r.graph_kind, GraphKind::Directed);
        for k in 1..=3 {
            let edges: Vec<(usize, usize)> =
                (0..k).flat_map(|i| [(2 * i, 2 * i + 1), (2 * i + 1, 2 * i)]).collect();
            let d = DirectedGraph::from_edges(2 * k, &edges).unwrap();
            let r = directed_vertex_duality(&d, &(0..2 * k).collect(), &exhaustive()).unwrap();
            assert_eq!(r.packing.score, 2 * k);
            assert_eq!(r.oracle_min, Some(k));
        }
    }

    #[test]
    fn undirected_edge_cases() {
        let c4 = UndirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = undirected_edge_duality(&c4, &set(&[0, 2]), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 2);
        assert_eq!(r.oracle_min, Some(1));
        assert_eq!(r.gf2_rank, Some(1));
        let bow = UndirectedGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let r = undirected_edge_duality(&bow, &set(&[1, 4]), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 2);
        assert_eq!(r.hitting.elements.len(), 2);
        let r = undirected_edge_duality(&bow, &BitSet::new(), &exhaustive()).unwrap();
        assert_eq!(r.packing.score, 0);
    }

    #[test]
    fn undirected_vertex_is_only_compared() {
        let k4 = UndirectedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = oracle_comparison(&k4, Target::Vertices((0..4).collect()), &exhaustive()).unwrap();
        assert!(r.conjectural);
        assert_eq!(r.packing.score, 4);
        assert_eq!(r.hitting.elements.len(), 2);
        assert!(r.inequality_verified);
    }

    #[test]
    fn out_of_range_targets_rejected() {
        assert!(directed_edge_duality(&triangle(), &set(&[7]), &exhaustive()).is_err());
        assert!(directed_vertex_duality(&triangle(), &set(&[3]), &exhaustive()).is_err());
    }
}
