//! Exhaustive ground truth: packings and hitting sets by search over the
//! enumerated cycles, the two-property check for edge-version
//! counterexamples, and two searches (the undirected vertex question and
//! null vectors of bidirected incidence matrices that are not cycle unions).

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::cycles::{decompose_into_cycles, enumerate_cycles, peel_cycles};
use crate::duality::{ElementKind, HittingCertificate, PackingCertificate};
use crate::error::{Error, Result};
use crate::graph::{BidirectedGraph, CycleGraph, Sign, SignedCycle, UndirectedGraph, VertexSplit};
use crate::matrix::next_combination;

/// Explicit limits for the exhaustive searches. Running out is an error,
/// never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_cycles: usize,
    /// Search-tree nodes allowed for one packing or hitting search.
    pub max_subsets: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_cycles: 100_000,
            max_subsets: 1_000_000,
        }
    }
}

/// The prescribed vertices `S` or edges `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Vertices(BitSet),
    Edges(BitSet),
}

impl Target {
    pub fn set(&self) -> &BitSet {
        match self {
            Target::Vertices(s) | Target::Edges(s) => s,
        }
    }

    pub fn kind(&self) -> ElementKind {
        match self {
            Target::Vertices(_) => ElementKind::Vertex,
            Target::Edges(_) => ElementKind::Edge,
        }
    }

    /// Target elements on `c`.
    pub fn on_cycle(&self, c: &SignedCycle) -> BitSet {
        let mut x = elements(c, self.kind());
        x.intersect_with(self.set());
        x
    }

    pub fn meets(&self, c: &SignedCycle) -> bool {
        elements(c, self.kind()).intersects(self.set())
    }
}

/// Vertex set or edge set of a cycle.
pub fn elements(c: &SignedCycle, kind: ElementKind) -> BitSet {
    match kind {
        ElementKind::Vertex => c.vertex_set(),
        ElementKind::Edge => c.edge_set(),
    }
}

fn subset_budget(limit: usize) -> Error {
    Error::BudgetExceeded {
        what: "subset",
        limit,
    }
}

/// Largest `|T ∩ V(C)|` (or `|T ∩ E(C)|`) over families of pairwise
/// disjoint cycles.
pub fn max_packing<G: CycleGraph + ?Sized>(
    graph: &G,
    target: &Target,
    disjointness: ElementKind,
    budget: &EnumerationBudget,
) -> Result<PackingCertificate> {
    let cycles = enumerate_cycles(graph, budget.max_cycles)?;
    max_packing_among(&cycles, target, disjointness, budget.max_subsets)
}

/// [`max_packing`] over a given cycle list. Among optimal families the
/// first one met in the include-first search over the list order wins.
pub fn max_packing_among(
    cycles: &[SignedCycle],
    target: &Target,
    disjointness: ElementKind,
    max_nodes: usize,
) -> Result<PackingCertificate> {
    let cands: Vec<(usize, BitSet, BitSet)> = cycles
        .iter()
        .enumerate()
        .filter(|(_, c)| target.meets(c))
        .map(|(i, c)| (i, elements(c, disjointness), target.on_cycle(c)))
        .collect();
    let mut s = PackSearch {
        cands: &cands,
        cap: target.set().len(),
        best: Vec::new(),
        best_score: 0,
        cur: Vec::new(),
        nodes: 0,
        max_nodes,
    };
    s.go(0, &BitSet::new(), &BitSet::new())?;
    let chosen: Vec<SignedCycle> = s.best.iter().map(|&j| cycles[cands[j].0].clone()).collect();
    Ok(PackingCertificate {
        score: s.best_score,
        cycles: chosen,
        disjointness,
    })
}

struct PackSearch<'a> {
    cands: &'a [(usize, BitSet, BitSet)],
    cap: usize,
    best: Vec<usize>,
    best_score: usize,
    cur: Vec<usize>,
    nodes: usize,
    max_nodes: usize,
}

impl PackSearch<'_> {
    fn go(&mut self, from: usize, used: &BitSet, covered: &BitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(subset_budget(self.max_nodes));
        }
        let score = covered.len();
        if score > self.best_score {
            self.best_score = score;
            self.best = self.cur.clone();
        }
        if self.best_score == self.cap {
            return Ok(());
        }
        let mut bound = score;
        for (_, elems, tgt) in &self.cands[from..] {
            if !elems.intersects(used) {
                bound += tgt.difference_len(covered);
            }
        }
        if bound.min(self.cap) <= self.best_score {
            return Ok(());
        }
        for j in from..self.cands.len() {
            let (_, elems, tgt) = &self.cands[j];
            if elems.intersects(used) || tgt.is_subset(covered) {
                continue;
            }
            let mut u = used.clone();
            u.union_with(elems);
            let mut c = covered.clone();
            c.union_with(tgt);
            self.cur.push(j);
            self.go(j + 1, &u, &c)?;
            self.cur.pop();
            if self.best_score == self.cap {
                break;
            }
        }
        Ok(())
    }
}

/// Smallest vertex (or edge) set meeting every target cycle.
pub fn min_hitting<G: CycleGraph + ?Sized>(
    graph: &G,
    target: &Target,
    kind: ElementKind,
    budget: &EnumerationBudget,
) -> Result<HittingCertificate> {
    let cycles = enumerate_cycles(graph, budget.max_cycles)?;
    min_hitting_among(&cycles, target, kind, budget.max_subsets)
}

/// [`min_hitting`] over a given cycle list, by iterative deepening on the
/// size with branching on the first cycle not yet hit.
pub fn min_hitting_among(
    cycles: &[SignedCycle],
    target: &Target,
    kind: ElementKind,
    max_nodes: usize,
) -> Result<HittingCertificate> {
    let mut sets: Vec<BitSet> = cycles
        .iter()
        .filter(|c| target.meets(c))
        .map(|c| elements(c, kind))
        .collect();
    sets.sort();
    sets.dedup();
    let mut nodes = 0;
    let mut size = 0;
    loop {
        if let Some(found) = hit_search(&sets, &mut BitSet::new(), size, &mut nodes, max_nodes)? {
            return Ok(HittingCertificate {
                kind,
                elements: found,
                hits_all: Some(true),
                reduced_from: None,
            });
        }
        size += 1;
    }
}

fn hit_search(
    sets: &[BitSet],
    chosen: &mut BitSet,
    left: usize,
    nodes: &mut usize,
    max_nodes: usize,
) -> Result<Option<BitSet>> {
    *nodes += 1;
    if *nodes > max_nodes {
        return Err(subset_budget(max_nodes));
    }
    let Some(first) = sets.iter().find(|s| !s.intersects(chosen)) else {
        return Ok(Some(chosen.clone()));
    };
    // Pairwise disjoint unhit cycles each need their own element.
    let mut blocked = BitSet::new();
    let mut need = 0;
    for s in sets.iter().filter(|s| !s.intersects(chosen)) {
        if !s.intersects(&blocked) {
            blocked.union_with(s);
            need += 1;
        }
    }
    if need > left {
        return Ok(None);
    }
    for x in first.iter() {
        chosen.insert(x);
        let r = hit_search(sets, chosen, left - 1, nodes, max_nodes)?;
        chosen.remove(x);
        if r.is_some() {
            return Ok(r);
        }
    }
    Ok(None)
}

/// Whether `set` meets every target cycle.
pub fn verify_hitting<G: CycleGraph + ?Sized>(
    graph: &G,
    set: &BitSet,
    target: &Target,
    kind: ElementKind,
    budget: &EnumerationBudget,
) -> Result<bool> {
    let cycles = enumerate_cycles(graph, budget.max_cycles)?;
    Ok(hits_all_among(&cycles, set, target, kind))
}

pub fn hits_all_among(cycles: &[SignedCycle], set: &BitSet, target: &Target, kind: ElementKind) -> bool {
    cycles
        .iter()
        .filter(|c| target.meets(c))
        .all(|c| elements(c, kind).intersects(set))
}

/// Plain exhaustive packing over all families of the given cycles, without
/// pruning. Exponential; used to re-check reported findings.
pub fn naive_max_packing(cycles: &[SignedCycle], target: &Target, disjointness: ElementKind) -> usize {
    fn rec(
        cycles: &[SignedCycle],
        i: usize,
        used: &BitSet,
        covered: &BitSet,
        target: &Target,
        d: ElementKind,
    ) -> usize {
        if i == cycles.len() {
            return covered.len();
        }
        let mut best = rec(cycles, i + 1, used, covered, target, d);
        let e = elements(&cycles[i], d);
        if !e.intersects(used) {
            let mut u = used.clone();
            u.union_with(&e);
            let mut c = covered.clone();
            c.union_with(&target.on_cycle(&cycles[i]));
            best = best.max(rec(cycles, i + 1, &u, &c, target, d));
        }
        best
    }
    rec(cycles, 0, &BitSet::new(), &BitSet::new(), target, disjointness)
}

/// Smallest hitting set size by trying all subsets of `0..universe` in
/// increasing size.
pub fn naive_min_hitting(
    cycles: &[SignedCycle],
    target: &Target,
    kind: ElementKind,
    universe: usize,
) -> usize {
    for size in 0..=universe {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let set: BitSet = combo.iter().copied().collect();
            if hits_all_among(cycles, &set, target, kind) {
                return size;
            }
            if !next_combination(&mut combo, universe) {
                break;
            }
        }
    }
    universe
}

/// The two properties an edge-version counterexample needs:
/// (1) every family of edge-disjoint cycles uses at most one edge of `F`;
/// (2) no `k` edges meet all `F`-cycles.
pub fn check_counterexample_properties(
    b: &BidirectedGraph,
    f: &BitSet,
    k: usize,
    budget: &EnumerationBudget,
) -> Result<(bool, bool)> {
    let cycles = enumerate_cycles(b, budget.max_cycles)?;
    let target = Target::Edges(f.clone());
    let packing = max_packing_among(&cycles, &target, ElementKind::Edge, budget.max_subsets)?;
    let property1 = packing.score <= 1;
    // Try every edge set of size <= k.
    let sets: Vec<BitSet> = cycles.iter().filter(|c| target.meets(c)).map(|c| c.edge_set()).collect();
    let m = b.edge_count();
    let mut tried = 0usize;
    let mut property2 = !sets.is_empty();
    'sizes: for size in 0..=k.min(m) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if tried > budget.max_subsets {
                return Err(subset_budget(budget.max_subsets));
            }
            let x: BitSet = combo.iter().copied().collect();
            if sets.iter().all(|s| s.intersects(&x)) {
                property2 = false;
                break 'sizes;
            }
            if !next_combination(&mut combo, m) {
                break;
            }
        }
    }
    Ok((property1, property2))
}

/// How a search visits instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every labelled simple graph up to the size limit, with every `S`.
    Exhaustive,
    Sampled { seed: u64, trials: usize },
}

#[derive(Clone, Debug)]
pub struct VertexQuestionWitness {
    pub graph: UndirectedGraph,
    pub s: BitSet,
    pub packing: PackingCertificate,
    pub hitting: HittingCertificate,
}

#[derive(Clone, Debug)]
pub struct VertexQuestionReport {
    pub n_max: usize,
    pub mode: SearchMode,
    pub graphs_checked: usize,
    pub instances_checked: usize,
    /// `(n, graphs, instances)` for each vertex count.
    pub coverage: Vec<(usize, usize, usize)>,
    /// Instances skipped because a budget ran out.
    pub budget_exceeded: usize,
    pub counterexample: Option<VertexQuestionWitness>,
}

/// Looks for an undirected graph and `S` where the best vertex-disjoint
/// packing covers fewer vertices of `S` than the smallest vertex set meeting
/// all `S`-cycles. A finding is re-checked with the naive oracles before it
/// is reported.
pub fn search_vertex_question_counterexample(
    n_max: usize,
    mode: SearchMode,
    budget: &EnumerationBudget,
) -> Result<VertexQuestionReport> {
    let mut report = VertexQuestionReport {
        n_max,
        mode,
        graphs_checked: 0,
        instances_checked: 0,
        coverage: Vec::new(),
        budget_exceeded: 0,
        counterexample: None,
    };
    match mode {
        SearchMode::Exhaustive => {
            for n in 1..=n_max {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                if pairs.len() >= 32 {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "exhaustive search over {n} vertices is out of reach"
                    )));
                }
                let (mut graphs, mut instances) = (0, 0);
                for mask in 0u64..(1 << pairs.len()) {
                    let edges: Vec<(usize, usize)> = (0..pairs.len())
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| pairs[i])
                        .collect();
                    let g = UndirectedGraph::from_edges(n, &edges)?;
                    graphs += 1;
                    let all_s = (0u64..(1 << n)).map(|sm| (0..n).filter(|&v| sm >> v & 1 == 1).collect());
                    instances += check_graph(&g, all_s, budget, &mut report)?;
                    if report.counterexample.is_some() {
                        break;
                    }
                }
                report.graphs_checked += graphs;
                report.instances_checked += instances;
                report.coverage.push((n, graphs, instances));
                if report.counterexample.is_some() {
                    break;
                }
            }
        }
        SearchMode::Sampled { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut per_n = vec![(0usize, 0usize); n_max + 1];
            for _ in 0..trials {
                if n_max == 0 {
                    break;
                }
                let n = rng.gen_range(1..=n_max);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(0.5) {
                            edges.push((u, v));
                        }
                    }
                }
                let s: BitSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                let g = UndirectedGraph::from_edges(n, &edges)?;
                let done = check_graph(&g, core::iter::once(s), budget, &mut report)?;
                report.graphs_checked += 1;
                report.instances_checked += done;
                per_n[n].0 += 1;
                per_n[n].1 += done;
                if report.counterexample.is_some() {
                    break;
                }
            }
            report.coverage = per_n
                .into_iter()
                .enumerate()
                .filter(|(_, (g, _))| *g > 0)
                .map(|(n, (g, i))| (n, g, i))
                .collect();
        }
    }
    Ok(report)
}

/// Checks every `S` for one graph; returns the number of completed checks.
fn check_graph(
    g: &UndirectedGraph,
    subsets: impl Iterator<Item = BitSet>,
    budget: &EnumerationBudget,
    report: &mut VertexQuestionReport,
) -> Result<usize> {
    let cycles = match enumerate_cycles(g, budget.max_cycles) {
        Ok(c) => c,
        Err(Error::BudgetExceeded { .. }) => {
            report.budget_exceeded += 1;
            return Ok(0);
        }
        Err(e) => return Err(e),
    };
    let mut done = 0;
    for s in subsets {
        let target = Target::Vertices(s.clone());
        let packing = max_packing_among(&cycles, &target, ElementKind::Vertex, budget.max_subsets);
        let hitting = min_hitting_among(&cycles, &target, ElementKind::Vertex, budget.max_subsets);
        let (packing, hitting) = match (packing, hitting) {
            (Ok(p), Ok(h)) => (p, h),
            (Err(Error::BudgetExceeded { .. }), _) | (_, Err(Error::BudgetExceeded { .. })) => {
                report.budget_exceeded += 1;
                continue;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        done += 1;
        if packing.score < hitting.elements.len() {
            let naive_pack = naive_max_packing(&cycles, &target, ElementKind::Vertex);
            let naive_hit = naive_min_hitting(&cycles, &target, ElementKind::Vertex, g.vertex_count());
            if naive_pack != packing.score || naive_hit != hitting.elements.len() {
                return Err(Error::Certificate(alloc::format!(
                    "oracles disagree: packing {} vs {naive_pack}, hitting {} vs {naive_hit}",
                    packing.score,
                    hitting.elements.len()
                )));
            }
            report.counterexample = Some(VertexQuestionWitness {
                graph: g.clone(),
                s,
                packing,
                hitting,
            });
            break;
        }
    }
    Ok(done)
}

/// A bidirected graph with a nonempty 0/1 null vector of its incidence
/// matrix whose support is no union of edge-disjoint cycles.
#[derive(Clone, Debug)]
pub struct NullspaceFixture {
    pub graph: BidirectedGraph,
    pub support: BitSet,
    /// What greedy peeling leaves over.
    pub leftover: BitSet,
    /// 1-based index of the random graph that produced the hit.
    pub trial: usize,
}

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Random bidirected graphs on `2..=n_max` vertices, every 0/1 vector in
/// increasing mask order; the first null vector that admits no exact cover
/// by cycles is returned.
pub fn search_nullspace_noncycle_fixture(
    n_max: usize,
    seed: u64,
    trials: usize,
    budget: &EnumerationBudget,
) -> Result<NullspaceFixture> {
    if n_max < 2 {
        return Err(Error::NotFound);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 1..=trials {
        let n = rng.gen_range(2..=n_max);
        let m = rng.gen_range(n..=(2 * n).min(12));
        let edges: Vec<(usize, usize, Sign, Sign)> = (0..m)
            .map(|_| {
                let u = rng.gen_range(0..n);
                let mut v = rng.gen_range(0..n - 1);
                if v >= u {
                    v += 1;
                }
                (u, v, random_sign(&mut rng), random_sign(&mut rng))
            })
            .collect();
        let b = BidirectedGraph::from_signed_edges(n, &edges)?;
        for mask in null_masks(&b) {
            let support: BitSet = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
            if decompose_into_cycles(&b, &support, budget.max_cycles)?.is_none() {
                let leftover = match peel_cycles(&b, &support) {
                    Err(rest) => rest,
                    Ok(_) => {
                        return Err(Error::Certificate(alloc::string::String::from(
                            "greedy peeling decomposed a support the exact search could not",
                        )))
                    }
                };
                return Ok(NullspaceFixture {
                    graph: b,
                    support,
                    leftover,
                    trial,
                });
            }
        }
    }
    Err(Error::NotFound)
}

/// Nonzero 0/1 null vectors of the incidence matrix as edge masks, in
/// increasing order. Needs at most 63 edges.
pub fn null_masks(b: &BidirectedGraph) -> Vec<u64> {
    let (n, m) = (b.vertex_count(), b.edge_count());
    assert!(m < 64, "too many edges for mask enumeration");
    let mut found = Vec::new();
    let mut balance = vec![0i32; n];
    let mut nonzero = 0usize;
    let mut gray = 0u64;
    // Gray code order touches one edge per step.
    for i in 1u64..(1 << m) {
        let e = i.trailing_zeros() as usize;
        let adding = gray >> e & 1 == 0;
        gray ^= 1 << e;
        for (v, s) in b.ends(e).into_iter().zip(b.signs(e)) {
            let before = balance[v] != 0;
            let d = s.as_i64() as i32;
            balance[v] += if adding { d } else { -d };
            let after = balance[v] != 0;
            match (before, after) {
                (false, true) => nonzero += 1,
                (true, false) => nonzero -= 1,
                _ => {}
            }
        }
        if nonzero == 0 {
            found.push(gray);
        }
    }
    found.sort_unstable();
    found
}

/// Result of checking every 0/1 null vector of every split graph in a
/// family.
#[derive(Clone, Debug, Default)]
pub struct SplitSurvey {
    pub graphs: usize,
    pub null_vectors: usize,
    /// Split graphs with a null vector that greedy peeling cannot finish.
    pub failures: Vec<(BidirectedGraph, BitSet)>,
}

/// All bidirected graphs on `1..=n_max` vertices where each vertex pair
/// carries at most `max_multiplicity` edges (a multiset of sign pairs), each
/// split, each nonzero null vector of the split graph peeled.
pub fn survey_split_nullspace(n_max: usize, max_multiplicity: usize) -> Result<SplitSurvey> {
    const SIGNINGS: [(Sign, Sign); 4] = [
        (Sign::Plus, Sign::Plus),
        (Sign::Plus, Sign::Minus),
        (Sign::Minus, Sign::Plus),
        (Sign::Minus, Sign::Minus),
    ];
    // Multisets of sign pairs of size <= max_multiplicity, as index lists.
    let mut options: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_multiplicity {
        let mut next = Vec::new();
        for o in &frontier {
            let lo = o.last().copied().unwrap_or(0);
            for s in lo..SIGNINGS.len() {
                let mut p = o.clone();
                p.push(s);
                next.push(p);
            }
        }
        options.extend(next.iter().cloned());
        frontier = next;
    }
    let mut survey = SplitSurvey::default();
    for n in 1..=n_max {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut choice = vec![0usize; pairs.len()];
        loop {
            let mut edges = Vec::new();
            for (p, &c) in pairs.iter().zip(&choice) {
                for &s in &options[c] {
                    edges.push((p.0, p.1, SIGNINGS[s].0, SIGNINGS[s].1));
                }
            }
            let b = BidirectedGraph::from_signed_edges(n, &edges)?;
            let split = VertexSplit::new(&b);
            survey.graphs += 1;
            for mask in null_masks(&split.graph) {
                survey.null_vectors += 1;
                let support: BitSet = (0..split.graph.edge_count())
                    .filter(|&e| mask >> e & 1 == 1)
                    .collect();
                let ok = match peel_cycles(&split.graph, &support) {
                    Ok(cycles) => is_partition(&split.graph, &cycles, &support),
                    Err(_) => false,
                };
                if !ok {
                    survey.failures.push((split.graph.clone(), support));
                }
            }
            // Odometer over the per-pair choices.
            let mut i = 0;
            while i < choice.len() && choice[i] + 1 == options.len() {
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
            choice[i] += 1;
        }
    }
    Ok(survey)
}

/// Whether `cycles` are valid, pairwise edge-disjoint and cover `support`
/// exactly.
pub fn is_partition<G: CycleGraph + ?Sized>(graph: &G, cycles: &[SignedCycle], support: &BitSet) -> bool {
    let mut covered = BitSet::new();
    for c in cycles {
        if c.validate(graph).is_err() {
            return false;
        }
        let es = c.edge_set();
        if es.intersects(&covered) {
            return false;
        }
        covered.union_with(&es);
    }
    covered == *support
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DirectedGraph;
    use Sign::{Minus, Plus};

    fn b() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    fn set(v: &[usize]) -> BitSet {
        v.iter().copied().collect()
    }

    #[test]
    fn no_cycles_gives_zero_and_empty() {
        let d = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = Target::Vertices(set(&[0, 1, 2]));
        assert_eq!(max_packing(&d, &t, ElementKind::Vertex, &b()).unwrap().score, 0);
        assert!(min_hitting(&d, &t, ElementKind::Vertex, &b()).unwrap().elements.is_empty());
    }

    #[test]
    fn directed_triangle() {
        let d = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let t = Target::Vertices(set(&[0, 1]));
        assert_eq!(max_packing(&d, &t, ElementKind::Vertex, &b()).unwrap().score, 2);
        let all = Target::Vertices(set(&[0, 1, 2]));
        assert_eq!(min_hitting(&d, &all, ElementKind::Vertex, &b()).unwrap().elements.len(), 1);
        assert!(!verify_hitting(&d, &BitSet::new(), &all, ElementKind::Vertex, &b()).unwrap());
        assert!(verify_hitting(&d, &set(&[0, 1, 2]), &all, ElementKind::Vertex, &b()).unwrap());
    }

    #[test]
    fn bowtie_shares_its_centre() {
        let g = UndirectedGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let t = Target::Vertices(set(&[0]));
        assert_eq!(max_packing(&g, &t, ElementKind::Vertex, &b()).unwrap().score, 1);
        // Edge-disjoint triangles through the centre count it once.
        assert_eq!(max_packing(&g, &t, ElementKind::Edge, &b()).unwrap().score, 1);
        let all = Target::Vertices(set(&[0, 1, 2, 3, 4]));
        let p = max_packing(&g, &all, ElementKind::Edge, &b()).unwrap();
        assert_eq!(p.score, 5);
        assert_eq!(p.cycles.len(), 2);
    }

    #[test]
    fn disjoint_digons() {
        for k in 1..=3 {
            let edges: Vec<(usize, usize)> =
                (0..k).flat_map(|i| [(2 * i, 2 * i + 1), (2 * i + 1, 2 * i)]).collect();
            let d = DirectedGraph::from_edges(2 * k, &edges).unwrap();
            let all = Target::Vertices((0..2 * k).collect());
            assert_eq!(max_packing(&d, &all, ElementKind::Vertex, &b()).unwrap().score, 2 * k);
            assert_eq!(min_hitting(&d, &all, ElementKind::Vertex, &b()).unwrap().elements.len(), k);
        }
    }

    #[test]
    fn budgets_are_errors() {
        let g = UndirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let t = Target::Vertices(set(&[0, 1, 2, 3]));
        let tight = EnumerationBudget {
            max_cycles: 100,
            max_subsets: 1,
        };
        assert!(matches!(
            min_hitting(&g, &t, ElementKind::Vertex, &tight),
            Err(Error::BudgetExceeded { what: "subset", .. })
        ));
        let tight = EnumerationBudget {
            max_cycles: 3,
            max_subsets: 100,
        };
        assert!(matches!(
            max_packing(&g, &t, ElementKind::Vertex, &tight),
            Err(Error::BudgetExceeded { what: "cycle", .. })
        ));
    }

    #[test]
    fn counterexample_properties_small_cases() {
        let two_cycle = BidirectedGraph::from_signed_edges(2, &[(0, 1, Plus, Minus), (0, 1, Minus, Plus)]).unwrap();
        assert_eq!(
            check_counterexample_properties(&two_cycle, &set(&[0, 1]), 0, &b()).unwrap(),
            (false, true)
        );
        assert_eq!(
            check_counterexample_properties(&two_cycle, &set(&[0, 1]), 1, &b()).unwrap(),
            (false, false)
        );
        let path = BidirectedGraph::from_signed_edges(3, &[(0, 1, Plus, Minus), (1, 2, Plus, Minus)]).unwrap();
        assert_eq!(
            check_counterexample_properties(&path, &set(&[0]), 0, &b()).unwrap(),
            (true, false)
        );
    }

    #[test]
    fn property_two_is_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(2..5);
            let m = rng.gen_range(2..8);
            let edges: Vec<_> = (0..m)
                .map(|_| {
                    let u = rng.gen_range(0..n);
                    let v = (u + rng.gen_range(1..n)) % n;
                    (u, v, random_sign(&mut rng), random_sign(&mut rng))
                })
                .collect();
            let g = BidirectedGraph::from_signed_edges(n, &edges).unwrap();
            let f: BitSet = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
            let mut prev = true;
            for k in 0..=m {
                let (_, p2) = check_counterexample_properties(&g, &f, k, &b()).unwrap();
                assert!(prev || !p2, "property (2) not monotone");
                prev = p2;
            }
        }
    }

    #[test]
    fn search_oracles_agree_with_naive_ones() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let n = rng.gen_range(2..6);
            let edges: Vec<_> = (0..rng.gen_range(1..9))
                .map(|_| {
                    let u = rng.gen_range(0..n);
                    (u, (u + rng.gen_range(1..n)) % n)
                })
                .collect();
            let d = DirectedGraph::from_edges(n, &edges).unwrap();
            let cycles = enumerate_cycles(&d, 1000).unwrap();
            for kind in [ElementKind::Vertex, ElementKind::Edge] {
                let t = match kind {
                    ElementKind::Vertex => Target::Vertices((0..n).filter(|_| rng.gen_bool(0.5)).collect()),
                    ElementKind::Edge => Target::Edges((0..edges.len()).filter(|_| rng.gen_bool(0.5)).collect()),
                };
                for d_kind in [ElementKind::Vertex, ElementKind::Edge] {
                    let p = max_packing_among(&cycles, &t, d_kind, 1 << 20).unwrap();
                    assert_eq!(p.score, naive_max_packing(&cycles, &t, d_kind));
                    let h = min_hitting_among(&cycles, &t, d_kind, 1 << 20).unwrap();
                    let universe = match d_kind {
                        ElementKind::Vertex => n,
                        ElementKind::Edge => edges.len(),
                    };
                    assert_eq!(h.elements.len(), naive_min_hitting(&cycles, &t, d_kind, universe));
                    assert!(hits_all_among(&cycles, &h.elements, &t, d_kind));
                }
            }
        }
    }

    #[test]
    fn vertex_question_small_exhaustive() {
        let r = search_vertex_question_counterexample(4, SearchMode::Exhaustive, &b()).unwrap();
        assert!(r.counterexample.is_none());
        assert_eq!(r.graphs_checked, 1 + 2 + 8 + 64);
        assert_eq!(r.budget_exceeded, 0);
    }

    #[test]
    fn nullspace_fixture_is_genuine() {
        let fx = search_nullspace_noncycle_fixture(6, 1, 2000, &b()).unwrap();
        assert!(fx.graph.is_null_vector(&fx.support));
        assert!(!fx.support.is_empty());
        assert!(!fx.leftover.is_empty());
        assert!(peel_cycles(&fx.graph, &fx.support).is_err());
    }

    #[test]
    fn null_masks_match_direct_check() {
        let g = BidirectedGraph::from_signed_edges(
            3,
            &[(0, 1, Plus, Minus), (1, 2, Plus, Plus), (0, 2, Minus, Minus), (0, 1, Minus, Plus)],
        )
        .unwrap();
        let direct: Vec<u64> = (1u64..16)
            .filter(|&mask| g.is_null_vector(&(0..4).filter(|&e| mask >> e & 1 == 1).collect()))
            .collect();
        assert_eq!(null_masks(&g), direct);
    }

    #[test]
    fn split_graphs_peel_small_survey() {
        let s = survey_split_nullspace(3, 1).unwrap();
        assert_eq!(s.graphs, 1 + 5 + 125);
        assert!(s.null_vectors > 0);
        assert!(s.failures.is_empty());
    }
}
