//! The cops and robber game and the cop strategy built from the `Y_e` sets
//! of a cycle decomposition.
//!
//! The cops start on `Y_e` for the first tree edge. Holding `Y_f` with the
//! robber on the side of `f` rooted at tree node `u`: if `u` is a leaf they
//! add its vertex and the robber is caught; otherwise, with `f1, f2` the
//! other edges at `u`, they occupy `Y_f ∪ Y_f1 ∪ Y_f2`, wait for the robber
//! to commit to the far side of some `fj`, and drop back to `Y_fj`. Graphs
//! without cycles are handled by a sweep: no cops, then the robber's vertex.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::SignedCycle;

use super::{CycleDecomposition, WidthGraph};

/// Y sets, width and tree of one decomposition.
#[derive(Clone, Debug)]
pub struct CopStrategy {
    pub decomposition: CycleDecomposition,
    /// `Y_e` for every tree edge.
    pub y: Vec<BitSet>,
    pub width: usize,
}

impl CopStrategy {
    pub fn new(decomposition: CycleDecomposition, y: Vec<BitSet>, width: usize) -> Result<Self> {
        if y.len() != decomposition.tree_edges().len() {
            return Err(Error::InvalidArgument(String::from("one Y set per tree edge needed")));
        }
        if let Some((e, s)) = y.iter().enumerate().find(|(_, s)| s.len() > width) {
            return Err(Error::InvalidArgument(format!(
                "Y for tree edge {e} has {} vertices, above width {width}",
                s.len()
            )));
        }
        Ok(Self {
            decomposition,
            y,
            width,
        })
    }

    /// `3 max(k, 1)`.
    pub fn budget(&self) -> usize {
        3 * self.width.max(1)
    }

    fn sweep(&self) -> bool {
        self.width == 0 || self.decomposition.tree_edges().is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Robber {
    /// Every legal reply is explored.
    Adversarial,
    /// The robber's components in order; once the list runs out the first
    /// legal component is taken.
    Scripted(Vec<BitSet>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub round: usize,
    pub cops: BitSet,
    /// `None` once the robber is caught.
    pub robber: Option<BitSet>,
    pub phase: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameOutcome {
    /// The longest line of play (for the adversarial robber) or the scripted
    /// one. Its last round has no robber.
    pub transcript: Vec<Round>,
    pub cop_budget: usize,
    /// Largest cop set over every explored line.
    pub max_cops: usize,
    /// Rounds of the longest line until the catch.
    pub rounds: usize,
    /// Distinct positions explored.
    pub positions: usize,
}

/// Where the strategy is, after the robber has answered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Phase {
    /// Cops on `Y_f`, robber beyond `f` on the side of `toward`.
    Hold { f: usize, toward: usize },
    /// Cops on `Y_f ∪ Y_f1 ∪ Y_f2` around internal node `u`.
    Expand { f1: usize, f2: usize, u: usize },
    /// Cops back on `Y_g`, robber expected beyond `g` from `u`.
    Shrink { g: usize, toward: usize },
    /// Acyclic sweep, cops on nothing yet.
    Sweep,
}

impl Phase {
    fn label(self) -> String {
        match self {
            Phase::Hold { f, toward } => format!("hold e{f} toward node {toward}"),
            Phase::Expand { f1, f2, u } => format!("expand at node {u} over e{f1}, e{f2}"),
            Phase::Shrink { g, toward } => format!("shrink to e{g} toward node {toward}"),
            Phase::Sweep => String::from("sweep"),
        }
    }
}

struct Game<'a, G: ?Sized> {
    graph: &'a G,
    strategy: &'a CopStrategy,
    cycles: &'a [SignedCycle],
    memo: BTreeMap<(BitSet, BitSet, Phase), usize>,
    max_cops: usize,
}

/// What the cops do next from a position.
enum CopMove {
    To(BitSet, Phase),
    /// Final step onto the robber's leaf; no legal reply may exist.
    Catch(BitSet),
}

impl<G: WidthGraph + ?Sized> Game<'_, G> {
    fn components(&self, removed: &BitSet) -> Vec<BitSet> {
        self.graph.components_avoiding(removed, self.cycles)
    }

    /// Legal robber replies from `robber` when the cops go from `from` to `to`.
    fn replies(&self, from: &BitSet, robber: &BitSet, to: &BitSet) -> Vec<BitSet> {
        let mut kept = from.clone();
        kept.intersect_with(to);
        let Some(x) = robber.iter().next() else {
            return Vec::new();
        };
        let Some(region) = self.components(&kept).into_iter().find(|c| c.contains(x)) else {
            return Vec::new();
        };
        if !robber.is_subset(&region) {
            return Vec::new();
        }
        self.components(to).into_iter().filter(|c| c.is_subset(&region)).collect()
    }

    fn initial(&self) -> (BitSet, Vec<BitSet>) {
        let c0 = if self.strategy.sweep() { BitSet::new() } else { self.strategy.y[0].clone() };
        let comps = self.components(&c0);
        (c0, comps)
    }

    /// Phase once the robber has settled in `robber` at the start.
    fn classify_start(&self, robber: &BitSet) -> Result<Phase> {
        if self.strategy.sweep() {
            if robber.len() != 1 {
                return Err(Error::Strategy(String::from("acyclic sweep met a nontrivial component")));
            }
            return Ok(Phase::Sweep);
        }
        let dec = &self.strategy.decomposition;
        let [a, b] = dec.tree_edges()[0];
        for toward in [a, b] {
            if robber.is_subset(&dec.side(0, toward)) {
                return Ok(Phase::Hold { f: 0, toward });
            }
        }
        Err(Error::Strategy(format!("robber component {robber:?} crosses the first cut")))
    }

    fn cop_move(&self, cops: &BitSet, robber: &BitSet, phase: Phase) -> CopMove {
        let dec = &self.strategy.decomposition;
        let y = &self.strategy.y;
        match phase {
            Phase::Sweep => CopMove::Catch(robber.clone()),
            Phase::Shrink { g, toward } => CopMove::To(y[g].clone(), Phase::Hold { f: g, toward }),
            Phase::Hold { f, toward } => {
                if dec.is_leaf(toward) {
                    let mut next = cops.clone();
                    next.insert(toward);
                    return CopMove::Catch(next);
                }
                let others: Vec<usize> = dec.incident(toward).iter().copied().filter(|&e| e != f).collect();
                let (f1, f2) = (others[0], others[1]);
                let mut next = cops.clone();
                next.union_with(&y[f1]);
                next.union_with(&y[f2]);
                CopMove::To(next, Phase::Expand { f1, f2, u: toward })
            }
            Phase::Expand { .. } => unreachable!("expand is resolved on the robber's reply"),
        }
    }

    /// Phase after the robber answered with `reply` to a move into `planned`.
    fn resolve(&self, planned: Phase, reply: &BitSet) -> Result<Phase> {
        let dec = &self.strategy.decomposition;
        match planned {
            Phase::Expand { f1, f2, u } => {
                for fj in [f1, f2] {
                    let far = dec.other(fj, u);
                    if reply.is_subset(&dec.side(fj, far)) {
                        return Ok(Phase::Shrink { g: fj, toward: far });
                    }
                }
                Err(Error::Strategy(format!(
                    "robber component {reply:?} escaped both subtrees at node {u}"
                )))
            }
            Phase::Hold { f, toward } => {
                if reply.is_subset(&dec.side(f, toward)) {
                    Ok(planned)
                } else {
                    Err(Error::Strategy(format!("robber component {reply:?} left the side of e{f}")))
                }
            }
            other => Ok(other),
        }
    }

    fn check_budget(&mut self, cops: &BitSet) -> Result<()> {
        self.max_cops = self.max_cops.max(cops.len());
        if cops.len() > self.strategy.budget() {
            return Err(Error::Strategy(format!(
                "{} cops needed, budget {}",
                cops.len(),
                self.strategy.budget()
            )));
        }
        Ok(())
    }

    /// Rounds until the catch against the best robber from this position.
    fn value(&mut self, cops: &BitSet, robber: &BitSet, phase: Phase) -> Result<usize> {
        let key = (cops.clone(), robber.clone(), phase);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let v = match self.cop_move(cops, robber, phase) {
            CopMove::Catch(next) => {
                self.check_budget(&next)?;
                if !self.replies(cops, robber, &next).is_empty() {
                    return Err(Error::Strategy(String::from("robber survives the final step")));
                }
                1
            }
            CopMove::To(next, planned) => {
                self.check_budget(&next)?;
                let mut best = 0;
                for reply in self.replies(cops, robber, &next) {
                    let p = self.resolve(planned, &reply)?;
                    best = best.max(self.value(&next, &reply, p)?);
                }
                best + 1
            }
        };
        self.memo.insert(key, v);
        Ok(v)
    }
}

/// Plays the strategy against `robber`. The adversarial robber is searched
/// exhaustively; any line on which the strategy breaks down or needs more
/// than `3 max(k, 1)` cops is an error.
pub fn play_cops_and_robbers<G: WidthGraph + ?Sized>(
    graph: &G,
    strategy: &CopStrategy,
    cycles: &[SignedCycle],
    robber: &Robber,
) -> Result<GameOutcome> {
    if strategy.decomposition.leaf_count() != graph.vertex_count() {
        return Err(Error::InvalidArgument(String::from("decomposition does not fit the graph")));
    }
    let mut game = Game {
        graph,
        strategy,
        cycles,
        memo: BTreeMap::new(),
        max_cops: 0,
    };
    let (c0, starts) = game.initial();
    game.check_budget(&c0)?;
    let mut transcript = Vec::new();
    let start_label = if strategy.sweep() { String::from("sweep start") } else { String::from("start on e0") };
    match robber {
        Robber::Adversarial => {
            let mut best: Option<(usize, BitSet, Phase)> = None;
            for r in &starts {
                let p = game.classify_start(r)?;
                let v = game.value(&c0, r, p)?;
                if best.as_ref().is_none_or(|b| v > b.0) {
                    best = Some((v, r.clone(), p));
                }
            }
            transcript.push(Round {
                round: 0,
                cops: c0.clone(),
                robber: best.as_ref().map(|b| b.1.clone()),
                phase: start_label,
            });
            if let Some((_, r, p)) = best {
                longest_line(&mut game, c0, r, p, &mut transcript)?;
            }
        }
        Robber::Scripted(script) => {
            let mut moves = script.iter();
            let r = match moves.next() {
                Some(r) if starts.contains(r) => r.clone(),
                Some(r) => return Err(Error::IllegalMove(format!("{r:?} is not a component at the start"))),
                None => match starts.first() {
                    Some(r) => r.clone(),
                    None => BitSet::new(),
                },
            };
            transcript.push(Round {
                round: 0,
                cops: c0.clone(),
                robber: (!starts.is_empty()).then(|| r.clone()),
                phase: start_label,
            });
            if !starts.is_empty() {
                let phase = game.classify_start(&r)?;
                let (mut cops, mut at, mut phase) = (c0, r, phase);
                loop {
                    let round = transcript.len();
                    match game.cop_move(&cops, &at, phase) {
                        CopMove::Catch(next) => {
                            game.check_budget(&next)?;
                            if !game.replies(&cops, &at, &next).is_empty() {
                                return Err(Error::Strategy(String::from("robber survives the final step")));
                            }
                            transcript.push(Round {
                                round,
                                cops: next,
                                robber: None,
                                phase: String::from("catch"),
                            });
                            break;
                        }
                        CopMove::To(next, planned) => {
                            game.check_budget(&next)?;
                            let legal = game.replies(&cops, &at, &next);
                            let reply = match moves.next() {
                                Some(r) if legal.contains(r) => r.clone(),
                                Some(r) => {
                                    return Err(Error::IllegalMove(format!("{r:?} in round {round}")));
                                }
                                None => match legal.first() {
                                    Some(r) => r.clone(),
                                    None => {
                                        transcript.push(Round {
                                            round,
                                            cops: next,
                                            robber: None,
                                            phase: planned.label(),
                                        });
                                        break;
                                    }
                                },
                            };
                            let p = game.resolve(planned, &reply)?;
                            transcript.push(Round {
                                round,
                                cops: next.clone(),
                                robber: Some(reply.clone()),
                                phase: planned.label(),
                            });
                            cops = next;
                            at = reply;
                            phase = p;
                        }
                    }
                }
            } else {
                transcript.last_mut().unwrap().robber = None;
            }
        }
    }
    Ok(GameOutcome {
        rounds: transcript.len() - 1,
        transcript,
        cop_budget: strategy.budget(),
        max_cops: game.max_cops,
        positions: game.memo.len(),
    })
}

/// Follows the robber's best replies through the memo table.
fn longest_line<G: WidthGraph + ?Sized>(
    game: &mut Game<'_, G>,
    mut cops: BitSet,
    mut at: BitSet,
    mut phase: Phase,
    transcript: &mut Vec<Round>,
) -> Result<()> {
    loop {
        let round = transcript.len();
        match game.cop_move(&cops, &at, phase) {
            CopMove::Catch(next) => {
                transcript.push(Round {
                    round,
                    cops: next,
                    robber: None,
                    phase: String::from("catch"),
                });
                return Ok(());
            }
            CopMove::To(next, planned) => {
                let mut best: Option<(usize, BitSet, Phase)> = None;
                for reply in game.replies(&cops, &at, &next) {
                    let p = game.resolve(planned, &reply)?;
                    let v = game.value(&next, &reply, p)?;
                    if best.as_ref().is_none_or(|b| v > b.0) {
                        best = Some((v, reply, p));
                    }
                }
                let label = planned.label();
                match best {
                    None => {
                        transcript.push(Round {
                            round,
                            cops: next,
                            robber: None,
                            phase: label,
                        });
                        return Ok(());
                    }
                    Some((_, reply, p)) => {
                        transcript.push(Round {
                            round,
                            cops: next.clone(),
                            robber: Some(reply.clone()),
                            phase: label,
                        });
                        cops = next;
                        at = reply;
                        phase = p;
                    }
                }
            }
        }
    }
}
