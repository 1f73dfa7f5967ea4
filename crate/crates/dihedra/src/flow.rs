//! Transport-network decision path: a three-level network per triangulation
//! (supply 1 per face, one lane per corner, demand Δ(e) per edge class),
//! exact blocking-flow maximization, and certificates read off the minimum
//! cut. Capacities are exact rationals throughout; the verdicts here must
//! coincide with the simplex-based ones.

use crate::angles::{excess, AngleAssignment, FaceAngleSolution};
use crate::feasibility::FeasibilityReport;
use crate::scalar::{common_denominator, from_count, rational};
use crate::subcomplex::FaceSet;
use crate::surface::{EdgeId, FaceId, TriangulatedSurface};
use crate::Rational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlowError {
    #[error("epsilon {0} must lie in (0, 1/3] and keep every capacity nonnegative")]
    EpsilonOutOfRange(Rational),
    #[error("the cut does not split into whole levels of a three-level network")]
    MalformedCut,
}

/// A directed capacitated arc. `level` records the tier in a three-level
/// network (1 = source to face, 2 = face to edge, 3 = edge to sink);
/// hand-built networks use 0.
#[derive(Clone, Debug)]
pub struct FlowArc {
    pub from: usize,
    pub to: usize,
    pub capacity: Rational,
    pub level: u8,
}

/// Directed network with a distinguished source and sink. Node indices are
/// dense; arcs are addressed by insertion order.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    n_nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<FlowArc>,
}

impl FlowNetwork {
    pub fn new(n_nodes: usize, source: usize, sink: usize) -> FlowNetwork {
        assert!(source < n_nodes && sink < n_nodes && source != sink);
        FlowNetwork { n_nodes, source, sink, arcs: Vec::new() }
    }

    /// Appends an arc and returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: Rational, level: u8) -> usize {
        assert!(from < self.n_nodes && to < self.n_nodes);
        assert!(!capacity.is_negative(), "capacities are nonnegative");
        self.arcs.push(FlowArc { from, to, capacity, level });
        self.arcs.len() - 1
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn n_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[FlowArc] {
        &self.arcs
    }

    pub fn cut_capacity(&self, cut: &BTreeSet<usize>) -> Rational {
        cut.iter()
            .fold(Rational::zero(), |a, &i| a + self.arcs[i].capacity.clone())
    }
}

// Node layout of the triangulation networks: source, then one node per
// face, then one per edge class, then the sink.
fn face_node(f: FaceId) -> usize {
    1 + f.0
}
fn edge_node(t: &TriangulatedSurface, e: EdgeId) -> usize {
    1 + t.n_faces() + e.0
}

/// Network deciding the nonnegative angle system: every face can receive one
/// unit, every corner can carry one unit, every edge class can discharge
/// Δ(e). Arc order: the face arcs, then one arc per dart (so a self-glued
/// face contributes two parallel arcs), then the edge arcs.
pub fn build_n1(t: &TriangulatedSurface, delta: &AngleAssignment<Rational>) -> FlowNetwork {
    build_network(t, delta, None).expect("no epsilon to range-check")
}

/// Shrunken network deciding the same system with every angle at least
/// `eps`: face supply 1−3ε, corner lanes 1−ε, edge demand Δ(e) minus ε per
/// side of the edge. Angles are recovered as arc flow + ε.
pub fn build_n2(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<Rational>,
    eps: &Rational,
) -> Result<FlowNetwork, FlowError> {
    build_network(t, delta, Some(eps))
}

fn build_network(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<Rational>,
    eps: Option<&Rational>,
) -> Result<FlowNetwork, FlowError> {
    let zero = Rational::zero();
    if let Some(e) = eps {
        if *e <= zero || *e > rational(1, 3) {
            return Err(FlowError::EpsilonOutOfRange(e.clone()));
        }
    }
    let (supply, lane) = match eps {
        None => (Rational::one(), Rational::one()),
        Some(e) => (
            Rational::one() - from_count::<Rational>(3) * e.clone(),
            Rational::one() - e.clone(),
        ),
    };
    let sink = 1 + t.n_faces() + t.n_edges();
    let mut net = FlowNetwork::new(sink + 1, 0, sink);
    for f in t.faces() {
        net.add_arc(0, face_node(f), supply.clone(), 1);
    }
    for d in t.darts() {
        net.add_arc(face_node(d.face()), edge_node(t, t.edge_of(d)), lane.clone(), 2);
    }
    for e in t.edge_ids() {
        let sides = from_count::<Rational>(t.edge(e).dart_count());
        let cap = match eps {
            None => delta.get(e).clone(),
            Some(ep) => delta.get(e).clone() - sides * ep.clone(),
        };
        if cap.is_negative() {
            return Err(FlowError::EpsilonOutOfRange(eps.expect("only shrunken").clone()));
        }
        net.add_arc(edge_node(t, e), sink, cap, 3);
    }
    Ok(net)
}

/// A maximum flow together with the canonical minimum cut: the arcs leading
/// out of the residual-reachable side. The flow value equals the cut
/// capacity exactly.
#[derive(Clone, Debug)]
pub struct FlowOutcome {
    pub value: Rational,
    /// Per-arc flow, parallel to the network's arc list.
    pub flow: Vec<Rational>,
    /// Arc indices crossing the canonical minimum cut, source side to sink
    /// side; each is saturated.
    pub min_cut: BTreeSet<usize>,
}

impl FlowOutcome {
    /// Checks the outcome against the network from scratch: capacity bounds,
    /// conservation at internal nodes, the cut actually severing the sink,
    /// and the value/capacity equality.
    pub fn verify(&self, net: &FlowNetwork) -> Result<(), String> {
        if self.flow.len() != net.arcs.len() {
            return Err("flow vector length mismatch".into());
        }
        for (i, a) in net.arcs.iter().enumerate() {
            if self.flow[i].is_negative() || self.flow[i] > a.capacity {
                return Err(format!("arc {i} flow outside [0, capacity]"));
            }
        }
        let mut balance = vec![Rational::zero(); net.n_nodes];
        for (i, a) in net.arcs.iter().enumerate() {
            balance[a.from] -= self.flow[i].clone();
            balance[a.to] += self.flow[i].clone();
        }
        for u in 0..net.n_nodes {
            if u != net.source && u != net.sink && !balance[u].is_zero() {
                return Err(format!("conservation fails at node {u}"));
            }
        }
        if balance[net.sink] != self.value {
            return Err("value does not match net inflow at the sink".into());
        }
        // the cut must sever every directed source-sink path
        let mut seen = vec![false; net.n_nodes];
        seen[net.source] = true;
        let mut stack = vec![net.source];
        while let Some(u) = stack.pop() {
            for (i, a) in net.arcs.iter().enumerate() {
                if a.from == u && !self.min_cut.contains(&i) && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        if seen[net.sink] {
            return Err("min_cut does not disconnect the sink".into());
        }
        if net.cut_capacity(&self.min_cut) != self.value {
            return Err("cut capacity differs from the flow value".into());
        }
        Ok(())
    }
}

/// Exact maximum flow by shortest-augmenting-path phases with blocking
/// flows. The minimum cut is read off the final residual reachability.
pub fn max_flow(net: &FlowNetwork) -> FlowOutcome {
    let n = net.n_nodes;
    let zero = Rational::zero();
    let mut flow: Vec<Rational> = vec![zero.clone(); net.arcs.len()];
    // half-edges: (arc index, traversed forward?)
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for (i, a) in net.arcs.iter().enumerate() {
        adj[a.from].push((i, true));
        adj[a.to].push((i, false));
    }
    let head = |i: usize, fwd: bool| if fwd { net.arcs[i].to } else { net.arcs[i].from };
    let tail = |i: usize, fwd: bool| if fwd { net.arcs[i].from } else { net.arcs[i].to };
    let residual = |flow: &[Rational], i: usize, fwd: bool| {
        if fwd {
            net.arcs[i].capacity.clone() - flow[i].clone()
        } else {
            flow[i].clone()
        }
    };

    let layer = |flow: &[Rational]| {
        let mut depth = vec![usize::MAX; n];
        depth[net.source] = 0;
        let mut queue = VecDeque::from([net.source]);
        while let Some(u) = queue.pop_front() {
            for &(i, fwd) in &adj[u] {
                let v = head(i, fwd);
                if depth[v] == usize::MAX && residual(flow, i, fwd) > zero {
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        depth
    };

    loop {
        let depth = layer(&flow);
        if depth[net.sink] == usize::MAX {
            break;
        }
        // one blocking flow in the layered graph, with a cursor per node so
        // every arc is abandoned at most once per phase
        let mut cursor = vec![0usize; n];
        'augment: loop {
            let mut path: Vec<(usize, bool)> = Vec::new();
            let mut u = net.source;
            while u != net.sink {
                let Some(&(i, fwd)) = adj[u].get(cursor[u]) else {
                    match path.pop() {
                        Some((i, fwd)) => {
                            u = tail(i, fwd);
                            cursor[u] += 1;
                        }
                        None => break 'augment,
                    }
                    continue;
                };
                let v = head(i, fwd);
                if depth[v] == depth[u] + 1 && residual(&flow, i, fwd) > zero {
                    path.push((i, fwd));
                    u = v;
                } else {
                    cursor[u] += 1;
                }
            }
            let push = path
                .iter()
                .map(|&(i, fwd)| residual(&flow, i, fwd))
                .min()
                .expect("source differs from sink");
            for &(i, fwd) in &path {
                if fwd {
                    flow[i] += push.clone();
                } else {
                    flow[i] -= push.clone();
                }
            }
        }
    }

    let depth = layer(&flow);
    let min_cut: BTreeSet<usize> = net
        .arcs
        .iter()
        .enumerate()
        .filter(|(_, a)| depth[a.from] != usize::MAX && depth[a.to] == usize::MAX)
        .map(|(i, _)| i)
        .collect();
    let value = net
        .arcs
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (i, a)| {
            if a.to == net.sink {
                acc + flow[i].clone()
            } else if a.from == net.sink {
                acc - flow[i].clone()
            } else {
                acc
            }
        });
    let outcome = FlowOutcome { value, flow, min_cut };
    debug_assert_eq!(outcome.verify(net), Ok(()));
    outcome
}

/// The face classes a minimum cut of a three-level network sorts the
/// triangulation into: faces severed at the source, faces severed across
/// all three corner lanes, and the rest, whose incident edge arcs all cross
/// the cut.
#[derive(Clone, Debug, PartialEq)]
pub struct CutDecomposition {
    pub source_cut: FaceSet,
    pub corner_cut: FaceSet,
    /// F₃ in the capacity identity; its incident edges are exactly the cut's
    /// third-level arcs, so its excess is what the cut charges.
    pub violating: FaceSet,
    pub capacity: Rational,
}

/// Splits a minimum cut by level and checks it is a whole-level cut: the
/// per-face supply arcs of `source_cut`, all three lanes of each
/// `corner_cut` face, and the edge arcs of exactly the edges incident to
/// `violating`. The returned capacity always equals the outcome's value.
pub fn cut_capacity_decomposition(
    t: &TriangulatedSurface,
    net: &FlowNetwork,
    outcome: &FlowOutcome,
) -> Result<CutDecomposition, FlowError> {
    let nf = t.n_faces();
    let ne = t.n_edges();
    if net.n_nodes != 2 + nf + ne || net.arcs.len() != 4 * nf + ne {
        return Err(FlowError::MalformedCut);
    }
    for (i, a) in net.arcs.iter().enumerate() {
        let fits = if i < nf {
            a.level == 1 && a.from == net.source && a.to == face_node(FaceId(i))
        } else if i < 4 * nf {
            let d = crate::surface::Dart(i - nf);
            a.level == 2
                && a.from == face_node(d.face())
                && a.to == edge_node(t, t.edge_of(d))
        } else {
            a.level == 3 && a.from == edge_node(t, EdgeId(i - 4 * nf)) && a.to == net.sink
        };
        if !fits {
            return Err(FlowError::MalformedCut);
        }
    }
    let mut source_cut = FaceSet::new();
    let mut lane_count = vec![0u8; nf];
    let mut cut_edges: BTreeSet<EdgeId> = BTreeSet::new();
    for &i in &outcome.min_cut {
        if i < nf {
            source_cut.insert(FaceId(i));
        } else if i < 4 * nf {
            lane_count[(i - nf) / 3] += 1;
        } else {
            cut_edges.insert(EdgeId(i - 4 * nf));
        }
    }
    let mut corner_cut = FaceSet::new();
    let mut violating = FaceSet::new();
    for f in t.faces() {
        match (source_cut.contains(f), lane_count[f.0]) {
            (true, 0) => {}
            (false, 3) => corner_cut.insert(f),
            (false, 0) => violating.insert(f),
            _ => return Err(FlowError::MalformedCut),
        }
    }
    if violating.edges_incident(t) != cut_edges {
        return Err(FlowError::MalformedCut);
    }
    let capacity = net.cut_capacity(&outcome.min_cut);
    assert_eq!(capacity, outcome.value, "minimum cut must price the flow");
    Ok(CutDecomposition { source_cut, corner_cut, violating, capacity })
}

/// The default strict margin: 1 / (common denominator of Δ · edge count),
/// capped at 1/3. Small enough that the strict network verdict coincides
/// with the exact-margin simplex verdict (any positive excess is at least
/// 1/denominator, and an edge set charges at most one outside lane per
/// edge), and small enough to keep all shrunken capacities nonnegative.
pub fn auto_epsilon(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<Rational>,
) -> Rational {
    let denom = common_denominator(t.edge_ids().map(|e| delta.get(e)));
    let fine = Rational::new(1.into(), denom * num_bigint::BigInt::from(t.n_edges().max(1)));
    fine.min(rational(1, 3))
}

/// Decides the angle system by maximum flow. Non-strict asks for a
/// nonnegative solution with exact face and edge sums (zero angles allowed;
/// margin 0); strict shrinks the network by `auto_epsilon` and certifies
/// every angle at least that much — the margin reports the enforced bound,
/// not the best possible one. Infeasibility carries the face set whose
/// incident edges the minimum cut chose, or the full set when only the
/// total supply/demand balance fails.
pub fn decide_flow(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<Rational>,
    strict: bool,
) -> FeasibilityReport<Rational> {
    let eps = strict.then(|| auto_epsilon(t, delta));
    decide_on(t, delta, eps.as_ref()).expect("auto epsilon is always in range")
}

/// Strict decision at a caller-chosen margin: Feasible exactly when a
/// solution with every angle at least `eps` exists.
pub fn decide_flow_with_epsilon(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<Rational>,
    eps: &Rational,
) -> Result<FeasibilityReport<Rational>, FlowError> {
    decide_on(t, delta, Some(eps))
}

fn decide_on(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<Rational>,
    eps: Option<&Rational>,
) -> Result<FeasibilityReport<Rational>, FlowError> {
    let net = build_network(t, delta, eps)?;
    let nf = t.n_faces();
    let shift = eps.cloned().unwrap_or_else(Rational::zero);
    let target = from_count::<Rational>(nf)
        * (Rational::one() - from_count::<Rational>(3) * shift.clone());
    let balanced = delta.total() == from_count(nf);
    let outcome = max_flow(&net);
    if outcome.value == target && balanced {
        // the target saturates every supply arc, and balance forces every
        // edge arc tight, so the shifted read-off solves the system exactly
        let angles = t
            .faces()
            .map(|f| {
                [0, 1, 2].map(|s| outcome.flow[nf + 3 * f.0 + s].clone() + shift.clone())
            })
            .collect();
        let solution = FaceAngleSolution::new(angles);
        debug_assert!(t
            .edge_ids()
            .all(|e| solution.edge_sum(t, e) == *delta.get(e)));
        Ok(FeasibilityReport::Feasible { solution, margin: shift })
    } else if outcome.value < target {
        let dec = cut_capacity_decomposition(t, &net, &outcome)
            .expect("the network was built here");
        let worst = excess(t, delta, &dec.violating);
        Ok(FeasibilityReport::Infeasible {
            violating: Some((dec.violating, worst)),
            dual: None,
        })
    } else {
        // full throughput but mismatched totals: the equality system still
        // has no solution, and the whole surface certifies it
        let full = FaceSet::all(t);
        let worst = excess(t, delta, &full);
        Ok(FeasibilityReport::Infeasible { violating: Some((full, worst)), dual: None })
    }
}
