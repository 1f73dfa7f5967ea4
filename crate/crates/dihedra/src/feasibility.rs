//! Existence of strictly positive corner angles with prescribed edge sums,
//! decided four independent ways: exact LP, brute-force excess enumeration,
//! connected-piece enumeration, and the curvature/cutset criteria.

use crate::angles::{excess, AngleAssignment, FaceAngleSolution};
use crate::lp::{solve, GeneralProgram, LpOutcome, Relation, Sense};
use crate::scalar::{from_count, Scalar};
use crate::subcomplex::{
    enumerate_simple_subcomplexes, is_coterminous, ClosedSubcomplex, FaceSet, SubcomplexError,
};
use crate::surface::{EdgeId, FaceId, TriangulatedSurface, VertexId};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FeasibilityError {
    #[error("brute-force oracle limited to {limit} faces, surface has {got}")]
    OracleLimitExceeded { limit: usize, got: usize },
    #[error("the surface is closed; boundary relaxation needs a boundary")]
    NoBoundary,
    #[error("the surface is not a disk")]
    NotADisk,
    #[error("boundary angles must be given for exactly the boundary vertices")]
    BoundaryAngleKeys,
    #[error(transparent)]
    Subcomplex(#[from] SubcomplexError),
}

pub const ORACLE_LIMIT: usize = 20;

/// Which equation system a dual certificate refutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// face sums 1, edge sums exactly Δ
    Exact,
    /// face sums 1, interior sums exactly Δ, boundary sums strictly below Δ
    RelaxedBoundary,
}

/// Row multipliers (one per face, one per edge) proving that no strictly
/// positive solution exists: `face[t] + edge[e] <= 0` for every corner's
/// (face, opposite edge) pair, the margin column is nonpositive, and the
/// objective `Σ face + Σ Δ(e)·edge` is nonnegative — with at least one of
/// the last two strict, which a solvable system cannot support.
#[derive(Clone, Debug, PartialEq)]
pub struct DualWitness<S> {
    pub kind: SystemKind,
    pub face_potential: Vec<S>,
    pub edge_potential: Vec<S>,
}

impl<S: Scalar> DualWitness<S> {
    pub fn objective(&self, t: &TriangulatedSurface, delta: &AngleAssignment<S>) -> S {
        let faces: S = self
            .face_potential
            .iter()
            .fold(S::zero(), |a, u| a + u.clone());
        t.edge_ids().fold(faces, |a, e| {
            a + delta.get(e).clone() * self.edge_potential[e.0].clone()
        })
    }

    /// Coefficient of the shared strictness margin: 3 per face row plus the
    /// margin multiplicity of each edge row.
    fn margin_row(&self, t: &TriangulatedSurface) -> S {
        let mut acc = S::zero();
        for u in &self.face_potential {
            acc = acc + from_count::<S>(3) * u.clone();
        }
        for e in t.edge_ids() {
            let darts = t.edge(e).dart_count();
            let coeff = match self.kind {
                SystemKind::Exact => darts,
                // a boundary edge's slack also carries the margin
                SystemKind::RelaxedBoundary => 2,
            };
            acc = acc + from_count::<S>(coeff) * self.edge_potential[e.0].clone();
        }
        acc
    }

    pub fn verify(&self, t: &TriangulatedSurface, delta: &AngleAssignment<S>) -> bool {
        if self.face_potential.len() != t.n_faces() || self.edge_potential.len() != t.n_edges() {
            return false;
        }
        for c in t.corners() {
            let e = t.edge_of(c.opposite_dart());
            let sum = self.face_potential[c.face().0].clone() + self.edge_potential[e.0].clone();
            if sum > S::zero() {
                return false;
            }
        }
        if self.kind == SystemKind::RelaxedBoundary {
            // slack columns: boundary-edge multipliers must be nonpositive
            for e in t.edge_ids() {
                if t.edge(e).is_boundary() && self.edge_potential[e.0] > S::zero() {
                    return false;
                }
            }
        }
        let margin = self.margin_row(t);
        let objective = self.objective(t, delta);
        margin <= S::zero()
            && objective >= S::zero()
            && (objective > S::zero() || margin < S::zero())
    }
}

/// Outcome of a strict-feasibility decision, certificates included.
#[derive(Clone, Debug, PartialEq)]
pub enum FeasibilityReport<S> {
    Feasible {
        solution: FaceAngleSolution<S>,
        /// The maximal uniform margin: every returned angle (and, in relaxed
        /// mode, every boundary slack) is at least this much.
        margin: S,
    },
    Infeasible {
        /// A face set whose excess refutes the instance: a proper nonempty
        /// set with excess <= 0, or the full set with excess != 0 (in
        /// relaxed mode, <= 0).
        violating: Option<(FaceSet, S)>,
        dual: Option<DualWitness<S>>,
    },
}

impl<S> FeasibilityReport<S> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityReport::Feasible { .. })
    }

    pub fn solution(&self) -> Option<&FaceAngleSolution<S>> {
        match self {
            FeasibilityReport::Feasible { solution, .. } => Some(solution),
            FeasibilityReport::Infeasible { .. } => None,
        }
    }
}

/// The plain (non-strict) equation system: one variable per corner, all
/// nonnegative; face rows sum to 1 and edge rows to Δ. Minimizes 0 — its
/// role is to be handed to `dualize` or solved for plain feasibility.
pub fn build_program_l<S: Scalar>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
) -> GeneralProgram<S> {
    let n = 3 * t.n_faces();
    let mut rows = Vec::new();
    for f in t.faces() {
        let mut row = vec![S::zero(); n];
        for s in 0..3 {
            row[3 * f.0 + s] = S::one();
        }
        rows.push((row, Relation::Eq, S::one()));
    }
    for e in t.edge_ids() {
        let mut row = vec![S::zero(); n];
        for d in t.edge(e).darts() {
            row[d.0] = S::one();
        }
        rows.push((row, Relation::Eq, delta.get(e).clone()));
    }
    GeneralProgram {
        sense: Sense::Minimize,
        objective: vec![S::zero(); n],
        rows,
        free: vec![false; n],
    }
}

/// The margin-maximizing system: corner angle x = β + ε with β >= 0, and in
/// relaxed mode boundary slack = σ + ε. Variables are [β.., ε, σ..].
fn margin_system<S: Scalar>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
    kind: SystemKind,
) -> GeneralProgram<S> {
    let nb = 3 * t.n_faces();
    let boundary: Vec<EdgeId> = match kind {
        SystemKind::Exact => Vec::new(),
        SystemKind::RelaxedBoundary => t
            .edge_ids()
            .filter(|&e| t.edge(e).is_boundary())
            .collect(),
    };
    let n = nb + 1 + boundary.len();
    let eps = nb;
    let mut rows = Vec::new();
    for f in t.faces() {
        let mut row = vec![S::zero(); n];
        for s in 0..3 {
            row[3 * f.0 + s] = S::one();
        }
        row[eps] = from_count(3);
        rows.push((row, Relation::Eq, S::one()));
    }
    for e in t.edge_ids() {
        let mut row = vec![S::zero(); n];
        for d in t.edge(e).darts() {
            row[d.0] = S::one();
        }
        let mut margin_mult = t.edge(e).dart_count();
        if let Some(k) = boundary.iter().position(|&b| b == e) {
            row[nb + 1 + k] = S::one();
            margin_mult += 1;
        }
        row[eps] = from_count(margin_mult);
        rows.push((row, Relation::Eq, delta.get(e).clone()));
    }
    let mut objective = vec![S::zero(); n];
    objective[eps] = S::one();
    GeneralProgram {
        sense: Sense::Maximize,
        objective,
        rows,
        free: vec![false; n],
    }
}

/// Search the sets cut out by thresholding the face potentials for one with
/// nonpositive excess; `relaxed` also rejects a nonpositive total and scans
/// sublevel sets.
fn violating_from_potentials<S: Scalar>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
    u: &[S],
    relaxed: bool,
) -> Option<(FaceSet, S)> {
    let full = FaceSet::all(t);
    let full_excess = excess(t, delta, &full);
    let full_bad = if relaxed {
        full_excess <= S::zero()
    } else {
        !full_excess.is_zero()
    };
    if full_bad {
        return Some((full, full_excess));
    }
    let mut values: Vec<&S> = u.iter().collect();
    values.sort_by(|a, b| a.partial_cmp(b).expect("potentials are ordered"));
    values.dedup();
    let candidates = values.iter().skip(1).map(|&lam| {
        FaceSet::from_iter(t.faces().filter(|f| u[f.0] >= *lam))
    });
    let sublevel = values.iter().rev().skip(1).map(|&lam| {
        FaceSet::from_iter(t.faces().filter(|f| u[f.0] <= *lam))
    });
    let scan: Vec<FaceSet> = if relaxed {
        candidates.chain(sublevel).collect()
    } else {
        candidates.collect()
    };
    for set in scan {
        if set.is_empty() || set.len() == t.n_faces() {
            continue;
        }
        let x = excess(t, delta, &set);
        if x <= S::zero() {
            return Some((set, x));
        }
    }
    None
}

fn decide_margin_system<S: Scalar + 'static>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
    kind: SystemKind,
) -> FeasibilityReport<S> {
    let program = margin_system(t, delta, kind);
    let std = program.to_standard_form();
    let nb = 3 * t.n_faces();
    match solve(&std.lp).expect("well-formed system") {
        LpOutcome::Optimal { point, value, dual } => {
            let margin = std.recover_value(value);
            let vars = std.recover_point(&point);
            if margin > S::zero() {
                let angles = t
                    .faces()
                    .map(|f| {
                        [
                            vars[3 * f.0].clone() + margin.clone(),
                            vars[3 * f.0 + 1].clone() + margin.clone(),
                            vars[3 * f.0 + 2].clone() + margin.clone(),
                        ]
                    })
                    .collect();
                let solution = FaceAngleSolution::new(angles);
                // exact mode meets every edge sum; relaxed mode undershoots
                // boundary sums by design, so only spot-check it. The slack
                // (a sliver of the achieved margin) is zero-cost for exact
                // scalars and absorbs roundoff for floating ones.
                debug_assert!({
                    let tol = margin.clone() / crate::scalar::from_count(1 << 20);
                    match kind {
                        SystemKind::Exact => solution.verify_within(t, delta, tol).is_ok(),
                        SystemKind::RelaxedBoundary => t.edge_ids().all(|e| {
                            let s = solution.edge_sum(t, e);
                            let miss = s - delta.get(e).clone();
                            if t.edge(e).is_boundary() {
                                miss < tol
                            } else {
                                miss.abs() <= tol
                            }
                        }),
                    }
                });
                return FeasibilityReport::Feasible { solution, margin };
            }
            // The minimization dual of the standardized program is exactly
            // the refuting multiplier vector (no sign flip).
            let witness = DualWitness {
                kind,
                face_potential: dual[..t.n_faces()].to_vec(),
                edge_potential: dual[t.n_faces()..].to_vec(),
            };
            debug_assert!(witness.verify(t, delta));
            let violating = violating_from_potentials(
                t,
                delta,
                &witness.face_potential,
                kind == SystemKind::RelaxedBoundary,
            );
            if kind == SystemKind::Exact {
                debug_assert!(violating.is_some(), "threshold scan must find a witness");
            }
            FeasibilityReport::Infeasible {
                violating,
                dual: Some(witness),
            }
        }
        LpOutcome::Infeasible { farkas } => {
            let witness = DualWitness {
                kind,
                face_potential: farkas[..t.n_faces()].to_vec(),
                edge_potential: farkas[t.n_faces()..].to_vec(),
            };
            debug_assert!(witness.verify(t, delta));
            let violating = violating_from_potentials(
                t,
                delta,
                &witness.face_potential,
                kind == SystemKind::RelaxedBoundary,
            );
            if kind == SystemKind::Exact {
                debug_assert!(violating.is_some(), "threshold scan must find a witness");
            }
            FeasibilityReport::Infeasible {
                violating,
                dual: Some(witness),
            }
        }
        LpOutcome::Unbounded { .. } => {
            let _ = nb;
            unreachable!("face rows bound the margin by 1/3")
        }
    }
}

/// Decide strict feasibility by maximizing the uniform margin ε and reading
/// the answer off the exact optimum.
pub fn decide_lp<S: Scalar + 'static>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
) -> FeasibilityReport<S> {
    decide_margin_system(t, delta, SystemKind::Exact)
}

/// Like `decide_lp`, but boundary edges only cap their opposite angle
/// (strictly) instead of pinning it. Feasible exactly when every nonempty
/// face set — the full one included — has positive excess.
pub fn decide_relaxed_boundary<S: Scalar + 'static>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
) -> Result<FeasibilityReport<S>, FeasibilityError> {
    if t.is_closed() {
        return Err(FeasibilityError::NoBoundary);
    }
    Ok(decide_margin_system(t, delta, SystemKind::RelaxedBoundary))
}

/// Verdict of an excess-positivity scan, with the tightest set examined.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionsVerdict<S> {
    pub feasible: bool,
    /// Minimal-excess proper nonempty face set among those examined.
    pub worst: Option<(FaceSet, S)>,
}

/// Every proper nonempty face set must have positive excess and the full
/// set excess zero. Exponential; refuses above `limit` faces.
pub fn check_conditions_bruteforce_with_limit<S: Scalar>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
    limit: usize,
) -> Result<ConditionsVerdict<S>, FeasibilityError> {
    let n = t.n_faces();
    if n > limit {
        return Err(FeasibilityError::OracleLimitExceeded { limit, got: n });
    }
    let mut worst: Option<(FaceSet, S)> = None;
    for mask in 1..(1u64 << n) - 1 {
        let set = FaceSet::from_iter((0..n).filter(|i| mask >> i & 1 == 1).map(FaceId));
        let x = excess(t, delta, &set);
        if worst.as_ref().map_or(true, |(_, w)| x < *w) {
            worst = Some((set, x));
        }
    }
    let proper_ok = worst.as_ref().map_or(true, |(_, w)| *w > S::zero());
    let feasible = proper_ok && excess(t, delta, &FaceSet::all(t)).is_zero();
    Ok(ConditionsVerdict { feasible, worst })
}

pub fn check_conditions_bruteforce<S: Scalar>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
) -> Result<ConditionsVerdict<S>, FeasibilityError> {
    check_conditions_bruteforce_with_limit(t, delta, ORACLE_LIMIT)
}

/// Same verdict from a smaller search: positivity needs to be checked only
/// on face sets that are dual-connected with dual-connected complement.
pub fn check_conditions_simple<S: Scalar>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
) -> Result<ConditionsVerdict<S>, FeasibilityError> {
    let mut worst: Option<(FaceSet, S)> = None;
    for set in enumerate_simple_subcomplexes(t)? {
        let x = excess(t, delta, &set);
        if worst.as_ref().map_or(true, |(_, w)| x < *w) {
            worst = Some((set, x));
        }
    }
    let proper_ok = worst.as_ref().map_or(true, |(_, w)| *w > S::zero());
    let feasible = proper_ok && excess(t, delta, &FaceSet::all(t)).is_zero();
    Ok(ConditionsVerdict { feasible, worst })
}

/// Slack of the curvature inequality
/// `Σ_{E′(F)} n_F(e) δ′(e) >= 2χ(F) − K(F)` for a closed subcomplex, in
/// π-units. Zero exactly at the full complex (Gauss–Bonnet). Panics if the
/// internal identity tying K(F) to the subcomplex's edge total fails —
/// that would be a construction bug, not a property of the input.
pub fn check_kappa<S: Scalar>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
    f: &ClosedSubcomplex,
) -> S {
    let frontier_term = f
        .frontier(t)
        .into_iter()
        .fold(S::zero(), |a, (e, n)| {
            a + from_count::<S>(n as usize) * delta.exterior(e)
        });
    let two = from_count::<S>(2);
    let chi = f.euler_characteristic();
    let two_chi = if chi >= 0 {
        two.clone() * from_count::<S>(chi as usize)
    } else {
        -(two.clone() * from_count::<S>((-chi) as usize))
    };
    let kappa = delta.total_curvature(t, f);
    // K(F) = 2χ(F) + 2(Σ_{E(F)} Δ − |F(F)|) − Σ_{E′(F)} n δ′
    let edge_total = f
        .edges()
        .iter()
        .fold(S::zero(), |a, &e| a + delta.get(e).clone());
    let identity = two_chi.clone()
        + two.clone() * (edge_total - from_count::<S>(f.faces().len()))
        - frontier_term.clone();
    assert!(
        kappa == identity,
        "curvature bookkeeping identity violated: K = {kappa}, reconstructed {identity}"
    );
    frontier_term - (two_chi - kappa)
}

/// Positive corner angles with prescribed per-vertex corner totals (for an
/// interior vertex, its cone angle; for a boundary vertex, its convex
/// position angle) and an optional Delaunay cap Σ <= 1 on interior edges.
pub fn cone_angle_problem<S: Scalar + 'static>(
    t: &TriangulatedSurface,
    corner_totals: &[S],
    delaunay_cap: bool,
) -> FeasibilityReport<S> {
    assert_eq!(corner_totals.len(), t.n_vertices());
    let nb = 3 * t.n_faces();
    let eps = nb;
    let n = nb + 1;
    let mut rows = Vec::new();
    for f in t.faces() {
        let mut row = vec![S::zero(); n];
        for s in 0..3 {
            row[3 * f.0 + s] = S::one();
        }
        row[eps] = from_count(3);
        rows.push((row, Relation::Eq, S::one()));
    }
    for v in t.vertex_ids() {
        let mut row = vec![S::zero(); n];
        let corners = &t.vertex(v).corners;
        for c in corners {
            row[3 * c.face().0 + c.slot()] = S::one();
        }
        row[eps] = from_count(corners.len());
        rows.push((row, Relation::Eq, corner_totals[v.0].clone()));
    }
    if delaunay_cap {
        for e in t.edge_ids() {
            if t.edge(e).is_boundary() {
                continue;
            }
            let mut row = vec![S::zero(); n];
            for d in t.edge(e).darts() {
                row[d.0] = S::one();
            }
            row[eps] = from_count(2);
            rows.push((row, Relation::Le, S::one()));
        }
    }
    let mut objective = vec![S::zero(); n];
    objective[eps] = S::one();
    let program = GeneralProgram {
        sense: Sense::Maximize,
        objective,
        rows,
        free: vec![false; n],
    };
    let std = program.to_standard_form();
    match solve(&std.lp).expect("well-formed system") {
        LpOutcome::Optimal { point, value, .. } => {
            let margin = std.recover_value(value);
            if margin > S::zero() {
                let vars = std.recover_point(&point);
                let angles = t
                    .faces()
                    .map(|f| {
                        [
                            vars[3 * f.0].clone() + margin.clone(),
                            vars[3 * f.0 + 1].clone() + margin.clone(),
                            vars[3 * f.0 + 2].clone() + margin.clone(),
                        ]
                    })
                    .collect();
                FeasibilityReport::Feasible {
                    solution: FaceAngleSolution::new(angles),
                    margin,
                }
            } else {
                FeasibilityReport::Infeasible {
                    violating: None,
                    dual: None,
                }
            }
        }
        LpOutcome::Infeasible { .. } => FeasibilityReport::Infeasible {
            violating: None,
            dual: None,
        },
        LpOutcome::Unbounded { .. } => unreachable!("face rows bound the margin"),
    }
}

/// Strict edge-sum system for a flat piece: interior vertices must close up
/// to a full turn, and each boundary vertex meets its prescribed convex
/// position angle (π-units, the convention that a straight boundary vertex
/// reads 1).
pub fn decide_with_boundary_angles<S: Scalar + 'static>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
    boundary_angles: &BTreeMap<VertexId, S>,
) -> Result<FeasibilityReport<S>, FeasibilityError> {
    let boundary: BTreeSet<VertexId> = t
        .vertex_ids()
        .filter(|&v| t.vertex(v).on_boundary)
        .collect();
    if boundary_angles.keys().copied().collect::<BTreeSet<_>>() != boundary {
        return Err(FeasibilityError::BoundaryAngleKeys);
    }
    let nb = 3 * t.n_faces();
    let eps = nb;
    let n = nb + 1;
    let mut rows = Vec::new();
    for f in t.faces() {
        let mut row = vec![S::zero(); n];
        for s in 0..3 {
            row[3 * f.0 + s] = S::one();
        }
        row[eps] = from_count(3);
        rows.push((row, Relation::Eq, S::one()));
    }
    for e in t.edge_ids() {
        let mut row = vec![S::zero(); n];
        for d in t.edge(e).darts() {
            row[d.0] = S::one();
        }
        row[eps] = from_count(t.edge(e).dart_count());
        rows.push((row, Relation::Eq, delta.get(e).clone()));
    }
    for v in t.vertex_ids() {
        let mut row = vec![S::zero(); n];
        let corners = &t.vertex(v).corners;
        for c in corners {
            row[3 * c.face().0 + c.slot()] = S::one();
        }
        row[eps] = from_count(corners.len());
        let target = match boundary_angles.get(&v) {
            Some(lam) => lam.clone(),
            None => from_count(2),
        };
        rows.push((row, Relation::Eq, target));
    }
    let mut objective = vec![S::zero(); n];
    objective[eps] = S::one();
    let program = GeneralProgram {
        sense: Sense::Maximize,
        objective,
        rows,
        free: vec![false; n],
    };
    let std = program.to_standard_form();
    Ok(match solve(&std.lp).expect("well-formed system") {
        LpOutcome::Optimal { point, value, .. } => {
            let margin = std.recover_value(value);
            if margin > S::zero() {
                let vars = std.recover_point(&point);
                let angles = t
                    .faces()
                    .map(|f| {
                        [
                            vars[3 * f.0].clone() + margin.clone(),
                            vars[3 * f.0 + 1].clone() + margin.clone(),
                            vars[3 * f.0 + 2].clone() + margin.clone(),
                        ]
                    })
                    .collect();
                FeasibilityReport::Feasible {
                    solution: FaceAngleSolution::new(angles),
                    margin,
                }
            } else {
                FeasibilityReport::Infeasible {
                    violating: None,
                    dual: None,
                }
            }
        }
        LpOutcome::Infeasible { .. } => FeasibilityReport::Infeasible {
            violating: None,
            dual: None,
        },
        LpOutcome::Unbounded { .. } => unreachable!("face rows bound the margin"),
    })
}

/// One failed condition of the polygon realization test.
#[derive(Clone, Debug, PartialEq)]
pub enum AndreevViolation<S> {
    /// A prescribed convex position angle that no polygon corner can take.
    BoundaryAngleRange { vertex: VertexId, angle: S },
    /// Interior vertex whose exterior angles do not close up to a full turn.
    InteriorVertexSum { vertex: VertexId, total: S },
    /// Boundary vertex where Σ(1−Δ) + (1−Λ) misses 2.
    BoundaryVertexSum { vertex: VertexId, total: S },
    /// The convex position angles do not make one full turn around the
    /// boundary: Σ(1−Λ) must equal 2.
    BoundaryTurning { total: S },
    /// A closed separating curve's crossings carry too little exterior
    /// angle: Σ(1−Δ) must exceed 2.
    ClosedCut { edges: BTreeSet<EdgeId>, total: S },
    /// A boundary-to-boundary separating cut plus one group of boundary
    /// vertices: Σ(1−Δ) + Σ(1−Λ) must exceed 2.
    BoundarySplittingCut {
        edges: BTreeSet<EdgeId>,
        group: BTreeSet<VertexId>,
        total: S,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum AndreevOutcome<S> {
    Satisfied,
    Violated(AndreevViolation<S>),
}

impl<S> AndreevOutcome<S> {
    pub fn holds(&self) -> bool {
        matches!(self, AndreevOutcome::Satisfied)
    }
}

/// Test whether (Δ, Λ) data on a triangulated disk satisfies the vertex
/// equalities, the full-turn condition, and the separating-cut inequalities
/// that characterize realizability as a flat polygon with the prescribed
/// corner structure. The verdict always matches
/// `decide_with_boundary_angles` on the same data. `tol` loosens the
/// equality clauses (pass zero for exact data); the cut clauses are open
/// inequalities checked with the same slack.
pub fn andreev_check<S: Scalar + 'static>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
    boundary_angles: &BTreeMap<VertexId, S>,
    tol: S,
) -> Result<AndreevOutcome<S>, FeasibilityError> {
    if !t.is_disk() {
        return Err(FeasibilityError::NotADisk);
    }
    let boundary: BTreeSet<VertexId> = t
        .vertex_ids()
        .filter(|&v| t.vertex(v).on_boundary)
        .collect();
    if boundary_angles.keys().copied().collect::<BTreeSet<_>>() != boundary {
        return Err(FeasibilityError::BoundaryAngleKeys);
    }
    let two = from_count::<S>(2);

    for (&v, lam) in boundary_angles {
        if *lam <= S::zero() {
            return Ok(AndreevOutcome::Violated(
                AndreevViolation::BoundaryAngleRange { vertex: v, angle: lam.clone() },
            ));
        }
    }

    for v in t.vertex_ids() {
        let cone = delta.cone_angle(t, v);
        if boundary.contains(&v) {
            let total = cone.clone() + S::one() - boundary_angles[&v].clone();
            if (total.clone() - two.clone()).abs() > tol {
                return Ok(AndreevOutcome::Violated(
                    AndreevViolation::BoundaryVertexSum { vertex: v, total },
                ));
            }
        } else if (cone.clone() - two.clone()).abs() > tol {
            return Ok(AndreevOutcome::Violated(
                AndreevViolation::InteriorVertexSum { vertex: v, total: cone },
            ));
        }
    }

    let turning = boundary_angles
        .values()
        .fold(S::zero(), |a, lam| a + S::one() - lam.clone());
    if (turning.clone() - two.clone()).abs() > tol {
        return Ok(AndreevOutcome::Violated(AndreevViolation::BoundaryTurning {
            total: turning,
        }));
    }

    // Separating cuts = vertex bipartitions with both sides connected in the
    // 1-skeleton; the crossed edges are those joining the sides. Families
    // sharing a vertex re-state the vertex equalities and are skipped.
    let nv = t.n_vertices();
    assert!(nv <= 24, "cut enumeration is exponential in the vertex count");
    let mut adjacency = vec![BTreeSet::new(); nv];
    for e in t.edge_ids() {
        let (a, b) = t.edge_endpoints(e);
        if a != b {
            adjacency[a.0].insert(b.0);
            adjacency[b.0].insert(a.0);
        }
    }
    let connected_in = |mask: u64| {
        let members: Vec<usize> = (0..nv).filter(|i| mask >> i & 1 == 1).collect();
        let Some(&start) = members.first() else {
            return false;
        };
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &adjacency[x] {
                if mask >> y & 1 == 1 && seen >> y & 1 == 0 {
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
        members.iter().all(|&i| seen >> i & 1 == 1)
    };

    let all = (1u64 << nv) - 1;
    for mask in 1..all {
        if !connected_in(mask) || !connected_in(all & !mask) {
            continue;
        }
        let in_side = |v: VertexId| mask >> v.0 & 1 == 1;
        let edges: BTreeSet<EdgeId> = t
            .edge_ids()
            .filter(|&e| {
                let (a, b) = t.edge_endpoints(e);
                in_side(a) != in_side(b)
            })
            .collect();
        if edges.is_empty() || is_coterminous(t, &edges) {
            continue;
        }
        let crossing_total = edges
            .iter()
            .fold(S::zero(), |a, &e| a + delta.exterior(e));
        let group: BTreeSet<VertexId> = boundary.iter().copied().filter(|&v| in_side(v)).collect();
        let other_side_has_boundary = boundary.iter().any(|&v| !in_side(v));
        if group.is_empty() || !other_side_has_boundary {
            // both ends of the cut close up: a full curve in the interior
            if group.is_empty() {
                if crossing_total.clone() - two.clone() <= tol {
                    return Ok(AndreevOutcome::Violated(AndreevViolation::ClosedCut {
                        edges,
                        total: crossing_total,
                    }));
                }
            }
            // the complement-side pass handles the mirrored case
            continue;
        }
        let total = group.iter().fold(crossing_total, |a, v| {
            a + S::one() - boundary_angles[v].clone()
        });
        if total.clone() - two.clone() <= tol {
            return Ok(AndreevOutcome::Violated(
                AndreevViolation::BoundarySplittingCut { edges, group, total },
            ));
        }
    }
    Ok(AndreevOutcome::Satisfied)
}
