//! Stellations — coning every face of a triangulated surface to a fresh
//! vertex — and the linear program deciding whether a closed sphere carries
//! a Delaunay metric whose cone points are all positively curved. An
//! averaging argument over old-versus-new vertices explains why stellations
//! of all but the smallest spheres never do.

use crate::angles::{AngleAssignment, FaceAngleSolution};
use crate::catalog::{from_vertex_triples, vertex_classes};
use crate::lp::{solve, GeneralProgram, LpOutcome, Relation, Sense};
use crate::scalar::{from_count, Scalar};
use crate::surface::{Corner, Dart, FaceId, TriangulatedSurface, VertexId};
use thiserror::Error;

/// A surface with every face replaced by its cone over a fresh vertex:
/// face `f = ABC` becomes `O_f AB`, `O_f BC`, `O_f CA`.
#[derive(Clone, Debug)]
pub struct Stellation {
    surface: TriangulatedSurface,
    triples: Vec<[usize; 3]>,
    n_base_vertices: usize,
    n_base_faces: usize,
    /// Indexed by the stellation's own vertex ids.
    is_new: Vec<bool>,
    /// Vertex id of `O_f` per base face.
    apex: Vec<VertexId>,
}

/// Cones every face of `t` to a fresh vertex. Old vertices keep their
/// labels; the new vertex of face `f` gets label `|V| + f`. Child `k` of
/// face `f` (id `3f + k`) spans the base edge opposite corner `k`.
pub fn stellate(t: &TriangulatedSurface) -> Stellation {
    let n_old = t.n_vertices();
    let mut triples = Vec::with_capacity(3 * t.n_faces());
    for f in t.faces() {
        let old = [0, 1, 2].map(|s| t.vertex_of(Corner::new(f, s)).0);
        for k in 0..3 {
            triples.push([n_old + f.0, old[(k + 1) % 3], old[(k + 2) % 3]]);
        }
    }
    let surface =
        from_vertex_triples(&triples).expect("coning preserves coherent orientation");
    let classes = vertex_classes(&surface, &triples);
    let mut is_new = vec![false; surface.n_vertices()];
    let mut apex = vec![VertexId(0); t.n_faces()];
    for (&label, &v) in &classes {
        if label >= n_old {
            is_new[v.0] = true;
            apex[label - n_old] = v;
        }
    }
    let s = Stellation {
        surface,
        triples,
        n_base_vertices: n_old,
        n_base_faces: t.n_faces(),
        is_new,
        apex,
    };
    debug_assert!(s.surface.edge_ids().all(|e| {
        let (u, w) = s.surface.edge_endpoints(e);
        !s.is_new_vertex(u) || !s.is_new_vertex(w)
    }));
    s
}

impl Stellation {
    pub fn surface(&self) -> &TriangulatedSurface {
        &self.surface
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn n_base_vertices(&self) -> usize {
        self.n_base_vertices
    }

    pub fn n_base_faces(&self) -> usize {
        self.n_base_faces
    }

    pub fn is_new_vertex(&self, v: VertexId) -> bool {
        self.is_new[v.0]
    }

    /// The fresh vertex coned over base face `f`.
    pub fn new_vertex_of(&self, f: FaceId) -> VertexId {
        self.apex[f.0]
    }

    /// Child `k` of base face `f`, spanning the base edge opposite its
    /// corner `k`.
    pub fn child(&self, f: FaceId, k: usize) -> FaceId {
        FaceId(3 * f.0 + k)
    }

    pub fn old_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.surface.vertex_ids().filter(|v| !self.is_new[v.0])
    }

    pub fn new_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.surface.vertex_ids().filter(|v| self.is_new[v.0])
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizabilityError {
    #[error("not a closed topological sphere: {0}")]
    NotASphere(String),
}

/// Row multipliers bounding the best uniform margin by zero: nonnegative
/// on the edge and vertex caps, covering every corner column nonnegatively
/// and the margin column by at least 1, with total value at most 0. Any
/// angle assignment that is positive, Delaunay, and positively curved with
/// margin ε would force the value to be at least ε, so a verified
/// obstruction leaves no room above zero.
#[derive(Clone, Debug, PartialEq)]
pub struct RealizabilityObstruction<S> {
    pub face_potential: Vec<S>,
    pub edge_potential: Vec<S>,
    pub vertex_potential: Vec<S>,
}

impl<S: Scalar> RealizabilityObstruction<S> {
    /// `Σ face + Σ edge + 2 Σ vertex`, the bound on the margin.
    pub fn value(&self) -> S {
        let sum = |v: &[S]| v.iter().fold(S::zero(), |a, x| a + x.clone());
        sum(&self.face_potential)
            + sum(&self.edge_potential)
            + (S::one() + S::one()) * sum(&self.vertex_potential)
    }

    pub fn verify(&self, t: &TriangulatedSurface) -> bool {
        if self.face_potential.len() != t.n_faces()
            || self.edge_potential.len() != t.n_edges()
            || self.vertex_potential.len() != t.n_vertices()
            || !t.is_closed()
        {
            return false;
        }
        let nonneg = self
            .edge_potential
            .iter()
            .chain(&self.vertex_potential)
            .all(|y| *y >= S::zero());
        let corners_covered = t.corners().all(|c| {
            let opposite = t.edge_of(Dart::new(c.face(), c.slot()));
            let cover = self.face_potential[c.face().0].clone()
                + self.edge_potential[opposite.0].clone()
                + self.vertex_potential[t.vertex_of(c).0].clone();
            cover >= S::zero()
        });
        let margin_cover = self
            .face_potential
            .iter()
            .fold(S::zero(), |a, y| a + from_count::<S>(3) * y.clone())
            + self
                .edge_potential
                .iter()
                .fold(S::zero(), |a, y| a + from_count::<S>(2) * y.clone())
            + t.vertex_ids().fold(S::zero(), |a, v| {
                a + from_count::<S>(t.vertex(v).corners.len() + 1)
                    * self.vertex_potential[v.0].clone()
            });
        nonneg
            && corners_covered
            && margin_cover >= S::one()
            && self.value() <= S::zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CurvedRealizability<S> {
    /// A corner-angle assignment with margin ε > 0: all angles ≥ ε, all
    /// edge sums Delaunay, every cone angle ≤ 2 − ε (π-units).
    Feasible { solution: FaceAngleSolution<S>, margin: S },
    /// No positive margin exists; the multipliers prove it.
    Infeasible { obstruction: RealizabilityObstruction<S> },
}

/// Is there a Delaunay corner-angle assignment on the closed sphere `t`
/// whose cone points are all strictly positively curved? Maximizes the
/// joint margin ε of angle positivity and cone angles below a full turn,
/// subject to face sums 1 and the Delaunay caps.
pub fn positively_curved_realizability<S: Scalar + 'static>(
    t: &TriangulatedSurface,
) -> Result<CurvedRealizability<S>, RealizabilityError> {
    if !t.is_connected() {
        return Err(RealizabilityError::NotASphere("not connected".into()));
    }
    if !t.is_closed() {
        return Err(RealizabilityError::NotASphere("has boundary".into()));
    }
    if t.euler_characteristic() != 2 {
        return Err(RealizabilityError::NotASphere(format!(
            "Euler characteristic {}",
            t.euler_characteristic()
        )));
    }
    let nf = t.n_faces();
    let nb = 3 * nf;
    let eps = nb;
    let mut rows = Vec::new();
    // shifted variables: angle = β' + ε, so positivity is built in
    for f in 0..nf {
        let mut row = vec![S::zero(); nb + 1];
        for s in 0..3 {
            row[3 * f + s] = S::one();
        }
        row[eps] = from_count(3);
        rows.push((row, Relation::Eq, S::one()));
    }
    for e in t.edge_ids() {
        let mut row = vec![S::zero(); nb + 1];
        for d in t.edge(e).darts() {
            row[3 * d.face().0 + d.slot()] = S::one();
        }
        row[eps] = from_count(2);
        rows.push((row, Relation::Le, S::one()));
    }
    for v in t.vertex_ids() {
        let mut row = vec![S::zero(); nb + 1];
        let corners = &t.vertex(v).corners;
        for c in corners {
            row[3 * c.face().0 + c.slot()] = S::one();
        }
        row[eps] = from_count(corners.len() + 1);
        rows.push((row, Relation::Le, from_count(2)));
    }
    let mut objective = vec![S::zero(); nb + 1];
    objective[eps] = S::one();
    let program = GeneralProgram {
        sense: Sense::Maximize,
        objective,
        rows,
        free: vec![false; nb + 1],
    };
    let std = program.to_standard_form();
    let split = |y: Vec<S>| {
        let mut y = y;
        let vertex_potential = y.split_off(nf + t.n_edges());
        let edge_potential = y.split_off(nf);
        RealizabilityObstruction { face_potential: y, edge_potential, vertex_potential }
    };
    let report = match solve(&std.lp).expect("well-formed system") {
        LpOutcome::Optimal { point, value, dual } => {
            let margin = std.recover_value(value);
            if margin > S::zero() {
                let vars = std.recover_point(&point);
                let solution = FaceAngleSolution::new(
                    (0..nf)
                        .map(|f| {
                            [0, 1, 2].map(|s| vars[3 * f + s].clone() + margin.clone())
                        })
                        .collect(),
                );
                debug_assert!(verify_curved(t, &solution, &margin));
                CurvedRealizability::Feasible { solution, margin }
            } else {
                CurvedRealizability::Infeasible { obstruction: split(std.recover_dual(&dual)) }
            }
        }
        LpOutcome::Infeasible { farkas } => {
            // even the weak system is empty: push a trivially valid set of
            // multipliers down the certified infeasibility direction until
            // the value drops below zero
            let rhs: Vec<S> = (0..nf)
                .map(|_| S::one())
                .chain(t.edge_ids().map(|_| S::one()))
                .chain(t.vertex_ids().map(|_| from_count(2)))
                .collect();
            let gain = farkas
                .iter()
                .zip(&rhs)
                .fold(S::zero(), |a, (y, b)| a + y.clone() * b.clone());
            debug_assert!(gain > S::zero());
            let scale = from_count::<S>(nf + 1) / gain;
            let mut y: Vec<S> = farkas.into_iter().map(|v| -(v * scale.clone())).collect();
            for f in 0..nf {
                y[f] = y[f].clone() + S::one();
            }
            CurvedRealizability::Infeasible { obstruction: split(y) }
        }
        LpOutcome::Unbounded { .. } => unreachable!("face rows cap the margin"),
    };
    if let CurvedRealizability::Infeasible { obstruction } = &report {
        debug_assert!(obstruction.verify(t));
    }
    Ok(report)
}

/// Exact check of a feasible report: face sums 1, angles at least the
/// margin, Delaunay edge sums, cone angles at most 2 minus the margin.
pub fn verify_curved<S: Scalar>(
    t: &TriangulatedSurface,
    solution: &FaceAngleSolution<S>,
    margin: &S,
) -> bool {
    solution.n_faces() == t.n_faces()
        && t.faces().all(|f| solution.face_sum(f) == S::one())
        && solution.min_angle() >= *margin
        && t.edge_ids().all(|e| solution.edge_sum(t, e) <= S::one())
        && t.vertex_ids()
            .all(|v| solution.vertex_sum(t, v) + margin.clone() <= from_count(2))
}

/// The inequality chain of the averaging argument, evaluated on one
/// dihedral-angle assignment of a stellation.
#[derive(Clone, Debug, PartialEq)]
pub struct AveragingReport<S> {
    /// Σ of all cone angles, against the Gauss–Bonnet value 2(|V| − 2).
    pub total_cone: S,
    pub gauss_bonnet_holds: bool,
    pub old_cone_sum: S,
    pub new_cone_sum: S,
    /// Old vertices carry at least as much cone angle as new ones; this is
    /// where Delaunay enters (each base edge's opposite angles sum to ≤ 1,
    /// and those opposite corners are exactly the new-vertex corners).
    pub old_dominates: bool,
    /// 3 − 6/|V(T)|, the guaranteed average old cone angle.
    pub old_average_bound: S,
    pub old_average: S,
    pub average_bound_holds: bool,
    pub max_old_cone: S,
    /// The bound reaches a full turn (|V(T)| ≥ 6) and the chain held, so
    /// some old vertex is flat or worse — positive curvature is impossible.
    pub excludes_positive_curvature: bool,
    pub first_failure: Option<&'static str>,
}

/// Evaluates the averaging chain on `delta`: Gauss–Bonnet, the old-over-new
/// cone-angle comparison, and the average bound at old vertices.
pub fn averaging_bound_check<S: Scalar>(
    s: &Stellation,
    delta: &AngleAssignment<S>,
) -> AveragingReport<S> {
    let t = s.surface();
    let cone = |v: VertexId| delta.cone_angle(t, v);
    let old_cone_sum = s.old_vertices().fold(S::zero(), |a, v| a + cone(v));
    let new_cone_sum = s.new_vertices().fold(S::zero(), |a, v| a + cone(v));
    let total_cone = old_cone_sum.clone() + new_cone_sum.clone();
    let gauss_bonnet_holds = total_cone == from_count::<S>(2 * (t.n_vertices() - 2));
    let old_dominates = old_cone_sum >= new_cone_sum;
    let n_old = from_count::<S>(s.n_base_vertices());
    let old_average_bound = from_count::<S>(3) - from_count::<S>(6) / n_old.clone();
    let old_average = old_cone_sum.clone() / n_old;
    let average_bound_holds = old_average >= old_average_bound;
    let max_old_cone = s
        .old_vertices()
        .map(cone)
        .max_by(|a, b| a.partial_cmp(b).expect("comparable scalars"))
        .expect("a stellation keeps its old vertices");
    let two = from_count::<S>(2);
    let excludes_positive_curvature = old_average_bound >= two
        && gauss_bonnet_holds
        && old_dominates
        && average_bound_holds;
    debug_assert!(!excludes_positive_curvature || max_old_cone >= two);
    let first_failure = if !gauss_bonnet_holds {
        Some("gauss-bonnet")
    } else if !old_dominates {
        Some("old-dominates-new")
    } else if !average_bound_holds {
        Some("old-average-bound")
    } else {
        None
    };
    AveragingReport {
        total_cone,
        gauss_bonnet_holds,
        old_cone_sum,
        new_cone_sum,
        old_dominates,
        old_average_bound,
        old_average,
        average_bound_holds,
        max_old_cone,
        excludes_positive_curvature,
        first_failure,
    }
}
