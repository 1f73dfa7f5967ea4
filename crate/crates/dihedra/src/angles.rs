//! Edge dihedral-angle data and per-corner angle solutions.
//!
//! All angles are in π-units: a Euclidean triangle's corners sum to 1, a
//! full turn is 2. An edge value Δ(e) prescribes the sum of the corner
//! angles opposite e (two corners across an interior edge, one at the
//! boundary); δ′(e) = 1 − Δ(e) is the exterior angle.

use crate::scalar::Scalar;
use crate::subcomplex::{ClosedSubcomplex, FaceSet};
use crate::surface::{Corner, EdgeId, FaceId, TriangulatedSurface, VertexId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AngleError {
    #[error("expected one value per edge class ({expected}), got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("edge {0} carries a value outside (0, 2)")]
    OutOfRange(usize),
}

/// One dihedral angle per edge class, with the Delaunay flag (every interior
/// value at most 1) computed up front.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleAssignment<S> {
    values: Vec<S>,
    delaunay: bool,
}

impl<S: Scalar> AngleAssignment<S> {
    pub fn new(t: &TriangulatedSurface, values: Vec<S>) -> Result<Self, AngleError> {
        if values.len() != t.n_edges() {
            return Err(AngleError::WrongLength {
                expected: t.n_edges(),
                got: values.len(),
            });
        }
        let two = S::one() + S::one();
        for (i, v) in values.iter().enumerate() {
            if *v <= S::zero() || *v >= two {
                return Err(AngleError::OutOfRange(i));
            }
        }
        let delaunay = t
            .edge_ids()
            .all(|e| t.edge(e).is_boundary() || values[e.0] <= S::one());
        Ok(AngleAssignment { values, delaunay })
    }

    pub fn get(&self, e: EdgeId) -> &S {
        &self.values[e.0]
    }

    pub fn is_delaunay(&self) -> bool {
        self.delaunay
    }

    /// δ′(e) = 1 − Δ(e).
    pub fn exterior(&self, e: EdgeId) -> S {
        S::one() - self.values[e.0].clone()
    }

    pub fn total(&self) -> S {
        self.values
            .iter()
            .fold(S::zero(), |a, v| a + v.clone())
    }

    /// Cone angle C_v = Σ_{e ∋ v} δ′(e), a loop at v counting twice.
    pub fn cone_angle(&self, t: &TriangulatedSurface, v: VertexId) -> S {
        let mut sum = S::zero();
        for e in t.edge_ids() {
            for _ in 0..t.endpoint_multiplicity(e, v) {
                sum = sum + self.exterior(e);
            }
        }
        sum
    }

    /// κ_v = 2 − C_v.
    pub fn curvature(&self, t: &TriangulatedSurface, v: VertexId) -> S {
        S::one() + S::one() - self.cone_angle(t, v)
    }

    /// Convex-position angle of a boundary vertex: C_v − 1 (the two
    /// conventions for boundary vertices differ by a straight angle).
    pub fn boundary_angle(&self, t: &TriangulatedSurface, v: VertexId) -> S {
        self.cone_angle(t, v) - S::one()
    }

    /// K(F) = Σ κ_v over the subcomplex's vertices.
    pub fn total_curvature(&self, t: &TriangulatedSurface, f: &ClosedSubcomplex) -> S {
        f.vertices()
            .iter()
            .fold(S::zero(), |a, &v| a + self.curvature(t, v))
    }
}

/// Σ_{e ∈ E(F)} Δ(e) − |F| over the edges incident to the face set.
pub fn excess<S: Scalar>(
    t: &TriangulatedSurface,
    delta: &AngleAssignment<S>,
    faces: &FaceSet,
) -> S {
    let edges = faces.edges_incident(t);
    let sum = edges
        .iter()
        .fold(S::zero(), |a, &e| a + delta.get(e).clone());
    sum - crate::scalar::from_count(faces.len())
}

/// Three positive corner angles per face, stored by corner slot (slot i is
/// opposite edge slot i).
#[derive(Clone, Debug, PartialEq)]
pub struct FaceAngleSolution<S> {
    angles: Vec<[S; 3]>,
}

impl<S: Scalar> FaceAngleSolution<S> {
    pub fn new(angles: Vec<[S; 3]>) -> Self {
        FaceAngleSolution { angles }
    }

    pub fn n_faces(&self) -> usize {
        self.angles.len()
    }

    pub fn angle(&self, c: Corner) -> &S {
        &self.angles[c.face().0][c.slot()]
    }

    pub fn face(&self, f: FaceId) -> &[S; 3] {
        &self.angles[f.0]
    }

    pub fn min_angle(&self) -> S {
        let mut best: Option<&S> = None;
        for tri in &self.angles {
            for a in tri {
                if best.map_or(true, |b| a < b) {
                    best = Some(a);
                }
            }
        }
        best.expect("at least one face").clone()
    }

    pub fn face_sum(&self, f: FaceId) -> S {
        let [a, b, c] = &self.angles[f.0];
        a.clone() + b.clone() + c.clone()
    }

    /// Sum of the corner angles opposite the edge (one or two darts).
    pub fn edge_sum(&self, t: &TriangulatedSurface, e: EdgeId) -> S {
        t.edge(e)
            .darts()
            .fold(S::zero(), |acc, d| {
                acc + self.angles[d.face().0][d.slot()].clone()
            })
    }

    /// Total corner angle gathered at a vertex.
    pub fn vertex_sum(&self, t: &TriangulatedSurface, v: VertexId) -> S {
        t.vertex(v)
            .corners
            .iter()
            .fold(S::zero(), |a, &c| a + self.angle(c).clone())
    }

    /// Exact verification: positivity, unit face sums, and edge sums equal
    /// to the prescription.
    pub fn verify_exact(
        &self,
        t: &TriangulatedSurface,
        delta: &AngleAssignment<S>,
    ) -> Result<(), String> {
        self.verify_within(t, delta, S::zero())
    }

    /// Verification up to `tol` on every equation; positivity stays strict.
    pub fn verify_within(
        &self,
        t: &TriangulatedSurface,
        delta: &AngleAssignment<S>,
        tol: S,
    ) -> Result<(), String> {
        if self.angles.len() != t.n_faces() {
            return Err(format!(
                "solution covers {} faces, surface has {}",
                self.angles.len(),
                t.n_faces()
            ));
        }
        for c in t.corners() {
            if *self.angle(c) <= S::zero() {
                return Err(format!("nonpositive angle at face {} slot {}", c.face().0, c.slot()));
            }
        }
        for f in t.faces() {
            let gap = self.face_sum(f) - S::one();
            if gap.abs() > tol {
                return Err(format!("face {} angles sum to 1{:+}", f.0, gap));
            }
        }
        for e in t.edge_ids() {
            let gap = self.edge_sum(t, e) - delta.get(e).clone();
            if gap.abs() > tol {
                return Err(format!("edge {} opposite sum off by {}", e.0, gap));
            }
        }
        Ok(())
    }
}
