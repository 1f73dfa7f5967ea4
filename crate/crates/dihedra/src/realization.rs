//! Flat geometry carried by a corner-angle solution: triangle shapes up to
//! similarity, planar developments along a spanning tree of the face graph,
//! holonomy of dual cycles, shear coordinates of interior edges, and the
//! reverse oracle that reads a triangulation and its dihedral angles off a
//! planar point set in general position.
//!
//! Everything upstream of this module stays in exact π-units. Here values
//! become radians and floating point, with three pinned slacks:
//! [`TRIG_TOL`] for trigonometric identities, [`PREDICATE_TOL`] for point
//! predicates, and [`ROUND_TRIP_TOL`] for end-to-end reconstructions.

use crate::angles::{AngleAssignment, FaceAngleSolution};
use crate::scalar::Scalar;
use crate::surface::{Dart, EdgeId, FaceId, TriangulatedSurface, VertexId};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::collections::{BTreeMap, VecDeque};
use std::f64::consts::PI;
use thiserror::Error;

/// Corner angles below this many radians cannot shape a usable triangle.
pub const ANGLE_FLOOR: f64 = 1e-9;
/// Slack for identities that are exact in real arithmetic (angle sums,
/// sine-rule ratios, holonomy cancellations).
pub const TRIG_TOL: f64 = 1e-12;
/// Slack for geometric predicates on input points, relative to the point
/// set's diameter where a length is compared, absolute in radians where an
/// angle is.
pub const PREDICATE_TOL: f64 = 1e-9;
/// Slack for reconstructions that chain an LP solve and a development,
/// relative to the point set's diameter.
pub const ROUND_TRIP_TOL: f64 = 1e-6;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    /// A corner angle (radians) under [`ANGLE_FLOOR`].
    #[error("corner angle {0:e} rad is too small to shape a triangle")]
    DegenerateAngle(f64),
    /// The input points violate a general-position requirement.
    #[error("degenerate point configuration: {0}")]
    DegeneratePosition(String),
}

/// A Euclidean triangle up to orientation-preserving similarity: corner
/// angles in radians, and side lengths normalized so the longest side is 1.
/// Side `i` is the one opposite corner `i`; its length is proportional to
/// the sine of angle `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleShape {
    angles: [f64; 3],
    ratios: [f64; 3],
}

impl TriangleShape {
    pub fn new(angles: [f64; 3]) -> Result<TriangleShape, GeometryError> {
        for &a in &angles {
            // the negated comparison also rejects NaN
            if !(a >= ANGLE_FLOOR) {
                return Err(GeometryError::DegenerateAngle(a));
            }
        }
        debug_assert!(
            (angles[0] + angles[1] + angles[2] - PI).abs() <= TRIG_TOL,
            "corner angles {angles:?} do not sum to a straight angle"
        );
        let sines = angles.map(f64::sin);
        let longest = sines[0].max(sines[1]).max(sines[2]);
        Ok(TriangleShape {
            angles,
            ratios: sines.map(|s| s / longest),
        })
    }

    pub fn angles(&self) -> &[f64; 3] {
        &self.angles
    }

    /// Side lengths by opposite-corner slot, longest side exactly 1.
    pub fn ratios(&self) -> &[f64; 3] {
        &self.ratios
    }

    /// A fixed planar chart of the shape: corner 0 at the origin, corner 1
    /// on the positive real axis, counterclockwise.
    pub fn local_corners(&self) -> [Complex64; 3] {
        [
            Complex64::new(0.0, 0.0),
            Complex64::new(self.ratios[2], 0.0),
            Complex64::from_polar(self.ratios[1], self.angles[0]),
        ]
    }

    /// Slot of a longest side (lowest slot on ties).
    fn longest_slot(&self) -> usize {
        let mut j = 0;
        for k in 1..3 {
            if self.ratios[k] > self.ratios[j] {
                j = k;
            }
        }
        j
    }
}

/// One shape per face, converting π-units to radians.
pub fn angles_to_shapes<S: Scalar + ToPrimitive>(
    sol: &FaceAngleSolution<S>,
) -> Result<Vec<TriangleShape>, GeometryError> {
    (0..sol.n_faces())
        .map(|f| {
            let row = sol.face(FaceId(f));
            TriangleShape::new([
                to_radians(&row[0]),
                to_radians(&row[1]),
                to_radians(&row[2]),
            ])
        })
        .collect()
}

fn to_radians<S: ToPrimitive + std::fmt::Debug>(units: &S) -> f64 {
    units.to_f64().expect("angle fits a double") * PI
}

/// How the two placements of an interior edge disagree in a development.
/// `stretch` (log length ratio) and `angle` (radians, in (−π, π]) describe
/// the similarity taking the partner-side image of the lead dart's support
/// onto the lead-side image; both equal the holonomy of the edge's
/// fundamental cycle, `angle` up to full turns. `length` is the absolute
/// length difference. All three vanish on tree edges.
#[derive(Clone, Copy, Debug)]
pub struct EdgeMismatch {
    pub edge: EdgeId,
    pub in_tree: bool,
    pub length: f64,
    pub stretch: f64,
    pub angle: f64,
}

/// A planar layout of every face, produced by walking a breadth-first
/// spanning tree of the face graph from a root and laying each face against
/// the edge it was entered through. The root face's longest side spans the
/// unit segment from 0 to 1. Where a gluing is off the tree, the two
/// layouts of its edge may disagree; those disagreements are the whole
/// obstruction to the angles being realized by one flat piece.
#[derive(Clone, Debug)]
pub struct PlanarDevelopment {
    root: FaceId,
    coords: Vec<[Complex64; 3]>,
    entered_by: Vec<Option<Dart>>,
    mismatches: Vec<EdgeMismatch>,
}

/// Lays out the faces of a connected surface in the plane.
pub fn develop<S: Scalar + ToPrimitive>(
    t: &TriangulatedSurface,
    sol: &FaceAngleSolution<S>,
    root: FaceId,
) -> Result<PlanarDevelopment, GeometryError> {
    assert_eq!(sol.n_faces(), t.n_faces(), "solution sized for another surface");
    assert!(root.0 < t.n_faces(), "root face out of range");
    assert!(t.is_connected(), "development needs a connected surface");
    let shapes = angles_to_shapes(sol)?;
    let locals: Vec<[Complex64; 3]> = shapes.iter().map(TriangleShape::local_corners).collect();

    let n = t.n_faces();
    let mut coords = vec![[Complex64::new(0.0, 0.0); 3]; n];
    let mut placed = vec![false; n];
    let mut entered_by: Vec<Option<Dart>> = vec![None; n];

    // Root normalization: the longest side's corners go to 0 and 1, in the
    // order that keeps the face counterclockwise.
    let j = shapes[root.0].longest_slot();
    let base = locals[root.0][(j + 1) % 3];
    let alpha = Complex64::new(1.0, 0.0) / (locals[root.0][(j + 2) % 3] - base);
    coords[root.0] = locals[root.0].map(|z| alpha * (z - base));
    placed[root.0] = true;

    let mut queue = VecDeque::from([root]);
    while let Some(f) = queue.pop_front() {
        for s in 0..3 {
            let Some(p) = t.glue_of(Dart::new(f, s)) else { continue };
            let g = p.face();
            if placed[g.0] {
                continue;
            }
            // Matched corners coincide: the lead dart's tail faces the
            // partner's head, and vice versa.
            let lg = &locals[g.0];
            let (gu, gv) = (lg[(p.slot() + 2) % 3], lg[(p.slot() + 1) % 3]);
            let fu = coords[f.0][(s + 1) % 3];
            let fv = coords[f.0][(s + 2) % 3];
            let alpha = (fv - fu) / (gv - gu);
            coords[g.0] = lg.map(|z| fu + alpha * (z - gu));
            placed[g.0] = true;
            entered_by[g.0] = Some(p);
            queue.push_back(g);
        }
    }
    debug_assert!(placed.iter().all(|&done| done));

    let mut mismatches = Vec::new();
    for e in t.edge_ids() {
        let edge = t.edge(e);
        let Some(p) = edge.partner else { continue };
        let d = edge.lead;
        let wf = coords[d.face().0][(d.slot() + 2) % 3] - coords[d.face().0][(d.slot() + 1) % 3];
        let wg = coords[p.face().0][(p.slot() + 1) % 3] - coords[p.face().0][(p.slot() + 2) % 3];
        let q = wf / wg;
        mismatches.push(EdgeMismatch {
            edge: e,
            in_tree: entered_by[p.face().0] == Some(p) || entered_by[d.face().0] == Some(d),
            length: (wf.norm() - wg.norm()).abs(),
            stretch: q.norm().ln(),
            angle: q.arg(),
        });
    }

    Ok(PlanarDevelopment {
        root,
        coords,
        entered_by,
        mismatches,
    })
}

impl PlanarDevelopment {
    pub fn root(&self) -> FaceId {
        self.root
    }

    pub fn corners(&self, f: FaceId) -> &[Complex64; 3] {
        &self.coords[f.0]
    }

    /// The dart of `f` that was crossed backwards to enter `f`; `None` at
    /// the root.
    pub fn entered_by(&self, f: FaceId) -> Option<Dart> {
        self.entered_by[f.0]
    }

    /// One entry per interior edge, in edge-id order.
    pub fn mismatches(&self) -> &[EdgeMismatch] {
        &self.mismatches
    }

    pub fn mismatch(&self, e: EdgeId) -> Option<&EdgeMismatch> {
        self.mismatches.iter().find(|m| m.edge == e)
    }

    pub fn max_off_tree_length(&self) -> f64 {
        self.mismatches
            .iter()
            .filter(|m| !m.in_tree)
            .fold(0.0, |a, m| a.max(m.length))
    }

    pub fn max_off_tree_angle(&self) -> f64 {
        self.mismatches
            .iter()
            .filter(|m| !m.in_tree)
            .fold(0.0, |a, m| a.max(m.angle.abs()))
    }

    /// The dual cycle that crosses `e` once from its lead face and walks
    /// back through the spanning tree. `None` for boundary edges.
    pub fn fundamental_cycle(&self, t: &TriangulatedSurface, e: EdgeId) -> Option<Vec<Dart>> {
        let edge = t.edge(e);
        let p = edge.partner?;
        let d = edge.lead;
        let path_up = |mut f: FaceId| -> Vec<Dart> {
            let mut steps = Vec::new();
            while let Some(q) = self.entered_by[f.0] {
                steps.push(q);
                f = t.glue_of(q).expect("tree darts are glued").face();
            }
            steps
        };
        let up_lead = path_up(d.face());
        let up_partner = path_up(p.face());
        // both walks end at the root; the shared tail above their meeting
        // face contributes nothing to the cycle
        let mut i = up_lead.len();
        let mut j = up_partner.len();
        while i > 0 && j > 0 && up_lead[i - 1] == up_partner[j - 1] {
            i -= 1;
            j -= 1;
        }
        let mut cycle = vec![d];
        cycle.extend_from_slice(&up_partner[..j]);
        cycle.extend(
            up_lead[..i]
                .iter()
                .rev()
                .map(|&q| t.glue_of(q).expect("tree darts are glued")),
        );
        Some(cycle)
    }

    /// Largest distance between a developed corner and the point it should
    /// land on, after matching the root face's first side, relative to the
    /// point set's diameter.
    pub fn compare_to_points(&self, triples: &[[usize; 3]], points: &[[f64; 2]]) -> f64 {
        assert_eq!(triples.len(), self.coords.len());
        let f = self.root.0;
        let (pa, pb) = (self.coords[f][0], self.coords[f][1]);
        let (qa, qb) = (cpx(points[triples[f][0]]), cpx(points[triples[f][1]]));
        let alpha = (qb - qa) / (pb - pa);
        let mut diameter = 0.0f64;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                diameter = diameter.max((cpx(points[i]) - cpx(points[j])).norm());
            }
        }
        let mut worst = 0.0f64;
        for (g, tri) in triples.iter().enumerate() {
            for s in 0..3 {
                let image = qa + alpha * (self.coords[g][s] - pa);
                worst = worst.max((image - cpx(points[tri[s]])).norm());
            }
        }
        worst / diameter
    }

    /// Largest corner distance to another development of the same surface,
    /// after matching this development's root face's first side, relative
    /// to this development's diameter.
    pub fn similarity_distance(&self, other: &PlanarDevelopment) -> f64 {
        assert_eq!(self.coords.len(), other.coords.len());
        let f = self.root.0;
        let (pa, pb) = (other.coords[f][0], other.coords[f][1]);
        let (qa, qb) = (self.coords[f][0], self.coords[f][1]);
        let alpha = (qb - qa) / (pb - pa);
        let mut diameter = 0.0f64;
        let flat: Vec<Complex64> = self.coords.iter().flatten().copied().collect();
        for i in 0..flat.len() {
            for j in i + 1..flat.len() {
                diameter = diameter.max((flat[i] - flat[j]).norm());
            }
        }
        let mut worst = 0.0f64;
        for (g, cs) in self.coords.iter().enumerate() {
            for s in 0..3 {
                let image = qa + alpha * (other.coords[g][s] - pa);
                worst = worst.max((image - cs[s]).norm());
            }
        }
        worst / diameter
    }
}

fn cpx(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

/// Scale-and-turn holonomy of a dual cycle. `dilatational` is the total
/// log scale ratio picked up around the cycle; `rotational` is the total
/// turning in radians, summed crossing by crossing, so full turns are not
/// reduced away.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HolonomyValue {
    pub dilatational: f64,
    pub rotational: f64,
}

/// Holonomy of a dual cycle given as darts: dart `k` is crossed from its
/// own face into its partner's face, which must carry dart `k + 1`
/// (cyclically). A cycle that backtracks along tree edges carries zero.
pub fn holonomy<S: Scalar + ToPrimitive>(
    t: &TriangulatedSurface,
    sol: &FaceAngleSolution<S>,
    cycle: &[Dart],
) -> Result<HolonomyValue, GeometryError> {
    assert!(!cycle.is_empty(), "holonomy of an empty cycle");
    let shapes = angles_to_shapes(sol)?;
    let mut dilatational = 0.0;
    let mut rotational = 0.0;
    for (k, &d) in cycle.iter().enumerate() {
        let p = t.glue_of(d).expect("cycle crosses a boundary edge");
        assert_eq!(
            p.face(),
            cycle[(k + 1) % cycle.len()].face(),
            "cycle darts are not face-consecutive"
        );
        let lf = shapes[d.face().0].local_corners();
        let lg = shapes[p.face().0].local_corners();
        let step = (lf[(d.slot() + 2) % 3] - lf[(d.slot() + 1) % 3])
            / (lg[(p.slot() + 1) % 3] - lg[(p.slot() + 2) % 3]);
        dilatational += step.norm().ln();
        rotational += step.arg();
    }
    Ok(HolonomyValue {
        dilatational,
        rotational,
    })
}

/// The shear of an interior edge. With the shared side AB oriented by the
/// lead dart (A its tail, B its head), C the lead face's far corner and D
/// the partner face's, the value is log(|AC|·|BD| / (|BC|·|AD|)). The
/// labeling is pinned by the edge's own lead dart, so recomputing from the
/// partner's side swaps A with B and C with D at once and returns the same
/// value.
#[derive(Clone, Copy, Debug)]
pub struct ShearValue {
    pub edge: EdgeId,
    pub value: f64,
}

/// One shear per interior edge, in edge-id order. Sine ratios within each
/// face make the quotient scale-free.
pub fn shear_coordinates<S: Scalar + ToPrimitive>(
    t: &TriangulatedSurface,
    sol: &FaceAngleSolution<S>,
) -> Result<Vec<ShearValue>, GeometryError> {
    let shapes = angles_to_shapes(sol)?;
    let mut out = Vec::new();
    for e in t.edge_ids() {
        let edge = t.edge(e);
        let Some(p) = edge.partner else { continue };
        let d = edge.lead;
        let r1 = shapes[d.face().0].ratios();
        let r2 = shapes[p.face().0].ratios();
        let (s, sp) = (d.slot(), p.slot());
        // sides leaving A over sides leaving B, one factor per face
        let value = (r1[(s + 2) % 3] * r2[(sp + 2) % 3]
            / (r1[(s + 1) % 3] * r2[(sp + 1) % 3]))
            .ln();
        out.push(ShearValue { edge: e, value });
    }
    Ok(out)
}

/// A Delaunay triangulation read off a planar point set, together with the
/// data the angle machinery consumes. `triples` index into the input
/// points; `delta` sums opposite corner angles per edge (π-units);
/// `boundary_angles` holds each hull vertex's interior angle (π-units);
/// `solution` is the per-corner read-off that realizes `delta` by
/// construction.
#[derive(Clone, Debug)]
pub struct DelaunayRealization {
    pub surface: TriangulatedSurface,
    pub triples: Vec<[usize; 3]>,
    pub delta: AngleAssignment<f64>,
    pub boundary_angles: BTreeMap<VertexId, f64>,
    pub solution: FaceAngleSolution<f64>,
}

/// Brute-force empty-circumcircle triangulation of a point set in general
/// position: every unordered triple whose open circumdisk contains no other
/// point becomes a counterclockwise face. Rejections are strict-inside
/// tests, so cocircular points around an occupied circle are harmless; a
/// near-cocircular point on an otherwise empty circle is a
/// [`GeometryError::DegeneratePosition`], as are duplicate points, fewer
/// than three points, an all-collinear set, and a hull angle within
/// [`PREDICATE_TOL`] of a straight angle.
pub fn delaunay_of_points(points: &[[f64; 2]]) -> Result<DelaunayRealization, GeometryError> {
    let n = points.len();
    if n < 3 {
        return Err(GeometryError::DegeneratePosition(format!(
            "need at least three points, got {n}"
        )));
    }
    let mut diameter = 0.0f64;
    let mut nearest = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let d = (cpx(points[i]) - cpx(points[j])).norm();
            diameter = diameter.max(d);
            nearest = nearest.min(d);
        }
    }
    let tol = PREDICATE_TOL * diameter;
    if nearest <= tol {
        return Err(GeometryError::DegeneratePosition(
            "two points (nearly) coincide".into(),
        ));
    }

    let mut triples: Vec<[usize; 3]> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (cpx(points[i]), cpx(points[j]), cpx(points[k]));
                let cross = ((b - a).conj() * (c - a)).im;
                let longest = (b - a).norm().max((c - a).norm()).max((c - b).norm());
                if cross.abs() <= tol * longest {
                    continue; // collinear triples never bound a face
                }
                let center = a + circumcenter_offset(b - a, c - a);
                let radius = (a - center).norm();
                let mut grazing = false;
                let mut occupied = false;
                for (q, pt) in points.iter().enumerate() {
                    if q == i || q == j || q == k {
                        continue;
                    }
                    let dist = (cpx(*pt) - center).norm();
                    if dist < radius - tol {
                        occupied = true;
                        break;
                    }
                    if (dist - radius).abs() <= tol {
                        grazing = true;
                    }
                }
                if occupied {
                    continue;
                }
                if grazing {
                    return Err(GeometryError::DegeneratePosition(format!(
                        "points {i}, {j}, {k} and a fourth are cocircular around an empty circle"
                    )));
                }
                triples.push(if cross > 0.0 { [i, j, k] } else { [i, k, j] });
            }
        }
    }
    if triples.is_empty() {
        return Err(GeometryError::DegeneratePosition(
            "all points are collinear".into(),
        ));
    }

    let surface =
        crate::catalog::from_vertex_triples(&triples).map_err(GeometryError::DegeneratePosition)?;
    if !surface.is_disk() {
        return Err(GeometryError::DegeneratePosition(
            "empty-circle faces do not assemble into a disk".into(),
        ));
    }
    let classes = crate::catalog::vertex_classes(&surface, &triples);
    if let Some(missing) = (0..n).find(|i| !classes.contains_key(i)) {
        return Err(GeometryError::DegeneratePosition(format!(
            "point {missing} is a vertex of no empty-circle triangle"
        )));
    }

    let corner_angle = |f: usize, s: usize| -> f64 {
        let tri = &triples[f];
        let p = cpx(points[tri[s]]);
        let u = cpx(points[tri[(s + 1) % 3]]) - p;
        let v = cpx(points[tri[(s + 2) % 3]]) - p;
        (u.conj() * v).im.atan2((u.conj() * v).re) / PI
    };

    let rows: Vec<[f64; 3]> = (0..triples.len())
        .map(|f| [corner_angle(f, 0), corner_angle(f, 1), corner_angle(f, 2)])
        .collect();
    debug_assert!(rows
        .iter()
        .all(|r| (r[0] + r[1] + r[2] - 1.0).abs() <= TRIG_TOL));
    let solution = FaceAngleSolution::new(rows);

    let deltas: Vec<f64> = surface
        .edge_ids()
        .map(|e| {
            surface
                .edge(e)
                .darts()
                .map(|d| solution.face(d.face())[d.slot()])
                .sum()
        })
        .collect();
    let delta = AngleAssignment::new(&surface, deltas)
        .expect("angles read off a genuine triangulation lie in (0, 2)");

    let mut boundary_angles = BTreeMap::new();
    for v in surface.vertex_ids() {
        let vert = surface.vertex(v);
        if !vert.on_boundary {
            continue;
        }
        let lambda: f64 = vert
            .corners
            .iter()
            .map(|c| corner_angle(c.face().0, c.slot()))
            .sum();
        if (lambda * PI - PI).abs() <= PREDICATE_TOL {
            return Err(GeometryError::DegeneratePosition(
                "three consecutive hull points are (nearly) collinear".into(),
            ));
        }
        boundary_angles.insert(v, lambda);
    }

    Ok(DelaunayRealization {
        surface,
        triples,
        delta,
        boundary_angles,
        solution,
    })
}

/// Circumcenter of the triangle (0, u, v), as an offset from its first
/// vertex.
fn circumcenter_offset(u: Complex64, v: Complex64) -> Complex64 {
    let cross = u.re * v.im - u.im * v.re;
    let (nu, nv) = (u.norm_sqr(), v.norm_sqr());
    Complex64::new(
        (nu * v.im - nv * u.im) / (2.0 * cross),
        (nv * u.re - nu * v.re) / (2.0 * cross),
    )
}

/// Interior edges whose dihedral angle exceeds a straight angle by more
/// than `tol` (π-units); an empty answer means the solution passes the
/// closed-circumdisk test everywhere, a straight angle being allowed.
/// Exact solutions take `tol = 0`; solutions read off floating points take
/// a small positive slack.
pub fn verify_delaunay<S: Scalar>(
    t: &TriangulatedSurface,
    sol: &FaceAngleSolution<S>,
    tol: S,
) -> Vec<EdgeId> {
    t.edge_ids()
        .filter(|&e| {
            !t.edge(e).is_boundary() && sol.edge_sum(t, e) > S::one() + tol.clone()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::excess;
    use crate::catalog;
    use crate::feasibility::{decide_lp, FeasibilityReport};
    use crate::scalar::rational;
    use crate::subcomplex::FaceSet;
    use crate::Rational;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_1_SQRT_2, LN_2, TAU};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    /// |Full turns| between two angles must be whole for values that agree
    /// modulo 2π.
    fn whole_turns_apart(a: f64, b: f64) -> bool {
        let turns = (a - b) / TAU;
        (turns - turns.round()).abs() <= 1e-9
    }

    #[test]
    fn shapes_follow_the_law_of_sines() {
        let eq = TriangleShape::new([PI / 3.0; 3]).unwrap();
        assert_eq!(eq.ratios(), &[1.0, 1.0, 1.0]);

        let right = TriangleShape::new([PI / 2.0, PI / 4.0, PI / 4.0]).unwrap();
        assert_eq!(right.ratios()[0], 1.0);
        assert!(close(right.ratios()[1], FRAC_1_SQRT_2, TRIG_TOL));
        assert!(close(right.ratios()[2], FRAC_1_SQRT_2, TRIG_TOL));

        let half = TriangleShape::new([PI / 2.0, PI / 3.0, PI / 6.0]).unwrap();
        assert!(close(half.ratios()[1], 0.866_025_403_784_438_7, TRIG_TOL));
        assert!(close(half.ratios()[2], 0.5, TRIG_TOL));

        // conversion from π-units hits the same shapes
        let sol = FaceAngleSolution::new(vec![[
            rational(1, 2),
            rational(1, 4),
            rational(1, 4),
        ]]);
        let shapes = angles_to_shapes(&sol).unwrap();
        assert!(close(shapes[0].angles()[0], PI / 2.0, TRIG_TOL));
        assert!(close(shapes[0].ratios()[1], FRAC_1_SQRT_2, TRIG_TOL));

        let sliver = FaceAngleSolution::new(vec![[1e-10, 0.5, 0.5 - 1e-10]]);
        match angles_to_shapes(&sliver) {
            Err(GeometryError::DegenerateAngle(a)) => assert!(a < ANGLE_FLOOR),
            other => panic!("expected a degenerate angle, got {other:?}"),
        }
    }

    #[test]
    fn development_of_the_unit_square() {
        let t = catalog::square_disk();
        let sol = FaceAngleSolution::new(vec![[0.25, 0.5, 0.25], [0.25, 0.25, 0.5]]);
        let dev = develop(&t, &sol, FaceId(0)).unwrap();

        let want0 = [(1.0, 0.0), (0.5, 0.5), (0.0, 0.0)];
        let want1 = [(1.0, 0.0), (0.0, 0.0), (0.5, -0.5)];
        for s in 0..3 {
            let w0 = Complex64::new(want0[s].0, want0[s].1);
            let w1 = Complex64::new(want1[s].0, want1[s].1);
            assert!(
                (dev.corners(FaceId(0))[s] - w0).norm() <= TRIG_TOL,
                "corner {s} of the first face landed at {}",
                dev.corners(FaceId(0))[s]
            );
            assert!((dev.corners(FaceId(1))[s] - w1).norm() <= TRIG_TOL);
        }
        assert_eq!(dev.entered_by(FaceId(0)), None);
        assert_eq!(dev.entered_by(FaceId(1)), Some(Dart(5)));

        // one interior edge, on the tree, matching exactly
        assert_eq!(dev.mismatches().len(), 1);
        let m = dev.mismatch(EdgeId(1)).unwrap();
        assert!(m.in_tree && m.length <= TRIG_TOL && m.angle.abs() <= TRIG_TOL);

        // both faces counterclockwise
        for f in t.faces() {
            let c = dev.corners(f);
            let turn = ((c[1] - c[0]).conj() * (c[2] - c[0])).im;
            assert!(turn > 0.0, "face {f:?} flipped orientation");
        }
    }

    #[test]
    fn lone_triangle_develops_onto_its_own_shape() {
        let t = catalog::single_triangle();
        let sol = FaceAngleSolution::new(vec![[0.5, 0.25, 0.25]]);
        let dev = develop(&t, &sol, FaceId(0)).unwrap();
        let c = dev.corners(FaceId(0));
        assert!((c[0] - Complex64::new(0.5, 0.5)).norm() <= TRIG_TOL);
        assert!((c[1] - Complex64::new(0.0, 0.0)).norm() <= TRIG_TOL);
        assert!((c[2] - Complex64::new(1.0, 0.0)).norm() <= TRIG_TOL);
        assert!(dev.mismatches().is_empty());
    }

    #[test]
    fn cone_development_misses_a_quarter_turn() {
        // three right angles around the hub leave a deficit of π/2
        let t = catalog::wheel(3);
        let sol = FaceAngleSolution::new(vec![[0.5, 0.25, 0.25]; 3]);
        let dev = develop(&t, &sol, FaceId(0)).unwrap();

        let off: Vec<&EdgeMismatch> = dev.mismatches().iter().filter(|m| !m.in_tree).collect();
        assert_eq!(off.len(), 1);
        let m = off[0];
        assert_eq!(m.edge, EdgeId(4));
        assert!(m.length <= TRIG_TOL, "equal spokes cannot disagree in length");
        assert!(m.stretch.abs() <= TRIG_TOL);
        assert!(close(m.angle.abs(), PI / 2.0, TRIG_TOL));

        let cycle = dev.fundamental_cycle(&t, m.edge).unwrap();
        assert_eq!(cycle, vec![Dart(4), Dart(7), Dart(1)]);
        let h = holonomy(&t, &sol, &cycle).unwrap();
        assert!(h.dilatational.abs() <= TRIG_TOL);
        // three crossings, each turning by a quarter: unreduced total 3π/2
        assert!(close(h.rotational, 1.5 * PI, TRIG_TOL));
        assert!(whole_turns_apart(h.rotational, m.angle));
        assert!(close(h.dilatational, m.stretch, TRIG_TOL));
    }

    #[test]
    fn tree_cycles_carry_no_holonomy() {
        let t = catalog::square_disk();
        let sol = FaceAngleSolution::new(vec![[0.25, 0.5, 0.25], [0.25, 0.25, 0.5]]);
        let h = holonomy(&t, &sol, &[Dart(1), Dart(5)]).unwrap();
        assert!(h.dilatational.abs() <= TRIG_TOL);
        assert!(h.rotational.abs() <= TRIG_TOL);
    }

    #[test]
    fn torus_generators_scale_by_hand_computed_ratios() {
        let t = catalog::torus_two_faces();
        let sol = FaceAngleSolution::new(vec![[0.5, 0.25, 0.25], [0.25, 0.5, 0.25]]);

        // hypotenuse-to-leg crossings double the scale
        let h1 = holonomy(&t, &sol, &[Dart(0), Dart(4)]).unwrap();
        assert!(close(h1.dilatational, LN_2, TRIG_TOL));
        let h2 = holonomy(&t, &sol, &[Dart(0), Dart(5)]).unwrap();
        assert!(close(h2.dilatational, LN_2 / 2.0, TRIG_TOL));

        // traversing backwards negates both parts
        let rev: Vec<Dart> = [Dart(0), Dart(4)]
            .iter()
            .rev()
            .map(|&d| t.glue_of(d).unwrap())
            .collect();
        assert_eq!(rev, vec![Dart(1), Dart(3)]);
        let hr = holonomy(&t, &sol, &rev).unwrap();
        assert!(close(hr.dilatational, -h1.dilatational, TRIG_TOL));
        assert!(close(hr.rotational, -h1.rotational, TRIG_TOL));
    }

    #[test]
    fn mismatches_equal_fundamental_cycle_holonomy() {
        let t = catalog::torus_two_faces();

        // a similarity-only solution: every off-tree edge disagrees, and
        // the disagreement is its fundamental cycle's holonomy
        let sol = FaceAngleSolution::new(vec![[0.5, 0.25, 0.25], [0.25, 0.5, 0.25]]);
        let dev = develop(&t, &sol, FaceId(0)).unwrap();
        assert_eq!(dev.entered_by(FaceId(1)), Some(Dart(3)));
        let m1 = dev.mismatch(EdgeId(1)).unwrap();
        let m2 = dev.mismatch(EdgeId(2)).unwrap();
        assert!(!m1.in_tree && !m2.in_tree);
        assert!(close(m1.stretch, -LN_2, TRIG_TOL));
        assert!(close(m2.stretch, -LN_2 / 2.0, TRIG_TOL));
        for m in [m1, m2] {
            let cycle = dev.fundamental_cycle(&t, m.edge).unwrap();
            let h = holonomy(&t, &sol, &cycle).unwrap();
            assert!(close(h.dilatational, m.stretch, 1e-9));
            assert!(whole_turns_apart(h.rotational, m.angle));
            assert!(m.stretch.abs() > 0.1, "this solution is genuinely dilatational");
        }

        // the flat torus closes up: no off-tree disagreement anywhere
        let flat = FaceAngleSolution::new(vec![[1.0 / 3.0; 3]; 2]);
        let dev = develop(&t, &flat, FaceId(0)).unwrap();
        assert!(dev.max_off_tree_length() <= 1e-9);
        for m in dev.mismatches() {
            let cycle = dev.fundamental_cycle(&t, m.edge).unwrap();
            let h = holonomy(&t, &flat, &cycle).unwrap();
            assert!(h.dilatational.abs() <= 1e-9);
            assert!(whole_turns_apart(h.rotational, 0.0));
        }
    }

    #[test]
    fn shear_vanishes_on_symmetric_gluings() {
        let t = catalog::square_disk();
        let sol = FaceAngleSolution::new(vec![[0.25, 0.5, 0.25], [0.25, 0.25, 0.5]]);
        let sh = shear_coordinates(&t, &sol).unwrap();
        assert_eq!(sh.len(), 1);
        assert_eq!(sh[0].edge, EdgeId(1));
        assert!(sh[0].value.abs() <= TRIG_TOL, "an isoceles gluing has no shear");

        let torus = catalog::torus_two_faces();
        let flat = FaceAngleSolution::new(vec![[1.0 / 3.0; 3]; 2]);
        for sv in shear_coordinates(&torus, &flat).unwrap() {
            assert!(sv.value.abs() <= TRIG_TOL);
        }
    }

    #[test]
    fn shear_of_mixed_right_triangles_is_frozen() {
        // 30-60-90 against 45-45-90 across the diagonal: the side ratios
        // leaving the diagonal's tail are (1/2, √2/2), those leaving its
        // head (√3/2, √2/2), so the log cross-ratio is -ln(3)/2
        let t = catalog::square_disk();
        let sol = FaceAngleSolution::new(vec![
            [1.0 / 6.0, 0.5, 1.0 / 3.0],
            [0.25, 0.25, 0.5],
        ]);
        let sh = shear_coordinates(&t, &sol).unwrap();
        assert_eq!(sh.len(), 1);
        let want = -(3.0f64.ln()) / 2.0;
        assert!(close(sh[0].value, want, TRIG_TOL), "got {}", sh[0].value);

        // relabeling the faces swaps both the diagonal's ends and the two
        // far corners, so the value is intrinsic to the edge
        let relabeled = catalog::from_vertex_triples(&[[0, 2, 3], [0, 1, 2]]).unwrap();
        let sol2 = FaceAngleSolution::new(vec![
            [0.25, 0.25, 0.5],
            [1.0 / 6.0, 0.5, 1.0 / 3.0],
        ]);
        let sh2 = shear_coordinates(&relabeled, &sol2).unwrap();
        assert_eq!(sh2.len(), 1);
        assert!(close(sh2[0].value, want, TRIG_TOL));
    }

    #[test]
    fn delaunay_of_a_right_triangle() {
        let pts = [[0.0, 0.0], [4.0, 0.0], [0.0, 3.0]];
        let real = delaunay_of_points(&pts).unwrap();
        assert_eq!(real.triples, vec![[0, 1, 2]]);
        // 3-4-5 sides: angles atan2-exact, in π-units
        let want = [0.5, 0.204_832_764_699_133_45, 0.295_167_235_300_866_55];
        for s in 0..3 {
            assert!(close(real.solution.face(FaceId(0))[s], want[s], TRIG_TOL));
            assert!(close(*real.delta.get(EdgeId(s)), want[s], TRIG_TOL));
        }
        assert_eq!(real.boundary_angles.len(), 3);
        let classes = catalog::vertex_classes(&real.surface, &real.triples);
        for (label, w) in want.iter().enumerate() {
            assert!(close(real.boundary_angles[&classes[&label]], *w, TRIG_TOL));
        }
    }

    #[test]
    fn near_square_bends_at_the_diagonal() {
        let pts = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.001]];
        let real = delaunay_of_points(&pts).unwrap();
        assert_eq!(real.surface.n_faces(), 2);
        let diag = real
            .surface
            .edge_ids()
            .find(|&e| !real.surface.edge(e).is_boundary())
            .unwrap();
        // the lifted corner tilts the two right angles off a straight
        // angle by one part in a thousand
        let bend = real.delta.get(diag) * PI - PI;
        assert!(
            (-0.0011..=-0.0009).contains(&bend),
            "diagonal bend was {bend}"
        );
        assert!(real.delta.is_delaunay());
        assert!(verify_delaunay(&real.surface, &real.solution, PREDICATE_TOL / PI).is_empty());
    }

    #[test]
    fn cocircular_rim_is_harmless_when_circles_are_occupied() {
        // a regular pentagon's rim points are all on one circle, but every
        // circle through three of them strictly contains either the center
        // or a skipped rim point, so only the fan's circles stay empty
        let mut pts = vec![[0.0, 0.0]];
        for k in 0..5 {
            let th = TAU * (k as f64) / 5.0;
            pts.push([th.cos(), th.sin()]);
        }
        let real = delaunay_of_points(&pts).unwrap();
        assert_eq!(real.surface.n_faces(), 5);
        assert_eq!(real.surface.n_edges(), 10);
        for e in real.surface.edge_ids() {
            let want = if real.surface.edge(e).is_boundary() {
                0.4 // the apex angle at the center
            } else {
                0.6 // two base angles of the isoceles fan triangle
            };
            assert!(close(*real.delta.get(e), want, PREDICATE_TOL));
        }
        assert_eq!(real.boundary_angles.len(), 5);
        for lambda in real.boundary_angles.values() {
            assert!(close(*lambda, 0.6, PREDICATE_TOL));
        }
        // the center is the one interior vertex
        let classes = catalog::vertex_classes(&real.surface, &real.triples);
        assert!(!real.boundary_angles.contains_key(&classes[&0]));
    }

    #[test]
    fn degenerate_point_sets_are_refused() {
        let reject = |pts: &[[f64; 2]]| {
            assert!(
                matches!(
                    delaunay_of_points(pts),
                    Err(GeometryError::DegeneratePosition(_))
                ),
                "accepted {pts:?}"
            );
        };
        // four exactly cocircular corners around an empty circle
        reject(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
        // a hull angle of exactly π
        reject(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [1.0, 1.0]]);
        // everything on one line
        reject(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]);
        // a repeated point
        reject(&[[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]);
        // not enough points
        reject(&[[0.0, 0.0], [1.0, 0.0]]);
    }

    #[test]
    fn circle_test_flags_exactly_the_reflex_edges() {
        let t = catalog::square_disk();

        // a straight diagonal is allowed
        let straight = FaceAngleSolution::new(vec![
            [rational(1, 4), rational(1, 2), rational(1, 4)],
            [rational(1, 4), rational(1, 4), rational(1, 2)],
        ]);
        assert!(verify_delaunay(&t, &straight, rational(0, 1)).is_empty());

        // a reflex one is not
        let reflex = FaceAngleSolution::new(vec![
            [rational(1, 8), rational(3, 4), rational(1, 8)],
            [rational(1, 8), rational(1, 8), rational(3, 4)],
        ]);
        assert_eq!(verify_delaunay(&t, &reflex, rational(0, 1)), vec![EdgeId(1)]);

        // same verdicts along the floating path
        let reflex_f = FaceAngleSolution::new(vec![
            [0.125, 0.75, 0.125],
            [0.125, 0.125, 0.75],
        ]);
        assert_eq!(
            verify_delaunay(&t, &reflex_f, PREDICATE_TOL / PI),
            vec![EdgeId(1)]
        );

        let lone = catalog::single_triangle();
        let any = FaceAngleSolution::new(vec![[0.2, 0.3, 0.5]]);
        assert!(verify_delaunay(&lone, &any, PREDICATE_TOL / PI).is_empty());
    }

    /// Points on a jittered circle, regenerated until all of them sit on
    /// the hull with a healthy smallest corner angle. In convex position
    /// the boundary edges pin every corner of the angle system one ear at
    /// a time, so the LP has exactly one solution to find.
    fn convex_instance(
        rng: &mut ChaCha8Rng,
        n: usize,
    ) -> Option<(Vec<[f64; 2]>, DelaunayRealization)> {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..n).all(|i| {
            let next = if i + 1 == n { angles[0] + TAU } else { angles[i + 1] };
            next - angles[i] >= 0.25
        });
        if !gaps_ok {
            return None;
        }
        let pts: Vec<[f64; 2]> = angles
            .iter()
            .map(|&th| {
                let r = rng.gen_range(0.9..1.1);
                [r * th.cos(), r * th.sin()]
            })
            .collect();
        let real = delaunay_of_points(&pts).ok()?;
        if real.boundary_angles.len() != n || real.solution.min_angle() < 0.01 {
            return None;
        }
        Some((pts, real))
    }

    /// Snaps the read-off corners to the 2⁻¹⁶ grid, repairs each face sum
    /// on its largest corner so the rows still sum to one exactly, and
    /// re-sums the corners into exact edge values.
    fn snapped_delta(real: &DelaunayRealization) -> AngleAssignment<Rational> {
        let grid: i64 = 1 << 16;
        let snap = |a: f64| -> Rational {
            Rational::new(BigInt::from((a * grid as f64).round() as i64), BigInt::from(grid))
        };
        let mut rows: Vec<[Rational; 3]> = (0..real.surface.n_faces())
            .map(|f| {
                let r = real.solution.face(FaceId(f));
                [snap(r[0]), snap(r[1]), snap(r[2])]
            })
            .collect();
        for row in &mut rows {
            let total = row[0].clone() + row[1].clone() + row[2].clone();
            let mut widest = 0;
            for s in 1..3 {
                if row[s] > row[widest] {
                    widest = s;
                }
            }
            row[widest] = row[widest].clone() + (Rational::new(1.into(), 1.into()) - total);
        }
        let snapped = FaceAngleSolution::new(rows);
        let values: Vec<Rational> = real
            .surface
            .edge_ids()
            .map(|e| snapped.edge_sum(&real.surface, e))
            .collect();
        AngleAssignment::new(&real.surface, values).unwrap()
    }

    #[test]
    fn convex_point_sets_round_trip_through_the_lp() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut done = 0;
        while done < 6 {
            let n = rng.gen_range(4..=9usize);
            let Some((pts, real)) = convex_instance(&mut rng, n) else {
                continue;
            };
            done += 1;

            // exact leg: grid-snapped dihedral angles stay feasible
            let exact = snapped_delta(&real);
            match decide_lp(&real.surface, &exact) {
                FeasibilityReport::Feasible { margin, .. } => {
                    assert!(margin > rational(0, 1));
                }
                other => panic!("snapped angles lost feasibility: {other:?}"),
            }

            // float leg: the LP's solution develops back onto the points
            match decide_lp(&real.surface, &real.delta) {
                FeasibilityReport::Feasible { solution, .. } => {
                    let dev = develop(&real.surface, &solution, FaceId(0)).unwrap();
                    let err = dev.compare_to_points(&real.triples, &pts);
                    assert!(err <= ROUND_TRIP_TOL, "round trip off by {err}");
                    assert!(dev.max_off_tree_length() <= ROUND_TRIP_TOL);
                    assert!(dev.max_off_tree_angle() <= ROUND_TRIP_TOL);
                }
                other => panic!("read-off angles lost feasibility: {other:?}"),
            }

            // the read-off corners themselves relay the exact geometry
            let direct = develop(&real.surface, &real.solution, FaceId(0)).unwrap();
            assert!(direct.compare_to_points(&real.triples, &pts) <= 1e-9);
        }
    }

    #[test]
    fn subcomplex_excess_counts_the_outside_angles() {
        let mut pts = vec![[0.0, 0.0]];
        for k in 0..5 {
            let th = TAU * (k as f64) / 5.0;
            pts.push([th.cos(), th.sin()]);
        }
        let real = delaunay_of_points(&pts).unwrap();
        let t = &real.surface;
        for mask in 1u32..(1 << 5) {
            let faces = FaceSet::from_iter((0..5).filter(|i| mask & (1 << i) != 0).map(FaceId));
            let outside: f64 = faces
                .edges_incident(t)
                .iter()
                .flat_map(|&e| t.edge(e).darts())
                .filter(|d| !faces.contains(d.face()))
                .map(|d| real.solution.face(d.face())[d.slot()])
                .sum();
            let ex = excess(t, &real.delta, &faces);
            assert!(close(ex, outside, PREDICATE_TOL), "mask {mask:#b}");
        }
    }

    #[test]
    fn thin_triangles_bound_their_smallest_angle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut hits = 0;
        for _ in 0..400 {
            let alpha = rng.gen_range(1e-4..0.12);
            let beta = rng.gen_range(1.2..1.6);
            let shape = TriangleShape::new([alpha, beta, PI - alpha - beta]).unwrap();
            let r = shape.ratios();
            let eps = (r[0] / r[1]).max(r[0] / r[2]);
            if eps < 0.1 {
                hits += 1;
                assert!(
                    shape.angles()[0] < 2.0 * eps,
                    "angle {alpha} vs side bound {eps}"
                );
            }
        }
        assert!(hits >= 100, "only {hits} samples were thin enough");
    }

    #[test]
    fn matching_dilatations_pin_the_development() {
        // the same solution developed from different roots is one rigid
        // motion plus scale away from itself
        let mut pts = vec![[0.0, 0.0]];
        for k in 0..5 {
            let th = TAU * (k as f64) / 5.0;
            pts.push([th.cos(), th.sin()]);
        }
        let real = delaunay_of_points(&pts).unwrap();
        let a = develop(&real.surface, &real.solution, FaceId(0)).unwrap();
        let b = develop(&real.surface, &real.solution, FaceId(2)).unwrap();
        assert!(a.similarity_distance(&b) <= 1e-9);

        let torus = catalog::torus_two_faces();
        let tsol = FaceAngleSolution::new(vec![[0.5, 0.25, 0.25], [0.25, 0.5, 0.25]]);
        let ta = develop(&torus, &tsol, FaceId(0)).unwrap();
        let tb = develop(&torus, &tsol, FaceId(1)).unwrap();
        assert!(ta.similarity_distance(&tb) <= 1e-9);

        // a fixed-Δ family: rotating the fan's rim angles keeps every edge
        // sum, and distinct members announce themselves through distinct
        // dilatations on the hub cycle — so equal holonomy means equal
        // geometry within this family
        let t = catalog::wheel(3);
        let member = |xi: f64| {
            FaceAngleSolution::new(vec![
                [2.0 / 3.0, 1.0 / 6.0 + xi, 1.0 / 6.0 - xi];
                3
            ])
        };
        let base = member(0.0);
        let xis = [-0.1, -0.05, 0.0, 0.04, 0.09];
        let cycle = vec![Dart(4), Dart(7), Dart(1)];
        let mut hds = Vec::new();
        for &xi in &xis {
            let sol = member(xi);
            for e in t.edge_ids() {
                assert!(close(
                    sol.edge_sum(&t, e),
                    base.edge_sum(&t, e),
                    TRIG_TOL
                ));
            }
            hds.push(holonomy(&t, &sol, &cycle).unwrap().dilatational);
        }
        for i in 0..xis.len() {
            for j in i + 1..xis.len() {
                assert!(
                    (hds[i] - hds[j]).abs() > 0.05,
                    "members {i} and {j} share a dilatation"
                );
                let di = develop(&t, &member(xis[i]), FaceId(0)).unwrap();
                let dj = develop(&t, &member(xis[j]), FaceId(0)).unwrap();
                assert!(di.similarity_distance(&dj) > 0.01);
            }
        }
        // and only the flat member closes up
        for &xi in &xis {
            let dev = develop(&t, &member(xi), FaceId(0)).unwrap();
            let flat = dev.max_off_tree_length() <= 1e-9 && dev.max_off_tree_angle() <= 1e-9;
            assert_eq!(flat, xi == 0.0);
        }
    }

    #[test]
    fn slack_hub_lets_the_simplex_bend_the_fan() {
        // A hexagonal fan with one extra triangle hanging off a rim edge.
        // The boundary pins the outer triangle's corners at (7/16, 7/16,
        // 1/8) and every hub corner at 1/3, but the rim corners keep one
        // degree of freedom: chaining the spoke sums, they all move
        // together as 1/3 ± ξ. Any |ξ| ≤ 5/24 leaves the minimum corner at
        // the pinned 1/8, so the margin LP's optimal set is a segment and
        // the simplex answers from one of its endpoints — a solution with
        // the same dihedral angles as the flat fan but nonzero dilatation
        // around the hub. Angle sums alone do not pin geometry once an
        // interior vertex has slack.
        let mut triples: Vec<[usize; 3]> = (0..6).map(|i| [0, 1 + i, 1 + (i + 1) % 6]).collect();
        triples.push([2, 1, 7]);
        let t = catalog::from_vertex_triples(&triples).unwrap();
        assert!(t.is_disk());
        let classes = catalog::vertex_classes(&t, &triples);
        let hub = classes[&0];
        let far = classes[&7];
        let rim_pair = {
            let mut pair = [classes[&1], classes[&2]];
            pair.sort();
            pair
        };

        let values: Vec<Rational> = t
            .edge_ids()
            .map(|e| {
                let (a, b) = t.edge_endpoints(e);
                let mut ends = [a, b];
                ends.sort();
                if ends.contains(&far) {
                    rational(7, 16) // boundary edges of the outer triangle
                } else if ends.contains(&hub) {
                    rational(2, 3) // spokes
                } else if ends == rim_pair {
                    rational(11, 24) // the shared rim edge
                } else {
                    rational(1, 3) // free rim edges
                }
            })
            .collect();
        let delta = AngleAssignment::new(&t, values).unwrap();

        // the flat witness: a regular fan plus the pinned ear
        let mut rows: Vec<[Rational; 3]> = (0..6)
            .map(|_| [rational(1, 3), rational(1, 3), rational(1, 3)])
            .collect();
        rows.push([rational(7, 16), rational(7, 16), rational(1, 8)]);
        let witness = FaceAngleSolution::new(rows);
        assert!(witness.verify_exact(&t, &delta).is_ok());

        let FeasibilityReport::Feasible { solution, margin } = decide_lp(&t, &delta) else {
            panic!("the witness certifies feasibility");
        };
        assert_eq!(margin, rational(1, 8));
        // the simplex lands on an endpoint of the optimal segment, not on
        // the flat fan between them
        let p = solution.face(FaceId(0))[1].clone();
        assert!(
            p == rational(13, 24) || p == rational(1, 8),
            "rim corner came back as {p}"
        );

        let wit_dev = develop(&t, &witness, FaceId(0)).unwrap();
        assert!(wit_dev.max_off_tree_length() <= 1e-12);
        let lp_dev = develop(&t, &solution, FaceId(0)).unwrap();
        let bent: Vec<&EdgeMismatch> =
            lp_dev.mismatches().iter().filter(|m| !m.in_tree).collect();
        assert_eq!(bent.len(), 1);
        assert!(bent[0].stretch.abs() > 1.0);

        let cycle = lp_dev.fundamental_cycle(&t, bent[0].edge).unwrap();
        assert_eq!(cycle.len(), 6, "the hub cycle crosses every spoke");
        assert!(holonomy(&t, &witness, &cycle).unwrap().dilatational.abs() <= 1e-12);
        assert!(holonomy(&t, &solution, &cycle).unwrap().dilatational.abs() > 1.0);
        assert!(wit_dev.similarity_distance(&lp_dev) > 0.05);
    }
}
