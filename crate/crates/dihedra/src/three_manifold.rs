//! Ideal triangulations of 3-manifolds: tetrahedra glued face-to-face,
//! dihedral angles living on opposite-edge pairs, the linear program
//! deciding weak and strict angle structures, and normal-surface count
//! vectors acting as dual certificates through their Euler characteristic.
//!
//! Angles are in π-units here too: a tetrahedron's three pair angles sum
//! to 1, and the angles around an interior edge sum to 2.

use crate::lp::{solve, GeneralProgram, LpOutcome, Relation, Sense};
use crate::scalar::{from_count, Scalar};
use crate::Rational;
use num_bigint::BigInt;
use thiserror::Error;

/// Tetrahedron index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TetId(pub usize);

/// Edge class of the glued-up triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeClassId(pub usize);

/// The six edges of a tetrahedron in lexicographic vertex order.
pub const EDGE_VERTICES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Opposite-edge pair of each edge slot: slots `p` and `5 - p` face each
/// other and share one dihedral angle.
pub const PAIR_OF_EDGE: [usize; 6] = [0, 1, 2, 2, 1, 0];

/// Lexicographic slot of the edge through two distinct vertices.
pub fn edge_index(a: usize, b: usize) -> usize {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    EDGE_VERTICES
        .iter()
        .position(|&e| e == (i, j))
        .expect("two distinct vertex labels under four")
}

/// The two edge slots carrying pair `p`.
pub fn pair_slots(p: usize) -> (usize, usize) {
    (p, 5 - p)
}

/// One side of a face identification: the neighbouring tetrahedron, the
/// face glued to, and the vertex relabeling into that tetrahedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceGluing {
    pub tet: usize,
    pub face: usize,
    pub map: [usize; 4],
}

/// A face identification as supplied by the caller: glue `face` of `tet`
/// (the face opposite that vertex) to `other_face` of `other_tet`, carrying
/// vertex `v` of the first tetrahedron to `map[v]` of the second. `map`
/// must be a permutation with `map[face] == other_face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GluingSpec {
    pub tet: usize,
    pub face: usize,
    pub other_tet: usize,
    pub other_face: usize,
    pub map: [usize; 4],
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("inconsistent gluing: {0}")]
    InconsistentGluing(String),
    #[error("face {face} of tetrahedron {tet} is not glued")]
    UnGluedFace { tet: usize, face: usize },
}

/// Tetrahedra glued along all faces, with the induced edge classes.
#[derive(Clone, Debug)]
pub struct IdealTriangulation3 {
    gluings: Vec<[FaceGluing; 4]>,
    edge_class: Vec<[EdgeClassId; 6]>,
    class_slots: Vec<Vec<(usize, usize)>>,
    valences: Vec<usize>,
}

/// Glues the tetrahedra and traces the edge orbits.
pub fn build_ideal_triangulation(
    n_tets: usize,
    specs: &[GluingSpec],
) -> Result<IdealTriangulation3, TriangulationError> {
    let bad = |msg: String| TriangulationError::InconsistentGluing(msg);
    let mut store: Vec<[Option<FaceGluing>; 4]> = vec![[None; 4]; n_tets];
    for g in specs {
        if g.tet >= n_tets || g.other_tet >= n_tets {
            return Err(bad(format!("tetrahedron index out of range in {g:?}")));
        }
        if g.face >= 4 || g.other_face >= 4 {
            return Err(bad(format!("face index out of range in {g:?}")));
        }
        let mut seen = [false; 4];
        for &v in &g.map {
            if v >= 4 || seen[v] {
                return Err(bad(format!("vertex map is not a permutation in {g:?}")));
            }
            seen[v] = true;
        }
        if g.map[g.face] != g.other_face {
            return Err(bad(format!(
                "vertex map does not carry the glued face across in {g:?}"
            )));
        }
        if (g.tet, g.face) == (g.other_tet, g.other_face) {
            return Err(bad(format!("face glued to itself in {g:?}")));
        }
        let mut inverse = [0usize; 4];
        for v in 0..4 {
            inverse[g.map[v]] = v;
        }
        for (tet, face, map) in [
            (g.tet, g.face, FaceGluing { tet: g.other_tet, face: g.other_face, map: g.map }),
            (g.other_tet, g.other_face, FaceGluing { tet: g.tet, face: g.face, map: inverse }),
        ] {
            if store[tet][face].is_some() {
                return Err(bad(format!("face {face} of tetrahedron {tet} glued twice")));
            }
            store[tet][face] = Some(map);
        }
    }
    let mut gluings = Vec::with_capacity(n_tets);
    for (tet, faces) in store.into_iter().enumerate() {
        let mut row = [FaceGluing { tet: 0, face: 0, map: [0; 4] }; 4];
        for (face, slot) in faces.into_iter().enumerate() {
            row[face] = slot.ok_or(TriangulationError::UnGluedFace { tet, face })?;
        }
        gluings.push(row);
    }

    // trace edge orbits: each face identification matches up the three
    // edges of the two faces
    let mut parent: Vec<usize> = (0..6 * n_tets).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (tet, row) in gluings.iter().enumerate() {
        for (face, g) in row.iter().enumerate() {
            for (i, j) in EDGE_VERTICES {
                if i == face || j == face {
                    continue;
                }
                let here = 6 * tet + edge_index(i, j);
                let there = 6 * g.tet + edge_index(g.map[i], g.map[j]);
                let (a, b) = (find(&mut parent, here), find(&mut parent, there));
                parent[a] = b;
            }
        }
    }
    let mut class_ids: Vec<Option<EdgeClassId>> = vec![None; 6 * n_tets];
    let mut class_slots: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut edge_class = vec![[EdgeClassId(0); 6]; n_tets];
    for slot in 0..6 * n_tets {
        let root = find(&mut parent, slot);
        let id = *class_ids[root].get_or_insert_with(|| {
            class_slots.push(Vec::new());
            EdgeClassId(class_slots.len() - 1)
        });
        edge_class[slot / 6][slot % 6] = id;
        class_slots[id.0].push((slot / 6, slot % 6));
    }
    let valences = class_slots.iter().map(Vec::len).collect();
    Ok(IdealTriangulation3 {
        gluings,
        edge_class,
        class_slots,
        valences,
    })
}

impl IdealTriangulation3 {
    pub fn n_tets(&self) -> usize {
        self.gluings.len()
    }

    pub fn n_classes(&self) -> usize {
        self.class_slots.len()
    }

    pub fn valence(&self, e: EdgeClassId) -> usize {
        self.valences[e.0]
    }

    pub fn valences(&self) -> &[usize] {
        &self.valences
    }

    pub fn gluing(&self, tet: usize, face: usize) -> &FaceGluing {
        &self.gluings[tet][face]
    }

    /// Edge class of a tetrahedron's edge slot (lexicographic index).
    pub fn class_of(&self, tet: usize, slot: usize) -> EdgeClassId {
        self.edge_class[tet][slot]
    }

    /// The `(tet, slot)` members of an edge class.
    pub fn class_slots(&self, e: EdgeClassId) -> &[(usize, usize)] {
        &self.class_slots[e.0]
    }

    /// Edge classes met by the two slots of an opposite pair.
    pub fn pair_classes(&self, tet: usize, pair: usize) -> (EdgeClassId, EdgeClassId) {
        let (a, b) = pair_slots(pair);
        (self.edge_class[tet][a], self.edge_class[tet][b])
    }
}

/// Per tetrahedron, one angle for each opposite-edge pair, in π-units.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleStructure3<S> {
    angles: Vec<[S; 3]>,
}

impl<S: Scalar> AngleStructure3<S> {
    pub fn new(angles: Vec<[S; 3]>) -> Self {
        AngleStructure3 { angles }
    }

    pub fn n_tets(&self) -> usize {
        self.angles.len()
    }

    pub fn tet(&self, t: TetId) -> &[S; 3] {
        &self.angles[t.0]
    }

    pub fn angle(&self, tet: usize, pair: usize) -> &S {
        &self.angles[tet][pair]
    }

    pub fn is_strict(&self) -> bool {
        self.angles.iter().flatten().all(|a| *a > S::zero())
    }

    /// Checks the defining equalities: each tetrahedron sums to 1 and each
    /// edge class to `target` (2 for interior flatness; larger targets
    /// describe cone angles of at least a full turn).
    pub fn verify(&self, m: &IdealTriangulation3, target: &S) -> Result<(), String> {
        if self.angles.len() != m.n_tets() {
            return Err("structure sized for another triangulation".into());
        }
        if self.angles.iter().flatten().any(|a| *a < S::zero()) {
            return Err("negative angle".into());
        }
        for (t, row) in self.angles.iter().enumerate() {
            let sum = row[0].clone() + row[1].clone() + row[2].clone();
            if sum != S::one() {
                return Err(format!("tetrahedron {t} sums to {sum}, not 1"));
            }
        }
        for e in 0..m.n_classes() {
            let mut sum = S::zero();
            for &(tet, slot) in m.class_slots(EdgeClassId(e)) {
                sum = sum + self.angles[tet][PAIR_OF_EDGE[slot]].clone();
            }
            if sum != *target {
                return Err(format!("edge class {e} sums to {sum}, not {target}"));
            }
        }
        Ok(())
    }
}

/// A refutation of the angle-structure equalities: multipliers per
/// tetrahedron and per edge class whose combination certifies emptiness.
/// Feasibility of the angle system forces `objective <= 0`, so a verified
/// certificate with positive objective settles weak infeasibility.
#[derive(Clone, Debug, PartialEq)]
pub struct DualCertificate3<S> {
    pub v_tet: Vec<S>,
    pub v_edge: Vec<S>,
    /// `Σ v_tet + target · Σ v_edge`.
    pub objective: S,
    /// `v_tet[t] + v_edge[e₁] + v_edge[e₂]` per (tet, opposite pair),
    /// indexed `3t + pair`; hyperbolic-side feasibility needs all `<= 0`.
    pub residuals: Vec<S>,
}

impl<S: Scalar> DualCertificate3<S> {
    fn assemble(m: &IdealTriangulation3, v_tet: Vec<S>, v_edge: Vec<S>, target: &S) -> Self {
        let mut residuals = Vec::with_capacity(3 * m.n_tets());
        for t in 0..m.n_tets() {
            for p in 0..3 {
                let (e1, e2) = m.pair_classes(t, p);
                residuals
                    .push(v_tet[t].clone() + v_edge[e1.0].clone() + v_edge[e2.0].clone());
            }
        }
        let objective = v_tet.iter().fold(S::zero(), |a, v| a + v.clone())
            + v_edge.iter().fold(S::zero(), |a, v| a + v.clone()) * target.clone();
        DualCertificate3 {
            v_tet,
            v_edge,
            objective,
            residuals,
        }
    }

    /// Recomputes the residuals and the objective; true when every residual
    /// is nonpositive (the stored data is internally consistent).
    pub fn verify(&self, m: &IdealTriangulation3, target: &S) -> bool {
        let again = DualCertificate3::assemble(m, self.v_tet.clone(), self.v_edge.clone(), target);
        again.residuals == self.residuals
            && again.objective == self.objective
            && self.residuals.iter().all(|r| *r <= S::zero())
    }

    /// A verified certificate with positive objective refutes even weak
    /// structures.
    pub fn refutes_weak(&self) -> bool {
        self.objective > S::zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LinearHyperbolicReport<S> {
    /// All angles strictly positive.
    Structure(AngleStructure3<S>),
    /// Angles nonnegative; in strict mode this means the maximal uniform
    /// margin is exactly zero.
    WeakStructure(AngleStructure3<S>),
    /// Not even a weak structure; the certificate proves it.
    None(DualCertificate3<S>),
}

impl<S> LinearHyperbolicReport<S> {
    pub fn structure(&self) -> Option<&AngleStructure3<S>> {
        match self {
            LinearHyperbolicReport::Structure(a) | LinearHyperbolicReport::WeakStructure(a) => {
                Some(a)
            }
            LinearHyperbolicReport::None(_) => None,
        }
    }

    pub fn is_strict(&self) -> bool {
        matches!(self, LinearHyperbolicReport::Structure(_))
    }
}

/// Decides existence of an angle structure with edge sums 2.
pub fn linear_hyperbolic_lp<S: Scalar + 'static>(
    m: &IdealTriangulation3,
    strict: bool,
) -> LinearHyperbolicReport<S> {
    linear_hyperbolic_lp_with_target(m, strict, from_count(2))
}

/// Same decision with a configurable edge-sum target: `target = 2` is the
/// flat interior case, larger values prescribe cone angles of at least a
/// full turn around every edge.
pub fn linear_hyperbolic_lp_with_target<S: Scalar + 'static>(
    m: &IdealTriangulation3,
    strict: bool,
    target: S,
) -> LinearHyperbolicReport<S> {
    let nt = m.n_tets();
    let nv = 3 * nt + usize::from(strict);
    let eps = 3 * nt;
    let mut rows = Vec::new();
    for t in 0..nt {
        let mut row = vec![S::zero(); nv];
        for p in 0..3 {
            row[3 * t + p] = S::one();
        }
        if strict {
            row[eps] = from_count(3);
        }
        rows.push((row, Relation::Eq, S::one()));
    }
    for e in 0..m.n_classes() {
        let mut row = vec![S::zero(); nv];
        for &(tet, slot) in m.class_slots(EdgeClassId(e)) {
            let v = &mut row[3 * tet + PAIR_OF_EDGE[slot]];
            *v = v.clone() + S::one();
        }
        if strict {
            row[eps] = from_count(m.valence(EdgeClassId(e)));
        }
        rows.push((row, Relation::Eq, target.clone()));
    }
    let mut objective = vec![S::zero(); nv];
    if strict {
        objective[eps] = S::one();
    }
    let program = GeneralProgram {
        sense: if strict { Sense::Maximize } else { Sense::Minimize },
        objective,
        rows,
        free: vec![false; nv],
    };
    let std = program.to_standard_form();
    let collect = |vars: &[S], shift: &S| {
        AngleStructure3::new(
            (0..nt)
                .map(|t| {
                    [
                        vars[3 * t].clone() + shift.clone(),
                        vars[3 * t + 1].clone() + shift.clone(),
                        vars[3 * t + 2].clone() + shift.clone(),
                    ]
                })
                .collect(),
        )
    };
    match solve(&std.lp).expect("well-formed system") {
        LpOutcome::Optimal { point, value, .. } => {
            let vars = std.recover_point(&point);
            let margin = if strict { std.recover_value(value) } else { S::zero() };
            // every slot of a pair adds the margin once, so the shifted
            // angles meet the original sums
            let structure = collect(&vars, &margin);
            debug_assert!(structure.verify(m, &target).is_ok());
            if strict && margin > S::zero() {
                LinearHyperbolicReport::Structure(structure)
            } else {
                LinearHyperbolicReport::WeakStructure(structure)
            }
        }
        LpOutcome::Infeasible { farkas } => {
            let cert = DualCertificate3::assemble(
                m,
                farkas[..nt].to_vec(),
                farkas[nt..].to_vec(),
                &target,
            );
            debug_assert!(cert.verify(m, &target) && cert.refutes_weak());
            LinearHyperbolicReport::None(cert)
        }
        LpOutcome::Unbounded { .. } => unreachable!("tetrahedron rows cap the margin by 1/3"),
    }
}

/// Per tetrahedron, four triangle counts (one per cut-off vertex) and three
/// quadrilateral counts (one per opposite-edge pair) of a normal surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSurfaceVector {
    triangles: Vec<[u64; 4]>,
    quads: Vec<[u64; 3]>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalSurfaceError {
    #[error("vector sized for {got} tetrahedra, triangulation has {want}")]
    WrongSize { got: usize, want: usize },
    #[error(
        "edge class {class} is crossed {values:?} times by its incident \
         pieces; a normal surface meets every side of an edge equally"
    )]
    InconsistentEdgeCounts { class: usize, values: Vec<u64> },
}

impl NormalSurfaceVector {
    pub fn new(triangles: Vec<[u64; 4]>, quads: Vec<[u64; 3]>) -> Self {
        assert_eq!(triangles.len(), quads.len(), "one row of each per tetrahedron");
        NormalSurfaceVector { triangles, quads }
    }

    pub fn zero(n_tets: usize) -> Self {
        NormalSurfaceVector {
            triangles: vec![[0; 4]; n_tets],
            quads: vec![[0; 3]; n_tets],
        }
    }

    pub fn n_tets(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangles(&self, t: usize) -> &[u64; 4] {
        &self.triangles[t]
    }

    pub fn quads(&self, t: usize) -> &[u64; 3] {
        &self.quads[t]
    }

    /// Quad-free vectors describe unions of vertex-linking pieces, our
    /// working notion of boundary-parallel.
    pub fn is_quad_free(&self) -> bool {
        self.quads.iter().flatten().all(|&q| q == 0)
    }

    /// Triangle pieces after cutting each quad in two: `t + 2q`.
    pub fn u_of(&self, t: usize) -> u64 {
        self.triangles[t].iter().sum::<u64>() + 2 * self.quads[t].iter().sum::<u64>()
    }

    pub fn u_total(&self) -> u64 {
        (0..self.n_tets()).map(|t| self.u_of(t)).sum()
    }

    /// Pieces crossing one edge slot: triangles at its two endpoints plus
    /// quads of the other two pairs.
    pub fn slot_weight(&self, tet: usize, slot: usize) -> u64 {
        let (i, j) = EDGE_VERTICES[slot];
        let quads: u64 = (0..3)
            .filter(|&p| p != PAIR_OF_EDGE[slot])
            .map(|p| self.quads[tet][p])
            .sum();
        self.triangles[tet][i] + self.triangles[tet][j] + quads
    }

    /// Intersection count with each edge class. Every piece crossing an
    /// edge covers one point of it in one slot, and each point is covered
    /// in every slot around the edge, so the slot weights of a class must
    /// all agree; their common value is the count.
    pub fn edge_counts(&self, m: &IdealTriangulation3) -> Result<Vec<u64>, NormalSurfaceError> {
        if self.n_tets() != m.n_tets() {
            return Err(NormalSurfaceError::WrongSize {
                got: self.n_tets(),
                want: m.n_tets(),
            });
        }
        (0..m.n_classes())
            .map(|e| {
                let values: Vec<u64> = m
                    .class_slots(EdgeClassId(e))
                    .iter()
                    .map(|&(tet, slot)| self.slot_weight(tet, slot))
                    .collect();
                if values.windows(2).any(|w| w[0] != w[1]) {
                    return Err(NormalSurfaceError::InconsistentEdgeCounts { class: e, values });
                }
                Ok(values[0])
            })
            .collect()
    }
}

/// Euler characteristic of the surface carried by the counts: vertices on
/// the edges, minus half the triangle pieces after quads are split in two.
pub fn normal_chi(
    m: &IdealTriangulation3,
    s: &NormalSurfaceVector,
) -> Result<Rational, NormalSurfaceError> {
    let i_total: u64 = s.edge_counts(m)?.iter().sum();
    Ok(Rational::new(
        BigInt::from(2 * i_total as i64 - s.u_total() as i64),
        BigInt::from(2),
    ))
}

/// Reads the counts into dual multipliers: `v_tet = -u`, `v_edge = i`. The
/// residual at a (tet, pair) is exactly `-2` times that pair's quad count,
/// so the constraints always hold, with equality exactly on quad-free
/// pairs, and the objective lands on twice the Euler characteristic.
pub fn certificate_from_normal_surface<S: Scalar>(
    m: &IdealTriangulation3,
    s: &NormalSurfaceVector,
) -> Result<DualCertificate3<S>, NormalSurfaceError> {
    let counts = s.edge_counts(m)?;
    let v_tet = (0..m.n_tets())
        .map(|t| S::zero() - from_count::<S>(s.u_of(t) as usize))
        .collect();
    let v_edge = counts.iter().map(|&i| from_count(i as usize)).collect();
    let cert = DualCertificate3::assemble(m, v_tet, v_edge, &from_count(2));
    debug_assert!(cert.verify(m, &from_count(2)));
    Ok(cert)
}

/// What one normal surface says about angle structures.
#[derive(Clone, Debug, PartialEq)]
pub struct HextEntry {
    /// Whether the counts pass the edge-consistency requirement at all.
    pub valid: bool,
    pub chi: Option<Rational>,
    /// Quad-free, hence a union of vertex links (heuristic reading).
    pub boundary_parallel: bool,
    /// Positive Euler characteristic refutes weak structures.
    pub obstructs_weak: bool,
    /// Nonnegative Euler characteristic of a non-boundary-parallel surface
    /// refutes strict structures.
    pub obstructs_strict: bool,
}

/// Surface-by-surface obstruction report, cross-checked against the LP.
#[derive(Clone, Debug, PartialEq)]
pub struct HextReport {
    pub entries: Vec<HextEntry>,
    pub weak_feasible: bool,
    pub strict_feasible: bool,
    /// Every obstruction claim agrees with the LP verdicts.
    pub consistent: bool,
}

/// Tests each supplied surface as an obstruction and verifies the verdicts
/// against the angle-structure LP: obstructed modes must be infeasible.
pub fn hext_check(m: &IdealTriangulation3, surfaces: &[NormalSurfaceVector]) -> HextReport {
    let entries: Vec<HextEntry> = surfaces
        .iter()
        .map(|s| match normal_chi(m, s) {
            Ok(chi) => {
                let boundary_parallel = s.is_quad_free();
                let obstructs_weak = chi > Rational::new(0.into(), 1.into());
                let obstructs_strict =
                    !boundary_parallel && chi >= Rational::new(0.into(), 1.into());
                HextEntry {
                    valid: true,
                    chi: Some(chi),
                    boundary_parallel,
                    obstructs_weak,
                    obstructs_strict,
                }
            }
            Err(_) => HextEntry {
                valid: false,
                chi: None,
                boundary_parallel: s.is_quad_free(),
                obstructs_weak: false,
                obstructs_strict: false,
            },
        })
        .collect();
    let weak_feasible = !matches!(
        linear_hyperbolic_lp::<Rational>(m, false),
        LinearHyperbolicReport::None(_)
    );
    let strict_feasible = linear_hyperbolic_lp::<Rational>(m, true).is_strict();
    let consistent = entries.iter().all(|en| {
        (!en.obstructs_weak || !weak_feasible) && (!en.obstructs_strict || !strict_feasible)
    });
    HextReport {
        entries,
        weak_feasible,
        strict_feasible,
        consistent,
    }
}

/// Two tetrahedra glued face-for-face with a cyclic twist on each face;
/// the edges assemble into two classes of valence 6.
pub fn two_tet_census() -> IdealTriangulation3 {
    let specs = [
        GluingSpec { tet: 0, face: 0, other_tet: 1, other_face: 0, map: [0, 2, 3, 1] },
        GluingSpec { tet: 0, face: 1, other_tet: 1, other_face: 1, map: [2, 1, 3, 0] },
        GluingSpec { tet: 0, face: 2, other_tet: 1, other_face: 2, map: [1, 3, 2, 0] },
        GluingSpec { tet: 0, face: 3, other_tet: 1, other_face: 3, map: [1, 2, 0, 3] },
    ];
    build_ideal_triangulation(2, &specs).expect("hand-checked gluing")
}

/// One tetrahedron with both gluings the same four-cycle relabeling; the
/// edges fall into classes of valence 4 and 2.
pub fn one_tet_two_classes() -> IdealTriangulation3 {
    let specs = [
        GluingSpec { tet: 0, face: 0, other_tet: 0, other_face: 1, map: [1, 2, 3, 0] },
        GluingSpec { tet: 0, face: 2, other_tet: 0, other_face: 3, map: [1, 2, 3, 0] },
    ];
    build_ideal_triangulation(1, &specs).expect("hand-checked gluing")
}

/// One tetrahedron glued so that two edges close up after a single wedge
/// (valences 1, 4, 1). A valence-1 edge demands a single angle equal to 2,
/// which the tetrahedron sum caps at 1, so no weak structure exists.
pub fn one_tet_pinched() -> IdealTriangulation3 {
    let specs = [
        GluingSpec { tet: 0, face: 0, other_tet: 0, other_face: 1, map: [1, 0, 2, 3] },
        GluingSpec { tet: 0, face: 2, other_tet: 0, other_face: 3, map: [0, 1, 3, 2] },
    ];
    build_ideal_triangulation(1, &specs).expect("hand-checked gluing")
}

/// Two tetrahedra whose edges form classes of valence 2 and 10. The
/// valence-2 class forces its two angles to 1 apiece, flattening both
/// tetrahedra: a weak structure exists but no strict one.
pub fn two_tet_weak_only() -> IdealTriangulation3 {
    let specs = [
        GluingSpec { tet: 0, face: 0, other_tet: 1, other_face: 0, map: [0, 2, 3, 1] },
        GluingSpec { tet: 0, face: 1, other_tet: 1, other_face: 1, map: [2, 1, 3, 0] },
        GluingSpec { tet: 0, face: 2, other_tet: 1, other_face: 2, map: [1, 0, 2, 3] },
        GluingSpec { tet: 0, face: 3, other_tet: 1, other_face: 3, map: [0, 1, 2, 3] },
    ];
    build_ideal_triangulation(2, &specs).expect("hand-checked gluing")
}
