//! Dart-based oriented semi-simplicial triangulated surfaces.
//!
//! A face is an ordered triple of corner slots; corner slot `i` sits opposite
//! edge slot `i`, and edge slot `i` joins corners `i+1` and `i+2` (mod 3).
//! A dart is a (face, edge-slot) pair encoded as `3*face + slot`; dart
//! `(t, i)` traverses its edge from corner `i+1` towards corner `i+2`, so the
//! three darts of a face run around it coherently.
//!
//! A gluing identifies two darts head-to-tail (the shared edge is traversed
//! in opposite directions by its two darts). This keeps the whole complex
//! coherently oriented by construction: an orientation-reversing
//! identification is not expressible, so there is no "non-orientable input"
//! failure mode. Distinct closed cells may meet in several lower-dimensional
//! cells: two faces can share all three edges, a face may be glued to itself,
//! and a vertex can appear several times in one face.

use std::collections::BTreeSet;
use thiserror::Error;

/// Face index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FaceId(pub usize);

/// Edge-class index: one class per glued dart pair, one per unglued (boundary) dart.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub usize);

/// Vertex-class index: one class per orbit of the corner walk.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

/// A directed edge side: face × edge-slot, encoded as `3*face + slot`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(face: FaceId, slot: usize) -> Dart {
        debug_assert!(slot < 3);
        Dart(3 * face.0 + slot)
    }
    pub fn face(self) -> FaceId {
        FaceId(self.0 / 3)
    }
    pub fn slot(self) -> usize {
        self.0 % 3
    }
    /// Corner at the tail of this dart (slot + 1 mod 3).
    pub fn tail(self) -> Corner {
        Corner::new(self.face(), (self.slot() + 1) % 3)
    }
    /// Corner at the head of this dart (slot + 2 mod 3).
    pub fn head(self) -> Corner {
        Corner::new(self.face(), (self.slot() + 2) % 3)
    }
}

/// A face corner: face × corner-slot, encoded as `3*face + slot`.
/// Corner slot `i` is opposite edge slot `i` of the same face.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Corner(pub usize);

impl Corner {
    pub fn new(face: FaceId, slot: usize) -> Corner {
        debug_assert!(slot < 3);
        Corner(3 * face.0 + slot)
    }
    pub fn face(self) -> FaceId {
        FaceId(self.0 / 3)
    }
    pub fn slot(self) -> usize {
        self.0 % 3
    }
    /// The dart opposite this corner (same slot index).
    pub fn opposite_dart(self) -> Dart {
        Dart(self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("dart {0} out of range for {1} faces")]
    DanglingDart(usize, usize),
    #[error("dart {0} appears in more than one gluing")]
    DuplicateGluing(usize),
}

/// An edge class. `lead` is the lowest-index dart; interior edges also carry
/// the glued partner. The edge is oriented by its lead dart.
#[derive(Clone, Debug)]
pub struct Edge {
    pub lead: Dart,
    pub partner: Option<Dart>,
}

impl Edge {
    pub fn is_boundary(&self) -> bool {
        self.partner.is_none()
    }
    pub fn dart_count(&self) -> usize {
        if self.partner.is_some() {
            2
        } else {
            1
        }
    }
    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        std::iter::once(self.lead).chain(self.partner)
    }
}

/// A vertex class: the corners of its link walk, in walk order. For a
/// boundary vertex the walk is a path (both end corners touch an unglued
/// dart); for an interior vertex it is a cycle.
#[derive(Clone, Debug)]
pub struct Vertex {
    pub corners: Vec<Corner>,
    pub on_boundary: bool,
}

#[derive(Clone, Debug)]
pub struct TriangulatedSurface {
    n_faces: usize,
    glue: Vec<Option<Dart>>, // involution without fixed points
    edge_of: Vec<EdgeId>,
    edges: Vec<Edge>,
    vertex_of: Vec<VertexId>,
    vertices: Vec<Vertex>,
}

/// Builds the complex from a face count and a list of dart gluings.
/// Edge and vertex classes are derived; ids are assigned in scan order of the
/// lowest dart/corner, so they are stable across rebuilds of the same data.
pub fn build_surface(
    n_faces: usize,
    gluings: &[(Dart, Dart)],
) -> Result<TriangulatedSurface, ComplexError> {
    let n_darts = 3 * n_faces;
    let mut glue: Vec<Option<Dart>> = vec![None; n_darts];
    for &(a, b) in gluings {
        for d in [a, b] {
            if d.0 >= n_darts {
                return Err(ComplexError::DanglingDart(d.0, n_faces));
            }
        }
        // a == b is a fixed point of the pairing: the dart occurs twice.
        if a == b || glue[a.0].is_some() || glue[b.0].is_some() {
            return Err(ComplexError::DuplicateGluing(if glue[a.0].is_some() {
                a.0
            } else {
                b.0
            }));
        }
        glue[a.0] = Some(b);
        glue[b.0] = Some(a);
    }

    // Edge classes, by lowest dart.
    let mut edge_of = vec![EdgeId(usize::MAX); n_darts];
    let mut edges = Vec::new();
    for d in 0..n_darts {
        if edge_of[d] != EdgeId(usize::MAX) {
            continue;
        }
        let id = EdgeId(edges.len());
        let partner = glue[d];
        edge_of[d] = id;
        if let Some(p) = partner {
            edge_of[p.0] = id;
        }
        edges.push(Edge {
            lead: Dart(d),
            partner,
        });
    }

    // Vertex classes: orbits of the corner walk.
    let next = |c: Corner| -> Option<Corner> {
        // Cross the edge at slot j+1; land on the glued face's tail corner.
        let d = Dart::new(c.face(), (c.slot() + 1) % 3);
        glue[d.0].map(|p| p.tail())
    };
    let prev = |c: Corner| -> Option<Corner> {
        // Cross the edge at slot j+2; land on the glued face's head corner.
        let d = Dart::new(c.face(), (c.slot() + 2) % 3);
        glue[d.0].map(|p| p.head())
    };
    let mut vertex_of = vec![VertexId(usize::MAX); n_darts];
    let mut vertices = Vec::new();
    for c0 in 0..n_darts {
        if vertex_of[c0] != VertexId(usize::MAX) {
            continue;
        }
        let id = VertexId(vertices.len());
        let start = Corner(c0);
        let mut corners = vec![start];
        let mut on_boundary = false;
        let mut cur = next(start);
        loop {
            match cur {
                Some(c) if c == start => break, // closed interior link
                Some(c) => {
                    debug_assert_eq!(vertex_of[c.0], VertexId(usize::MAX));
                    corners.push(c);
                    cur = next(c);
                }
                None => {
                    // Hit the boundary; finish the other side of the path.
                    on_boundary = true;
                    let mut back = prev(start);
                    while let Some(c) = back {
                        debug_assert_eq!(vertex_of[c.0], VertexId(usize::MAX));
                        corners.insert(0, c);
                        back = prev(c);
                    }
                    break;
                }
            }
        }
        for c in &corners {
            vertex_of[c.0] = id;
        }
        vertices.push(Vertex {
            corners,
            on_boundary,
        });
    }

    let surf = TriangulatedSurface {
        n_faces,
        glue,
        edge_of,
        edges,
        vertex_of,
        vertices,
    };
    // Glued corners must land in one class; cheap coherence check.
    debug_assert!(surf.edges.iter().all(|e| {
        e.partner.map_or(true, |p| {
            surf.vertex_of(e.lead.tail()) == surf.vertex_of(p.head())
                && surf.vertex_of(e.lead.head()) == surf.vertex_of(p.tail())
        })
    }));
    Ok(surf)
}

impl TriangulatedSurface {
    pub fn n_faces(&self) -> usize {
        self.n_faces
    }
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn faces(&self) -> impl Iterator<Item = FaceId> {
        (0..self.n_faces).map(FaceId)
    }
    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..3 * self.n_faces).map(Dart)
    }
    pub fn corners(&self) -> impl Iterator<Item = Corner> {
        (0..3 * self.n_faces).map(Corner)
    }
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }
    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn glue_of(&self, d: Dart) -> Option<Dart> {
        self.glue[d.0]
    }
    pub fn edge_of(&self, d: Dart) -> EdgeId {
        self.edge_of[d.0]
    }
    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }
    pub fn vertex_of(&self, c: Corner) -> VertexId {
        self.vertex_of[c.0]
    }
    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn n_interior_edges(&self) -> usize {
        self.edges.iter().filter(|e| !e.is_boundary()).count()
    }
    pub fn n_boundary_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.is_boundary()).count()
    }
    pub fn euler_characteristic(&self) -> i64 {
        self.n_vertices() as i64 - self.n_edges() as i64 + self.n_faces as i64
    }

    /// The three edge classes of a face, by slot (duplicates possible for
    /// self-glued faces).
    pub fn face_edges(&self, t: FaceId) -> [EdgeId; 3] {
        [
            self.edge_of(Dart::new(t, 0)),
            self.edge_of(Dart::new(t, 1)),
            self.edge_of(Dart::new(t, 2)),
        ]
    }

    /// Endpoint vertex classes (tail, head) along the lead dart.
    pub fn edge_endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let lead = self.edges[e.0].lead;
        (self.vertex_of(lead.tail()), self.vertex_of(lead.head()))
    }

    /// How many endpoints of `e` lie at `v` (2 for a loop based at `v`).
    pub fn endpoint_multiplicity(&self, e: EdgeId, v: VertexId) -> u8 {
        let (a, b) = self.edge_endpoints(e);
        (a == v) as u8 + (b == v) as u8
    }

    /// One step of the corner walk (counterclockwise around the vertex);
    /// `None` when the crossing edge is unglued.
    pub fn walk_next(&self, c: Corner) -> Option<Corner> {
        let d = Dart::new(c.face(), (c.slot() + 1) % 3);
        self.glue[d.0].map(|p| p.tail())
    }
    /// Inverse step of `walk_next`.
    pub fn walk_prev(&self, c: Corner) -> Option<Corner> {
        let d = Dart::new(c.face(), (c.slot() + 2) % 3);
        self.glue[d.0].map(|p| p.head())
    }

    pub fn is_closed(&self) -> bool {
        self.edges.iter().all(|e| !e.is_boundary())
    }

    /// Connectivity of the face adjacency (≡ connectivity of the complex:
    /// in this model faces can only meet along shared edges).
    pub fn is_connected(&self) -> bool {
        if self.n_faces == 0 {
            return false;
        }
        let mut seen = vec![false; self.n_faces];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for s in 0..3 {
                if let Some(p) = self.glue[3 * t + s] {
                    let u = p.face().0;
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// True when the complex is a genuine simplicial complex: no loops, no
    /// repeated vertices in a face, and distinct edges/faces have distinct
    /// vertex supports.
    pub fn is_simplicial(&self) -> bool {
        let mut edge_supports = BTreeSet::new();
        for e in self.edges.iter() {
            let lead = e.lead;
            let (a, b) = (self.vertex_of(lead.tail()), self.vertex_of(lead.head()));
            if a == b {
                return false;
            }
            let key = (a.min(b), a.max(b));
            if !edge_supports.insert(key) {
                return false;
            }
        }
        let mut face_supports = BTreeSet::new();
        for t in 0..self.n_faces {
            let mut vs: Vec<VertexId> = (0..3).map(|s| self.vertex_of(Corner(3 * t + s))).collect();
            vs.sort();
            if vs[0] == vs[1] || vs[1] == vs[2] {
                return false;
            }
            if !face_supports.insert(vs) {
                return false;
            }
        }
        true
    }

    /// Boundary circles as cyclic dart sequences (tail-to-head order).
    pub fn boundary_components(&self) -> Vec<Vec<Dart>> {
        // Each boundary vertex has exactly one unglued dart whose tail is
        // that vertex; following head -> tail closes the circles.
        let mut out_dart = vec![None; self.n_vertices()];
        for d in self.darts() {
            if self.glue[d.0].is_none() {
                let v = self.vertex_of(d.tail());
                debug_assert!(out_dart[v.0].is_none());
                out_dart[v.0] = Some(d);
            }
        }
        let mut seen = vec![false; 3 * self.n_faces];
        let mut circles = Vec::new();
        for d0 in self.darts() {
            if self.glue[d0.0].is_some() || seen[d0.0] {
                continue;
            }
            let mut circle = Vec::new();
            let mut d = d0;
            loop {
                seen[d.0] = true;
                circle.push(d);
                let v = self.vertex_of(d.head());
                d = out_dart[v.0].expect("boundary walk leaves a boundary vertex");
                if d == d0 {
                    break;
                }
            }
            circles.push(circle);
        }
        circles
    }

    /// Connected surface with χ = 1 and one boundary circle.
    pub fn is_disk(&self) -> bool {
        self.is_connected() && self.euler_characteristic() == 1
    }

    /// The face-adjacency multigraph: one node per face, one edge per
    /// interior edge class.
    pub fn poincare_dual(&self) -> DualGraph {
        let mut dual_edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(p) = e.partner {
                dual_edges.push((e.lead.face(), p.face(), EdgeId(i)));
            }
        }
        DualGraph {
            n_faces: self.n_faces,
            edges: dual_edges,
        }
    }

    /// The subcomplex spanned by `faces` as its own surface, with faces
    /// renumbered in the given order; gluings between kept faces survive,
    /// every other edge becomes boundary.
    pub fn restriction(&self, faces: &[FaceId]) -> TriangulatedSurface {
        let mut new_index = vec![usize::MAX; self.n_faces];
        for (i, f) in faces.iter().enumerate() {
            new_index[f.0] = i;
        }
        let mut gluings = Vec::new();
        for (i, f) in faces.iter().enumerate() {
            for s in 0..3 {
                if let Some(p) = self.glue[3 * f.0 + s] {
                    let j = new_index[p.face().0];
                    if j == usize::MAX {
                        continue;
                    }
                    let a = Dart(3 * i + s);
                    let b = Dart(3 * j + p.slot());
                    if a < b {
                        gluings.push((a, b));
                    }
                }
            }
        }
        build_surface(faces.len(), &gluings).expect("restriction of valid gluing data")
    }
}

/// Poincaré dual 1-skeleton: nodes are faces, edges are interior edges.
#[derive(Clone, Debug)]
pub struct DualGraph {
    pub n_faces: usize,
    pub edges: Vec<(FaceId, FaceId, EdgeId)>,
}

impl DualGraph {
    pub fn neighbors(&self, t: FaceId) -> Vec<(FaceId, EdgeId)> {
        let mut out = Vec::new();
        for &(a, b, e) in &self.edges {
            if a == t {
                out.push((b, e));
            }
            if b == t {
                out.push((a, e));
            }
        }
        out
    }

    /// Is the induced subgraph on `subset` connected (and nonempty)?
    pub fn is_connected_subset(&self, subset: &BTreeSet<FaceId>) -> bool {
        let Some(&start) = subset.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for &(a, b, _) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == t && subset.contains(&y) && seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
        seen.len() == subset.len()
    }
}
