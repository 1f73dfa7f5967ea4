//! Face sets, closed subcomplexes, and separating edge families.

use crate::surface::{Corner, EdgeId, FaceId, TriangulatedSurface, VertexId};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubcomplexError {
    #[error("strict cutset enumeration requires a genuine simplicial complex")]
    NotSimplicial,
    #[error("subcomplex enumeration supports at most {0} faces")]
    TooLarge(usize),
}

/// A set of (closed) faces of a fixed surface.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct FaceSet {
    faces: BTreeSet<FaceId>,
}

impl FaceSet {
    pub fn new() -> FaceSet {
        FaceSet::default()
    }
    pub fn from_iter<I: IntoIterator<Item = FaceId>>(iter: I) -> FaceSet {
        FaceSet {
            faces: iter.into_iter().collect(),
        }
    }
    pub fn all(t: &TriangulatedSurface) -> FaceSet {
        FaceSet::from_iter(t.faces())
    }
    pub fn insert(&mut self, f: FaceId) {
        self.faces.insert(f);
    }
    pub fn contains(&self, f: FaceId) -> bool {
        self.faces.contains(&f)
    }
    pub fn len(&self) -> usize {
        self.faces.len()
    }
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
    pub fn iter(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.faces.iter().copied()
    }
    pub fn is_proper(&self, t: &TriangulatedSurface) -> bool {
        !self.is_empty() && self.len() < t.n_faces()
    }
    pub fn complement(&self, t: &TriangulatedSurface) -> FaceSet {
        FaceSet::from_iter(t.faces().filter(|f| !self.contains(*f)))
    }

    /// Number of sides of `e` lying in member faces (0, 1 or 2; a self-glued
    /// edge inside one member face counts 2).
    pub fn incidence_count(&self, t: &TriangulatedSurface, e: EdgeId) -> u8 {
        t.edge(e)
            .darts()
            .filter(|d| self.contains(d.face()))
            .count() as u8
    }

    /// E(F): edges incident to at least one member face.
    pub fn edges_incident(&self, t: &TriangulatedSurface) -> BTreeSet<EdgeId> {
        let mut out = BTreeSet::new();
        for f in self.iter() {
            out.extend(t.face_edges(f));
        }
        out
    }

    /// Interior edges of `t` with members on exactly one side. This is both
    /// the relative boundary of the face set and the dual-graph cut between
    /// it and its complement.
    pub fn relative_boundary(&self, t: &TriangulatedSurface) -> BTreeSet<EdgeId> {
        t.edge_ids()
            .filter(|&e| !t.edge(e).is_boundary() && self.incidence_count(t, e) == 1)
            .collect()
    }

    /// Is the face-adjacency graph induced on this set connected?
    pub fn is_dual_connected(&self, t: &TriangulatedSurface) -> bool {
        let Some(start) = self.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            for s in 0..3 {
                if let Some(p) = t.glue_of(crate::surface::Dart::new(f, s)) {
                    let g = p.face();
                    if self.contains(g) && seen.insert(g) {
                        stack.push(g);
                    }
                }
            }
        }
        seen.len() == self.len()
    }

    pub fn closure(&self, t: &TriangulatedSurface) -> ClosedSubcomplex {
        let mut edges = BTreeSet::new();
        let mut vertices = BTreeSet::new();
        for f in self.iter() {
            edges.extend(t.face_edges(f));
            for s in 0..3 {
                vertices.insert(t.vertex_of(Corner::new(f, s)));
            }
        }
        ClosedSubcomplex {
            faces: self.faces.clone(),
            edges,
            vertices,
        }
    }
}

/// A downward-closed collection of cells: with every face its edges, with
/// every edge its endpoints. May contain edges in no member face and
/// vertices on no member edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedSubcomplex {
    faces: BTreeSet<FaceId>,
    edges: BTreeSet<EdgeId>,
    vertices: BTreeSet<VertexId>,
}

impl ClosedSubcomplex {
    /// Validates closedness.
    pub fn new(
        t: &TriangulatedSurface,
        faces: BTreeSet<FaceId>,
        edges: BTreeSet<EdgeId>,
        vertices: BTreeSet<VertexId>,
    ) -> Option<ClosedSubcomplex> {
        for &f in &faces {
            if t.face_edges(f).iter().any(|e| !edges.contains(e)) {
                return None;
            }
        }
        for &e in &edges {
            let (a, b) = t.edge_endpoints(e);
            if !vertices.contains(&a) || !vertices.contains(&b) {
                return None;
            }
        }
        Some(ClosedSubcomplex {
            faces,
            edges,
            vertices,
        })
    }

    pub fn of_edges<I: IntoIterator<Item = EdgeId>>(
        t: &TriangulatedSurface,
        edges: I,
    ) -> ClosedSubcomplex {
        let edges: BTreeSet<EdgeId> = edges.into_iter().collect();
        let mut vertices = BTreeSet::new();
        for &e in &edges {
            let (a, b) = t.edge_endpoints(e);
            vertices.insert(a);
            vertices.insert(b);
        }
        ClosedSubcomplex {
            faces: BTreeSet::new(),
            edges,
            vertices,
        }
    }

    pub fn faces(&self) -> &BTreeSet<FaceId> {
        &self.faces
    }
    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }
    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Frontier edges E'(F): edges outside the subcomplex with at least one
    /// endpoint in it, with the endpoint count n(e) in {1, 2} (2 for a loop
    /// based at a member vertex or an edge joining two member vertices).
    pub fn frontier(&self, t: &TriangulatedSurface) -> Vec<(EdgeId, u8)> {
        let mut out = Vec::new();
        for e in t.edge_ids() {
            if self.edges.contains(&e) {
                continue;
            }
            let (a, b) = t.edge_endpoints(e);
            let n = self.vertices.contains(&a) as u8 + self.vertices.contains(&b) as u8;
            if n > 0 {
                out.push((e, n));
            }
        }
        out
    }
}

/// Nonempty proper face sets that are dual-connected with dual-connected
/// complement, in mask order. Each set and its complement are both emitted.
pub fn enumerate_simple_subcomplexes(
    t: &TriangulatedSurface,
) -> Result<Vec<FaceSet>, SubcomplexError> {
    let n = t.n_faces();
    if n > 24 {
        return Err(SubcomplexError::TooLarge(24));
    }
    let mut out = Vec::new();
    for mask in 1..(1u64 << n) - 1 {
        let set = FaceSet::from_iter((0..n).filter(|i| mask >> i & 1 == 1).map(FaceId));
        if set.is_dual_connected(t) && set.complement(t).is_dual_connected(t) {
            out.push(set);
        }
    }
    Ok(out)
}

/// Do all edges in the family share a common vertex?
pub fn is_coterminous(t: &TriangulatedSurface, edges: &BTreeSet<EdgeId>) -> bool {
    let Some(&first) = edges.iter().next() else {
        return true;
    };
    let (a, b) = t.edge_endpoints(first);
    let mut candidates = vec![a];
    if b != a {
        candidates.push(b);
    }
    candidates
        .into_iter()
        .any(|v| edges.iter().all(|&e| t.endpoint_multiplicity(e, v) > 0))
}

/// A minimal separating edge family: the dual-graph cut between a simple
/// subcomplex and its complement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cutset {
    pub edges: BTreeSet<EdgeId>,
    /// True when the family is crossed by a single closed curve missing the
    /// boundary of the surface; false for boundary-to-boundary arcs or
    /// multi-curve cuts.
    pub closed_curve: bool,
}

/// All minimal non-coterminous cutsets: deduplicated relative boundaries of
/// simple subcomplexes (minimality holds because both sides are connected).
/// Families whose edges share a vertex are never separating curve systems in
/// their own right (their curve bounds a vertex neighbourhood) and are
/// dropped. With `strict_simplicial` the input must be a genuine simplicial
/// complex.
pub fn enumerate_minimal_noncoterminous_cutsets(
    t: &TriangulatedSurface,
    strict_simplicial: bool,
) -> Result<Vec<Cutset>, SubcomplexError> {
    if strict_simplicial && !t.is_simplicial() {
        return Err(SubcomplexError::NotSimplicial);
    }
    let mut seen: BTreeSet<BTreeSet<EdgeId>> = BTreeSet::new();
    let mut out = Vec::new();
    for set in enumerate_simple_subcomplexes(t)? {
        let edges = set.relative_boundary(t);
        if edges.is_empty() || !seen.insert(edges.clone()) || is_coterminous(t, &edges) {
            continue;
        }
        // Trace the cut: boundary circles of the restricted sub-surface that
        // consist purely of cut darts correspond to closed curves.
        let faces: Vec<FaceId> = set.iter().collect();
        let sub = t.restriction(&faces);
        let circles = sub.boundary_components();
        let is_cut_dart = |d: crate::surface::Dart| {
            let orig = crate::surface::Dart(3 * faces[d.face().0].0 + d.slot());
            t.glue_of(orig).is_some()
        };
        let all_cut: Vec<bool> = circles
            .iter()
            .map(|c| c.iter().all(|&d| is_cut_dart(d)))
            .collect();
        let closed_curve = circles.len() == 1 && all_cut[0];
        out.push(Cutset { edges, closed_curve });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn single_triangle_has_no_simple_subcomplexes() {
        let t = catalog::single_triangle();
        assert!(enumerate_simple_subcomplexes(&t).unwrap().is_empty());
        assert!(enumerate_minimal_noncoterminous_cutsets(&t, true)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn disk_singletons_are_simple_but_their_cut_is_coterminous() {
        let t = catalog::square_disk();
        let simple = enumerate_simple_subcomplexes(&t).unwrap();
        assert_eq!(simple.len(), 2);
        for s in &simple {
            assert_eq!(s.len(), 1);
            assert_eq!(s.relative_boundary(&t).len(), 1); // the diagonal
        }
        // A single edge trivially has coterminous endpoints.
        assert!(enumerate_minimal_noncoterminous_cutsets(&t, true)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn strict_mode_rejects_semi_simplicial_input() {
        let t = catalog::torus_two_faces();
        assert_eq!(
            enumerate_minimal_noncoterminous_cutsets(&t, true).unwrap_err(),
            SubcomplexError::NotSimplicial
        );
        assert!(enumerate_minimal_noncoterminous_cutsets(&t, false).is_ok());
    }

    #[test]
    fn pillowcase_face_cut_is_one_closed_curve() {
        let t = catalog::pillowcase();
        let cuts = enumerate_minimal_noncoterminous_cutsets(&t, false).unwrap();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].edges.len(), 3);
        assert!(cuts[0].closed_curve);
    }

    /// Independent oracle: a set of interior edges is a reported cutset iff
    /// deleting it from the face-adjacency graph disconnects the faces and no
    /// proper subset does.
    fn bond_oracle(t: &crate::surface::TriangulatedSurface, max_size: usize) -> Vec<BTreeSet<EdgeId>> {
        let interior: Vec<EdgeId> = t
            .edge_ids()
            .filter(|&e| !t.edge(e).is_boundary())
            .collect();
        let dual = t.poincare_dual();
        let disconnects = |removed: &BTreeSet<EdgeId>| {
            let mut seen = vec![false; t.n_faces()];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(f) = stack.pop() {
                for (g, e) in dual.neighbors(crate::surface::FaceId(f)) {
                    if !removed.contains(&e) && !seen[g.0] {
                        seen[g.0] = true;
                        stack.push(g.0);
                    }
                }
            }
            !seen.iter().all(|&s| s)
        };
        let mut found = Vec::new();
        for mask in 1u64..1 << interior.len() {
            if (mask.count_ones() as usize) > max_size {
                continue;
            }
            let set: BTreeSet<EdgeId> = interior
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if !disconnects(&set) {
                continue;
            }
            let minimal = set.iter().all(|&skip| {
                let mut smaller = set.clone();
                smaller.remove(&skip);
                !disconnects(&smaller)
            });
            if minimal && !is_coterminous(t, &set) {
                found.push(set);
            }
        }
        found
    }

    #[test]
    fn octahedron_cutsets_match_brute_force_and_contain_equators() {
        let t = catalog::octahedron();
        let cuts = enumerate_minimal_noncoterminous_cutsets(&t, true).unwrap();
        // No emitted family is coterminous (vertex stars are filtered).
        assert!(cuts.iter().all(|c| !is_coterminous(&t, &c.edges)));

        let mut small: Vec<BTreeSet<EdgeId>> = cuts
            .iter()
            .filter(|c| c.edges.len() <= 4)
            .map(|c| c.edges.clone())
            .collect();
        small.sort();
        small.dedup();
        let mut oracle = bond_oracle(&t, 4);
        oracle.sort();
        assert_eq!(small, oracle);

        // The three equators are present: 4-edge closed curves splitting the
        // faces 4/4. (Boundaries of adjacent face pairs also have 4 edges
        // but split 2/6.)
        let dual = t.poincare_dual();
        let side_of_face0 = |cut: &BTreeSet<EdgeId>| {
            let mut seen = vec![false; t.n_faces()];
            seen[0] = true;
            let mut stack = vec![crate::surface::FaceId(0)];
            while let Some(f) = stack.pop() {
                for (g, e) in dual.neighbors(f) {
                    if !cut.contains(&e) && !seen[g.0] {
                        seen[g.0] = true;
                        stack.push(g);
                    }
                }
            }
            seen.iter().filter(|&&s| s).count()
        };
        let equators: Vec<_> = cuts
            .iter()
            .filter(|c| c.edges.len() == 4 && side_of_face0(&c.edges) == 4)
            .collect();
        assert_eq!(equators.len(), 3);
        assert!(equators.iter().all(|c| c.closed_curve));
    }

    #[test]
    fn closure_and_frontier_on_octahedron() {
        let t = catalog::octahedron();
        // Hemisphere: the four faces around the vertex of corner 0.
        let v = t.vertex_of(Corner(0));
        let star = FaceSet::from_iter(
            t.faces()
                .filter(|&f| (0..3).any(|s| t.vertex_of(Corner::new(f, s)) == v)),
        );
        assert_eq!(star.len(), 4);
        let closed = star.closure(&t);
        assert_eq!(closed.faces().len(), 4);
        assert_eq!(closed.edges().len(), 8); // 4 spokes + 4 equator edges
        assert_eq!(closed.vertices().len(), 5);
        assert_eq!(closed.euler_characteristic(), 1);
        // Frontier: the opposite star, each edge with one endpoint inside.
        let frontier = closed.frontier(&t);
        assert_eq!(frontier.len(), 4);
        assert!(frontier.iter().all(|&(_, n)| n == 1));
    }

    #[test]
    fn torus_frontier_multiplicities() {
        // One-vertex torus: the closure of one face contains the vertex, so
        // every outside edge is a loop with both endpoints inside: n = 2.
        let t = catalog::torus_two_faces();
        let set = FaceSet::from_iter([crate::surface::FaceId(0)]);
        let closed = set.closure(&t);
        assert_eq!(closed.edges().len(), 3);
        assert!(closed.frontier(&t).is_empty()); // all edges belong to both faces
        let edge_only = ClosedSubcomplex::of_edges(&t, [EdgeId(0)]);
        let frontier = edge_only.frontier(&t);
        assert_eq!(frontier.len(), 2);
        assert!(frontier.iter().all(|&(_, n)| n == 2));
    }
}
