//! Small reference triangulations used across the test suite and examples.

use crate::surface::{build_surface, Corner, Dart, FaceId, TriangulatedSurface, VertexId};
use std::collections::HashMap;

/// Builds a surface from faces given as oriented vertex triples. Dart
/// `(t, i)` carries the directed support `v[i+1] -> v[i+2]`; two darts are
/// glued when their supports are mutually reversed. A directed support seen
/// twice means the triples are not coherently oriented (or not a surface),
/// which this builder rejects.
pub fn from_vertex_triples(triples: &[[usize; 3]]) -> Result<TriangulatedSurface, String> {
    let mut by_support: HashMap<(usize, usize), Dart> = HashMap::new();
    for (t, tri) in triples.iter().enumerate() {
        for s in 0..3 {
            let key = (tri[(s + 1) % 3], tri[(s + 2) % 3]);
            if by_support.insert(key, Dart(3 * t + s)).is_some() {
                return Err(format!(
                    "directed edge {}->{} used twice; triples are not coherently oriented",
                    key.0, key.1
                ));
            }
        }
    }
    let mut gluings = Vec::new();
    for (&(u, w), &d) in &by_support {
        if let Some(&p) = by_support.get(&(w, u)) {
            if d < p {
                gluings.push((d, p));
            }
        }
    }
    gluings.sort();
    build_surface(triples.len(), &gluings).map_err(|e| e.to_string())
}

/// Recovers where each triple label ended up: vertex classes are numbered in
/// corner scan order, so they need not match the labels fed to
/// [`from_vertex_triples`]. `triples` must be the ones the surface was built
/// from.
pub fn vertex_classes(
    t: &TriangulatedSurface,
    triples: &[[usize; 3]],
) -> HashMap<usize, VertexId> {
    let mut classes = HashMap::new();
    for (f, tri) in triples.iter().enumerate() {
        for (s, &label) in tri.iter().enumerate() {
            let v = t.vertex_of(Corner::new(FaceId(f), s));
            let prev = classes.insert(label, v);
            debug_assert!(prev.is_none_or(|p| p == v), "triples do not match the surface");
        }
    }
    classes
}

/// One free-standing triangle.
pub fn single_triangle() -> TriangulatedSurface {
    build_surface(1, &[]).unwrap()
}

/// One triangle with slots 1 and 2 glued to each other (a folded disk).
pub fn folded_triangle() -> TriangulatedSurface {
    build_surface(1, &[(Dart(1), Dart(2))]).unwrap()
}

/// A square split along a diagonal: faces (A,B,C) and (A,C,D).
pub fn square_disk() -> TriangulatedSurface {
    from_vertex_triples(&[[0, 1, 2], [0, 2, 3]]).unwrap()
}

/// Two faces glued along all three slots into a sphere: slot pairs
/// (0,0), (1,2), (2,1).
pub fn pillowcase() -> TriangulatedSurface {
    build_surface(2, &[(Dart(0), Dart(3)), (Dart(1), Dart(5)), (Dart(2), Dart(4))]).unwrap()
}

/// Two faces glued slot-to-slot (identity pairing): a one-vertex torus.
pub fn torus_two_faces() -> TriangulatedSurface {
    build_surface(2, &[(Dart(0), Dart(3)), (Dart(1), Dart(4)), (Dart(2), Dart(5))]).unwrap()
}

/// The square disk with its B–A side also glued to the C–D side: an annulus
/// with two one-edge boundary circles.
pub fn annulus_two_faces() -> TriangulatedSurface {
    build_surface(2, &[(Dart(1), Dart(5)), (Dart(2), Dart(3))]).unwrap()
}

/// Boundary of the tetrahedron.
pub fn tetrahedron() -> TriangulatedSurface {
    from_vertex_triples(&[[0, 1, 2], [0, 2, 3], [0, 3, 1], [3, 2, 1]]).unwrap()
}

/// Fan of six triangles around a hub vertex; rim is the boundary.
pub fn hex_wheel() -> TriangulatedSurface {
    wheel(6)
}

/// Fan of `n >= 3` triangles around a hub vertex.
pub fn wheel(n: usize) -> TriangulatedSurface {
    let triples: Vec<[usize; 3]> = (0..n).map(|i| [0, 1 + i, 1 + (i + 1) % n]).collect();
    from_vertex_triples(&triples).unwrap()
}

/// Face triples of [`double_wheel`], for addressing its vertices by label
/// through [`vertex_classes`].
pub const DOUBLE_WHEEL_TRIPLES: [[usize; 3]; 6] = [
    [2, 0, 1],
    [2, 1, 3],
    [3, 1, 4],
    [4, 1, 0],
    [4, 0, 5],
    [5, 0, 2],
];

/// Disk with two adjacent interior vertices 0, 1 inside the boundary square
/// 2,3,4,5: six faces, eleven edges. The smallest disk whose interior
/// 1-skeleton has an edge.
pub fn double_wheel() -> TriangulatedSurface {
    from_vertex_triples(&DOUBLE_WHEEL_TRIPLES).unwrap()
}

/// Face triples of [`nested_triangle`], for addressing its vertices by label
/// through [`vertex_classes`].
pub const NESTED_TRIANGLE_TRIPLES: [[usize; 3]; 7] = [
    [0, 1, 2],
    [3, 1, 0],
    [3, 4, 1],
    [4, 2, 1],
    [4, 5, 2],
    [5, 0, 2],
    [5, 3, 0],
];

/// Triangle 3,4,5 with a smaller triangle 0,1,2 inside: seven faces, three
/// interior vertices whose mutual edges form a cycle.
pub fn nested_triangle() -> TriangulatedSurface {
    from_vertex_triples(&NESTED_TRIANGLE_TRIPLES).unwrap()
}

/// Bipyramid over an `n`-gon (n >= 3): poles 0, 1; equator 2..2+n.
/// `n = 4` is the octahedron. 2n faces, n+2 vertices.
pub fn bipyramid(n: usize) -> TriangulatedSurface {
    assert!(n >= 3);
    let eq = |i: usize| 2 + i % n;
    let mut triples = Vec::new();
    for i in 0..n {
        triples.push([0, eq(i), eq(i + 1)]);
    }
    for i in 0..n {
        triples.push([1, eq(i + 1), eq(i)]);
    }
    from_vertex_triples(&triples).unwrap()
}

pub fn octahedron() -> TriangulatedSurface {
    bipyramid(4)
}

/// Replaces `triples[idx]` = (a,b,c) by the three triangles of its cone to a
/// fresh vertex, leaving every other triple untouched. Repeated application
/// to a sphere keeps it a sphere and adds two faces per call.
pub fn subdivide_triple(triples: &mut Vec<[usize; 3]>, idx: usize, new_vertex: usize) {
    let [a, b, c] = triples[idx];
    triples[idx] = [a, b, new_vertex];
    triples.push([b, c, new_vertex]);
    triples.push([c, a, new_vertex]);
}

/// Sphere with `n_faces` faces (even, at least 4), grown from the
/// tetrahedron by cone subdivision at pseudo-random spots. Deterministic in
/// `seed`; self-contained so sized test inputs need no external randomness.
pub fn subdivided_sphere(n_faces: usize, seed: u64) -> TriangulatedSurface {
    assert!(n_faces >= 4 && n_faces % 2 == 0, "a sphere has an even face count >= 4");
    let mut triples = vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [3, 2, 1]];
    let mut state = seed ^ 0x9e37_79b9_7f4a_7c15;
    let mut fresh = 4;
    while triples.len() < n_faces {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let idx = ((state >> 33) as usize) % triples.len();
        subdivide_triple(&mut triples, idx, fresh);
        fresh += 1;
    }
    from_vertex_triples(&triples).unwrap()
}

/// The surfaces exercised by the cross-checking test suites: disks, spheres,
/// a torus and an annulus, all with at most eight faces.
pub fn named_catalog() -> Vec<(&'static str, TriangulatedSurface)> {
    vec![
        ("single-triangle", single_triangle()),
        ("folded-triangle", folded_triangle()),
        ("square-disk", square_disk()),
        ("pillowcase-sphere", pillowcase()),
        ("two-face-torus", torus_two_faces()),
        ("annulus", annulus_two_faces()),
        ("tetrahedron", tetrahedron()),
        ("triangular-bipyramid", bipyramid(3)),
        ("hex-wheel", hex_wheel()),
        ("double-wheel", double_wheel()),
        ("nested-triangle", nested_triangle()),
        ("octahedron", octahedron()),
    ]
}

pub fn small_catalog() -> Vec<TriangulatedSurface> {
    named_catalog().into_iter().map(|(_, t)| t).collect()
}
