//! Line-oriented problem files: a complex plus optional angle data.
//!
//! Grammar (one directive per line, `#` starts a comment):
//!
//! ```text
//! surface 2                      # header for surface files
//! face <name>                    # declares a face; names are free-form tokens
//! glue <f>:<slot> <g>:<slot>     # glues two face sides (slot = opposite corner)
//! angle <f>:<slot> <p>/<q>       # dihedral angle of that side's edge class, pi-units
//! cone <v> <p>/<q>               # prescribed total corner angle at vertex class v
//! bangle <v> <p>/<q>             # prescribed boundary position angle at vertex v
//!
//! manifold 3                     # header for ideal-triangulation files
//! tet <name>
//! glueface <t>:<face> <u>:<face> perm <abc>   # abc = images of the source
//!                                             # face's vertices in increasing
//!                                             # order, as target-tet vertices
//! cone <p>/<q>                   # uniform edge-class target (default 2/1)
//! ```
//!
//! Vertex classes are written `v3` or bare `3`, matching the indices the
//! `describe` subcommand prints.

use dihedra::scalar::rational;
use dihedra::surface::{build_surface, Dart, TriangulatedSurface, VertexId};
use dihedra::three_manifold::{build_ideal_triangulation, GluingSpec, IdealTriangulation3};
use dihedra::Rational;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    UnresolvedReference,
    DuplicateDeclaration,
}

impl ErrorKind {
    pub fn label(self) -> &'static str {
        match self {
            ErrorKind::Syntax => "syntax error",
            ErrorKind::UnresolvedReference => "unresolved reference",
            ErrorKind::DuplicateDeclaration => "duplicate declaration",
        }
    }
}

/// A rejected problem file, with a 1-based source position.
#[derive(Debug)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {}: {}",
            self.line,
            self.col,
            self.kind.label(),
            self.message
        )
    }
}

fn err(kind: ErrorKind, line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        kind,
        line,
        col,
        message: message.into(),
    }
}

/// The complex a file declares.
pub enum Complex {
    Surface(TriangulatedSurface),
    Manifold(IdealTriangulation3),
}

/// A parsed problem file. Prescription vectors are indexed by the canonical
/// class ids of the built complex; `None` marks classes the file left free.
pub struct ProblemFile {
    pub complex: Complex,
    /// Declared face (or tetrahedron) names, in id order.
    pub names: Vec<String>,
    /// Dihedral angle per edge class (surfaces).
    pub angle: Vec<Option<Rational>>,
    /// Prescribed corner total per vertex class (surfaces).
    pub cone: Vec<Option<Rational>>,
    /// Prescribed boundary position angle per vertex class (surfaces).
    pub bangle: Vec<Option<Rational>>,
    /// Uniform edge-class target (3-manifolds).
    pub m3_target: Option<Rational>,
}

impl ProblemFile {
    pub fn surface(&self) -> Option<&TriangulatedSurface> {
        match &self.complex {
            Complex::Surface(t) => Some(t),
            Complex::Manifold(_) => None,
        }
    }

    pub fn has_angles(&self) -> bool {
        self.angle.iter().any(Option::is_some)
    }

    pub fn has_cones(&self) -> bool {
        self.cone.iter().any(Option::is_some)
    }

    pub fn has_bangles(&self) -> bool {
        self.bangle.iter().any(Option::is_some)
    }
}

/// A directive token with its starting column.
struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut col = 0;
    let mut start = None;
    for (i, ch) in body.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some((s, c)) = start.take() {
                out.push(Token {
                    text: &body[s..i],
                    col: c,
                });
            }
        } else if start.is_none() {
            start = Some((i, col));
        }
    }
    if let Some((s, c)) = start {
        out.push(Token {
            text: &body[s..],
            col: c,
        });
    }
    out
}

fn parse_rational(tok: &Token<'_>, line: usize) -> Result<Rational, ParseError> {
    let bad = |msg: &str| err(ErrorKind::Syntax, line, tok.col, msg);
    let (p, q) = match tok.text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (tok.text, "1"),
    };
    let p: i64 = p
        .parse()
        .map_err(|_| bad(&format!("expected a rational `p/q`, found `{}`", tok.text)))?;
    let q: i64 = q
        .parse()
        .map_err(|_| bad(&format!("expected a rational `p/q`, found `{}`", tok.text)))?;
    if q == 0 {
        return Err(bad("zero denominator"));
    }
    Ok(rational(p, q))
}

/// `<name>:<index>` with the index bounded by `limit`.
fn parse_ref(
    tok: &Token<'_>,
    line: usize,
    what: &str,
    names: &HashMap<String, usize>,
    limit: usize,
) -> Result<(usize, usize), ParseError> {
    let (name, slot) = tok.text.split_once(':').ok_or_else(|| {
        err(
            ErrorKind::Syntax,
            line,
            tok.col,
            format!("expected `<{what}>:<index>`, found `{}`", tok.text),
        )
    })?;
    let id = *names.get(name).ok_or_else(|| {
        err(
            ErrorKind::UnresolvedReference,
            line,
            tok.col,
            format!("unknown {what} `{name}`"),
        )
    })?;
    let slot: usize = slot.parse().map_err(|_| {
        err(
            ErrorKind::Syntax,
            line,
            tok.col,
            format!("expected an index after `:`, found `{slot}`"),
        )
    })?;
    if slot >= limit {
        return Err(err(
            ErrorKind::UnresolvedReference,
            line,
            tok.col,
            format!("slot {slot} out of range (0..{limit})"),
        ));
    }
    Ok((id, slot))
}

/// Vertex-class reference: `v<k>` or bare `<k>`.
fn parse_class(tok: &Token<'_>, line: usize, prefix: char) -> Result<usize, ParseError> {
    let digits = tok.text.strip_prefix(prefix).unwrap_or(tok.text);
    digits.parse().map_err(|_| {
        err(
            ErrorKind::Syntax,
            line,
            tok.col,
            format!("expected a class index like `{prefix}0`, found `{}`", tok.text),
        )
    })
}

fn expect_arity(
    toks: &[Token<'_>],
    line: usize,
    n: usize,
    usage: &str,
) -> Result<(), ParseError> {
    if toks.len() != n {
        let col = toks.get(n.min(toks.len() - 1)).map_or(1, |t| t.col);
        return Err(err(
            ErrorKind::Syntax,
            line,
            col,
            format!("expected `{usage}`"),
        ));
    }
    Ok(())
}

struct Prescription {
    class: usize,
    value: Rational,
    line: usize,
    col: usize,
}

/// Stores `value` for `class`, rejecting a second different value.
fn place(
    slot: &mut Vec<Option<Rational>>,
    p: Prescription,
    what: &str,
    label: char,
) -> Result<(), ParseError> {
    match &slot[p.class] {
        Some(old) if *old != p.value => Err(err(
            ErrorKind::DuplicateDeclaration,
            p.line,
            p.col,
            format!("{what} {label}{} already declared with a different value", p.class),
        )),
        _ => {
            slot[p.class] = Some(p.value);
            Ok(())
        }
    }
}

pub fn parse(input: &str) -> Result<ProblemFile, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokenize(l)))
        .filter(|(_, toks)| !toks.is_empty());

    let (header_line, header) = match lines.next() {
        Some(x) => x,
        None => {
            return Err(err(
                ErrorKind::Syntax,
                1,
                1,
                "empty file: expected a `surface 2` or `manifold 3` header",
            ))
        }
    };
    let dim = header.get(1).map(|t| t.text);
    match (header[0].text, dim) {
        ("surface", Some("2")) => parse_surface(lines),
        ("manifold", Some("3")) => parse_manifold(lines),
        ("surface", _) | ("manifold", _) => Err(err(
            ErrorKind::Syntax,
            header_line,
            header.get(1).map_or(header[0].col, |t| t.col),
            format!(
                "unsupported dimension: expected `{} {}`",
                header[0].text,
                if header[0].text == "surface" { 2 } else { 3 }
            ),
        )),
        _ => Err(err(
            ErrorKind::Syntax,
            header_line,
            header[0].col,
            "expected a `surface 2` or `manifold 3` header",
        )),
    }
}

fn parse_surface<'a>(
    lines: impl Iterator<Item = (usize, Vec<Token<'a>>)>,
) -> Result<ProblemFile, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut by_name: HashMap<String, usize> = HashMap::new();
    let mut gluings: Vec<(Dart, Dart)> = Vec::new();
    let mut dart_line: HashMap<usize, usize> = HashMap::new();
    let mut angle_lines: Vec<(Dart, Rational, usize, usize)> = Vec::new();
    let mut cone_lines: Vec<Prescription> = Vec::new();
    let mut bangle_lines: Vec<Prescription> = Vec::new();

    for (line, toks) in lines {
        match toks[0].text {
            "face" => {
                expect_arity(&toks, line, 2, "face <name>")?;
                let name = toks[1].text;
                if name.contains(':') || name.contains('/') {
                    return Err(err(
                        ErrorKind::Syntax,
                        line,
                        toks[1].col,
                        format!("face names may not contain `:` or `/`: `{name}`"),
                    ));
                }
                if by_name.contains_key(name) {
                    return Err(err(
                        ErrorKind::DuplicateDeclaration,
                        line,
                        toks[1].col,
                        format!("face `{name}` already declared"),
                    ));
                }
                by_name.insert(name.to_string(), names.len());
                names.push(name.to_string());
            }
            "glue" => {
                expect_arity(&toks, line, 3, "glue <f>:<slot> <g>:<slot>")?;
                let (fa, sa) = parse_ref(&toks[1], line, "face", &by_name, 3)?;
                let (fb, sb) = parse_ref(&toks[2], line, "face", &by_name, 3)?;
                let (a, b) = (Dart::new(dihedra::surface::FaceId(fa), sa), {
                    Dart::new(dihedra::surface::FaceId(fb), sb)
                });
                for (d, t) in [(a, &toks[1]), (b, &toks[2])] {
                    if let Some(first) = dart_line.get(&d.0) {
                        return Err(err(
                            ErrorKind::DuplicateDeclaration,
                            line,
                            t.col,
                            format!("side `{}` already glued on line {first}", t.text),
                        ));
                    }
                }
                if a == b {
                    return Err(err(
                        ErrorKind::DuplicateDeclaration,
                        line,
                        toks[2].col,
                        "a side cannot be glued to itself",
                    ));
                }
                dart_line.insert(a.0, line);
                dart_line.insert(b.0, line);
                gluings.push((a, b));
            }
            "angle" => {
                expect_arity(&toks, line, 3, "angle <f>:<slot> <p>/<q>")?;
                let (f, s) = parse_ref(&toks[1], line, "face", &by_name, 3)?;
                let v = parse_rational(&toks[2], line)?;
                if v <= rational(0, 1) || v >= rational(2, 1) {
                    return Err(err(
                        ErrorKind::Syntax,
                        line,
                        toks[2].col,
                        "dihedral angles must lie strictly between 0 and 2 pi-units",
                    ));
                }
                angle_lines.push((
                    Dart::new(dihedra::surface::FaceId(f), s),
                    v,
                    line,
                    toks[1].col,
                ));
            }
            "cone" | "bangle" => {
                let usage = if toks[0].text == "cone" {
                    "cone <vertex> <p>/<q>"
                } else {
                    "bangle <vertex> <p>/<q>"
                };
                expect_arity(&toks, line, 3, usage)?;
                let class = parse_class(&toks[1], line, 'v')?;
                let value = parse_rational(&toks[2], line)?;
                if value < rational(0, 1) {
                    return Err(err(
                        ErrorKind::Syntax,
                        line,
                        toks[2].col,
                        "prescribed angles must be nonnegative",
                    ));
                }
                let p = Prescription {
                    class,
                    value,
                    line,
                    col: toks[1].col,
                };
                if toks[0].text == "cone" {
                    cone_lines.push(p);
                } else {
                    bangle_lines.push(p);
                }
            }
            "tet" | "glueface" => {
                return Err(err(
                    ErrorKind::Syntax,
                    line,
                    toks[0].col,
                    format!("`{}` lines belong to `manifold 3` files", toks[0].text),
                ))
            }
            other => {
                return Err(err(
                    ErrorKind::Syntax,
                    line,
                    toks[0].col,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let t = build_surface(names.len(), &gluings)
        .expect("dart ranges and duplicates were checked during the scan");

    let mut angle = vec![None; t.n_edges()];
    for (d, v, line, col) in angle_lines {
        let e = t.edge_of(d);
        match &angle[e.0] {
            Some(old) if *old != v => {
                return Err(err(
                    ErrorKind::DuplicateDeclaration,
                    line,
                    col,
                    format!(
                        "edge class e{} already carries a different angle",
                        e.0
                    ),
                ))
            }
            _ => angle[e.0] = Some(v),
        }
    }

    let mut cone = vec![None; t.n_vertices()];
    let mut bangle = vec![None; t.n_vertices()];
    for (lines, slot, what) in [
        (cone_lines, &mut cone, "cone angle for vertex"),
        (bangle_lines, &mut bangle, "boundary angle for vertex"),
    ] {
        for p in lines {
            if p.class >= t.n_vertices() {
                return Err(err(
                    ErrorKind::UnresolvedReference,
                    p.line,
                    p.col,
                    format!(
                        "vertex v{} out of range (the surface has {} vertex classes)",
                        p.class,
                        t.n_vertices()
                    ),
                ));
            }
            place(slot, p, what, 'v')?;
        }
    }
    for (v, val) in bangle.iter().enumerate() {
        if val.is_some() && !t.vertex(VertexId(v)).on_boundary {
            return Err(err(
                ErrorKind::UnresolvedReference,
                1,
                1,
                format!("vertex v{v} is interior; `bangle` needs a boundary vertex"),
            ));
        }
    }
    // A vertex given both a cone and a conflicting boundary prescription can
    // satisfy no reading of the file.
    for v in 0..t.n_vertices() {
        if let (Some(c), Some(b)) = (&cone[v], &bangle[v]) {
            if c != b {
                return Err(err(
                    ErrorKind::DuplicateDeclaration,
                    1,
                    1,
                    format!("vertex v{v} has conflicting cone and bangle values"),
                ));
            }
        }
    }

    Ok(ProblemFile {
        complex: Complex::Surface(t),
        names,
        angle,
        cone,
        bangle,
        m3_target: None,
    })
}

fn parse_manifold<'a>(
    lines: impl Iterator<Item = (usize, Vec<Token<'a>>)>,
) -> Result<ProblemFile, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut specs: Vec<GluingSpec> = Vec::new();
    let mut used: HashMap<(usize, usize), usize> = HashMap::new();
    let mut target: Option<(Rational, usize, usize)> = None;
    let mut last_line = 1;
    let mut by_name: HashMap<String, usize> = HashMap::new();

    for (line, toks) in lines {
        last_line = line;
        match toks[0].text {
            "tet" => {
                expect_arity(&toks, line, 2, "tet <name>")?;
                let name = toks[1].text;
                if by_name.contains_key(name) {
                    return Err(err(
                        ErrorKind::DuplicateDeclaration,
                        line,
                        toks[1].col,
                        format!("tet `{name}` already declared"),
                    ));
                }
                by_name.insert(name.to_string(), names.len());
                names.push(name.to_string());
            }
            "glueface" => {
                expect_arity(
                    &toks,
                    line,
                    5,
                    "glueface <t>:<face> <u>:<face> perm <abc>",
                )?;
                let (t, f) = parse_ref(&toks[1], line, "tet", &by_name, 4)?;
                let (u, g) = parse_ref(&toks[2], line, "tet", &by_name, 4)?;
                if toks[3].text != "perm" {
                    return Err(err(
                        ErrorKind::Syntax,
                        line,
                        toks[3].col,
                        "expected the keyword `perm`",
                    ));
                }
                let digits: Vec<usize> = toks[4]
                    .text
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| {
                        err(
                            ErrorKind::Syntax,
                            line,
                            toks[4].col,
                            "the permutation must be three digits, e.g. `231`",
                        )
                    })?;
                if digits.len() != 3 {
                    return Err(err(
                        ErrorKind::Syntax,
                        line,
                        toks[4].col,
                        "the permutation must be three digits, e.g. `231`",
                    ));
                }
                let mut sorted = digits.clone();
                sorted.sort_unstable();
                let face_vertices: Vec<usize> = (0..4).filter(|&v| v != g).collect();
                if sorted != face_vertices {
                    return Err(err(
                        ErrorKind::UnresolvedReference,
                        line,
                        toks[4].col,
                        format!(
                            "the permutation must name the vertices of face {g} exactly once each"
                        ),
                    ));
                }
                if (t, f) == (u, g) {
                    return Err(err(
                        ErrorKind::DuplicateDeclaration,
                        line,
                        toks[2].col,
                        "a face cannot be glued to itself",
                    ));
                }
                for (key, tok) in [((t, f), &toks[1]), ((u, g), &toks[2])] {
                    if let Some(first) = used.get(&key) {
                        return Err(err(
                            ErrorKind::DuplicateDeclaration,
                            line,
                            tok.col,
                            format!("face `{}` already glued on line {first}", tok.text),
                        ));
                    }
                }
                used.insert((t, f), line);
                used.insert((u, g), line);
                let mut map = [0usize; 4];
                map[f] = g;
                let src: Vec<usize> = (0..4).filter(|&v| v != f).collect();
                for (sv, d) in src.iter().zip(&digits) {
                    map[*sv] = *d;
                }
                specs.push(GluingSpec {
                    tet: t,
                    face: f,
                    other_tet: u,
                    other_face: g,
                    map,
                });
            }
            "cone" => {
                expect_arity(&toks, line, 2, "cone <p>/<q>")?;
                let v = parse_rational(&toks[1], line)?;
                if let Some((old, _, _)) = &target {
                    if *old != v {
                        return Err(err(
                            ErrorKind::DuplicateDeclaration,
                            line,
                            toks[1].col,
                            "the edge-class target was already declared with a different value",
                        ));
                    }
                }
                target = Some((v, line, toks[1].col));
            }
            "face" | "glue" | "angle" | "bangle" => {
                return Err(err(
                    ErrorKind::Syntax,
                    line,
                    toks[0].col,
                    format!("`{}` lines belong to `surface 2` files", toks[0].text),
                ))
            }
            other => {
                return Err(err(
                    ErrorKind::Syntax,
                    line,
                    toks[0].col,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let m = build_ideal_triangulation(names.len(), &specs).map_err(|e| {
        err(ErrorKind::Syntax, last_line, 1, e.to_string())
    })?;

    Ok(ProblemFile {
        complex: Complex::Manifold(m),
        names,
        angle: Vec::new(),
        cone: Vec::new(),
        bangle: Vec::new(),
        m3_target: target.map(|(v, _, _)| v),
    })
}
