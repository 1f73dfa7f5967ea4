//! Exact feasibility of dihedral-angle prescriptions on triangulated
//! surfaces, and companion tools: rational linear programming with
//! certificates, max-flow deciders, planar developments of angle solutions,
//! Delaunay checks, stellations, and angle structures on ideal
//! 3-manifold triangulations.
//!
//! Angles are measured in units of π throughout: a flat interior vertex has
//! cone angle 2, a triangle's corners sum to 1.

pub mod angles;
pub mod catalog;
pub mod feasibility;
pub mod flow;
pub mod lp;
pub mod realization;
pub mod scalar;
pub mod stellation;
pub mod subcomplex;
pub mod surface;
pub mod three_manifold;

/// Exact scalar used by all decision procedures.
pub type Rational = num_rational::BigRational;
