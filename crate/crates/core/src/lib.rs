//! Invariant sums for spatial embeddings of complete graphs.
//!
//! The crate computes `Σ a₂` over Hamiltonian knots, `Σ a₂` over pentagon
//! knots and `Σ lk²` over disjoint triangle pairs of a spatial `K_n`, checks
//! the Conway-Gordon type identity and congruence relating them, and builds
//! explicit embeddings realizing any admissible value of the Hamiltonian sum.
//!
//! Spatial graphs are handled combinatorially as [`Diagram`]s: each edge
//! carries the ordered list of crossings it passes through, and a crossing
//! table records which edge is on top and the crossing sign. Diagrams of
//! concrete polygonal embeddings ([`SpatialGraph`]) come from exact
//! projection.

pub mod braid;
pub mod constructions;
pub mod diagram;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod invariants;

pub use constructions::{
    add_delta_step, c_n, delta_gadget, plan_realization, r_n, realize, realize_verified, rebuild,
    residue_modulus, sigma, tau, twist_embedding, twist_spatial, Branch, RealizationPlan,
    TwistParams,
};
pub use diagram::{
    Crossing, Diagram, Edge, KnotDiagram, KnotPassage, LinkDiagram, Meta, Passage, Role,
    ValidationReport, Violation,
};
pub use error::{Error, Result};
pub use geometry::{
    diagram_from_points, moment_curve_points, random_embedding, standard_diagram, standard_points,
    PointSet, Projection, SpatialGraph,
};
pub use graph::{Cycle, CyclePair, GraphSpec};
pub use invariants::{
    a2, a2_gauss_formula, congruence_verdict, identity_verdict, invariant_report,
    invariant_report_with_workers, lk, sachs_verdict, CongruenceVerdict, IdentityVerdict,
    InvariantReport,
};
