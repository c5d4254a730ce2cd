//! Multidimensional noncrossing and nonnesting complexes on `k`-subsets of
//! `[n]`.

pub mod bitset;
pub mod complex;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod predicates;
pub mod separation;
pub mod tableaux;
pub mod tamari;
pub mod vector;
pub mod verify;

pub use complex::{build_complex, ComplexKind, CountVector, Facet, FlagComplex, Method};
pub use error::{Error, Result};
pub use geometry::{
    bending_vector, classify_cube_diagonal, cube_face, cube_triangulation_diameter,
    cube_triangulation_facets, graded_weight, ridge_certificate, row_profile,
    weight_regularity_check, BendingVector, CubeFace, CubeTriangulation, DiagonalClass,
    GradedWeight,
};
pub use grid::{GridPoset, IncidenceMatrix};
pub use predicates::{is_noncrossing, is_nonnesting, is_weakly_separated};
pub use separation::{
    sep_dihedral_invariance, sep_equals_cyclic_intersection, sep_topology_probe, TopologyReport,
};
pub use tableaux::{Mode, Tableau, VectorTable};
pub use tamari::{build_tamari, Poset, TamariDigraph};
pub use vector::Vector;
pub use verify::{verify, Status, Suite, VerifyReport};
