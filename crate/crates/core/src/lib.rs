//! Topological data analysis on finite point clouds.
//!
//! The crate is organized bottom-up:
//!
//! * [`geometry`]: point clouds, p-norm distances, convex hulls and the
//!   rotating-calipers diameter.
//! * [`complex`]: neighbor graphs, union-find components, Vietoris-Rips and
//!   Čech complexes, Rips filtrations.
//! * [`homology`]: boundary matrices over the two-element field, persistence
//!   pairs and Betti numbers.
//! * [`mapper`]: filter functions, interval covers, refined pullbacks and
//!   their nerve graphs.

pub mod complex;
pub mod error;
pub mod geometry;
pub mod homology;
pub mod mapper;

pub use complex::{
    cech_complex, connected_components, neighbor_graph, rips_complex, rips_filtration,
    FilteredComplex, FilteredSimplex, NeighborGraph, Simplex, SimplicialComplex, UnionFind,
};
pub use error::{Error, Result};
pub use geometry::{
    convex_hull, distance_matrix, p_norm_distance, DistanceMatrix, HullResult, PNorm, PointCloud,
};
pub use homology::{
    betti_numbers, boundary_matrix, persistence_diagram, reduce, BettiVector, BoundaryMatrix,
    PersistenceDiagram, PersistencePair, Reduction,
};
pub use mapper::{
    cluster_cover_complex, filter_project, nerve, refined_pullback, uniform_cover, CoverScheme,
    FilterValues, MapperGraph, MapperNode,
};
