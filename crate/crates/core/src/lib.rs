//! Curvature-constrained shortest paths through an ordered waypoint
//! sequence.
//!
//! Building blocks are two-point Dubins paths and the one-sided CS/SC
//! paths; on top of them sit the three-point solver, the offset
//! decomposition for `n` points, heading-grid bounds and a benchmark
//! harness.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bench;
pub mod bounds;
pub mod dubins;
pub mod error;
pub mod geometry;
pub mod instance;
pub mod report;
pub mod sequence;
pub mod svg;
pub mod three_point;

pub use bounds::{compute_bounds, euclidean_lb, heading_grid_dp, BoundReport, GridMode, HeadingGrid};
pub use dubins::*;
pub use error::{CspError, Result};
pub use geometry::{Configuration, Point, RigidMotion};
pub use instance::{default_extent, generate, read_instance, write_instance, Instance};
pub use sequence::{build_candidate, solve_sequence, CandidateLabel, CandidateSolution, SolutionReport};
pub use three_point::{solve_three_point, ThreePointClass, ThreePointSolution};
