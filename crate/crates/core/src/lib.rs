//! Transversals for families of convex bodies whose members meet pairwise
//! on a convex curve.

pub mod bitset;
pub mod error;
pub mod geom;
pub mod graph;
pub mod highdim;
pub mod instance;
pub mod lp;
pub mod pipeline;
pub mod svg;
pub mod witness;

pub use bitset::BodySet;
pub use error::{Error, Result};
pub use geom::{
    body_contains, body_curve_arcs, brute_min_transversal, candidate_points, containment_signature, maximal_signatures,
    AngularInterval, ConvexBody, CurveKind, CurveModel, Point2, NUDGE_EPS, TOL_GEOM,
};
pub use graph::{build_meet_graph, max_neighbor_degree_sum, turan_pair_check, verify_p2, ColorGraph, P2Status, TuranCheck};
pub use highdim::{j_of_d, spread_out_general, CurveKindD, CurveSpecD, PointD};
pub use instance::{gallery7, gen_clustered, gen_pairwise, Instance, ReportFile, GALLERY_DELTA};
pub use lp::{lp_solve, Direction, LpProblem, LpSolution, LpStatus, Sense, TOL_LP};
pub use pipeline::{
    cloud_expand, fractional_packing, fractional_transversal, greedy_transversal, rationalize, replicate, run_pipeline,
    verify_report, CandidateSet, FractionalPacking, FractionalTransversal, RunConfig, TransversalReport,
};
pub use svg::render_svg;
pub use witness::{
    build_witness_list, find_heavy_point, is_spread_out, three_interval_cover, HeavyPoint, SearchStrategy, SeparatorQuadruple,
    WitnessList,
};
