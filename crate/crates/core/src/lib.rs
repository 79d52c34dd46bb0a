//! Wild numbers of edge-colored multigraphs: bounds, a greedy heuristic, an
//! exact solver, structural deductions, and the reduction from 3-SAT.

mod dsu;

pub mod bounds;
pub mod exact;
pub mod families;
pub mod format;
pub mod fixtures;
pub mod graph;
pub mod greedy;
pub mod sat;

pub use bounds::{bounds_report, dip_lower_bound, dip_number, dip_sequence, BoundsReport, DipSequence};
pub use exact::{decide_k_wild, wild_brute, wild_exact, wild_exact_with, ExactError, ExactOptions, ExactResult, Method};
pub use families::{amalgamate, deduce, generate, wild_cycle, wild_tree, Deduction, DeductionKind, DeductionRule, FamilyError, FamilySpec};
pub use graph::{ColorId, Edge, EdgeColoredGraph, EdgeId, GraphError, QuotientGraph, VertexId, WildSet};
pub use greedy::{greedy_wild_set, potential, GreedyTrace};
pub use sat::{
    assignment_to_wild_set, build_gadget, parse_dimacs, reduction_theorem_check, verify_gadget, wild_set_to_assignment,
    CnfFormula, GadgetGraph, Literal, SatError,
};
pub use format::{export_dot, format_wild_set, parse_graph, parse_wild_set, serialize_graph, FormatError};
