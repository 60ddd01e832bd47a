//! A deterministic temperature-2 tile self-assembly engine together with the
//! tile systems that compute with it: comparison, shifting, subtraction,
//! bit insertion, long division with a decimal-form quotient, digit-by-digit
//! square roots, repeating binary expansions of rationals, and a partial-sum
//! approximation of pi.
//!
//! The crate is layered bottom-up:
//!
//! * [`oracles`] — assembly-free ground truth (pure big-integer arithmetic).
//! * [`engine`] — the grid, the attachment rule, deterministic growth.
//! * [`fixed`] — unsigned fixed-point binary values used for inputs/results.
//! * [`builders`] — concrete tile sets and seed configurations.
//! * [`tasks`] — end-to-end operations that build, grow, and read out.
//! * [`tilefile`] / [`render`] — serialization and visualization.

pub mod builders;
pub mod engine;
pub mod error;
pub mod fixed;
pub mod oracles;
pub mod tasks;
pub mod render;
pub mod tilefile;

pub use engine::{
    attachable, frontier_attachments, run_to_completion, validate_determinism, Assembly,
    AttachmentEvent, DeterminismReport, GrowthLimits, Position, SeedConfiguration, Status,
};
pub use error::{EngineError, OracleError, ParseError, TaskError, TileFileError};
pub use fixed::FixedPointBinary;
pub use tasks::{
    compare_numbers, compute_pi, divide_decimal, insert_bit, rational_expand, set_step_cap,
    shift_right, sqrt_assembly, subtract_and_shift, ExpansionResult, Relation, TaskRun,
};
