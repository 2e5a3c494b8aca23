//! Exact computations of `HF+` for Seifert fibered integer homology spheres
//! via tau functions and graded roots, with closed-form constructors for the
//! surgery and Brieskorn-sphere families they are checked against.

pub mod cli;
pub mod dot;
pub mod error;
pub mod exactmath;
pub mod formulas;
pub mod gradedroot;
pub mod plumbing;
pub mod report;
pub mod seifert;
pub mod semigroup;
pub mod tau;

pub use error::{Error, Result};
pub use exactmath::Rational;
pub use gradedroot::{
    assemble_hf, build_root, compute_hf, d_invariant_direct, grading_shift, GradedRoot,
    HFPlusModule, Tower,
};
pub use plumbing::{star_plumbing, PlumbingGraph};
pub use seifert::{brieskorn_seifert, SeifertInvariants};
pub use semigroup::TorusKnotSemigroup;
pub use tau::{reduce, tau_sequence, ReducedTau, TauFunction};
