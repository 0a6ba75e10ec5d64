//! Engine for skew Poincaré–Birkhoff–Witt extensions over concrete
//! coefficient rings.
//!
//! The crate builds presentations `A = σ(R)⟨x₁,…,xₙ⟩` from validated data
//! (coefficient ring, endomorphisms, σ-derivations, commutation constants),
//! normalizes and multiplies elements of `A` through the PBW straightening
//! rules, decides ring-theoretic properties (Armendariz variants, rigidity,
//! the Baer family, IFP) by exhaustive or bounded search with replayable
//! witnesses, and machine-checks a suite of transfer theorems on a catalog
//! of example rings.

pub mod algebra;
pub mod catalog;
pub mod deciders;
pub mod error;
pub mod localization;
pub mod render;
pub mod ring;
pub mod theorems;
pub mod verdict;

pub use error::Error;
pub use verdict::{Stats, Verdict, VerdictStatus};

/// Resource limits for the exhaustive and bounded search paths.
///
/// Everything here is a knob with a conservative default; the CLI exposes
/// the interesting ones as flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Caps {
    /// Largest finite ring admitted by element-wise operations.
    pub ring_size: u32,
    /// Largest finite ring admitted by ideal enumeration.
    pub ideal_ring_size: u32,
    /// Cap on the number of polynomial pairs a bounded search may visit.
    pub multiplications: u64,
    /// Rewrite steps allowed per product before giving up on the
    /// presentation.
    pub rewrite_budget: u64,
    /// Bound on |α| used when a σ-monoid does not close.
    pub alpha_bound: u32,
    /// Seed for the pseudo-random samples drawn on structured rings.
    pub sample_seed: u64,
    /// Number of pseudo-random sample pairs drawn on structured rings.
    pub sample_pairs: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring_size: 256,
            ideal_ring_size: 64,
            multiplications: 1 << 25,
            rewrite_budget: 1_000_000,
            alpha_bound: 8,
            sample_seed: 0x5bb3_97a1,
            sample_pairs: 10_000,
        }
    }
}

/// Shorthand for the crate's result type.
pub type Result<T> = std::result::Result<T, Error>;
