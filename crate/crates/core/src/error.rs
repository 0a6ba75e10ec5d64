//! Error vocabulary shared by every module.

use thiserror::Error;

/// Everything that can go wrong while validating data or running a search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A ring axiom failed during validation; carries the axiom name and a
    /// rendered witness triple.
    #[error("ring axiom violated: {axiom} at {witness}")]
    AxiomViolation { axiom: &'static str, witness: String },

    /// Malformed Cayley data: indices out of range, wrong dimensions,
    /// non-bijective negation, and the like.
    #[error("invalid table: {0}")]
    InvalidTable(String),

    /// An exhaustive operation was asked of an infinite (structured) ring.
    #[error("operation requires a finite ring: {0}")]
    UnsupportedInfinite(&'static str),

    /// A finite ring exceeds the configured size cap for the operation.
    #[error("ring size {size} exceeds cap {cap}")]
    SizeCapExceeded { size: u32, cap: u32 },

    /// Composition closure of the σ-family did not stabilize under the cap.
    #[error("endomorphism monoid does not close within {cap} maps")]
    ClosureDiverges { cap: u32 },

    /// A map failed its structural checks (additivity, multiplicativity,
    /// unit preservation, the σ-derivation law).
    #[error("map validation failed: {law} at {witness}")]
    MapLawViolation { law: &'static str, witness: String },

    /// The presentation data is structurally inconsistent.
    #[error("presentation inconsistent: {0}")]
    PresentationInconsistent(String),

    /// A product did not normalize within the rewrite budget.
    #[error("rewrite budget of {budget} steps exceeded")]
    RewriteBudgetExceeded { budget: u64 },

    /// A bounded search space is larger than the multiplication cap.
    #[error("search space of {space} pairs exceeds cap {cap}")]
    SearchSpaceCapExceeded { space: u128, cap: u64 },

    /// The hypotheses required to extend σ/δ coefficientwise fail.
    #[error("extension hypotheses fail: {law} at {witness}")]
    HypothesesFail { law: &'static str, witness: String },

    /// The Ore condition does not hold for the requested localization.
    #[error("Ore condition fails: {0}")]
    NotOre(String),

    /// A requested denominator is a zero divisor.
    #[error("denominator is not regular: {0}")]
    DenominatorNotRegular(String),

    /// σ does not map the denominator set onto itself.
    #[error("sigma does not preserve the denominator set: {0}")]
    SigmaDoesNotPreserveS(String),

    /// Unknown catalog entry name.
    #[error("unknown catalog entry: {0}")]
    UnknownEntry(String),

    /// Elements of two different rings were combined.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// Free-form invalid input (bad literal, bad property name, ...).
    #[error("{0}")]
    Invalid(String),
}
