//! Skew PBW extension presentations, PBW normal forms, polynomial
//! arithmetic, monomial orders, extended coefficientwise maps, and
//! bounded-degree probes of the extension.

pub mod bounded;
pub mod exponent;
pub mod extend;
pub mod poly;
pub mod presentation;
pub mod slow;

pub use bounded::{bounded_right_annihilator, idempotents_up_to, is_reduced_up_to};
pub use exponent::{monomials_up_to, Exponent, MonomialOrder};
pub use extend::{check_extension_hypotheses, extend_delta, extend_sigma};
pub use poly::{LeadingData, SkewPoly};
pub use presentation::{validate_presentation, PresentationData, SkewPresentation};
