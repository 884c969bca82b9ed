//! Three independent routes to the Tutte polynomial.

mod activities;
mod canon;
mod delcon;
mod subset;

pub use activities::{tutte_activities, ActivityTable};
pub use canon::{canonical_certificate, CanonicalCertificate};
pub use delcon::{
    tutte_deletion_contraction, tutte_deletion_contraction_with, DelConOptions, PivotRule,
};
pub use subset::tutte_subset_expansion;
