//! Clebsch-Gordan and 3jm coefficients.
//!
//! Three independent routes compute the same coefficient:
//!
//! - [`cg_racah`]: the single binomial sum over `z`,
//! - [`cg_3f2`]: a unit-argument `3F2` series with a factorial prefactor,
//! - [`cg_ladder_stretched`]: repeated application of the lowering operator
//!   to `|a,a> (x) |b,b>`, valid for the stretched case `c = a + b`.
//!
//! [`cg_degenerate_squared`] is the closed form of the stretched case.

mod degenerate;
mod half_int;
mod hyper;
mod labels;
mod ladder;
mod racah;
mod threejm;

pub use degenerate::cg_degenerate_squared;
pub use half_int::HalfInt;
pub use hyper::{cg_3f2, cg_3f2_literal, delta_abc};
pub use labels::{CgLabels, DegenerateLabels};
pub use ladder::{cg_ladder, cg_ladder_stretched, ProductStateVector};
pub use racah::{cg_racah, racah_z_terms, selection_rules_satisfied};
pub use threejm::{cg_to_3jm, three_jm_to_cg};

use crate::error::Result;
use crate::exact::SignedSqrtRational;

/// Selects a coefficient backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Racah,
    Hypergeometric,
    Ladder,
}

impl Backend {
    pub const ALL: [Backend; 3] = [Backend::Racah, Backend::Hypergeometric, Backend::Ladder];

    pub fn name(self) -> &'static str {
        match self {
            Backend::Racah => "racah",
            Backend::Hypergeometric => "3f2",
            Backend::Ladder => "ladder",
        }
    }

    /// Evaluates the coefficient; `None` when the backend does not apply
    /// (only the ladder, off the stretched case).
    pub fn evaluate(self, labels: &CgLabels) -> Result<Option<SignedSqrtRational>> {
        match self {
            Backend::Racah => Ok(Some(cg_racah(labels))),
            Backend::Hypergeometric => cg_3f2(labels).map(Some),
            Backend::Ladder => cg_ladder(labels),
        }
    }
}
