//! Polynomial algebra over a generic coefficient scalar.
//!
//! Three representations:
//! - [`UniPoly`]: dense univariate, monomial basis
//! - [`PochPoly`]: univariate over the centered Pochhammer basis
//!   C_d(t) = ((t+1−d)/2)_d, which is multiplicatively closed
//! - [`BiPoly`]: sparse bivariate in the commuting variables X and Y

mod bi;
mod poch;
mod uni;

pub use bi::{binom_poly, BiPoly, LinearDivisionError};
pub use poch::PochPoly;
pub use uni::UniPoly;

/// Formal variable tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "X",
            Var::Y => "Y",
        }
    }
}
