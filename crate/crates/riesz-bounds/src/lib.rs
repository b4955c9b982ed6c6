//! Rigorous certification of the scalar inequalities behind the sharp
//! estimates for the Riesz projection, and numerical validation of the norm
//! inequalities on trigonometric polynomials.

pub mod interval;
pub mod functions;
pub mod certifier;
pub mod torus;
pub mod extremal;
pub mod report;

// The guide's code blocks run as doc-tests so the book cannot drift.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/intervals.md")]
    mod intervals {}
    #[doc = include_str!("../../../book/src/functions.md")]
    mod functions {}
    #[doc = include_str!("../../../book/src/certifier.md")]
    mod certifier {}
    #[doc = include_str!("../../../book/src/claims.md")]
    mod claims {}
    #[doc = include_str!("../../../book/src/torus.md")]
    mod torus {}
    #[doc = include_str!("../../../book/src/extremal.md")]
    mod extremal {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
