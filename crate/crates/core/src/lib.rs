//! Bivariate dimension polynomials of linear difference-differential ideals.

pub mod cli;
pub mod dimension;
pub mod dpoly;
pub mod dsl;
pub mod field;
pub mod lattice;
pub mod numpoly;
pub mod oracle;
pub mod reduction;
pub mod termalg;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/numerical-polynomials.md")]
    mod numerical_polynomials {}
    #[doc = include_str!("../../../book/src/staircases.md")]
    mod staircases {}
    #[doc = include_str!("../../../book/src/terms.md")]
    mod terms {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/reduction.md")]
    mod reduction {}
    #[doc = include_str!("../../../book/src/dimension.md")]
    mod dimension {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
