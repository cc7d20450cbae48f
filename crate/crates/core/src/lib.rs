//! Minimal `d`-Hurwitz numbers: exact counts of transitive factorizations
//! into `d`-cycles, their generating series, and the cut-and-join style
//! operators that act on it.

pub mod error;
pub mod factorize;
pub mod perm;
pub mod symfunc;
pub mod verify;
pub mod wop;

pub use error::{Error, Result};
pub use perm::{Partition, Permutation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/factorizations.md")]
    mod factorizations {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
