pub mod actions;
pub mod basesize;
pub mod blocks;
pub mod budget;
pub mod catalog;
pub mod closure;
pub mod bignum;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod stabchain;
pub mod subgroups;
pub mod tuples;

pub use actions::{ActionInstance, Provenance};
pub use blocks::BlockSystem;
pub use budget::{Budget, Meter};
pub use error::{Error, Result};
pub use perm::{Domain, Permutation};
pub use stabchain::{PermGroup, StabilizerChain};
pub use tuples::TupleCanonizer;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/permutations.md")]
    pub struct Permutations;
    #[doc = include_str!("../../../book/src/actions.md")]
    pub struct Actions;
    #[doc = include_str!("../../../book/src/closures.md")]
    pub struct Closures;
    #[doc = include_str!("../../../book/src/bases.md")]
    pub struct Bases;
    #[doc = include_str!("../../../book/src/catalog.md")]
    pub struct Catalog;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
