//! Thompson's groups F < T < V acting on Cantor space by prefix substitutions.

pub mod addresses;
pub mod cli;
pub mod elements;
pub mod error;
pub mod formats;
pub mod genmax;
pub mod random;
pub mod structure;
pub mod word;

pub use addresses::{lex_compare, prefix_relation, Address, Antichain, PrefixRelation};
pub use elements::Element;
pub use error::{Error, Result};
pub use word::{Token, Word};
