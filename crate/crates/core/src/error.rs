use thiserror::Error;

use crate::addresses::Address;

/// Errors raised by the group operations and the generation engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("address depth {depth} exceeds the configured bound {max}")]
    DepthExceeded { depth: usize, max: usize },
    #[error("{0} is not a leaf of the antichain")]
    LeafNotPresent(Address),
    #[error("antichain has a single leaf")]
    SingletonAntichain,
    #[error("domain addresses do not form a complete antichain")]
    IncompleteDomain,
    #[error("range addresses do not form a complete antichain")]
    IncompleteRange,
    #[error("pairing is not a bijection")]
    NotBijective,
    #[error("address {0} is a strict prefix of several domain leaves")]
    AddressTooShort(Address),
    #[error("addresses {0} and {1} are not incomparable")]
    NotIncomparable(Address, Address),
    #[error("a cycle needs at least two addresses")]
    TooShort,
    #[error("no finite-order witness within {bound} leaves")]
    BoundExceeded { bound: usize },
    #[error("element does not have finite order")]
    NotFiniteOrder,
    #[error("element has full support")]
    FullSupport,
    #[error("element is the identity")]
    IdentityInput,
    #[error("leaf sequence is not lexicographically ordered")]
    NotOrdered,
    #[error("leaf sequence is not circularly interleaved")]
    NotInterleaved,
    #[error("an empty gap faces a nonempty gap")]
    GapMismatch,
    #[error("marked sequences have different lengths or are empty")]
    LengthMismatch,
    #[error("swap is not an interleaved permutation")]
    NotInterleavedSwap,
    #[error("element is not a swap")]
    NotSwap,
    #[error("the swap (0 1) has full support and lies in T")]
    FullSupportSwap,
    #[error("element is not a 3-cycle of cones")]
    NotThreeCycle,
    #[error("generator lies in T")]
    GeneratorInT,
    #[error("interleaving search exhausted after {states} states")]
    SearchExhausted { states: usize },
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code used by the command-line tool: 4 for resource bounds, 3 for
    /// precondition violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DepthExceeded { .. }
            | Error::BoundExceeded { .. }
            | Error::SearchExhausted { .. } => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
