//! Symmetric-group combinatorics and explicit representations.

pub mod partition;
pub mod perm;
pub mod specht;

pub use partition::{enumerate_partitions, Composition, Multipartition, Partition};
pub use perm::Permutation;
pub use specht::{
    character, coset_decompose, coset_representatives, induce_specht, specht_matrices, stabilizer_matches,
    InducedModule, SpechtModule, SymRep,
};
