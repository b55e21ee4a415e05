//! Braid words, exact equality, the pure braid operad and pure cabled
//! braid groups of type-A fission trees.

mod cabled;
mod free;
mod garside;
mod linking;
mod operad;
mod word;

pub use cabled::{
    cabled_group_generators, leaf_blocks, standard_generator, standard_generators, NodeGenerators,
};
pub use free::{artin_action, FreeWord};
pub use garside::{normal_form, NormalForm};
pub use linking::{linking_matrix, LinkingMatrix};
pub use operad::{block_braid, cable_at, direct_sum, gamma};
pub use word::{BraidWord, Letter};

use crate::{Error, Result};

/// Exact braid equality.
///
/// Permutations and, for pure braids, linking matrices are compared first;
/// the decision itself compares left normal forms of the two braids, which
/// holds exactly when their Artin actions coincide. The Artin images are
/// not used here because their length can grow exponentially with the word.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    if a.permutation() != b.permutation() {
        return Ok(false);
    }
    if a.is_pure() && linking_matrix(a)? != linking_matrix(b)? {
        return Ok(false);
    }
    let diff = a.then(&b.inverse())?.free_reduced();
    if diff.is_empty() {
        return Ok(true);
    }
    Ok(normal_form(&diff) == normal_form(&BraidWord::identity(a.strands())))
}

/// Equality through the Artin action; exponential in the worst case, kept as
/// an independent oracle for short words.
pub fn braids_equal_by_action(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    Ok(artin_action(a) == artin_action(b))
}
