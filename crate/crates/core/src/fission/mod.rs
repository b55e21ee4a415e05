//! Degree profiles, fission filtrations, decorated fission trees and the
//! product decomposition of the pure local wild mapping class group.

mod decomposition;
mod irregular;
mod paths;
mod tree;

pub use decomposition::{Factor, GroupDecomposition};
pub use irregular::{
    admissible_equivalent, degree_profile, filtration, DegreeProfile, Filtration, IrregularType,
};
pub use paths::{
    checked_decomposition, decompose_checked, decomposition_from_tree,
    decomposition_via_arrangements, factor_of_kind, group_decomposition, level_factors,
    oracle_decomposition,
};
pub use tree::{fission_tree, Colour, Diameter, FissionTree, TreeNode};
