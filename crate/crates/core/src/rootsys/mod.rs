//! Root systems, Levi subsystems, components, kernels and restricted
//! arrangements, all in exact arithmetic.

mod arrangement;
mod components;
mod enumerate;
mod subsystem;
mod system;

pub use arrangement::{restricted_arrangement, ArrangementBlock, ArrangementKind, RestrictedArrangement};
pub use components::{
    irreducible_components, kernel_basis, CartanType, Component, ComponentDecomposition,
    CoordinatePartition,
};
pub use enumerate::{enumerate_levis, levi_representatives};
pub use subsystem::{levi_of_element, RootSubsystem};
pub use system::{CartanElement, Family, RootSystem};
