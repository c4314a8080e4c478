//! Exact computations for finite 2-groups with a cyclic or dihedral maximal
//! subgroup: normal-form arithmetic, automorphism groups, orbits of
//! generating tuples and the Euler characteristics of the associated maps.

pub mod aut;
pub mod catalog;
pub mod charfree;
pub mod cli;
pub mod dsu;
pub mod error;
pub mod group;
pub mod maps;
pub mod representatives;
pub mod tables;
pub mod triples;
pub mod verify;

pub use aut::{brute_force_aut, closed_form_aut_order, explicit_aut, AutGroup, Automorphism};
pub use catalog::{build, catalog_all, group, Family, FamilyDescriptor, FeatureFlags};
pub use charfree::{is_squarefree, square_divisor_scan};
pub use error::{Error, Result};
pub use group::{Element, GroupInstance, SubgroupClosure};
pub use maps::{chi, chi_form, classify, passes_filter, realize, ChiForm, MapRecord, MapType};
pub use triples::{enumerate, equivalent, orbit_partition, GenTuple, OrbitPartition, TupleKind};
