//! Noncrossing set partitions of `{1, .., n}` under rotation and
//! reflection.
//!
//! The crate provides:
//!
//! - parsing, canonical formatting, and exhaustive generation of set
//!   partitions, with a fast noncrossing predicate ([`partition`]);
//! - the rotation, complement, Kreweras-complement, and transpose operators
//!   together with rotation orbits and their classification ([`symmetry`]);
//! - the bijection between noncrossing partitions and Dyck paths, and the
//!   bijection sending self-complementary noncrossing partitions of a
//!   `2m`-element set to balanced `m`-paths ([`path`]);
//! - the correspondence between rotation classes and bicolored plane trees,
//!   with canonical codes up to rotation or up to rotation and reflection
//!   ([`tree`]);
//! - exact closed-form counts, their brute-force oracles, and the verified
//!   counting table ([`census`]).
//!
//! All counting is done in checked 128-bit integer arithmetic: overflow is
//! a reported error, never a silent wraparound.

pub mod census;
mod error;
pub mod partition;
pub mod path;
pub mod symmetry;
pub mod tree;

pub use error::{Error, Result};
pub use partition::{enumerate_all, enumerate_nc, PartitionStats, SetPartition, MAX_GROUND_SET};
pub use path::{
    balanced_to_sc, dyck_to_nc, nc_to_dyck, sc_to_balanced, LatticePath, Step,
};
pub use symmetry::{
    classify_achiral, complement, complement_order, is_self_complementary, kreweras,
    rotate, rotation_orbit, transpose, verify_operator_identities, AchiralClassification,
    IdentityCheck, IdentityReport, Parity, RotationClass,
};
pub use tree::{
    canonical_code, enumerate_tree_classes, leaf_stats, nc_to_tree, tree_center, tree_to_nc,
    BicoloredPlaneTree, Chirality, Color, TreeCode,
};
pub use census::{
    achiral_classes_brute, bell, bicolored_tree_formula, binom, catalan, catalan_half,
    central_binomial, chiral_pairs_formula, clickable_count_brute, conjecture_check,
    dihedral_brute, dihedral_formula, euler_phi, fixed_by_rotation_brute, fpt_formula,
    is_clickable, ncpp_brute, ncpp_formula, sc_nc_brute, table, table_csv, ConjectureReport,
    CountRow, ALL_PARTITIONS_BUDGET, CSV_HEADER, GOLDEN_TABLE_CSV, KNOWN_PATTERN_COUNTS,
    NC_SCAN_BUDGET, ORBIT_BUDGET,
};
