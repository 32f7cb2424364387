//! Root-system and Weyl-group combinatorics for the simple Lie types A-G:
//! alcove enumeration at a level, weight multiplicities, affine folding,
//! and the normalized bilinear form (short roots of squared length 2).
//!
//! Everything is exact: weights carry rational coordinates in the
//! fundamental-weight basis, inner products are rationals whose
//! denominators divide the type's Galois integer `d`, and all hot paths
//! run on plain integer vectors.

pub mod alcove;
pub mod cartan;
pub mod eps;
pub mod mult;
pub mod roots;
pub mod types;
pub mod weyl;

pub use alcove::{affine_fold, enumerate_alcove, minimal_level, Alcove};
pub use cartan::weyl_order;
pub use mult::{weight_multiplicities, weyl_dimension, WeightSystem};
pub use roots::{build_root_system, Root, RootSystemData};
pub use types::{LieError, LieFamily, LieType, Rat, SignedWeight, Weight};
pub use weyl::{dual_label, weyl_elements, WeylElement, DEFAULT_WEYL_LIMIT};
