//! Construction and analysis of the pre-modular categories attached to a
//! simple Lie type at a root of unity: labels, exact quantum dimensions
//! and twists, fusion multiplicities, S-matrices by two independent
//! routes, modularity and unitarity verdicts, and the integer-weight
//! subcategory.

pub mod charpoly;
pub mod data;
pub mod dims;
pub mod fusion;
pub mod intkernel;
pub mod modularity;
pub mod predict;
pub mod smatrix;
pub mod subcat;
pub mod unitarity;
pub mod verlinde;

pub use charpoly::fusion_determined_by_one_matrix;
pub use data::{BuildOptions, CategoryBuild, PreModularData};
pub use dims::{qdim, twist};
pub use fusion::{fusion_matrices_pairwise_commute, fusion_tensor, fusion_tensor_in, FusionTensor};
pub use modularity::{modularity_check, ModularityVerdict};
pub use predict::{expected_modularity, Expected};
pub use smatrix::{det_exact, s_matrix_from_fusion, s_matrix_weyl, weyl_route_matches, SMatrix};
pub use subcat::integer_weight_subcategory;
pub use unitarity::{unitarity_report, UnitarityReport};
pub use verlinde::{verlinde_fusion, verlinde_round_trip};

use lie_core::LieError;

#[derive(Debug, thiserror::Error)]
pub enum CategoryError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Cyclo(#[from] cyclo::CycloError),
    #[error("label error: {0}")]
    Label(String),
    #[error("out of scope: {0}")]
    Scope(String),
    #[error("modularity error: {0}")]
    Modularity(String),
    #[error("degenerate specialization: {0}")]
    DegenerateSpec(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
