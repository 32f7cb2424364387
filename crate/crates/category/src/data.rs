//! Assembly of the complete pre-modular category data for one
//! `(type, level, z)`.

use crate::dims::{qdim_with_inv, twist_exponent, weyl_denominator_inv};
use crate::fusion::{check_tensor_identities, fusion_tensor_in, FusionTensor};
use crate::modularity::{modularity_check, ModularityVerdict};
use crate::smatrix::{global_dim_squared, s_matrix_from_fusion, SMatrix};
use crate::unitarity::{unitarity_report, UnitarityReport};
use crate::CategoryError;
use cyclo::{CycloNumber, QSpec};
use lie_core::alcove::{enumerate_alcove, Alcove};
use lie_core::roots::{build_root_system, RootSystemData};
use lie_core::weyl::dual_label;
use lie_core::{LieFamily, LieType, Weight};

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Allow types whose fusion data is expensive (E family, classical
    /// rank above 4).
    pub allow_large: bool,
    /// Cap for explicit Weyl-group enumeration in the cross-check route.
    pub weyl_limit: u128,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            allow_large: false,
            weyl_limit: lie_core::DEFAULT_WEYL_LIMIT,
        }
    }
}

/// Everything that depends only on `(type, level)`: the alcove, duality,
/// and the fusion tensor. Reused across choices of `z`.
pub struct CategoryBuild {
    pub lie_type: LieType,
    pub level: i64,
    pub rs: RootSystemData,
    pub alcove: Alcove,
    pub dual: Vec<usize>,
    pub fusion: FusionTensor,
}

impl CategoryBuild {
    pub fn new(t: LieType, level: i64, opts: &BuildOptions) -> Result<Self, CategoryError> {
        let large = matches!(t.family, LieFamily::E)
            || (matches!(t.family, LieFamily::A | LieFamily::B | LieFamily::C | LieFamily::D)
                && t.rank > 4);
        if large && !opts.allow_large {
            return Err(CategoryError::Scope(format!(
                "{t} fusion data is gated behind the large-type flag"
            )));
        }
        let rs = build_root_system(t);
        let alcove = enumerate_alcove(&rs, level).map_err(CategoryError::Lie)?;
        let dual: Vec<usize> = alcove
            .labels
            .iter()
            .map(|lam| {
                let d = dual_label(&rs, &Weight::from_ints(lam))
                    .expect("alcove labels are dominant integral");
                alcove
                    .index_of(&d.int_coords().unwrap())
                    .expect("duals stay inside the alcove")
            })
            .collect();
        let fusion = fusion_tensor_in(&rs, &alcove)?;
        check_tensor_identities(&fusion, &dual)?;
        Ok(CategoryBuild {
            lie_type: t,
            level,
            rs,
            alcove,
            dual,
            fusion,
        })
    }

    /// Admissible specialization exponents for this level.
    pub fn admissible_z(&self) -> Vec<i64> {
        QSpec::admissible_z(self.level)
    }

    /// Completes the data for one choice of `z`.
    pub fn with_z(&self, z: i64) -> Result<PreModularData, CategoryError> {
        let spec = QSpec::new(self.level, z, self.rs.d).map_err(CategoryError::Cyclo)?;
        let n = self.alcove.len();
        let den_inv = weyl_denominator_inv(&self.rs, &spec)?;
        let dims: Vec<CycloNumber> = self
            .alcove
            .labels
            .iter()
            .map(|lam| qdim_with_inv(&self.rs, &spec, lam, &den_inv))
            .collect();
        let dims_int: Vec<Vec<i64>> = dims
            .iter()
            .enumerate()
            .map(|(i, d)| {
                d.int_coeffs().ok_or_else(|| {
                    CategoryError::Internal(format!(
                        "dimension {i} is not an algebraic integer"
                    ))
                })
            })
            .collect::<Result<_, _>>()?;
        let twist_exps: Vec<i64> = self
            .alcove
            .labels
            .iter()
            .map(|lam| twist_exponent(&self.rs, &spec, lam))
            .collect();
        let twists: Vec<CycloNumber> = twist_exps
            .iter()
            .map(|&e| CycloNumber::root_of_unity(spec.conductor, e))
            .collect();
        let s = s_matrix_from_fusion(&self.fusion, &self.dual, &dims_int, &twist_exps, &spec);
        // S_{0,j} = d_j comes out of the assembly; keep it as a hard check
        for j in 0..n {
            if s.entry(0, j) != dims_int[j].as_slice() {
                return Err(CategoryError::Internal(format!(
                    "S_0,{j} differs from d_{j}"
                )));
            }
        }
        let d2 = global_dim_squared(&dims);
        Ok(PreModularData {
            lie_type: self.lie_type,
            level: self.level,
            spec,
            m: self.rs.m,
            labels: self.alcove.labels.clone(),
            grades: self.alcove.grades.clone(),
            dual: self.dual.clone(),
            fusion: self.fusion.clone(),
            dims,
            dims_int,
            twists,
            twist_exps,
            s,
            d2,
        })
    }
}

/// The complete computed category data for one `(type, level, z)`.
pub struct PreModularData {
    pub lie_type: LieType,
    pub level: i64,
    pub spec: QSpec,
    pub m: i64,
    /// Labels in fundamental coordinates, canonical order (unit first).
    pub labels: Vec<Vec<i64>>,
    pub grades: Vec<i64>,
    pub dual: Vec<usize>,
    pub fusion: FusionTensor,
    pub dims: Vec<CycloNumber>,
    pub dims_int: Vec<Vec<i64>>,
    pub twists: Vec<CycloNumber>,
    pub twist_exps: Vec<i64>,
    pub s: SMatrix,
    pub d2: CycloNumber,
}

impl PreModularData {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn modularity_check(&self) -> Result<ModularityVerdict, CategoryError> {
        modularity_check(&self.s, &self.dims_int)
    }

    pub fn unitarity_report(&self) -> UnitarityReport {
        unitarity_report(self.lie_type, self.level, self.spec.z, self.m, &self.dims)
    }

    pub fn expected_modularity(&self) -> crate::predict::Expected {
        crate::predict::expected_modularity(self.lie_type, self.level, self.spec.z)
    }

    /// Structural invariants tying dims, twists, fusion and S together.
    pub fn check_structure(&self) -> Result<(), CategoryError> {
        let n = self.rank();
        if !self.dims[0].is_one() {
            return Err(CategoryError::Internal("d_0 != 1".into()));
        }
        if !self.twists[0].is_one() {
            return Err(CategoryError::Internal("theta_0 != 1".into()));
        }
        for i in 0..n {
            // theta preserved by duality
            if self.twists[i] != self.twists[self.dual[i]] {
                return Err(CategoryError::Internal(format!(
                    "twist duality violated at {i}"
                )));
            }
            for j in 0..n {
                if self.s.entry(i, j) != self.s.entry(j, i) {
                    return Err(CategoryError::Internal("S is not symmetric".into()));
                }
                if self.s.entry(i, j) != self.s.entry(self.dual[i], self.dual[j]) {
                    return Err(CategoryError::Internal(
                        "S duality invariance violated".into(),
                    ));
                }
            }
        }
        self.check_dimension_homomorphism()
    }

    /// `d_i d_j = sum_k N_{ij}^k d_k`, exactly.
    pub fn check_dimension_homomorphism(&self) -> Result<(), CategoryError> {
        use crate::intkernel::conv_reduce;
        let t = cyclo::conductor_table(self.spec.conductor);
        let n = self.rank();
        for i in 0..n {
            for j in i..n {
                let lhs = conv_reduce(&t, &self.dims_int[i], &self.dims_int[j]);
                let mut rhs = vec![0i128; t.phi];
                for &(k, c) in self.fusion.row(i, j) {
                    for (a, &x) in rhs.iter_mut().zip(&self.dims_int[k as usize]) {
                        *a += c as i128 * x as i128;
                    }
                }
                if lhs != rhs {
                    return Err(CategoryError::Internal(format!(
                        "dimension homomorphism fails at ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}
