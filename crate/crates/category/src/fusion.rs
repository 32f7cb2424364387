//! Truncated tensor-product multiplicities: classical weight systems
//! folded into the alcove by the affine Weyl group, with signs.

use crate::CategoryError;
use lie_core::alcove::{fold_shifted, Alcove};
use lie_core::mult::weight_system;
use lie_core::roots::RootSystemData;
use lie_core::weyl::weyl_orbit;
use rayon::prelude::*;

/// The three-index fusion multiplicity array, stored sparsely per label
/// pair: `rows[i*n + j] = [(k, N_{ij}^k), ...]` sorted by `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTensor {
    pub n: usize,
    rows: Vec<Vec<(u32, u32)>>,
}

impl FusionTensor {
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> i64 {
        self.rows[i * self.n + j]
            .binary_search_by_key(&(k as u32), |&(t, _)| t)
            .map(|pos| self.rows[i * self.n + j][pos].1 as i64)
            .unwrap_or(0)
    }

    pub fn row(&self, i: usize, j: usize) -> &[(u32, u32)] {
        &self.rows[i * self.n + j]
    }

    /// Dense fusion matrix `(N_i)_{k,j} = N_{ij}^k`.
    pub fn matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            for &(k, v) in self.row(i, j) {
                m[k as usize][j] = v as i64;
            }
        }
        m
    }

    pub fn total_nonzeros(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn from_rows(n: usize, rows: Vec<Vec<(u32, u32)>>) -> Self {
        assert_eq!(rows.len(), n * n);
        FusionTensor { n, rows }
    }
}

/// Fusion tensor at a level: enumerates the alcove and delegates to
/// [`fusion_tensor_in`]. Depends only on the type and the level.
pub fn fusion_tensor(rs: &RootSystemData, level: i64) -> Result<FusionTensor, CategoryError> {
    let alcove = lie_core::alcove::enumerate_alcove(rs, level).map_err(CategoryError::Lie)?;
    fusion_tensor_in(rs, &alcove)
}

/// Computes the full fusion tensor on a prebuilt alcove.
///
/// For each pair `(lambda, mu)`: every weight `tau` of the classical
/// module `V_mu` contributes its multiplicity, signed by the affine fold
/// of `lambda + tau`.
pub fn fusion_tensor_in(rs: &RootSystemData, alcove: &Alcove) -> Result<FusionTensor, CategoryError> {
    let n = alcove.len();
    let r = rs.rank();
    let labels = &alcove.labels;

    let columns: Vec<Vec<Vec<(u32, u32)>>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let mu = &labels[j];
            let ws = weight_system(rs, mu);
            // dense accumulation over (lambda, target), then compressed
            let mut acc = vec![0i64; n * n];
            let mut y = vec![0i64; r];
            for (delta, mult) in &ws.dominant {
                for tau in weyl_orbit(rs, delta) {
                    for (i, lambda) in labels.iter().enumerate() {
                        for t in 0..r {
                            y[t] = lambda[t] + tau[t] + 1;
                        }
                        let sign = fold_shifted(rs, alcove, &mut y);
                        if sign != 0 {
                            let target: Vec<i64> = y.iter().map(|&c| c - 1).collect();
                            let k = alcove
                                .index_of(&target)
                                .expect("fold target must be an alcove label");
                            acc[i * n + k] += sign as i64 * mult;
                        }
                    }
                }
            }
            (0..n)
                .map(|i| {
                    (0..n)
                        .filter_map(|k| {
                            let v = acc[i * n + k];
                            if v == 0 {
                                None
                            } else {
                                assert!(v > 0, "negative fusion multiplicity");
                                Some((k as u32, u32::try_from(v).unwrap()))
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut rows = vec![Vec::new(); n * n];
    for (j, column) in columns.into_iter().enumerate() {
        for (i, row) in column.into_iter().enumerate() {
            rows[i * n + j] = row;
        }
    }
    Ok(FusionTensor { n, rows })
}

/// Direct pairwise commutativity of the fusion matrices. Quadratic in the
/// stored entries; meant for small ranks (larger modular cases get
/// commutativity from simultaneous diagonalization by the S-matrix).
pub fn fusion_matrices_pairwise_commute(tensor: &FusionTensor) -> bool {
    let n = tensor.n;
    (0..n).into_par_iter().all(|i| {
        let mut p = vec![0i64; n];
        let mut q = vec![0i64; n];
        for j in i + 1..n {
            for l in 0..n {
                p.iter_mut().for_each(|x| *x = 0);
                q.iter_mut().for_each(|x| *x = 0);
                // column l of N_i N_j and of N_j N_i
                for &(m, c) in tensor.row(j, l) {
                    for &(k, v) in tensor.row(i, m as usize) {
                        p[k as usize] += c as i64 * v as i64;
                    }
                }
                for &(m, c) in tensor.row(i, l) {
                    for &(k, v) in tensor.row(j, m as usize) {
                        q[k as usize] += c as i64 * v as i64;
                    }
                }
                if p != q {
                    return false;
                }
            }
        }
        true
    })
}

/// Checks the structural identities of a fusion tensor against a dual
/// permutation: symmetry, unit row, duality relations.
pub fn check_tensor_identities(
    tensor: &FusionTensor,
    dual: &[usize],
) -> Result<(), CategoryError> {
    let n = tensor.n;
    for i in 0..n {
        for j in 0..n {
            // unit object: X_0 x X_i = X_i
            if tensor.coeff(0, i, j) != i64::from(i == j) {
                return Err(CategoryError::Internal(format!(
                    "unit row violated at ({i},{j})"
                )));
            }
            // N_{i,j}^0 = delta_{i,j*}
            let expect_dual = i64::from(dual[i] == j);
            if tensor.coeff(i, j, 0) != expect_dual {
                return Err(CategoryError::Internal(format!(
                    "dual pairing violated at ({i},{j})"
                )));
            }
            for &(k, v) in tensor.row(i, j) {
                let k = k as usize;
                let v = v as i64;
                if tensor.coeff(j, i, k) != v {
                    return Err(CategoryError::Internal(format!(
                        "fusion symmetry violated at ({i},{j},{k})"
                    )));
                }
                if tensor.coeff(i, dual[k], dual[j]) != v {
                    return Err(CategoryError::Internal(format!(
                        "fusion duality N_(i,k*)^(j*) violated at ({i},{j},{k})"
                    )));
                }
                if tensor.coeff(dual[i], dual[j], dual[k]) != v {
                    return Err(CategoryError::Internal(format!(
                        "fusion duality N_(i*,j*)^(k*) violated at ({i},{j},{k})"
                    )));
                }
            }
        }
    }
    Ok(())
}
