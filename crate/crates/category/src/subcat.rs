//! The subcategory generated by simple objects with root-lattice labels.

use crate::data::PreModularData;
use crate::fusion::FusionTensor;
use crate::smatrix::{global_dim_squared, SMatrix};
use crate::CategoryError;
use lie_core::roots::RootSystemData;
use lie_core::LieFamily;
use num_rational::Rational64;
use num_traits::Zero;

/// Whether a dominant weight lies in the root lattice: its simple-root
/// coordinates (solving against the Cartan matrix) are integers.
pub fn in_root_lattice(rs: &RootSystemData, fund: &[i64]) -> bool {
    // solve c A = fund, i.e. A^T c = fund, over the rationals
    let r = rs.rank();
    let mut aug: Vec<Vec<Rational64>> = (0..r)
        .map(|i| {
            (0..=r)
                .map(|j| {
                    if j < r {
                        Rational64::from_integer(rs.cartan[j][i])
                    } else {
                        Rational64::from_integer(fund[i])
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..r {
        let piv = (col..r).find(|&row| !aug[row][col].is_zero()).unwrap();
        aug.swap(col, piv);
        let p = aug[col][col];
        for j in 0..=r {
            aug[col][j] /= p;
        }
        for row in 0..r {
            if row != col && !aug[row][col].is_zero() {
                let f = aug[row][col];
                for j in 0..=r {
                    let sub = f * aug[col][j];
                    aug[row][j] -= sub;
                }
            }
        }
    }
    (0..r).all(|i| aug[i][r].is_integer())
}

/// Restricts the category to the integer-weight (root-lattice) labels.
///
/// Supported in the proven-modular regimes: type A with
/// `gcd(l, r+1) = 1`, and type B with odd `l`.
pub fn integer_weight_subcategory(
    rs: &RootSystemData,
    data: &PreModularData,
) -> Result<PreModularData, CategoryError> {
    let t = data.lie_type;
    let r = t.rank as i64;
    let supported = match t.family {
        LieFamily::A => num_integer::gcd(data.level, r + 1) == 1,
        LieFamily::B => data.level % 2 == 1,
        _ => false,
    };
    if !supported {
        return Err(CategoryError::Scope(format!(
            "integer-weight subcategory is supported for type A with gcd(l, r+1) = 1 \
             and type B with odd l; got {t} at level {}",
            data.level
        )));
    }

    let keep: Vec<usize> = (0..data.labels.len())
        .filter(|&i| in_root_lattice(rs, &data.labels[i]))
        .collect();
    let mut back = vec![usize::MAX; data.labels.len()];
    for (new, &old) in keep.iter().enumerate() {
        back[old] = new;
    }
    if keep.is_empty() || keep[0] != 0 {
        return Err(CategoryError::Internal(
            "the unit object must be an integer weight".into(),
        ));
    }

    // fusion closure and duality must restrict
    let n = keep.len();
    let mut rows = vec![Vec::new(); n * n];
    for (i_new, &i) in keep.iter().enumerate() {
        if back[data.dual[i]] == usize::MAX {
            return Err(CategoryError::Internal(
                "dual of an integer weight left the subcategory".into(),
            ));
        }
        for (j_new, &j) in keep.iter().enumerate() {
            let mut row = Vec::new();
            for &(k, v) in data.fusion.row(i, j) {
                let k_new = back[k as usize];
                if k_new == usize::MAX {
                    return Err(CategoryError::Internal(format!(
                        "fusion of integer weights {i},{j} leaves the subcategory"
                    )));
                }
                row.push((k_new as u32, v));
            }
            rows[i_new * n + j_new] = row;
        }
    }

    let phi = data.s.phi;
    let mut s_data = vec![0i64; n * n * phi];
    for (i_new, &i) in keep.iter().enumerate() {
        for (j_new, &j) in keep.iter().enumerate() {
            s_data[(i_new * n + j_new) * phi..(i_new * n + j_new + 1) * phi]
                .copy_from_slice(data.s.entry(i, j));
        }
    }

    let dims: Vec<_> = keep.iter().map(|&i| data.dims[i].clone()).collect();
    let d2 = global_dim_squared(&dims);
    Ok(PreModularData {
        lie_type: t,
        level: data.level,
        spec: data.spec,
        m: data.m,
        labels: keep.iter().map(|&i| data.labels[i].clone()).collect(),
        grades: keep.iter().map(|&i| data.grades[i]).collect(),
        dual: keep.iter().map(|&i| back[data.dual[i]]).collect(),
        fusion: FusionTensor::from_rows(n, rows),
        dims_int: keep.iter().map(|&i| data.dims_int[i].clone()).collect(),
        dims,
        twists: keep.iter().map(|&i| data.twists[i].clone()).collect(),
        twist_exps: keep.iter().map(|&i| data.twist_exps[i]).collect(),
        s: SMatrix::from_flat(n, data.s.conductor, s_data),
        d2,
    })
}
