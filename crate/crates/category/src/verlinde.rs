//! The Verlinde formula: recovering fusion multiplicities from an
//! invertible S-matrix, and the exact round-trip verification.

use crate::fusion::FusionTensor;
use crate::intkernel::conv_accumulate;
use crate::smatrix::{global_dim_squared, SMatrix};
use crate::CategoryError;
use cyclo::{conductor_table, CycloNumber};
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

/// Direct evaluation of `N_{ij}^k = sum_t S_it S_jt S_{k*,t} / (D^2 S_0t)`.
///
/// Quartic in the rank; use [`verlinde_round_trip`] for large categories.
pub fn verlinde_fusion(
    s: &SMatrix,
    dims: &[CycloNumber],
    dual: &[usize],
) -> Result<FusionTensor, CategoryError> {
    let n = s.n;
    let d2 = global_dim_squared(dims);
    if d2.is_zero() {
        return Err(CategoryError::Modularity("global dimension is zero".into()));
    }
    // 1 / (D^2 S_{0,t}); S_{0,t} = d_t, nonzero on the alcove
    let mut weights = Vec::with_capacity(n);
    for t in 0..n {
        let s0t = s.entry_cyclo(0, t);
        if s0t.is_zero() {
            return Err(CategoryError::Modularity(format!(
                "S_0,{t} vanishes; the S-matrix is singular"
            )));
        }
        weights.push(
            d2.mul(&s0t)
                .inv()
                .map_err(|_| CategoryError::Modularity("singular Verlinde weight".into()))?,
        );
    }
    let rows: Vec<Vec<(u32, u32)>> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            let mut row = Vec::new();
            for k in 0..n {
                let mut acc = CycloNumber::zero(s.conductor);
                for t in 0..n {
                    let prod = s
                        .entry_cyclo(i, t)
                        .mul(&s.entry_cyclo(j, t))
                        .mul(&s.entry_cyclo(dual[k], t))
                        .mul(&weights[t]);
                    acc = acc.add(&prod);
                }
                match acc.as_rational() {
                    Some(r) if r.is_integer() && !r.is_negative() => {
                        let v = r.numer().to_u32();
                        match v {
                            Some(0) => {}
                            Some(v) => row.push((k as u32, v)),
                            None => {
                                return Err(CategoryError::Modularity(format!(
                                    "Verlinde value out of range at ({i},{j},{k})"
                                )))
                            }
                        }
                    }
                    _ => {
                        return Err(CategoryError::Modularity(format!(
                            "Verlinde sum is not a nonnegative integer at ({i},{j},{k})"
                        )))
                    }
                }
            }
            Ok(row)
        })
        .collect::<Result<_, _>>()?;
    Ok(FusionTensor::from_rows(n, rows))
}

/// Exact verification that the Verlinde formula applied to `S` recovers
/// `fusion`, in the algebraically factored form:
///
/// 1. orthogonality: `sum_t S_jt S_{k*,t} = D^2 delta_{jk}`,
/// 2. diagonalization: `(sum_v N_{ij}^v S_vt) S_0t = S_it S_jt` for all t.
///
/// Substituting 2 into the Verlinde sum and contracting with 1 yields the
/// formula entry by entry, so both together are equivalent to the direct
/// quartic evaluation; they run in cubic time on integer vectors.
pub fn verlinde_round_trip(
    s: &SMatrix,
    dims: &[CycloNumber],
    dual: &[usize],
    fusion: &FusionTensor,
) -> Result<bool, CategoryError> {
    let n = s.n;
    let t = conductor_table(s.conductor);
    let phi = t.phi;
    let d2 = global_dim_squared(dims);
    let d2_vec: Vec<i128> = d2
        .int_coeffs()
        .ok_or_else(|| CategoryError::Internal("D^2 must be an algebraic integer".into()))?
        .iter()
        .map(|&c| c as i128)
        .collect();

    // guard the i64/i128 accumulators
    let bound = s.max_abs_coeff() as i128;
    if bound.checked_mul(bound).and_then(|b| {
        b.checked_mul(n as i128 * phi as i128)
    }).is_none() {
        return Err(CategoryError::Internal(
            "S-matrix coefficients too large for the integer kernel".into(),
        ));
    }

    // 1: orthogonality, symmetric in (j,k)
    let orth_ok = (0..n).into_par_iter().all(|j| {
        let mut scratch = vec![0i128; 2 * phi.max(1) - 1];
        for k in j..n {
            scratch.iter_mut().for_each(|c| *c = 0);
            for tt in 0..n {
                conv_accumulate(&mut scratch, s.entry(j, tt), s.entry(dual[k], tt));
            }
            let reduced = crate::intkernel::reduce_conv(&t, &scratch);
            let expect: Vec<i128> = if j == k {
                d2_vec.clone()
            } else {
                vec![0i128; phi]
            };
            if reduced != expect {
                return false;
            }
        }
        true
    });
    if !orth_ok {
        return Ok(false);
    }

    // 2: diagonalization, symmetric in (i,j)
    let diag_ok = (0..n).into_par_iter().all(|i| {
        let mut combo = vec![0i128; n * phi];
        let mut scratch = vec![0i128; 2 * phi.max(1) - 1];
        for j in i..n {
            combo.iter_mut().for_each(|c| *c = 0);
            for &(v, c) in fusion.row(i, j) {
                let c = c as i128;
                for tt in 0..n {
                    let src = s.entry(v as usize, tt);
                    let dst = &mut combo[tt * phi..(tt + 1) * phi];
                    for (d, &x) in dst.iter_mut().zip(src) {
                        *d += c * x as i128;
                    }
                }
            }
            for tt in 0..n {
                // (sum_v N S_vt) * S_0t == S_it * S_jt
                scratch.iter_mut().for_each(|c| *c = 0);
                let lhs_vec = &combo[tt * phi..(tt + 1) * phi];
                let s0 = s.entry(0, tt);
                for (a, &la) in lhs_vec.iter().enumerate() {
                    if la == 0 {
                        continue;
                    }
                    for (b, &sb) in s0.iter().enumerate() {
                        if sb != 0 {
                            scratch[a + b] += la * sb as i128;
                        }
                    }
                }
                let lhs = crate::intkernel::reduce_conv(&t, &scratch);
                scratch.iter_mut().for_each(|c| *c = 0);
                conv_accumulate(&mut scratch, s.entry(i, tt), s.entry(j, tt));
                let rhs = crate::intkernel::reduce_conv(&t, &scratch);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    });
    Ok(diag_ok)
}
