//! Quantum dimensions and twists.

use crate::CategoryError;
use cyclo::{conductor_table, CycloNumber, QSpec};
use lie_core::alcove::Alcove;
use lie_core::roots::RootSystemData;
use lie_core::types::{Rat, Weight};

/// `<x, alpha>` over all positive roots, for the shifted weight `x`.
fn root_pairings(rs: &RootSystemData, x: &[i64]) -> Vec<i64> {
    rs.positive_roots
        .iter()
        .map(|alpha| rs.pair_with_root(x, alpha))
        .collect()
}

/// Numerator product `prod_alpha (q^{a_alpha} - q^{-a_alpha})` as exact
/// integer coefficients at the spec conductor.
fn sine_product(spec: &QSpec, pairings: &[i64]) -> Vec<i64> {
    let t = conductor_table(spec.conductor);
    let n = t.n as i64;
    let mut acc = vec![0i128; t.phi];
    acc[0] = 1;
    for &a in pairings {
        let epos = spec
            .zeta_exponent(Rat::from_integer(a))
            .expect("integer exponent")
            .rem_euclid(n) as usize;
        let eneg = spec
            .zeta_exponent(Rat::from_integer(-a))
            .expect("integer exponent")
            .rem_euclid(n) as usize;
        let mut next = vec![0i128; t.phi];
        for (k, &c) in acc.iter().enumerate() {
            if c != 0 {
                crate::intkernel::add_row_scaled(&t, &mut next, (k + epos) % t.n as usize, c);
                crate::intkernel::add_row_scaled(&t, &mut next, (k + eneg) % t.n as usize, -c);
            }
        }
        acc = next;
    }
    crate::intkernel::narrow(acc)
}

/// The inverse of the Weyl denominator `prod_alpha (q^{<rho,alpha>} - q^{-<rho,alpha>})`,
/// shared by every dimension at a given spec.
pub fn weyl_denominator_inv(
    rs: &RootSystemData,
    spec: &QSpec,
) -> Result<CycloNumber, CategoryError> {
    let rho = rs.rho_ints();
    let den = sine_product(spec, &root_pairings(rs, &rho));
    let den = CycloNumber::from_int_coeffs(spec.conductor, &den);
    if den.is_zero() {
        return Err(CategoryError::DegenerateSpec(
            "Weyl denominator vanishes".into(),
        ));
    }
    Ok(den.inv().map_err(CategoryError::Cyclo)?)
}

/// `d_lambda = prod_alpha [<lambda+rho,alpha>] / [<rho,alpha>]`, exact.
pub fn qdim(
    rs: &RootSystemData,
    spec: &QSpec,
    alcove: &Alcove,
    lambda: &Weight,
) -> Result<CycloNumber, CategoryError> {
    let ints = lambda
        .int_coords()
        .ok_or_else(|| CategoryError::Label(format!("{lambda} is not integral")))?;
    if alcove.index_of(&ints).is_none() {
        return Err(CategoryError::Label(format!(
            "{lambda} is outside the alcove at level {}",
            alcove.level
        )));
    }
    let inv = weyl_denominator_inv(rs, spec)?;
    Ok(qdim_with_inv(rs, spec, &ints, &inv))
}

pub(crate) fn qdim_with_inv(
    rs: &RootSystemData,
    spec: &QSpec,
    lambda: &[i64],
    denominator_inv: &CycloNumber,
) -> CycloNumber {
    let shifted: Vec<i64> = lambda.iter().map(|&c| c + 1).collect();
    let num = sine_product(spec, &root_pairings(rs, &shifted));
    CycloNumber::from_int_coeffs(spec.conductor, &num).mul(denominator_inv)
}

/// All alcove dimensions, sharing one Weyl-denominator inversion.
pub fn qdims_batch(
    rs: &RootSystemData,
    spec: &QSpec,
    alcove: &Alcove,
) -> Result<Vec<CycloNumber>, CategoryError> {
    let inv = weyl_denominator_inv(rs, spec)?;
    Ok(alcove
        .labels
        .iter()
        .map(|lam| qdim_with_inv(rs, spec, lam, &inv))
        .collect())
}

/// Twist exponent: `theta_lambda = q^{<lambda, lambda + 2 rho>}`, returned
/// as the exponent of `zeta_N`.
pub fn twist_exponent(rs: &RootSystemData, spec: &QSpec, lambda: &[i64]) -> i64 {
    let shifted: Vec<i64> = lambda.iter().map(|&c| c + 2).collect();
    let scaled = rs.pair_scaled(lambda, &shifted); // d <lambda, lambda+2rho>
    let e = Rat::new(scaled, rs.d);
    spec.zeta_exponent(e).expect("weight pairing denominator divides d")
}

/// `theta_lambda` as an exact root of unity.
pub fn twist(
    rs: &RootSystemData,
    spec: &QSpec,
    alcove: &Alcove,
    lambda: &Weight,
) -> Result<CycloNumber, CategoryError> {
    let ints = lambda
        .int_coords()
        .ok_or_else(|| CategoryError::Label(format!("{lambda} is not integral")))?;
    if alcove.index_of(&ints).is_none() {
        return Err(CategoryError::Label(format!(
            "{lambda} is outside the alcove at level {}",
            alcove.level
        )));
    }
    Ok(CycloNumber::root_of_unity(
        spec.conductor,
        twist_exponent(rs, spec, &ints),
    ))
}
