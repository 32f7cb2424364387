//! The fundamental alcove at level `l` and the affine folding action.

use crate::roots::{Root, RootSystemData};
use crate::types::{LieError, SignedWeight, Weight};
use std::collections::HashMap;

/// Which dominant root bounds the alcove: the highest root when `m | l`,
/// the highest short root otherwise. For simply-laced types `m = 1`
/// divides everything and the two cases coincide.
pub fn wall_root(rs: &RootSystemData, level: i64) -> &Root {
    if level % rs.m == 0 {
        &rs.theta_long
    } else {
        &rs.theta_short
    }
}

/// Minimal non-degenerate level within the divisibility class of `level`:
/// the smallest `l` with `l = level (mod m divisibility class)` and
/// `l >= <rho, theta_j> + 1`, so that the alcove is nonempty.
pub fn minimal_level(rs: &RootSystemData, level_divisible: bool) -> i64 {
    let level_divisible = level_divisible || rs.m == 1;
    let theta = if level_divisible {
        &rs.theta_long
    } else {
        &rs.theta_short
    };
    let rho_theta = rs.pair_with_root(&rs.rho_ints(), theta);
    let mut l = rho_theta + 1;
    if level_divisible {
        while l % rs.m != 0 {
            l += 1;
        }
    } else {
        while l % rs.m == 0 {
            l += 1;
        }
    }
    l
}

fn check_level(rs: &RootSystemData, level: i64) -> Result<(), LieError> {
    let min = minimal_level(rs, level % rs.m == 0);
    if level < min {
        return Err(LieError::Level {
            ty: rs.lie_type.to_string(),
            level,
            min,
        });
    }
    Ok(())
}

/// The fundamental alcove: `{lambda dominant : <lambda+rho, theta_j> < l}`,
/// ordered by (grade, coordinates) with the zero weight first.
#[derive(Debug, Clone)]
pub struct Alcove {
    pub level: i64,
    /// Labels in fundamental coordinates, deterministic order.
    pub labels: Vec<Vec<i64>>,
    /// `<lambda + rho, theta_j>` per label.
    pub grades: Vec<i64>,
    index: HashMap<Vec<i64>, usize>,
    /// Wall root data for folding.
    theta_fund: Vec<i64>,
    theta_pairing: Vec<i64>,
    theta_half: i64,
}

impl Alcove {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, fund: &[i64]) -> Option<usize> {
        self.index.get(fund).copied()
    }

    pub fn weight(&self, i: usize) -> Weight {
        Weight::from_ints(&self.labels[i])
    }

    /// `<x, theta_j>` for the wall root of this alcove.
    pub fn theta_pairing(&self, x: &[i64]) -> i64 {
        self.theta_pairing.iter().zip(x).map(|(&p, &xi)| p * xi).sum()
    }
}

/// Enumerates the alcove labels for `level >= l_0`.
pub fn enumerate_alcove(rs: &RootSystemData, level: i64) -> Result<Alcove, LieError> {
    check_level(rs, level)?;
    let theta = wall_root(rs, level).clone();
    let pairing: Vec<i64> = {
        // <x, theta> = sum_j c_j(theta) d_j x_j
        (0..rs.rank())
            .map(|j| theta.simple_coords[j] * rs.simple_half_lengths[j])
            .collect()
    };
    let rho_theta: i64 = pairing.iter().sum();
    let budget = level - 1 - rho_theta; // sum_i a_i L_i <= budget
    let coeffs: Vec<i64> = pairing.clone();

    let mut labels: Vec<Vec<i64>> = Vec::new();
    let mut current = vec![0i64; rs.rank()];
    enumerate_rec(&coeffs, budget, 0, &mut current, &mut labels);
    labels.sort_by_key(|a| {
        let grade: i64 = rho_theta + coeffs.iter().zip(a).map(|(&c, &ai)| c * ai).sum::<i64>();
        (grade, a.clone())
    });
    let grades: Vec<i64> = labels
        .iter()
        .map(|a| rho_theta + coeffs.iter().zip(a).map(|(&c, &ai)| c * ai).sum::<i64>())
        .collect();
    let index = labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    Ok(Alcove {
        level,
        labels,
        grades,
        index,
        theta_fund: theta.fund_coords.clone(),
        theta_pairing: pairing,
        theta_half: theta.half_length,
    })
}

fn enumerate_rec(
    coeffs: &[i64],
    budget: i64,
    pos: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if pos == coeffs.len() {
        out.push(current.clone());
        return;
    }
    let mut a = 0;
    while a * coeffs[pos] <= budget {
        current[pos] = a;
        enumerate_rec(coeffs, budget - a * coeffs[pos], pos + 1, current, out);
        a += 1;
    }
    current[pos] = 0;
}

/// Folds the shifted point `y` (to be read as `lambda + rho`) into the
/// closed alcove under the affine Weyl group generated by the simple
/// reflections and the reflection in the wall `<x, theta_j> = l`.
///
/// Returns the folded point and the sign of the folding element, or sign 0
/// if the point lies on a reflection wall. Operates in place.
pub fn fold_shifted(rs: &RootSystemData, alcove: &Alcove, y: &mut [i64]) -> i8 {
    let level = alcove.level;
    let mut sign = 1i8;
    let mut steps = 0u32;
    'outer: loop {
        steps += 1;
        assert!(steps < 100_000, "affine fold failed to terminate");
        for i in 0..rs.rank() {
            if y[i] == 0 {
                return 0;
            }
            if y[i] < 0 {
                crate::weyl::reflect_simple(rs, i, y);
                sign = -sign;
                continue 'outer;
            }
        }
        let t = alcove.theta_pairing(y);
        if t == level {
            return 0;
        }
        if t > level {
            // reflection in the affine wall: y -> y - ((t - l)/d_theta) theta
            let excess = t - level;
            debug_assert_eq!(excess % alcove.theta_half, 0);
            let c = excess / alcove.theta_half;
            for (yj, &tj) in y.iter_mut().zip(&alcove.theta_fund) {
                *yj -= c * tj;
            }
            sign = -sign;
            continue 'outer;
        }
        return sign;
    }
}

/// Folds an arbitrary integral weight into the alcove with the dot action
/// `w . lambda = w(lambda + rho) - rho`.
pub fn affine_fold(
    rs: &RootSystemData,
    level: i64,
    lambda: &Weight,
) -> Result<SignedWeight, LieError> {
    let alcove = enumerate_alcove(rs, level)?;
    let ints = lambda
        .int_coords()
        .ok_or_else(|| LieError::Argument("affine_fold needs an integral weight".into()))?;
    Ok(affine_fold_in(rs, &alcove, &ints))
}

/// Same as [`affine_fold`] with a prebuilt alcove.
pub fn affine_fold_in(rs: &RootSystemData, alcove: &Alcove, lambda: &[i64]) -> SignedWeight {
    let mut y: Vec<i64> = lambda.iter().map(|&c| c + 1).collect();
    let sign = fold_shifted(rs, alcove, &mut y);
    if sign == 0 {
        return SignedWeight {
            weight: Weight::zero(rs.rank()),
            sign: 0,
        };
    }
    for c in y.iter_mut() {
        *c -= 1;
    }
    SignedWeight {
        weight: Weight::from_ints(&y),
        sign,
    }
}
