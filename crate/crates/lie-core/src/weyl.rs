//! Weyl group enumeration, orbits and duality.

use crate::cartan::weyl_order;
use crate::roots::RootSystemData;
use crate::types::{LieError, Weight};
use std::collections::HashSet;

/// Default cap on explicit Weyl-group enumeration. Covers every classical
/// type of rank <= 6 plus F4 and E6; E7 and E8 need an explicit override.
pub const DEFAULT_WEYL_LIMIT: u128 = 2_000_000;

/// One Weyl-group element: its matrix on fundamental coordinates
/// (row-major, integral) and its determinant sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Vec<i64>,
    pub sign: i8,
}

impl WeylElement {
    pub fn apply(&self, rank: usize, x: &[i64]) -> Vec<i64> {
        (0..rank)
            .map(|i| (0..rank).map(|j| self.matrix[i * rank + j] * x[j]).sum())
            .collect()
    }
}

/// Applies the simple reflection `s_i` in place: `x -> x - x_i * alpha_i`.
pub fn reflect_simple(rs: &RootSystemData, i: usize, x: &mut [i64]) {
    let xi = x[i];
    if xi == 0 {
        return;
    }
    for (j, xj) in x.iter_mut().enumerate() {
        *xj -= xi * rs.cartan[i][j];
    }
}

/// Enumerates all Weyl group elements with their signs.
///
/// Errors when the classical group order exceeds `limit`, before any
/// enumeration work is done.
pub fn weyl_elements(rs: &RootSystemData, limit: u128) -> Result<Vec<WeylElement>, LieError> {
    let order = weyl_order(rs.lie_type);
    if order > limit {
        return Err(LieError::Capacity { order, limit });
    }
    let r = rs.rank();
    let mut identity = vec![0i64; r * r];
    for i in 0..r {
        identity[i * r + i] = 1;
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(identity.clone());
    let mut out = vec![WeylElement {
        matrix: identity,
        sign: 1,
    }];
    let mut cursor = 0;
    while cursor < out.len() {
        let current = out[cursor].clone();
        cursor += 1;
        for i in 0..r {
            // rows of the product s_i . w act on column vectors of coords
            let mut next = current.matrix.clone();
            for col in 0..r {
                let pivot = current.matrix[i * r + col];
                if pivot == 0 {
                    continue;
                }
                for row in 0..r {
                    next[row * r + col] -= pivot * rs.cartan[i][row];
                }
            }
            if seen.insert(next.clone()) {
                out.push(WeylElement {
                    matrix: next,
                    sign: -current.sign,
                });
            }
        }
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// Moves `x` to its dominant representative with plain (undotted)
/// reflections; multiplicity-style uses only, no sign tracking.
pub fn dominant_representative(rs: &RootSystemData, x: &[i64]) -> Vec<i64> {
    let mut y = x.to_vec();
    loop {
        match y.iter().position(|&c| c < 0) {
            Some(i) => reflect_simple(rs, i, &mut y),
            None => return y,
        }
    }
}

/// The Weyl orbit of a dominant weight.
pub fn weyl_orbit(rs: &RootSystemData, dominant: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(dominant.to_vec());
    let mut out = vec![dominant.to_vec()];
    let mut cursor = 0;
    while cursor < out.len() {
        let current = out[cursor].clone();
        cursor += 1;
        for i in 0..rs.rank() {
            let mut next = current.clone();
            reflect_simple(rs, i, &mut next);
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
    }
    out
}

/// The label of the dual simple object: `-w_0(lambda)`, computed as the
/// dominant representative of `-lambda`.
pub fn dual_label(rs: &RootSystemData, lambda: &Weight) -> Result<Weight, LieError> {
    let ints = lambda
        .int_coords()
        .ok_or_else(|| LieError::Argument("dual_label needs an integral weight".into()))?;
    if ints.iter().any(|&c| c < 0) {
        return Err(LieError::Argument("dual_label needs a dominant weight".into()));
    }
    let neg: Vec<i64> = ints.iter().map(|&c| -c).collect();
    Ok(Weight::from_ints(&dominant_representative(rs, &neg)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_root_system;
    use crate::types::{LieFamily, LieType};

    fn rs(f: LieFamily, r: usize) -> RootSystemData {
        build_root_system(LieType::new(f, r).unwrap())
    }

    #[test]
    fn a1_two_elements() {
        let s = rs(LieFamily::A, 1);
        let w = weyl_elements(&s, DEFAULT_WEYL_LIMIT).unwrap();
        assert_eq!(w.len(), 2);
        let mut signs: Vec<i8> = w.iter().map(|e| e.sign).collect();
        signs.sort();
        assert_eq!(signs, vec![-1, 1]);
    }

    #[test]
    fn b2_eight_elements_sign_sum_zero() {
        let s = rs(LieFamily::B, 2);
        let w = weyl_elements(&s, DEFAULT_WEYL_LIMIT).unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(w.iter().map(|e| e.sign as i64).sum::<i64>(), 0);
    }

    #[test]
    fn a2_six_elements_three_positive() {
        let s = rs(LieFamily::A, 2);
        let w = weyl_elements(&s, DEFAULT_WEYL_LIMIT).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.iter().filter(|e| e.sign == 1).count(), 3);
    }

    #[test]
    fn capacity_guard_reports_order() {
        let s = rs(LieFamily::E, 7);
        match weyl_elements(&s, DEFAULT_WEYL_LIMIT) {
            Err(LieError::Capacity { order, .. }) => assert_eq!(order, 2_903_040),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn elements_permute_roots() {
        let s = rs(LieFamily::G, 2);
        let w = weyl_elements(&s, DEFAULT_WEYL_LIMIT).unwrap();
        assert_eq!(w.len(), 12);
        let roots: std::collections::HashSet<Vec<i64>> = s
            .positive_roots
            .iter()
            .flat_map(|rt| {
                let neg: Vec<i64> = rt.fund_coords.iter().map(|&c| -c).collect();
                [rt.fund_coords.clone(), neg]
            })
            .collect();
        for e in &w {
            for rt in &s.positive_roots {
                let img = e.apply(2, &rt.fund_coords);
                assert!(roots.contains(&img));
            }
        }
    }

    #[test]
    fn dual_label_examples() {
        let a2 = rs(LieFamily::A, 2);
        let d = dual_label(&a2, &Weight::from_ints(&[1, 0])).unwrap();
        assert_eq!(d, Weight::from_ints(&[0, 1]));
        assert_eq!(
            dual_label(&a2, &Weight::zero(2)).unwrap(),
            Weight::zero(2)
        );

        // B2 is self-dual: w_0 = -1.
        let b2 = rs(LieFamily::B, 2);
        for a in 0..4 {
            for b in 0..4 {
                let lam = Weight::from_ints(&[a, b]);
                assert_eq!(dual_label(&b2, &lam).unwrap(), lam);
            }
        }
    }

    #[test]
    fn dual_label_is_involutive() {
        let a3 = rs(LieFamily::A, 3);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let lam = Weight::from_ints(&[a, b, c]);
                    let dd = dual_label(&a3, &dual_label(&a3, &lam).unwrap()).unwrap();
                    assert_eq!(dd, lam);
                }
            }
        }
    }

    #[test]
    fn orbit_sizes() {
        let b2 = rs(LieFamily::B, 2);
        assert_eq!(weyl_orbit(&b2, &[0, 0]).len(), 1);
        assert_eq!(weyl_orbit(&b2, &[1, 0]).len(), 4); // short-root orbit: 4 vectors
        assert_eq!(weyl_orbit(&b2, &[1, 1]).len(), 8); // regular orbit: |W|
    }
}
