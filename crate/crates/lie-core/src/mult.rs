//! Weight multiplicities of irreducible highest-weight modules via
//! Freudenthal's recursion, plus the Weyl dimension formula.

use crate::roots::RootSystemData;
use crate::types::{LieError, Weight};
use crate::weyl::{dominant_representative, weyl_orbit};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;

/// Dominant weights of `V_mu` with their multiplicities. The full weight
/// system is the union of the Weyl orbits of these.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    pub highest: Vec<i64>,
    pub dominant: Vec<(Vec<i64>, i64)>,
}

impl WeightSystem {
    /// Iterates over every weight of the module with its multiplicity.
    pub fn for_each_weight(&self, rs: &RootSystemData, mut f: impl FnMut(&[i64], i64)) {
        for (dom, mult) in &self.dominant {
            for w in weyl_orbit(rs, dom) {
                f(&w, *mult);
            }
        }
    }

    /// Total dimension, counting orbit sizes.
    pub fn dimension(&self, rs: &RootSystemData) -> BigInt {
        let mut total = BigInt::from(0);
        for (dom, mult) in &self.dominant {
            total += BigInt::from(weyl_orbit(rs, dom).len() as i64) * BigInt::from(*mult);
        }
        total
    }
}

/// All dominant weights `lambda <= mu` (difference in the positive root
/// cone), together with the height of the difference.
fn dominant_weights_below(rs: &RootSystemData, mu: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let r = rs.rank();
    // lambda = mu - A^T c over nonnegative integer vectors c; since the
    // inverse Cartan matrix is entrywise positive, c is bounded by A^{-T} mu.
    let bounds: Vec<i64> = {
        // solve A^T c = mu for the rational corner, rounding down
        let mut aug: Vec<Vec<num_rational::Rational64>> = (0..r)
            .map(|i| {
                (0..=r)
                    .map(|j| {
                        if j < r {
                            num_rational::Rational64::from_integer(rs.cartan[j][i])
                        } else {
                            num_rational::Rational64::from_integer(mu[i])
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..r {
            let piv = (col..r).find(|&row| aug[row][col].numer() != &0).unwrap();
            aug.swap(col, piv);
            let p = aug[col][col];
            for j in 0..=r {
                aug[col][j] /= p;
            }
            for row in 0..r {
                if row != col && aug[row][col].numer() != &0 {
                    let f = aug[row][col];
                    for j in 0..=r {
                        let sub = f * aug[col][j];
                        aug[row][j] -= sub;
                    }
                }
            }
        }
        (0..r).map(|i| aug[i][r].floor().numer() / aug[i][r].floor().denom()).collect()
    };

    let mut out = Vec::new();
    let mut c = vec![0i64; r];
    loop {
        // lambda_i = mu_i - sum_j c_j A[j][i]
        let lambda: Vec<i64> = (0..r)
            .map(|i| mu[i] - (0..r).map(|j| c[j] * rs.cartan[j][i]).sum::<i64>())
            .collect();
        if lambda.iter().all(|&x| x >= 0) {
            out.push((lambda, c.iter().sum()));
        }
        // odometer over the box
        let mut pos = 0;
        loop {
            if pos == r {
                return out;
            }
            c[pos] += 1;
            if c[pos] <= bounds[pos].max(0) {
                break;
            }
            c[pos] = 0;
            pos += 1;
        }
    }
}

/// Weight multiplicities of the irreducible module `V_mu`.
pub fn weight_multiplicities(
    rs: &RootSystemData,
    mu: &Weight,
) -> Result<WeightSystem, LieError> {
    let mu = mu
        .int_coords()
        .filter(|c| c.iter().all(|&x| x >= 0))
        .ok_or_else(|| {
            LieError::Argument("weight_multiplicities needs a dominant integral weight".into())
        })?;
    Ok(weight_system(rs, &mu))
}

/// Internal entry point on raw coordinates.
pub fn weight_system(rs: &RootSystemData, mu: &[i64]) -> WeightSystem {
    let r = rs.rank();
    let mut below = dominant_weights_below(rs, mu);
    below.sort_by_key(|(_, h)| *h);

    let rho = vec![1i64; r];
    let shift = |x: &[i64]| -> Vec<i64> { x.iter().zip(&rho).map(|(&a, &b)| a + b).collect() };
    let quad = |x: &[i64]| -> i64 { rs.pair_scaled(x, x) };
    let mu_quad = quad(&shift(mu));

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut order: Vec<Vec<i64>> = Vec::new();
    for (lambda, height) in below {
        if height == 0 {
            mult.insert(lambda.clone(), 1);
            order.push(lambda);
            continue;
        }
        // 2 sum_{alpha>0} sum_{k>=1} m(lambda+k alpha) <lambda+k alpha, alpha>
        // = (|mu+rho|^2 - |lambda+rho|^2) m(lambda)
        let mut num: i128 = 0;
        for alpha in &rs.positive_roots {
            let mut k = 1i64;
            loop {
                let nu: Vec<i64> = (0..r)
                    .map(|i| lambda[i] + k * alpha.fund_coords[i])
                    .collect();
                let dom = dominant_representative(rs, &nu);
                match mult.get(&dom) {
                    Some(&m) => {
                        let pairing = rs.pair_with_root(&nu, alpha);
                        num += (m as i128) * (pairing as i128);
                    }
                    None => break,
                }
                k += 1;
            }
        }
        let denom = (mu_quad - quad(&shift(&lambda))) as i128;
        debug_assert!(denom > 0);
        let scaled = 2 * (rs.d as i128) * num;
        debug_assert_eq!(scaled % denom, 0, "Freudenthal division must be exact");
        let m = (scaled / denom) as i64;
        debug_assert!(m > 0);
        mult.insert(lambda.clone(), m);
        order.push(lambda);
    }

    WeightSystem {
        highest: mu.to_vec(),
        dominant: order
            .into_iter()
            .map(|l| {
                let m = mult[&l];
                (l, m)
            })
            .collect(),
    }
}

/// Dimension of `V_mu` by the Weyl dimension formula.
pub fn weyl_dimension(rs: &RootSystemData, mu: &[i64]) -> BigInt {
    let rho = vec![1i64; rs.rank()];
    let shifted: Vec<i64> = mu.iter().zip(&rho).map(|(&a, &b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in &rs.positive_roots {
        num *= BigInt::from(rs.pair_with_root(&shifted, alpha));
        den *= BigInt::from(rs.pair_with_root(&rho, alpha));
    }
    debug_assert_eq!(&num % &den, BigInt::from(0));
    num / den
}
