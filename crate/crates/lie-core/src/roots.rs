//! Root-system data: positive roots, fundamental-weight Gram matrix,
//! dominant (highest / highest short) roots and derived constants.

use crate::cartan::{cartan_matrix, length_ratio, positive_root_count, root_half_lengths};
use crate::types::{LieError, LieType, Rat, Weight};
use num_integer::Integer;
use num_traits::Zero;

/// A positive root, carried in both the simple-root and the
/// fundamental-weight bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates over the simple roots (nonnegative integers).
    pub simple_coords: Vec<i64>,
    /// Coordinates over the fundamental weights.
    pub fund_coords: Vec<i64>,
    /// Half squared length `<beta,beta>/2` (1 for short, m for long).
    pub half_length: i64,
}

/// Immutable root-system data for one simple Lie type.
///
/// The bilinear form is normalized so that short roots have squared
/// length 2; all inner products of weights are then rational with
/// denominator dividing the Galois integer `d`.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub lie_type: LieType,
    /// Cartan matrix `A[i][j] = <alpha_i, alpha_j^v>`.
    pub cartan: Vec<Vec<i64>>,
    /// `d_i = <alpha_i,alpha_i>/2` per simple root.
    pub simple_half_lengths: Vec<i64>,
    /// All positive roots, by increasing height.
    pub positive_roots: Vec<Root>,
    /// Long-to-short squared length ratio (1 for ADE, 2 for BCF, 3 for G).
    pub m: i64,
    /// Minimal positive integer with `d <lambda,mu>` integral for all weights.
    pub d: i64,
    /// Gram matrix of the fundamental weights, scaled by `d` (integral).
    pub gram_scaled: Vec<Vec<i64>>,
    /// Highest root.
    pub theta_long: Root,
    /// Highest short root (equals the highest root when m = 1).
    pub theta_short: Root,
    /// Dual Coxeter number.
    pub dual_coxeter: i64,
}

/// Builds the full root system for a valid Lie type.
pub fn build_root_system(t: LieType) -> RootSystemData {
    let r = t.rank;
    let cartan = cartan_matrix(t);
    let half = root_half_lengths(t);
    let m = length_ratio(t);

    // Symmetry of the symmetrized Cartan matrix pins the length assignment.
    for i in 0..r {
        for j in 0..r {
            debug_assert_eq!(half[j] * cartan[i][j], half[i] * cartan[j][i]);
        }
    }

    let positive_roots = close_positive_roots(&cartan, &half);
    assert_eq!(positive_roots.len(), positive_root_count(t));

    let gram_rat = fundamental_gram(&cartan, &half);
    let d = gram_denominator(&gram_rat);
    let gram_scaled: Vec<Vec<i64>> = gram_rat
        .iter()
        .map(|row| {
            row.iter()
                .map(|g| {
                    let s = g * Rat::from_integer(d);
                    debug_assert!(s.is_integer());
                    *s.numer()
                })
                .collect()
        })
        .collect();

    // The dominant roots: one long and one short (coinciding when m = 1).
    let mut theta_long = None;
    let mut theta_short = None;
    for root in &positive_roots {
        if root.fund_coords.iter().all(|&c| c >= 0) {
            if root.half_length == m {
                theta_long = Some(root.clone());
            }
            if root.half_length == 1 {
                theta_short = Some(root.clone());
            }
        }
    }
    let theta_long = theta_long.expect("highest root");
    let theta_short = if m == 1 {
        theta_long.clone()
    } else {
        theta_short.expect("highest short root")
    };

    // h^v = <rho, theta_long^v> + 1 and <rho, alpha_i^v> = 1 give the
    // usual mark formula over the simple coordinates of the highest root.
    let dual_coxeter: i64 = 1 + theta_long
        .simple_coords
        .iter()
        .zip(&half)
        .map(|(&c, &di)| c * di)
        .sum::<i64>()
        / m;

    RootSystemData {
        lie_type: t,
        cartan,
        simple_half_lengths: half,
        positive_roots,
        m,
        d,
        gram_scaled,
        theta_long,
        theta_short,
        dual_coxeter,
    }
}

/// Closure of the simple roots under root strings, by height.
fn close_positive_roots(cartan: &[Vec<i64>], half: &[i64]) -> Vec<Root> {
    let r = cartan.len();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for i in 0..r {
        let mut c = vec![0i64; r];
        c[i] = 1;
        seen.insert(c.clone());
        roots.push(c);
    }
    let mut cursor = 0;
    while cursor < roots.len() {
        let beta = roots[cursor].clone();
        cursor += 1;
        for i in 0..r {
            let mut gamma = beta.clone();
            gamma[i] += 1;
            if seen.contains(&gamma) {
                continue;
            }
            // Depth of the alpha_i-string below beta; the zero vector and
            // anything with a negative coordinate are never in `seen`.
            let mut p = 0i64;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if down[i] < 0 || !seen.contains(&down) {
                    break;
                }
                p += 1;
            }
            let pairing: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
            if p - pairing > 0 {
                seen.insert(gamma.clone());
                roots.push(gamma);
            }
        }
    }
    roots.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    roots
        .into_iter()
        .map(|simple_coords| {
            let fund_coords = simple_to_fund(cartan, &simple_coords);
            let half_length = root_half_length(half, &simple_coords, &fund_coords);
            Root {
                simple_coords,
                fund_coords,
                half_length,
            }
        })
        .collect()
}

/// `beta = sum_j c_j alpha_j` has fundamental coordinates `A^T c`.
fn simple_to_fund(cartan: &[Vec<i64>], simple: &[i64]) -> Vec<i64> {
    let r = cartan.len();
    (0..r)
        .map(|i| (0..r).map(|j| simple[j] * cartan[j][i]).sum())
        .collect()
}

/// `<beta,beta>/2 = (1/2) sum_j c_j d_j b_j` with `b` the fundamental coords.
fn root_half_length(half: &[i64], simple: &[i64], fund: &[i64]) -> i64 {
    let twice: i64 = simple
        .iter()
        .zip(half)
        .zip(fund)
        .map(|((&c, &d), &b)| c * d * b)
        .sum();
    debug_assert_eq!(twice % 2, 0);
    twice / 2
}

/// Gram matrix `G[i][j] = <lambda_i, lambda_j>` over the rationals.
fn fundamental_gram(cartan: &[Vec<i64>], half: &[i64]) -> Vec<Vec<Rat>> {
    let r = cartan.len();
    let mut aug: Vec<Vec<Rat>> = (0..r)
        .map(|i| {
            (0..2 * r)
                .map(|j| {
                    if j < r {
                        Rat::from_integer(cartan[i][j])
                    } else {
                        Rat::from_integer((j - r == i) as i64)
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r)
            .find(|&row| !aug[row][col].is_zero())
            .expect("Cartan matrix is invertible");
        aug.swap(col, pivot);
        let p = aug[col][col];
        for j in 0..2 * r {
            aug[col][j] /= p;
        }
        for row in 0..r {
            if row != col && !aug[row][col].is_zero() {
                let f = aug[row][col];
                for j in 0..2 * r {
                    let sub = f * aug[col][j];
                    aug[row][j] -= sub;
                }
            }
        }
    }
    // G[i][j] = d_i * (A^{-1})[j][i]
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| Rat::from_integer(half[i]) * aug[j][r + i])
                .collect()
        })
        .collect()
}

/// lcm of the denominators of the Gram entries; this is the Galois integer.
fn gram_denominator(gram: &[Vec<Rat>]) -> i64 {
    let mut d: i64 = 1;
    for row in gram {
        for g in row {
            d = d.lcm(g.denom());
        }
    }
    d
}

impl RootSystemData {
    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// Weyl vector `rho` (all fundamental coordinates 1).
    pub fn rho(&self) -> Weight {
        Weight::from_ints(&vec![1; self.rank()])
    }

    pub fn rho_ints(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    /// The normalized symmetric bilinear form on weights.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<Rat, LieError> {
        if a.rank() != self.rank() {
            return Err(LieError::RankMismatch {
                expected: self.rank(),
                got: a.rank(),
            });
        }
        if b.rank() != self.rank() {
            return Err(LieError::RankMismatch {
                expected: self.rank(),
                got: b.rank(),
            });
        }
        let mut acc = Rat::zero();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                acc += a.coords[i] * b.coords[j] * Rat::from_integer(self.gram_scaled[i][j]);
            }
        }
        Ok(acc / Rat::from_integer(self.d))
    }

    /// `d * <x, y>` for integral weights (fundamental coordinates).
    pub fn pair_scaled(&self, x: &[i64], y: &[i64]) -> i64 {
        let r = self.rank();
        let mut acc = 0i64;
        for i in 0..r {
            if x[i] == 0 {
                continue;
            }
            let mut row = 0i64;
            for j in 0..r {
                row += self.gram_scaled[i][j] * y[j];
            }
            acc += x[i] * row;
        }
        acc
    }

    /// `<x, beta>` for an integral weight and a root; always an integer.
    pub fn pair_with_root(&self, x: &[i64], beta: &Root) -> i64 {
        beta.simple_coords
            .iter()
            .zip(&self.simple_half_lengths)
            .zip(x)
            .map(|((&c, &d), &xj)| c * d * xj)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::LieFamily;

    fn rs(f: LieFamily, r: usize) -> RootSystemData {
        build_root_system(LieType::new(f, r).unwrap())
    }

    #[test]
    fn a1_smallest_case() {
        let s = rs(LieFamily::A, 1);
        assert_eq!(s.positive_roots.len(), 1);
        assert_eq!(s.positive_roots[0].half_length, 1); // <alpha,alpha> = 2
        assert_eq!(s.m, 1);
        assert_eq!(s.d, 2);
        assert_eq!(s.rho().coords, Weight::from_ints(&[1]).coords);
        // <lambda_1, lambda_1> = 1/2
        let l1 = Weight::from_ints(&[1]);
        assert_eq!(s.inner_product(&l1, &l1).unwrap(), Rat::new(1, 2));
    }

    #[test]
    fn b2_structure() {
        let s = rs(LieFamily::B, 2);
        assert_eq!(s.m, 2);
        assert_eq!(s.positive_roots.len(), 4);
        assert_ne!(s.theta_long.fund_coords, s.theta_short.fund_coords);
        assert_eq!(s.theta_long.fund_coords, vec![0, 2]);
        assert_eq!(s.theta_long.half_length, 2);
        assert_eq!(s.theta_short.fund_coords, vec![1, 0]);
        assert_eq!(s.theta_short.half_length, 1);
        assert_eq!(s.d, 1);
        assert_eq!(s.dual_coxeter, 3);

        // Frozen oracle: in the epsilon picture the form is twice the
        // Euclidean form, rho = (3/2, 1/2), theta_0 = (1,1), theta_1 = (1,0),
        // so <rho,theta_0> = 2(3/2 + 1/2) = 4 and <rho,theta_1> = 2(3/2) = 3.
        let rho = s.rho();
        let t0 = Weight::from_ints(&s.theta_long.fund_coords);
        let t1 = Weight::from_ints(&s.theta_short.fund_coords);
        assert_eq!(s.inner_product(&rho, &t0).unwrap(), Rat::from_integer(4));
        assert_eq!(s.inner_product(&rho, &t1).unwrap(), Rat::from_integer(3));
    }

    #[test]
    fn g2_structure() {
        let s = rs(LieFamily::G, 2);
        assert_eq!(s.m, 3);
        assert_eq!(s.d, 1);
        assert_eq!(s.positive_roots.len(), 6);
        assert_eq!(s.dual_coxeter, 4);
    }

    #[test]
    fn zero_weight_pairs_to_zero() {
        for (f, r) in [
            (LieFamily::A, 3),
            (LieFamily::B, 3),
            (LieFamily::C, 2),
            (LieFamily::D, 4),
            (LieFamily::F, 4),
            (LieFamily::G, 2),
        ] {
            let s = rs(f, r);
            let zero = Weight::zero(r);
            let rho = s.rho();
            assert_eq!(s.inner_product(&zero, &rho).unwrap(), Rat::zero());
        }
    }

    #[test]
    fn positive_root_counts_match_classical_values() {
        for (f, r, n) in [
            (LieFamily::A, 4, 10),
            (LieFamily::B, 4, 16),
            (LieFamily::C, 3, 9),
            (LieFamily::D, 4, 12),
            (LieFamily::E, 6, 36),
            (LieFamily::F, 4, 24),
        ] {
            assert_eq!(rs(f, r).positive_roots.len(), n);
        }
    }

    #[test]
    fn root_lengths_are_short_or_long() {
        for (f, r) in [
            (LieFamily::B, 3),
            (LieFamily::C, 3),
            (LieFamily::F, 4),
            (LieFamily::G, 2),
        ] {
            let s = rs(f, r);
            for root in &s.positive_roots {
                let w = Weight::from_ints(&root.fund_coords);
                let len = s.inner_product(&w, &w).unwrap();
                assert_eq!(len, Rat::from_integer(2 * root.half_length));
                assert!(root.half_length == 1 || root.half_length == s.m);
            }
            assert!(s.positive_roots.iter().any(|rt| rt.half_length == 1));
        }
    }

    #[test]
    fn galois_integer_matches_table_one() {
        // d = r+1 for A_r; 2 for B_r (r odd); 2/4 for D_r (r even/odd);
        // 3 for E6; 2 for E7; 1 otherwise.
        assert_eq!(rs(LieFamily::A, 3).d, 4);
        assert_eq!(rs(LieFamily::A, 5).d, 6);
        assert_eq!(rs(LieFamily::B, 3).d, 2);
        assert_eq!(rs(LieFamily::B, 4).d, 1);
        assert_eq!(rs(LieFamily::C, 4).d, 1);
        assert_eq!(rs(LieFamily::D, 4).d, 2);
        assert_eq!(rs(LieFamily::D, 5).d, 4);
        assert_eq!(rs(LieFamily::E, 6).d, 3);
        assert_eq!(rs(LieFamily::E, 7).d, 2);
        assert_eq!(rs(LieFamily::E, 8).d, 1);
        assert_eq!(rs(LieFamily::F, 4).d, 1);
        assert_eq!(rs(LieFamily::G, 2).d, 1);
    }

    #[test]
    fn simply_laced_thetas_coincide() {
        for (f, r) in [(LieFamily::A, 4), (LieFamily::D, 4), (LieFamily::E, 6)] {
            let s = rs(f, r);
            assert_eq!(s.theta_long.fund_coords, s.theta_short.fund_coords);
        }
    }
}
