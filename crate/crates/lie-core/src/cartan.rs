//! Cartan matrices and classical per-type constants (Bourbaki numbering).

use crate::types::{LieFamily, LieType};

/// Cartan matrix `A[i][j] = <alpha_i, alpha_j^v>`.
pub fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let r = t.rank;
    let mut a = vec![vec![0i64; r]; r];
    for i in 0..r {
        a[i][i] = 2;
    }
    let mut chain = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        LieFamily::A => {
            for i in 0..r - 1 {
                chain(i, i + 1);
            }
        }
        LieFamily::B => {
            // alpha_r short, the rest long
            for i in 0..r - 1 {
                chain(i, i + 1);
            }
            a[r - 2][r - 1] = -2;
        }
        LieFamily::C => {
            // alpha_r long, the rest short
            for i in 0..r - 1 {
                chain(i, i + 1);
            }
            a[r - 1][r - 2] = -2;
        }
        LieFamily::D => {
            for i in 0..r - 2 {
                chain(i, i + 1);
            }
            chain(r - 3, r - 1);
        }
        LieFamily::E => {
            // Bourbaki: node 2 hangs off node 4; chain 1-3-4-5-6(-7)(-8)
            chain(0, 2);
            chain(2, 3);
            chain(1, 3);
            for i in 3..r - 1 {
                chain(i, i + 1);
            }
        }
        LieFamily::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            chain(0, 1);
            chain(1, 2);
            chain(2, 3);
            a[1][2] = -2;
        }
        LieFamily::G => {
            // alpha_1 short, alpha_2 long
            chain(0, 1);
            a[1][0] = -3;
        }
    }
    a
}

/// Half squared lengths `d_i = <alpha_i, alpha_i>/2` of the simple roots,
/// in the normalization where short roots have squared length 2.
pub fn root_half_lengths(t: LieType) -> Vec<i64> {
    let r = t.rank;
    match t.family {
        LieFamily::A | LieFamily::D | LieFamily::E => vec![1; r],
        LieFamily::B => {
            let mut d = vec![2; r];
            d[r - 1] = 1;
            d
        }
        LieFamily::C => {
            let mut d = vec![1; r];
            d[r - 1] = 2;
            d
        }
        LieFamily::F => vec![2, 2, 1, 1],
        LieFamily::G => vec![1, 3],
    }
}

/// Ratio of squared lengths of a long root to a short root.
pub fn length_ratio(t: LieType) -> i64 {
    match t.family {
        LieFamily::A | LieFamily::D | LieFamily::E => 1,
        LieFamily::B | LieFamily::C | LieFamily::F => 2,
        LieFamily::G => 3,
    }
}

/// Order of the Weyl group, from the classical formulas.
pub fn weyl_order(t: LieType) -> u128 {
    fn fact(n: u128) -> u128 {
        (1..=n).product()
    }
    let r = t.rank as u128;
    match t.family {
        LieFamily::A => fact(r + 1),
        LieFamily::B | LieFamily::C => (1u128 << r) * fact(r),
        LieFamily::D => (1u128 << (r - 1)) * fact(r),
        LieFamily::E => match t.rank {
            6 => 51_840,
            7 => 2_903_040,
            8 => 696_729_600,
            _ => unreachable!(),
        },
        LieFamily::F => 1_152,
        LieFamily::G => 12,
    }
}

/// Number of positive roots, from the classical counts.
pub fn positive_root_count(t: LieType) -> usize {
    let r = t.rank;
    match t.family {
        LieFamily::A => r * (r + 1) / 2,
        LieFamily::B | LieFamily::C => r * r,
        LieFamily::D => r * (r - 1),
        LieFamily::E => match r {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!(),
        },
        LieFamily::F => 24,
        LieFamily::G => 6,
    }
}
