//! Rank counting for the level-truncated categories via partition
//! generating functions.
//!
//! The number of labels at level `l` equals the number of partitions of
//! all `n <= l - l_0 + l_m` into parts from a fixed multiset that depends
//! only on the Lie type and the divisibility of `l` by the squared-length
//! ratio `m`. The multisets and minimal levels are stored as literal data
//! and re-derived from root systems in tests.

use lie_core::{LieError, LieFamily, LieType};

pub mod partitions;
pub use partitions::{partition_count, partition_count_upto};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RankError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("coefficient index {index} violates the mod-{m} divisibility filter for {ty}")]
    Filter { ty: String, index: i64, m: i64 },
}

/// One row of the rank table: the part multiset, the minimal
/// non-degenerate level, and the divisibility marker (`l_m = 0` iff `m | l`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSpec {
    pub lie_type: LieType,
    pub parts: Vec<i64>,
    pub ell0: i64,
    pub ell_m: i64,
}

fn length_ratio(f: LieFamily) -> i64 {
    match f {
        LieFamily::A | LieFamily::D | LieFamily::E => 1,
        LieFamily::B | LieFamily::C | LieFamily::F => 2,
        LieFamily::G => 3,
    }
}

/// The stored table row for `(t, l)`, selected by divisibility of `l`.
///
/// Errors when `l` is below the minimal non-degenerate level of the row.
pub fn rank_spec_for(t: LieType, ell: i64) -> Result<RankSpec, RankError> {
    let r = t.rank as i64;
    let m = length_ratio(t.family);
    let ell_m = if ell % m == 0 { 0 } else { 1 };
    let (parts, ell0): (Vec<i64>, i64) = match (t.family, ell_m) {
        (LieFamily::A, _) => (vec![1; t.rank], r + 1),
        (LieFamily::B, 1) => {
            let mut p = vec![2; t.rank];
            p[0] = 1;
            (p, 2 * r + 1)
        }
        (LieFamily::B, 0) => {
            let mut p = vec![4; t.rank];
            p[0] = 2;
            p[1] = 2;
            (p, 4 * r - 2)
        }
        (LieFamily::C, 1) => {
            let mut p = vec![2; t.rank];
            p[0] = 1;
            (p, 2 * r + 1)
        }
        (LieFamily::C, 0) => (vec![2; t.rank], 2 * r + 2),
        (LieFamily::D, _) => {
            let mut p = vec![2; t.rank];
            p[0] = 1;
            p[1] = 1;
            p[2] = 1;
            (p, 2 * r - 2)
        }
        (LieFamily::E, _) => match t.rank {
            6 => (vec![1, 1, 2, 2, 2, 3], 12),
            7 => (vec![1, 2, 2, 2, 3, 3, 4], 18),
            8 => (vec![2, 2, 3, 3, 4, 4, 5, 6], 30),
            _ => unreachable!(),
        },
        (LieFamily::F, 0) => (vec![2, 4, 4, 6], 18),
        (LieFamily::F, 1) => (vec![2, 2, 3, 4], 13),
        (LieFamily::G, 0) => (vec![3, 6], 12),
        (LieFamily::G, 1) => (vec![2, 3], 7),
        _ => unreachable!(),
    };
    if ell < ell0 {
        return Err(RankError::Lie(LieError::Level {
            ty: t.to_string(),
            level: ell,
            min: ell0,
        }));
    }
    Ok(RankSpec {
        lie_type: t,
        parts,
        ell0,
        ell_m,
    })
}

/// The rank of the category at level `l`: the coefficient of
/// `x^{l - l_0 + l_m}` in `1/(1-x) * prod_k 1/(1-x^k)` over the row's
/// multiset, i.e. the number of partitions of all `n` up to that index.
pub fn rank_by_gf(t: LieType, ell: i64) -> Result<u128, RankError> {
    let spec = rank_spec_for(t, ell)?;
    let index = ell - spec.ell0 + spec.ell_m;
    let m = length_ratio(t.family);
    // Only coefficients of powers divisible (resp. indivisible) by m count
    // levels divisible (resp. indivisible) by m.
    let index_class_ok = if spec.ell_m == 0 {
        index % m == 0
    } else {
        index % m != 0
    };
    if !index_class_ok {
        return Err(RankError::Filter {
            ty: t.to_string(),
            index,
            m,
        });
    }
    Ok(partition_count_upto(&spec.parts, index as u64))
}
