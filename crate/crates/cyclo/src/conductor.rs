//! Per-conductor data: the cyclotomic polynomial and reduction rows for
//! the power basis `1, zeta, ..., zeta^{phi(N)-1}`, cached globally.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Euler's totient by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// Reduction data for one conductor.
#[derive(Debug)]
pub struct ConductorTable {
    pub n: u64,
    pub phi: usize,
    /// Coefficients of the cyclotomic polynomial `Phi_n` (degree phi, monic).
    pub cyclotomic: Vec<BigInt>,
    /// `rows[e]` = coefficients of `x^e mod Phi_n` for `e < max(n, 2 phi - 1)`.
    pub rows: Vec<Vec<i64>>,
}

static TABLES: Lazy<RwLock<HashMap<u64, Arc<ConductorTable>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

pub fn conductor_table(n: u64) -> Arc<ConductorTable> {
    assert!(n >= 1 && n <= 1 << 20, "conductor out of range: {n}");
    if let Some(t) = TABLES.read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let t = Arc::new(build_table(n));
    TABLES
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&t))
        .clone()
}

fn build_table(n: u64) -> ConductorTable {
    let cyclotomic = cyclotomic_polynomial(n);
    let phi = cyclotomic.len() - 1;
    let rows_len = std::cmp::max(n as usize, 2 * phi.max(1) - 1);
    // x^phi mod Phi_n = -(lower part of Phi_n)
    let top: Vec<BigInt> = cyclotomic[..phi].iter().map(|c| -c).collect();
    let mut rows_big: Vec<Vec<BigInt>> = Vec::with_capacity(rows_len);
    for e in 0..rows_len {
        if e < phi {
            let mut row = vec![BigInt::zero(); phi];
            row[e] = BigInt::one();
            rows_big.push(row);
        } else {
            let prev = &rows_big[e - 1];
            let carry = prev[phi - 1].clone();
            let mut row = vec![BigInt::zero(); phi];
            for j in 1..phi {
                row[j] = prev[j - 1].clone();
            }
            if !carry.is_zero() {
                for j in 0..phi {
                    row[j] += &carry * &top[j];
                }
            }
            rows_big.push(row);
        }
    }
    let rows = rows_big
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| c.to_i64().expect("reduction row coefficient exceeds i64"))
                .collect()
        })
        .collect();
    ConductorTable {
        n,
        phi,
        cyclotomic,
        rows,
    }
}

/// `Phi_n` by exact division of `x^n - 1` by the `Phi_d` for proper divisors.
fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut memo: HashMap<u64, Vec<BigInt>> = HashMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u64, memo: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![-BigInt::one(), BigInt::one()]
    } else {
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = -BigInt::one();
        num[n as usize] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                let phi_d = cyclotomic_memo(d, memo);
                num = poly_div_exact(&num, &phi_d);
            }
        }
        num
    };
    memo.insert(n, result.clone());
    result
}

/// Exact division of integer polynomials (the divisor is monic).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..=dd {
            rem[k + j] -= &c * &den[j];
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), coeffs(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), coeffs(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), coeffs(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), coeffs(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), coeffs(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), coeffs(&[1, 0, -1, 0, 1]));
        // first index with a coefficient of magnitude 2
        let p105 = cyclotomic_polynomial(105);
        assert_eq!(p105[7], BigInt::from(-2));
    }

    #[test]
    fn phi_values() {
        for (n, p) in [(1, 1), (2, 1), (12, 4), (18, 6), (20, 8), (36, 12), (360, 96)] {
            assert_eq!(euler_phi(n), p);
            assert_eq!(conductor_table(n).phi as u64, p);
        }
    }

    #[test]
    fn rows_satisfy_the_recurrence() {
        // x * row[e] reduced equals row[e+1]
        let t = conductor_table(36);
        for e in 0..t.rows.len() - 1 {
            let mut shifted = vec![0i128; t.phi + 1];
            for (j, &c) in t.rows[e].iter().enumerate() {
                shifted[j + 1] = c as i128;
            }
            let carry = shifted[t.phi];
            let mut reduced: Vec<i128> = shifted[..t.phi].to_vec();
            if carry != 0 {
                for j in 0..t.phi {
                    reduced[j] -= carry * (t.cyclotomic[j].to_i64().unwrap() as i128);
                }
            }
            let expect: Vec<i128> = t.rows[e + 1].iter().map(|&c| c as i128).collect();
            assert_eq!(reduced, expect, "row {e}");
        }
    }
}
