//! Exact characteristic polynomials of integer matrices and the
//! distinct-eigenvalue test for fusion matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Characteristic polynomial of an integer matrix by the
/// Faddeev-LeVerrier recursion; coefficients are exact integers,
/// returned lowest degree first with leading coefficient 1.
pub fn char_poly(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let n = matrix.len();
    let a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n]; // M_0 = 0
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut c = BigInt::one(); // c_n = 1
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut am = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for t in 0..n {
                    if !a[i][t].is_zero() && !m[t][j].is_zero() {
                        acc += &a[i][t] * &m[t][j];
                    }
                }
                am[i][j] = acc;
            }
        }
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c;
        }
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for t in 0..n {
                if !a[i][t].is_zero() && !am[t][i].is_zero() {
                    tr += &a[i][t] * &am[t][i];
                }
            }
        }
        let (q, r) = num_integer::Integer::div_rem(&(-tr), &BigInt::from(k as i64));
        debug_assert!(r.is_zero());
        coeffs[n - k] = q.clone();
        c = q;
        m = am;
    }
    coeffs
}

/// True iff the polynomial has no repeated complex roots:
/// `gcd(p, p')` is constant.
pub fn is_squarefree(p: &[BigInt]) -> bool {
    let pr: Vec<BigRational> = p.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let dp: Vec<BigRational> = (1..p.len())
        .map(|k| BigRational::from_integer(&p[k] * BigInt::from(k as i64)))
        .collect();
    poly_gcd_degree(&pr, &dp) == 0
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn poly_gcd_degree(a: &[BigRational], b: &[BigRational]) -> usize {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let rem = poly_rem(&r0, &r1);
        r0 = r1;
        r1 = rem;
    }
    r0.len() - 1
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    loop {
        r = trim(r);
        let dr = r.len() - 1;
        if (r.len() == 1 && r[0].is_zero()) || dr < db {
            return r;
        }
        let f = &r[dr] / &lead;
        for j in 0..=db {
            let sub = &f * &b[j];
            r[dr - db + j] -= sub;
        }
    }
}

/// True iff the `i`-th fusion matrix has all-distinct eigenvalues, so it
/// alone determines every other fusion matrix in the commuting family.
pub fn fusion_determined_by_one_matrix(tensor: &crate::fusion::FusionTensor, i: usize) -> bool {
    let m = tensor.matrix(i);
    is_squarefree(&char_poly(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_small_matrices() {
        // [[0,1],[1,1]]: x^2 - x - 1
        let p = char_poly(&[vec![0, 1], vec![1, 1]]);
        assert_eq!(p, vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(1)]);
        assert!(is_squarefree(&p));
        // identity 3x3: (x-1)^3, not squarefree
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let p = char_poly(&id);
        assert_eq!(
            p,
            vec![
                BigInt::from(-1),
                BigInt::from(3),
                BigInt::from(-3),
                BigInt::from(1)
            ]
        );
        assert!(!is_squarefree(&p));
    }

    #[test]
    fn nilpotent_char_poly() {
        let p = char_poly(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(p, vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)]);
        assert!(!is_squarefree(&p));
    }
}
