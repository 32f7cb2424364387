//! Exact elements of cyclotomic fields on the reduced power basis.

use crate::conductor::{conductor_table, ConductorTable};
use crate::CycloError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

/// An exact element of `Q(zeta_N)`, stored as a rational vector on the
/// power basis `zeta_N^0 .. zeta_N^{phi(N)-1}`, reduced modulo the `N`-th
/// cyclotomic polynomial. Zero iff all coefficients are zero; no floating
/// point anywhere in the representation.
#[derive(Debug, Clone)]
pub struct CycloNumber {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    pub fn zero(conductor: u64) -> Self {
        let phi = conductor_table(conductor).phi;
        CycloNumber {
            conductor,
            coeffs: vec![BigRational::zero(); phi],
        }
    }

    pub fn one(conductor: u64) -> Self {
        let mut x = CycloNumber::zero(conductor);
        x.coeffs[0] = BigRational::one();
        x
    }

    pub fn from_rational(conductor: u64, value: BigRational) -> Self {
        let mut x = CycloNumber::zero(conductor);
        x.coeffs[0] = value;
        x
    }

    pub fn from_integer(conductor: u64, value: i64) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(BigInt::from(value)))
    }

    /// `zeta_N^e` (exponent taken modulo `N`).
    pub fn root_of_unity(conductor: u64, e: i64) -> Self {
        let t = conductor_table(conductor);
        let e = e.rem_euclid(conductor as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); t.phi];
        let one = BigRational::one();
        add_row_scaled(&t, &mut coeffs, e, &one);
        CycloNumber {
            conductor,
            coeffs,
        }
    }

    pub fn from_coeffs(conductor: u64, coeffs: Vec<BigRational>) -> Self {
        let t = conductor_table(conductor);
        assert_eq!(coeffs.len(), t.phi, "coefficient vector must have length phi(N)");
        CycloNumber { conductor, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Integer coefficient vector, when all coefficients are integers
    /// fitting in `i64`.
    pub fn int_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn from_int_coeffs(conductor: u64, coeffs: &[i64]) -> Self {
        let t = conductor_table(conductor);
        assert_eq!(coeffs.len(), t.phi);
        CycloNumber {
            conductor,
            coeffs: coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    /// Re-expresses the element at a conductor that is a multiple of the
    /// current one.
    pub fn promote(&self, conductor: u64) -> Self {
        assert_eq!(
            conductor % self.conductor,
            0,
            "can only promote to a multiple conductor"
        );
        if conductor == self.conductor {
            return self.clone();
        }
        let t = conductor_table(conductor);
        let step = (conductor / self.conductor) as usize;
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                add_row_scaled(&t, &mut coeffs, k * step, c);
            }
        }
        CycloNumber { conductor, coeffs }
    }

    fn promoted_pair(&self, other: &Self) -> (Self, Self, u64) {
        let n = self.conductor.lcm(&other.conductor);
        (self.promote(n), other.promote(n), n)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b, _) = self.promoted_pair(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b, _) = self.promoted_pair(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, n) = self.promoted_pair(other);
        let t = conductor_table(n);
        let phi = t.phi;
        let mut conv = vec![BigRational::zero(); 2 * phi.max(1) - 1];
        for (i, ci) in a.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in b.coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                conv[i + j] += ci * cj;
            }
        }
        let mut coeffs: Vec<BigRational> = conv[..phi].to_vec();
        for (e, c) in conv.iter().enumerate().skip(phi) {
            if !c.is_zero() {
                add_row_scaled(&t, &mut coeffs, e, c);
            }
        }
        CycloNumber {
            conductor: n,
            coeffs,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// The Galois automorphism `zeta_N -> zeta_N^t` for `gcd(t, N) = 1`.
    pub fn galois_apply(&self, t: i64) -> Result<Self, CycloError> {
        let n = self.conductor;
        let tm = t.rem_euclid(n as i64) as u64;
        if tm.gcd(&n) != 1 {
            return Err(CycloError::NotCoprime { t, n });
        }
        let table = conductor_table(n);
        let mut coeffs = vec![BigRational::zero(); table.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (k as u64 * tm % n) as usize;
                add_row_scaled(&table, &mut coeffs, e, c);
            }
        }
        Ok(CycloNumber {
            conductor: n,
            coeffs,
        })
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois_apply(self.conductor as i64 - 1)
            .expect("N-1 is always coprime to N")
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial.
    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let t = conductor_table(self.conductor);
        let phi_poly: Vec<BigRational> = t
            .cyclotomic
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let f = trim(self.coeffs.clone());
        let (g, _, v) = poly_ext_gcd(&phi_poly, &f);
        // g is a nonzero constant because Phi_N is irreducible over Q
        debug_assert_eq!(poly_deg(&g), Some(0));
        let ginv = g[0].recip();
        let mut inv_coeffs = vec![BigRational::zero(); t.phi];
        for (e, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let scaled = c * &ginv;
                add_row_scaled(&t, &mut inv_coeffs, e, &scaled);
            }
        }
        Ok(CycloNumber {
            conductor: self.conductor,
            coeffs: inv_coeffs,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, CycloError> {
        let (a, b, _) = self.promoted_pair(other);
        Ok(a.mul(&b.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CycloNumber::one(self.conductor);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact equality across conductors.
    pub fn eq_exact(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// Readable polynomial form in `zeta_N`.
    pub fn to_display_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = if k == 0 {
                format!("{mag}")
            } else {
                let z = if k == 1 {
                    format!("z{}", self.conductor)
                } else {
                    format!("z{}^{}", self.conductor, k)
                };
                if mag.is_one() {
                    z
                } else {
                    format!("{mag}*{z}")
                }
            };
            parts.push((sign, body));
        }
        let mut out = String::new();
        for (i, (sign, body)) in parts.iter().enumerate() {
            if i == 0 {
                if *sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if *sign == "-" { " - " } else { " + " });
            }
            out.push_str(body);
        }
        out
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.eq_exact(other)
    }
}
impl Eq for CycloNumber {}

/// `coeffs += c * (x^e mod Phi_N)`.
fn add_row_scaled(t: &Arc<ConductorTable>, coeffs: &mut [BigRational], e: usize, c: &BigRational) {
    let row = &t.rows[e];
    for (x, &r) in coeffs.iter_mut().zip(row) {
        if r != 0 {
            *x += c * BigRational::from_integer(BigInt::from(r));
        }
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn poly_deg(p: &[BigRational]) -> Option<usize> {
    if p.len() == 1 && p[0].is_zero() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Extended gcd: returns `(g, u, v)` with `u a + v b = g`.
fn poly_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let zero = vec![BigRational::zero()];
    let one = vec![BigRational::one()];
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero, one);
    while poly_deg(&r1).is_some() {
        let (q, rem) = poly_divmod(&r0, &r1);
        r0 = r1;
        r1 = rem;
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        s0 = s1;
        s1 = s2;
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        t0 = t1;
        t1 = t2;
    }
    (r0, s0, t0)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let mut r = a.to_vec();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(db).max(1)];
    let lead = b[db].clone();
    while let Some(dr) = poly_deg(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &lead;
        q[dr - db] = f.clone();
        for j in 0..=db {
            let sub = &f * &b[j];
            r[dr - db + j] -= sub;
        }
        r = trim(r);
    }
    (trim(q), trim(r))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64, e: i64) -> CycloNumber {
        CycloNumber::root_of_unity(n, e)
    }

    #[test]
    fn roots_of_unity_multiply_by_exponent_addition() {
        let a = zeta(20, 3);
        let b = zeta(20, 9);
        assert_eq!(a.mul(&b), zeta(20, 12));
        assert_eq!(zeta(20, 19).mul(&zeta(20, 1)), CycloNumber::one(20));
    }

    #[test]
    fn promotion_is_transparent() {
        // zeta_4 = i at conductor 4 equals zeta_20^5 at conductor 20
        let i4 = zeta(4, 1);
        let i20 = zeta(20, 5);
        assert_eq!(i4, i20);
        let sum = i4.add(&zeta(20, 1));
        assert_eq!(sum.conductor(), 20);
    }

    #[test]
    fn conjugation_inverts_roots() {
        let x = zeta(36, 7);
        assert_eq!(x.conj(), zeta(36, -7));
        let y = zeta(36, 5).add(&CycloNumber::from_integer(36, 2));
        assert_eq!(y.conj().conj(), y);
    }

    #[test]
    fn inverse_of_nonzero_elements() {
        let x = zeta(12, 1).add(&CycloNumber::from_integer(12, 3));
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
        assert!(CycloNumber::zero(12).inv().is_err());
    }

    #[test]
    fn galois_rejects_non_coprime() {
        let x = zeta(12, 1);
        assert!(x.galois_apply(3).is_err());
        assert!(x.galois_apply(5).is_ok());
    }

    #[test]
    fn galois_identity_and_composition() {
        let x = zeta(18, 1).add(&zeta(18, 5)).add(&CycloNumber::from_integer(18, 7));
        assert_eq!(x.galois_apply(1).unwrap(), x);
        let a = x.galois_apply(5).unwrap().galois_apply(7).unwrap();
        let b = x.galois_apply(35).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn primitive_root_sums_to_mu() {
        // sum over primitive N-th roots = Mobius(N)
        for (n, mu) in [(5u64, -1i64), (6, 1), (12, 0), (9, 0), (30, -1)] {
            let mut acc = CycloNumber::zero(n);
            for e in 0..n {
                if e.gcd(&n) == 1 {
                    acc = acc.add(&zeta(n, e as i64));
                }
            }
            assert_eq!(acc, CycloNumber::from_integer(n, mu), "N = {n}");
        }
    }
}
