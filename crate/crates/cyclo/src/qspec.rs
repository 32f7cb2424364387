//! The root-of-unity specialization `q = e^{z pi i / l}` and the quantum
//! integers built from it.

use crate::number::CycloNumber;
use crate::CycloError;
use num_integer::Integer;
use num_rational::Rational64;

/// Fixes `q = e^{z pi i / l}` with `gcd(z, l) = 1` (so `q^2` is a
/// primitive `l`-th root of unity) and `0 < z < 2l`. All values live at
/// conductor `N = 2 d l`, the smallest cyclotomic field containing
/// `q^{1/d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QSpec {
    pub ell: i64,
    pub z: i64,
    pub d: i64,
    pub conductor: u64,
}

impl QSpec {
    pub fn new(ell: i64, z: i64, d: i64) -> Result<Self, CycloError> {
        if ell < 1 || d < 1 {
            return Err(CycloError::InvalidSpec(format!(
                "level {ell} and Galois integer {d} must be positive"
            )));
        }
        if z <= 0 || z >= 2 * ell {
            return Err(CycloError::InvalidSpec(format!(
                "exponent z = {z} must satisfy 0 < z < 2l = {}",
                2 * ell
            )));
        }
        if z.gcd(&ell) != 1 {
            return Err(CycloError::InvalidSpec(format!(
                "gcd(z, l) = gcd({z}, {ell}) must be 1"
            )));
        }
        Ok(QSpec {
            ell,
            z,
            d,
            conductor: (2 * d * ell) as u64,
        })
    }

    /// All admissible `z` for a given level.
    pub fn admissible_z(ell: i64) -> Vec<i64> {
        (1..2 * ell).filter(|z| z.gcd(&ell) == 1).collect()
    }

    /// The exponent of `zeta_N` representing `q^e`, for rational `e` with
    /// denominator dividing `d`.
    pub fn zeta_exponent(&self, e: Rational64) -> Result<i64, CycloError> {
        if self.d % e.denom() != 0 {
            return Err(CycloError::Precision {
                denom: *e.denom(),
                d: self.d,
            });
        }
        let de = e.numer() * (self.d / e.denom());
        Ok((self.z as i128 * de as i128).rem_euclid(self.conductor as i128) as i64)
    }

    /// `q^e` as an exact root of unity.
    pub fn q_power(&self, e: Rational64) -> Result<CycloNumber, CycloError> {
        Ok(CycloNumber::root_of_unity(
            self.conductor,
            self.zeta_exponent(e)?,
        ))
    }

    /// `q` itself.
    pub fn q(&self) -> CycloNumber {
        self.q_power(Rational64::from_integer(1)).unwrap()
    }

    /// The quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`, computed
    /// as the balanced geometric sum `q^{n-1} + q^{n-3} + ... + q^{1-n}`.
    pub fn q_integer(&self, n: i64) -> CycloNumber {
        if n == 0 {
            return CycloNumber::zero(self.conductor);
        }
        let a = n.abs();
        let mut acc = CycloNumber::zero(self.conductor);
        let mut e = a - 1;
        while e >= 1 - a {
            acc = acc.add(&self.q_power(Rational64::from_integer(e)).unwrap());
            e -= 2;
        }
        if n < 0 {
            acc.neg()
        } else {
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(QSpec::new(5, 1, 2).is_ok());
        assert!(QSpec::new(5, 5, 2).is_err()); // gcd(5,5) != 1
        assert!(QSpec::new(5, 0, 2).is_err());
        assert!(QSpec::new(5, 10, 2).is_err());
        assert!(QSpec::new(9, 2, 1).is_ok()); // even z is fine when l is odd
        assert_eq!(QSpec::admissible_z(9).len(), 12);
        assert_eq!(QSpec::admissible_z(5), vec![1, 2, 3, 4, 6, 7, 8, 9]);
    }

    #[test]
    fn q_power_basics() {
        let spec = QSpec::new(5, 1, 2).unwrap();
        assert_eq!(spec.conductor, 20);
        assert!(spec.q_power(Rational64::from_integer(0)).unwrap().is_one());
        // q = e^{pi i/5} = zeta_20^2, so q^4 = e^{4 pi i/5} = zeta_20^8
        assert_eq!(
            spec.q_power(Rational64::from_integer(4)).unwrap(),
            CycloNumber::root_of_unity(20, 8)
        );
        // q^l = (-1)^z
        assert_eq!(
            spec.q_power(Rational64::from_integer(5)).unwrap(),
            CycloNumber::from_integer(20, -1)
        );
        let spec2 = QSpec::new(5, 2, 2).unwrap();
        assert_eq!(
            spec2.q_power(Rational64::from_integer(5)).unwrap(),
            CycloNumber::from_integer(20, 1)
        );
        // half-integer exponents land on odd powers of zeta_20
        assert_eq!(
            spec.q_power(Rational64::new(1, 2)).unwrap(),
            CycloNumber::root_of_unity(20, 1)
        );
        assert!(spec.q_power(Rational64::new(1, 3)).is_err());
    }

    #[test]
    fn q_power_is_multiplicative() {
        let spec = QSpec::new(7, 3, 3).unwrap();
        for a in -5i64..5 {
            for b in -5i64..5 {
                let ra = Rational64::new(a, 3);
                let rb = Rational64::new(b, 3);
                let lhs = spec.q_power(ra + rb).unwrap();
                let rhs = spec.q_power(ra).unwrap().mul(&spec.q_power(rb).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn quantum_integer_basics() {
        let spec = QSpec::new(5, 1, 2).unwrap();
        assert!(spec.q_integer(1).is_one());
        assert!(spec.q_integer(0).is_zero());
        assert!(spec.q_integer(5).is_zero()); // [l] = 0
        assert!(!spec.q_integer(3).is_zero());
        assert_eq!(spec.q_integer(-3), spec.q_integer(3).neg());
        // [2] = q + q^{-1} = zeta_20^2 + zeta_20^{-2}
        let expect = CycloNumber::root_of_unity(20, 2).add(&CycloNumber::root_of_unity(20, -2));
        assert_eq!(spec.q_integer(2), expect);
    }

    #[test]
    fn quantum_integer_satisfies_defining_identity() {
        // [n] (q - q^{-1}) = q^n - q^{-n} for |n| <= 3l
        for (ell, z, d) in [(5i64, 1i64, 2i64), (9, 5, 1), (6, 1, 4)] {
            let spec = QSpec::new(ell, z, d).unwrap();
            let q1 = spec.q_power(Rational64::from_integer(1)).unwrap();
            let qm1 = spec.q_power(Rational64::from_integer(-1)).unwrap();
            let denom = q1.sub(&qm1);
            for n in -(3 * ell)..=(3 * ell) {
                let lhs = spec.q_integer(n).mul(&denom);
                let rhs = spec
                    .q_power(Rational64::from_integer(n))
                    .unwrap()
                    .sub(&spec.q_power(Rational64::from_integer(-n)).unwrap());
                assert_eq!(lhs, rhs, "n = {n}, l = {ell}, z = {z}");
            }
        }
    }

    #[test]
    fn q_integer_vanishes_exactly_at_multiples_of_l() {
        let spec = QSpec::new(9, 2, 1).unwrap();
        for n in 0..30 {
            assert_eq!(spec.q_integer(n).is_zero(), n % 9 == 0, "n = {n}");
        }
    }
}
