//! Certified numeric evaluation: rigorous fixed-point intervals for
//! cyclotomic numbers, used for display values and sign decisions.
//!
//! All interval endpoints are `BigInt`s at an implicit scale of `2^bits`;
//! every operation rounds outward, so the true value always lies inside.

use crate::number::CycloNumber;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone)]
pub struct FixInterval {
    pub lo: BigInt,
    pub hi: BigInt,
}

impl FixInterval {
    fn point(v: BigInt) -> Self {
        FixInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    fn add(&self, other: &Self) -> Self {
        FixInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        FixInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    fn neg(&self) -> Self {
        FixInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    /// Product of two scaled intervals, dividing the result by `2^bits`.
    fn mul(&self, other: &Self, bits: u32) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        FixInterval {
            lo: floor_shift(&lo, bits),
            hi: ceil_shift(&hi, bits),
        }
    }

    /// Division by a positive integer, rounding outward.
    fn div_uint(&self, den: &BigInt) -> Self {
        FixInterval {
            lo: floor_div(&self.lo, den),
            hi: ceil_div(&self.hi, den),
        }
    }

    /// Multiplication by an exact rational.
    fn mul_rational(&self, c: &BigRational) -> Self {
        let p = c.numer();
        let q = c.denom(); // positive by normalization
        let (a, b) = if p.is_negative() {
            (&self.hi * p, &self.lo * p)
        } else {
            (&self.lo * p, &self.hi * p)
        };
        FixInterval {
            lo: floor_div(&a, q),
            hi: ceil_div(&b, q),
        }
    }

    fn widen(&self, slack: &BigInt) -> Self {
        FixInterval {
            lo: &self.lo - slack,
            hi: &self.hi + slack,
        }
    }

    fn magnitude(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn to_f64(&self, bits: u32) -> f64 {
        let mid = BigRational::new(&self.lo + &self.hi, BigInt::from(2) << bits);
        mid.to_f64().unwrap_or(f64::NAN)
    }
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = (a / b, a % b);
    if r.is_negative() {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = (a / b, a % b);
    if r.is_positive() {
        q + 1
    } else {
        q
    }
}

fn floor_shift(a: &BigInt, bits: u32) -> BigInt {
    a >> bits
}

fn ceil_shift(a: &BigInt, bits: u32) -> BigInt {
    let f = a >> bits;
    if a - (&f << bits) > BigInt::zero() {
        f + 1
    } else {
        f
    }
}

/// `pi` at scale `2^bits` by the Machin formula with alternating tails.
fn pi_interval(bits: u32) -> FixInterval {
    fn atan_inv(m: i64, bits: u32) -> FixInterval {
        let scale = BigInt::from(1) << bits;
        let m2 = BigInt::from(m) * BigInt::from(m);
        let mut term = &scale / BigInt::from(m); // 1/m, rounded down
        let mut sum = FixInterval::point(term.clone());
        sum = sum.widen(&BigInt::from(2));
        let mut k = 1u32;
        loop {
            // `term` drifts below the true scaled power by at most k ulps;
            // each summand is covered with a slack of 2 ulps.
            term = &term / &m2;
            let div = BigInt::from(2 * k as i64 + 1);
            let t = &term / &div;
            if t.is_zero() {
                // alternating tail after a vanished term stays tiny
                sum = sum.widen(&BigInt::from(4));
                return sum;
            }
            if k % 2 == 1 {
                sum.lo -= &t + 2;
                sum.hi -= &t - 2;
            } else {
                sum.lo += &t - 2;
                sum.hi += &t + 2;
            }
            k += 1;
        }
    }
    let a = atan_inv(5, bits);
    let b = atan_inv(239, bits);
    let sixteen = FixInterval {
        lo: &a.lo * 16,
        hi: &a.hi * 16,
    };
    let four = FixInterval {
        lo: &b.lo * 4,
        hi: &b.hi * 4,
    };
    sixteen.sub(&four)
}

/// `(cos, sin)` of `2 pi k / n` at scale `2^bits`, rigorous.
fn cos_sin_2pi_frac(k: u64, n: u64, bits: u32) -> (FixInterval, FixInterval) {
    let k = k % n;
    // quadrant reduction: 2 pi k/n = q (pi/2) + theta, theta in [0, pi/2)
    let quadrant = (4 * k) / n;
    let rem = 4 * k - quadrant * n; // theta = (pi/2) * rem / n
    let pi = pi_interval(bits);
    let theta = FixInterval {
        lo: &pi.lo * BigInt::from(rem),
        hi: &pi.hi * BigInt::from(rem),
    }
    .div_uint(&BigInt::from(2 * n));

    let (c, s) = cos_sin_taylor(&theta, bits);
    match quadrant {
        0 => (c, s),
        1 => (s.neg(), c),
        2 => (c.neg(), s.neg()),
        _ => (s, c.neg()),
    }
}

/// Taylor expansion of cos and sin for `theta in [0, pi/2]`.
fn cos_sin_taylor(theta: &FixInterval, bits: u32) -> (FixInterval, FixInterval) {
    let one = FixInterval::point(BigInt::from(1) << bits);
    let theta2 = theta.mul(theta, bits);

    let run = |start: FixInterval, odd: bool| -> FixInterval {
        let mut sum = start.clone();
        let mut term = start;
        let mut j = 1u32;
        loop {
            let base = if odd { 2 * j } else { 2 * j - 1 };
            let den = BigInt::from(base as i64) * BigInt::from(base as i64 + 1);
            term = term.mul(&theta2, bits).div_uint(&den);
            let mag = term.magnitude();
            if mag <= BigInt::from(2) {
                // tail is geometrically dominated (ratio < 1/2 here)
                return sum.widen(&(mag + 4));
            }
            if j % 2 == 1 {
                sum = sum.sub(&term);
            } else {
                sum = sum.add(&term);
            }
            j += 1;
            assert!(j < 10_000, "Taylor expansion failed to converge");
        }
    };

    (run(one, false), run(theta.clone(), true))
}

/// Rigorous complex interval for `x` at scale `2^bits`.
pub fn eval_interval(x: &CycloNumber, bits: u32) -> (FixInterval, FixInterval) {
    let n = x.conductor();
    let mut re = FixInterval::point(BigInt::zero());
    let mut im = FixInterval::point(BigInt::zero());
    for (k, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (ck, sk) = cos_sin_2pi_frac(k as u64, n, bits);
        re = re.add(&ck.mul_rational(c));
        im = im.add(&sk.mul_rational(c));
    }
    (re, im)
}

/// Deterministic complex approximation with error below `10^{-digits}`
/// in each coordinate (as far as `f64` can carry it).
pub fn numeric_value(x: &CycloNumber, digits: u32) -> (f64, f64) {
    let bits = (digits.max(1) * 4 + 32).min(4096);
    let (re, im) = eval_interval(x, bits);
    (re.to_f64(bits), im.to_f64(bits))
}

/// True iff `x` is exactly real (fixed by conjugation) and strictly
/// positive, decided by interval refinement. Exact zero returns false.
pub fn is_positive_real(x: &CycloNumber) -> bool {
    if x.is_zero() || !x.eq_exact(&x.conj()) {
        return false;
    }
    let mut bits = 64u32;
    loop {
        let (re, _) = eval_interval(x, bits);
        if re.strictly_positive() {
            return true;
        }
        if re.strictly_negative() {
            return false;
        }
        bits *= 2;
        assert!(
            bits <= 1 << 16,
            "interval refinement failed to separate a nonzero real from zero"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qspec::QSpec;

    #[test]
    fn constants() {
        let one = CycloNumber::one(12);
        let (re, im) = numeric_value(&one, 12);
        assert!((re - 1.0).abs() < 1e-12);
        assert!(im.abs() < 1e-12);

        let i = CycloNumber::root_of_unity(4, 1);
        let (re, im) = numeric_value(&i, 12);
        assert!(re.abs() < 1e-12);
        assert!((im - 1.0).abs() < 1e-12);
    }

    #[test]
    fn golden_ratio_from_quantum_two() {
        let spec = QSpec::new(5, 1, 2).unwrap();
        let phi = spec.q_integer(2); // 2 cos(pi/5)
        let (re, im) = numeric_value(&phi, 12);
        assert!((re - 1.618_033_988_749_894_8).abs() < 1e-10);
        assert!(im.abs() < 1e-12);
        assert!(is_positive_real(&phi));
    }

    #[test]
    fn sign_decisions() {
        assert!(is_positive_real(&CycloNumber::one(6)));
        assert!(!is_positive_real(&CycloNumber::from_integer(6, -1)));
        assert!(!is_positive_real(&CycloNumber::zero(6)));
        assert!(!is_positive_real(&CycloNumber::root_of_unity(4, 1)));
        // x * conj(x) is positive for any nonzero x
        let x = CycloNumber::root_of_unity(36, 5)
            .add(&CycloNumber::from_integer(36, -3));
        assert!(is_positive_real(&x.mul(&x.conj())));
    }

    #[test]
    fn roots_of_unity_land_on_the_circle() {
        for (n, k) in [(7u64, 1i64), (12, 5), (18, 13), (20, 9)] {
            let x = CycloNumber::root_of_unity(n, k);
            let (re, im) = numeric_value(&x, 14);
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
            assert!((re - angle.cos()).abs() < 1e-12, "cos {n} {k}");
            assert!((im - angle.sin()).abs() < 1e-12, "sin {n} {k}");
        }
    }
}
