//! Integer-vector kernels over a fixed conductor.
//!
//! Every value appearing in the category data (dimensions, twists,
//! S-entries) is an algebraic integer, so its power-basis coordinates are
//! plain integers. The hot checks run on flat `i64` coefficient vectors,
//! with `i128` accumulators and explicit bound checks; anything that does
//! not fit falls back to the exact `CycloNumber` path at the call site.

use cyclo::ConductorTable;

/// Adds `c * (x^e mod Phi_N)` into a `phi`-length accumulator.
#[inline]
pub fn add_row_scaled(t: &ConductorTable, acc: &mut [i128], e: usize, c: i128) {
    let row = &t.rows[e];
    for (a, &r) in acc.iter_mut().zip(row) {
        if r != 0 {
            *a += c * r as i128;
        }
    }
}

/// Reduces a dense exponent histogram (length `N`) to the power basis.
pub fn reduce_histogram(t: &ConductorTable, hist: &[i64]) -> Vec<i128> {
    let mut acc = vec![0i128; t.phi];
    for (e, &c) in hist.iter().enumerate() {
        if c != 0 {
            add_row_scaled(t, &mut acc, e, c as i128);
        }
    }
    acc
}

/// Product of reduced coefficient vectors, reduced again: convolution into
/// a scratch buffer followed by one reduction pass.
pub fn conv_reduce(t: &ConductorTable, a: &[i64], b: &[i64]) -> Vec<i128> {
    let phi = t.phi;
    let mut conv = vec![0i128; 2 * phi.max(1) - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let ai = ai as i128;
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                conv[i + j] += ai * bj as i128;
            }
        }
    }
    reduce_conv(t, &conv)
}

/// Reduces a raw convolution buffer (length `2 phi - 1`) to the basis.
pub fn reduce_conv(t: &ConductorTable, conv: &[i128]) -> Vec<i128> {
    let phi = t.phi;
    let mut acc: Vec<i128> = conv[..phi].to_vec();
    for (e, &c) in conv.iter().enumerate().skip(phi) {
        if c != 0 {
            add_row_scaled(t, &mut acc, e, c);
        }
    }
    acc
}

/// Multiplies a reduced vector by the monomial `zeta^e`.
pub fn mono_mul(t: &ConductorTable, a: &[i64], e: i64) -> Vec<i128> {
    let n = t.n as i64;
    let e = e.rem_euclid(n) as usize;
    let mut acc = vec![0i128; t.phi];
    for (k, &c) in a.iter().enumerate() {
        if c != 0 {
            let idx = (k + e) % t.n as usize;
            add_row_scaled(t, &mut acc, idx, c as i128);
        }
    }
    acc
}

pub fn narrow(v: Vec<i128>) -> Vec<i64> {
    v.into_iter()
        .map(|c| i64::try_from(c).expect("coefficient exceeds i64"))
        .collect()
}

/// Convolution of two `i64` vectors accumulated into a caller scratch of
/// length `2*phi-1`; no reduction. Used to batch sums of products.
#[inline]
pub fn conv_accumulate(scratch: &mut [i128], a: &[i64], b: &[i64]) {
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let ai = ai as i128;
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                scratch[i + j] += ai * bj as i128;
            }
        }
    }
}
