//! Bernoulli-number coefficient tables, evaluated at compile time from exact rationals.

/// `(numerator, denominator)` of `B_2, B_4, ..., B_32`.
const B2K: [(f64, f64); 16] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
    (-7709321041217.0, 510.0),
];

const fn b2k(k: usize) -> f64 {
    B2K[k - 1].0 / B2K[k - 1].1
}

const fn factorial(n: usize) -> f64 {
    let mut acc = 1.0;
    let mut i = 2;
    while i <= n {
        acc *= i as f64;
        i += 1;
    }
    acc
}

const fn euler_maclaurin() -> [f64; 16] {
    let mut out = [0.0; 16];
    let mut k = 1;
    while k <= 16 {
        out[k - 1] = b2k(k) / factorial(2 * k);
        k += 1;
    }
    out
}

const fn stirling() -> [f64; 16] {
    let mut out = [0.0; 16];
    let mut k = 1;
    while k <= 16 {
        let kk = k as f64;
        out[k - 1] = b2k(k) / (2.0 * kk * (2.0 * kk - 1.0));
        k += 1;
    }
    out
}

const fn digamma_series() -> [f64; 16] {
    let mut out = [0.0; 16];
    let mut k = 1;
    while k <= 16 {
        out[k - 1] = b2k(k) / (2.0 * k as f64);
        k += 1;
    }
    out
}

/// `B_{2k} / (2k)!` for `k = 1..=16`; entries `0..15` are used, the last bounds the remainder.
pub(crate) const EM_COEFF: [f64; 16] = euler_maclaurin();
/// `B_{2k} / (2k (2k-1))`, the Stirling series coefficients of `log Γ`.
pub(crate) const STIRLING_COEFF: [f64; 16] = stirling();
/// `B_{2k} / (2k)`, the asymptotic coefficients of `ψ`.
pub(crate) const DIGAMMA_COEFF: [f64; 16] = digamma_series();

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_coefficients() {
        assert_eq!(EM_COEFF[0], 1.0 / 12.0);
        assert_eq!(STIRLING_COEFF[0], 1.0 / 12.0);
        assert_eq!(STIRLING_COEFF[1], -1.0 / 360.0);
        assert_eq!(DIGAMMA_COEFF[0], 1.0 / 12.0);
        // B_30 / 30! is tiny but nonzero
        assert!(EM_COEFF[14] > 0.0 && EM_COEFF[14] < 1e-20);
    }
}
