//! `ζ(s)` and `ζ'(s)` by Euler–Maclaurin summation.
//!
//! With `N` leading terms the sum is
//! `Σ_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + Σ_k B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}`,
//! carried through `B_30`. The pole part `N^{1-s}` is kept apart so that `(s-1)ζ(s)` can be
//! formed without cancellation near `s = 1`.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::bernoulli::EM_COEFF;
use super::gamma::{ln_gamma_with_err, psi};
use super::{ComplexValue, EvalResult};

/// Bernoulli correction terms used, `B_2 … B_30`.
const BERNOULLI_TERMS: usize = 15;
const LN_TWO_PI: f64 = 1.837_877_066_409_345_5;
const LN_PI: f64 = 1.144_729_885_849_400_2;
/// Vertical distance above which the reflected `ζ` is formed in log space.
const REFLECT_LOG_FORM: f64 = 50.0;

/// Default number of leading terms: `max(50, ⌈1.3 |t|⌉)`.
pub fn em_terms(t: f64) -> usize {
    let n = (1.3 * t.abs()).ceil() as usize;
    n.max(50)
}

/// Term count for an unreflected sum at `s`. Left of `Re s = 0` the head terms `n^{-s}`
/// grow like `n^{|σ|}` and their rounding swamps the small value of `ζ`, so the floor of 50
/// drops to `30 + 5σ` (8 at `σ ≤ -4.4`) while keeping `N ≥ 1.3|t|`.
pub(crate) fn em_terms_direct(s: ComplexValue) -> usize {
    if s.re >= 0.0 {
        return em_terms(s.im);
    }
    let floor = (30.0 + 5.0 * s.re).max(8.0) as usize;
    ((1.3 * s.im.abs()).ceil() as usize).max(floor)
}

/// Pieces of the Euler–Maclaurin sum.
#[derive(Debug, Clone, Copy)]
pub(crate) struct EmSum {
    /// Everything except the pole term.
    pub reg: ComplexValue,
    /// `N^{1-s}`; `ζ(s) = reg + pole_num / (s-1)`.
    pub pole_num: ComplexValue,
    pub d_reg: ComplexValue,
    pub d_pole_num: ComplexValue,
    /// Absolute error bound on `reg` (truncation plus rounding).
    pub err: f64,
}

impl EmSum {
    pub fn zeta(&self, s: ComplexValue) -> ComplexValue {
        self.reg + self.pole_num / (s - 1.0)
    }

    pub fn zeta_prime(&self, s: ComplexValue) -> ComplexValue {
        let sm1 = s - 1.0;
        self.d_reg + (self.d_pole_num * sm1 - self.pole_num) / (sm1 * sm1)
    }

    /// `(s-1) ζ(s)`, regular at `s = 1`.
    pub fn zeta_times_sm1(&self, s: ComplexValue) -> ComplexValue {
        self.reg * (s - 1.0) + self.pole_num
    }
}

/// Head sum `Σ_{n<N} n^{-s}` and its derivative, plus `Σ n^{-σ}` for the rounding bound.
fn head(s: ComplexValue, n_terms: usize) -> (ComplexValue, ComplexValue, f64) {
    let mut sum_re = 0.0;
    let mut sum_im = 0.0;
    let mut d_re = 0.0;
    let mut d_im = 0.0;
    let mut abs_sum = 0.0;
    for n in 1..n_terms {
        let ln_n = (n as f64).ln();
        let mag = (-s.re * ln_n).exp();
        let (sin, cos) = (s.im * ln_n).sin_cos();
        let re = mag * cos;
        let im = -mag * sin;
        sum_re += re;
        sum_im += im;
        d_re -= ln_n * re;
        d_im -= ln_n * im;
        abs_sum += mag * (1.0 + ln_n);
    }
    (ComplexValue::new(sum_re, sum_im), ComplexValue::new(d_re, d_im), abs_sum)
}

/// Tail of the sum at `N`: `N^{-s}/2`, the Bernoulli terms, and the pole numerator.
fn tail(s: ComplexValue, n_terms: usize) -> EmSum {
    let big_n = n_terms as f64;
    let ln_n = big_n.ln();
    let n_pow_s = (-s * ln_n).exp();
    let mut reg = n_pow_s * 0.5;
    let mut d_reg = n_pow_s * (-0.5 * ln_n);
    let mut prod = s;
    let mut d_prod = ComplexValue::new(1.0, 0.0);
    let mut n_pow = 1.0 / big_n;
    let inv_n2 = n_pow * n_pow;
    for k in 1..=BERNOULLI_TERMS {
        if k > 1 {
            let a = s + (2 * k - 3) as f64;
            let b = s + (2 * k - 2) as f64;
            d_prod = d_prod * a * b + prod * (a + b);
            prod = prod * a * b;
            n_pow *= inv_n2;
        }
        let base = n_pow_s * (EM_COEFF[k - 1] * n_pow);
        reg += base * prod;
        d_reg += base * (d_prod - prod * ln_n);
    }
    // magnitude of the first omitted term bounds the remainder
    let k = BERNOULLI_TERMS + 1;
    let a = s + (2 * k - 3) as f64;
    let b = s + (2 * k - 2) as f64;
    let next = (prod * a * b).norm() * EM_COEFF[k - 1].abs() * n_pow * inv_n2 * n_pow_s.norm();
    EmSum {
        reg,
        pole_num: n_pow_s * big_n,
        d_reg,
        d_pole_num: n_pow_s * (-big_n * ln_n),
        err: 2.0 * next + 8.0 * f64::EPSILON * (reg.norm() + big_n * n_pow_s.norm()),
    }
}

/// Full Euler–Maclaurin sum with `n_terms` leading terms.
pub(crate) fn em_sum(s: ComplexValue, n_terms: usize) -> EmSum {
    let (h, dh, abs_sum) = head(s, n_terms);
    let mut out = tail(s, n_terms);
    out.reg += h;
    out.d_reg += dh;
    out.err += 4.0 * f64::EPSILON * abs_sum * (n_terms as f64).sqrt().max(1.0);
    out
}

/// `ζ(s)` (order 0) or `ζ'(s)` (order 1) by Euler–Maclaurin with an explicit term count.
///
/// No reflection is applied, so this is also the reference route for identity checks in the
/// left half-plane.
pub fn zeta_em(s: ComplexValue, deriv_order: u8, n_terms: usize) -> EvalResult {
    if s == ComplexValue::new(1.0, 0.0) {
        return EvalResult::pole();
    }
    let em = em_sum(s, n_terms.max(2));
    let sm1 = (s - 1.0).norm();
    match deriv_order {
        0 => EvalResult::new(em.zeta(s), em.err + f64::EPSILON * em.pole_num.norm() / sm1),
        _ => EvalResult::new(em.zeta_prime(s), (em.err + em.pole_num.norm() * f64::EPSILON) * (1.0 + 1.0 / (sm1 * sm1))),
    }
}

/// `ζ(s)` or `ζ'(s)`.
///
/// For `Re s ≥ -1/2` the Euler–Maclaurin sum is used directly; further left the value is
/// obtained from `ζ(1-s)` through the functional equation `ζ(s) = χ(s) ζ(1-s)`.
pub fn zeta(s: ComplexValue, deriv_order: u8) -> EvalResult {
    if s == ComplexValue::new(1.0, 0.0) {
        return EvalResult::pole();
    }
    if s.re >= -0.5 {
        return zeta_em(s, deriv_order, em_terms(s.im));
    }
    reflected_zeta(s, deriv_order)
}

fn ln_sin(z: ComplexValue) -> ComplexValue {
    let i = ComplexValue::i();
    if z.im > 0.0 {
        // sin z = e^{-iz} (1 - e^{2iz}) / (-2i)
        -i * z + (ComplexValue::new(1.0, 0.0) - (i * z * 2.0).exp()).ln() - (-i * 2.0).ln()
    } else if z.im < 0.0 {
        // sin z = e^{iz} (1 - e^{-2iz}) / (2i)
        i * z + (ComplexValue::new(1.0, 0.0) - (-i * z * 2.0).exp()).ln() - (i * 2.0).ln()
    } else {
        z.sin().ln()
    }
}

fn cot(z: ComplexValue) -> ComplexValue {
    let i = ComplexValue::i();
    if z.im > 0.0 {
        let q = (i * z * 2.0).exp();
        i * (q + 1.0) / (q - 1.0)
    } else if z.im < 0.0 {
        let q = (-i * z * 2.0).exp();
        i * (q + 1.0) / (ComplexValue::new(1.0, 0.0) - q)
    } else {
        z.cos() / z.sin()
    }
}

fn reflected_zeta(s: ComplexValue, deriv_order: u8) -> EvalResult {
    let one_minus = ComplexValue::new(1.0, 0.0) - s;
    let em = em_sum(one_minus, em_terms(one_minus.im));
    let z = em.zeta(one_minus);
    let dz = em.zeta_prime(one_minus);
    let rel_z = em.err / z.norm().max(f64::MIN_POSITIVE);
    let (ln_g, g_err) = ln_gamma_with_err(one_minus);
    let half_pi_s = s * core::f64::consts::FRAC_PI_2;
    let ln_prefactor = s * LN_TWO_PI - LN_PI + ln_g;
    let rel = rel_z + g_err + 4.0 * f64::EPSILON * ln_prefactor.norm();
    if s.im.abs() < REFLECT_LOG_FORM {
        let a = ln_prefactor.exp();
        let sin = half_pi_s.sin();
        let value = a * sin * z;
        if deriv_order == 0 {
            return EvalResult::new(value, rel * value.norm() + f64::EPSILON * (a * z).norm());
        }
        let cos = half_pi_s.cos();
        let dlog_a = LN_TWO_PI - psi(one_minus);
        let dv = a * ((sin * dlog_a + cos * core::f64::consts::FRAC_PI_2) * z - sin * dz);
        return EvalResult::new(dv, rel * dv.norm() + f64::EPSILON * (a * dz).norm() * 8.0);
    }
    let chi = (ln_prefactor + ln_sin(half_pi_s)).exp();
    let value = chi * z;
    if deriv_order == 0 {
        return EvalResult::new(value, rel * value.norm());
    }
    let dlog_chi = LN_TWO_PI + cot(half_pi_s) * core::f64::consts::FRAC_PI_2 - psi(one_minus);
    let dv = chi * (dlog_chi * z - dz);
    EvalResult::new(dv, rel * dv.norm() + chi.norm() * em.err * (1.0 + dlog_chi.norm()))
}

/// Batched Euler–Maclaurin evaluation on a lattice of points `x_i + i·y` that share their
/// real parts across rows.
///
/// The powers `n^{-x_i}` are tabulated once; each row then costs one `sin/cos` table and a
/// real-by-complex dot product per column.
pub(crate) struct ZetaLattice {
    real_parts: Vec<f64>,
    n_terms: usize,
    ln_n: Vec<f64>,
    /// `weights[i * (n_terms - 1) + (n - 1)] = n^{-x_i}`
    weights: Vec<f64>,
    abs_sums: Vec<f64>,
}

impl ZetaLattice {
    pub fn new(real_parts: Vec<f64>, max_abs_im: f64) -> Self {
        let n_terms = em_terms(max_abs_im);
        let ln_n: Vec<f64> = (1..n_terms).map(|n| (n as f64).ln()).collect();
        let mut weights = Vec::with_capacity(real_parts.len() * ln_n.len());
        let mut abs_sums = Vec::with_capacity(real_parts.len());
        for &x in &real_parts {
            let mut acc = 0.0;
            for &l in &ln_n {
                let w = (-x * l).exp();
                acc += w * (1.0 + l);
                weights.push(w);
            }
            abs_sums.push(acc);
        }
        Self { real_parts, n_terms, ln_n, weights, abs_sums }
    }

    pub fn real_parts(&self) -> &[f64] {
        &self.real_parts
    }

    /// Euler–Maclaurin pieces at `x_i + i·y` for every column `i`.
    pub fn row(&self, y: f64) -> Vec<EmSum> {
        let m = self.ln_n.len();
        let mut cos = Vec::with_capacity(m);
        let mut sin = Vec::with_capacity(m);
        for &l in &self.ln_n {
            let (sv, cv) = (y * l).sin_cos();
            cos.push(cv);
            sin.push(sv);
        }
        let rounding = 4.0 * f64::EPSILON * (self.n_terms as f64).sqrt();
        self.real_parts
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let w = &self.weights[i * m..(i + 1) * m];
                let (mut re, mut im, mut dre, mut dim) = (0.0, 0.0, 0.0, 0.0);
                for n in 0..m {
                    let a = w[n] * cos[n];
                    let b = w[n] * sin[n];
                    re += a;
                    im -= b;
                    dre -= self.ln_n[n] * a;
                    dim += self.ln_n[n] * b;
                }
                let s = ComplexValue::new(x, y);
                let mut em = tail(s, self.n_terms);
                em.reg += ComplexValue::new(re, im);
                em.d_reg += ComplexValue::new(dre, dim);
                em.err += rounding * self.abs_sums[i];
                em
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn closed_forms() {
        let z2 = zeta(c(2.0, 0.0), 0).value;
        assert!((z2.re - core::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
        let z0 = zeta(c(0.0, 0.0), 0).value;
        assert!((z0.re + 0.5).abs() < 1e-15 && z0.im.abs() < 1e-15);
        let zm1 = zeta(c(-1.0, 0.0), 0).value;
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-14);
        // trivial zeros
        assert!(zeta(c(-2.0, 0.0), 0).value.norm() < 1e-15);
        assert!(zeta(c(-4.0, 0.0), 0).value.norm() < 1e-15);
    }

    #[test]
    fn pole_flagged() {
        assert!(zeta(c(1.0, 0.0), 0).at_pole);
        assert!(zeta(c(1.0, 0.0), 1).at_pole);
        assert!(!zeta(c(1.0, 1e-6), 0).at_pole);
    }

    #[test]
    fn more_terms_agree_within_estimate() {
        for &(re, im) in &[(0.5, 30.0), (2.0, 700.0), (-0.3, 1500.0), (0.9, 2100.0)] {
            let s = c(re, im);
            let n = em_terms(im);
            let a = zeta_em(s, 0, n);
            let b = zeta_em(s, 0, n + 10);
            assert!((a.value - b.value).norm() <= a.est_abs_err + b.est_abs_err, "{s}");
        }
    }

    #[test]
    fn lattice_matches_point_evaluation() {
        let lat = ZetaLattice::new(alloc::vec![0.5, 0.8, 1.7], 120.0);
        for y in [-100.0, 3.0, 118.5] {
            let row = lat.row(y);
            for (em, &x) in row.iter().zip(lat.real_parts()) {
                let s = c(x, y);
                let direct = zeta_em(s, 0, em_terms(120.0)).value;
                assert!((em.zeta(s) - direct).norm() < 1e-13 * (1.0 + direct.norm()));
                let d_direct = zeta_em(s, 1, em_terms(120.0)).value;
                assert!((em.zeta_prime(s) - d_direct).norm() < 1e-12 * (1.0 + d_direct.norm()));
            }
        }
    }
}
