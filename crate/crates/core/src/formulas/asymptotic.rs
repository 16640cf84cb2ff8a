//! Floating-point asymptotics for the diagonal counts, plus the root solve
//! needed for bounded-part compositions. Power computations switch to
//! logarithms once the exponent `l * N` passes 600, so huge diagonals still
//! report a usable mantissa/exponent split.

use crate::error::{Error, Result};

use super::{ApproxValue, FormulaId};

const LOG_SWITCH: u64 = 600;

/// Constants of the diagonal asymptotic for `S = {1,2}^N`:
/// `a(l, ..., l) ~ phi^(-lN) * b0 * l^((1-N)/2)` with `phi = (sqrt(5)-1)/2`.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticConstants {
    pub n: u32,
    /// `(sqrt(5) - 1) / 2`, the contributing point coordinate.
    pub phi: f64,
    /// `-phi^(N-1) (1+phi)^(N-1) (1+2 phi)`
    pub a: f64,
    /// `N (phi / (1 + 3 phi + 2 phi^2))^(N-1)`
    pub h: f64,
    /// `1 / (-phi * a * sqrt((2 pi)^(N-1) * h))`
    pub b0: f64,
}

impl AsymptoticConstants {
    pub fn for_dimension(n: u32) -> Self {
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        let a = -(phi.powi(n as i32 - 1))
            * (1.0 + phi).powi(n as i32 - 1)
            * (1.0 + 2.0 * phi);
        let h = n as f64 * (phi / (1.0 + 3.0 * phi + 2.0 * phi * phi)).powi(n as i32 - 1);
        let b0 = 1.0
            / (-phi * a * ((2.0 * std::f64::consts::PI).powi(n as i32 - 1) * h).sqrt());
        AsymptoticConstants { n, phi, a, h, b0 }
    }
}

/// Diagonal asymptotic for `S = {1,2}^N`.
pub fn box12_asym(l: u64, n: u32) -> Result<ApproxValue> {
    if l == 0 || n == 0 {
        return Err(Error::DomainError("diagonal asymptotic needs l >= 1 and N >= 1".into()));
    }
    let c = AsymptoticConstants::for_dimension(n);
    let exponent = l * n as u64;
    let power_term = (1.0 - n as f64) / 2.0 * (l as f64).ln();
    let log10 = (-(exponent as f64) * c.phi.ln() + c.b0.ln() + power_term) / std::f64::consts::LN_10;
    let inputs = vec![l, n as u64];
    if exponent <= LOG_SWITCH {
        let value =
            (1.0 / c.phi).powi(exponent as i32) * c.b0 * (l as f64).powf((1.0 - n as f64) / 2.0);
        Ok(ApproxValue { id: FormulaId::Box12Asym, inputs, value, log10 })
    } else {
        Ok(ApproxValue::from_log10(FormulaId::Box12Asym, inputs, log10))
    }
}

/// Diagonal asymptotic for the Whitney case `S = {1,2} x {1,2}`:
/// `sqrt(3 + 7/sqrt(5)) * ((1+sqrt(5))/2)^(2l) / sqrt(8 pi l)`.
pub fn whitney_asym(l: u64) -> Result<ApproxValue> {
    if l == 0 {
        return Err(Error::DomainError("whitney_asym needs l >= 1".into()));
    }
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let front = (3.0 + 7.0 / 5f64.sqrt()).sqrt();
    let denom = (8.0 * std::f64::consts::PI * l as f64).sqrt();
    let log10 = (front.ln() + 2.0 * l as f64 * golden.ln() - denom.ln()) / std::f64::consts::LN_10;
    let inputs = vec![l];
    if 2 * l <= LOG_SWITCH {
        let value = front * golden.powi(2 * l as i32) / denom;
        Ok(ApproxValue { id: FormulaId::WhitneyAsym, inputs, value, log10 })
    } else {
        Ok(ApproxValue::from_log10(FormulaId::WhitneyAsym, inputs, log10))
    }
}

/// Diagonal asymptotic for `S = {(x,y) | x >= 1, y >= 0}`:
/// `2^(1/4) (3 + 2 sqrt(2))^l / (4 sqrt(pi l))`.
pub fn halfopen_asym(l: u64) -> Result<ApproxValue> {
    if l == 0 {
        return Err(Error::DomainError("halfopen_asym needs l >= 1".into()));
    }
    let base = 3.0 + 2.0 * 2f64.sqrt();
    let front = 2f64.powf(0.25);
    let denom = 4.0 * (std::f64::consts::PI * l as f64).sqrt();
    let log10 = (front.ln() + l as f64 * base.ln() - denom.ln()) / std::f64::consts::LN_10;
    let inputs = vec![l];
    if 2 * l <= LOG_SWITCH {
        let value = front * base.powi(l as i32) / denom;
        Ok(ApproxValue { id: FormulaId::HalfopenAsym, inputs, value, log10 })
    } else {
        Ok(ApproxValue::from_log10(FormulaId::HalfopenAsym, inputs, log10))
    }
}

/// Pairwise asymptotic `((r + l2)/l1)^l1 * ((r + l1)/l2)^l2` with
/// `r = sqrt(l1^2 + l2^2)`. Captures the exponential growth only; its
/// accuracy is logarithmic, so tests compare log-scale errors.
pub fn delannoy_asym(l1: u64, l2: u64) -> Result<ApproxValue> {
    if l1 == 0 || l2 == 0 {
        return Err(Error::DomainError("delannoy_asym needs l1, l2 >= 1".into()));
    }
    let (x, y) = (l1 as f64, l2 as f64);
    let r = x.hypot(y);
    let ln_value = x * ((r + y) / x).ln() + y * ((r + x) / y).ln();
    let log10 = ln_value / std::f64::consts::LN_10;
    let inputs = vec![l1, l2];
    if l1 + l2 <= LOG_SWITCH {
        let value = ((r + y) / x).powf(x) * ((r + x) / y).powf(y);
        Ok(ApproxValue { id: FormulaId::DelannoyAsym, inputs, value, log10 })
    } else {
        Ok(ApproxValue::from_log10(FormulaId::DelannoyAsym, inputs, log10))
    }
}

/// Diagonal asymptotic for the classical columns `{0,1}^N - {0}`:
/// `(2^(1/N)-1)^(-Nl) / ((2^(1/N)-1) 2^((N^2-1)/(2N)) sqrt(N (pi l)^(N-1)))`.
pub fn griggs_asym(l: u64, n: u32) -> Result<ApproxValue> {
    if l == 0 || n == 0 {
        return Err(Error::DomainError("griggs_asym needs l >= 1 and N >= 1".into()));
    }
    let nf = n as f64;
    let t = 2f64.powf(1.0 / nf) - 1.0;
    let front = 1.0
        / (t * 2f64.powf((nf * nf - 1.0) / (2.0 * nf))
            * (nf * (std::f64::consts::PI * l as f64).powi(n as i32 - 1)).sqrt());
    let log10 =
        (-(l as f64) * nf * t.ln() + front.ln()) / std::f64::consts::LN_10;
    let inputs = vec![l, n as u64];
    if l * n as u64 <= LOG_SWITCH {
        let value = t.powi(-((l * n as u64) as i32)) * front;
        Ok(ApproxValue { id: FormulaId::GriggsAsym, inputs, value, log10 })
    } else {
        Ok(ApproxValue::from_log10(FormulaId::GriggsAsym, inputs, log10))
    }
}

/// Asymptotic for compositions with parts in `{1, ..., M}`. Solves
/// `1/X + ... + 1/X^M = 1` for the unique real root `phi > 1` by bisection
/// on `[1, 2]` to 1e-12, then returns `phi^(l+1) / G'(sigma)` with
/// `G(x) = x + ... + x^M` and `sigma = 1/phi`.
pub fn comp_bounded_asym(l: u64, m: u32) -> Result<ApproxValue> {
    if m == 0 || l == 0 {
        return Err(Error::DomainError("comp_boundedM_asym needs l >= 1 and M >= 1".into()));
    }
    let phi = bounded_parts_root(m);
    let sigma = 1.0 / phi;
    let g_prime: f64 = (1..=m).map(|i| i as f64 * sigma.powi(i as i32 - 1)).sum();
    let log10 = ((l as f64 + 1.0) * phi.ln() - g_prime.ln()) / std::f64::consts::LN_10;
    let inputs = vec![l, m as u64];
    if l <= LOG_SWITCH {
        let value = phi.powi(l as i32 + 1) / g_prime;
        Ok(ApproxValue { id: FormulaId::CompBoundedAsym, inputs, value, log10 })
    } else {
        Ok(ApproxValue::from_log10(FormulaId::CompBoundedAsym, inputs, log10))
    }
}

/// Unique root `X > 1` of `sum over i in 1..=M of X^(-i) = 1` (equals 1 when
/// `M = 1`, approaches 2 as `M` grows).
fn bounded_parts_root(m: u32) -> f64 {
    let f = |x: f64| (1..=m).map(|i| x.powi(-(i as i32))).sum::<f64>() - 1.0;
    let mut lo = 1.0f64;
    let mut hi = 2.0f64;
    while hi - lo > 1e-12 {
        let mid = (lo + hi) / 2.0;
        if f(mid) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / 2.0
}

/// Growth rate of the classical three-sequence diagonal:
/// `12 * 2^(2/3) + 15 * 2^(1/3) + 19`.
pub fn unitcube3_growth() -> f64 {
    12.0 * 2f64.powf(2.0 / 3.0) + 15.0 * 2f64.powf(1.0 / 3.0) + 19.0
}
