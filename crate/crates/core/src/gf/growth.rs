use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::series::{SeriesError, TruncatedSeries};

use super::{GfError, Result};

const SIGNIFICANT_DIGITS: usize = 60;

/// `(a_{n+3} / a_n)^{1/3}`. The step of three smooths out the period-three
/// wobble of series in `z^3`. The ratio is kept exactly; the cube root is
/// only ever compared exactly (by cubing) or printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthEstimate {
    pub index: usize,
    pub ratio: BigRational,
    /// The cube root truncated to 60 significant digits.
    pub decimal: String,
}

impl GrowthEstimate {
    /// Exact test of `lo <= ratio^{1/3} <= hi` for nonnegative bounds.
    pub fn within(&self, lo: &BigRational, hi: &BigRational) -> bool {
        let cube = |r: &BigRational| r * r * r;
        cube(lo) <= self.ratio && self.ratio <= cube(hi)
    }
}

fn to_biguint(n: &BigInt) -> BigUint {
    n.to_biguint().expect("nonnegative")
}

/// Cube root of a positive rational, truncated to `SIGNIFICANT_DIGITS`.
fn cube_root_decimal(ratio: &BigRational) -> String {
    let (p, q) = (to_biguint(ratio.numer()), to_biguint(ratio.denom()));
    let int_part = (&p / &q).cbrt();
    let int_digits = if int_part.is_zero() { 1 } else { int_part.to_string().len() };
    let frac_digits = SIGNIFICANT_DIGITS.saturating_sub(int_digits);
    let scaled = (p * BigUint::from(10u32).pow(3 * frac_digits as u32) / q).cbrt();
    let mut text = scaled.to_string();
    if text.len() <= frac_digits {
        text = format!("{}{text}", "0".repeat(frac_digits + 1 - text.len()));
    }
    if frac_digits > 0 {
        text.insert(text.len() - frac_digits, '.');
    }
    text
}

pub fn growth_estimate(series: &TruncatedSeries, n: usize) -> Result<GrowthEstimate> {
    if n + 3 > series.order() {
        return Err(SeriesError::OrderTooHigh { requested: n + 3, available: series.order() }.into());
    }
    let (a, b) = (series.coeff(n), series.coeff(n + 3));
    for (k, c) in [(n, a), (n + 3, b)] {
        if c.is_zero() {
            return Err(GfError::ZeroCoefficient(k));
        }
    }
    let ratio = b / a;
    if ratio.is_negative() {
        return Err(GfError::NegativeRatio(n));
    }
    let decimal = cube_root_decimal(&ratio);
    Ok(GrowthEstimate { index: n, ratio, decimal })
}
