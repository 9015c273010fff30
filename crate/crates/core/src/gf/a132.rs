use crate::series::{rat, TruncatedSeries};

use super::{catalan, first_difference, motzkin_flats, GfError, Result};

/// `c(z^3)` truncated at `order`.
fn catalan_cubed(order: usize) -> Result<TruncatedSeries> {
    Ok(catalan(order)?.compose_power(3))
}

/// `m(t, x)` evaluated at `t = t_val`, `x = x_val` (valuation three).
fn motzkin_flats_at(t_val: &TruncatedSeries, x_val: &TruncatedSeries) -> Result<TruncatedSeries> {
    let rows = t_val.order() / 3;
    // each x^k row has t-degree at most k, so t_order = rows keeps it exact
    Ok(motzkin_flats(rows, rows)?.substitute(t_val, x_val)?)
}

/// `1 + 2(c(z^3) - 1) m(2, c(z^3) - 1)`: 3-cycle-only 132-avoiders. The
/// leading `1` counts the empty permutation.
pub fn a3_132(order: usize) -> Result<TruncatedSeries> {
    let x = catalan_cubed(order)?.sub(&TruncatedSeries::one(order))?;
    let two = TruncatedSeries::constant(order, rat(2));
    let m = motzkin_flats_at(&two, &x)?;
    Ok(x.mul(&m)?.scale(&rat(2)).add(&TruncatedSeries::one(order))?)
}

/// `c(z^3) / (sqrt(c(z^3)(4 - 3c(z^3))) - z c(z^3))`.
pub fn a13_132_closed(order: usize) -> Result<TruncatedSeries> {
    let c3 = catalan_cubed(order)?;
    let four = TruncatedSeries::constant(order, rat(4));
    let radicand = c3.mul(&four.sub(&c3.scale(&rat(3)))?)?;
    let denom = radicand.sqrt()?.sub(&c3.shift_up(1))?;
    Ok(c3.div(&denom)?)
}

/// `t = 2/(1-z)` and `x = c(z^3) - 1`.
fn structural_arguments(order: usize) -> Result<(TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
    let geometric = TruncatedSeries::one(order).div(&TruncatedSeries::from_ints(order, &[1, -1]))?;
    let t = geometric.scale(&rat(2));
    let x = catalan_cubed(order)?.sub(&TruncatedSeries::one(order))?;
    Ok((geometric, t, x))
}

/// `F(2/(1-z), c(z^3) - 1) / (1 - z)` with `F(t, x) = 1 + x t m(t, x)`.
pub fn a13_132_structural(order: usize) -> Result<TruncatedSeries> {
    let (geometric, t, x) = structural_arguments(order)?;
    let m = motzkin_flats_at(&t, &x)?;
    let f = TruncatedSeries::one(order).add(&x.mul(&t)?.mul(&m)?)?;
    Ok(f.mul(&geometric)?)
}

/// `1/(1-z) + 2/(1-z) · (c(z^3) - 1) · m(2/(1-z), c(z^3) - 1)`. This
/// rearrangement drops a factor `1/(1-z)` from the second term and does not
/// equal the other two forms; it is kept so that fact stays tested.
pub fn a13_132_proof_printed_variant(order: usize) -> Result<TruncatedSeries> {
    let (geometric, t, x) = structural_arguments(order)?;
    let m = motzkin_flats_at(&t, &x)?;
    Ok(geometric.add(&t.mul(&x)?.mul(&m)?)?)
}

/// Order-3 132-avoiders; the closed and structural forms must agree.
pub fn a13_132(order: usize) -> Result<TruncatedSeries> {
    let closed = a13_132_closed(order)?;
    let structural = a13_132_structural(order)?;
    if let Some(k) = first_difference(&closed, &structural) {
        return Err(GfError::Mismatch { name: "A13_132", detail: format!("coefficient {k}") });
    }
    Ok(closed)
}
