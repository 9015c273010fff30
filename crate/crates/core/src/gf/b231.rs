use crate::enumerate::CycleSet;
use crate::series::{expand_rational3, Poly3, TruncatedSeries, WeightedSeries3};

use super::{first_difference, GfError, Result};

/// The four pieces of the trivariate function for 231-avoiders, in
/// `t` (fixed points), `x` (2-cycles), `y` (3-cycles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components231 {
    /// `(1 - x) / (1 - t - 2x)`: fixed points and 2-cycles alone.
    pub i: WeightedSeries3,
    /// `y/(1-2y) · 3x/(1-x)^2`: a crossing family with 2-cycles across it.
    pub s: WeightedSeries3,
    /// `y (1 + t)^2 / (1 - 2y)`: a crossing family with fixed points.
    pub q: WeightedSeries3,
    /// `y/(1-2y) · (6xt - 2x^2 t + 2xt^2 - x^2 t^2) / (1-x)^2`.
    pub r: WeightedSeries3,
}

// (1 - 2y)(1 - x)^2
const FAMILY_DENOM: &[((usize, usize, usize), i64)] =
    &[((0, 0, 0), 1), ((0, 1, 0), -2), ((0, 2, 0), 1), ((0, 0, 1), -2), ((0, 1, 1), 4), ((0, 2, 1), -2)];

pub fn components_231(bound: usize) -> Result<Components231> {
    let family_denom = Poly3::from_terms(FAMILY_DENOM);
    let i = expand_rational3(
        &Poly3::from_terms(&[((0, 0, 0), 1), ((0, 1, 0), -1)]),
        &Poly3::from_terms(&[((0, 0, 0), 1), ((1, 0, 0), -1), ((0, 1, 0), -2)]),
        bound,
    )?;
    let s = expand_rational3(&Poly3::from_terms(&[((0, 1, 1), 3)]), &family_denom, bound)?;
    let q = expand_rational3(
        &Poly3::from_terms(&[((0, 0, 1), 1), ((1, 0, 1), 2), ((2, 0, 1), 1)]),
        &Poly3::from_terms(&[((0, 0, 0), 1), ((0, 0, 1), -2)]),
        bound,
    )?;
    let r = expand_rational3(
        &Poly3::from_terms(&[((1, 1, 1), 6), ((1, 2, 1), -2), ((2, 1, 1), 2), ((2, 2, 1), -1)]),
        &family_denom,
        bound,
    )?;
    Ok(Components231 { i, s, q, r })
}

/// `(1 - x)^2 (1 - 2y)`.
pub(crate) fn b231_numerator() -> Poly3 {
    Poly3::from_terms(FAMILY_DENOM)
}

/// `1 - 3x - 3y - t + 2x^2 + 5xy + tx - 5x^2 y - 4txy - t^2 y`.
pub(crate) fn b231_denominator() -> Poly3 {
    Poly3::from_terms(&[
        ((0, 0, 0), 1),
        ((0, 1, 0), -3),
        ((0, 0, 1), -3),
        ((1, 0, 0), -1),
        ((0, 2, 0), 2),
        ((0, 1, 1), 5),
        ((1, 1, 0), 1),
        ((0, 2, 1), -5),
        ((1, 1, 1), -4),
        ((2, 0, 1), -1),
    ])
}

pub fn b231_closed(bound: usize) -> Result<WeightedSeries3> {
    Ok(expand_rational3(&b231_numerator(), &b231_denominator(), bound)?)
}

/// `i / (1 - i (q + s + r))`.
pub fn b231_structural(bound: usize) -> Result<WeightedSeries3> {
    let Components231 { i, s, q, r } = components_231(bound)?;
    let inner = i.mul(&q.add(&s)?.add(&r)?)?;
    Ok(i.div(&WeightedSeries3::one(bound).sub(&inner)?)?)
}

/// Both constructions, required to agree exactly.
pub fn b231(bound: usize) -> Result<WeightedSeries3> {
    let closed = b231_closed(bound)?;
    let structural = b231_structural(bound)?;
    if closed != structural {
        let witness = closed
            .terms()
            .keys()
            .chain(structural.terms().keys())
            .find(|m| closed.coeff(m.t, m.x, m.y) != structural.coeff(m.t, m.x, m.y))
            .map(|m| format!("t^{} x^{} y^{}", m.t, m.x, m.y))
            .unwrap_or_default();
        return Err(GfError::Mismatch { name: "B_231", detail: format!("first differing monomial {witness}") });
    }
    Ok(closed)
}

fn check_subset(s: &CycleSet) -> Result<()> {
    if s.max_length() > 3 {
        return Err(GfError::UnsupportedCycles(s.clone()));
    }
    Ok(())
}

/// `A^S_231(z)`: `B` at `t = z[1∈S]`, `x = z^2[2∈S]`, `y = z^3[3∈S]`.
pub fn a231_subset(s: &CycleSet, order: usize) -> Result<TruncatedSeries> {
    check_subset(s)?;
    let var = |len: usize| {
        if s.contains(len) {
            TruncatedSeries::var(order).pow(len)
        } else {
            TruncatedSeries::zero(order)
        }
    };
    Ok(b231(order)?.evaluate(&var(1), &var(2), &var(3))?)
}

/// Numerator and denominator coefficients of the published univariate
/// closed form for `S`.
pub(crate) fn table_rational(s: &CycleSet) -> (Vec<i64>, Vec<i64>) {
    match s.key().as_str() {
        "1" => (vec![1], vec![1, -1]),
        "2" => (vec![1, 0, -1], vec![1, 0, -2]),
        "3" => (vec![1, 0, 0, -2], vec![1, 0, 0, -3]),
        "12" => (vec![1, -1], vec![1, -2]),
        "13" => (vec![1, 0, 0, -2], vec![1, -1, 0, -3, 0, -1]),
        // (1 - z^2)^2 (1 - 2z^3)
        "23" => (vec![1, 0, -2, -2, 1, 4, 0, -2], vec![1, 0, -3, -3, 2, 5, 0, -5]),
        // (1 - z)^2 (1 - 2z^3)
        "123" => (vec![1, -2, 1, -2, 4, -2], vec![1, -3, 2, -3, 6, -5]),
        _ => unreachable!("nonempty subsets of {{1,2,3}} only"),
    }
}

/// The published closed form for `S`, expanded on its own.
pub fn a231_table_closed_form(s: &CycleSet, order: usize) -> Result<TruncatedSeries> {
    check_subset(s)?;
    let (numer, denom) = table_rational(s);
    Ok(TruncatedSeries::from_ints(order, &numer).div(&TruncatedSeries::from_ints(order, &denom))?)
}

/// Compare the specialization of `B` with the published closed form.
pub fn a231_subset_checked(s: &CycleSet, order: usize) -> Result<TruncatedSeries> {
    let from_b = a231_subset(s, order)?;
    let closed = a231_table_closed_form(s, order)?;
    if let Some(k) = first_difference(&from_b, &closed) {
        return Err(GfError::Mismatch { name: "A231_SUBSET", detail: format!("S = {s}, coefficient {k}") });
    }
    Ok(from_b)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::series::rat;

    fn row(s: &str, order: usize) -> Vec<i64> {
        let set: CycleSet = s.parse().unwrap();
        a231_subset_checked(&set, order)
            .unwrap()
            .to_integers()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn component_coefficients() {
        let c = components_231(8).unwrap();
        assert_eq!(c.i.coeff(0, 1, 0), rat(1));
        assert_eq!(c.i.coeff(0, 2, 0), rat(2));
        assert_eq!(c.i.coeff(0, 3, 0), rat(4));
        assert_eq!(c.s.coeff(0, 1, 1), rat(3));
        assert_eq!(c.q.coeff(0, 0, 1), rat(1));
        assert_eq!(c.q.coeff(1, 0, 1), rat(2));
        assert_eq!(c.q.coeff(2, 0, 1), rat(1));
    }

    #[test]
    fn b_constructions_agree() {
        let b = b231(14).unwrap();
        assert_eq!(b.coeff(0, 0, 0), rat(1));
        assert_eq!(b.coeff(1, 0, 0), rat(1));
        assert_eq!(b.coeff(0, 0, 1), rat(1));
        assert_eq!(b.coeff(0, 0, 2), rat(3));
    }

    #[test]
    fn expansion_times_denominator_is_numerator() {
        let b = b231_closed(12).unwrap();
        assert_eq!(b.mul(&b231_denominator().to_series(12)).unwrap(), b231_numerator().to_series(12));
    }

    #[test]
    fn published_rows() {
        assert_eq!(row("1,2,3", 12), vec![1, 1, 2, 5, 12, 29, 71, 171, 411, 990, 2380, 5722, 13765]);
        assert_eq!(row("3", 12), vec![1, 0, 0, 1, 0, 0, 3, 0, 0, 9, 0, 0, 27]);
        assert_eq!(row("1,3", 12), vec![1, 1, 1, 2, 5, 9, 16, 32, 61, 114, 219, 418, 792]);
        assert_eq!(row("2,3", 12), vec![1, 0, 1, 1, 2, 5, 7, 17, 27, 57, 98, 193, 351]);
        assert_eq!(row("1", 12), vec![1; 13]);
        let powers: Vec<i64> = std::iter::once(1).chain((0..12).map(|k| 1 << k)).collect();
        assert_eq!(row("1,2", 12), powers);
    }

    #[test]
    fn specialized_denominator_factors() {
        let order = 12;
        let z = TruncatedSeries::var(order);
        let at = b231_denominator()
            .eval_univariate(&z, &z.pow(2), &z.pow(3))
            .unwrap();
        let expected = TruncatedSeries::from_ints(order, &[1, 2, 1])
            .mul(&TruncatedSeries::from_ints(order, &[1, -3, 2, -3, 6, -5]))
            .unwrap();
        assert_eq!(at, expected);
    }

    #[test]
    fn specializing_commutes_with_expansion() {
        let order = 12;
        let z = TruncatedSeries::var(order);
        let (t, x, y) = (z.clone(), z.pow(2), z.pow(3));
        let after = b231_closed(order).unwrap().evaluate(&t, &x, &y).unwrap();
        let numer = b231_numerator().eval_univariate(&t, &x, &y).unwrap();
        let denom = b231_denominator().eval_univariate(&t, &x, &y).unwrap();
        assert_eq!(after, numer.div(&denom).unwrap());
        assert_eq!(after.coeff(12), &BigRational::from_integer(BigInt::from(13765)));
    }
}
