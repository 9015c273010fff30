use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{rational_to_json, Result, SeriesError, TruncatedSeries};

/// Exponents of `t^i x^j y^k`. Weights are 1, 2, 3: a fixed point adds one
/// element, a 2-cycle two, a 3-cycle three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial3 {
    pub t: usize,
    pub x: usize,
    pub y: usize,
}

impl Monomial3 {
    pub const ONE: Monomial3 = Monomial3 { t: 0, x: 0, y: 0 };

    pub fn new(t: usize, x: usize, y: usize) -> Self {
        Self { t, x, y }
    }

    pub fn weight(&self) -> usize {
        self.t + 2 * self.x + 3 * self.y
    }

    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(Self {
            t: self.t.checked_sub(other.t)?,
            x: self.x.checked_sub(other.x)?,
            y: self.y.checked_sub(other.y)?,
        })
    }

    fn plus(&self, other: &Self) -> Self {
        Self { t: self.t + other.t, x: self.x + other.x, y: self.y + other.y }
    }

    /// All monomials of weight `w`, lexicographic in `(y, x)`.
    pub fn of_weight(w: usize) -> impl Iterator<Item = Monomial3> {
        (0..=w / 3).flat_map(move |y| {
            (0..=(w - 3 * y) / 2).map(move |x| Monomial3 { t: w - 3 * y - 2 * x, x, y })
        })
    }

    /// All monomials of weight `<= bound`, in increasing weight.
    pub fn up_to(bound: usize) -> impl Iterator<Item = Monomial3> {
        (0..=bound).flat_map(Monomial3::of_weight)
    }
}

/// A polynomial in `(t, x, y)` with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Poly3 {
    terms: BTreeMap<Monomial3, BigInt>,
}

impl Poly3 {
    /// Terms given as `((i, j, k), coefficient)` for `c · t^i x^j y^k`.
    /// Repeated monomials are summed.
    pub fn from_terms(terms: &[((usize, usize, usize), i64)]) -> Self {
        let mut p = Self::default();
        for &((i, j, k), c) in terms {
            *p.terms.entry(Monomial3::new(i, j, k)).or_insert_with(BigInt::zero) += c;
        }
        p.terms.retain(|_, c| !c.is_zero());
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial3, BigInt> {
        &self.terms
    }

    pub fn to_series(&self, bound: usize) -> WeightedSeries3 {
        WeightedSeries3 {
            bound,
            coeffs: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() <= bound)
                .map(|(m, c)| (*m, BigRational::from_integer(c.clone())))
                .collect(),
        }
    }

    /// Substitute univariate series for the three variables.
    pub fn eval_univariate(
        &self,
        t_val: &TruncatedSeries,
        x_val: &TruncatedSeries,
        y_val: &TruncatedSeries,
    ) -> Result<TruncatedSeries> {
        let n = t_val.order();
        let mut out = TruncatedSeries::zero(n);
        for (m, c) in &self.terms {
            let term = t_val
                .pow(m.t)
                .mul(&x_val.pow(m.x))?
                .mul(&y_val.pow(m.y))?
                .scale(&BigRational::from_integer(c.clone()));
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

/// A series in `(t, x, y)` truncated at total weighted degree
/// `i + 2j + 3k <= bound`. Zero coefficients are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSeries3 {
    bound: usize,
    coeffs: BTreeMap<Monomial3, BigRational>,
}

impl WeightedSeries3 {
    pub fn zero(bound: usize) -> Self {
        Self { bound, coeffs: BTreeMap::new() }
    }

    pub fn one(bound: usize) -> Self {
        Self::monomial(bound, Monomial3::ONE, BigRational::from_integer(1.into()))
    }

    pub fn monomial(bound: usize, m: Monomial3, c: BigRational) -> Self {
        let mut s = Self::zero(bound);
        if m.weight() <= bound && !c.is_zero() {
            s.coeffs.insert(m, c);
        }
        s
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Coefficient of `t^i x^j y^k`.
    ///
    /// # Panics
    /// If the monomial's weight exceeds the truncation bound.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> BigRational {
        let m = Monomial3::new(i, j, k);
        assert!(m.weight() <= self.bound, "monomial {m:?} beyond weighted bound {}", self.bound);
        self.coeffs.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms.
    pub fn terms(&self) -> &BTreeMap<Monomial3, BigRational> {
        &self.coeffs
    }

    fn check_bounds(&self, other: &Self) -> Result<()> {
        if self.bound != other.bound {
            return Err(SeriesError::BoundMismatch(self.bound, other.bound));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Result<Self> {
        self.check_bounds(other)?;
        let zero = BigRational::zero();
        let mut coeffs = BTreeMap::new();
        for m in self.coeffs.keys().chain(other.coeffs.keys()) {
            let a = self.coeffs.get(m).unwrap_or(&zero);
            let b = other.coeffs.get(m).unwrap_or(&zero);
            let c = f(a, b);
            if !c.is_zero() {
                coeffs.insert(*m, c);
            }
        }
        Ok(Self { bound: self.bound, coeffs })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut coeffs: BTreeMap<Monomial3, BigRational> = BTreeMap::new();
        for (ma, a) in &self.coeffs {
            for (mb, b) in &other.coeffs {
                let m = ma.plus(mb);
                if m.weight() <= self.bound {
                    *coeffs.entry(m).or_insert_with(BigRational::zero) += a * b;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(Self { bound: self.bound, coeffs })
    }

    /// Quotient by a series with nonzero constant term, solved monomial by
    /// monomial in increasing weight.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let b0 = other.coeffs.get(&Monomial3::ONE).ok_or(SeriesError::ZeroConstantTerm)?;
        let inv_b0 = b0.recip();
        let tail: Vec<(&Monomial3, &BigRational)> =
            other.coeffs.iter().filter(|(m, _)| **m != Monomial3::ONE).collect();
        let mut q: BTreeMap<Monomial3, BigRational> = BTreeMap::new();
        for m in Monomial3::up_to(self.bound) {
            let mut acc = self.coeffs.get(&m).cloned().unwrap_or_else(BigRational::zero);
            for (mb, b) in &tail {
                if let Some(rest) = m.checked_sub(mb) {
                    if let Some(qc) = q.get(&rest) {
                        acc -= *b * qc;
                    }
                }
            }
            if !acc.is_zero() {
                q.insert(m, acc * &inv_b0);
            }
        }
        Ok(Self { bound: self.bound, coeffs: q })
    }

    /// Substitute univariate series `t ← t_val, x ← x_val, y ← y_val`.
    ///
    /// Exactness through the output order `N` needs valuations at least
    /// 1, 2, 3 respectively (the zero series is always fine) and `bound >= N`.
    pub fn evaluate(
        &self,
        t_val: &TruncatedSeries,
        x_val: &TruncatedSeries,
        y_val: &TruncatedSeries,
    ) -> Result<TruncatedSeries> {
        let n = t_val.order();
        for (var, s, needed) in [("t", t_val, 1), ("x", x_val, 2), ("y", y_val, 3)] {
            if s.order() != n {
                return Err(SeriesError::BoundMismatch(s.order(), n));
            }
            if let Some(found) = s.valuation() {
                if found < needed {
                    return Err(SeriesError::ValuationTooLow { var, found, needed });
                }
            }
        }
        if self.bound < n {
            return Err(SeriesError::OrderTooHigh { requested: n, available: self.bound });
        }
        let powers = |s: &TruncatedSeries, max: usize| {
            let mut out = vec![TruncatedSeries::one(n)];
            for _ in 0..max {
                let next = out.last().expect("nonempty").mul(s).expect("same order");
                out.push(next);
            }
            out
        };
        let tp = powers(t_val, n);
        let xp = powers(x_val, n / 2);
        let yp = powers(y_val, n / 3);
        let mut out = TruncatedSeries::zero(n);
        for (m, c) in &self.coeffs {
            if m.weight() > n {
                continue;
            }
            let term = tp[m.t].mul(&xp[m.x])?.mul(&yp[m.y])?.scale(c);
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Sparse JSON: `[[i, j, k, coeff], ...]` over nonzero terms.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|(m, c)| serde_json::json!([m.t, m.x, m.y, rational_to_json(c)]))
                .collect(),
        )
    }
}

/// Maclaurin expansion of `numer / denom` through weighted degree `bound`.
pub fn expand_rational3(numer: &Poly3, denom: &Poly3, bound: usize) -> Result<WeightedSeries3> {
    numer.to_series(bound).div(&denom.to_series(bound))
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn square_of_one_minus_x() {
        let p = Poly3::from_terms(&[((0, 0, 0), 1), ((0, 1, 0), -1)]).to_series(8);
        let sq = p.mul(&p).unwrap();
        let expected = Poly3::from_terms(&[((0, 0, 0), 1), ((0, 1, 0), -2), ((0, 2, 0), 1)]);
        assert_eq!(sq, expected.to_series(8));
    }

    #[test]
    fn division_round_trips() {
        let num = Poly3::from_terms(&[((0, 0, 0), 1), ((1, 1, 0), 3)]);
        let den = Poly3::from_terms(&[((0, 0, 0), 1), ((1, 0, 0), -1), ((0, 0, 1), -2), ((1, 1, 1), 5)]);
        let q = expand_rational3(&num, &den, 12).unwrap();
        assert_eq!(q.mul(&den.to_series(12)).unwrap(), num.to_series(12));
    }

    #[test]
    fn zero_constant_denominator() {
        let num = Poly3::from_terms(&[((0, 0, 0), 1)]);
        let den = Poly3::from_terms(&[((1, 0, 0), 1)]);
        assert_eq!(expand_rational3(&num, &den, 5), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn monomials_by_weight() {
        let w4: Vec<_> = Monomial3::of_weight(4).collect();
        assert_eq!(w4.len(), 4); // t^4, t^2 x, x^2, t y
        assert!(w4.iter().all(|m| m.weight() == 4));
    }

    #[test]
    fn evaluate_checks_valuations() {
        let s = WeightedSeries3::one(5);
        let z = TruncatedSeries::var(5);
        let zero = TruncatedSeries::zero(5);
        assert!(matches!(
            s.evaluate(&zero, &z, &zero),
            Err(SeriesError::ValuationTooLow { var: "x", .. })
        ));
        let geo = WeightedSeries3::one(5)
            .div(&Poly3::from_terms(&[((0, 0, 0), 1), ((1, 0, 0), -1)]).to_series(5))
            .unwrap();
        assert_eq!(geo.evaluate(&z, &zero, &zero).unwrap(), TruncatedSeries::from_ints(5, &[1; 6]));
        assert_eq!(geo.coeff(3, 0, 0), rat(1));
    }
}
