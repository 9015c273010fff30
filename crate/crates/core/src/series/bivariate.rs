use num_rational::BigRational;
use num_traits::Zero;

use super::{Result, SeriesError, TruncatedSeries};

/// A series in `(t, x)` stored as `Σ_k x^k · r_k(t)`, each `r_k` a
/// [`TruncatedSeries`] in `t`. Truncated at `x^{x_order}` and `t^{t_order}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    t_order: usize,
    rows: Vec<TruncatedSeries>,
}

impl BivariateSeries {
    pub fn zero(x_order: usize, t_order: usize) -> Self {
        Self { t_order, rows: vec![TruncatedSeries::zero(t_order); x_order + 1] }
    }

    pub fn one(x_order: usize, t_order: usize) -> Self {
        let mut s = Self::zero(x_order, t_order);
        s.rows[0] = TruncatedSeries::one(t_order);
        s
    }

    /// Rows are padded or cut to `x_order + 1`; each must have order `t_order`.
    pub fn from_rows(x_order: usize, t_order: usize, rows: Vec<TruncatedSeries>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.order() != t_order) {
            return Err(SeriesError::BoundMismatch(bad.order(), t_order));
        }
        let mut rows: Vec<_> = rows.into_iter().take(x_order + 1).collect();
        rows.resize(x_order + 1, TruncatedSeries::zero(t_order));
        Ok(Self { t_order, rows })
    }

    /// Embed a series in `x` alone (constant in `t`).
    pub fn from_x_series(x: &TruncatedSeries, t_order: usize) -> Self {
        let rows = x
            .coeffs()
            .iter()
            .map(|c| TruncatedSeries::constant(t_order, c.clone()))
            .collect();
        Self { t_order, rows }
    }

    /// `c · t^j · x^k`.
    pub fn monomial(x_order: usize, t_order: usize, c: BigRational, j: usize, k: usize) -> Self {
        let mut s = Self::zero(x_order, t_order);
        if k <= x_order {
            s.rows[k] = TruncatedSeries::monomial(t_order, c, j);
        }
        s
    }

    pub fn x_order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn t_order(&self) -> usize {
        self.t_order
    }

    /// The coefficient of `x^k`, a series in `t`.
    pub fn row(&self, k: usize) -> &TruncatedSeries {
        &self.rows[k]
    }

    pub fn rows(&self) -> &[TruncatedSeries] {
        &self.rows
    }

    /// Coefficient of `t^j x^k`.
    pub fn coeff(&self, j: usize, k: usize) -> &BigRational {
        self.rows[k].coeff(j)
    }

    fn check_bounds(&self, other: &Self) -> Result<()> {
        if self.x_order() != other.x_order() {
            return Err(SeriesError::BoundMismatch(self.x_order(), other.x_order()));
        }
        if self.t_order != other.t_order {
            return Err(SeriesError::BoundMismatch(self.t_order, other.t_order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(Self { t_order: self.t_order, rows })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?;
        Ok(Self { t_order: self.t_order, rows })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { t_order: self.t_order, rows: self.rows.iter().map(|r| r.scale(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let n = self.x_order();
        let mut out = Self::zero(n, self.t_order);
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.rows[i + j] = out.rows[i + j].add(&a.mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Division by a series whose `x^0` row is invertible in `t`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let d0 = &other.rows[0];
        if d0.constant_term().is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv_d0 = d0.recip()?;
        let mut q: Vec<TruncatedSeries> = Vec::with_capacity(self.rows.len());
        for k in 0..self.rows.len() {
            let mut acc = self.rows[k].clone();
            for i in 1..=k {
                if !other.rows[i].is_zero() {
                    acc = acc.sub(&other.rows[i].mul(&q[k - i])?)?;
                }
            }
            q.push(acc.mul(&inv_d0)?);
        }
        Ok(Self { t_order: self.t_order, rows: q })
    }

    /// Set `t = value` for a scalar, giving a series in `x`. Each row is
    /// treated as an exact polynomial in `t`.
    pub fn at_t(&self, value: &BigRational) -> TruncatedSeries {
        let coeffs = self.rows.iter().map(|row| {
            row.coeffs()
                .iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * value + c)
        });
        TruncatedSeries::new(self.x_order(), coeffs)
    }

    /// `Σ_k x_val^k · r_k(t_val)`, truncated at the order of `x_val`.
    ///
    /// `x_val` must have zero constant term so that only finitely many rows
    /// contribute. Each row `r_k` is used as an exact polynomial in `t`, which
    /// holds whenever `r_k` has degree at most `t_order` (for the
    /// flats-at-level-zero series, choose `t_order >= x_order`).
    pub fn substitute(&self, t_val: &TruncatedSeries, x_val: &TruncatedSeries) -> Result<TruncatedSeries> {
        let n = x_val.order();
        if t_val.order() != n {
            return Err(SeriesError::BoundMismatch(t_val.order(), n));
        }
        if !x_val.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let Some(val) = x_val.valuation() else {
            return Ok(self.rows[0].eval_polynomial_at(t_val));
        };
        let needed_rows = n / val;
        if needed_rows > self.x_order() {
            return Err(SeriesError::OrderTooHigh { requested: needed_rows, available: self.x_order() });
        }
        let mut out = TruncatedSeries::zero(n);
        let mut x_pow = TruncatedSeries::one(n);
        for k in 0..=needed_rows {
            let row = &self.rows[k];
            if !row.is_zero() {
                out = out.add(&row.eval_polynomial_at(t_val).mul(&x_pow)?)?;
            }
            x_pow = x_pow.mul(x_val)?;
        }
        Ok(out)
    }

    /// Nested JSON arrays, outer index the power of `x`, inner the power of `t`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.rows.iter().map(TruncatedSeries::to_json).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn geometric_in_tx() {
        // 1 / (1 - t x) = Σ t^k x^k
        let one = BivariateSeries::one(5, 5);
        let tx = BivariateSeries::monomial(5, 5, rat(1), 1, 1);
        let g = one.div(&one.sub(&tx).unwrap()).unwrap();
        for k in 0..=5 {
            for j in 0..=5 {
                let expected = if j == k { rat(1) } else { rat(0) };
                assert_eq!(g.coeff(j, k), &expected);
            }
        }
    }

    #[test]
    fn substitute_requires_zero_constant_term() {
        let one = BivariateSeries::one(3, 3);
        let t = TruncatedSeries::one(3);
        assert_eq!(one.substitute(&t, &TruncatedSeries::one(3)), Err(SeriesError::NonzeroConstantTerm));
    }

    #[test]
    fn substitute_evaluates_rows_as_polynomials() {
        // (1 + t) x  at t = 2, x = z  →  3z
        let s = BivariateSeries::monomial(3, 3, rat(1), 0, 1)
            .add(&BivariateSeries::monomial(3, 3, rat(1), 1, 1))
            .unwrap();
        let z = TruncatedSeries::var(3);
        let two = TruncatedSeries::constant(3, rat(2));
        assert_eq!(s.substitute(&two, &z).unwrap(), TruncatedSeries::from_ints(3, &[0, 3]));
    }

    #[test]
    fn substitute_refuses_silent_truncation() {
        let s = BivariateSeries::one(2, 2);
        let z = TruncatedSeries::var(5);
        let t = TruncatedSeries::zero(5);
        assert!(matches!(s.substitute(&t, &z), Err(SeriesError::OrderTooHigh { .. })));
    }
}
