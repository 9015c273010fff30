//! Exact truncated power series over arbitrary-precision rationals.
//!
//! Every series carries an explicit truncation order `N` and stores the
//! coefficients of `z^0..=z^N`. Binary operations require equal orders and
//! fail otherwise; lowering an order is always an explicit [`TruncatedSeries::truncate`].

mod bivariate;
mod trivariate;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use bivariate::BivariateSeries;
pub use trivariate::{expand_rational3, Monomial3, Poly3, WeightedSeries3};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation bounds differ: {0} vs {1}")]
    BoundMismatch(usize, usize),
    #[error("divisor has zero constant term")]
    ZeroConstantTerm,
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstantTerm(String),
    #[error("substituted series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("cannot divide by z^{shift}: coefficient of z^{index} is nonzero")]
    NotDivisible { shift: usize, index: usize },
    #[error("requested order {requested} exceeds available order {available}")]
    OrderTooHigh { requested: usize, available: usize },
    #[error("substituted series for {var} has valuation {found}, need at least {needed}")]
    ValuationTooLow { var: &'static str, found: usize, needed: usize },
    #[error("malformed series JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, SeriesError>;

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A power series `Σ_{k ≤ N} a_k z^k` known exactly modulo `z^{N+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut c: Vec<BigRational> = coeffs.into_iter().take(order + 1).collect();
        c.resize(order + 1, BigRational::zero());
        Self { coeffs: c }
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::new(order, coeffs.iter().map(|&c| rat(c)))
    }

    pub fn from_bigints(order: usize, coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::new(order, coeffs.into_iter().map(BigRational::from_integer))
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, std::iter::empty())
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        Self::new(order, std::iter::once(c))
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    /// `c · z^k` (zero if `k > order`).
    pub fn monomial(order: usize, c: BigRational, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `z`.
    pub fn var(order: usize) -> Self {
        Self::monomial(order, BigRational::one(), 1)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^k`.
    ///
    /// # Panics
    /// If `k` exceeds the truncation order; such coefficients are unknown.
    pub fn coeff(&self, k: usize) -> &BigRational {
        assert!(k <= self.order(), "coefficient z^{k} beyond truncation order {}", self.order());
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficients as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    fn check_bounds(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(SeriesError::BoundMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// `q` with `q · other ≡ self`; needs a unit constant term in `other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let b0 = other.constant_term();
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv_b0 = b0.recip();
        let n = self.order();
        let mut q: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                let b = &other.coeffs[i];
                if !b.is_zero() {
                    acc -= b * &q[k - i];
                }
            }
            q.push(acc * &inv_b0);
        }
        Ok(Self { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        acc
    }

    /// Square root with constant term 1, by Newton iteration
    /// `s ← (s + a/s) / 2`, doubling the number of correct coefficients each
    /// round.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::SqrtConstantTerm(self.constant_term().to_string()));
        }
        let n = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut s = Self::one(0);
        let mut prec = 1usize;
        while prec < n + 1 {
            prec = (2 * prec).min(n + 1);
            let s_ext = s.extend(prec - 1);
            let a = self.truncate(prec - 1)?;
            s = s_ext.add(&a.div(&s_ext)?)?.scale(&half);
        }
        Ok(s)
    }

    /// `a(z^k)`, truncated at the same order.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            if m * k > n {
                break;
            }
            out[m * k] = c.clone();
        }
        Self { coeffs: out }
    }

    /// Lower the truncation order.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(SeriesError::OrderTooHigh { requested: order, available: self.order() });
        }
        Ok(Self { coeffs: self.coeffs[..=order].to_vec() })
    }

    /// Zero-pad to a higher order. Only meaningful when `self` is known to be
    /// a polynomial of degree `<= self.order()`, or for Newton seeds.
    pub fn extend(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.iter().cloned())
    }

    /// Multiply by `z^k`; the order is unchanged.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if i + k > n {
                break;
            }
            out[i + k] = self.coeffs[i].clone();
        }
        Self { coeffs: out }
    }

    /// Divide by `z^k`; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(SeriesError::OrderTooHigh { requested: k, available: self.order() });
        }
        if let Some(index) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible { shift: k, index });
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Evaluate the polynomial `Σ_{k ≤ N} a_k X^k` at a series `x`, where the
    /// coefficients of `self` are taken as an exact polynomial.
    pub fn eval_polynomial_at(&self, x: &Self) -> Self {
        let mut acc = Self::zero(x.order());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).expect("same order");
            acc.coeffs[0] += c;
        }
        acc
    }

    /// JSON array: integers bare, other rationals as `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(rational_to_json).collect())
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| SeriesError::Json("expected an array".into()))?;
        if arr.is_empty() {
            return Err(SeriesError::Json("empty coefficient list".into()));
        }
        let coeffs = arr.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs.len() - 1, coeffs))
    }
}

pub(crate) fn rational_to_json(c: &BigRational) -> serde_json::Value {
    if c.is_integer() {
        let n: serde_json::Number =
            c.to_integer().to_string().parse().expect("integer literal is a JSON number");
        serde_json::Value::Number(n)
    } else {
        serde_json::Value::String(format!("{}/{}", c.numer(), c.denom()))
    }
}

pub(crate) fn rational_from_json(v: &serde_json::Value) -> Result<BigRational> {
    let parse_int = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|e| SeriesError::Json(format!("bad integer {s:?}: {e}")))
    };
    match v {
        serde_json::Value::Number(n) => Ok(BigRational::from_integer(parse_int(&n.to_string())?)),
        serde_json::Value::String(s) => match s.split_once('/') {
            Some((p, q)) => {
                let q = parse_int(q)?;
                if q.is_zero() {
                    return Err(SeriesError::Json("zero denominator".into()));
                }
                Ok(BigRational::new(parse_int(p)?, q))
            }
            None => Ok(BigRational::from_integer(parse_int(s)?)),
        },
        other => Err(SeriesError::Json(format!("unexpected coefficient {other}"))),
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(z^{})", self, self.order() + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => write!(f, "z^{k}")?,
                _ => write!(f, "{a}*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
