//! Named generating functions, each expanded exactly.
//!
//! Whenever a function has two independent constructions both are built and
//! compared coefficient by coefficient; a disagreement is an error, never a
//! silent preference for one side.

mod a132;
mod b231;
mod growth;

use std::fmt;

use thiserror::Error;

use crate::enumerate::CycleSet;
use crate::series::{rat, BivariateSeries, SeriesError, TruncatedSeries, WeightedSeries3};

pub use a132::{a13_132, a13_132_closed, a13_132_proof_printed_variant, a13_132_structural, a3_132};
pub use b231::{
    a231_subset, a231_subset_checked, a231_table_closed_form, b231, b231_closed, b231_structural, components_231,
    Components231,
};
pub use growth::{growth_estimate, GrowthEstimate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("{name}: the two constructions disagree ({detail})")]
    Mismatch { name: &'static str, detail: String },
    #[error("coefficient {0} is zero")]
    ZeroCoefficient(usize),
    #[error("coefficient ratio at {0} is negative")]
    NegativeRatio(usize),
    #[error("unknown generating function {0:?}")]
    UnknownName(String),
    #[error("{0} needs a cycle-length set")]
    MissingCycles(String),
    #[error("cycle lengths must lie in {{1,2,3}}, got {0}")]
    UnsupportedCycles(CycleSet),
}

pub type Result<T> = std::result::Result<T, GfError>;

/// `c(x) = (1 - sqrt(1 - 4x)) / (2x)`.
pub fn catalan(order: usize) -> Result<TruncatedSeries> {
    let root = TruncatedSeries::from_ints(order + 1, &[1, -4]).sqrt()?;
    let numer = TruncatedSeries::one(order + 1).sub(&root)?;
    Ok(numer.shift_down(1)?.scale(&num_rational::BigRational::new(1.into(), 2.into())))
}

/// `(1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2)`, the Motzkin numbers.
pub fn motzkin(order: usize) -> Result<TruncatedSeries> {
    let root = TruncatedSeries::from_ints(order + 2, &[1, -2, -3]).sqrt()?;
    let numer = TruncatedSeries::from_ints(order + 2, &[1, -1]).sub(&root)?;
    Ok(numer.shift_down(2)?.scale(&num_rational::BigRational::new(1.into(), 2.into())))
}

/// `m(t, x) = 2 / (1 - 2tx + x + sqrt(1 - 2x - 3x^2))`: the coefficient of
/// `t^j x^k` counts Motzkin paths of length `k` with `j` flats at level zero.
pub fn motzkin_flats(x_order: usize, t_order: usize) -> Result<BivariateSeries> {
    let root = TruncatedSeries::from_ints(x_order, &[1, -2, -3]).sqrt()?;
    let in_x = TruncatedSeries::from_ints(x_order, &[1, 1]).add(&root)?;
    let denom = BivariateSeries::from_x_series(&in_x, t_order)
        .sub(&BivariateSeries::monomial(x_order, t_order, rat(2), 1, 1))?;
    let two = BivariateSeries::one(x_order, t_order).scale(&rat(2));
    Ok(two.div(&denom)?)
}

/// Identifiers accepted by [`build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfId {
    Catalan,
    Motzkin,
    MotzkinFlats,
    I231,
    S231,
    Q231,
    R231,
    B231,
    A231Subset(CycleSet),
    A3_132,
    A13_132,
    A13_132Closed,
    A13_132Structural,
}

impl GfId {
    pub const NAMES: [&'static str; 13] = [
        "catalan",
        "motzkin",
        "motzkin_flats",
        "i_231",
        "s_231",
        "q_231",
        "r_231",
        "b_231",
        "a231",
        "a3_132",
        "a13_132",
        "a13_132_closed",
        "a13_132_structural",
    ];

    /// Case-insensitive; `a231` needs `cycles`.
    pub fn from_name(name: &str, cycles: Option<&CycleSet>) -> Result<Self> {
        let id = match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "catalan" => GfId::Catalan,
            "motzkin" => GfId::Motzkin,
            "motzkin_flats" => GfId::MotzkinFlats,
            "i_231" => GfId::I231,
            "s_231" => GfId::S231,
            "q_231" => GfId::Q231,
            "r_231" => GfId::R231,
            "b_231" => GfId::B231,
            "a231" | "a231_subset" => {
                let s = cycles.ok_or_else(|| GfError::MissingCycles(name.to_string()))?;
                GfId::A231Subset(s.clone())
            }
            "a3_132" => GfId::A3_132,
            "a13_132" => GfId::A13_132,
            "a13_132_closed" => GfId::A13_132Closed,
            "a13_132_structural" => GfId::A13_132Structural,
            _ => return Err(GfError::UnknownName(name.to_string())),
        };
        Ok(id)
    }
}

impl fmt::Display for GfId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfId::Catalan => f.write_str("catalan"),
            GfId::Motzkin => f.write_str("motzkin"),
            GfId::MotzkinFlats => f.write_str("motzkin_flats"),
            GfId::I231 => f.write_str("i_231"),
            GfId::S231 => f.write_str("s_231"),
            GfId::Q231 => f.write_str("q_231"),
            GfId::R231 => f.write_str("r_231"),
            GfId::B231 => f.write_str("b_231"),
            GfId::A231Subset(s) => write!(f, "a231{s}"),
            GfId::A3_132 => f.write_str("a3_132"),
            GfId::A13_132 => f.write_str("a13_132"),
            GfId::A13_132Closed => f.write_str("a13_132_closed"),
            GfId::A13_132Structural => f.write_str("a13_132_structural"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfValue {
    Univariate(TruncatedSeries),
    Bivariate(BivariateSeries),
    Trivariate(WeightedSeries3),
}

impl GfValue {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            GfValue::Univariate(s) => s.to_json(),
            GfValue::Bivariate(s) => s.to_json(),
            GfValue::Trivariate(s) => s.to_json(),
        }
    }

    pub fn as_univariate(&self) -> Option<&TruncatedSeries> {
        match self {
            GfValue::Univariate(s) => Some(s),
            _ => None,
        }
    }
}

/// Expand a named function. `order` is the truncation order for univariate
/// results, both orders for `m(t, x)`, and the weighted bound for the
/// trivariate ones.
pub fn build(id: &GfId, order: usize) -> Result<GfValue> {
    let uni = GfValue::Univariate;
    Ok(match id {
        GfId::Catalan => uni(catalan(order)?),
        GfId::Motzkin => uni(motzkin(order)?),
        GfId::MotzkinFlats => GfValue::Bivariate(motzkin_flats(order, order)?),
        GfId::I231 => GfValue::Trivariate(components_231(order)?.i),
        GfId::S231 => GfValue::Trivariate(components_231(order)?.s),
        GfId::Q231 => GfValue::Trivariate(components_231(order)?.q),
        GfId::R231 => GfValue::Trivariate(components_231(order)?.r),
        GfId::B231 => GfValue::Trivariate(b231(order)?),
        GfId::A231Subset(s) => uni(a231_subset(s, order)?),
        GfId::A3_132 => uni(a3_132(order)?),
        GfId::A13_132 => uni(a13_132(order)?),
        GfId::A13_132Closed => uni(a13_132_closed(order)?),
        GfId::A13_132Structural => uni(a13_132_structural(order)?),
    })
}

/// First index where two equal-order series differ.
pub(crate) fn first_difference(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<usize> {
    a.coeffs().iter().zip(b.coeffs()).position(|(x, y)| x != y)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::lattice::{catalan_number, motzkin_flat_count};

    fn ints(s: &TruncatedSeries) -> Vec<BigInt> {
        s.to_integers().expect("integer coefficients")
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn catalan_coefficients_and_functional_equation() {
        let c = catalan(20).unwrap();
        assert_eq!(ints(&c.truncate(5).unwrap()), big(&[1, 1, 2, 5, 14, 42]));
        // independent recurrence C_{n+1} = Σ C_i C_{n-i}
        let mut rec = vec![BigInt::from(1)];
        for n in 0..20 {
            let next: BigInt = (0..=n).map(|i| &rec[i] * &rec[n - i]).sum();
            rec.push(next);
        }
        assert_eq!(ints(&c), rec[..=20].to_vec());
        let x = TruncatedSeries::var(20);
        let lhs = x.mul(&c.mul(&c).unwrap()).unwrap().sub(&c).unwrap().add(&TruncatedSeries::one(20)).unwrap();
        assert!(lhs.is_zero());
        for n in 0..=20 {
            assert_eq!(ints(&c)[n], BigInt::from(catalan_number(n)));
        }
    }

    #[test]
    fn motzkin_numbers() {
        assert_eq!(ints(&motzkin(6).unwrap()), big(&[1, 1, 2, 4, 9, 21, 51]));
    }

    #[test]
    fn motzkin_flats_matches_path_count_and_functional_equation() {
        let m = motzkin_flats(12, 12).unwrap();
        for k in 0..=12 {
            for j in 0..=12 {
                assert_eq!(m.coeff(j, k), &num_rational::BigRational::from_integer(motzkin_flat_count(k, j).into()));
            }
        }
        assert_eq!(m.at_t(&rat(1)), motzkin(12).unwrap());
        // m = 1 + t x m + x^2 m m(1, x)
        let one = BivariateSeries::one(12, 12);
        let tx = BivariateSeries::monomial(12, 12, rat(1), 1, 1);
        let xx = BivariateSeries::monomial(12, 12, rat(1), 0, 2);
        let m1 = BivariateSeries::from_x_series(&motzkin(12).unwrap(), 12);
        let rhs = one
            .add(&tx.mul(&m).unwrap())
            .unwrap()
            .add(&xx.mul(&m).unwrap().mul(&m1).unwrap())
            .unwrap();
        assert_eq!(rhs, m);
    }

    #[test]
    fn names_resolve() {
        for name in GfId::NAMES {
            let cycles = CycleSet::up_to_three();
            let id = GfId::from_name(name, Some(&cycles)).unwrap();
            assert!(build(&id, 6).is_ok(), "{name}");
        }
        assert!(matches!(GfId::from_name("a231", None), Err(GfError::MissingCycles(_))));
        assert!(matches!(GfId::from_name("nope", None), Err(GfError::UnknownName(_))));
    }
}
