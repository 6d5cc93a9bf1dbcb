//! Truncated bivariate power series with a total-degree validity order.
//!
//! A `BiSeries` of order `N` knows every coefficient of total degree at most
//! `N`.  Operations that shift indices (multiplication by a monomial) keep
//! track of the order through which the result is still trustworthy.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    order: u32,
    coeffs: BTreeMap<(u32, u32), Rational>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: u32,
    coeffs: Vec<(u32, u32, String, String)>,
}

impl Serialize for BiSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(n, m), c)| (n, m, c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for (n, m, nu, de) in repr.coeffs {
            let nu: BigInt = nu.parse().map_err(D::Error::custom)?;
            let de: BigInt = de.parse().map_err(D::Error::custom)?;
            if de.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.insert((n, m), Rational::new(nu, de));
        }
        Ok(BiSeries { order: repr.order, coeffs })
    }
}

impl BiSeries {
    pub fn zero(order: u32) -> Self {
        BiSeries { order, coeffs: BTreeMap::new() }
    }

    /// Build from explicit coefficients; entries beyond the order are dropped.
    pub fn from_coeffs(order: u32, coeffs: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .filter(|((n, m), c)| n + m <= order && !c.is_zero())
            .collect();
        BiSeries { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficient of `x^n y^m`; zero inside the valid range, `None` beyond it.
    pub fn coeff(&self, n: u32, m: u32) -> Option<Rational> {
        if n + m > self.order {
            return None;
        }
        Some(self.coeffs.get(&(n, m)).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.coeffs.iter()
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero_through_order(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Restrict to a smaller validity order.
    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        BiSeries {
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((n, m), _)| n + m <= order)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &BiSeries) -> BiSeries {
        let order = self.order.min(other.order);
        let mut coeffs = BTreeMap::new();
        for (&k, v) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if k.0 + k.1 <= order {
                *coeffs.entry(k).or_insert_with(Rational::zero) += v.clone();
            }
        }
        coeffs.retain(|_, c: &mut Rational| !c.is_zero());
        BiSeries { order, coeffs }
    }

    pub fn scale(&self, c: &Rational) -> BiSeries {
        if c.is_zero() {
            return BiSeries::zero(self.order);
        }
        BiSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by `x^i y^j`; validity improves by the shift because low-order
    /// output coefficients draw on even lower-order inputs.
    pub fn shift(&self, i: u32, j: u32) -> BiSeries {
        BiSeries {
            order: self.order + i + j,
            coeffs: self.coeffs.iter().map(|(&(n, m), v)| ((n + i, m + j), v.clone())).collect(),
        }
    }

    /// Apply `x^a y^b d/dx^... `-free diagonal weights: replaces each
    /// coefficient `c(n,m)` by `w(n, m) * c(n, m)`.
    pub fn weight(&self, w: impl Fn(u32, u32) -> Rational) -> BiSeries {
        let mut coeffs = BTreeMap::new();
        for (&(n, m), c) in &self.coeffs {
            let v = w(n, m) * c;
            if !v.is_zero() {
                coeffs.insert((n, m), v);
            }
        }
        BiSeries { order: self.order, coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat_i;

    #[test]
    fn shift_improves_validity_and_truncate_restricts() {
        let s = BiSeries::from_coeffs(2, [((0, 0), rat_i(1)), ((1, 0), rat_i(3))]);
        let t = s.shift(1, 0);
        assert_eq!(t.order(), 3);
        assert_eq!(t.coeff(1, 0), Some(rat_i(1)));
        assert_eq!(t.coeff(0, 0), Some(rat_i(0)));
        let u = t.truncate(1);
        assert_eq!(u.coeff(2, 0), None);
    }

    #[test]
    fn add_takes_min_order() {
        let a = BiSeries::from_coeffs(3, [((0, 0), rat_i(1))]);
        let b = BiSeries::from_coeffs(2, [((0, 0), rat_i(-1))]);
        let c = a.add(&b);
        assert_eq!(c.order(), 2);
        assert!(c.is_zero_through_order());
    }
}
