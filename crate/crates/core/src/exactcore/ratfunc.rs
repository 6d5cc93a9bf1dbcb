//! Rational functions in canonical form: numerator and denominator coprime,
//! denominator primitive with positive leading coefficient.  Equal fractions
//! normalize to identical representations, so equality is structural.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactError, ExactResult, MultiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    /// Normalize `num/den` to canonical form.
    pub fn new(num: MultiPoly, den: MultiPoly) -> ExactResult<Self> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction { num: MultiPoly::zero(), den: MultiPoly::one() });
        }
        let g = MultiPoly::gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        let c = den.content();
        den = den.map_coeffs(|x| x / &c);
        num = num.map_coeffs(|x| x / &c);
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction { num: p, den: MultiPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MultiPoly::var(name))
    }

    /// Parse `p` or `p / q` where both parts follow [`MultiPoly::parse`].
    /// The denominator, when present, must be parenthesized or atomic.
    pub fn parse(src: &str, vars: &[&str]) -> ExactResult<Self> {
        // split on a top-level `//` marker is too clever; accept "num | den"
        match src.split_once('|') {
            None => Ok(Self::from_poly(MultiPoly::parse(src, vars)?)),
            Some((n, d)) => {
                RationalFunction::new(MultiPoly::parse(n, vars)?, MultiPoly::parse(d, vars)?)
            }
        }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn inverse(&self) -> ExactResult<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        RationalFunction::new(self.num.pow(n), self.den.pow(n)).expect("den nonzero")
    }

    /// Exact partial derivative via the quotient rule.
    pub fn partial(&self, var: &str) -> ExactResult<Self> {
        if !self.num.vars().iter().any(|v| v == var) && !self.den.vars().iter().any(|v| v == var) {
            return Err(ExactError::UnknownVariable(var.into()));
        }
        let dn = self.num.partial_or_zero(var);
        let dd = self.den.partial_or_zero(var);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        let den = &self.den * &self.den;
        RationalFunction::new(num, den)
    }

    /// Derivative treating an absent variable as constant.
    pub fn partial_or_zero(&self, var: &str) -> Self {
        self.partial(var).unwrap_or_else(|_| RationalFunction::zero())
    }

    /// All variables appearing in the canonical representation.
    pub fn vars(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .num
            .vars()
            .iter()
            .chain(self.den.vars().iter())
            .cloned()
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Exact composition: substitute a rational function for every variable.
    pub fn substitute(&self, bind: &BTreeMap<String, RationalFunction>) -> ExactResult<Self> {
        for v in self.vars() {
            if !bind.contains_key(&v) {
                return Err(ExactError::UnboundVariable(v));
            }
        }
        let sub_poly = |p: &MultiPoly| -> ExactResult<RationalFunction> {
            let mut acc = RationalFunction::zero();
            for (e, c) in p.terms() {
                let mut t = RationalFunction::constant(c.clone());
                for (i, &x) in e.iter().enumerate() {
                    if x > 0 {
                        t = &t * &bind[&p.vars()[i]].pow(x);
                    }
                }
                acc = &acc + &t;
            }
            Ok(acc)
        };
        let n = sub_poly(&self.num)?;
        let d = sub_poly(&self.den)?;
        if d.is_zero() {
            return Err(ExactError::SubstitutionPole);
        }
        n.div(&d)
    }

    pub fn div(&self, other: &RationalFunction) -> ExactResult<Self> {
        if other.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        RationalFunction::new(&self.num * &other.den, &self.den * &other.num)
    }

    /// Evaluate at a rational point; `None` when the denominator vanishes.
    pub fn eval(&self, bind: &BTreeMap<String, Rational>) -> ExactResult<Option<Rational>> {
        let d = self.den.eval(bind)?;
        if d.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.num.eval(bind)? / d))
    }

    /// Bind a subset of variables to rationals.
    pub fn specialize(&self, bind: &BTreeMap<String, Rational>) -> ExactResult<Self> {
        let d = self.den.specialize(bind);
        if d.is_zero() {
            return Err(ExactError::SubstitutionPole);
        }
        RationalFunction::new(self.num.specialize(bind), d)
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("den nonzero")
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("den nonzero")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<MultiPoly> for RationalFunction {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat_i;

    fn rf(src: &str) -> RationalFunction {
        RationalFunction::parse(src, &["x", "y", "l", "m"]).unwrap()
    }

    #[test]
    fn normalization_examples() {
        // common factor 2
        let a = RationalFunction::new(
            MultiPoly::parse("2*l", &["l", "m"]).unwrap(),
            MultiPoly::parse("4*m", &["l", "m"]).unwrap(),
        )
        .unwrap();
        assert_eq!(a, rf("l | 2*m"));
        // cancel l
        let b = RationalFunction::new(
            MultiPoly::parse("l^2 - l", &["l"]).unwrap(),
            MultiPoly::parse("l", &["l"]).unwrap(),
        )
        .unwrap();
        assert_eq!(b, rf("l - 1"));
        // an already canonical polynomial stays put
        let t = MultiPoly::parse(
            "l^2*(4*l-1)^3 - 2*(2 + 25*l*(20*l-1))*m - 3125*m^2",
            &["l", "m"],
        )
        .unwrap();
        let c = RationalFunction::new(t.clone(), MultiPoly::one()).unwrap();
        assert_eq!(c.num(), &t);
        assert_eq!(c.den(), &MultiPoly::one());
    }

    #[test]
    fn normalize_is_idempotent_and_sign_canonical() {
        let a = RationalFunction::new(
            MultiPoly::parse("x", &["x", "y"]).unwrap(),
            MultiPoly::parse("-2*y", &["x", "y"]).unwrap(),
        )
        .unwrap();
        let b = RationalFunction::new(
            MultiPoly::parse("-x", &["x", "y"]).unwrap(),
            MultiPoly::parse("2*y", &["x", "y"]).unwrap(),
        )
        .unwrap();
        assert_eq!(a, b);
        let renorm = RationalFunction::new(a.num().clone(), a.den().clone()).unwrap();
        assert_eq!(a, renorm);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(MultiPoly::one(), MultiPoly::zero()),
            Err(ExactError::ZeroDenominator)
        );
    }

    #[test]
    fn quotient_rule() {
        // d/dl of 25m/(2(l-1/4)^3) = -75m/(2(l-1/4)^4)
        let f = rf("25*m | 2*(l - 1/4)^3");
        let d = f.partial("l").unwrap();
        assert_eq!(d, rf("-75*m | 2*(l - 1/4)^4"));
        // d/dy of y^3/(10^5 x^5)
        let g = rf("y^3 | 100000*x^5");
        assert_eq!(g.partial("y").unwrap(), rf("3*y^2 | 100000*x^5"));
    }

    #[test]
    fn substitution_identity_and_composition() {
        let f = rf("l^2 + m | l - m");
        let mut id = BTreeMap::new();
        id.insert("l".to_string(), rf("l"));
        id.insert("m".to_string(), rf("m"));
        assert_eq!(f.substitute(&id).unwrap(), f);
    }

    #[test]
    fn eval_none_at_pole() {
        let f = rf("1 | x");
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), rat_i(0));
        assert_eq!(f.eval(&b).unwrap(), None);
        b.insert("x".to_string(), rat_i(2));
        assert_eq!(f.eval(&b).unwrap(), Some(crate::exactcore::rat(1, 2)));
    }
}
