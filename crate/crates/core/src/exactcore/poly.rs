//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Representation is canonical: variables are sorted by name and pruned to
//! the set actually occurring, exponent tuples match the variable arity and
//! no zero coefficient is stored.  Two equal polynomials therefore compare
//! equal structurally.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactError, ExactResult, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MultiPoly { vars: vec![name.to_string()], terms }
    }

    /// Monomial `c * prod vars[i]^exps[i]`.
    pub fn monomial(vars: &[&str], exps: &[u32], c: Rational) -> Self {
        assert_eq!(vars.len(), exps.len());
        let mut p = MultiPoly::constant(c);
        for (v, e) in vars.iter().zip(exps) {
            if *e > 0 {
                p = &p * &MultiPoly::var(v).pow(*e);
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        let key = vec![0u32; self.vars.len()];
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// As a constant, if the polynomial is one.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest exponent of `var`, 0 if absent.
    pub fn degree(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Remove unused variables and zero terms; sorts nothing (maps are ordered).
    fn prune(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(e, c)| {
                let e2: Vec<u32> = e.iter().zip(&used).filter(|(_, &u)| u).map(|(&x, _)| x).collect();
                (e2, c)
            })
            .collect();
        MultiPoly { vars, terms }
    }

    /// Re-express both polynomials over the union of their variables.
    fn unify(a: &MultiPoly, b: &MultiPoly) -> (Vec<String>, MultiPoly, MultiPoly) {
        let mut vars: Vec<String> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        vars.sort();
        vars.dedup();
        let ra = a.remap(&vars);
        let rb = b.remap(&vars);
        (vars, ra, rb)
    }

    fn remap(&self, vars: &[String]) -> MultiPoly {
        if self.vars == vars {
            return self.clone();
        }
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("remap superset"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = vec![0u32; vars.len()];
                for (j, &x) in e.iter().enumerate() {
                    e2[idx[j]] = x;
                }
                (e2, c.clone())
            })
            .collect();
        MultiPoly { vars: vars.to_vec(), terms }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut n = n;
        loop {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = &base * &base;
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), f(c))).collect(),
        }
        .prune()
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        self.map_coeffs(|x| x * c)
    }

    /// Exact partial derivative.
    pub fn partial(&self, var: &str) -> ExactResult<MultiPoly> {
        let i = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| ExactError::UnknownVariable(var.into()))?;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            let c2 = c * Rational::from_integer(BigInt::from(e[i]));
            terms.insert(e2, c2);
        }
        Ok(MultiPoly { vars: self.vars.clone(), terms }.prune())
    }

    /// Derivative that treats an absent variable as acting trivially (zero).
    pub fn partial_or_zero(&self, var: &str) -> MultiPoly {
        self.partial(var).unwrap_or_else(|_| MultiPoly::zero())
    }

    /// Evaluate with every variable bound to a rational.
    pub fn eval(&self, bind: &BTreeMap<String, Rational>) -> ExactResult<Rational> {
        for v in &self.vars {
            if !bind.contains_key(v) {
                return Err(ExactError::UnboundVariable(v.clone()));
            }
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    t *= pow_rat(&bind[&self.vars[i]], x);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Bind a subset of the variables to rationals, keeping the rest symbolic.
    pub fn specialize(&self, bind: &BTreeMap<String, Rational>) -> MultiPoly {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| !bind.contains_key(&self.vars[i]))
            .collect();
        let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if let Some(val) = bind.get(&self.vars[i]) {
                    coeff *= pow_rat(val, x);
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let e2: Vec<u32> = keep.iter().map(|&i| e[i]).collect();
            *terms.entry(e2).or_insert_with(Rational::zero) += coeff;
        }
        MultiPoly { vars, terms }.prune()
    }

    /// Substitute polynomials for all the variables.
    pub fn compose(&self, bind: &BTreeMap<String, MultiPoly>) -> ExactResult<MultiPoly> {
        for v in &self.vars {
            if !bind.contains_key(v) {
                return Err(ExactError::UnboundVariable(v.clone()));
            }
        }
        let mut acc = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    t = &t * &bind[&self.vars[i]].pow(x);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Rename a variable; the new name must not collide with an existing one.
    pub fn rename_var(&self, from: &str, to: &str) -> MultiPoly {
        if !self.vars.iter().any(|v| v == from) {
            return self.clone();
        }
        assert!(!self.vars.iter().any(|v| v == to), "rename collision");
        let mut pairs: Vec<(String, usize)> = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| (if v == from { to.to_string() } else { v.clone() }, i))
            .collect();
        pairs.sort();
        let vars: Vec<String> = pairs.iter().map(|(v, _)| v.clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let e2: Vec<u32> = pairs.iter().map(|&(_, i)| e[i]).collect();
                (e2, c.clone())
            })
            .collect();
        MultiPoly { vars, terms }
    }

    /// Leading coefficient in the lexicographic term order.
    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Positive rational `c` with `self = c * primitive(self)`; primitive has
    /// coprime integer coefficients and positive leading coefficient.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(&c.numer().abs());
            l = l.lcm(c.denom());
        }
        let c = Rational::new(g, l);
        if self.leading_coeff().is_negative() {
            -c
        } else {
            c
        }
    }

    /// `self / content(self)`: integer coprime coefficients, positive leading
    /// coefficient.  Zero stays zero.
    pub fn primitive_part(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let c = self.content();
        self.map_coeffs(|x| x / &c)
    }

    /// View as a univariate polynomial in `var` with `MultiPoly` coefficients,
    /// index = exponent of `var`.
    pub fn as_univariate(&self, var: &str) -> Vec<MultiPoly> {
        let d = self.degree(var) as usize;
        let mut out = vec![MultiPoly::zero(); d + 1];
        let pos = self.vars.iter().position(|v| v == var);
        match pos {
            None => {
                out[0] = self.clone();
            }
            Some(i) => {
                for (e, c) in &self.terms {
                    let k = e[i] as usize;
                    let vars: Vec<String> = self
                        .vars
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, v)| v.clone())
                        .collect();
                    let e2: Vec<u32> = e
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &x)| x)
                        .collect();
                    let mut term = BTreeMap::new();
                    term.insert(e2, c.clone());
                    let t = MultiPoly { vars, terms: term }.prune();
                    out[k] = &out[k] + &t;
                }
            }
        }
        out
    }

    /// Rebuild from univariate coefficients in `var`.
    pub fn from_univariate(coeffs: &[MultiPoly], var: &str) -> MultiPoly {
        let x = MultiPoly::var(var);
        let mut acc = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            acc = &acc + &(c * &x.pow(k as u32));
        }
        acc
    }

    /// Exact division; `None` when the division leaves a remainder.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.map_coeffs(|x| x / &c));
        }
        let (vars, a, b) = MultiPoly::unify(self, d);
        // work on raw term maps over the fixed unified variable space
        let mut rem: BTreeMap<Vec<u32>, Rational> = a.terms;
        let mut quo: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        let (lead_e, lead_c) = {
            let (e, c) = b.terms.iter().next_back().unwrap();
            (e.clone(), c.clone())
        };
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let mut qe = Vec::with_capacity(re.len());
            for (x, y) in re.iter().zip(&lead_e) {
                if x < y {
                    return None;
                }
                qe.push(x - y);
            }
            let qc = &rc / &lead_c;
            for (be, bc) in &b.terms {
                let e: Vec<u32> = qe.iter().zip(be).map(|(x, y)| x + y).collect();
                let entry = rem.entry(e).or_insert_with(Rational::zero);
                *entry -= &qc * bc;
            }
            rem.retain(|_, c| !c.is_zero());
            quo.insert(qe, qc);
        }
        Some(MultiPoly { vars, terms: quo }.prune())
    }

    /// Multiplicity of `factor` in `self` (largest `k` with `factor^k | self`).
    pub fn valuation(&self, factor: &MultiPoly) -> u32 {
        assert!(!factor.is_zero() && factor.as_constant().is_none());
        let mut v = 0;
        let mut cur = self.clone();
        if cur.is_zero() {
            return u32::MAX; // conventionally infinite
        }
        while let Some(next) = cur.div_exact(factor) {
            v += 1;
            cur = next;
        }
        v
    }

    /// Pseudo-remainder of `self` by `d` in variable `var`.
    fn pseudo_rem(&self, d: &MultiPoly, var: &str) -> MultiPoly {
        let mut r = self.clone();
        let db = d.degree(var);
        let bc = d.as_univariate(var)[db as usize].clone();
        let x = MultiPoly::var(var);
        loop {
            let dr = r.degree(var);
            if r.is_zero() || dr < db {
                return r;
            }
            let rc = r.as_univariate(var)[dr as usize].clone();
            r = &(&r * &bc) - &(&(&rc * &x.pow(dr - db)) * d);
            // degree strictly drops each round; loop terminates
        }
    }

    /// Content of the univariate view in `var` (gcd of the coefficients).
    fn content_wrt(&self, var: &str) -> MultiPoly {
        let mut g = MultiPoly::zero();
        for c in self.as_univariate(var) {
            if !c.is_zero() {
                g = MultiPoly::gcd(&g, &c);
            }
        }
        g
    }

    /// Primitive positive-leading multivariate gcd.
    pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        if a.is_zero() {
            return b.primitive_part();
        }
        if b.is_zero() {
            return a.primitive_part();
        }
        let pa = a.primitive_part();
        let pb = b.primitive_part();
        if pa.is_constant() || pb.is_constant() {
            return MultiPoly::one();
        }
        // main variable: any variable of pa; if absent from pb the gcd divides
        // the pb-content recursion anyway.
        let (_, ua, ub) = MultiPoly::unify(&pa, &pb);
        let var = ua
            .vars
            .iter()
            .find(|v| ua.degree(v) > 0 && ub.degree(v) > 0)
            .cloned();
        let var = match var {
            Some(v) => v,
            None => {
                // no common variable: gcd is the gcd of the contents, which
                // for primitive parts is 1
                return MultiPoly::one();
            }
        };
        let ca = ua.content_wrt(&var);
        let cb = ub.content_wrt(&var);
        let cg = MultiPoly::gcd(&ca, &cb);
        let mut p = ua.div_exact(&ca).expect("content divides");
        let mut q = ub.div_exact(&cb).expect("content divides");
        if p.degree(&var) < q.degree(&var) {
            std::mem::swap(&mut p, &mut q);
        }
        loop {
            let r = p.pseudo_rem(&q, &var);
            if r.is_zero() {
                let g = q.content_wrt(&var);
                let qp = q.div_exact(&g).expect("content divides");
                return (&cg * &qp).primitive_part();
            }
            if r.degree(&var) == 0 {
                return cg.primitive_part();
            }
            p = q;
            let rc = r.content_wrt(&var);
            q = r.div_exact(&rc).expect("content divides");
        }
    }

    /// Square-free part with respect to `var`: `self / gcd(self, d self/d var)`.
    pub fn square_free_part(&self, var: &str) -> ExactResult<MultiPoly> {
        let d = self.partial(var)?;
        if d.is_zero() {
            return Ok(self.primitive_part());
        }
        let g = MultiPoly::gcd(self, &d);
        Ok(self
            .div_exact(&g)
            .expect("gcd divides")
            .primitive_part())
    }

    /// True when gcd(self, d self/d var) is constant.
    pub fn is_square_free(&self, var: &str) -> ExactResult<bool> {
        let d = self.partial(var)?;
        if d.is_zero() {
            return Ok(self.degree(var) == 0);
        }
        Ok(MultiPoly::gcd(self, &d).is_constant())
    }

    /// Parse an integer/rational polynomial expression: `+ - * ^ ( )`,
    /// integer literals, `a/b` with integer `b` (constant divisor), and
    /// variable names.  Implicit multiplication is not supported.
    pub fn parse(src: &str, vars: &[&str]) -> ExactResult<MultiPoly> {
        Parser { src: src.as_bytes(), pos: 0, vars }.parse_all()
    }
}

fn pow_rat(b: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (vars, a, b) = MultiPoly::unify(self, rhs);
        let mut terms = a.terms;
        for (e, c) in b.terms {
            let entry = terms.entry(e).or_insert_with(Rational::zero);
            *entry += c;
        }
        MultiPoly { vars, terms }.prune()
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.map_coeffs(|c| -c)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let (vars, a, b) = MultiPoly::unify(self, rhs);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        MultiPoly { vars, terms }.prune()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest term first reads naturally
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let ac = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            if !ac.is_one() || is_const {
                write!(f, "{}", ac)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut need_star = false;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if need_star {
                    write!(f, "*")?;
                }
                need_star = true;
                write!(f, "{}", self.vars[i])?;
                if x > 1 {
                    write!(f, "^{}", x)?;
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn parse_all(&mut self) -> ExactResult<MultiPoly> {
        let e = self.expr()?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(ExactError::Parse(format!(
                "trailing input at byte {}",
                self.pos
            )));
        }
        Ok(e)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> ExactResult<MultiPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> ExactResult<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    let c = d.as_constant().filter(|c| !c.is_zero()).ok_or_else(|| {
                        ExactError::Parse("division only by nonzero constants".into())
                    })?;
                    acc = acc.map_coeffs(|x| x / &c);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> ExactResult<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(ExactError::Parse("expected exponent".into()));
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| ExactError::Parse("bad exponent".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> ExactResult<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(ExactError::Parse("expected )".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| ExactError::Parse("bad integer".into()))?;
                Ok(MultiPoly::constant(Rational::from_integer(n)))
            }
            Some(c) if (c as char).is_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && ((self.src[self.pos] as char).is_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if self.vars.contains(&name) {
                    Ok(MultiPoly::var(name))
                } else {
                    Err(ExactError::Parse(format!("unknown symbol `{name}`")))
                }
            }
            other => Err(ExactError::Parse(format!("unexpected {:?}", other.map(|c| c as char)))),
        }
    }
}

// JSON form: variable list plus term array with decimal num/den strings.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<(Vec<u32>, String, String)>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.numer().to_string(), c.denom().to_string()))
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for (e, n, de) in repr.terms {
            if e.len() != repr.vars.len() {
                return Err(D::Error::custom("exponent arity mismatch"));
            }
            let num: BigInt = n.parse().map_err(D::Error::custom)?;
            let den: BigInt = de.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.insert(e, Rational::new(num, den));
        }
        Ok(MultiPoly { vars: repr.vars, terms }.prune())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{rat, rat_i};

    fn p(src: &str) -> MultiPoly {
        MultiPoly::parse(src, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn arithmetic_and_canonical_form() {
        let a = p("(x+y)^2");
        let b = p("x^2 + 2*x*y + y^2");
        assert_eq!(a, b);
        assert_eq!(&a - &b, MultiPoly::zero());
        assert!((&p("x") - &p("x")).vars().is_empty());
    }

    #[test]
    fn partial_derivative() {
        assert_eq!(p("x^2*y").partial("x").unwrap(), p("2*x*y"));
        assert_eq!(p("y^3/1").partial("y").unwrap(), p("3*y^2"));
        assert!(p("x").partial("w").is_err());
    }

    #[test]
    fn gcd_cancels_common_factor() {
        let a = &p("x^2 - y^2") * &p("x + 1");
        let b = &p("x + y") * &p("x + 1");
        let g = MultiPoly::gcd(&a, &b);
        assert_eq!(g, &p("x + y") * &p("x + 1"));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(MultiPoly::gcd(&p("x"), &p("y")), MultiPoly::one());
        assert_eq!(MultiPoly::gcd(&p("x+1"), &p("x+2")), MultiPoly::one());
    }

    #[test]
    fn content_and_primitive() {
        let a = p("4*x + 6*y");
        assert_eq!(a.content(), rat_i(2));
        assert_eq!(a.primitive_part(), p("2*x + 3*y"));
        let b = p("-4*x - 6*y");
        assert_eq!(b.content(), rat_i(-2));
        assert_eq!(b.primitive_part(), p("2*x + 3*y"));
        let c = p("x/2 + y/3");
        assert_eq!(c.content(), rat(1, 6));
    }

    #[test]
    fn division_and_valuation() {
        let a = p("x^3*y - x^2*y^2");
        assert_eq!(a.div_exact(&p("x^2")).unwrap(), p("x*y - y^2"));
        assert!(p("x^2 + 1").div_exact(&p("x")).is_none());
        assert_eq!(p("x^3*(x+y)^2").valuation(&p("x+y")), 2);
        assert_eq!(p("x^3*(x+y)^2").valuation(&p("x")), 3);
        assert_eq!(p("x^3*(x+y)^2").valuation(&p("y+1")), 0);
    }

    #[test]
    fn square_free() {
        let a = &p("x - 1").pow(3) * &p("x - 2");
        assert!(!a.is_square_free("x").unwrap());
        let sf = a.square_free_part("x").unwrap();
        assert_eq!(sf, &p("x - 1") * &p("x - 2"));
        assert!(p("x^2 - 3*x + 2").is_square_free("x").unwrap());
    }

    #[test]
    fn eval_and_specialize() {
        let a = p("x^2*y + z");
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), rat_i(2));
        b.insert("y".to_string(), rat(1, 2));
        b.insert("z".to_string(), rat_i(3));
        assert_eq!(a.eval(&b).unwrap(), rat_i(5));
        let mut s = BTreeMap::new();
        s.insert("x".to_string(), rat_i(2));
        assert_eq!(a.specialize(&s), MultiPoly::parse("4*y + z", &["y", "z"]).unwrap());
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!(MultiPoly::parse("x + ", &["x"]).is_err());
        assert!(MultiPoly::parse("w", &["x"]).is_err());
        assert!(MultiPoly::parse("x/(y)", &["x", "y"]).is_err());
        assert!(MultiPoly::parse("1/0", &["x"]).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let a = p("x^2/3 - 7*y*z^4 + 1/2");
        let s = serde_json::to_string(&a).unwrap();
        let b: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
