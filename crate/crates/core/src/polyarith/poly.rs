use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, Var, VarOrder};
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable of the ambient order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.0[v]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Greatest variable with positive exponent.
    fn top_var(&self) -> Option<Var> {
        self.0.iter().rposition(|&e| e > 0)
    }
}

impl Ord for Monomial {
    // lex, greatest variable compared first
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with rational coefficients.
///
/// Terms are stored in strictly decreasing monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial { nvars, terms: vec![(Monomial::one(nvars), c)] }
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(nvars: usize, v: Var) -> Self {
        Self::var_pow(nvars, v, 1)
    }

    pub fn var_pow(nvars: usize, v: Var, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[v] = e;
        Polynomial { nvars, terms: vec![(m, Rational::one())] }
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let nvars = m.0.len();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial { nvars, terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), nvars);
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Leading coefficient in the lex order (a rational number).
    pub fn leading_coefficient(&self) -> Rational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.0[v] > 0)
    }

    /// Variables occurring in the polynomial, ascending.
    pub fn variables(&self) -> Vec<Var> {
        (0..self.nvars).filter(|&v| self.involves(v)).collect()
    }

    /// Greatest variable occurring in the polynomial, `None` for constants.
    pub fn main_var(&self) -> Option<Var> {
        self.terms.first().and_then(|(m, _)| m.top_var())
    }

    pub fn mvar(&self) -> Result<Var> {
        self.main_var().ok_or(Error::ConstantPolynomial)
    }

    pub fn mdeg(&self) -> Result<u32> {
        let v = self.mvar()?;
        Ok(self.terms[0].0 .0[v])
    }

    /// Leading coefficient with respect to the main variable.
    pub fn init(&self) -> Result<Polynomial> {
        let v = self.mvar()?;
        Ok(self.leading_coeff_in(v))
    }

    /// `p - init(p) * mvar(p)^mdeg(p)`.
    pub fn tail(&self) -> Result<Polynomial> {
        let v = self.mvar()?;
        let d = self.terms[0].0 .0[v];
        let terms = self.terms.iter().filter(|(m, _)| m.0[v] != d).cloned().collect();
        Ok(Polynomial { nvars: self.nvars, terms })
    }

    /// Derivative with respect to the main variable.
    pub fn der(&self) -> Result<Polynomial> {
        let v = self.mvar()?;
        Ok(self.derivative(v))
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[v] > 0)
            .map(|(m, c)| {
                let mut m2 = m.clone();
                let e = m2.0[v];
                m2.0[v] = e - 1;
                (m2, c * Rational::from_integer(BigInt::from(e)))
            })
            .collect();
        // multiplying by the exponent keeps the order
        Polynomial { nvars: self.nvars, terms }
    }

    /// Coefficient of `v^d` as a polynomial free of `v`.
    pub fn coeff_in(&self, v: Var, d: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[v] == d)
            .map(|(m, c)| {
                let mut m2 = m.clone();
                m2.0[v] = 0;
                (m2, c.clone())
            })
            .collect::<Vec<_>>();
        // removing the v exponent from terms sharing it keeps them ordered
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn leading_coeff_in(&self, v: Var) -> Polynomial {
        self.coeff_in(v, self.degree(v))
    }

    /// Dense coefficient list in `v`, index = power of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Polynomial> {
        let d = self.degree(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[v] as usize;
            let mut m2 = m.clone();
            m2.0[v] = 0;
            buckets[e].push((m2, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_by(|a, b| b.0.cmp(&a.0));
                Polynomial { nvars: self.nvars, terms: ts }
            })
            .collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs(nvars: usize, v: Var, coeffs: &[Polynomial]) -> Polynomial {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                debug_assert_eq!(m.0[v], 0);
                let mut m2 = m.clone();
                m2.0[v] = e as u32;
                terms.push((m2, k.clone()));
            }
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { nvars, terms }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes a rational value for `v`.
    pub fn eval_var(&self, v: Var, value: &Rational) -> Polynomial {
        let d = self.degree(v);
        let mut powers = Vec::with_capacity(d as usize + 1);
        let mut acc = Rational::one();
        for _ in 0..=d {
            powers.push(acc.clone());
            acc *= value;
        }
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| {
                let mut m2 = m.clone();
                let e = m2.0[v] as usize;
                m2.0[v] = 0;
                (m2, c * &powers[e])
            }),
        )
    }

    /// Substitutes values for every variable that has `Some` entry.
    pub fn eval_partial(&self, point: &[Option<Rational>]) -> Polynomial {
        let mut p = self.clone();
        for (v, val) in point.iter().enumerate() {
            if let Some(val) = val {
                if p.involves(v) {
                    p = p.eval_var(v, val);
                }
            }
        }
        p
    }

    /// Full evaluation; `point` is indexed by variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[v].clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Evaluation in f64, for diagnostics and numeric oracles.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.to_f64().unwrap_or(f64::NAN);
                for (v, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        t *= point[v].powi(e as i32);
                    }
                }
                t
            })
            .sum()
    }

    /// Multivariate exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero(self.nvars));
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = &divisor.terms[0];
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            if !lm.divides(m) {
                return None;
            }
            let qm = m.div(lm);
            let qc = c / lc;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quotient.push((qm, qc));
        }
        // quotient terms were produced in decreasing order
        Some(Polynomial { nvars: self.nvars, terms: quotient })
    }

    /// Least common multiple of the coefficient denominators divided into the
    /// gcd of the numerators; `self / content` has coprime integer coefficients.
    pub fn rational_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        Rational::new(num, den)
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.rational_content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        if c.is_one() {
            return self.clone();
        }
        self.scale(&c.recip())
    }

    /// True when the polynomial has integer coefficients with gcd 1 and a
    /// positive leading coefficient.
    pub fn is_normalized(&self) -> bool {
        !self.is_zero() && self.leading_coefficient().is_positive() && self.rational_content().is_one()
    }

    /// Integer-coefficient multiple, the constant factor being positive.
    pub fn clear_denominators(&self) -> Polynomial {
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        if den.is_one() {
            self.clone()
        } else {
            self.scale(&Rational::from_integer(den))
        }
    }

    /// Sign of the leading coefficient: -1, 0 or 1.
    pub fn leading_sign(&self) -> i32 {
        match self.terms.first() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    pub fn display<'a>(&'a self, order: &'a VarOrder) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, order }
    }

    pub fn to_string_with(&self, order: &VarOrder) -> String {
        self.display(order).to_string()
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars, "polynomials over different orders");
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    terms.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    terms.push((mb.clone(), if negate_other { -cb } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        for (m, c) in &other.terms[j..] {
            terms.push((m.clone(), if negate_other { -c } else { c.clone() }));
        }
        Polynomial { nvars: self.nvars, terms }
    }

    fn multiply(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars, "polynomials over different orders");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m, c);
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { nvars: self.nvars, terms }
    }
}

impl Ord for Polynomial {
    /// Canonical order: by leading monomial and coefficient, term by term.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.multiply(rhs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { nvars: self.nvars, terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Canonical text form: terms in decreasing lex order, variables inside a
/// monomial from smallest to greatest, e.g. `8*x^3+2*a*x-b`.
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    order: &'a VarOrder,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(if abs.is_integer() {
                    abs.numer().to_string()
                } else {
                    format!("{}/{}", abs.numer(), abs.denom())
                });
            }
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.order.name(v).to_string()),
                    _ => factors.push(format!("{}^{}", self.order.name(v), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
