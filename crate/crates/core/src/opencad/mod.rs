//! Open CAD machinery: open projection, derivative closure, augmented
//! projected factors, sample points in the open cells, and sign formulas.
//!
//! Factor sets are coprime squarefree bases rather than irreducible
//! factorizations; every basis element is primitive with a positive leading
//! coefficient.

mod formula;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use formula::{generate_formula, revise_formula, revise_formula_keeping, SignAtom, SignFormula};

use crate::error::{Error, Result};
use crate::polyarith::{discriminant, gcd_free_basis, resultant, squarefree_part, Polynomial, Rational, Var};
use crate::realroots::isolate_univariate;

/// Coprime squarefree basis of the non-constant parts of `a`.
pub fn factor_set(a: &[Polynomial]) -> Vec<Polynomial> {
    gcd_free_basis(a.iter())
}

/// Open projection of the product of `a` with respect to `v`, which must be
/// at least every variable occurring in `a`.
pub fn oproj(a: &[Polynomial], v: Var) -> Vec<Polynomial> {
    let basis = factor_set(a);
    let (cd, c0): (Vec<_>, Vec<_>) = basis.into_iter().partition(|f| f.involves(v));
    let mut out = c0;
    for (i, f) in cd.iter().enumerate() {
        for g in &cd[i + 1..] {
            out.push(resultant(f, g, v).expect("both involve v"));
        }
        out.push(f.leading_coeff_in(v));
        if f.degree(v) > 1 {
            out.push(discriminant(f, v).expect("positive degree"));
        }
    }
    factor_set(&out)
}

/// Every `p` together with its successive derivatives in `x` of degree at
/// least one; members free of `x` are kept as they are. Constants dropped,
/// members normalized.
pub fn derivative_closure(a: &[Polynomial], x: Var) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for p in a {
        let mut q = p.clone();
        loop {
            if !q.is_constant() {
                out.push(q.normalized());
            }
            if q.degree(x) <= 1 {
                break;
            }
            q = q.derivative(x);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn greatest_var(a: &[Polynomial]) -> Option<Var> {
    a.iter().filter_map(|p| p.main_var()).max()
}

/// Open augmented projected factors of `a`.
pub fn oaf(a: &[Polynomial]) -> Vec<Polynomial> {
    let Some(v) = greatest_var(a) else {
        return Vec::new();
    };
    let c = factor_set(&derivative_closure(a, v));
    let proj = oproj(&c, v);
    let mut out = c;
    out.extend(oaf(&proj));
    out.sort();
    out.dedup();
    out
}

/// Rational point given by values of a list of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SamplePoint {
    pub vars: Vec<Var>,
    pub coords: Vec<Rational>,
}

impl SamplePoint {
    pub fn empty() -> Self {
        SamplePoint { vars: Vec::new(), coords: Vec::new() }
    }

    pub fn value(&self, v: Var) -> Option<&Rational> {
        self.vars.iter().position(|&w| w == v).map(|i| &self.coords[i])
    }

    /// Substitutes the point's coordinates into `p`.
    pub fn substitute(&self, p: &Polynomial) -> Polynomial {
        self.vars.iter().zip(&self.coords).fold(p.clone(), |acc, (&v, c)| acc.eval_var(v, c))
    }

    /// Value of `p`, which must only involve the point's variables.
    pub fn eval(&self, p: &Polynomial) -> Rational {
        self.substitute(p).constant_value().expect("polynomial involves only the sample variables")
    }

    fn extended(&self, v: Var, c: Rational) -> SamplePoint {
        let mut s = self.clone();
        s.vars.push(v);
        s.coords.push(c);
        s
    }
}

fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

fn ceil(x: &Rational) -> BigInt {
    x.numer().div_ceil(x.denom())
}

/// One rational point in each open interval cut out by the real roots of the
/// univariate polynomials `ps` (in `v`), in increasing order.
fn line_points(ps: &[Polynomial], v: Var, nvars: usize) -> Vec<Rational> {
    let prod = ps.iter().filter(|p| !p.is_constant()).fold(Polynomial::one(nvars), |acc, p| &acc * p);
    if prod.is_constant() {
        return vec![Rational::zero()];
    }
    let sq = squarefree_part(&prod).expect("nonzero");
    let boxes = isolate_univariate(&sq).expect("nonzero univariate");
    if boxes.is_empty() {
        return vec![Rational::zero()];
    }
    let ivs: Vec<_> = boxes.iter().map(|b| b.interval(v).clone()).collect();
    let one = Rational::one();
    let mut out = vec![Rational::from_integer(floor(&ivs[0].lo)) - &one];
    for w in ivs.windows(2) {
        out.push((&w[0].hi + &w[1].lo) / Rational::from_integer(2.into()));
    }
    out.push(Rational::from_integer(ceil(&ivs[ivs.len() - 1].hi)) + &one);
    debug_assert!(out.iter().all(|x| !sq.eval_var(v, x).constant_value().expect("univariate").is_zero()));
    out
}

/// Rational points, over the variables `vars` (ascending), meeting every
/// connected component of the set where no member of `a` vanishes. Members
/// of `a` must only involve variables of `vars`.
pub fn sample_points(a: &[Polynomial], vars: &[Var]) -> Vec<SamplePoint> {
    let Some((&v, rest)) = vars.split_last() else {
        return vec![SamplePoint::empty()];
    };
    let nvars = a.first().map(|p| p.nvars()).unwrap_or(0);
    let a = factor_set(a);
    let top: Vec<Polynomial> = a.iter().filter(|p| p.involves(v)).cloned().collect();
    let below = oproj(&a, v);
    let mut out = Vec::new();
    for s in sample_points(&below, rest) {
        let fibre: Vec<Polynomial> = top.iter().map(|p| s.substitute(p)).collect();
        for c in line_points(&fibre, v, nvars) {
            out.push(s.extended(v, c));
        }
    }
    out
}

/// Sign vector of `a` at `s`; fails with `ZeroAtSample` if a member
/// vanishes there.
pub fn signs_at(a: &[Polynomial], s: &SamplePoint) -> Result<Vec<i8>> {
    a.iter()
        .map(|p| {
            let x = s.eval(p);
            if x.is_zero() {
                Err(Error::ZeroAtSample)
            } else if x > Rational::zero() {
                Ok(1)
            } else {
                Ok(-1)
            }
        })
        .collect()
}
