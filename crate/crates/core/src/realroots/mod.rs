//! Real root isolation for univariate polynomials and zero-dimensional
//! triangular systems, and sign determination at isolated points.
//!
//! Isolation is Descartes/bisection over dyadic rationals. Upper levels of a
//! tower are handled with interval coefficients obtained by evaluating the
//! polynomial on the boxes of the lower levels; when the enclosures are too
//! wide to decide, the lower levels are refined.

mod interval;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use interval::{descartes, ipoly_eval, IPoly};
pub use interval::{eval_interval, Interval};

use crate::chains::TriangularSet;
use crate::error::{Error, Result};
use crate::polyarith::{squarefree_part, Polynomial, Rational, Var};

/// Refinement rounds allowed before giving up with `SignUndecidable`.
pub const REFINEMENT_CAP: usize = 64;

const MAX_BISECTION_DEPTH: usize = 400;

#[derive(Debug)]
struct Level {
    var: Var,
    coeffs: Vec<Polynomial>,
}

/// Box isolating one real solution of a triangular system: one interval per
/// variable (variables outside the system are pinned to the point 0).
#[derive(Clone, Debug)]
pub struct IsolatingBox {
    levels: Arc<Vec<Level>>,
    coords: Vec<Interval>,
    // sign of the level polynomial at the lower end of its interval; 0 once
    // the coordinate is an exact rational root
    sign_lo: Vec<i8>,
}

impl IsolatingBox {
    /// Intervals indexed by variable.
    pub fn intervals(&self) -> &[Interval] {
        &self.coords
    }

    pub fn interval(&self, v: Var) -> &Interval {
        &self.coords[v]
    }

    /// Midpoint approximation of the isolated point.
    pub fn approx(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coords.iter().map(|i| i.mid().to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Largest width over the system's variables.
    pub fn max_width(&self) -> Rational {
        self.levels.iter().map(|l| self.coords[l.var].width()).max().unwrap_or_else(Rational::zero)
    }

    /// Shrinks every coordinate interval, bottom level first.
    pub fn refine(&mut self) -> Result<()> {
        for k in 0..self.levels.len() {
            self.refine_level(k)?;
        }
        Ok(())
    }

    /// Refines until every interval is at most `width` wide.
    pub fn refine_to(&mut self, width: &Rational) -> Result<()> {
        while &self.max_width() > width {
            self.refine()?;
        }
        Ok(())
    }

    fn enclosure(&self, k: usize) -> IPoly {
        self.levels[k].coeffs.iter().map(|c| eval_interval(c, &self.coords)).collect()
    }

    fn refine_level(&mut self, k: usize) -> Result<()> {
        let var = self.levels[k].var;
        for _ in 0..=REFINEMENT_CAP {
            let iv = self.coords[var].clone();
            if iv.is_point() {
                return Ok(());
            }
            let c = self.enclosure(k);
            for x in split_candidates(&iv.lo, &iv.hi).into_iter().take(5) {
                match ipoly_eval(&c, &x).sign() {
                    Some(0) => {
                        self.coords[var] = Interval::point(x);
                        self.sign_lo[k] = 0;
                        return Ok(());
                    }
                    Some(s) => {
                        if s == self.sign_lo[k] {
                            self.coords[var] = Interval::new(x, iv.hi);
                            self.sign_lo[k] = s;
                        } else {
                            self.coords[var] = Interval::new(iv.lo, x);
                        }
                        return Ok(());
                    }
                    None => {}
                }
            }
            for j in 0..k {
                self.refine_level(j)?;
            }
        }
        Err(Error::SignUndecidable)
    }
}

/// Dyadic split points inside `(a, b)`, closest to the middle first.
fn split_candidates(a: &Rational, b: &Rational) -> Vec<Rational> {
    let w = b - a;
    let mut out = Vec::new();
    for k in 1..=6u32 {
        let den = 1i64 << k;
        let mut nums: Vec<i64> = (1..den).filter(|n| n % 2 == 1).collect();
        nums.sort_by_key(|n| (2 * n - den).abs());
        for n in nums {
            out.push(a + &w * Rational::new(BigInt::from(n), BigInt::from(den)));
        }
    }
    out
}

fn pow2_at_least(x: &Rational) -> Rational {
    let mut p = Rational::one();
    while &p < x {
        p *= Rational::from_integer(2.into());
    }
    p
}

/// Isolating intervals `(lo, hi, sign at lo)` for the real roots of an
/// interval polynomial; `None` when the enclosures are too wide.
fn isolate_ipoly(c: &[Interval]) -> Option<Vec<(Rational, Rational, i8)>> {
    let n = c.len() - 1;
    let lead = c[n].mig();
    if lead.is_zero() {
        return None;
    }
    let mut ratio = Rational::zero();
    for a in &c[..n] {
        let r = a.mag() / &lead;
        if r > ratio {
            ratio = r;
        }
    }
    let bound = pow2_at_least(&(ratio + Rational::one()));
    let lo = -bound.clone();
    let s_lo = ipoly_eval(c, &lo).sign()?;
    if s_lo == 0 {
        return None;
    }
    let mut out = Vec::new();
    let mut stack = vec![(lo, bound, s_lo, 0usize)];
    while let Some((a, b, sa, depth)) = stack.pop() {
        match descartes(c, &a, &b)? {
            0 => {}
            1 => out.push((a, b, sa)),
            _ => {
                if depth > MAX_BISECTION_DEPTH {
                    return None;
                }
                let mut split = None;
                for x in split_candidates(&a, &b) {
                    match ipoly_eval(c, &x).sign() {
                        Some(s) if s != 0 => {
                            split = Some((x, s));
                            break;
                        }
                        _ => {}
                    }
                }
                let (x, sx) = split?;
                stack.push((a, x.clone(), sa, depth + 1));
                stack.push((x, b, sx, depth + 1));
            }
        }
    }
    out.sort_by(|p, q| p.0.cmp(&q.0));
    Some(out)
}

fn trimmed(mut c: IPoly) -> IPoly {
    while c.last().is_some_and(|a| a.sign() == Some(0)) {
        c.pop();
    }
    c
}

fn isolate_level(b: &IsolatingBox, k: usize) -> Result<Vec<IsolatingBox>> {
    let mut b = b.clone();
    let var = b.levels[k].var;
    for _ in 0..=REFINEMENT_CAP {
        let c = trimmed(b.enclosure(k));
        if c.len() != b.levels[k].coeffs.len() {
            // the initial vanishes at this point
            return Err(Error::SignUndecidable);
        }
        if let Some(roots) = isolate_ipoly(&c) {
            return Ok(roots
                .into_iter()
                .map(|(lo, hi, s)| {
                    let mut nb = b.clone();
                    nb.coords[var] = Interval::new(lo, hi);
                    nb.sign_lo.push(s);
                    nb
                })
                .collect());
        }
        if k == 0 {
            return Err(Error::SignUndecidable);
        }
        for j in 0..k {
            b.refine_level(j)?;
        }
    }
    Err(Error::SignUndecidable)
}

fn isolate_tower(nvars: usize, polys: Vec<(Var, Polynomial)>) -> Result<Vec<IsolatingBox>> {
    let levels: Vec<Level> = polys.into_iter().map(|(var, p)| Level { var, coeffs: p.coeffs_in(var) }).collect();
    let n = levels.len();
    let start = IsolatingBox {
        levels: Arc::new(levels),
        coords: vec![Interval::point(Rational::zero()); nvars],
        sign_lo: Vec::new(),
    };
    let mut boxes = vec![start];
    for k in 0..n {
        let mut next = Vec::new();
        for b in &boxes {
            next.extend(isolate_level(b, k)?);
        }
        boxes = next;
    }
    Ok(boxes)
}

/// Isolating boxes for the real roots of a univariate squarefree polynomial,
/// in increasing order.
pub fn isolate_univariate(p: &Polynomial) -> Result<Vec<IsolatingBox>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let vars = p.variables();
    match vars.as_slice() {
        [] => Ok(Vec::new()),
        [v] => isolate_tower(p.nvars(), vec![(*v, squarefree_part(p)?)]),
        _ => Err(Error::InvalidArgument("polynomial is not univariate".into())),
    }
}

/// Number of real solutions together with their boxes.
#[derive(Clone, Debug)]
pub struct RootCount {
    pub count: usize,
    pub boxes: Vec<IsolatingBox>,
}

/// Sign of `p` at the point isolated by `b`, refining `b` as needed.
///
/// `p` must not vanish at the point; otherwise the refinement cap is hit and
/// `SignUndecidable` is returned.
pub fn sign_at(p: &Polynomial, b: &mut IsolatingBox) -> Result<i8> {
    for _ in 0..=REFINEMENT_CAP {
        match eval_interval(p, &b.coords).sign() {
            Some(0) => return Err(Error::SignUndecidable),
            Some(s) => return Ok(s),
            None => b.refine()?,
        }
    }
    Err(Error::SignUndecidable)
}

/// Real solutions of `t = 0` at which every `p` is positive.
///
/// Every variable occurring in `t` or `p` must be a main variable of `t`
/// (free variables are specialized beforehand). The specialized system must
/// be a squarefree regular chain and no `p` may vanish at its real zeros;
/// violations surface as `SignUndecidable`.
pub fn real_root_counting(t: &TriangularSet, p: &[Polynomial]) -> Result<RootCount> {
    real_root_counting_with(t, p, 0)
}

/// As [`real_root_counting`], refining every box `extra_refinements` more
/// times before the sign checks.
pub fn real_root_counting_with(t: &TriangularSet, p: &[Polynomial], extra_refinements: usize) -> Result<RootCount> {
    let alg = t.mvars();
    for q in t.polys().iter().chain(p) {
        if q.variables().iter().any(|v| !alg.contains(v)) {
            return Err(Error::InvalidArgument("system is not zero-dimensional".into()));
        }
    }
    let mut levels = Vec::with_capacity(t.len());
    for (i, q) in t.polys().iter().enumerate() {
        let v = alg[i];
        // the bottom level is exact, so make it squarefree outright
        let q = if i == 0 { squarefree_part(q)? } else { q.clone() };
        levels.push((v, q));
    }
    let mut boxes = isolate_tower(t.nvars(), levels)?;
    let mut kept = Vec::new();
    'outer: for b in boxes.iter_mut() {
        for _ in 0..extra_refinements {
            b.refine()?;
        }
        for q in p {
            if sign_at(q, b)? < 0 {
                continue 'outer;
            }
        }
        kept.push(b.clone());
    }
    Ok(RootCount { count: kept.len(), boxes: kept })
}
