//! Multivariate gcd over Q by recursive content extraction and the
//! subresultant PRS on primitive parts.

use super::subres::{dense, prem_dense, undense, Dense};
use num_traits::Zero;

use super::{Polynomial, Rational, Var};
use crate::error::{Error, Result};

/// Greatest common divisor, normalized to integer coefficients with gcd 1 and
/// a positive leading coefficient.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(gcd_nz(p, q))
}

/// `gcd` for callers that know at least one argument is nonzero.
pub(crate) fn gcd_nz(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    let n = p.nvars();
    if p.is_constant() || q.is_constant() {
        return Polynomial::one(n);
    }
    let (pn, qn) = (p.normalized(), q.normalized());
    if pn == qn {
        return pn;
    }
    if coprime_certificate(&pn, &qn) {
        return Polynomial::one(n);
    }
    let v = p.main_var().max(q.main_var()).expect("non-constant");
    if !p.involves(v) {
        return gcd_nz(p, &content_in(q, v));
    }
    if !q.involves(v) {
        return gcd_nz(&content_in(p, v), q);
    }
    let cp = content_in(&pn, v);
    let cq = content_in(&qn, v);
    let c = gcd_nz(&cp, &cq);
    let pp = pn.exact_div(&cp).expect("content divides");
    let qp = qn.exact_div(&cq).expect("content divides");
    let g = prs_gcd(&pp, &qp, v);
    (&c * &g).normalized()
}

fn univariate_degree_of_gcd(a: &[Rational], b: &[Rational]) -> usize {
    fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        c
    }
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let db = b.len() - 1;
        while a.len() > db && !a.is_empty() {
            let k = a.len() - 1 - db;
            let f = a.last().expect("nonempty") / b.last().expect("nonempty");
            for (i, c) in b.iter().enumerate() {
                let t = &f * c;
                a[k + i] -= t;
            }
            a.pop();
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

// Sound test for gcd(p, q) = 1: for every shared variable v, specialize the
// other variables at a point keeping both leading coefficients in v nonzero;
// a common factor involving v would survive as a common factor of positive
// degree of the images. `false` means "unknown".
fn coprime_certificate(p: &Polynomial, q: &Polynomial) -> bool {
    let pv = p.variables();
    let qv = q.variables();
    let mut all: Vec<Var> = pv.iter().chain(&qv).copied().collect();
    all.sort_unstable();
    all.dedup();
    for &v in pv.iter().filter(|v| qv.contains(v)) {
        let (lp, lq) = (p.leading_coeff_in(v), q.leading_coeff_in(v));
        let mut done = false;
        for attempt in 0..6i64 {
            let point: Vec<Option<Rational>> = (0..p.nvars())
                .map(|w| {
                    if w == v || !all.contains(&w) {
                        None
                    } else {
                        let k = ((w as i64) * 7 + attempt * 13) % 23 - 11;
                        Some(Rational::from_integer((if k == 0 { 12 } else { k }).into()))
                    }
                })
                .collect();
            if lp.eval_partial(&point).is_zero() || lq.eval_partial(&point).is_zero() {
                continue;
            }
            let img = |f: &Polynomial| -> Vec<Rational> {
                f.eval_partial(&point).coeffs_in(v).iter().map(|c| c.constant_value().expect("univariate")).collect()
            };
            if univariate_degree_of_gcd(&img(p), &img(q)) > 0 {
                return false;
            }
            done = true;
            break;
        }
        if !done {
            return false;
        }
    }
    true
}

/// Gcd of the coefficients of `p` viewed in `R[v]`, normalized.
fn content_in(p: &Polynomial, v: Var) -> Polynomial {
    let n = p.nvars();
    let mut coeffs: Vec<Polynomial> = p.coeffs_in(v).into_iter().filter(|c| !c.is_zero()).collect();
    // fewer terms first tends to make the running gcd small early
    coeffs.sort_by_key(|c| (c.num_terms(), c.total_degree()));
    let mut g = Polynomial::zero(n);
    for c in coeffs {
        g = gcd_nz(&g, &c);
        if g.is_constant() {
            return Polynomial::one(n);
        }
    }
    g
}

/// Content of `p` with respect to `v`: the factor free of `v` such that
/// `p = content * primitive_part` with the primitive part normalized.
pub fn content(p: &Polynomial, v: Var) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let pp = primitive_part(p, v)?;
    Ok(p.exact_div(&pp).expect("primitive part divides"))
}

/// Primitive part of `p` with respect to `v`, normalized.
pub fn primitive_part(p: &Polynomial, v: Var) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let c = content_in(p, v);
    Ok(p.exact_div(&c).expect("content divides").normalized())
}

// Both arguments primitive w.r.t. v and of positive degree in v.
fn prs_gcd(a: &Polynomial, b: &Polynomial, v: Var) -> Polynomial {
    let n = a.nvars();
    let (mut aa, mut bb): (Dense, Dense) = (dense(a, v), dense(b, v));
    if aa.len() < bb.len() {
        std::mem::swap(&mut aa, &mut bb);
    }
    let mut g = Polynomial::one(n);
    let mut h = Polynomial::one(n);
    loop {
        let delta = (aa.len() - bb.len()) as u32;
        let (_, r, _) = prem_dense(&aa, &bb, n);
        if r.is_empty() {
            let last = undense(n, v, &bb);
            let c = content_in(&last, v);
            return last.exact_div(&c).expect("content divides").normalized();
        }
        if r.len() == 1 {
            return Polynomial::one(n);
        }
        aa = bb;
        let divisor = &g * &h.pow(delta);
        bb = r.iter().map(|x| x.exact_div(&divisor).expect("subresultant division must be exact")).collect();
        g = aa.last().expect("nonzero").clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).exact_div(&h.pow(delta - 1)).expect("exact"),
        };
    }
}

/// Squarefree part, primitive with positive leading coefficient. Constants
/// map to `1`.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(sqf(p))
}

fn sqf(p: &Polynomial) -> Polynomial {
    let n = p.nvars();
    if p.is_constant() {
        return Polynomial::one(n);
    }
    let v = p.main_var().expect("non-constant");
    let c = content_in(p, v);
    let pp = p.exact_div(&c).expect("content divides").normalized();
    let g = gcd_nz(&pp, &pp.derivative(v));
    let s = if g.is_constant() { pp } else { pp.exact_div(&g).expect("gcd divides") };
    (&sqf(&c) * &s).normalized()
}

/// Squarefree decomposition: pairs `(a_i, i)` with `a_i` squarefree, pairwise
/// coprime, non-constant and normalized, such that `p` is a rational constant
/// times the product of the `a_i^i`. A factor may appear with several
/// multiplicities when it comes from different content levels.
pub(crate) fn squarefree_factors(p: &Polynomial) -> Vec<(Polynomial, u32)> {
    let mut out = Vec::new();
    sqf_dec(p, &mut out);
    out
}

fn sqf_dec(p: &Polynomial, out: &mut Vec<(Polynomial, u32)>) {
    if p.is_constant() {
        return;
    }
    let v = p.main_var().expect("non-constant");
    let c = content_in(p, v);
    let pp = p.exact_div(&c).expect("content divides").normalized();
    sqf_dec(&c, out);
    // Yun
    let dp = pp.derivative(v);
    let a0 = gcd_nz(&pp, &dp);
    let mut b = pp.exact_div(&a0).expect("gcd divides");
    let mut d = &dp.exact_div(&a0).expect("gcd divides") - &b.derivative(v);
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd_nz(&b, &d);
        if !a.is_constant() {
            out.push((a.normalized(), i));
        }
        let nb = b.exact_div(&a).expect("gcd divides");
        let c = d.exact_div(&a).expect("gcd divides");
        d = &c - &nb.derivative(v);
        b = nb;
        i += 1;
    }
}

/// Cheap partial factorization: squarefree factors further split by their
/// contents with respect to every variable. The product of the output is
/// the squarefree part of `p` up to a constant; members are normalized,
/// non-constant, sorted and distinct.
pub(crate) fn split_factors(p: &Polynomial) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut stack: Vec<Polynomial> = squarefree_factors(p).into_iter().map(|(f, _)| f).collect();
    'next: while let Some(f) = stack.pop() {
        for v in f.variables() {
            let c = content_in(&f, v);
            if !c.is_constant() {
                let rest = f.exact_div(&c).expect("content divides");
                stack.push(c.normalized());
                if !rest.is_constant() {
                    stack.push(rest.normalized());
                }
                continue 'next;
            }
        }
        out.push(f);
    }
    out.sort();
    out.dedup();
    out
}
