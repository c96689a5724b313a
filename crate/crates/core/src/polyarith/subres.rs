//! Pseudo-division, resultants and subresultant chains with respect to one
//! variable. Polynomials are handled in the recursive view `R[v]` where `R`
//! is the ring of the remaining variables, as dense coefficient vectors.

use num_traits::One;

use super::{Polynomial, Rational, Var};
use crate::error::{Error, Result};

/// Dense polynomial in one variable over the multivariate ring; trimmed so the
/// last entry is nonzero (empty = zero).
pub(crate) type Dense = Vec<Polynomial>;

pub(crate) fn dense(p: &Polynomial, v: Var) -> Dense {
    if p.is_zero() {
        return Vec::new();
    }
    p.coeffs_in(v)
}

pub(crate) fn undense(nvars: usize, v: Var, c: &[Polynomial]) -> Polynomial {
    Polynomial::from_coeffs(nvars, v, c)
}

fn trim(c: &mut Dense) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

fn deg(c: &[Polynomial]) -> usize {
    debug_assert!(!c.is_empty());
    c.len() - 1
}

fn mul_all(c: &[Polynomial], k: &Polynomial) -> Dense {
    if k.is_one() {
        return c.to_vec();
    }
    c.iter().map(|x| x * k).collect()
}

fn div_all(c: &[Polynomial], k: &Polynomial) -> Dense {
    if k.is_one() {
        return c.to_vec();
    }
    c.iter().map(|x| x.exact_div(k).expect("subresultant division must be exact")).collect()
}

fn neg_all(c: &[Polynomial]) -> Dense {
    c.iter().map(|x| -x).collect()
}

/// Pseudo-division with the fixed exponent `k = deg(a) - deg(b) + 1`
/// (`k = 0` when `deg(a) < deg(b)`): `lc(b)^k a = q b + r`.
pub(crate) fn prem_dense(a: &[Polynomial], b: &[Polynomial], nvars: usize) -> (Dense, Dense, u32) {
    assert!(!b.is_empty(), "pseudo-division by zero");
    if a.is_empty() || a.len() < b.len() {
        return (Vec::new(), a.to_vec(), 0);
    }
    let m = deg(a);
    let n = deg(b);
    let lc = &b[n];
    let mut r: Dense = a.to_vec();
    let mut q: Dense = vec![Polynomial::zero(nvars); m - n + 1];
    for i in (0..=m - n).rev() {
        let coef = r[n + i].clone();
        if !lc.is_one() {
            for qj in q.iter_mut().skip(i + 1) {
                *qj = &*qj * lc;
            }
        }
        q[i] = coef.clone();
        r.truncate(n + i);
        for (j, rj) in r.iter_mut().enumerate() {
            let scaled = if lc.is_one() { rj.clone() } else { &*rj * lc };
            *rj = if j >= i && !coef.is_zero() { &scaled - &(&coef * &b[j - i]) } else { scaled };
        }
    }
    trim(&mut r);
    trim(&mut q);
    (q, r, (m - n + 1) as u32)
}

/// Pseudo-division of `p` by `t` with respect to `v`.
///
/// Returns `(q, r, k)` with `init_v(t)^k * p = q * t + r` and
/// `deg(r, v) < deg(t, v)`, where `k = deg(p, v) - deg(t, v) + 1` whenever
/// `deg(p, v) >= deg(t, v)` and `k = 0` otherwise.
pub fn pseudo_divide(p: &Polynomial, t: &Polynomial, v: Var) -> Result<(Polynomial, Polynomial, u32)> {
    if t.degree(v) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let n = p.nvars();
    let (q, r, k) = prem_dense(&dense(p, v), &dense(t, v), n);
    Ok((undense(n, v, &q), undense(n, v, &r), k))
}

/// Remainder part of [`pseudo_divide`].
pub fn pseudo_remainder(p: &Polynomial, t: &Polynomial, v: Var) -> Polynomial {
    if p.degree(v) < t.degree(v) {
        return p.clone();
    }
    let n = p.nvars();
    let (_, r, _) = prem_dense(&dense(p, v), &dense(t, v), n);
    undense(n, v, &r)
}

/// Sylvester resultant of two dense polynomials (both nonzero).
pub(crate) fn resultant_dense(a: &[Polynomial], b: &[Polynomial], nvars: usize) -> Polynomial {
    if a.is_empty() || b.is_empty() {
        return Polynomial::zero(nvars);
    }
    let (da, db) = (deg(a), deg(b));
    if da == 0 {
        return a[0].pow(db as u32);
    }
    if db == 0 {
        return b[0].pow(da as u32);
    }
    let ca = content_of(a);
    let cb = content_of(b);
    let t = num_traits::pow(ca.clone(), db) * num_traits::pow(cb.clone(), da);
    let mut aa: Dense = a.iter().map(|x| x.scale(&ca.recip())).collect();
    let mut bb: Dense = b.iter().map(|x| x.scale(&cb.recip())).collect();
    let mut sign_neg = false;
    if da < db {
        std::mem::swap(&mut aa, &mut bb);
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = true;
        }
    }
    let mut g = Polynomial::one(nvars);
    let mut h = Polynomial::one(nvars);
    loop {
        let (deg_a, deg_b) = (deg(&aa), deg(&bb));
        let delta = deg_a - deg_b;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let (_, r, _) = prem_dense(&aa, &bb, nvars);
        if r.is_empty() {
            return Polynomial::zero(nvars);
        }
        aa = bb;
        let divisor = &g * &h.pow(delta as u32);
        bb = div_all(&r, &divisor);
        g = aa[deg(&aa)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta as u32).exact_div(&h.pow(delta as u32 - 1)).expect("subresultant division must be exact"),
        };
        if deg(&bb) == 0 {
            break;
        }
    }
    let deg_a = deg(&aa) as u32;
    let lb = &bb[0];
    let hfinal = match deg_a {
        0 => h,
        1 => lb.clone(),
        _ => lb.pow(deg_a).exact_div(&h.pow(deg_a - 1)).expect("subresultant division must be exact"),
    };
    let mut res = hfinal.scale(&t);
    if sign_neg {
        res = -res;
    }
    res
}

fn content_of(c: &[Polynomial]) -> Rational {
    let mut g: Option<Rational> = None;
    for x in c {
        if x.is_zero() {
            continue;
        }
        let cx = x.rational_content();
        g = Some(match g {
            None => cx,
            Some(prev) => rational_gcd(&prev, &cx),
        });
    }
    g.unwrap_or_else(Rational::one)
}

pub(crate) fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    use num_integer::Integer;
    Rational::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

/// Resultant of `p` and `q` with respect to `v`, with the convention that
/// `res(p, q, v) = p` when `v` does not occur in `p`. Otherwise the value is
/// the determinant of the Sylvester matrix of `p` and `q` (coefficients of
/// `p` in the first rows).
pub fn resultant(p: &Polynomial, q: &Polynomial, v: Var) -> Result<Polynomial> {
    if q.degree(v) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !p.involves(v) {
        return Ok(p.clone());
    }
    Ok(sylvester_resultant(p, q, v))
}

/// Plain Sylvester resultant (no convention for `v`-free arguments).
pub(crate) fn sylvester_resultant(p: &Polynomial, q: &Polynomial, v: Var) -> Polynomial {
    let n = p.nvars();
    resultant_dense(&dense(p, v), &dense(q, v), n)
}

/// Discriminant of `p` with respect to `v`:
/// `(-1)^(d(d-1)/2) res(p, dp/dv, v) / lc_v(p)` where `d = deg(p, v)`.
pub fn discriminant(p: &Polynomial, v: Var) -> Result<Polynomial> {
    let d = p.degree(v);
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let dp = p.derivative(v);
    let r = sylvester_resultant(p, &dp, v);
    let lc = p.leading_coeff_in(v);
    let mut disc = r.exact_div(&lc).expect("leading coefficient divides res(p, p')");
    if (d as u64 * (d as u64 - 1) / 2) % 2 == 1 {
        disc = -disc;
    }
    Ok(disc)
}

/// Subresultant chain `S_0, ..., S_q` of `p` and `q` with respect to `v`,
/// where `deg(p, v) > deg(q, v) = q`. Entry `j` is the `j`-th subresultant
/// (possibly zero or of degree below `j`).
pub fn subresultant_chain(p: &Polynomial, q: &Polynomial, v: Var) -> Result<Vec<Polynomial>> {
    let n = p.nvars();
    let (dp, dq) = (p.degree(v), q.degree(v));
    if q.is_zero() || dp <= dq {
        return Err(Error::InvalidArgument("subresultant chain needs deg(p) > deg(q) and q nonzero".into()));
    }
    let chain = subresultant_chain_dense(&dense(p, v), &dense(q, v), n);
    Ok(chain.iter().map(|c| undense(n, v, c)).collect())
}

pub(crate) fn subresultant_chain_dense(p: &[Polynomial], q: &[Polynomial], nvars: usize) -> Vec<Dense> {
    let (dp, dq) = (deg(p), deg(q));
    debug_assert!(dp > dq);
    let mut out: Vec<Dense> = vec![Vec::new(); dq + 1];
    let lcq = q[dq].clone();
    out[dq] = mul_all(q, &lcq.pow((dp - dq - 1) as u32));
    if dq == 0 {
        return out;
    }
    let mut s = lcq.pow((dp - dq) as u32);
    let mut a: Dense = q.to_vec();
    let (_, mut b, _) = prem_dense(p, &neg_all(q), nvars);
    loop {
        if b.is_empty() {
            break;
        }
        let d = deg(&a);
        let e = deg(&b);
        out[d - 1] = b.clone();
        let delta = d - e;
        let c = if delta > 1 {
            let lb = b[e].clone();
            let num = mul_all(&b, &lb.pow((delta - 1) as u32));
            let c = div_all(&num, &s.pow((delta - 1) as u32));
            out[e] = c.clone();
            c
        } else {
            b.clone()
        };
        if e == 0 {
            break;
        }
        let (_, r, _) = prem_dense(&a, &neg_all(&b), nvars);
        let divisor = &s.pow(delta as u32) * &a[d];
        b = div_all(&r, &divisor);
        a = c;
        s = a[deg(&a)].clone();
    }
    out
}
