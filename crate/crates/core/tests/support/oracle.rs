//! Numeric elimination oracle for square zero-dimensional systems.
//!
//! Variables are eliminated with fraction-free Sylvester determinants, the
//! univariate eliminant is isolated with a Sturm sequence, candidates are
//! lifted one variable at a time and every candidate is polished with
//! Newton's method on the original equations. Converged points are merged
//! when closer than the clustering radius.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use realtri::{Polynomial, Rational, Var};

/// Determinant of the Sylvester matrix of `p` and `q` in `v` (Bareiss).
pub fn sylvester_resultant(p: &Polynomial, q: &Polynomial, v: Var) -> Polynomial {
    let nv = p.nvars();
    let cp = p.coeffs_in(v);
    let cq = q.coeffs_in(v);
    let (m, n) = (cp.len() - 1, cq.len() - 1);
    let size = m + n;
    if size == 0 {
        return Polynomial::one(nv);
    }
    let mut a = vec![vec![Polynomial::zero(nv); size]; size];
    for i in 0..n {
        for (k, c) in cp.iter().rev().enumerate() {
            a[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in cq.iter().rev().enumerate() {
            a[n + i][i + k] = c.clone();
        }
    }
    let mut prev = Polynomial::one(nv);
    let mut negate = false;
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..size).find(|&r| !a[r][k].is_zero()) else {
                return Polynomial::zero(nv);
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[size - 1][size - 1].clone();
    if negate {
        d.scale(&-Rational::one())
    } else {
        d
    }
}

// dense univariate polynomials over Q, index i holds the coefficient of x^i

fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.last().is_some_and(|a| a.is_zero()) {
        c.pop();
    }
    c
}

fn dense(p: &Polynomial, v: Var) -> Vec<Rational> {
    trim(p.coeffs_in(v).iter().map(|c| c.constant_value().expect("univariate")).collect())
}

fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap() / b.last().unwrap();
        for i in 0..=db {
            let t = &f * &b[i];
            r[k + i] -= t;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn quo(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![Rational::zero(); a.len().saturating_sub(db)];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap() / b.last().unwrap();
        for i in 0..=db {
            let t = &f * &b[i];
            r[k + i] -= t;
        }
        q[k] = f;
        r.pop();
        r = trim(r);
    }
    q
}

fn monic(c: Vec<Rational>) -> Vec<Rational> {
    let l = c.last().unwrap().clone();
    c.into_iter().map(|a| a / &l).collect()
}

fn ugcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

fn derivative(c: &[Rational]) -> Vec<Rational> {
    c.iter().enumerate().skip(1).map(|(i, a)| a * Rational::from_integer((i as i64).into())).collect()
}

fn squarefree(c: &[Rational]) -> Vec<Rational> {
    let g = ugcd(c, &derivative(c));
    monic(quo(c, &g))
}

// positive integer multiple of `c`
fn integral(c: &[Rational]) -> Vec<BigInt> {
    let l = c.iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
    c.iter().map(|a| a.numer() * (&l / a.denom())).collect()
}

// sign of c(p/q) from the integer form q^d c(p/q)
fn sign_at(c: &[BigInt], x: &Rational) -> i8 {
    let (p, q) = (x.numer(), x.denom());
    let mut acc = c.last().unwrap().clone();
    let mut qpow = q.clone();
    for a in c.iter().rev().skip(1) {
        acc = acc * p + a * &qpow;
        qpow *= q;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn sturm(c: &[Rational]) -> Vec<Vec<Rational>> {
    let mut seq = vec![c.to_vec(), derivative(c)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let r = rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        // a positive scale keeps the signs and stops coefficient growth
        let l = r.last().unwrap().abs();
        seq.push(r.into_iter().map(|a| -a / &l).collect());
    }
    seq
}

fn variations(seq: &[Vec<BigInt>], x: &Rational) -> usize {
    let signs: Vec<i8> = seq.iter().map(|p| sign_at(p, x)).filter(|&v| v != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Real roots of a nonzero univariate polynomial, each to within `eps`.
pub fn real_roots(c: &[Rational], eps: &Rational) -> Vec<Rational> {
    let c = trim(c.to_vec());
    if c.len() <= 1 {
        return Vec::new();
    }
    let c = squarefree(&c);
    let lead = c.last().unwrap().abs();
    let bound =
        c.iter().map(|a| a.abs() / &lead).fold(Rational::zero(), |m, a| if a > m { a } else { m }) + Rational::one();
    let seq: Vec<Vec<BigInt>> = sturm(&c).iter().map(|p| integral(p)).collect();
    let c = integral(&c);
    let mut out = Vec::new();
    // intervals (lo, hi] with their root counts
    let lo = -bound.clone() - Rational::one();
    let mut stack = vec![(lo.clone(), bound.clone(), variations(&seq, &lo) - variations(&seq, &bound))];
    let two = Rational::from_integer(2.into());
    while let Some((lo, hi, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(bisect(&c, lo, hi, eps));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        let vm = variations(&seq, &mid);
        let nl = variations(&seq, &lo) - vm;
        stack.push((lo, mid.clone(), nl));
        stack.push((mid, hi, n - nl));
    }
    out.sort();
    out
}

// the single root of squarefree `c` in (lo, hi]
fn bisect(c: &[BigInt], mut lo: Rational, mut hi: Rational, eps: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let s_hi = sign_at(c, &hi);
    if s_hi == 0 {
        return hi;
    }
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / &two;
        let v = sign_at(c, &mid);
        if v == 0 {
            return mid;
        }
        if v == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo + hi) / two
}

fn residual(p: &Polynomial, pt: &[f64]) -> (f64, f64) {
    let mut mag = 0.0;
    for (m, c) in p.terms() {
        let mut t = c.to_f64().unwrap().abs();
        for (v, &e) in m.exponents().iter().enumerate() {
            t *= pt[v].abs().powi(e as i32);
        }
        mag += t;
    }
    (p.eval_f64(pt).abs(), mag)
}

fn residual_ok(f: &[Polynomial], pt: &[f64]) -> bool {
    f.iter().all(|p| {
        let (r, mag) = residual(p, pt);
        r <= 1e-10 * (1.0 + mag)
    })
}

/// Newton polish of `start`. `Some((x, true))` when it converges to a
/// solution near the start, `Some((start, false))` when the iteration fails
/// (singular solutions) but the start already solves the system.
fn newton(f: &[Polynomial], vars: &[Var], start: &[f64]) -> Option<(Vec<f64>, bool)> {
    let nv = f[0].nvars();
    let jac: Vec<Vec<Polynomial>> = f.iter().map(|p| vars.iter().map(|&v| p.derivative(v)).collect()).collect();
    let full = |x: &[f64]| {
        let mut pt = vec![0.0; nv];
        for (k, &v) in vars.iter().enumerate() {
            pt[v] = x[k];
        }
        pt
    };
    let mut x = start.to_vec();
    let mut converged = false;
    for _ in 0..60 {
        let pt = full(&x);
        let r = DVector::from_iterator(f.len(), f.iter().map(|p| p.eval_f64(&pt)));
        let j = DMatrix::from_fn(f.len(), vars.len(), |i, k| jac[i][k].eval_f64(&pt));
        let Some(step) = j.lu().solve(&r) else { break };
        let scale = 1.0 + x.iter().map(|a| a.abs()).fold(0.0, f64::max);
        let next: Vec<f64> = x.iter().zip(step.iter()).map(|(a, s)| a - s).collect();
        if !next.iter().all(|a| a.is_finite()) {
            break;
        }
        x = next;
        if step.amax() < 1e-14 * scale {
            converged = true;
            break;
        }
    }
    let near = x.iter().zip(start).all(|(a, b)| (a - b).abs() < 1e-3 * (1.0 + b.abs()));
    if converged && near && residual_ok(f, &full(&x)) {
        // near a singular solution the iteration crawls and stops early
        let pt = full(&x);
        let sv = DMatrix::from_fn(f.len(), vars.len(), |i, k| jac[i][k].eval_f64(&pt)).singular_values();
        let well = sv.min() > 1e-6 * sv.max();
        return Some((x, well));
    }
    residual_ok(f, &full(start)).then(|| (start.to_vec(), false))
}

/// Merges points closer than `radius` in the max norm.
pub fn cluster(points: Vec<Vec<f64>>, radius: f64) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for p in points {
        if !out.iter().any(|q| close(q, &p, radius)) {
            out.push(p);
        }
    }
    out
}

fn close(p: &[f64], q: &[f64], radius: f64) -> bool {
    p.iter().zip(q).all(|(a, b)| (a - b).abs() < radius)
}

/// `f` with each variable replaced by the matching polynomial of `subs`.
pub fn compose(f: &Polynomial, subs: &[Polynomial]) -> Polynomial {
    let n = f.nvars();
    let mut acc = Polynomial::zero(n);
    for (m, c) in f.terms() {
        let mut t = Polynomial::constant(n, c.clone());
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = &t * &subs[v].pow(e);
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// Real solutions of the square system `f` in `vars` (ascending), clustered
/// at `radius`. Elimination runs in sheared coordinates
/// `x_i = y_i + sum_{j > i} c_ij y_j` chosen so that every eliminant keeps a
/// constant leading coefficient. `None` when no shear tried achieves that
/// or the elimination degenerates.
pub fn real_solutions(f: &[Polynomial], vars: &[Var], radius: f64) -> Option<Vec<Vec<f64>>> {
    assert_eq!(f.len(), vars.len());
    let nv = f[0].nvars();
    for attempt in 0..8i64 {
        let coef = |i: usize, j: usize| Rational::from_integer((1 + (attempt + (i + 2 * j) as i64) % 4).into());
        let subs: Vec<Polynomial> = (0..nv)
            .map(|v| {
                let mut p = Polynomial::var(nv, v);
                if let Some(i) = vars.iter().position(|&w| w == v) {
                    for j in i + 1..vars.len() {
                        p = &p + &Polynomial::var(nv, vars[j]).scale(&coef(i, j));
                    }
                }
                p
            })
            .collect();
        let g: Vec<Polynomial> = f.iter().map(|p| compose(p, &subs)).collect();
        let Some(levels) = eliminate(&g, vars) else { continue };
        let ys = lift(&g, vars, &levels, radius)?;
        let back = |y: &Vec<f64>| -> Vec<f64> {
            (0..vars.len())
                .map(|i| y[i] + (i + 1..vars.len()).map(|j| coef(i, j).to_f64().unwrap() * y[j]).sum::<f64>())
                .collect()
        };
        return Some(ys.iter().map(back).collect());
    }
    None
}

// levels[k] holds polynomials in vars[0..=k], each with a constant leading
// coefficient in vars[k]
fn eliminate(f: &[Polynomial], vars: &[Var]) -> Option<Vec<Vec<Polynomial>>> {
    let n = vars.len();
    let mut levels: Vec<Vec<Polynomial>> = vec![Vec::new(); n];
    let mut cur: Vec<Polynomial> = f.to_vec();
    for k in (0..n).rev() {
        let v = vars[k];
        if cur.iter().any(|p| !p.involves(v) || !p.leading_coeff_in(v).is_constant()) {
            return None;
        }
        levels[k] = cur.clone();
        if k == 0 {
            break;
        }
        let (pi, pivot) = cur.iter().enumerate().min_by_key(|(_, p)| (p.degree(v), p.num_terms()))?;
        let pivot = pivot.clone();
        let mut next = Vec::new();
        for (i, p) in cur.iter().enumerate() {
            if i == pi {
                continue;
            }
            let r = sylvester_resultant(&pivot, p, v);
            if r.is_zero() {
                return None;
            }
            next.push(r);
        }
        cur = next;
    }
    Some(levels)
}

// near-real eigenvalues of the companion matrix of c (ascending, f64)
fn approx_real_roots(c: &[f64]) -> Vec<f64> {
    let d = c.len() - 1;
    let lead = c[d];
    if d == 0 || lead == 0.0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -c[i] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    m.complex_eigenvalues().iter().filter(|z| z.im.abs() <= 1e-5 * (1.0 + z.re.abs())).map(|z| z.re).collect()
}

fn lift(f: &[Polynomial], vars: &[Var], levels: &[Vec<Polynomial>], radius: f64) -> Option<Vec<Vec<f64>>> {
    let n = vars.len();
    let nv = f[0].nvars();
    let eps = Rational::new(1.into(), (1i64 << 50).into());
    let uni: Vec<Vec<Rational>> = levels[0].iter().map(|p| dense(p, vars[0])).collect();
    let mut g = uni.first()?.clone();
    for c in &uni[1..] {
        g = ugcd(&g, c);
    }
    let mut cands: Vec<Vec<f64>> = real_roots(&g, &eps).iter().map(|r| vec![r.to_f64().unwrap()]).collect();
    for k in 1..n {
        let mut next = Vec::new();
        for c in &cands {
            let mut pt = vec![0.0; nv];
            for i in 0..k {
                pt[vars[i]] = c[i];
            }
            for p in &levels[k] {
                let coeffs: Vec<f64> = p.coeffs_in(vars[k]).iter().map(|q| q.eval_f64(&pt)).collect();
                for r in approx_real_roots(&coeffs) {
                    let mut c2 = c.clone();
                    c2.push(r);
                    next.push(c2);
                }
            }
        }
        cands = next;
    }
    // polished points are accurate to the clustering radius; points left at
    // a singular solution are only accurate to about the square root of the
    // working precision and get merged more loosely
    let (mut sharp, mut rough) = (Vec::new(), Vec::new());
    for c in &cands {
        match newton(f, vars, c) {
            Some((x, true)) => sharp.push(x),
            Some((x, false)) => rough.push(x),
            None => {}
        }
    }
    let mut out = cluster(sharp, radius);
    for p in cluster(rough, 1e-4) {
        if !out.iter().any(|q| close(q, &p, 1e-4)) {
            out.push(p);
        }
    }
    Some(out)
}
