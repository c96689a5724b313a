//! Grid based connectivity check for the regions cut out by a polynomial set.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive, Zero};
use realtri::{isolate_univariate, Polynomial, Rational, Var};

use super::rat;

/// Sign of `f` at a point, trusting floating point only when the value is
/// well separated from the rounding error bound.
pub fn sign_at_point(f: &Polynomial, point: &[Rational], approx: &[f64]) -> i8 {
    let mut sum = 0.0f64;
    let mut mag = 0.0f64;
    for (m, c) in f.terms() {
        let mut t = c.to_f64().unwrap_or(f64::NAN);
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t *= approx[v].powi(e as i32);
            }
        }
        sum += t;
        mag += t.abs();
    }
    if sum.is_finite() && sum.abs() > 1e-9 * mag {
        return if sum > 0.0 { 1 } else { -1 };
    }
    let x = f.eval(point);
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// `f(p + s (q - p))` as a polynomial in the variable `s`.
pub fn restrict_to_segment(f: &Polynomial, p: &[Rational], q: &[Rational], s: Var) -> Polynomial {
    let n = f.nvars();
    let line: Vec<Polynomial> = (0..n)
        .map(|v| &Polynomial::constant(n, p[v].clone()) + &Polynomial::var(n, s).scale(&(&q[v] - &p[v])))
        .collect();
    let mut acc = Polynomial::zero(n);
    for (m, c) in f.terms() {
        let mut t = Polynomial::constant(n, c.clone());
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = &t * &line[v].pow(e);
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// `true` when the univariate `g` (in `s`) has a real root in `[0, 1]`.
pub fn has_root_in_unit(g: &Polynomial, s: Var) -> bool {
    if g.is_zero() {
        return true;
    }
    let (zero, one) = (rat(0), rat(1));
    for mut b in isolate_univariate(g).expect("nonzero") {
        loop {
            let iv = b.interval(s).clone();
            if iv.hi < zero || iv.lo > one {
                break;
            }
            if iv.lo >= zero && iv.hi <= one {
                return true;
            }
            if iv.is_point() {
                break;
            }
            b.refine().expect("refinement of a squarefree univariate root");
        }
    }
    false
}

/// Exact test that the segment from `p` to `q` avoids the zeros of every
/// member of `a`.
pub fn segment_clean(a: &[Polynomial], p: &[Rational], q: &[Rational], s: Var) -> bool {
    a.iter().all(|f| !has_root_in_unit(&restrict_to_segment(f, p, q, s), s))
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Grid connectivity check in the plane of variables `(va, vb)`. The grid
/// samples all of R^2 through the monotone bijection `t -> t / (1 - t^2)`
/// of `(-1, 1)`. Cells with equal sign vectors form 8-connected
/// components; components of one sign vector are then merged when an exact
/// test shows a straight segment between representatives that stays in the
/// region. Returns the number of sign vectors left in several pieces.
pub fn disconnected_sign_vectors(a: &[Polynomial], va: Var, vb: Var, n: usize) -> usize {
    let nv = a.first().map(|f| f.nvars()).unwrap_or(0);
    if nv == 0 {
        return 0;
    }
    let coords: Vec<Rational> = (0..n)
        .map(|i| {
            let t = Rational::new((2 * i as i64 - n as i64 + 1).into(), (n as i64 + 1).into());
            &t / (rat(1) - &t * &t)
        })
        .collect();
    let approx: Vec<f64> = coords.iter().map(|c| c.to_f64().unwrap()).collect();
    let point = |i: usize, j: usize| {
        let mut p = vec![rat(0); nv];
        p[va] = coords[i].clone();
        p[vb] = coords[j].clone();
        p
    };
    let mut ids: BTreeMap<Vec<i8>, usize> = BTreeMap::new();
    let mut labels = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = point(i, j);
            let mut ap = vec![0.0; nv];
            ap[va] = approx[i];
            ap[vb] = approx[j];
            let sv: Vec<i8> = a.iter().map(|f| sign_at_point(f, &p, &ap)).collect();
            if sv.contains(&0) {
                continue;
            }
            let k = ids.len();
            labels[i][j] = Some(*ids.entry(sv).or_insert(k));
        }
    }
    // 8-connected components
    let mut comp = vec![vec![usize::MAX; n]; n];
    let mut members: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let Some(l) = labels[i][j] else { continue };
            if comp[i][j] != usize::MAX {
                continue;
            }
            let id = members.len();
            let mut cells = Vec::new();
            let mut stack = vec![(i, j)];
            comp[i][j] = id;
            while let Some((x, y)) = stack.pop() {
                cells.push((x, y));
                for dx in -1i64..=1 {
                    for dy in -1i64..=1 {
                        let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                        if nx < 0 || ny < 0 || nx >= n as i64 || ny >= n as i64 {
                            continue;
                        }
                        let (nx, ny) = (nx as usize, ny as usize);
                        if comp[nx][ny] == usize::MAX && labels[nx][ny] == Some(l) {
                            comp[nx][ny] = id;
                            stack.push((nx, ny));
                        }
                    }
                }
            }
            members.push((l, cells));
        }
    }
    let mut by_label: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (id, (l, _)) in members.iter().enumerate() {
        by_label.entry(*l).or_default().push(id);
    }
    let s = (0..nv).find(|&v| v != va && v != vb).unwrap_or(va);
    let reps = |id: usize| -> Vec<Vec<Rational>> {
        let cells = &members[id].1;
        let k = cells.len().min(6);
        (0..k).map(|r| cells[r * cells.len() / k]).map(|(i, j)| point(i, j)).collect()
    };
    let mut broken = 0;
    for ids in by_label.values() {
        if ids.len() < 2 {
            continue;
        }
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        for x in 0..ids.len() {
            for y in x + 1..ids.len() {
                if find(&mut parent, x) == find(&mut parent, y) {
                    continue;
                }
                let (rx, ry) = (reps(ids[x]), reps(ids[y]));
                let joined = rx.iter().any(|p| ry.iter().any(|q| segment_clean(a, p, q, s)));
                if joined {
                    let (fx, fy) = (find(&mut parent, x), find(&mut parent, y));
                    parent[fx] = fy;
                }
            }
        }
        let roots: std::collections::BTreeSet<usize> = (0..ids.len()).map(|x| find(&mut parent, x)).collect();
        if roots.len() > 1 {
            broken += 1;
        }
    }
    broken
}
