//! Splitting machinery: regularization, regular gcd, intersection and chain
//! cleaning. All chains handled here are squarefree, so a polynomial lies in
//! the saturated ideal iff it vanishes on the quasi-component.
//!
//! In `Lazard` mode the outputs cover the quasi-component of the input (and
//! stay inside its closure). In `Kalkbrener` mode only the branches of the
//! input's dimension are kept; their closures still cover the input's
//! closure.

use super::TriangularSet as Chain;
use crate::polyarith::{primitive_part, pseudo_divide, split_factors, subresultant_chain, Polynomial, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    Lazard,
    Kalkbrener,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Status {
    InSat,
    Regular,
}

enum GcdBranch {
    // g is a gcd of the two inputs modulo the saturated ideal of the chain,
    // with its leading coefficient s; points where s vanishes need separate
    // treatment when the caller replaces t
    Gcd(Chain, Polynomial, Polynomial),
    // lower dimensional piece that must be processed again from scratch
    Lower(Chain),
}

/// Primitive part with respect to `v` (or the normalized polynomial when
/// `v` does not occur).
fn reduce_prim(p: &Polynomial, v: Var) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    if !p.involves(v) {
        return p.normalized();
    }
    primitive_part(p, v).expect("nonzero")
}

fn pquo(t: &Polynomial, g: &Polynomial, v: Var) -> Polynomial {
    pseudo_divide(t, g, v).expect("g has positive degree").0
}

fn head_tail(p: &Polynomial) -> (Polynomial, Polynomial) {
    (p.init().expect("non-constant"), p.tail().expect("non-constant"))
}

/// Keeps chains with `expected` elements under `st`; other (lower
/// dimensional) chains are regularized again or dropped, depending on mode.
fn attach(p: &Polynomial, chains: Vec<Chain>, expected: usize, st: Status, mode: Mode, out: &mut Vec<(Chain, Status)>) {
    for c in chains {
        if c.len() == expected {
            out.push((c, st));
        } else if mode == Mode::Lazard {
            out.extend(regularize_w(p, &c, mode));
        }
    }
}

/// Splits `t` so that on each branch `p` is in the saturated ideal or is
/// regular modulo it.
pub(crate) fn regularize_w(p: &Polynomial, t: &Chain, mode: Mode) -> Vec<(Chain, Status)> {
    let p = t.prem(p);
    if p.is_zero() {
        return vec![(t.clone(), Status::InSat)];
    }
    if p.is_constant() {
        return vec![(t.clone(), Status::Regular)];
    }
    let v = p.main_var().expect("non-constant");
    let lower = t.lower_incl(v);
    let upper = t.upper(v);
    if upper.is_empty() {
        return regularize_level(&p, &lower, v, mode);
    }
    let mut out = Vec::new();
    for (e, st) in regularize_level(&p, &lower, v, mode) {
        let chains = clean_chain(&e, &upper, mode);
        attach(&p, chains, t.len() + e.len() - lower.len(), st, mode, &mut out);
    }
    out
}

fn regularize_level(p: &Polynomial, lower: &Chain, v: Var, mode: Mode) -> Vec<(Chain, Status)> {
    let d = lower.lower(v);
    let (init, tail) = head_tail(p);
    let mut out = Vec::new();
    let Some(t) = lower.poly_with_mvar(v) else {
        for (e, st) in regularize_w(&init, &d, mode) {
            match st {
                Status::Regular => out.push((e, Status::Regular)),
                Status::InSat => out.extend(regularize_w(&tail, &e, mode)),
            }
        }
        return out;
    };
    for (e, st) in regularize_w(&init, &d, mode) {
        let ext = clean_chain(&e, std::slice::from_ref(t), mode);
        match st {
            Status::InSat => {
                for c in ext {
                    out.extend(regularize_w(&tail, &c, mode));
                }
            }
            Status::Regular => {
                for c in ext {
                    if c.len() != e.len() + 1 {
                        if mode == Mode::Lazard {
                            out.extend(regularize_w(p, &c, mode));
                        }
                        continue;
                    }
                    let tt = c.poly_with_mvar(v).expect("level present").clone();
                    let pp = c.prem(p);
                    let below = c.lower(v);
                    for br in regular_gcd(&pp, &tt, v, &below, mode) {
                        match br {
                            GcdBranch::Lower(f) => {
                                for c2 in clean_chain(&f, std::slice::from_ref(&tt), mode) {
                                    out.extend(regularize_w(p, &c2, mode));
                                }
                            }
                            GcdBranch::Gcd(f, g, s) => {
                                let dg = g.degree(v);
                                let expected = f.len() + 1;
                                if dg > 0 && dg < tt.degree(v) {
                                    for l in lower_pieces(&s, &f, mode) {
                                        for c2 in clean_chain(&l, std::slice::from_ref(&tt), mode) {
                                            out.extend(regularize_w(p, &c2, mode));
                                        }
                                    }
                                }
                                if dg == 0 {
                                    let chains = clean_chain(&f, std::slice::from_ref(&tt), mode);
                                    attach(p, chains, expected, Status::Regular, mode, &mut out);
                                } else if dg == tt.degree(v) {
                                    let chains = clean_chain(&f, std::slice::from_ref(&tt), mode);
                                    attach(p, chains, expected, Status::InSat, mode, &mut out);
                                } else {
                                    let q = pquo(&tt, &g, v);
                                    let gs = clean_chain(&f, &[g], mode);
                                    attach(p, gs, expected, Status::InSat, mode, &mut out);
                                    let qs = clean_chain(&f, &[q], mode);
                                    attach(p, qs, expected, Status::Regular, mode, &mut out);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Gcd of `p` and `t` in `v` modulo the saturated ideal of `d`, where
/// `deg(t) > deg(p) >= 1` and both initials are regular modulo `sat(d)`.
fn regular_gcd(p: &Polynomial, t: &Polynomial, v: Var, d: &Chain, mode: Mode) -> Vec<GcdBranch> {
    let chain = subresultant_chain(t, p, v).expect("deg t > deg p");
    let m = p.degree(v) as usize;
    let mut out = Vec::new();
    let mut stack = vec![(d.clone(), 0usize)];
    while let Some((e, j)) = stack.pop() {
        let sj = chain[j].coeff_in(v, j as u32);
        for (e2, st) in regularize_w(&sj, &e, mode) {
            if e2.len() != e.len() {
                if mode == Mode::Lazard {
                    out.push(GcdBranch::Lower(e2));
                }
                continue;
            }
            match st {
                Status::InSat => {
                    assert!(j < m, "leading subresultant coefficient vanished");
                    stack.push((e2, j + 1));
                }
                Status::Regular => {
                    out.push(GcdBranch::Gcd(e2, chain[j].clone(), sj.clone()));
                }
            }
        }
    }
    out
}

fn lower_pieces(s: &Polynomial, f: &Chain, mode: Mode) -> Vec<Chain> {
    match mode {
        Mode::Lazard => intersect(s, f),
        Mode::Kalkbrener => Vec::new(),
    }
}

/// Extends `e` (main variables below that of `t`) by `t`, whose initial is
/// regular modulo `sat(e)`, splitting until every branch is squarefree.
fn make_sqf_top(e: &Chain, t: &Polynomial, mode: Mode) -> Vec<Chain> {
    let v = t.main_var().expect("non-constant");
    if t.degree(v) == 1 {
        return vec![e.with(t.clone())];
    }
    let pieces = split_factors(t);
    if pieces.len() > 1 {
        return pieces.iter().flat_map(|q| make_sqf_top(e, q, mode)).collect();
    }
    let dt = t.derivative(v);
    let mut out = Vec::new();
    for br in regular_gcd(&dt, t, v, e, mode) {
        match br {
            GcdBranch::Lower(f) => out.extend(clean_chain(&f, std::slice::from_ref(t), mode)),
            GcdBranch::Gcd(f, g, s) => {
                if g.degree(v) > 0 {
                    for l in lower_pieces(&s, &f, mode) {
                        out.extend(clean_chain(&l, std::slice::from_ref(t), mode));
                    }
                }
                let top = if g.degree(v) == 0 { t.clone() } else { pquo(t, &g, v) };
                let top = reduce_prim(&f.prem(&top), v);
                for piece in split_factors(&top) {
                    out.push(f.with(piece));
                }
            }
        }
    }
    out
}

// keeps the cheaper of two representatives of the same level
fn smaller(a: Polynomial, b: Polynomial) -> Polynomial {
    let key = |p: &Polynomial| (p.num_terms(), p.total_degree());
    if key(&b) <= key(&a) {
        b
    } else {
        a
    }
}

/// Adds `uppers` (ascending main variables, all above those of `e`) on top
/// of `e`, discarding branches where an initial vanishes and making every
/// level squarefree.
pub(crate) fn clean_chain(e: &Chain, uppers: &[Polynomial], mode: Mode) -> Vec<Chain> {
    let mut cur = vec![e.clone()];
    for u in uppers {
        let v = u.main_var().expect("non-constant");
        let init = u.init().expect("non-constant");
        let mut next = Vec::new();
        for c in &cur {
            for (c2, st) in regularize_w(&init, c, mode) {
                if st == Status::Regular {
                    let uu = smaller(reduce_prim(u, v), reduce_prim(&c2.prem(u), v));
                    next.extend(make_sqf_top(&c2, &uu, mode));
                }
            }
        }
        cur = next;
    }
    cur
}

/// Chains whose quasi-components cover `V(p) ∩ W(t)` and lie inside
/// `V(p)` and the closure of `W(t)`.
pub(crate) fn intersect(p: &Polynomial, t: &Chain) -> Vec<Chain> {
    let p = t.prem(p);
    if p.is_zero() {
        return vec![t.clone()];
    }
    if p.is_constant() {
        return Vec::new();
    }
    let factors = split_factors(&p);
    if factors.len() > 1 {
        let mut out: Vec<Chain> = factors.iter().flat_map(|f| intersect(f, t)).collect();
        out.sort();
        out.dedup();
        return out;
    }
    let v = p.main_var().expect("non-constant");
    let lower = t.lower_incl(v);
    let upper = t.upper(v);
    let level = intersect_level(&p, &lower, v);
    if upper.is_empty() {
        return level;
    }
    let mut out = Vec::new();
    for e in level {
        out.extend(clean_chain(&e, &upper, Mode::Lazard));
    }
    out
}

fn intersect_level(p: &Polynomial, lower: &Chain, v: Var) -> Vec<Chain> {
    let mode = Mode::Lazard;
    let d = lower.lower(v);
    let (init, tail) = head_tail(p);
    let mut out = Vec::new();
    let Some(t) = lower.poly_with_mvar(v) else {
        for (e, st) in regularize_w(&init, &d, mode) {
            match st {
                Status::InSat => out.extend(intersect(&tail, &e)),
                Status::Regular => {
                    let pe = reduce_prim(&e.prem(p), v);
                    out.extend(make_sqf_top(&e, &pe, mode));
                    for e2 in intersect(&init, &e) {
                        out.extend(intersect(&tail, &e2));
                    }
                }
            }
        }
        return out;
    };
    for (e, st) in regularize_w(&init, &d, mode) {
        let ext = clean_chain(&e, std::slice::from_ref(t), mode);
        match st {
            Status::InSat => {
                for c in ext {
                    out.extend(intersect(&tail, &c));
                }
            }
            Status::Regular => {
                for e2 in intersect(&init, &e) {
                    for c in clean_chain(&e2, std::slice::from_ref(t), mode) {
                        out.extend(intersect(&tail, &c));
                    }
                }
                for c in ext {
                    if c.len() != e.len() + 1 {
                        out.extend(intersect(p, &c));
                        continue;
                    }
                    let tt = c.poly_with_mvar(v).expect("level present").clone();
                    let pp = c.prem(p);
                    let below = c.lower(v);
                    for br in regular_gcd(&pp, &tt, v, &below, mode) {
                        match br {
                            GcdBranch::Lower(f) => {
                                for c2 in clean_chain(&f, std::slice::from_ref(&tt), mode) {
                                    out.extend(intersect(p, &c2));
                                }
                            }
                            GcdBranch::Gcd(f, g, s) => {
                                if g.degree(v) < tt.degree(v) {
                                    for l in lower_pieces(&s, &f, mode) {
                                        for c2 in clean_chain(&l, std::slice::from_ref(&tt), mode) {
                                            out.extend(intersect(p, &c2));
                                        }
                                    }
                                }
                                if g.degree(v) > 0 {
                                    out.extend(clean_chain(&f, &[g], mode));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
