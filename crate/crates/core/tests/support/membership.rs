//! Point membership checks between a system and its decomposition.

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use realtri::{
    real_root_counting, sign_at, Error, Polynomial, Rational, RegularSAS, SamplePoint, SemiAlgebraicSystem,
    TriangularSet,
};

/// Exact membership of a rational point in the zero set of a component.
pub fn in_component(c: &RegularSAS, x: &[Rational]) -> bool {
    let free = c.t.free_vars();
    let s = SamplePoint { vars: free.clone(), coords: free.iter().map(|&v| x[v].clone()).collect() };
    c.q.holds(&s) && c.t.polys().iter().all(|t| t.eval(x).is_zero()) && c.p.iter().all(|p| p.eval(x).is_positive())
}

pub fn in_decomposition(out: &[RegularSAS], x: &[Rational]) -> bool {
    out.iter().any(|c| in_component(c, x))
}

/// Random rational with numerator in `[-r*den, r*den]` and denominator in
/// `1..=den`.
pub fn random_rational(g: &mut ChaCha8Rng, r: i64, den: i64) -> Rational {
    let d = g.gen_range(1..=den);
    Rational::new(g.gen_range(-r * d..=r * d).into(), d.into())
}

/// Outcome of checking the input constraints at one algebraic point of a
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violates(String),
}

fn vanishes_on_fibre(p: &Polynomial, t: &TriangularSet) -> bool {
    t.prem(p).is_zero()
}

/// Draws up to `want` points of the component: parameter values where `q`
/// holds, then every real zero of the specialized system. Each point is
/// checked against `s` with interval arithmetic. A sign that cannot be
/// decided for a constraint that must be nonzero counts as a violation.
pub fn sample_component(
    s: &SemiAlgebraicSystem,
    c: &RegularSAS,
    g: &mut ChaCha8Rng,
    want: usize,
) -> Result<Vec<Verdict>, Error> {
    let free = c.t.free_vars();
    let mut params: Vec<Vec<Rational>> = vec![c.witness.coords.clone()];
    let mut tries = 0;
    while params.len() < want && tries < 40 * want {
        tries += 1;
        let u: Vec<Rational> = free.iter().map(|_| random_rational(g, 6, 8)).collect();
        let sp = SamplePoint { vars: free.clone(), coords: u.clone() };
        if c.q.holds(&sp) {
            params.push(u);
        }
    }
    let mut out = Vec::new();
    for u in params {
        let sp = SamplePoint { vars: free.clone(), coords: u };
        let tu = TriangularSet::new(c.t.nvars(), c.t.polys().iter().map(|t| sp.substitute(t)).collect())?;
        let pu: Vec<Polynomial> = c.p.iter().map(|p| sp.substitute(p)).collect();
        let rc = real_root_counting(&tu, &pu)?;
        if rc.count == 0 {
            out.push(Verdict::Violates(format!("no real zero over {:?}", sp.coords)));
        }
        for mut b in rc.boxes {
            out.push(check_point(s, &sp, &tu, &mut b));
            if out.len() >= want {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

fn check_point(
    s: &SemiAlgebraicSystem,
    sp: &SamplePoint,
    tu: &TriangularSet,
    b: &mut realtri::IsolatingBox,
) -> Verdict {
    for f in &s.f {
        let fu = sp.substitute(f);
        if vanishes_on_fibre(&fu, tu) {
            continue;
        }
        if let Ok(sg) = sign_at(&fu, b) {
            return Verdict::Violates(format!("equation has sign {sg}"));
        }
    }
    for n in &s.n {
        let nu = sp.substitute(n);
        if vanishes_on_fibre(&nu, tu) {
            continue;
        }
        if let Ok(-1) = sign_at(&nu, b) {
            return Verdict::Violates("nonnegativity fails".into());
        }
    }
    for p in &s.p {
        let pu = sp.substitute(p);
        if vanishes_on_fibre(&pu, tu) || sign_at(&pu, b) != Ok(1) {
            return Verdict::Violates("positivity fails".into());
        }
    }
    for h in &s.h {
        let hu = sp.substitute(h);
        if vanishes_on_fibre(&hu, tu) || sign_at(&hu, b).is_err() {
            return Verdict::Violates("inequation fails".into());
        }
    }
    Verdict::Holds
}
