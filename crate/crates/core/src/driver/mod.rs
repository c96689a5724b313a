//! Semi-algebraic systems and the real triangular decomposition drivers:
//! pre-regular splitting, fingerprint based parameter elimination, and the
//! lazy and full decompositions.

use std::collections::BTreeSet;
use std::fmt;

use crate::border::{border_polynomial, iterated_resultant};
use crate::chains::{regularize, triangularize, RegularChain, TriangularSet};
use crate::error::{Error, Result};
use crate::opencad::{
    factor_set, generate_formula, oaf, revise_formula_keeping, sample_points, SamplePoint, SignAtom, SignFormula,
};
use crate::polyarith::{gcd, Polynomial, Var, VarOrder};
use crate::realroots::real_root_counting;

/// Default cap on the recursion depth of [`real_triangularize`].
pub const DEFAULT_MAX_DEPTH: usize = 32;

/// `[F = 0, N >= 0, P > 0, H != 0]` over a fixed variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiAlgebraicSystem {
    pub order: VarOrder,
    pub f: Vec<Polynomial>,
    pub n: Vec<Polynomial>,
    pub p: Vec<Polynomial>,
    pub h: Vec<Polynomial>,
}

impl SemiAlgebraicSystem {
    pub fn new(
        order: VarOrder,
        f: Vec<Polynomial>,
        n: Vec<Polynomial>,
        p: Vec<Polynomial>,
        h: Vec<Polynomial>,
    ) -> Result<Self> {
        let nv = order.len();
        if f.iter().chain(&n).chain(&p).chain(&h).any(|q| q.nvars() != nv) {
            return Err(Error::InvalidArgument("polynomial ring differs from the variable order".into()));
        }
        Ok(SemiAlgebraicSystem { order, f, n, p, h })
    }

    /// The system with no constraints at all.
    pub fn unconstrained(order: VarOrder) -> Self {
        SemiAlgebraicSystem { order, f: Vec::new(), n: Vec::new(), p: Vec::new(), h: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.order.len()
    }

    /// `true` when every constraint holds at the rational point `x`.
    pub fn holds_at(&self, x: &[crate::polyarith::Rational]) -> bool {
        use num_traits::{Signed, Zero};
        self.f.iter().all(|q| q.eval(x).is_zero())
            && self.n.iter().all(|q| !q.eval(x).is_negative())
            && self.p.iter().all(|q| q.eval(x).is_positive())
            && self.h.iter().all(|q| !q.eval(x).is_zero())
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        SystemDisplay(self)
    }

    /// Copy with the equations replaced by `eqs`, deduplicated up to units.
    fn with_equations(&self, eqs: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut seen = BTreeSet::new();
        let mut f = Vec::new();
        for q in eqs {
            if !q.is_zero() && seen.insert(q.normalized()) {
                f.push(q);
            }
        }
        SemiAlgebraicSystem { f, ..self.clone() }
    }

    fn equation_key(&self) -> BTreeSet<Polynomial> {
        self.f.iter().map(|q| q.normalized()).collect()
    }
}

struct SystemDisplay<'a>(&'a SemiAlgebraicSystem);

impl fmt::Display for SystemDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0;
        let mut parts = Vec::new();
        for (list, rel) in [(&s.f, "= 0"), (&s.n, ">= 0"), (&s.p, "> 0"), (&s.h, "!= 0")] {
            for q in list {
                parts.push(format!("{} {rel}", q.display(&s.order)));
            }
        }
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `[B != 0, T = 0, P > 0]` with `[T, P]` a squarefree regular system that
/// specializes well wherever no member of `B` vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreRegularSAS {
    /// Coprime squarefree border factors, in the free variables of `t`.
    pub b: Vec<Polynomial>,
    pub t: RegularChain,
    pub p: Vec<Polynomial>,
    /// Members of `b` dividing the iterated resultant of an initial of `t`
    /// or of an inequation. Off their zeros `T = 0` implies the input
    /// equations and the inequations hold, so the final formula must keep
    /// excluding them.
    pub keep: Vec<Polynomial>,
}

/// `[Q, T = 0, P > 0]`: `Q` is a sign formula in the free variables of `t`
/// describing a nonempty open set over which `[T, P]` specializes well and
/// keeps at least one real zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSAS {
    pub q: SignFormula,
    pub t: RegularChain,
    pub p: Vec<Polynomial>,
    /// A point of the parameter space where `q` holds and the specialized
    /// system has a real zero.
    pub witness: SamplePoint,
}

impl RegularSAS {
    pub fn display<'a>(&'a self, order: &'a VarOrder) -> impl fmt::Display + 'a {
        SasDisplay { sas: self, order }
    }
}

struct SasDisplay<'a> {
    sas: &'a RegularSAS,
    order: &'a VarOrder,
}

impl fmt::Display for SasDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> =
            self.sas.t.polys().iter().map(|t| format!("{} = 0", t.display(self.order))).collect();
        parts.extend(self.sas.p.iter().map(|p| format!("{} > 0", p.display(self.order))));
        write!(f, "[{}] where {}", parts.join(", "), self.sas.q.display(self.order))
    }
}

/// Components of maximal dimension plus the unevaluated recursive calls
/// covering the rest of the solution set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LazyOutput {
    pub components: Vec<RegularSAS>,
    pub deferred: Vec<SemiAlgebraicSystem>,
}

/// Splits `s` into pre-regular systems. The second list holds the residual
/// systems `[F, T, b = 0, N >= 0, P > 0, H != 0]`, one per border factor `b`,
/// which together with the pre-regular zero sets cover `Z(s)`.
pub fn generate_pre_regular_sas(s: &SemiAlgebraicSystem) -> Result<(Vec<PreRegularSAS>, Vec<SemiAlgebraicSystem>)> {
    let nv = s.nvars();
    let mut chains = triangularize(nv, &s.f);
    for p in s.p.iter().chain(&s.h) {
        let mut next = Vec::new();
        for t in &chains {
            next.extend(regularize(p, t).into_iter().filter(|b| !b.in_sat).map(|b| b.chain));
        }
        next.sort();
        next.dedup();
        chains = next;
    }
    let mut with_n: Vec<(RegularChain, Vec<Polynomial>)> = chains.into_iter().map(|t| (t, Vec::new())).collect();
    for p in &s.n {
        let mut next = Vec::new();
        for (t, n) in &with_n {
            for b in regularize(p, t) {
                let mut n2 = n.clone();
                if !b.in_sat {
                    n2.push(p.clone());
                }
                next.push((b.chain, n2));
            }
        }
        next.sort();
        next.dedup();
        with_n = next;
    }
    let mut pre = Vec::new();
    let mut residuals = Vec::new();
    for (t, n) in with_n {
        let mut strict = n;
        strict.extend(s.p.iter().cloned());
        let mut ineqs = strict.clone();
        ineqs.extend(s.h.iter().cloned());
        let bd = border_polynomial(&t, &ineqs)?;
        log::debug!("pre-regular system with {} border factor(s)", bd.factors.len());
        for b in &bd.factors {
            residuals.push(s.with_equations(s.f.iter().chain(t.polys()).chain([b]).cloned()));
        }
        let keep = critical_factors(&bd.factors, &t, &s.h);
        pre.push(PreRegularSAS { b: bd.factors, t, p: strict, keep });
    }
    Ok((pre, residuals))
}

fn critical_factors(b: &[Polynomial], t: &RegularChain, h: &[Polynomial]) -> Vec<Polynomial> {
    let mut sources: Vec<Polynomial> = t.polys().iter().map(|c| c.init().expect("non-constant")).collect();
    sources.extend(h.iter().cloned());
    let rs: Vec<Polynomial> = sources.iter().map(|q| iterated_resultant(q, t)).filter(|r| !r.is_constant()).collect();
    b.iter().filter(|f| rs.iter().any(|r| !gcd(f, r).expect("nonzero").is_constant())).cloned().collect()
}

/// Next batch of fingerprint candidates: among `pool \ d`, those with the
/// smallest main variable, and among them those of least total degree.
fn next_candidates(pool: &[Polynomial], d: &[Polynomial]) -> Vec<Polynomial> {
    let rest: Vec<&Polynomial> = pool.iter().filter(|q| !d.contains(q)).collect();
    let Some(level) = rest.iter().filter_map(|q| q.main_var()).min() else {
        return Vec::new();
    };
    let at_level: Vec<&Polynomial> = rest.into_iter().filter(|q| q.main_var() == Some(level)).collect();
    let deg = at_level.iter().map(|q| q.total_degree()).min().unwrap_or(0);
    at_level.into_iter().filter(|q| q.total_degree() == deg).cloned().collect()
}

fn specialize_at(t: &RegularChain, p: &[Polynomial], s: &SamplePoint) -> Result<(TriangularSet, Vec<Polynomial>)> {
    let ts = TriangularSet::new(t.nvars(), t.polys().iter().map(|q| s.substitute(q)).collect())?;
    Ok((ts, p.iter().map(|q| s.substitute(q)).collect()))
}

/// Eliminates the algebraic variables of a pre-regular system. Returns the
/// polynomials `D` off whose zeros the answer is exact, and at most one
/// regular semi-algebraic system whose zero set is `Z(D != 0, T = 0, P > 0)`.
pub fn generate_regular_sas(pre: &PreRegularSAS) -> Result<(Vec<Polynomial>, Vec<RegularSAS>)> {
    let PreRegularSAS { b, t, p, keep } = pre;
    let mut d = factor_set(b);
    let free: Vec<Var> = t.free_vars();
    if free.is_empty() {
        let rc = real_root_counting(t, p)?;
        let out = if rc.count == 0 {
            Vec::new()
        } else {
            vec![RegularSAS { q: SignFormula::truth(), t: t.clone(), p: p.clone(), witness: SamplePoint::empty() }]
        };
        return Ok((d, out));
    }
    let mut pool: Option<Vec<Polynomial>> = None;
    loop {
        let mut g0: BTreeSet<Vec<SignAtom>> = BTreeSet::new();
        let mut g1: BTreeSet<Vec<SignAtom>> = BTreeSet::new();
        let mut witness = None;
        for s in sample_points(&d, &free) {
            let (ts, ps) = specialize_at(t, p, &s)?;
            let count = real_root_counting(&ts, &ps)?.count;
            let g = generate_formula(&d, &s)?;
            if count == 0 {
                g0.insert(g);
            } else {
                g1.insert(g);
                witness.get_or_insert(s);
            }
        }
        if g0.is_disjoint(&g1) {
            let q = revise_formula_keeping(&g1.into_iter().collect::<Vec<_>>(), keep);
            if q.is_false() {
                return Ok((d, Vec::new()));
            }
            let witness = witness.expect("a true formula has a witness");
            return Ok((d, vec![RegularSAS { q, t: t.clone(), p: p.clone(), witness }]));
        }
        let pool = pool.get_or_insert_with(|| oaf(b));
        let extra = next_candidates(pool, &d);
        if extra.is_empty() {
            return Err(Error::FingerprintExhausted);
        }
        log::debug!("sign classes collide on {} polynomial(s), adding {}", d.len(), extra.len());
        d.extend(extra);
    }
}

fn deferred_systems(s: &SemiAlgebraicSystem, t: &RegularChain, d: &[Polynomial]) -> Vec<SemiAlgebraicSystem> {
    let mut d = d.to_vec();
    d.sort_by(|x, y| x.total_degree().cmp(&y.total_degree()).then(x.cmp(y)));
    d.into_iter().map(|q| s.with_equations(t.polys().iter().chain(&s.f).cloned().chain([q]))).collect()
}

/// Lazy triangular decomposition: the components of maximal dimension, plus
/// one deferred system `[T, F, p = 0, N, P, H]` per polynomial `p` of each
/// branch's `D`.
pub fn lazy_real_triangularize(s: &SemiAlgebraicSystem) -> Result<LazyOutput> {
    let (pre, _) = generate_pre_regular_sas(s)?;
    let mut components = Vec::new();
    let mut deferred: Vec<SemiAlgebraicSystem> = Vec::new();
    let mut seen = BTreeSet::new();
    for ps in &pre {
        let (d, r) = generate_regular_sas(ps)?;
        components.extend(r);
        for sys in deferred_systems(s, &ps.t, &d) {
            if seen.insert(sys.equation_key()) {
                deferred.push(sys);
            }
        }
    }
    Ok(LazyOutput { components, deferred })
}

/// Full triangular decomposition with the default recursion cap.
pub fn real_triangularize(s: &SemiAlgebraicSystem) -> Result<Vec<RegularSAS>> {
    real_triangularize_with(s, DEFAULT_MAX_DEPTH)
}

/// Full triangular decomposition: the union of the output zero sets is
/// `Z(s)`. Fails with `RecursionDepthExceeded` past `max_depth` levels.
pub fn real_triangularize_with(s: &SemiAlgebraicSystem, max_depth: usize) -> Result<Vec<RegularSAS>> {
    let mut out = Vec::new();
    let mut visited = BTreeSet::new();
    full(s, 0, max_depth, &mut visited, &mut out)?;
    Ok(out)
}

fn full(
    s: &SemiAlgebraicSystem,
    depth: usize,
    max_depth: usize,
    visited: &mut BTreeSet<BTreeSet<Polynomial>>,
    out: &mut Vec<RegularSAS>,
) -> Result<()> {
    if depth > max_depth {
        return Err(Error::RecursionDepthExceeded(max_depth));
    }
    if !visited.insert(s.equation_key()) {
        return Ok(());
    }
    let lazy = lazy_real_triangularize(s)?;
    for c in lazy.components {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    for sub in &lazy.deferred {
        full(sub, depth + 1, max_depth, visited, out)?;
    }
    Ok(())
}

/// Resolves the deferred calls of a lazy output, giving a full
/// decomposition of the original system.
pub fn evaluate_lazy(lazy: &LazyOutput, max_depth: usize) -> Result<Vec<RegularSAS>> {
    let mut out = lazy.components.clone();
    let mut visited = BTreeSet::new();
    for sub in &lazy.deferred {
        full(sub, 1, max_depth, &mut visited, &mut out)?;
    }
    Ok(out)
}
