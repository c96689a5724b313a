//! Triangular sets, regular chains and regular systems, with regularization
//! and triangular decomposition over the complex numbers.
//!
//! Chains built by this module are always squarefree, so their saturated
//! ideals are radical and membership reduces to a pseudo-remainder test.

mod algo;

use std::fmt;

use crate::border::iterated_resultant;
use crate::error::{Error, Result};
use crate::polyarith::{pseudo_remainder, Polynomial, Var, VarOrder};

pub(crate) use algo::{clean_chain, intersect, regularize_w, Mode, Status};

/// Non-constant polynomials with pairwise distinct main variables, sorted by
/// main variable (smallest first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangularSet {
    nvars: usize,
    polys: Vec<Polynomial>,
}

impl TriangularSet {
    pub fn empty(nvars: usize) -> Self {
        TriangularSet { nvars, polys: Vec::new() }
    }

    /// Sorts `polys` by main variable; fails on constants or repeated main
    /// variables.
    pub fn new(nvars: usize, mut polys: Vec<Polynomial>) -> Result<Self> {
        for p in &polys {
            if p.nvars() != nvars {
                return Err(Error::InvalidArgument("polynomial over a different order".into()));
            }
            p.mvar()?;
        }
        polys.sort_by_key(|p| p.main_var());
        if polys.windows(2).any(|w| w[0].main_var() == w[1].main_var()) {
            return Err(Error::InvalidArgument("main variables are not distinct".into()));
        }
        Ok(TriangularSet { nvars, polys })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Main variables, ascending.
    pub fn mvars(&self) -> Vec<Var> {
        self.polys.iter().map(|p| p.main_var().expect("non-constant")).collect()
    }

    pub fn is_algebraic(&self, v: Var) -> bool {
        self.poly_with_mvar(v).is_some()
    }

    /// Variables that are not the main variable of any element, ascending.
    pub fn free_vars(&self) -> Vec<Var> {
        let alg = self.mvars();
        (0..self.nvars).filter(|v| !alg.contains(v)).collect()
    }

    pub fn dimension(&self) -> usize {
        self.nvars - self.polys.len()
    }

    pub fn poly_with_mvar(&self, v: Var) -> Option<&Polynomial> {
        self.polys.iter().find(|p| p.main_var() == Some(v))
    }

    /// Elements with main variable below `v`.
    pub fn lower(&self, v: Var) -> TriangularSet {
        let polys = self.polys.iter().filter(|p| p.main_var() < Some(v)).cloned().collect();
        TriangularSet { nvars: self.nvars, polys }
    }

    /// Elements with main variable at most `v`.
    pub fn lower_incl(&self, v: Var) -> TriangularSet {
        let polys = self.polys.iter().filter(|p| p.main_var() <= Some(v)).cloned().collect();
        TriangularSet { nvars: self.nvars, polys }
    }

    /// Elements with main variable above `v`, ascending.
    pub fn upper(&self, v: Var) -> Vec<Polynomial> {
        self.polys.iter().filter(|p| p.main_var() > Some(v)).cloned().collect()
    }

    /// Adds `t`, whose main variable must exceed every main variable present.
    pub(crate) fn with(&self, t: Polynomial) -> TriangularSet {
        debug_assert!(self.polys.last().map_or(true, |l| l.main_var() < t.main_var()));
        let mut polys = self.polys.clone();
        polys.push(t);
        TriangularSet { nvars: self.nvars, polys }
    }

    /// Product of the initials.
    pub fn init_product(&self) -> Polynomial {
        self.polys.iter().fold(Polynomial::one(self.nvars), |acc, t| &acc * &t.init().expect("non-constant"))
    }

    /// Iterated pseudo-remainder of `p`, greatest main variable first. The
    /// result is scaled to a primitive integer polynomial (zero stays zero).
    pub fn prem(&self, p: &Polynomial) -> Polynomial {
        let mut r = p.clone();
        for t in self.polys.iter().rev() {
            if r.is_zero() {
                break;
            }
            let v = t.main_var().expect("non-constant");
            r = pseudo_remainder(&r, t, v);
        }
        r.normalized()
    }

    pub fn display<'a>(&'a self, order: &'a VarOrder) -> impl fmt::Display + 'a {
        ListDisplay { polys: &self.polys, order }
    }
}

struct ListDisplay<'a> {
    polys: &'a [Polynomial],
    order: &'a VarOrder,
}

impl fmt::Display for ListDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.polys.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p.display(self.order))?;
        }
        write!(f, "]")
    }
}

/// Triangular set whose initials are each regular modulo the saturated ideal
/// of the chain below.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegularChain {
    base: TriangularSet,
    squarefree_certified: bool,
}

impl RegularChain {
    pub fn empty(nvars: usize) -> Self {
        RegularChain { base: TriangularSet::empty(nvars), squarefree_certified: true }
    }

    /// Checks the regularity of every initial through the iterated resultant
    /// criterion and records whether the chain is squarefree.
    pub fn new(nvars: usize, polys: Vec<Polynomial>) -> Result<Self> {
        let ts = TriangularSet::new(nvars, polys)?;
        for (i, t) in ts.polys.iter().enumerate() {
            let lower = TriangularSet { nvars, polys: ts.polys[..i].to_vec() };
            if iterated_resultant(&t.init()?, &lower).is_zero() {
                return Err(Error::InvalidArgument("an initial is a zero-divisor".into()));
            }
        }
        let sqf = ts.polys.iter().all(|t| !iterated_resultant(&t.der().expect("non-constant"), &ts).is_zero());
        Ok(RegularChain { base: ts, squarefree_certified: sqf })
    }

    pub(crate) fn from_squarefree(ts: TriangularSet) -> Self {
        RegularChain { base: ts, squarefree_certified: true }
    }

    pub fn base(&self) -> &TriangularSet {
        &self.base
    }

    pub fn is_squarefree_certified(&self) -> bool {
        self.squarefree_certified
    }
}

impl std::ops::Deref for RegularChain {
    type Target = TriangularSet;

    fn deref(&self) -> &TriangularSet {
        &self.base
    }
}

/// A regular chain together with inequations regular modulo its saturated
/// ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSystem {
    chain: RegularChain,
    ineqs: Vec<Polynomial>,
}

impl RegularSystem {
    pub fn new(chain: RegularChain, ineqs: Vec<Polynomial>) -> Result<Self> {
        for (i, h) in ineqs.iter().enumerate() {
            if iterated_resultant(h, &chain).is_zero() {
                return Err(Error::NonRegularInequation(format!("H[{i}]")));
            }
        }
        Ok(RegularSystem { chain, ineqs })
    }

    pub fn chain(&self) -> &RegularChain {
        &self.chain
    }

    pub fn ineqs(&self) -> &[Polynomial] {
        &self.ineqs
    }
}

/// One output branch of [`regularize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub chain: RegularChain,
    /// `true` when the polynomial lies in the saturated ideal of `chain`,
    /// `false` when it is regular modulo it.
    pub in_sat: bool,
}

fn squarefree_input(t: &RegularChain) -> Vec<TriangularSet> {
    if t.squarefree_certified {
        vec![t.base.clone()]
    } else {
        clean_chain(&TriangularSet::empty(t.nvars), t.polys(), Mode::Kalkbrener)
    }
}

/// Splits `t` into chains with the same main variables on each of which `p`
/// is either zero or regular. The union of the closures of the quasi
/// components is that of `t`.
pub fn regularize(p: &Polynomial, t: &RegularChain) -> Vec<Branch> {
    let mut out: Vec<Branch> = Vec::new();
    for base in squarefree_input(t) {
        for (c, st) in regularize_w(p, &base, Mode::Kalkbrener) {
            out.push(Branch { chain: RegularChain::from_squarefree(c), in_sat: st == Status::InSat });
        }
    }
    out.sort_by(|a, b| a.chain.cmp(&b.chain).then(a.in_sat.cmp(&b.in_sat)));
    out.dedup();
    out
}

/// `true` iff `p` is not a zero-divisor modulo the saturated ideal of `t`.
pub fn is_regular(p: &Polynomial, t: &RegularChain) -> bool {
    regularize(p, t).iter().all(|b| !b.in_sat)
}

/// `true` iff `p` lies in the saturated ideal of `t` (pseudo-remainder test).
pub fn saturated_membership(p: &Polynomial, t: &RegularChain) -> bool {
    t.prem(p).is_zero()
}

/// Squarefree chains whose quasi-components cover that of `t`, each inside
/// its closure.
pub fn make_squarefree(t: &RegularChain) -> Vec<RegularChain> {
    let mut out: Vec<RegularChain> = clean_chain(&TriangularSet::empty(t.nvars), t.polys(), Mode::Lazard)
        .into_iter()
        .map(RegularChain::from_squarefree)
        .collect();
    out.sort();
    out.dedup();
    out
}

fn selection_key(p: &Polynomial) -> (Option<Var>, u32, u32, u32, Polynomial) {
    let v = p.main_var();
    let (deg, ideg) = match v {
        Some(v) => (p.degree(v), p.leading_coeff_in(v).total_degree()),
        None => (0, 0),
    };
    (v, deg, ideg, p.total_degree(), p.clone())
}

/// Triangular decomposition of `V(F)`: the union of the quasi-components of
/// the output chains is `V(F)` (so the union of their closures is as well).
/// Every output chain is squarefree and pseudo-reduces each `f` to zero.
/// Equations are processed by increasing main variable, then main degree.
pub fn triangularize(nvars: usize, f: &[Polynomial]) -> Vec<RegularChain> {
    let mut eqs: Vec<Polynomial> = f.iter().filter(|p| !p.is_zero()).map(|p| p.normalized()).collect();
    if eqs.iter().any(|p| p.is_constant()) {
        return Vec::new();
    }
    eqs.sort_by_key(selection_key);
    eqs.dedup();
    let mut chains = vec![TriangularSet::empty(nvars)];
    for p in &eqs {
        let mut next = Vec::new();
        for c in &chains {
            next.extend(intersect(p, c));
        }
        next.sort();
        next.dedup();
        chains = next;
        log::debug!("triangularize: {} chain(s) after {} term(s)", chains.len(), p.num_terms());
    }
    chains.into_iter().map(RegularChain::from_squarefree).collect()
}
