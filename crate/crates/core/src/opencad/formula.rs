use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::polyarith::{Polynomial, VarOrder};

use super::{signs_at, SamplePoint};

/// `poly * sign > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignAtom {
    pub poly: Polynomial,
    pub sign: i8,
}

impl SignAtom {
    pub fn new(poly: Polynomial, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        SignAtom { poly, sign }
    }

    pub fn holds(&self, s: &SamplePoint) -> bool {
        let x = s.eval(&self.poly);
        if self.sign > 0 {
            x > num_traits::Zero::zero()
        } else {
            x < num_traits::Zero::zero()
        }
    }

    pub fn display<'a>(&'a self, order: &'a VarOrder) -> impl fmt::Display + 'a {
        AtomDisplay { atom: self, order }
    }
}

struct AtomDisplay<'a> {
    atom: &'a SignAtom,
    order: &'a VarOrder,
}

impl fmt::Display for AtomDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.atom.sign > 0 { ">" } else { "<" };
        write!(f, "{} {} 0", self.atom.poly.display(self.order), rel)
    }
}

/// Disjunction of conjunctions of sign atoms. No clauses means `false`; a
/// single empty clause means `true`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignFormula {
    clauses: Vec<Vec<SignAtom>>,
}

impl SignFormula {
    pub fn truth() -> Self {
        SignFormula { clauses: vec![Vec::new()] }
    }

    pub fn falsity() -> Self {
        SignFormula { clauses: Vec::new() }
    }

    /// Canonical formula from clauses: atoms and clauses sorted, duplicates
    /// removed, clauses containing both signs of one polynomial dropped.
    pub fn from_clauses(clauses: impl IntoIterator<Item = Vec<SignAtom>>) -> Self {
        let mut set = BTreeSet::new();
        for mut c in clauses {
            c.sort();
            c.dedup();
            if c.windows(2).any(|w| w[0].poly == w[1].poly) {
                continue;
            }
            set.insert(c);
        }
        if set.iter().any(|c| c.is_empty()) {
            return SignFormula::truth();
        }
        SignFormula { clauses: set.into_iter().collect() }
    }

    pub fn clauses(&self) -> &[Vec<SignAtom>] {
        &self.clauses
    }

    pub fn is_true(&self) -> bool {
        self.clauses.len() == 1 && self.clauses[0].is_empty()
    }

    pub fn is_false(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Polynomials mentioned by the formula, sorted.
    pub fn polys(&self) -> Vec<Polynomial> {
        let set: BTreeSet<&Polynomial> = self.clauses.iter().flatten().map(|a| &a.poly).collect();
        set.into_iter().cloned().collect()
    }

    /// Truth value at `s`, which must assign every variable the formula uses.
    pub fn holds(&self, s: &SamplePoint) -> bool {
        self.clauses.iter().any(|c| c.iter().all(|a| a.holds(s)))
    }

    pub fn display<'a>(&'a self, order: &'a VarOrder) -> impl fmt::Display + 'a {
        FormulaDisplay { formula: self, order }
    }
}

struct FormulaDisplay<'a> {
    formula: &'a SignFormula,
    order: &'a VarOrder,
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.formula.is_false() {
            return write!(f, "false");
        }
        if self.formula.is_true() {
            return write!(f, "true");
        }
        let multi = self.formula.clauses.len() > 1;
        for (i, c) in self.formula.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " or ")?;
            }
            let paren = multi && c.len() > 1;
            if paren {
                write!(f, "(")?;
            }
            for (j, a) in c.iter().enumerate() {
                if j > 0 {
                    write!(f, " and ")?;
                }
                write!(f, "{}", a.display(self.order))?;
            }
            if paren {
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

/// Conjunction of the sign conditions of `a` at `s`.
pub fn generate_formula(a: &[Polynomial], s: &SamplePoint) -> Result<Vec<SignAtom>> {
    let signs = signs_at(a, s)?;
    let mut c: Vec<SignAtom> = a.iter().zip(signs).map(|(p, sg)| SignAtom::new(p.clone(), sg)).collect();
    c.sort();
    c.dedup();
    Ok(c)
}

/// Above this many distinct polynomials the clauses are returned unmerged.
pub const MINIMIZE_MAX_POLYS: usize = 12;

/// Formula equivalent to the disjunction of `g` wherever no mentioned
/// polynomial vanishes. Clauses over the same polynomials that differ in
/// exactly one sign are merged repeatedly, then subsumed clauses are
/// dropped.
pub fn revise_formula(g: &[Vec<SignAtom>]) -> SignFormula {
    revise_formula_keeping(g, &[])
}

/// As [`revise_formula`], but never merges away an atom on a member of
/// `keep`, so the result still excludes the zeros of those polynomials.
pub fn revise_formula_keeping(g: &[Vec<SignAtom>], keep: &[Polynomial]) -> SignFormula {
    let raw = SignFormula::from_clauses(g.iter().cloned());
    if raw.is_true() || raw.is_false() || raw.polys().len() > MINIMIZE_MAX_POLYS {
        return raw;
    }
    let mut all: BTreeSet<Vec<SignAtom>> = raw.clauses.iter().cloned().collect();
    let mut frontier: BTreeSet<Vec<SignAtom>> = all.clone();
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        let items: Vec<&Vec<SignAtom>> = frontier.iter().collect();
        for (i, c1) in items.iter().enumerate() {
            for c2 in &items[i + 1..] {
                if let Some(m) = merge(c1, c2, keep) {
                    if !all.contains(&m) {
                        next.insert(m);
                    }
                }
            }
            // merging with older clauses of the same shape
            for c2 in all.iter() {
                if let Some(m) = merge(c1, c2, keep) {
                    if !all.contains(&m) {
                        next.insert(m);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    let kept: Vec<Vec<SignAtom>> =
        all.iter().filter(|c| !all.iter().any(|d| d != *c && is_subset(d, c))).cloned().collect();
    SignFormula::from_clauses(kept)
}

fn merge(c1: &[SignAtom], c2: &[SignAtom], keep: &[Polynomial]) -> Option<Vec<SignAtom>> {
    if c1.len() != c2.len() {
        return None;
    }
    let mut diff = None;
    for (i, (a, b)) in c1.iter().zip(c2).enumerate() {
        if a.poly != b.poly {
            return None;
        }
        if a.sign != b.sign {
            if diff.is_some() {
                return None;
            }
            diff = Some(i);
        }
    }
    let i = diff?;
    if keep.contains(&c1[i].poly) {
        return None;
    }
    let mut m = c1.to_vec();
    m.remove(i);
    Some(m)
}

fn is_subset(small: &[SignAtom], big: &[SignAtom]) -> bool {
    small.iter().all(|a| big.contains(a))
}
