//! Iterated resultants and border polynomials of squarefree regular systems.

use crate::chains::{RegularChain, TriangularSet};
use crate::error::{Error, Result};
use crate::polyarith::{gcd_free_basis, resultant, Polynomial};

/// `res(p, T)`: resultant against the element with the greatest main
/// variable, then recursively against the rest. `res(p, ∅) = p`.
pub fn iterated_resultant(p: &Polynomial, t: &TriangularSet) -> Polynomial {
    let mut r = p.clone();
    for c in t.polys().iter().rev() {
        if r.is_zero() {
            break;
        }
        let v = c.main_var().expect("non-constant");
        r = resultant(&r, c, v).expect("chain element is non-constant");
    }
    r
}

/// Border polynomial of a regular system together with its factor basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderData {
    /// Primitive squarefree part of the product of all iterated resultants.
    pub bp: Polynomial,
    /// Coprime squarefree basis of the iterated resultants (no constants).
    pub factors: Vec<Polynomial>,
    /// `(source, res(source, T))` for each `der(t)` then each `h`.
    pub per_source: Vec<(Polynomial, Polynomial)>,
}

/// Border polynomial of `[t, h]`. Fails with `NonRegularInequation` when
/// some `h` is a zero-divisor modulo `sat(t)` (its iterated resultant is 0).
pub fn border_polynomial(t: &RegularChain, h: &[Polynomial]) -> Result<BorderData> {
    let mut per_source = Vec::new();
    for c in t.polys() {
        let d = c.der()?;
        let r = iterated_resultant(&d, t);
        per_source.push((d, r));
    }
    for (i, p) in h.iter().enumerate() {
        let r = iterated_resultant(p, t);
        if r.is_zero() {
            return Err(Error::NonRegularInequation(format!("H[{i}]")));
        }
        per_source.push((p.clone(), r));
    }
    if per_source.iter().any(|(_, r)| r.is_zero()) {
        return Err(Error::InvalidArgument("chain is not squarefree".into()));
    }
    let factors = gcd_free_basis(per_source.iter().map(|(_, r)| r));
    let nvars = t.nvars();
    let bp = factors.iter().fold(Polynomial::one(nvars), |acc, f| &acc * f).normalized();
    Ok(BorderData { bp, factors, per_source })
}

/// Measured total degree of the border polynomial against the bound
/// `(l + m) 2^(m-1) d^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub measured: u64,
    /// `None` when the chain is empty (no bound is checked).
    pub bound: Option<u64>,
}

/// Checks the total degree of `bd.bp` against `(l + m) 2^(m-1) d^m`, with
/// `m = #t`, `l = #h` and `d` the largest total degree in `t ∪ h`.
pub fn degree_telemetry(bd: &BorderData, t: &RegularChain, h: &[Polynomial]) -> Result<DegreeReport> {
    let measured = bd.bp.total_degree() as u64;
    let m = t.len() as u32;
    if m == 0 {
        return Ok(DegreeReport { measured, bound: None });
    }
    let l = h.len() as u64;
    let delta = t.polys().iter().chain(h).map(|p| p.total_degree() as u64).max().unwrap_or(0);
    let bound = (l + m as u64) * (1u64 << (m - 1)) * delta.pow(m);
    log::debug!("border degree {measured} (bound {bound})");
    if measured > bound {
        return Err(Error::BoundViolation { measured, bound });
    }
    Ok(DegreeReport { measured, bound: Some(bound) })
}
