//! Exact rational arithmetic and sparse multivariate polynomials.
//!
//! Variables are identified by their index in a [`VarOrder`]; index 0 is the
//! smallest variable. Polynomials keep their terms sorted by the lexicographic
//! order that compares the greatest variable first, so the first term is
//! always the leading term and `mvar`/`init` can be read off directly.

mod basis;
mod gcd;
mod parse;
mod poly;
mod subres;

pub use basis::gcd_free_basis;
pub(crate) use gcd::split_factors;
pub use gcd::{content, gcd, primitive_part, squarefree_part};
pub use parse::parse_polynomial;
pub use poly::{Monomial, PolyDisplay, Polynomial};
pub use subres::{discriminant, pseudo_divide, pseudo_remainder, resultant, subresultant_chain};

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Index of a variable inside a [`VarOrder`] (0 = smallest).
pub type Var = usize;

/// A fixed total order on named variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarOrder {
    // names[0] is the smallest variable
    names: Vec<String>,
}

impl VarOrder {
    /// Builds an order from names listed smallest first.
    pub fn new<S: Into<String>>(smallest_first: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = smallest_first.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::InvalidVarOrder(n.clone()));
            }
        }
        Ok(VarOrder { names })
    }

    /// Builds an order from names listed greatest first, as in `y > x > b > a`.
    pub fn from_greatest_first<S: Into<String>>(greatest_first: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut names: Vec<String> = greatest_first.into_iter().map(Into::into).collect();
        names.reverse();
        VarOrder::new(names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v]
    }

    pub fn index(&self, name: &str) -> Option<Var> {
        self.names.iter().position(|n| n == name)
    }

    /// Names, smallest first.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Convenience for tests and examples: parse a polynomial over this order.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(text, self)
    }
}
