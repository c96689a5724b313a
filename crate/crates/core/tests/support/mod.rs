//! Independent checkers and generators shared by the integration suites.

#![allow(dead_code)]

pub mod corpus;
pub mod grid;
pub mod membership;
pub mod oracle;
pub mod random;

use realtri::Rational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
