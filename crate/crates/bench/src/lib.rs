//! Fixtures shared by the benchmarks in `benches/`.

use realtri::{Polynomial, SemiAlgebraicSystem, VarOrder};

/// Variable order `y > x > b > a`.
pub fn order() -> VarOrder {
    VarOrder::from_greatest_first(["y", "x", "b", "a"]).expect("valid order")
}

pub fn poly(s: &str) -> Polynomial {
    order().parse(s).expect("valid polynomial")
}

/// Cubic with a nonreal root pair: `x^3 - 3xy^2 + ax + b = 0`,
/// `3x^2 - y^2 + a = 0`, `1 - xy > 0`, `y != 0`.
pub fn cubic_system() -> SemiAlgebraicSystem {
    SemiAlgebraicSystem::new(
        order(),
        vec![poly("x^3-3*x*y^2+a*x+b"), poly("3*x^2-y^2+a")],
        vec![],
        vec![poly("1-x*y")],
        vec![poly("y")],
    )
    .expect("consistent system")
}

/// Dense bivariate pair for resultant timings.
pub fn resultant_pair() -> (Polynomial, Polynomial) {
    (poly("3*x^4+a*x^3-2*b*x^2+(a^2-b)*x+7"), poly("x^3-5*a*b*x+a^3-2*b^2"))
}
