//! Triangular decomposition of semi-algebraic systems with rational
//! coefficients: regular chains, border polynomials, open-CAD based
//! quantifier elimination and the lazy and full real triangularize drivers.

pub mod border;
pub mod chains;
pub mod driver;
pub mod error;
pub mod opencad;
pub mod polyarith;
pub mod realroots;

pub use border::{border_polynomial, degree_telemetry, iterated_resultant, BorderData, DegreeReport};
pub use chains::{
    is_regular, make_squarefree, regularize, saturated_membership, triangularize, Branch, RegularChain, RegularSystem,
    TriangularSet,
};
pub use driver::{
    evaluate_lazy, generate_pre_regular_sas, generate_regular_sas, lazy_real_triangularize, real_triangularize,
    real_triangularize_with, LazyOutput, PreRegularSAS, RegularSAS, SemiAlgebraicSystem, DEFAULT_MAX_DEPTH,
};
pub use error::{Error, Result};
pub use opencad::{
    derivative_closure, generate_formula, oaf, oproj, revise_formula, revise_formula_keeping, sample_points,
    SamplePoint, SignAtom, SignFormula,
};
pub use polyarith::{Polynomial, Rational, Var, VarOrder};
pub use realroots::{isolate_univariate, real_root_counting, sign_at, Interval, IsolatingBox, RootCount};
