//! Seeded random polynomial generators.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use realtri::{Polynomial, Var};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polynomial in `vars` with at most `terms` terms of total degree at
/// most `deg` and integer coefficients in `[-c, c]`; never zero.
pub fn poly(r: &mut ChaCha8Rng, nvars: usize, vars: &[Var], deg: u32, terms: usize, c: i64) -> Polynomial {
    loop {
        let mut acc = Polynomial::zero(nvars);
        for _ in 0..terms {
            let mut m = Polynomial::from_int(nvars, r.gen_range(-c..=c));
            let mut left = deg;
            for &v in vars {
                let e = r.gen_range(0..=left);
                left -= e;
                m = &m * &Polynomial::var(nvars, v).pow(e);
            }
            acc = &acc + &m;
        }
        if !acc.is_constant() {
            return acc;
        }
    }
}

/// As [`poly`], but of positive degree in `main` with a constant nonzero
/// coefficient of `main^deg_main` added, so the leading part is generic.
pub fn poly_with_top(
    r: &mut ChaCha8Rng,
    nvars: usize,
    vars: &[Var],
    main: Var,
    deg_main: u32,
    terms: usize,
    c: i64,
) -> Polynomial {
    let lead = loop {
        let k = r.gen_range(-c..=c);
        if k != 0 {
            break k;
        }
    };
    let top = Polynomial::var(nvars, main).pow(deg_main).scale(&super::rat(lead));
    let rest = poly(r, nvars, vars, deg_main, terms, c);
    &top + &rest
}
