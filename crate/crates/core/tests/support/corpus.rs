//! Hand-built systems with known real solution sets. Each comes with a
//! generator of rational points on the complex variety of its equations.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use realtri::{Rational, SemiAlgebraicSystem, VarOrder};

use super::membership::random_rational;
use super::rat;

type PointGen = fn(&mut ChaCha8Rng) -> Vec<Rational>;

pub struct CorpusSystem {
    pub name: &'static str,
    /// Greatest variable first.
    pub vars: &'static [&'static str],
    pub f: &'static [&'static str],
    pub n: &'static [&'static str],
    pub p: &'static [&'static str],
    pub h: &'static [&'static str],
    /// Point of `V(F)` with coordinates listed greatest variable first;
    /// `None` for systems without equations.
    pub on_variety: Option<PointGen>,
}

impl CorpusSystem {
    pub fn order(&self) -> VarOrder {
        VarOrder::from_greatest_first(self.vars.iter().copied()).unwrap()
    }

    pub fn system(&self) -> SemiAlgebraicSystem {
        let o = self.order();
        let parse = |v: &[&str]| v.iter().map(|s| o.parse(s).unwrap()).collect::<Vec<_>>();
        SemiAlgebraicSystem::new(o.clone(), parse(self.f), parse(self.n), parse(self.p), parse(self.h)).unwrap()
    }

    /// Random point, ascending variable index, on the variety when a
    /// generator exists and anywhere otherwise.
    pub fn special_point(&self, g: &mut ChaCha8Rng) -> Vec<Rational> {
        match self.on_variety {
            Some(gen) => {
                let mut v = gen(g);
                v.reverse();
                v
            }
            None => self.ambient_point(g),
        }
    }

    pub fn ambient_point(&self, g: &mut ChaCha8Rng) -> Vec<Rational> {
        (0..self.vars.len()).map(|_| random_rational(g, 3, 6)).collect()
    }
}

fn t(g: &mut ChaCha8Rng) -> Rational {
    random_rational(g, 3, 7)
}

fn nonzero_t(g: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = t(g);
        if x != rat(0) {
            return x;
        }
    }
}

fn pick(g: &mut ChaCha8Rng, pts: &[[i64; 2]]) -> Vec<Rational> {
    let p = pts[g.gen_range(0..pts.len())];
    vec![rat(p[0]), rat(p[1])]
}

pub fn corpus() -> Vec<CorpusSystem> {
    vec![
        CorpusSystem {
            name: "upper_circle",
            vars: &["y", "x"],
            f: &["x^2+y^2-1"],
            n: &[],
            p: &["y"],
            h: &[],
            on_variety: Some(|g| {
                let s = t(g);
                let d = rat(1) + &s * &s;
                vec![&(&s * rat(2)) / &d, &(rat(1) - &s * &s) / &d]
            }),
        },
        CorpusSystem {
            name: "circle_line",
            vars: &["y", "x"],
            f: &["x^2+y^2-25", "y-x-1"],
            n: &[],
            p: &[],
            h: &["x"],
            on_variety: Some(|g| pick(g, &[[4, 3], [-3, -4]])),
        },
        CorpusSystem {
            name: "half_parabola",
            vars: &["y", "x"],
            f: &["y-x^2"],
            n: &["x"],
            p: &[],
            h: &[],
            on_variety: Some(|g| {
                let s = t(g);
                vec![&s * &s, s]
            }),
        },
        CorpusSystem {
            name: "parabola_line",
            vars: &["y", "x"],
            f: &["y-x^2", "y-x-2"],
            n: &[],
            p: &["y-2"],
            h: &[],
            on_variety: Some(|g| pick(g, &[[4, 2], [1, -1]])),
        },
        CorpusSystem {
            name: "cubic_nonreal_root",
            vars: &["y", "x", "b", "a"],
            f: &["x^3-3*x*y^2+a*x+b", "3*x^2-y^2+a"],
            n: &[],
            p: &["1-x*y"],
            h: &["y"],
            on_variety: Some(|g| {
                let (x, y) = (t(g), t(g));
                let a = &y * &y - rat(3) * &x * &x;
                let b = rat(3) * &x * &y * &y - &x * &x * &x - &a * &x;
                vec![y, x, b, a]
            }),
        },
        CorpusSystem {
            name: "open_disc",
            vars: &["y", "x"],
            f: &[],
            n: &[],
            p: &["1-x^2-y^2"],
            h: &["x-y"],
            on_variety: None,
        },
        CorpusSystem {
            name: "above_parabola",
            vars: &["y", "x"],
            f: &[],
            n: &["x"],
            p: &["y-x^2"],
            h: &[],
            on_variety: None,
        },
        CorpusSystem {
            name: "upper_sphere",
            vars: &["z", "y", "x"],
            f: &["x^2+y^2+z^2-1"],
            n: &[],
            p: &["z"],
            h: &[],
            on_variety: Some(|g| {
                let (s, u) = (t(g), t(g));
                let d = rat(1) + &s * &s + &u * &u;
                let z = (&s * &s + &u * &u - rat(1)) / &d;
                vec![z, &(rat(2) * &u) / &d, &(rat(2) * &s) / &d]
            }),
        },
        CorpusSystem {
            name: "real_quadratic",
            vars: &["x", "a"],
            f: &["x^2+a*x+1"],
            n: &[],
            p: &[],
            h: &[],
            on_variety: Some(|g| {
                let s = nonzero_t(g);
                let a = -(&s * &s + rat(1)) / &s;
                vec![s, a]
            }),
        },
        CorpusSystem {
            name: "positive_root",
            vars: &["x", "a"],
            f: &["x^2-a"],
            n: &[],
            p: &["x"],
            h: &[],
            on_variety: Some(|g| {
                let s = t(g);
                vec![s.clone(), &s * &s]
            }),
        },
        CorpusSystem {
            name: "diagonal_points",
            vars: &["y", "x"],
            f: &["x^2+y^2-2", "x-y"],
            n: &[],
            p: &["x+2"],
            h: &[],
            on_variety: Some(|g| pick(g, &[[1, 1], [-1, -1]])),
        },
        CorpusSystem {
            name: "punctured_cusp",
            vars: &["y", "x"],
            f: &["y^2-x^3"],
            n: &[],
            p: &[],
            h: &["x"],
            on_variety: Some(|g| {
                let s = t(g);
                vec![&s * &s * &s, &s * &s]
            }),
        },
        CorpusSystem {
            name: "twisted_cubic_half",
            vars: &["z", "y", "x"],
            f: &["y-x^2", "z-x^3"],
            n: &["z"],
            p: &[],
            h: &[],
            on_variety: Some(|g| {
                let s = t(g);
                vec![&s * &s * &s, &s * &s, s]
            }),
        },
        CorpusSystem {
            name: "sliced_hyperbola",
            vars: &["y", "x", "a"],
            f: &["x*y-a"],
            n: &["a"],
            p: &["x+y"],
            h: &[],
            on_variety: Some(|g| {
                let (x, y) = (t(g), t(g));
                vec![y.clone(), x.clone(), &x * &y]
            }),
        },
    ]
}
