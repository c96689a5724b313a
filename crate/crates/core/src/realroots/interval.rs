use num_traits::{One, Signed, Zero};

use crate::polyarith::{Polynomial, Rational};

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// -1 or 1 when the interval excludes zero, 0 for the point zero,
    /// `None` when zero is an interior or end point of a proper interval.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        if c.is_negative() {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        if o.is_point() {
            return self.scale(&o.lo);
        }
        if self.is_point() {
            return o.scale(&self.lo);
        }
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().expect("four").clone();
        let hi = c.iter().max().expect("four").clone();
        Interval { lo, hi }
    }

    pub fn pow(&self, e: u32) -> Interval {
        if e == 0 {
            return Interval::point(Rational::one());
        }
        let a = num_traits::pow(self.lo.clone(), e as usize);
        let b = num_traits::pow(self.hi.clone(), e as usize);
        if e % 2 == 1 || self.lo.is_positive() || self.lo.is_zero() {
            Interval { lo: a, hi: b }
        } else if self.hi.is_negative() || self.hi.is_zero() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: Rational::zero(), hi: a.max(b) }
        }
    }

    /// Largest absolute value.
    pub fn mag(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value.
    pub fn mig(&self) -> Rational {
        match self.sign() {
            Some(1) => self.lo.clone(),
            Some(-1) => -self.hi.clone(),
            _ => Rational::zero(),
        }
    }
}

/// Natural interval extension of `p` over the box `coords` (one interval
/// per variable).
pub fn eval_interval(p: &Polynomial, coords: &[Interval]) -> Interval {
    let mut acc = Interval::point(Rational::zero());
    for (m, c) in p.terms() {
        let mut t = Interval::point(c.clone());
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = t.mul(&coords[v].pow(e));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// Dense interval polynomial, coefficient `i` of `x^i`.
pub type IPoly = Vec<Interval>;

pub fn ipoly_eval(c: &[Interval], x: &Rational) -> Interval {
    let mut acc = Interval::point(Rational::zero());
    for a in c.iter().rev() {
        acc = acc.scale(x).add(a);
    }
    acc
}

// p(x + a)
fn taylor_shift(c: &mut [Interval], a: &Rational) {
    let n = c.len();
    if a.is_zero() {
        return;
    }
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = c[j + 1].scale(a);
            c[j] = c[j].add(&t);
        }
    }
}

// p(w x)
fn scale_var(c: &mut [Interval], w: &Rational) {
    let mut f = Rational::one();
    for a in c.iter_mut() {
        *a = a.scale(&f);
        f *= w;
    }
}

/// Bounds on the number of sign variations of the coefficient sequence over
/// all real sequences inside the intervals.
fn variation_range(c: &[Interval]) -> (usize, usize) {
    // dp over last nonzero sign: index 0 = none yet, 1 = negative, 2 = positive
    const INF: usize = usize::MAX / 2;
    let mut lo = [0usize, INF, INF];
    let mut hi = [0usize, 0, 0];
    let mut reach = [true, false, false];
    for a in c {
        let choices: &[i8] = match a.sign() {
            Some(0) => &[0],
            Some(1) => &[1],
            Some(-1) => &[-1],
            _ => {
                if a.lo.is_zero() {
                    &[0, 1]
                } else if a.hi.is_zero() {
                    &[0, -1]
                } else {
                    &[-1, 0, 1]
                }
            }
        };
        let mut nlo = [INF; 3];
        let mut nhi = [0usize; 3];
        let mut nreach = [false; 3];
        for s in 0..3 {
            if !reach[s] {
                continue;
            }
            for &ch in choices {
                let (ns, add) = match ch {
                    0 => (s, 0),
                    -1 => (1, usize::from(s == 2)),
                    _ => (2, usize::from(s == 1)),
                };
                nreach[ns] = true;
                nlo[ns] = nlo[ns].min(lo[s] + add);
                nhi[ns] = nhi[ns].max(hi[s] + add);
            }
        }
        lo = nlo;
        hi = nhi;
        reach = nreach;
    }
    let mut mn = INF;
    let mut mx = 0;
    for s in 0..3 {
        if reach[s] {
            mn = mn.min(lo[s]);
            mx = mx.max(hi[s]);
        }
    }
    (mn, mx)
}

/// Descartes bound for the number of roots in the open interval `(a, b)`;
/// `None` when the coefficient enclosures are too wide to decide.
pub fn descartes(c: &[Interval], a: &Rational, b: &Rational) -> Option<usize> {
    let mut q = c.to_vec();
    taylor_shift(&mut q, a);
    scale_var(&mut q, &(b - a));
    q.reverse();
    taylor_shift(&mut q, &Rational::one());
    let (lo, hi) = variation_range(&q);
    (lo == hi).then_some(lo)
}
