use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::poly::{monomial_str, owned_ops, push_term, UniPoly};
use super::rat::{rat, Rat};

/// Sparse bivariate polynomial keyed by exponent pairs. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 0, Rat::one())
    }

    pub fn term(a: u32, b: u32, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn x() -> Self {
        Self::term(1, 0, Rat::one())
    }

    pub fn y() -> Self {
        Self::term(0, 1, Rat::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, u32, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (a, b, c) in it {
            p.add_term(a, b, rat(c));
        }
        p
    }

    /// Embeds a univariate polynomial in the first variable.
    pub fn from_x(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as u32, 0, c.clone());
        }
        out
    }

    pub fn from_y(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, i as u32, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rat {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rat)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = Self::zero();
        for (a, b, c) in self.terms() {
            out.add_term(a, b, c * s);
        }
        out
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (a, b, c) in self.terms() {
            acc += c * num_traits::pow(x.clone(), a as usize) * num_traits::pow(y.clone(), b as usize);
        }
        acc
    }

    /// Substitutes univariate polynomials for both variables.
    pub fn eval_uni(&self, x: &UniPoly, y: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (a, b, c) in self.terms() {
            acc += &(&x.pow(a as usize) * &y.pow(b as usize)).scale(c);
        }
        acc
    }

    /// Swaps the two variables.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero();
        for (a, b, c) in self.terms() {
            out.add_term(b, a, c.clone());
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| *c >= Rat::zero())
    }

    /// Text form: descending degree in the first variable, then ascending in
    /// the second.
    pub fn fmt_vars(&self, x: &str, y: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|p, q| q.0.cmp(&p.0).then(p.1.cmp(&q.1)));
        let mut out = String::new();
        for (a, b) in keys {
            let mono = monomial_str(&[(x, a as usize), (y, b as usize)]);
            push_term(&mut out, &self.terms[&(a, b)], &mono);
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_vars("x", "y"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (a, b, c) in o.terms() {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (a, b, c) in o.terms() {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (a, b, c) in self.terms() {
            for (a2, b2, c2) in o.terms() {
                out.add_term(a + a2, b + b2, c * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rat::one())
    }
}

owned_ops!(BiPoly);
