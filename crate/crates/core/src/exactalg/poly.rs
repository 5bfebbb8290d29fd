use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{format_rat, rat, Rat};

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zeros are always trimmed so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct UniPoly {
    c: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(v: Rat) -> Self {
        Self::new(vec![v])
    }

    pub fn t() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn new(c: Vec<Rat>) -> Self {
        let mut p = Self { c };
        p.trim();
        p
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(c: I) -> Self {
        Self::new(c.into_iter().map(rat).collect())
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(c: I) -> Self {
        Self::new(c.into_iter().map(Rat::from_integer).collect())
    }

    pub fn monomial(d: usize, v: Rat) -> Self {
        let mut c = vec![Rat::zero(); d + 1];
        c[d] = v;
        Self::new(c)
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.c.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_i(&self, x: i64) -> Rat {
        self.eval(&rat(x))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.c.iter().map(|a| a * s).collect())
    }

    pub fn compose(&self, q: &UniPoly) -> Self {
        let mut acc = Self::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * q) + &Self::constant(a.clone());
        }
        acc
    }

    /// p(t + s).
    pub fn shift(&self, s: i64) -> Self {
        self.compose(&Self::from_ints([s, 1]))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps only degrees at most `d`.
    pub fn truncate(&self, d: usize) -> Self {
        Self::new(self.c.iter().take(d + 1).cloned().collect())
    }

    /// t^d p(1/t), requiring deg p <= d.
    pub fn reverse(&self, d: usize) -> Self {
        assert!(self.c.len() <= d + 1, "reverse below degree");
        let mut c = vec![Rat::zero(); d + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[d - i] = a.clone();
        }
        Self::new(c)
    }

    pub fn is_palindromic(&self, d: usize) -> bool {
        self.c.len() <= d + 1 && self.reverse(d) == *self
    }

    pub fn is_nonnegative(&self) -> bool {
        self.c.iter().all(|a| !a.is_negative())
    }

    /// Coefficientwise comparison `self <= other`.
    pub fn le_coeffwise(&self, other: &UniPoly) -> bool {
        let n = self.c.len().max(other.c.len());
        (0..n).all(|i| self.coeff(i) <= other.coeff(i))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            push_term(&mut out, a, &monomial_str(&[(var, d)]));
        }
        out
    }
}

pub(crate) fn monomial_str(parts: &[(&str, usize)]) -> String {
    parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn push_term(out: &mut String, a: &Rat, mono: &str) {
    let neg = a.is_negative();
    let mag = a.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&format_rat(&mag));
    } else if mag.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&format_rat(&mag));
        out.push('*');
        out.push_str(mono);
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.c.iter().map(|a| -a).collect())
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl AddAssign<&$t> for $t {
            fn add_assign(&mut self, o: &$t) {
                *self = &*self + o;
            }
        }
        impl SubAssign<&$t> for $t {
            fn sub_assign(&mut self, o: &$t) {
                *self = &*self - o;
            }
        }
    };
}
pub(crate) use owned_ops;

owned_ops!(UniPoly);
