//! Sparse multivariate polynomials over ℚ in the fixed variable set
//! {x, x1, x2, λ}.
//!
//! Terms are kept in graded-lexicographic order on the fixed variable
//! order (x, x1, x2, λ) and zero coefficients are never stored, so two
//! polynomials are mathematically equal exactly when their representations
//! are identical. That property is what the identity suite leans on: a
//! verified identity is literally `lhs - rhs == MPoly::zero()`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::rational::Rational;

/// Number of polynomial variables.
pub const NVARS: usize = 4;

/// A polynomial variable, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    X1,
    X2,
    Lambda,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::X1, Var::X2, Var::Lambda];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Canonical ASCII name, as used in serialized documents.
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::Lambda => "lambda",
        }
    }

    /// Short name for terminal display.
    pub fn display_name(self) -> &'static str {
        match self {
            Var::Lambda => "λ",
            v => v.name(),
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "x" => Some(Var::X),
            "x1" => Some(Var::X1),
            "x2" => Some(Var::X2),
            "lambda" | "λ" => Some(Var::Lambda),
            _ => None,
        }
    }
}

/// Exponent vector; component `i` is the power of `Var::ALL[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponents([u16; NVARS]);

impl Exponents {
    pub const ZERO: Exponents = Exponents([0; NVARS]);

    pub fn new(e: [u16; NVARS]) -> Self {
        Exponents(e)
    }

    pub fn of_var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Exponents(e)
    }

    pub fn get(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn as_array(&self) -> [u16; NVARS] {
        self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Exponents(e)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in {x, x1, x2, λ} with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MPoly {
    // Invariant: no stored coefficient is zero.
    terms: BTreeMap<Exponents, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MPoly::zero();
        p.add_term(Exponents::ZERO, c);
        p
    }

    pub fn var(v: Var) -> Self {
        MPoly::monomial(Exponents::of_var(v), Rational::one())
    }

    pub fn monomial(exp: Exponents, coef: Rational) -> Self {
        let mut p = MPoly::zero();
        p.add_term(exp, coef);
        p
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponents, Rational)>>(terms: I) -> Self {
        let mut p = MPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: Exponents, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponents) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Exponents::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|e| e.get(v)).max().unwrap_or(0)
    }

    /// The value of a constant polynomial, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Exponents::ZERO).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution of the bound variables. Unbound variables
    /// are left alone, so this is a ℚ-algebra map into the same ring.
    pub fn substitute(&self, bindings: &Bindings) -> MPoly {
        // Per-variable power caches; powers are built on demand.
        let mut pows: [Vec<MPoly>; NVARS] = Default::default();
        let mut out = MPoly::zero();
        for (exp, coef) in &self.terms {
            let mut bound = MPoly::constant(coef.clone());
            let mut free = [0u16; NVARS];
            for v in Var::ALL {
                let e = exp.get(v);
                if e == 0 {
                    continue;
                }
                match &bindings.map[v.index()] {
                    Some(val) => {
                        let cache = &mut pows[v.index()];
                        if cache.is_empty() {
                            cache.push(MPoly::one());
                        }
                        while cache.len() <= usize::from(e) {
                            let next = &cache[cache.len() - 1] * val;
                            cache.push(next);
                        }
                        bound = &bound * &cache[usize::from(e)];
                    }
                    None => free[v.index()] = e,
                }
            }
            if free != [0; NVARS] {
                bound = bound.mul_monomial(&Exponents::new(free));
            }
            out = &out + &bound;
        }
        out
    }

    /// λ ↦ -λ.
    pub fn negate_lambda(&self) -> MPoly {
        let neg = MPoly::var(Var::Lambda).scale(&-Rational::one());
        self.substitute(&Bindings::new().set(Var::Lambda, neg))
    }

    /// Full evaluation at a rational point.
    pub fn eval(&self, x: &Rational, x1: &Rational, x2: &Rational, lambda: &Rational) -> Rational {
        let point = [x, x1, x2, lambda];
        let mut acc = Rational::zero();
        for (exp, coef) in &self.terms {
            let mut t = coef.clone();
            for v in Var::ALL {
                for _ in 0..exp.get(v) {
                    t *= point[v.index()];
                }
            }
            acc += t;
        }
        acc
    }

    fn mul_monomial(&self, exp: &Exponents) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.mul(exp), c.clone()))
                .collect(),
        }
    }

    /// Minimal λ-exponent over all terms (how many times λ divides self).
    fn lambda_order(&self) -> u16 {
        self.terms
            .keys()
            .map(|e| e.get(Var::Lambda))
            .min()
            .unwrap_or(0)
    }

    /// Exact division by λ^power, if every term allows it.
    pub fn div_exact_lambda(&self, power: u16) -> Option<MPoly> {
        if power == 0 {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if self.lambda_order() < power {
            return None;
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut a = e.as_array();
                a[Var::Lambda.index()] -= power;
                (Exponents::new(a), c.clone())
            })
            .collect();
        Some(MPoly { terms })
    }

    /// Exact division by the linear factor (x - k·λ), if the remainder of
    /// the division in x vanishes.
    pub fn div_exact_linear(&self, k: i64) -> Option<MPoly> {
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        // View self as a polynomial in x with coefficients free of x.
        let mut by_deg: BTreeMap<u16, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e.get(Var::X);
            let mut a = e.as_array();
            a[Var::X.index()] = 0;
            by_deg
                .entry(d)
                .or_insert_with(MPoly::zero)
                .add_term(Exponents::new(a), c.clone());
        }
        let top = *by_deg.keys().next_back().unwrap();
        if top == 0 {
            return None;
        }
        let klam = MPoly::var(Var::Lambda).scale(&Rational::from_integer(k.into()));
        let coef = |d: u16| by_deg.get(&d).cloned().unwrap_or_else(MPoly::zero);
        // Synthetic division by (x - kλ): q_{d} = c_{d+1} + kλ·q_{d+1}.
        let mut quot: Vec<MPoly> = vec![MPoly::zero(); usize::from(top)];
        quot[usize::from(top) - 1] = coef(top);
        for d in (0..top - 1).rev() {
            quot[usize::from(d)] = &coef(d + 1) + &(&klam * &quot[usize::from(d) + 1]);
        }
        let rem = &coef(0) + &(&klam * &quot[0]);
        if !rem.is_zero() {
            return None;
        }
        let mut out = MPoly::zero();
        for (d, q) in quot.iter().enumerate() {
            let mut shift = [0u16; NVARS];
            shift[Var::X.index()] = d as u16;
            out = &out + &q.mul_monomial(&Exponents::new(shift));
        }
        Some(out)
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl From<i64> for MPoly {
    fn from(n: i64) -> Self {
        MPoly::constant(Rational::from_integer(n.into()))
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl From<&MPoly> for MPoly {
    fn from(p: &MPoly) -> Self {
        p.clone()
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Substitution map for [`MPoly::substitute`]; unset variables stay free.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    map: [Option<MPoly>; NVARS],
}

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn set(mut self, v: Var, value: impl Into<MPoly>) -> Self {
        self.map[v.index()] = Some(value.into());
        self
    }

    pub fn get(&self, v: Var) -> Option<&MPoly> {
        self.map[v.index()].as_ref()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Leading (highest) terms first.
        for (exp, coef) in self.terms.iter().rev() {
            let neg = coef.is_negative();
            let abs = coef.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || exp.total_degree() == 0 {
                factors.push(abs.to_string());
            }
            for v in Var::ALL {
                let e = exp.get(v);
                if e == 1 {
                    factors.push(v.display_name().to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", v.display_name(), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
