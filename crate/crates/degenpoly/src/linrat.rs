//! Rational functions with restricted denominators.
//!
//! A `LinRational` is numer / (λ^a · Π_k (x - kλ)^{m_k}). That shape is
//! exactly what the partial-fraction expansion of 1/(x)_{l,λ} produces, so
//! it is all the identity work ever needs. Reduction divides the numerator
//! by each listed factor while the division stays exact; since λ and the
//! (x - kλ) are distinct primes of ℚ[x,x1,x2,λ], the reduced form is unique
//! and equality can also be decided by cross-multiplication.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::mpoly::{MPoly, Var};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct LinRational {
    numer: MPoly,
    lambda_power: u16,
    // factor (x - kλ) ↦ multiplicity ≥ 1
    factors: BTreeMap<i64, u16>,
}

/// The linear factor (x - kλ) as a polynomial.
pub fn linear_factor(k: i64) -> MPoly {
    &MPoly::var(Var::X) - &MPoly::var(Var::Lambda).scale(&Rational::from_integer(k.into()))
}

impl LinRational {
    pub fn zero() -> Self {
        LinRational {
            numer: MPoly::zero(),
            lambda_power: 0,
            factors: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LinRational::from_poly(MPoly::one())
    }

    pub fn from_poly(p: impl Into<MPoly>) -> Self {
        LinRational {
            numer: p.into(),
            lambda_power: 0,
            factors: BTreeMap::new(),
        }
    }

    /// 1 / (x - kλ).
    pub fn pole(k: i64) -> Self {
        LinRational {
            numer: MPoly::one(),
            lambda_power: 0,
            factors: BTreeMap::from([(k, 1)]),
        }
    }

    /// Builds numer / (λ^a · Π (x - kλ)^m) and reduces.
    pub fn new(numer: MPoly, lambda_power: u16, factors: BTreeMap<i64, u16>) -> Self {
        let mut r = LinRational {
            numer,
            lambda_power,
            factors,
        };
        r.factors.retain(|_, m| *m > 0);
        r.reduce();
        r
    }

    pub fn numer(&self) -> &MPoly {
        &self.numer
    }

    pub fn lambda_power(&self) -> u16 {
        self.lambda_power
    }

    pub fn factors(&self) -> &BTreeMap<i64, u16> {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn denominator_poly(&self) -> MPoly {
        let mut d = MPoly::var(Var::Lambda).pow(u32::from(self.lambda_power));
        for (&k, &m) in &self.factors {
            d = &d * &linear_factor(k).pow(u32::from(m));
        }
        d
    }

    fn reduce(&mut self) {
        if self.numer.is_zero() {
            self.lambda_power = 0;
            self.factors.clear();
            return;
        }
        while self.lambda_power > 0 {
            match self.numer.div_exact_lambda(1) {
                Some(q) => {
                    self.numer = q;
                    self.lambda_power -= 1;
                }
                None => break,
            }
        }
        let ks: Vec<i64> = self.factors.keys().copied().collect();
        for k in ks {
            while self.factors.get(&k).copied().unwrap_or(0) > 0 {
                match self.numer.div_exact_linear(k) {
                    Some(q) => {
                        self.numer = q;
                        let m = self.factors.get_mut(&k).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.factors.remove(&k);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> LinRational {
        if c.is_zero() {
            return LinRational::zero();
        }
        LinRational {
            numer: self.numer.scale(c),
            lambda_power: self.lambda_power,
            factors: self.factors.clone(),
        }
    }

    pub fn neg(&self) -> LinRational {
        self.scale(&-Rational::from_integer(1.into()))
    }

    pub fn mul_poly(&self, p: &MPoly) -> LinRational {
        LinRational::new(
            &self.numer * p,
            self.lambda_power,
            self.factors.clone(),
        )
    }

    /// Divide by λ^extra (push the power into the denominator, then reduce).
    pub fn div_lambda_pow(&self, extra: u16) -> LinRational {
        LinRational::new(
            self.numer.clone(),
            self.lambda_power + extra,
            self.factors.clone(),
        )
    }

    pub fn add(&self, rhs: &LinRational) -> LinRational {
        rf_combine(
            &[self.clone(), rhs.clone()],
            &[Rational::from_integer(1.into()), Rational::from_integer(1.into())],
        )
    }

    pub fn sub(&self, rhs: &LinRational) -> LinRational {
        self.add(&rhs.neg())
    }

    /// Evaluation at a rational point; `None` on a denominator zero.
    pub fn eval(
        &self,
        x: &Rational,
        x1: &Rational,
        x2: &Rational,
        lambda: &Rational,
    ) -> Option<Rational> {
        let mut den = Rational::from_integer(1.into());
        for _ in 0..self.lambda_power {
            den *= lambda;
        }
        for (&k, &m) in &self.factors {
            let f = x - &(lambda * Rational::from_integer(k.into()));
            for _ in 0..m {
                den *= &f;
            }
        }
        if den.is_zero() {
            return None;
        }
        Some(self.numer.eval(x, x1, x2, lambda) / den)
    }
}

/// Weighted combination Σ w_i·r_i over the least common denominator,
/// reduced afterwards.
pub fn rf_combine(terms: &[LinRational], weights: &[Rational]) -> LinRational {
    assert_eq!(terms.len(), weights.len(), "one weight per term");
    if terms.is_empty() {
        return LinRational::zero();
    }
    let lp = terms.iter().map(|t| t.lambda_power).max().unwrap();
    let mut factors: BTreeMap<i64, u16> = BTreeMap::new();
    for t in terms {
        for (&k, &m) in &t.factors {
            let e = factors.entry(k).or_insert(0);
            *e = (*e).max(m);
        }
    }
    let mut numer = MPoly::zero();
    for (t, w) in terms.iter().zip(weights) {
        if t.is_zero() || w.is_zero() {
            continue;
        }
        let mut pad = MPoly::var(Var::Lambda).pow(u32::from(lp - t.lambda_power));
        for (&k, &m) in &factors {
            let extra = m - t.factors.get(&k).copied().unwrap_or(0);
            if extra > 0 {
                pad = &pad * &linear_factor(k).pow(u32::from(extra));
            }
        }
        numer = &numer + &(&t.numer.scale(w) * &pad);
    }
    LinRational::new(numer, lp, factors)
}

impl PartialEq for LinRational {
    /// Cross-multiplication: a/b == c/d iff a·d == c·b.
    fn eq(&self, other: &Self) -> bool {
        &self.numer * &other.denominator_poly() == &other.numer * &self.denominator_poly()
    }
}

impl Eq for LinRational {}

impl fmt::Display for LinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lambda_power == 0 && self.factors.is_empty() {
            return write!(f, "{}", self.numer);
        }
        let mut den: Vec<String> = Vec::new();
        if self.lambda_power == 1 {
            den.push("λ".into());
        } else if self.lambda_power > 1 {
            den.push(format!("λ^{}", self.lambda_power));
        }
        for (&k, &m) in &self.factors {
            let base = match k {
                0 => "x".to_string(),
                1 => "(x - λ)".to_string(),
                k if k > 0 => format!("(x - {k}*λ)"),
                k => format!("(x + {}*λ)", -k),
            };
            if m == 1 {
                den.push(base);
            } else {
                den.push(format!("{base}^{m}"));
            }
        }
        write!(f, "({}) / ({})", self.numer, den.join("*"))
    }
}
