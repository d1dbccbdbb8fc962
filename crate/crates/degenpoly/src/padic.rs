//! Fermionic sums over initial segments of ℤ_p and their convergence
//! toward degenerate Euler values.
//!
//! Everything here is exact rational arithmetic; "p-adic" enters only
//! through the valuation ν_p used to measure how fast the partial sums
//! S_N[f] = Σ_{y < p^N} (-1)^y f(y) approach their limit. Partial sums
//! are evaluated through a closed form built on alternating power sums,
//! with literal term-by-term summation kept as a cross-check.

use crate::rational::{binomial, rat, Rational};
use crate::{Error, Result};

use num::{BigInt, One, Signed, Zero};
use std::fmt;

/// Refuse single sums past p^N > WORK_CAP and double sums past
/// p^{2N} > WORK_CAP; beyond that the direct cross-check oracle becomes
/// impractical and the request is almost certainly a typo.
pub const WORK_CAP: u64 = 10_000_000;

/// ν_p of a rational, with ν_p(0) = ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= bound,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

fn int_valuation(mut n: BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0i64;
    loop {
        let (q, r) = num::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

pub fn valuation(value: &Rational, p: u64) -> Valuation {
    if value.is_zero() {
        return Valuation::Infinite;
    }
    let num = int_valuation(value.numer().abs(), p);
    let den = int_valuation(value.denom().abs(), p);
    Valuation::Finite(num - den)
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense univariate polynomial over ℚ in the summation variable,
/// ascending coefficients with trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn y() -> Self {
        UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_linear_factors(roots: &[Rational]) -> Self {
        let mut acc = UniPoly::one();
        for r in roots {
            let factor = UniPoly::from_coeffs(vec![-r.clone(), Rational::one()]);
            acc = acc.mul(&factor);
        }
        acc
    }

    /// (x0 + y)_{n,λ0} as a polynomial in y.
    pub fn falling_factorial(x0: &Rational, n: u32, lambda0: &Rational) -> Self {
        let roots: Vec<Rational> = (0..n)
            .map(|j| lambda0 * rat(i64::from(j)) - x0)
            .collect();
        UniPoly::from_linear_factors(&roots)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<u32> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() as u32 - 1)
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// f(y + 1).
    pub fn shifted_by_one(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (d, c) in self.coeffs.iter().enumerate() {
            for (j, slot) in out.iter_mut().enumerate().take(d + 1) {
                *slot += c * binomial(d as u64, j as u64);
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn add(&self, rhs: &UniPoly) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, w: &Rational) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * w).collect())
    }

    pub fn mul(&self, rhs: &UniPoly) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    /// True when no coefficient has p in its denominator, which makes
    /// f(y) p-integral for every integer y.
    pub fn is_p_integral(&self, p: u64) -> bool {
        self.coeffs.iter().all(|c| valuation(c, p).at_least(0))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        write!(f, "y")?;
                    } else {
                        write!(f, "y^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A_d(M) = Σ_{y<M} (-1)^y y^d for all d ≤ max_degree, M odd.
///
/// Pairing y with y+1 in the sum of f(y+1)+f(y) telescopes and yields,
/// for odd M, the recurrence 2·A_d = [d = 0] + M^d - Σ_{j<d} C(d,j)·A_j,
/// which costs O(max_degree²) regardless of M.
fn alternating_power_sums(m: &BigInt, max_degree: usize) -> Vec<Rational> {
    debug_assert!(m.is_positive() && num::Integer::is_odd(m));
    let mut sums: Vec<Rational> = Vec::with_capacity(max_degree + 1);
    let mut m_pow = BigInt::one();
    for d in 0..=max_degree {
        let mut acc = Rational::from_integer(m_pow.clone());
        if d == 0 {
            acc += Rational::one();
        }
        for (j, a_j) in sums.iter().enumerate() {
            acc -= a_j * binomial(d as u64, j as u64);
        }
        sums.push(acc / rat(2));
        m_pow *= m;
    }
    sums
}

fn check_cap(p: u64, exponent: u32, what: &str) -> Result<BigInt> {
    match p.checked_pow(exponent) {
        Some(v) if v <= WORK_CAP => Ok(BigInt::from(v)),
        _ => Err(Error::CapExceeded(format!(
            "{what} needs p^{exponent} = {p}^{exponent} terms, over the cap of {WORK_CAP}"
        ))),
    }
}

/// S_N[f] = Σ_{y < p^N} (-1)^y f(y), via the closed form.
pub fn fermionic_sum(f: &UniPoly, p: u64, level: u32) -> Result<Rational> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let m = check_cap(p, level, "fermionic sum")?;
    Ok(fermionic_sum_unchecked(f, &m))
}

fn fermionic_sum_unchecked(f: &UniPoly, m: &BigInt) -> Rational {
    let Some(deg) = f.degree() else {
        return Rational::zero();
    };
    let sums = alternating_power_sums(m, deg as usize);
    f.coeffs()
        .iter()
        .zip(&sums)
        .map(|(c, a)| c * a)
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// Literal term-by-term evaluation of S_N[f]; the oracle the closed form
/// is tested against.
pub fn fermionic_sum_direct(f: &UniPoly, p: u64, level: u32) -> Result<Rational> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let m = check_cap(p, level, "direct fermionic sum")?;
    let mut acc = Rational::zero();
    let mut y = BigInt::zero();
    let mut sign = true;
    while y < m {
        let term = f.eval(&Rational::from_integer(y.clone()));
        if sign {
            acc += term;
        } else {
            acc -= term;
        }
        y += 1;
        sign = !sign;
    }
    Ok(acc)
}

/// A p-integral integrand together with its partial sums S_1, …, S_N.
#[derive(Clone, Debug)]
pub struct FermionicSum {
    integrand: UniPoly,
    partials: Vec<Rational>,
}

impl FermionicSum {
    pub fn new(integrand: UniPoly, p: u64, levels: u32) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if !integrand.is_p_integral(p) {
            return Err(Error::NotPIntegral {
                value: integrand.to_string(),
                p,
            });
        }
        check_cap(p, levels, "fermionic sum")?;
        let mut partials = Vec::with_capacity(levels as usize);
        let mut m = BigInt::from(p);
        for _ in 1..=levels {
            partials.push(fermionic_sum_unchecked(&integrand, &m));
            m *= p;
        }
        Ok(FermionicSum { integrand, partials })
    }

    pub fn integrand(&self) -> &UniPoly {
        &self.integrand
    }

    /// S_N for N = 1, …, levels.
    pub fn partials(&self) -> &[Rational] {
        &self.partials
    }
}

/// Odd prime p and the deepest level p^n_max this context may touch.
#[derive(Clone, Copy, Debug)]
pub struct PadicContext {
    pub p: u64,
    pub n_max: u32,
}

impl PadicContext {
    pub fn new(p: u64, n_max: u32) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        check_cap(p, n_max, "context")?;
        Ok(PadicContext { p, n_max })
    }
}

#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub level: u32,
    pub partial: Rational,
    pub difference: Rational,
    pub valuation: Valuation,
}

#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub p: u64,
    pub target: Rational,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    fn build(sum: &FermionicSum, target: Rational, p: u64) -> Self {
        let rows = sum
            .partials()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let difference = s - &target;
                ConvergenceRow {
                    level: i as u32 + 1,
                    partial: s.clone(),
                    valuation: valuation(&difference, p),
                    difference,
                }
            })
            .collect();
        ConvergenceReport { p, target, rows }
    }

    /// Smallest c with ν_p(S_N - target) ≥ N - c on every row, i.e. the
    /// observed convergence deficit. None when some row fails to converge
    /// at linear rate at all (difference valuation below zero).
    pub fn deficit(&self) -> Option<i64> {
        let mut c = i64::MIN;
        for row in &self.rows {
            match row.valuation {
                Valuation::Infinite => {}
                Valuation::Finite(v) => c = c.max(i64::from(row.level) - v),
            }
        }
        if c == i64::MIN {
            Some(0)
        } else if c > i64::from(self.rows.last().map_or(0, |r| r.level)) {
            None
        } else {
            Some(c.max(0))
        }
    }
}

/// Partial sums of (x0 + y)_{n,λ0} against the degenerate Euler value
/// E_{n,λ0}(x0): the difference at level N must vanish p-adically as
/// N grows.
pub fn euler_integral_check(
    n: u32,
    x0: &Rational,
    lambda0: &Rational,
    ctx: &PadicContext,
) -> Result<ConvergenceReport> {
    let f = UniPoly::falling_factorial(x0, n, lambda0);
    let sum = FermionicSum::new(f, ctx.p, ctx.n_max)?;
    // With a constant argument the Euler polynomial only involves λ, so
    // the evaluation point for the other variables is irrelevant.
    let zero = Rational::zero();
    let target = crate::degenerate::euler_polynomial(n, crate::mpoly::MPoly::constant(x0.clone()))
        .eval(&zero, &zero, &zero, lambda0);
    Ok(ConvergenceReport::build(&sum, target, ctx.p))
}

/// Both sides of S_N[f(·+1)] + S_N[f] = f(0) + f(p^N), exact at every
/// level because p^N is even-indexed in the alternating sum.
pub fn functional_equation_check(f: &UniPoly, p: u64, level: u32) -> Result<(Rational, Rational)> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let m = check_cap(p, level, "functional equation")?;
    let lhs = fermionic_sum_unchecked(&f.shifted_by_one(), &m) + fermionic_sum_unchecked(f, &m);
    let rhs = f.eval(&Rational::zero()) + f.eval(&Rational::from_integer(m));
    Ok((lhs, rhs))
}

/// Convergence of the double sum
/// Σ_{y1,y2 < p^N} (-1)^{y1+y2} (x0 + y1 + y2)_{n,λ0} restricted to the
/// monomial split used downstream: the integrand factors through
/// one-variable sums, so the double sum is evaluated as a product.
pub fn double_integral_check(
    k: u32,
    n: u32,
    lambda0: &Rational,
    ctx: &PadicContext,
) -> Result<ConvergenceReport> {
    if k > n {
        return Err(Error::InvalidIndex(format!(
            "double sum needs k <= n, got k={k}, n={n}"
        )));
    }
    // Each level N costs p^{2N} terms in the direct oracle.
    check_cap(ctx.p, ctx.n_max.saturating_mul(2), "double sum")?;
    let f1 = UniPoly::falling_factorial(&Rational::zero(), k, lambda0);
    let f2 = UniPoly::falling_factorial(&Rational::zero(), n - k, lambda0);
    if !f1.is_p_integral(ctx.p) || !f2.is_p_integral(ctx.p) {
        return Err(Error::NotPIntegral {
            value: format!("({f1})*({f2})"),
            p: ctx.p,
        });
    }
    let target = crate::degenerate::euler_number(k)
        .eval(
            &Rational::zero(),
            &Rational::zero(),
            &Rational::zero(),
            lambda0,
        )
        * crate::degenerate::euler_number(n - k).eval(
            &Rational::zero(),
            &Rational::zero(),
            &Rational::zero(),
            lambda0,
        );
    let mut rows = Vec::with_capacity(ctx.n_max as usize);
    let mut m = BigInt::from(ctx.p);
    for level in 1..=ctx.n_max {
        let partial =
            fermionic_sum_unchecked(&f1, &m) * fermionic_sum_unchecked(&f2, &m);
        let difference = &partial - &target;
        rows.push(ConvergenceRow {
            level,
            partial,
            valuation: valuation(&difference, ctx.p),
            difference,
        });
        m *= ctx.p;
    }
    Ok(ConvergenceReport {
        p: ctx.p,
        target,
        rows,
    })
}
