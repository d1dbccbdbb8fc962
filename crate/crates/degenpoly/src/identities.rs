//! A registry of symbolic identities relating degenerate Euler and
//! Bernstein polynomials, each checked by building both sides over ℚ in
//! {x, x1, x2, λ} and testing that the difference reduces to zero.
//!
//! Cases carry an opaque string id (the external interface used by the
//! CLI), a validity domain, and a deterministic builder. Builders accept
//! a `mutated` flag that perturbs one designated coefficient; the test
//! suite uses it to confirm that every case actually has discriminating
//! power over its parameter grid.

use crate::bernstein::{bernstein, bernstein2, moment_extract, operator, OperatorInput};
use crate::degenerate::{
    euler_number, euler_polynomial, falling_factorial, higher_order_euler, Sign,
};
use crate::linrat::{linear_factor, rf_combine, LinRational};
use crate::mpoly::{Bindings, MPoly, Var};
use crate::rational::{binomial, factorial, frac, neg_one_pow, rat, Rational};
use crate::{Error, Result};

use num::{BigInt, One};
use std::fmt;
use std::time::{Duration, Instant};

/// Parameter assignment for one verification. Which fields must be set
/// depends on the case's [`ParamKind`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub i: Option<u32>,
}

impl Params {
    pub fn none() -> Self {
        Params::default()
    }

    pub fn for_n(n: u32) -> Self {
        Params {
            n: Some(n),
            ..Params::default()
        }
    }

    pub fn for_k(k: u32) -> Self {
        Params {
            k: Some(k),
            ..Params::default()
        }
    }

    pub fn for_nk(n: u32, k: u32) -> Self {
        Params {
            n: Some(n),
            k: Some(k),
            ..Params::default()
        }
    }

    pub fn for_ni(n: u32, i: u32) -> Self {
        Params {
            n: Some(n),
            i: Some(i),
            ..Params::default()
        }
    }

    fn n_val(&self) -> u32 {
        self.n.expect("parameter n is required here")
    }

    fn k_val(&self) -> u32 {
        self.k.expect("parameter k is required here")
    }

    fn i_val(&self) -> u32 {
        self.i.expect("parameter i is required here")
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(i) = self.i {
            parts.push(format!("i={i}"));
        }
        if parts.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", parts.join(";"))
        }
    }
}

/// Which parameters a case ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    /// n only.
    N,
    /// k only.
    K,
    /// n and k.
    Nk,
    /// n and i with 1 ≤ i ≤ n.
    Ni,
}

/// Both sides of an identity, in the arithmetic the statement lives in.
/// More than two entries form a chain a = b = c checked pairwise.
#[derive(Clone, Debug)]
pub enum Sides {
    Polys(Vec<MPoly>),
    Rats(Vec<LinRational>),
}

impl Sides {
    /// Difference of the first unequal adjacent pair, None when the chain
    /// holds throughout.
    pub fn residual(&self) -> Option<String> {
        match self {
            Sides::Polys(v) => v
                .windows(2)
                .find(|w| w[0] != w[1])
                .map(|w| (&w[0] - &w[1]).to_string()),
            Sides::Rats(v) => v
                .windows(2)
                .find(|w| w[0] != w[1])
                .map(|w| w[0].sub(&w[1]).to_string()),
        }
    }

    pub fn holds(&self) -> bool {
        self.residual().is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The parameter grid was empty at the requested bounds.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: &'static str,
    pub params: Params,
    pub verdict: Verdict,
    /// Textual form of lhs - rhs; present exactly on fail verdicts.
    pub residual: Option<String>,
    pub elapsed: Duration,
}

pub struct IdentityCase {
    pub id: &'static str,
    pub summary: &'static str,
    pub validity_domain: &'static str,
    pub kind: ParamKind,
    domain: fn(&Params) -> bool,
    build: fn(&Params, bool) -> Sides,
}

impl IdentityCase {
    fn params_complete(&self, p: &Params) -> bool {
        match self.kind {
            ParamKind::N => p.n.is_some(),
            ParamKind::K => p.k.is_some(),
            ParamKind::Nk => p.n.is_some() && p.k.is_some(),
            ParamKind::Ni => p.n.is_some() && p.i.is_some(),
        }
    }

    fn param_names(&self) -> &'static str {
        match self.kind {
            ParamKind::N => "n",
            ParamKind::K => "k",
            ParamKind::Nk => "n, k",
            ParamKind::Ni => "n, i",
        }
    }

    pub fn in_domain(&self, p: &Params) -> bool {
        self.params_complete(p) && (self.domain)(p)
    }

    /// All in-domain parameter assignments with n ≤ n_max and k ≤ k_max,
    /// in deterministic order.
    pub fn grid(&self, n_max: u32, k_max: u32) -> Vec<Params> {
        let mut out = Vec::new();
        match self.kind {
            ParamKind::N => {
                for n in 0..=n_max {
                    out.push(Params::for_n(n));
                }
            }
            ParamKind::K => {
                for k in 0..=k_max {
                    out.push(Params::for_k(k));
                }
            }
            ParamKind::Nk => {
                for n in 0..=n_max {
                    for k in 0..=k_max {
                        out.push(Params::for_nk(n, k));
                    }
                }
            }
            ParamKind::Ni => {
                for n in 0..=n_max {
                    for i in 1..=n {
                        out.push(Params::for_ni(n, i));
                    }
                }
            }
        }
        out.retain(|p| (self.domain)(p));
        out
    }
}

fn run(case: &IdentityCase, params: &Params, mutated: bool) -> VerificationReport {
    let start = Instant::now();
    let sides = (case.build)(params, mutated);
    let residual = sides.residual();
    VerificationReport {
        id: case.id,
        params: params.clone(),
        verdict: if residual.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        residual,
        elapsed: start.elapsed(),
    }
}

/// The full fixed list of cases, in registry order.
pub fn registry() -> &'static [IdentityCase] {
    &REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static IdentityCase> {
    REGISTRY.iter().find(|c| c.id == id)
}

fn checked_case(id: &str, params: &Params) -> Result<&'static IdentityCase> {
    let case = lookup(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    if !case.params_complete(params) {
        return Err(Error::OutOfDomain(format!(
            "{id} needs parameters {}",
            case.param_names()
        )));
    }
    if !(case.domain)(params) {
        return Err(Error::OutOfDomain(format!(
            "{params} is outside the validity domain of {id} ({})",
            case.validity_domain
        )));
    }
    Ok(case)
}

/// Verify one case at one parameter assignment.
pub fn verify(id: &str, params: &Params) -> Result<VerificationReport> {
    let case = checked_case(id, params)?;
    Ok(run(case, params, false))
}

/// Run one case at one parameter assignment taken from its own
/// [`IdentityCase::grid`]. Exists so callers can schedule grid points
/// themselves (in parallel, or filtered to a subset of cases) without
/// re-running the id lookup per point. The params must be in-domain for
/// the case; `mutated` requests the builder's designated sign flip.
pub fn verify_case(case: &IdentityCase, params: &Params, mutated: bool) -> VerificationReport {
    run(case, params, mutated)
}

/// Build both sides without judging them; used to inspect the actual
/// polynomials behind a verdict.
pub fn sides_for(id: &str, params: &Params) -> Result<Sides> {
    let case = checked_case(id, params)?;
    Ok((case.build)(params, false))
}

/// Run every case over its full grid up to the bounds. A case whose grid
/// is empty at these bounds contributes a single skipped report.
pub fn verify_all(n_max: u32, k_max: u32) -> Vec<VerificationReport> {
    verify_all_mutated(None, n_max, k_max)
}

/// Like [`verify_all`], with the named case built in mutated form. The
/// suite's self-test: the target must produce at least one fail.
pub fn verify_all_mutated(
    target: Option<&str>,
    n_max: u32,
    k_max: u32,
) -> Vec<VerificationReport> {
    assert!(n_max >= 1 && k_max >= 1, "bounds must be at least 1");
    let mut out = Vec::new();
    for case in registry() {
        let grid = case.grid(n_max, k_max);
        if grid.is_empty() {
            out.push(VerificationReport {
                id: case.id,
                params: Params::none(),
                verdict: Verdict::Skipped,
                residual: None,
                elapsed: Duration::ZERO,
            });
            continue;
        }
        let mutated = target == Some(case.id);
        for p in &grid {
            out.push(run(case, p, mutated));
        }
    }
    out
}

// Builder helpers.

fn one() -> MPoly {
    MPoly::one()
}

fn xv() -> MPoly {
    MPoly::var(Var::X)
}

fn x1v() -> MPoly {
    MPoly::var(Var::X1)
}

fn x2v() -> MPoly {
    MPoly::var(Var::X2)
}

fn lamv() -> MPoly {
    MPoly::var(Var::Lambda)
}

/// (1)_{m,λ}
fn ff_one(m: u32) -> MPoly {
    falling_factorial(1i64, m, Sign::Plus)
}

/// (1)_{m,-λ}
fn ff_one_neg(m: u32) -> MPoly {
    falling_factorial(1i64, m, Sign::Minus)
}

/// The designated single-coefficient perturbation: flip the sign when
/// mutated, leave alone otherwise.
fn mu(mutated: bool) -> Rational {
    rat(if mutated { -1 } else { 1 })
}

// Domain predicates.

fn dom_all(_: &Params) -> bool {
    true
}

fn dom_n_ge_1(p: &Params) -> bool {
    p.n_val() >= 1
}

fn dom_n_ge_2(p: &Params) -> bool {
    p.n_val() >= 2
}

fn dom_k_ge_1(p: &Params) -> bool {
    p.k_val() >= 1
}

fn dom_nk_ge_1(p: &Params) -> bool {
    p.n_val() >= 1 && p.k_val() >= 1
}

fn dom_k_le_n(p: &Params) -> bool {
    p.k_val() <= p.n_val()
}

fn dom_i_in_1_to_n(p: &Params) -> bool {
    let (n, i) = (p.n_val(), p.i_val());
    1 <= i && i <= n
}

// Builders. The mutated flag scales one designated coefficient by 2.

fn build_eq14(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let lhs = &euler_polynomial(n, 1i64) + &euler_number(n).scale(&mu(m));
    let rhs = if n == 0 {
        MPoly::constant(rat(2))
    } else {
        MPoly::zero()
    };
    Sides::Polys(vec![lhs, rhs])
}

fn build_eq15(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let lhs = euler_polynomial(n, &one() - &xv());
    let rhs = euler_polynomial(n, Var::X)
        .negate_lambda()
        .scale(&(neg_one_pow(n.into()) * mu(m)));
    Sides::Polys(vec![lhs, rhs])
}

fn build_eq17(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let lhs = falling_factorial(&one() - &xv(), n, Sign::Plus);
    let rhs = falling_factorial(&xv() - &one(), n, Sign::Minus)
        .scale(&(neg_one_pow(n.into()) * mu(m)));
    Sides::Polys(vec![lhs, rhs])
}

fn build_thm21(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let lhs = euler_polynomial(n, 2i64);
    let rhs = &ff_one(n).scale(&rat(2)) + &euler_number(n).scale(&mu(m));
    Sides::Polys(vec![lhs, rhs])
}

/// Closed form of the fermionic integral of (1-y)_{n,λ} over y: rewrite
/// as (-1)^n (y-1)_{n,-λ} and integrate to (-1)^n E_{n,-λ}(-1).
fn integral_of_one_minus(n: u32) -> MPoly {
    euler_polynomial(n, -1i64)
        .negate_lambda()
        .scale(&neg_one_pow(n.into()))
}

fn build_thm22(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let a = integral_of_one_minus(n);
    let b = euler_polynomial(n, 2i64);
    let c = &ff_one(n).scale(&rat(2)) + &euler_number(n).scale(&mu(m));
    Sides::Polys(vec![a, b, c])
}

fn build_cor23(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let a = integral_of_one_minus(n);
    let b = &ff_one(n).scale(&(rat(2) * mu(m))) + &euler_number(n);
    let c = euler_polynomial(n, 2i64);
    Sides::Polys(vec![a, b, c])
}

fn build_thm24(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let lhs = LinRational::from_poly(euler_polynomial(n, &one() - &xv()));
    let mut terms = vec![LinRational::from_poly(falling_factorial(
        &one() - &xv(),
        n,
        Sign::Plus,
    ))];
    for l in 1..=n {
        let poles: Vec<LinRational> = (0..l).map(|k| LinRational::pole(i64::from(k))).collect();
        let weights: Vec<Rational> = (0..l)
            .map(|k| neg_one_pow(k.into()) * binomial((l - 1).into(), k.into()))
            .collect();
        let inner = rf_combine(&poles, &weights);
        let w = neg_one_pow((l - 1).into()) / factorial((l - 1).into()) * mu(m);
        let coef = (&bernstein(l, n) * &euler_number(l)).scale(&w);
        terms.push(inner.mul_poly(&coef).div_lambda_pow((l - 1) as u16));
    }
    let ones = vec![Rational::one(); terms.len()];
    Sides::Rats(vec![lhs, rf_combine(&terms, &ones)])
}

/// Both sides of the same statement multiplied through by (x)_{n,λ}·λ^{n-1},
/// which clears every pole and λ power: a pure polynomial identity used to
/// cross-check the rational-function route.
pub fn thm24_cleared_sides(n: u32) -> (MPoly, MPoly) {
    let pow = n.saturating_sub(1);
    let clear = &falling_factorial(Var::X, n, Sign::Plus) * &lamv().pow(pow);
    let lhs = &euler_polynomial(n, &one() - &xv()) * &clear;
    let mut rhs = &falling_factorial(&one() - &xv(), n, Sign::Plus) * &clear;
    for l in 1..=n {
        let mut inner = MPoly::zero();
        for k in 0..l {
            let mut prod = MPoly::one();
            for j in 0..n {
                if j != k {
                    prod = &prod * &linear_factor(i64::from(j));
                }
            }
            let w = neg_one_pow(k.into()) * binomial((l - 1).into(), k.into());
            inner = &inner + &prod.scale(&w);
        }
        let w = neg_one_pow((l - 1).into()) / factorial((l - 1).into());
        let term = (&(&bernstein(l, n) * &euler_number(l)) * &inner).scale(&w);
        rhs = &rhs + &(&term * &lamv().pow(pow - (l - 1)));
    }
    (lhs, rhs)
}

fn build_cor25(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    // Clearing denominator: λ^{n-1} Π_{j=1}^{n-1} (1+jλ) removes both the
    // λ^{1-l} prefactors and the 1/(1+kλ) poles, leaving polynomials.
    let pow = n.saturating_sub(1);
    let mut dee = lamv().pow(pow);
    for j in 1..n {
        dee = &dee * &(&one() + &lamv().scale(&rat(i64::from(j))));
    }
    let lhs = &euler_polynomial(n, 2i64) * &dee;
    let at_minus_one = Bindings::new().set(Var::X, -1i64);
    let mut rhs = &falling_factorial(2i64, n, Sign::Plus) * &dee;
    for l in 1..=n {
        let b = bernstein(l, n).substitute(&at_minus_one);
        let mut inner = MPoly::zero();
        for k in 0..l {
            let mut prod = MPoly::one();
            for j in 1..n {
                if j != k {
                    prod = &prod * &(&one() + &lamv().scale(&rat(i64::from(j))));
                }
            }
            let w = neg_one_pow(k.into()) * binomial((l - 1).into(), k.into());
            inner = &inner + &prod.scale(&w);
        }
        let w = neg_one_pow((l - 1).into()) / factorial((l - 1).into()) * mu(m);
        let term = (&(&b * &euler_number(l)) * &inner).scale(&w);
        rhs = &rhs - &(&term * &lamv().pow(pow - (l - 1)));
    }
    Sides::Polys(vec![lhs, rhs])
}

fn build_thm26(p: &Params, m: bool) -> Sides {
    let (n, k) = (p.n_val(), p.k_val());
    let two_k = Rational::from_integer(BigInt::one() << k as usize);
    let lhs = bernstein(k, n + k).scale(&(two_k / binomial((n + k).into(), n.into())));
    let mut sum = MPoly::zero();
    for l in 0..=k {
        let arg = &(&one() - &xv()) + &MPoly::from(i64::from(l));
        let mut w = binomial(k.into(), l.into());
        if l == 0 {
            w *= mu(m);
        }
        sum = &sum + &higher_order_euler(k, n, arg).scale(&w);
    }
    let rhs = &falling_factorial(Var::X, k, Sign::Plus) * &sum;
    Sides::Polys(vec![lhs, rhs])
}

fn build_sym_eq31(p: &Params, m: bool) -> Sides {
    let (n, k) = (p.n_val(), p.k_val());
    let swap = Bindings::new()
        .set(Var::X1, &one() - &x2v())
        .set(Var::X2, &one() - &x1v());
    let lhs = bernstein2(k, n);
    let rhs = bernstein2(n - k, n).substitute(&swap).scale(&mu(m));
    Sides::Polys(vec![lhs, rhs])
}

fn build_thm27(p: &Params, m: bool) -> Sides {
    let (n, k) = (p.n_val(), p.k_val());
    let a = &(&one() - &x2v()) - &lamv().scale(&rat(i64::from(n) - i64::from(k) - 1));
    let b = &x1v() - &lamv().scale(&rat(i64::from(k) - 1));
    let lhs = &(&a * &bernstein2(k, n - 1)).scale(&mu(m)) + &(&b * &bernstein2(k - 1, n - 1));
    Sides::Polys(vec![lhs, bernstein2(k, n)])
}

fn build_eq34(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let lhs = operator(n, &OperatorInput::poly(&[rat(1)])).expect("constant integrand");
    let arg = &(&one() + &x1v()) - &x2v();
    let rhs = falling_factorial(&arg, n, Sign::Plus).scale(&mu(m));
    Sides::Polys(vec![lhs, rhs])
}

fn build_eq35(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let lhs = operator(n, &OperatorInput::poly(&[rat(0), rat(1)])).expect("linear integrand");
    let arg = &(&(&x1v() + &one()) - &lamv()) - &x2v();
    let rhs = (&x1v() * &falling_factorial(&arg, n - 1, Sign::Plus)).scale(&mu(m));
    Sides::Polys(vec![lhs, rhs])
}

fn build_eq37(p: &Params, m: bool) -> Sides {
    let n = p.n_val();
    let lhs = operator(n, &OperatorInput::poly(&[rat(0), rat(0), rat(1)]))
        .expect("quadratic integrand");
    let arg1 = &(&(&one() + &x1v()) - &lamv()) - &x2v();
    let first = (&x1v() * &falling_factorial(&arg1, n - 1, Sign::Plus))
        .scale(&(frac(1, i64::from(n)) * mu(m)));
    let arg2 = &(&(&one() + &x1v()) - &lamv().scale(&rat(2))) - &x2v();
    let second = (&falling_factorial(Var::X1, 2, Sign::Plus)
        * &falling_factorial(&arg2, n - 2, Sign::Plus))
        .scale(&frac(i64::from(n) - 1, i64::from(n)));
    Sides::Polys(vec![lhs, &first + &second])
}

fn build_thm28(p: &Params, m: bool) -> Sides {
    let (n, i) = (p.n_val(), p.i_val());
    let (lhs, mut rhs) = moment_extract(i, n).expect("in-domain indices");
    if m {
        // Flip the sign of the k = i term of the sum.
        let w = rat(2) * binomial(i.into(), i.into()) / binomial(n.into(), i.into());
        rhs = &rhs - &bernstein2(i, n).scale(&w);
    }
    Sides::Polys(vec![lhs, rhs])
}

fn build_thm29(p: &Params, m: bool) -> Sides {
    let (n, k) = (p.n_val(), p.k_val());
    // Double fermionic sum of B_{k,n}(x1,x2|λ), factored through the
    // one-variable closed forms: ∫(x1)_{k,λ} = E_{k,λ} and
    // ∫(1-x2)_{n-k,λ} = (-1)^{n-k} E_{n-k,-λ}(-1).
    let lhs = (&euler_number(k) * &integral_of_one_minus(n - k)).scale(&binomial(n.into(), k.into()));
    let rhs = if n > k {
        let paren = &ff_one(n - k).scale(&(rat(2) * mu(m))) + &euler_number(n - k);
        (&euler_number(k) * &paren).scale(&binomial(n.into(), k.into()))
    } else {
        euler_number(n).scale(&mu(m))
    };
    Sides::Polys(vec![lhs, rhs])
}

fn build_thm210(p: &Params, m: bool) -> Sides {
    let k = p.k_val();
    let lhs = euler_number(k);
    let mut rhs = ff_one(k);
    for l in 0..k {
        let paren = &euler_number(k - l).negate_lambda() + &ff_one_neg(k - l).scale(&(rat(2) * mu(m)));
        let w = binomial(k.into(), l.into()) * neg_one_pow((k + l).into());
        rhs = &rhs + &(&ff_one(l) * &paren).scale(&w);
    }
    Sides::Polys(vec![lhs, rhs])
}

fn build_cor211(p: &Params, m: bool) -> Sides {
    let k = p.k_val();
    let lhs = euler_number(k);
    let mut rhs = ff_one(k).scale(&(-mu(m)));
    for l in 0..k {
        let w = binomial(k.into(), l.into()) * neg_one_pow((k + l).into());
        rhs = &rhs + &(&ff_one(l) * &euler_number(k - l).negate_lambda()).scale(&w);
    }
    Sides::Polys(vec![lhs, rhs])
}

fn build_aux_sum(p: &Params, m: bool) -> Sides {
    let k = p.k_val();
    let mut lhs = MPoly::zero();
    for l in 0..k {
        let w = binomial(k.into(), l.into()) * neg_one_pow((k + l).into());
        lhs = &lhs + &(&ff_one(l) * &ff_one_neg(k - l)).scale(&w);
    }
    let rhs = ff_one(k).scale(&(-mu(m)));
    Sides::Polys(vec![lhs, rhs])
}

static REGISTRY: [IdentityCase; 19] = [
    IdentityCase {
        id: "eq14",
        summary: "E_{n,λ}(1) + E_{n,λ} = 2·δ_{0,n}",
        validity_domain: "n ≥ 0",
        kind: ParamKind::N,
        domain: dom_all,
        build: build_eq14,
    },
    IdentityCase {
        id: "eq15",
        summary: "E_{n,λ}(1-x) = (-1)^n E_{n,-λ}(x)",
        validity_domain: "n ≥ 0",
        kind: ParamKind::N,
        domain: dom_all,
        build: build_eq15,
    },
    IdentityCase {
        id: "eq17",
        summary: "(1-x)_{n,λ} = (-1)^n (x-1)_{n,-λ}",
        validity_domain: "n ≥ 0",
        kind: ParamKind::N,
        domain: dom_all,
        build: build_eq17,
    },
    IdentityCase {
        id: "thm2.1",
        summary: "E_{n,λ}(2) = 2(1)_{n,λ} + E_{n,λ}",
        validity_domain: "n ≥ 1",
        kind: ParamKind::N,
        domain: dom_n_ge_1,
        build: build_thm21,
    },
    IdentityCase {
        id: "thm2.2-symbolic",
        summary: "fermionic sums of (1-x)_{n,λ} and (x+2)_{n,λ} agree and equal 2(1)_{n,λ} + E_{n,λ}",
        validity_domain: "n ≥ 1",
        kind: ParamKind::N,
        domain: dom_n_ge_1,
        build: build_thm22,
    },
    IdentityCase {
        id: "cor2.3",
        summary: "(-1)^n E_{n,-λ}(-1) = 2(1)_{n,λ} + E_{n,λ} = E_{n,λ}(2)",
        validity_domain: "n ≥ 1",
        kind: ParamKind::N,
        domain: dom_n_ge_1,
        build: build_cor23,
    },
    IdentityCase {
        id: "thm2.4",
        summary: "E_{n,λ}(1-x) = (1-x)_{n,λ} + Σ_{l=1}^{n} B_{l,n}(x|λ)E_{l,λ}·(-λ)^{1-l}/(l-1)!·Σ_{k<l}(-1)^k C(l-1,k)/(x-kλ)",
        validity_domain: "n ≥ 0; excludes the poles x = kλ for 0 ≤ k < n",
        kind: ParamKind::N,
        domain: dom_all,
        build: build_thm24,
    },
    IdentityCase {
        id: "cor2.5",
        summary: "E_{n,λ}(2) = (2)_{n,λ} - Σ_{l=1}^{n} B_{l,n}(-1|λ)E_{l,λ}·(-λ)^{1-l}/(l-1)!·Σ_{k<l}(-1)^k C(l-1,k)/(1+kλ), cleared of denominators",
        validity_domain: "n ≥ 0",
        kind: ParamKind::N,
        domain: dom_all,
        build: build_cor25,
    },
    IdentityCase {
        id: "thm2.6",
        summary: "2^k/C(n+k,n)·B_{k,n+k}(x|λ) = (x)_{k,λ}·Σ_{l=0}^{k} C(k,l)·E^{(k)}_{n,λ}(1-x+l)",
        validity_domain: "n, k ≥ 1",
        kind: ParamKind::Nk,
        domain: dom_nk_ge_1,
        build: build_thm26,
    },
    IdentityCase {
        id: "sym-eq31",
        summary: "B_{k,n}(x1,x2|λ) = B_{n-k,n}(1-x2,1-x1|λ)",
        validity_domain: "0 ≤ k ≤ n",
        kind: ParamKind::Nk,
        domain: dom_k_le_n,
        build: build_sym_eq31,
    },
    IdentityCase {
        id: "thm2.7",
        summary: "(1-x2-(n-k-1)λ)B_{k,n-1} + (x1-(k-1)λ)B_{k-1,n-1} = B_{k,n}",
        validity_domain: "n, k ≥ 1",
        kind: ParamKind::Nk,
        domain: dom_nk_ge_1,
        build: build_thm27,
    },
    IdentityCase {
        id: "eq34",
        summary: "Σ_k B_{k,n}(x1,x2|λ) = (1+x1-x2)_{n,λ}",
        validity_domain: "n ≥ 0",
        kind: ParamKind::N,
        domain: dom_all,
        build: build_eq34,
    },
    IdentityCase {
        id: "eq35",
        summary: "Σ_k (k/n)·B_{k,n}(x1,x2|λ) = (x1)_{1,λ}·(x1+1-λ-x2)_{n-1,λ}",
        validity_domain: "n ≥ 1",
        kind: ParamKind::N,
        domain: dom_n_ge_1,
        build: build_eq35,
    },
    IdentityCase {
        id: "eq37",
        summary: "Σ_k (k/n)²·B_{k,n} = (1/n)(x1)_{1,λ}(1+x1-λ-x2)_{n-1,λ} + ((n-1)/n)(x1)_{2,λ}(1+x1-2λ-x2)_{n-2,λ}",
        validity_domain: "n ≥ 2",
        kind: ParamKind::N,
        domain: dom_n_ge_2,
        build: build_eq37,
    },
    IdentityCase {
        id: "thm2.8",
        summary: "(x1)_{i,λ}(1+x1-x2-iλ)_{n-i,λ} = Σ_{k=i}^{n} [C(k,i)/C(n,i)]·B_{k,n}(x1,x2|λ)",
        validity_domain: "1 ≤ i ≤ n",
        kind: ParamKind::Ni,
        domain: dom_i_in_1_to_n,
        build: build_thm28,
    },
    IdentityCase {
        id: "thm2.9-symbolic",
        summary: "double fermionic sum of B_{k,n}: C(n,k)·E_{k,λ}(2(1)_{n-k,λ} + E_{n-k,λ}) for n > k, E_{n,λ} for n = k",
        validity_domain: "0 ≤ k ≤ n",
        kind: ParamKind::Nk,
        domain: dom_k_le_n,
        build: build_thm29,
    },
    IdentityCase {
        id: "thm2.10",
        summary: "E_{k,λ} = (1)_{k,λ} + Σ_{l<k} C(k,l)(-1)^{k+l}(1)_{l,λ}(E_{k-l,-λ} + 2(1)_{k-l,-λ})",
        validity_domain: "k ≥ 1",
        kind: ParamKind::K,
        domain: dom_k_ge_1,
        build: build_thm210,
    },
    IdentityCase {
        id: "cor2.11",
        summary: "E_{k,λ} = -(1)_{k,λ} + Σ_{l<k} C(k,l)(-1)^{k+l}(1)_{l,λ}·E_{k-l,-λ}",
        validity_domain: "k ≥ 1",
        kind: ParamKind::K,
        domain: dom_k_ge_1,
        build: build_cor211,
    },
    IdentityCase {
        id: "aux-sum",
        summary: "Σ_{l<k} C(k,l)(-1)^{k+l}(1)_{l,λ}(1)_{k-l,-λ} = -(1)_{k,λ}",
        validity_domain: "k ≥ 1",
        kind: ParamKind::K,
        domain: dom_k_ge_1,
        build: build_aux_sum,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete_and_distinct() {
        assert_eq!(registry().len(), 19);
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 19);
        assert!(lookup("thm2.4").is_some());
        assert!(lookup("nonsense").is_none());
    }

    #[test]
    fn pole_locations_are_documented() {
        let case = lookup("thm2.4").unwrap();
        assert!(case.validity_domain.contains("x = kλ"));
    }

    #[test]
    fn smallest_euler_value_case_passes() {
        let report = verify("thm2.1", &Params::for_n(1)).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.residual.is_none());
    }

    #[test]
    fn shifted_argument_case_needs_n_positive() {
        // n = 0 is outside the domain, and genuinely so: the two sides
        // evaluate to 1 and 3.
        let err = verify("thm2.1", &Params::for_n(0)).unwrap_err();
        assert!(matches!(err, Error::OutOfDomain(_)));
        let lhs = euler_polynomial(0, 2i64);
        let rhs = &ff_one(0).scale(&rat(2)) + &euler_number(0);
        assert_eq!(lhs, MPoly::one());
        assert_eq!(rhs, MPoly::constant(rat(3)));
    }

    #[test]
    fn euler_number_recursion_case_passes() {
        let report = verify("thm2.10", &Params::for_k(1)).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
    }

    #[test]
    fn higher_order_case_has_expected_shape() {
        // Both sides at n = k = 1 equal 2x(1-x).
        let sides = sides_for("thm2.6", &Params::for_nk(1, 1)).unwrap();
        let want = (&xv() * &(&one() - &xv())).scale(&rat(2));
        match sides {
            Sides::Polys(v) => {
                assert_eq!(v[0], want);
                assert_eq!(v[1], want);
            }
            Sides::Rats(_) => panic!("expected polynomial sides"),
        }
    }

    #[test]
    fn missing_parameters_are_rejected() {
        assert!(matches!(
            verify("thm2.8", &Params::for_n(3)),
            Err(Error::OutOfDomain(_))
        ));
        assert!(matches!(
            verify("thm2.8", &Params::for_ni(3, 2)).unwrap().verdict,
            Verdict::Pass
        ));
        assert!(matches!(
            verify("no-such-id", &Params::for_n(1)),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn full_sweep_at_moderate_bounds() {
        let reports = verify_all(4, 4);
        assert_eq!(reports.len(), 133);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Pass, "{} at {}", r.id, r.params);
            assert!(r.residual.is_none());
        }
    }

    #[test]
    fn tight_bounds_skip_vacuous_grids() {
        let reports = verify_all(1, 1);
        let skipped: Vec<&str> = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Skipped)
            .map(|r| r.id)
            .collect();
        assert_eq!(skipped, ["eq37"]);
        assert!(reports
            .iter()
            .filter(|r| r.verdict != Verdict::Skipped)
            .all(|r| r.verdict == Verdict::Pass));
    }

    #[test]
    fn mutation_is_detected() {
        let reports = verify_all_mutated(Some("eq14"), 4, 4);
        let fails: Vec<_> = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Fail)
            .collect();
        assert!(!fails.is_empty());
        assert!(fails.iter().all(|r| r.id == "eq14"));
        assert!(fails.iter().all(|r| r.residual.is_some()));
    }

    #[test]
    fn rational_route_agrees_with_cleared_route() {
        for n in 0..=6 {
            let rational = verify("thm2.4", &Params::for_n(n)).unwrap();
            assert_eq!(rational.verdict, Verdict::Pass, "n = {n}");
            let (lhs, rhs) = thm24_cleared_sides(n);
            assert_eq!(lhs, rhs, "cleared sides at n = {n}");
        }
    }

    #[test]
    fn params_display() {
        assert_eq!(Params::for_nk(2, 1).to_string(), "n=2;k=1");
        assert_eq!(Params::for_ni(3, 2).to_string(), "n=3;i=2");
        assert_eq!(Params::none().to_string(), "-");
    }
}
