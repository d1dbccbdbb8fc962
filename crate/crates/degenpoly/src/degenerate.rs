//! λ-falling factorials and degenerate Euler numbers/polynomials.
//!
//! The degenerate Euler numbers E_{n,λ} are the coefficients of
//! 2/((1+λt)^{1/λ} + 1) in the exponential convention; they are computed
//! here by the boundary recurrence 2·E_{n,λ} = 2·[n=0] - Σ_{l<n} C(n,l)
//! E_{l,λ} (1)_{n-l,λ}, which needs no series inversion and stays exact.
//! Polynomials follow from E_{n,λ}(x) = Σ_l C(n,l) E_{l,λ} (x)_{n-l,λ}, and
//! the higher-order variants from the k-fold product of the number series.
//!
//! Numbers are memoized (keyed by n, and by (k, n) for the higher-order
//! family); the caches take concurrent readers and inserts are idempotent,
//! so a duplicated computation under contention is harmless.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::mpoly::{MPoly, Var};
use crate::rational::{binomial, frac, Rational};
use crate::series::TruncSeries;

/// Which sign of λ a falling factorial uses: `Plus` is (·)_{n,λ},
/// `Minus` is (·)_{n,-λ}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn step(self) -> MPoly {
        match self {
            Sign::Plus => MPoly::var(Var::Lambda),
            Sign::Minus => -MPoly::var(Var::Lambda),
        }
    }
}

/// The generalized falling factorial (arg)_{n,±λ} =
/// arg·(arg ∓ λ)·(arg ∓ 2λ)···(arg ∓ (n-1)λ), with (arg)_{0,±λ} = 1.
pub fn falling_factorial(arg: impl Into<MPoly>, n: u32, sign: Sign) -> MPoly {
    let arg = arg.into();
    let lam = sign.step();
    let mut acc = MPoly::one();
    for j in 0..n {
        let shift = lam.scale(&Rational::from_integer(j.into()));
        acc = &acc * &(&arg - &shift);
    }
    acc
}

fn euler_cache() -> &'static RwLock<Vec<MPoly>> {
    static CACHE: OnceLock<RwLock<Vec<MPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(Vec::new()))
}

/// The degenerate Euler number E_{n,λ}, a polynomial in λ.
pub fn euler_number(n: u32) -> MPoly {
    let n = n as usize;
    {
        let cache = euler_cache().read().unwrap();
        if n < cache.len() {
            return cache[n].clone();
        }
    }
    let mut local = euler_cache().read().unwrap().clone();
    while local.len() <= n {
        let m = local.len();
        let mut acc = if m == 0 { MPoly::from(2i64) } else { MPoly::zero() };
        for (l, e_l) in local.iter().enumerate() {
            let w = binomial(m as u64, l as u64);
            let unit = falling_factorial(1i64, (m - l) as u32, Sign::Plus);
            acc = &acc - &(e_l * &unit).scale(&w);
        }
        local.push(acc.scale(&frac(1, 2)));
    }
    let mut cache = euler_cache().write().unwrap();
    if cache.len() < local.len() {
        *cache = local;
    }
    cache[n].clone()
}

/// The degenerate Euler polynomial E_{n,λ}(arg) = Σ_l C(n,l) E_{l,λ}
/// (arg)_{n-l,λ}.
pub fn euler_polynomial(n: u32, arg: impl Into<MPoly>) -> MPoly {
    let arg = arg.into();
    let mut acc = MPoly::zero();
    for l in 0..=n {
        let term = &euler_number(l) * &falling_factorial(&arg, n - l, Sign::Plus);
        acc = &acc + &term.scale(&binomial(n.into(), l.into()));
    }
    acc
}

fn higher_cache() -> &'static RwLock<HashMap<(u32, u32), MPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<(u32, u32), MPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The order-k degenerate Euler number E^{(k)}_{n,λ}: coefficient n of the
/// k-th power of the Euler number series, obtained by binomial convolution.
pub fn higher_euler_number(k: u32, n: u32) -> MPoly {
    assert!(k >= 1, "order must be at least 1");
    if k == 1 {
        return euler_number(n);
    }
    {
        let cache = higher_cache().read().unwrap();
        if let Some(p) = cache.get(&(k, n)) {
            return p.clone();
        }
    }
    let mut cache = higher_cache().write().unwrap();
    for kk in 2..=k {
        for m in 0..=n {
            if cache.contains_key(&(kk, m)) {
                continue;
            }
            let mut acc = MPoly::zero();
            for i in 0..=m {
                let lower = if kk == 2 {
                    euler_number(i)
                } else {
                    cache[&(kk - 1, i)].clone()
                };
                let term = &lower * &euler_number(m - i);
                acc = &acc + &term.scale(&binomial(m.into(), i.into()));
            }
            cache.insert((kk, m), acc);
        }
    }
    cache[&(k, n)].clone()
}

/// The order-k degenerate Euler polynomial E^{(k)}_{n,λ}(arg) =
/// Σ_l C(n,l) E^{(k)}_{l,λ} (arg)_{n-l,λ}.
pub fn higher_order_euler(k: u32, n: u32, arg: impl Into<MPoly>) -> MPoly {
    let arg = arg.into();
    let mut acc = MPoly::zero();
    for l in 0..=n {
        let term = &higher_euler_number(k, l) * &falling_factorial(&arg, n - l, Sign::Plus);
        acc = &acc + &term.scale(&binomial(n.into(), l.into()));
    }
    acc
}

/// Truncation of the degenerate exponential e_λ^{arg}(t) = (1+λt)^{arg/λ};
/// coefficient m is (arg)_{m,λ}.
pub fn degenerate_exp(arg: impl Into<MPoly>, order: u32) -> TruncSeries {
    let arg = arg.into();
    let lam = MPoly::var(Var::Lambda);
    let mut coeffs = Vec::with_capacity(order as usize + 1);
    let mut acc = MPoly::one();
    for m in 0..=order {
        if m > 0 {
            let shift = lam.scale(&Rational::from_integer((m - 1).into()));
            acc = &acc * &(&arg - &shift);
        }
        coeffs.push(acc.clone());
    }
    TruncSeries::from_coeffs(coeffs)
}

/// The Euler number series Σ E_{n,λ} t^n/n! truncated at `order`.
pub fn euler_number_series(order: u32) -> TruncSeries {
    TruncSeries::from_coeffs((0..=order).map(euler_number).collect())
}
