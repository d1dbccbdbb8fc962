//! Truncated power series in t with polynomial coefficients, stored in the
//! exponential convention: `coeffs[m]` is the coefficient of t^m/m!.

use crate::mpoly::MPoly;
use crate::rational::binomial;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    // Invariant: non-empty; order = coeffs.len() - 1.
    coeffs: Vec<MPoly>,
}

impl TruncSeries {
    pub fn from_coeffs(coeffs: Vec<MPoly>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the order-0 coefficient");
        TruncSeries { coeffs }
    }

    pub fn zero(order: u32) -> Self {
        TruncSeries {
            coeffs: vec![MPoly::zero(); order as usize + 1],
        }
    }

    pub fn one(order: u32) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = MPoly::one();
        s
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, m: u32) -> &MPoly {
        &self.coeffs[m as usize]
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// Product through the shared truncation order. In the exponential
    /// convention the Cauchy product becomes a binomial convolution:
    /// c_m = Σ_j C(m,j) a_j b_{m-j}.
    pub fn mul(&self, rhs: &TruncSeries) -> Result<TruncSeries> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch(self.order(), rhs.order()));
        }
        let n = self.coeffs.len();
        let mut out = vec![MPoly::zero(); n];
        for (m, slot) in out.iter_mut().enumerate() {
            let mut acc = MPoly::zero();
            for j in 0..=m {
                let a = &self.coeffs[j];
                let b = &rhs.coeffs[m - j];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b).scale(&binomial(m as u64, j as u64));
            }
            *slot = acc;
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Result<TruncSeries> {
        let mut acc = TruncSeries::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}
