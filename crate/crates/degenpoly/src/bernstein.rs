//! Degenerate Bernstein polynomials, the associated positive linear
//! operator, moment extraction, and the partial-fraction expansion of
//! 1/(x)_{l,λ}.

use crate::degenerate::{degenerate_exp, falling_factorial, Sign};
use crate::linrat::{rf_combine, LinRational};
use crate::mpoly::{MPoly, Var};
use crate::rational::{binomial, factorial, neg_one_pow, Rational};
use crate::series::TruncSeries;
use crate::{Error, Result};

use num::Zero;

/// B_{k,n}(x|λ) = C(n,k) (x)_{k,λ} (1-x)_{n-k,λ}; zero when n < k.
pub fn bernstein(k: u32, n: u32) -> MPoly {
    if n < k {
        return MPoly::zero();
    }
    let head = falling_factorial(Var::X, k, Sign::Plus);
    let tail = falling_factorial(&MPoly::one() - &MPoly::var(Var::X), n - k, Sign::Plus);
    (&head * &tail).scale(&binomial(n.into(), k.into()))
}

/// Two-variable form B_{k,n}(x1,x2|λ) = C(n,k) (x1)_{k,λ} (1-x2)_{n-k,λ};
/// zero when n < k. Setting x1 = x2 recovers the one-variable polynomial.
pub fn bernstein2(k: u32, n: u32) -> MPoly {
    if n < k {
        return MPoly::zero();
    }
    let head = falling_factorial(Var::X1, k, Sign::Plus);
    let tail = falling_factorial(&MPoly::one() - &MPoly::var(Var::X2), n - k, Sign::Plus);
    (&head * &tail).scale(&binomial(n.into(), k.into()))
}

/// Checks that ((x1)_{k,λ}/k!)·t^k·e_λ^{1-x2}(t) generates the two-variable
/// polynomials: for every n ≤ order, coefficient n of the product must be
/// B_{k,n}(x1,x2|λ) (zero for n < k).
pub fn bernstein_genfun_check(k: u32, order: u32) -> bool {
    let mut head = TruncSeries::zero(order);
    let mut coeffs: Vec<MPoly> = head.coeffs().to_vec();
    if (k as usize) < coeffs.len() {
        // In the exponential convention, (x1)_{k,λ}/k!·t^k has a single
        // nonzero entry: (x1)_{k,λ} at position k.
        coeffs[k as usize] = falling_factorial(Var::X1, k, Sign::Plus);
    }
    head = TruncSeries::from_coeffs(coeffs);
    let tail = degenerate_exp(&MPoly::one() - &MPoly::var(Var::X2), order);
    let prod = match head.mul(&tail) {
        Ok(p) => p,
        Err(_) => return false,
    };
    (0..=order).all(|n| *prod.coeff(n) == bernstein2(k, n))
}

/// The function argument accepted by [`operator`]: either a polynomial in
/// t with rational coefficients (ascending powers) or an explicit table of
/// node values f(0/n), f(1/n), …, f(n/n).
#[derive(Clone, Debug)]
pub enum OperatorInput {
    PolyInT(Vec<Rational>),
    NodeValues(Vec<Rational>),
}

impl OperatorInput {
    pub fn poly(coeffs: &[Rational]) -> Self {
        OperatorInput::PolyInT(coeffs.to_vec())
    }

    fn node_value(&self, k: u32, n: u32) -> Result<Rational> {
        match self {
            OperatorInput::PolyInT(coeffs) => {
                let t = if n == 0 {
                    Rational::zero()
                } else {
                    Rational::new(k.into(), n.into())
                };
                let mut acc = Rational::zero();
                for c in coeffs.iter().rev() {
                    acc = acc * &t + c;
                }
                Ok(acc)
            }
            OperatorInput::NodeValues(values) => {
                if values.len() != n as usize + 1 {
                    return Err(Error::NodeCount {
                        want: n as usize + 1,
                        got: values.len(),
                    });
                }
                Ok(values[k as usize].clone())
            }
        }
    }
}

/// The degenerate Bernstein operator Σ_{k=0}^n f(k/n)·B_{k,n}(x1,x2|λ),
/// returned symbolically; n = 0 degenerates to f(0).
pub fn operator(n: u32, f: &OperatorInput) -> Result<MPoly> {
    let mut acc = MPoly::zero();
    for k in 0..=n {
        let w = f.node_value(k, n)?;
        if w.is_zero() {
            continue;
        }
        acc = &acc + &bernstein2(k, n).scale(&w);
    }
    Ok(acc)
}

/// Both sides of the moment identity for 1 ≤ i ≤ n:
/// (x1)_{i,λ}(1+x1-x2-iλ)_{n-i,λ} = Σ_{k=i}^n [C(k,i)/C(n,i)]·B_{k,n}(x1,x2|λ).
pub fn moment_extract(i: u32, n: u32) -> Result<(MPoly, MPoly)> {
    if i < 1 || i > n {
        return Err(Error::InvalidIndex(format!(
            "moment index must satisfy 1 <= i <= n, got i={i}, n={n}"
        )));
    }
    let shift = MPoly::var(Var::Lambda).scale(&Rational::from_integer(i.into()));
    let arg = &(&(&MPoly::one() + &MPoly::var(Var::X1)) - &MPoly::var(Var::X2)) - &shift;
    let lhs = &falling_factorial(Var::X1, i, Sign::Plus)
        * &falling_factorial(&arg, n - i, Sign::Plus);
    let c_ni = binomial(n.into(), i.into());
    let mut rhs = MPoly::zero();
    for k in i..=n {
        let w = binomial(k.into(), i.into()) / &c_ni;
        rhs = &rhs + &bernstein2(k, n).scale(&w);
    }
    Ok((lhs, rhs))
}

/// Partial-fraction expansion 1/(x)_{l,λ} = Σ_{k<l} A_k/(x - kλ) with
/// A_k = (-λ)^{1-l}/(l-1)!·C(l-1,k)·(-1)^k.
#[derive(Clone, Debug)]
pub struct PartialFraction {
    l: u32,
    coeffs: Vec<LinRational>,
}

pub fn partial_fractions(l: u32) -> PartialFraction {
    assert!(l >= 1, "expansion needs at least one factor");
    let fact = factorial(u64::from(l) - 1);
    let coeffs = (0..l)
        .map(|k| {
            // (-λ)^{1-l}·(-1)^k = (-1)^{l-1+k}·λ^{1-l}
            let c = neg_one_pow(u64::from(l) - 1 + u64::from(k)) * binomial((l - 1).into(), k.into())
                / &fact;
            LinRational::new(MPoly::constant(c), (l - 1) as u16, Default::default())
        })
        .collect();
    PartialFraction { l, coeffs }
}

impl PartialFraction {
    pub fn l(&self) -> u32 {
        self.l
    }

    /// The scalars A_0, …, A_{l-1} (rational multiples of λ^{1-l}).
    pub fn coefficients(&self) -> &[LinRational] {
        &self.coeffs
    }

    /// Σ_k A_k/(x - kλ), which must reduce to 1/(x)_{l,λ}.
    pub fn sum(&self) -> LinRational {
        let terms: Vec<LinRational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| {
                LinRational::new(
                    a.numer().clone(),
                    a.lambda_power(),
                    std::collections::BTreeMap::from([(k as i64, 1)]),
                )
            })
            .collect();
        let weights = vec![Rational::from_integer(1.into()); terms.len()];
        rf_combine(&terms, &weights)
    }

    /// Σ_k A_k·Π_{i≠k}(x - iλ), which must reduce to the constant 1.
    pub fn reconstruction(&self) -> LinRational {
        let mut acc = LinRational::zero();
        for (k, a) in self.coeffs.iter().enumerate() {
            let mut prod = MPoly::one();
            for i in 0..self.l as i64 {
                if i != k as i64 {
                    prod = &prod * &crate::linrat::linear_factor(i);
                }
            }
            acc = acc.add(&a.mul_poly(&prod));
        }
        acc
    }
}

/// 1/(x)_{l,λ} as a rational function, for checking the expansion against.
pub fn inverse_falling_factorial(l: u32) -> LinRational {
    let factors = (0..l as i64).map(|k| (k, 1)).collect();
    LinRational::new(MPoly::one(), 0, factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::Bindings;
    use crate::rational::{frac, rat};

    fn x() -> MPoly {
        MPoly::var(Var::X)
    }

    fn lam() -> MPoly {
        MPoly::var(Var::Lambda)
    }

    #[test]
    fn small_bernstein_polynomials() {
        // B_{1,2}(x|λ) = 2x(1-x)
        let want = (&x() * &(&MPoly::one() - &x())).scale(&rat(2));
        assert_eq!(bernstein(1, 2), want);
        // B_{1,3}(x|λ) = 3x(1-x)(1-x-λ)
        let want = (&(&x() * &(&MPoly::one() - &x())) * &(&(&MPoly::one() - &x()) - &lam()))
            .scale(&rat(3));
        assert_eq!(bernstein(1, 3), want);
        assert_eq!(bernstein(0, 0), MPoly::one());
        assert!(bernstein(2, 1).is_zero());
    }

    #[test]
    fn two_variable_form() {
        let x1 = MPoly::var(Var::X1);
        let x2 = MPoly::var(Var::X2);
        // B_{1,2}(x1,x2|λ) = 2·x1·(1-x2)
        assert_eq!(
            bernstein2(1, 2),
            (&x1 * &(&MPoly::one() - &x2)).scale(&rat(2))
        );
        assert_eq!(bernstein2(1, 1), x1);
        assert!(bernstein2(3, 2).is_zero());
    }

    #[test]
    fn two_variable_specializes_to_one_variable() {
        let to_x = Bindings::new().set(Var::X1, Var::X).set(Var::X2, Var::X);
        for n in 0..=8u32 {
            for k in 0..=n {
                assert_eq!(bernstein2(k, n).substitute(&to_x), bernstein(k, n));
            }
        }
    }

    #[test]
    fn generating_function_reproduces_polynomials() {
        assert!(bernstein_genfun_check(0, 6));
        assert!(bernstein_genfun_check(2, 6));
        assert!(bernstein_genfun_check(1, 4));
        // Vacuum case: truncation order below k leaves only zero
        // coefficients to compare.
        assert!(bernstein_genfun_check(3, 2));
    }

    #[test]
    fn symmetry_in_the_two_variable_family() {
        // B_{k,n}(x1,x2|λ) = B_{n-k,n}(1-x2,1-x1|λ)
        let swap = Bindings::new()
            .set(Var::X1, &MPoly::one() - &MPoly::var(Var::X2))
            .set(Var::X2, &MPoly::one() - &MPoly::var(Var::X1));
        for n in 0..=10u32 {
            for k in 0..=n {
                assert_eq!(bernstein2(k, n), bernstein2(n - k, n).substitute(&swap));
            }
        }
    }

    #[test]
    fn degree_recurrence() {
        // B_{k,n} = (1-x2-(n-k-1)λ)B_{k,n-1} + (x1-(k-1)λ)B_{k-1,n-1}
        for n in 1..=10u32 {
            for k in 1..=n {
                let a = &(&MPoly::one() - &MPoly::var(Var::X2))
                    - &lam().scale(&rat(i64::from(n) - i64::from(k) - 1));
                let b = &MPoly::var(Var::X1) - &lam().scale(&rat(i64::from(k) - 1));
                let rhs = &(&a * &bernstein2(k, n - 1)) + &(&b * &bernstein2(k - 1, n - 1));
                assert_eq!(bernstein2(k, n), rhs, "k={k}, n={n}");
            }
        }
    }

    #[test]
    fn partition_of_unity() {
        // Σ_k B_{k,n}(x1,x2|λ) = (1+x1-x2)_{n,λ}
        for n in 0..=10u32 {
            let mut sum = MPoly::zero();
            for k in 0..=n {
                sum = &sum + &bernstein2(k, n);
            }
            let arg = &(&MPoly::one() + &MPoly::var(Var::X1)) - &MPoly::var(Var::X2);
            assert_eq!(sum, falling_factorial(&arg, n, Sign::Plus), "n = {n}");
        }
    }

    #[test]
    fn classical_limit() {
        // At λ = 0: B_{k,n}(x|0) = C(n,k) x^k (1-x)^{n-k}
        let at0 = Bindings::new().set(Var::Lambda, 0i64);
        for n in 0..=10u32 {
            for k in 0..=n {
                let classical = (&x().pow(k) * &(&MPoly::one() - &x()).pow(n - k))
                    .scale(&binomial(n.into(), k.into()));
                assert_eq!(bernstein(k, n).substitute(&at0), classical);
            }
        }
    }

    #[test]
    fn operator_basics() {
        // Constant functions are reproduced up to the partition factor.
        let one = OperatorInput::poly(&[rat(1)]);
        assert_eq!(operator(0, &one).unwrap(), MPoly::one());
        // n = 0 uses only f(0).
        let linear = OperatorInput::poly(&[rat(3), rat(7)]);
        assert_eq!(operator(0, &linear).unwrap(), MPoly::from(3i64));
        // f = t², n = 2, λ = 0, x1 = x2 = x gives x/2 + x²/2.
        let sq = OperatorInput::poly(&[rat(0), rat(0), rat(1)]);
        let classical = Bindings::new()
            .set(Var::Lambda, 0i64)
            .set(Var::X1, Var::X)
            .set(Var::X2, Var::X);
        let got = operator(2, &sq).unwrap().substitute(&classical);
        let want = &x().scale(&frac(1, 2)) + &x().pow(2).scale(&frac(1, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn operator_accepts_node_tables() {
        // Node values matching t² must reproduce the polynomial route.
        let n = 4u32;
        let table: Vec<Rational> = (0..=n)
            .map(|k| Rational::new(i64::from(k * k).into(), i64::from(n * n).into()))
            .collect();
        let via_nodes = operator(n, &OperatorInput::NodeValues(table)).unwrap();
        let via_poly = operator(n, &OperatorInput::poly(&[rat(0), rat(0), rat(1)])).unwrap();
        assert_eq!(via_nodes, via_poly);
    }

    #[test]
    fn operator_rejects_bad_node_table() {
        let err = operator(3, &OperatorInput::NodeValues(vec![rat(1); 3])).unwrap_err();
        assert!(matches!(err, Error::NodeCount { want: 4, got: 3 }));
    }

    #[test]
    fn moment_extraction_bounds() {
        assert!(moment_extract(0, 3).is_err());
        assert!(moment_extract(4, 3).is_err());
        let (lhs, rhs) = moment_extract(1, 1).unwrap();
        assert_eq!(lhs, MPoly::var(Var::X1));
        assert_eq!(rhs, MPoly::var(Var::X1));
    }

    #[test]
    fn moment_identity_holds() {
        for n in 1..=8u32 {
            for i in 1..=n {
                let (lhs, rhs) = moment_extract(i, n).unwrap();
                assert_eq!(lhs, rhs, "i={i}, n={n}");
            }
        }
    }

    #[test]
    fn partial_fraction_small_tables() {
        // l = 1: A_0 = 1
        let pf = partial_fractions(1);
        assert_eq!(pf.coefficients(), &[LinRational::one()]);
        // l = 2: A_0 = -1/λ, A_1 = 1/λ
        let pf = partial_fractions(2);
        let a0 = LinRational::new(MPoly::constant(rat(-1)), 1, Default::default());
        let a1 = LinRational::new(MPoly::constant(rat(1)), 1, Default::default());
        assert_eq!(pf.coefficients(), &[a0, a1]);
        // l = 3: 1/(2λ²), -1/λ², 1/(2λ²)
        let pf = partial_fractions(3);
        let want: Vec<LinRational> = [frac(1, 2), rat(-1), frac(1, 2)]
            .into_iter()
            .map(|c| LinRational::new(MPoly::constant(c), 2, Default::default()))
            .collect();
        assert_eq!(pf.coefficients(), &want[..]);
    }

    #[test]
    fn partial_fractions_reconstruct_the_inverse() {
        for l in 1..=15u32 {
            let pf = partial_fractions(l);
            assert_eq!(pf.sum(), inverse_falling_factorial(l), "l = {l}");
            assert_eq!(pf.reconstruction(), LinRational::one(), "l = {l}");
        }
    }
}
