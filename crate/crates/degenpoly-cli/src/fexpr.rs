//! Parsers for the small command-line expression languages: `--set`
//! substitutions and `--f` integrands.

use degenpoly::padic::UniPoly;
use degenpoly::{Bindings, MPoly, Rational, Var};
use num::Zero;
use std::str::FromStr;

/// Parses repeated `--set var=p/q` flags into substitution bindings.
/// Accepted variables are x, x1, x2 and lambda (or λ).
pub fn parse_bindings(sets: &[String]) -> Result<Bindings, String> {
    let mut b = Bindings::new();
    for s in sets {
        let (name, value) = s
            .split_once('=')
            .ok_or_else(|| format!("--set expects var=value, got {s:?}"))?;
        let var = Var::from_name(name.trim())
            .ok_or_else(|| format!("unknown variable {:?}; use x, x1, x2 or lambda", name.trim()))?;
        let r = parse_rational(value)?;
        b = b.set(var, MPoly::constant(r));
    }
    Ok(b)
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s.trim()).map_err(|e| format!("bad rational {:?}: {e}", s.trim()))
}

/// Parses an `--f` integrand. Accepted forms:
///
/// * a rational constant, e.g. `1` or `-3/2`
/// * `t` or `t^K` for a power of the summation variable
/// * `fallfact:K` for the degenerate falling factorial (t)_{K,λ}, built
///   with the λ value passed on the command line
pub fn parse_integrand(s: &str, lambda0: &Rational) -> Result<UniPoly, String> {
    let s = s.trim();
    if s == "t" {
        return Ok(UniPoly::y());
    }
    if let Some(exp) = s.strip_prefix("t^") {
        let k: usize = exp
            .parse()
            .map_err(|_| format!("bad exponent in {s:?}"))?;
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = num::One::one();
        return Ok(UniPoly::from_coeffs(coeffs));
    }
    if let Some(order) = s.strip_prefix("fallfact:") {
        let k: u32 = order
            .parse()
            .map_err(|_| format!("bad order in {s:?}"))?;
        return Ok(UniPoly::falling_factorial(&Rational::zero(), k, lambda0));
    }
    if let Ok(c) = Rational::from_str(s) {
        return Ok(UniPoly::constant(c));
    }
    Err(format!(
        "cannot parse integrand {s:?}; accepted forms: a rational constant, t, t^K, fallfact:K"
    ))
}
