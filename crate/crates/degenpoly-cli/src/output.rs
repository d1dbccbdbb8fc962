//! Serialization of polynomials and reports.
//!
//! Every format here is deterministic: terms are emitted in descending
//! graded-lexicographic order over (x, x1, x2, λ), rationals print in
//! lowest terms, and nothing depends on wall-clock time unless the caller
//! explicitly asks for timings. Identical inputs therefore produce
//! byte-identical documents.

use degenpoly::identities::VerificationReport;
use degenpoly::padic::ConvergenceReport;
use degenpoly::{Exponents, MPoly, Rational, Var};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::str::FromStr;

/// JSON shape of a polynomial: a fixed variable tuple and one term per
/// entry, exponents aligned with `vars`, coefficient as a `p/q` string.
#[derive(Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: [u16; 4],
    pub coef: String,
}

pub fn poly_to_json(p: &MPoly) -> PolyJson {
    let terms = descending(p)
        .map(|(e, c)| TermJson {
            exp: e.as_array(),
            coef: c.to_string(),
        })
        .collect();
    PolyJson {
        vars: Var::ALL.iter().map(|v| v.name().to_string()).collect(),
        terms,
    }
}

/// Rebuilds the polynomial a [`PolyJson`] describes. Term order in the
/// input does not matter; duplicates merge and zeros drop, so feeding the
/// result back through [`poly_to_json`] yields the canonical document.
pub fn poly_from_json(doc: &PolyJson) -> Result<MPoly, String> {
    let want: Vec<&str> = Var::ALL.iter().map(|v| v.name()).collect();
    if doc.vars != want {
        return Err(format!("vars must be {want:?}, got {:?}", doc.vars));
    }
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        let coef = Rational::from_str(&t.coef)
            .map_err(|e| format!("bad coefficient {:?}: {e}", t.coef))?;
        terms.push((Exponents::new(t.exp), coef));
    }
    Ok(MPoly::from_terms(terms))
}

/// LaTeX form of a polynomial, terms in canonical descending order.
pub fn poly_to_latex(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (exp, coef)) in descending(p).enumerate() {
        let neg = coef < &Rational::zero();
        let abs = if neg { -coef } else { coef.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !num::One::is_one(&abs) || exp.total_degree() == 0 {
            factors.push(latex_rational(&abs));
        }
        for v in Var::ALL {
            let name = match v {
                Var::X => "x",
                Var::X1 => "x_{1}",
                Var::X2 => "x_{2}",
                Var::Lambda => "\\lambda",
            };
            match exp.get(v) {
                0 => {}
                1 => factors.push(name.to_string()),
                e => factors.push(format!("{name}^{{{e}}}")),
            }
        }
        out.push_str(&factors.join(" "));
    }
    out
}

fn latex_rational(r: &Rational) -> String {
    if num::One::is_one(r.denom()) {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// CSV form of a polynomial: one row per term, canonical order.
pub fn poly_to_csv(p: &MPoly) -> String {
    let mut out = String::from("exp_x,exp_x1,exp_x2,exp_lambda,coef\n");
    for (exp, coef) in descending(p) {
        let [a, b, c, d] = exp.as_array();
        let _ = writeln!(out, "{a},{b},{c},{d},{coef}");
    }
    out
}

fn descending(p: &MPoly) -> impl Iterator<Item = (&Exponents, &Rational)> {
    let mut terms: Vec<_> = p.terms().collect();
    terms.reverse();
    terms.into_iter()
}

#[derive(Serialize)]
struct TableRowJson {
    label: String,
    poly: PolyJson,
}

pub fn table_to_json(rows: &[(String, MPoly)]) -> String {
    let docs: Vec<TableRowJson> = rows
        .iter()
        .map(|(label, p)| TableRowJson {
            label: label.clone(),
            poly: poly_to_json(p),
        })
        .collect();
    serde_json::to_string(&docs).expect("table serialization cannot fail")
}

/// Plain (non-LaTeX) polynomial text in the poly column; it never
/// contains a comma, so the cells need no quoting.
pub fn table_to_csv(rows: &[(String, MPoly)]) -> String {
    let mut out = String::from("label,poly\n");
    for (label, p) in rows {
        let _ = writeln!(out, "{label},{p}");
    }
    out
}

pub fn table_to_latex(rows: &[(String, MPoly)]) -> String {
    let mut out = String::new();
    for (label, p) in rows {
        let _ = writeln!(out, "{label} & {} \\\\", poly_to_latex(p));
    }
    out
}

#[derive(Serialize)]
struct ReportJson<'a> {
    id: &'a str,
    params: String,
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn report_json<'a>(r: &'a VerificationReport, timings: bool) -> ReportJson<'a> {
    ReportJson {
        id: r.id,
        params: r.params.to_string(),
        verdict: r.verdict.to_string(),
        residual: r.residual.as_deref(),
        elapsed_ms: timings.then_some(r.elapsed.as_millis()),
    }
}

pub fn reports_to_json(reports: &[VerificationReport], timings: bool) -> String {
    let rows: Vec<ReportJson> = reports.iter().map(|r| report_json(r, timings)).collect();
    serde_json::to_string(&rows).expect("report serialization cannot fail")
}

/// The `elapsed_ms` column is left blank unless timings were requested,
/// so that identical invocations compare byte for byte.
pub fn reports_to_csv(reports: &[VerificationReport], timings: bool) -> String {
    let mut out = String::from("id,params,verdict,elapsed_ms\n");
    for r in reports {
        let ms = if timings {
            r.elapsed.as_millis().to_string()
        } else {
            String::new()
        };
        let _ = writeln!(out, "{},{},{},{}", r.id, r.params, r.verdict, ms);
    }
    out
}

#[derive(Serialize)]
struct ConvergenceRowJson {
    level: u32,
    partial: String,
    difference: String,
    valuation: String,
}

#[derive(Serialize)]
struct ConvergenceJson {
    p: u64,
    target: String,
    rows: Vec<ConvergenceRowJson>,
}

pub fn convergence_to_json(rep: &ConvergenceReport) -> String {
    let doc = ConvergenceJson {
        p: rep.p,
        target: rep.target.to_string(),
        rows: rep
            .rows
            .iter()
            .map(|r| ConvergenceRowJson {
                level: r.level,
                partial: r.partial.to_string(),
                difference: r.difference.to_string(),
                valuation: r.valuation.to_string(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("report serialization cannot fail")
}

pub fn convergence_to_csv(rep: &ConvergenceReport) -> String {
    let mut out = String::from("level,partial,difference,valuation\n");
    for r in &rep.rows {
        let _ = writeln!(out, "{},{},{},{}", r.level, r.partial, r.difference, r.valuation);
    }
    out
}

/// One functional-equation comparison per level.
pub struct EquationRow {
    pub level: u32,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Serialize)]
struct EquationRowJson {
    level: u32,
    lhs: String,
    rhs: String,
    equal: bool,
}

pub fn equation_rows_to_json(rows: &[EquationRow]) -> String {
    let docs: Vec<EquationRowJson> = rows
        .iter()
        .map(|r| EquationRowJson {
            level: r.level,
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            equal: r.lhs == r.rhs,
        })
        .collect();
    serde_json::to_string(&docs).expect("report serialization cannot fail")
}

pub fn equation_rows_to_csv(rows: &[EquationRow]) -> String {
    let mut out = String::from("level,lhs,rhs,equal\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.level, r.lhs, r.rhs, r.lhs == r.rhs);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use degenpoly::degenerate::{euler_polynomial, falling_factorial, Sign};

    #[test]
    fn latex_of_small_polynomials() {
        assert_eq!(poly_to_latex(&MPoly::one()), "1");
        assert_eq!(poly_to_latex(&MPoly::zero()), "0");
        // E_2(x) = x² - λx - x + λ/2, descending graded-lex.
        let e2 = euler_polynomial(2, Var::X);
        assert_eq!(
            poly_to_latex(&e2),
            "x^{2} - x \\lambda - x + \\frac{1}{2} \\lambda"
        );
    }

    #[test]
    fn json_round_trip_is_identity() {
        let p = falling_factorial(Var::X1, 3, Sign::Plus);
        let doc = poly_to_json(&p);
        let text = serde_json::to_string(&doc).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(poly_from_json(&back).unwrap(), p);
        // Re-serializing reproduces the exact bytes.
        assert_eq!(serde_json::to_string(&poly_to_json(&poly_from_json(&back).unwrap())).unwrap(), text);
    }

    #[test]
    fn json_rejects_wrong_vars() {
        let mut doc = poly_to_json(&MPoly::one());
        doc.vars[0] = "y".to_string();
        assert!(poly_from_json(&doc).is_err());
    }

    #[test]
    fn csv_terms_are_descending() {
        let p = euler_polynomial(2, Var::X);
        let csv = poly_to_csv(&p);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "exp_x,exp_x1,exp_x2,exp_lambda,coef");
        assert_eq!(lines[1], "2,0,0,0,1");
        assert_eq!(lines.last().unwrap(), &"0,0,0,1,1/2");
    }
}
