//! The verification harness: every identity the library relies on, run over
//! a range of sizes and reported case by case.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{rational, BigRational, Ring, SamplePoints, UniPoly, UniRat};
use crate::error::{Error, Result};
use crate::expansion::{
    a_tableau_q1, admissible_colorings, coloring_of, e_expansion, e_expansion_q1, hat_a_coeff,
    hl_expansion, is_palindromic, macdonald_coeff_at_q, macdonald_expansion,
};
use crate::golden::golden_n7;
use crate::interval::Hessenberg;
use crate::macdonald::{self, htilde};
use crate::oracles::{chi_from_f, chromatic_symmetric, f_via_operators, f_via_operators_checked};
use crate::partitions::{partitions_of, partitions_up_to, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::{enumerate_syt, enumerate_syt_bar};

/// One identity or property that can be verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Oracles,
    Master,
    Pieri,
    TOne,
    MinusOne,
    Conjugation,
    Bridge,
    Hl,
    Positivity,
    Palindromic,
    Bijection,
    Nonvanishing,
    Hecke,
    Golden,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Oracles,
        Check::Master,
        Check::Pieri,
        Check::TOne,
        Check::MinusOne,
        Check::Conjugation,
        Check::Bridge,
        Check::Hl,
        Check::Positivity,
        Check::Palindromic,
        Check::Bijection,
        Check::Nonvanishing,
        Check::Hecke,
        Check::Golden,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::Oracles => "oracles",
            Check::Master => "master",
            Check::Pieri => "pieri",
            Check::TOne => "t-one",
            Check::MinusOne => "minus-one",
            Check::Conjugation => "conjugation",
            Check::Bridge => "bridge",
            Check::Hl => "hl",
            Check::Positivity => "positivity",
            Check::Palindromic => "palindromic",
            Check::Bijection => "bijection",
            Check::Nonvanishing => "nonvanishing",
            Check::Hecke => "hecke",
            Check::Golden => "golden",
        }
    }

    /// The identity being checked, as a formula.
    pub fn identity(&self) -> &'static str {
        match self {
            Check::Oracles => {
                "e-expansion = hat-A form = (q-1)^{-n} F_e[(q-1)X] from d± operators = Σ_κ q^asc(κ) x^κ"
            }
            Check::Master => "Σ_μ C_{e,μ}(q,t) H̃_μ[X;q,t] = F_e[X;q]",
            Check::Pieri => "e_1 H̃_λ = Σ_{x addable} d_{λ,x} H̃_{λ+x}",
            Check::TOne => "H̃_μ[X;q,1] = (q;q)_μ h_μ[X/(1-q)]",
            Check::MinusOne => "H̃_μ[-1] = (-1)^{|μ|} Π_{(i,j)∈μ} q^i t^j",
            Check::Conjugation => "H̃_μ[X;t,q] = H̃_{μ'}[X;q,t]",
            Check::Bridge => "H̃_λ[(q-1)X;q,0] = q^{|λ'|+n(λ')} Q_{λ'}[X;q^{-1}]",
            Check::Hl => "χ_e = Σ_λ c_λ(q) Q_{λ'}[X;q^{-1}] with c_λ from strip tableaux",
            Check::Positivity => {
                "every e-coefficient is a polynomial in q with a positive integer value at q=1, equal to the admissible-coloring count"
            }
            Check::Palindromic => "q^{#edges} c_λ(1/q) = c_λ(q) for every e-coefficient",
            Check::Bijection => "admissible colorings = {κ_T : T ∈ SYT-bar}, weights match the q=1 summands",
            Check::Nonvanishing => "A_T^e(q,1) ≠ 0 exactly when T satisfies condition (∗)",
            Check::Hecke => "(T_i - 1)(T_i + q) = 0 and exact division by y_{i+1} - y_i throughout F_e",
            Check::Golden => "e = (0,1,1,2,2,3,4): monomial and elementary tables by tableaux, operators and colorings",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| {
                let names: Vec<&str> = Check::ALL.iter().map(Check::name).collect();
                Error::Parse(format!(
                    "unknown check {s:?}; expected one of {}",
                    names.join(",")
                ))
            })
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: Check,
    pub identity: &'static str,
    pub passed: bool,
    /// Number of individual cases compared.
    pub cases: usize,
    pub failures: Vec<String>,
    /// Sizes covered, grid dimensions and similar bookkeeping.
    pub details: Value,
}

impl CheckResult {
    fn from_cases(check: Check, outcomes: Vec<Result<usize, String>>, details: Value) -> Self {
        let mut cases = 0;
        let mut failures = Vec::new();
        for o in outcomes {
            match o {
                Ok(k) => cases += k,
                Err(msg) => {
                    cases += 1;
                    failures.push(msg);
                }
            }
        }
        CheckResult {
            check,
            identity: check.identity(),
            passed: failures.is_empty(),
            cases,
            failures,
            details,
        }
    }

    /// `PASS name (cases): identity` or `FAIL ...` with the first failure.
    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} ({} cases): {}",
            self.check, self.cases, self.identity
        );
        if let Some(f) = self.failures.first() {
            line.push_str(&format!(" -- first failure: {f}"));
        }
        line
    }
}

/// Parameters of a verification run.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

/// Every Hessenberg function of size `1..=max_n`.
pub fn hessenberg_up_to(max_n: usize) -> Vec<Hessenberg> {
    (1..=max_n).flat_map(Hessenberg::enumerate).collect()
}

fn counts_by_n(max_n: usize) -> Vec<usize> {
    (1..=max_n)
        .map(|n| Hessenberg::enumerate(n).len())
        .collect()
}

fn err_string(e: Error) -> String {
    e.to_string()
}

/// Runs a check at the size given in `cfg`.
pub fn run_check(check: Check, cfg: &VerifyConfig) -> CheckResult {
    let n = cfg.max_n;
    match check {
        Check::Oracles => check_oracles(n),
        Check::Master => check_master(n, cfg.seed),
        Check::Pieri => check_pieri(n),
        Check::TOne => check_t_one(n, cfg.seed),
        Check::MinusOne => check_minus_one(n),
        Check::Conjugation => check_conjugation(n),
        Check::Bridge => check_bridge(n, cfg.seed),
        Check::Hl => check_hl(n, cfg.seed),
        Check::Positivity => check_positivity(n),
        Check::Palindromic => check_palindromic(n),
        Check::Bijection => check_bijection(n),
        Check::Nonvanishing => check_nonvanishing(n),
        Check::Hecke => check_hecke(n),
        Check::Golden => check_golden(),
    }
}

/// Report of a full run, in the order the checks were requested.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub max_n: usize,
    pub passed: bool,
    pub results: Vec<CheckResult>,
}

pub fn run(cfg: &VerifyConfig) -> VerifyReport {
    let results: Vec<CheckResult> = cfg.checks.iter().map(|&c| run_check(c, cfg)).collect();
    VerifyReport {
        seed: cfg.seed,
        max_n: cfg.max_n,
        passed: results.iter().all(|r| r.passed),
        results,
    }
}

fn e_to_m(ex: &SymFunc<UniPoly>) -> SymFunc<UniPoly> {
    ex.to_basis(Basis::M)
}

/// χ_e by the elementary expansion, the hat-A form, the operators and the
/// colorings, all compared exactly.
pub fn check_oracles(max_n: usize) -> CheckResult {
    let outcomes = hessenberg_up_to(max_n)
        .par_iter()
        .map(|e| -> Result<usize, String> {
            let n = e.n();
            let ex = e_expansion(e).map_err(err_string)?;
            for lambda in partitions_of(n) {
                let hik = hat_a_coeff(e, &lambda).map_err(err_string)?;
                let expected = ex
                    .coeffs
                    .get(&lambda)
                    .cloned()
                    .unwrap_or_else(UniPoly::zero);
                if hik.coeff != expected {
                    return Err(format!("{e}: hat-A form differs at e_{lambda}"));
                }
            }
            let via_e = e_to_m(&ex.to_symfunc(n));
            let ops =
                chi_from_f(&f_via_operators(e).map_err(err_string)?, n).map_err(err_string)?;
            let brute = chromatic_symmetric(e).map_err(err_string)?;
            if ops != brute {
                return Err(format!("{e}: operator and coloring oracles differ"));
            }
            if via_e != brute {
                return Err(format!("{e}: e-expansion differs from the coloring oracle"));
            }
            Ok(1)
        })
        .collect();
    CheckResult::from_cases(
        Check::Oracles,
        outcomes,
        json!({ "max_n": max_n, "functions_by_n": counts_by_n(max_n) }),
    )
}

/// Upper bound on the `q`-degree of `Σ_μ C_μ H̃_μ - F_e` after clearing the
/// product of the denominators of the `C_μ`.
fn master_q_degree_bound(e: &Hessenberg, fe: &SymFunc<UniPoly>) -> Result<usize> {
    let terms = macdonald_expansion(e)?;
    let den_deg: usize = terms
        .values()
        .map(|t| t.coeff.den().degree_q() as usize)
        .sum();
    let mut bound = fe
        .terms()
        .values()
        .filter_map(UniPoly::degree)
        .max()
        .unwrap_or(0)
        + den_deg;
    for (mu, t) in &terms {
        let h = htilde(mu);
        let h_deg = h
            .terms()
            .values()
            .map(|c| c.degree_q() as usize)
            .max()
            .unwrap_or(0);
        let num = t.coeff.num().degree_q() as usize;
        let den = t.coeff.den().degree_q() as usize;
        bound = bound.max(num + den_deg - den + h_deg);
    }
    Ok(bound)
}

/// `Σ_μ C_{e,μ} H̃_μ = F_e`: for each seeded `q0`, an exact identity of
/// rational functions in `t`, plus evaluation at two seeded `t0`.
pub fn check_master(max_n: usize, seed: u64) -> CheckResult {
    let points = SamplePoints::new(seed);
    let outcomes: Vec<Result<(usize, Value), String>> = hessenberg_up_to(max_n)
        .par_iter()
        .map(|e| {
            let n = e.n();
            let fe = f_via_operators(e).map_err(err_string)?.to_basis(Basis::M);
            let bound = master_q_degree_bound(e, &fe).map_err(err_string)?;
            let (qs, ts) = points.grid(bound + 1, 2);
            let mut cases = 0;
            let parts = partitions_of(n);
            let htildes: Vec<_> = parts.iter().map(htilde).collect();
            for q0 in &qs {
                let coeffs = parts
                    .iter()
                    .map(|mu| macdonald_coeff_at_q(e, mu, q0))
                    .collect::<Result<Vec<UniRat>>>()
                    .map_err(err_string)?;
                for lambda in &parts {
                    let mut lhs = UniRat::zero();
                    for (c, h) in coeffs.iter().zip(&htildes) {
                        let hc = h.coeff(lambda).eval_q(q0);
                        lhs = lhs.plus(&c.times(&UniRat::from_poly(hc)));
                    }
                    let rhs = fe.coeff(lambda).eval(q0);
                    if lhs != UniRat::from_poly(UniPoly::constant(rhs.clone())) {
                        return Err(format!("{e}: coefficient of m_{lambda} at q = {q0} depends on t or differs"));
                    }
                    for t0 in &ts {
                        if lhs.eval(t0).map_err(err_string)? != rhs {
                            return Err(format!("{e}: m_{lambda} differs at (q,t) = ({q0},{t0})"));
                        }
                        cases += 1;
                    }
                }
            }
            Ok((cases, json!({ "hessenberg": e.values(), "q_points": qs.len(), "t_points": ts.len(), "q_degree_bound": bound })))
        })
        .collect();
    let grids: Vec<Value> = outcomes
        .iter()
        .filter_map(|o| o.as_ref().ok().map(|(_, g)| g.clone()))
        .collect();
    CheckResult::from_cases(
        Check::Master,
        outcomes.into_iter().map(|o| o.map(|(k, _)| k)).collect(),
        json!({ "max_n": max_n, "seed": seed, "functions_by_n": counts_by_n(max_n), "grids": grids }),
    )
}

fn partition_outcomes(
    check: Check,
    max: usize,
    min: usize,
    f: impl Fn(&Partition) -> Result<bool> + Sync,
    details: Value,
) -> CheckResult {
    let parts: Vec<Partition> = partitions_up_to(max)
        .into_iter()
        .filter(|l| l.size() >= min)
        .collect();
    let outcomes = parts
        .par_iter()
        .map(|l| match f(l) {
            Ok(true) => Ok(1),
            Ok(false) => Err(format!("fails for {l}")),
            Err(e) => Err(format!("{l}: {e}")),
        })
        .collect();
    CheckResult::from_cases(check, outcomes, details)
}

/// Pieri rule for every `|λ| <= max_size`.
pub fn check_pieri(max_size: usize) -> CheckResult {
    partition_outcomes(
        Check::Pieri,
        max_size,
        0,
        macdonald::check_pieri,
        json!({ "max_size": max_size }),
    )
}

pub fn check_t_one(max_size: usize, seed: u64) -> CheckResult {
    let (qs, _) = SamplePoints::new(seed).grid(max_size + 2, 0);
    let details =
        json!({ "max_size": max_size, "seed": seed, "q_points": qs.len(), "symbolic_in_q": true });
    partition_outcomes(
        Check::TOne,
        max_size,
        1,
        |mu| macdonald::check_t_one(mu, &qs),
        details,
    )
}

pub fn check_minus_one(max_size: usize) -> CheckResult {
    partition_outcomes(
        Check::MinusOne,
        max_size,
        1,
        |mu| Ok(macdonald::check_minus_one(mu)),
        json!({ "max_size": max_size }),
    )
}

pub fn check_conjugation(max_size: usize) -> CheckResult {
    partition_outcomes(
        Check::Conjugation,
        max_size,
        1,
        |mu| Ok(macdonald::check_conjugation(mu)),
        json!({ "max_size": max_size }),
    )
}

pub fn check_bridge(max_size: usize, seed: u64) -> CheckResult {
    let (qs, _) = SamplePoints::new(seed).grid(max_size + 2, 0);
    let details =
        json!({ "max_size": max_size, "seed": seed, "q_points": qs.len(), "symbolic_in_q": true });
    partition_outcomes(
        Check::Bridge,
        max_size,
        1,
        |l| macdonald::check_bridge(l, &qs),
        details,
    )
}

/// The Hall-Littlewood expansion paired with `Q_{λ'}[X;q^{-1}]` reproduces
/// the coloring oracle, symbolically in `q` and at seeded points.
pub fn check_hl(max_n: usize, seed: u64) -> CheckResult {
    let (qs, _) = SamplePoints::new(seed).grid(4, 0);
    let outcomes = hessenberg_up_to(max_n)
        .par_iter()
        .map(|e| -> Result<usize, String> {
            let n = e.n();
            let hl = hl_expansion(e).map_err(err_string)?.to_symfunc(n);
            let brute = chromatic_symmetric(e)
                .map_err(err_string)?
                .map_coeffs(|c| UniRat::from_poly(c.clone()));
            if hl != brute {
                return Err(format!("{e}: Hall-Littlewood expansion differs from χ_e"));
            }
            for q0 in &qs {
                let a = hl.try_map_coeffs(|c| c.eval(q0)).map_err(err_string)?;
                let b = brute.try_map_coeffs(|c| c.eval(q0)).map_err(err_string)?;
                if a != b {
                    return Err(format!("{e}: differs at q = {q0}"));
                }
            }
            Ok(1 + qs.len())
        })
        .collect();
    CheckResult::from_cases(
        Check::Hl,
        outcomes,
        json!({ "max_n": max_n, "seed": seed, "q_points": qs.len(), "functions_by_n": counts_by_n(max_n) }),
    )
}

/// Polynomial e-coefficients with positive integer values at `q = 1` that
/// equal the weighted admissible-coloring count. Coefficientwise
/// nonnegativity in `q` is recorded, not required.
pub fn check_positivity(max_n: usize) -> CheckResult {
    let rows: Vec<(Result<usize, String>, usize, usize)> = hessenberg_up_to(max_n)
        .par_iter()
        .map(|e| {
            let inner = || -> Result<(usize, usize, usize), String> {
                let ex = e_expansion(e).map_err(err_string)?;
                let mut cases = 0;
                let mut nonneg = 0;
                for (lambda, c) in &ex.coeffs {
                    let at1 = c.eval(&rational(1));
                    if !(at1.is_integer() && at1 > rational(0)) {
                        return Err(format!("{e}: e_{lambda} at q=1 is {at1}"));
                    }
                    let scale =
                        BigRational::from_integer(lambda.parts().iter().product::<usize>().into());
                    let count = admissible_colorings(e, &lambda.conjugate())
                        .map_err(err_string)?
                        .iter()
                        .fold(rational(0), |acc, k| acc + &k.weight * &scale);
                    if count != at1 {
                        return Err(format!("{e}: e_{lambda} coloring count {count} != {at1}"));
                    }
                    if c.is_nonnegative() {
                        nonneg += 1;
                    }
                    cases += 1;
                }
                // partitions with no admissible coloring must have zero coefficient
                for lambda in partitions_of(e.n()) {
                    if !ex.coeffs.contains_key(&lambda)
                        && !admissible_colorings(e, &lambda.conjugate())
                            .map_err(err_string)?
                            .is_empty()
                    {
                        return Err(format!(
                            "{e}: e_{lambda} vanishes but has admissible colorings"
                        ));
                    }
                }
                Ok((cases, nonneg, ex.coeffs.len()))
            };
            match inner() {
                Ok((k, nonneg, total)) => (Ok(k), nonneg, total),
                Err(msg) => (Err(msg), 0, 0),
            }
        })
        .collect();
    let nonneg: usize = rows.iter().map(|r| r.1).sum();
    let total: usize = rows.iter().map(|r| r.2).sum();
    CheckResult::from_cases(
        Check::Positivity,
        rows.into_iter().map(|r| r.0).collect(),
        json!({
            "max_n": max_n,
            "functions_by_n": counts_by_n(max_n),
            "coefficients": total,
            "coefficientwise_nonnegative_in_q": nonneg,
        }),
    )
}

pub fn check_palindromic(max_n: usize) -> CheckResult {
    let outcomes = hessenberg_up_to(max_n)
        .par_iter()
        .map(|e| -> Result<usize, String> {
            let ex = e_expansion(e).map_err(err_string)?;
            for (lambda, c) in &ex.coeffs {
                if !is_palindromic(c, e.num_edges()) {
                    return Err(format!("{e}: e_{lambda} = {c} is not palindromic"));
                }
            }
            Ok(ex.coeffs.len())
        })
        .collect();
    CheckResult::from_cases(
        Check::Palindromic,
        outcomes,
        json!({ "max_n": max_n, "functions_by_n": counts_by_n(max_n) }),
    )
}

pub fn check_bijection(max_n: usize) -> CheckResult {
    let outcomes = hessenberg_up_to(max_n)
        .par_iter()
        .map(|e| -> Result<usize, String> {
            let q1 = e_expansion_q1(e).map_err(err_string)?;
            let mut cases = 0;
            for lambda in partitions_of(e.n()) {
                let colorings = admissible_colorings(e, &lambda.conjugate()).map_err(err_string)?;
                let mut from_tableaux: Vec<Vec<usize>> = enumerate_syt_bar(e, &lambda)
                    .map_err(err_string)?
                    .iter()
                    .map(coloring_of)
                    .collect();
                from_tableaux.sort();
                let colors: Vec<Vec<usize>> = colorings.iter().map(|c| c.colors.clone()).collect();
                if colors != from_tableaux {
                    return Err(format!("{e}: colorings for {lambda} do not match SYT-bar"));
                }
                let scale =
                    BigRational::from_integer(lambda.parts().iter().product::<usize>().into());
                let mut weights: Vec<BigRational> =
                    colorings.iter().map(|c| &c.weight * &scale).collect();
                let mut summands = q1
                    .get(&lambda)
                    .map(|b| b.summands.clone())
                    .unwrap_or_default();
                weights.sort();
                summands.sort();
                if weights != summands {
                    return Err(format!("{e}: coloring weights for {lambda} do not match"));
                }
                cases += 1;
            }
            Ok(cases)
        })
        .collect();
    CheckResult::from_cases(
        Check::Bijection,
        outcomes,
        json!({ "max_n": max_n, "functions_by_n": counts_by_n(max_n) }),
    )
}

pub fn check_nonvanishing(max_n: usize) -> CheckResult {
    let outcomes = hessenberg_up_to(max_n)
        .par_iter()
        .map(|e| -> Result<usize, String> {
            let mut cases = 0;
            for lambda in partitions_of(e.n()) {
                for t in enumerate_syt(e, &lambda).map_err(err_string)? {
                    let nonzero = !a_tableau_q1(&t, e).map_err(err_string)?.is_zero();
                    if nonzero != t.satisfies_star(e) {
                        return Err(format!(
                            "{e}: tableau {:?} breaks the support condition",
                            t.rows()
                        ));
                    }
                    cases += 1;
                }
            }
            Ok(cases)
        })
        .collect();
    CheckResult::from_cases(
        Check::Nonvanishing,
        outcomes,
        json!({ "max_n": max_n, "functions_by_n": counts_by_n(max_n) }),
    )
}

pub fn check_hecke(max_n: usize) -> CheckResult {
    let rows: Vec<Result<usize, String>> = hessenberg_up_to(max_n)
        .par_iter()
        .map(|e| {
            let (_, report) = f_via_operators_checked(e).map_err(|err| format!("{e}: {err}"))?;
            Ok(report.quadratic_checks)
        })
        .collect();
    CheckResult::from_cases(
        Check::Hecke,
        rows,
        json!({ "max_n": max_n, "functions_by_n": counts_by_n(max_n) }),
    )
}

type Route<'a> = Box<dyn Fn() -> Result<SymFunc<UniPoly>> + Sync + 'a>;

/// The seven-vertex example by the tableau formulas and both oracles.
pub fn check_golden() -> CheckResult {
    let g = golden_n7();
    let e = &g.hessenberg;
    let n = e.n();
    let expected_m = SymFunc::from_terms(Basis::M, n, g.monomial.clone());
    let expected_e = SymFunc::from_terms(Basis::E, n, g.elementary.clone());
    let routes: Vec<(&str, Route)> = vec![
        (
            "tableaux",
            Box::new(move || Ok(e_expansion(e)?.to_symfunc(n))),
        ),
        (
            "hat-A",
            Box::new(move || {
                let terms = partitions_of(n)
                    .into_iter()
                    .map(|l| Ok((l.clone(), hat_a_coeff(e, &l)?.coeff)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(SymFunc::from_terms(Basis::E, n, terms))
            }),
        ),
        (
            "operators",
            Box::new(move || chi_from_f(&f_via_operators(e)?, n)),
        ),
        ("colorings", Box::new(move || chromatic_symmetric(e))),
    ];
    let outcomes: Vec<Result<usize, String>> = routes
        .par_iter()
        .map(|(name, route)| {
            let f = route().map_err(|err| format!("{name}: {err}"))?;
            let as_m = f.to_basis(Basis::M);
            let as_e = f.to_basis(Basis::E);
            if !same_terms(&as_m, &expected_m) {
                return Err(format!("{name}: monomial table differs"));
            }
            if !same_terms(&as_e, &expected_e) {
                return Err(format!("{name}: elementary table differs"));
            }
            Ok(expected_m.terms().len() + expected_e.terms().len())
        })
        .collect();
    CheckResult::from_cases(
        Check::Golden,
        outcomes,
        json!({ "hessenberg": e.values(), "routes": ["tableaux", "hat-A", "operators", "colorings"] }),
    )
}

fn same_terms(a: &SymFunc<UniPoly>, b: &SymFunc<UniPoly>) -> bool {
    a.basis() == b.basis() && a.terms() == b.terms()
}

/// Hessenberg functions of sizes `1..=max_n` that appear in a report.
pub fn coverage(max_n: usize) -> usize {
    counts_by_n(max_n).iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn small_run_passes() {
        let cfg = VerifyConfig {
            max_n: 3,
            seed: crate::algebra::DEFAULT_SEED,
            checks: Check::ALL
                .into_iter()
                .filter(|c| *c != Check::Golden)
                .collect(),
        };
        let report = run(&cfg);
        for r in &report.results {
            assert!(r.passed, "{}", r.summary_line());
            assert!(r.cases > 0, "{}", r.check);
        }
        assert!(report.passed);
    }

    #[test]
    fn coverage_counts() {
        assert_eq!(coverage(4), 14 + 5 + 2 + 1);
        assert_eq!(counts_by_n(4), vec![1, 2, 5, 14]);
    }
}
