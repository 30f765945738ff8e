//! Exhaustive bound sweeps over enumerated graph classes, the quasi-tree
//! theorem contract, and exact checks of the two auxiliary inequalities.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{canonical_form, class_forms, GraphClass, Limits, CANONICAL_CAP};
use crate::error::{input, Error, Result};
use crate::families::FamilySpec;
use crate::formats::{decode_graph6, encode_graph6};
use crate::graph::Graph;
use crate::invariants::{evaluate, BoundCheck, BoundId, Status, Verdict};
use crate::rational::Rational;

/// Which graphs to sweep and which bounds to check on each.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub class: GraphClass,
    pub n_min: usize,
    pub n_max: usize,
    pub bounds: Vec<BoundId>,
    pub limits: Limits,
}

impl SweepConfig {
    pub fn new(class: GraphClass, n_min: usize, n_max: usize, bounds: &[BoundId]) -> Self {
        SweepConfig {
            class,
            n_min,
            n_max,
            bounds: bounds.to_vec(),
            limits: Limits::default(),
        }
    }
}

/// A graph singled out by a sweep (a violation or an equality case).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphEntry {
    /// Canonical labelling, graph6-encoded.
    pub graph6: String,
    pub family: Option<FamilySpec>,
    pub diameter: usize,
    pub harmonic: Rational,
    pub checks: Vec<BoundCheck>,
}

impl GraphEntry {
    fn new(graph6: String, graph: &Graph, verdict: Verdict) -> Self {
        GraphEntry {
            graph6,
            family: recognize_named(graph),
            diameter: verdict.diameter,
            harmonic: verdict.harmonic,
            checks: verdict.checks,
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        decode_graph6(self.graph6.as_bytes())
    }

    pub fn status(&self, id: BoundId) -> Option<Status> {
        self.checks.iter().find(|c| c.bound == id).map(|c| c.status)
    }

    /// Re-evaluates the stored graph and compares with the recorded values.
    pub fn reverify(&self) -> Result<bool> {
        let ids: Vec<BoundId> = self.checks.iter().map(|c| c.bound).collect();
        let v = evaluate(&self.graph()?, &ids)?;
        Ok(v.diameter == self.diameter && v.harmonic == self.harmonic && v.checks == self.checks)
    }
}

/// Smallest `H − bound` (or `bound − H` for upper bounds) among the graphs
/// where a bound holds strictly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlackSummary {
    pub bound: BoundId,
    pub strict_count: usize,
    pub min_slack: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    pub graph_count: usize,
    /// Graphs violating at least one bound.
    pub violations: Vec<GraphEntry>,
    /// Graphs meeting at least one bound with equality.
    pub equalities: Vec<GraphEntry>,
    pub slack: Vec<SlackSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(serialize_with = "serialize_class")]
    pub class: GraphClass,
    pub n_min: usize,
    pub n_max: usize,
    pub bounds: Vec<BoundId>,
    pub orders: Vec<OrderSummary>,
    /// Wall time of the sweep. Left out of the default JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

fn serialize_class<S: serde::Serializer>(
    c: &GraphClass,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(c.name())
}

impl VerificationReport {
    pub fn order(&self, n: usize) -> Option<&OrderSummary> {
        self.orders.iter().find(|o| o.n == n)
    }

    pub fn total_graphs(&self) -> usize {
        self.orders.iter().map(|o| o.graph_count).sum()
    }

    pub fn violation_count(&self) -> usize {
        self.orders.iter().map(|o| o.violations.len()).sum()
    }

    /// Pretty JSON. `timing` adds an `elapsed_ms` field.
    pub fn to_json(&self, timing: bool) -> String {
        let mut value = serde_json::to_value(self).expect("report serialises");
        if timing {
            value["elapsed_ms"] = serde_json::json!(self.elapsed.as_millis() as u64);
        }
        let mut s = serde_json::to_string_pretty(&value).expect("report serialises");
        s.push('\n');
        s
    }

    /// Aligned text tables. `decimals` appends approximate decimal values.
    pub fn to_text(&self, decimals: Option<usize>, timing: bool) -> String {
        let mut out = String::new();
        let bounds: Vec<&str> = self.bounds.iter().map(|b| b.name()).collect();
        let _ = writeln!(
            out,
            "class {}  orders {}..{}  bounds {}",
            self.class,
            self.n_min,
            self.n_max,
            bounds.join(", ")
        );
        for b in &self.bounds {
            let _ = writeln!(out, "  {:<22} {}", b.name(), b.formula());
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{:>3} {:>8} {:>10} {:>10}",
            "n", "graphs", "violations", "equalities"
        );
        for o in &self.orders {
            let _ = writeln!(
                out,
                "{:>3} {:>8} {:>10} {:>10}",
                o.n,
                o.graph_count,
                o.violations.len(),
                o.equalities.len()
            );
        }
        let fmt_r = |r: &Rational| match decimals {
            Some(k) => format!("{r} (~{})", r.to_decimal(k)),
            None => r.to_string(),
        };
        for (title, pick) in [("violations", 0usize), ("equalities", 1usize)] {
            let rows: Vec<(usize, &GraphEntry)> = self
                .orders
                .iter()
                .flat_map(|o| {
                    let list = if pick == 0 {
                        &o.violations
                    } else {
                        &o.equalities
                    };
                    list.iter().map(move |e| (o.n, e))
                })
                .collect();
            let _ = writeln!(out, "\n{title}: {}", rows.len());
            for (n, e) in rows {
                let family = e
                    .family
                    .map(|f| f.to_string())
                    .unwrap_or_else(|| "-".into());
                let statuses: Vec<String> = e
                    .checks
                    .iter()
                    .map(|c| format!("{}={} ({})", c.bound.name(), c.status, fmt_r(&c.value)))
                    .collect();
                let _ = writeln!(
                    out,
                    "  n={n:<2} {:<12} {:<8} D={:<2} H={}  {}",
                    e.graph6,
                    family,
                    e.diameter,
                    fmt_r(&e.harmonic),
                    statuses.join("  ")
                );
            }
        }
        let _ = writeln!(out, "\nminimum slack among strict cases:");
        for o in &self.orders {
            for s in &o.slack {
                let shown = s
                    .min_slack
                    .as_ref()
                    .map(fmt_r)
                    .unwrap_or_else(|| "-".into());
                let _ = writeln!(out, "  n={:<2} {:<22} {}", o.n, s.bound.name(), shown);
            }
        }
        if timing {
            let _ = writeln!(out, "\nelapsed: {} ms", self.elapsed.as_millis());
        }
        out
    }
}

/// Evaluates `config.bounds` on every graph of the class for each order in range.
pub fn sweep(config: &SweepConfig) -> Result<VerificationReport> {
    if config.n_min > config.n_max {
        return Err(input(format!(
            "empty order range {}..{}",
            config.n_min, config.n_max
        )));
    }
    if config.bounds.is_empty() {
        return Err(input("no bounds selected"));
    }
    let start = Instant::now();
    let mut orders = Vec::new();
    for n in config.n_min..=config.n_max {
        let forms = class_forms(n, config.class, &config.limits)?;
        let evaluated: Vec<(String, Graph, Verdict)> = forms
            .par_iter()
            .map(|f| {
                let g = f.to_graph();
                let v = evaluate(&g, &config.bounds)?;
                Ok((encode_graph6(&g)?, g, v))
            })
            .collect::<Result<_>>()?;
        let mut slack: Vec<SlackSummary> = config
            .bounds
            .iter()
            .map(|&bound| SlackSummary {
                bound,
                strict_count: 0,
                min_slack: None,
            })
            .collect();
        let mut violations = Vec::new();
        let mut equalities = Vec::new();
        for (g6, g, v) in evaluated {
            for (s, c) in slack.iter_mut().zip(&v.checks) {
                if c.status == Status::Strict {
                    s.strict_count += 1;
                    let here = c.slack(&v.harmonic);
                    if s.min_slack.as_ref().is_none_or(|m| here < *m) {
                        s.min_slack = Some(here);
                    }
                }
            }
            let violated = v.any(Status::Violated);
            let equal = v.any(Status::Equal);
            if violated && equal {
                violations.push(GraphEntry::new(g6.clone(), &g, v.clone()));
                equalities.push(GraphEntry::new(g6, &g, v));
            } else if violated {
                violations.push(GraphEntry::new(g6, &g, v));
            } else if equal {
                equalities.push(GraphEntry::new(g6, &g, v));
            }
        }
        orders.push(OrderSummary {
            n,
            graph_count: forms.len(),
            violations,
            equalities,
            slack,
        });
    }
    Ok(VerificationReport {
        class: config.class,
        n_min: config.n_min,
        n_max: config.n_max,
        bounds: config.bounds.clone(),
        orders,
        elapsed: start.elapsed(),
    })
}

fn check_range(n_min: usize, n_max: usize, floor: usize, cap: usize) -> Result<()> {
    if n_min < floor {
        return Err(input(format!("order range must start at {floor} or above")));
    }
    if n_min > n_max {
        return Err(input(format!("empty order range {n_min}..{n_max}")));
    }
    if n_max > cap {
        return Err(Error::Capacity {
            what: "sweep order",
            requested: n_max,
            limit: cap,
        });
    }
    Ok(())
}

/// Both quasi-tree bounds over every quasi-tree of order `n_min..=n_max` (3 ≤ n ≤ 9).
pub fn verify_theorems(n_min: usize, n_max: usize) -> Result<VerificationReport> {
    let limits = Limits::default();
    check_range(n_min, n_max, 3, limits.quasi_tree)?;
    sweep(&SweepConfig::new(
        GraphClass::QuasiTree,
        n_min,
        n_max,
        &BoundId::QUASI_TREE,
    ))
}

/// Both conjectured bounds over every connected graph of order `n_min..=n_max` (4 ≤ n ≤ 8).
/// Report only; no outcome is asserted.
pub fn verify_conjecture1(n_min: usize, n_max: usize) -> Result<VerificationReport> {
    check_range(n_min, n_max, 4, 8)?;
    sweep(&SweepConfig::new(
        GraphClass::Connected,
        n_min,
        n_max,
        &BoundId::CONJECTURE_1,
    ))
}

/// Graphs that violate both quasi-tree bounds at order `n`.
pub fn expected_exceptions(n: usize) -> Vec<FamilySpec> {
    match n {
        5 => vec![FamilySpec::U531],
        6 => vec![FamilySpec::U641],
        _ => Vec::new(),
    }
}

/// Graphs that meet both quasi-tree bounds with equality at order `n`.
pub fn expected_equalities(n: usize) -> Vec<FamilySpec> {
    match n {
        6 => vec![FamilySpec::V(1, 1)],
        n if n >= 7 => vec![FamilySpec::U(n)],
        _ => Vec::new(),
    }
}

/// Differences between a quasi-tree sweep and the theorem statement:
/// exceptions exactly [`expected_exceptions`], equality cases exactly
/// [`expected_equalities`], each on both bounds. Empty means the sweep agrees.
pub fn contract_mismatches(report: &VerificationReport) -> Vec<String> {
    let mut problems = Vec::new();
    if report.class != GraphClass::QuasiTree {
        problems.push(format!(
            "sweep covers {} graphs, not quasi-trees",
            report.class
        ));
    }
    for b in BoundId::QUASI_TREE {
        if !report.bounds.contains(&b) {
            problems.push(format!("sweep does not check {b}"));
        }
    }
    if !problems.is_empty() {
        return problems;
    }
    for o in &report.orders {
        for (kind, list, want, status) in [
            (
                "violation",
                &o.violations,
                expected_exceptions(o.n),
                Status::Violated,
            ),
            (
                "equality",
                &o.equalities,
                expected_equalities(o.n),
                Status::Equal,
            ),
        ] {
            let want: BTreeSet<String> = want.iter().map(|f| f.to_string()).collect();
            let mut got = BTreeSet::new();
            for e in list {
                let name = e
                    .family
                    .map(|f| f.to_string())
                    .unwrap_or_else(|| e.graph6.clone());
                for b in BoundId::QUASI_TREE {
                    if e.status(b) != Some(status) {
                        problems.push(format!(
                            "n={}: {kind} {name} is {:?} on {b}",
                            o.n,
                            e.status(b)
                        ));
                    }
                }
                got.insert(name);
            }
            for extra in got.difference(&want) {
                problems.push(format!("n={}: unexpected {kind} {extra}", o.n));
            }
            for missing in want.difference(&got) {
                problems.push(format!("n={}: missing {kind} {missing}", o.n));
            }
        }
    }
    problems
}

/// The named family isomorphic to `g`, if any.
///
/// Candidates of the same order are tried in a fixed order so the name is
/// stable: the exceptional graphs first, then `V(r,s)` with `r ≤ s`, `U(n)`,
/// cycles, paths, stars and complete graphs.
pub fn recognize_named(g: &Graph) -> Option<FamilySpec> {
    let n = g.order();
    if n > CANONICAL_CAP || n == 0 {
        return None;
    }
    let m = g.edge_count();
    let target = canonical_form(g).ok()?;
    FamilySpec::candidates(n).into_iter().find(|spec| {
        spec.build()
            .ok()
            .filter(|h| h.edge_count() == m)
            .and_then(|h| canonical_form(&h).ok())
            == Some(target)
    })
}

/// The two auxiliary inequalities checked on grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaId {
    /// `f(x,y) > 0` for `x, y ≥ 2`.
    TwoVariablePositivity,
    /// `x/(x+2) ≥ g(x) ≥ 11/28` for `x ≥ 2`, `g` increasing.
    DegreeChain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaFailure {
    pub point: Vec<Rational>,
    pub value: Rational,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCheckResult {
    pub lemma: LemmaId,
    pub grid: String,
    pub points: usize,
    /// First failing point, if any.
    pub failure: Option<LemmaFailure>,
    /// Smallest value of `f` (or `g`) on the grid, and where it occurs.
    pub min_value: Rational,
    pub argmin: Vec<Rational>,
}

impl LemmaCheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `f(x,y) = (x+4)/(x(x+1)(x+2)) + (y+4)/(y(y+1)(y+2)) − 2/((x+y)(x+y−2))`.
pub fn lemma_f(x: &Rational, y: &Rational) -> Rational {
    let one = Rational::from_integer(1);
    let two = Rational::from_integer(2);
    let four = Rational::from_integer(4);
    let part = |t: &Rational| {
        let num = t + &four;
        let den = t * &(t + &one) * (t + &two);
        num / den
    };
    let s = x + y;
    let cross = two.clone() / (&s * &(&s - &two));
    part(x) + part(y) - cross
}

/// `g(x) = 1/(5+x) + (x−1)/(2+x)`.
pub fn lemma_g(x: &Rational) -> Rational {
    let one = Rational::from_integer(1);
    let a = one.clone() / (Rational::from_integer(5) + x);
    let b = (x - &one) / (Rational::from_integer(2) + x);
    a + b
}

fn grid_points(upper: i64, max_den: i64) -> Vec<Rational> {
    let mut pts: BTreeSet<Rational> = BTreeSet::new();
    for q in 1..=max_den {
        for p in 2 * q..=upper * q {
            pts.insert(Rational::new(p, q));
        }
    }
    pts.into_iter().collect()
}

fn check_f(points: &[Rational], ys: &[Rational], grid: String) -> LemmaCheckResult {
    let mut failure = None;
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    let mut count = 0;
    for x in points {
        for y in ys {
            count += 1;
            let v = lemma_f(x, y);
            if failure.is_none() && !v.is_positive() {
                failure = Some(LemmaFailure {
                    point: vec![x.clone(), y.clone()],
                    value: v.clone(),
                    reason: "f(x,y) is not positive".into(),
                });
            }
            if best.as_ref().is_none_or(|(m, _)| v < *m) {
                best = Some((v, vec![x.clone(), y.clone()]));
            }
        }
    }
    let (min_value, argmin) = best.expect("grid is non-empty");
    LemmaCheckResult {
        lemma: LemmaId::TwoVariablePositivity,
        grid,
        points: count,
        failure,
        min_value,
        argmin,
    }
}

fn check_g(points: &[Rational], grid: String) -> LemmaCheckResult {
    let floor = Rational::new(11, 28);
    let mut failure = None;
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    let values: Vec<Rational> = points.iter().map(lemma_g).collect();
    for (i, (x, g)) in points.iter().zip(&values).enumerate() {
        let upper = x / &(x + &Rational::from_integer(2));
        let reason = if upper < *g {
            Some("x/(x+2) < g(x)")
        } else if *g < floor {
            Some("g(x) < 11/28")
        } else if i > 0 && *g < values[i - 1] {
            Some("g decreases")
        } else {
            None
        };
        if let (None, Some(reason)) = (&failure, reason) {
            failure = Some(LemmaFailure {
                point: vec![x.clone()],
                value: g.clone(),
                reason: reason.into(),
            });
        }
        if best.as_ref().is_none_or(|(m, _)| g < m) {
            best = Some((g.clone(), vec![x.clone()]));
        }
    }
    let (min_value, argmin) = best.expect("grid is non-empty");
    LemmaCheckResult {
        lemma: LemmaId::DegreeChain,
        grid,
        points: points.len(),
        failure,
        min_value,
        argmin,
    }
}

fn need_two(name: &str, v: i64) -> Result<()> {
    if v < 2 {
        Err(input(format!("{name} must be at least 2, got {v}")))
    } else {
        Ok(())
    }
}

/// `f(x,y) > 0` for all integers `2 ≤ x ≤ x_max`, `2 ≤ y ≤ y_max`.
pub fn check_lemma_f(x_max: i64, y_max: i64) -> Result<LemmaCheckResult> {
    need_two("x_max", x_max)?;
    need_two("y_max", y_max)?;
    let xs = grid_points(x_max, 1);
    let ys = grid_points(y_max, 1);
    Ok(check_f(
        &xs,
        &ys,
        format!("integers x in 2..={x_max}, y in 2..={y_max}"),
    ))
}

/// The chain and monotonicity of `g` for all integers `2 ≤ x ≤ x_max`.
pub fn check_lemma_g(x_max: i64) -> Result<LemmaCheckResult> {
    need_two("x_max", x_max)?;
    Ok(check_g(
        &grid_points(x_max, 1),
        format!("integers x in 2..={x_max}"),
    ))
}

/// `f` on all rationals `p/q` with `q ≤ max_den` in `[2, upper]²`.
/// Evidence for the real-variable statement, not a proof of it.
pub fn check_lemma_f_sampled(upper: i64, max_den: i64) -> Result<LemmaCheckResult> {
    need_two("upper", upper)?;
    if max_den < 1 {
        return Err(input("max_den must be positive"));
    }
    let pts = grid_points(upper, max_den);
    Ok(check_f(
        &pts,
        &pts,
        format!("rationals p/q in [2,{upper}] with q <= {max_den}"),
    ))
}

/// `g` on all rationals `p/q` with `q ≤ max_den` in `[2, upper]`.
pub fn check_lemma_g_sampled(upper: i64, max_den: i64) -> Result<LemmaCheckResult> {
    need_two("upper", upper)?;
    if max_den < 1 {
        return Err(input("max_den must be positive"));
    }
    let pts = grid_points(upper, max_den);
    Ok(check_g(
        &pts,
        format!("rationals p/q in [2,{upper}] with q <= {max_den}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn names(list: &[GraphEntry]) -> Vec<String> {
        list.iter()
            .map(|e| e.family.map(|f| f.to_string()).unwrap_or_default())
            .collect()
    }

    #[test]
    fn small_orders_are_clean() {
        let rep = verify_theorems(3, 4).unwrap();
        assert_eq!(rep.violation_count(), 0);
        assert!(rep.orders.iter().all(|o| o.equalities.is_empty()));
        assert_eq!(rep.order(3).unwrap().graph_count, 1);
        assert_eq!(rep.order(4).unwrap().graph_count, 3);
        assert!(contract_mismatches(&rep).is_empty());
    }

    #[test]
    fn exceptions_at_five_and_six() {
        let rep = verify_theorems(5, 6).unwrap();
        assert_eq!(names(&rep.order(5).unwrap().violations), vec!["U531"]);
        assert_eq!(names(&rep.order(6).unwrap().violations), vec!["U641"]);
        assert!(rep.order(5).unwrap().equalities.is_empty());
        assert_eq!(names(&rep.order(6).unwrap().equalities), vec!["V(1,1)"]);
        assert!(
            contract_mismatches(&rep).is_empty(),
            "{:?}",
            contract_mismatches(&rep)
        );
        for o in &rep.orders {
            for e in o.violations.iter().chain(&o.equalities) {
                assert!(e.reverify().unwrap());
            }
            for s in &o.slack {
                assert!(s.min_slack.as_ref().unwrap().is_positive());
            }
        }
    }

    #[test]
    fn contract_detects_tampering() {
        let mut rep = verify_theorems(6, 6).unwrap();
        rep.orders[0].equalities.clear();
        let problems = contract_mismatches(&rep);
        assert_eq!(problems, vec!["n=6: missing equality V(1,1)".to_string()]);

        let conj = verify_conjecture1(4, 4).unwrap();
        assert!(!contract_mismatches(&conj).is_empty());
    }

    #[test]
    fn range_checks() {
        assert!(matches!(verify_theorems(2, 4), Err(Error::Input(_))));
        assert!(matches!(verify_theorems(5, 4), Err(Error::Input(_))));
        assert!(matches!(
            verify_theorems(3, 10),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            verify_conjecture1(4, 9),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(verify_conjecture1(3, 5), Err(Error::Input(_))));
    }

    #[test]
    fn conjecture_sweep_at_four() {
        let rep = verify_conjecture1(4, 4).unwrap();
        assert_eq!(rep.order(4).unwrap().graph_count, 6);
        assert_eq!(rep.violation_count(), 0);
    }

    #[test]
    fn reports_are_reproducible() {
        let a = verify_theorems(3, 7).unwrap();
        let b = verify_theorems(3, 7).unwrap();
        assert_eq!(a.to_json(false), b.to_json(false));
        assert_eq!(a.to_text(Some(4), false), b.to_text(Some(4), false));
        assert!(a.to_json(true).contains("elapsed_ms"));
        assert!(!a.to_json(false).contains("elapsed_ms"));
    }

    #[test]
    fn json_schema_fields() {
        let rep = verify_theorems(6, 6).unwrap();
        let v: serde_json::Value = serde_json::from_str(&rep.to_json(false)).unwrap();
        assert_eq!(v["class"], "quasi-tree");
        assert_eq!(v["bounds"][0], "QT_ADDITIVE");
        let o = &v["orders"][0];
        assert_eq!(o["n"], 6);
        assert_eq!(o["violations"][0]["family"], "U641");
        assert_eq!(o["violations"][0]["harmonic"], "13/5");
        assert_eq!(o["violations"][0]["checks"][0]["status"], "VIOLATED");
        assert_eq!(o["equalities"][0]["family"], "V(1,1)");
        assert_eq!(o["equalities"][0]["harmonic"], "8/3");
        assert!(o["slack"][0]["min_slack"].as_str().unwrap().contains('/'));
    }

    #[test]
    fn recognition() {
        let v11 = FamilySpec::V(1, 1).build().unwrap();
        let shuffled = v11.relabel(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert_eq!(recognize_named(&shuffled), Some(FamilySpec::V(1, 1)));
        assert_eq!(
            recognize_named(&FamilySpec::Cycle(7).build().unwrap()),
            Some(FamilySpec::Cycle(7))
        );
        assert_eq!(
            recognize_named(&FamilySpec::U(6).build().unwrap()),
            Some(FamilySpec::U641)
        );
        assert_eq!(
            recognize_named(&FamilySpec::V(2, 0).build().unwrap()),
            Some(FamilySpec::V(0, 2))
        );
        // C6 plus a chord between vertices 0 and 2, then a pendant: no family matches.
        let odd = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (0, 2),
                (3, 6),
                (6, 7),
            ],
        )
        .unwrap();
        assert!(odd.is_quasi_tree());
        assert_eq!(recognize_named(&odd), None);
        assert_eq!(
            recognize_named(&FamilySpec::Path(13).build().unwrap()),
            None
        );
    }

    #[test]
    fn lemma_values() {
        assert_eq!(lemma_f(&r(2, 1), &r(2, 1)), r(1, 4));
        assert_eq!(lemma_f(&r(2, 1), &r(3, 1)), lemma_f(&r(3, 1), &r(2, 1)));
        assert_eq!(lemma_g(&r(2, 1)), r(11, 28));
        assert_eq!(lemma_g(&r(3, 1)), r(21, 40));
        assert!(lemma_g(&r(3, 1)) <= r(3, 5));
        let ten = r(10, 1);
        assert!(lemma_g(&ten) >= r(11, 28) && lemma_g(&ten) <= r(10, 12));
    }

    #[test]
    fn lemma_grids() {
        let f = check_lemma_f(30, 30).unwrap();
        assert!(f.passed());
        assert_eq!(f.points, 29 * 29);
        let g = check_lemma_g(200).unwrap();
        assert!(g.passed());
        assert_eq!(g.min_value, r(11, 28));
        assert_eq!(g.argmin, vec![r(2, 1)]);
        assert!(matches!(check_lemma_f(1, 5), Err(Error::Input(_))));
        assert!(check_lemma_g(1).is_err());
    }

    #[test]
    fn sampled_lemmas() {
        let f = check_lemma_f_sampled(6, 8).unwrap();
        assert!(f.passed());
        let g = check_lemma_g_sampled(20, 8).unwrap();
        assert!(g.passed());
        assert_eq!(g.min_value, r(11, 28));
    }
}
