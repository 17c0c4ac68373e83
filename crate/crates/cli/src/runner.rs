//! Case execution: build the product named by a manifest line, resolve the
//! closed-form prediction (when the factors meet the hypotheses), run the
//! requested computation, and score the outcome.
//!
//! Budget column semantics per method: `oracle` — subset work guard;
//! `search` — node budget; `both` — applied to each side in its own role;
//! `pmc` — sample count; `sweep` — largest degree k to cover. `-` falls
//! back to the suite configuration (or the method default).

use std::time::{Duration, Instant};

use anyhow::{bail, ensure, Context, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use xconn_core::error::Error as CoreError;
use xconn_core::extra::{
    build_block_cut, build_layer_path_cut, is_g_extra_cut, kappa_g_oracle, kappa_g_search,
    ExtraConnResult, KappaG, OracleConfig, SearchConfig,
};
use xconn_core::family::{generate, FamilySpec};
use xconn_core::formulas::{
    cycle_product_formula, cycle_product_hypothesis_holds, diagnosability_formula, kappa_g_strong,
    m_formula,
};
use xconn_core::graph::Graph;
use xconn_core::invariants::{
    girth, hypothesis_report, vertex_connectivity_with, vertex_count_lower_bound, HypothesisReport,
};
use xconn_core::pmc::{
    diagnosability_preconditions, is_t_diagnosable_sampled, witness_pair, SampleConfig,
};
use xconn_core::product::{strong_product, Axis, ProductGraph};
use xconn_core::VertexSet;

use crate::catalog::{catalog_graphs, CATALOG_SPECS};
use crate::manifest::{CaseMethod, CaseSpec};
use crate::report::{CaseStatus, ComputedValue, Environment, Report, VerificationCase};

/// Suite-wide execution settings; per-case budgets override these.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Worker threads for the case pool (0 = one per logical CPU).
    pub workers: usize,
    /// Fallback node budget for search cases whose budget column is `-`.
    pub node_budget: Option<u64>,
    /// Wall-clock deadline applied to each search invocation.
    pub timeout: Option<Duration>,
    /// Seed for the sampled diagnosability checker.
    pub seed: u64,
    /// Run cases (and the solvers inside them) on the rayon pool.
    pub parallel: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            workers: 0,
            node_budget: None,
            timeout: None,
            seed: 7,
            parallel: true,
        }
    }
}

/// Execute every case and collect a report in manifest order.
#[must_use]
pub fn run_cases(cases: &[CaseSpec], config: &SuiteConfig) -> Report {
    let environment = Environment {
        workers: config.workers,
        seed: config.seed,
        node_budget: config.node_budget,
        timeout_secs: config.timeout.map(|d| d.as_secs()),
    };
    #[cfg(feature = "parallel")]
    let executed: Vec<VerificationCase> = if xconn_core::effective_parallel(config.parallel) {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("rayon pool construction");
        pool.install(|| {
            cases
                .par_iter()
                .map(|case| execute_case(case, config))
                .collect()
        })
    } else {
        cases
            .iter()
            .map(|case| execute_case(case, config))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let executed: Vec<VerificationCase> = cases
        .iter()
        .map(|case| execute_case(case, config))
        .collect();
    Report {
        cases: executed,
        environment,
    }
}

/// What a case handler concluded, before timing is attached.
struct CaseOutcome {
    computed: ComputedValue,
    expected: Option<usize>,
    status: CaseStatus,
    nodes: u64,
}

impl CaseOutcome {
    fn skipped() -> Self {
        CaseOutcome {
            computed: ComputedValue::Absent,
            expected: None,
            status: CaseStatus::SkippedHypothesis,
            nodes: 0,
        }
    }

    /// Score a violation count against the expectation of zero.
    fn from_violations(violations: usize, nodes: u64) -> Self {
        CaseOutcome {
            computed: ComputedValue::Finite(violations),
            expected: Some(0),
            status: if violations == 0 {
                CaseStatus::Pass
            } else {
                CaseStatus::Fail
            },
            nodes,
        }
    }
}

/// Run one case, timing it and converting handler errors into failures.
#[must_use]
pub fn execute_case(case: &CaseSpec, config: &SuiteConfig) -> VerificationCase {
    let start = Instant::now();
    let outcome = dispatch(case, config).unwrap_or_else(|err| {
        eprintln!(
            "case '{} {} {} {}' errored: {err:#}",
            case.factor1(),
            case.factor2(),
            case.g,
            case.method.label()
        );
        CaseOutcome {
            computed: ComputedValue::Absent,
            expected: None,
            status: CaseStatus::Fail,
            nodes: 0,
        }
    });
    VerificationCase {
        factor1: case.factor1().to_string(),
        factor2: case.factor2().to_string(),
        g: case.g,
        expected: outcome.expected,
        computed: outcome.computed,
        status: outcome.status,
        nodes: outcome.nodes,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn dispatch(case: &CaseSpec, config: &SuiteConfig) -> Result<CaseOutcome> {
    match case.method {
        CaseMethod::Kappa0 | CaseMethod::Oracle | CaseMethod::Search | CaseMethod::Both => {
            solver_case(case, config)
        }
        CaseMethod::Gadget => gadget_case(case),
        CaseMethod::Pmc => pmc_case(case, config),
        CaseMethod::Sweep => sweep_case(case),
        CaseMethod::VertexBound => vertexbound_case(),
    }
}

fn build_factors(case: &CaseSpec) -> Result<(Graph, Graph)> {
    let spec1 = case
        .spec1
        .as_deref()
        .context("case needs a first factor spec")?;
    let spec2 = case
        .spec2
        .as_deref()
        .context("case needs a second factor spec")?;
    let f1 = generate(spec1).with_context(|| format!("building {spec1}"))?;
    let f2 = generate(spec2).with_context(|| format!("building {spec2}"))?;
    Ok((f1, f2))
}

/// True when a factor meets the closed-form hypotheses at level `g`:
/// k-regular with k ≥ 2, maximally connected, girth ≥ max(5, g+4).
fn factor_qualifies(report: &HypothesisReport, g: usize) -> bool {
    report.qualifies_for_g >= Some(g.max(1))
}

fn cycle_length(spec: Option<&str>) -> Option<usize> {
    match spec?.parse::<FamilySpec>().ok()? {
        FamilySpec::Cycle(m) => Some(m),
        _ => None,
    }
}

/// Closed-form prediction for κ_g of the strong product of the case's
/// factors, or `None` when no published formula covers the pair.
///
/// Two sources: the cycle-product closed form (applied only to cycles of
/// length ≥ 5, where the product is neither complete nor degenerate) and
/// the general regular-factor form under the girth hypothesis. When both
/// apply they must agree.
fn predict_strong(case: &CaseSpec, f1: &Graph, f2: &Graph) -> Result<Option<usize>> {
    let g = case.g;
    let from_cycles = match (
        cycle_length(case.spec1.as_deref()),
        cycle_length(case.spec2.as_deref()),
    ) {
        (Some(m), Some(n)) if m >= 5 && n >= 5 && cycle_product_hypothesis_holds(g, m, n) => {
            Some(cycle_product_formula(g, m, n))
        }
        _ => None,
    };
    let r1 = hypothesis_report(f1);
    let r2 = hypothesis_report(f2);
    let general = if factor_qualifies(&r1, g) && factor_qualifies(&r2, g) {
        let (k1, k2) = (
            r1.k.expect("qualified factor is regular"),
            r2.k.expect("qualified factor is regular"),
        );
        kappa_g_strong(g, k1, k2)
    } else {
        None
    };
    match (from_cycles, general) {
        (Some(a), Some(b)) => {
            ensure!(
                a == b,
                "closed forms disagree: cycle form {a}, general form {b}"
            );
            Ok(Some(a))
        }
        (Some(a), None) => Ok(Some(a)),
        (None, Some(b)) => Ok(Some(b)),
        (None, None) => Ok(None),
    }
}

/// Check that a finite solver result carries a witness that independently
/// revalidates: present, marked valid, size equal to the value, and
/// still a g-extra cut when re-certified from scratch.
fn witness_revalidates(graph: &Graph, g: usize, result: &ExtraConnResult) -> bool {
    let Some(value) = result.value.finite() else {
        return true;
    };
    let Some(cert) = &result.witness else {
        return false;
    };
    if !cert.valid || cert.s.len() != value {
        return false;
    }
    is_g_extra_cut(graph, &cert.s, g).map_or(false, |fresh| fresh.valid)
}

fn score_value(value: KappaG, expected: usize, witness_ok: bool, nodes: u64) -> CaseOutcome {
    let (computed, status) = match value {
        KappaG::Finite(v) if !witness_ok => (ComputedValue::Finite(v), CaseStatus::Fail),
        KappaG::Finite(v) => (
            ComputedValue::Finite(v),
            if v == expected {
                CaseStatus::Pass
            } else {
                CaseStatus::Fail
            },
        ),
        KappaG::Infinite => (ComputedValue::Infinite, CaseStatus::Fail),
        KappaG::UnknownAboveCap { .. } | KappaG::UnknownAboveBudget => {
            (ComputedValue::Unknown, CaseStatus::Unknown)
        }
    };
    CaseOutcome {
        computed,
        expected: Some(expected),
        status,
        nodes,
    }
}

fn run_oracle(
    graph: &Graph,
    g: usize,
    case: &CaseSpec,
    config: &SuiteConfig,
) -> Result<Option<ExtraConnResult>> {
    let oracle_config = OracleConfig {
        size_cap: None,
        work_guard: case.budget.map_or(50_000_000, u128::from),
        parallel: config.parallel,
    };
    match kappa_g_oracle(graph, g, &oracle_config) {
        Ok(result) => Ok(Some(result)),
        Err(CoreError::WorkGuardExceeded { .. }) => Ok(None),
        Err(other) => Err(other.into()),
    }
}

fn run_search(
    graph: &Graph,
    g: usize,
    case: &CaseSpec,
    config: &SuiteConfig,
) -> Result<ExtraConnResult> {
    let search_config = SearchConfig {
        node_budget: case.budget.or(config.node_budget).unwrap_or(u64::MAX),
        deadline: config.timeout,
        parallel: config.parallel,
    };
    Ok(kappa_g_search(graph, g, &search_config)?)
}

/// Kappa0 / Oracle / Search / Both: compute κ_g of the strong product and
/// compare against the closed-form prediction.
fn solver_case(case: &CaseSpec, config: &SuiteConfig) -> Result<CaseOutcome> {
    let (f1, f2) = build_factors(case)?;
    let product = strong_product(&f1, &f2);
    let Some(expected) = predict_strong(case, &f1, &f2)? else {
        return Ok(CaseOutcome::skipped());
    };
    let graph = product.graph();
    let g = case.g;
    match case.method {
        CaseMethod::Kappa0 => {
            ensure!(g == 0, "kappa0 method is only meaningful at g = 0");
            let kappa = vertex_connectivity_with(graph, config.parallel);
            Ok(score_value(KappaG::Finite(kappa), expected, true, 0))
        }
        CaseMethod::Oracle => match run_oracle(graph, g, case, config)? {
            Some(result) => {
                let ok = witness_revalidates(graph, g, &result);
                Ok(score_value(
                    result.value,
                    expected,
                    ok,
                    result.nodes_explored,
                ))
            }
            None => Ok(CaseOutcome {
                computed: ComputedValue::Unknown,
                expected: Some(expected),
                status: CaseStatus::Unknown,
                nodes: 0,
            }),
        },
        CaseMethod::Search => {
            let result = run_search(graph, g, case, config)?;
            let ok = witness_revalidates(graph, g, &result);
            Ok(score_value(
                result.value,
                expected,
                ok,
                result.nodes_explored,
            ))
        }
        CaseMethod::Both => {
            let search = run_search(graph, g, case, config)?;
            let oracle = run_oracle(graph, g, case, config)?;
            let nodes = search.nodes_explored + oracle.as_ref().map_or(0, |r| r.nodes_explored);
            let (Some(oracle), true) = (oracle, search.value.is_known()) else {
                return Ok(CaseOutcome {
                    computed: ComputedValue::Unknown,
                    expected: Some(expected),
                    status: CaseStatus::Unknown,
                    nodes,
                });
            };
            if !oracle.value.is_known() {
                return Ok(CaseOutcome {
                    computed: ComputedValue::Unknown,
                    expected: Some(expected),
                    status: CaseStatus::Unknown,
                    nodes,
                });
            }
            if oracle.value != search.value {
                // Two independent solvers disagree: report the search value
                // but fail the case outright.
                return Ok(CaseOutcome {
                    computed: ComputedValue::Finite(search.value.finite().unwrap_or(0)),
                    expected: Some(expected),
                    status: CaseStatus::Fail,
                    nodes,
                });
            }
            let ok =
                witness_revalidates(graph, g, &search) && witness_revalidates(graph, g, &oracle);
            Ok(score_value(search.value, expected, ok, nodes))
        }
        _ => unreachable!("solver_case handles solver methods only"),
    }
}

/// The two cut shapes behind the closed-form minimum: a path of g+1
/// vertices laid along one axis, and (at g = 3) the 2×2 block.
/// Each entry is (label, predicted boundary size, builder).
type GadgetBuilder<'p> =
    Box<dyn Fn() -> xconn_core::Result<(xconn_core::extra::CutCertificate, VertexSet)> + 'p>;

fn gadget_candidates<'p>(
    product: &'p ProductGraph,
    g: usize,
    k1: usize,
    k2: usize,
) -> Vec<(&'static str, usize, GadgetBuilder<'p>)> {
    let p = g + 1;
    let axis1_size = (p * (k1 - 1) + 2) * (k2 + 1) - p;
    let axis2_size = (p * (k2 - 1) + 2) * (k1 + 1) - p;
    let mut out: Vec<(&'static str, usize, GadgetBuilder<'p>)> = vec![
        (
            "path along factor 1",
            axis1_size,
            Box::new(move || build_layer_path_cut(product, g, Axis::G1, 0)),
        ),
        (
            "path along factor 2",
            axis2_size,
            Box::new(move || build_layer_path_cut(product, g, Axis::G2, 0)),
        ),
    ];
    if g == 3 {
        let block_size = 4 * k1 * k2 - 4;
        out.push((
            "2x2 block",
            block_size,
            Box::new(move || {
                let x_edge = product
                    .factor1()
                    .edges()
                    .next()
                    .expect("factor has an edge");
                let y_edge = product
                    .factor2()
                    .edges()
                    .next()
                    .expect("factor has an edge");
                build_block_cut(product, x_edge, y_edge)
            }),
        ));
    }
    out
}

/// Gadget: build each closed-form cut shape explicitly, certify it, and
/// check its size equals the matching formula term; also check that the
/// smallest built size equals the closed-form κ_g. Computed value is the
/// number of violations (expected 0).
fn gadget_case(case: &CaseSpec) -> Result<CaseOutcome> {
    let (f1, f2) = build_factors(case)?;
    let g = case.g;
    let r1 = hypothesis_report(&f1);
    let r2 = hypothesis_report(&f2);
    if !(factor_qualifies(&r1, g) && factor_qualifies(&r2, g)) {
        return Ok(CaseOutcome::skipped());
    }
    let (k1, k2) = (
        r1.k.expect("qualified factor is regular"),
        r2.k.expect("qualified factor is regular"),
    );
    let product = strong_product(&f1, &f2);
    let candidates = gadget_candidates(&product, g, k1, k2);

    let mut violations = 0usize;
    let mut built_sizes = Vec::new();
    for (label, predicted, builder) in &candidates {
        match builder() {
            Ok((cert, a)) => {
                let ok = cert.valid && cert.s.len() == *predicted && a.len() == g + 1;
                if !ok {
                    eprintln!(
                        "gadget '{label}' on {} x {}: size {} vs predicted {predicted}, valid={}",
                        case.factor1(),
                        case.factor2(),
                        cert.s.len(),
                        cert.valid
                    );
                    violations += 1;
                }
                built_sizes.push(cert.s.len());
            }
            Err(err) => {
                eprintln!("gadget '{label}' failed to build: {err}");
                violations += 1;
            }
        }
    }
    if let Some(kappa) = kappa_g_strong(g, k1, k2) {
        if built_sizes.iter().min() != Some(&kappa) {
            violations += 1;
        }
    } else {
        violations += 1;
    }
    Ok(CaseOutcome::from_violations(violations, 0))
}

/// Build a closed-form cut shape whose predicted size equals κ_g, certify
/// it, and return the certificate together with the inner component A
/// (|A| = g+1). Errors when no shape attains the closed-form minimum or
/// the built cut does not certify.
pub fn build_minimum_gadget(
    product: &ProductGraph,
    g: usize,
    k1: usize,
    k2: usize,
) -> Result<(xconn_core::extra::CutCertificate, VertexSet)> {
    let Some(kappa) = kappa_g_strong(g, k1, k2) else {
        bail!("no closed form for g = {g}");
    };
    let candidates = gadget_candidates(product, g, k1, k2);
    let Some((label, _, builder)) = candidates.iter().find(|(_, size, _)| *size == kappa) else {
        bail!("no closed-form cut shape attains the minimum {kappa} at g = {g}");
    };
    let (cert, a) = builder()
        .map_err(anyhow::Error::from)
        .with_context(|| format!("building gadget '{label}'"))?;
    ensure!(
        cert.valid && cert.s.len() == kappa,
        "gadget '{label}' built size {} (valid = {}), wanted {kappa}",
        cert.s.len(),
        cert.valid
    );
    Ok((cert, a))
}

/// Pmc: exhibit the indistinguishable fault-set pair around a minimum-size
/// gadget, check the diagnosability preconditions, and run the sampled
/// checker at t = κ_g + g looking for counterexamples below the threshold.
fn pmc_case(case: &CaseSpec, config: &SuiteConfig) -> Result<CaseOutcome> {
    let (f1, f2) = build_factors(case)?;
    let g = case.g;
    let r1 = hypothesis_report(&f1);
    let r2 = hypothesis_report(&f2);
    if !(factor_qualifies(&r1, g) && factor_qualifies(&r2, g)) {
        return Ok(CaseOutcome::skipped());
    }
    let (k1, k2) = (
        r1.k.expect("qualified factor is regular"),
        r2.k.expect("qualified factor is regular"),
    );
    let Some(kappa) = kappa_g_strong(g, k1, k2) else {
        return Ok(CaseOutcome::skipped());
    };
    let t = diagnosability_formula(g, k1, k2);
    ensure!(t == kappa + g, "diagnosability form must equal kappa_g + g");

    let product = strong_product(&f1, &f2);
    let graph = product.graph();
    let samples = case.budget.unwrap_or(100_000);

    let mut violations = 0usize;

    // A minimum-size gadget realizes the witness component A with |A| = g+1.
    match build_minimum_gadget(&product, g, k1, k2) {
        Ok((_cert, a)) => {
            match witness_pair(graph, &a, g) {
                Ok(pair) => {
                    if pair.distinguishable
                        || pair.r1.len() != kappa
                        || pair.r2.len() != kappa + g + 1
                    {
                        violations += 1;
                    }
                }
                Err(err) => {
                    eprintln!("witness pair construction failed: {err}");
                    violations += 1;
                }
            }
            if !diagnosability_preconditions(graph, g, kappa, &a)? {
                violations += 1;
            }
        }
        Err(err) => {
            eprintln!(
                "minimum gadget on {} x {} failed: {err:#}",
                case.factor1(),
                case.factor2()
            );
            violations += 1;
        }
    }

    let sample_config = SampleConfig {
        samples,
        seed: config.seed,
        parallel: config.parallel,
        ..SampleConfig::default()
    };
    let verdict = is_t_diagnosable_sampled(graph, g, t, &sample_config)?;
    if !verdict.holds {
        eprintln!(
            "sampled checker found an indistinguishable pair below t = {t} on {} x {}",
            case.factor1(),
            case.factor2()
        );
        violations += 1;
    }

    Ok(CaseOutcome::from_violations(violations, samples))
}

/// Sweep: arithmetic consistency of the closed forms over all degree pairs
/// 2 ≤ k₁, k₂ ≤ maxk (budget column, default 50): the κ_g form equals the
/// neighborhood-minimum form M, M is symmetric, monotone in g, the
/// diagnosability form is M + g, and at k = 2 the cycle-product form at
/// girth g+4 reproduces M.
fn sweep_case(case: &CaseSpec) -> Result<CaseOutcome> {
    let g = case.g;
    let max_k = usize::try_from(case.budget.unwrap_or(50)).unwrap_or(usize::MAX);
    ensure!(
        max_k >= 2,
        "sweep needs a budget of at least 2 (largest degree)"
    );
    let mut violations = 0usize;
    let mut pairs = 0u64;
    for k1 in 2..=max_k {
        for k2 in 2..=max_k {
            pairs += 1;
            let m = m_formula(g, k1, k2);
            if kappa_g_strong(g, k1, k2) != Some(m) {
                violations += 1;
            }
            if m_formula(g, k2, k1) != m {
                violations += 1;
            }
            if diagnosability_formula(g, k1, k2) != m + g {
                violations += 1;
            }
            if g < 3 && m_formula(g + 1, k1, k2) < m {
                violations += 1;
            }
        }
    }
    // k = 2 cross-check: both factors are cycles of girth g+4, where the
    // cycle-product closed form applies and must give the same number.
    let m_cycle = g + 4;
    if cycle_product_hypothesis_holds(g, m_cycle, m_cycle)
        && cycle_product_formula(g, m_cycle, m_cycle) != m_formula(g, 2, 2)
    {
        violations += 1;
    }
    Ok(CaseOutcome::from_violations(violations, pairs))
}

/// VertexBound: every catalog graph that is k-regular (k ≥ 2) with finite
/// girth ≥ 5 has at least (girth−2)(k−1)+2 vertices, with equality
/// exactly for cycles.
fn vertexbound_case() -> Result<CaseOutcome> {
    let mut violations = 0usize;
    let mut checked = 0u64;
    for (spec, graph) in CATALOG_SPECS.iter().zip(catalog_graphs()) {
        let Some(k) = graph.is_k_regular() else {
            continue;
        };
        let Some(girth_value) = girth(&graph).finite() else {
            continue;
        };
        if k < 2 || girth_value < 5 {
            continue;
        }
        checked += 1;
        let bound = vertex_count_lower_bound(k, girth_value)?;
        if graph.n() < bound {
            violations += 1;
        }
        let is_cycle = spec.starts_with("cycle:");
        if (graph.n() == bound) != is_cycle {
            violations += 1;
        }
    }
    if checked == 0 {
        bail!("catalog contained no graph meeting the bound's hypotheses");
    }
    Ok(CaseOutcome::from_violations(violations, checked))
}
