//! `xconn`: exact g-extra connectivity of graph products, with closed-form
//! cross-checks and PMC-model diagnosability consequences.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use xconn::runner::build_minimum_gadget;
use xconn::{builtin_suite, parse_manifest, run_cases, SuiteConfig, SUITE_NAMES};
use xconn_core::error::Error as CoreError;
use xconn_core::extra::{
    kappa_g_oracle, kappa_g_search, ExtraConnResult, OracleConfig, SearchConfig,
};
use xconn_core::family::{generate, generate_full, FamilySpec};
use xconn_core::formulas::{
    cycle_product_formula, cycle_product_hypothesis_holds, diagnosability_formula, kappa_g_strong,
    m1_formula, m2_formula, m_formula,
};
use xconn_core::invariants::{girth, hypothesis_report, vertex_connectivity};
use xconn_core::io::{write_edge_list, write_edge_list_with_comments};
use xconn_core::pmc::{
    diagnosability_preconditions, is_t_diagnosable_exhaustive, is_t_diagnosable_sampled,
    witness_pair, ExhaustiveConfig, FaultSetPair, SampleConfig,
};
use xconn_core::product::{cartesian_product, strong_product};
use xconn_core::VertexSet;

#[derive(Parser)]
#[command(
    name = "xconn",
    version,
    about = "Exact g-extra connectivity of graph products, with closed-form cross-checks",
    long_about = "Builds named graphs and their strong/Cartesian products, computes the \
g-extra connectivity exactly by two independent methods, compares the values against \
closed forms for regular maximally connected factors, and checks the PMC-model \
diagnosability consequences.\n\nFamily specs: cycle:<m>, path:<m>, complete:<m>, \
petersen, heawood, mcgee, strong(<spec>,<spec>), cartesian(<spec>,<spec>)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Strong,
    Cartesian,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum MethodArg {
    Oracle,
    #[default]
    Search,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichFormula {
    Kappa,
    #[value(alias = "M")]
    M,
    #[value(alias = "M1")]
    M1,
    #[value(alias = "M2")]
    M2,
    Diag,
    Cycle,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family spec and write its edge list.
    Gen {
        /// Family spec, e.g. `cycle:7` or `strong(cycle:5,petersen)`.
        spec: String,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the product of two factor specs and write its edge list.
    Product {
        spec1: String,
        spec2: String,
        #[arg(long, value_enum, default_value_t = KindArg::Strong)]
        kind: KindArg,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structural invariants: girth, vertex connectivity, hypothesis report.
    Invariant {
        spec: String,
        /// Print the girth.
        #[arg(long)]
        girth: bool,
        /// Print the vertex connectivity.
        #[arg(long)]
        kappa: bool,
        /// Print the full hypothesis report (default when no flag is given).
        #[arg(long)]
        report: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Exact g-extra connectivity with a witness cut.
    Extra {
        spec: String,
        /// Extra-connectivity level: surviving components must exceed g vertices.
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Search)]
        method: MethodArg,
        /// Node budget for the search (or subset budget for the oracle).
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Wall-clock limit in seconds for the search.
        #[arg(long)]
        timeout: Option<u64>,
        /// Write the witness certificate to this file (sorted vertex ids).
        #[arg(long)]
        emit_cert: Option<PathBuf>,
    },
    /// Closed-form values for k1-/k2-regular factors.
    ///
    /// With `--which cycle`, `--k1`/`--k2` are read as cycle lengths m and n
    /// instead of degrees, and the cycle-product closed form is evaluated.
    Formula {
        #[arg(long)]
        g: usize,
        /// Degree of the first factor (cycle length m with `--which cycle`).
        #[arg(long)]
        k1: usize,
        /// Degree of the second factor (cycle length n with `--which cycle`).
        #[arg(long)]
        k2: usize,
        /// One formula instead of the full labeled table.
        #[arg(long, value_enum)]
        which: Option<WhichFormula>,
    },
    /// PMC-model diagnosability checks.
    #[command(group(clap::ArgGroup::new("mode").required(true)))]
    Pmc {
        spec: String,
        #[arg(long)]
        g: usize,
        /// Exhibit the indistinguishable fault-set pair that caps
        /// diagnosability at kappa_g + g (needs a strong-product spec
        /// with regular factors).
        #[arg(long, group = "mode")]
        witness: bool,
        /// Exhaustively check t-diagnosability for this t (small graphs).
        #[arg(long, group = "mode", value_name = "T")]
        exhaustive_t: Option<usize>,
        /// Sample fault-set pairs of size at most t, hunting for an
        /// indistinguishable pair.
        #[arg(long, group = "mode", value_name = "T")]
        sample_t: Option<usize>,
        /// Sample count for --sample-t.
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// RNG seed for --sample-t.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Run a verification suite and print its report.
    Verify {
        /// Embedded suite name: smoke, g1, g2, g3, pmc, formulas, or full.
        #[arg(long, default_value = "smoke")]
        suite: String,
        /// Run cases from this manifest file instead of an embedded suite.
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Worker threads (0 = one per logical CPU).
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Fallback node budget for search cases without one.
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Per-search wall-clock limit in seconds.
        #[arg(long)]
        timeout: Option<u64>,
        /// Seed for sampled diagnosability cases.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Gen { spec, output } => gen_cmd(&spec, output.as_deref()),
        Command::Product {
            spec1,
            spec2,
            kind,
            output,
        } => product_cmd(&spec1, &spec2, kind, output.as_deref()),
        Command::Invariant {
            spec,
            girth,
            kappa,
            report,
            format,
        } => invariant_cmd(&spec, girth, kappa, report, format),
        Command::Extra {
            spec,
            g,
            method,
            budget_nodes,
            timeout,
            emit_cert,
        } => extra_cmd(
            &spec,
            g,
            method,
            budget_nodes,
            timeout,
            emit_cert.as_deref(),
        ),
        Command::Formula { g, k1, k2, which } => formula_cmd(g, k1, k2, which),
        Command::Pmc {
            spec,
            g,
            witness,
            exhaustive_t,
            sample_t,
            samples,
            seed,
        } => pmc_cmd(&spec, g, witness, exhaustive_t, sample_t, samples, seed),
        Command::Verify {
            suite,
            manifest,
            format,
            workers,
            budget_nodes,
            timeout,
            seed,
        } => verify_cmd(
            &suite,
            manifest.as_deref(),
            format,
            workers,
            budget_nodes,
            timeout,
            seed,
        ),
    }
}

fn write_out(text: &str, output: Option<&std::path::Path>) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn gen_cmd(spec: &str, output: Option<&std::path::Path>) -> Result<u8> {
    let generated = generate_full(spec)?;
    let text = match generated.as_product() {
        Some(product) => {
            write_edge_list_with_comments(product.graph(), &product.description_comments())
        }
        None => write_edge_list(generated.graph()),
    };
    write_out(&text, output)?;
    Ok(0)
}

fn product_cmd(
    spec1: &str,
    spec2: &str,
    kind: KindArg,
    output: Option<&std::path::Path>,
) -> Result<u8> {
    let f1 = generate(spec1)?;
    let f2 = generate(spec2)?;
    let product = match kind {
        KindArg::Strong => strong_product(&f1, &f2),
        KindArg::Cartesian => cartesian_product(&f1, &f2),
    };
    let text = write_edge_list_with_comments(product.graph(), &product.description_comments());
    write_out(&text, output)?;
    Ok(0)
}

/// Render (name, value) rows as an aligned two-column table or one CSV row.
fn render_fields(fields: &[(&str, String)], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let header: Vec<&str> = fields.iter().map(|(name, _)| *name).collect();
            let values: Vec<&str> = fields.iter().map(|(_, value)| value.as_str()).collect();
            format!("{}\n{}\n", header.join(","), values.join(","))
        }
        OutputFormat::Table => {
            let width = fields.iter().map(|(name, _)| name.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (name, value) in fields {
                out.push_str(&format!("{name:<width$}  {value}\n"));
            }
            out
        }
    }
}

fn invariant_cmd(
    spec: &str,
    want_girth: bool,
    want_kappa: bool,
    want_report: bool,
    format: OutputFormat,
) -> Result<u8> {
    let canonical = spec.parse::<FamilySpec>()?.to_string();
    let graph = generate(spec)?;
    let all = want_report || (!want_girth && !want_kappa);
    let mut fields: Vec<(&str, String)> = vec![
        ("spec", canonical),
        ("n", graph.n().to_string()),
        ("m", graph.m().to_string()),
    ];
    if all {
        let report = hypothesis_report(&graph);
        fields.push(("k", report.k.map_or_else(|| "-".into(), |k| k.to_string())));
        fields.push(("kappa", report.kappa.to_string()));
        fields.push(("girth", report.girth.to_string()));
        fields.push((
            "maximally_connected",
            report.maximally_connected.to_string(),
        ));
        fields.push((
            "qualifies_for_g",
            report
                .qualifies_for_g
                .map_or_else(|| "-".into(), |g| g.to_string()),
        ));
    } else {
        if want_girth {
            fields.push(("girth", girth(&graph).to_string()));
        }
        if want_kappa {
            fields.push(("kappa", vertex_connectivity(&graph).to_string()));
        }
    }
    print!("{}", render_fields(&fields, format));
    Ok(0)
}

fn print_extra_result(label: &str, result: &ExtraConnResult) {
    println!("method     {label}");
    println!("value      {}", result.value);
    if let Some(cert) = &result.witness {
        let ids: Vec<String> = cert.s.iter().map(|v| v.to_string()).collect();
        println!("cut        {}", ids.join(" "));
        let sizes: Vec<String> = cert.component_sizes.iter().map(|c| c.to_string()).collect();
        println!("components {}", sizes.join(" "));
    }
    println!("nodes      {}", result.nodes_explored);
    println!("elapsed_ms {}", result.elapsed.as_millis());
}

fn extra_cmd(
    spec: &str,
    g: usize,
    method: MethodArg,
    budget_nodes: Option<u64>,
    timeout: Option<u64>,
    emit_cert: Option<&std::path::Path>,
) -> Result<u8> {
    let canonical = spec.parse::<FamilySpec>()?.to_string();
    let graph = generate(spec)?;
    println!("spec       {canonical}");
    println!("g          {g}");

    let run_oracle = || -> Result<Option<ExtraConnResult>> {
        let config = OracleConfig {
            size_cap: None,
            work_guard: budget_nodes.map_or(50_000_000, u128::from),
            parallel: true,
        };
        match kappa_g_oracle(&graph, g, &config) {
            Ok(result) => Ok(Some(result)),
            Err(CoreError::WorkGuardExceeded { estimate, guard }) => {
                eprintln!("oracle refused: estimated {estimate} subsets exceeds guard {guard}");
                Ok(None)
            }
            Err(other) => Err(other.into()),
        }
    };
    let run_search = || -> Result<ExtraConnResult> {
        let config = SearchConfig {
            node_budget: budget_nodes.unwrap_or(u64::MAX),
            deadline: timeout.map(Duration::from_secs),
            parallel: true,
        };
        Ok(kappa_g_search(&graph, g, &config)?)
    };

    let primary = match method {
        MethodArg::Oracle => match run_oracle()? {
            Some(result) => {
                print_extra_result("oracle", &result);
                result
            }
            None => return Ok(2),
        },
        MethodArg::Search => {
            let result = run_search()?;
            print_extra_result("branch_and_bound", &result);
            result
        }
        MethodArg::Both => {
            let search = run_search()?;
            print_extra_result("branch_and_bound", &search);
            let Some(oracle) = run_oracle()? else {
                return Ok(2);
            };
            print_extra_result("oracle", &oracle);
            if oracle.value.is_known() && search.value.is_known() && oracle.value != search.value {
                eprintln!(
                    "methods disagree: oracle {} vs search {}",
                    oracle.value, search.value
                );
                return Ok(1);
            }
            search
        }
    };

    if let Some(path) = emit_cert {
        match &primary.witness {
            Some(cert) => fs::write(path, cert.emit())
                .with_context(|| format!("writing {}", path.display()))?,
            None => bail!("no witness certificate to emit (value {})", primary.value),
        }
    }
    Ok(if primary.value.is_known() { 0 } else { 2 })
}

fn formula_cmd(g: usize, k1: usize, k2: usize, which: Option<WhichFormula>) -> Result<u8> {
    if which != Some(WhichFormula::Cycle) && g > 3 {
        bail!("closed forms cover g in 0..=3, got {g}");
    }
    let kappa =
        || -> Result<usize> { kappa_g_strong(g, k1, k2).context("no closed form at this g") };
    let fields: Vec<(&str, String)> = match which {
        None => vec![
            ("g", g.to_string()),
            ("k1", k1.to_string()),
            ("k2", k2.to_string()),
            ("kappa_g", kappa()?.to_string()),
            ("M1", m1_formula(g, k1, k2).to_string()),
            ("M2", m2_formula(g, k1, k2).to_string()),
            ("M", m_formula(g, k1, k2).to_string()),
            (
                "diagnosability",
                diagnosability_formula(g, k1, k2).to_string(),
            ),
        ],
        Some(WhichFormula::Kappa) => vec![("kappa_g", kappa()?.to_string())],
        Some(WhichFormula::M) => vec![("M", m_formula(g, k1, k2).to_string())],
        Some(WhichFormula::M1) => vec![("M1", m1_formula(g, k1, k2).to_string())],
        Some(WhichFormula::M2) => vec![("M2", m2_formula(g, k1, k2).to_string())],
        Some(WhichFormula::Diag) => {
            vec![(
                "diagnosability",
                diagnosability_formula(g, k1, k2).to_string(),
            )]
        }
        Some(WhichFormula::Cycle) => {
            let (m, n) = (k1, k2);
            if m < 3 || n < 3 {
                bail!("cycle lengths must be at least 3, got m = {m}, n = {n}");
            }
            vec![
                ("g", g.to_string()),
                ("m", m.to_string()),
                ("n", n.to_string()),
                ("kappa_g", cycle_product_formula(g, m, n).to_string()),
                (
                    "hypothesis_holds",
                    cycle_product_hypothesis_holds(g, m, n).to_string(),
                ),
            ]
        }
    };
    print!("{}", render_fields(&fields, OutputFormat::Table));
    Ok(0)
}

fn print_fault_pair(pair: &FaultSetPair) {
    let show = |s: &VertexSet| {
        let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        ids.join(" ")
    };
    println!("f1 (size {}): {}", pair.r1.len(), show(&pair.r1));
    println!("f2 (size {}): {}", pair.r2.len(), show(&pair.r2));
}

fn pmc_cmd(
    spec: &str,
    g: usize,
    witness: bool,
    exhaustive_t: Option<usize>,
    sample_t: Option<usize>,
    samples: u64,
    seed: u64,
) -> Result<u8> {
    let canonical = spec.parse::<FamilySpec>()?.to_string();
    println!("spec {canonical}");
    println!("g    {g}");

    if witness {
        let generated = generate_full(spec)?;
        let Some(product) = generated.as_product() else {
            bail!("--witness needs a product spec, e.g. strong(cycle:5,cycle:5)");
        };
        let r1 = hypothesis_report(product.factor1());
        let r2 = hypothesis_report(product.factor2());
        let (Some(k1), Some(k2)) = (r1.k, r2.k) else {
            bail!("--witness needs regular factors");
        };
        let kappa = kappa_g_strong(g, k1, k2).context("no closed form at this g")?;
        let (cert, a) = build_minimum_gadget(product, g, k1, k2)?;
        let graph = product.graph();
        let pair = witness_pair(graph, &a, g)?;
        let preconditions = diagnosability_preconditions(graph, g, kappa, &a)?;
        println!("kappa_g {}", cert.s.len());
        print_fault_pair(&pair);
        println!("distinguishable {}", pair.distinguishable);
        println!("preconditions   {preconditions}");
        println!("diagnosability  {}", kappa + g);
        println!(
            "the pair shows the product is not {}-diagnosable",
            kappa + g + 1
        );
        return Ok(0);
    }

    let graph = generate(spec)?;
    let verdict = if let Some(t) = exhaustive_t {
        is_t_diagnosable_exhaustive(&graph, g, t, &ExhaustiveConfig::default())?
    } else {
        let t = sample_t.expect("clap group guarantees one mode");
        let config = SampleConfig {
            samples,
            seed,
            ..SampleConfig::default()
        };
        is_t_diagnosable_sampled(&graph, g, t, &config)?
    };
    match (&verdict.counterexample, exhaustive_t.is_some()) {
        (None, true) => println!("verdict: {}-diagnosable (exhaustive)", verdict.t),
        (None, false) => println!(
            "verdict: no counterexample to {}-diagnosability in {samples} samples (seed {seed})",
            verdict.t
        ),
        (Some(pair), _) => {
            println!(
                "verdict: NOT {}-diagnosable; indistinguishable pair:",
                verdict.t
            );
            print_fault_pair(pair);
            return Ok(1);
        }
    }
    Ok(0)
}

fn verify_cmd(
    suite: &str,
    manifest: Option<&std::path::Path>,
    format: OutputFormat,
    workers: usize,
    budget_nodes: Option<u64>,
    timeout: Option<u64>,
    seed: u64,
) -> Result<u8> {
    let text = match manifest {
        Some(path) => {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        None => builtin_suite(suite)
            .with_context(|| {
                format!(
                    "unknown suite {suite:?}; available: {}",
                    SUITE_NAMES.join(", ")
                )
            })?
            .to_string(),
    };
    let cases = parse_manifest(&text)?;
    let config = SuiteConfig {
        workers,
        node_budget: budget_nodes,
        timeout: timeout.map(Duration::from_secs),
        seed,
        parallel: true,
    };
    let report = run_cases(&cases, &config);
    match format {
        OutputFormat::Csv => print!("{}", report.to_csv()),
        OutputFormat::Table => print!("{}", report.to_table()),
    }
    let code = report.exit_code();
    Ok(u8::try_from(code).unwrap_or(1))
}
