use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use dihedral_core::bimod::theta_matrix;
use dihedral_core::calculus::relations::{coinvariant_checks, relation_suite, FAMILIES};
use dihedral_core::calculus::{
    check_bf2, parse, weighting_pf, weighting_table_ade, weighting_table_float, Evaluator,
};
use dihedral_core::classify::equivalence_classes;
use dihedral_core::hecke::verify_bs_relations;
use dihedral_core::scalars::{FloatRing, Ring, Scalar};
use dihedral_core::{
    BimoduleMorphism, BipartiteGraph, Check, Color, CoxeterOrder, CyclotomicField, ZigzagAlgebra,
};

#[derive(Parser)]
#[command(
    name = "dihedral",
    version,
    about = "Dihedral 2-representations from bipartite graphs"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Spectrum, ADE type and isomorphism checks for graph files.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Tabulated (exact) or Perron-Frobenius (float) weighting.
    Weighting {
        file: PathBuf,
        /// Coxeter number of the graph; selects the tabulated weighting.
        #[arg(long, conflicts_with = "pf", required_unless_present = "pf")]
        n: Option<u32>,
        /// Use the Perron-Frobenius eigenvector instead.
        #[arg(long)]
        pf: bool,
    },
    /// Check the relations of the diagrammatic calculus.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        mode: Mode,
        /// Comma-separated relation families, plus `coinvariants`.
        #[arg(long, value_delimiter = ',')]
        relations: Option<Vec<String>>,
    },
    /// Evaluate a Jones-Wenzl projector.
    Jw {
        file: PathBuf,
        #[command(flatten)]
        mode: Mode,
        /// Number of strands (defaults to n).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Grothendieck-group matrices of the Θ functors.
    Theta {
        file: PathBuf,
        /// Also check the Hecke relations for this Coxeter order.
        #[arg(long)]
        n: Option<CoxeterOrder>,
    },
    /// Evaluate a diagram expression and dump the morphism.
    Eval {
        file: PathBuf,
        #[command(flatten)]
        mode: Mode,
        /// Expression such as `enddot(s) . startdot(s)`.
        #[arg(long)]
        expr: String,
    },
    /// Classification of graded simple transitive 2-representations.
    Classify {
        /// Coxeter order n; the dihedral group has 2n elements.
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Characteristic polynomial, spectrum and ADE recognition.
    Analyze { file: PathBuf },
    /// Color-preserving isomorphism and spectral equivalence of two graphs.
    Iso { first: PathBuf, second: PathBuf },
}

#[derive(Args)]
struct Mode {
    /// Coxeter order: a positive integer or `inf`.
    #[arg(long)]
    n: CoxeterOrder,
    /// Floating-point evaluation (needed for non-ADE graphs and `inf`).
    #[arg(long)]
    float: bool,
    /// Zero tolerance in float mode.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Serialize)]
struct Report {
    command: String,
    status: Status,
    items: Vec<Check>,
    #[serde(skip_serializing_if = "Value::is_null")]
    data: Value,
}

enum AnyEvaluator {
    Exact(Evaluator<Arc<CyclotomicField>>),
    Float(Evaluator<FloatRing>),
}

macro_rules! with_ev {
    ($ev:expr, $e:ident => $body:expr) => {
        match $ev {
            AnyEvaluator::Exact($e) => $body,
            AnyEvaluator::Float($e) => $body,
        }
    };
}

fn read_graph(path: &Path) -> anyhow::Result<BipartiteGraph> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    BipartiteGraph::from_json(&bytes).with_context(|| format!("parsing {}", path.display()))
}

fn evaluator(g: BipartiteGraph, mode: &Mode) -> anyhow::Result<AnyEvaluator> {
    let alg = ZigzagAlgebra::build(g.clone());
    match (mode.n, mode.float) {
        (CoxeterOrder::Finite(n), false) => {
            let w = weighting_table_ade(&g, &CyclotomicField::new(n))?;
            Ok(AnyEvaluator::Exact(Evaluator::new(alg, &w, mode.n)?))
        }
        (CoxeterOrder::Finite(_), true) => {
            let w = weighting_table_float(&g)?;
            Ok(AnyEvaluator::Float(
                Evaluator::new(alg, &w, mode.n)?.with_tolerance(mode.tol),
            ))
        }
        (CoxeterOrder::Infinite, true) => {
            let w = weighting_pf(&g)?.weighting;
            Ok(AnyEvaluator::Float(
                Evaluator::new(alg, &w, mode.n)?.with_tolerance(mode.tol),
            ))
        }
        (CoxeterOrder::Infinite, false) => {
            bail!("exact evaluation needs a finite n; pass --float for n = inf")
        }
    }
}

fn dump<K: Scalar>(m: &BimoduleMorphism<K>) -> Value {
    let (src, tgt) = (m.source(), m.target());
    let images: Vec<Value> = src
        .generators()
        .iter()
        .zip(m.generator_images())
        .filter(|(_, img)| !img.is_empty())
        .map(|(&k, img)| {
            let terms: Vec<Value> = img
                .iter()
                .map(
                    |(j, c)| json!({"basis": tgt.label(*j as usize), "coefficient": c.to_string()}),
                )
                .collect();
            json!({"generator": src.label(k as usize), "image": terms})
        })
        .collect();
    json!({
        "source": dihedral_core::bimod::word_string(src.word()),
        "target": dihedral_core::bimod::word_string(tgt.word()),
        "degree": m.degree(),
        "nonzero": m.nnz(),
        "images": images,
    })
}

fn graph_summary(g: &BipartiteGraph) -> Value {
    let ade = g.recognize_ade();
    json!({
        "vertices": g.len(),
        "edges": g.num_edges(),
        "class_sizes": g.class_sizes(),
        "char_poly": g.char_poly().to_string(),
        "spectrum": g.spectrum_float(),
        "ade": ade.map(|t| t.to_string()),
        "coxeter": ade.map(|t| t.coxeter()),
    })
}

fn run(cli: &Cli) -> anyhow::Result<(Vec<Check>, Value)> {
    Ok(match &cli.cmd {
        Cmd::Graph(GraphCmd::Analyze { file }) => (Vec::new(), graph_summary(&read_graph(file)?)),
        Cmd::Graph(GraphCmd::Iso { first, second }) => {
            let (g, h) = (read_graph(first)?, read_graph(second)?);
            let iso = g.is_isomorphic_bipartite(&h);
            (
                Vec::new(),
                json!({
                    "isomorphic": iso.is_some(),
                    "bijection": iso.map(|m| m.into_iter().collect::<Vec<_>>()),
                    "spectrum_color_equivalent": g.spectrum_color_equivalent(&h),
                }),
            )
        }
        Cmd::Weighting { file, n, pf } => {
            let g = read_graph(file)?;
            if *pf {
                let p = weighting_pf(&g)?;
                let weights: Vec<(i64, String)> = p
                    .weighting
                    .weights
                    .iter()
                    .map(|(k, v)| (*k, v.to_string()))
                    .collect();
                let check = check_bf2(&g, &p.weighting, 1e-9);
                (
                    vec![check],
                    json!({"alpha": p.alpha, "q": [p.q.re, p.q.im], "weights": weights}),
                )
            } else {
                let n = n.expect("clap requires --n without --pf");
                let w = weighting_table_ade(&g, &CyclotomicField::new(n))?;
                let weights: Vec<(i64, String)> =
                    w.weights.iter().map(|(k, v)| (*k, v.to_string())).collect();
                (vec![check_bf2(&g, &w, 0.0)], json!({"weights": weights}))
            }
        }
        Cmd::Verify {
            file,
            mode,
            relations,
        } => {
            if let Some(fs) = relations {
                if let Some(bad) = fs
                    .iter()
                    .find(|f| !FAMILIES.contains(&f.as_str()) && *f != "coinvariants")
                {
                    bail!(
                        "unknown relation family {bad:?}; known: {}, coinvariants",
                        FAMILIES.join(", ")
                    );
                }
            }
            let g = read_graph(file)?;
            let ev = evaluator(g.clone(), mode)?;
            let coinv = relations
                .as_ref()
                .is_none_or(|fs| fs.iter().any(|f| f == "coinvariants"));
            let checks = with_ev!(&ev, e => {
                let mut checks = vec![check_bf2(&g, &weighting_of(e, &g), e.tol())];
                checks.extend(relation_suite(e, relations.as_deref()));
                if coinv {
                    checks.extend(coinvariant_checks(e)?);
                }
                checks
            });
            (checks, Value::Null)
        }
        Cmd::Jw { file, mode, k } => {
            let ev = evaluator(read_graph(file)?, mode)?;
            let n = match mode.n {
                CoxeterOrder::Finite(n) => n as usize,
                CoxeterOrder::Infinite => k.context("--k is required for n = inf")?,
            };
            let k = k.unwrap_or(n);
            let mut checks = Vec::new();
            let mut data = Vec::new();
            for c in [Color::S, Color::T] {
                let (zero, norm) = with_ev!(&ev, e => {
                    let m = e.jw(k, c)?;
                    (m.is_small(e.tol()), m.frobenius_norm())
                });
                let expect_zero = mode.n != CoxeterOrder::Infinite && k >= n;
                let name = format!(
                    "JW_{k} ({c}) {}",
                    if expect_zero {
                        "vanishes"
                    } else {
                        "is nonzero"
                    }
                );
                checks.push(if zero == expect_zero {
                    Check::pass(name)
                } else {
                    Check::fail(name, format!("norm {norm:.6e}"))
                });
                data.push(json!({"color": c.to_string(), "zero": zero, "norm": norm}));
            }
            (checks, Value::from(data))
        }
        Cmd::Theta { file, n } => {
            let g = read_graph(file)?;
            let (ms, mt) = (theta_matrix(&g, Color::S), theta_matrix(&g, Color::T));
            let show = |m: &Vec<Vec<dihedral_core::LaurentPoly>>| -> Vec<Vec<String>> {
                m.iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect())
                    .collect()
            };
            let checks = match n {
                Some(n) => verify_bs_relations(&ms, &mt, *n)?,
                None => Vec::new(),
            };
            (
                checks,
                json!({"vertices": g.ids(), "theta_s": show(&ms), "theta_t": show(&mt)}),
            )
        }
        Cmd::Eval { file, mode, expr } => {
            let e = parse(expr, mode.n)?;
            let ev = evaluator(read_graph(file)?, mode)?;
            let data = with_ev!(&ev, v => dump(&v.eval(&e)?));
            (Vec::new(), data)
        }
        Cmd::Classify { n } => {
            if *n < 2 {
                bail!("n must be at least 2");
            }
            (Vec::new(), serde_json::to_value(equivalence_classes(*n))?)
        }
    })
}

fn weighting_of<R: Ring>(e: &Evaluator<R>, g: &BipartiteGraph) -> dihedral_core::Weighting<R> {
    let weights = (0..g.len())
        .map(|i| (g.id(i), e.lambda(i).clone()))
        .collect();
    dihedral_core::Weighting::new(e.ring().clone(), weights)
}

fn render_text(r: &Report) -> String {
    let mut out = format!("{}\n", r.command);
    if !r.data.is_null() {
        out += &serde_json::to_string_pretty(&r.data).expect("json value");
        out.push('\n');
    }
    for c in &r.items {
        out += &match (&c.passed, &c.detail) {
            (true, _) => format!("  pass  {}\n", c.name),
            (false, Some(d)) => format!("  FAIL  {}: {d}\n", c.name),
            (false, None) => format!("  FAIL  {}\n", c.name),
        };
    }
    let status = match r.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Error => "error",
    };
    let failed = r.items.iter().filter(|c| !c.passed).count();
    out += &format!(
        "status: {status} ({} checks, {failed} failed)\n",
        r.items.len()
    );
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let (report, code) = match run(&cli) {
        Ok((items, data)) => {
            let ok = items.iter().all(|c| c.passed);
            let status = if ok { Status::Pass } else { Status::Fail };
            (
                Report {
                    command,
                    status,
                    items,
                    data,
                },
                if ok { 0 } else { 1 },
            )
        }
        Err(e) => {
            let data = json!({"error": format!("{e:#}")});
            (
                Report {
                    command,
                    status: Status::Error,
                    items: Vec::new(),
                    data,
                },
                2,
            )
        }
    };
    let text = if cli.json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        render_text(&report)
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().write_all(text.as_bytes());
    ExitCode::from(code)
}
