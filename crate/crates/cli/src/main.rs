//! `curralg`: exact Lie algebra cohomology and current algebra reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

mod input;
mod report;
mod verify;

use clap::{Args, Parser, Subcommand};
use curralg::catalog::{self, CatalogItem};
use curralg::combinatorics::binomial;
use curralg::current::{
    cycle_report, h2_sequence, homology_count, lemma_report, CurrentAlgebra,
};
use curralg::io::{comm_to_json, lie_to_json};
use curralg::lie::{cochain_dim, ce_differential, cohomology_table, h2_trivial, homology_h2, KModule, ModuleKind};
use input::{resolve, resolve_all, Input};
use report::{table, Failure, Format, Report};
use serde_json::json;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

/// Largest dim Λ³(g) accepted without `--force`.
const MAX_LAMBDA3: usize = 50_000;

/// Environment variable overriding the worker thread count.
const THREADS_ENV: &str = "CURRALG_THREADS";

#[derive(Parser)]
#[command(name = "curralg", version, about = "Exact second (co)homology of current algebras A ⊗ k")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,

    /// Run even when dim Λ³(g) exceeds the size guard.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chevalley-Eilenberg cohomology dimensions of a Lie algebra.
    Cohomology {
        /// `catalog:NAME[:PARAM]`, a file path, or `-` for standard input.
        input: String,
        /// Coefficient module: trivial, adjoint, coadjoint or sym2.
        #[arg(long, default_value = "trivial")]
        module: String,
        /// A single degree.
        #[arg(long, conflicts_with = "all")]
        p: Option<usize>,
        /// Every degree 0..=dim (the default).
        #[arg(long)]
        all: bool,
    },
    /// Reports on the current algebra A ⊗ k.
    Current {
        /// The commutative algebra A.
        a: String,
        /// The Lie algebra k.
        k: String,
        #[command(flatten)]
        reports: CurrentReports,
    },
    /// Run a verification suite.
    Verify {
        /// lemma-1.1, theorem-2.4, theorem-3.1, theorem-4.2, prop-7.2, oscillator-table, pelc or all.
        target: String,
        /// Commutative and Lie inputs to verify on.
        inputs: Vec<String>,
        /// Use the built-in battery of algebras and pairs.
        #[arg(long)]
        battery: bool,
    },
    /// Browse or export the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Args)]
struct CurrentReports {
    /// dim H²(g) and dim H₂(g) by direct computation (the default).
    #[arg(long)]
    h2: bool,
    /// The four boundary families against the brute-force B₂(g).
    #[arg(long)]
    b2_check: bool,
    /// The closed-form count of dim H₂(g) against brute force.
    #[arg(long)]
    zusmanovich: bool,
    /// The three-term decomposition of H²(g) with exactness checks.
    #[arg(long)]
    sequence: bool,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Names, kinds and dimensions.
    List,
    /// Print an entry in the algebra file format.
    Export { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = configure_threads().and_then(|()| run(&cli));
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    match outcome {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(cli.format, elapsed).as_bytes());
            let _ = out.flush();
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(f) => {
            if cli.format == Format::Json {
                let v = json!({
                    "schema_version": report::SCHEMA_VERSION,
                    "command": std::env::args().skip(1).collect::<Vec<_>>(),
                    "error": f.message,
                    "exit_code": f.code,
                });
                println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::input(format!("{THREADS_ENV} must be a positive integer, got `{value}`")))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::input(format!("thread pool: {e}")))?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn guard(dim: usize, force: bool, what: &str) -> Result<(), Failure> {
    let l3 = binomial(dim, 3);
    if l3 > MAX_LAMBDA3 && !force {
        return Err(Failure::input(format!(
            "{what} has dim Λ³ = {l3} > {MAX_LAMBDA3}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let mut report = Report::new(std::env::args().skip(1).collect());
    match &cli.command {
        Command::Cohomology { input, module, p, all: _ } => {
            let input = resolve(input)?;
            cohomology(&mut report, &input, module, *p, cli.force)?;
        }
        Command::Current { a, k, reports } => {
            let inputs = resolve_all(&[a.clone(), k.clone()])?;
            current(&mut report, &inputs, reports, cli.force)?;
        }
        Command::Verify { target, inputs, battery } => {
            let inputs = resolve_all(inputs)?;
            run_verify(&mut report, target, &inputs, *battery, cli.force)?;
        }
        Command::Catalog { action } => catalog_cmd(&mut report, action)?,
    }
    Ok(report)
}

fn cohomology(report: &mut Report, input: &Input, module: &str, p: Option<usize>, force: bool) -> Result<(), Failure> {
    report.inputs.push(input.describe());
    let lie = input.lie()?;
    guard(lie.dim(), force, lie.name())?;
    let kind = ModuleKind::parse(module)?;
    let m = KModule::of_kind(lie, kind)?;
    let rows: Vec<[usize; 5]> = match p {
        Some(p) => {
            let rank = |q: usize| if q > lie.dim() { 0 } else { ce_differential(lie, &m, q).rank() };
            let c = if p > lie.dim() { 0 } else { cochain_dim(lie, &m, p) };
            let z = c - rank(p);
            let b = if p == 0 { 0 } else { rank(p - 1) };
            vec![[p, c, z, b, z - b]]
        }
        None => cohomology_table(lie, &m).iter().map(|d| [d.p, d.c, d.z, d.b, d.h]).collect(),
    };
    report.results = json!({
        "module": module,
        "module_dim": m.dim(),
        "degrees": rows.iter().map(|r| json!({"p": r[0], "C": r[1], "Z": r[2], "B": r[3], "H": r[4]})).collect::<Vec<_>>(),
    });
    report.lines.push(format!("H^p({}, {module}), module dim {}", lie.name(), m.dim()));
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(usize::to_string).collect()).collect();
    report.lines.extend(table(&["p", "C", "Z", "B", "H"], &cells));
    Ok(())
}

fn current(report: &mut Report, inputs: &[Input], r: &CurrentReports, force: bool) -> Result<(), Failure> {
    report.inputs.extend(inputs.iter().map(Input::describe));
    let (a, k) = (inputs[0].comm()?, inputs[1].lie()?);
    guard(a.dim() * k.dim(), force, "A ⊗ k")?;
    let cur = CurrentAlgebra::new(a, k)?;
    let default = !(r.h2 || r.b2_check || r.zusmanovich || r.sequence);
    let mut results = serde_json::Map::new();
    let mut ok = true;
    let mut judged = false;
    report.lines.push(format!("g = {} ⊗ {}, dim {}", a.name(), k.name(), cur.g.dim()));
    if r.h2 || default {
        let (co, ho) = (h2_trivial(&cur.g)?.dim(), homology_h2(&cur.g)?.dim());
        results.insert("h2".into(), json!({"cohomology": co, "homology": ho}));
        report.lines.push(format!("dim H²(g) = {co}, dim H₂(g) = {ho}"));
    }
    if r.b2_check {
        let c = cycle_report(&cur)?;
        let l = lemma_report(&cur, &c.b2)?;
        let pass = c.b2_matches() && c.z2_matches() && l.ok();
        ok &= pass;
        judged = true;
        results.insert(
            "b2_check".into(),
            json!({
                "b2": c.b2.dim(), "b2_generated": c.b2_generated.dim(),
                "z2": c.z2.dim(), "z2_assembled": c.z2_assembled.dim(),
                "projections_preserve": l.projections_preserve, "p2_image": l.p2_image,
                "p3_image": l.p3_image, "w1_pieces_in_b2": l.w1_pieces_in_b2, "pass": pass,
            }),
        );
        report.lines.push(format!(
            "B₂: brute force {} vs four families {}; Z₂: {} vs assembled {}; projection lemmas {}",
            c.b2.dim(),
            c.b2_generated.dim(),
            c.z2.dim(),
            c.z2_assembled.dim(),
            if l.ok() { "hold" } else { "FAIL" }
        ));
    }
    if r.zusmanovich {
        let h = homology_count(&cur)?;
        ok &= h.matches();
        judged = true;
        let correction = h.exact_dim * h.b3_gamma;
        results.insert(
            "zusmanovich".into(),
            json!({
                "predicted": h.predicted, "brute_force": h.brute_force,
                "exact_dim": h.exact_dim, "b3_gamma": h.b3_gamma,
                "coupled_correction": correction, "pass": h.matches(),
            }),
        );
        report.lines.push(format!("dim H₂(g): predicted {}, brute force {}", h.predicted, h.brute_force));
        if !h.matches() {
            report.lines.push(format!(
                "difference {} = dim d_A(A) {} × dim B³_Γ(k) {}",
                h.brute_force as i64 - h.predicted as i64,
                h.exact_dim,
                h.b3_gamma
            ));
        }
    }
    if r.sequence {
        let s = h2_sequence(&cur)?;
        ok &= s.exact();
        judged = true;
        results.insert(
            "sequence".into(),
            json!({
                "h2_quotient_13": s.h2_quotient_13, "lin_a_h2k": s.lin_a_h2k,
                "lin_pair": s.lin_pair, "h2_g": s.h2_g, "phi_injective": s.phi_injective,
                "ker_psi_is_im_phi": s.ker_psi_is_im_phi, "psi_rank": s.psi_rank, "exact": s.exact(),
            }),
        );
        report.lines.push(format!(
            "dim H²(g) = {} = {} + {} + {} (quotient part + Lin(A,H²(k)) + pairing part)",
            s.h2_g, s.h2_quotient_13, s.lin_a_h2k, s.lin_pair
        ));
        report.lines.push(format!(
            "Phi injective: {}, ker Psi = im Phi: {}, exactness {}",
            s.phi_injective,
            s.ker_psi_is_im_phi,
            if s.exact() { "ok" } else { "FAILS" }
        ));
    }
    report.results = serde_json::Value::Object(results);
    report.verdict = judged.then_some(ok);
    Ok(())
}

fn run_verify(report: &mut Report, target: &str, inputs: &[Input], battery: bool, force: bool) -> Result<(), Failure> {
    if target != "all" && !verify::TARGETS.contains(&target) {
        return Err(Failure::input(format!(
            "unknown target `{target}`; expected one of {} or all",
            verify::TARGETS.join(", ")
        )));
    }
    report.inputs.extend(inputs.iter().map(Input::describe));
    let mut subjects = if battery {
        verify::Subjects::battery()
    } else {
        verify::Subjects { comm: Vec::new(), lie: Vec::new(), pairs: Vec::new() }
    };
    for i in inputs {
        match &i.algebra {
            input::Algebra::Comm(a) => subjects.comm.push((i.reference.clone(), a.clone())),
            input::Algebra::Lie(l) => subjects.lie.push((i.reference.clone(), l.clone())),
        }
    }
    if !battery {
        if subjects.comm.is_empty() {
            subjects.comm.push(("catalog:dual_numbers".into(), catalog::dual_numbers()));
        }
        if subjects.lie.is_empty() {
            subjects.lie.push(("catalog:oscillator".into(), catalog::oscillator().algebra));
        }
        for (_, a) in &subjects.comm {
            for (_, k) in &subjects.lie {
                guard(a.dim() * k.dim(), force, "A ⊗ k")?;
            }
        }
    }
    let claims = verify::run(target, &subjects)?;
    let pass = claims.iter().all(|c| c.pass);
    report.results = json!({
        "target": target,
        "claims": claims.iter().map(verify::Claim::to_json).collect::<Vec<_>>(),
        "passed": claims.iter().filter(|c| c.pass).count(),
        "failed": claims.iter().filter(|c| !c.pass).count(),
    });
    for c in &claims {
        let mark = if c.pass { "pass" } else { "FAIL" };
        report.lines.push(format!("{mark}  {:<16} {}", c.target, c.subject));
        if !c.pass {
            report.lines.push(format!("      witness: {}", c.detail));
        }
    }
    report.lines.push(format!(
        "{} of {} claims hold",
        claims.iter().filter(|c| c.pass).count(),
        claims.len()
    ));
    report.verdict = Some(pass);
    Ok(())
}

fn catalog_cmd(report: &mut Report, action: &CatalogAction) -> Result<(), Failure> {
    match action {
        CatalogAction::List => {
            let mut rows = Vec::new();
            let mut entries = Vec::new();
            for name in catalog::LISTING {
                let (kind, dim) = match catalog::lookup(name)? {
                    CatalogItem::Lie(e) => ("lie", e.algebra.dim()),
                    CatalogItem::Comm(a) => ("commutative", a.dim()),
                };
                rows.push(vec![format!("catalog:{name}"), kind.to_string(), dim.to_string()]);
                entries.push(json!({"name": name, "kind": kind, "dim": dim}));
            }
            report.results = json!({ "entries": entries });
            report.lines.extend(table(&["name", "kind", "dim"], &rows));
        }
        CatalogAction::Export { name } => {
            let name = name.strip_prefix("catalog:").unwrap_or(name);
            report.raw = Some(match catalog::lookup(name)? {
                CatalogItem::Lie(e) => lie_to_json(&e.algebra),
                CatalogItem::Comm(a) => comm_to_json(&a),
            });
        }
    }
    Ok(())
}
