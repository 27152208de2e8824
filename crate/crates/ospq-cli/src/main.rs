//! Command-line front end: builds root systems and Cartan-Weyl tables and
//! runs the verification suites, emitting deterministic text or JSON
//! reports. Exit code 0 means every requested check passed, 1 means a
//! verification failed (the residual is part of the report), 2 means the
//! configuration or usage was invalid.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigRational, Signed};
use ospq::cartanweyl::schur::{schur_forward, schur_inverse, FormalPoly};
use ospq::cartanweyl::{build_root_vectors, verify_prop1, verify_prop2, verify_remark, VerifyReport};
use ospq::classical::{check_classical, check_limit_coherence, ClassicalCheck, ClassicalCtx};
use ospq::hopf::{check_hopf_axioms, coproduct_ideal_failures, generators};
use ospq::rewrite::{defining_relations, RewriteSystem};
use ospq::roots::{enumerate_positive, normal_order, validate_normal_order, Direction, RootLabel};
use ospq::Ctx;
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

/// Hard cap on the number of rules completion may create.
const RULE_CEILING: usize = 512;

#[derive(Parser)]
#[command(
    name = "ospq",
    version,
    about = "Exact Cartan-Weyl construction and identity verification \
             for the quantum affine superalgebra U_q(osp(1|2)^(1))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit the report as JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write the report to FILE (UTF-8) instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Squared norm (a,a) of the odd simple root, as an exact rational like 1 or 3/2
    #[arg(long = "alpha-sq", value_name = "RAT", default_value = "1", value_parser = parse_positive_rational)]
    alpha_sq: BigRational,
}

fn parse_positive_rational(s: &str) -> Result<BigRational, String> {
    let r = BigRational::from_str(s).map_err(|e| format!("not a rational number: {e}"))?;
    if !r.is_positive() {
        return Err("must be positive".to_string());
    }
    Ok(r)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderingArg {
    Clockwise,
    Anticlockwise,
}

impl From<OrderingArg> for Direction {
    fn from(o: OrderingArg) -> Direction {
        match o {
            OrderingArg::Clockwise => Direction::Clockwise,
            OrderingArg::Anticlockwise => Direction::Anticlockwise,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots up to a degree cutoff
    Roots {
        #[command(flatten)]
        common: Common,
        /// Largest delta-degree to include
        #[arg(long, default_value_t = 3)]
        cutoff: i64,
        /// Omit the double roots 2a and 2kd+-2a
        #[arg(long)]
        reduced: bool,
    },
    /// Print a normal ordering of the reduced positive system and validate it
    Order {
        #[command(flatten)]
        common: Common,
        /// Largest delta-degree to include
        #[arg(long, default_value_t = 3)]
        cutoff: i64,
        /// Which of the two normal orderings to print
        #[arg(long, value_enum, default_value_t = OrderingArg::Clockwise)]
        ordering: OrderingArg,
    },
    /// Cartan-Weyl root-vector table
    Cw {
        #[command(subcommand)]
        command: CwCommand,
    },
    /// Verification suites
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Expand imaginary root vectors through the partition transform
    Schur {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Degree of the expanded vector
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Verify the classical loop realization of the affine superalgebra
    Classical {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Check the bracket families up to this level
        #[arg(long, default_value_t = 3)]
        n: i64,
    },
    /// Verify that the q -> 1 limits of the recursions match the loop brackets
    Limit {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Replay the recursions up to this level
        #[arg(long, default_value_t = 2)]
        n: i64,
    },
}

#[derive(Subcommand)]
enum CwCommand {
    /// Build the table of root vectors and print every entry
    Build {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Build root vectors up to this delta-degree
        #[arg(long, default_value_t = 2)]
        cutoff: i64,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Pairings of the real-root families at level n
    Prop1 {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Level of the pairing relations
        #[arg(long, default_value_t = 1)]
        n: i64,
        /// Rewriting completion bound
        #[arg(long, default_value_t = 10)]
        bound: usize,
        /// Table cutoff; families beyond it are skipped [default: 2n+1, covering all four]
        #[arg(long)]
        cutoff: Option<i64>,
    },
    /// Imaginary-root pairings [e_{nd}, e_{-md}]
    Prop2 {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Degree of the raising vector
        #[arg(long, default_value_t = 1)]
        n: i64,
        /// Degree of the lowering vector [default: n]
        #[arg(long)]
        m: Option<i64>,
        /// Rewriting completion bound
        #[arg(long, default_value_t = 10)]
        bound: usize,
        /// Table cutoff [default: max(n, m)]
        #[arg(long)]
        cutoff: Option<i64>,
    },
    /// Orthogonality failure of the primed imaginary family (needs n != m)
    Remark {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Degree of the primed raising vector
        #[arg(long, default_value_t = 2)]
        n: i64,
        /// Degree of the unprimed lowering vector
        #[arg(long, default_value_t = 1)]
        m: i64,
        /// Rewriting completion bound
        #[arg(long, default_value_t = 10)]
        bound: usize,
        /// Table cutoff [default: max(n, m)]
        #[arg(long)]
        cutoff: Option<i64>,
    },
    /// Hopf axioms on the generators and coproduct stability of the relations
    Hopf {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Rewriting completion bound
        #[arg(long, default_value_t = 10)]
        bound: usize,
    },
    /// The defining relations (swap and Serre) reduce to zero
    Serre {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Rewriting completion bound
        #[arg(long, default_value_t = 10)]
        bound: usize,
    },
}

// ---------------------------------------------------------------- reports

#[derive(Serialize)]
struct RootsReport {
    schema: &'static str,
    cutoff: i64,
    reduced: bool,
    roots: Vec<String>,
}

#[derive(Serialize)]
struct OrderReport {
    schema: &'static str,
    cutoff: i64,
    ordering: &'static str,
    roots: Vec<String>,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<String>,
}

#[derive(Serialize)]
struct TableRow {
    root: String,
    element: String,
}

#[derive(Serialize)]
struct PrimedRow {
    n: i64,
    element: String,
}

#[derive(Serialize)]
struct TableReport {
    schema: &'static str,
    alpha_sq: String,
    cutoff: i64,
    vectors: Vec<TableRow>,
    primed: Vec<PrimedRow>,
}

#[derive(Serialize)]
struct VerifySuiteReport {
    schema: &'static str,
    command: &'static str,
    alpha_sq: String,
    bound: usize,
    cutoff: i64,
    reports: Vec<VerifyReport>,
    pass: bool,
}

#[derive(Serialize)]
struct AxiomFailure {
    generator: String,
    axiom: String,
}

#[derive(Serialize)]
struct HopfReport {
    schema: &'static str,
    command: &'static str,
    alpha_sq: String,
    bound: usize,
    generators: usize,
    axiom_failures: Vec<AxiomFailure>,
    coproduct_failures: Vec<String>,
    pass: bool,
}

#[derive(Serialize)]
struct RelationRow {
    name: String,
    pass: bool,
}

#[derive(Serialize)]
struct RelationsReport {
    schema: &'static str,
    command: &'static str,
    alpha_sq: String,
    bound: usize,
    relations: Vec<RelationRow>,
    pass: bool,
}

#[derive(Serialize)]
struct SchurReport {
    schema: &'static str,
    alpha_sq: String,
    n: usize,
    forward: String,
    inverse: String,
}

#[derive(Serialize)]
struct ClassicalCliReport {
    schema: &'static str,
    alpha_sq: String,
    n_max: i64,
    checks: Vec<ClassicalCheck>,
    pass: bool,
}

// ------------------------------------------------------------------ main

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Ok(pass) runs the exit-code contract; Err is a config/usage failure.
fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Roots { common, cutoff, reduced } => cmd_roots(&common, cutoff, reduced),
        Command::Order { common, cutoff, ordering } => cmd_order(&common, cutoff, ordering),
        Command::Cw { command: CwCommand::Build { common, algebra, cutoff } } => {
            cmd_cw_build(&common, &algebra, cutoff)
        }
        Command::Verify { command } => match command {
            VerifyCommand::Prop1 { common, algebra, n, bound, cutoff } => {
                cmd_prop1(&common, &algebra, n, bound, cutoff)
            }
            VerifyCommand::Prop2 { common, algebra, n, m, bound, cutoff } => {
                cmd_prop2(&common, &algebra, n, m, bound, cutoff)
            }
            VerifyCommand::Remark { common, algebra, n, m, bound, cutoff } => {
                cmd_remark(&common, &algebra, n, m, bound, cutoff)
            }
            VerifyCommand::Hopf { common, algebra, bound } => cmd_hopf(&common, &algebra, bound),
            VerifyCommand::Serre { common, algebra, bound } => cmd_serre(&common, &algebra, bound),
        },
        Command::Schur { common, algebra, n } => cmd_schur(&common, &algebra, n),
        Command::Classical { common, algebra, n } => cmd_classical(&common, &algebra, n),
        Command::Limit { common, algebra, n } => cmd_limit(&common, &algebra, n),
    }
}

fn emit(common: &Common, text: String, report: &impl Serialize) -> Result<(), String> {
    let payload = if common.json {
        let mut s = serde_json::to_string_pretty(report)
            .map_err(|e| format!("cannot serialize report: {e}"))?;
        s.push('\n');
        s
    } else {
        text
    };
    match &common.out {
        None => {
            print!("{payload}");
            Ok(())
        }
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

fn make_ctx(algebra: &AlgebraArgs) -> Result<Ctx, String> {
    Ctx::new(algebra.alpha_sq.clone()).map_err(|e| e.to_string())
}

fn make_sys(ctx: &Ctx, bound: usize) -> Result<RewriteSystem, String> {
    if bound < 2 {
        return Err("--bound must be at least 2".to_string());
    }
    RewriteSystem::complete(ctx, bound, RULE_CEILING).map_err(|e| e.to_string())
}

fn check_level(name: &str, n: i64) -> Result<(), String> {
    if n < 1 {
        return Err(format!("--{name} must be at least 1"));
    }
    Ok(())
}

// -------------------------------------------------------------- commands

fn cmd_roots(common: &Common, cutoff: i64, reduced: bool) -> Result<bool, String> {
    if cutoff < 0 {
        return Err("--cutoff must be nonnegative".to_string());
    }
    let roots: Vec<String> = enumerate_positive(cutoff, reduced).iter().map(|r| r.to_string()).collect();
    let text = roots.iter().map(|r| format!("{r}\n")).collect();
    let report = RootsReport { schema: "ospq.roots/1", cutoff, reduced, roots };
    emit(common, text, &report)?;
    Ok(true)
}

fn cmd_order(common: &Common, cutoff: i64, ordering: OrderingArg) -> Result<bool, String> {
    check_level("cutoff", cutoff)?;
    let dir: Direction = ordering.into();
    let seq = normal_order(cutoff, dir);
    let violation = validate_normal_order(&seq)
        .map_err(|e| e.to_string())?
        .map(|v| v.to_string());
    let roots: Vec<String> = seq.iter().map(|r| r.to_string()).collect();
    let mut text: String = roots.iter().map(|r| format!("{r}\n")).collect();
    match &violation {
        None => text.push_str("betweenness: valid\n"),
        Some(v) => text.push_str(&format!("betweenness: VIOLATED — {v}\n")),
    }
    let valid = violation.is_none();
    let report = OrderReport {
        schema: "ospq.order/1",
        cutoff,
        ordering: dir.as_str(),
        roots,
        valid,
        violation,
    };
    emit(common, text, &report)?;
    Ok(valid)
}

fn cmd_cw_build(common: &Common, algebra: &AlgebraArgs, cutoff: i64) -> Result<bool, String> {
    check_level("cutoff", cutoff)?;
    let ctx = make_ctx(algebra)?;
    let table = build_root_vectors(&ctx, cutoff);
    let vectors: Vec<TableRow> = table
        .labels()
        .map(|l| TableRow {
            root: l.to_string(),
            element: table.vector(l).expect("listed label").render(&ctx),
        })
        .collect();
    let primed: Vec<PrimedRow> = (1..=cutoff)
        .filter_map(|n| table.primed(n).map(|e| PrimedRow { n, element: e.render(&ctx) }))
        .collect();
    let mut text = format!("(a,a) = {}, cutoff = {cutoff}\n", algebra.alpha_sq);
    for row in &vectors {
        text.push_str(&format!("e({}) = {}\n", row.root, row.element));
    }
    for row in &primed {
        let label = RootLabel::new(row.n, 0).expect("imaginary root");
        text.push_str(&format!("e'({}) = {}\n", label, row.element));
    }
    let report = TableReport {
        schema: "ospq.table/1",
        alpha_sq: algebra.alpha_sq.to_string(),
        cutoff,
        vectors,
        primed,
    };
    emit(common, text, &report)?;
    Ok(true)
}

fn verify_text(header: String, rows: &[VerifyReport], pass: bool) -> String {
    let mut text = header;
    for r in rows {
        let verdict = if r.pass { "pass" } else { "FAIL" };
        let scope = match r.m {
            Some(m) => format!("[n={}, m={m}]", r.n),
            None => format!("[n={}]", r.n),
        };
        text.push_str(&format!("{} {scope}: {verdict}, residual {}", r.relation, r.residual));
        if let Some(reading) = &r.matched_reading {
            text.push_str(&format!(" (matched reading: {reading})"));
        }
        text.push('\n');
    }
    text.push_str(&format!("overall: {}\n", if pass { "pass" } else { "FAIL" }));
    text
}

fn suite_report(
    common: &Common,
    algebra: &AlgebraArgs,
    command: &'static str,
    bound: usize,
    cutoff: i64,
    reports: Vec<VerifyReport>,
) -> Result<bool, String> {
    let pass = reports.iter().all(|r| r.pass);
    let header = format!("(a,a) = {}, bound = {bound}, table cutoff = {cutoff}\n", algebra.alpha_sq);
    let text = verify_text(header, &reports, pass);
    let report = VerifySuiteReport {
        schema: "ospq.verify/1",
        command,
        alpha_sq: algebra.alpha_sq.to_string(),
        bound,
        cutoff,
        reports,
        pass,
    };
    emit(common, text, &report)?;
    Ok(pass)
}

fn cmd_prop1(
    common: &Common,
    algebra: &AlgebraArgs,
    n: i64,
    bound: usize,
    cutoff: Option<i64>,
) -> Result<bool, String> {
    check_level("n", n)?;
    let cutoff = cutoff.unwrap_or(2 * n + 1);
    check_level("cutoff", cutoff)?;
    let ctx = make_ctx(algebra)?;
    let sys = make_sys(&ctx, bound)?;
    let table = build_root_vectors(&ctx, cutoff);
    let reports = verify_prop1(&ctx, &table, &sys, n)
        .map_err(|e| format!("{e}; raise --bound for a certified verdict"))?;
    suite_report(common, algebra, "prop1", bound, cutoff, reports)
}

fn cmd_prop2(
    common: &Common,
    algebra: &AlgebraArgs,
    n: i64,
    m: Option<i64>,
    bound: usize,
    cutoff: Option<i64>,
) -> Result<bool, String> {
    check_level("n", n)?;
    let m = m.unwrap_or(n);
    check_level("m", m)?;
    let cutoff = cutoff.unwrap_or(n.max(m));
    check_level("cutoff", cutoff)?;
    let ctx = make_ctx(algebra)?;
    let sys = make_sys(&ctx, bound)?;
    let table = build_root_vectors(&ctx, cutoff);
    let report = verify_prop2(&ctx, &table, &sys, n, m)
        .map_err(|e| format!("{e}; raise --bound for a certified verdict"))?;
    suite_report(common, algebra, "prop2", bound, cutoff, vec![report])
}

fn cmd_remark(
    common: &Common,
    algebra: &AlgebraArgs,
    n: i64,
    m: i64,
    bound: usize,
    cutoff: Option<i64>,
) -> Result<bool, String> {
    check_level("n", n)?;
    check_level("m", m)?;
    if n == m {
        return Err("the orthogonality failure concerns distinct degrees; pass --n and --m with n != m".to_string());
    }
    let cutoff = cutoff.unwrap_or(n.max(m));
    check_level("cutoff", cutoff)?;
    let ctx = make_ctx(algebra)?;
    let sys = make_sys(&ctx, bound)?;
    let table = build_root_vectors(&ctx, cutoff);
    let report = verify_remark(&ctx, &table, &sys, n, m)
        .map_err(|e| format!("{e}; raise --bound for a certified verdict"))?;
    suite_report(common, algebra, "remark", bound, cutoff, vec![report])
}

fn cmd_hopf(common: &Common, algebra: &AlgebraArgs, bound: usize) -> Result<bool, String> {
    let ctx = make_ctx(algebra)?;
    let sys = make_sys(&ctx, bound)?;
    let gens = generators().len();
    let axiom_failures: Vec<AxiomFailure> = check_hopf_axioms(&ctx)
        .into_iter()
        .map(|f| AxiomFailure { generator: f.generator, axiom: f.axiom.to_string() })
        .collect();
    let coproduct_failures: Vec<String> =
        coproduct_ideal_failures(&ctx, &sys).into_iter().map(str::to_string).collect();
    let pass = axiom_failures.is_empty() && coproduct_failures.is_empty();

    let mut text = format!("(a,a) = {}, bound = {bound}\n", algebra.alpha_sq);
    if axiom_failures.is_empty() {
        text.push_str(&format!("hopf axioms: pass on all {gens} generators\n"));
    } else {
        for f in &axiom_failures {
            text.push_str(&format!("hopf axiom FAIL: {} on {}\n", f.axiom, f.generator));
        }
    }
    if coproduct_failures.is_empty() {
        text.push_str("coproduct stability: all defining relations reduce to 0\n");
    } else {
        for name in &coproduct_failures {
            text.push_str(&format!("coproduct stability FAIL: {name}\n"));
        }
    }
    text.push_str(&format!("overall: {}\n", if pass { "pass" } else { "FAIL" }));

    let report = HopfReport {
        schema: "ospq.verify/1",
        command: "hopf",
        alpha_sq: algebra.alpha_sq.to_string(),
        bound,
        generators: gens,
        axiom_failures,
        coproduct_failures,
        pass,
    };
    emit(common, text, &report)?;
    Ok(pass)
}

fn cmd_serre(common: &Common, algebra: &AlgebraArgs, bound: usize) -> Result<bool, String> {
    let ctx = make_ctx(algebra)?;
    let sys = make_sys(&ctx, bound)?;
    let relations: Vec<RelationRow> = defining_relations(&ctx)
        .into_iter()
        .map(|(name, rel)| RelationRow { name: name.to_string(), pass: sys.reduces_to_zero(&ctx, &rel) })
        .collect();
    let pass = relations.iter().all(|r| r.pass);
    let mut text = format!("(a,a) = {}, bound = {bound}\n", algebra.alpha_sq);
    for r in &relations {
        text.push_str(&format!("{}: {}\n", r.name, if r.pass { "pass" } else { "FAIL" }));
    }
    text.push_str(&format!("overall: {}\n", if pass { "pass" } else { "FAIL" }));
    let report = RelationsReport {
        schema: "ospq.verify/1",
        command: "serre",
        alpha_sq: algebra.alpha_sq.to_string(),
        bound,
        relations,
        pass,
    };
    emit(common, text, &report)?;
    Ok(pass)
}

fn cmd_schur(common: &Common, algebra: &AlgebraArgs, n: usize) -> Result<bool, String> {
    if n < 1 {
        return Err("--n must be at least 1".to_string());
    }
    let ctx = make_ctx(algebra)?;
    let label = |k: usize| RootLabel::new(k as i64, 0).expect("imaginary root").to_string();
    let base: Vec<FormalPoly> = (0..n).map(FormalPoly::indeterminate).collect();
    let unprimed_names: Vec<String> = (1..=n).map(|k| format!("e({})", label(k))).collect();
    let primed_names: Vec<String> = (1..=n).map(|k| format!("e'({})", label(k))).collect();
    let forward = schur_forward(&ctx, n, &base).render(&ctx, &unprimed_names);
    let inverse = schur_inverse(&ctx, n, &base).render(&ctx, &primed_names);
    let text = format!(
        "e'({lbl}) = {forward}\ne({lbl}) = {inverse}\n",
        lbl = label(n)
    );
    let report = SchurReport {
        schema: "ospq.schur/1",
        alpha_sq: algebra.alpha_sq.to_string(),
        n,
        forward,
        inverse,
    };
    emit(common, text, &report)?;
    Ok(true)
}

fn classical_text(header: String, checks: &[ClassicalCheck], pass: bool) -> String {
    let mut text = header;
    for c in checks {
        if c.pass {
            text.push_str(&format!("{}: pass\n", c.name));
        } else {
            text.push_str(&format!("{}: FAIL, residual {}\n", c.name, c.residual));
        }
    }
    text.push_str(&format!("overall: {}\n", if pass { "pass" } else { "FAIL" }));
    text
}

fn cmd_classical(common: &Common, algebra: &AlgebraArgs, n: i64) -> Result<bool, String> {
    check_level("n", n)?;
    let cl = ClassicalCtx::new(algebra.alpha_sq.clone()).map_err(|e| e.to_string())?;
    let rep = check_classical(&cl, n);
    let header = format!("(a,a) = {}, level cutoff = {n}\n", algebra.alpha_sq);
    let text = classical_text(header, &rep.checks, rep.pass);
    let report = ClassicalCliReport {
        schema: "ospq.classical/1",
        alpha_sq: algebra.alpha_sq.to_string(),
        n_max: n,
        checks: rep.checks,
        pass: rep.pass,
    };
    emit(common, text, &report)?;
    Ok(report.pass)
}

fn cmd_limit(common: &Common, algebra: &AlgebraArgs, n: i64) -> Result<bool, String> {
    check_level("n", n)?;
    let ctx = make_ctx(algebra)?;
    let cl = ClassicalCtx::new(algebra.alpha_sq.clone()).map_err(|e| e.to_string())?;
    let rep = check_limit_coherence(&ctx, &cl, n);
    let header = format!("(a,a) = {}, level cutoff = {n}\n", algebra.alpha_sq);
    let text = classical_text(header, &rep.checks, rep.pass);
    let report = ClassicalCliReport {
        schema: "ospq.limit/1",
        alpha_sq: algebra.alpha_sq.to_string(),
        n_max: n,
        checks: rep.checks,
        pass: rep.pass,
    };
    emit(common, text, &report)?;
    Ok(report.pass)
}
