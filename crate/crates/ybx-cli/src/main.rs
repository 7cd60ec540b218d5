//! `ybx`: validate, analyze, and cross-check finite involutive
//! nondegenerate set-theoretic Yang-Baxter solutions and their
//! RC-quasigroups.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 I/O error,
//! 4 unsupported class.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ybx_core::error::Error;
use ybx_core::io::{parse_instance, Instance};
use ybx_core::monoid::{delta_coord, divisor_lattice};
use ybx_core::quotient::{
    frozen_relation_groups, germ_cayley, presentation_g, presentation_w,
};
use ybx_core::rcq::{class_of, frozen_word, validate_rc, Check, RcTable};
use ybx_core::solution::{
    builtin_spec, enumerate_rc_capped, rc_to_solution, solution_to_rc, validate_solution,
    SolutionTable, ENUM_CAP_DEFAULT,
};
use ybx_core::verify::{run_suite, VerifyOptions};
use ybx_core::word::letter;

const EXIT_VERIFICATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_UNSUPPORTED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "ybx",
    version,
    about = "Structure monoids and Coxeter-like quotients of set-theoretic Yang-Baxter solutions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check all defining laws of an instance and print flags with
    /// witnesses
    Validate {
        #[command(flatten)]
        input: InputArgs,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print class, Garside element, quotient order, presentations, and
    /// frozen words
    Report {
        #[command(flatten)]
        input: InputArgs,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Write the divisor lattice (or germ Cayley graph) as DOT
    Graph {
        #[command(flatten)]
        input: InputArgs,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the germ Cayley graph instead of the divisor lattice
        #[arg(long)]
        cayley: bool,
        /// Build both graphs and fail unless they are equal as labeled
        /// digraphs
        #[arg(long)]
        check_iso: bool,
    },
    /// Run every per-instance consistency suite and print one line per
    /// group
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Word-length cap for the oracle suites
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// List all valid RC-tables of size n (capped by YBX_MAX_ENUM_N,
    /// default 3)
    Enumerate {
        n: usize,
        /// Emit one JSON array instead of JSON lines
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Builtin instance as name:n (trivial, cycle, involution)
    #[arg(long)]
    builtin: Option<String>,
    /// Path to a JSON instance file
    #[arg(long)]
    input: Option<PathBuf>,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl fmt::Display) -> Self {
        CliError {
            code,
            message: message.to_string(),
        }
    }

    fn verification(message: impl fmt::Display) -> Self {
        Self::new(EXIT_VERIFICATION, message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::MalformedTable(_)
            | Error::Parse(_)
            | Error::UnknownBuiltin(_)
            | Error::EnumerationTooLarge { .. }
            | Error::TooLarge(_) => EXIT_PARSE,
            Error::UnsupportedClass { .. } => EXIT_UNSUPPORTED,
            _ => EXIT_VERIFICATION,
        };
        CliError::new(code, e)
    }
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away (e.g. | head)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Validate { input, json } => cmd_validate(&input.load()?, json),
        Cmd::Report { input, json } => cmd_report(&input.load()?, json),
        Cmd::Graph {
            input,
            out,
            cayley,
            check_iso,
        } => cmd_graph(&input.load()?, out.as_deref(), cayley, check_iso),
        Cmd::Verify { input, max_len } => cmd_verify(&input.load()?, max_len),
        Cmd::Enumerate { n, json } => cmd_enumerate(n, json),
    }
}

/// A loaded instance: the parsed table plus where it came from.
struct Loaded {
    name: String,
    instance: Instance,
    from_builtin: bool,
}

impl InputArgs {
    fn load(&self) -> Result<Loaded, CliError> {
        if let Some(spec) = &self.builtin {
            let table = builtin_spec(spec)?;
            return Ok(Loaded {
                name: spec.clone(),
                instance: Instance::Rc(table),
                from_builtin: true,
            });
        }
        let path = self.input.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new(EXIT_IO, format!("{}: {e}", path.display())))?;
        Ok(Loaded {
            name: path.display().to_string(),
            instance: parse_instance(&text)?,
            from_builtin: false,
        })
    }
}

impl Loaded {
    fn n(&self) -> usize {
        match &self.instance {
            Instance::Rc(t) => t.n(),
            Instance::Solution(s) => s.n(),
        }
    }

    fn kind(&self) -> &'static str {
        match &self.instance {
            Instance::Rc(_) => "rc",
            Instance::Solution(_) => "solution",
        }
    }

    /// The RC-table of a fully valid instance; fails with the first
    /// witness otherwise.
    fn valid_rc(&self) -> Result<RcTable, CliError> {
        match &self.instance {
            Instance::Rc(t) => {
                let report = validate_rc(t);
                if !report.all_ok() {
                    return Err(CliError::verification(format!(
                        "invalid rc table: {}",
                        report.first_witness().unwrap_or("validation failed")
                    )));
                }
                let s = rc_to_solution(t).map_err(CliError::from)?;
                let sol = validate_solution(&s);
                if !sol.all_ok() {
                    return Err(CliError::verification(format!(
                        "derived solution is invalid: {}",
                        sol.first_witness().unwrap_or("validation failed")
                    )));
                }
                Ok(t.clone())
            }
            Instance::Solution(s) => {
                let report = validate_solution(s);
                if !report.all_ok() {
                    return Err(CliError::verification(format!(
                        "invalid solution: {}",
                        report.first_witness().unwrap_or("validation failed")
                    )));
                }
                solution_to_rc(s).map_err(CliError::from)
            }
        }
    }
}

fn flag_line(name: &str, check: &Check) -> String {
    if check.ok {
        format!("{name}: ok")
    } else {
        let mut line = format!("{name}: FAIL");
        for w in &check.witnesses {
            line.push_str(&format!("\n  - {w}"));
        }
        line
    }
}

fn check_json(check: &Check) -> serde_json::Value {
    serde_json::json!({ "ok": check.ok, "witnesses": check.witnesses })
}

fn cmd_validate(loaded: &Loaded, json: bool) -> Result<(), CliError> {
    // derive the other representation when the given one is sound enough
    let (rc_table, solution): (Option<RcTable>, Option<SolutionTable>) = match &loaded.instance {
        Instance::Rc(t) => {
            let rc_ok = validate_rc(t).all_ok();
            (
                Some(t.clone()),
                if rc_ok { rc_to_solution(t).ok() } else { None },
            )
        }
        Instance::Solution(s) => {
            let sol_ok = validate_solution(s).all_ok();
            (
                if sol_ok { solution_to_rc(s).ok() } else { None },
                Some(s.clone()),
            )
        }
    };

    let rc_report = rc_table.as_ref().map(validate_rc);
    let sol_report = solution.as_ref().map(validate_solution);
    let all_ok = rc_report.as_ref().is_some_and(|r| r.all_ok())
        && sol_report.as_ref().is_some_and(|r| r.all_ok());
    let class = if all_ok {
        rc_table.as_ref().and_then(|t| class_of(t).ok())
    } else {
        None
    };

    if json {
        let value = serde_json::json!({
            "instance": loaded.name,
            "n": loaded.n(),
            "kind": loaded.kind(),
            "valid": all_ok,
            "class": class,
            "rc": rc_report.as_ref().map(|r| serde_json::json!({
                "rc_law": check_json(&r.rc_law),
                "rows_bijective": check_json(&r.rows_bijective),
                "psi_bijective": check_json(&r.psi_bijective),
            })),
            "solution": sol_report.as_ref().map(|r| serde_json::json!({
                "bijective": check_json(&r.bijective),
                "involutive": check_json(&r.involutive),
                "nondegenerate": check_json(&r.nondegenerate),
                "ybe": check_json(&r.ybe),
            })),
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
    } else {
        println!(
            "instance: {} (n={}, kind={})",
            loaded.name,
            loaded.n(),
            loaded.kind()
        );
        match &sol_report {
            Some(r) => {
                println!("{}", flag_line("bijective", &r.bijective));
                println!("{}", flag_line("involutive", &r.involutive));
                println!("{}", flag_line("nondegenerate", &r.nondegenerate));
                println!("{}", flag_line("ybe", &r.ybe));
            }
            None => println!("solution flags: not derivable (rc table invalid)"),
        }
        match &rc_report {
            Some(r) => {
                println!("{}", flag_line("rc-law", &r.rc_law));
                println!("{}", flag_line("rows bijective", &r.rows_bijective));
                println!("{}", flag_line("psi bijective", &r.psi_bijective));
            }
            None => println!("rc flags: not derivable (solution invalid)"),
        }
        match class {
            Some(p) => println!("class: {p}"),
            None => println!("class: not computed"),
        }
    }

    if all_ok {
        Ok(())
    } else {
        Err(CliError::verification("validation failed"))
    }
}

fn render_frozen_note(t: &RcTable, p: usize) -> String {
    let n = t.n();
    frozen_relation_groups(t, p)
        .iter()
        .map(|g| {
            if g.cyclic_duplicates.is_empty() {
                format!("{}=1", g.primary.render(n))
            } else {
                let dups = g
                    .cyclic_duplicates
                    .iter()
                    .map(|w| format!("{}=1", w.render(n)))
                    .collect::<Vec<_>>()
                    .join(", ");
                format!("{}=1 ({dups} cyclically redundant)", g.primary.render(n))
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_report(loaded: &Loaded, json: bool) -> Result<(), CliError> {
    let t = loaded.valid_rc()?;
    let n = t.n();
    let p = class_of(&t).map_err(CliError::from)?;
    let order = (p as u128)
        .checked_pow(n as u32)
        .ok_or_else(|| CliError::new(EXIT_PARSE, "p^n overflows"))?;
    let pres_g = presentation_g(&t);
    let pres_w = presentation_w(&t, p);
    let frozen: Vec<String> = (0..n)
        .map(|x| format!("w_{} = {}", letter(x, n), frozen_word(&t, x, p).render(n)))
        .collect();
    let delta = delta_coord(&t, p).ok();

    if json {
        let value = serde_json::json!({
            "instance": loaded.name,
            "n": n,
            "class": p,
            "delta": delta.as_ref().map(|d| d.as_slice().to_vec()),
            "divisor_count": (p >= 2).then_some(order as u64),
            "w_order": order as u64,
            "presentation_g": pres_g.render(),
            "presentation_w": pres_w.render(),
            "frozen_words": (0..n)
                .map(|x| frozen_word(&t, x, p).render(n))
                .collect::<Vec<_>>(),
            "frozen_note": render_frozen_note(&t, p),
            "degenerate": p < 2,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
        return Ok(());
    }

    println!("instance: {} (n={})", loaded.name, n);
    println!("generators: {}", ybx_core::rcq::describe_generators(n));
    println!("class p: {p}");
    match &delta {
        Some(d) => {
            println!("delta: {}", d.render());
            println!("|Div(delta)| = p^n: {order}");
        }
        None => println!(
            "delta: degenerate (class 1: the monoid is free abelian, no Garside element)"
        ),
    }
    println!("|W| = p^n: {order}");
    println!("presentation G: {}", pres_g.render());
    println!("presentation W: {}", pres_w.render());
    println!("frozen words: {}", frozen.join(", "));
    println!("added: {}", render_frozen_note(&t, p));
    if p < 2 {
        println!("note: class 1 quotient is trivial; sequence reduces to 1 -> Z^n -> G -> 1");
    }
    Ok(())
}

fn cmd_graph(
    loaded: &Loaded,
    out: Option<&Path>,
    cayley: bool,
    check_iso: bool,
) -> Result<(), CliError> {
    let t = loaded.valid_rc()?;
    let p = class_of(&t).map_err(CliError::from)?;
    if p < 2 {
        return Err(CliError::from(Error::UnsupportedClass { p }));
    }

    if check_iso {
        let hasse = divisor_lattice(&t, p).map_err(CliError::from)?;
        let cay = germ_cayley(&t, p).map_err(CliError::from)?;
        if hasse != cay {
            return Err(CliError::verification(
                "germ Cayley graph differs from the divisor lattice",
            ));
        }
        eprintln!("cayley = hasse: ok ({} nodes)", hasse.node_count());
    }

    let (graph, name) = if cayley {
        (germ_cayley(&t, p).map_err(CliError::from)?, "cayley")
    } else {
        (divisor_lattice(&t, p).map_err(CliError::from)?, "divisors")
    };
    let dot = graph.to_dot(name);
    match out {
        Some(path) => std::fs::write(path, dot)
            .map_err(|e| CliError::new(EXIT_IO, format!("{}: {e}", path.display())))?,
        None => print!("{dot}"),
    }
    Ok(())
}

fn cmd_verify(loaded: &Loaded, max_len: Option<usize>) -> Result<(), CliError> {
    let mut opts = if loaded.from_builtin {
        VerifyOptions::for_builtin()
    } else {
        VerifyOptions::default()
    };
    if let Some(l) = max_len {
        opts.max_len = l;
    }
    let t = match &loaded.instance {
        Instance::Rc(t) => t.clone(),
        Instance::Solution(s) => {
            let report = validate_solution(s);
            if !report.all_ok() {
                return Err(CliError::verification(format!(
                    "invalid solution: {}",
                    report.first_witness().unwrap_or("validation failed")
                )));
            }
            solution_to_rc(s).map_err(CliError::from)?
        }
    };

    println!("instance: {} (n={})", loaded.name, t.n());
    let report = run_suite(&t, &opts);
    println!("{}", report.render());
    if let Some(p) = report.class {
        println!("class: {p}");
    }
    if report.all_passed() {
        println!("all groups passed");
        Ok(())
    } else {
        let first = report.first_failure().expect("failure exists");
        Err(CliError::verification(format!(
            "suite failed at {}: {}",
            first.tag,
            match &first.outcome {
                ybx_core::verify::GroupOutcome::Fail { witness } => witness.as_str(),
                _ => "unknown",
            }
        )))
    }
}

fn cmd_enumerate(n: usize, json: bool) -> Result<(), CliError> {
    let cap = match std::env::var("YBX_MAX_ENUM_N") {
        Ok(v) => v.parse::<usize>().map_err(|_| {
            CliError::new(EXIT_PARSE, format!("YBX_MAX_ENUM_N={v} is not a number"))
        })?,
        Err(_) => ENUM_CAP_DEFAULT,
    };
    let tables = enumerate_rc_capped(n, cap).map_err(CliError::from)?;
    let mut count = 0usize;
    let mut items = Vec::new();
    for t in tables {
        count += 1;
        let p = class_of(&t).map_err(CliError::from)?;
        let value = serde_json::json!({
            "n": n,
            "kind": "rc",
            "table": t.to_rows(),
            "class": p,
        });
        if json {
            items.push(value);
        } else {
            println!("{value}");
        }
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::Value::Array(items)).expect("valid json")
        );
    } else {
        println!("total: {count} valid tables of size {n}");
    }
    Ok(())
}
