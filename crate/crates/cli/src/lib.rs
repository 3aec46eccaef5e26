//! Command-line front end: parses flags and ideals, runs the library, and
//! renders deterministic text or JSON reports.

pub mod input;
pub mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use detlct::detlink::{
    computed_link_order, generic_link, ord_variable_block, resolution_data, LinkMode, LinkOptions,
    MatrixSpec, ModeChoice, OrderStatus, DEFAULT_SAMPLE_BOUND,
};
use detlct::groebner::{reduced_gb_with_stats, GbConfig, Ideal};
use detlct::lct::{
    codim2_report, determinantal_ratios, gendegree_report, howald_lct, lct_determinantal,
    optimal_weights, remark_report, resolution_minimum, verify_corollary_vanishing,
    verify_qibound, verify_theorem1, LctCertificate, VerifierReport,
};
use detlct::polyring::{Monomial, MonomialOrder};
use detlct::Error;

use crate::input::{parse_generators, parse_ideal_file, parse_ideal_inline};
use crate::report::{gb_stats, inputs, order_report, q, qs, stage_object, verifier, RunReport, Status};

#[derive(Parser, Debug)]
#[command(name = "detlct", version, about = "Exact thresholds, links and orders for determinantal ideals")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Buchberger pair budget per Gröbner computation.
    #[arg(long, global = true)]
    max_steps: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Full,
    Specialized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderName {
    Grevlex,
    Lex,
}

#[derive(Args, Debug, Clone)]
struct IdealArgs {
    /// Comma-separated generators (requires --vars).
    #[arg(long, conflicts_with = "file")]
    ideal: Option<String>,
    /// Variable names for --ideal.
    #[arg(long, num_args = 1..)]
    vars: Vec<String>,
    /// Ideal file: a `vars:` header and one generator per line.
    #[arg(long)]
    file: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct LinkArgs {
    #[arg(long, value_enum, default_value_t = Mode::Full)]
    mode: Mode,
    /// Sampling seeds for specialized mode (default 0 1 2).
    #[arg(long, num_args = 1..)]
    seed: Vec<u64>,
    /// Specialized entries are drawn from [-bound, bound].
    #[arg(long, default_value_t = DEFAULT_SAMPLE_BOUND)]
    bound: i64,
    /// Largest variable count attempted without --allow-over-budget.
    #[arg(long, default_value_t = 14)]
    budget_vars: u64,
    #[arg(long)]
    allow_over_budget: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Threshold of a generic determinantal ideal from the closed form.
    LctDet {
        #[arg(long, num_args = 3, value_names = ["M", "N", "R"], required = true)]
        spec: Vec<usize>,
    },
    /// Threshold of a monomial ideal from its Newton polyhedron.
    LctMonomial {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Generic link of an ideal (or of a determinantal spec).
    Link {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, num_args = 3, value_names = ["M", "N", "R"])]
        spec: Option<Vec<usize>>,
        /// Codimension (derived from the dimension when omitted).
        #[arg(long)]
        codim: Option<usize>,
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Stage link orders of a spec, or the order of an ideal along a block.
    Ord {
        #[arg(long, num_args = 3, value_names = ["M", "N", "R"])]
        spec: Option<Vec<usize>>,
        #[arg(long)]
        stage: Option<usize>,
        #[command(flatten)]
        ideal: IdealArgs,
        /// Variables spanning the block (default: all).
        #[arg(long, num_args = 1..)]
        block: Vec<String>,
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, value_enum, default_value_t = OrderName::Grevlex)]
        order: OrderName,
    },
    /// Colon ideal I : J.
    Quotient {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Comma-separated generators of J.
        #[arg(long)]
        by: String,
    },
    /// Verifiers and regression reports.
    Verify {
        #[command(subcommand)]
        which: VerifyKind,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyKind {
    /// Small-case dichotomy of the link degree bound.
    Qibound {
        #[arg(long, default_value_t = 12)]
        max: usize,
    },
    /// Threshold equality between a determinantal ideal and its link.
    Theorem1 {
        #[arg(long, default_value_t = 30)]
        max: usize,
    },
    /// Vanishing of the last stage order and equality before it.
    Corollary {
        #[arg(long, num_args = 3, value_names = ["M", "N", "R"], required = true)]
        spec: Vec<usize>,
        #[command(flatten)]
        link: LinkArgs,
    },
    /// The 3x2 worked example.
    Remark,
    /// The codimension-two monomial examples.
    Codim2,
    /// Degree identity sweep and minimal degrees of new link generators.
    Gendegree {
        #[arg(long, default_value_t = 30)]
        max: usize,
        #[arg(long, num_args = 3, value_names = ["M", "N", "R"])]
        spec: Option<Vec<usize>>,
        #[arg(long, default_value_t = 14)]
        budget_vars: u64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<RunReport>,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            report: None,
        }
    }
}

struct Computed {
    args: Value,
    result: Value,
    certificates: Value,
    status: Status,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                    report: None,
                };
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("usage error");
            return Outcome::usage(line.trim_start_matches("error: "));
        }
    };
    let gb = cli.max_steps.map_or_else(GbConfig::default, GbConfig::with_max_steps);
    let name = command_name(&cli.command);
    let start = Instant::now();
    let computed = match execute(&cli.command, &gb) {
        Ok(c) => c,
        Err(Failure::Usage(msg)) => return Outcome::usage(msg),
        Err(Failure::Compute { args, error }) => Computed {
            args,
            result: json!({ "error": error.to_string() }),
            certificates: Value::Null,
            status: if error.is_resource() {
                Status::ResourceLimit
            } else {
                Status::Error
            },
        },
    };
    let mut args = computed.args;
    if let Value::Object(m) = &mut args {
        if let Some(s) = cli.max_steps {
            m.insert("max_steps".into(), json!(s));
        }
    }
    let report = RunReport {
        command: name,
        inputs: inputs(args),
        result: computed.result,
        certificates: computed.certificates,
        status: computed.status,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    let stdout = match cli.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Text => report.to_text(),
    };
    Outcome {
        code: report.status.exit_code(),
        stdout,
        stderr: String::new(),
        report: Some(report),
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::LctDet { .. } => "lct-det".into(),
        Command::LctMonomial { .. } => "lct-monomial".into(),
        Command::Link { .. } => "link".into(),
        Command::Ord { .. } => "ord".into(),
        Command::Gb { .. } => "gb".into(),
        Command::Quotient { .. } => "quotient".into(),
        Command::Verify { which } => format!(
            "verify {}",
            match which {
                VerifyKind::Qibound { .. } => "qibound",
                VerifyKind::Theorem1 { .. } => "theorem1",
                VerifyKind::Corollary { .. } => "corollary",
                VerifyKind::Remark => "remark",
                VerifyKind::Codim2 => "codim2",
                VerifyKind::Gendegree { .. } => "gendegree",
            }
        ),
    }
}

enum Failure {
    Usage(String),
    Compute { args: Value, error: Error },
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::UnknownVariable(_)
            | Error::DuplicateVariable(_)
            | Error::InvalidVariable(_)
            | Error::InvalidArgument(_)
            | Error::NotMonomial(_)
    )
}

/// Input errors become usage failures; anything else is reported.
fn classify(args: &Value) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        if is_usage_error(&e) {
            Failure::Usage(e.to_string())
        } else {
            Failure::Compute {
                args: args.clone(),
                error: e,
            }
        }
    }
}

fn spec_of(v: &[usize]) -> Result<MatrixSpec, Failure> {
    MatrixSpec::new(v[0], v[1], v[2]).map_err(|e| Failure::Usage(e.to_string()))
}

fn spec_json(s: &MatrixSpec) -> Value {
    json!({ "m": s.m(), "n": s.n(), "r": s.r() })
}

fn load_ideal(a: &IdealArgs) -> Result<(Ideal, Value), Failure> {
    let usage = |e: Error| Failure::Usage(e.to_string());
    match (&a.ideal, &a.file) {
        (Some(text), None) => {
            if a.vars.is_empty() {
                return Err(Failure::Usage("--ideal needs --vars".into()));
            }
            let i = parse_ideal_inline(text, &a.vars).map_err(usage)?;
            Ok((i, json!({ "ideal": text, "vars": a.vars })))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read `{path}`: {e}")))?;
            let i = parse_ideal_file(&text).map_err(usage)?;
            Ok((i, json!({ "file_contents": text })))
        }
        _ => Err(Failure::Usage("give exactly one of --ideal or --file".into())),
    }
}

fn link_options(l: &LinkArgs, gb: &GbConfig) -> LinkOptions {
    LinkOptions {
        mode: match l.mode {
            Mode::Full => ModeChoice::FullGeneric,
            Mode::Specialized => ModeChoice::Specialized,
        },
        budget_vars: l.budget_vars,
        allow_over_budget: l.allow_over_budget,
        seeds: if l.seed.is_empty() { vec![0, 1, 2] } else { l.seed.clone() },
        bound: l.bound,
        gb: *gb,
    }
}

fn link_args_json(l: &LinkOptions) -> Value {
    json!({
        "mode": l.mode.name(),
        "seeds": l.seeds,
        "bound": l.bound,
        "budget_vars": l.budget_vars,
        "allow_over_budget": l.allow_over_budget,
    })
}

fn merge(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Object(mut x), Value::Object(y)) => {
            x.extend(y);
            Value::Object(x)
        }
        (a, _) => a,
    }
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn verify_result(kind: &str, args: Value, rep: &VerifierReport) -> Computed {
    Computed {
        args,
        result: verifier(kind, rep),
        certificates: Value::Null,
        status: if rep.all_pass() { Status::Ok } else { Status::Fail },
    }
}

fn execute(cmd: &Command, gb: &GbConfig) -> Result<Computed, Failure> {
    match cmd {
        Command::LctDet { spec } => {
            let spec = spec_of(spec)?;
            let args = json!({ "spec": spec_json(&spec) });
            let l = lct_determinantal(&spec).map_err(classify(&args))?;
            let (res_value, res_stage) = resolution_minimum(&spec);
            let stages: Vec<Value> = resolution_data(&spec).iter().map(|s| stage_object(s, None)).collect();
            Ok(Computed {
                result: json!({
                    "value": q(&l.value),
                    "method": l.method.as_str(),
                    "minimizing_t": l.minimizing_index(),
                    "codim": spec.codim(),
                    "ratios": qs(&determinantal_ratios(&spec)),
                    "stages": stages,
                }),
                certificates: json!({
                    "resolution_minimum": q(&res_value),
                    "resolution_stage": res_stage,
                }),
                status: Status::Ok,
                args,
            })
        }
        Command::LctMonomial { ideal } => {
            let (i, args) = load_ideal(ideal)?;
            let l = howald_lct(&i).map_err(classify(&args))?;
            let ring = i.ring().clone();
            let (gens, lp) = match &l.certificate {
                Some(LctCertificate::Lp {
                    generators,
                    certificate,
                    problem,
                }) => {
                    let gens: Vec<String> = generators
                        .iter()
                        .map(|e| {
                            let exps: Vec<u16> = e.iter().map(|&x| x as u16).collect();
                            Monomial::from_exponents(&exps).display(&ring).to_string()
                        })
                        .collect();
                    let lp = json!({
                        "status": certificate.status.as_str(),
                        "primal": certificate.primal.as_deref().map(qs),
                        "dual": certificate.dual.as_deref().map(qs),
                        "objective": certificate.objective_value.as_ref().map(q),
                        "pivots": certificate.pivots,
                        "validated": certificate.validates(problem),
                    });
                    (gens, lp)
                }
                _ => (Vec::new(), Value::Null),
            };
            Ok(Computed {
                result: json!({
                    "value": q(&l.value),
                    "method": l.method.as_str(),
                    "minimal_generators": gens,
                    "weights": optimal_weights(&l).map(qs),
                    "variables": ring.names(),
                }),
                certificates: json!({ "lp": lp }),
                status: Status::Ok,
                args,
            })
        }
        Command::Link {
            ideal,
            spec,
            codim,
            link,
        } => {
            let opts = link_options(link, gb);
            let (base, base_args) = match spec {
                Some(s) => {
                    if ideal.ideal.is_some() || ideal.file.is_some() {
                        return Err(Failure::Usage("give either --spec or an ideal, not both".into()));
                    }
                    let s = spec_of(s)?;
                    let i = detlct::detlink::determinantal_ideal(&s).map_err(|e| Failure::Usage(e.to_string()))?;
                    (i, json!({ "spec": spec_json(&s) }))
                }
                None => load_ideal(ideal)?,
            };
            let mut args = merge(base_args, link_args_json(&opts));
            if let Value::Object(m) = &mut args {
                m.insert("codim".into(), json!(codim));
            }
            let mode = match opts.mode {
                ModeChoice::FullGeneric => LinkMode::FullGeneric,
                ModeChoice::Specialized => LinkMode::Specialized {
                    seed: opts.seeds[0],
                    bound: opts.bound,
                },
            };
            let l = generic_link(&base, *codim, mode, gb).map_err(classify(&args))?;
            let basis = l.link.normalized_basis(gb).map_err(classify(&args))?;
            let product = l.product_contained(gb).map_err(classify(&args))?;
            let xb = l.ambient.block(detlct::polyring::BlockTag::X);
            let bx = base.ring().block(detlct::polyring::BlockTag::X);
            let ox = ord_variable_block(&base, &bx).map_err(classify(&args))?;
            let oy = ord_variable_block(&l.link, &xb).map_err(classify(&args))?;
            Ok(Computed {
                result: json!({
                    "c": l.c,
                    "mu": l.mu,
                    "mode": l.mode.name(),
                    "attempts": l.attempts,
                    "ambient": l.ambient.names(),
                    "tmatrix": l.tmatrix.iter().map(|r| strings(r.as_slice())).collect::<Vec<_>>(),
                    "fs": strings(&l.fs),
                    "link_generators": strings(l.link.generators()),
                    "link_basis": strings(&basis),
                    "ord_x_base": ox.to_string(),
                    "ord_x_link": oy.to_string(),
                }),
                certificates: json!({ "product_in_iv": product }),
                status: if product { Status::Ok } else { Status::Fail },
                args,
            })
        }
        Command::Ord {
            spec,
            stage,
            ideal,
            block,
            link,
        } => match spec {
            Some(s) => {
                if ideal.ideal.is_some() || ideal.file.is_some() {
                    return Err(Failure::Usage("give either --spec or an ideal, not both".into()));
                }
                let spec = spec_of(s)?;
                let opts = link_options(link, gb);
                let args = merge(
                    json!({ "spec": spec_json(&spec), "stage": stage }),
                    link_args_json(&opts),
                );
                let stages: Vec<usize> = match stage {
                    Some(i) => vec![*i],
                    None => (1..=spec.r()).collect(),
                };
                let mut out = Vec::new();
                let mut status = Status::Ok;
                for i in stages {
                    let rep = computed_link_order(&spec, i, &opts).map_err(classify(&args))?;
                    status = match (status, rep.status) {
                        (Status::Fail, _) | (_, OrderStatus::Disagree) => Status::Fail,
                        (_, OrderStatus::Inconclusive) => Status::Inconclusive,
                        (s, OrderStatus::Agree) => s,
                    };
                    out.push(order_report(&rep));
                }
                Ok(Computed {
                    result: json!({ "spec": spec_json(&spec), "stages": out }),
                    certificates: Value::Null,
                    status,
                    args,
                })
            }
            None => {
                let (i, mut args) = load_ideal(ideal)?;
                let names: Vec<String> = if block.is_empty() {
                    i.ring().names().to_vec()
                } else {
                    block.clone()
                };
                if let Value::Object(m) = &mut args {
                    m.insert("block".into(), json!(names));
                }
                let idx = i.ring().indices_of(&names).map_err(classify(&args))?;
                let o = ord_variable_block(&i, &idx).map_err(classify(&args))?;
                Ok(Computed {
                    result: json!({ "order": o.to_string() }),
                    certificates: Value::Null,
                    status: Status::Ok,
                    args,
                })
            }
        },
        Command::Gb { ideal, order } => {
            let (i, mut args) = load_ideal(ideal)?;
            let ord = match order {
                OrderName::Grevlex => MonomialOrder::Grevlex,
                OrderName::Lex => MonomialOrder::Lex,
            };
            if let Value::Object(m) = &mut args {
                m.insert("order".into(), json!(ord.name()));
            }
            let (basis, stats) = reduced_gb_with_stats(i.generators(), &ord, gb).map_err(classify(&args))?;
            Ok(Computed {
                result: json!({ "order": ord.name(), "basis": strings(&basis) }),
                certificates: json!({ "gb": gb_stats(&stats) }),
                status: Status::Ok,
                args,
            })
        }
        Command::Quotient { ideal, by } => {
            let (i, mut args) = load_ideal(ideal)?;
            if let Value::Object(m) = &mut args {
                m.insert("by".into(), json!(by));
            }
            let j = parse_generators(i.ring(), by).map_err(|e| Failure::Usage(e.to_string()))?;
            let quo = i.quotient(&j, gb).map_err(classify(&args))?;
            let basis = quo.normalized_basis(gb).map_err(classify(&args))?;
            Ok(Computed {
                result: json!({ "generators": strings(&basis) }),
                certificates: Value::Null,
                status: Status::Ok,
                args,
            })
        }
        Command::Verify { which } => match which {
            VerifyKind::Qibound { max } => {
                if *max == 0 {
                    return Err(Failure::Usage("--max must be at least 1".into()));
                }
                Ok(verify_result("qibound", json!({ "max": max }), &verify_qibound(*max)))
            }
            VerifyKind::Theorem1 { max } => {
                if *max == 0 {
                    return Err(Failure::Usage("--max must be at least 1".into()));
                }
                Ok(verify_result("theorem1", json!({ "max": max }), &verify_theorem1(*max)))
            }
            VerifyKind::Corollary { spec, link } => {
                let spec = spec_of(spec)?;
                let opts = link_options(link, gb);
                let args = merge(json!({ "spec": spec_json(&spec) }), link_args_json(&opts));
                let rep = verify_corollary_vanishing(&spec, &opts).map_err(classify(&args))?;
                Ok(verify_result("corollary", args, &rep))
            }
            VerifyKind::Remark => {
                let args = json!({});
                let rep = remark_report(gb).map_err(classify(&args))?;
                Ok(verify_result("remark", args, &rep))
            }
            VerifyKind::Codim2 => {
                let args = json!({});
                let rep = codim2_report(gb).map_err(classify(&args))?;
                Ok(verify_result("codim2", args, &rep))
            }
            VerifyKind::Gendegree {
                max,
                spec,
                budget_vars,
            } => {
                let specs = match spec {
                    Some(s) => vec![spec_of(s)?],
                    None => vec![MatrixSpec::new(3, 2, 2).expect("valid")],
                };
                let opts = LinkOptions {
                    budget_vars: *budget_vars,
                    gb: *gb,
                    ..LinkOptions::default()
                };
                let args = json!({
                    "max": max,
                    "specs": specs.iter().map(spec_json).collect::<Vec<_>>(),
                    "budget_vars": budget_vars,
                });
                let rep = gendegree_report(*max, &specs, &opts).map_err(classify(&args))?;
                Ok(verify_result("gendegree", args, &rep))
            }
        },
    }
}
