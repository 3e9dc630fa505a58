//! Batch front end: argument parsing, dispatch and output formatting.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bases::{lt_vector, BasisKind, Block, DualCanonicalElement, LtBasisElement};
use crate::combinatorics::{enumerate_tableaux, GlWeight, Shape};
use crate::error::{Error, Result};
use crate::howe::{act_divided, TableauVector};
use crate::ring::LaurentPoly;
use crate::tensor::TensorVector;
use crate::verify::{run_properties, PropertyReport};
use crate::webalg::{cartan_matrix, frobenius_from_cartan, gorenstein_parameter, FrobeniusReport, GradedMatrix};
use crate::webs::{check_relations, ev_closed, evaluate_statesum, ladder_from_word, web_form, LadderStep, RelationCheck, Sign, Web};

/// Environment variable holding the worker count for parallel sweeps.
pub const WORKERS_ENV: &str = "SLNWEB_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Lt,
    DualCanonical,
}

#[derive(Debug, Parser)]
#[command(name = "slnweb", version, about = "Exact SL_N webs, skew Howe duality and web bases")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long)]
    pub l: usize,
}

#[derive(Debug, Args)]
pub struct BlockArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Tableau type; every level weight when omitted.
    #[arg(long = "type", alias = "k", value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Column-strict tableaux of a rectangle, descending.
    Tableaux {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        semistandard: bool,
    },
    /// Ladder web of a word such as `-1^2,+2^1` (last entry is the bottom rung).
    Ladder {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// Image of a tensor vector under a web.
    Eval {
        #[arg(long)]
        web: String,
        #[arg(long)]
        vector: String,
        /// Use the state-sum evaluator instead of slice-by-slice composition.
        #[arg(long)]
        statesum: bool,
    },
    /// Closed evaluation of an endomorphism of the top exterior powers.
    Ev {
        #[arg(long)]
        web: String,
    },
    /// The web form of two webs with a common plain codomain.
    Form {
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
    },
    /// Divided power action on a tableau vector.
    Act {
        #[arg(long, value_enum, allow_hyphen_values = true)]
        sign: SignArg,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long)]
        vector: String,
    },
    LtBasis {
        #[command(flatten)]
        block: BlockArgs,
    },
    DualCanonical {
        #[command(flatten)]
        block: BlockArgs,
    },
    Gram {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long, value_enum, default_value = "lt")]
        basis: BasisArg,
    },
    /// Graded Cartan matrix, Gorenstein parameter and Frobenius check.
    Cartan {
        #[command(flatten)]
        block: BlockArgs,
    },
    /// Relation and property sweeps; both when neither flag is given.
    Verify {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        relations: bool,
        #[arg(long)]
        properties: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit status and captured streams of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvariantViolation(_) | Error::NonDivisible => EXIT_INVARIANT,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            Outcome { code, stdout, stderr }
        }
    }
}

fn workers() -> Result<Option<usize>> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(w) if w > 0 => Ok(Some(w)),
            _ => Err(Error::InvalidInput(format!("{WORKERS_ENV} must be a positive integer, got {s:?}"))),
        },
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let result = workers().and_then(|w| match w {
        None => dispatch(cfg),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::InvalidInput(format!("cannot start {w} workers: {e}")))?
            .install(|| dispatch(cfg)),
    });
    match result {
        Ok(Report { stdout, failure: None, log }) => Outcome { code: EXIT_OK, stdout, stderr: log },
        Ok(Report { stdout, failure: Some(what), log }) => {
            Outcome { code: EXIT_INVARIANT, stdout, stderr: format!("{log}invariant violated: {what}\n") }
        }
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Report {
    stdout: String,
    /// Named invariant that failed in a sweep.
    failure: Option<String>,
    log: String,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report { stdout, failure: None, log: String::new() }
    }
}

fn json<T: Serialize + ?Sized>(x: &T) -> String {
    let mut s = serde_json::to_string(x).expect("values serialize");
    s.push('\n');
    s
}

/// A path, `-` for standard input, or inline JSON.
fn read_input(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| Error::InvalidInput(format!("stdin: {e}")));
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::InvalidInput(format!("{arg}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Result<T> {
    serde_json::from_str(&read_input(arg)?).map_err(|e| Error::InvalidInput(format!("{what}: {e}")))
}

fn read_web(arg: &str) -> Result<Web> {
    let w: Web = parse_json(arg, "web")?;
    w.validate()?;
    Ok(w)
}

/// Parses `-1^2,+2` style words; a missing exponent means 1.
pub fn parse_word(s: &str) -> Result<Vec<LadderStep>> {
    let bad = |p: &str| Error::InvalidInput(format!("bad ladder step {p:?}; expected e.g. -1^2 or +3"));
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let sign = match p.chars().next() {
                Some('+') => Sign::Plus,
                Some('-') => Sign::Minus,
                _ => return Err(bad(p)),
            };
            let (i, a) = p[1..].split_once('^').unwrap_or((&p[1..], "1"));
            Ok(LadderStep::new(sign, i.parse().map_err(|_| bad(p))?, a.parse().map_err(|_| bad(p))?))
        })
        .collect()
}

fn blocks(args: &BlockArgs) -> Result<Vec<Block>> {
    let shape = Shape::new(args.shape.n, args.shape.l)?;
    match &args.k {
        Some(k) => {
            let k = GlWeight(k.clone());
            if !k.is_level(shape) {
                return Err(Error::InvalidInput(format!(
                    "type {k} must have {} entries in 0..={} summing to {}",
                    shape.m(),
                    shape.n(),
                    shape.m()
                )));
            }
            Ok(vec![Block::new(shape, &k)?])
        }
        None => Block::all(shape),
    }
}

#[derive(Serialize)]
struct CartanOutput<'a> {
    matrix: &'a GradedMatrix,
    gorenstein: i64,
    frobenius: &'a FrobeniusReport,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(rename = "N")]
    n: usize,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    relations: Option<&'a [RelationCheck]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    properties: Option<&'a [PropertyReport]>,
    passed: bool,
}

fn table_lt(out: &mut String, e: &LtBasisElement) {
    let word: Vec<String> = e.word.iter().map(|(i, r)| format!("-{i}^{r}")).collect();
    let _ = writeln!(out, "{}  word [{}]", e.tableau, word.join(","));
    let _ = writeln!(out, "  A = {}", e.expansion);
}

fn table_dual(out: &mut String, d: &DualCanonicalElement) {
    let _ = writeln!(out, "{}", d.tableau);
    let _ = writeln!(out, "  b = {}", d.expansion);
    for (s, c) in d.beta.iter().rev() {
        let _ = writeln!(out, "  beta[{s}] = {c}");
    }
}

fn dispatch(cfg: &RunConfig) -> Result<Report> {
    let table = cfg.format == Format::Table;
    let out = match &cfg.command {
        Command::Tableaux { block, semistandard } => {
            let shape = Shape::new(block.shape.n, block.shape.l)?;
            let k = block.k.clone().map(GlWeight);
            let mut out = String::new();
            for t in enumerate_tableaux(shape, k.as_ref(), *semistandard) {
                if table {
                    let _ = writeln!(out, "{t}");
                } else {
                    let _ = writeln!(out, "{}", serde_json::to_string(&t).expect("tableaux serialize"));
                }
            }
            out
        }
        Command::Ladder { n, k, word } => {
            let web = ladder_from_word(*n, &GlWeight(k.clone()), &parse_word(word)?)?;
            if table {
                let mut out = format!("domain {}\n", web.domain);
                for s in &web.slices {
                    let _ = writeln!(out, "{s}");
                }
                let _ = writeln!(out, "codomain {}", web.codomain()?);
                out
            } else {
                json(&web)
            }
        }
        Command::Eval { web, vector, statesum } => {
            let web = read_web(web)?;
            let x: TensorVector = parse_json(vector, "vector")?;
            x.check(web.n)?;
            let y = if *statesum { evaluate_statesum(&web, &x)? } else { web.evaluate_dense(&x)? };
            if table {
                format!("{y}\n")
            } else {
                json(&y)
            }
        }
        Command::Ev { web } => poly_out(&ev_closed(&read_web(web)?)?, table),
        Command::Form { u, w } => poly_out(&web_form(&read_web(u)?, &read_web(w)?)?, table),
        Command::Act { sign, i, r, vector } => {
            let x: TableauVector = parse_json(vector, "vector")?;
            let y = act_divided((*sign).into(), *i, *r, &x)?;
            if table {
                format!("{y}\n")
            } else {
                json(&y)
            }
        }
        Command::LtBasis { block } => {
            let mut all = Vec::new();
            for b in blocks(block)? {
                for t in b.tableaux() {
                    all.push(lt_vector(t)?);
                }
            }
            if table {
                let mut out = String::new();
                all.iter().for_each(|e| table_lt(&mut out, e));
                out
            } else {
                json(&all)
            }
        }
        Command::DualCanonical { block } => {
            let mut all = Vec::new();
            for b in blocks(block)? {
                all.extend(b.dual_canonical_all()?);
            }
            if table {
                let mut out = String::new();
                all.iter().for_each(|d| table_dual(&mut out, d));
                out
            } else {
                json(&all)
            }
        }
        Command::Gram { block, basis } => {
            let kind = match basis {
                BasisArg::Lt => BasisKind::Lt,
                BasisArg::DualCanonical => BasisKind::DualCanonical,
            };
            let ms: Vec<GradedMatrix> = blocks(block)?.iter().map(|b| b.gram(kind)).collect::<Result<_>>()?;
            matrices_out(&ms, table)
        }
        Command::Cartan { block } => {
            let n = block.shape.n;
            let mut outs = Vec::new();
            for b in blocks(block)? {
                let c = cartan_matrix(b.shape(), b.weight())?;
                let f = frobenius_from_cartan(n, b.weight(), &c)?;
                outs.push((c, gorenstein_parameter(n, b.weight())?, f));
            }
            if table {
                let mut out = String::new();
                for (c, g, f) in &outs {
                    let _ = writeln!(out, "k = {}  gorenstein {g}  frobenius {}", f.weight, if f.passed { "pass" } else { "FAIL" });
                    let _ = writeln!(out, "{c}");
                }
                out
            } else {
                let v: Vec<CartanOutput> =
                    outs.iter().map(|(matrix, gorenstein, frobenius)| CartanOutput { matrix, gorenstein: *gorenstein, frobenius }).collect();
                if v.len() == 1 {
                    json(&v[0])
                } else {
                    json(&v)
                }
            }
        }
        Command::Verify { n, relations, properties, seed } => return verify(*n, *relations, *properties, *seed, table),
    };
    Ok(Report::ok(out))
}

fn poly_out(p: &LaurentPoly, table: bool) -> String {
    if table {
        format!("{p}\n")
    } else {
        json(p)
    }
}

fn matrices_out(ms: &[GradedMatrix], table: bool) -> String {
    if table {
        ms.iter().map(|m| format!("{m}\n")).collect()
    } else if ms.len() == 1 {
        json(&ms[0])
    } else {
        json(ms)
    }
}

fn verify(n: usize, relations: bool, properties: bool, seed: u64, table: bool) -> Result<Report> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("N must be at least 2, got {n}")));
    }
    let (do_rel, do_prop) = if relations || properties { (relations, properties) } else { (true, true) };
    let rels = if do_rel { Some(check_relations(n)?) } else { None };
    let props = if do_prop { Some(run_properties(n, seed)?) } else { None };

    let mut failed: Vec<String> = Vec::new();
    if let Some(r) = &rels {
        failed.extend(r.iter().filter(|c| !c.passed).map(|c| format!("{} {}", c.relation, c.labels)));
    }
    if let Some(p) = &props {
        failed.extend(p.iter().filter(|r| !r.passed).map(|r| r.property.clone()));
    }
    let passed = failed.is_empty();
    let stdout = if table {
        let mut out = String::new();
        if let Some(r) = &rels {
            let ok = r.iter().filter(|c| c.passed).count();
            let _ = writeln!(out, "relations  {ok}/{} pass", r.len());
            for c in r.iter().filter(|c| !c.passed) {
                let _ = writeln!(out, "  FAIL {} {}", c.relation, c.labels);
            }
        }
        for p in props.iter().flatten() {
            let _ = writeln!(out, "{:<32} {:>6} cases  {}", p.property, p.cases, if p.passed { "pass" } else { "FAIL" });
            for f in &p.failures {
                let _ = writeln!(out, "  {f}");
            }
        }
        out
    } else {
        json(&VerifyOutput { n, seed, relations: rels.as_deref(), properties: props.as_deref(), passed })
    };
    let failure = (!passed).then(|| failed.join("; "));
    let log = if do_prop { format!("seed {seed}\n") } else { String::new() };
    Ok(Report { stdout, failure, log })
}
