//! The `prism` command line.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a Groebner
//! resource cap is hit, 3 when `--fail-on-witness` or `--fail-on-excluded`
//! triggers.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyforge::{groebner, AnySystem, Field, FieldSpec, GbConfig, GbStrategy, MonomialOrder, System};
use serde_json::{json, Value};

use crate::catalog;
use crate::chartab::{self, character_table, lifting_verdict};
use crate::error::PrismError;
use crate::expr::{ring_over, Expr};
use crate::localizer::{generate_ek, generate_full, localization_sets, two_parallel, two_parallel_plan, Tag, Verdict};
use crate::report::{self, Stopwatch};
use crate::ring::FusionRing;
use crate::spectra::{self, criterion_search, Kind, Nonet, SearchConfig};
use crate::tpe::{self, IdMap, TpConfig};

/// Exit status when a `--fail-on-*` flag triggers.
pub const EXIT_TRIGGERED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "prism", version, about = "Categorification obstructions for fusion rings")]
struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (overrides PRISM_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check the fusion ring axioms.
    Verify(RingArg),
    /// Duality, Frobenius-Perron dimensions and type.
    Info(RingArg),
    /// Character table and the positive characteristic lifting verdict.
    Chartab {
        #[command(flatten)]
        ring: RingArg,
        /// Assert that characteristic zero categorifications are excluded.
        #[arg(long)]
        char0_excluded: bool,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Search for zero and one spectrum witnesses.
    Criteria {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, value_enum, default_value_t = KindArg::Both)]
        kind: KindArg,
        /// Report every witness instead of the first.
        #[arg(long)]
        all_witnesses: bool,
        /// Exit with status 3 when a witness is found.
        #[arg(long)]
        fail_on_witness: bool,
        /// Check one nonet `i1,...,i9` instead of searching.
        #[arg(long)]
        check: Option<String>,
        /// Spectrum element for `--check --kind one`.
        #[arg(long)]
        i0: Option<String>,
    },
    /// Emit the localization system at `k`.
    Localize {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        k: String,
        /// Comma-separated subset of S_k containing the unit.
        #[arg(long)]
        sprime: Option<String>,
        /// Emit every three-index instance instead of the reduced system.
        #[arg(long)]
        full: bool,
        /// Use short variable names (u0, v0, ...).
        #[arg(long)]
        aliases: bool,
        #[arg(long, value_enum, default_value_t = TagArg::K)]
        tag: TagArg,
    },
    /// Run the two-localization Groebner pipeline.
    TwoParallel {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        k: String,
        #[arg(long)]
        l: String,
        #[arg(long)]
        sprime_k: Option<String>,
        #[arg(long)]
        sprime_l: Option<String>,
        /// `Q` or a prime `p` (also accepted as `GF(p)`).
        #[arg(long, default_value = "Q")]
        field: String,
        /// Exit with status 3 when the ring is excluded.
        #[arg(long)]
        fail_on_excluded: bool,
        #[command(flatten)]
        gb: GbArgs,
    },
    /// Generate triangular prism equations.
    Tpe {
        #[command(flatten)]
        ring: RingArg,
        /// Enumerate all configurations over these labels.
        #[arg(long, conflicts_with_all = ["family", "config"])]
        labels: Option<String>,
        /// A single configuration `X1,...,X9`.
        #[arg(long, conflicts_with = "family")]
        config: Option<String>,
        /// Generate a named family (only `localization`).
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        l: Option<String>,
        #[arg(long)]
        sprime: Option<String>,
        #[arg(long, value_enum)]
        idmap: Option<IdMapArg>,
        /// Treat dimensions as unknowns `d[X]` (symmetric map only).
        #[arg(long)]
        symbolic_dims: bool,
    },
    /// Reduced Groebner basis of a system file.
    Groebner {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        #[command(flatten)]
        gb: GbArgs,
    },
    /// Built-in rings.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
    Show { name: String },
}

#[derive(Args, Debug)]
struct RingArg {
    /// A ring JSON file or a catalog name.
    ring: String,
}

#[derive(Args, Debug)]
struct GbArgs {
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    #[arg(long)]
    max_pairs: Option<u64>,
    #[arg(long)]
    max_term_ops: Option<u64>,
}

impl GbArgs {
    fn config(&self) -> GbConfig {
        let mut cfg = GbConfig {
            strategy: match self.strategy {
                StrategyArg::Auto => GbStrategy::Auto,
                StrategyArg::Direct => GbStrategy::Direct,
                StrategyArg::Modular => GbStrategy::Modular,
            },
            ..GbConfig::default()
        };
        if let Some(p) = self.max_pairs {
            cfg.max_pairs = p;
        }
        if let Some(t) = self.max_term_ops {
            cfg.max_term_ops = t;
        }
        cfg
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum KindArg {
    Zero,
    One,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TagArg {
    K,
    L,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum IdMapArg {
    Symmetric,
    Localization,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrategyArg {
    Auto,
    Direct,
    Modular,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OrderArg {
    Grevlex,
    Lex,
}

/// What a command produced.
struct Outcome {
    result: Value,
    text: String,
    exit: i32,
}

impl Outcome {
    fn ok(result: Value, text: String) -> Self {
        Outcome { result, text, exit: 0 }
    }
}

/// Command inputs that feed the report digest.
struct Input {
    bytes: Vec<u8>,
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Verify(_) => "verify",
            Cmd::Info(_) => "info",
            Cmd::Chartab { .. } => "chartab",
            Cmd::Criteria { .. } => "criteria",
            Cmd::Localize { .. } => "localize",
            Cmd::TwoParallel { .. } => "two-parallel",
            Cmd::Tpe { .. } => "tpe",
            Cmd::Groebner { .. } => "groebner",
            Cmd::Catalog { .. } => "catalog",
        }
    }
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let threads = match cli.threads.map(Ok).or_else(env_threads) {
        Some(Ok(n)) => n,
        Some(Err(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 1;
        }
        None => 0,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let name = cli.cmd.name();
    let watch = Stopwatch::start();
    let res = pool.install(|| dispatch(&cli.cmd));
    match res {
        Ok((input, outcome)) => {
            if cli.json {
                let report = report::envelope(name, &report::digest(&input.bytes), chartab::SEED, &watch, outcome.result);
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                let _ = write!(out, "{}", outcome.text);
            }
            outcome.exit
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                let report = report::error_envelope(name, e.code(), &e.to_string(), code);
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
            }
            let _ = writeln!(err, "error [{}]: {e}", e.code());
            code
        }
    }
}

fn env_threads() -> Option<Result<usize, String>> {
    let v = std::env::var("PRISM_THREADS").ok()?;
    Some(v.trim().parse().map_err(|_| format!("PRISM_THREADS must be a number, got `{v}`")))
}

fn load_ring(arg: &str) -> Result<(FusionRing, Input), PrismError> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg)?
    } else {
        catalog::document(arg)?.to_string()
    };
    let ring = FusionRing::from_json(&text)?;
    Ok((ring, Input { bytes: text.into_bytes() }))
}

fn labels_of(ring: &FusionRing, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| ring.label(i).to_string()).collect()
}

fn set_text(ring: &FusionRing, idx: &[usize]) -> String {
    format!("{{{}}}", labels_of(ring, idx).join(", "))
}

fn dispatch(cmd: &Cmd) -> Result<(Input, Outcome), PrismError> {
    match cmd {
        Cmd::Verify(r) => {
            let (ring, input) = load_ring(&r.ring)?;
            Ok((input, verify(&ring)))
        }
        Cmd::Info(r) => {
            let (ring, input) = load_ring(&r.ring)?;
            Ok((input, info(&ring)?))
        }
        Cmd::Chartab { ring, char0_excluded, tol } => {
            let (ring, input) = load_ring(&ring.ring)?;
            Ok((input, chartab_cmd(&ring, *char0_excluded, *tol)?))
        }
        Cmd::Criteria {
            ring,
            kind,
            all_witnesses,
            fail_on_witness,
            check,
            i0,
        } => {
            let (ring, input) = load_ring(&ring.ring)?;
            let out = match check {
                Some(csv) => check_cmd(&ring, *kind, csv, i0.as_deref(), *fail_on_witness)?,
                None => criteria(&ring, *kind, *all_witnesses, *fail_on_witness),
            };
            Ok((input, out))
        }
        Cmd::Localize {
            ring,
            k,
            sprime,
            full,
            aliases,
            tag,
        } => {
            let (ring, input) = load_ring(&ring.ring)?;
            let tag = match tag {
                TagArg::K => Tag::K,
                TagArg::L => Tag::L,
            };
            Ok((input, localize(&ring, k, sprime.as_deref(), *full, *aliases, tag)?))
        }
        Cmd::TwoParallel {
            ring,
            k,
            l,
            sprime_k,
            sprime_l,
            field,
            fail_on_excluded,
            gb,
        } => {
            let (ring, input) = load_ring(&ring.ring)?;
            let field = parse_field(field)?;
            let out = two_parallel_cmd(&ring, k, l, sprime_k.as_deref(), sprime_l.as_deref(), field, &gb.config(), *fail_on_excluded)?;
            Ok((input, out))
        }
        Cmd::Tpe {
            ring,
            labels,
            config,
            family,
            k,
            l,
            sprime,
            idmap,
            symbolic_dims,
        } => {
            let (ring, input) = load_ring(&ring.ring)?;
            let req = TpeRequest {
                labels: labels.as_deref(),
                config: config.as_deref(),
                family: family.as_deref(),
                k: k.as_deref(),
                l: l.as_deref(),
                sprime: sprime.as_deref(),
                idmap: *idmap,
                symbolic_dims: *symbolic_dims,
            };
            Ok((input, tpe_cmd(&ring, &req)?))
        }
        Cmd::Groebner { file, order, gb } => {
            let text = std::fs::read_to_string(file)?;
            let sys = AnySystem::parse(&text)?;
            let order = match order {
                OrderArg::Grevlex => MonomialOrder::Grevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let out = match &sys {
                AnySystem::Rational(s) => groebner_cmd(s, order, &gb.config())?,
                AnySystem::Modular(s) => groebner_cmd(s, order, &gb.config())?,
            };
            Ok((Input { bytes: text.into_bytes() }, out))
        }
        Cmd::Catalog { action } => catalog_cmd(action),
    }
}

fn verify(ring: &FusionRing) -> Outcome {
    let rep = ring.verify_axioms();
    let mut text = format!("{} (rank {})\n", ring.name(), ring.rank());
    for c in rep.checks() {
        match &c.failure {
            None => writeln!(text, "  {:<14} ok", c.axiom).unwrap(),
            Some(f) => writeln!(text, "  {:<14} FAILED at {:?}: {} != {}", c.axiom, f.indices, f.lhs, f.rhs).unwrap(),
        }
    }
    let result = json!({
        "ring": ring.name(),
        "rank": ring.rank(),
        "passed": rep.passed(),
        "checks": rep.checks(),
    });
    Outcome {
        result,
        text,
        exit: if rep.passed() { 0 } else { 1 },
    }
}

fn info(ring: &FusionRing) -> Result<Outcome, PrismError> {
    let fp = ring.fpdim_data()?;
    let duals: Vec<&str> = (0..ring.rank()).map(|i| ring.label(ring.star(i))).collect();
    let mut text = String::new();
    writeln!(text, "name:        {}", ring.name()).unwrap();
    writeln!(text, "rank:        {}", ring.rank()).unwrap();
    writeln!(text, "commutative: {}", ring.is_commutative()).unwrap();
    writeln!(text, "multiplicity: {}", ring.max_multiplicity()).unwrap();
    writeln!(text, "type:        {}", fp.type_string()).unwrap();
    match fp.global_exact() {
        Some(g) => writeln!(text, "global dim:  {g}").unwrap(),
        None => writeln!(text, "global dim:  {:.9}", fp.global).unwrap(),
    }
    for i in 0..ring.rank() {
        writeln!(text, "  {:<8} dual {:<8} FPdim {:.9}", ring.label(i), duals[i], fp.dims[i]).unwrap();
    }
    if let Some(p) = ring.provenance() {
        writeln!(text, "provenance:  {p}").unwrap();
    }
    let result = json!({
        "ring": ring.name(),
        "rank": ring.rank(),
        "labels": ring.labels(),
        "duals": duals,
        "commutative": ring.is_commutative(),
        "max_multiplicity": ring.max_multiplicity(),
        "fpdims": fp.dims,
        "integral_fpdims": fp.exact,
        "global_fpdim": fp.global,
        "type": fp.type_string(),
        "provenance": ring.provenance(),
    });
    Ok(Outcome::ok(result, text))
}

fn chartab_cmd(ring: &FusionRing, char0_excluded: bool, tol: f64) -> Result<Outcome, PrismError> {
    let table = character_table(ring, tol)?;
    let column_zero = chartab::column_zero_property(&table, chartab::ZERO_TOL);
    let verdict = match lifting_verdict(ring, &table, char0_excluded) {
        Ok(v) => Some(v),
        Err(PrismError::NotIntegral) => None,
        Err(e) => return Err(e),
    };
    let mut text = table.to_text(ring);
    writeln!(text, "residual: {:.3e}", table.residual).unwrap();
    writeln!(text, "every non-Perron column has a zero: {column_zero}").unwrap();
    match &verdict {
        Some(v) => {
            for w in &v.primes {
                writeln!(text, "prime {} divides FPdim of {}", w.prime, w.object.as_deref().unwrap_or("no simple object")).unwrap();
            }
            writeln!(text, "verdict: {}", serde_json::to_value(v.conclusion).unwrap().as_str().unwrap()).unwrap();
        }
        None => writeln!(text, "verdict: not integral, lifting argument does not apply").unwrap(),
    }
    let result = json!({
        "ring": ring.name(),
        "table": table.to_json(),
        "column_zero": column_zero,
        "lifting": verdict,
    });
    Ok(Outcome::ok(result, text))
}

fn kinds(k: KindArg) -> Vec<Kind> {
    match k {
        KindArg::Zero => vec![Kind::Zero],
        KindArg::One => vec![Kind::One],
        KindArg::Both => vec![Kind::Zero, Kind::One],
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Zero => "zero",
        Kind::One => "one",
    }
}

fn criteria(ring: &FusionRing, kind: KindArg, all: bool, fail_on_witness: bool) -> Outcome {
    let mut result = serde_json::Map::new();
    result.insert("ring".into(), ring.name().into());
    let mut text = String::new();
    let mut found = false;
    for k in kinds(kind) {
        let ws = criterion_search(ring, k, SearchConfig { all_witnesses: all });
        found |= !ws.is_empty();
        let name = kind_name(k);
        if ws.is_empty() {
            writeln!(text, "{name} spectrum criterion: no witness").unwrap();
        } else {
            writeln!(text, "{name} spectrum criterion: {} witness(es)", ws.len()).unwrap();
            for w in &ws {
                let mut line = format!("  ({})", w.nonet.labels(ring).join(", "));
                if let Some(o) = w.i0 {
                    write!(line, " i0={}", ring.label(o)).unwrap();
                }
                for d in &w.disjuncts {
                    write!(line, " {}#{}", d.condition, d.alternative).unwrap();
                }
                writeln!(text, "{line}").unwrap();
            }
        }
        result.insert(
            name.into(),
            json!({
                "found": !ws.is_empty(),
                "witnesses": ws.iter().map(|w| w.to_json(ring)).collect::<Vec<_>>(),
            }),
        );
    }
    Outcome {
        result: Value::Object(result),
        text,
        exit: if fail_on_witness && found { EXIT_TRIGGERED } else { 0 },
    }
}

fn check_cmd(ring: &FusionRing, kind: KindArg, csv: &str, i0: Option<&str>, fail_on_witness: bool) -> Result<Outcome, PrismError> {
    let nonet = Nonet::parse(ring, csv)?;
    let rep = match kind {
        KindArg::Zero => spectra::zero_witness_check(ring, &nonet),
        KindArg::One => {
            let o = i0.ok_or_else(|| PrismError::Usage("--kind one --check needs --i0".into()))?;
            spectra::one_witness_check(ring, &nonet, ring.index_of(o)?)
        }
        KindArg::Both => return Err(PrismError::Usage("--check needs --kind zero or --kind one".into())),
    };
    let mut text = format!("({}): {}\n", nonet.labels(ring).join(", "), if rep.passed { "witness" } else { "not a witness" });
    if let Some(f) = &rep.failure {
        writeln!(text, "  {f}").unwrap();
    }
    for d in &rep.disjuncts {
        writeln!(text, "  {} holds via alternative {}", d.condition, d.alternative).unwrap();
    }
    let result = json!({ "ring": ring.name(), "nonet": nonet.labels(ring), "check": rep });
    Ok(Outcome {
        result,
        text,
        exit: if fail_on_witness && rep.passed { EXIT_TRIGGERED } else { 0 },
    })
}

fn localize(ring: &FusionRing, k: &str, sprime: Option<&str>, full: bool, aliased: bool, tag: Tag) -> Result<Outcome, PrismError> {
    let k = ring.index_of(k)?;
    let input = localization_sets(ring, k)?;
    let s = match sprime {
        Some(csv) => input.check_subset(ring, &ring.parse_labels(csv)?)?,
        None => input
            .default_subset(&[k])
            .ok_or_else(|| PrismError::InvalidSubset("no multiplicity-free subset contains k".into()))?,
    };
    let sys = if full {
        generate_full(ring, k, &s, tag)?
    } else {
        generate_ek(ring, k, &s, tag)?
    };
    let mut system = sys.to_system(aliased)?;
    let mut notes = vec![
        format!("k = {}", ring.label(k)),
        format!("S_k = {}", set_text(ring, &input.s_k)),
        format!("S' = {}", set_text(ring, &s)),
    ];
    notes.append(&mut system.notes);
    system.notes = notes;
    let polys = if aliased { sys.aliased_polys() } else { sys.polys.clone() };
    let result = json!({
        "ring": ring.name(),
        "k": ring.label(k),
        "s_k": labels_of(ring, &input.s_k),
        "sprime": labels_of(ring, &s),
        "candidates": input.candidates.iter().map(|c| labels_of(ring, c)).collect::<Vec<_>>(),
        "full": full,
        "vars": sys.vars,
        "aliases": sys.aliases,
        "equations": polys.iter().map(Expr::to_string).collect::<Vec<_>>(),
        "notes": sys.notes,
    });
    Ok(Outcome::ok(result, system.to_text()))
}

fn parse_field(s: &str) -> Result<FieldSpec, PrismError> {
    if s == "Q" || s == "QQ" {
        return Ok(FieldSpec::Rationals);
    }
    let inner = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).unwrap_or(s);
    let p: u64 = inner.trim().parse().map_err(|_| PrismError::Usage(format!("unknown field `{s}`")))?;
    Ok(FieldSpec::prime(p)?)
}

#[allow(clippy::too_many_arguments)]
fn two_parallel_cmd(
    ring: &FusionRing,
    k: &str,
    l: &str,
    sprime_k: Option<&str>,
    sprime_l: Option<&str>,
    field: FieldSpec,
    cfg: &GbConfig,
    fail_on_excluded: bool,
) -> Result<Outcome, PrismError> {
    let (k, l) = (ring.index_of(k)?, ring.index_of(l)?);
    let sk = sprime_k.map(|s| ring.parse_labels(s)).transpose()?;
    let sl = sprime_l.map(|s| ring.parse_labels(s)).transpose()?;
    let plan = two_parallel_plan(ring, k, l, sk.as_deref(), sl.as_deref())?;
    let out = two_parallel(ring, &plan, field, cfg)?;
    let mut text = String::new();
    writeln!(text, "k = {}, S'_k = {{{}}}", ring.label(k), out.sprime_k.join(", ")).unwrap();
    writeln!(text, "l = {}, S'_l = {{{}}}", ring.label(l), out.sprime_l.join(", ")).unwrap();
    writeln!(text, "field: {}", out.field).unwrap();
    writeln!(text, "E_k: {} variables, {} equations, basis of {}", out.vars_k, out.equations_k, out.basis_k).unwrap();
    writeln!(text, "E_l: {} variables, {} equations, basis of {}", out.vars_l, out.equations_l, out.basis_l).unwrap();
    writeln!(text, "link: {}", plan.link.rename(|v| plan.e_k.alias_of(v).or(plan.e_l.alias_of(v)).unwrap_or(v).to_string())).unwrap();
    writeln!(text, "final basis ({} elements):", out.final_basis.len()).unwrap();
    for p in out.final_basis.iter().take(20) {
        writeln!(text, "  {p}").unwrap();
    }
    if out.final_basis.len() > 20 {
        writeln!(text, "  ...").unwrap();
    }
    let excluded = out.verdict == Verdict::Excluded;
    writeln!(text, "verdict: {}", if excluded { "excluded" } else { "not excluded" }).unwrap();
    let mut result = serde_json::to_value(&out).expect("serializable");
    result["ring"] = ring.name().into();
    result["k"] = ring.label(k).into();
    result["l"] = ring.label(l).into();
    result["link"] = plan.link.to_string().into();
    Ok(Outcome {
        result,
        text,
        exit: if fail_on_excluded && excluded { EXIT_TRIGGERED } else { 0 },
    })
}

struct TpeRequest<'a> {
    labels: Option<&'a str>,
    config: Option<&'a str>,
    family: Option<&'a str>,
    k: Option<&'a str>,
    l: Option<&'a str>,
    sprime: Option<&'a str>,
    idmap: Option<IdMapArg>,
    symbolic_dims: bool,
}

fn system_text(polys: &[Expr], notes: Vec<String>) -> Result<String, PrismError> {
    let mut vars: Vec<String> = polys.iter().flat_map(Expr::vars).collect();
    vars.sort();
    vars.dedup();
    if vars.is_empty() {
        let mut text = String::from("vars:\nfield: Q\n");
        for n in notes {
            writeln!(text, "# {n}").unwrap();
        }
        for p in polys {
            writeln!(text, "{p}").unwrap();
        }
        return Ok(text);
    }
    let ring = ring_over(&vars)?;
    let ps = polys.iter().map(|p| p.to_polynomial(&ring)).collect::<Result<Vec<_>, _>>()?;
    Ok(System::new(ring, ps).with_notes(notes).to_text())
}

fn tpe_cmd(ring: &FusionRing, req: &TpeRequest) -> Result<Outcome, PrismError> {
    let opt_label = |s: Option<&str>| s.map(|s| ring.index_of(s)).transpose();
    let k = opt_label(req.k)?;
    let l = opt_label(req.l)?;
    let family = match req.family {
        None => false,
        Some("localization") => true,
        Some(other) => return Err(PrismError::Usage(format!("unknown family `{other}`"))),
    };
    let default_map = if family { IdMapArg::Localization } else { IdMapArg::Symmetric };
    let idmap = match req.idmap.unwrap_or(default_map) {
        IdMapArg::Symmetric => IdMap::Symmetric {
            symbolic_dims: req.symbolic_dims,
        },
        IdMapArg::Localization => IdMap::Localization {
            k: k.ok_or_else(|| PrismError::Usage("the localization map needs --k".into()))?,
            l,
        },
    };
    let mut notes = Vec::new();
    let mut equations = Vec::new();
    let mut counts = json!({});
    if let Some(csv) = req.config {
        equations.push(tpe::tpe_equation(ring, &TpConfig::parse(ring, csv)?, idmap)?);
    } else if family {
        let k = k.ok_or_else(|| PrismError::Usage("--family localization needs --k".into()))?;
        let input = localization_sets(ring, k)?;
        let s = match req.sprime {
            Some(csv) => input.check_subset(ring, &ring.parse_labels(csv)?)?,
            None => input
                .default_subset(&[k])
                .ok_or_else(|| PrismError::InvalidSubset("no multiplicity-free subset contains k".into()))?,
        };
        notes.push(format!("S' = {}", set_text(ring, &s)));
        let (triple, mixed, link) = tpe::localization_families(&s, k, l);
        for c in triple.iter().chain(&mixed).chain(link.iter()) {
            let e = tpe::tpe_equation(ring, c, idmap)?;
            if !e.is_tautology() && !equations.iter().any(|o: &tpe::TpeEquation| o.poly() == e.poly()) {
                equations.push(e);
            }
        }
    } else {
        let labels = match req.labels {
            Some(csv) => ring.parse_labels(csv)?,
            None => (0..ring.rank()).collect(),
        };
        let sys = tpe::tpe_system(ring, &labels, idmap)?;
        notes.push(format!("labels = {}", set_text(ring, &labels)));
        notes.push(format!(
            "{} admissible configurations, {} rotation classes, {} tautologies",
            sys.admissible, sys.classes, sys.tautologies
        ));
        counts = json!({ "admissible": sys.admissible, "classes": sys.classes, "tautologies": sys.tautologies });
        equations = sys.equations;
    }
    for e in &equations {
        notes.push(format!("({}): {e}", e.config.labels(ring).join(",")));
    }
    let polys: Vec<Expr> = equations.iter().map(|e| e.poly()).collect();
    let text = system_text(&polys, notes)?;
    let result = json!({
        "ring": ring.name(),
        "counts": counts,
        "equations": equations.iter().map(|e| json!({
            "config": e.config.labels(ring),
            "lhs": e.lhs.to_string(),
            "rhs": e.rhs.to_string(),
            "poly": e.poly().to_string(),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(result, text))
}

fn groebner_cmd<F: Field>(sys: &System<F>, order: MonomialOrder, cfg: &GbConfig) -> Result<Outcome, PrismError> {
    let ring = sys.ring.with_order(order);
    let polys: Vec<_> = sys.polys.iter().map(|p| p.reorder(&ring)).collect();
    let gb = groebner(&ring, &polys, cfg)?;
    let basis: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
    let qdim = gb.quotient_dimension();
    let stats = gb.stats();
    let mut text = String::new();
    for p in &basis {
        writeln!(text, "{p}").unwrap();
    }
    writeln!(text, "# {} elements, trivial: {}, quotient dimension: {qdim}", basis.len(), gb.is_trivial()).unwrap();
    let result = json!({
        "field": ring.field().spec().to_string(),
        "order": format!("{order:?}").to_lowercase(),
        "vars": ring.vars(),
        "basis": basis,
        "trivial": gb.is_trivial(),
        "quotient_dimension": match qdim { polyforge::QuotientDim::Finite(n) => json!(n), polyforge::QuotientDim::Infinite => json!("infinite") },
        "stats": {
            "pairs_considered": stats.pairs_considered,
            "pairs_reduced": stats.pairs_reduced,
            "zero_reductions": stats.zero_reductions,
            "term_ops": stats.term_ops,
            "primes": stats.primes,
        },
    });
    Ok(Outcome::ok(result, text))
}

fn catalog_cmd(action: &CatalogCmd) -> Result<(Input, Outcome), PrismError> {
    match action {
        CatalogCmd::List => {
            let mut text = String::new();
            let mut entries = Vec::new();
            for name in catalog::names() {
                let ring = catalog::catalog(name)?;
                writeln!(text, "{name:<8} rank {}", ring.rank()).unwrap();
                entries.push(json!({ "name": name, "rank": ring.rank(), "labels": ring.labels() }));
            }
            Ok((Input { bytes: Vec::new() }, Outcome::ok(json!({ "rings": entries }), text)))
        }
        CatalogCmd::Show { name } => {
            let doc = catalog::document(name)?;
            let value: Value = serde_json::from_str(doc).map_err(|e| PrismError::Malformed(e.to_string()))?;
            Ok((
                Input { bytes: doc.as_bytes().to_vec() },
                Outcome::ok(json!({ "name": name, "document": value }), doc.to_string()),
            ))
        }
    }
}
