//! Command-line front end. `run` parses arguments, dispatches and returns the
//! process exit code: 0 success, 2 counterexample or failed check, 3 budget
//! exceeded, 4 bad input, 1 anything else.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use design_ideals::budget;
use design_ideals::combin::Combinations;
use design_ideals::designs::{
    affine_design, complete_design, fano, projective_design, read_design, strength, write_design, Design,
};
use design_ideals::gamma::{
    auto_family, certify, check_certificate, coset_basis_rank, generators_hash, reproduce_row,
    zero_set_check, CertifyOptions, FamilySpec, GammaCertificate, ParentValues, TABLE,
};
use design_ideals::poly::{elementary_symmetric, octagon_cover, GeneratorSet, MultilinearPoly};
use design_ideals::sts::{
    build_2v32, complete_partial_sts, parse_points, parse_trade, pasch_count, sts, PartialTripleSystem,
};
use design_ideals::witt::{witt10, witt11, witt12, witt22, witt23, witt24};
use design_ideals::{Error, PointSet};

#[derive(Parser, Debug)]
#[command(name = "design-ideals", version, about = "Vanishing ideals of combinatorial designs")]
pub struct Cli {
    /// Worker threads for zero-set scans (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Enumeration budget; overrides DESIGN_IDEALS_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a design and write it in the canonical text format.
    Construct(ConstructArgs),
    /// Certify gamma1 and bounds on gamma2; writes a JSON certificate.
    Gamma(GammaArgs),
    /// Run the zero-set check for a generator family or file.
    Verify(VerifyArgs),
    /// Recompute the (gamma1, gamma2) table for the Witt chain and friends.
    ReproduceTable(TableArgs),
    /// Re-validate every claim of a stored certificate.
    CheckCertificate(CheckArgs),
    /// Write the generator set of a family in the text format.
    Generators(GeneratorsArgs),
    /// Steiner triple system tools.
    #[command(subcommand)]
    Sts(StsCommand),
    /// Rank of the block evaluation matrix of a polynomial list (coordinate-ring basis test).
    CosetRank(CosetArgs),
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// witt24, witt23, witt22, witt12, witt11, witt10, fano, pg, ag, sts, complete, 2v32
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub v: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub e: Option<usize>,
    #[arg(long)]
    pub q: Option<u64>,
    /// Dimension for `ag`.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub trade: Option<PathBuf>,
    /// Block of T2 to drop, in the trade file's index base.
    #[arg(long, alias = "drop-block")]
    pub drop: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// gY, steiner, partial, symbibd, projective, witt24, witt23, witt22, m12orbit, octagon, derived
    #[arg(long)]
    pub family: Option<String>,
    /// Generator file; selects the custom family.
    #[arg(long)]
    pub generators: Option<PathBuf>,
    /// Strength for steiner / partial (default: computed).
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub e: Option<usize>,
    #[arg(long)]
    pub q: Option<u64>,
    /// Number of octagon polynomials.
    #[arg(long, default_value_t = 5)]
    pub count: usize,
    /// Point fixed by `derived` (parent family m12orbit).
    #[arg(long, default_value_t = 0)]
    pub point: usize,
}

#[derive(Args, Debug)]
pub struct GammaArgs {
    #[arg(long)]
    pub design: PathBuf,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Non-block to try for a linearization certificate (0-indexed); repeatable.
    #[arg(long)]
    pub candidate: Vec<String>,
    /// Known values of a parent design, `name:gamma1:gamma2`.
    #[arg(long)]
    pub parent: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub design: PathBuf,
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Args, Debug)]
pub struct GeneratorsArgs {
    #[arg(long)]
    pub design: PathBuf,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// A single row: witt24, witt23, witt22, pg24, witt12, witt11, witt10, sts9.
    #[arg(long)]
    pub row: Option<String>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub certificate: PathBuf,
    /// Design file; defaults to the built-in design named in the certificate.
    #[arg(long)]
    pub design: Option<PathBuf>,
    #[arg(long)]
    pub generators: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum StsCommand {
    /// Embed a trade into a 2-(v,3,2) design missing one block of T2.
    #[command(name = "build-2v32")]
    Build2v32(Build2v32Args),
    /// Complete a partial triple system to an STS(v).
    Complete(CompleteArgs),
    /// Count Pasch configurations.
    Pasch(PaschArgs),
}

#[derive(Args, Debug)]
pub struct Build2v32Args {
    #[arg(long)]
    pub trade: PathBuf,
    #[arg(long, alias = "drop")]
    pub drop_block: String,
    #[arg(long)]
    pub v: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CompleteArgs {
    /// One triple per line; an optional `base 1` line switches to 1-indexed points.
    #[arg(long)]
    pub partial: PathBuf,
    #[arg(long)]
    pub v: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PaschArgs {
    #[arg(long, conflicts_with = "v")]
    pub design: Option<PathBuf>,
    /// Use the built-in STS(v).
    #[arg(long)]
    pub v: Option<usize>,
}

#[derive(Args, Debug)]
pub struct CosetArgs {
    #[arg(long)]
    pub design: PathBuf,
    /// Use x^{B,j} for every block B.
    #[arg(long, conflicts_with = "monomial_degree")]
    pub block_degree: Option<usize>,
    /// Use every monomial of this degree.
    #[arg(long)]
    pub monomial_degree: Option<usize>,
}

#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Usage(String),
    /// A check ran and came out negative.
    Negative(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(e) => match e {
                Error::ZeroSet { .. } => 2,
                Error::BudgetExceeded { .. } => 3,
                Error::InvalidInput(_)
                | Error::Parse { .. }
                | Error::UnsupportedField { .. }
                | Error::MissingTrivialGenerators
                | Error::Dimension(_)
                | Error::Io(_)
                | Error::Json(_) => 4,
                _ => 1,
            },
            Failure::Usage(_) => 4,
            Failure::Negative(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Usage(m) | Failure::Negative(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Core(Error::Io(e))
    }
}

type CliResult = std::result::Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 4;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    if let Some(b) = cli.budget {
        budget::set_budget(b);
    }
    if let Some(n) = cli.threads {
        // a second call in the same process (tests) keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Construct(a) => cmd_construct(&a, out, err),
        Command::Gamma(a) => cmd_gamma(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::ReproduceTable(a) => cmd_reproduce_table(&a, out),
        Command::CheckCertificate(a) => cmd_check_certificate(&a, out),
        Command::Generators(a) => {
            let design = read_design(&a.design)?;
            let (family, custom) = family_spec(&a.family, &design)?;
            let spec = match family {
                Some(f) => f,
                None => auto_family(&design)?,
            };
            let text = spec.build(&design, custom.as_ref())?.to_text();
            match &a.output {
                Some(p) => fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(())
        }
        Command::Sts(StsCommand::Build2v32(a)) => {
            let (design, dropped) = build_from_trade(&a.trade, &a.drop_block, a.v, a.seed)?;
            writeln!(
                err,
                "dropped block: {}",
                dropped.to_vec().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
            )?;
            emit_design(&design, a.output.as_deref(), out, err)
        }
        Command::Sts(StsCommand::Complete(a)) => {
            let partial = read_partial(&a.partial)?;
            let design = complete_partial_sts(&partial, a.v, a.seed)?;
            emit_design(&design, a.output.as_deref(), out, err)
        }
        Command::Sts(StsCommand::Pasch(a)) => {
            let design = match (&a.design, a.v) {
                (Some(p), _) => read_design(p)?,
                (None, Some(v)) => sts(v)?,
                (None, None) => return Err(usage("give --design or --v")),
            };
            writeln!(out, "{}", pasch_count(&design)?)?;
            Ok(())
        }
        Command::CosetRank(a) => cmd_coset_rank(&a, out),
    }
}

/// Built-in designs addressable by name.
pub fn builtin_design(name: &str) -> Option<Design> {
    let d = match name {
        "witt24" => witt24(),
        "witt23" => witt23(),
        "witt22" => witt22(),
        "witt12" => witt12().ok()?,
        "witt11" => witt11().ok()?,
        "witt10" => witt10(),
        "fano" => fano(),
        _ => return None,
    };
    Some(d)
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> std::result::Result<T, Failure> {
    value.ok_or_else(|| usage(format!("family {family} needs --{flag}")))
}

fn cmd_construct(a: &ConstructArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let f = a.family.as_str();
    let design = match f {
        "pg" => projective_design(need(a.d, "d", f)?, need(a.e, "e", f)?, need(a.q, "q", f)?)?,
        "ag" => affine_design(a.n.unwrap_or(2), need(a.q, "q", f)?)?,
        "sts" => sts(need(a.v, "v", f)?)?,
        "complete" => complete_design(need(a.v, "v", f)?, need(a.k, "k", f)?)?,
        "2v32" => {
            let trade = need(a.trade.as_ref(), "trade", f)?;
            let drop = need(a.drop.as_ref(), "drop", f)?;
            let (design, dropped) = build_from_trade(trade, drop, need(a.v, "v", f)?, a.seed)?;
            let pts: Vec<String> = dropped.iter().map(|p| p.to_string()).collect();
            writeln!(err, "dropped block: {}", pts.join(" "))?;
            design
        }
        _ => builtin_design(f).ok_or_else(|| usage(format!("unknown family {f:?}")))?,
    };
    emit_design(&design, a.output.as_deref(), out, err)
}

fn build_from_trade(
    path: &Path,
    drop: &str,
    v: usize,
    seed: u64,
) -> std::result::Result<(Design, PointSet), Failure> {
    let (trade, one_based) = parse_trade(&fs::read_to_string(path)?)?;
    let points = parse_points(drop, one_based).map_err(usage)?;
    let built = build_2v32(&trade, &PointSet::from_points(points), v, seed)?;
    Ok((built.design, built.dropped))
}

fn read_partial(path: &Path) -> std::result::Result<PartialTripleSystem, Failure> {
    let text = fs::read_to_string(path)?;
    let mut one_based = false;
    let mut triples = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(b) = line.strip_prefix("base") {
            one_based = b.trim() == "1";
            continue;
        }
        triples.push(PointSet::from_points(parse_points(line, one_based).map_err(usage)?));
    }
    Ok(PartialTripleSystem::new(triples)?)
}

fn emit_design(
    design: &Design,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let params = strength(design, design.k())?;
    let summary = format!(
        "v {} k {} blocks {} strength {}-({},{},{})",
        design.v(),
        design.k(),
        design.num_blocks(),
        params.t,
        design.v(),
        design.k(),
        params.lambda
    );
    match output {
        Some(p) => {
            fs::write(p, write_design(design))?;
            writeln!(out, "{summary}")?;
        }
        None => {
            out.write_all(write_design(design).as_bytes())?;
            writeln!(err, "{summary}")?;
        }
    }
    Ok(())
}

fn read_generators(path: &Path) -> std::result::Result<GeneratorSet, Failure> {
    Ok(GeneratorSet::parse(&fs::read_to_string(path)?)?)
}

/// The family selected on the command line, or `None` for automatic choice.
fn family_spec(
    a: &FamilyArgs,
    design: &Design,
) -> std::result::Result<(Option<FamilySpec>, Option<GeneratorSet>), Failure> {
    if let Some(path) = &a.generators {
        if a.family.as_deref().is_some_and(|f| f != "custom") {
            return Err(usage("--generators selects the custom family; drop --family"));
        }
        let set = read_generators(path)?;
        return Ok((Some(FamilySpec::Custom { sha256: generators_hash(&set) }), Some(set)));
    }
    let Some(name) = a.family.as_deref() else {
        return Ok((None, None));
    };
    let t_or_strength = |t: Option<usize>| -> std::result::Result<usize, Failure> {
        match t {
            Some(t) => Ok(t),
            None => Ok(strength(design, design.k())?.t),
        }
    };
    let spec = match name {
        "gY" | "gy" => FamilySpec::GY,
        "steiner" => FamilySpec::Steiner { t: t_or_strength(a.t)? },
        "partial" => {
            let t = match a.t {
                Some(t) => t,
                None => design.max_intersection().map_or(1, |m| m + 1),
            };
            FamilySpec::Partial { t }
        }
        "symbibd" => FamilySpec::Symbibd,
        "projective" => FamilySpec::Projective {
            d: need(a.d, "d", name)?,
            e: need(a.e, "e", name)?,
            q: need(a.q, "q", name)?,
        },
        "witt24" => FamilySpec::Witt24,
        "witt23" => FamilySpec::Witt23,
        "witt22" => FamilySpec::Witt22,
        "m12orbit" => FamilySpec::M12Orbit,
        "octagon" => FamilySpec::Octagon { specs: octagon_cover(design, a.count)? },
        "derived" => FamilySpec::Derived { point: a.point, parent: Box::new(FamilySpec::M12Orbit) },
        "custom" => return Err(usage("the custom family needs --generators")),
        _ => return Err(usage(format!("unknown generator family {name:?}"))),
    };
    Ok((Some(spec), None))
}

fn parse_parent(text: &str) -> std::result::Result<ParentValues, Failure> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || usage(format!("--parent expects name:gamma1:gamma2, got {text:?}"));
    match parts.as_slice() {
        [name, g1, g2] => Ok(ParentValues {
            name: name.to_string(),
            gamma1: g1.parse().map_err(|_| bad())?,
            gamma2: g2.parse().map_err(|_| bad())?,
        }),
        _ => Err(bad()),
    }
}

fn cmd_gamma(a: &GammaArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let design = read_design(&a.design)?;
    let (family, custom) = family_spec(&a.family, &design)?;
    let candidates = if a.candidate.is_empty() {
        None
    } else {
        let sets = a
            .candidate
            .iter()
            .map(|c| parse_points(c, false).map(PointSet::from_points).map_err(usage))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Some(sets)
    };
    let parent = a.parent.as_deref().map(parse_parent).transpose()?;
    let opts = CertifyOptions { family, custom, candidates, parent, seed: a.seed };
    let cert = certify(&design, &opts)?;
    let json = cert.to_json();
    match &a.output {
        Some(p) => fs::write(p, format!("{json}\n"))?,
        None => writeln!(out, "{json}")?,
    }
    let show = |v: Option<usize>, lo: usize, hi: Option<usize>| match v {
        Some(v) => v.to_string(),
        None => format!("[{lo}, {}]", hi.map_or("?".to_string(), |h| h.to_string())),
    };
    writeln!(
        err,
        "gamma1 {} gamma2 {}",
        show(cert.gamma1.value, cert.gamma1.lower, cert.gamma1.upper),
        show(cert.gamma2.value, cert.gamma2.lower.value, Some(cert.gamma2.upper.value))
    )?;
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let design = read_design(&a.design)?;
    let (family, custom) = family_spec(&a.family, &design)?;
    let spec = family.ok_or_else(|| usage("give --family or --generators"))?;
    let set = spec.build(&design, custom.as_ref())?;
    let report = zero_set_check(&design, &set)?;
    writeln!(out, "{}", serde_json::to_string_pretty(&report).map_err(Error::from)?)?;
    writeln!(out, "{} ({} generators, max degree {})", report.verdict.name(), set.len(), set.max_degree())?;
    if report.is_exact() {
        Ok(())
    } else {
        Err(Failure::Negative(format!("zero set is not exactly the blocks: {}", report.verdict.name())))
    }
}

fn cmd_reproduce_table(a: &TableArgs, out: &mut dyn Write) -> CliResult {
    let keys: Vec<&str> = match &a.row {
        Some(r) => vec![r.as_str()],
        None => TABLE.iter().map(|r| r.key).collect(),
    };
    let mut bad = Vec::new();
    for key in keys {
        let row = reproduce_row(key)?;
        let show = |x: Option<usize>| x.map_or("?".to_string(), |v| v.to_string());
        writeln!(
            out,
            "{:<7} {:<11} expected ({},{}) got ({},{}) {}",
            row.row.key,
            row.row.params,
            row.row.gamma1,
            row.row.gamma2,
            show(row.gamma1),
            show(row.gamma2),
            if row.matches() { "ok" } else { "MISMATCH" }
        )?;
        if !row.matches() {
            bad.push(key.to_string());
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Negative(format!("rows not reproduced: {}", bad.join(", "))))
    }
}

fn cmd_check_certificate(a: &CheckArgs, out: &mut dyn Write) -> CliResult {
    let cert = GammaCertificate::from_json(&fs::read_to_string(&a.certificate)?)?;
    let design = match &a.design {
        Some(p) => read_design(p)?,
        None => builtin_design(&cert.design.name)
            .ok_or_else(|| usage(format!("no built-in design {:?}; pass --design", cert.design.name)))?,
    };
    let custom = a.generators.as_deref().map(read_generators).transpose()?;
    let fails = check_certificate(&cert, &design, custom.as_ref())?;
    if fails.is_empty() {
        writeln!(out, "valid")?;
        return Ok(());
    }
    writeln!(out, "invalid")?;
    for f in &fails {
        writeln!(out, "{}: {}", f.path, f.message)?;
    }
    Err(Failure::Negative(format!("{} claim(s) failed", fails.len())))
}

fn cmd_coset_rank(a: &CosetArgs, out: &mut dyn Write) -> CliResult {
    let design = read_design(&a.design)?;
    let v = design.v();
    let polys: Vec<MultilinearPoly> = match (a.block_degree, a.monomial_degree) {
        (Some(j), _) => design.blocks().iter().map(|b| elementary_symmetric(v, b, j)).collect(),
        (None, Some(s)) => {
            budget::check(design_ideals::combin::binomial(v as u64, s as u64))?;
            Combinations::new(v, s)
                .map(|m| {
                    MultilinearPoly::monomial(v, PointSet::from_points(m), design_ideals::exactla::rat(1))
                })
                .collect()
        }
        (None, None) => return Err(usage("give --block-degree or --monomial-degree")),
    };
    let r = coset_basis_rank(&design, &polys)?;
    let b = design.num_blocks();
    let verdict = if r == b && r == polys.len() { "basis" } else { "not a basis" };
    writeln!(out, "rank {r} blocks {b} polynomials {}: {verdict}", polys.len())?;
    Ok(())
}
