use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use duality::axioms::{
    check_alternate_axioms, check_basic_lattice, check_basic_semilattice,
    cofinality_counterexample, is_basic_lattice, is_basic_semilattice,
};
use duality::lab::criteria::{self, Outcome, CRITERIA};
use duality::lab::search::{search_counterexample, SUITES};
use duality::lab::GeneratorSpec;
use duality::saturation::{
    check_saturation_laws, saturated_family, verify_frame, Generators, QuadrupleScope,
    UNCONDITIONAL_LAWS,
};
use duality::spectrum::{
    separativity_chain, spectrum_space, spectrum_vs_stone, verify_pseudochar,
};
use duality::stone::{stone_space, verify_duality};
use duality::structure::{is_separative, order_predicates};
use duality::tight::{
    enveloping_algebra, factor_tight, map_properties, naturality_square, verify_fgrho, StructMap,
};
use duality::{Error, OrderTables, P0Set, Report};

// Stdout writes that tolerate a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

/// Checks finite order-theoretic dualities.
///
/// Exit status: 0 when every theorem-backed check holds, 1 when one fails,
/// 2 on malformed input or arguments.
#[derive(Parser, Debug)]
#[command(name = "dualcheck", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for sampled checks and random generation.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Largest structure accepted or generated.
    #[arg(long, default_value_t = 24, global = true)]
    max_size: usize,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum GeneratorMode {
    Singletons,
    Finite,
    All,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Axiom, semilattice and order-predicate reports.
    Check { input: PathBuf },
    /// Stone space of a basic lattice and the duality equations.
    Stone { input: PathBuf },
    /// Tight characters, spectrum and pseudobasis checks.
    Spectrum { input: PathBuf },
    /// Enveloping algebra; with --map, factor a representation through it.
    Envelope {
        input: PathBuf,
        /// JSON file `{"target": <structure>, "assignment": [..]}`.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Saturated family, frame verification and saturation laws.
    Saturate {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = GeneratorMode::Finite)]
        generators: GeneratorMode,
    },
    /// Run an acceptance criterion by number, or all of them.
    Verify { which: String },
    /// Emit structure files.
    Gen {
        #[command(subcommand)]
        what: GenKind,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for a counterexample to a registered implication.
    Search {
        /// Suite name; omit to list suites.
        suite: Option<String>,
        #[arg(long, default_value_t = 6)]
        bound: usize,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// A named family member.
    Family {
        name: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// A random structure.
    Random {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        reflexive: bool,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
    },
    /// Every structure of the given size, as a JSON array.
    Exhaustive {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        reflexive: bool,
    },
}

/// One titled report plus free-form lines. `decisive` sections decide the
/// exit status; the rest are classifications.
struct Section {
    report: Report,
    notes: Vec<String>,
    ok: bool,
}

impl Section {
    fn decisive(report: Report) -> Section {
        let ok = report.passed();
        Section {
            report,
            notes: Vec::new(),
            ok,
        }
    }

    fn informative(report: Report) -> Section {
        Section {
            report,
            notes: Vec::new(),
            ok: true,
        }
    }

    fn note(mut self, line: impl Into<String>) -> Section {
        self.notes.push(line.into());
        self
    }
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("dualcheck: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.verb {
        Verb::Check { input } => emit(cli, "check", check(&load(cli, input)?)?),
        Verb::Stone { input } => emit(cli, "stone", stone(&load(cli, input)?)?),
        Verb::Spectrum { input } => emit(cli, "spectrum", spectrum(&load(cli, input)?)?),
        Verb::Envelope { input, map } => {
            let b = load(cli, input)?;
            let beta = match map {
                Some(path) => Some(load_map(cli, &b, path)?),
                None => None,
            };
            emit(cli, "envelope", envelope(&b, beta.as_ref())?)
        }
        Verb::Saturate { input, generators } => {
            let mode = match generators {
                GeneratorMode::Singletons => Generators::Singletons,
                GeneratorMode::Finite => Generators::Finite,
                GeneratorMode::All => Generators::All,
            };
            emit(cli, "saturate", saturate(&load(cli, input)?, mode, cli.seed)?)
        }
        Verb::Verify { which } => verify(cli, which),
        Verb::Gen { what, out } => generate(cli, what, out.as_deref()),
        Verb::Search {
            suite,
            bound,
            budget,
        } => search(cli, suite.as_deref(), *bound, *budget),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn check_size(cli: &Cli, b: &P0Set) -> Result<(), Failure> {
    if b.size() > cli.max_size {
        return Err(Failure::Input(format!(
            "structure has {} elements, above --max-size {}",
            b.size(),
            cli.max_size
        )));
    }
    Ok(())
}

fn load(cli: &Cli, path: &Path) -> Result<P0Set, Failure> {
    let b = P0Set::from_json(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    check_size(cli, &b)?;
    Ok(b)
}

fn load_map(cli: &Cli, source: &P0Set, path: &Path) -> Result<StructMap, Failure> {
    let bad = |msg: String| Failure::Input(format!("{}: {msg}", path.display()));
    let value: Value = serde_json::from_str(&read(path)?).map_err(|e| bad(e.to_string()))?;
    let target = value
        .get("target")
        .ok_or_else(|| bad("missing \"target\"".into()))?;
    let target = P0Set::from_json(&target.to_string()).map_err(|e| bad(e.to_string()))?;
    check_size(cli, &target)?;
    let assignment: Vec<usize> = serde_json::from_value(
        value
            .get("assignment")
            .cloned()
            .ok_or_else(|| bad("missing \"assignment\"".into()))?,
    )
    .map_err(|e| bad(e.to_string()))?;
    StructMap::new(source.clone(), target, assignment).map_err(|e| bad(e.to_string()))
}

fn emit(cli: &Cli, verb: &str, sections: Vec<Section>) -> Result<bool, Failure> {
    let ok = sections.iter().all(|s| s.ok);
    match cli.format {
        Format::Text => {
            for s in &sections {
                out!("{}", s.report);
                for n in &s.notes {
                    outln!("  {n}");
                }
            }
            outln!("{}", if ok { "result: ok" } else { "result: FAILED" });
        }
        Format::Json => {
            let body: Vec<Value> = sections
                .iter()
                .map(|s| {
                    json!({
                        "title": s.report.title,
                        "verdicts": s.report,
                        "notes": s.notes,
                        "ok": s.ok,
                    })
                })
                .collect();
            let doc = json!({ "verb": verb, "ok": ok, "sections": body });
            outln!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        }
    }
    Ok(ok)
}

fn check(b: &P0Set) -> Result<Vec<Section>, Failure> {
    let mut out = vec![
        Section::informative(order_predicates(b)),
        Section::informative(check_basic_lattice(b)),
        Section::informative(check_basic_semilattice(b)),
    ];
    if OrderTables::new(b).is_lattice() && cofinality_counterexample(b).is_none() {
        out.push(Section::decisive(check_alternate_axioms(b)?));
    }
    Ok(out)
}

fn stone(b: &P0Set) -> Result<Vec<Section>, Failure> {
    if !is_basic_lattice(b) {
        let s = Section::decisive(check_basic_lattice(b))
            .note("not a basic lattice: no Stone space to build");
        return Ok(vec![s]);
    }
    let space = stone_space(b)?;
    let mut s = Section::decisive(verify_duality(b)?)
        .note(format!("{} ultrafilters", space.points()));
    for (i, u) in space.ultrafilters.iter().enumerate() {
        s = s.note(format!("point {i}: {u}"));
    }
    for x in 0..b.size() {
        s = s.note(format!("open of {}: {}", b.name(x), space.basic_open(x)));
    }
    Ok(vec![s])
}

fn spectrum(b: &P0Set) -> Result<Vec<Section>, Failure> {
    let space = spectrum_space(b)?;
    let mut overview = Section::decisive(space.report.clone())
        .note(format!("{} tight characters", space.characters.len()));
    for c in &space.characters.chars {
        overview = overview.note(format!("character {c}"));
    }
    let separative = is_separative(b);
    let pseudochar = verify_pseudochar(b)?;
    let pseudochar = if separative {
        Section::decisive(pseudochar)
    } else {
        Section::informative(pseudochar)
            .note("separative=false: injectivity failure is expected for non-separative structures")
    };
    let chain = separativity_chain(b);
    let chain_ok = chain.holds("chain_respected")
        && chain
            .get("semilattice_equivalence")
            .is_none_or(|v| v.holds || v.is_skipped());
    let chain = Section {
        report: chain,
        notes: Vec::new(),
        ok: chain_ok,
    };
    Ok(vec![
        overview,
        pseudochar,
        chain,
        Section::decisive(spectrum_vs_stone(b)?),
    ])
}

fn envelope(b: &P0Set, beta: Option<&StructMap>) -> Result<Vec<Section>, Failure> {
    let algebra = enveloping_algebra(b)?;
    let mut s = Section::decisive(algebra.verify())
        .note(format!("{} regular open sets", algebra.len()));
    for (i, e) in algebra.elements().iter().enumerate() {
        s = s.note(format!("element {i}: {e}"));
    }
    let mut out = vec![s, Section::decisive(verify_fgrho(b)?)];
    if let Some(beta) = beta {
        let props = map_properties(beta)?;
        let tightish = props.holds("tightish");
        let tight = props.holds("tight");
        out.push(Section::informative(props));
        if tightish {
            let f = factor_tight(beta)?;
            let values = f
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| format!("{i}->{v}"))
                .collect::<Vec<_>>()
                .join(" ");
            out.push(Section::decisive(f.report).note(format!("factor: {values}")));
            if tight && is_basic_semilattice(b) {
                out.push(Section::decisive(naturality_square(beta)?));
            }
        } else {
            let mut r = Report::new("factorization");
            r.push(duality::Verdict::skip("factors", "map is not tightish"));
            out.push(Section::informative(r));
        }
    }
    Ok(out)
}

fn saturate(b: &P0Set, mode: Generators, seed: u64) -> Result<Vec<Section>, Failure> {
    let family = saturated_family(b, mode)?;
    let mut listing = Report::new("saturated family");
    listing.push(duality::Verdict::pass("built"));
    let mut s = Section::informative(listing).note(format!("{} saturated sets", family.len()));
    for (i, set) in family.sets.iter().enumerate() {
        s = s.note(format!("set {i}: {set}"));
    }
    let mut out = vec![s];
    let basic = is_basic_semilattice(b);
    if basic {
        out.push(Section::decisive(verify_frame(b)?));
    }
    let scope = if b.size() <= 4 {
        QuadrupleScope::Exhaustive
    } else {
        QuadrupleScope::Sample {
            count: 20_000,
            seed,
        }
    };
    let laws = check_saturation_laws(b, scope)?;
    let ok = if basic {
        laws.passed()
    } else {
        UNCONDITIONAL_LAWS.iter().all(|l| laws.holds(l))
    };
    let mut laws = Section {
        report: laws,
        notes: Vec::new(),
        ok,
    };
    if !basic {
        laws = laws.note(format!(
            "not a basic semilattice: only {} are required",
            UNCONDITIONAL_LAWS.join(", ")
        ));
    }
    out.push(laws);
    Ok(out)
}

fn verify(cli: &Cli, which: &str) -> Result<bool, Failure> {
    let outcomes: Vec<Outcome> = if which == "all" {
        criteria::run_all()
    } else {
        let id: usize = which
            .parse()
            .map_err(|_| Failure::Input(format!("expected a criterion number or \"all\", got {which:?}")))?;
        if !CRITERIA.iter().any(|c| c.0 == id) {
            return Err(Failure::Input(format!("no criterion {id}")));
        }
        vec![criteria::run(id)?]
    };
    let ok = outcomes.iter().all(Outcome::passed);
    match cli.format {
        Format::Text => {
            for o in &outcomes {
                outln!("{o}");
            }
        }
        Format::Json => {
            let body: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "id": o.id,
                        "title": o.title,
                        "passed": o.passed(),
                        "holds": o.holds,
                        "elapsed_secs": o.elapsed.as_secs_f64(),
                        "limit_secs": o.limit.as_secs(),
                        "detail": o.detail,
                    })
                })
                .collect();
            outln!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
        }
    }
    Ok(ok)
}

fn generate(cli: &Cli, what: &GenKind, out: Option<&Path>) -> Result<bool, Failure> {
    let (spec, single) = match what {
        GenKind::Family { name, n } => (
            GeneratorSpec::Named {
                name: name.clone(),
                n: *n,
            },
            true,
        ),
        GenKind::Random {
            size,
            reflexive,
            density,
        } => (
            GeneratorSpec::Random {
                n: *size,
                seed: cli.seed,
                reflexive: *reflexive,
                density: *density,
            },
            true,
        ),
        GenKind::Exhaustive { size, reflexive } => (
            GeneratorSpec::Exhaustive {
                n: *size,
                reflexive_only: *reflexive,
            },
            false,
        ),
    };
    let structures = spec.generate()?;
    for b in &structures {
        check_size(cli, b)?;
    }
    let text = if single {
        structures[0].to_json()
    } else {
        let values: Vec<Value> = structures
            .iter()
            .map(|b| serde_json::from_str(&b.to_json()).expect("structure json"))
            .collect();
        serde_json::to_string_pretty(&values).expect("serializes")
    };
    match out {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => outln!("{text}"),
    }
    Ok(true)
}

fn search(cli: &Cli, suite: Option<&str>, bound: usize, budget: usize) -> Result<bool, Failure> {
    let Some(name) = suite else {
        for s in SUITES.iter() {
            outln!("{:<70} {}", s.name, s.summary);
        }
        return Ok(true);
    };
    let bound = bound.min(cli.max_size);
    let found = search_counterexample(name, bound, budget, cli.seed)?;
    match (cli.format, &found) {
        (Format::Text, None) => outln!("no counterexample to {name} up to size {bound}"),
        (Format::Text, Some(b)) => outln!("counterexample to {name}:\n{}", b.to_json()),
        (Format::Json, _) => {
            let ce = found
                .as_ref()
                .map(|b| serde_json::from_str::<Value>(&b.to_json()).expect("structure json"));
            let doc = json!({ "suite": name, "bound": bound, "counterexample": ce });
            outln!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
        }
    }
    Ok(found.is_none())
}
