use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use numsg::classify::{pf_pairing_check, ClassificationReport};
use numsg::constructions::{
    dilatation, duplication, gluing, DilatationSpec, DuplicationSpec, GluingSpec, IdealChoice,
};
use numsg::verify::{verify_corpus, Suite};
use numsg::{
    almost_canonical_ideals, canonical_ideal, classify, genus_tree, parse_generators, power_gaps,
    Error, NumericalSemigroup, RelativeIdeal,
};

#[derive(Parser)]
#[command(
    name = "numsg",
    version,
    about = "Numerical semigroups, almost canonical ideals and GAS classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a semigroup given by generators, e.g. "9,24,39,43,77".
    Classify(ClassifyArgs),
    /// List the almost canonical ideals with Frobenius number F(S).
    Ideals {
        gens: String,
        /// Accepted for clarity; almost canonical ideals are the only family listed.
        #[arg(long)]
        almost_canonical: bool,
    },
    /// Build a semigroup by gluing, numerical duplication or dilatation.
    Construct {
        #[command(subcommand)]
        kind: Construction,
        #[arg(long, global = true)]
        pretty: bool,
    },
    /// Print the semigroups of the genus tree matching every given filter.
    Search(SearchArgs),
    /// Run property suites over all semigroups up to a genus.
    Verify {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u16).range(1..))]
        max_genus: u16,
        /// core, ideals, equivalences, gas-mme, counting, constructions or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(required_unless_present = "fixtures")]
    gens: Option<String>,
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    #[arg(long)]
    pretty: bool,
    /// JSON-lines file of {"gens": [...], "expect": {...}} records to check.
    #[arg(long, conflicts_with = "gens")]
    fixtures: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construction {
    /// <a·S1, b·S2>.
    Gluing {
        s1: String,
        s2: String,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// S ⋈ᵇ I for one of the standard ideals I.
    Duplicate {
        gens: String,
        #[arg(long, value_enum)]
        ideal: IdealArg,
        #[arg(long)]
        b: i64,
    },
    /// S + a.
    Dilate {
        gens: String,
        #[arg(long)]
        a: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealArg {
    SMinusGenk,
    M,
    S,
    K,
}

impl From<IdealArg> for IdealChoice {
    fn from(a: IdealArg) -> Self {
        match a {
            IdealArg::SMinusGenk => IdealChoice::SMinusGenK,
            IdealArg::M => IdealChoice::M,
            IdealArg::S => IdealChoice::S,
            IdealArg::K => IdealChoice::K,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 8)]
    max_genus: usize,
    #[arg(long)]
    symmetric: Option<bool>,
    #[arg(long)]
    almost_symmetric: Option<bool>,
    #[arg(long)]
    gas: Option<bool>,
    #[arg(long)]
    nearly_gorenstein: Option<bool>,
    #[arg(long)]
    ggl: Option<bool>,
    #[arg(long)]
    canonical_reduction: Option<bool>,
    #[arg(long)]
    agl_level: Option<usize>,
    #[arg(long = "type")]
    semigroup_type: Option<usize>,
    #[arg(long)]
    limit: Option<usize>,
}

impl SearchArgs {
    fn matches(&self, r: &ClassificationReport) -> bool {
        let flag = |want: Option<bool>, got: bool| want.is_none_or(|w| w == got);
        flag(self.symmetric, r.symmetric)
            && flag(self.almost_symmetric, r.almost_symmetric)
            && flag(self.gas, r.gas)
            && flag(self.nearly_gorenstein, r.nearly_gorenstein)
            && flag(self.ggl, r.ggl)
            && flag(self.canonical_reduction, r.canonical_reduction)
            && self.agl_level.is_none_or(|l| l == r.agl_level)
            && self.semigroup_type.is_none_or(|t| t == r.semigroup_type)
    }
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmptyGenerators
            | Error::NonPositiveGenerator(_)
            | Error::GcdNotOne(_)
            | Error::TooLarge(_)
            | Error::Parse(_) => 2,
            Error::FullSemigroup => 3,
            ref e if e.is_construction_spec() => 4,
            Error::InternalInconsistency(_) => 5,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

type CliResult = std::result::Result<(), Failure>;

fn semigroup(literal: &str) -> Result<NumericalSemigroup, Error> {
    NumericalSemigroup::from_generators(&parse_generators(literal)?)
}

fn fmt_list(xs: &[i64]) -> String {
    let items: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn pretty(s: &NumericalSemigroup, r: &ClassificationReport) -> Result<String, Error> {
    let k = canonical_ideal(s)?;
    let gaps: Vec<String> = power_gaps(s)?
        .iter()
        .map(|p| {
            let prev = if p.n == 2 {
                "K".to_string()
            } else {
                format!("{}K", p.n - 1)
            };
            format!("{}K\\{prev} = {}", p.n, fmt_list(&p.elements))
        })
        .collect();
    let witness = match &r.gas_witness.failure_reason {
        None => "none".to_string(),
        Some(reason) => format!("{reason:?}"),
    };
    let lines = [
        format!("S = {s}"),
        format!(
            "frobenius {}  multiplicity {}  genus {}  type {}",
            r.frobenius, r.multiplicity, r.genus, r.semigroup_type
        ),
        format!("PF = {}", fmt_list(&r.pf)),
        format!("Ap(S) = {}", fmt_list(&r.apery)),
        format!("S = {}", RelativeIdeal::whole(s)),
        format!("K = {k}"),
        format!("2K\\K = {}", fmt_list(&r.two_k_gap)),
        format!(
            "powers: {}",
            if gaps.is_empty() {
                "2K = K".to_string()
            } else {
                gaps.join("; ")
            }
        ),
        format!("agl level {}", r.agl_level),
        format!(
            "symmetric {}  pseudo-symmetric {}  almost symmetric {}",
            r.symmetric, r.pseudo_symmetric, r.almost_symmetric
        ),
        format!(
            "gas {}  x = {:?}  failure {witness}",
            r.gas, r.gas_witness.generators_x
        ),
        format!(
            "nearly gorenstein {}  ggl {}{}  canonical reduction {}",
            r.nearly_gorenstein,
            r.ggl,
            r.ggl_x.map(|x| format!(" (x = {x})")).unwrap_or_default(),
            r.canonical_reduction
        ),
    ];
    Ok(lines.join("\n"))
}

/// The report plus derived fields that fixtures may also pin down.
fn fixture_view(s: &NumericalSemigroup, r: &ClassificationReport) -> Result<Value, Error> {
    let mut v = serde_json::to_value(r).expect("report serializes");
    let gaps: Vec<Value> = power_gaps(s)?
        .iter()
        .map(|p| json!([p.n, p.elements]))
        .collect();
    v["power_gaps"] = json!(gaps);
    v["second_type_gaps"] = json!(s.second_type_gaps()?);
    v["pf_pairing_check"] = json!(pf_pairing_check(s)?);
    Ok(v)
}

fn run_fixtures(path: &PathBuf, out: &mut impl Write) -> CliResult {
    let text = fs::read_to_string(path)?;
    let mut failures = 0;
    for (n, line) in text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
    {
        let record: Value = serde_json::from_str(line)
            .map_err(|e| Error::Parse(format!("fixture line {}: {e}", n + 1)))?;
        let gens: Vec<i64> = serde_json::from_value(record["gens"].clone())
            .map_err(|e| Error::Parse(format!("fixture line {}: {e}", n + 1)))?;
        let s = NumericalSemigroup::from_generators(&gens)?;
        let view = fixture_view(&s, &classify(&s)?)?;
        let mut mismatches = Vec::new();
        if let Some(expect) = record["expect"].as_object() {
            for (key, want) in expect {
                if view.get(key) != Some(want) {
                    mismatches.push(format!(
                        "{key}: expected {want}, got {}",
                        view.get(key).unwrap_or(&Value::Null)
                    ));
                }
            }
        }
        if mismatches.is_empty() {
            writeln!(out, "ok {s}")?;
        } else {
            failures += 1;
            writeln!(out, "FAIL {s}: {}", mismatches.join("; "))?;
        }
    }
    if failures > 0 {
        return Err(Failure {
            code: 5,
            message: format!("{failures} fixture(s) failed"),
        });
    }
    Ok(())
}

fn cmd_classify(args: &ClassifyArgs, out: &mut impl Write) -> CliResult {
    if let Some(path) = &args.fixtures {
        return run_fixtures(path, out);
    }
    let s = semigroup(args.gens.as_deref().unwrap_or_default())?;
    let r = classify(&s)?;
    if args.pretty {
        writeln!(out, "{}", pretty(&s, &r)?)?;
    } else {
        writeln!(out, "{}", r.to_json())?;
    }
    Ok(())
}

fn cmd_ideals(gens: &str, out: &mut impl Write) -> CliResult {
    let s = semigroup(gens)?;
    let family = almost_canonical_ideals(&s)?;
    for m in &family.members {
        writeln!(out, "{} type {}", m.ideal, m.ideal_type)?;
    }
    writeln!(out, "total {}", family.members.len())?;
    Ok(())
}

fn cmd_construct(kind: &Construction, as_pretty: bool, out: &mut impl Write) -> CliResult {
    let (t, construction, checked) = match kind {
        Construction::Gluing { s1, s2, a, b } => {
            let spec = GluingSpec {
                s1: semigroup(s1)?,
                s2: semigroup(s2)?,
                a: *a,
                b: *b,
            };
            let t = gluing(&spec)?;
            let c = json!({
                "kind": "gluing",
                "s1": spec.s1.generators(),
                "s2": spec.s2.generators(),
                "a": a,
                "b": b,
            });
            (
                t,
                c,
                vec![
                    "generators minimal",
                    "F(T) = aF1 + bF2 + ab",
                    "PF(T) = aPF1 + bPF2 + ab",
                    "t(T) = t1 t2",
                    "K(T) = aK1 + bK2",
                ],
            )
        }
        Construction::Duplicate { gens, ideal, b } => {
            let s = semigroup(gens)?;
            let choice = IdealChoice::from(*ideal);
            let i = choice.resolve(&s)?;
            let t = duplication(&DuplicationSpec {
                s: s.clone(),
                ideal: i.clone(),
                b: *b,
            })?;
            let c = json!({
                "kind": "duplication",
                "s": s.generators(),
                "ideal": choice,
                "ideal_set": i.to_string(),
                "b": b,
            });
            (
                t,
                c,
                vec![
                    "generators 2S, 2I + b",
                    "F(T) = 2F(I) + b",
                    "odd PF(T) = 2PF(I) + b",
                    "even PF(T) = 2((M - M) ∩ (I - I) \\ S)",
                ],
            )
        }
        Construction::Dilate { gens, a } => {
            let s = semigroup(gens)?;
            let t = dilatation(&DilatationSpec {
                s: s.clone(),
                a: *a,
            })?;
            let c = json!({ "kind": "dilatation", "s": s.generators(), "a": a });
            (t, c, vec!["F(S + a) = F(S) + a", "2K(S + a) = 2K(S)"])
        }
    };
    let r = classify(&t)?;
    if as_pretty {
        writeln!(out, "{}", pretty(&t, &r)?)?;
        writeln!(out, "construction {construction}")?;
        writeln!(out, "checked: {}", checked.join("; "))?;
    } else {
        let mut v = serde_json::to_value(&r).expect("report serializes");
        let mut construction = construction;
        construction["checked"] = json!(checked);
        v["construction"] = construction;
        writeln!(out, "{v}")?;
    }
    Ok(())
}

fn cmd_search(args: &SearchArgs, out: &mut impl Write) -> CliResult {
    let mut printed = 0;
    for s in genus_tree(args.max_genus)
        .iter()
        .filter(|s| !s.is_natural())
    {
        if args.limit.is_some_and(|l| printed >= l) {
            break;
        }
        let r = classify(s)?;
        if args.matches(&r) {
            writeln!(out, "{}", r.to_json())?;
            printed += 1;
        }
    }
    Ok(())
}

fn cmd_verify(
    max_genus: usize,
    suite: &str,
    threads: Option<usize>,
    out: &mut impl Write,
) -> CliResult {
    let suites = Suite::parse_selection(suite)?;
    let report = verify_corpus(max_genus, &suites, threads)?;
    out.write_all(report.to_json_lines().as_bytes())?;
    let n = report.summary.violations.len();
    if n > 0 {
        return Err(Failure {
            code: 5,
            message: format!("{n} violation(s)"),
        });
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Classify(args) => cmd_classify(args, &mut out),
        Command::Ideals { gens, .. } => cmd_ideals(gens, &mut out),
        Command::Construct { kind, pretty } => cmd_construct(kind, *pretty, &mut out),
        Command::Search(args) => cmd_search(args, &mut out),
        Command::Verify {
            max_genus,
            suite,
            threads,
        } => cmd_verify(usize::from(*max_genus), suite, *threads, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
