use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use quandle_core::functors::{EquivalenceReport, Mode};
use quandle_core::grpgen::{enumerate_star_morphisms, DEFAULT_SUBSET_CAP};
use quandle_core::homs::{enumerate_homs, HomMode};
use quandle_core::perm::{recognize_dihedral, DEFAULT_CAP};
use quandle_core::quandle::check_axioms;
use quandle_tool::spec::{self, Object};
use quandle_tool::{format, json, parallel, DEFAULT_CORPUS};

#[derive(Parser)]
#[command(name = "quandle", version, about = "Finite quandles and their inner automorphism groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Which homomorphisms to consider.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::All)]
    mode: ModeArg,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the main output to a file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Cap on group orders and on subsets searched by star-homs.
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Rotates the search order of presentation recognition.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    All,
    Inj,
    Surj,
}

#[derive(Subcommand)]
enum Command {
    /// Build a quandle or genpair from a spec and write its file.
    Make { spec: Vec<String> },
    /// Check the axioms of a quandle, or the flags of a genpair.
    Check { input: Vec<String> },
    /// Order of Inn(Q) and whether it is dihedral.
    Inn { input: Vec<String> },
    /// Enumerate quandle homomorphisms.
    Homs { source: String, target: String },
    /// Enumerate star-morphisms between genpairs (quandles are read as Inn).
    StarHoms { source: String, target: String },
    /// Run the equivalence suite on a corpus of `;`-separated specs.
    Verify {
        #[arg(long, default_value = DEFAULT_CORPUS)]
        corpus: String,
    },
}

/// Exit statuses: success, failed verification, bad input.
const VERIFICATION_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(VERIFICATION_FAILED),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

impl Cli {
    fn cap(&self) -> usize {
        self.cap.unwrap_or(DEFAULT_CAP)
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Make { spec } => make(cli, &spec.join(" ")),
        Command::Check { input } => check(cli, &input.join(" ")),
        Command::Inn { input } => inn(cli, &input.join(" ")),
        Command::Homs { source, target } => homs(cli, source, target),
        Command::StarHoms { source, target } => star_homs(cli, source, target),
        Command::Verify { corpus } => verify(cli, corpus),
    }
}

fn make(cli: &Cli, spec: &str) -> Result<bool> {
    let object = spec::resolve(spec, cli.cap())?;
    let (text, summary) = match &object {
        Object::Quandle(q) => (
            format::write_quandle(q),
            format!(
                "order: {}\naxioms: ok\nfaithful: {}\n",
                q.order(),
                q.is_faithful()
            ),
        ),
        Object::GenPair(p) => (
            format::write_genpair(p),
            format!(
                "group order: {}\nomega: {}\nconj-stable: {}\nfaithful: {}\n",
                p.group().order(),
                p.omega().len(),
                p.is_conjugation_stable(),
                p.is_faithful()
            ),
        ),
    };
    cli.emit(&text)?;
    if cli.out.is_some() {
        print!("{summary}");
    } else {
        eprint!("{summary}");
    }
    Ok(true)
}

fn check(cli: &Cli, input: &str) -> Result<bool> {
    let path = std::path::Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        if format::is_quandle_text(&text) {
            let raw = format::parse_table(&text).with_context(|| input.to_string())?;
            let report = check_axioms(&raw.rows)?;
            if !report.is_empty() {
                println!("axioms: violated ({} instances)", report.violations.len());
                for v in report.violations.iter().take(10) {
                    println!("  {v:?}");
                }
                return Ok(false);
            }
        }
    }
    match spec::resolve(input, cli.cap())? {
        Object::Quandle(q) => {
            println!("order: {}", q.order());
            println!("axioms: ok");
            println!("faithful: {}", q.is_faithful());
        }
        Object::GenPair(p) => {
            println!("group order: {}", p.group().order());
            println!("omega: {}", p.omega().len());
            println!("generates: true");
            println!("conj-stable: {}", p.is_conjugation_stable());
            println!("faithful: {}", p.is_faithful());
        }
    }
    Ok(true)
}

fn inn(cli: &Cli, input: &str) -> Result<bool> {
    let q = spec::resolve_quandle(input, cli.cap())?;
    let pair = q.inn_with_cap(cli.cap())?;
    let dihedral = recognize_dihedral(pair.group(), cli.seed);
    if cli.json {
        let value = serde_json::json!({
            "schema": json::SCHEMA,
            "order": pair.group().order(),
            "symmetries": pair.omega().len(),
            "dihedral_n": dihedral.as_ref().map(|d| d.n),
        });
        cli.emit(&format!("{}\n", serde_json::to_string_pretty(&value)?))?;
    } else {
        let mut text = format!("|Inn(Q)|: {}\n|s(Q)|: {}\n", pair.group().order(), pair.omega().len());
        text.push_str(&match &dihedral {
            Some(d) => format!("dihedral-recognized: yes, n={}\n", d.n),
            None => "dihedral-recognized: no\n".to_string(),
        });
        cli.emit(&text)?;
    }
    Ok(true)
}

fn homs(cli: &Cli, source: &str, target: &str) -> Result<bool> {
    let q1 = std::sync::Arc::new(spec::resolve_quandle(source, cli.cap())?);
    let q2 = std::sync::Arc::new(spec::resolve_quandle(target, cli.cap())?);
    let mode = match cli.mode {
        ModeArg::All => HomMode::All,
        ModeArg::Inj => HomMode::Injective,
        ModeArg::Surj => HomMode::Surjective,
    };
    let found = enumerate_homs(&q1, &q2, mode);
    if cli.json {
        let value = json::homs(q1.order(), q2.order(), mode, &found);
        cli.emit(&format!("{}\n", serde_json::to_string(&value)?))?;
    } else {
        let mut text = format!("count: {}\n", found.len());
        for f in &found {
            let cells: Vec<String> = f.map().iter().map(|v| v.to_string()).collect();
            text.push_str(&cells.join(" "));
            text.push('\n');
        }
        cli.emit(&text)?;
    }
    Ok(true)
}

fn star_homs(cli: &Cli, source: &str, target: &str) -> Result<bool> {
    let src = std::sync::Arc::new(spec::resolve_genpair(source, cli.cap())?);
    let tgt = std::sync::Arc::new(spec::resolve_genpair(target, cli.cap())?);
    let found = enumerate_star_morphisms(&src, &tgt, cli.cap.unwrap_or(DEFAULT_SUBSET_CAP))?;
    if cli.json {
        let value = json::star_morphisms(src.group().order(), tgt.group().order(), &found);
        cli.emit(&format!("{}\n", serde_json::to_string(&value)?))?;
    } else {
        let subgroups: BTreeSet<&[quandle_core::Permutation]> = found.iter().map(|m| m.sub().elements()).collect();
        let mut text = format!("count: {}\nsubgroups: {}\n", found.len(), subgroups.len());
        for m in &found {
            let g = tgt.group();
            let gamma: Vec<String> = m.gamma().iter().map(|p| g.index_of(p).unwrap().to_string()).collect();
            let images: Vec<String> = m
                .gamma()
                .iter()
                .map(|p| src.group().index_of(m.apply(p).unwrap()).unwrap().to_string())
                .collect();
            text.push_str(&format!(
                "|H|={} gamma=[{}] -> [{}]\n",
                m.sub().order(),
                gamma.join(" "),
                images.join(" ")
            ));
        }
        cli.emit(&text)?;
    }
    Ok(true)
}

fn render(report: &EquivalenceReport) -> String {
    let mut text = format!("mode {}: {} instances\n", report.mode, report.instances.len());
    for (kind, passed, total) in report.summary() {
        text.push_str(&format!("  {:<18} {passed:>5} / {total:<5}\n", kind.name()));
    }
    for c in report.failures() {
        text.push_str(&format!("  FAIL {} {}: {}\n", c.kind, c.subject, c.detail));
    }
    text
}

fn verify(cli: &Cli, corpus: &str) -> Result<bool> {
    let members = corpus
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Ok((spec::display_name(s), spec::resolve_quandle(s, cli.cap())?)))
        .collect::<Result<Vec<_>>>()?;
    for (name, q) in &members {
        if !q.is_faithful() {
            bail!("corpus member {name} is not faithful");
        }
    }
    let modes: &[Mode] = match cli.mode {
        ModeArg::All => &[Mode::Injective, Mode::Surjective],
        ModeArg::Inj => &[Mode::Injective],
        ModeArg::Surj => &[Mode::Surjective],
    };
    let subset_cap = cli.cap.unwrap_or(DEFAULT_SUBSET_CAP);
    let mut reports = Vec::new();
    for &mode in modes {
        reports.push(parallel::verify_equivalence(&members, mode, subset_cap)?);
    }
    let passing = reports.iter().all(EquivalenceReport::is_passing);
    let body = if cli.json {
        let value = serde_json::json!({
            "schema": json::SCHEMA,
            "passed": passing,
            "reports": reports.iter().map(json::report).collect::<Vec<_>>(),
        });
        format!("{}\n", serde_json::to_string_pretty(&value)?)
    } else {
        let mut text: String = reports.iter().map(render).collect();
        text.push_str(if passing { "result: pass\n" } else { "result: FAIL\n" });
        text
    };
    cli.emit(&body)?;
    if cli.out.is_some() {
        println!("{}", if passing { "result: pass" } else { "result: FAIL" });
    }
    Ok(passing)
}
