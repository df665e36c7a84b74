mod config;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};

use qaffine::algebra::{chevalley_generators, GeneratorOptions};
use qaffine::fock::FockBasis;
use qaffine::io::{resolve_generator, write_coo, GeneratorId};
use qaffine::verify::{Workspace, CATALOG, SUITES};

use config::{ConfigError, ConfigFlags, QSpec, RunConfig};
use report::{Report, Run};

#[derive(Parser)]
#[command(name = "qaffine", version, about = "Verify oscillator and anyon realizations of affine superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run relation suites and write JSON and markdown reports
    Verify {
        #[command(flatten)]
        flags: ConfigFlags,
        /// Suite to run (repeatable); all suites by default
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// flip-q-alpha, drop-affine-delta or flip-disorder-sign (repeatable)
        #[arg(long = "negative-control")]
        controls: Vec<String>,
        /// Extra runs at random nu drawn from (0.05, 0.45)
        #[arg(long)]
        random_q: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "report.json")]
        json: PathBuf,
        #[arg(long, default_value = "report.md")]
        markdown: PathBuf,
    },
    /// Write one generator in coordinate-list form
    Export {
        /// E+:a, E-:a, H:a, CW:<root>:m=<k> or CWH:<a>:m=<k>
        id: String,
        #[command(flatten)]
        flags: ConfigFlags,
        /// Use the undeformed generators
        #[arg(long)]
        undeformed: bool,
        /// Output file; stdout when absent
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the suites and relation ids
    List {
        #[arg(long)]
        json: bool,
    },
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<ConfigError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<qaffine::Error>() {
        Some(qaffine::Error::TooLarge { .. }) => 3,
        Some(qaffine::Error::Config(_)) => 2,
        _ => 4,
    }
}

fn verify(cfg: &RunConfig, json: &PathBuf, markdown: &PathBuf) -> anyhow::Result<bool> {
    let mut samples = vec![("base".to_string(), cfg.q.clone())];
    let mut rng = rand::rngs::StdRng::seed_from_u64(cfg.seed);
    for i in 0..cfg.random_q {
        let nu: f64 = rng.gen_range(0.05..0.45);
        samples.push((format!("random-{i}"), QSpec::Nu(nu)));
    }
    let mut runs = Vec::new();
    for (label, q) in samples {
        let mut rc = cfg.clone();
        rc.q = q.clone();
        let lattice = rc.lattice();
        lattice.validate()?;
        let ws = Workspace::with_controls(&lattice, cfg.negative_controls)?;
        let mut relations = Vec::new();
        for s in &cfg.suites {
            log::info!("{label}: running suite {s}");
            relations.extend(ws.run_suite(s)?);
        }
        runs.push(Run::new(label, q, relations));
    }
    let report = Report::new(cfg, runs);
    fs::write(json, serde_json::to_string_pretty(&report)?).with_context(|| format!("writing {}", json.display()))?;
    fs::write(markdown, report.markdown()).with_context(|| format!("writing {}", markdown.display()))?;
    let t = report.tally;
    println!("{} passed, {} failed, {} not applicable", t.pass, t.fail, t.not_applicable);
    Ok(report.all_pass())
}

fn export(cfg: &RunConfig, id: &str, undeformed: bool, output: Option<&PathBuf>) -> anyhow::Result<()> {
    let gid = GeneratorId::parse(id)?;
    let lattice = cfg.lattice();
    let basis = FockBasis::new(&lattice)?;
    let opts = if undeformed { GeneratorOptions::undeformed() } else { GeneratorOptions::deformed() };
    let set = chevalley_generators(&basis, &opts)?;
    let op = resolve_generator(&gid, &basis, &set)?;
    match output {
        Some(p) => write_coo(&op, std::io::BufWriter::new(fs::File::create(p)?))?,
        None => write_coo(&op, std::io::stdout().lock())?,
    }
    Ok(())
}

fn list(json: bool) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    if json {
        let entries: Vec<_> = CATALOG
            .iter()
            .map(|e| serde_json::json!({"id": e.id, "tag": e.tag, "suite": e.suite, "description": e.description}))
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&entries)?)?;
        return Ok(());
    }
    for suite in SUITES {
        writeln!(out, "{suite}")?;
        for e in CATALOG.iter().filter(|e| e.suite == *suite) {
            writeln!(out, "  {:<24} {:<14} {}", e.id, e.tag, e.description)?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Verify { flags, suites, controls, random_q, seed, json, markdown } => {
            let cfg = RunConfig::resolve(&flags, &suites, &controls, random_q, seed)?;
            cfg.lattice().validate()?;
            Ok(if verify(&cfg, &json, &markdown)? { 0 } else { 1 })
        }
        Command::Export { id, flags, undeformed, output } => {
            let cfg = RunConfig::resolve(&flags, &[], &[], None, None)?;
            cfg.lattice().validate()?;
            export(&cfg, &id, undeformed, output.as_ref())?;
            Ok(0)
        }
        Command::List { json } => list(json).map(|_| 0),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
