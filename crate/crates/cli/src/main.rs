//! Command-line surface for the crystal/KKR toolkit.
//!
//! Exit codes: 0 success, 1 domain error (invalid configuration,
//! non-highest path), 2 parse/usage error, 3 self-test failure.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kkr::boxball::BoxBallState;
use kkr::crystal::TensorWord;
use kkr::rigged::RiggedConfiguration;
use kkr::selftest::{self, SuiteLevel};
use kkr::{classical, vertex, Error};

#[derive(Parser)]
#[command(name = "kkr", version, about = "Crystals, rigged configurations and box-ball systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a rigged configuration (JSON file) to its highest path.
    Rc2path(Rc2PathArgs),
    /// Map a highest path or box-ball state to its rigged configuration.
    Path2rc(Path2RcArgs),
    /// Box-ball experiments: evolve, scatter, action-angle.
    #[command(subcommand)]
    Bbs(BbsCommand),
    /// Run the built-in verification suites.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Vertex,
    Classical,
}

#[derive(Args)]
struct Rc2PathArgs {
    /// JSON file holding the rigged configuration (`-` for stdin).
    #[arg(long)]
    rc: String,
    #[arg(long, value_enum, default_value = "vertex")]
    engine: Engine,
    /// Override the rank, padding with empty levels.
    #[arg(long)]
    rank: Option<usize>,
    /// Print every intermediate word and mode assignment.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct Path2RcArgs {
    /// `*`-joined tensor word, e.g. `111*22*3*1*4*2*3`.
    #[arg(long, conflicts_with = "state")]
    path: Option<String>,
    /// Bare digit string over single boxes, e.g. `1111223214322`.
    #[arg(long)]
    state: Option<String>,
    #[arg(long, short = 'n')]
    rank: usize,
    /// Also print the plain-text diagram.
    #[arg(long)]
    ascii: bool,
}

#[derive(Subcommand)]
enum BbsCommand {
    /// Run `steps` time evolutions with the given carrier capacity.
    Evolve(BbsEvolveArgs),
    /// Print the soliton content and normal-ordered scattering data.
    Scatter(BbsScatterArgs),
    /// Track the configuration and riggings along a trace.
    ActionAngle(BbsActionAngleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Csv,
}

#[derive(Args)]
struct BbsEvolveArgs {
    #[arg(long)]
    state: String,
    #[arg(long, short = 'n')]
    rank: usize,
    #[arg(long)]
    carrier: u32,
    #[arg(long)]
    steps: u32,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
    /// Display width in boxes (defaults to the input width).
    #[arg(long)]
    width: Option<usize>,
}

#[derive(Args)]
struct BbsScatterArgs {
    #[arg(long)]
    state: String,
    #[arg(long, short = 'n')]
    rank: usize,
}

#[derive(Args)]
struct BbsActionAngleArgs {
    #[arg(long)]
    state: String,
    #[arg(long, short = 'n')]
    rank: usize,
    #[arg(long)]
    carrier: u32,
    #[arg(long)]
    steps: u32,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value = "quick")]
    level: String,
    /// Run only suites whose name contains this substring.
    #[arg(long)]
    filter: Option<String>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Rc2path(args) => cmd_rc2path(args),
        Command::Path2rc(args) => cmd_path2rc(args),
        Command::Bbs(cmd) => match cmd {
            BbsCommand::Evolve(args) => cmd_bbs_evolve(args),
            BbsCommand::Scatter(args) => cmd_bbs_scatter(args),
            BbsCommand::ActionAngle(args) => cmd_bbs_action_angle(args),
        },
        Command::Selftest(args) => cmd_selftest(args),
    }
}

fn load_rc(path: &str, rank: Option<usize>) -> Result<RiggedConfiguration, Error> {
    let text = if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(e.to_string()))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
    };
    let mut rc = RiggedConfiguration::from_json(&text)?;
    if let Some(n) = rank {
        if n < rc.levels.len() {
            return Err(Error::Parse(format!(
                "rank {} below the {} levels present",
                n,
                rc.levels.len()
            )));
        }
        rc.n = n;
        rc.levels.resize(n, kkr::rigged::Level::empty());
    }
    Ok(rc)
}

fn cmd_rc2path(args: Rc2PathArgs) -> Result<ExitCode, Error> {
    let rc = load_rc(&args.rc, args.rank)?;
    match args.engine {
        Engine::Classical => {
            let path = classical::rc_to_path(&rc)?;
            println!("{path}");
        }
        Engine::Vertex => {
            if args.trace {
                let run = vertex::run_to(&rc, 0)?;
                for stage in &run.stages {
                    println!("p^({}) = {}", stage.level, stage.input);
                    println!(
                        "C_{}   = {}   (modes {:?}, {} normal ordered form{})",
                        stage.level,
                        stage.chosen,
                        stage.ordering.modes,
                        stage.ordering.forms().len(),
                        if stage.ordering.forms().len() == 1 { "" } else { "s" }
                    );
                }
                println!("p = {}", run.path);
            } else {
                let path = vertex::rc_to_path(&rc)?;
                println!("{path}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_path2rc(args: Path2RcArgs) -> Result<ExitCode, Error> {
    let word: TensorWord = match (&args.path, &args.state) {
        (Some(p), None) => TensorWord::parse(p, args.rank, 0)?,
        (None, Some(s)) => BoxBallState::parse(s, args.rank)?.window().clone(),
        _ => return Err(Error::Parse("exactly one of --path/--state is required".into())),
    };
    let rc = classical::path_to_rc(&word)?;
    println!("{}", rc.to_json());
    if args.ascii {
        print!("{}", rc.render_ascii());
    }
    Ok(ExitCode::SUCCESS)
}

fn color_enabled() -> bool {
    std::env::var("KKR_COLOR").map(|v| v == "1").unwrap_or(false)
}

fn colorize(row: &str) -> String {
    // Letters above 1 cycle through ANSI foreground colors.
    let mut out = String::new();
    for c in row.chars() {
        match c {
            '1' => out.push(c),
            '2'..='9' => {
                let code = 31 + (c as u8 - b'2') % 6;
                out.push_str(&format!("\x1b[{code}m{c}\x1b[0m"));
            }
            _ => out.push(c),
        }
    }
    out
}

#[derive(Serialize)]
struct EvolveOutput {
    n: usize,
    carrier: u32,
    states: Vec<String>,
}

fn cmd_bbs_evolve(args: BbsEvolveArgs) -> Result<ExitCode, Error> {
    let state = BoxBallState::parse(&args.state, args.rank)?;
    let width = args.width.unwrap_or(state.len());
    let trace = state.evolve_trace(args.carrier, args.steps)?;
    match args.format {
        Format::Ascii => {
            for (t, st) in trace.iter().enumerate() {
                let row = st.render_window(width);
                let row = if color_enabled() { colorize(&row) } else { row };
                println!("t={t}: {row}");
            }
        }
        Format::Json => {
            let out = EvolveOutput {
                n: args.rank,
                carrier: args.carrier,
                states: trace.iter().map(|s| s.render_window(width)).collect(),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Csv => {
            println!("t,state");
            for (t, st) in trace.iter().enumerate() {
                println!("{t},{}", st.render_window(width));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bbs_scatter(args: BbsScatterArgs) -> Result<ExitCode, Error> {
    let state = BoxBallState::parse(&args.state, args.rank)?;
    let content = state.soliton_content()?;
    let data = state.scattering_data()?;
    println!("solitons: {content:?}");
    println!("scattering data: {data}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_bbs_action_angle(args: BbsActionAngleArgs) -> Result<ExitCode, Error> {
    let state = BoxBallState::parse(&args.state, args.rank)?;
    let report = state.action_angle_report(args.carrier, args.steps)?;
    match args.format {
        Format::Ascii => {
            for row in &report.rows {
                let levels: Vec<String> = (1..=row.rc.n)
                    .map(|a| format!("mu^({a})={:?} J^({a})={:?}", row.rc.mu(a), row.rc.riggings(a)))
                    .collect();
                println!("t={}: boxes={} {}", row.t, row.window_len, levels.join("  "));
            }
            for v in &report.violations {
                println!("violation: {v}");
            }
        }
        Format::Json | Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                t: u32,
                window_len: usize,
                rc: RiggedConfiguration,
            }
            #[derive(Serialize)]
            struct Out {
                carrier: u32,
                rows: Vec<Row>,
                violations: Vec<String>,
            }
            let out = Out {
                carrier: report.carrier,
                rows: report
                    .rows
                    .iter()
                    .map(|r| Row { t: r.t, window_len: r.window_len, rc: r.rc.clone() })
                    .collect(),
                violations: report.violations.clone(),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
    }
    if report.ok() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_selftest(args: SelftestArgs) -> Result<ExitCode, Error> {
    let level = match args.level.as_str() {
        "quick" => SuiteLevel::Quick,
        "full" => SuiteLevel::Full,
        other => return Err(Error::Parse(format!("unknown level {other:?}"))),
    };
    let outcomes = selftest::run(level, args.filter.as_deref());
    if outcomes.is_empty() {
        return Err(Error::Parse("no check matches the filter".into()));
    }
    let mut all_ok = true;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("{status} {:<26} {:>6} ms  {}", o.name, o.millis, o.detail);
        all_ok &= o.passed;
    }
    if all_ok {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(3))
    }
}
