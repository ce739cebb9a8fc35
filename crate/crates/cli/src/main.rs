//! Command-line surface: parsing and rewriting words, validating and
//! converting movies and charts, invariants, chart moves, bounded
//! equivalence search and SVG rendering.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation failure, 3 search
//! bound exhausted. Machine-readable results go to stdout, diagnostics
//! to stderr.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bmw_chart::chart_moves::{
    applicable_moves, apply_chart_move, equivalent_bounded, MoveInstance, MoveKind, MoveOptions,
    SearchOptions, SearchOutcome,
};
use bmw_chart::chart_movie::ChartMovie;
use bmw_chart::converters::{
    chart_graph_to_movie, movie_to_chart_graph, surface_invariants, ChartGraph,
};
use bmw_chart::render::{render_svg, RenderInput, RenderSpec, RenderTarget};
use bmw_chart::word_algebra::{
    apply_rule, enumerate_rule_applications, expand_derived_rule, verify_move_script, Direction,
    Rule, RuleCategory, Sign, Word,
};

#[derive(Parser)]
#[command(
    name = "bmwchart",
    version,
    about = "Tangle words, leveled charts and chart moves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse words and print their canonical text, one per line.
    Parse {
        /// Word text; reads stdin (or --file) when omitted. Lines
        /// starting with `#` are comments.
        text: Option<String>,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Validate a movie file and print the report.
    Validate { movie: PathBuf },
    /// Apply one rule to a word, or list applicable rules with --list.
    Rewrite {
        text: String,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long)]
        pos: Option<usize>,
        #[arg(long, default_value = "fwd")]
        dir: String,
        /// List applicable rule applications instead of rewriting.
        #[arg(long)]
        list: bool,
        /// Comma-separated categories for --list:
        /// band,disk,isotopy-regular,isotopy-ri.
        #[arg(long)]
        categories: Option<String>,
    },
    /// Expand a derived rule into its primitive-move script and verify it.
    Expand {
        /// Rule tag, D15..D24.
        tag: String,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        rule: RuleArgs,
    },
    /// Convert a movie file to its planar chart file.
    ChartFromMovie {
        movie: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a chart file back to a movie file.
    MovieFromChart {
        chart: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the surface invariants of a movie.
    Invariants { movie: PathBuf },
    /// List applicable chart moves, or replay a move log with --apply-log.
    Moves {
        movie: PathBuf,
        /// Comma-separated move kinds (ci-loop, ci-commute,
        /// ci-white-cancel, cii, ciii, tangle-b, tangle-c).
        #[arg(long)]
        kinds: Option<String>,
        #[arg(long, default_value_t = 8)]
        window: usize,
        #[arg(long)]
        b2prime: bool,
        /// Apply the JSON-line move log to the movie.
        #[arg(long)]
        apply_log: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Breadth-first search for a chart-move witness between two movies.
    Search {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long, default_value_t = 8)]
        window: usize,
        #[arg(long)]
        b2prime: bool,
    },
    /// Render a movie or chart file to SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// chart | strip
        #[arg(long, default_value = "chart")]
        target: String,
        #[arg(long, default_value_t = 320.0)]
        scale: f64,
        #[arg(long)]
        no_labels: bool,
    },
}

#[derive(Args)]
struct RuleArgs {
    #[arg(long)]
    rule: Option<String>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    power: Option<i64>,
}

enum Failure {
    Usage(String),
    Invalid(String),
    Exhausted(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Exhausted(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) | Failure::Exhausted(m) => m,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn invalid<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Invalid(e.to_string())
}

fn diag(message: &str) {
    if std::env::var_os("NO_COLOR").is_some() {
        eprintln!("error: {message}");
    } else {
        eprintln!("\x1b[31merror:\x1b[0m {message}");
    }
}

/// Print one line to stdout; a closed pipe ends output quietly.
fn emit(line: std::fmt::Arguments<'_>) -> bool {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").is_ok()
}

macro_rules! out {
    ($($arg:tt)*) => {
        if !emit(format_args!($($arg)*)) {
            return Ok(());
        }
    };
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version requests are successes, bad flags are not
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            diag(failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_movie(path: &Path) -> Result<ChartMovie, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_chart(path: &Path) -> Result<ChartGraph, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write_out(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            if !emit(format_args!("{content}")) {
                return Ok(());
            }
            Ok(())
        }
    }
}

fn build_rule(args: &RuleArgs, tag_arg: Option<&str>) -> Result<Rule, Failure> {
    let tag = tag_arg
        .map(str::to_string)
        .or_else(|| args.rule.clone())
        .ok_or_else(|| usage("missing --rule tag"))?;
    let need_i = || args.i.ok_or_else(|| usage(format!("{tag} needs --i")));
    let need_j = || args.j.ok_or_else(|| usage(format!("{tag} needs --j")));
    let sign_of = |v: Option<i64>, name: &str| -> Result<Sign, Failure> {
        let v = v.ok_or_else(|| usage(format!("{tag} needs --{name} (+1 or -1)")))?;
        Sign::from_i64(v).ok_or_else(|| usage(format!("--{name} must be +1 or -1")))
    };
    let rule = match tag.as_str() {
        "R1" => Rule::R1 {
            i: need_i()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "R2" => Rule::R2 { i: need_i()? },
        "R3" => Rule::R3 {
            i: need_i()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "R4" => Rule::R4 {
            i: need_i()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "R5" => Rule::R5 {
            i: need_i()?,
            j: need_j()?,
        },
        "R6" => Rule::R6 {
            i: need_i()?,
            j: need_j()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "R7" => Rule::R7 {
            i: need_i()?,
            j: need_j()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "R8" => Rule::R8 {
            i: need_i()?,
            j: need_j()?,
        },
        "R9" => Rule::R9 {
            i: need_i()?,
            j: need_j()?,
        },
        "R10" => Rule::R10 {
            i: need_i()?,
            j: need_j()?,
        },
        "R11" => Rule::R11 {
            i: need_i()?,
            j: need_j()?,
        },
        "R12" => Rule::R12 { i: need_i()? },
        "R13" => Rule::R13 { i: need_i()? },
        "R14" => Rule::R14 { i: need_i()? },
        "D15" => Rule::D15 {
            i: need_i()?,
            j: need_j()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "D16" => Rule::D16 {
            i: need_i()?,
            j: need_j()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "D17" => Rule::D17 {
            i: need_i()?,
            j: need_j()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "D18" => Rule::D18 {
            i: need_i()?,
            j: need_j()?,
            sign: sign_of(args.eps, "eps")?,
            sign2: sign_of(args.delta, "delta")?,
        },
        "D19" => Rule::D19 {
            i: need_i()?,
            j: need_j()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "D20" => Rule::D20 {
            i: need_i()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "D21" => Rule::D21 {
            i: need_i()?,
            sign: sign_of(args.eps, "eps")?,
        },
        "D22" => Rule::D22 {
            i: need_i()?,
            j: need_j()?,
            sign: sign_of(args.eps, "eps")?,
            sign2: sign_of(args.delta, "delta")?,
        },
        "D23" => Rule::D23 {
            i: need_i()?,
            power: args.power.ok_or_else(|| usage("D23 needs --power"))?,
        },
        "D24" => Rule::D24 {
            i: need_i()?,
            power: args.power.ok_or_else(|| usage("D24 needs --power"))?,
        },
        other => return Err(usage(format!("unknown rule tag `{other}`"))),
    };
    Ok(rule)
}

fn parse_categories(text: Option<&str>) -> Result<Vec<RuleCategory>, Failure> {
    let Some(text) = text else {
        return Ok(RuleCategory::ALL.to_vec());
    };
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let cat = match part {
            "band" => RuleCategory::Band,
            "disk" => RuleCategory::Disk,
            "isotopy-regular" => RuleCategory::IsotopyRegular,
            "isotopy-ri" => RuleCategory::IsotopyRi,
            other => return Err(usage(format!("unknown category `{other}`"))),
        };
        out.push(cat);
    }
    Ok(out)
}

fn parse_move_kinds(text: Option<&str>) -> Result<Vec<MoveKind>, Failure> {
    let Some(text) = text else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let kind =
            MoveKind::parse(part).ok_or_else(|| usage(format!("unknown move kind `{part}`")))?;
        out.push(kind);
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Parse { text, degree, file } => {
            let input = match (text, file) {
                (Some(t), None) => t,
                (None, Some(path)) => read_text(&path)?,
                (None, None) => {
                    let mut buffer = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buffer)
                        .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
                    buffer
                }
                (Some(_), Some(_)) => {
                    return Err(usage("give either a word argument or --file, not both"))
                }
            };
            for line in input.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let word = Word::parse(line, degree).map_err(invalid)?;
                out!("{word}");
            }
            Ok(())
        }

        Command::Validate { movie } => {
            let movie = load_movie(&movie)?;
            let report = movie.validate();
            out!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            eprintln!("{report}");
            if report.valid {
                Ok(())
            } else {
                Err(invalid(format!(
                    "movie invalid at event {}",
                    report.first_failure.expect("failing index")
                )))
            }
        }

        Command::Rewrite {
            text,
            degree,
            rule,
            pos,
            dir,
            list,
            categories,
        } => {
            let word = Word::parse(&text, degree).map_err(invalid)?;
            if list {
                let cats = parse_categories(categories.as_deref())?;
                for (rule, position, direction) in enumerate_rule_applications(&word, &cats) {
                    out!("{rule} {direction} @{position}");
                }
                return Ok(());
            }
            let rule = build_rule(&rule, None)?;
            let position = pos.ok_or_else(|| usage("rewrite needs --pos"))?;
            let direction = match dir.as_str() {
                "fwd" => Direction::Forward,
                "bwd" => Direction::Backward,
                other => return Err(usage(format!("--dir must be fwd or bwd, got `{other}`"))),
            };
            let out = apply_rule(&word, &rule, position, direction).map_err(invalid)?;
            out!("{out}");
            Ok(())
        }

        Command::Expand { tag, degree, rule } => {
            let rule = build_rule(&rule, Some(&tag))?;
            let script = expand_derived_rule(&rule).map_err(invalid)?;
            let lhs = Word::new(degree, rule.lhs()).map_err(invalid)?;
            let rhs = Word::new(degree, rule.rhs()).map_err(invalid)?;
            let words = script.replay(&lhs).map_err(invalid)?;
            for (step, word) in script.steps.iter().zip(words.iter().skip(1)) {
                out!("{step}   => {word}");
            }
            let end = verify_move_script(&lhs, &script).map_err(invalid)?;
            if end != rhs {
                return Err(invalid(format!("script ends at `{end}`, expected `{rhs}`")));
            }
            eprintln!("verified: {lhs}  <->  {rhs}  ({} steps)", script.len());
            Ok(())
        }

        Command::ChartFromMovie { movie, out } => {
            let movie = load_movie(&movie)?;
            let movie = movie.normalize_caps().map_err(invalid)?;
            let graph = movie_to_chart_graph(&movie).map_err(invalid)?;
            let text = serde_json::to_string_pretty(&graph).expect("chart serializes");
            write_out(out.as_deref(), &text)
        }

        Command::MovieFromChart { chart, out } => {
            let graph = load_chart(&chart)?;
            let movie = chart_graph_to_movie(&graph).map_err(invalid)?;
            let text = serde_json::to_string_pretty(&movie).expect("movie serializes");
            write_out(out.as_deref(), &text)
        }

        Command::Invariants { movie } => {
            let movie = load_movie(&movie)?;
            let inv = surface_invariants(&movie).map_err(invalid)?;
            out!(
                "chi={} boundary={} trivial={} intervals={} circles={}",
                inv.euler_characteristic,
                inv.boundary_components,
                inv.trivial_boundary,
                inv.interval_components_start,
                inv.circle_components_start
            );
            Ok(())
        }

        Command::Moves {
            movie,
            kinds,
            window,
            b2prime,
            apply_log,
            out,
        } => {
            let loaded = load_movie(&movie)?;
            if let Some(log) = apply_log {
                let mut current = loaded;
                for (k, line) in read_text(&log)?.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let inst: MoveInstance = serde_json::from_str(line)
                        .map_err(|e| invalid(format!("log line {}: {e}", k + 1)))?;
                    current = apply_chart_move(&current, &inst)
                        .map_err(|e| invalid(format!("log line {}: {e}", k + 1)))?;
                }
                let text = serde_json::to_string_pretty(&current).expect("movie serializes");
                return write_out(out.as_deref(), &text);
            }
            let opts = MoveOptions {
                kinds: parse_move_kinds(kinds.as_deref())?,
                window,
                b2_prime: b2prime,
            };
            for inst in applicable_moves(&loaded, &opts).map_err(invalid)? {
                out!(
                    "{}",
                    serde_json::to_string(&inst).expect("instance serializes")
                );
            }
            Ok(())
        }

        Command::Search {
            a,
            b,
            depth,
            budget,
            window,
            b2prime,
        } => {
            let a = load_movie(&a)?;
            let b = load_movie(&b)?;
            let opts = SearchOptions {
                depth,
                budget,
                moves: MoveOptions {
                    kinds: Vec::new(),
                    window,
                    b2_prime: b2prime,
                },
            };
            match equivalent_bounded(&a, &b, &opts).map_err(invalid)? {
                SearchOutcome::Equivalent { witness } => {
                    for inst in &witness {
                        out!(
                            "{}",
                            serde_json::to_string(inst).expect("instance serializes")
                        );
                    }
                    eprintln!("equivalent: witness of {} move(s)", witness.len());
                    Ok(())
                }
                SearchOutcome::NotFound {
                    explored,
                    budget_exhausted,
                } => Err(Failure::Exhausted(format!(
                    "no witness within depth {depth} ({explored} movies explored{}); inconclusive",
                    if budget_exhausted {
                        ", budget exhausted"
                    } else {
                        ""
                    }
                ))),
            }
        }

        Command::Render {
            input,
            out,
            target,
            scale,
            no_labels,
        } => {
            let text = read_text(&input)?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| invalid(format!("{}: {e}", input.display())))?;
            let is_chart = value.get("edges").is_some();
            let spec = RenderSpec {
                target: match target.as_str() {
                    "chart" => RenderTarget::Chart,
                    "strip" => RenderTarget::MovieStrip,
                    other => {
                        return Err(usage(format!(
                            "--target must be chart or strip, got `{other}`"
                        )))
                    }
                },
                scale,
                show_labels: !no_labels,
                ..RenderSpec::default()
            };
            let svg = match (is_chart, spec.target) {
                (true, RenderTarget::Chart) => {
                    let graph: ChartGraph = serde_json::from_value(value).map_err(invalid)?;
                    render_svg(RenderInput::Chart(&graph), &spec).map_err(invalid)?
                }
                (false, RenderTarget::Chart) => {
                    let movie: ChartMovie = serde_json::from_value(value).map_err(invalid)?;
                    let movie = movie.normalize_caps().map_err(invalid)?;
                    let graph = movie_to_chart_graph(&movie).map_err(invalid)?;
                    render_svg(RenderInput::Chart(&graph), &spec).map_err(invalid)?
                }
                (true, RenderTarget::MovieStrip) => {
                    let graph: ChartGraph = serde_json::from_value(value).map_err(invalid)?;
                    let movie = chart_graph_to_movie(&graph).map_err(invalid)?;
                    render_svg(RenderInput::Movie(&movie), &spec).map_err(invalid)?
                }
                (false, RenderTarget::MovieStrip) => {
                    let movie: ChartMovie = serde_json::from_value(value).map_err(invalid)?;
                    render_svg(RenderInput::Movie(&movie), &spec).map_err(invalid)?
                }
            };
            fs::write(&out, svg)
                .map_err(|e| usage(format!("cannot write {}: {e}", out.display())))?;
            eprintln!("wrote {}", out.display());
            Ok(())
        }
    }
}
