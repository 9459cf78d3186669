use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use geochroma::chroma::{clique_index, conflict_graph, exact_chromatic_index, greedy_color, verify_coloring};
use geochroma::constructions::{
    thm32_construction, thm3_construction, thm4_construction, thm5_construction, trivial_edge_decomposition,
    validate_decomposition, Decomposition, DEFAULT_THRESHOLD,
};
use geochroma::exactgeom::{generate_general_position, Configuration, DEFAULT_GEN_BOUND};
use geochroma::experiment::{self, THM5_C_MAX};
use geochroma::io::{read_config, read_decomposition, to_json_text, write_text, RunManifest};
use geochroma::render::{render_svg, RenderOptions};
use geochroma::GeoError;

#[derive(Parser)]
#[command(name = "geochroma", version, about = "Build, color and verify decompositions of complete geometric graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConfigMode {
    Coordinates,
    Convex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Edges,
    Thm3,
    Thm4,
    Thm5,
    Thm32,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorMode {
    Greedy,
    Exact,
}

#[derive(Subcommand)]
enum Command {
    /// Write a configuration file.
    Gen {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value = "coordinates")]
        mode: ConfigMode,
        /// Shorthand for `--mode convex`.
        #[arg(long)]
        convex: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_GEN_BOUND)]
        bound: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a decomposition.
    Build {
        #[arg(value_enum)]
        construction: Construction,
        /// Input configuration (otherwise one is generated from -n and --seed).
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(short = 'q')]
        q: Option<usize>,
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(long, value_enum)]
        mode: Option<ConfigMode>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color a decomposition file.
    Color {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "greedy")]
        mode: ColorMode,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check exact cover and, if present, the coloring.
    Verify { file: PathBuf },
    /// Print statistics of a decomposition file.
    Stats {
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Draw a decomposition as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Only draw parts of this color.
        #[arg(long)]
        color: Option<usize>,
    },
    /// Run an experiment suite (`all` runs every suite).
    Experiment {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    Invalid,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = std::env::var("GEOCHROMA_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Invalid) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                GeoError::SearchExhausted(_) | GeoError::DesignInvalid(_) | GeoError::TableRow { .. } => 1,
                _ => 2,
            })
        }
    }
}

/// Writes `text` to `out` with a manifest sidecar, or prints it.
fn emit(text: &str, out: Option<&Path>, mut manifest: RunManifest, start: Instant) -> geochroma::Result<()> {
    match out {
        Some(path) => {
            let digest = write_text(path, text)?;
            manifest.outputs.insert(path.display().to_string(), digest);
            manifest.elapsed_ms = start.elapsed().as_millis();
            write_text(&RunManifest::path_for(path), &to_json_text(&manifest)?)?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn make_config(
    n: Option<usize>,
    mode: Option<ConfigMode>,
    seed: u64,
    default_convex: bool,
) -> geochroma::Result<Configuration> {
    let n = n.ok_or_else(|| GeoError::InvalidArgument("give --config or -n".into()))?;
    let convex = match mode {
        Some(ConfigMode::Convex) => true,
        Some(ConfigMode::Coordinates) => false,
        None => default_convex,
    };
    if convex {
        Configuration::convex(n)
    } else {
        generate_general_position(n, DEFAULT_GEN_BOUND, seed)
    }
}

fn run(cmd: Command) -> geochroma::Result<Outcome> {
    let start = Instant::now();
    match cmd {
        Command::Gen { n, mode, convex, seed, bound, out } => {
            let cfg = if convex || matches!(mode, ConfigMode::Convex) {
                Configuration::convex(n)?
            } else {
                generate_general_position(n, bound, seed)?
            };
            let mut m = RunManifest::new("gen");
            m.seed = Some(seed);
            m.parameters.insert("n".into(), n.into());
            m.parameters.insert("mode".into(), json!(cfg.mode()));
            m.parameters.insert("bound".into(), bound.into());
            emit(&to_json_text(&cfg)?, out.as_deref(), m, start)?;
        }
        Command::Build { construction, config, n, q, k, mode, seed, threshold, out } => {
            let load = |default_convex: bool| match &config {
                Some(p) => read_config(p),
                None => make_config(n, mode, seed, default_convex),
            };
            let mut m = RunManifest::new("build");
            m.seed = Some(seed);
            let d: Decomposition = match construction {
                Construction::Edges => trivial_edge_decomposition(&load(true)?)?,
                Construction::Thm4 => {
                    thm4_construction(n.ok_or_else(|| GeoError::InvalidArgument("thm4 needs -n".into()))?)?
                }
                Construction::Thm32 => {
                    thm32_construction(k.ok_or_else(|| GeoError::InvalidArgument("thm32 needs -k".into()))?)?
                        .decomposition
                }
                Construction::Thm3 => {
                    let cfg = match (&config, n, q) {
                        (None, None, Some(q)) => generate_general_position(7 * q + 6, DEFAULT_GEN_BOUND, seed)?,
                        _ => load(false)?,
                    };
                    thm3_construction(&cfg, q)?.decomposition
                }
                Construction::Thm5 => thm5_construction(&load(false)?, threshold)?.0,
            };
            for (key, v) in [("n", n), ("q", q), ("k", k)] {
                if let Some(v) = v {
                    m.parameters.insert(key.into(), v.into());
                }
            }
            m.parameters.insert("construction".into(), json!(d.metadata.construction));
            emit(&to_json_text(&d)?, out.as_deref(), m, start)?;
        }
        Command::Color { file, mode, budget, out } => {
            let mut d = read_decomposition(&file)?;
            let g = conflict_graph(&d);
            let (colors, info) = match mode {
                ColorMode::Greedy => {
                    let c = greedy_color(&g);
                    let p = c.palette_size();
                    (c.colors, json!({"mode": "greedy", "palette": p}))
                }
                ColorMode::Exact => {
                    let r = exact_chromatic_index(&g, budget);
                    let info = json!({"mode": "exact", "lower": r.lower, "upper": r.upper, "exact": r.optimal});
                    (r.coloring.colors, info)
                }
            };
            eprintln!("{info}");
            d.coloring = Some(colors);
            d.metadata.stats.insert("coloring".into(), info);
            let mut m = RunManifest::new("color");
            m.parameters.insert("input".into(), json!(file.display().to_string()));
            m.parameters.insert("budget".into(), budget.into());
            let target = out.unwrap_or(file);
            emit(&to_json_text(&d)?, Some(&target), m, start)?;
        }
        Command::Verify { file } => {
            let d = read_decomposition(&file)?;
            let cover = validate_decomposition(&d);
            let violations = d.coloring.as_ref().map(|c| verify_coloring(&d, c));
            let ok = cover.is_valid() && violations.as_ref().is_none_or(|v| v.is_empty());
            let report = json!({
                "valid": ok,
                "uncovered": cover.uncovered.len(),
                "repeated": cover.repeated.len(),
                "malformed": cover.malformed.len(),
                "coloring_violations": violations.map(|v| v.len()),
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
            if !ok {
                return Ok(Outcome::Invalid);
            }
        }
        Command::Stats { file, budget } => {
            let d = read_decomposition(&file)?;
            let n = d.config.n();
            let mut sizes = std::collections::BTreeMap::<usize, usize>::new();
            for p in &d.parts {
                *sizes.entry(p.vertices.len()).or_default() += 1;
            }
            let g = conflict_graph(&d);
            let clique = clique_index(&g, budget);
            let mut report = json!({
                "construction": d.metadata.construction,
                "n": n,
                "parts": d.parts.len(),
                "part_sizes": sizes,
                "distinguished": d.metadata.distinguished.len(),
                "palette": d.palette_size(),
                "clique_lower_bound": clique.clique.len(),
                "clique_exact": clique.exact,
            });
            if let (Some(p), "thm5") = (d.palette_size(), d.metadata.construction.as_str()) {
                let fitted = (p as f64 - (n * n) as f64 / 9.0) / (n as f64).powf(1.5);
                report["palette_check"] =
                    json!({"fitted_c": fitted, "c_max": THM5_C_MAX, "pass": fitted <= THM5_C_MAX});
            }
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Render { file, out, color } => {
            let d = read_decomposition(&file)?;
            let svg = render_svg(&d, &RenderOptions { color });
            let mut m = RunManifest::new("render");
            m.parameters.insert("input".into(), json!(file.display().to_string()));
            m.parameters.insert("color".into(), json!(color));
            emit(&svg, Some(&out), m, start)?;
        }
        Command::Experiment { suite, seed, out } => {
            let reports = experiment::run(&suite, seed)?;
            let pass = reports.iter().all(|r| r.pass);
            for r in &reports {
                eprintln!("{} {}", if r.pass { "PASS" } else { "FAIL" }, r.suite);
            }
            let doc = json!({"suite": suite, "seed": seed, "pass": pass, "reports": reports});
            let mut m = RunManifest::new("experiment");
            m.seed = Some(seed);
            m.parameters.insert("suite".into(), Value::from(suite));
            emit(&to_json_text(&doc)?, out.as_deref(), m, start)?;
            if !pass {
                return Ok(Outcome::Invalid);
            }
        }
    }
    Ok(Outcome::Ok)
}
