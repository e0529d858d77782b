//! Command-line surface: analysis, epsilon/eta, reverses, family
//! generators, exhaustive enumeration, and the verification harness.
//! JSON on stdout; exit 0 on success, 1 when a verification finds
//! violations, 2 on usage or parse errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nakayama::families::{
    cluster_tilting_endo_series, dominant_ar_gldim3, dominant_ar_gldim3_mixed, dominant_ar_lowdim,
    generate_2ag, higher_auslander_gldim3, higher_auslander_gldim4, two_ag_sweep, CtFamily,
    Ha4Params, LowDomdimMode, TwoAgSpec,
};
use nakayama::filtered::{check_duality, epsilon, epsilon_tower, eta};
use nakayama::profile::profile;
use nakayama::reverse::{
    defect_invariant_reverse, enumerate_reverses, enumerate_reverses_with_total_defect,
    weighted_reverse, ReverseChoice,
};
use nakayama::structure::{defect_total, structure_sets};
use nakayama::{Kind, KupischSeries};

use nakayama_cli::enumerate::enumerate_admissible;
use nakayama_cli::verify::{verify, TheoremId};

#[derive(Parser)]
#[command(name = "nakayama", about = "Nakayama algebras via Kupisch series", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Structural and homological data of one algebra.
    Analyze {
        /// Series as `cyclic:2,4,3` or `linear:2,2,1`.
        series: String,
        /// Print only the classification flags.
        #[arg(long)]
        flags_only: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The syzygy filtered algebra.
    Epsilon { series: String },
    /// The cosyzygy filtered algebra and the duality check.
    Eta { series: String },
    /// Iterated syzygy filtered algebras.
    Tower {
        series: String,
        #[arg(long, default_value_t = 32)]
        max_steps: usize,
    },
    /// Reverse of the epsilon construction.
    Reverse(ReverseArgs),
    /// Closed-form families.
    Generate(GenerateArgs),
    /// All admissible series of one rank, cyclic ones up to rotation.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_entry: u32,
        #[arg(long, value_enum, default_value = "cyclic")]
        kind: KindArg,
    },
    /// Exhaustive theorem verification; exits 1 when violations are found.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, default_value_t = 5)]
        rank: usize,
        #[arg(long, default_value_t = 6)]
        max: u32,
        /// Worker threads (0 = all cores); NAKAYAMA_JOBS is the default.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args)]
struct ReverseArgs {
    #[arg(long)]
    theta: String,
    /// Weight per theta vertex; defaults to the defect vector.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u32>>,
    /// Target total defect; sweeps all weight vectors with this total.
    #[arg(long)]
    defect: Option<u32>,
    /// Enumerate all algebras instead of the canonical one.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 64)]
    limit: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Seed series (2ag, dar-low).
    #[arg(long)]
    theta: Option<String>,
    /// f-vector of 1s and 2s (2ag).
    #[arg(long, value_delimiter = ',')]
    f: Option<Vec<u8>>,
    /// Radical power of the selfinjective seed (2ag-sweep).
    #[arg(long)]
    len: Option<u32>,
    /// Seed ranks as `lo..hi` inclusive (2ag-sweep).
    #[arg(long)]
    ranks: Option<String>,
    /// Marked vertices, 1-based (2ag-sweep).
    #[arg(long, value_delimiter = ',')]
    marks: Option<Vec<usize>>,
    /// Component ranks (ha3, ha4 linear, dar3, cto).
    #[arg(long, value_delimiter = ',')]
    ns: Option<Vec<u32>>,
    /// Slack vector (dar3).
    #[arg(long, value_delimiter = ',')]
    xs: Option<Vec<u32>>,
    /// Number of (2,3) blocks (ha4 cyclic, cto ha4).
    #[arg(long)]
    k: Option<usize>,
    /// Dominant dimension target, 1 or 2 (dar-low).
    #[arg(long)]
    mode: Option<u32>,
    /// Extra weight for dar-low mode 1.
    #[arg(long, default_value_t = 1)]
    extra: u32,
    /// Endomorphism family for cto: ha3 or ha4.
    #[arg(long)]
    cto_family: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "2ag")]
    TwoAg,
    #[value(name = "2ag-sweep")]
    TwoAgSweep,
    Ha3,
    Ha4,
    Dar3,
    DarLow,
    Cto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Cyclic,
    Linear,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    A,
    B,
    C,
    Duality,
    Counts,
    Evenness,
}

impl From<TheoremArg> for TheoremId {
    fn from(t: TheoremArg) -> TheoremId {
        match t {
            TheoremArg::A => TheoremId::A,
            TheoremArg::B => TheoremId::B,
            TheoremArg::C => TheoremId::C,
            TheoremArg::Duality => TheoremId::Duality,
            TheoremArg::Counts => TheoremId::Counts,
            TheoremArg::Evenness => TheoremId::Evenness,
        }
    }
}

fn parse_series(text: &str) -> Result<KupischSeries, ExitCode> {
    text.parse::<KupischSeries>().map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn require_cyclic(series: &KupischSeries) -> Result<(), ExitCode> {
    if series.kind() != Kind::Cyclic {
        eprintln!("error: this command needs a cyclic series");
        return Err(ExitCode::from(2));
    }
    Ok(())
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Analyze {
            series,
            flags_only,
            format,
        } => {
            let alg = parse_series(&series)?;
            let prof = profile(&alg);
            if flags_only {
                println!("{}", serde_json::to_string_pretty(&prof.flags).unwrap());
                return Ok(ExitCode::SUCCESS);
            }
            let structure = if alg.is_cyclic() {
                Some(structure_sets(&alg).unwrap())
            } else {
                None
            };
            let out = json!({
                "schema": "nakayama/1",
                "input": alg,
                "rank": alg.rank(),
                "num_relations": alg.num_relations(),
                "defect": defect_total(&alg),
                "structure": structure.map(|ss| json!({
                    "socle_set": one_based(&ss.socle_set),
                    "top_set": one_based(&ss.top_set),
                    "base_set": ss.base_set.iter().map(|b| json!({
                        "top": b.top.one_based(), "len": b.len
                    })).collect::<Vec<_>>(),
                    "filtered_projectives": one_based(&ss.filtered_projectives),
                    "defect_per_projective": ss.defect_per_projective,
                })),
                "profile": prof,
            });
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
                Format::Text => {
                    println!("series        {alg}");
                    println!("rank          {}", alg.rank());
                    println!("relations     {}", alg.num_relations());
                    println!("defect        {}", defect_total(&alg));
                    println!("gldim         {}", prof.gldim);
                    println!("domdim        {}", prof.domdim);
                    println!("gorenstein    {}", prof.gorenstein_dim);
                    println!("flags         {}", serde_json::to_string(&prof.flags).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Epsilon { series } => {
            let alg = parse_series(&series)?;
            require_cyclic(&alg)?;
            let eps = epsilon(&alg).unwrap();
            let out = json!({
                "schema": "nakayama/1",
                "input": alg,
                "output": eps.theta,
                "components": eps.theta.components(),
                "vertex_map": eps.base_set.iter().zip(&eps.filtered_map).enumerate().map(|(j, (b, z))| json!({
                    "theta_vertex": j + 1,
                    "delta_top": b.top.one_based(),
                    "delta_len": b.len,
                    "filtered_projective": z.one_based(),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Eta { series } => {
            let alg = parse_series(&series)?;
            require_cyclic(&alg)?;
            let result = eta(&alg).unwrap();
            let duality = check_duality(&alg).unwrap();
            let out = json!({
                "schema": "nakayama/1",
                "input": alg,
                "output": result.eta,
                "duality": duality,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Tower { series, max_steps } => {
            let alg = parse_series(&series)?;
            require_cyclic(&alg)?;
            let stages = epsilon_tower(&alg, max_steps).unwrap();
            let out = json!({
                "schema": "nakayama/1",
                "input": alg,
                "steps": stages,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Reverse(args) => {
            let theta = parse_series(&args.theta)?;
            let outputs: Vec<KupischSeries> = if let Some(d) = args.defect {
                enumerate_reverses_with_total_defect(&theta, d, args.limit)
                    .map_err(|e| usage_error(&e.to_string()))?
            } else if let Some(w) = &args.weights {
                if args.all {
                    enumerate_reverses(&theta, w, args.limit)
                        .map_err(|e| usage_error(&e.to_string()))?
                } else {
                    let choice = ReverseChoice::earliest(&theta, w)
                        .map_err(|e| usage_error(&e.to_string()))?;
                    vec![weighted_reverse(&theta, w, &choice)
                        .map_err(|e| usage_error(&e.to_string()))?]
                }
            } else {
                vec![defect_invariant_reverse(&theta).map_err(|e| usage_error(&e.to_string()))?]
            };
            let out = json!({
                "schema": "nakayama/1",
                "theta": theta,
                "weights": args.weights,
                "defect": args.defect,
                "outputs": outputs,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate(args) => {
            let outputs = run_generate(&args)?;
            let out = json!({
                "schema": "nakayama/1",
                "outputs": outputs,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            rank,
            max_entry,
            kind,
        } => {
            let kind = match kind {
                KindArg::Cyclic => Kind::Cyclic,
                KindArg::Linear => Kind::Linear,
            };
            for series in enumerate_admissible(rank, max_entry, kind) {
                println!("{}", serde_json::to_string(&series).unwrap());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            rank,
            max,
            jobs,
            format,
        } => {
            let jobs = jobs
                .or_else(|| {
                    std::env::var("NAKAYAMA_JOBS")
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or(0);
            let report = verify(theorem.into(), rank, max, jobs);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => {
                    println!(
                        "theorem {}: {} cases, {} violations ({:.2}s)",
                        report.theorem,
                        report.cases,
                        report.violations.len(),
                        report.elapsed_secs
                    );
                    for v in &report.violations {
                        println!("  {} {} {} [{}]", v.series, v.check, v.detail, v.replay);
                    }
                }
            }
            if report.violations.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn one_based(vs: &[nakayama::Vertex]) -> Vec<usize> {
    vs.iter().map(|v| v.one_based()).collect()
}

fn run_generate(args: &GenerateArgs) -> Result<Vec<KupischSeries>, ExitCode> {
    let fam_err = |e: nakayama::FamilyError| usage_error(&e.to_string());
    match args.family {
        Family::TwoAg => {
            let theta = parse_series(args.theta.as_deref().ok_or_else(|| usage_error("2ag needs --theta"))?)?;
            let f = args.f.clone().ok_or_else(|| usage_error("2ag needs --f"))?;
            Ok(vec![generate_2ag(&TwoAgSpec::new(theta, f)).map_err(fam_err)?])
        }
        Family::TwoAgSweep => {
            let len = args.len.ok_or_else(|| usage_error("2ag-sweep needs --len"))?;
            let ranks_text = args
                .ranks
                .as_deref()
                .ok_or_else(|| usage_error("2ag-sweep needs --ranks lo..hi"))?;
            let (lo, hi) = ranks_text
                .split_once("..")
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| usage_error("ranks must look like 2..11"))?;
            let marks: Vec<usize> = args
                .marks
                .clone()
                .ok_or_else(|| usage_error("2ag-sweep needs --marks"))?
                .iter()
                .map(|&m| m.checked_sub(1).ok_or(()))
                .collect::<Result<_, _>>()
                .map_err(|_| usage_error("marks are 1-based"))?;
            two_ag_sweep(len, lo..=hi, &marks).map_err(fam_err)
        }
        Family::Ha3 => {
            let ns = args.ns.clone().ok_or_else(|| usage_error("ha3 needs --ns"))?;
            Ok(vec![higher_auslander_gldim3(&ns).map_err(fam_err)?])
        }
        Family::Ha4 => {
            let params = match (&args.k, &args.ns) {
                (Some(k), None) => Ha4Params::Cyclic { k: *k },
                (None, Some(ns)) => Ha4Params::Linear { ns: ns.clone() },
                _ => return Err(usage_error("ha4 needs exactly one of --k or --ns")),
            };
            Ok(vec![higher_auslander_gldim4(&params).map_err(fam_err)?])
        }
        Family::Dar3 => {
            let ns = args.ns.clone().ok_or_else(|| usage_error("dar3 needs --ns"))?;
            match &args.xs {
                Some(xs) => Ok(vec![dominant_ar_gldim3(&ns, xs).map_err(fam_err)?]),
                None => Ok(vec![dominant_ar_gldim3_mixed(&ns).map_err(fam_err)?]),
            }
        }
        Family::DarLow => {
            let theta = parse_series(args.theta.as_deref().ok_or_else(|| usage_error("dar-low needs --theta"))?)?;
            let mode = match args.mode {
                Some(1) => LowDomdimMode::DomdimOne { extra: args.extra },
                Some(2) => LowDomdimMode::DomdimTwo,
                _ => return Err(usage_error("dar-low needs --mode 1 or --mode 2")),
            };
            Ok(vec![dominant_ar_lowdim(&theta, mode).map_err(fam_err)?])
        }
        Family::Cto => {
            let family = match args.cto_family.as_deref() {
                Some("ha3") => {
                    let ns = args.ns.clone().ok_or_else(|| usage_error("cto ha3 needs --ns"))?;
                    CtFamily::Ha3(ns)
                }
                Some("ha4") => match (&args.k, &args.ns) {
                    (Some(k), None) => CtFamily::Ha4(Ha4Params::Cyclic { k: *k }),
                    (None, Some(ns)) => CtFamily::Ha4(Ha4Params::Linear { ns: ns.clone() }),
                    _ => return Err(usage_error("cto ha4 needs exactly one of --k or --ns")),
                },
                _ => return Err(usage_error("cto needs --cto-family ha3|ha4")),
            };
            Ok(vec![cluster_tilting_endo_series(&family).map_err(fam_err)?])
        }
    }
}
