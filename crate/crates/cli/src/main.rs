//! `sigmahull` command-line tool.
//!
//! Exit codes: 0 success, 1 counterexample found, 2 parse failure,
//! 3 incompatible inputs or exhausted budget, 4 violated hypothesis.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sigmahull::eaqecc::{
    eaqecc_family, eaqecc_family_mds, eaqecc_from_hull, eaqecc_from_mp, eaqecc_from_pair,
    sort_records, to_csv, to_json, EaqeccParams,
};
use sigmahull::hullsteer::{steer_relative_hull, steer_self_hull, SteerConfig, DEFAULT_BUDGET};
use sigmahull::io::{load_code, load_mp_spec, load_sigma, to_pretty, CodeFile, SigmaSpec};
use sigmahull::mpcode::{
    is_sigma_dual_containing, is_sigma_self_orthogonal, mp_hull_dim, mp_witness,
};
use sigmahull::semilinear::{sigma_dual, sigma_hull};
use sigmahull::verify::{field_of_order, run_campaign, CampaignConfig, Suite, DEFAULT_FIELDS};
use sigmahull::{Error, LinearCode, SemilinearIsometry};

#[derive(Parser)]
#[command(
    name = "sigmahull",
    version,
    about = "Semilinear hulls of linear and matrix-product codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct CodeArgs {
    /// Code file: {"field": ..., "generator": ...}
    #[arg(long)]
    code: PathBuf,
    /// σ file: {"s": ..., "perm": [...], "diag": [...]}; Euclidean when omitted
    #[arg(long)]
    sigma: Option<PathBuf>,
}

impl CodeArgs {
    fn load(&self) -> Result<(LinearCode, SemilinearIsometry)> {
        let code = load_code(&self.code)?;
        let sigma = load_sigma_for(self.sigma.as_deref(), &code)?;
        Ok((code, sigma))
    }
}

fn load_sigma_for(path: Option<&Path>, code: &LinearCode) -> Result<SemilinearIsometry> {
    Ok(match path {
        Some(p) => load_sigma(p, code.field())?,
        None => SemilinearIsometry::euclidean(code.field(), code.length()),
    })
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Pair,
    Hull,
    Family,
    Mds,
    Mp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, k, d and the σ hull of a code
    Hull(CodeArgs),
    /// Write the σ dual of a code as a code file
    Dual {
        #[command(flatten)]
        args: CodeArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Assemble a matrix-product code into a code file
    MpBuild {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// σ hull dimension of a matrix-product code from its constituents
    MpHull {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Whether a matrix-product code contains its σ dual
    CheckDc {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Whether a matrix-product code is σ self-orthogonal
    CheckSo {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Find a monomially equivalent code with a prescribed hull dimension
    Steer {
        #[command(flatten)]
        args: CodeArgs,
        #[arg(long)]
        target_h: usize,
        /// Steer dim(C1 ∩ (C M'')^{⊥σ}) for this C1 instead of the hull of C
        #[arg(long)]
        relative_to: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate the whole monomial group
        #[arg(long)]
        exhaustive: bool,
        /// Where to write the witness; printed when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Entanglement-assisted quantum code parameter tables
    Eaqecc {
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long)]
        code: Option<PathBuf>,
        /// Second code for --from pair
        #[arg(long)]
        code2: Option<PathBuf>,
        #[arg(long)]
        sigma: Option<PathBuf>,
        /// Matrix-product spec for --from mp
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        out: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check an identity against the brute-force oracle on random instances
    Verify {
        /// lemma31, cor32, thm31, thm32, thm45, mpdual or eaqecc
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Comma-separated field orders
        #[arg(long, value_delimiter = ',')]
        fields: Option<Vec<u32>>,
        /// Number of blocks for matrix-product suites
        #[arg(long)]
        blocks: Option<usize>,
        /// Certificate path for counterexamples
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Print the full JSON report
        #[arg(long)]
        json: bool,
    },
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn describe(code: &LinearCode) -> String {
    match code.min_distance() {
        Ok(d) => format!(
            "[{},{},{}]_{}",
            code.length(),
            code.dimension(),
            d,
            code.field().order()
        ),
        Err(_) => format!(
            "[{},{}]_{}",
            code.length(),
            code.dimension(),
            code.field().order()
        ),
    }
}

fn cmd_hull(args: &CodeArgs) -> Result<u8> {
    let (code, sigma) = args.load()?;
    let hull = sigma_hull(&code, &sigma)?;
    println!("code: {}", describe(&code));
    println!("n: {}", code.length());
    println!("k: {}", code.dimension());
    match code.min_distance() {
        Ok(d) => println!("d: {d}"),
        Err(_) => println!("d: unknown"),
    }
    println!("hull_dim: {}", hull.dim);
    for row in hull.basis.row_iter() {
        println!("hull_basis: {row:?}");
    }
    Ok(0)
}

fn cmd_steer(
    args: &CodeArgs,
    target_h: usize,
    relative_to: Option<&Path>,
    cfg: &SteerConfig,
    output: Option<&Path>,
) -> Result<u8> {
    let (code, sigma) = args.load()?;
    let found = match relative_to {
        Some(p) => steer_relative_hull(&load_code(p)?, &code, &sigma, target_h, cfg)?,
        None => steer_self_hull(&code, &sigma, target_h, cfg)?,
    };
    eprintln!(
        "found after {} trials: {}",
        found.trials,
        describe(&found.code)
    );
    emit(&to_pretty(&SigmaSpec::witness(&found.witness))?, output)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_eaqecc(
    from: Source,
    code: Option<&Path>,
    code2: Option<&Path>,
    sigma: Option<&Path>,
    spec: Option<&Path>,
    out: Format,
    output: Option<&Path>,
    cfg: &SteerConfig,
) -> Result<u8> {
    let need = |p: Option<&Path>, flag: &str| -> Result<LinearCode> {
        let p = p.ok_or_else(|| Error::Parse(format!("--from needs {flag}")))?;
        Ok(load_code(p)?)
    };
    let mut records: Vec<EaqeccParams> = Vec::new();
    match from {
        Source::Pair => {
            records.push(eaqecc_from_pair(
                &need(code, "--code")?,
                &need(code2, "--code2")?,
            )?);
        }
        Source::Hull => {
            let c = need(code, "--code")?;
            let r = eaqecc_from_hull(&c, &load_sigma_for(sigma, &c)?)?;
            records.extend([r.code, r.dual]);
        }
        Source::Family | Source::Mds => {
            let c = need(code, "--code")?;
            let s = load_sigma_for(sigma, &c)?;
            let rows = match from {
                Source::Family => eaqecc_family(&c, &s, cfg)?,
                _ => eaqecc_family_mds(&c, &s, cfg)?,
            };
            records.extend(rows.into_iter().flat_map(|r| [r.code, r.dual]));
        }
        Source::Mp => {
            let p = spec.ok_or_else(|| Error::Parse("--from mp needs --spec".into()))?;
            let (spec, ms) = load_mp_spec(p)?;
            let fam = eaqecc_from_mp(&spec, &ms, cfg)?;
            if !fam.non_singular_by_columns {
                eprintln!("warning: defining matrix is not non-singular by columns; distance bounds are unbacked");
            }
            if fam.bound_violated() {
                eprintln!("warning: an exact distance falls below its claimed bound");
            }
            records.extend(fam.q1);
            records.extend(fam.q2);
        }
    }
    sort_records(&mut records);
    let text = match out {
        Format::Csv => to_csv(&records)?,
        Format::Json => to_json(&records)?,
    };
    emit(&text, output)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    seed: u64,
    trials: usize,
    max_n: usize,
    fields: Option<&[u32]>,
    blocks: Option<usize>,
    certificate: Option<&Path>,
    json: bool,
) -> Result<u8> {
    let suite: Suite = suite.parse()?;
    let mut cfg = CampaignConfig::new(seed, trials, max_n);
    cfg.fields = fields
        .unwrap_or(&DEFAULT_FIELDS)
        .iter()
        .map(|&q| field_of_order(q))
        .collect::<sigmahull::Result<_>>()?;
    cfg.blocks = blocks;
    let report = run_campaign(suite, &cfg)?;
    if json {
        println!("{}", to_pretty(&report)?);
    } else {
        println!("{}", report.summary());
        for (key, count) in &report.tallies {
            println!("  {key}: {count}");
        }
    }
    if report.ok() {
        return Ok(0);
    }
    let default = PathBuf::from(format!("sigmahull-{suite}-counterexamples.json"));
    let path = certificate.unwrap_or(&default);
    fs::write(path, to_pretty(&report.counterexamples)?)
        .with_context(|| format!("writing {}", path.display()))?;
    eprintln!("counterexamples written to {}", path.display());
    Ok(1)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Hull(args) => cmd_hull(&args),
        Command::Dual { args, output } => {
            let (code, sigma) = args.load()?;
            let dual = sigma_dual(&code, &sigma)?;
            if dual.dimension() == 0 {
                return Err(Error::ZeroCode.into());
            }
            emit(&to_pretty(&CodeFile::of(&dual))?, output.as_deref())?;
            Ok(0)
        }
        Command::MpBuild { spec, output } => {
            let (spec, _) = load_mp_spec(&spec)?;
            emit(&to_pretty(&CodeFile::of(&spec.code()))?, output.as_deref())?;
            Ok(0)
        }
        Command::MpHull { spec } => {
            let (spec, ms) = load_mp_spec(&spec)?;
            let w = mp_witness(&spec, &ms)?;
            println!("rho: {:?}", w.rho.iter().map(|r| r + 1).collect::<Vec<_>>());
            println!("hull_dim: {}", mp_hull_dim(&spec, &ms)?);
            Ok(0)
        }
        Command::CheckDc { spec } => {
            let (spec, ms) = load_mp_spec(&spec)?;
            println!("dual_containing: {}", is_sigma_dual_containing(&spec, &ms)?);
            Ok(0)
        }
        Command::CheckSo { spec } => {
            let (spec, ms) = load_mp_spec(&spec)?;
            println!("self_orthogonal: {}", is_sigma_self_orthogonal(&spec, &ms)?);
            Ok(0)
        }
        Command::Steer {
            args,
            target_h,
            relative_to,
            budget,
            seed,
            exhaustive,
            output,
        } => {
            let cfg = SteerConfig {
                budget,
                seed,
                exhaustive: exhaustive.then_some(true),
            };
            cmd_steer(
                &args,
                target_h,
                relative_to.as_deref(),
                &cfg,
                output.as_deref(),
            )
        }
        Command::Eaqecc {
            from,
            code,
            code2,
            sigma,
            spec,
            out,
            output,
            budget,
            seed,
        } => {
            let cfg = SteerConfig {
                budget,
                seed,
                exhaustive: None,
            };
            cmd_eaqecc(
                from,
                code.as_deref(),
                code2.as_deref(),
                sigma.as_deref(),
                spec.as_deref(),
                out,
                output.as_deref(),
                &cfg,
            )
        }
        Command::Verify {
            suite,
            seed,
            trials,
            max_n,
            fields,
            blocks,
            certificate,
            json,
        } => cmd_verify(
            &suite,
            seed,
            trials,
            max_n,
            fields.as_deref(),
            blocks,
            certificate.as_deref(),
            json,
        ),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let Some(e) = err.downcast_ref::<Error>() else {
        return 2;
    };
    match e {
        Error::Parse(_) | Error::InvalidField(_) => 2,
        Error::FormulaMismatch { .. } => 1,
        Error::FieldTooSmall { .. }
        | Error::PreconditionFailed(_)
        | Error::NotMds { .. }
        | Error::NotMonomial
        | Error::TargetOutOfRange { .. }
        | Error::DegenerateDefiningMatrix
        | Error::ZeroCode => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
