use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quatloc::bounds::{all_bounds, BoundPresets, BoundResult, MethodKind};
use quatloc::harness::{self, parse_degree_range, BenchConfig, Check, VerifyReport};
use quatloc::roots::find_zeros;
use quatloc::{build_companion, CompanionKind, Error, QPolynomial};

#[derive(Parser)]
#[command(name = "quatloc", version, about = "Inclusion balls for zeros of quaternionic polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate inclusion radii for a polynomial file.
    Bounds {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated: cauchy,weighted,ratio,fujiwara,lacunary-sum,lacunary-max (or all).
        #[arg(long, default_value = "all")]
        methods: String,
        /// Weights α₁..αₙ₋₁ for the weighted bound, comma-separated.
        #[arg(long)]
        alpha: Option<String>,
        /// Weights λ₁..λₙ for the Fujiwara bound, comma-separated.
        #[arg(long)]
        lambda: Option<String>,
        /// Write rows as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dump_matrix: bool,
    },
    /// List all zeros of a polynomial file.
    Roots {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Check every zero against every bound on random polynomials.
    Verify(SweepArgs),
    /// Record per-sample bound slack on random polynomials.
    Bench(SweepArgs),
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Inclusive degree range, `A..B`.
    #[arg(long, default_value = "2..8")]
    degrees: String,
    /// Coefficient components are drawn from [-scale, scale].
    #[arg(long, default_value_t = 5.0)]
    scale: f64,
    /// Comma-separated checks (bounds plus `gershgorin`), or `all`.
    #[arg(long, default_value = "all")]
    methods: String,
    /// CSV output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (parallel builds only; 0 = all cores).
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Replace the first sample by qⁿ.
    #[arg(long)]
    smoke: bool,
}

impl SweepArgs {
    fn config(&self) -> quatloc::Result<BenchConfig> {
        let config = BenchConfig {
            degrees: parse_degree_range(&self.degrees)?,
            samples: self.samples,
            coeff_scale: self.scale,
            seed: self.seed,
            methods: Check::parse_list(&self.methods)?,
            output: self.out.clone(),
            smoke_monomial: self.smoke,
        };
        config.validate()?;
        Ok(config)
    }
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bounds {
            input,
            methods,
            alpha,
            lambda,
            out,
            dump_matrix,
        } => run_bounds(&input, &methods, alpha.as_deref(), lambda.as_deref(), out.as_deref(), dump_matrix),
        Command::Roots { input, dump_matrix } => run_roots(&input, dump_matrix),
        Command::Verify(args) => run_sweep_command(&args, true),
        Command::Bench(args) => run_sweep_command(&args, false),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn parse_list(s: &str) -> quatloc::Result<Vec<f64>> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::Config(format!("bad number {v:?}")))
        })
        .collect()
}

fn dump(p: &QPolynomial) -> quatloc::Result<()> {
    let monic = p.normalize_monic()?;
    let m = build_companion(&monic, CompanionKind::for_side(monic.side()))?;
    println!("companion matrix ({}x{}):", m.dim(), m.dim());
    print!("{m}");
    Ok(())
}

fn run_bounds(
    input: &Path,
    methods: &str,
    alpha: Option<&str>,
    lambda: Option<&str>,
    out: Option<&Path>,
    dump_matrix: bool,
) -> quatloc::Result<ExitCode> {
    let p = QPolynomial::read_file(input)?;
    let methods = if methods.trim() == "all" {
        MethodKind::ALL.to_vec()
    } else {
        methods
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| MethodKind::parse(s).ok_or_else(|| Error::Config(format!("unknown method {s:?}"))))
            .collect::<quatloc::Result<_>>()?
    };
    let presets = BoundPresets {
        methods,
        alpha: alpha.map(parse_list).transpose()?,
        lambda: lambda.map(parse_list).transpose()?,
    };
    if dump_matrix {
        dump(&p)?;
    }
    let rows = all_bounds(&p, &presets)?;
    println!("polynomial ({}): {p}", p.side());
    println!("{:<14} {:<28} {:>22} {:>10}  note", "method", "params", "radius", "applicable");
    for r in &rows {
        let radius = if r.applicable { r.radius.to_string() } else { "-".into() };
        println!(
            "{:<14} {:<28} {:>22} {:>10}  {}",
            r.method.name(),
            r.method.params(),
            radius,
            r.applicable,
            r.note
        );
    }
    if let Some(path) = out {
        write_bounds_csv(p.degree(), &rows, File::create(path)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn write_bounds_csv<W: Write>(degree: usize, rows: &[BoundResult], out: W) -> quatloc::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["degree", "method", "params", "radius", "applicable", "note"])?;
    for r in rows {
        w.write_record([
            degree.to_string(),
            r.method.name().to_string(),
            r.method.params(),
            r.radius.to_string(),
            r.applicable.to_string(),
            r.note.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn run_roots(input: &Path, dump_matrix: bool) -> quatloc::Result<ExitCode> {
    let p = QPolynomial::read_file(input)?;
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    if dump_matrix {
        dump(&p)?;
    }
    let zeros = find_zeros(&p)?;
    for z in &zeros {
        println!("{z}");
        if let Some(note) = &z.note {
            eprintln!("note: {note}");
        }
    }
    if zeros.iter().all(|z| !z.is_resolved()) {
        eprintln!("error: no zero could be recovered");
        return Ok(ExitCode::from(EXIT_VIOLATION));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_sweep_command(args: &SweepArgs, verify: bool) -> quatloc::Result<ExitCode> {
    let config = args.config()?;
    let outcomes = sweep_with_threads(&config, args.threads)?;
    let report = VerifyReport::from_outcomes(&outcomes);
    if let Some(path) = &config.output {
        let mut file = BufWriter::new(File::create(path)?);
        harness::write_csv(&outcomes, &mut file)?;
        file.flush()?;
        if !verify {
            let mut summary = path.clone().into_os_string();
            summary.push(".summary.csv");
            harness::write_summary_csv(&report, File::create(PathBuf::from(summary))?)?;
        }
    } else if !verify {
        harness::write_csv(&outcomes, io::stdout().lock())?;
    }
    if verify || config.output.is_some() {
        print!("{}", report.render());
    }
    if verify && !report.is_sound() {
        return Ok(ExitCode::from(EXIT_VIOLATION));
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(feature = "parallel")]
fn sweep_with_threads(config: &BenchConfig, threads: usize) -> quatloc::Result<Vec<harness::SampleOutcome>> {
    if threads == 0 {
        return harness::run_sweep(config);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    pool.install(|| harness::run_sweep(config))
}

#[cfg(not(feature = "parallel"))]
fn sweep_with_threads(config: &BenchConfig, _threads: usize) -> quatloc::Result<Vec<harness::SampleOutcome>> {
    harness::run_sweep(config)
}
