mod config;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use capdisc::constants::{alpha_grid, table1};
use capdisc::curves::{curve_discrepancy, curve_scaling_study};
use capdisc::discrepancy::{
    cap_discrepancy_montecarlo, cap_discrepancy_stolarsky, energy_deficit, kernel_deficit,
    moment_table, moment_table_csv,
};
use capdisc::lattice::{
    epstein_zeta_closed, epstein_zeta_direct, epstein_zeta_theta, rescale_to_unit_covolume, LatticeName,
    LatticeSpec,
};
use capdisc::pointgen::{
    cross_polytope, curve_points, fibonacci_sphere, random_uniform, read_config_file,
    simplex_vertices, write_config, CurveSpec, PointConfiguration,
};
use capdisc::specfun::CoefficientRule;
use capdisc::{Error, SeedSpec};
use clap::Parser;
use serde_json::json;

use config::{Command, ConstantsTable, DiscMethod, Format, GenKind, KernelChoice, RunConfig, ZetaMethod};

/// Failure reported as `{"error": {"kind", "message"}}` on stderr.
struct Failure {
    kind: &'static str,
    message: String,
    /// Output closed early (e.g. piped into `head`); not reported.
    broken_pipe: bool,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let broken_pipe =
            matches!(&e, Error::Io(io) if io.kind() == io::ErrorKind::BrokenPipe);
        Failure {
            kind: e.kind(),
            message: e.to_string(),
            broken_pipe,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::Io(e).into()
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        kind: "usage",
        message: message.into(),
        broken_pipe: false,
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            return report(usage(e.render().to_string().trim()));
        }
    };
    if cfg.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build_global()
        {
            return report(usage(e.to_string()));
        }
    }
    match run(cfg.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.broken_pipe => ExitCode::SUCCESS,
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    let code = if f.kind == "usage" { 2 } else { 1 };
    eprintln!("{}", json!({"error": {"kind": f.kind, "message": f.message}}));
    ExitCode::from(code)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Gen {
            kind,
            d,
            n,
            seed,
            length,
            resolution,
            out,
        } => {
            let config = generate(kind, d, n, seed, length, resolution)?;
            emit(out.as_deref(), |w| Ok(write_config(&config, w)?))
        }
        Command::Disc {
            input,
            method,
            samples,
            seed,
        } => {
            let config = read_config_file(&input)?;
            let r = match method {
                DiscMethod::Stolarsky => cap_discrepancy_stolarsky(&config)?,
                DiscMethod::Mc => cap_discrepancy_montecarlo(&config, samples, SeedSpec::new(seed))?,
            };
            println!("{}", r.to_json());
            Ok(())
        }
        Command::Moments {
            input,
            m_max,
            format,
            out,
        } => {
            let config = read_config_file(&input)?;
            let rows = moment_table(&config, m_max as usize);
            emit(out.as_deref(), |w| {
                match format {
                    Format::Csv => w.write_all(moment_table_csv(&rows).as_bytes())?,
                    Format::Json => writeln!(w, "{}", json!({ "n": config.len(), "rows": rows }))?,
                }
                Ok(())
            })
        }
        Command::EnergyDeficit {
            input,
            alpha,
            kernel,
            truncation,
        } => {
            let config = read_config_file(&input)?;
            let out = match kernel {
                KernelChoice::Power => {
                    let rule = CoefficientRule::power_law(alpha)?;
                    json!({
                        "kernel": rule,
                        "energy": energy_deficit(&config, alpha)?,
                        "kernel_deficit": kernel_deficit(&config, &rule, truncation)?,
                    })
                }
                KernelChoice::InverseSqrt => {
                    let rule = CoefficientRule::InverseOnePlusSqrt;
                    json!({
                        "kernel": rule,
                        "kernel_deficit": kernel_deficit(&config, &rule, truncation)?,
                    })
                }
            };
            println!("{out}");
            Ok(())
        }
        Command::Constants {
            what,
            alphas,
            lattice,
            format,
            out,
        } => constants(what, alphas, lattice, format, out.as_deref()),
        Command::Curves {
            lengths,
            resolution,
            great_circle,
            format,
        } => {
            let mut stdout = io::stdout().lock();
            if great_circle {
                let r = curve_discrepancy(&CurveSpec::great_circle(resolution))?;
                match format {
                    Format::Json => writeln!(stdout, "{}", r.to_json())?,
                    Format::Csv => {
                        let c = r.resolution_check.expect("curve reports carry a check");
                        writeln!(stdout, "length,discrepancy,fine,relative_change")?;
                        writeln!(
                            stdout,
                            "{:.16e},{:.16e},{:.16e},{:.16e}",
                            2.0 * std::f64::consts::PI,
                            r.value,
                            c.fine,
                            c.relative_change
                        )?;
                    }
                }
            } else {
                let study = curve_scaling_study(&lengths, resolution)?;
                match format {
                    Format::Json => writeln!(
                        stdout,
                        "{}",
                        serde_json::to_string(&study).expect("study serializes")
                    )?,
                    Format::Csv => stdout.write_all(study.to_csv().as_bytes())?,
                }
            }
            Ok(())
        }
        Command::Zeta {
            lattice,
            s,
            method,
            radius,
        } => {
            let spec = LatticeSpec::new(lattice);
            let out = match method {
                ZetaMethod::Closed => json!({
                    "lattice": lattice, "s": s, "method": "closed",
                    "value": epstein_zeta_closed(&spec, s)?,
                }),
                ZetaMethod::Theta => json!({
                    "lattice": lattice, "s": s, "method": "theta",
                    "value": to_closed_normalization(&spec, s, epstein_zeta_theta(&spec, s)?),
                }),
                ZetaMethod::Direct => {
                    let radius = radius.unwrap_or_else(|| spec.radius_for_count(DIRECT_VECTORS));
                    let r = epstein_zeta_direct(&spec, s, radius)?;
                    json!({
                        "lattice": lattice, "s": s, "method": "direct",
                        "value": to_closed_normalization(&spec, s, r.value()), "radius": radius,
                        "partial_sum": to_closed_normalization(&spec, s, r.partial_sum),
                        "tail_bound": to_closed_normalization(&spec, s, r.tail_bound),
                        "vectors": r.vectors,
                    })
                }
            };
            println!("{out}");
            Ok(())
        }
    }
}

/// Rescales a value in the lattice's own normalization to the one used by
/// the closed forms, so all methods report the same function.
fn to_closed_normalization(spec: &LatticeSpec, s: f64, value: f64) -> f64 {
    if spec.closed_form_covolume() == spec.covolume {
        value
    } else {
        rescale_to_unit_covolume(value, s, spec.covolume, spec.dim)
    }
}

fn generate(
    kind: GenKind,
    d: usize,
    n: Option<usize>,
    seed: u64,
    length: Option<f64>,
    resolution: f64,
) -> Result<PointConfiguration, Failure> {
    let need_n = || n.ok_or_else(|| usage(format!("gen {kind} needs -n")));
    let config = match kind {
        GenKind::Random => random_uniform(d, need_n()?, SeedSpec::new(seed))?,
        GenKind::Fibonacci => {
            if d != 2 {
                return Err(Error::InvalidConfig(format!("fibonacci points live on S^2, not S^{d}")).into());
            }
            fibonacci_sphere(need_n()?)?
        }
        GenKind::Cross => cross_polytope(d)?,
        GenKind::Simplex => simplex_vertices(d)?,
        GenKind::GreatCircle => curve_points(&CurveSpec::great_circle(resolution), d)?,
        GenKind::Spiral => {
            let l = length.ok_or_else(|| usage("gen curve:spiral needs --length"))?;
            curve_points(&CurveSpec::spiral(l, resolution), d)?
        }
    };
    Ok(config)
}

/// Default size of the direct Epstein summation.
const DIRECT_VECTORS: f64 = 1e6;

const DEFAULT_ALPHA_STEPS: usize = 40;

fn constants(
    what: ConstantsTable,
    alphas: Option<Vec<f64>>,
    lattice: Option<LatticeName>,
    format: Format,
    out: Option<&Path>,
) -> Outcome {
    match what {
        ConstantsTable::Table1 => {
            let rows = table1()?;
            emit(out, |w| {
                match format {
                    Format::Json => writeln!(w, "{}", serde_json::to_string(&rows).expect("rows serialize"))?,
                    Format::Csv => {
                        writeln!(w, "d,lattice,c_conj,c_star3,diff,rel_error,diff_printed,rel_error_percent")?;
                        for r in &rows {
                            writeln!(
                                w,
                                "{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.3},{}",
                                r.d, r.lattice, r.c_conj, r.c_star3, r.diff, r.rel_error,
                                r.diff_printed, r.rel_error_percent
                            )?;
                        }
                    }
                }
                Ok(())
            })
        }
        ConstantsTable::Fig3Grid => {
            let alphas = alphas.unwrap_or_else(|| {
                (0..DEFAULT_ALPHA_STEPS).map(|k| 2.0 * k as f64 / DEFAULT_ALPHA_STEPS as f64).collect()
            });
            let lattices = match lattice {
                Some(l) => vec![l],
                None => LatticeName::ALL.to_vec(),
            };
            let mut grids = Vec::new();
            for name in lattices {
                grids.push((name, alpha_grid(&LatticeSpec::new(name), &alphas)?));
            }
            emit(out, |w| {
                match format {
                    Format::Json => {
                        let v: Vec<_> = grids
                            .iter()
                            .map(|(name, rows)| json!({"lattice": name, "rows": rows}))
                            .collect();
                        writeln!(w, "{}", serde_json::Value::Array(v))?;
                    }
                    Format::Csv => {
                        writeln!(w, "lattice,d,alpha,c_conj,c_asymp,rel_error")?;
                        for (name, rows) in &grids {
                            for r in rows {
                                writeln!(
                                    w,
                                    "{},{},{:.16e},{:.16e},{:.16e},{:.16e}",
                                    name, r.d, r.alpha, r.c_conj, r.c_asymp, r.rel_error
                                )?;
                            }
                        }
                    }
                }
                Ok(())
            })
        }
    }
}

/// Runs `f` against the file at `path`, or standard output.
fn emit(path: Option<&Path>, f: impl FnOnce(&mut dyn Write) -> Outcome) -> Outcome {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            f(&mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = io::stdout().lock();
            f(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}
