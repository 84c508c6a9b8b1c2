//! Command-line flags. The parsed form doubles as the serializable run record.

use std::f64::consts::PI;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use capdisc::lattice::LatticeName;
use capdisc::pointgen::CurveSpec;
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Parser, Serialize, Deserialize)]
#[command(name = "capdisc", version, about = "Spherical cap L2 discrepancy toolkit")]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Worker threads (0 = all cores). Results do not depend on this.
    #[arg(long, global = true, env = "CAPDISC_THREADS", default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscMethod {
    Stolarsky,
    Mc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelChoice {
    /// `1 - (1 - t)^(α/2)`, the Riesz `α`-energy kernel.
    Power,
    /// `1/(1 + sqrt(1 - t)) - 1/2`.
    InverseSqrt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaMethod {
    Closed,
    Direct,
    Theta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstantsTable {
    Table1,
    Fig3Grid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    Random,
    Fibonacci,
    Cross,
    Simplex,
    GreatCircle,
    Spiral,
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "random" => Ok(Self::Random),
            "fibonacci" => Ok(Self::Fibonacci),
            "cross" => Ok(Self::Cross),
            "simplex" => Ok(Self::Simplex),
            "curve:great_circle" => Ok(Self::GreatCircle),
            "curve:spiral" => Ok(Self::Spiral),
            _ => Err(format!(
                "unknown kind '{s}' (random, fibonacci, cross, simplex, curve:great_circle, curve:spiral)"
            )),
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Random => "random",
            Self::Fibonacci => "fibonacci",
            Self::Cross => "cross",
            Self::Simplex => "simplex",
            Self::GreatCircle => "curve:great_circle",
            Self::Spiral => "curve:spiral",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Command {
    /// Generate a point configuration file.
    Gen {
        /// random | fibonacci | cross | simplex | curve:great_circle | curve:spiral
        kind: GenKind,
        #[arg(short, long, default_value_t = 2)]
        d: usize,
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Spiral length, e.g. `8pi`.
        #[arg(long, value_parser = parse_length)]
        length: Option<f64>,
        /// Curve segments per unit length.
        #[arg(long, default_value_t = CurveSpec::DEFAULT_RESOLUTION)]
        resolution: f64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Cap discrepancy of a configuration file, as JSON.
    Disc {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DiscMethod::Stolarsky)]
        method: DiscMethod,
        /// Monte Carlo sample count; accepts `1e6`.
        #[arg(long, value_parser = parse_count, default_value = "1e6")]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Moment deficits `S(m)` for `m = 1..=m_max`.
    Moments {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Energy and kernel deficits of a configuration.
    EnergyDeficit {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = KernelChoice::Power)]
        kernel: KernelChoice,
        #[arg(long, default_value_t = capdisc::discrepancy::DEFAULT_TRUNCATION)]
        truncation: usize,
    },
    /// Conjectured and asymptotic constants.
    Constants {
        #[arg(value_enum)]
        what: ConstantsTable,
        /// Comma-separated α grid for fig3-grid (default 0, 0.05, ..., 1.95).
        #[arg(long, value_delimiter = ',')]
        alphas: Option<Vec<f64>>,
        /// Restrict fig3-grid to one lattice.
        #[arg(long, value_parser = parse_lattice)]
        lattice: Option<LatticeName>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Spiral length study, or the great circle alone.
    Curves {
        /// Comma-separated lengths; `pi` suffixes allowed (`2pi,4pi`).
        #[arg(long, value_delimiter = ',', value_parser = parse_length,
              default_value = "2pi,4pi,8pi,16pi,32pi")]
        lengths: Vec<f64>,
        #[arg(long, default_value_t = CurveSpec::DEFAULT_RESOLUTION)]
        resolution: f64,
        /// Report the great circle instead of the spiral study.
        #[arg(long)]
        great_circle: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Epstein zeta function of a named lattice.
    Zeta {
        #[arg(long, value_parser = parse_lattice)]
        lattice: LatticeName,
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long, value_enum, default_value_t = ZetaMethod::Closed)]
        method: ZetaMethod,
        /// Summation radius for the direct method (default: about 10^6 vectors).
        #[arg(long)]
        radius: Option<f64>,
    },
}

fn parse_lattice(s: &str) -> Result<LatticeName, String> {
    s.parse().map_err(|e: capdisc::Error| e.to_string())
}

/// Non-negative integer written either plainly or in float notation (`1e6`).
pub fn parse_count(s: &str) -> Result<usize, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    let x: f64 = s.parse().map_err(|_| format!("not a count: '{s}'"))?;
    if x >= 0.0 && x.fract() == 0.0 && x < 2f64.powi(53) {
        Ok(x as usize)
    } else {
        Err(format!("not a non-negative integer: '{s}'"))
    }
}

/// A length such as `3.5`, `pi`, `4pi` or `4π`.
pub fn parse_length(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let (coef, pi) = if let Some(c) = t.strip_suffix("pi").or_else(|| t.strip_suffix('π')) {
        (c.trim_end_matches('*'), true)
    } else {
        (t, false)
    };
    let c = if pi && coef.is_empty() {
        1.0
    } else {
        coef.parse::<f64>().map_err(|_| format!("not a length: '{s}'"))?
    };
    let v = if pi { c * PI } else { c };
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("length must be positive: '{s}'"))
    }
}
