//! Text format: header `d N [weighted]`, then `N` rows of `d+1` coordinates
//! (and a trailing weight when weighted), 17 significant digits.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::{PointConfiguration, NORM_TOL};
use crate::{Error, Result};

pub fn write_config<W: Write>(config: &PointConfiguration, mut out: W) -> Result<()> {
    let weighted = !config.is_uniform();
    writeln!(
        out,
        "{} {}{}",
        config.dim(),
        config.len(),
        if weighted { " weighted" } else { "" }
    )?;
    let mut line = String::new();
    for (p, w) in config.points().zip(config.weights()) {
        line.clear();
        for (k, x) in p.iter().enumerate() {
            if k > 0 {
                line.push(' ');
            }
            line.push_str(&format!("{x:.16e}"));
        }
        if weighted {
            line.push_str(&format!(" {w:.16e}"));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

pub fn write_config_file(config: &PointConfiguration, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_config(config, &mut w)?;
    w.flush()?;
    Ok(())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn read_config<R: Read>(input: R) -> Result<PointConfiguration> {
    let reader = BufReader::new(input);
    let mut lines = reader
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| l.as_ref().map_or(true, |s| !s.trim().is_empty()));
    let (hline, header) = match lines.next() {
        Some((i, l)) => (i, l?),
        None => return Err(parse_err(1, "empty input")),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if !(2..=3).contains(&fields.len()) {
        return Err(parse_err(hline, "header must be 'd N [weighted]'"));
    }
    let d: usize = fields[0]
        .parse()
        .map_err(|_| parse_err(hline, format!("bad dimension '{}'", fields[0])))?;
    let n: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(hline, format!("bad point count '{}'", fields[1])))?;
    let weighted = match fields.get(2) {
        None => false,
        Some(&"weighted") => true,
        Some(other) => return Err(parse_err(hline, format!("unknown header flag '{other}'"))),
    };
    let width = d + 1 + usize::from(weighted);
    let mut rows = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let mut last = hline;
    for _ in 0..n {
        let (i, l) = match lines.next() {
            Some((i, l)) => (i, l?),
            None => return Err(parse_err(last + 1, format!("expected {n} points, found {}", rows.len()))),
        };
        last = i;
        let vals: Vec<f64> = l
            .split_whitespace()
            .map(|t| t.parse::<f64>().map_err(|_| parse_err(i, format!("bad number '{t}'"))))
            .collect::<Result<_>>()?;
        if vals.len() != width {
            return Err(parse_err(i, format!("expected {width} values, found {}", vals.len())));
        }
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(parse_err(i, "non-finite value"));
        }
        let norm2: f64 = vals[..=d].iter().map(|v| v * v).sum();
        if (norm2.sqrt() - 1.0).abs() > NORM_TOL {
            return Err(parse_err(i, format!("point has norm {}, expected 1", norm2.sqrt())));
        }
        if weighted {
            if !(vals[d + 1] > 0.0) {
                return Err(parse_err(i, "weights must be positive"));
            }
            weights.push(vals[d + 1]);
        }
        rows.push(vals[..=d].to_vec());
    }
    if let Some((i, _)) = lines.next() {
        return Err(parse_err(i, "trailing data after the declared points"));
    }
    let result = if weighted {
        PointConfiguration::with_weights(d, rows, weights)
    } else {
        PointConfiguration::new(d, rows)
    };
    result.map_err(|e| match e {
        Error::InvalidConfig(m) => parse_err(hline, m),
        other => other,
    })
}

pub fn read_config_file(path: &Path) -> Result<PointConfiguration> {
    read_config(File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointgen::{curve_points, fibonacci_sphere, random_uniform, CurveSpec};
    use crate::SeedSpec;

    #[test]
    fn round_trip_is_exact() {
        for c in [
            random_uniform(3, 50, SeedSpec::new(11)).unwrap(),
            fibonacci_sphere(21).unwrap(),
            curve_points(&CurveSpec::great_circle(8.0), 2).unwrap(),
        ] {
            let mut buf = Vec::new();
            write_config(&c, &mut buf).unwrap();
            let back = read_config(buf.as_slice()).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "2 2\n1 0 0\n0 1 x\n";
        match read_config(bad.as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        let short = "2 3\n1 0 0\n0 1 0\n";
        assert!(matches!(read_config(short.as_bytes()), Err(Error::Parse { line: 4, .. })));
        let width = "2 1\n1 0\n";
        assert!(matches!(read_config(width.as_bytes()), Err(Error::Parse { line: 2, .. })));
        let norm = "2 1\n1 1 0\n";
        assert!(matches!(read_config(norm.as_bytes()), Err(Error::Parse { .. })));
    }
}
