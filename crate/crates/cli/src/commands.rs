use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use qshare::entanglement::{max_i_concurrence, PureBipartiteState};
use qshare::noise::{channel_coefficients, local_output, nonlocal_output, NoiseChannelParams};
use qshare::protocol::{run_rounds_with, security_audit, ProtocolSetup, SimulationSummary};
use qshare::qmath::DensityMatrix;
use qshare::witness::{audit_point, critical_concurrence, StateVerdicts};
use serde::Serialize;

use crate::format::{num, round12, write_json, CsvWriter, Format};
use crate::CliError;

/// Parses `N` or `A..B` (inclusive).
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => parse(s).map(|n| n..=n),
    }
}

#[derive(Serialize)]
struct MaxentRow {
    r: usize,
    k: usize,
    max_i_concurrence: f64,
    increasing: bool,
}

pub fn maxent(
    out: &mut impl Write,
    r: Option<RangeInclusive<usize>>,
    k: RangeInclusive<usize>,
    format: Format,
) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for k in k {
        let rs = r.clone().unwrap_or(2..=k);
        let mut previous = f64::NEG_INFINITY;
        for r in rs {
            if r > k && r >= 2 {
                log::debug!("skipping r={r} > k={k}");
                continue;
            }
            let v = max_i_concurrence(r, k)?;
            rows.push(MaxentRow {
                r,
                k,
                max_i_concurrence: round12(v),
                increasing: v > previous,
            });
            previous = v;
        }
    }
    if rows.is_empty() {
        return Err(CliError::Domain("no (r, k) pair with 2 ≤ r ≤ k".into()));
    }
    match format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            let mut w = CsvWriter::new(out, &["r", "k", "max_i_concurrence", "increasing"])?;
            for row in &rows {
                w.row(&[
                    row.r.to_string(),
                    row.k.to_string(),
                    num(row.max_i_concurrence),
                    row.increasing.to_string(),
                ])?;
            }
        }
    }
    Ok(())
}

pub fn default_c_grid() -> Vec<f64> {
    (0..=8).map(|i| round12(0.6 + 0.05 * i as f64)).collect()
}

#[derive(Serialize)]
struct ThresholdRow {
    c: f64,
    critical_concurrence: f64,
    #[serde(rename = "Q")]
    q: f64,
    #[serde(rename = "R")]
    r: f64,
}

/// Out-of-domain values are reported on stderr; the remaining rows are still
/// written and the returned error carries the count.
pub fn threshold(out: &mut impl Write, cs: &[f64], format: Format) -> Result<(), CliError> {
    let mut rows = Vec::new();
    let mut rejected = 0;
    for &c in cs {
        let row = critical_concurrence(c).and_then(|cr| {
            let co = channel_coefficients(&NoiseChannelParams::from_c(c, 2)?);
            Ok(ThresholdRow {
                c: round12(c),
                critical_concurrence: round12(cr),
                q: round12(co.q),
                r: round12(co.r),
            })
        });
        match row {
            Ok(row) => rows.push(row),
            Err(e) => {
                rejected += 1;
                log::error!("c = {c}: {e}");
            }
        }
    }
    match format {
        Format::Json => write_json(&mut *out, &rows)?,
        Format::Csv => {
            let mut w = CsvWriter::new(&mut *out, &["c", "critical_concurrence", "Q", "R"])?;
            for row in &rows {
                w.row(&[num(row.c), num(row.critical_concurrence), num(row.q), num(row.r)])?;
            }
        }
    }
    if rejected > 0 {
        return Err(CliError::Domain(format!("{rejected} value(s) of c outside (1/√3, 1]")));
    }
    Ok(())
}

#[derive(Serialize)]
struct OutputReport {
    output: &'static str,
    /// Real parts, row by row; every output of this channel is real.
    matrix: Vec<Vec<f64>>,
    w1_expectation: f64,
    w2_expectation: f64,
    witness_detects: bool,
    ppt_entangled: bool,
    min_pt_eigenvalue: f64,
    wootters_concurrence: f64,
}

impl OutputReport {
    fn new(output: &'static str, rho: &DensityMatrix, v: &StateVerdicts) -> Self {
        let n = rho.dim();
        Self {
            output,
            matrix: (0..n)
                .map(|i| (0..n).map(|j| round12(rho[(i, j)].re)).collect())
                .collect(),
            w1_expectation: round12(v.w1_expectation),
            w2_expectation: round12(v.w2_expectation),
            witness_detects: v.witness_detects,
            ppt_entangled: v.ppt_entangled,
            min_pt_eigenvalue: round12(v.min_pt_eigenvalue),
            wootters_concurrence: round12(v.wootters_concurrence),
        }
    }

    fn verdict(&self) -> &'static str {
        if self.ppt_entangled {
            "entangled"
        } else {
            "separable"
        }
    }
}

#[derive(Serialize)]
struct StateReport {
    lambda1: f64,
    c: f64,
    input_concurrence: f64,
    critical_concurrence: Option<f64>,
    margin: f64,
    outputs: [OutputReport; 2],
}

pub fn state(out: &mut impl Write, lambda1: f64, c: f64, format: Option<Format>) -> Result<(), CliError> {
    let point = audit_point(lambda1, c)?;
    let s = PureBipartiteState::two_qubit(lambda1)?;
    let p = NoiseChannelParams::from_c(c, 2)?;
    let report = StateReport {
        lambda1: round12(lambda1),
        c: round12(c),
        input_concurrence: round12(point.input_concurrence),
        critical_concurrence: point.critical_concurrence.map(round12),
        margin: round12(point.margin),
        outputs: [
            OutputReport::new("local", &local_output(&s, &p)?, &point.local),
            OutputReport::new("nonlocal", &nonlocal_output(&s, &p)?, &point.nonlocal),
        ],
    };
    match format {
        Some(Format::Json) => write_json(out, &report)?,
        Some(Format::Csv) => {
            let mut w = CsvWriter::new(
                out,
                &[
                    "output",
                    "lambda1",
                    "c",
                    "w1_expectation",
                    "w2_expectation",
                    "witness_detects",
                    "ppt_entangled",
                    "min_pt_eigenvalue",
                    "wootters_concurrence",
                ],
            )?;
            for o in &report.outputs {
                w.row(&[
                    o.output.into(),
                    num(report.lambda1),
                    num(report.c),
                    num(o.w1_expectation),
                    num(o.w2_expectation),
                    o.witness_detects.to_string(),
                    o.ppt_entangled.to_string(),
                    num(o.min_pt_eigenvalue),
                    num(o.wootters_concurrence),
                ])?;
            }
        }
        None => write_state_text(out, &report)?,
    }
    Ok(())
}

fn write_state_text(out: &mut impl Write, r: &StateReport) -> io::Result<()> {
    writeln!(out, "input: λ₁ = {}, c = {}", num(r.lambda1), num(r.c))?;
    writeln!(out, "input concurrence: {}", num(r.input_concurrence))?;
    match r.critical_concurrence {
        Some(cr) => writeln!(out, "critical concurrence: {}", num(cr))?,
        None => writeln!(out, "critical concurrence: undefined for this c")?,
    }
    writeln!(out, "margin Q√(λ₁λ₂) − R: {}", num(r.margin))?;
    for o in &r.outputs {
        writeln!(out)?;
        writeln!(out, "{} output:", o.output)?;
        for row in &o.matrix {
            let cells: Vec<String> = row.iter().map(|&x| format!("{:>16}", num(x))).collect();
            writeln!(out, "  {}", cells.join(""))?;
        }
        writeln!(out, "  Tr(W1 ρ) = {}", num(o.w1_expectation))?;
        writeln!(out, "  Tr(W2 ρ) = {}", num(o.w2_expectation))?;
        writeln!(out, "  witness detects: {}", o.witness_detects)?;
        writeln!(out, "  partial transpose min eigenvalue: {}", num(o.min_pt_eigenvalue))?;
        writeln!(out, "  Wootters concurrence: {}", num(o.wootters_concurrence))?;
        writeln!(out, "  verdict: {}", o.verdict())?;
    }
    Ok(())
}

pub fn simulate(
    out: &mut impl Write,
    rounds: u64,
    c: f64,
    seed: u64,
    transcript: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    let p = NoiseChannelParams::from_c(c, 2)?;
    let setup = ProtocolSetup::new(&p)?;
    log::info!("running {rounds} rounds at c = {c} with seed {seed}");
    let t = run_rounds_with(&setup, rounds, seed)?;
    let security = security_audit(&p)?;
    let raw = SimulationSummary::new(&t, &setup, &security);
    let summary = SimulationSummary {
        n: raw.n,
        c: round12(raw.c),
        q: round12(raw.q),
        success_rate: round12(raw.success_rate),
        helstrom_bound: round12(raw.helstrom_bound),
        security_max_deviation: round12(raw.security_max_deviation),
    };
    if let Some(path) = transcript {
        let file = File::create(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        let mut w = BufWriter::new(file);
        t.write_jsonl(&mut w)
            .and_then(|()| w.flush())
            .map_err(|e| CliError::Io(path.display().to_string(), e))?;
        log::info!("transcript written to {}", path.display());
    }
    match format {
        Format::Json => write_json(out, &summary)?,
        Format::Csv => {
            let mut w = CsvWriter::new(
                out,
                &[
                    "n",
                    "c",
                    "Q",
                    "success_rate",
                    "helstrom_bound",
                    "security_max_deviation",
                ],
            )?;
            w.row(&[
                summary.n.to_string(),
                num(summary.c),
                num(summary.q),
                num(summary.success_rate),
                num(summary.helstrom_bound),
                num(summary.security_max_deviation),
            ])?;
        }
    }
    Ok(())
}
