//! Data-producing backends of the command-line interface: single-point
//! evaluation, F-sweeps, and the verification harness. The binary in
//! `main.rs` is a thin argument-parsing layer over these.

use serde::Serialize;

use crate::angular::SpinLabel;
use crate::error::Error;
use crate::holevo::{LogBase, holevo_closed, holevo_numeric};
use crate::measurement::{
    MeasurementFrame, conditional_ensemble_closed, conditional_ensemble_numeric,
};
use crate::states::{Su2InvariantState, check_su2_invariance};

/// Sweep output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl Serialize for OutputFormat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

/// Everything a sweep needs: which spins, the F grid, and how to print.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSpec {
    pub two_j_list: Vec<u32>,
    pub f_min: f64,
    pub f_max: f64,
    pub steps: usize,
    pub log_base: LogBase,
    pub output_format: OutputFormat,
}

impl SweepSpec {
    fn validate(&self) -> Result<(), Error> {
        if self.two_j_list.is_empty() {
            return Err(Error::InvalidArgument(
                "two_j list must not be empty".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.f_min) || !(0.0..=1.0).contains(&self.f_max) {
            return Err(Error::InvalidArgument("F bounds must lie in [0, 1]".into()));
        }
        if self.f_min >= self.f_max {
            return Err(Error::InvalidArgument(format!(
                "f_min = {} must be below f_max = {}",
                self.f_min, self.f_max
            )));
        }
        if self.steps < 2 {
            return Err(Error::InvalidArgument("steps must be at least 2".into()));
        }
        Ok(())
    }

    /// Uniform grid over `[f_min, f_max]`, both endpoints included exactly.
    pub fn f_grid(&self) -> Vec<f64> {
        uniform_grid(self.f_min, self.f_max, self.steps)
    }
}

pub fn uniform_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let d = (steps - 1) as f64;
    (0..steps)
        .map(|i| (lo * (d - i as f64) + hi * i as f64) / d)
        .collect()
}

/// One `(two_j, F, chi)` grid point.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepRow {
    pub two_j: u32,
    #[serde(rename = "F")]
    pub f: f64,
    pub chi: f64,
}

/// Evaluates the closed form on the grid; rows ordered by `(two_j, F)`.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>, Error> {
    spec.validate()?;
    let mut two_js = spec.two_j_list.clone();
    two_js.sort_unstable();
    two_js.dedup();
    let grid = spec.f_grid();

    let mut rows = Vec::with_capacity(two_js.len() * grid.len());
    for &two_j in &two_js {
        let j = SpinLabel::new(two_j)?;
        for &f in &grid {
            let s = Su2InvariantState::new(j, f)?;
            let chi = holevo_closed(&s, spec.log_base).chi;
            rows.push(SweepRow { two_j, f, chi });
        }
    }
    Ok(rows)
}

/// Formats with 12 significant digits (lossless for the tolerances asserted
/// downstream, and stable across runs).
pub fn fmt_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// CSV with header `two_j,F,chi`, LF newlines, 12 significant digits.
pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("two_j,F,chi\n");
    for row in rows {
        out.push_str(&row.two_j.to_string());
        out.push(',');
        out.push_str(&fmt_sig12(row.f));
        out.push(',');
        out.push_str(&fmt_sig12(row.chi));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct SweepDocument<'a> {
    spec: &'a SweepSpec,
    rows: &'a [SweepRow],
}

/// JSON document `{spec, rows}` with the rows as `{two_j, F, chi}` objects.
pub fn render_json(spec: &SweepSpec, rows: &[SweepRow]) -> String {
    let doc = SweepDocument { spec, rows };
    let mut s = serde_json::to_string_pretty(&doc).expect("sweep document serializes");
    s.push('\n');
    s
}

/// Single-point evaluation as printed by the `value` subcommand.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ValueReport {
    pub two_j: u32,
    pub f: f64,
    pub log_base: LogBase,
    pub chi: f64,
    pub marginal_entropy: f64,
    pub mean_conditional_entropy: f64,
    pub holevo_zero_f: f64,
    pub separability_f: f64,
}

pub fn evaluate_point(two_j: u32, f: f64, base: LogBase) -> Result<ValueReport, Error> {
    let s = Su2InvariantState::new(SpinLabel::new(two_j)?, f)?;
    let result = holevo_closed(&s, base);
    Ok(ValueReport {
        two_j,
        f,
        log_base: base,
        chi: result.chi,
        marginal_entropy: result.marginal_entropy,
        mean_conditional_entropy: result.mean_conditional_entropy,
        holevo_zero_f: s.holevo_zero_f(),
        separability_f: s.separability_f(),
    })
}

/// Inputs of the verification harness.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub two_j_list: Vec<u32>,
    pub f_grid: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
}

/// Worst-case residuals of the three certified properties, and the verdict.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyReport {
    pub trials: usize,
    pub max_closed_vs_numeric_gap: f64,
    pub max_frame_spread: f64,
    pub max_invariance_residual: f64,
    pub pass: bool,
}

/// Runs the oracle-equivalence, frame-independence and SU(2)-invariance
/// checks over the whole grid. Deterministic for a given seed.
pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport, Error> {
    if cfg.trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if cfg.two_j_list.is_empty() || cfg.f_grid.is_empty() {
        return Err(Error::InvalidArgument(
            "verification grid must not be empty".into(),
        ));
    }

    let mut max_gap = 0.0f64;
    let mut max_spread = 0.0f64;
    let mut max_residual = 0.0f64;

    for (jdx, &two_j) in cfg.two_j_list.iter().enumerate() {
        let j = SpinLabel::new(two_j)?;
        for (fdx, &f) in cfg.f_grid.iter().enumerate() {
            let s = Su2InvariantState::new(j, f)?;
            let rho = s.density_matrix();
            max_residual = max_residual.max(check_su2_invariance(&rho, j)?);

            let closed_chi = holevo_closed(&s, LogBase::Two).chi;
            let point_seed = cfg
                .seed
                .wrapping_add((jdx as u64) << 32)
                .wrapping_add(fdx as u64);
            let mut chi_min = f64::INFINITY;
            let mut chi_max = f64::NEG_INFINITY;
            for frame in MeasurementFrame::sample_many(point_seed, cfg.trials) {
                let closed = conditional_ensemble_closed(&s, frame);
                let numeric = conditional_ensemble_numeric(&rho, frame, j)?;
                for ((pc, rc), (pn, rn)) in closed.entries().iter().zip(numeric.entries()) {
                    max_gap = max_gap.max((pc - pn).abs()).max(rc.max_abs_diff(rn));
                }
                let chi = holevo_numeric(&rho, frame, j, LogBase::Two)?.chi;
                max_gap = max_gap.max((chi - closed_chi).abs());
                chi_min = chi_min.min(chi);
                chi_max = chi_max.max(chi);
            }
            max_spread = max_spread.max(chi_max - chi_min);
        }
    }

    Ok(VerifyReport {
        trials: cfg.trials,
        max_closed_vs_numeric_gap: max_gap,
        max_frame_spread: max_spread,
        max_invariance_residual: max_residual,
        pass: max_gap <= cfg.tol && max_spread <= cfg.tol && max_residual <= cfg.tol,
    })
}
