//! Gap experiments and report export.
//!
//! A gap experiment builds one family instance, bisects it spectrally,
//! and compares the cut against the witness bisection and (at small
//! orders) the exhaustive optimum. The sweep over instances certifies
//! the quadratic error bound: the spectral cut exceeds the best known
//! bisection by more than n²/384 once n > 48, while staying below n²/2.

use fiedler_core::bisect::{self, median, sign_partition};
use fiedler_core::eigen::fiedler_space;
use fiedler_core::family::{build_family, lambda_pm, FamilySpec};
use fiedler_core::oracle::{
    self, optimal_bisection, zero_assignment_sweep, ENUMERATION_CAP, ZERO_SWEEP_CAP,
};

use crate::generators::{BaseKind, FamilyConfig};
use crate::HarnessError;

/// Orders above this have the quadratic lower bound asserted; below it the
/// report carries values without a pass/fail verdict.
pub const BOUND_MIN_ORDER: usize = 48;

/// Per-instance record of the spectral, witness, and oracle cuts and the
/// two error thresholds.
#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub lambda2_numeric: f64,
    pub lambda2_analytic: f64,
    /// Min cut over the computed Fiedler-space basis, sweeping zero
    /// assignments where feasible.
    pub spectral_cut: u64,
    pub witness_cut: u64,
    /// Exhaustive optimum, present iff n is within the enumeration cap.
    pub oracle_cut: Option<u64>,
    /// spectral_cut minus the best known optimum upper bound.
    pub error_lower: i64,
    /// n²/384.
    pub theorem_threshold: f64,
    /// n²/2.
    pub upper_threshold: f64,
    /// `Some(error_lower > n²/384)` when n > 48, `None` otherwise.
    pub passes_lower: Option<bool>,
    /// `error_lower < n²/2`.
    pub passes_upper: bool,
}

impl GapReport {
    pub fn bound_failed(&self) -> bool {
        self.passes_lower == Some(false) || !self.passes_upper
    }
}

/// Build the instance, bisect along every Fiedler-space basis vector, and
/// assemble the report.
pub fn run_gap_experiment(spec: &FamilySpec) -> Result<GapReport, HarnessError> {
    let (g, l) = build_family(spec)?;
    let n = g.n();
    let m = spec.m();
    let k = spec.cone_count();

    let es = fiedler_space(&l)?;
    let mut spectral_cut = u64::MAX;
    for v in es.basis() {
        let med = median(v)?;
        let shifted: Vec<f64> = v.iter().map(|x| x - med).collect();
        let p = sign_partition(&shifted)?;
        let cut = if p.zero().len() <= ZERO_SWEEP_CAP {
            zero_assignment_sweep(&g, &p)?.0
        } else {
            bisect::spectral_bisection(&g, v)?.cut()
        };
        spectral_cut = spectral_cut.min(cut);
    }

    let witness_cut = oracle::witness_cut(spec)?;
    let oracle_cut = if n <= ENUMERATION_CAP {
        Some(optimal_bisection(&g)?.best_cut())
    } else {
        None
    };
    let best_known = oracle_cut.map_or(witness_cut, |o| o.min(witness_cut));
    let error_lower = spectral_cut as i64 - best_known as i64;

    let nf = n as f64;
    let theorem_threshold = nf * nf / 384.0;
    let upper_threshold = nf * nf / 2.0;
    let passes_lower =
        (n > BOUND_MIN_ORDER).then(|| error_lower as f64 > theorem_threshold);
    let passes_upper = (error_lower as f64) < upper_threshold;

    Ok(GapReport {
        n,
        m,
        k,
        lambda2_numeric: es.eigenvalue(),
        lambda2_analytic: lambda_pm(m).0 + k as f64,
        spectral_cut,
        witness_cut,
        oracle_cut,
        error_lower,
        theorem_threshold,
        upper_threshold,
        passes_lower,
        passes_upper,
    })
}

/// One report per `(m, k)` pair, in input order.
pub fn verify_sweep(
    m_values: &[usize],
    base: &BaseKind,
    k_values: &[usize],
) -> Result<Vec<GapReport>, HarnessError> {
    let mut reports = Vec::new();
    for &m in m_values {
        for &k in k_values {
            let spec = FamilyConfig::uniform(m, base.clone(), k).build()?;
            reports.push(run_gap_experiment(&spec)?);
        }
    }
    Ok(reports)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl ReportFormat {
    pub fn parse(name: &str) -> Result<Self, HarnessError> {
        match name {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(HarnessError::UnknownFormat { format: other.into() }),
        }
    }
}

/// Render a real with 12 significant digits, `%g`-style.
pub fn sig12(x: f64) -> String {
    significant(x, 12)
}

fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mant, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let neg = mant.starts_with('-');
    let ds: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(ds.len(), digits);

    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp >= digits as i32 - 1 && exp <= 15 {
        out.push_str(&ds);
        for _ in 0..(exp as usize + 1 - digits) {
            out.push('0');
        }
    } else if (0..digits as i32).contains(&exp) {
        let point = exp as usize + 1;
        out.push_str(&ds[..point]);
        let frac = ds[point..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    } else if (-4..0).contains(&exp) {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(ds.trim_end_matches('0'));
    } else {
        out.push_str(&ds[..1]);
        let frac = ds[1..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push('e');
        out.push_str(&exp.to_string());
    }
    out
}

fn json_object(r: &GapReport) -> String {
    let oracle = r
        .oracle_cut
        .map_or("null".to_string(), |c| c.to_string());
    let lower = r
        .passes_lower
        .map_or("null".to_string(), |b| b.to_string());
    format!(
        "{{\"n\": {}, \"m\": {}, \"k\": {}, \"lambda2_numeric\": {}, \"lambda2_analytic\": {}, \
         \"spectral_cut\": {}, \"witness_cut\": {}, \"oracle_cut\": {}, \"error_lower\": {}, \
         \"theorem_threshold\": {}, \"upper_threshold\": {}, \"passes_lower\": {}, \
         \"passes_upper\": {}}}",
        r.n,
        r.m,
        r.k,
        sig12(r.lambda2_numeric),
        sig12(r.lambda2_analytic),
        r.spectral_cut,
        r.witness_cut,
        oracle,
        r.error_lower,
        sig12(r.theorem_threshold),
        sig12(r.upper_threshold),
        lower,
        r.passes_upper,
    )
}

pub const CSV_HEADER: &str = "n,m,k,lambda2_numeric,lambda2_analytic,spectral_cut,witness_cut,\
oracle_cut,error_lower,theorem_threshold,upper_threshold,passes_lower,passes_upper";

fn csv_row(r: &GapReport) -> String {
    let oracle = r.oracle_cut.map_or(String::new(), |c| c.to_string());
    let lower = r.passes_lower.map_or(String::new(), |b| b.to_string());
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.n,
        r.m,
        r.k,
        sig12(r.lambda2_numeric),
        sig12(r.lambda2_analytic),
        r.spectral_cut,
        r.witness_cut,
        oracle,
        r.error_lower,
        sig12(r.theorem_threshold),
        sig12(r.upper_threshold),
        lower,
        r.passes_upper,
    )
}

/// Single report: a JSON object, or a CSV header plus one row.
pub fn export_one(r: &GapReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = json_object(r);
            s.push('\n');
            s
        }
        ReportFormat::Csv => format!("{CSV_HEADER}\n{}\n", csv_row(r)),
    }
}

/// Report list: a JSON array, or a CSV header plus one row per report.
pub fn export_many(reports: &[GapReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut out = String::from("[\n");
            for (i, r) in reports.iter().enumerate() {
                out.push_str("  ");
                out.push_str(&json_object(r));
                if i + 1 < reports.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str("]\n");
            out
        }
        ReportFormat::Csv => {
            let mut out = format!("{CSV_HEADER}\n");
            for r in reports {
                out.push_str(&csv_row(r));
                out.push('\n');
            }
            out
        }
    }
}
