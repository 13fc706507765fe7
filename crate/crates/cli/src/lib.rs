//! Command implementations and I/O formats for the `qga` binary.
//!
//! A two-qubit state enters either as a JSON document with an `amplitudes`
//! field holding four `[re, im]` pairs in the order `(c00, c01, c10, c11)`,
//! or inline as eight comma-separated reals. Every command emits a
//! deterministic key-value report (or CSV for curves); `--xcheck` appends
//! residuals against the independent matrix oracle without touching the
//! primary fields.

use num_complex::Complex64;
use qga_core::msta2::{self, TwoParticleMV};
use qga_core::schmidt;
use qga_core::spinor1::{spinor_theta_phi, Spinor1};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance on `|norm^2 - 1|` for inputs that must arrive normalized.
pub const INPUT_NORM_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad invocation: exit status 2.
    #[error("{0}")]
    Usage(String),
    /// Bad input data or an impossible computation: exit status 1.
    #[error("{0}")]
    Domain(String),
}

impl From<qga_core::Error> for CliError {
    fn from(e: qga_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// The on-disk state document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateSpec {
    /// Four `[re, im]` pairs, order `(c00, c01, c10, c11)`.
    pub amplitudes: [[f64; 2]; 4],
    /// Renormalize the amplitudes before use.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalize: Option<bool>,
}

impl StateSpec {
    pub fn amplitudes(&self) -> [Complex64; 4] {
        self.amplitudes.map(|[re, im]| Complex64::new(re, im))
    }

    fn validate(&self) -> Result<(), CliError> {
        let amps = self.amplitudes();
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if !norm_sq.is_finite() {
            return Err(CliError::Domain(
                "state amplitudes must be finite and representable".into(),
            ));
        }
        if norm_sq == 0.0 {
            return Err(CliError::Domain("state has no nonzero amplitude".into()));
        }
        Ok(())
    }
}

/// Parse and validate a state document.
pub fn parse_state_spec(text: &str) -> Result<StateSpec, CliError> {
    let spec: StateSpec = serde_json::from_str(text)
        .map_err(|e| CliError::Domain(format!("cannot parse state document: {e}")))?;
    spec.validate()?;
    Ok(spec)
}

/// Parse an inline amplitude list: eight comma-separated reals,
/// `re00,im00,re01,im01,re10,im10,re11,im11`.
pub fn parse_inline_amplitudes(text: &str) -> Result<StateSpec, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 8 {
        return Err(CliError::Domain(format!(
            "inline amplitudes need exactly 8 comma-separated reals, got {}",
            parts.len()
        )));
    }
    let mut values = [0.0f64; 8];
    for (v, p) in values.iter_mut().zip(parts.iter()) {
        *v = p
            .parse()
            .map_err(|e| CliError::Domain(format!("cannot parse amplitude {p:?}: {e}")))?;
    }
    let spec = StateSpec {
        amplitudes: [
            [values[0], values[1]],
            [values[2], values[3]],
            [values[4], values[5]],
            [values[6], values[7]],
        ],
        normalize: None,
    };
    spec.validate()?;
    Ok(spec)
}

/// Apply the normalization policy: renormalize when requested, otherwise
/// insist the state arrives unit-norm when `require_unit` is set.
pub fn resolve_amplitudes(
    spec: &StateSpec,
    normalize_flag: bool,
    require_unit: bool,
) -> Result<[Complex64; 4], CliError> {
    let mut amps = spec.amplitudes();
    let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
    let normalize = normalize_flag || spec.normalize == Some(true);
    if normalize {
        let n = norm_sq.sqrt();
        for a in amps.iter_mut() {
            *a /= n;
        }
    } else if require_unit && (norm_sq - 1.0).abs() > INPUT_NORM_TOL {
        return Err(CliError::Domain(format!(
            "state is not normalized (norm^2 = {norm_sq:.6e}); pass --normalize to renormalize"
        )));
    }
    Ok(amps)
}

/// One value in a report.
#[derive(Debug, Clone, PartialEq)]
pub enum ReportValue {
    Num(f64),
    Text(String),
    List(Vec<f64>),
}

/// A deterministic key-value report; keys keep insertion order in text
/// output and are sorted in the structured (JSON) output.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub fields: Vec<(String, ReportValue)>,
}

/// Render a float with 12 significant digits.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.11e}")
}

impl Report {
    fn push_num(&mut self, key: &str, v: f64) {
        self.fields.push((key.into(), ReportValue::Num(v)));
    }

    fn push_text(&mut self, key: &str, v: &str) {
        self.fields.push((key.into(), ReportValue::Text(v.into())));
    }

    fn push_list(&mut self, key: &str, v: &[f64]) {
        self.fields.push((key.into(), ReportValue::List(v.to_vec())));
    }

    pub fn get(&self, key: &str) -> Option<&ReportValue> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn get_num(&self, key: &str) -> Option<f64> {
        match self.get(key) {
            Some(ReportValue::Num(v)) => Some(*v),
            _ => None,
        }
    }

    /// `key = value` lines, insertion order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            let rendered = match v {
                ReportValue::Num(x) => fmt_num(*x),
                ReportValue::Text(s) => s.clone(),
                ReportValue::List(xs) => xs
                    .iter()
                    .map(|x| fmt_num(*x))
                    .collect::<Vec<_>>()
                    .join(", "),
            };
            out.push_str(&format!("{k} = {rendered}\n"));
        }
        out
    }

    /// A single JSON object with sorted keys.
    pub fn to_structured(&self) -> String {
        let mut sorted: Vec<(String, serde_json::Value)> = self
            .fields
            .iter()
            .map(|(k, v)| {
                let value = match v {
                    ReportValue::Num(x) => serde_json::json!(x),
                    ReportValue::Text(s) => serde_json::json!(s),
                    ReportValue::List(xs) => serde_json::json!(xs),
                };
                (k.clone(), value)
            })
            .collect();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        let object: serde_json::Map<String, serde_json::Value> = sorted.into_iter().collect();
        serde_json::to_string_pretty(&serde_json::Value::Object(object))
            .expect("report is valid JSON")
    }
}

fn echo_input(report: &mut Report, key: &str, amps: &[Complex64; 4]) {
    let flat: Vec<f64> = amps.iter().flat_map(|z| [z.re, z.im]).collect();
    report.push_list(key, &flat);
}

fn amps_to_oracle(amps: &[Complex64; 4]) -> qga_oracle::ComplexState {
    qga_oracle::ComplexState::new(amps.to_vec())
}

fn coeff_matrix(amps: &[Complex64; 4]) -> qga_oracle::CMat {
    let mut m = qga_oracle::CMat::zeros(2);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = amps[2 * i + j];
        }
    }
    m
}

/// Largest componentwise difference between two amplitude vectors after
/// aligning the global phase.
pub fn phase_free_delta(a: &[Complex64; 4], b: &[Complex64; 4]) -> f64 {
    let overlap: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    a.iter()
        .zip(b.iter())
        .fold(0.0, |m: f64, (x, y)| m.max((x * phase - y).norm()))
}

/// Schmidt-decompose a state and report every parameter of the form plus
/// the reconstruction residual.
pub fn cmd_decompose(spec: &StateSpec, normalize: bool, xcheck: bool) -> Result<Report, CliError> {
    let amps = resolve_amplitudes(spec, normalize, false)?;
    let form = schmidt::decompose(&amps)?;
    let recon = schmidt::reconstruct(&form);
    let m1 = form.rho.sqrt() * (form.alpha / 2.0).cos();
    let m2 = form.rho.sqrt() * (form.alpha / 2.0).sin();

    let mut report = Report::default();
    report.push_text("command", "decompose");
    echo_input(&mut report, "input_amplitudes", &amps);
    report.push_num("rho", form.rho);
    report.push_num("chi", form.chi);
    report.push_num("alpha", form.alpha);
    report.push_num("tau", form.tau);
    report.push_num("theta1", form.theta1);
    report.push_num("phi1", form.phi1);
    report.push_num("theta2", form.theta2);
    report.push_num("phi2", form.phi2);
    report.push_num("m1", m1);
    report.push_num("m2", m2);
    report.push_num("reconstruction_residual", phase_free_delta(&recon, &amps));

    if xcheck {
        let svd = qga_oracle::svd_2x2(&coeff_matrix(&amps));
        report.push_num("xcheck_m1_residual", (m1 - svd.m1).abs());
        report.push_num("xcheck_m2_residual", (m2 - svd.m2).abs());
    }
    Ok(report)
}

/// Report the two multivector observables, the reduced polarizations and
/// the density-matrix coefficients of a normalized state.
pub fn cmd_observables(
    spec: &StateSpec,
    normalize: bool,
    xcheck: bool,
) -> Result<Report, CliError> {
    let amps = resolve_amplitudes(spec, normalize, true)?;
    let psi = msta2::from_complex4(&amps);
    let obs_e = msta2::observable_e(&psi);
    let obs_j = msta2::observable_j(&psi);
    let p1 = msta2::reduced_polarization(&psi, 1)?;
    let p2 = msta2::reduced_polarization(&psi, 2)?;
    let dens = msta2::density_coefficients(&psi)?;

    let mut report = Report::default();
    report.push_text("command", "observables");
    echo_input(&mut report, "input_amplitudes", &amps);
    report.push_list("observable_e", &obs_e.c);
    report.push_list("observable_j", &obs_j.c);
    report.push_list("reduced_polarization_1", &p1);
    report.push_list("reduced_polarization_2", &p2);
    report.push_list("density_a", &dens.a);
    report.push_list("density_b", &dens.b);
    let c_flat: Vec<f64> = dens.c.iter().flatten().copied().collect();
    report.push_list("density_c", &c_flat);

    if xcheck {
        let rho = qga_oracle::DensityMatrix::from_pure(&amps_to_oracle(&amps));
        let mut bloch_residual = [0.0f64; 2];
        for (idx, p) in [p1, p2].into_iter().enumerate() {
            let oracle = rho.partial_trace(idx + 1).bloch_vector();
            bloch_residual[idx] = p
                .iter()
                .zip(oracle.iter())
                .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        }
        report.push_num("xcheck_bloch1_residual", bloch_residual[0]);
        report.push_num("xcheck_bloch2_residual", bloch_residual[1]);

        // rebuild the 4x4 density matrix from (a, b, c) and compare
        let mut m = qga_oracle::CMat::identity(4);
        for k in 0..3 {
            m = m.add(
                &qga_oracle::pauli_on_particle(1, k + 1).scale(Complex64::new(dens.a[k], 0.0)),
            );
            m = m.add(
                &qga_oracle::pauli_on_particle(2, k + 1).scale(Complex64::new(dens.b[k], 0.0)),
            );
        }
        for j in 0..3 {
            for k in 0..3 {
                m = m.add(
                    &qga_oracle::pauli_tensor(j + 1, k + 1)
                        .scale(Complex64::new(dens.c[j][k], 0.0)),
                );
            }
        }
        m = m.scale(Complex64::new(0.25, 0.0));
        report.push_num("xcheck_density_residual", m.max_abs_diff(&rho.m));
    }
    Ok(report)
}

/// Report the measurement-overlap probability of two normalized states.
pub fn cmd_overlap(
    spec_a: &StateSpec,
    spec_b: &StateSpec,
    normalize: bool,
    xcheck: bool,
) -> Result<Report, CliError> {
    let amps_a = resolve_amplitudes(spec_a, normalize, true)?;
    let amps_b = resolve_amplitudes(spec_b, normalize, true)?;
    let pa = msta2::from_complex4(&amps_a);
    let pb = msta2::from_complex4(&amps_b);
    let p = msta2::overlap_probability(&pa, &pb)?;

    let mut report = Report::default();
    report.push_text("command", "overlap");
    echo_input(&mut report, "input_amplitudes_a", &amps_a);
    echo_input(&mut report, "input_amplitudes_b", &amps_b);
    report.push_num("probability", p);

    if xcheck {
        let oracle = qga_oracle::overlap(&amps_to_oracle(&amps_a), &amps_to_oracle(&amps_b))
            .map_err(|e| CliError::Domain(e.to_string()))?;
        report.push_num("xcheck_oracle_probability", oracle);
        report.push_num("xcheck_residual", (p - oracle).abs());
    }
    Ok(report)
}

/// One row of the singlet correlation curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellRow {
    pub theta: f64,
    pub probability: f64,
}

/// Joint-measurement probabilities of the singlet against product states
/// whose spin bivectors are separated by `theta`, sweeping `[0, pi]`.
///
/// Each row goes through the full multivector overlap machinery rather
/// than the closed form, so the curve is an end-to-end check.
pub fn bell_curve(samples: usize) -> Result<Vec<BellRow>, CliError> {
    if samples < 2 {
        return Err(CliError::Usage(format!(
            "bell-curve needs at least 2 samples, got {samples}"
        )));
    }
    let singlet = msta2::singlet();
    let mut rows = Vec::with_capacity(samples);
    for i in 0..samples {
        let theta = std::f64::consts::PI * (i as f64) / ((samples - 1) as f64);
        let apparatus = msta2::product_state(&Spinor1::ONE, &spinor_theta_phi(theta, 0.0));
        let probability = msta2::overlap_probability(&singlet, &apparatus)?;
        rows.push(BellRow { theta, probability });
    }
    Ok(rows)
}

/// Render the curve as CSV; `xcheck` appends a residual column against the
/// closed form without touching the primary columns.
pub fn bell_curve_csv(samples: usize, xcheck: bool) -> Result<String, CliError> {
    let rows = bell_curve(samples)?;
    let mut out = String::new();
    if xcheck {
        out.push_str("theta,probability,residual\n");
    } else {
        out.push_str("theta,probability\n");
    }
    for row in rows {
        if xcheck {
            let residual = (row.probability - 0.25 * (1.0 - row.theta.cos())).abs();
            out.push_str(&format!(
                "{},{},{}\n",
                fmt_num(row.theta),
                fmt_num(row.probability),
                fmt_num(residual)
            ));
        } else {
            out.push_str(&format!(
                "{},{}\n",
                fmt_num(row.theta),
                fmt_num(row.probability)
            ));
        }
    }
    Ok(out)
}

/// Whether a two-particle multivector sits on the correlated subspace;
/// exposed for robustness fuzzing of the full pipeline.
pub fn state_is_physical(psi: &TwoParticleMV) -> bool {
    msta2::projection_error(psi) < msta2::PROJECTION_TOL
}
