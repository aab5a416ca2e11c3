//! Grid evaluation: turns a list of states x models into output rows, in
//! parallel but with deterministic, spec-ordered output.

use crate::options::RunOptions;
use kg_complexity::infomeasures::{info_report, zeta_fs};
use kg_complexity::{CoulombSystem, KGBoundState, QuantumNumbers, SchBoundState};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::io::Write;

/// Which Klein-Gordon density feeds the information measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KgDensity {
    /// |psi|^2 normalized to unit probability (default; finite measures for
    /// every subcritical state).
    Psi2,
    /// Lorentz-invariant density; its Fisher information diverges for s
    /// states, which such rows report as errors.
    Li,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelChoice {
    Kg,
    Sch,
    Both,
}

impl ModelChoice {
    pub fn wants_kg(self) -> bool {
        matches!(self, ModelChoice::Kg | ModelChoice::Both)
    }
    pub fn wants_sch(self) -> bool {
        matches!(self, ModelChoice::Sch | ModelChoice::Both)
    }
}

/// Measure columns that can be requested; the CSV schema is fixed, so
/// deselected measures appear as blank cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Measure {
    S,
    I,
    J,
    Diseq,
    CFs,
    CLmc,
    Zeta,
}

impl Measure {
    pub fn all() -> BTreeSet<Measure> {
        use Measure::*;
        [S, I, J, Diseq, CFs, CLmc, Zeta].into_iter().collect()
    }

    pub fn parse_list(spec: &str) -> Result<BTreeSet<Measure>, String> {
        let mut set = BTreeSet::new();
        for item in spec.split(',') {
            let m = match item.trim() {
                "S" => Measure::S,
                "I" => Measure::I,
                "J" => Measure::J,
                "diseq" => Measure::Diseq,
                "C_FS" => Measure::CFs,
                "C_LMC" => Measure::CLmc,
                "zeta" => Measure::Zeta,
                other => {
                    return Err(format!(
                        "unknown measure '{other}' (expected S, I, J, diseq, C_FS, C_LMC, zeta)"
                    ))
                }
            };
            set.insert(m);
        }
        Ok(set)
    }
}

/// One grid point (model iteration happens per point).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub z: f64,
    pub n: u32,
    pub l: u32,
    pub m: i32,
}

/// A fully resolved scan: points in output order plus the run settings.
#[derive(Debug, Clone)]
pub struct ScanSpec {
    pub points: Vec<Point>,
    pub models: ModelChoice,
    pub measures: BTreeSet<Measure>,
    pub kg_density: KgDensity,
    pub options: RunOptions,
}

impl ScanSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.points.is_empty() {
            return Err("scan grid is empty".into());
        }
        for p in &self.points {
            if !(p.z > 0.0) || !p.z.is_finite() {
                return Err(format!("Z must be positive and finite, got {}", p.z));
            }
            QuantumNumbers::new(p.n, p.l, p.m).map_err(|e| {
                format!("invalid state (n={}, l={}, m={}): {e}", p.n, p.l, p.m)
            })?;
        }
        if self.measures.contains(&Measure::Zeta) && self.models != ModelChoice::Both {
            return Err("measure 'zeta' compares both models; run with --model both".into());
        }
        self.options.validate()
    }
}

/// One output row; the field order is the fixed CSV schema.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Row {
    pub model: String,
    #[serde(rename = "Z")]
    pub z: f64,
    pub n: u32,
    pub l: u32,
    pub m: i32,
    pub epsilon_over_mc2: Option<f64>,
    #[serde(rename = "S")]
    pub s: Option<f64>,
    #[serde(rename = "I")]
    pub i: Option<f64>,
    #[serde(rename = "J")]
    pub j: Option<f64>,
    pub disequilibrium: Option<f64>,
    #[serde(rename = "C_FS")]
    pub c_fs: Option<f64>,
    #[serde(rename = "C_LMC")]
    pub c_lmc: Option<f64>,
    #[serde(rename = "zeta_FS")]
    pub zeta_fs: Option<f64>,
    pub error: Option<String>,
}

impl Row {
    fn empty(model: &str, p: Point) -> Row {
        Row {
            model: model.to_string(),
            z: p.z,
            n: p.n,
            l: p.l,
            m: p.m,
            epsilon_over_mc2: None,
            s: None,
            i: None,
            j: None,
            disequilibrium: None,
            c_fs: None,
            c_lmc: None,
            zeta_fs: None,
            error: None,
        }
    }
}

fn kg_row(p: Point, spec: &ScanSpec) -> Row {
    let opts = &spec.options;
    let model_name = match spec.kg_density {
        KgDensity::Psi2 => "KG",
        KgDensity::Li => "KG-LI",
    };
    let mut row = Row::empty(model_name, p);
    let qn = QuantumNumbers::new(p.n, p.l, p.m).expect("validated");
    let system = match CoulombSystem::new(p.z, 1.0, opts.alpha, 1.0) {
        Ok(s) => s,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let state = match KGBoundState::new(qn, &system) {
        Ok(st) => st,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.epsilon_over_mc2 = Some(state.energy());
    let density = match spec.kg_density {
        KgDensity::Psi2 => state.density_normalized(),
        KgDensity::Li => state.density_li(),
    };
    match info_report(&density, &opts.quad) {
        Ok(rep) => fill_measures(&mut row, &rep.rescaled(opts.length_unit_bohr()), spec),
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

fn sch_row(p: Point, spec: &ScanSpec) -> Row {
    let opts = &spec.options;
    let mut row = Row::empty("SCH", p);
    let qn = QuantumNumbers::new(p.n, p.l, p.m).expect("validated");
    let system = match CoulombSystem::new(p.z, 1.0, opts.alpha, 1.0) {
        Ok(s) => s,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let state = SchBoundState::new(qn, &system);
    row.epsilon_over_mc2 = Some(state.energy());
    match info_report(&state.density(), &opts.quad) {
        Ok(rep) => fill_measures(&mut row, &rep.rescaled(opts.length_unit_bohr()), spec),
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

fn fill_measures(row: &mut Row, rep: &kg_complexity::InfoReport, spec: &ScanSpec) {
    let sel = &spec.measures;
    if sel.contains(&Measure::S) {
        row.s = Some(rep.shannon_s);
    }
    if sel.contains(&Measure::I) {
        row.i = Some(rep.fisher_i);
    }
    if sel.contains(&Measure::J) {
        row.j = Some(rep.entropic_power_j);
    }
    if sel.contains(&Measure::Diseq) {
        row.disequilibrium = Some(rep.disequilibrium);
    }
    if sel.contains(&Measure::CFs) {
        row.c_fs = Some(rep.c_fs);
    }
    if sel.contains(&Measure::CLmc) {
        row.c_lmc = Some(rep.c_lmc);
    }
}

/// Evaluates every grid point; rows come back in spec order (KG before SCH
/// within a point) regardless of the parallel schedule.
pub fn run_scan(spec: &ScanSpec) -> Result<Vec<Row>, String> {
    spec.validate()?;
    let rows: Vec<Vec<Row>> = spec
        .points
        .par_iter()
        .map(|&p| {
            let mut out = Vec::with_capacity(2);
            let kg = spec.models.wants_kg().then(|| kg_row(p, spec));
            let sch = spec.models.wants_sch().then(|| sch_row(p, spec));
            if spec.measures.contains(&Measure::Zeta) {
                // zeta lives on the KG row and needs both complexities
                if let (Some(kg), Some(sch)) = (&kg, &sch) {
                    if let (Some(ck), Some(cs)) = (kg.c_fs, sch.c_fs) {
                        let mut kg = kg.clone();
                        kg.zeta_fs = Some(zeta_fs(cs, ck));
                        out.push(kg);
                        out.push(sch.clone());
                        return out;
                    }
                }
            }
            if let Some(kg) = kg {
                out.push(kg);
            }
            if let Some(sch) = sch {
                out.push(sch);
            }
            out
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

/// True when any row carries a per-state error (drives exit code 3).
pub fn any_row_failed(rows: &[Row]) -> bool {
    rows.iter().any(|r| r.error.is_some())
}

pub fn write_csv<W: Write>(rows: &[Row], out: W) -> Result<(), String> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| format!("CSV write failed: {e}"))?;
    }
    w.flush().map_err(|e| format!("CSV flush failed: {e}"))?;
    Ok(())
}

#[cfg(test)]
pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<Row>, String> {
    let mut rdr = csv::Reader::from_reader(input);
    rdr.deserialize()
        .collect::<Result<Vec<Row>, _>>()
        .map_err(|e| format!("CSV parse failed: {e}"))
}

pub fn write_json<W: Write>(rows: &[Row], mut out: W) -> Result<(), String> {
    serde_json::to_writer_pretty(&mut out, rows).map_err(|e| format!("JSON write failed: {e}"))?;
    out.write_all(b"\n").map_err(|e| format!("write failed: {e}"))?;
    Ok(())
}

/// Expands "min:max:step" into an inclusive value list.
pub fn parse_z_range(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("--Z-range expects min:max:step, got '{spec}'"));
    }
    let read = |s: &str, field: &str| -> Result<f64, String> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("--Z-range field {field}: invalid number '{s}'"))
    };
    let (min, max, step) = (
        read(parts[0], "min")?,
        read(parts[1], "max")?,
        read(parts[2], "step")?,
    );
    if !(step > 0.0) || !(max >= min) || !(min > 0.0) {
        return Err(format!(
            "--Z-range requires 0 < min <= max and step > 0, got '{spec}'"
        ));
    }
    let mut values = Vec::new();
    let mut k = 0u64;
    loop {
        let z = min + step * k as f64;
        if z > max * (1.0 + 1e-12) {
            break;
        }
        values.push(z);
        k += 1;
    }
    Ok(values)
}

/// Builds the rectangular (Z, n, l, m) product; `l`/`m` may be `All`, which
/// expands per state to 0..n-1 and -l..l respectively.
#[derive(Debug, Clone)]
pub enum AxisSpec {
    All,
    List(Vec<i64>),
}

impl AxisSpec {
    pub fn parse(text: &str) -> Result<AxisSpec, String> {
        if text.trim() == "all" {
            return Ok(AxisSpec::All);
        }
        let vals = text
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("invalid integer '{v}'"))
            })
            .collect::<Result<Vec<i64>, String>>()?;
        Ok(AxisSpec::List(vals))
    }
}

pub fn build_points(
    z_values: &[f64],
    n_values: &[u32],
    l_axis: &AxisSpec,
    m_axis: &AxisSpec,
) -> Result<Vec<Point>, String> {
    let mut points = Vec::new();
    for &z in z_values {
        for &n in n_values {
            if n < 1 {
                return Err("n must be >= 1".into());
            }
            let ls: Vec<u32> = match l_axis {
                AxisSpec::All => (0..n).collect(),
                AxisSpec::List(vs) => vs
                    .iter()
                    .map(|&v| {
                        if v < 0 || v as u32 > n - 1 {
                            Err(format!("l = {v} invalid for n = {n}"))
                        } else {
                            Ok(v as u32)
                        }
                    })
                    .collect::<Result<Vec<u32>, String>>()?,
            };
            for l in ls {
                let ms: Vec<i32> = match m_axis {
                    AxisSpec::All => (-(l as i32)..=l as i32).collect(),
                    AxisSpec::List(vs) => vs
                        .iter()
                        .map(|&v| {
                            if v.unsigned_abs() as u32 > l {
                                Err(format!("m = {v} invalid for l = {l}"))
                            } else {
                                Ok(v as i32)
                            }
                        })
                        .collect::<Result<Vec<i32>, String>>()?,
                };
                for m in ms {
                    points.push(Point { z, n, l, m });
                }
            }
        }
    }
    Ok(points)
}
