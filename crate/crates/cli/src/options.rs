//! Run options merged from CLI flags, an optional key-value config file and
//! built-in defaults (flags win over the file, the file over defaults).

use kg_complexity::{QuadratureConfig, FINE_STRUCTURE};
use std::path::Path;

/// Charged-pion rest mass in electron masses.
pub const PION_MASS_RATIO: f64 = 273.13;

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    /// Particle rest mass in electron masses (sets the atomic-unit scale of
    /// the reported S, I, J, disequilibrium).
    pub mass: f64,
    /// Fine-structure constant.
    pub alpha: f64,
    pub quad: QuadratureConfig,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            mass: PION_MASS_RATIO,
            alpha: FINE_STRUCTURE,
            quad: QuadratureConfig::default(),
        }
    }
}

impl RunOptions {
    /// Working length unit (hbar c / m0 c^2) expressed in Bohr radii.
    pub fn length_unit_bohr(&self) -> f64 {
        self.alpha / self.mass
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.mass > 0.0) {
            return Err(format!("mass must be positive, got {}", self.mass));
        }
        if !(self.alpha > 0.0) {
            return Err(format!("alpha must be positive, got {}", self.alpha));
        }
        if !(self.quad.rel_tol > 0.0) || !(self.quad.abs_tol > 0.0) {
            return Err("quadrature tolerances must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Overrides {
    pub mass: Option<f64>,
    pub alpha: Option<f64>,
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub max_levels: Option<u32>,
}

impl Overrides {
    fn apply(&self, base: &mut RunOptions) {
        if let Some(v) = self.mass {
            base.mass = v;
        }
        if let Some(v) = self.alpha {
            base.alpha = v;
        }
        if let Some(v) = self.rel_tol {
            base.quad.rel_tol = v;
        }
        if let Some(v) = self.abs_tol {
            base.quad.abs_tol = v;
        }
        if let Some(v) = self.max_levels {
            base.quad.max_levels = v;
        }
    }
}

/// Parses a flat `key = value` UTF-8 config file ('#' starts a comment).
pub fn parse_config_file(path: &Path) -> Result<Overrides, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
    let mut ov = Overrides::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{lineno}: expected 'key = value'", path.display()))?;
        let key = key.trim();
        let value = value.trim();
        let parse_f64 = || -> Result<f64, String> {
            value
                .parse::<f64>()
                .map_err(|_| format!("{}:{lineno}: field '{key}': invalid number '{value}'", path.display()))
        };
        match key {
            "mass" => ov.mass = Some(parse_f64()?),
            "alpha" => ov.alpha = Some(parse_f64()?),
            "rel_tol" => ov.rel_tol = Some(parse_f64()?),
            "abs_tol" => ov.abs_tol = Some(parse_f64()?),
            "max_levels" => {
                ov.max_levels = Some(value.parse::<u32>().map_err(|_| {
                    format!("{}:{lineno}: field 'max_levels': invalid integer '{value}'", path.display())
                })?)
            }
            other => {
                return Err(format!(
                    "{}:{lineno}: unknown config key '{other}' (expected mass, alpha, rel_tol, abs_tol, max_levels)",
                    path.display()
                ))
            }
        }
    }
    Ok(ov)
}

/// defaults <- config file <- CLI flags.
pub fn resolve(
    config_path: Option<&Path>,
    flags: Overrides,
) -> Result<RunOptions, String> {
    let mut opts = RunOptions::default();
    if let Some(path) = config_path {
        parse_config_file(path)?.apply(&mut opts);
    }
    flags.apply(&mut opts);
    opts.validate()?;
    Ok(opts)
}
