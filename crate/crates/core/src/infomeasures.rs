//! Information-theoretic functionals of a probability density: Shannon
//! entropy, Fisher information, entropic power, disequilibrium, and the
//! composed Fisher-Shannon and LMC complexities with the relative ratio
//! zeta.
//!
//! Every 3-D functional is reduced to products of 1-D radial and angular
//! integrals through the phi-independence of |Y_lm|^2; a nested 2-D
//! quadrature path exists solely for cross-validation.

use crate::density::{AngularProfile, DensityModel, ProbabilityDensity, StateLabels};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_interval, integrate_semi_infinite, QuadratureConfig};
use std::cell::Cell;
use std::f64::consts::PI;

/// All measures of one state under one model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfoReport {
    /// Shannon entropy S in nats (depends on the length unit).
    pub shannon_s: f64,
    /// Fisher information I (inverse length squared).
    pub fisher_i: f64,
    /// Entropic power J = exp(2S/3) / (2 pi e).
    pub entropic_power_j: f64,
    /// Disequilibrium <rho> (inverse length cubed).
    pub disequilibrium: f64,
    /// Fisher-Shannon complexity C_FS = I * J (dimensionless, >= 3).
    pub c_fs: f64,
    /// LMC shape complexity C_LMC = <rho> exp(S) (dimensionless, >= 1).
    pub c_lmc: f64,
    pub model: DensityModel,
    pub labels: StateLabels,
}

impl InfoReport {
    /// Re-expresses the unit-carrying measures with the working length unit
    /// equal to `unit` target units (e.g. unit = alpha m_e/m0 for Bohr
    /// radii). The dimensionless complexities are unchanged.
    pub fn rescaled(&self, unit: f64) -> InfoReport {
        InfoReport {
            shannon_s: self.shannon_s + 3.0 * unit.ln(),
            fisher_i: self.fisher_i / (unit * unit),
            entropic_power_j: self.entropic_power_j * unit * unit,
            disequilibrium: self.disequilibrium / (unit * unit * unit),
            ..*self
        }
    }
}

fn ensure_unit_normalized(d: &ProbabilityDensity) -> Result<()> {
    if !d.is_unit_normalized() {
        return Err(Error::NotNormalized {
            model: d.model.to_string(),
        });
    }
    Ok(())
}

/// Integrates `f` over (0, inf) with the substitution r = scale * x so the
/// rule is centered on the density's bulk.
fn radial_integral<F: Fn(f64) -> f64>(
    f: F,
    scale: f64,
    config: &QuadratureConfig,
) -> Result<f64> {
    Ok(integrate_semi_infinite(|x| scale * f(scale * x), config)?.value)
}

fn angular_integral<F: Fn(f64) -> f64>(f: F, config: &QuadratureConfig) -> Result<f64> {
    Ok(integrate_interval(f, 0.0, PI, config)?.value)
}

/// Piecewise integration over (0, inf) split at interior breakpoints, with a
/// shifted exp-sinh rule for the unbounded tail. Used for ln-density
/// integrands, which are non-smooth at the wave-function nodes.
fn radial_integral_split<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    scale: f64,
    config: &QuadratureConfig,
) -> Result<f64> {
    if breaks.is_empty() {
        return radial_integral(f, scale, config);
    }
    let mut total = 0.0;
    let mut lo = 0.0;
    for &b in breaks {
        total += integrate_interval(&f, lo, b, config)?.value;
        lo = b;
    }
    let tail_scale = scale.max(lo);
    total += integrate_semi_infinite(|t| tail_scale * f(lo + tail_scale * t), config)?.value;
    Ok(total)
}

/// Angular entropy -integral |Y|^2 ln |Y|^2 dOmega.
pub fn angular_entropy(a: &AngularProfile, config: &QuadratureConfig) -> Result<f64> {
    let f = |theta: f64| {
        let v = a.y2(theta);
        if v <= 0.0 {
            0.0
        } else {
            -2.0 * PI * v * v.ln() * theta.sin()
        }
    };
    // split at the zeros of P~ so the log non-smoothness sits at interval
    // endpoints, where tanh-sinh converges fast
    let nodes = a.nodes();
    if nodes.is_empty() {
        return angular_integral(f, config);
    }
    let mut total = 0.0;
    let mut lo = 0.0;
    for &b in nodes.iter().chain(std::iter::once(&PI)) {
        total += integrate_interval(&f, lo, b, config)?.value;
        lo = b;
    }
    Ok(total)
}

/// Angular Fisher factor A_lm = integral (d_theta |Y|^2)^2 / |Y|^2 dOmega;
/// zero exactly for l = 0.
pub fn angular_fisher(a: &AngularProfile, config: &QuadratureConfig) -> Result<f64> {
    if a.l() == 0 {
        return Ok(0.0);
    }
    angular_integral(
        |theta| 2.0 * PI * a.fisher_kernel(theta) * theta.sin(),
        config,
    )
}

/// integral |Y|^4 dOmega, the angular factor of the disequilibrium.
pub fn angular_y4(a: &AngularProfile, config: &QuadratureConfig) -> Result<f64> {
    angular_integral(
        |theta| {
            let v = a.y2(theta);
            2.0 * PI * v * v * theta.sin()
        },
        config,
    )
}

/// Total probability integral; 1 to quadrature accuracy for unit-normalized
/// densities.
pub fn total_probability(d: &ProbabilityDensity, config: &QuadratureConfig) -> Result<f64> {
    let radial = radial_integral(|r| d.radial_value(r) * r * r, d.length_scale, config)?;
    let angular = angular_integral(
        |theta| 2.0 * PI * d.angular.y2(theta) * theta.sin(),
        config,
    )?;
    Ok(radial * angular)
}

/// Shannon entropy S = -<ln rho> = S_radial + S_angular.
///
/// Rejects densities that are not unit-normalized (the raw NLI variant).
pub fn shannon_entropy(d: &ProbabilityDensity, config: &QuadratureConfig) -> Result<f64> {
    ensure_unit_normalized(d)?;
    let s_rad = radial_integral_split(
        |r| {
            let v = d.radial_value(r);
            if v <= 0.0 {
                0.0
            } else {
                -v * v.ln() * r * r
            }
        },
        &d.radial_wave_nodes(),
        d.length_scale,
        config,
    )?;
    Ok(s_rad + angular_entropy(&d.angular, config)?)
}

/// Radial part of the Fisher information, integral (D')^2/D r^2 dr, using
/// the analytic derivative.
pub fn fisher_radial(d: &ProbabilityDensity, config: &QuadratureConfig) -> Result<f64> {
    radial_integral(|r| d.radial_fisher_integrand(r), d.length_scale, config)
}

/// Radial Fisher integral with a central finite-difference derivative in
/// place of the analytic one; validation oracle only.
pub fn fisher_radial_fd(d: &ProbabilityDensity, config: &QuadratureConfig) -> Result<f64> {
    radial_integral(
        |r| {
            let h = r * 6e-6;
            let v = d.radial_value(r);
            if v <= 0.0 {
                return 0.0;
            }
            // grouped as (D' r)^2 / D: D' alone can overflow at the smallest
            // quadrature nodes of singular densities
            let dpr = (d.radial_value(r + h) - d.radial_value(r - h)) / (2.0 * h) * r;
            dpr * dpr / v
        },
        d.length_scale,
        config,
    )
}

fn check_fisher_convergence(d: &ProbabilityDensity) -> Result<()> {
    // The LI weight (eps + Ze^2/r) adds a 1/r factor: near the origin the
    // Fisher integrand goes like r^(2l'-1) against dr, non-integrable for
    // l = 0 where l' < 0.
    if d.model == DensityModel::KgLi && d.labels.l == 0 {
        return Err(Error::Divergent(format!(
            "Fisher information of the Lorentz-invariant density diverges for s states \
             (integrand ~ r^(2l'-1) at the origin with l' < 0); state Z={} n={} l=0",
            d.labels.z, d.labels.n
        )));
    }
    Ok(())
}

/// Fisher information I = integral (grad rho)^2 / rho d3r, separated as
/// I_radial + <r^-2> A_lm.
pub fn fisher_information(d: &ProbabilityDensity, config: &QuadratureConfig) -> Result<f64> {
    ensure_unit_normalized(d)?;
    check_fisher_convergence(d)?;
    let i_rad = fisher_radial(d, config)?;
    let a_lm = angular_fisher(&d.angular, config)?;
    if a_lm == 0.0 {
        return Ok(i_rad);
    }
    let r_m2 = radial_integral(|r| d.radial_value(r), d.length_scale, config)?;
    Ok(i_rad + r_m2 * a_lm)
}

/// Fisher information by direct nested 2-D quadrature of
/// [(d_r rho)^2 + (d_theta rho / r)^2] / rho; validation oracle for the
/// separable decomposition.
pub fn fisher_information_2d(d: &ProbabilityDensity, config: &QuadratureConfig) -> Result<f64> {
    ensure_unit_normalized(d)?;
    check_fisher_convergence(d)?;
    let inner_err: Cell<Option<Error>> = Cell::new(None);
    let outer = angular_integral(
        |theta| {
            let y = d.angular.y2(theta);
            let yp = d.angular.y2_dtheta(theta);
            let inner = radial_integral(
                |r| {
                    let dv = d.radial_value(r);
                    let rho = dv * y;
                    if rho <= 0.0 || !rho.is_finite() {
                        return 0.0;
                    }
                    // the r^2 volume factor is folded into each gradient
                    // term before squaring to keep singular-density values
                    // inside f64 range
                    let dr_r = d.radial_deriv(r) * r * y;
                    let dt = dv * yp;
                    (dr_r * dr_r + dt * dt) / rho
                },
                d.length_scale,
                config,
            );
            match inner {
                Ok(v) => 2.0 * PI * v * theta.sin(),
                Err(e) => {
                    inner_err.set(Some(e));
                    f64::NAN
                }
            }
        },
        config,
    );
    match outer {
        Ok(v) => Ok(v),
        Err(e) => Err(inner_err.take().unwrap_or(e)),
    }
}

/// Shannon entropic power J = exp(2S/3) / (2 pi e).
pub fn entropic_power(s: f64) -> f64 {
    (2.0 * s / 3.0).exp() / (2.0 * PI * std::f64::consts::E)
}

/// Fisher-Shannon complexity C_FS = I * J.
pub fn fisher_shannon(fisher_i: f64, entropic_power_j: f64) -> f64 {
    debug_assert!(fisher_i >= 0.0 && entropic_power_j > 0.0);
    fisher_i * entropic_power_j
}

fn check_diseq_convergence(d: &ProbabilityDensity) -> Result<()> {
    // D_LI^2 r^2 ~ r^(4l') against dr: integrable only for l' > -1/4.
    if d.model == DensityModel::KgLi {
        if let Some(st) = d.kg_state() {
            if st.l_eff() <= -0.25 {
                return Err(Error::Divergent(format!(
                    "disequilibrium of the Lorentz-invariant density diverges for l' <= -1/4 \
                     (integrand ~ r^(4l') at the origin); state Z={} n={} l={} has l' = {}",
                    d.labels.z,
                    d.labels.n,
                    d.labels.l,
                    st.l_eff()
                )));
            }
        }
    }
    Ok(())
}

/// Disequilibrium <rho> = integral rho^2 d3r.
pub fn disequilibrium(d: &ProbabilityDensity, config: &QuadratureConfig) -> Result<f64> {
    ensure_unit_normalized(d)?;
    check_diseq_convergence(d)?;
    let radial = radial_integral(
        |r| {
            let v = d.radial_value(r);
            v * v * r * r
        },
        d.length_scale,
        config,
    )?;
    Ok(radial * angular_y4(&d.angular, config)?)
}

/// LMC shape complexity C_LMC = <rho> exp(S).
pub fn lmc_complexity(diseq: f64, s: f64) -> f64 {
    debug_assert!(diseq > 0.0);
    diseq * s.exp()
}

/// Relative ratio zeta = 1 - C_SCH / C_KG; ~0 when relativistic effects are
/// negligible and ->1 in the ultrarelativistic limit.
pub fn zeta_fs(c_sch: f64, c_kg: f64) -> f64 {
    debug_assert!(c_sch > 0.0 && c_kg > 0.0);
    1.0 - c_sch / c_kg
}

/// Computes the full report for one density.
pub fn info_report(d: &ProbabilityDensity, config: &QuadratureConfig) -> Result<InfoReport> {
    let s = shannon_entropy(d, config)?;
    let i = fisher_information(d, config)?;
    let j = entropic_power(s);
    let diseq = disequilibrium(d, config)?;
    Ok(InfoReport {
        shannon_s: s,
        fisher_i: i,
        entropic_power_j: j,
        disequilibrium: diseq,
        c_fs: fisher_shannon(i, j),
        c_lmc: lmc_complexity(diseq, s),
        model: d.model,
        labels: d.labels,
    })
}
