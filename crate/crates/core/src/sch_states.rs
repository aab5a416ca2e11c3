//! Nonrelativistic hydrogenic baseline states for the same (Z, n, l, m) and
//! particle mass, used as the denominator model of the relative ratio
//! zeta_FS. Valid for every Z > 0 (no supercritical restriction).

use crate::density::{
    AngularProfile, DensityModel, ProbabilityDensity, RadialWeight, StateLabels, WaveKind,
};
use crate::kg_states::{CoulombSystem, QuantumNumbers};
use crate::specfun::{laguerre, ln_gamma, LaguerreParams};

/// A hydrogenic bound state with its length scale a = hbar^2/(m Z e^2)
/// expressed in the system's units.
#[derive(Debug, Clone, Copy)]
pub struct SchBoundState {
    qn: QuantumNumbers,
    system: CoulombSystem,
    length_scale: f64,
    radial_norm: f64,
}

impl SchBoundState {
    pub fn new(qn: QuantumNumbers, system: &CoulombSystem) -> Self {
        let a = system.hbar_c / (system.mass_c2 * system.gamma());
        let n = qn.n() as f64;
        let l = qn.l() as f64;
        let k = (qn.n() - qn.l() - 1) as f64;
        let b = 2.0 / (n * a);
        // sqrt((2/na)^3 (n-l-1)! / (2n (n+l)!))
        let ln_fac = ln_gamma(k + 1.0).unwrap() - (2.0 * n).ln() - ln_gamma(n + l + 1.0).unwrap();
        let radial_norm = b.powf(1.5) * (0.5 * ln_fac).exp();
        Self {
            qn,
            system: *system,
            length_scale: a,
            radial_norm,
        }
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn system(&self) -> &CoulombSystem {
        &self.system
    }

    /// Bohr-like radius a of this system.
    pub fn length_scale(&self) -> f64 {
        self.length_scale
    }

    /// Nonrelativistic energy including rest mass,
    /// m0c2 (1 - gamma^2 / (2 n^2)), for reporting alongside the KG values.
    pub fn energy(&self) -> f64 {
        let g = self.system.gamma();
        self.system.mass_c2 * (1.0 - g * g / (2.0 * (self.qn.n() as f64).powi(2)))
    }

    /// Radial wavefunction R_nl(r) with unit norm integral R^2 r^2 dr.
    pub fn radial_r(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let x = 2.0 * r / (self.qn.n() as f64 * self.length_scale);
        let l = self.qn.l() as f64;
        let log_env = l * x.ln() - 0.5 * x;
        if log_env < -745.0 {
            return 0.0;
        }
        let params = LaguerreParams::new(self.qn.n() - self.qn.l() - 1, 2.0 * l + 1.0)
            .expect("integer alpha >= 1");
        self.radial_norm * log_env.exp() * laguerre(&params, x)
    }

    /// dR/dr.
    pub fn radial_r_deriv(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let b = 2.0 / (self.qn.n() as f64 * self.length_scale);
        let x = b * r;
        let l = self.qn.l() as f64;
        let k = self.qn.n() - self.qn.l() - 1;
        let params = LaguerreParams::new(k, 2.0 * l + 1.0).expect("integer alpha >= 1");
        let lag = laguerre(&params, x);
        let dlag = if k == 0 {
            0.0
        } else {
            let dp = LaguerreParams::new(k - 1, 2.0 * l + 2.0).expect("integer alpha >= 2");
            -laguerre(&dp, x)
        };
        let log_env = l * x.ln() - 0.5 * x;
        if log_env < -745.0 {
            return 0.0;
        }
        // d/dx [e^(-x/2) x^l L] = e^(-x/2) x^(l-1) [(l - x/2) L + x L']
        let bracket = (l - 0.5 * x) * lag + x * dlag;
        self.radial_norm * b * (log_env - x.ln()).exp() * bracket
    }

    /// Unit-normalized hydrogenic position density D(r) |Y_lm|^2.
    pub fn density(&self) -> ProbabilityDensity {
        ProbabilityDensity::new(
            WaveKind::Sch(*self),
            RadialWeight::Const(1.0),
            AngularProfile::new(self.qn.l(), self.qn.m()),
            DensityModel::Sch,
            StateLabels {
                z: self.system.z,
                n: self.qn.n(),
                l: self.qn.l(),
                m: self.qn.m(),
            },
            1.5 * (self.qn.n() as f64).powi(2) * self.length_scale,
            true,
        )
    }
}

/// Hydrogenic density for the given quantum numbers and system.
pub fn sch_density(qn: QuantumNumbers, system: &CoulombSystem) -> ProbabilityDensity {
    SchBoundState::new(qn, system).density()
}
