//! Klein-Gordon bound states in a Coulomb well: quantum-number validation,
//! effective angular momentum l', energy eigenvalues, the reduced radial
//! function u(s), and the Lorentz-invariant / non-Lorentz-invariant densities.
//!
//! Internal computations use working units hbar*c = 1 and energies in m0 c^2
//! by default; the fields of [`CoulombSystem`] stay general so rescaling
//! invariance can be tested directly.

use crate::density::{
    AngularProfile, DensityModel, ProbabilityDensity, RadialWeight, StateLabels, WaveKind,
};
use crate::error::{Error, Result};
use crate::specfun::{laguerre, laguerre_orthonormal_scale, LaguerreParams};

/// Fine-structure constant used by default, alpha = 1/137.035999.
pub const FINE_STRUCTURE: f64 = 1.0 / 137.035999;

/// (n, l, m) labels of a stationary state, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumNumbers {
    n: u32,
    l: u32,
    m: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32, m: i32) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("principal quantum number n must be >= 1".into()));
        }
        if l > n - 1 {
            return Err(Error::Domain(format!(
                "orbital quantum number must satisfy 0 <= l <= n-1, got n = {n}, l = {l}"
            )));
        }
        if m.unsigned_abs() > l {
            return Err(Error::Domain(format!(
                "magnetic quantum number must satisfy |m| <= l, got l = {l}, m = {m}"
            )));
        }
        Ok(Self { n, l, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i32 {
        self.m
    }
}

/// Nuclear charge and unit system of a single-particle Coulomb problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombSystem {
    pub z: f64,
    /// Rest energy m0 c^2 in the chosen energy unit.
    pub mass_c2: f64,
    /// Fine-structure constant.
    pub alpha_fs: f64,
    /// hbar c in energy * length units.
    pub hbar_c: f64,
}

impl CoulombSystem {
    pub fn new(z: f64, mass_c2: f64, alpha_fs: f64, hbar_c: f64) -> Result<Self> {
        for (name, v) in [
            ("Z", z),
            ("mass_c2", mass_c2),
            ("alpha_fs", alpha_fs),
            ("hbar_c", hbar_c),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!(
                    "CoulombSystem field {name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Self {
            z,
            mass_c2,
            alpha_fs,
            hbar_c,
        })
    }

    /// Working-unit system (hbar c = 1, m0 c^2 = 1) with the default
    /// fine-structure constant.
    pub fn with_charge(z: f64) -> Result<Self> {
        Self::new(z, 1.0, FINE_STRUCTURE, 1.0)
    }

    /// Coulomb coupling gamma = Z * alpha.
    pub fn gamma(&self) -> f64 {
        self.z * self.alpha_fs
    }
}

/// Effective angular momentum l' = sqrt((l + 1/2)^2 - gamma^2) - 1/2.
///
/// Fails with [`Error::Supercritical`] when gamma >= l + 1/2, where the
/// square root turns imaginary and no real bound state of this l exists.
pub fn effective_l(l: u32, gamma: f64) -> Result<f64> {
    let half = l as f64 + 0.5;
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(Error::Domain(format!("gamma must be positive, got {gamma}")));
    }
    if gamma >= half {
        return Err(Error::Supercritical {
            gamma,
            limit: half,
            l,
        });
    }
    Ok((half * half - gamma * gamma).sqrt() - 0.5)
}

/// Bound-state energy eigenvalue
/// eps = m0 c^2 / sqrt(1 + (gamma / (n - l + l'))^2), strictly below m0 c^2.
pub fn kg_energy(qn: QuantumNumbers, system: &CoulombSystem) -> Result<f64> {
    let gamma = system.gamma();
    let l_eff = effective_l(qn.l, gamma)?;
    let big_n = qn.n as f64 - qn.l as f64 + l_eff;
    Ok(system.mass_c2 / (1.0 + (gamma / big_n).powi(2)).sqrt())
}

/// A constructed Klein-Gordon bound state: derived parameters plus cached
/// Laguerre data so the radial function evaluates without re-deriving them.
#[derive(Debug, Clone, Copy)]
pub struct KGBoundState {
    qn: QuantumNumbers,
    system: CoulombSystem,
    l_eff: f64,
    energy: f64,
    beta: f64,
    lambda: f64,
    norm: f64,
    lag_degree: u32,
    lag_alpha: f64,
    lag_scale: f64,
}

/// Constructs the bound state for the given quantum numbers; see
/// [`KGBoundState::new`].
pub fn kg_state(qn: QuantumNumbers, system: &CoulombSystem) -> Result<KGBoundState> {
    KGBoundState::new(qn, system)
}

impl KGBoundState {
    pub fn new(qn: QuantumNumbers, system: &CoulombSystem) -> Result<Self> {
        let gamma = system.gamma();
        let l_eff = effective_l(qn.l, gamma)?;
        let big_n = qn.n as f64 - qn.l as f64 + l_eff;
        let energy = system.mass_c2 / (1.0 + (gamma / big_n).powi(2)).sqrt();
        // beta = (2/hbar c) sqrt(m^2 c^4 - eps^2); the algebraically equal
        // form below avoids the 1 - eps^2 cancellation at small gamma
        let beta = 2.0 * system.mass_c2 * gamma
            / (system.hbar_c * (big_n * big_n + gamma * gamma).sqrt());
        // lambda = 2 eps Z e^2 / (hbar^2 c^2 beta) with Z e^2 = gamma hbar c
        let lambda = 2.0 * energy * gamma / (system.hbar_c * beta);
        let norm2 = system.mass_c2 * gamma / (system.hbar_c * (big_n * big_n + gamma * gamma));
        let lag_degree = qn.n - qn.l - 1;
        let lag_alpha = 2.0 * l_eff + 1.0;
        let params = LaguerreParams::new(lag_degree, lag_alpha)?;
        let lag_scale = laguerre_orthonormal_scale(&params)?;
        Ok(Self {
            qn,
            system: *system,
            l_eff,
            energy,
            beta,
            lambda,
            norm: norm2.sqrt(),
            lag_degree,
            lag_alpha,
            lag_scale,
        })
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn system(&self) -> &CoulombSystem {
        &self.system
    }

    /// l'
    pub fn l_eff(&self) -> f64 {
        self.l_eff
    }

    /// eps (in the system's energy unit)
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// beta (inverse length)
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// lambda = n - l + l'
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Charge-conservation normalization constant N of the reduced radial
    /// function.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// Reduced radial function u(s) = N s^(l'+1) e^(-s/2) Lt_{n-l-1}^{2l'+1}(s)
    /// in the dimensionless variable s = beta r; u(0) = 0.
    pub fn radial_u(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        let log_env = (self.l_eff + 1.0) * s.ln() - 0.5 * s;
        if log_env < -745.0 {
            return 0.0;
        }
        let params = LaguerreParams::new(self.lag_degree, self.lag_alpha)
            .expect("validated at construction");
        self.norm * log_env.exp() * self.lag_scale * laguerre(&params, s)
    }

    /// du/ds; diverges like s^(l') as s -> 0 when l' < 0 (s states), which is
    /// the physical behavior of the relativistic solution.
    pub fn radial_u_deriv(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return f64::INFINITY;
        }
        let log_env = self.l_eff * s.ln() - 0.5 * s;
        if log_env < -745.0 {
            return 0.0;
        }
        let params = LaguerreParams::new(self.lag_degree, self.lag_alpha)
            .expect("validated at construction");
        let lag = self.lag_scale * laguerre(&params, s);
        // d/dx Lt_k^a = -sqrt(k) Lt_{k-1}^{a+1}
        let dlag = if self.lag_degree == 0 {
            0.0
        } else {
            let dp = LaguerreParams::new(self.lag_degree - 1, self.lag_alpha + 1.0)
                .expect("validated at construction");
            let dscale = laguerre_orthonormal_scale(&dp).expect("validated at construction");
            -(self.lag_degree as f64).sqrt() * dscale * laguerre(&dp, s)
        };
        let bracket = (self.l_eff + 1.0 - 0.5 * s) * lag + s * dlag;
        self.norm * log_env.exp() * bracket
    }

    fn labels(&self) -> StateLabels {
        StateLabels {
            z: self.system.z,
            n: self.qn.n,
            l: self.qn.l,
            m: self.qn.m,
        }
    }

    fn length_scale(&self) -> f64 {
        2.0 * (self.lambda + 1.0) / self.beta
    }

    /// Lorentz-invariant probability density: the charge density of Eq. (3)
    /// divided by e, unit-normalized by charge conservation.
    pub fn density_li(&self) -> ProbabilityDensity {
        ProbabilityDensity::new(
            WaveKind::Kg(*self),
            RadialWeight::Coulomb {
                eps: self.energy,
                zee2: self.system.gamma() * self.system.hbar_c,
                inv_mc2: 1.0 / self.system.mass_c2,
            },
            AngularProfile::new(self.qn.l, self.qn.m),
            DensityModel::KgLi,
            self.labels(),
            self.length_scale(),
            true,
        )
    }

    /// Non-Lorentz-invariant |psi|^2 with the same normalization constant;
    /// its total integral is eps/m0c2, not 1, and the meta tag records that.
    pub fn density_nli(&self) -> ProbabilityDensity {
        ProbabilityDensity::new(
            WaveKind::Kg(*self),
            RadialWeight::Const(1.0),
            AngularProfile::new(self.qn.l, self.qn.m),
            DensityModel::KgNli,
            self.labels(),
            self.length_scale(),
            false,
        )
    }

    /// |psi|^2 rescaled to unit total probability (division by eps/m0c2);
    /// the default position density reported for the Klein-Gordon model.
    ///
    /// The Lorentz-invariant density cannot serve here: its Fisher integrand
    /// behaves like r^(2l'-3) at the origin, which is non-integrable for
    /// every s state.
    pub fn density_normalized(&self) -> ProbabilityDensity {
        ProbabilityDensity::new(
            WaveKind::Kg(*self),
            RadialWeight::Const(self.system.mass_c2 / self.energy),
            AngularProfile::new(self.qn.l, self.qn.m),
            DensityModel::KgNormalized,
            self.labels(),
            self.length_scale(),
            true,
        )
    }
}
