//! Position probability densities factorized as rho(r, theta) = D(r) |Y_lm|^2,
//! with analytic radial derivatives for the Fisher integrands.

use crate::kg_states::KGBoundState;
use crate::sch_states::SchBoundState;
use crate::specfun::norm_assoc_legendre_with_deriv;
use std::fmt;

/// Which model (and which Klein-Gordon density reading) produced a density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityModel {
    /// Lorentz-invariant Klein-Gordon density (eps - V)|psi|^2 / m0c2,
    /// unit-normalized by charge conservation.
    KgLi,
    /// Raw |psi|^2 with the charge-conservation normalization constant;
    /// its total integral is eps/m0c2, not 1.
    KgNli,
    /// |psi|^2 rescaled to unit probability; the default reporting density
    /// of the Klein-Gordon model.
    KgNormalized,
    /// Nonrelativistic hydrogenic density.
    Sch,
}

impl fmt::Display for DensityModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DensityModel::KgLi => "KG-LI",
            DensityModel::KgNli => "KG-NLI",
            DensityModel::KgNormalized => "KG",
            DensityModel::Sch => "SCH",
        };
        f.write_str(s)
    }
}

/// State labels carried through to reports.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateLabels {
    pub z: f64,
    pub n: u32,
    pub l: u32,
    pub m: i32,
}

/// Squared spherical harmonic profile |Y_lm(theta)|^2 (phi-independent).
#[derive(Debug, Clone, Copy)]
pub struct AngularProfile {
    l: u32,
    m_abs: u32,
}

impl AngularProfile {
    pub(crate) fn new(l: u32, m: i32) -> Self {
        debug_assert!(m.unsigned_abs() <= l);
        Self {
            l,
            m_abs: m.unsigned_abs(),
        }
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m_abs(&self) -> u32 {
        self.m_abs
    }

    /// |Y_lm|^2 at polar angle theta.
    pub fn y2(&self, theta: f64) -> f64 {
        let (p, _) = norm_assoc_legendre_with_deriv(self.l, self.m_abs, theta);
        p * p
    }

    /// d/dtheta |Y_lm|^2.
    pub fn y2_dtheta(&self, theta: f64) -> f64 {
        let (p, dp) = norm_assoc_legendre_with_deriv(self.l, self.m_abs, theta);
        2.0 * p * dp
    }

    /// (d_theta |Y|^2)^2 / |Y|^2 = 4 (d_theta P~)^2, finite at the nodes of P~.
    pub fn fisher_kernel(&self, theta: f64) -> f64 {
        let (_, dp) = norm_assoc_legendre_with_deriv(self.l, self.m_abs, theta);
        4.0 * dp * dp
    }

    /// The l - |m| interior zeros of P~_l^m on (0, pi), where ln|Y|^2
    /// integrands lose smoothness.
    pub(crate) fn nodes(&self) -> Vec<f64> {
        let count = (self.l - self.m_abs) as usize;
        let p = |theta: f64| norm_assoc_legendre_with_deriv(self.l, self.m_abs, theta).0;
        find_sign_changes(p, 1e-4, std::f64::consts::PI - 1e-4, 400 * (count + 1), count)
    }
}

/// Locates zeros of f by uniform scanning plus bisection; returns at most
/// `expected` roots (the scan resolution is chosen so all are found).
pub(crate) fn find_sign_changes<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    samples: usize,
    expected: usize,
) -> Vec<f64> {
    let mut roots = Vec::with_capacity(expected);
    if expected == 0 {
        return roots;
    }
    let step = (hi - lo) / samples as f64;
    let mut x0 = lo;
    let mut f0 = f(x0);
    for i in 1..=samples {
        let x1 = lo + step * i as f64;
        let f1 = f(x1);
        if f0 != 0.0 && f1 != 0.0 && f0.signum() != f1.signum() {
            let (mut a, mut b, mut fa) = (x0, x1, f0);
            for _ in 0..100 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                let fm = f(mid);
                if fm == 0.0 {
                    a = mid;
                    b = mid;
                    break;
                }
                if fa.signum() == fm.signum() {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push(0.5 * (a + b));
            if roots.len() == expected {
                return roots;
            }
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum WaveKind {
    Kg(KGBoundState),
    Sch(SchBoundState),
}

impl WaveKind {
    /// Radial amplitude W(r): u(beta r)/r for KG, R_nl(r) for SCH.
    fn value(&self, r: f64) -> f64 {
        match self {
            WaveKind::Kg(st) => st.radial_u(st.beta() * r) / r,
            WaveKind::Sch(st) => st.radial_r(r),
        }
    }

    fn deriv(&self, r: f64) -> f64 {
        match self {
            WaveKind::Kg(st) => {
                let s = st.beta() * r;
                (st.beta() * st.radial_u_deriv(s) - st.radial_u(s) / r) / r
            }
            WaveKind::Sch(st) => st.radial_r_deriv(r),
        }
    }
}

/// Radial weight in D(r) = g(r) W(r)^2.
#[derive(Debug, Clone, Copy)]
pub(crate) enum RadialWeight {
    Const(f64),
    /// g(r) = (eps + zee2 / r) / m0c2, the Lorentz-invariant factor
    Coulomb { eps: f64, zee2: f64, inv_mc2: f64 },
}

/// Unit-normalized (or tagged otherwise) position density split into radial
/// and angular factors; immutable and safe to share across threads.
#[derive(Debug, Clone, Copy)]
pub struct ProbabilityDensity {
    pub(crate) wave: WaveKind,
    pub(crate) weight: RadialWeight,
    pub angular: AngularProfile,
    pub model: DensityModel,
    pub labels: StateLabels,
    /// Characteristic radial extent, used to center the quadrature rule.
    pub length_scale: f64,
    unit_normalized: bool,
}

impl ProbabilityDensity {
    pub(crate) fn new(
        wave: WaveKind,
        weight: RadialWeight,
        angular: AngularProfile,
        model: DensityModel,
        labels: StateLabels,
        length_scale: f64,
        unit_normalized: bool,
    ) -> Self {
        Self {
            wave,
            weight,
            angular,
            model,
            labels,
            length_scale,
            unit_normalized,
        }
    }

    /// Whether the total integral of the density is 1 by construction.
    pub fn is_unit_normalized(&self) -> bool {
        self.unit_normalized
    }

    /// The underlying Klein-Gordon state, when this is a KG density.
    pub fn kg_state(&self) -> Option<&KGBoundState> {
        match &self.wave {
            WaveKind::Kg(st) => Some(st),
            WaveKind::Sch(_) => None,
        }
    }

    /// Radial factor D(r) >= 0.
    pub fn radial_value(&self, r: f64) -> f64 {
        let w = self.wave.value(r);
        match self.weight {
            RadialWeight::Const(c) => c * w * w,
            RadialWeight::Coulomb { eps, zee2, inv_mc2 } => (eps + zee2 / r) * inv_mc2 * w * w,
        }
    }

    /// Analytic radial derivative D'(r).
    pub fn radial_deriv(&self, r: f64) -> f64 {
        let w = self.wave.value(r);
        let wp = self.wave.deriv(r);
        match self.weight {
            RadialWeight::Const(c) => 2.0 * c * w * wp,
            RadialWeight::Coulomb { eps, zee2, inv_mc2 } => {
                let g = (eps + zee2 / r) * inv_mc2;
                let gp = -zee2 * inv_mc2 / (r * r);
                gp * w * w + 2.0 * g * w * wp
            }
        }
    }

    /// (D')^2 / D * r^2, grouped so that the Laguerre nodes of W cancel and
    /// the small-r powers stay inside f64 range.
    pub fn radial_fisher_integrand(&self, r: f64) -> f64 {
        let w = self.wave.value(r);
        let wpr = self.wave.deriv(r) * r;
        match self.weight {
            RadialWeight::Const(c) => 4.0 * c * wpr * wpr,
            RadialWeight::Coulomb { eps, zee2, inv_mc2 } => {
                let g = (eps + zee2 / r) * inv_mc2;
                let gpr = -zee2 * inv_mc2 / r;
                let t = gpr * w + 2.0 * g * wpr;
                t * t / g
            }
        }
    }

    /// Full density rho(r, theta) = D(r) |Y_lm|^2(theta).
    pub fn value(&self, r: f64, theta: f64) -> f64 {
        self.radial_value(r) * self.angular.y2(theta)
    }

    /// Radii of the n - l - 1 interior zeros of the radial amplitude W(r);
    /// ln D integrands lose smoothness there.
    pub(crate) fn radial_wave_nodes(&self) -> Vec<f64> {
        let (count, x_upper, x_to_r) = match &self.wave {
            WaveKind::Kg(st) => {
                let k = (st.qn().n() - st.qn().l() - 1) as usize;
                let alpha = 2.0 * st.l_eff() + 1.0;
                (k, 4.0 * k as f64 + 2.0 * alpha + 6.0, 1.0 / st.beta())
            }
            WaveKind::Sch(st) => {
                let k = (st.qn().n() - st.qn().l() - 1) as usize;
                let alpha = 2.0 * st.qn().l() as f64 + 1.0;
                let b = 2.0 / (st.qn().n() as f64 * st.length_scale());
                (k, 4.0 * k as f64 + 2.0 * alpha + 6.0, 1.0 / b)
            }
        };
        if count == 0 {
            return Vec::new();
        }
        let w = |r: f64| self.wave.value(r);
        find_sign_changes(
            w,
            1e-9 * x_to_r,
            x_upper * x_to_r,
            400 * count,
            count,
        )
    }
}
