//! Information-theoretic complexity of Klein-Gordon and Schrödinger
//! single-particle Coulomb systems.
//!
//! The crate builds relativistic (Klein-Gordon) and nonrelativistic
//! (hydrogenic) bound-state densities for a pointlike charge in a Coulomb
//! well, evaluates Shannon entropy, Fisher information, entropic power and
//! disequilibrium over them, and composes the Fisher-Shannon and LMC shape
//! complexities together with the relative ratio zeta = 1 - C_SCH/C_KG that
//! quantifies relativistic effects.
//!
//! Internal computations use hbar c = 1 with energies in units of the rest
//! energy m0 c^2; both complexities are invariant under uniform rescaling,
//! so unit conversion only matters for the raw S, I, J values.

pub mod density;
pub mod error;
pub mod infomeasures;
pub mod kg_states;
pub mod quadrature;
pub mod sch_states;
pub mod specfun;

pub use density::{AngularProfile, DensityModel, ProbabilityDensity, StateLabels};
pub use error::{Error, Result};
pub use infomeasures::InfoReport;
pub use kg_states::{
    effective_l, kg_energy, kg_state, CoulombSystem, KGBoundState, QuantumNumbers, FINE_STRUCTURE,
};
pub use quadrature::{QuadratureConfig, QuadratureResult};
pub use sch_states::{sch_density, SchBoundState};
