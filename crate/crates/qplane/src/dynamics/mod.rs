//! Free q-Hamiltonian, Heisenberg identities, semiclassical Hamiltonian and
//! Bessel stationary states.

pub mod hamiltonian;
pub mod semiclassical;
pub mod stationary;

pub use hamiltonian::{
    apply_h, energy_expectation, hamiltonian_symmetry_checks, heisenberg_identity_check, heisenberg_lhs, heisenberg_rhs,
    quarter_turn, EvolutionCheckResult, MonomialResidual, MAX_HEISENBERG_DEGREE,
};
pub use semiclassical::semiclassical_h_value;
pub use stationary::{
    first_zero, stationary_residual, stationary_state, zero_scaling_report, RadialGrid, StationaryResidual,
    StationarySpec, StationaryState, ZeroScalingRow, DEFAULT_FD_STEP,
};
