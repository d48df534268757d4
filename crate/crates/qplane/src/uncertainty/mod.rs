//! Robertson–Schrödinger bounds and the three packet families: Gaussian
//! radial packets, plane-wave superpositions and minimal radial packets.

pub mod gaussian;
pub mod minimal;
pub mod planewave;
pub mod report;

pub use gaussian::{gaussian_packet, gaussian_packet_report, resolution_check};
pub use minimal::{
    d0_eigen_residual, first_order_gap_fit, minimal_radial_packet, minimal_radial_packet_report, minimal_report,
    LambdaFit, MinimalPacket,
};
pub use planewave::{
    eigen_check, factorization_check, five_point_superposition, momentum_report, plane_wave, superpose, truncate, PlaneWaveSpec, WaveKind,
};
pub use report::{robertson_report, StateVector, UncertaintyReport};
