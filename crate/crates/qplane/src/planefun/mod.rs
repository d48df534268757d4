//! Function space on the quantum plane and the hatted phase-space operators.

pub mod function;
pub mod multisector;
pub mod radial;
pub mod scan;
pub mod sector;
pub mod suite;

pub use function::{
    apply_l, apply_momentum, apply_position, apply_r, exp_l, momentum_realization, printed_p_y_sign, r_k,
    r_p_minus, r_p_plus, Axis, PlaneFunction,
};
pub use multisector::MultiSector;
pub use radial::{invariant_integral, Flavor, RadialPacket};
pub use scan::{scan_conventions, Convention, ScanRow};
pub use suite::{exact_algebra_suite, IdentityCheck};
