//! q-calculus kernel: exact scalars, q-numbers, q-exponentials, Jackson
//! derivatives and integrals, Bessel functions.

pub mod bessel;
pub mod dd;
pub mod field;
pub mod laurent;
pub mod lattice;
pub mod params;
pub mod qnum;
pub mod scalar;
pub mod series;

pub use bessel::{bessel_first_zero, bessel_j};
pub use field::Coeff;
pub use laurent::Laurent;
pub use lattice::{jackson_integral, jackson_integral_fn, LatticeFunction};
pub use params::DeformationParams;
pub use qnum::{q_factorial, q_factorial_sym, q_number, q_pochhammer, QVariant};
pub use scalar::QScalar;
pub use series::{q_exp_big, q_exp_small, PowerSeries};
