//! Truncated matrix realization on the circle basis e_j.

pub mod generators;
pub mod operator;
pub mod semiclassical;
pub mod state;
pub mod suite;

pub use generators::{build_generators, CircleGenerators, MomentumRealization};
pub use operator::{relation_check_interior, CircleOperator, RelationCheck};
pub use state::{expectation, gaussian_angle_state, gaussian_required_j, variance, CircleState, GaussianStateInfo, TAIL_TOL};
pub use semiclassical::{semiclassical_h_expectation, LSurrogate, SemiclassicalReport};
pub use suite::circle_relation_suite;
