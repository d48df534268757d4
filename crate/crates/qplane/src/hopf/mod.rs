//! Symbolic engine for E_q(2), its dual e_q(2), polar coordinates and the
//! duality bracket.

pub mod axioms;
pub mod dual;
pub mod element;
pub mod group;
pub mod pairing;
pub mod polar;
pub mod random;

pub use dual::{DualConvention, DualElement, DualMonomial, HopfConsistent, PrintedRelation};
pub use element::{tensor, Element, Monomial, Tensor, Tensor3};
pub use group::{GroupElement, GroupMonomial, GroupTensor};
pub use pairing::{pairing, PairingConvention};
pub use polar::{from_polar, to_polar, PolarElement, PolarMonomial};
