//! Exact verification toolkit for the mathematical core of ur-theory: the
//! spinor → null-vector map and its SL(2,ℂ) double cover, dyad → tetrad
//! construction and its Fock quantization, SU(2) representation
//! multiplicities with the cosmological cutoff, massless free-field
//! identities, and large-number entropy arithmetic.

pub mod biglog;
pub mod cosmic;
pub mod fields;
pub mod fock;
pub mod lie;
pub mod repr;
pub mod sample;
pub mod scalar;
pub mod spinor;
pub mod tetrad;
