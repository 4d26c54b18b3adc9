//! Entanglement classification of GHZ-symmetric three-qubit states.
//!
//! GHZ-symmetric states are the three-qubit mixed states invariant under
//! qubit permutations, the simultaneous spin flip of all three qubits and
//! the continuous family of phase rotations that preserve the GHZ basis
//! pair. They form a two-dimensional convex family, a triangle in the
//! (x, y) plane, on which the borders between the separable, biseparable,
//! W and GHZ entanglement classes are known exactly.
//!
//! The crate provides:
//!
//! - validated state types and reference states ([`statespace`]),
//! - the symmetrization (twirl) channel and triangle coordinates
//!   ([`twirl`]),
//! - exact boundary curves, classification and Werner-line thresholds
//!   ([`geometry`]),
//! - independent numerical cross-checks: class samplers, boundary
//!   re-derivation by maximization, a polynomial class certificate and a
//!   partial-transpose test ([`oracle`]),
//! - a JSON wire format for density matrices ([`json`]).

#![forbid(unsafe_code)]

pub mod geometry;
pub mod json;
pub mod oracle;
pub mod statespace;
pub mod twirl;

pub use statespace::{
    kron3, pure_to_density, reference_state, werner, DensityMatrix8, LocalOp, Matrix2c, Matrix8,
    PureState8, ReferenceState, SloccClass, StateError, TriangleCoords, Vector8, C64, SQRT3, Y_MAX,
    Y_MIN,
};
