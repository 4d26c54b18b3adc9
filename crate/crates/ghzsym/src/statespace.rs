//! Core types for three-qubit states: validated density matrices, pure
//! states, local invertible operations and the (x, y) triangle coordinates
//! used throughout the crate.
//!
//! Basis convention: computational basis index `i = 4*b1 + 2*b2 + b3`,
//! so qubit 1 owns the most significant bit (`|b1 b2 b3>`).

use nalgebra::{Complex, SMatrix, SVector};
use thiserror::Error;

pub type C64 = Complex<f64>;
pub type Matrix8 = SMatrix<C64, 8, 8>;
pub type Vector8 = SVector<C64, 8>;
pub type Matrix2c = SMatrix<C64, 2, 2>;

pub const SQRT3: f64 = 1.7320508075688772935274463415058723669_f64;

/// y coordinate of the bottom vertex of the triangle, -1/(4*sqrt(3)).
pub const Y_MIN: f64 = -1.0 / (4.0 * SQRT3);

/// y coordinate of the top edge of the triangle, sqrt(3)/4.
pub const Y_MAX: f64 = SQRT3 / 4.0;

/// Half-width of the triangle at height y: the edges satisfy
/// |x| = sqrt(3)*y/2 + 1/8. Negative below the bottom vertex.
pub(crate) fn edge_half_width(y: f64) -> f64 {
    SQRT3 * y / 2.0 + 0.125
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("matrix is not Hermitian: max |m[i][j] - conj(m[j][i])| = {max_violation:.3e}")]
    NotHermitian { max_violation: f64 },
    #[error("matrix is not positive semidefinite: smallest eigenvalue = {min_eigenvalue:.3e}")]
    NotPositive { min_eigenvalue: f64 },
    #[error("trace must equal 1: |tr - 1| = {violation:.3e}")]
    TraceNotOne { violation: f64 },
    #[error("state vector is not normalized: |norm^2 - 1| = {violation:.3e}")]
    NotNormalized { violation: f64 },
    #[error("local factor {index} is singular: |det| = {det_magnitude:.3e} < 1e-12")]
    SingularLocalOp { index: usize, det_magnitude: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Smallest eigenvalue of a Hermitian matrix. The input is symmetrized
/// first so that tiny anti-Hermitian noise cannot confuse the solver.
pub(crate) fn min_eigenvalue_hermitian(m: &Matrix8) -> f64 {
    let h = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let eig = nalgebra::SymmetricEigen::new(h);
    eig.eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// An 8x8 density matrix: Hermitian, unit trace, positive semidefinite,
/// each checked within a tolerance at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix8(Matrix8);

impl DensityMatrix8 {
    pub const VALIDATION_TOL: f64 = 1e-10;

    pub fn new(m: Matrix8) -> Result<Self, StateError> {
        Self::with_tolerance(m, Self::VALIDATION_TOL)
    }

    pub fn with_tolerance(m: Matrix8, tol: f64) -> Result<Self, StateError> {
        let mut max_herm = 0.0_f64;
        for i in 0..8 {
            for j in 0..8 {
                let d = (m[(i, j)] - m[(j, i)].conj()).norm();
                if d > max_herm {
                    max_herm = d;
                }
            }
        }
        if !(max_herm <= tol) {
            return Err(StateError::NotHermitian {
                max_violation: max_herm,
            });
        }
        let tr_violation = (m.trace() - C64::new(1.0, 0.0)).norm();
        if !(tr_violation <= tol) {
            return Err(StateError::TraceNotOne {
                violation: tr_violation,
            });
        }
        let min_eig = min_eigenvalue_hermitian(&m);
        if !(min_eig >= -tol) {
            return Err(StateError::NotPositive {
                min_eigenvalue: min_eig,
            });
        }
        Ok(Self(m))
    }

    /// Constructor for matrices whose invariants hold by construction
    /// (twirl images, pure-state projectors, convex mixtures).
    pub(crate) fn from_valid(m: Matrix8) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Matrix8 {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.0[(i, j)]
    }

    /// Hilbert-Schmidt (Frobenius) distance to another density matrix.
    pub fn hs_distance(&self, other: &Self) -> f64 {
        (self.0 - other.0).norm()
    }

    /// Convex mixture lambda * self + (1 - lambda) * other.
    pub fn mix(&self, other: &Self, lambda: f64) -> Result<Self, StateError> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(StateError::InvalidParameter(format!(
                "mixing weight must lie in [0, 1], got {lambda}"
            )));
        }
        let l = C64::new(lambda, 0.0);
        let r = C64::new(1.0 - lambda, 0.0);
        Ok(Self::from_valid(self.0 * l + other.0 * r))
    }
}

/// A normalized three-qubit pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState8(Vector8);

impl PureState8 {
    pub const NORM_TOL: f64 = 1e-12;

    pub fn new(v: Vector8) -> Result<Self, StateError> {
        let violation = (v.norm_squared() - 1.0).abs();
        if !(violation <= Self::NORM_TOL) {
            return Err(StateError::NotNormalized { violation });
        }
        Ok(Self(v))
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalized(v: Vector8) -> Result<Self, StateError> {
        let n = v.norm();
        if !(n > 1e-150) {
            return Err(StateError::InvalidParameter(
                "cannot normalize a (near-)zero vector".into(),
            ));
        }
        Ok(Self(v / C64::new(n, 0.0)))
    }

    pub fn amplitudes(&self) -> &Vector8 {
        &self.0
    }

    pub fn amplitude(&self, i: usize) -> C64 {
        self.0[i]
    }

    /// Computational basis state |b1 b2 b3> with index i = 4*b1 + 2*b2 + b3.
    pub fn computational(i: usize) -> Self {
        assert!(i < 8, "basis index out of range");
        let mut v = Vector8::zeros();
        v[i] = C64::new(1.0, 0.0);
        Self(v)
    }

    /// (|000> + |111>)/sqrt(2)
    pub fn ghz_plus() -> Self {
        let a = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mut v = Vector8::zeros();
        v[0] = a;
        v[7] = a;
        Self(v)
    }

    /// (|000> - |111>)/sqrt(2)
    pub fn ghz_minus() -> Self {
        let a = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mut v = Vector8::zeros();
        v[0] = a;
        v[7] = -a;
        Self(v)
    }

    /// (|001> + |010> + |100>)/sqrt(3)
    pub fn w_state() -> Self {
        let a = C64::new(1.0 / SQRT3, 0.0);
        let mut v = Vector8::zeros();
        v[1] = a;
        v[2] = a;
        v[4] = a;
        Self(v)
    }

    /// (|110> + |101> + |011>)/sqrt(3), the spin-flipped W state.
    pub fn w_bar_state() -> Self {
        let a = C64::new(1.0 / SQRT3, 0.0);
        let mut v = Vector8::zeros();
        v[6] = a;
        v[5] = a;
        v[3] = a;
        Self(v)
    }

    /// |+++>, the product of three |+> = (|0> + |1>)/sqrt(2) factors.
    pub fn plus_plus_plus() -> Self {
        let a = C64::new(0.125_f64.sqrt(), 0.0);
        Self(Vector8::from_element(a))
    }

    /// |0>(|00> + |11>)/sqrt(2): qubit 1 separated from a Bell pair.
    pub fn zero_bell() -> Self {
        let a = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mut v = Vector8::zeros();
        v[0] = a;
        v[3] = a;
        Self(v)
    }

    /// |+>(|00> + |11>)/sqrt(2): the biseparable state reaching the corner
    /// (1/4, 1/(4*sqrt(3))) of the biseparable region.
    pub fn plus_bell() -> Self {
        let a = C64::new(0.5, 0.0);
        let mut v = Vector8::zeros();
        v[0] = a;
        v[3] = a;
        v[4] = a;
        v[7] = a;
        Self(v)
    }

    /// The W-class state attaining the corner (3/8, 1/(2*sqrt(3))) of the
    /// W region: amplitudes proportional to (-1)^b1 * (3 - 2*weight(b)).
    pub fn w_extremal() -> Self {
        let c = 1.0 / (2.0 * 6.0_f64.sqrt());
        let amps = [3.0, 1.0, 1.0, -1.0, -1.0, 1.0, 1.0, 3.0];
        let mut v = Vector8::zeros();
        for (i, a) in amps.iter().enumerate() {
            v[i] = C64::new(a * c, 0.0);
        }
        Self(v)
    }

    /// Product state with the given single-qubit factors (each need not be
    /// normalized; the result is).
    pub fn product(factors: [[C64; 2]; 3]) -> Result<Self, StateError> {
        let mut v = Vector8::zeros();
        for i in 0..8 {
            let b = [(i >> 2) & 1, (i >> 1) & 1, i & 1];
            v[i] = factors[0][b[0]] * factors[1][b[1]] * factors[2][b[2]];
        }
        Self::normalized(v)
    }
}

/// Projector |psi><psi| of a normalized pure state.
pub fn pure_to_density(psi: &PureState8) -> DensityMatrix8 {
    let v = psi.amplitudes();
    DensityMatrix8::from_valid(v * v.adjoint())
}

/// Kronecker product A (x) B (x) C in the big-endian basis convention.
pub fn kron3(a: &Matrix2c, b: &Matrix2c, c: &Matrix2c) -> Matrix8 {
    Matrix8::from_fn(|i, j| {
        a[((i >> 2) & 1, (j >> 2) & 1)] * b[((i >> 1) & 1, (j >> 1) & 1)] * c[(i & 1, j & 1)]
    })
}

/// An invertible local operation G1 (x) G2 (x) G3. Each factor must have
/// |det| >= 1e-12. Not unitary in general; applying one to a state can
/// change its norm but never its SLOCC class.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalOp {
    factors: [Matrix2c; 3],
}

impl LocalOp {
    pub const MIN_DET: f64 = 1e-12;

    pub fn new(factors: [Matrix2c; 3]) -> Result<Self, StateError> {
        for (i, g) in factors.iter().enumerate() {
            let det = g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)];
            let mag = det.norm();
            if !(mag >= Self::MIN_DET) {
                return Err(StateError::SingularLocalOp {
                    index: i + 1,
                    det_magnitude: mag,
                });
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[Matrix2c; 3] {
        &self.factors
    }

    pub fn matrix(&self) -> Matrix8 {
        kron3(&self.factors[0], &self.factors[1], &self.factors[2])
    }

    /// (G1 (x) G2 (x) G3) |psi>, not renormalized.
    pub fn apply(&self, psi: &Vector8) -> Vector8 {
        self.matrix() * psi
    }

    /// Applies the operation to a normalized state and renormalizes.
    pub fn apply_normalized(&self, psi: &PureState8) -> Result<PureState8, StateError> {
        PureState8::normalized(self.apply(psi.amplitudes()))
    }
}

/// Coordinates in the symmetric-state triangle. x measures the coherence
/// between |000> and |111>, y the population excess of those two levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleCoords {
    pub x: f64,
    pub y: f64,
}

impl TriangleCoords {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// True when the point lies in the triangle, inflated by `tol`.
    pub fn is_inside(&self, tol: f64) -> bool {
        self.x.is_finite()
            && self.y.is_finite()
            && self.y >= Y_MIN - tol
            && self.y <= Y_MAX + tol
            && self.x.abs() <= edge_half_width(self.y) + tol
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Entanglement classes of three qubits under stochastic local operations,
/// ordered from least to most entangled. For mixed states each class label
/// C denotes the convex set "class C or below".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SloccClass {
    Separable,
    Biseparable,
    W,
    Ghz,
}

impl SloccClass {
    pub const ALL: [Self; 4] = [Self::Separable, Self::Biseparable, Self::W, Self::Ghz];

    pub fn short_name(self) -> &'static str {
        match self {
            Self::Separable => "sep",
            Self::Biseparable => "bisep",
            Self::W => "w",
            Self::Ghz => "ghz",
        }
    }

    pub fn from_short_name(s: &str) -> Option<Self> {
        match s {
            "sep" => Some(Self::Separable),
            "bisep" => Some(Self::Biseparable),
            "w" => Some(Self::W),
            "ghz" => Some(Self::Ghz),
            _ => None,
        }
    }
}

impl std::fmt::Display for SloccClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.short_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReferenceState {
    GhzPlus,
    GhzMinus,
    MaximallyMixed,
    /// Mixture p * GHZ+ projector + (1 - p)/8 * identity, 0 <= p <= 1.
    Werner(f64),
}

pub fn reference_state(which: ReferenceState) -> Result<DensityMatrix8, StateError> {
    match which {
        ReferenceState::GhzPlus => Ok(pure_to_density(&PureState8::ghz_plus())),
        ReferenceState::GhzMinus => Ok(pure_to_density(&PureState8::ghz_minus())),
        ReferenceState::MaximallyMixed => Ok(DensityMatrix8::from_valid(
            Matrix8::identity() * C64::new(0.125, 0.0),
        )),
        ReferenceState::Werner(p) => werner(p),
    }
}

/// The GHZ-Werner line: p * |GHZ+><GHZ+| + (1 - p) * 1/8.
pub fn werner(p: f64) -> Result<DensityMatrix8, StateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(StateError::InvalidParameter(format!(
            "Werner parameter must lie in [0, 1], got {p}"
        )));
    }
    let ghz = pure_to_density(&PureState8::ghz_plus());
    let m = ghz.matrix() * C64::new(p, 0.0) + Matrix8::identity() * C64::new((1.0 - p) / 8.0, 0.0);
    Ok(DensityMatrix8::from_valid(m))
}
