//! The symmetrization channel (twirl) over the GHZ symmetry group and the
//! triangle coordinates of its image.
//!
//! The group is generated by qubit permutations, the simultaneous flip
//! sigma_x (x) sigma_x (x) sigma_x, and the phase rotations
//! exp(i phi1 sigma_z) (x) exp(i phi2 sigma_z) (x) exp(-i (phi1+phi2) sigma_z).
//! Averaging a state over the group kills every matrix element except the
//! populations and the |000><111| coherence, which is what makes the image
//! two-dimensional: it is fully described by the coordinates
//!
//!   x = Re rho[000,111],   y = (rho[000,000] + rho[111,111] - 1/4) / sqrt(3).

use crate::statespace::{DensityMatrix8, Matrix8, PureState8, TriangleCoords, C64, SQRT3};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TwirlError {
    #[error("coordinates (x = {x}, y = {y}) lie outside the symmetric triangle")]
    OutsideTriangle { x: f64, y: f64 },
    #[error("{0:?} is not a permutation of [0, 1, 2]")]
    InvalidPermutation([usize; 3]),
}

/// A permutation of the three qubit positions; `map[p] = q` sends the
/// qubit at position p to position q (position 0 is the most significant
/// bit of the basis index).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Permutation3 {
    map: [usize; 3],
}

impl Permutation3 {
    pub fn new(map: [usize; 3]) -> Result<Self, TwirlError> {
        let mut seen = [false; 3];
        for &q in &map {
            if q > 2 || seen[q] {
                return Err(TwirlError::InvalidPermutation(map));
            }
            seen[q] = true;
        }
        Ok(Self { map })
    }

    pub fn identity() -> Self {
        Self { map: [0, 1, 2] }
    }

    pub fn all() -> [Self; 6] {
        [
            Self { map: [0, 1, 2] },
            Self { map: [0, 2, 1] },
            Self { map: [1, 0, 2] },
            Self { map: [1, 2, 0] },
            Self { map: [2, 0, 1] },
            Self { map: [2, 1, 0] },
        ]
    }

    pub fn map(&self) -> [usize; 3] {
        self.map
    }

    /// Image of a computational basis index under the position relabeling.
    pub fn permute_index(&self, i: usize) -> usize {
        debug_assert!(i < 8);
        let mut j = 0;
        for p in 0..3 {
            let bit = (i >> (2 - p)) & 1;
            j |= bit << (2 - self.map[p]);
        }
        j
    }
}

/// One element of (a generating family of) the GHZ symmetry group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymmetryElement {
    QubitPermutation(Permutation3),
    /// sigma_x (x) sigma_x (x) sigma_x
    TripleFlip,
    /// exp(i phi1 sigma_z) (x) exp(i phi2 sigma_z) (x) exp(-i (phi1+phi2) sigma_z)
    ZRotation {
        phi1: f64,
        phi2: f64,
    },
}

impl SymmetryElement {
    pub fn unitary(&self) -> Matrix8 {
        match *self {
            SymmetryElement::QubitPermutation(p) => {
                let mut u = Matrix8::zeros();
                for i in 0..8 {
                    u[(p.permute_index(i), i)] = C64::new(1.0, 0.0);
                }
                u
            }
            SymmetryElement::TripleFlip => {
                let mut u = Matrix8::zeros();
                for i in 0..8 {
                    u[(7 - i, i)] = C64::new(1.0, 0.0);
                }
                u
            }
            SymmetryElement::ZRotation { phi1, phi2 } => {
                let phis = [phi1, phi2, -(phi1 + phi2)];
                let mut u = Matrix8::zeros();
                for i in 0..8 {
                    let mut angle = 0.0;
                    for (p, phi) in phis.iter().enumerate() {
                        // sigma_z eigenvalue: +1 on |0>, -1 on |1>
                        let s = if (i >> (2 - p)) & 1 == 0 { 1.0 } else { -1.0 };
                        angle += s * phi;
                    }
                    u[(i, i)] = C64::new(angle.cos(), angle.sin());
                }
                u
            }
        }
    }
}

/// Conjugation rho -> U rho U^dagger by a symmetry element.
pub fn apply_symmetry(rho: &DensityMatrix8, g: &SymmetryElement) -> DensityMatrix8 {
    let u = g.unitary();
    DensityMatrix8::from_valid(u * rho.matrix() * u.adjoint())
}

/// Triangle coordinates of an arbitrary density matrix, i.e. of its twirl
/// image. For states already symmetric these determine the state uniquely.
pub fn coords_of_density(rho: &DensityMatrix8) -> TriangleCoords {
    let m = rho.matrix();
    let x = 0.5 * (m[(0, 7)].re + m[(7, 0)].re);
    let s = m[(0, 0)].re + m[(7, 7)].re;
    TriangleCoords::new(x, (s - 0.25) / SQRT3)
}

/// Triangle coordinates of a pure state; agrees with
/// `coords_of_density(pure_to_density(psi))`.
pub fn coords_of_pure(psi: &PureState8) -> TriangleCoords {
    let a0 = psi.amplitude(0);
    let a7 = psi.amplitude(7);
    let x = (a0 * a7.conj()).re;
    let s = a0.norm_sqr() + a7.norm_sqr();
    TriangleCoords::new(x, (s - 0.25) / SQRT3)
}

/// Group average of a state over the GHZ symmetry group, in closed form.
///
/// Phase averaging removes every coherence except |000><111|, permutation
/// and flip averaging then equalize the six middle populations and the two
/// extreme ones, and keep only the real part of the surviving coherence.
pub fn twirl(rho: &DensityMatrix8) -> DensityMatrix8 {
    let m = rho.matrix();
    let s = m[(0, 0)].re + m[(7, 7)].re;
    let d0 = 0.5 * s;
    let mid = (1.0 - s) / 6.0;
    let x = 0.5 * (m[(0, 7)].re + m[(7, 0)].re);
    let mut t = Matrix8::zeros();
    t[(0, 0)] = C64::new(d0, 0.0);
    t[(7, 7)] = C64::new(d0, 0.0);
    for i in 1..7 {
        t[(i, i)] = C64::new(mid, 0.0);
    }
    t[(0, 7)] = C64::new(x, 0.0);
    t[(7, 0)] = C64::new(x, 0.0);
    DensityMatrix8::from_valid(t)
}

/// The unique GHZ-symmetric state with the given triangle coordinates.
pub fn symmetric_from_coords(c: TriangleCoords) -> Result<DensityMatrix8, TwirlError> {
    if !c.is_inside(1e-12) {
        return Err(TwirlError::OutsideTriangle { x: c.x, y: c.y });
    }
    let s = SQRT3 * c.y + 0.25;
    let d0 = 0.5 * s;
    let mid = (1.0 - s) / 6.0;
    let mut t = Matrix8::zeros();
    t[(0, 0)] = C64::new(d0, 0.0);
    t[(7, 7)] = C64::new(d0, 0.0);
    for i in 1..7 {
        t[(i, i)] = C64::new(mid, 0.0);
    }
    t[(0, 7)] = C64::new(c.x, 0.0);
    t[(7, 0)] = C64::new(c.x, 0.0);
    Ok(DensityMatrix8::from_valid(t))
}

/// True when the state is (numerically) a fixed point of the twirl, i.e.
/// its Hilbert-Schmidt distance to its own twirl image is at most `tol`.
pub fn is_ghz_symmetric(rho: &DensityMatrix8, tol: f64) -> bool {
    rho.hs_distance(&twirl(rho)) <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statespace::{pure_to_density, werner, PureState8, Vector8, Y_MAX, Y_MIN};

    fn mixed() -> DensityMatrix8 {
        werner(0.0).unwrap()
    }

    fn fixed_asymmetric_state() -> DensityMatrix8 {
        let v = Vector8::from_fn(|i, _| C64::new(0.3 + (i as f64) * 0.17, (i as f64) * 0.11 - 0.4));
        pure_to_density(&PureState8::normalized(v).unwrap())
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation3::new([0, 2, 1]).is_ok());
        assert_eq!(
            Permutation3::new([0, 0, 1]),
            Err(TwirlError::InvalidPermutation([0, 0, 1]))
        );
        assert!(Permutation3::new([0, 3, 1]).is_err());
        assert_eq!(Permutation3::all().len(), 6);
    }

    #[test]
    fn permutation_moves_bits() {
        // swapping positions 1 and 2 turns |001> into |010>
        let p = Permutation3::new([0, 2, 1]).unwrap();
        assert_eq!(p.permute_index(0b001), 0b010);
        // the cycle 0 -> 1 -> 2 -> 0 turns |100> into |010>
        let c = Permutation3::new([1, 2, 0]).unwrap();
        assert_eq!(c.permute_index(0b100), 0b010);
        assert_eq!(c.permute_index(0b010), 0b001);
        assert_eq!(c.permute_index(0b001), 0b100);
    }

    #[test]
    fn symmetry_unitaries_are_unitary() {
        let elements = [
            SymmetryElement::QubitPermutation(Permutation3::new([1, 2, 0]).unwrap()),
            SymmetryElement::TripleFlip,
            SymmetryElement::ZRotation {
                phi1: 0.3,
                phi2: -0.7,
            },
        ];
        for g in elements {
            let u = g.unitary();
            assert!((u * u.adjoint() - Matrix8::identity()).norm() < 1e-14);
        }
    }

    #[test]
    fn maximally_mixed_is_invariant() {
        let rho = mixed();
        for g in [
            SymmetryElement::QubitPermutation(Permutation3::new([2, 0, 1]).unwrap()),
            SymmetryElement::TripleFlip,
            SymmetryElement::ZRotation {
                phi1: 1.1,
                phi2: 0.25,
            },
        ] {
            assert!(apply_symmetry(&rho, &g).hs_distance(&rho) < 1e-15);
        }
    }

    #[test]
    fn ghz_plus_is_invariant_under_phase_rotations() {
        let rho = pure_to_density(&PureState8::ghz_plus());
        let g = SymmetryElement::ZRotation {
            phi1: 0.3,
            phi2: -0.7,
        };
        assert!(apply_symmetry(&rho, &g).hs_distance(&rho) < 1e-12);
        assert!(apply_symmetry(&rho, &SymmetryElement::TripleFlip).hs_distance(&rho) < 1e-12);
    }

    #[test]
    fn triple_flip_complements_basis_states() {
        let rho = pure_to_density(&PureState8::computational(0b001));
        let flipped = apply_symmetry(&rho, &SymmetryElement::TripleFlip);
        let expected = pure_to_density(&PureState8::computational(0b110));
        assert_eq!(flipped.matrix(), expected.matrix());
    }

    #[test]
    fn coords_of_reference_states() {
        let c = coords_of_density(&mixed());
        assert_eq!((c.x, c.y), (0.0, 0.0));

        let plus = coords_of_density(&pure_to_density(&PureState8::ghz_plus()));
        assert!((plus.x - 0.5).abs() < 1e-15);
        assert!((plus.y - Y_MAX).abs() < 1e-15);

        let minus = coords_of_density(&pure_to_density(&PureState8::ghz_minus()));
        assert!((minus.x + 0.5).abs() < 1e-15);
        assert!((minus.y - Y_MAX).abs() < 1e-15);
    }

    #[test]
    fn coords_are_linear_on_the_werner_line() {
        for k in 0..=10 {
            let p = k as f64 / 10.0;
            let c = coords_of_density(&werner(p).unwrap());
            assert!((c.x - p / 2.0).abs() < 1e-15);
            assert!((c.y - SQRT3 * p / 4.0).abs() < 1e-15);
        }
    }

    #[test]
    fn coords_of_pure_fixtures() {
        let c001 = coords_of_pure(&PureState8::computational(1));
        assert!((c001.x).abs() < 1e-15);
        assert!((c001.y - Y_MIN).abs() < 1e-15);

        let cppp = coords_of_pure(&PureState8::plus_plus_plus());
        assert!((cppp.x - 0.125).abs() < 1e-15);
        assert!((cppp.y).abs() < 1e-15);

        let czb = coords_of_pure(&PureState8::zero_bell());
        assert!((czb.x).abs() < 1e-15);
        assert!((czb.y - 1.0 / (4.0 * SQRT3)).abs() < 1e-15);

        let cbell = coords_of_pure(&PureState8::plus_bell());
        assert!((cbell.x - 0.25).abs() < 1e-15);
        assert!((cbell.y - 1.0 / (4.0 * SQRT3)).abs() < 1e-15);

        let cw = coords_of_pure(&PureState8::w_extremal());
        assert!((cw.x - 0.375).abs() < 1e-15);
        assert!((cw.y - 1.0 / (2.0 * SQRT3)).abs() < 1e-15);
    }

    #[test]
    fn pure_and_density_coords_agree() {
        let v = Vector8::from_fn(|i, _| C64::new(1.0 - 0.2 * i as f64, 0.3 * i as f64));
        let psi = PureState8::normalized(v).unwrap();
        let a = coords_of_pure(&psi);
        let b = coords_of_density(&pure_to_density(&psi));
        assert!((a.x - b.x).abs() < 1e-15);
        assert!((a.y - b.y).abs() < 1e-15);
    }

    #[test]
    fn twirl_fixes_the_maximally_mixed_state() {
        let rho = mixed();
        assert_eq!(twirl(&rho).matrix(), rho.matrix());
    }

    #[test]
    fn twirl_of_zero_projector() {
        let t = twirl(&pure_to_density(&PureState8::computational(0)));
        assert_eq!(t.entry(0, 0), C64::new(0.5, 0.0));
        assert_eq!(t.entry(7, 7), C64::new(0.5, 0.0));
        for i in 1..7 {
            assert_eq!(t.entry(i, i), C64::new(0.0, 0.0));
        }
        assert_eq!(t.entry(0, 7), C64::new(0.0, 0.0));
        let c = coords_of_density(&t);
        assert!((c.x).abs() < 1e-15);
        assert!((c.y - Y_MAX).abs() < 1e-15);
    }

    #[test]
    fn twirl_of_w_projector() {
        let t = twirl(&pure_to_density(&PureState8::w_state()));
        for i in 1..7 {
            assert!((t.entry(i, i).re - 1.0 / 6.0).abs() < 1e-15);
        }
        assert_eq!(t.entry(0, 0), C64::new(0.0, 0.0));
        assert_eq!(t.entry(0, 7), C64::new(0.0, 0.0));
        let c = coords_of_density(&t);
        assert_eq!(c.x, 0.0);
        assert!((c.y - Y_MIN).abs() < 1e-15);
    }

    #[test]
    fn twirl_is_idempotent_bit_for_bit() {
        let rho = fixed_asymmetric_state();
        let once = twirl(&rho);
        let twice = twirl(&once);
        assert_eq!(once.matrix(), twice.matrix());
    }

    #[test]
    fn twirl_preserves_coords_exactly() {
        let rho = fixed_asymmetric_state();
        let before = coords_of_density(&rho);
        let after = coords_of_density(&twirl(&rho));
        assert_eq!(before.x, after.x);
        assert_eq!(before.y, after.y);
    }

    #[test]
    fn twirl_commutes_with_symmetry_conjugation() {
        let rho = fixed_asymmetric_state();
        let base = twirl(&rho);
        for g in [
            SymmetryElement::QubitPermutation(Permutation3::new([1, 0, 2]).unwrap()),
            SymmetryElement::QubitPermutation(Permutation3::new([2, 0, 1]).unwrap()),
            SymmetryElement::TripleFlip,
            SymmetryElement::ZRotation {
                phi1: 0.37,
                phi2: 1.1,
            },
        ] {
            let moved = twirl(&apply_symmetry(&rho, &g));
            assert!(moved.hs_distance(&base) < 1e-14);
        }
    }

    #[test]
    fn twirl_is_affine() {
        let a = fixed_asymmetric_state();
        let b = pure_to_density(&PureState8::w_extremal());
        let lambda = 0.3;
        let lhs = twirl(&a.mix(&b, lambda).unwrap());
        let rhs = twirl(&a).mix(&twirl(&b), lambda).unwrap();
        assert!(lhs.hs_distance(&rhs) < 1e-15);
    }

    #[test]
    fn symmetric_from_coords_round_trips() {
        for &(x, y) in &[
            (0.0, 0.0),
            (0.5, Y_MAX),
            (-0.5, Y_MAX),
            (0.0, Y_MIN),
            (0.21, 0.17),
            (-0.3, 0.3),
        ] {
            let c = TriangleCoords::new(x, y);
            let rho = symmetric_from_coords(c).unwrap();
            let back = coords_of_density(&rho);
            assert!((back.x - x).abs() < 1e-15);
            assert!((back.y - y).abs() < 1e-15);
            assert_eq!(twirl(&rho).matrix(), rho.matrix());
        }
    }

    #[test]
    fn symmetric_from_coords_examples() {
        let mixed_again = symmetric_from_coords(TriangleCoords::new(0.0, 0.0)).unwrap();
        assert!(mixed_again.hs_distance(&mixed()) < 1e-15);

        let ghz = symmetric_from_coords(TriangleCoords::new(0.5, Y_MAX)).unwrap();
        assert!(ghz.hs_distance(&pure_to_density(&PureState8::ghz_plus())) < 1e-15);

        assert_eq!(
            symmetric_from_coords(TriangleCoords::new(0.3, 0.5)),
            Err(TwirlError::OutsideTriangle { x: 0.3, y: 0.5 })
        );
    }

    #[test]
    fn symmetry_detection() {
        assert!(is_ghz_symmetric(&werner(0.7).unwrap(), 1e-12));
        assert!(!is_ghz_symmetric(
            &pure_to_density(&PureState8::computational(0)),
            1e-6
        ));
        assert!(is_ghz_symmetric(&twirl(&fixed_asymmetric_state()), 1e-14));
    }
}
