//! Helpers shared by the integration suites.

use ghzsym::statespace::{DensityMatrix8, Matrix8, C64};
use ghzsym::twirl::{apply_symmetry, Permutation3, SymmetryElement};

/// Brute-force group average: 6 permutations x the flip pair x an m x m
/// phase grid over [0, pi)^2. The conjugation phases are trigonometric
/// polynomials of degree <= 2 per angle, so the grid average is exact (up
/// to rounding) for every m >= 3.
pub fn grid_twirl(rho: &DensityMatrix8, m: usize) -> DensityMatrix8 {
    assert!(m >= 3);
    let mut acc = Matrix8::zeros();
    let mut count = 0usize;
    for perm in Permutation3::all() {
        for flip in [false, true] {
            for k1 in 0..m {
                for k2 in 0..m {
                    let phi1 = std::f64::consts::PI * k1 as f64 / m as f64;
                    let phi2 = std::f64::consts::PI * k2 as f64 / m as f64;
                    let mut g = apply_symmetry(rho, &SymmetryElement::ZRotation { phi1, phi2 });
                    if flip {
                        g = apply_symmetry(&g, &SymmetryElement::TripleFlip);
                    }
                    g = apply_symmetry(&g, &SymmetryElement::QubitPermutation(perm));
                    acc += g.matrix();
                    count += 1;
                }
            }
        }
    }
    let avg = acc / C64::new(count as f64, 0.0);
    DensityMatrix8::new(avg).expect("an average of valid states is a valid state")
}
