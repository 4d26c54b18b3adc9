//! Numerical cross-checks that are independent of the closed-form
//! geometry: random samplers for each SLOCC class, a containment test of
//! symmetrized samples against the class borders, re-derivation of the
//! borders by direct maximization, the degree-4 polynomial class
//! certificate, and the partial-transpose separability test.

mod nelder;

use crate::geometry::{classify, GeometryError};
use crate::statespace::{
    min_eigenvalue_hermitian, DensityMatrix8, Matrix2c, Matrix8, PureState8, SloccClass, Vector8,
    C64, SQRT3, Y_MAX, Y_MIN,
};
use crate::twirl::{coords_of_pure, Permutation3, SymmetryElement};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("failed to draw an invertible local factor after {attempts} attempts")]
    SamplerFailure { attempts: usize },
    #[error("maximization at y = {y} found no feasible optimum in {restarts} restarts")]
    ConvergenceFailure { y: f64, restarts: usize },
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("y = {y} outside the valid range [{lo}, {hi}]")]
    OutOfRange { y: f64, lo: f64, hi: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Independent RNG stream for one task: reproducible for a given
/// (seed, stream) pair no matter how tasks are scheduled.
fn task_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn ginibre2(rng: &mut ChaCha8Rng) -> Matrix2c {
    Matrix2c::from_fn(|_, _| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
}

const SAMPLER_MAX_ATTEMPTS: usize = 100;

/// Complex Gaussian 2x2 matrix, redrawn until comfortably invertible.
fn random_invertible(rng: &mut ChaCha8Rng) -> Result<Matrix2c, OracleError> {
    for _ in 0..SAMPLER_MAX_ATTEMPTS {
        let g = ginibre2(rng);
        let det = g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)];
        if det.norm() >= 1e-12 {
            return Ok(g);
        }
    }
    Err(OracleError::SamplerFailure {
        attempts: SAMPLER_MAX_ATTEMPTS,
    })
}

/// Random mixed state: G G^dagger / tr(G G^dagger) with G an 8x8 complex
/// Gaussian matrix. Full rank with probability one.
pub fn random_density_matrix(seed: u64, stream: u64) -> DensityMatrix8 {
    let mut rng = task_rng(seed, stream);
    let g =
        Matrix8::from_fn(|_, _| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
    let p = g * g.adjoint();
    let tr = p.trace().re;
    DensityMatrix8::new(p / C64::new(tr, 0.0)).expect("a normalized Gram matrix is a valid state")
}

/// Draws Haar-flavoured random pure states of a fixed SLOCC class by
/// applying random invertible local operations to the class representative.
pub struct ClassSampler {
    target: SloccClass,
    rng: ChaCha8Rng,
}

impl ClassSampler {
    pub fn new(target: SloccClass, seed: u64) -> Self {
        Self::with_stream(target, seed, 0)
    }

    pub fn with_stream(target: SloccClass, seed: u64, stream: u64) -> Self {
        Self {
            target,
            rng: task_rng(seed, stream),
        }
    }

    pub fn target(&self) -> SloccClass {
        self.target
    }

    pub fn sample(&mut self) -> Result<PureState8, OracleError> {
        let rng = &mut self.rng;
        let state = match self.target {
            SloccClass::Separable => {
                let mut factors = [[C64::new(0.0, 0.0); 2]; 3];
                for f in &mut factors {
                    for a in f.iter_mut() {
                        *a = C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
                    }
                }
                PureState8::product(factors).map_err(|_| OracleError::SamplerFailure {
                    attempts: SAMPLER_MAX_ATTEMPTS,
                })?
            }
            SloccClass::Biseparable => {
                let g = [
                    random_invertible(rng)?,
                    random_invertible(rng)?,
                    random_invertible(rng)?,
                ];
                let base = PureState8::zero_bell();
                let moved = apply_factors(&g, base.amplitudes());
                // qubit 1 carries the separated subsystem; a random
                // relabeling spreads the split over all three cuts
                let perm = Permutation3::all()[rng.random_range(0..6usize)];
                let u = SymmetryElement::QubitPermutation(perm).unitary();
                PureState8::normalized(u * moved).expect("image of a unit vector is nonzero")
            }
            SloccClass::W => {
                let g = [
                    random_invertible(rng)?,
                    random_invertible(rng)?,
                    random_invertible(rng)?,
                ];
                let moved = apply_factors(&g, PureState8::w_state().amplitudes());
                PureState8::normalized(moved).expect("image of a unit vector is nonzero")
            }
            SloccClass::Ghz => {
                let g = [
                    random_invertible(rng)?,
                    random_invertible(rng)?,
                    random_invertible(rng)?,
                ];
                let moved = apply_factors(&g, PureState8::ghz_plus().amplitudes());
                PureState8::normalized(moved).expect("image of a unit vector is nonzero")
            }
        };
        Ok(state)
    }
}

/// (G1 (x) G2 (x) G3) |psi> without forming the 8x8 product matrix.
fn apply_factors(g: &[Matrix2c; 3], psi: &Vector8) -> Vector8 {
    let mut out = Vector8::zeros();
    for b in 0..8 {
        let mut acc = C64::new(0.0, 0.0);
        for (k, amp) in psi.iter().enumerate() {
            if amp.norm_sqr() == 0.0 {
                continue;
            }
            let t = g[0][((b >> 2) & 1, (k >> 2) & 1)]
                * g[1][((b >> 1) & 1, (k >> 1) & 1)]
                * g[2][(b & 1, k & 1)];
            acc += t * *amp;
        }
        out[b] = acc;
    }
    out
}

/// Cayley hyperdeterminant of the amplitude tensor: the degree-4 SLOCC
/// invariant. Nonzero exactly on the GHZ class; its magnitude is 1/4 of
/// the three-tangle for normalized states.
pub fn hyperdeterminant(psi: &PureState8) -> C64 {
    let a = |i: usize| psi.amplitude(i);
    let (a000, a001, a010, a011) = (a(0), a(1), a(2), a(3));
    let (a100, a101, a110, a111) = (a(4), a(5), a(6), a(7));

    let sq = a000 * a000 * a111 * a111
        + a001 * a001 * a110 * a110
        + a010 * a010 * a101 * a101
        + a011 * a011 * a100 * a100;
    let pairs = a000 * a111 * (a001 * a110 + a010 * a101 + a011 * a100)
        + a001 * a110 * (a010 * a101 + a011 * a100)
        + a010 * a101 * a011 * a100;
    let quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;

    sq - pairs * C64::new(2.0, 0.0) + quads * C64::new(4.0, 0.0)
}

/// Fraction of `n` random states of class `target` whose symmetrized
/// coordinates classify at or below `target`. Exact class borders make
/// this 1.0; any excursion past a border counts against it.
pub fn containment_test(
    target: SloccClass,
    n: usize,
    seed: u64,
    tol: f64,
) -> Result<f64, OracleError> {
    if target == SloccClass::Ghz {
        return Err(OracleError::InvalidTarget(
            "the GHZ class extends to the triangle edge; containment is vacuous".into(),
        ));
    }
    if n == 0 {
        return Err(OracleError::InvalidParameter(
            "sample count must be positive".into(),
        ));
    }
    let mut sampler = ClassSampler::with_stream(target, seed, 1);
    let mut inside = 0usize;
    for _ in 0..n {
        let psi = sampler.sample()?;
        let class = classify(coords_of_pure(&psi), tol)?;
        if class <= target {
            inside += 1;
        }
    }
    Ok(inside as f64 / n as f64)
}

/// Outcome of one border re-derivation run.
#[derive(Debug, Clone, PartialEq)]
pub struct MaximizationReport {
    pub y_target: f64,
    /// Height actually reached by the best feasible optimum.
    pub y_reached: f64,
    /// Largest coordinate x found at that height.
    pub x_found: f64,
    /// Parameters of the best optimum, in the family's encoding.
    pub parameters: Vec<f64>,
    pub restarts: usize,
    pub evaluations: usize,
}

/// |y_reached - y_target| allowed for an optimum to count as feasible.
pub const FEASIBILITY_TOL: f64 = 1e-8;

#[derive(Clone, Copy)]
enum Family {
    /// Product-state amplitudes: three moduli in [0, 1], phases are
    /// optimal at zero by symmetry.
    SepAmplitudes,
    /// One shared 2x2 complex factor applied to all qubits of the W state.
    WShared,
    /// Three independent factors on the W state (cross-check mode).
    WFree,
    /// Factors on qubit 1 and on the Bell pair (shared by qubits 2 and 3).
    BisepPair,
}

impl Family {
    fn dim(self) -> usize {
        match self {
            Family::SepAmplitudes => 3,
            Family::WShared => 8,
            Family::WFree => 24,
            Family::BisepPair => 16,
        }
    }

    fn initial(self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        match self {
            Family::SepAmplitudes => (0..3).map(|_| rng.random_range(0.02..0.98)).collect(),
            _ => (0..self.dim())
                .map(|_| rng.sample::<f64, _>(StandardNormal))
                .collect(),
        }
    }

    /// Triangle coordinates of the state encoded by `params`, or None for
    /// degenerate parameter values.
    fn xy(self, params: &[f64]) -> Option<(f64, f64)> {
        match self {
            Family::SepAmplitudes => {
                let mut p0 = 1.0;
                let mut p7 = 1.0;
                for &raw in params {
                    let a = raw.clamp(0.0, 1.0);
                    p0 *= a;
                    p7 *= (1.0 - a * a).sqrt();
                }
                Some((p0 * p7, (p0 * p0 + p7 * p7 - 0.25) / SQRT3))
            }
            Family::WShared => {
                let g = factor_from(params, 0);
                state_xy(&[g, g, g], &PureState8::w_state())
            }
            Family::WFree => {
                let g = [
                    factor_from(params, 0),
                    factor_from(params, 8),
                    factor_from(params, 16),
                ];
                state_xy(&g, &PureState8::w_state())
            }
            Family::BisepPair => {
                let g1 = factor_from(params, 0);
                let g23 = factor_from(params, 8);
                state_xy(&[g1, g23, g23], &PureState8::zero_bell())
            }
        }
    }
}

fn factor_from(params: &[f64], at: usize) -> Matrix2c {
    let p = &params[at..at + 8];
    Matrix2c::new(
        C64::new(p[0], p[1]),
        C64::new(p[2], p[3]),
        C64::new(p[4], p[5]),
        C64::new(p[6], p[7]),
    )
}

fn state_xy(g: &[Matrix2c; 3], base: &PureState8) -> Option<(f64, f64)> {
    let v = apply_factors(g, base.amplitudes());
    let n2 = v.norm_squared();
    if !(n2 > 1e-280) {
        return None;
    }
    let a0 = v[0];
    let a7 = v[7];
    let x = (a0 * a7.conj()).re / n2;
    let y = ((a0.norm_sqr() + a7.norm_sqr()) / n2 - 0.25) / SQRT3;
    Some((x, y))
}

/// Penalty rounds: the weight pins the optimum ever harder onto the target
/// height while the restart simplex shrinks around the incumbent.
const PENALTY_ROUNDS: [(f64, f64); 6] = [
    (1e2, 0.4),
    (1e4, 0.15),
    (1e6, 0.05),
    (1e8, 0.01),
    (1e10, 3e-3),
    (1e10, 3e-4),
];

const EVALS_PER_ROUND: usize = 2000;

fn run_maximization(
    family: Family,
    y_target: f64,
    restarts: usize,
    seed: u64,
) -> Result<MaximizationReport, OracleError> {
    if !(y_target >= Y_MIN && y_target <= Y_MAX) {
        return Err(OracleError::OutOfRange {
            y: y_target,
            lo: Y_MIN,
            hi: Y_MAX,
        });
    }
    if restarts == 0 {
        return Err(OracleError::InvalidParameter(
            "at least one restart is required".into(),
        ));
    }
    let mut best: Option<(f64, f64, Vec<f64>)> = None;
    let mut evaluations = 0usize;
    for r in 0..restarts {
        let mut rng = task_rng(seed, 1000 + r as u64);
        let mut point = family.initial(&mut rng);
        for (weight, sim_scale) in PENALTY_ROUNDS {
            let mut objective = |p: &[f64]| match family.xy(p) {
                Some((x, y)) => {
                    let dy = y - y_target;
                    -x + weight * dy * dy
                }
                None => f64::INFINITY,
            };
            let out = nelder::minimize(
                &mut objective,
                &point,
                sim_scale,
                &nelder::Options {
                    max_evals: EVALS_PER_ROUND,
                    x_tol: 1e-13,
                    f_tol: 1e-15,
                },
            );
            evaluations += out.evals;
            point = out.x;
        }
        if let Some((x, y)) = family.xy(&point) {
            if (y - y_target).abs() <= FEASIBILITY_TOL
                && best.as_ref().is_none_or(|(bx, _, _)| x > *bx)
            {
                best = Some((x, y, point));
            }
        }
    }
    match best {
        Some((x, y, parameters)) => Ok(MaximizationReport {
            y_target,
            y_reached: y,
            x_found: x,
            parameters,
            restarts,
            evaluations,
        }),
        None => Err(OracleError::ConvergenceFailure {
            y: y_target,
            restarts,
        }),
    }
}

/// Re-derives the border of `target` at height `y` by maximizing x over
/// random parametrized states of that class (penalized Nelder-Mead with
/// `restarts` independent starts). Deterministic in (target, y, restarts,
/// seed).
pub fn maximize_x_at_y(
    target: SloccClass,
    y: f64,
    restarts: usize,
    seed: u64,
) -> Result<MaximizationReport, OracleError> {
    let family = match target {
        SloccClass::Separable => Family::SepAmplitudes,
        SloccClass::Biseparable => Family::BisepPair,
        SloccClass::W => Family::WShared,
        SloccClass::Ghz => {
            return Err(OracleError::InvalidTarget(
                "the GHZ class reaches the triangle edge; there is no border to re-derive".into(),
            ))
        }
    };
    run_maximization(family, y, restarts, seed)
}

/// Cross-check variant of the W-class maximization with three independent
/// local factors (24 parameters) instead of one shared factor.
pub fn maximize_x_at_y_w_free(
    y: f64,
    restarts: usize,
    seed: u64,
) -> Result<MaximizationReport, OracleError> {
    run_maximization(Family::WFree, y, restarts, seed)
}

/// The three one-vs-rest bipartitions of the qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bipartition {
    /// qubit 1 | qubits 2,3
    Qubit1,
    /// qubit 2 | qubits 1,3
    Qubit2,
    /// qubit 3 | qubits 1,2
    Qubit3,
}

impl Bipartition {
    pub const ALL: [Self; 3] = [Self::Qubit1, Self::Qubit2, Self::Qubit3];

    fn mask(self) -> usize {
        match self {
            Self::Qubit1 => 4,
            Self::Qubit2 => 2,
            Self::Qubit3 => 1,
        }
    }
}

impl std::fmt::Display for Bipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Qubit1 => "1|23",
            Self::Qubit2 => "2|13",
            Self::Qubit3 => "3|12",
        })
    }
}

/// Smallest eigenvalue of the partial transpose of `rho` over the single
/// qubit of the given cut. Negative values certify entanglement across the
/// cut; for GHZ-symmetric states the criterion is exact on the Werner line.
pub fn ppt_min_eigenvalue(rho: &DensityMatrix8, cut: Bipartition) -> f64 {
    let m = rho.matrix();
    let mask = cut.mask();
    let keep = 7 ^ mask;
    let pt = Matrix8::from_fn(|i, j| m[((i & keep) | (j & mask), (j & keep) | (i & mask))]);
    min_eigenvalue_hermitian(&pt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{x_bisep, x_edge, x_sep_pure, x_w, Y_W_EDGE};
    use crate::statespace::{werner, LocalOp};

    fn purity_of_marginal(psi: &PureState8, qubit: usize) -> f64 {
        // 2x2 reduced state of one qubit, by direct summation
        let shift = 2 - qubit;
        let mut red = [[C64::new(0.0, 0.0); 2]; 2];
        for a in 0..2usize {
            for b in 0..2usize {
                for rest in 0..8usize {
                    if (rest >> shift) & 1 != 0 {
                        continue;
                    }
                    let i = rest | (a << shift);
                    let j = rest | (b << shift);
                    red[a][b] += psi.amplitude(i) * psi.amplitude(j).conj();
                }
            }
        }
        let mut p = 0.0;
        for a in 0..2 {
            for b in 0..2 {
                p += (red[a][b] * red[b][a]).re;
            }
        }
        p
    }

    #[test]
    fn hyperdeterminant_reference_values() {
        assert!((hyperdeterminant(&PureState8::ghz_plus()).norm() - 0.25).abs() < 1e-15);
        assert!((hyperdeterminant(&PureState8::ghz_minus()).norm() - 0.25).abs() < 1e-15);
        assert!(hyperdeterminant(&PureState8::w_state()).norm() < 1e-15);
        assert!(hyperdeterminant(&PureState8::zero_bell()).norm() < 1e-15);
        assert!(hyperdeterminant(&PureState8::computational(5)).norm() < 1e-15);
        assert!(hyperdeterminant(&PureState8::plus_plus_plus()).norm() < 1e-15);
        assert!(hyperdeterminant(&PureState8::w_extremal()).norm() < 1e-14);
    }

    #[test]
    fn hyperdeterminant_scales_with_local_determinants() {
        let g1 = Matrix2c::new(
            C64::new(1.0, 0.3),
            C64::new(-0.2, 0.5),
            C64::new(0.7, 0.0),
            C64::new(0.4, -1.1),
        );
        let g2 = Matrix2c::new(
            C64::new(0.2, -0.4),
            C64::new(1.3, 0.1),
            C64::new(0.0, 0.8),
            C64::new(-0.6, 0.2),
        );
        let g3 = Matrix2c::identity();
        let op = LocalOp::new([g1, g2, g3]).unwrap();
        let moved = op.apply(PureState8::ghz_plus().amplitudes());
        let norm2 = moved.norm_squared();
        let normalized = PureState8::normalized(moved).unwrap();

        let det_product: C64 = op
            .factors()
            .iter()
            .map(|g| g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)])
            .product();
        let expected = det_product.norm_sqr() / (norm2 * norm2) * 0.25;
        assert!((hyperdeterminant(&normalized).norm() - expected).abs() < 1e-12);
    }

    #[test]
    fn samplers_are_reproducible() {
        for class in SloccClass::ALL {
            let mut a = ClassSampler::new(class, 7);
            let mut b = ClassSampler::new(class, 7);
            for _ in 0..5 {
                assert_eq!(
                    a.sample().unwrap().amplitudes(),
                    b.sample().unwrap().amplitudes()
                );
            }
            let mut c = ClassSampler::with_stream(class, 7, 9);
            assert_ne!(
                a.sample().unwrap().amplitudes(),
                c.sample().unwrap().amplitudes()
            );
        }
    }

    #[test]
    fn separable_samples_have_pure_marginals() {
        let mut s = ClassSampler::new(SloccClass::Separable, 11);
        for _ in 0..50 {
            let psi = s.sample().unwrap();
            for qubit in 0..3 {
                assert!((purity_of_marginal(&psi, qubit) - 1.0).abs() < 1e-10);
            }
            assert!(hyperdeterminant(&psi).norm() < 1e-12);
        }
    }

    #[test]
    fn biseparable_samples_separate_one_qubit() {
        let mut s = ClassSampler::new(SloccClass::Biseparable, 13);
        for _ in 0..50 {
            let psi = s.sample().unwrap();
            let best = (0..3)
                .map(|q| purity_of_marginal(&psi, q))
                .fold(f64::NEG_INFINITY, f64::max);
            assert!((best - 1.0).abs() < 1e-10);
            assert!(hyperdeterminant(&psi).norm() < 1e-12);
        }
    }

    #[test]
    fn w_samples_have_vanishing_certificate() {
        let mut s = ClassSampler::new(SloccClass::W, 17);
        for _ in 0..100 {
            let psi = s.sample().unwrap();
            assert!(hyperdeterminant(&psi).norm() < 1e-10);
        }
    }

    #[test]
    fn ghz_samples_have_nonzero_certificate() {
        let mut s = ClassSampler::new(SloccClass::Ghz, 19);
        let mut nonzero = 0;
        for _ in 0..100 {
            let psi = s.sample().unwrap();
            if hyperdeterminant(&psi).norm() > 1e-12 {
                nonzero += 1;
            }
        }
        assert!(nonzero >= 99, "only {nonzero} of 100 were certified");
    }

    #[test]
    fn containment_smoke() {
        for class in [
            SloccClass::Separable,
            SloccClass::Biseparable,
            SloccClass::W,
        ] {
            let fraction = containment_test(class, 300, 42, 1e-9).unwrap();
            assert_eq!(fraction, 1.0, "class {class} leaked past its border");
        }
    }

    #[test]
    fn containment_rejects_bad_input() {
        assert!(matches!(
            containment_test(SloccClass::Ghz, 10, 1, 1e-9),
            Err(OracleError::InvalidTarget(_))
        ));
        assert!(matches!(
            containment_test(SloccClass::W, 0, 1, 1e-9),
            Err(OracleError::InvalidParameter(_))
        ));
    }

    #[test]
    fn maximize_separable_matches_pure_border() {
        let y = 0.1;
        let report = maximize_x_at_y(SloccClass::Separable, y, 20, 5).unwrap();
        let expected = x_sep_pure(y).unwrap();
        assert!(
            (report.x_found - expected).abs() < 1e-6,
            "got {}, expected {expected}",
            report.x_found
        );
        assert!((report.y_reached - y).abs() <= FEASIBILITY_TOL);
        assert!(report.x_found <= x_edge(y).unwrap() + 1e-9);
    }

    #[test]
    fn maximize_biseparable_matches_line() {
        let y = SQRT3 / 8.0;
        let report = maximize_x_at_y(SloccClass::Biseparable, y, 20, 6).unwrap();
        let expected = x_bisep(y).unwrap();
        assert!(
            (report.x_found - expected).abs() < 1e-6,
            "got {}, expected {expected}",
            report.x_found
        );
    }

    #[test]
    fn maximize_w_matches_curve_corner() {
        let report = maximize_x_at_y(SloccClass::W, Y_W_EDGE, 50, 7).unwrap();
        assert!(
            (report.x_found - 0.375).abs() < 1e-3,
            "got {}",
            report.x_found
        );
        assert!(report.x_found <= x_w(Y_W_EDGE).unwrap() + 1e-3);
    }

    #[test]
    fn maximize_w_free_mode_stays_below_curve() {
        let y = 0.35;
        let report = maximize_x_at_y_w_free(y, 20, 8).unwrap();
        assert!(report.x_found <= x_w(y).unwrap() + 1e-3);
    }

    #[test]
    fn maximize_is_deterministic() {
        let a = maximize_x_at_y(SloccClass::Separable, 0.2, 5, 123).unwrap();
        let b = maximize_x_at_y(SloccClass::Separable, 0.2, 5, 123).unwrap();
        assert_eq!(a.x_found.to_bits(), b.x_found.to_bits());
        assert_eq!(a.parameters, b.parameters);
        assert_eq!(a.evaluations, b.evaluations);
    }

    #[test]
    fn maximize_rejects_bad_input() {
        assert!(matches!(
            maximize_x_at_y(SloccClass::Ghz, 0.3, 5, 1),
            Err(OracleError::InvalidTarget(_))
        ));
        assert!(matches!(
            maximize_x_at_y(SloccClass::W, 0.9, 5, 1),
            Err(OracleError::OutOfRange { .. })
        ));
        assert!(matches!(
            maximize_x_at_y(SloccClass::W, 0.3, 0, 1),
            Err(OracleError::InvalidParameter(_))
        ));
    }

    #[test]
    fn ppt_reference_values() {
        let mixed = werner(0.0).unwrap();
        for cut in Bipartition::ALL {
            assert!((ppt_min_eigenvalue(&mixed, cut) - 0.125).abs() < 1e-12);
        }
        let ghz = werner(1.0).unwrap();
        for cut in Bipartition::ALL {
            assert!((ppt_min_eigenvalue(&ghz, cut) + 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn ppt_on_the_werner_line_is_analytic() {
        // min eigenvalue of the partial transpose is (1 - 5p)/8 on any cut
        for k in 0..=20 {
            let p = k as f64 / 20.0;
            let rho = werner(p).unwrap();
            for cut in Bipartition::ALL {
                let expected = (1.0 - 5.0 * p) / 8.0;
                assert!(
                    (ppt_min_eigenvalue(&rho, cut) - expected).abs() < 1e-12,
                    "p = {p}, cut {cut}"
                );
            }
        }
    }

    #[test]
    fn random_density_matrices_are_reproducible_and_valid() {
        let a = random_density_matrix(3, 4);
        let b = random_density_matrix(3, 4);
        assert_eq!(a.matrix(), b.matrix());
        let c = random_density_matrix(3, 5);
        assert_ne!(a.matrix(), c.matrix());
    }
}
