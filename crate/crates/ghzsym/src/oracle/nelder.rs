//! Plain downhill-simplex (Nelder-Mead) minimization. Deterministic: the
//! result depends only on the starting point, the scale and the objective.

pub(crate) struct Options {
    pub max_evals: usize,
    /// Stop when the simplex collapses to this diameter per coordinate.
    pub x_tol: f64,
    /// Stop when the objective spread over the simplex falls below this.
    pub f_tol: f64,
}

pub(crate) struct Outcome {
    pub x: Vec<f64>,
    #[allow(dead_code)] // read by tests; production callers re-evaluate
    pub f: f64,
    pub evals: usize,
}

const ALPHA: f64 = 1.0; // reflection
const GAMMA: f64 = 2.0; // expansion
const RHO: f64 = 0.5; // contraction
const SIGMA: f64 = 0.5; // shrink

pub(crate) fn minimize(
    f: &mut dyn FnMut(&[f64]) -> f64,
    x0: &[f64],
    scale: f64,
    opts: &Options,
) -> Outcome {
    let n = x0.len();
    assert!(n > 0, "cannot minimize over zero parameters");
    let mut evals = 0usize;
    // NaN never beats a number, so a degenerate objective cannot win
    let mut eval = |p: &[f64], evals: &mut usize| -> f64 {
        *evals += 1;
        let v = f(p);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    let fx0 = eval(x0, &mut evals);
    simplex.push((x0.to_vec(), fx0));
    for i in 0..n {
        let mut p = x0.to_vec();
        p[i] += scale;
        let fp = eval(&p, &mut evals);
        simplex.push((p, fp));
    }

    loop {
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("objective values never NaN"));

        let spread_f = simplex[n].1 - simplex[0].1;
        let mut spread_x = 0.0_f64;
        for v in &simplex[1..] {
            for i in 0..n {
                spread_x = spread_x.max((v.0[i] - simplex[0].0[i]).abs());
            }
        }
        if evals >= opts.max_evals || (spread_x <= opts.x_tol && spread_f <= opts.f_tol) {
            let (x, fval) = simplex.swap_remove(0);
            return Outcome { x, f: fval, evals };
        }

        // centroid of all but the worst vertex
        let mut centroid = vec![0.0; n];
        for v in &simplex[..n] {
            for i in 0..n {
                centroid[i] += v.0[i];
            }
        }
        for c in &mut centroid {
            *c /= n as f64;
        }

        let worst = simplex[n].clone();
        let reflected: Vec<f64> = (0..n)
            .map(|i| centroid[i] + ALPHA * (centroid[i] - worst.0[i]))
            .collect();
        let f_ref = eval(&reflected, &mut evals);

        if f_ref < simplex[0].1 {
            let expanded: Vec<f64> = (0..n)
                .map(|i| centroid[i] + GAMMA * (reflected[i] - centroid[i]))
                .collect();
            let f_exp = eval(&expanded, &mut evals);
            simplex[n] = if f_exp < f_ref {
                (expanded, f_exp)
            } else {
                (reflected, f_ref)
            };
            continue;
        }
        if f_ref < simplex[n - 1].1 {
            simplex[n] = (reflected, f_ref);
            continue;
        }

        let contracted: Vec<f64> = if f_ref < worst.1 {
            // outside contraction
            (0..n)
                .map(|i| centroid[i] + RHO * (reflected[i] - centroid[i]))
                .collect()
        } else {
            // inside contraction
            (0..n)
                .map(|i| centroid[i] - RHO * (centroid[i] - worst.0[i]))
                .collect()
        };
        let f_con = eval(&contracted, &mut evals);
        if f_con < worst.1.min(f_ref) {
            simplex[n] = (contracted, f_con);
            continue;
        }

        // shrink towards the best vertex
        let best = simplex[0].0.clone();
        for v in &mut simplex[1..] {
            for i in 0..n {
                v.0[i] = best[i] + SIGMA * (v.0[i] - best[i]);
            }
            v.1 = eval(&v.0.clone(), &mut evals);
        }
    }
}
