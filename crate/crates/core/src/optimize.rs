//! Derivative-free 1D and 2D minimizers.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search on `[lo, hi]` driven by a comparator:
/// `left_lower(c, d)` must return true when `f(c) < f(d)`.
///
/// Taking a comparator rather than `f` lets callers compare values
/// through a cancellation-free difference formula, which recovers full
/// precision in the argmin where raw `f(c) < f(d)` stalls near
/// `sqrt(eps)`.
pub fn golden_section_by(
    mut lo: f64,
    mut hi: f64,
    xtol: f64,
    max_iter: usize,
    left_lower: impl Fn(f64, f64) -> bool,
) -> f64 {
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    for _ in 0..max_iter {
        if hi - lo <= xtol * (1.0 + lo.abs().max(hi.abs())) {
            break;
        }
        if left_lower(c, d) {
            hi = d;
            d = c;
            c = hi - INV_PHI * (hi - lo);
        } else {
            lo = c;
            c = d;
            d = lo + INV_PHI * (hi - lo);
        }
    }
    0.5 * (lo + hi)
}

pub fn golden_section(lo: f64, hi: f64, xtol: f64, max_iter: usize, f: impl Fn(f64) -> f64) -> f64 {
    golden_section_by(lo, hi, xtol, max_iter, |c, d| f(c) < f(d))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NmResult<const N: usize> {
    pub x: [f64; N],
    pub fx: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Nelder-Mead with standard coefficients. Stops when the spread of
/// simplex values drops below `ftol * (1 + |f_best|)` and the simplex
/// diameter below `xtol`, or after `max_evals` evaluations.
pub fn nelder_mead<const N: usize>(
    f: &impl Fn(&[f64; N]) -> f64,
    x0: [f64; N],
    step: [f64; N],
    ftol: f64,
    xtol: f64,
    max_evals: usize,
) -> NmResult<N> {
    let evals = std::cell::Cell::new(0usize);
    let eval = |x: &[f64; N]| {
        evals.set(evals.get() + 1);
        f(x)
    };
    let mut simplex: Vec<([f64; N], f64)> = Vec::with_capacity(N + 1);
    simplex.push((x0, eval(&x0)));
    for i in 0..N {
        let mut x = x0;
        x[i] += step[i];
        let fx = eval(&x);
        simplex.push((x, fx));
    }

    let affine = |a: &[f64; N], b: &[f64; N], t: f64| -> [f64; N] {
        std::array::from_fn(|k| a[k] + t * (b[k] - a[k]))
    };

    let mut converged = false;
    while evals.get() < max_evals {
        simplex.sort_by(|p, q| p.1.total_cmp(&q.1));
        let best = simplex[0].1;
        let worst = simplex[N].1;
        let diam = simplex[1..]
            .iter()
            .map(|(x, _)| {
                x.iter()
                    .zip(simplex[0].0.iter())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if (worst - best).abs() <= ftol * (1.0 + best.abs()) && diam <= xtol {
            converged = true;
            break;
        }

        let centroid: [f64; N] =
            std::array::from_fn(|k| simplex[..N].iter().map(|(x, _)| x[k]).sum::<f64>() / N as f64);
        let xw = simplex[N].0;
        let xr = affine(&centroid, &xw, -1.0);
        let fr = eval(&xr);
        if fr < simplex[0].1 {
            let xe = affine(&centroid, &xw, -2.0);
            let fe = eval(&xe);
            simplex[N] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[N - 1].1 {
            simplex[N] = (xr, fr);
        } else {
            let (xc, fc) = if fr < worst {
                let xc = affine(&centroid, &xr, 0.5);
                (xc, eval(&xc))
            } else {
                let xc = affine(&centroid, &xw, 0.5);
                (xc, eval(&xc))
            };
            if fc < worst.min(fr) {
                simplex[N] = (xc, fc);
            } else {
                let x_best = simplex[0].0;
                for item in simplex.iter_mut().skip(1) {
                    let xs = affine(&x_best, &item.0, 0.5);
                    *item = (xs, eval(&xs));
                }
            }
        }
    }
    simplex.sort_by(|p, q| p.1.total_cmp(&q.1));
    NmResult {
        x: simplex[0].0,
        fx: simplex[0].1,
        evaluations: evals.get(),
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn golden_section_quadratic() {
        let x = golden_section(-3.0, 5.0, 1e-12, 200, |x| (x - 1.25).powi(2));
        assert_relative_eq!(x, 1.25, epsilon = 1e-7);
    }

    #[test]
    fn nelder_mead_rosenbrock() {
        let f = |p: &[f64; 2]| (1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2);
        let r = nelder_mead(&f, [-1.2, 1.0], [0.1, 0.1], 1e-16, 1e-10, 20_000);
        assert!(r.converged);
        assert_relative_eq!(r.x[0], 1.0, epsilon = 1e-6);
        assert_relative_eq!(r.x[1], 1.0, epsilon = 1e-6);
    }
}
