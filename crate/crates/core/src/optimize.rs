//! Deterministic one-dimensional search on a compact interval.

const INV_PHI: f64 = 0.618_033_988_749_894_9; // (sqrt(5) - 1) / 2

/// Golden-section search for a maximum of a unimodal `f` on `[lo, hi]`.
/// Stops once the bracket is narrower than `xtol`. Returns `(x, f(x))`.
pub fn golden_section_max<F>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    // Each iteration shrinks the bracket by 0.618; 200 covers any f64 interval.
    for _ in 0..200 {
        if hi - lo <= xtol {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    let mid = 0.5 * (lo + hi);
    let fm = f(mid);
    // Keep the best point actually evaluated.
    [(x1, f1), (x2, f2), (mid, fm)]
        .into_iter()
        .fold((mid, fm), |best, cand| if cand.1 > best.1 { cand } else { best })
}

/// Maximizes `f` on `[lo, hi]`: evaluates a uniform grid of `grid` points,
/// then refines the bracket around the best grid point by golden section.
pub fn grid_then_golden_max<F>(f: F, lo: f64, hi: f64, grid: usize, xtol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    assert!(grid >= 2 && hi > lo);
    let step = (hi - lo) / (grid - 1) as f64;
    let (mut best_i, mut best_v) = (0usize, f64::NEG_INFINITY);
    for i in 0..grid {
        let x = if i == grid - 1 { hi } else { lo + step * i as f64 };
        let v = f(x);
        if v > best_v {
            best_i = i;
            best_v = v;
        }
    }
    let best_x = if best_i == grid - 1 { hi } else { lo + step * best_i as f64 };
    let a = if best_i == 0 { lo } else { lo + step * (best_i - 1) as f64 };
    let b = if best_i + 1 >= grid - 1 { hi } else { lo + step * (best_i + 1) as f64 };
    let (x, v) = golden_section_max(&f, a, b, xtol);
    if v > best_v {
        (x, v)
    } else {
        (best_x, best_v)
    }
}
