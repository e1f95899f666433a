//! Periodic solutions of the warp equation `F'' - F^(1-4/n) = -F` and the
//! Ricci curvature of the warped product `S¹ ×_{f²} N⁴` they define
//! (`F = f^(n/2)`, here with `n = 5`).
//!
//! The equation is conservative with energy
//! `E = F'²/2 + F²/2 - n/(2n-4) F^(2-4/n)`. Starting at a turning point
//! (`F'(0) = 0`) the orbit is symmetric, so the period is twice the first
//! positive zero of `F'`.

use thiserror::Error;

use crate::ode::{dopri5_step, Dopri5, OdeError};
use crate::optimize::golden_section_max;

/// Samples over one closed period, endpoints included.
pub const SAMPLES: usize = 2049;
/// Give up looking for the half-period turning point beyond this time.
pub const MAX_SEARCH_TIME: f64 = 100.0;
/// Width to which the turning point is bisected.
pub const EVENT_TOL: f64 = 1e-12;
/// Width to which curvature minima are refined.
pub const EXTREMUM_XTOL: f64 = 1e-8;

/// Scalar curvature of the warped product `S¹ ×_{f²} N⁴`.
pub const WARP5_SCALAR: f64 = 16.0 / 5.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WarpError {
    #[error("warp equation needs n >= 5, got {0}")]
    Dimension(i64),
    #[error("curvature track is only available for n = 5, got {0}")]
    CurvatureDimension(usize),
    #[error("initial value F(0) = {0} must be positive and finite")]
    InvalidInitial(f64),
    #[error("tolerance {0} must be positive")]
    InvalidTolerance(f64),
    #[error("trajectory reaches F <= 0 near tau = {0}")]
    NonPositiveF(f64),
    #[error("no turning point of F' found for tau <= {MAX_SEARCH_TIME}")]
    NoPeriod,
    #[error(transparent)]
    Integration(#[from] OdeError),
}

fn exponent(n: usize) -> f64 {
    1.0 - 4.0 / n as f64
}

fn rhs(n: usize) -> impl Fn(&[f64; 2]) -> [f64; 2] {
    let e = exponent(n);
    move |y: &[f64; 2]| [y[1], y[0].powf(e) - y[0]]
}

/// `V(F) = F²/2 - n/(2n-4) F^(2-4/n)`.
pub fn warp_potential(n: usize, f: f64) -> f64 {
    let nf = n as f64;
    0.5 * f * f - nf / (2.0 * nf - 4.0) * f.powf(2.0 - 4.0 / nf)
}

pub fn warp_energy(n: usize, f: f64, fp: f64) -> f64 {
    0.5 * fp * fp + warp_potential(n, f)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WarpSample {
    pub tau: f64,
    pub f: f64,
    pub fp: f64,
}

/// One period of a positive periodic warp solution, sampled uniformly.
#[derive(Debug, Clone, PartialEq)]
pub struct WarpTrajectory {
    pub n: usize,
    /// Minimum of `F` along the orbit, where the integration starts.
    pub f0: f64,
    pub samples: Vec<WarpSample>,
    pub period: f64,
    /// Energy at `tau = 0`.
    pub energy: f64,
    /// `max |E(sample) - E(0)| / max(1, |E(0)|)`.
    pub max_energy_drift: f64,
    /// The orbit is the equilibrium `F = 1`; the period is the linearized one.
    pub degenerate: bool,
}

impl WarpTrajectory {
    pub fn f_max(&self) -> f64 {
        self.samples.iter().map(|s| s.f).fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Re-bases an orbit starting at its maximum onto its minimum.
fn orbit_minimum(n: usize, f_start: f64) -> Result<f64, WarpError> {
    let level = warp_potential(n, f_start);
    if level >= 0.0 {
        // V(0) = 0, so a non-negative level set reaches F = 0.
        return Err(WarpError::NonPositiveF(0.0));
    }
    // V decreases on (0, 1).
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-16 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if warp_potential(n, mid) > level {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Integrates the warp equation from `F(0) = f0`, `F'(0) = 0` over one period.
///
/// For `f0 > 1` the orbit is re-based at its minimum, so `F(0)` of the
/// returned trajectory is the minimum of the same orbit.
pub fn integrate_warp(n: i64, f0: f64, tol: f64) -> Result<WarpTrajectory, WarpError> {
    if n < 5 {
        return Err(WarpError::Dimension(n));
    }
    if !(f0 > 0.0 && f0.is_finite()) {
        return Err(WarpError::InvalidInitial(f0));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(WarpError::InvalidTolerance(tol));
    }
    let n = n as usize;
    let f0 = if f0 > 1.0 { orbit_minimum(n, f0)? } else { f0 };
    let energy = warp_energy(n, f0, 0.0);

    if (f0 - 1.0).abs() <= 1e-9 {
        // Equilibrium F'' = F^(1-4/n) - F = 0; linearization F'' = -(4/n)(F - 1).
        let period = std::f64::consts::PI * (n as f64).sqrt();
        let samples = (0..SAMPLES)
            .map(|i| WarpSample {
                tau: period * i as f64 / (SAMPLES - 1) as f64,
                f: f0,
                fp: 0.0,
            })
            .collect();
        return Ok(WarpTrajectory {
            n,
            f0,
            samples,
            period,
            energy,
            max_energy_drift: 0.0,
            degenerate: true,
        });
    }

    let rhs = rhs(n);
    let positive = |y: &[f64; 2]| y[0] > 0.0;
    let map_err = |e: OdeError, t: f64| match e {
        OdeError::StepUnderflow { .. } => WarpError::NonPositiveF(t),
    };

    // Half period: first tau > 0 where F' turns from positive to non-positive.
    let mut solver = Dopri5::new(tol);
    let (mut t, mut y, mut h) = (0.0, [f0, 0.0], 1e-3);
    let half = loop {
        if t >= MAX_SEARCH_TIME {
            return Err(WarpError::NoPeriod);
        }
        let acc = solver
            .advance(&rhs, &positive, t, &y, h, MAX_SEARCH_TIME)
            .map_err(|e| map_err(e, t))?;
        if y[1] > 0.0 && acc.y[1] <= 0.0 {
            let (mut lo, mut hi) = (0.0, acc.h_used);
            while hi - lo > EVENT_TOL {
                let mid = 0.5 * (lo + hi);
                if dopri5_step(&rhs, &y, mid).0[1] > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            break t + 0.5 * (lo + hi);
        }
        t = acc.t;
        y = acc.y;
        h = acc.h_next;
    };
    let period = 2.0 * half;

    // Full period on a uniform grid; steps never cross a grid point.
    let mut solver = Dopri5::new(tol);
    let mut samples = Vec::with_capacity(SAMPLES);
    samples.push(WarpSample { tau: 0.0, f: f0, fp: 0.0 });
    let (mut t, mut y, mut h) = (0.0, [f0, 0.0], 1e-3);
    let mut max_drift: f64 = 0.0;
    let scale = energy.abs().max(1.0);
    for i in 1..SAMPLES {
        let target = period * i as f64 / (SAMPLES - 1) as f64;
        while t < target {
            let acc = solver
                .advance(&rhs, &positive, t, &y, h, target)
                .map_err(|e| map_err(e, t))?;
            // a grid-clipped step says nothing about the admissible size
            h = if acc.t == target { h.max(acc.h_next) } else { acc.h_next };
            t = acc.t;
            y = acc.y;
        }
        t = target;
        max_drift = max_drift.max((warp_energy(n, y[0], y[1]) - energy).abs() / scale);
        samples.push(WarpSample { tau: target, f: y[0], fp: y[1] });
    }

    Ok(WarpTrajectory {
        n,
        f0,
        samples,
        period,
        energy,
        max_energy_drift: max_drift,
        degenerate: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureSample {
    pub tau: f64,
    pub kappa1: f64,
    pub kappa2: f64,
}

/// Ricci eigenvalues of `S¹ ×_{f²} N⁴` along one period. `κ₁` has
/// multiplicity one, `κ₂` multiplicity four.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureTrack {
    pub samples: Vec<CurvatureSample>,
    pub period: f64,
    states: Vec<[f64; 2]>,
}

/// `κ₁ = 24/25 (F'/F)² + 8/5 (1 - F^(-4/5))`, `κ₂ = (16/5 - κ₁)/4`.
pub fn ricci_eigenvalues(f: f64, fp: f64) -> (f64, f64) {
    let q = fp / f;
    let k1 = 24.0 / 25.0 * q * q + 8.0 / 5.0 * (1.0 - f.powf(-0.8));
    (k1, 0.25 * (WARP5_SCALAR - k1))
}

pub fn curvature_track(traj: &WarpTrajectory) -> Result<CurvatureTrack, WarpError> {
    if traj.n != 5 {
        return Err(WarpError::CurvatureDimension(traj.n));
    }
    let samples = traj
        .samples
        .iter()
        .map(|s| {
            let (kappa1, kappa2) = ricci_eigenvalues(s.f, s.fp);
            CurvatureSample { tau: s.tau, kappa1, kappa2 }
        })
        .collect();
    Ok(CurvatureTrack {
        samples,
        period: traj.period,
        states: traj.samples.iter().map(|s| [s.f, s.fp]).collect(),
    })
}

impl CurvatureTrack {
    /// `(F, F')` at any `tau` in the period, by cubic Hermite interpolation
    /// with exact derivatives from the equation.
    pub fn state_at(&self, tau: f64) -> [f64; 2] {
        let rhs = rhs(5);
        let last = self.samples.len() - 1;
        let tau = tau.clamp(0.0, self.period);
        let dt = self.period / last as f64;
        if dt == 0.0 {
            return self.states[0];
        }
        let i = ((tau / dt).floor() as usize).min(last - 1);
        let (t0, t1) = (self.samples[i].tau, self.samples[i + 1].tau);
        let (y0, y1) = (self.states[i], self.states[i + 1]);
        let (d0, d1) = (rhs(&y0), rhs(&y1));
        let h = t1 - t0;
        let s = (tau - t0) / h;
        let h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        let h10 = s * (1.0 - s) * (1.0 - s);
        let h01 = s * s * (3.0 - 2.0 * s);
        let h11 = s * s * (s - 1.0);
        let mut out = [0.0; 2];
        for k in 0..2 {
            out[k] = h00 * y0[k] + h10 * h * d0[k] + h01 * y1[k] + h11 * h * d1[k];
        }
        out
    }

    pub fn eigenvalues_at(&self, tau: f64) -> (f64, f64) {
        let [f, fp] = self.state_at(tau);
        ricci_eigenvalues(f, fp)
    }
}

/// Global minima of the smallest Ricci eigenvalue and the squared Ricci norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalData {
    pub kappa0: f64,
    pub ric_norm_sq_min: f64,
    pub tau_kappa0: f64,
    pub tau_ric_min: f64,
}

fn ric_norm_sq(k1: f64, k2: f64) -> f64 {
    k1 * k1 + 4.0 * k2 * k2
}

/// Minimizes `g` over the track: best sample, then golden section on the
/// spline over the two neighbouring intervals.
fn refine_min(track: &CurvatureTrack, g: impl Fn(f64, f64) -> f64) -> (f64, f64) {
    let (best_i, best_v) = track
        .samples
        .iter()
        .enumerate()
        .map(|(i, s)| (i, g(s.kappa1, s.kappa2)))
        .fold((0, f64::INFINITY), |acc, c| if c.1 < acc.1 { c } else { acc });
    let last = track.samples.len() - 1;
    let lo = track.samples[best_i.saturating_sub(1)].tau;
    let hi = track.samples[(best_i + 1).min(last)].tau;
    if hi <= lo {
        return (track.samples[best_i].tau, best_v);
    }
    let (tau, neg) = golden_section_max(
        |tau| {
            let (k1, k2) = track.eigenvalues_at(tau);
            -g(k1, k2)
        },
        lo,
        hi,
        EXTREMUM_XTOL,
    );
    if -neg < best_v {
        (tau, -neg)
    } else {
        (track.samples[best_i].tau, best_v)
    }
}

pub fn extremal_data(track: &CurvatureTrack) -> ExtremalData {
    let (tau_kappa0, kappa0) = refine_min(track, |k1, k2| k1.min(k2));
    debug_assert!(
        track.samples.iter().all(|s| s.kappa2 >= kappa0 - 1e-12),
        "the global minimum is expected on the kappa1 branch"
    );
    let (tau_ric_min, ric_norm_sq_min) = refine_min(track, ric_norm_sq);
    // tau = period is tau = 0 on the closed orbit
    let wrap = |tau: f64| if track.period - tau <= 100.0 * EXTREMUM_XTOL { 0.0 } else { tau };
    let (tau_kappa0, tau_ric_min) = (wrap(tau_kappa0), wrap(tau_ric_min));
    ExtremalData {
        kappa0,
        ric_norm_sq_min,
        tau_kappa0,
        tau_ric_min,
    }
}
