//! Adaptive Dormand–Prince 5(4) integrator with PI step-size control for
//! small fixed-size autonomous systems.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OdeError {
    #[error("step size underflow at t = {t} (h = {h})")]
    StepUnderflow { t: f64, h: f64 },
}

// Butcher tableau; the node offsets are not needed for autonomous systems.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// Fifth-order minus embedded fourth-order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (c, k) in terms {
            acc += c * k[i];
        }
        *o += h * acc;
    }
    out
}

/// One Dormand–Prince step from `y` with size `h`. Returns the fifth-order
/// solution and the local error estimate.
pub fn dopri5_step<F, const N: usize>(rhs: &F, y: &[f64; N], h: f64) -> ([f64; N], [f64; N])
where
    F: Fn(&[f64; N]) -> [f64; N],
{
    let k1 = rhs(y);
    let k2 = rhs(&axpy(y, h, &[(A21, &k1)]));
    let k3 = rhs(&axpy(y, h, &[(A31, &k1), (A32, &k2)]));
    let k4 = rhs(&axpy(y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
    let k5 = rhs(&axpy(y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
    let k6 = rhs(&axpy(y, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]));
    let y5 = axpy(y, h, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
    let k7 = rhs(&y5);
    let zero = [0.0; N];
    let err = axpy(&zero, h, &[(E1, &k1), (E3, &k3), (E4, &k4), (E5, &k5), (E6, &k6), (E7, &k7)]);
    (y5, err)
}

/// Adaptive driver. `rtol`/`atol` bound the local error per step.
#[derive(Debug, Clone)]
pub struct Dopri5 {
    pub rtol: f64,
    pub atol: f64,
    pub h_min: f64,
    pub h_max: f64,
    err_prev: f64,
}

/// An accepted step.
#[derive(Debug, Clone, Copy)]
pub struct Accepted<const N: usize> {
    pub t: f64,
    pub y: [f64; N],
    pub h_used: f64,
    pub h_next: f64,
}

impl Dopri5 {
    pub fn new(tol: f64) -> Self {
        Dopri5 {
            rtol: tol,
            atol: tol,
            h_min: 1e-14,
            h_max: 0.1,
            err_prev: 1e-4,
        }
    }

    fn error_norm<const N: usize>(&self, y: &[f64; N], y_new: &[f64; N], err: &[f64; N]) -> f64 {
        let sum: f64 = (0..N)
            .map(|i| {
                let sc = self.atol + self.rtol * y[i].abs().max(y_new[i].abs());
                (err[i] / sc).powi(2)
            })
            .sum();
        (sum / N as f64).sqrt()
    }

    /// Advances from `(t, y)` by one accepted step of size at most `h_try`,
    /// never passing `t_stop`. Steps whose result fails `admissible` are
    /// rejected and retried with a smaller size.
    pub fn advance<F, G, const N: usize>(
        &mut self,
        rhs: &F,
        admissible: &G,
        t: f64,
        y: &[f64; N],
        h_try: f64,
        t_stop: f64,
    ) -> Result<Accepted<N>, OdeError>
    where
        F: Fn(&[f64; N]) -> [f64; N],
        G: Fn(&[f64; N]) -> bool,
    {
        const SAFETY: f64 = 0.9;
        const ALPHA: f64 = 0.7 / 5.0;
        const BETA: f64 = 0.4 / 5.0;
        let mut h = h_try.min(self.h_max).min(t_stop - t);
        loop {
            if h < self.h_min {
                return Err(OdeError::StepUnderflow { t, h });
            }
            let (y_new, err) = dopri5_step(rhs, y, h);
            if !admissible(&y_new) || y_new.iter().any(|v| !v.is_finite()) {
                h *= 0.25;
                continue;
            }
            let en = self.error_norm(y, &y_new, &err).max(1e-16);
            if en <= 1.0 {
                let factor = (SAFETY * en.powf(-ALPHA) * self.err_prev.powf(BETA)).clamp(0.2, 5.0);
                self.err_prev = en;
                let t_new = if t_stop - (t + h) <= 4.0 * f64::EPSILON * t_stop.abs().max(1.0) {
                    t_stop
                } else {
                    t + h
                };
                return Ok(Accepted {
                    t: t_new,
                    y: y_new,
                    h_used: h,
                    h_next: (h * factor).min(self.h_max),
                });
            }
            h *= (SAFETY * en.powf(-1.0 / 5.0)).clamp(0.1, 0.9);
        }
    }
}
