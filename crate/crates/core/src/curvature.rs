//! Ricci spectral summary consumed by every eigenvalue bound.
//!
//! A [`RicciProfile`] stores already-reduced quantities: the dimension, the
//! constant scalar curvature, the global minimum of the smallest Ricci
//! eigenvalue and the global minimum of the squared Ricci norm. The two minima
//! may be attained at different points of the manifold.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Relative tolerance for closed-form (catalog) inputs.
pub const EXACT_TOL: f64 = 1e-12;
/// Relative tolerance for inputs derived from numerical integration.
pub const NUMERICAL_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProfileError {
    #[error("dimension must be at least 2, got {0}")]
    Dimension(i64),
    #[error("inconsistent profile: {0}")]
    Inconsistent(String),
}

/// Which consistency tolerance applies to a profile's inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Provenance {
    /// Closed-form values, checked to [`EXACT_TOL`].
    #[default]
    Exact,
    /// ODE-derived values, checked to [`NUMERICAL_TOL`].
    Numerical,
}

impl Provenance {
    pub fn tolerance(self) -> f64 {
        match self {
            Provenance::Exact => EXACT_TOL,
            Provenance::Numerical => NUMERICAL_TOL,
        }
    }
}

/// Validated curvature summary of a manifold with harmonic curvature tensor.
///
/// The JSON field names are part of the command-line contract.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawProfile", into = "RawProfile")]
pub struct RicciProfile {
    n: usize,
    scalar: f64,
    kappa0: f64,
    ric_norm_sq_min: f64,
    eigenvalues: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProfile {
    n: i64,
    scalar: f64,
    kappa0: f64,
    ric_norm_sq_min: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eigenvalues: Option<Vec<f64>>,
}

impl TryFrom<RawProfile> for RicciProfile {
    type Error = ProfileError;

    fn try_from(raw: RawProfile) -> Result<Self, Self::Error> {
        make_profile(raw.n, raw.scalar, raw.kappa0, raw.ric_norm_sq_min, raw.eigenvalues)
    }
}

impl From<RicciProfile> for RawProfile {
    fn from(p: RicciProfile) -> Self {
        RawProfile {
            n: p.n as i64,
            scalar: p.scalar,
            kappa0: p.kappa0,
            ric_norm_sq_min: p.ric_norm_sq_min,
            eigenvalues: p.eigenvalues,
        }
    }
}

/// `|Ric - R/n|_0^2`, the minimum of the squared traceless Ricci norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracelessData {
    pub traceless_norm_sq_min: f64,
}

/// Builds a profile from closed-form inputs (tolerance [`EXACT_TOL`]).
pub fn make_profile(
    n: i64,
    scalar: f64,
    kappa0: f64,
    ric_norm_sq_min: f64,
    eigenvalues: Option<Vec<f64>>,
) -> Result<RicciProfile, ProfileError> {
    RicciProfile::with_provenance(n, scalar, kappa0, ric_norm_sq_min, eigenvalues, Provenance::Exact)
}

/// `true` when `lhs <= rhs` up to a tolerance relative to the operands' scale.
fn le_tol(lhs: f64, rhs: f64, tol: f64) -> bool {
    lhs <= rhs + tol * lhs.abs().max(rhs.abs()).max(1.0)
}

fn close_tol(lhs: f64, rhs: f64, tol: f64) -> bool {
    (lhs - rhs).abs() <= tol * lhs.abs().max(rhs.abs()).max(1.0)
}

impl RicciProfile {
    pub fn with_provenance(
        n: i64,
        scalar: f64,
        kappa0: f64,
        ric_norm_sq_min: f64,
        eigenvalues: Option<Vec<f64>>,
        provenance: Provenance,
    ) -> Result<Self, ProfileError> {
        if n < 2 {
            return Err(ProfileError::Dimension(n));
        }
        let tol = provenance.tolerance();
        let nf = n as f64;
        for (name, v) in [("scalar", scalar), ("kappa0", kappa0), ("ric_norm_sq_min", ric_norm_sq_min)] {
            if !v.is_finite() {
                return Err(ProfileError::Inconsistent(format!("{name} is not finite")));
            }
        }
        if ric_norm_sq_min < 0.0 {
            return Err(ProfileError::Inconsistent(format!(
                "ric_norm_sq_min = {ric_norm_sq_min} is negative"
            )));
        }
        if !le_tol(scalar * scalar / nf, ric_norm_sq_min, tol) {
            return Err(ProfileError::Inconsistent(format!(
                "ric_norm_sq_min >= scalar^2/n violated: {ric_norm_sq_min} < {}",
                scalar * scalar / nf
            )));
        }
        if !le_tol(kappa0, scalar / nf, tol) {
            return Err(ProfileError::Inconsistent(format!(
                "kappa0 <= scalar/n violated: {kappa0} > {}",
                scalar / nf
            )));
        }
        let eigenvalues = match eigenvalues {
            None => None,
            Some(mut ev) => {
                if ev.len() != n as usize {
                    return Err(ProfileError::Inconsistent(format!(
                        "eigenvalue list has {} entries, expected n = {n}",
                        ev.len()
                    )));
                }
                if ev.iter().any(|v| !v.is_finite()) {
                    return Err(ProfileError::Inconsistent("eigenvalues must be finite".into()));
                }
                ev.sort_by(f64::total_cmp);
                let sum: f64 = ev.iter().sum();
                let sum_sq: f64 = ev.iter().map(|k| k * k).sum();
                if !close_tol(sum, scalar, tol) {
                    return Err(ProfileError::Inconsistent(format!(
                        "sum(eigenvalues) = scalar violated: {sum} != {scalar}"
                    )));
                }
                if !close_tol(ev[0], kappa0, tol) {
                    return Err(ProfileError::Inconsistent(format!(
                        "min(eigenvalues) = kappa0 violated: {} != {kappa0}",
                        ev[0]
                    )));
                }
                if !close_tol(sum_sq, ric_norm_sq_min, tol) {
                    return Err(ProfileError::Inconsistent(format!(
                        "sum(eigenvalues^2) = ric_norm_sq_min violated: {sum_sq} != {ric_norm_sq_min}"
                    )));
                }
                Some(ev)
            }
        };
        Ok(RicciProfile {
            n: n as usize,
            scalar,
            kappa0,
            ric_norm_sq_min,
            eigenvalues,
        })
    }

    /// Profile of a manifold with parallel Ricci tensor and the given constant spectrum.
    pub fn from_eigenvalues(eigenvalues: Vec<f64>) -> Result<Self, ProfileError> {
        let n = eigenvalues.len() as i64;
        if n < 2 {
            return Err(ProfileError::Dimension(n));
        }
        let scalar = eigenvalues.iter().sum();
        let kappa0 = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        let norm = eigenvalues.iter().map(|k| k * k).sum();
        make_profile(n, scalar, kappa0, norm, Some(eigenvalues))
    }

    /// Einstein profile: all Ricci eigenvalues equal `scalar / n`.
    pub fn einstein(n: i64, scalar: f64) -> Result<Self, ProfileError> {
        if n < 2 {
            return Err(ProfileError::Dimension(n));
        }
        Self::from_eigenvalues(vec![scalar / n as f64; n as usize])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scalar(&self) -> f64 {
        self.scalar
    }

    pub fn kappa0(&self) -> f64 {
        self.kappa0
    }

    pub fn ric_norm_sq_min(&self) -> f64 {
        self.ric_norm_sq_min
    }

    pub fn eigenvalues(&self) -> Option<&[f64]> {
        self.eigenvalues.as_deref()
    }

    pub fn traceless(&self) -> TracelessData {
        traceless(self)
    }
}

/// Minimum of `|Ric - R/n|^2`. Since `R` is constant it equals
/// `|Ric|_0^2 - R^2/n`; values within `1e-12` of zero are clamped.
pub fn traceless(profile: &RicciProfile) -> TracelessData {
    let raw = profile.ric_norm_sq_min - profile.scalar * profile.scalar / profile.n as f64;
    let scale = profile.ric_norm_sq_min.abs().max(1.0);
    let value = if raw.abs() <= EXACT_TOL * scale { 0.0 } else { raw.max(0.0) };
    TracelessData {
        traceless_norm_sq_min: value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn torus_times_sphere_profile() {
        let p = make_profile(4, 2.0, 0.0, 2.0, Some(vec![1.0, 0.0, 1.0, 0.0])).unwrap();
        assert_eq!(p.eigenvalues().unwrap(), &[0.0, 0.0, 1.0, 1.0]);
        assert_eq!(traceless(&p).traceless_norm_sq_min, 1.0);
    }

    #[test]
    fn einstein_has_zero_traceless_part() {
        for (n, r) in [(2, 2.0), (4, 12.0), (7, 3.3), (5, -1.7)] {
            let nf = n as f64;
            let p = make_profile(n, r, r / nf, r * r / nf, None).unwrap();
            assert_eq!(traceless(&p).traceless_norm_sq_min, 0.0);
        }
    }

    #[test]
    fn cauchy_schwarz_violation_is_rejected() {
        let err = make_profile(4, 2.0, 1.0, 0.5, None).unwrap_err();
        match err {
            ProfileError::Inconsistent(msg) => assert!(msg.contains("scalar^2/n"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kappa_above_mean_is_rejected() {
        let err = make_profile(4, 2.0, 0.6, 2.0, None).unwrap_err();
        assert!(matches!(err, ProfileError::Inconsistent(ref m) if m.contains("kappa0")));
    }

    #[test]
    fn dimension_below_two() {
        assert_eq!(make_profile(1, 0.0, 0.0, 0.0, None), Err(ProfileError::Dimension(1)));
    }

    #[test]
    fn eigenvalue_list_mismatch() {
        assert!(make_profile(4, 2.0, 0.0, 2.0, Some(vec![0.0, 1.0, 1.0])).is_err());
        // sum is right, sum of squares is not
        assert!(make_profile(4, 2.0, 0.0, 2.5, Some(vec![0.0, 0.0, 1.0, 1.0])).is_err());
    }

    #[test]
    fn sphere_times_hyperbolic_traceless() {
        for r in [0.3, 0.7, 1.0, 1.9] {
            let inv = 1.0 / (r * r);
            let p = RicciProfile::from_eigenvalues(vec![-1.0, -1.0, inv, inv]).unwrap();
            let expected = (1.0 + inv) * (1.0 + inv);
            let got = traceless(&p).traceless_norm_sq_min;
            assert!((got - expected).abs() <= 1e-12 * expected, "{got} vs {expected}");
        }
    }

    #[test]
    fn numerical_provenance_is_looser() {
        let r = RicciProfile::with_provenance(4, 2.0, 0.5 + 1e-8, 1.0, None, Provenance::Exact);
        assert!(r.is_err());
        let r = RicciProfile::with_provenance(4, 2.0, 0.5 + 1e-8, 1.0, None, Provenance::Numerical);
        assert!(r.is_ok());
    }

    #[test]
    fn json_field_names() {
        let p: RicciProfile = serde_json::from_str(
            r#"{"n": 4, "scalar": 2.0, "kappa0": 0.0, "ric_norm_sq_min": 2.0, "eigenvalues": [0,0,1,1]}"#,
        )
        .unwrap();
        assert_eq!(p.n(), 4);
        let back = serde_json::to_value(&p).unwrap();
        assert_eq!(back["ric_norm_sq_min"], 2.0);
        let bad = serde_json::from_str::<RicciProfile>(
            r#"{"n": 4, "scalar": 2.0, "kappa0": 1.0, "ric_norm_sq_min": 0.5}"#,
        );
        assert!(bad.is_err());
    }

    fn eigen_lists() -> impl Strategy<Value = Vec<f64>> {
        (2usize..10).prop_flat_map(|n| prop::collection::vec(-20.0f64..20.0, n))
    }

    proptest! {
        #[test]
        fn round_trip_from_eigenvalues(ev in eigen_lists()) {
            let p = RicciProfile::from_eigenvalues(ev.clone()).unwrap();
            let sum: f64 = ev.iter().sum();
            let sq: f64 = ev.iter().map(|k| k * k).sum();
            let min = ev.iter().copied().fold(f64::INFINITY, f64::min);
            prop_assert_eq!(p.scalar(), sum);
            prop_assert_eq!(p.ric_norm_sq_min(), sq);
            prop_assert_eq!(p.kappa0(), min);
            prop_assert!(traceless(&p).traceless_norm_sq_min >= 0.0);
        }

        #[test]
        fn perturbations_are_rejected(ev in eigen_lists(), which in 0usize..3, sign in prop::bool::ANY) {
            let p = RicciProfile::from_eigenvalues(ev.clone()).unwrap();
            let scale = p.scalar().abs().max(p.kappa0().abs()).max(p.ric_norm_sq_min()).max(1.0);
            let delta = if sign { 1e-6 * scale } else { -1e-6 * scale };
            let (mut s, mut k, mut q) = (p.scalar(), p.kappa0(), p.ric_norm_sq_min());
            match which {
                0 => s += delta,
                1 => k += delta,
                _ => q += delta,
            }
            let res = make_profile(ev.len() as i64, s, k, q, Some(ev));
            prop_assert!(matches!(res, Err(ProfileError::Inconsistent(_))));
        }
    }
}
