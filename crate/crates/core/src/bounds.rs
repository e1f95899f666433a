//! Lower bounds for the squared Dirac eigenvalues `λ²` computed from a
//! [`RicciProfile`].
//!
//! Every bound is reported as a [`BoundReport`]. A bound that holds only
//! vacuously (for example Friedrich's estimate when `R <= 0`) is reported as
//! applicable with value `0`; a bound whose hypotheses fail is reported as not
//! applicable and carries a reason instead of a value.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curvature::{traceless, RicciProfile, EXACT_TOL};
use crate::optimize::grid_then_golden_max;

/// Below this value of `A` the closed-form bound degenerates (Einstein limit).
pub const DEGENERATE_A: f64 = 1e-14;
/// Number of grid points for the mini-max parameter scan.
pub const MINIMAX_GRID: usize = 256;
/// Bracket width at which the golden-section refinement stops.
pub const MINIMAX_XTOL: f64 = 1e-10;
/// Upper end of the useful mini-max parameter range.
pub const T_MAX: f64 = 0.5;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("dimension {n} is not twice the complex dimension {complex_dim}")]
    Dimension { n: usize, complex_dim: usize },
    #[error("scalar curvature must be positive, got {0}")]
    ScalarSign(f64),
    #[error("mini-max parameter t = {0} outside [0, 1/2]")]
    ParameterRange(f64),
    #[error("profile is Ricci flat (ric_norm_sq_min = 0)")]
    RicciFlat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Friedrich,
    Kaehler,
    ZeroScalar,
    Theorem31,
    Corollary32,
    #[serde(rename = "minimax_numeric")]
    MiniMaxNumeric,
    Best,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Friedrich => "friedrich",
            Method::Kaehler => "kaehler",
            Method::ZeroScalar => "zero_scalar",
            Method::Theorem31 => "theorem31",
            Method::Corollary32 => "corollary32",
            Method::MiniMaxNumeric => "minimax_numeric",
            Method::Best => "best",
        }
    }

    pub fn from_name(name: &str) -> Option<Method> {
        [
            Method::Friedrich,
            Method::Kaehler,
            Method::ZeroScalar,
            Method::Theorem31,
            Method::Corollary32,
            Method::MiniMaxNumeric,
            Method::Best,
        ]
        .into_iter()
        .find(|m| m.name() == name)
    }
}

/// Optimizer state behind a bound: the mini-max parameter `t`, the rescaled
/// parameter `s = t / λ²` and the value of `f(s) = 2(a + A s) / (1 + 2 b s + c² s²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerDiagnostics {
    pub t_star: f64,
    pub s0: Option<f64>,
    pub f_s0: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub method: Method,
    /// Lower bound for `λ²`; absent when the bound does not apply.
    pub value: Option<f64>,
    pub strict: bool,
    pub applicable: bool,
    pub reason: Option<String>,
    pub optimizer: Option<OptimizerDiagnostics>,
}

impl BoundReport {
    fn holds(method: Method, value: f64, strict: bool) -> Self {
        debug_assert!(value >= 0.0, "{method:?} produced negative bound {value}");
        BoundReport {
            method,
            value: Some(value),
            strict,
            applicable: true,
            reason: None,
            optimizer: None,
        }
    }

    fn not_applicable(method: Method, reason: impl Into<String>) -> Self {
        BoundReport {
            method,
            value: None,
            strict: false,
            applicable: false,
            reason: Some(reason.into()),
            optimizer: None,
        }
    }

    /// Bound value, with inapplicable bounds read as `0`.
    pub fn value_or_zero(&self) -> f64 {
        self.value.unwrap_or(0.0)
    }
}

/// The abbreviations `a`, `b`, `c`, `A` shared by the closed-form bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Shortcuts {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    #[serde(rename = "A")]
    pub cap_a: f64,
}

impl Shortcuts {
    /// `f(s) = 2(a + A s) / (1 + 2 b s + c² s²)`, a lower bound for `λ²` at every `s >= 0`.
    pub fn f(&self, s: f64) -> f64 {
        2.0 * (self.a + self.cap_a * s) / (1.0 + 2.0 * self.b * s + self.c * self.c * s * s)
    }
}

fn nf(profile: &RicciProfile) -> f64 {
    profile.n() as f64
}

/// Strict `lhs > rhs` that does not fire on rounding noise at equality.
fn exceeds(lhs: f64, rhs: f64) -> bool {
    lhs > rhs + EXACT_TOL * lhs.abs().max(rhs.abs()).max(1.0)
}

pub fn shortcuts(profile: &RicciProfile) -> Shortcuts {
    let n = nf(profile);
    let r = profile.scalar();
    let a = n * r / (8.0 * (n - 1.0));
    let b = (n / (n - 1.0) * (r / n - profile.kappa0())).max(0.0);
    let c = (traceless(profile).traceless_norm_sq_min * n / (n - 1.0)).sqrt();
    let cap_a = c * c / 4.0 + 2.0 * (n - 1.0) / n * a * b;
    Shortcuts { a, b, c, cap_a }
}

/// `λ² >= n R / (4(n-1))`, vacuous (0) for `R <= 0`.
pub fn friedrich_bound(profile: &RicciProfile) -> BoundReport {
    let n = nf(profile);
    let r = profile.scalar();
    let value = if r > 0.0 { n * r / (4.0 * (n - 1.0)) } else { 0.0 };
    BoundReport::holds(Method::Friedrich, value, false)
}

/// Kähler baseline for complex dimension `m`: `(m+1)R/(4m)` for odd `m`,
/// `mR/(4(m-1))` for even `m`.
pub fn kaehler_bound(profile: &RicciProfile, complex_dim: usize) -> Result<BoundReport, BoundError> {
    if complex_dim == 0 || profile.n() != 2 * complex_dim {
        return Err(BoundError::Dimension {
            n: profile.n(),
            complex_dim,
        });
    }
    let m = complex_dim as f64;
    let r = profile.scalar();
    let value = if r <= 0.0 {
        0.0
    } else if complex_dim % 2 == 1 {
        (m + 1.0) * r / (4.0 * m)
    } else {
        m * r / (4.0 * (m - 1.0))
    };
    Ok(BoundReport::holds(Method::Kaehler, value, false))
}

/// `|Ric|_0^2 > R κ_0`: no harmonic spinors.
pub fn harmonic_spinor_excluded(profile: &RicciProfile) -> bool {
    exceeds(profile.ric_norm_sq_min(), profile.scalar() * profile.kappa0())
}

/// For `R > 0`: whether the mini-max principle can beat Friedrich's estimate,
/// `|Ric|_0^2 > R (R - κ_0) / (n-1)`.
pub fn improvement_condition(profile: &RicciProfile) -> Result<bool, BoundError> {
    let r = profile.scalar();
    if r <= 0.0 {
        return Err(BoundError::ScalarSign(r));
    }
    Ok(exceeds(
        profile.ric_norm_sq_min(),
        r * (r - profile.kappa0()) / (nf(profile) - 1.0),
    ))
}

/// `|Ric - R/n|_0^2 > (R/n - κ_0) max{R/(n-1), -R}`.
pub fn closed_form_condition(profile: &RicciProfile) -> bool {
    let n = nf(profile);
    let r = profile.scalar();
    let arm = (r / (n - 1.0)).max(-r);
    exceeds(traceless(profile).traceless_norm_sq_min, (r / n - profile.kappa0()) * arm)
}

/// Closed-form optimum of `f(s)` over `s >= 0`:
/// `λ² > A² / (bA - ac² + c sqrt(a²c² + A(A - 2ab)))`.
pub fn theorem31_bound(profile: &RicciProfile) -> BoundReport {
    if !closed_form_condition(profile) {
        return BoundReport::not_applicable(
            Method::Theorem31,
            "|Ric - R/n|_0^2 > (R/n - kappa0) max{R/(n-1), -R} fails",
        );
    }
    let sc = shortcuts(profile);
    let Shortcuts { a, b, c, cap_a } = sc;
    if cap_a < DEGENERATE_A {
        return BoundReport::not_applicable(Method::Theorem31, "A below 1e-14 (Einstein limit)");
    }
    let root = (a * a * c * c + cap_a * (cap_a - 2.0 * a * b)).max(0.0).sqrt();
    let value = cap_a * cap_a / (b * cap_a - a * c * c + c * root);
    let s0 = (cap_a - 2.0 * a * b) / (a * c * c + c * root);
    let f_s0 = sc.f(s0);
    debug_assert!(
        (value - f_s0).abs() <= 1e-9 * value,
        "closed form {value} disagrees with f(s0) = {f_s0}"
    );
    let mut report = BoundReport::holds(Method::Theorem31, value, true);
    report.optimizer = Some(OptimizerDiagnostics {
        t_star: s0 * value,
        s0: Some(s0),
        f_s0: Some(f_s0),
    });
    report
}

/// Rewriting of [`theorem31_bound`] for `R > 0` as a correction to Friedrich's
/// bound: `nR/(4(n-1)) + (A - 2ab)² / (α + sqrt(α² + β))` with
/// `α = ac² + (A - 2ab) b` and `β = (c² - b²)(A - 2ab)²`.
pub fn corollary32_bound(profile: &RicciProfile) -> BoundReport {
    let applies = matches!(improvement_condition(profile), Ok(true));
    if !applies {
        return BoundReport::not_applicable(
            Method::Corollary32,
            "requires R > 0 and |Ric|_0^2 > R (R - kappa0) / (n-1)",
        );
    }
    let Shortcuts { a, b, c, cap_a } = shortcuts(profile);
    let gap = cap_a - 2.0 * a * b;
    let alpha = a * c * c + gap * b;
    let beta = (c * c - b * b) * gap * gap;
    let n = nf(profile);
    let value = n * profile.scalar() / (4.0 * (n - 1.0)) + gap * gap / (alpha + (alpha * alpha + beta).max(0.0).sqrt());
    BoundReport::holds(Method::Corollary32, value, true)
}

/// Bound for vanishing scalar curvature:
/// `λ² > |Ric|_0^2 / (4 (|Ric|_0 sqrt((n-1)/n) + |κ_0|))`.
pub fn zero_scalar_bound(profile: &RicciProfile) -> Result<BoundReport, BoundError> {
    let m = profile.ric_norm_sq_min();
    let r = profile.scalar();
    if r.abs() > EXACT_TOL * m.sqrt().max(1.0) {
        return Ok(BoundReport::not_applicable(
            Method::ZeroScalar,
            format!("scalar curvature {r} is not zero"),
        ));
    }
    if m <= 0.0 {
        return Err(BoundError::RicciFlat);
    }
    let n = nf(profile);
    let value = 0.25 * m / (m.sqrt() * ((n - 1.0) / n).sqrt() + profile.kappa0().abs());
    Ok(BoundReport::holds(Method::ZeroScalar, value, true))
}

/// Larger root of the mini-max quadratic in `x = λ²` at parameter `t`:
///
/// `x² + p x + q >= 0` with
/// `p = -nR/(4(n-1)) + 2t (n/(n-1)) (R/n - κ_0)` and
/// `q = -2t (n/(n-1)) (R/n - κ_0) R/4 + (n/(n-1)) (t² - t/2) |Ric - R/n|_0^2`.
///
/// For `t` in `[0, 1/2]` the coefficient `t² - t/2` is nonpositive, so the
/// maximum over the manifold is attained at the minimum of the traceless norm.
/// The smaller root is discarded: the estimate targets the first eigenvalue
/// from below. A negative discriminant or root gives the vacuous bound 0.
pub fn minimax_bound_at_t(profile: &RicciProfile, t: f64) -> Result<f64, BoundError> {
    if !(0.0..=T_MAX).contains(&t) {
        return Err(BoundError::ParameterRange(t));
    }
    let n = nf(profile);
    let r = profile.scalar();
    let ratio = n / (n - 1.0);
    let gap = (r / n - profile.kappa0()).max(0.0);
    let t0 = traceless(profile).traceless_norm_sq_min;
    let p = -n * r / (4.0 * (n - 1.0)) + 2.0 * t * ratio * gap;
    let q = -2.0 * t * ratio * gap * r / 4.0 + ratio * (t * t - t / 2.0) * t0;
    let disc = p * p - 4.0 * q;
    if disc < 0.0 {
        return Ok(0.0);
    }
    Ok(((-p + disc.sqrt()) / 2.0).max(0.0))
}

/// Maximizes [`minimax_bound_at_t`] over `t ∈ [0, 1/2]` with a 256-point grid
/// followed by golden-section refinement.
pub fn optimize_minimax(profile: &RicciProfile) -> BoundReport {
    let eval = |t: f64| minimax_bound_at_t(profile, t).expect("t stays in [0, 1/2]");
    let (t_star, value) = grid_then_golden_max(eval, 0.0, T_MAX, MINIMAX_GRID, MINIMAX_XTOL);
    let mut report = BoundReport::holds(Method::MiniMaxNumeric, value, false);
    let (s0, f_s0) = if value > 0.0 {
        let s = t_star / value;
        (Some(s), Some(shortcuts(profile).f(s)))
    } else {
        (None, None)
    };
    report.optimizer = Some(OptimizerDiagnostics { t_star, s0, f_s0 });
    report
}

/// Maximum over all applicable bounds together with every candidate report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BestBound {
    pub method: Method,
    pub value: f64,
    pub strict: bool,
    pub reports: Vec<BoundReport>,
}

impl BestBound {
    pub fn report(&self, method: Method) -> Option<&BoundReport> {
        self.reports.iter().find(|r| r.method == method)
    }
}

/// Evaluates Friedrich, Kähler (when `complex_dim` is given), the closed-form
/// bound, the zero-scalar bound and the numeric mini-max, and picks the largest.
/// Ties (within 1e-9 relative) go to the earlier method in that order.
pub fn best_bound(profile: &RicciProfile, complex_dim: Option<usize>) -> BestBound {
    let mut reports = vec![friedrich_bound(profile)];
    if let Some(m) = complex_dim {
        reports.push(
            kaehler_bound(profile, m).unwrap_or_else(|e| BoundReport::not_applicable(Method::Kaehler, e.to_string())),
        );
    }
    reports.push(theorem31_bound(profile));
    reports.push(
        zero_scalar_bound(profile).unwrap_or_else(|e| BoundReport::not_applicable(Method::ZeroScalar, e.to_string())),
    );
    reports.push(optimize_minimax(profile));

    let mut winner = &reports[0];
    for r in &reports[1..] {
        if let Some(v) = r.value {
            if v > winner.value_or_zero() * (1.0 + 1e-9) + f64::MIN_POSITIVE {
                winner = r;
            }
        }
    }
    BestBound {
        method: winner.method,
        value: winner.value_or_zero(),
        strict: winner.strict,
        reports: reports.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::make_profile;
    use approx::assert_relative_eq;

    fn t2xs2() -> RicciProfile {
        RicciProfile::from_eigenvalues(vec![0.0, 0.0, 1.0, 1.0]).unwrap()
    }

    fn s2r_x_hyperbolic(r: f64) -> RicciProfile {
        let k = 1.0 / (r * r);
        RicciProfile::from_eigenvalues(vec![-1.0, -1.0, k, k]).unwrap()
    }

    /// M⁷ = Σ² × warped product, with the rounded warp data κ₀ = -8.5, |Ric|² = 2.
    fn m7_rounded(r_sigma: f64) -> RicciProfile {
        let r = r_sigma + 16.0 / 5.0;
        make_profile(7, r, (r_sigma / 2.0).min(-8.5), r_sigma * r_sigma / 2.0 + 2.0, None).unwrap()
    }

    #[test]
    fn friedrich_values() {
        assert_relative_eq!(friedrich_bound(&t2xs2()).value.unwrap(), 2.0 / 3.0, max_relative = 1e-15);
        let flat = RicciProfile::einstein(4, 0.0).unwrap();
        assert_eq!(friedrich_bound(&flat).value, Some(0.0));
        assert_relative_eq!(friedrich_bound(&m7_rounded(10.0)).value.unwrap(), 3.85, max_relative = 1e-12);
        assert!(!friedrich_bound(&t2xs2()).strict);
    }

    #[test]
    fn kaehler_values() {
        assert_eq!(kaehler_bound(&t2xs2(), 2).unwrap().value, Some(1.0));
        for r in [0.5, 0.8, 0.95] {
            let v = kaehler_bound(&s2r_x_hyperbolic(r), 2).unwrap().value.unwrap();
            assert_relative_eq!(v, 1.0 / (r * r) - 1.0, max_relative = 1e-12);
        }
        let flat = RicciProfile::einstein(4, 0.0).unwrap();
        assert_eq!(kaehler_bound(&flat, 2).unwrap().value, Some(0.0));
        assert!(matches!(kaehler_bound(&t2xs2(), 3), Err(BoundError::Dimension { .. })));
        // m odd: (m+1) R / (4m)
        let cp3 = RicciProfile::einstein(6, 6.0).unwrap();
        assert_relative_eq!(kaehler_bound(&cp3, 3).unwrap().value.unwrap(), 4.0 * 6.0 / 12.0);
    }

    #[test]
    fn harmonic_spinor_cases() {
        assert!(harmonic_spinor_excluded(&t2xs2()));
        assert!(!harmonic_spinor_excluded(&RicciProfile::einstein(4, 3.0).unwrap()));
        let zero = make_profile(4, 0.0, -1.0, 4.0, None).unwrap();
        assert!(harmonic_spinor_excluded(&zero));
    }

    #[test]
    fn improvement_cases() {
        assert_eq!(improvement_condition(&t2xs2()), Ok(true));
        let warp = make_profile(5, 16.0 / 5.0, -8.5, 2.05, None).unwrap();
        assert_eq!(improvement_condition(&warp), Ok(false));
        assert_eq!(improvement_condition(&RicciProfile::einstein(5, 4.0).unwrap()), Ok(false));
        let neg = s2r_x_hyperbolic(1.5);
        assert!(matches!(improvement_condition(&neg), Err(BoundError::ScalarSign(_))));
    }

    #[test]
    fn closed_form_condition_cases() {
        assert!(closed_form_condition(&t2xs2()));
        for r in [0.2, 0.5, 1.0, 1.7, 4.0] {
            assert!(closed_form_condition(&s2r_x_hyperbolic(r)), "r = {r}");
        }
        assert!(!closed_form_condition(&RicciProfile::einstein(4, 5.0).unwrap()));
        assert!(!closed_form_condition(&RicciProfile::einstein(4, -5.0).unwrap()));
    }

    #[test]
    fn shortcut_values() {
        let s = shortcuts(&t2xs2());
        assert_relative_eq!(s.a, 1.0 / 3.0, max_relative = 1e-12);
        assert_relative_eq!(s.b, 2.0 / 3.0, max_relative = 1e-12);
        assert_relative_eq!(s.c, (4.0f64 / 3.0).sqrt(), max_relative = 1e-12);
        assert_relative_eq!(s.cap_a, 2.0 / 3.0, max_relative = 1e-12);

        let e = shortcuts(&RicciProfile::einstein(6, 7.0).unwrap());
        assert_eq!((e.b, e.c), (0.0, 0.0));
        assert!(e.cap_a.abs() < 1e-15);

        for r in [0.4, 0.9, 1.3] {
            let k = 1.0 / (r * r);
            let s = shortcuts(&s2r_x_hyperbolic(r));
            assert_relative_eq!(s.a, (-1.0 + k) / 3.0, max_relative = 1e-12, epsilon = 1e-15);
            assert_relative_eq!(s.b, 2.0 / 3.0 * (1.0 + k), max_relative = 1e-12);
            assert_relative_eq!(s.c, (1.0 + k) * (4.0f64 / 3.0).sqrt(), max_relative = 1e-12);
            assert_relative_eq!(s.cap_a, 2.0 / 3.0 * k * (1.0 + k), max_relative = 1e-12);
        }
    }

    #[test]
    fn theorem31_values() {
        let t = theorem31_bound(&t2xs2());
        assert_relative_eq!(t.value.unwrap(), 0.5 * 2f64.sqrt(), max_relative = 1e-12);
        assert!(t.strict);
        let s = theorem31_bound(&s2r_x_hyperbolic(1.0));
        assert_relative_eq!(s.value.unwrap(), (3f64.sqrt() - 1.0) / 2.0, max_relative = 1e-12);
        // R_Σ = -4: n = 7, R = -0.8, κ₀ = -8.5, |Ric|² = 10.
        let neg = make_profile(7, -0.8, -8.5, 10.0, None).unwrap();
        assert_relative_eq!(theorem31_bound(&neg).value.unwrap(), 0.052_721_634_442_467, max_relative = 1e-9);
        let e = theorem31_bound(&RicciProfile::einstein(4, 3.0).unwrap());
        assert!(!e.applicable && e.value.is_none() && e.reason.is_some());
    }

    #[test]
    fn corollary32_matches_closed_form() {
        // α = 16/27, β = 32/729
        let c = corollary32_bound(&t2xs2()).value.unwrap();
        let hand = 2.0 / 3.0 + (2.0f64 / 9.0).powi(2) / (16.0 / 27.0 + (256.0f64 / 729.0 + 32.0 / 729.0).sqrt());
        assert_relative_eq!(c, hand, max_relative = 1e-14);
        assert_relative_eq!(c, 0.5 * 2f64.sqrt(), max_relative = 1e-12);

        let m7 = m7_rounded(10.0);
        let a = corollary32_bound(&m7).value.unwrap();
        let b = theorem31_bound(&m7).value.unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-9);

        assert!(!corollary32_bound(&RicciProfile::einstein(4, 1.0).unwrap()).applicable);
    }

    #[test]
    fn corollary32_near_einstein_limit() {
        // Slightly split an Einstein spectrum; the correction vanishes with the split.
        let base = 3.0;
        let mut prev = f64::INFINITY;
        for eps in [1e-1, 1e-2, 1e-3] {
            let p = RicciProfile::from_eigenvalues(vec![base - eps, base, base, base + eps]).unwrap();
            let fr = friedrich_bound(&p).value.unwrap();
            if let Some(v) = corollary32_bound(&p).value {
                let corr = v - fr;
                assert!(corr >= 0.0 && corr < prev);
                prev = corr;
            }
        }
    }

    #[test]
    fn zero_scalar_values() {
        let p = make_profile(4, 0.0, -1.0, 4.0, None).unwrap();
        let v = zero_scalar_bound(&p).unwrap().value.unwrap();
        assert_relative_eq!(v, 1.0 / (3f64.sqrt() + 1.0), max_relative = 1e-14);
        assert_relative_eq!(v, theorem31_bound(&s2r_x_hyperbolic(1.0)).value.unwrap(), max_relative = 1e-12);

        let m7 = make_profile(7, 0.0, -8.5, 7.12, None).unwrap();
        assert_relative_eq!(zero_scalar_bound(&m7).unwrap().value.unwrap(), 0.162_254_851_648_028, max_relative = 1e-9);

        let flat = RicciProfile::einstein(4, 0.0).unwrap();
        assert_eq!(zero_scalar_bound(&flat), Err(BoundError::RicciFlat));
        assert!(!zero_scalar_bound(&t2xs2()).unwrap().applicable);
    }

    #[test]
    fn minimax_values() {
        let v = minimax_bound_at_t(&m7_rounded(10.0), 0.212).unwrap();
        assert_relative_eq!(v, 3.7494, max_relative = 1e-4);
        let fr = friedrich_bound(&t2xs2()).value.unwrap();
        assert_relative_eq!(minimax_bound_at_t(&t2xs2(), 0.0).unwrap(), fr, max_relative = 1e-15);
        let e = RicciProfile::einstein(5, 9.0).unwrap();
        for t in [0.0, 0.1, 0.33, 0.5] {
            assert_relative_eq!(minimax_bound_at_t(&e, t).unwrap(), 5.0 * 9.0 / 16.0, max_relative = 1e-14);
        }
        assert_eq!(minimax_bound_at_t(&e, 0.6), Err(BoundError::ParameterRange(0.6)));
        assert!(minimax_bound_at_t(&e, -0.01).is_err());
        assert!(minimax_bound_at_t(&e, f64::NAN).is_err());
    }

    #[test]
    fn optimized_minimax() {
        let neg = m7_rounded(-4.0);
        let r = optimize_minimax(&neg);
        assert_relative_eq!(r.value.unwrap(), 0.052_72, max_relative = 1e-3);

        let t = optimize_minimax(&t2xs2());
        assert_relative_eq!(t.value.unwrap(), 0.5 * 2f64.sqrt(), max_relative = 1e-6);

        let e = RicciProfile::einstein(4, 3.0).unwrap();
        let r = optimize_minimax(&e);
        assert_eq!(r.optimizer.unwrap().t_star, 0.0);
        assert_relative_eq!(r.value.unwrap(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn best_bound_choices() {
        let b = best_bound(&t2xs2(), Some(2));
        assert_eq!(b.method, Method::Kaehler);
        assert_eq!(b.value, 1.0);
        assert_eq!(best_bound(&s2r_x_hyperbolic(0.9), Some(2)).method, Method::Theorem31);
        assert_eq!(best_bound(&RicciProfile::einstein(4, 3.0).unwrap(), None).method, Method::Friedrich);
        assert!(best_bound(&m7_rounded(0.0), Some(3)).report(Method::Kaehler).is_some_and(|r| !r.applicable));
    }

    #[test]
    fn s0_sign_rule() {
        // R <= 0: always positive. R > 0: positive iff A - 2ab > 0.
        let neg = theorem31_bound(&s2r_x_hyperbolic(1.4));
        assert!(neg.optimizer.unwrap().s0.unwrap() > 0.0);
        let pos = theorem31_bound(&t2xs2());
        assert!(pos.optimizer.unwrap().s0.unwrap() > 0.0);
    }

    #[test]
    fn method_names_round_trip() {
        for m in [Method::Friedrich, Method::Kaehler, Method::ZeroScalar, Method::Theorem31, Method::Corollary32, Method::MiniMaxNumeric, Method::Best] {
            assert_eq!(Method::from_name(m.name()), Some(m));
            assert_eq!(serde_json::to_value(m).unwrap(), m.name());
        }
    }
}
