//! Declarative manifold recipes and their Ricci profiles.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curvature::{ProfileError, Provenance, RicciProfile};
use crate::warp::{curvature_track, extremal_data, integrate_warp, WarpError, WARP5_SCALAR};

/// Integration tolerance used when realizing warped factors.
pub const WARP_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("invalid manifold spec: {0}")]
    InvalidSpec(String),
    #[error("product has {0} factors with non-constant Ricci spectrum; at most one is supported")]
    Composition(usize),
    #[error("unknown example '{0}'")]
    UnknownExample(String),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Warp(#[from] WarpError),
}

/// Recipe for a manifold with harmonic curvature tensor.
///
/// JSON form: `{"einstein":{"n":4,"scalar":12}}`, `{"surface":{"scalar":-2}}`,
/// `{"sphere":{"radius":1}}`, `{"warped":{"n":5,"f0":0.1}}`,
/// `{"product":[...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ManifoldSpec {
    Einstein { n: i64, scalar: f64 },
    /// Constant Gaussian curvature surface, `n = 2`.
    Surface { scalar: f64 },
    /// Round `S²(r)`, scalar curvature `2/r²`.
    Sphere { radius: f64 },
    /// `S¹ ×_{f²} N⁴` with `F = f^(5/2)` starting at its minimum `f0`.
    Warped { n: i64, f0: f64 },
    Product(Vec<ManifoldSpec>),
}

/// Parameters a sweep may vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    Radius,
    SurfaceScalar,
    F0,
}

impl Parameter {
    pub fn from_name(name: &str) -> Option<Parameter> {
        match name {
            "radius" => Some(Parameter::Radius),
            "surface_scalar" => Some(Parameter::SurfaceScalar),
            "f0" => Some(Parameter::F0),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parameter::Radius => "radius",
            Parameter::SurfaceScalar => "surface_scalar",
            Parameter::F0 => "f0",
        }
    }
}

impl ManifoldSpec {
    pub fn validate(&self) -> Result<(), CatalogError> {
        match self {
            ManifoldSpec::Einstein { n, scalar } => {
                if *n < 2 {
                    return Err(CatalogError::InvalidSpec(format!("einstein.n = {n} must be >= 2")));
                }
                finite("einstein.scalar", *scalar)
            }
            ManifoldSpec::Surface { scalar } => finite("surface.scalar", *scalar),
            ManifoldSpec::Sphere { radius } => {
                if !(radius.is_finite() && *radius > 0.0) {
                    return Err(CatalogError::InvalidSpec(format!("sphere.radius = {radius} must be positive")));
                }
                Ok(())
            }
            ManifoldSpec::Warped { n, f0 } => {
                if *n != 5 {
                    return Err(CatalogError::InvalidSpec(format!("warped.n = {n}: only n = 5 is supported")));
                }
                if !(*f0 > 0.0 && *f0 <= 1.0) {
                    return Err(CatalogError::InvalidSpec(format!("warped.f0 = {f0} must lie in (0, 1]")));
                }
                Ok(())
            }
            ManifoldSpec::Product(factors) => {
                if factors.len() < 2 {
                    return Err(CatalogError::InvalidSpec(format!(
                        "product needs at least 2 factors, got {}",
                        factors.len()
                    )));
                }
                factors.iter().try_for_each(ManifoldSpec::validate)
            }
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            ManifoldSpec::Einstein { n, .. } | ManifoldSpec::Warped { n, .. } => (*n).max(0) as usize,
            ManifoldSpec::Surface { .. } | ManifoldSpec::Sphere { .. } => 2,
            ManifoldSpec::Product(f) => f.iter().map(ManifoldSpec::dimension).sum(),
        }
    }

    /// Replaces every occurrence of `param` by `value`. Fails if the spec has none.
    pub fn bind(&self, param: Parameter, value: f64) -> Result<ManifoldSpec, CatalogError> {
        let mut hits = 0;
        let bound = self.bind_inner(param, value, &mut hits);
        if hits == 0 {
            return Err(CatalogError::InvalidSpec(format!(
                "parameter '{}' does not occur in the spec",
                param.name()
            )));
        }
        Ok(bound)
    }

    fn bind_inner(&self, param: Parameter, value: f64, hits: &mut usize) -> ManifoldSpec {
        match (self, param) {
            (ManifoldSpec::Sphere { .. }, Parameter::Radius) => {
                *hits += 1;
                ManifoldSpec::Sphere { radius: value }
            }
            (ManifoldSpec::Surface { .. }, Parameter::SurfaceScalar) => {
                *hits += 1;
                ManifoldSpec::Surface { scalar: value }
            }
            (ManifoldSpec::Warped { n, .. }, Parameter::F0) => {
                *hits += 1;
                ManifoldSpec::Warped { n: *n, f0: value }
            }
            (ManifoldSpec::Product(f), _) => {
                ManifoldSpec::Product(f.iter().map(|s| s.bind_inner(param, value, hits)).collect())
            }
            (other, _) => other.clone(),
        }
    }
}

fn finite(field: &str, v: f64) -> Result<(), CatalogError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(CatalogError::InvalidSpec(format!("{field} must be finite")))
    }
}

struct Realized {
    profile: RicciProfile,
    provenance: Provenance,
}

fn realize_inner(spec: &ManifoldSpec) -> Result<Realized, CatalogError> {
    let exact = |profile| Realized {
        profile,
        provenance: Provenance::Exact,
    };
    match spec {
        ManifoldSpec::Einstein { n, scalar } => Ok(exact(RicciProfile::einstein(*n, *scalar)?)),
        ManifoldSpec::Surface { scalar } => Ok(exact(RicciProfile::from_eigenvalues(vec![scalar / 2.0; 2])?)),
        ManifoldSpec::Sphere { radius } => {
            let k = 1.0 / (radius * radius);
            Ok(exact(RicciProfile::from_eigenvalues(vec![k, k])?))
        }
        ManifoldSpec::Warped { n, f0 } => {
            let traj = integrate_warp(*n, *f0, WARP_TOL)?;
            if traj.degenerate {
                // Constant solution: the Riemannian product S¹ × N⁴.
                let mut ev = vec![0.0];
                ev.extend([WARP5_SCALAR / 4.0; 4]);
                return Ok(exact(RicciProfile::from_eigenvalues(ev)?));
            }
            let ex = extremal_data(&curvature_track(&traj)?);
            let profile =
                RicciProfile::with_provenance(5, WARP5_SCALAR, ex.kappa0, ex.ric_norm_sq_min, None, Provenance::Numerical)?;
            Ok(Realized {
                profile,
                provenance: Provenance::Numerical,
            })
        }
        ManifoldSpec::Product(factors) => {
            let parts = factors.iter().map(realize_inner).collect::<Result<Vec<_>, _>>()?;
            let varying = parts.iter().filter(|p| p.profile.eigenvalues().is_none()).count();
            if varying > 1 {
                return Err(CatalogError::Composition(varying));
            }
            let n: usize = parts.iter().map(|p| p.profile.n()).sum();
            let scalar: f64 = parts.iter().map(|p| p.profile.scalar()).sum();
            let kappa0 = parts.iter().map(|p| p.profile.kappa0()).fold(f64::INFINITY, f64::min);
            let norm: f64 = parts.iter().map(|p| p.profile.ric_norm_sq_min()).sum();
            let eigenvalues = if varying == 0 {
                Some(
                    parts
                        .iter()
                        .flat_map(|p| p.profile.eigenvalues().unwrap_or_default().iter().copied())
                        .collect(),
                )
            } else {
                None
            };
            let provenance = if parts.iter().any(|p| p.provenance == Provenance::Numerical) {
                Provenance::Numerical
            } else {
                Provenance::Exact
            };
            let profile = RicciProfile::with_provenance(n as i64, scalar, kappa0, norm, eigenvalues, provenance)?;
            Ok(Realized { profile, provenance })
        }
    }
}

/// Ricci profile of a spec. Products add scalar curvatures and squared
/// norms and take the smallest `κ₀`; this is exact only when at most one
/// factor has a non-constant Ricci spectrum, so two such factors are refused.
pub fn realize(spec: &ManifoldSpec) -> Result<RicciProfile, CatalogError> {
    spec.validate()?;
    Ok(realize_inner(spec)?.profile)
}

/// A named example manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExampleEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// Complex dimension when the manifold is Kähler.
    pub complex_dim: Option<usize>,
}

pub const EXAMPLES: &[ExampleEntry] = &[
    ExampleEntry {
        name: "t2xs2",
        description: "flat torus T^2 times the unit sphere S^2; Ricci spectrum (0,0,1,1)",
        complex_dim: Some(2),
    },
    ExampleEntry {
        name: "s2r-x-hyperbolic",
        description: "S^2(r) times a surface of curvature -1, r = 0.9 (sweep 'radius')",
        complex_dim: Some(2),
    },
    ExampleEntry {
        name: "m7-sigma",
        description: "Sigma^2 with R_Sigma = 10 times the warped product S^1 x_{f^2} N^4, F(0) = 0.1 (sweep 'surface_scalar')",
        complex_dim: None,
    },
    ExampleEntry {
        name: "m7-zero-scalar",
        description: "m7-sigma with R_Sigma = -16/5: vanishing scalar curvature",
        complex_dim: None,
    },
    ExampleEntry {
        name: "m7-negative-scalar",
        description: "m7-sigma with R_Sigma = -4: negative scalar curvature",
        complex_dim: None,
    },
    ExampleEntry {
        name: "warp5",
        description: "warped product S^1 x_{f^2} N^4 with F(0) = 0.1, F'(0) = 0 (sweep 'f0')",
        complex_dim: None,
    },
];

fn warp5() -> ManifoldSpec {
    ManifoldSpec::Warped { n: 5, f0: 0.1 }
}

fn m7(r_sigma: f64) -> ManifoldSpec {
    ManifoldSpec::Product(vec![ManifoldSpec::Surface { scalar: r_sigma }, warp5()])
}

pub fn named_example(name: &str) -> Result<ManifoldSpec, CatalogError> {
    match name {
        "t2xs2" => Ok(ManifoldSpec::Product(vec![
            ManifoldSpec::Einstein { n: 2, scalar: 0.0 },
            ManifoldSpec::Sphere { radius: 1.0 },
        ])),
        "s2r-x-hyperbolic" => Ok(ManifoldSpec::Product(vec![
            ManifoldSpec::Sphere { radius: 0.9 },
            ManifoldSpec::Surface { scalar: -2.0 },
        ])),
        "m7-sigma" => Ok(m7(10.0)),
        "m7-zero-scalar" => Ok(m7(-16.0 / 5.0)),
        "m7-negative-scalar" => Ok(m7(-4.0)),
        "warp5" => Ok(warp5()),
        other => Err(CatalogError::UnknownExample(other.to_string())),
    }
}

pub fn example_entry(name: &str) -> Option<&'static ExampleEntry> {
    EXAMPLES.iter().find(|e| e.name == name)
}
