//! Lower bounds for the eigenvalues of the Dirac operator on compact
//! Riemannian spin manifolds with harmonic curvature tensor, computed from
//! Ricci spectral data.
//!
//! * [`curvature`] holds the [`RicciProfile`] every bound consumes.
//! * [`bounds`] implements the estimates and the numeric mini-max optimizer.
//! * [`catalog`] builds profiles for Einstein spaces, surfaces, warped
//!   products and Riemannian products.
//! * [`warp`] integrates the periodic warp equation and extracts curvature.
//! * [`clifford`] checks the pointwise Clifford identities the estimates use.
//! * [`sweep`] evaluates the bound table along a one-parameter family.

pub mod bounds;
pub mod catalog;
pub mod clifford;
pub mod curvature;
pub mod ode;
pub mod optimize;
pub mod sweep;
pub mod warp;

pub use bounds::{BestBound, BoundError, BoundReport, Method, Shortcuts};
pub use catalog::{named_example, realize, CatalogError, ManifoldSpec, Parameter};
pub use curvature::{make_profile, traceless, ProfileError, RicciProfile, TracelessData};
pub use warp::{integrate_warp, WarpError, WarpTrajectory};
