//! One-parameter sweeps of the bound table over a manifold family.

use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{best_bound, friedrich_bound, kaehler_bound, optimize_minimax, theorem31_bound, Method};
use crate::catalog::{realize, CatalogError, ManifoldSpec, Parameter};

pub const MAX_STEPS: usize = 1_000_000;

/// Output columns after `param`, in order.
pub const COLUMNS: [Method; 5] = [
    Method::Friedrich,
    Method::Kaehler,
    Method::Theorem31,
    Method::MiniMaxNumeric,
    Method::Best,
];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SweepError {
    #[error("sweep range must satisfy from < to, got {from} .. {to}")]
    Range { from: f64, to: f64 },
    #[error("steps must lie in [2, {MAX_STEPS}], got {0}")]
    Steps(usize),
    #[error("method '{0}' is not a sweep column")]
    Method(String),
    #[error("at {param} = {value}: {source}")]
    Row {
        param: &'static str,
        value: f64,
        #[source]
        source: CatalogError,
    },
    #[error(transparent)]
    Binding(CatalogError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRequest {
    pub spec: ManifoldSpec,
    pub parameter: Parameter,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    /// Columns to fill; the others stay empty.
    pub bounds: Vec<Method>,
    /// Complex dimension for the Kähler column.
    pub complex_dim: Option<usize>,
}

/// One row: the parameter value and one optional cell per entry of [`COLUMNS`].
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub param: f64,
    pub cells: [Option<f64>; 5],
}

impl SweepRequest {
    pub fn validate(&self) -> Result<(), SweepError> {
        if !(self.from < self.to) || !self.from.is_finite() || !self.to.is_finite() {
            return Err(SweepError::Range {
                from: self.from,
                to: self.to,
            });
        }
        if !(2..=MAX_STEPS).contains(&self.steps) {
            return Err(SweepError::Steps(self.steps));
        }
        if let Some(m) = self.bounds.iter().find(|m| !COLUMNS.contains(m)) {
            return Err(SweepError::Method(m.name().to_string()));
        }
        // binding must hit at least once
        self.spec.bind(self.parameter, self.from).map_err(SweepError::Binding)?;
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == last {
                    self.to
                } else {
                    self.from + (self.to - self.from) * i as f64 / last as f64
                }
            })
            .collect()
    }

    fn row(&self, value: f64) -> Result<SweepRow, SweepError> {
        let row_err = |source| SweepError::Row {
            param: self.parameter.name(),
            value,
            source,
        };
        let spec = self.spec.bind(self.parameter, value).map_err(SweepError::Binding)?;
        let profile = realize(&spec).map_err(row_err)?;
        let mut cells = [None; 5];
        for (cell, method) in cells.iter_mut().zip(COLUMNS) {
            if !self.bounds.contains(&method) {
                continue;
            }
            *cell = match method {
                Method::Friedrich => friedrich_bound(&profile).value,
                Method::Kaehler => self
                    .complex_dim
                    .and_then(|m| kaehler_bound(&profile, m).ok())
                    .and_then(|r| r.value),
                Method::Theorem31 => theorem31_bound(&profile).value,
                Method::MiniMaxNumeric => optimize_minimax(&profile).value,
                Method::Best => Some(best_bound(&profile, self.complex_dim).value),
                _ => None,
            };
        }
        Ok(SweepRow { param: value, cells })
    }

    /// Evaluates every grid point (in parallel); rows come back in grid order.
    pub fn run(&self) -> Result<Vec<SweepRow>, SweepError> {
        self.validate()?;
        self.grid().into_par_iter().map(|v| self.row(v)).collect()
    }
}
