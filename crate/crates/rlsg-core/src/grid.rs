//! Uniform cell grid on (0,1) and functions sampled on it.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Uniform partition of (0,1) into `n_cells` cells with midpoint nodes.
///
/// Cell j is (a_j, a_{j+1}) with a_j = j/N; its node is x_j = (j+1/2)/N,
/// strictly inside (0,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    n_cells: usize,
}

impl GridSpec {
    pub fn new(n_cells: usize) -> Result<Self> {
        if n_cells == 0 {
            return Err(Error::Domain {
                op: "GridSpec::new",
                constraint: "n_cells >= 1",
            });
        }
        Ok(GridSpec { n_cells })
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    /// Cell width h = 1/N.
    pub fn h(&self) -> f64 {
        1.0 / self.n_cells as f64
    }

    /// Midpoint node x_i = (i + 1/2) h.
    pub fn node(&self, i: usize) -> f64 {
        (i as f64 + 0.5) * self.h()
    }

    /// Cell edge a_j = j h, j = 0..=N.
    pub fn edge(&self, j: usize) -> f64 {
        j as f64 * self.h()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_cells).map(move |i| self.node(i))
    }
}

/// How the stored values are to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interpretation {
    /// One constant per cell.
    PiecewiseConstant,
    /// Pointwise samples at the midpoint nodes.
    PointSamples,
}

/// A function on (0,1) known through its values on a grid's nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: GridSpec,
    values: Vec<Complex64>,
    interpretation: Interpretation,
}

impl SampledFunction {
    pub fn new(
        grid: GridSpec,
        values: Vec<Complex64>,
        interpretation: Interpretation,
    ) -> Result<Self> {
        if values.len() != grid.n_cells() {
            return Err(Error::Domain {
                op: "SampledFunction::new",
                constraint: "values.len() == grid.n_cells()",
            });
        }
        Ok(SampledFunction {
            grid,
            values,
            interpretation,
        })
    }

    pub fn constant(grid: GridSpec, value: Complex64) -> Self {
        SampledFunction {
            grid,
            values: vec![value; grid.n_cells()],
            interpretation: Interpretation::PiecewiseConstant,
        }
    }

    /// Sample `f` at the midpoint nodes.
    pub fn from_fn(
        grid: GridSpec,
        interpretation: Interpretation,
        mut f: impl FnMut(f64) -> Complex64,
    ) -> Self {
        let values = grid.nodes().map(&mut f).collect();
        SampledFunction {
            grid,
            values,
            interpretation,
        }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn interpretation(&self) -> Interpretation {
        self.interpretation
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }
}
