//! Dense Nyström discretization of the operator on L²(0,1).
//!
//! Row i of the matrix holds the product-integration weights of
//! [`crate::operator::apply`], so a matrix-vector product reproduces `apply`
//! on piecewise-constant functions exactly. With midpoint nodes and the cell
//! measure already inside the weights, conjugating by the isometry
//! f ↦ √h f between (ℂ^N, h⟨·,·⟩) and standard ℂ^N leaves the matrix
//! unchanged, so its plain singular values, Frobenius norm and products
//! directly approximate the operator's singular values, Hilbert-Schmidt
//! norm and compositions.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::fft::convolve_truncated;
use crate::grid::{GridSpec, Interpretation, SampledFunction};
use crate::operator::{toeplitz_weights, ComplexOrder};

/// Quadrature scheme tag carried by every matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    ProductIntegrationMidpoint,
}

/// Dense N×N discretization of the operator, row-major.
///
/// Entries vanish whenever cell j lies entirely right of node x_i, giving a
/// lower-triangular (plus diagonal) band structure.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    order: ComplexOrder,
    grid: GridSpec,
    entries: Vec<Complex64>,
    scheme: Scheme,
}

impl OperatorMatrix {
    pub fn order(&self) -> &ComplexOrder {
        &self.order
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn n(&self) -> usize {
        self.grid.n_cells()
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n() + j]
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        let n = self.n();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Build a matrix from explicit entries on a grid.
    pub fn from_entries(
        order: ComplexOrder,
        grid: GridSpec,
        entries: Vec<Complex64>,
    ) -> Result<Self> {
        if entries.len() != grid.n_cells() * grid.n_cells() {
            return Err(Error::Domain {
                op: "OperatorMatrix::from_entries",
                constraint: "entries.len() == N*N",
            });
        }
        Ok(OperatorMatrix {
            order,
            grid,
            entries,
            scheme: Scheme::ProductIntegrationMidpoint,
        })
    }

    /// Matrix-vector product; equals `apply` on the matching grid.
    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.n();
        debug_assert_eq!(v.len(), n);
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let row = self.row(i);
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                acc += row[j] * v[j];
            }
            out.push(acc);
        }
        out
    }

    /// Frobenius norm; approximates the Hilbert-Schmidt norm of the operator.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Frobenius norm of the difference of two same-grid matrices.
    pub fn frobenius_distance(&self, other: &OperatorMatrix) -> Result<f64> {
        if self.n() != other.n() {
            return Err(Error::GridMismatch {
                lhs: self.n(),
                rhs: other.n(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }
}

/// Assemble the dense product-integration matrix for ξ on the given grid.
///
/// The weights depend only on the node-cell distance, so the matrix is
/// lower-triangular Toeplitz; assembly is O(N) moment evaluations plus
/// O(N²) copies. Rows are independent (safe to parallelize externally);
/// the result is immutable.
pub fn build_matrix(order: &ComplexOrder, grid: GridSpec) -> Result<OperatorMatrix> {
    let n = grid.n_cells();
    if n < 2 {
        return Err(Error::Domain {
            op: "build_matrix",
            constraint: "N >= 2",
        });
    }
    let w = toeplitz_weights(order, grid);
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        let row = &mut entries[i * n..(i + 1) * n];
        for j in 0..=i {
            row[j] = w[i - j];
        }
    }
    Ok(OperatorMatrix {
        order: *order,
        grid,
        entries,
        scheme: Scheme::ProductIntegrationMidpoint,
    })
}

/// Matrix product discretizing the composition of the two operators.
///
/// The cell measure is already inside the stored weights, so the plain
/// product is the discrete composition: compose(M_ξ, M_ξ') applied to
/// node values reproduces apply(ξ, apply(ξ', ·)) exactly.
pub fn compose(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    if a.n() != b.n() {
        return Err(Error::GridMismatch {
            lhs: a.n(),
            rhs: b.n(),
        });
    }
    let n = a.n();
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        let a_row = a.row(i);
        let out_row = &mut entries[i * n..(i + 1) * n];
        for k in 0..n {
            let aik = a_row[k];
            if aik.norm_sqr() == 0.0 {
                continue;
            }
            let b_row = b.row(k);
            for j in 0..n {
                out_row[j] += aik * b_row[j];
            }
        }
    }
    Ok(OperatorMatrix {
        order: a.order().compose_with(b.order()),
        grid: a.grid(),
        entries,
        scheme: Scheme::ProductIntegrationMidpoint,
    })
}

/// Same result as [`crate::operator::apply`] in O(N log N).
///
/// On a uniform midpoint grid every weight, the self-cell one included,
/// depends only on the node-cell distance, so the dense action is one
/// lower-triangular Toeplitz product: a zero-padded cyclic convolution of
/// the weight vector with the sample vector.
pub fn fast_apply(order: &ComplexOrder, f: &SampledFunction) -> SampledFunction {
    let grid = f.grid();
    let w = toeplitz_weights(order, grid);
    let out = convolve_truncated(&w, f.values(), grid.n_cells());
    SampledFunction::new(grid, out, Interpretation::PointSamples).expect("same grid")
}
