//! Numerical core for fractional integration of complex order on (0,1):
//! the Riemann-Liouville semigroup V_ξ, ξ in the right half-plane.
//!
//! * [`specfun`]: Γ, B, lower incomplete γ and complex powers of positive
//!   reals on the right half-plane.
//! * [`operator`]: kernel and weight evaluation, closed-form action on
//!   powers, product-integration application, adjoint, cyclicity index.
//! * [`discretize`]: dense Nyström matrices, composition, Toeplitz/FFT
//!   fast application.
//! * [`spectral`]: singular spectra, Schatten norms, the Hilbert-Schmidt
//!   closed form, decay-exponent fits and membership verdicts, the
//!   analytic-family interpolation inequality.
//! * [`asymptotics`]: Fourier diagonal ⟨V_ξ e_n, e_n⟩, its (2iπn)^{-ξ}
//!   asymptote, power-function Fourier coefficients by two independent
//!   routes, spectral-radius decay.
//! * [`laws`]: norm bounds and numeric lower bounds, semigroup residuals,
//!   strong continuity, kernel-slice norms.
//!
//! Everything is pure computation over `alloc`; the crate builds without
//! `std` when the `libm` feature supplies the float math.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("enable either the `std` (default) or the `libm` feature");

mod eigen;
mod error;
mod fft;
mod quad;
mod rng;

pub mod asymptotics;
pub mod discretize;
pub mod grid;
pub mod laws;
pub mod operator;
pub mod specfun;
pub mod spectral;

pub use error::{Error, Result};
pub use grid::{GridSpec, Interpretation, SampledFunction};
pub use num_complex::Complex64;
pub use operator::ComplexOrder;
