use core::fmt;

/// Errors surfaced by operations whose mathematical domain is restricted.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input lies outside the domain on which the operation is defined.
    ///
    /// `constraint` states the violated condition (e.g. `"Re(xi) > 1/2"`).
    Domain {
        op: &'static str,
        constraint: &'static str,
    },
    /// Two operator matrices live on different grids.
    GridMismatch { lhs: usize, rhs: usize },
    /// A decay-fit window is outside the usable part of the spectrum.
    FitWindow {
        n_min: usize,
        n_max: usize,
        n_values: usize,
    },
    /// An eigenvalue iteration failed to converge.
    Convergence { index: usize, iterations: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { op, constraint } => {
                write!(f, "{op}: input outside domain (requires {constraint})")
            }
            Error::GridMismatch { lhs, rhs } => {
                write!(f, "grid mismatch: {lhs} cells vs {rhs} cells")
            }
            Error::FitWindow {
                n_min,
                n_max,
                n_values,
            } => write!(
                f,
                "fit window ({n_min}, {n_max}) invalid for a spectrum of {n_values} values \
                 (need n_max <= N/8 and n_max - n_min >= 10)"
            ),
            Error::Convergence { index, iterations } => write!(
                f,
                "eigenvalue {index} did not converge after {iterations} iterations"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
