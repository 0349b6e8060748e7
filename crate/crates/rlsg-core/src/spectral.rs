//! Singular spectra of discretized operators, Schatten norms, the
//! closed-form Hilbert-Schmidt norm, decay-exponent fitting and the
//! resulting Schatten-class verdicts, plus the analytic-family
//! interpolation inequality checked at matrix level.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::discretize::{build_matrix, OperatorMatrix};
use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::operator::ComplexOrder;
use crate::specfun::gamma;

/// Non-increasing singular values of a discretized operator, with the
/// matrix size and order they came from.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularSpectrum {
    values: Vec<f64>,
    n: usize,
    order: ComplexOrder,
}

impl SingularSpectrum {
    /// Singular values, descending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Size N of the source matrix.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &ComplexOrder {
        &self.order
    }
}

/// Singular values via the Hermitian eigendecomposition of M*M.
///
/// Squaring halves the usable digits, so values below ~1e-8 of the top one
/// carry no relative accuracy; the decay-fit windows stay far above that
/// floor. Convergence failures surface with the iteration count.
pub fn singular_values(m: &OperatorMatrix) -> Result<SingularSpectrum> {
    let n = m.n();
    let entries = m.entries();

    // Row supports: trailing zeros never contribute to the Gram matrix.
    let mut gram = alloc::vec![Complex64::new(0.0, 0.0); n * n];
    for k in 0..n {
        let row = &entries[k * n..(k + 1) * n];
        let mut len = n;
        while len > 0 && row[len - 1].norm_sqr() == 0.0 {
            len -= 1;
        }
        for i in 0..len {
            let ci = row[i].conj();
            let out = &mut gram[i * n..];
            for j in i..len {
                out[j] += ci * row[j];
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            gram[j * n + i] = gram[i * n + j].conj();
        }
    }

    let eigen = hermitian_eigenvalues(&mut gram, n)?;
    let mut values: Vec<f64> = eigen
        .into_iter()
        .rev()
        .map(|l| l.max(0.0).sqrt())
        .collect();
    // Clamping can disturb ordering only among noise-level values.
    values.sort_unstable_by(|a, b| b.partial_cmp(a).expect("finite singular values"));
    Ok(SingularSpectrum {
        values,
        n,
        order: *m.order(),
    })
}

/// ℓ^r norm of the singular values: (Σ s_n^r)^{1/r}, with r = ∞ giving s₁.
pub fn schatten_norm(spectrum: &SingularSpectrum, r: f64) -> f64 {
    assert!(r >= 1.0, "Schatten norms need r >= 1");
    let s = spectrum.values();
    if s.is_empty() {
        return 0.0;
    }
    if r.is_infinite() {
        return s[0];
    }
    let top = s[0];
    if top == 0.0 {
        return 0.0;
    }
    // Factor out s₁ to keep the sum away from under/overflow.
    let sum: f64 = s.iter().map(|&v| (v / top).powf(r)).sum();
    top * sum.powf(1.0 / r)
}

/// Closed-form Hilbert-Schmidt norm 1/(|Γ(ξ)| √(2τ(2τ-1))), finite exactly
/// when τ > 1/2.
pub fn hs_norm_exact(order: &ComplexOrder) -> Result<f64> {
    let tau = order.tau();
    if tau <= 0.5 {
        return Err(Error::Domain {
            op: "hs_norm_exact",
            constraint: "Re(xi) > 1/2",
        });
    }
    Ok(1.0 / (order.gamma_xi().norm() * (2.0 * tau * (2.0 * tau - 1.0)).sqrt()))
}

/// Least-squares decay exponent of s_n ~ C n^{-slope} over a 1-indexed
/// window, plus the RMS residual of the log-log fit.
///
/// The head of the spectrum is pre-asymptotic and the tail is polluted by
/// discretization, so the window must satisfy n_max ≤ N/8 and span at
/// least 10 values.
pub fn decay_fit(spectrum: &SingularSpectrum, window: (usize, usize)) -> Result<(f64, f64)> {
    let (n_min, n_max) = window;
    let n_values = spectrum.values().len();
    if n_min < 1 || n_max > n_values / 8 || n_max - n_min < 10 {
        return Err(Error::FitWindow {
            n_min,
            n_max,
            n_values,
        });
    }
    let mut sx = 0.0;
    let mut sy = 0.0;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let count = (n_max - n_min + 1) as f64;
    for n in n_min..=n_max {
        let s = spectrum.values()[n - 1];
        if s <= 0.0 {
            return Err(Error::Domain {
                op: "decay_fit",
                constraint: "singular values positive on the window",
            });
        }
        let x = (n as f64).ln();
        let y = s.ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = count * sxx - sx * sx;
    let b = (count * sxy - sx * sy) / denom;
    let a = (sy - b * sx) / count;
    let mut rss = 0.0;
    for n in n_min..=n_max {
        let x = (n as f64).ln();
        let y = spectrum.values()[n - 1].ln();
        let r = a + b * x - y;
        rss += r * r;
    }
    Ok((-b, (rss / count).sqrt()))
}

/// Default half-width of the indeterminate band around slope·r = 1.
pub const DEFAULT_BOUNDARY_DELTA: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Member,
    NonMember,
    Boundary,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Member => "member",
            Verdict::NonMember => "non-member",
            Verdict::Boundary => "boundary",
        }
    }
}

/// Estimated decay exponent and the membership call it implies for one r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchattenVerdict {
    pub order: ComplexOrder,
    pub r: f64,
    /// Fitted decay exponent of s_n.
    pub estimated_exponent: f64,
    /// Membership threshold on τ: 1/r.
    pub threshold: f64,
    pub verdict: Verdict,
    pub fit_window: (usize, usize),
    pub fit_residual: f64,
}

/// Default fit window (8, N/8).
pub fn default_fit_window(n: usize) -> (usize, usize) {
    (8, n / 8)
}

/// Classify membership from an already-computed spectrum: member when
/// slope·r > 1 + δ, non-member when slope·r < 1 - δ, boundary between.
pub fn classify_from_spectrum(
    spectrum: &SingularSpectrum,
    r: f64,
    window: (usize, usize),
    delta: f64,
) -> Result<SchattenVerdict> {
    if !(r >= 1.0) {
        return Err(Error::Domain {
            op: "classify_from_spectrum",
            constraint: "r >= 1",
        });
    }
    let (slope, residual) = decay_fit(spectrum, window)?;
    let product = slope * r;
    let verdict = if product > 1.0 + delta {
        Verdict::Member
    } else if product < 1.0 - delta {
        Verdict::NonMember
    } else {
        Verdict::Boundary
    };
    Ok(SchattenVerdict {
        order: *spectrum.order(),
        r,
        estimated_exponent: slope,
        threshold: 1.0 / r,
        verdict,
        fit_window: window,
        fit_residual: residual,
    })
}

/// Full pipeline: build the N×N matrix, extract singular values, fit the
/// tail decay over (8, N/8), and compare slope·r against 1.
pub fn classify_schatten(order: &ComplexOrder, r: f64, n_cells: usize) -> Result<SchattenVerdict> {
    let grid = GridSpec::new(n_cells)?;
    let spectrum = singular_values(&build_matrix(order, grid)?)?;
    classify_from_spectrum(
        &spectrum,
        r,
        default_fit_window(n_cells),
        DEFAULT_BOUNDARY_DELTA,
    )
}

/// Strip geometry and exponents for the analytic-family interpolation
/// inequality on T_z = Γ(z) Γ(z/2)² V_z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolationSpec {
    pub alpha0: f64,
    pub alpha1: f64,
    /// Schatten exponent on the Re(z) = alpha0 edge (may be ∞).
    pub p0: f64,
    /// Schatten exponent on the Re(z) = alpha1 edge.
    pub p1: f64,
    pub theta: f64,
}

impl InterpolationSpec {
    pub fn new(alpha0: f64, alpha1: f64, p0: f64, p1: f64, theta: f64) -> Result<Self> {
        let ok = alpha0 < alpha1
            && alpha0 > 0.0
            && p1 >= 1.0
            && p1 < p0
            && (0.0..=1.0).contains(&theta);
        if !ok {
            return Err(Error::Domain {
                op: "InterpolationSpec::new",
                constraint: "0 < alpha0 < alpha1, 1 <= p1 < p0, theta in [0,1]",
            });
        }
        Ok(InterpolationSpec {
            alpha0,
            alpha1,
            p0,
            p1,
            theta,
        })
    }

    /// Interpolated abscissa α = θ α₁ + (1-θ) α₀.
    pub fn alpha(&self) -> f64 {
        self.theta * self.alpha1 + (1.0 - self.theta) * self.alpha0
    }

    /// Interpolated exponent p from 1/p = θ/p₁ + (1-θ)/p₀.
    pub fn p(&self) -> f64 {
        let inv = self.theta / self.p1
            + if self.p0.is_infinite() {
                0.0
            } else {
                (1.0 - self.theta) / self.p0
            };
        if inv == 0.0 {
            f64::INFINITY
        } else {
            1.0 / inv
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolationSample {
    pub sigma: f64,
    /// ‖T_{α+iσ}‖_{S^p} at the discretization size.
    pub norm: f64,
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationReport {
    pub alpha: f64,
    pub p: f64,
    /// Discretized sup of ‖T_z‖_{S^{p0}} over the Re(z) = α₀ edge grid.
    pub s0: f64,
    /// Discretized sup of ‖T_z‖_{S^{p1}} over the Re(z) = α₁ edge grid.
    pub s1: f64,
    /// S₀^{1-θ} S₁^θ.
    pub bound: f64,
    pub samples: Vec<InterpolationSample>,
}

impl InterpolationReport {
    pub fn any_violation(&self) -> bool {
        self.samples.iter().any(|s| s.violation)
    }
}

/// Tolerance allowed on the interpolation bound before a sample counts as
/// a violation; absorbs discretization error on both sides.
pub const INTERPOLATION_TOLERANCE: f64 = 0.05;

/// σ-grid half-width and point count used to estimate the edge suprema.
/// |Γ(z)| decays fast in |Im z|, so a bounded window suffices.
const EDGE_SIGMA_MAX: f64 = 4.0;
const EDGE_SIGMA_POINTS: usize = 9;

fn t_family_norm(re: f64, im: f64, p: f64, grid: GridSpec) -> Result<f64> {
    let z = Complex64::new(re, im);
    let weight = (gamma(z)? * gamma(z / 2.0)? * gamma(z / 2.0)?).norm();
    let order = ComplexOrder::new(z)?;
    let spectrum = singular_values(&build_matrix(&order, grid)?)?;
    Ok(weight * schatten_norm(&spectrum, p))
}

fn edge_supremum(alpha: f64, p: f64, grid: GridSpec) -> Result<f64> {
    let mut sup: f64 = 0.0;
    for k in 0..EDGE_SIGMA_POINTS {
        let sigma = -EDGE_SIGMA_MAX
            + 2.0 * EDGE_SIGMA_MAX * k as f64 / (EDGE_SIGMA_POINTS - 1) as f64;
        sup = sup.max(t_family_norm(alpha, sigma, p, grid)?);
    }
    Ok(sup)
}

/// Evaluate ‖T_{α+iσ}‖_{S^p} for each requested σ and flag any sample
/// exceeding S₀^{1-θ} S₁^θ beyond the discretization tolerance.
pub fn interpolation_check(
    spec: &InterpolationSpec,
    sigma_samples: &[f64],
    grid: GridSpec,
) -> Result<InterpolationReport> {
    let s0 = edge_supremum(spec.alpha0, spec.p0, grid)?;
    let s1 = edge_supremum(spec.alpha1, spec.p1, grid)?;
    let bound = s0.powf(1.0 - spec.theta) * s1.powf(spec.theta);
    let alpha = spec.alpha();
    let p = spec.p();
    let mut samples = Vec::with_capacity(sigma_samples.len());
    for &sigma in sigma_samples {
        let norm = t_family_norm(alpha, sigma, p, grid)?;
        samples.push(InterpolationSample {
            sigma,
            norm,
            violation: norm > bound * (1.0 + INTERPOLATION_TOLERANCE),
        });
    }
    Ok(InterpolationReport {
        alpha,
        p,
        s0,
        s1,
        bound,
        samples,
    })
}
