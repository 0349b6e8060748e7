//! Quantitative property checks: operator-norm bounds between L^p spaces,
//! numerically exhibited lower bounds, the semigroup law at matrix and
//! closed-form level, the strong-continuity estimate on monomials, and
//! kernel-slice norms.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::discretize::{build_matrix, compose};
use crate::error::{Error, Result};
use crate::grid::{GridSpec, Interpretation, SampledFunction};
use crate::operator::{apply, apply_monomial, apply_power, ComplexOrder};
use crate::quad::integrate_singular_left;
use crate::rng::SplitMix64;
use crate::spectral::{schatten_norm, singular_values};
use crate::specfun::cpow_real_base;

/// 1/x with the convention 1/∞ = 0.
fn recip(p: f64) -> f64 {
    if p.is_infinite() {
        0.0
    } else {
        1.0 / p
    }
}

/// Theoretical bound for ‖V_ξ‖ from L^p to L^q (q = ∞ meaning the sup-norm
/// target):
///
///   (1/|Γ(ξ)|) ((1/p' + 1/q) / (τ - 1/p + 1/q))^{1/p' + 1/q},
///
/// defined for 1 ≤ p ≤ q and τ > 1/p - 1/q. The exponent 1/p' + 1/q
/// degenerates to 0 for (p, q) = (1, ∞), where the bound is 1/|Γ(ξ)|, and
/// to 1 for p = q, where it is 1/(τ |Γ(ξ)|).
pub fn bound_formula(order: &ComplexOrder, p: f64, q: f64) -> Result<f64> {
    if !(p >= 1.0) || q < p {
        return Err(Error::Domain {
            op: "bound_formula",
            constraint: "1 <= p <= q",
        });
    }
    let tau = order.tau();
    let ip = recip(p);
    let iq = recip(q);
    if tau <= ip - iq {
        return Err(Error::Domain {
            op: "bound_formula",
            constraint: "Re(xi) > 1/p - 1/q",
        });
    }
    let e = (1.0 - ip) + iq;
    Ok((e / (tau - ip + iq)).powf(e) / order.gamma_xi().norm())
}

/// Grid L^p norm: (h Σ |v_i|^p)^{1/p}, or the node maximum for p = ∞.
pub fn grid_norm(values: &[Complex64], p: f64, h: f64) -> f64 {
    if p.is_infinite() {
        return values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    }
    let sum: f64 = values.iter().map(|v| v.norm().powf(p)).sum();
    (h * sum).powf(1.0 / p)
}

/// Best ratio ‖V_ξ f‖_q / ‖f‖_p found over trial functions: the constant,
/// the monomials x^{1/2}, x, x², and `trials` random piecewise-constant
/// functions drawn from `seed`. For p = q = 2 the largest singular value
/// of the discretized operator is used instead.
///
/// Discrete norms can only underestimate the operator norm up to quadrature
/// error, so this is a lower-bound probe for `bound_formula`.
pub fn numeric_norm_lower(
    order: &ComplexOrder,
    p: f64,
    q: f64,
    grid: GridSpec,
    trials: usize,
    seed: u64,
) -> Result<f64> {
    // Same domain restrictions as the bound itself.
    bound_formula(order, p, q)?;

    if p == 2.0 && q == 2.0 {
        let spectrum = singular_values(&build_matrix(order, grid)?)?;
        return Ok(schatten_norm(&spectrum, f64::INFINITY));
    }

    let h = grid.h();
    let mut best: f64 = 0.0;
    let mut probe = |f: &SampledFunction| {
        let denom = grid_norm(f.values(), p, h);
        if denom > 0.0 {
            let image = apply(order, f);
            let ratio = grid_norm(image.values(), q, h) / denom;
            if ratio > best {
                best = ratio;
            }
        }
    };

    probe(&SampledFunction::constant(grid, Complex64::new(1.0, 0.0)));
    for beta in [0.5, 1.0, 2.0] {
        probe(&SampledFunction::from_fn(
            grid,
            Interpretation::PiecewiseConstant,
            |x| Complex64::new(x.powf(beta), 0.0),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let values: Vec<Complex64> = (0..grid.n_cells())
            .map(|_| Complex64::new(rng.next_symmetric(), rng.next_symmetric()))
            .collect();
        let f = SampledFunction::new(grid, values, Interpretation::PiecewiseConstant)
            .expect("matching length");
        probe(&f);
    }
    Ok(best)
}

/// One row of a norm-bound verification table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub p: f64,
    pub q: f64,
    pub order: ComplexOrder,
    pub theoretical: f64,
    pub numeric_lower: f64,
    pub pass: bool,
}

/// Tolerance absorbing the quadrature error by which a discrete ratio may
/// exceed the continuum norm.
pub const BOUND_TOLERANCE: f64 = 0.02;

pub fn bound_report(
    order: &ComplexOrder,
    p: f64,
    q: f64,
    grid: GridSpec,
    trials: usize,
    seed: u64,
) -> Result<BoundReport> {
    let theoretical = bound_formula(order, p, q)?;
    let numeric_lower = numeric_norm_lower(order, p, q, grid, trials, seed)?;
    Ok(BoundReport {
        p,
        q,
        order: *order,
        theoretical,
        numeric_lower,
        pass: numeric_lower <= theoretical * (1.0 + BOUND_TOLERANCE),
    })
}

/// Residuals of the semigroup identity at one grid size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemigroupResidual {
    /// ‖M_{ξ₁} M_{ξ₂} - M_{ξ₁+ξ₂}‖_F / ‖M_{ξ₁+ξ₂}‖_F.
    pub matrix: f64,
    /// Sup-norm residual over nodes between the iterated closed-form
    /// monomial images and the direct image of the summed order, over
    /// n = 0..=5. Exercises the Γ-coefficient identity
    /// Γ(n+1)/Γ(n+1+ξ₂) · Γ(n+1+ξ₂)/Γ(n+1+ξ₁+ξ₂) = Γ(n+1)/Γ(n+1+ξ₁+ξ₂).
    pub monomial: f64,
}

pub fn semigroup_residual(
    xi1: &ComplexOrder,
    xi2: &ComplexOrder,
    n_cells: usize,
) -> Result<SemigroupResidual> {
    if n_cells < 16 {
        return Err(Error::Domain {
            op: "semigroup_residual",
            constraint: "N >= 16",
        });
    }
    let grid = GridSpec::new(n_cells)?;
    let m1 = build_matrix(xi1, grid)?;
    let m2 = build_matrix(xi2, grid)?;
    let sum_order = xi1.compose_with(xi2);
    let m12 = build_matrix(&sum_order, grid)?;
    let product = compose(&m1, &m2)?;
    let matrix = product.frobenius_distance(&m12)? / m12.frobenius_norm();

    let mut monomial: f64 = 0.0;
    for n in 0..=5u32 {
        let inner = apply_monomial(xi2, n);
        let outer = apply_power(xi1, inner.exponent)?;
        let composed_coeff = inner.coefficient * outer.coefficient;
        let direct = apply_monomial(&sum_order, n);
        debug_assert!((outer.exponent - direct.exponent).norm() == 0.0);
        for x in grid.nodes() {
            let diff = (composed_coeff - direct.coefficient)
                * cpow_real_base(x, direct.exponent).expect("x > 0");
            monomial = monomial.max(diff.norm());
        }
    }
    Ok(SemigroupResidual { matrix, monomial })
}

/// Number of grid points used for the sup in `strong_continuity_gap`.
const CONTINUITY_GRID: usize = 10_000;

/// Numeric sup of |x^{n+ξ} - x^n| over a dense grid against the bound
/// |ξ|/(n + τ); the sup never exceeds the bound.
pub fn strong_continuity_gap(order: &ComplexOrder, n: u32) -> Result<(f64, f64)> {
    if n < 1 {
        return Err(Error::Domain {
            op: "strong_continuity_gap",
            constraint: "n >= 1",
        });
    }
    let xi = order.xi();
    let nf = n as f64;
    let mut lhs: f64 = 0.0;
    for k in 1..=CONTINUITY_GRID {
        let x = k as f64 / CONTINUITY_GRID as f64;
        let gap = (cpow_real_base(x, xi + nf).expect("x > 0")
            - Complex64::new(x.powi(n as i32), 0.0))
        .norm();
        lhs = lhs.max(gap);
    }
    let rhs = xi.norm() / (nf + order.tau());
    Ok((lhs, rhs))
}

/// Closed-form slice norm ‖(x - ·)^{ξ-1} 1_{(0,x)}‖_{p'} of the
/// unnormalized kernel, finite exactly when τ > 1/p:
/// x^{τ-1/p} / ((τ-1)p' + 1)^{1/p'} for 1 < p, and x^{τ-1} for p = 1
/// (where p' = ∞ turns the norm into an essential sup).
pub fn kernel_slice_norm(order: &ComplexOrder, p: f64, x: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::Domain {
            op: "kernel_slice_norm",
            constraint: "p >= 1",
        });
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain {
            op: "kernel_slice_norm",
            constraint: "x in (0,1)",
        });
    }
    let tau = order.tau();
    if tau <= recip(p) {
        return Err(Error::Domain {
            op: "kernel_slice_norm",
            constraint: "Re(xi) > 1/p",
        });
    }
    if p == 1.0 {
        return Ok(x.powf(tau - 1.0));
    }
    let pp = 1.0 / (1.0 - recip(p)); // conjugate exponent
    Ok(x.powf(tau - recip(p)) / ((tau - 1.0) * pp + 1.0).powf(1.0 / pp))
}

/// Quadrature companion to `kernel_slice_norm`: (∫₀ˣ (x-u)^{(τ-1)p'} du)^{1/p'}
/// evaluated numerically, with dyadic refinement into the u = x corner.
/// For p = 1 the essential sup is scanned on a dense grid instead.
pub fn kernel_slice_norm_numeric(order: &ComplexOrder, p: f64, x: f64) -> Result<f64> {
    // Domain checks shared with the closed form.
    kernel_slice_norm(order, p, x)?;
    let tau = order.tau();
    if p == 1.0 {
        let mut sup: f64 = 0.0;
        for k in 0..10_000 {
            let u = x * k as f64 / 10_000.0;
            sup = sup.max((x - u).powf(tau - 1.0));
        }
        return Ok(sup);
    }
    let pp = 1.0 / (1.0 - recip(p));
    let exponent = (tau - 1.0) * pp;
    // Substituting v = x - u moves the singularity to the left endpoint:
    // ∫₀ˣ (x-u)^e du = ∫₀ˣ v^e dv, evaluated directly in v to keep the
    // small-argument powers exact.
    let mut integrand = |v: f64| Complex64::new(v.powf(exponent), 0.0);
    let integral = integrate_singular_left(&mut integrand, 0.0, x, 1e-12, |len| {
        len.powf(exponent + 1.0) / (exponent + 1.0)
    });
    Ok(integral.re.powf(1.0 / pp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(re: f64, im: f64) -> ComplexOrder {
        ComplexOrder::from_parts(re, im).unwrap()
    }

    #[test]
    fn bound_formula_diagonal_case() {
        // p = q: 1/(τ |Γ(ξ)|); at ξ = 1 that is exactly 1.
        let o = order(1.0, 0.0);
        for p in [1.0, 2.0, 7.0, f64::INFINITY] {
            let b = bound_formula(&o, p, p).unwrap();
            assert!((b - 1.0).abs() < 1e-13, "p={p}");
        }
        let o2 = order(0.5, 0.0);
        let want = 1.0 / (0.5 * o2.gamma_xi().norm());
        assert!((bound_formula(&o2, 3.0, 3.0).unwrap() - want).abs() < 1e-13);
    }

    #[test]
    fn bound_formula_domain_boundary_is_sharp() {
        // Threshold τ > 1/p - 1/q, strict.
        let o = order(0.5, 0.0);
        assert!(bound_formula(&o, 1.0, 2.0).is_err()); // 1 - 1/2 = 0.5 = τ
        assert!(bound_formula(&o, 1.0, 1.9).is_ok());
        assert!(bound_formula(&o, 2.0, f64::INFINITY).is_err());
        assert!(bound_formula(&o, 2.1, f64::INFINITY).is_ok());
        // p > q rejected outright.
        assert!(bound_formula(&o, 2.0, 1.0).is_err());
    }

    #[test]
    fn bound_formula_one_to_sup_degenerate_exponent() {
        // (p, q) = (1, ∞): exponent 0, bound 1/|Γ(ξ)|, needs τ > 1.
        let o = order(1.5, 0.5);
        let want = 1.0 / o.gamma_xi().norm();
        assert!((bound_formula(&o, 1.0, f64::INFINITY).unwrap() - want).abs() < 1e-13);
        assert!(bound_formula(&order(0.9, 0.0), 1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn constant_function_l1_ratio() {
        // f ≡ 1, ξ = 1: V f = x, ‖x‖₁ = 1/2, so the probe reaches at least 1/2.
        let o = order(1.0, 0.0);
        let grid = GridSpec::new(512).unwrap();
        let lower = numeric_norm_lower(&o, 1.0, 1.0, grid, 0, 1).unwrap();
        assert!(lower >= 0.5 - 1e-10);
        assert!(lower <= bound_formula(&o, 1.0, 1.0).unwrap() * 1.02);
    }

    #[test]
    fn semigroup_monomial_identity_is_machine_precision() {
        let r = semigroup_residual(&order(0.5, 0.0), &order(0.5, 0.0), 64).unwrap();
        assert!(r.monomial < 1e-13);
        let r = semigroup_residual(&order(0.4, 0.2), &order(0.6, -0.2), 64).unwrap();
        assert!(r.monomial < 1e-13);
    }

    #[test]
    fn semigroup_rejects_small_grids() {
        assert!(semigroup_residual(&order(0.5, 0.0), &order(0.5, 0.0), 8).is_err());
    }

    #[test]
    fn strong_continuity_gap_is_positive_and_bounded() {
        let o = order(0.8, 0.3);
        let (lhs, rhs) = strong_continuity_gap(&o, 2).unwrap();
        assert!(lhs >= 0.0 && rhs > 0.0);
        assert!(lhs <= rhs * (1.0 + 1e-6));
    }

    #[test]
    fn strong_continuity_vanishes_with_the_order() {
        // Along real orders the numeric sup decreases to 0.
        let mut prev = f64::INFINITY;
        for tau in [0.4, 0.2, 0.1, 0.05] {
            let (lhs, _) = strong_continuity_gap(&order(tau, 0.0), 1).unwrap();
            assert!(lhs < prev);
            prev = lhs;
        }
        assert!(prev < 0.05);
    }

    #[test]
    fn kernel_slice_norm_closed_forms() {
        // p = 1, ξ = 1.5: x^{1/2}; p = 2, ξ = 1: √x.
        let x = 0.49;
        let v = kernel_slice_norm(&order(1.5, 0.0), 1.0, x).unwrap();
        assert!((v - x.sqrt()).abs() < 1e-14);
        let v = kernel_slice_norm(&order(1.0, 0.0), 2.0, x).unwrap();
        assert!((v - x.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn kernel_slice_norm_domain_boundary() {
        assert!(kernel_slice_norm(&order(0.5, 0.0), 2.0, 0.3).is_err());
        assert!(kernel_slice_norm(&order(0.51, 0.0), 2.0, 0.3).is_ok());
        assert!(kernel_slice_norm(&order(1.0, 0.0), 1.0, 0.3).is_err());
    }

    #[test]
    fn kernel_slice_numeric_matches_closed_form() {
        for (tau, p, x) in [(0.8, 2.0, 0.5), (1.2, 3.0, 0.25), (0.9, 2.0, 0.8)] {
            let o = order(tau, 0.3);
            let exact = kernel_slice_norm(&o, p, x).unwrap();
            let numeric = kernel_slice_norm_numeric(&o, p, x).unwrap();
            assert!(
                (exact - numeric).abs() <= 0.005 * exact,
                "tau={tau} p={p} x={x}: {exact} vs {numeric}"
            );
        }
    }
}
