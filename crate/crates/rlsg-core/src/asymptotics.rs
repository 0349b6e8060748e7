//! Fourier coefficients of the power functions s ↦ s^α on (0,1), the
//! operator's Fourier diagonal ⟨V_ξ e_n, e_n⟩ with e_n(x) = e^{2iπnx},
//! its large-n asymptote (2iπn)^{-ξ}, and the spectral-radius decay
//! sequence.
//!
//! The coefficient ψ̂_α(n) = ∫₀¹ s^α e^{-2iπns} ds is computed two ways:
//! a contour route (rotating the ray to the negative imaginary axis, which
//! trades the oscillation for an incomplete-gamma term plus a rapidly
//! decaying arc integral) and, as an independent validation path, direct
//! panel-by-panel oscillatory quadrature.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::operator::ComplexOrder;
use crate::quad::{integrate, integrate_singular_left};
use crate::specfun::{cpow_real_base, gamma, ln_abs_gamma, lower_incomplete_gamma};

const PI: f64 = core::f64::consts::PI;

/// Index n ≥ 1 of the Fourier exponential e_n(x) = e^{2iπnx}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourierMode(u32);

impl FourierMode {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain {
                op: "FourierMode::new",
                constraint: "n >= 1",
            });
        }
        Ok(FourierMode(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn check_alpha_strip(op: &'static str, alpha: Complex64) -> Result<()> {
    if alpha.re > -1.0 && alpha.re <= 1.0 && alpha.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            op,
            constraint: "Re(alpha) in (-1, 1]",
        })
    }
}

/// ψ̂_α(n) = ∫₀¹ s^α e^{-2iπns} ds for Re(α) ∈ (-1, 1], via the contour
/// decomposition
///
///   n^{α+1} ψ̂_α(n) = -i e^{-iπα/2} (2π)^{-(α+1)} γ(α+1, 2πn) + I_n,
///
/// where I_n is the arc contribution. Integer α ∈ {0, 1} short-circuit to
/// their closed forms (0 and i/(2πn)), which are exact at every n.
pub fn psi_hat(alpha: Complex64, n: FourierMode) -> Result<Complex64> {
    check_alpha_strip("psi_hat", alpha)?;
    let nf = n.get() as f64;
    if alpha.im == 0.0 {
        if alpha.re == 0.0 {
            // Full periods of e_{-n} integrate to zero.
            return Ok(Complex64::new(0.0, 0.0));
        }
        if alpha.re == 1.0 {
            // Integration by parts: ∫₀¹ s e^{-2iπns} ds = i/(2πn).
            return Ok(Complex64::new(0.0, 1.0 / (2.0 * PI * nf)));
        }
    }

    let incomplete = lower_incomplete_gamma(alpha + 1.0, 2.0 * PI * nf)?;
    let rotation = (-Complex64::i() * PI * alpha / 2.0).exp();
    let gamma_term =
        -Complex64::i() * rotation * cpow_real_base(2.0 * PI * nf, -(alpha + 1.0))? * incomplete;
    Ok(gamma_term + Complex64::i() * arc_integral(alpha, nf))
}

/// The arc contribution to ψ̂_α(n) after the substitution x = -nt:
/// (1/n) ∫₀^{nπ/2} exp(E(x)) dx with
/// E(x) = -i(α+1)x/n + 4iπn sin²(x/(2n)) - 2πn sin(x/n).
///
/// The phase is written through sin²(x/(2n)) (valid for integer n), which
/// keeps trigonometric arguments small, and the modulus is bounded by
/// e^{|Im α| π/2} e^{-4x}, so the range is cut at x = 14.
fn arc_integral(alpha: Complex64, nf: f64) -> Complex64 {
    let upper = (nf * PI / 2.0).min(14.0);
    let mut integrand = |x: f64| {
        let t = x / nf;
        let half_sin = (0.5 * t).sin();
        let exponent = Complex64::new(
            alpha.im * t - 2.0 * PI * nf * t.sin(),
            -(alpha.re + 1.0) * t + 4.0 * PI * nf * half_sin * half_sin,
        );
        exponent.exp()
    };
    integrate(&mut integrand, 0.0, upper, 1e-14) / nf
}

/// ψ̂_α(n) by direct adaptive quadrature of the defining integral: dyadic
/// panels absorbing the s^α singularity at 0, then one panel per
/// oscillation period. Slow; serves as the independent validation path
/// for the contour formula.
pub fn psi_hat_quadrature(alpha: Complex64, n: FourierMode) -> Result<Complex64> {
    check_alpha_strip("psi_hat_quadrature", alpha)?;
    let nf = n.get() as f64;
    let omega = 2.0 * PI * nf;
    let mut f = |s: f64| {
        cpow_real_base(s, alpha).expect("s > 0") * Complex64::new(0.0, -omega * s).exp()
    };
    let head_tol = 1e-12;
    let head = integrate_singular_left(&mut f, 0.0, 1.0 / nf, head_tol, |len| {
        len.powf(alpha.re + 1.0) / (alpha.re + 1.0)
    });
    let mut body = Complex64::new(0.0, 0.0);
    let panel_tol = 1e-12 / nf;
    for j in 1..n.get() {
        let a = j as f64 / nf;
        let b = (j + 1) as f64 / nf;
        body += integrate(&mut f, a, b, panel_tol);
    }
    Ok(head + body)
}

/// ⟨V_ξ e_n, e_n⟩ = (ψ̂_{ξ-1}(n) - ψ̂_ξ(n)) / Γ(ξ) for 0 < Re(ξ) ≤ 1.
pub fn diagonal_exact(order: &ComplexOrder, n: FourierMode) -> Result<Complex64> {
    if order.tau() > 1.0 {
        return Err(Error::Domain {
            op: "diagonal_exact",
            constraint: "Re(xi) <= 1",
        });
    }
    let xi = order.xi();
    Ok((psi_hat(xi - 1.0, n)? - psi_hat(xi, n)?) / order.gamma_xi())
}

/// Large-n equivalent (2iπn)^{-ξ} = exp(-ξ (ln(2πn) + iπ/2)).
pub fn diagonal_asymptote(order: &ComplexOrder, n: FourierMode) -> Complex64 {
    let nf = n.get() as f64;
    (-order.xi() * Complex64::new((2.0 * PI * nf).ln(), PI / 2.0)).exp()
}

/// Exact diagonal value, its asymptote, and their ratio at one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalReport {
    pub n: u32,
    pub exact: Complex64,
    pub asymptote: Complex64,
    /// exact / asymptote; approaches 1 as n grows.
    pub ratio: Complex64,
}

pub fn diagonal_report(order: &ComplexOrder, n: FourierMode) -> Result<DiagonalReport> {
    let exact = diagonal_exact(order, n)?;
    let asymptote = diagonal_asymptote(order, n);
    Ok(DiagonalReport {
        n: n.get(),
        exact,
        asymptote,
        ratio: exact / asymptote,
    })
}

/// Two-term expansion Γ(α+1)/(2iπn)^{α+1} + i/(2πn) of ψ̂_α(n).
pub fn psi_hat_expansion(alpha: Complex64, n: FourierMode) -> Result<Complex64> {
    check_alpha_strip("psi_hat_expansion", alpha)?;
    let nf = n.get() as f64;
    let leading = gamma(alpha + 1.0)?
        * (-(alpha + 1.0) * Complex64::new((2.0 * PI * nf).ln(), PI / 2.0)).exp();
    Ok(leading + Complex64::new(0.0, 1.0 / (2.0 * PI * nf)))
}

/// The sequence b_k = (k τ |Γ(kξ)|)^{-1/k}, k = 1..=n_max, an upper bound
/// for the k-th root of the norm of the k-th power. Log-gamma keeps it
/// finite where |Γ(kξ)| overflows.
pub fn spectral_radius_bound(order: &ComplexOrder, n_max: usize) -> Result<Vec<f64>> {
    if n_max < 1 {
        return Err(Error::Domain {
            op: "spectral_radius_bound",
            constraint: "n_max >= 1",
        });
    }
    let mut out = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let kf = k as f64;
        let ln_term = kf.ln() + order.tau().ln() + ln_abs_gamma(kf * order.xi())?;
        out.push((-ln_term / kf).exp());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(re: f64, im: f64) -> ComplexOrder {
        ComplexOrder::from_parts(re, im).unwrap()
    }

    fn mode(n: u32) -> FourierMode {
        FourierMode::new(n).unwrap()
    }

    #[test]
    fn mode_rejects_zero() {
        assert!(FourierMode::new(0).is_err());
    }

    #[test]
    fn psi_hat_integer_alpha_closed_forms() {
        for n in [1u32, 7, 100] {
            let z = psi_hat(Complex64::new(0.0, 0.0), mode(n)).unwrap();
            assert_eq!(z, Complex64::new(0.0, 0.0));
            let o = psi_hat(Complex64::new(1.0, 0.0), mode(n)).unwrap();
            let want = Complex64::new(0.0, 1.0 / (2.0 * PI * n as f64));
            assert_eq!(o, want);
        }
    }

    #[test]
    fn psi_hat_strip_boundaries() {
        assert!(psi_hat(Complex64::new(-1.0, 0.0), mode(3)).is_err());
        assert!(psi_hat(Complex64::new(1.2, 0.0), mode(3)).is_err());
        assert!(psi_hat(Complex64::new(1.0, 0.5), mode(3)).is_ok());
    }

    #[test]
    fn diagonal_at_order_one_is_exactly_the_asymptote() {
        let o = order(1.0, 0.0);
        for n in [1u32, 10, 10_000] {
            let exact = diagonal_exact(&o, mode(n)).unwrap();
            let asym = diagonal_asymptote(&o, mode(n));
            // 1/(2iπn) = -i/(2πn)
            let want = Complex64::new(0.0, -1.0 / (2.0 * PI * n as f64));
            assert!((exact - want).norm() <= 1e-13 * want.norm());
            assert!((exact - asym).norm() <= 1e-12 * want.norm());
        }
    }

    #[test]
    fn diagonal_requires_tau_at_most_one() {
        assert!(diagonal_exact(&order(1.2, 0.0), mode(5)).is_err());
    }

    #[test]
    fn expansion_cancels_exactly_at_alpha_zero() {
        // Γ(1)/(2iπn) + i/(2πn) = -i/(2πn) + i/(2πn) = 0
        let e = psi_hat_expansion(Complex64::new(0.0, 0.0), mode(17)).unwrap();
        assert!(e.norm() < 1e-15);
    }

    #[test]
    fn expansion_leading_term_at_alpha_one() {
        // Γ(2)/(2iπn)² + i/(2πn) = -1/(4π²n²) + i/(2πn)
        let n = 9u32;
        let e = psi_hat_expansion(Complex64::new(1.0, 0.0), mode(n)).unwrap();
        let nf = n as f64;
        let want = Complex64::new(-1.0 / (4.0 * PI * PI * nf * nf), 1.0 / (2.0 * PI * nf));
        assert!((e - want).norm() < 1e-14);
    }

    #[test]
    fn radius_bound_starts_at_the_norm_bound() {
        // b_1 = 1/(τ |Γ(ξ)|)
        let o = order(0.7, 1.3);
        let b = spectral_radius_bound(&o, 3).unwrap();
        let want = 1.0 / (o.tau() * o.gamma_xi().norm());
        assert!((b[0] - want).abs() < 1e-12 * want);
    }

    #[test]
    fn radius_bound_vanishes_factorially_at_order_one() {
        // b_k = (k · k!)^{-1/k} → 0
        let o = order(1.0, 0.0);
        let b = spectral_radius_bound(&o, 40).unwrap();
        assert!((b[0] - 1.0).abs() < 1e-12);
        assert!(b[39] < b[9] && b[9] < b[1]);
        assert!(b[39] < 0.12);
    }
}
