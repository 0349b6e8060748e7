//! Test-side oracles, independent of the library's own numerics: a
//! Stirling-series gamma, composite Gauss-Legendre quadrature with
//! explicitly listed panels, and a deterministic generator.

use rlsg_core::Complex64;

/// SplitMix64, duplicated here so test draws do not depend on crate
/// internals.
pub struct TestRng {
    state: u64,
}

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        lo + (hi - lo) * u
    }

    pub fn complex_in_square(&mut self) -> Complex64 {
        Complex64::new(self.uniform(-1.0, 1.0), self.uniform(-1.0, 1.0))
    }
}

/// Γ(z) for Re(z) > 0 by the Stirling asymptotic series after shifting
/// Re(z) past 20 with the recurrence Γ(z) = Γ(z+m)/(z (z+1) ... (z+m-1)).
/// Independent of the Lanczos route used by the library.
pub fn stirling_gamma(z: Complex64) -> Complex64 {
    assert!(z.re > 0.0);
    let shift = (20.0 - z.re).ceil().max(0.0) as usize;
    let mut denom = Complex64::new(1.0, 0.0);
    for j in 0..shift {
        denom *= z + j as f64;
    }
    let w = z + shift as f64;
    // ln Γ(w) = (w - 1/2) ln w - w + ln(2π)/2 + Σ B_{2k}/(2k(2k-1) w^{2k-1})
    let series_coeffs = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        7.0 / 1092.0,
        -3617.0 / 122_400.0,
    ];
    let mut series = Complex64::new(0.0, 0.0);
    let w2 = w * w;
    let mut power = w; // w^{2k-1}
    for &c in series_coeffs.iter() {
        series += c / power;
        power *= w2;
    }
    let half_ln_two_pi = 0.918_938_533_204_672_74;
    let ln_gamma = (w - 0.5) * w.ln() - w + half_ln_two_pi + series;
    ln_gamma.exp() / denom
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Composite fixed-order quadrature over an explicit, increasing list of
/// panel edges. Deliberately non-adaptive.
pub fn integrate_panels(
    f: &mut impl FnMut(f64) -> Complex64,
    edges: &[f64],
    rule: &[(f64, f64)],
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for pair in edges.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut panel = Complex64::new(0.0, 0.0);
        for &(x, w) in rule {
            panel += w * f(mid + half * x);
        }
        acc += panel * half;
    }
    acc
}

/// Panel edges geometrically refined toward `a`: {a + (b-a) 2^{-k}} down to
/// level `levels`, ascending, ending at `b`.
pub fn dyadic_edges_left(a: f64, b: f64, levels: usize) -> Vec<f64> {
    let mut edges = Vec::with_capacity(levels + 2);
    for k in (0..=levels).rev() {
        edges.push(a + (b - a) * 0.5_f64.powi(k as i32));
    }
    edges
}

/// Uniform panel edges from a to b.
pub fn uniform_edges(a: f64, b: f64, panels: usize) -> Vec<f64> {
    (0..=panels)
        .map(|k| a + (b - a) * k as f64 / panels as f64)
        .collect()
}
