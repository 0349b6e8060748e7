use std::time::Instant;

use rlsg_core::discretize::build_matrix;
use rlsg_core::spectral::{decay_fit, schatten_norm, singular_values, hs_norm_exact};
use rlsg_core::{ComplexOrder, GridSpec};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1024);
    let order = ComplexOrder::from_parts(0.75, 0.0).unwrap();
    let grid = GridSpec::new(n).unwrap();
    let t0 = Instant::now();
    let m = build_matrix(&order, grid).unwrap();
    println!("build: {:?}", t0.elapsed());
    let t1 = Instant::now();
    let s = singular_values(&m).unwrap();
    println!("svd:   {:?}", t1.elapsed());
    let hs = schatten_norm(&s, 2.0);
    let exact = hs_norm_exact(&order).unwrap();
    let (slope, res) = decay_fit(&s, (8, (n / 8).min(256))).unwrap();
    println!("s1={:.6} hs={:.6} exact={:.6} gap={:.4}% slope={:.4} res={:.4}",
        s.values()[0], hs, exact, 100.0 * (hs - exact).abs() / exact, slope, res);
}
