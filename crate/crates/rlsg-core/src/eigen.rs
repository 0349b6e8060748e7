//! Eigenvalues of dense complex Hermitian matrices: Householder reduction
//! to real symmetric tridiagonal form followed by implicit-shift QL.
//! Eigenvalues only; no vector accumulation.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Eigenvalues of the Hermitian matrix stored row-major in `a`, ascending.
/// The buffer is destroyed.
pub(crate) fn hermitian_eigenvalues(a: &mut [Complex64], n: usize) -> Result<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    let (mut d, mut e) = tridiagonalize(a, n);
    tridiagonal_eigenvalues(&mut d, &mut e)?;
    d.sort_unstable_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(d)
}

/// Householder similarity reduction of a Hermitian matrix to tridiagonal
/// form. The complex subdiagonal phases are irrelevant to the spectrum, so
/// only (Re diagonal, |subdiagonal|) are returned.
fn tridiagonalize(a: &mut [Complex64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut v = vec![ZERO; n];
    let mut p = vec![ZERO; n];
    let mut v_conj = vec![ZERO; n];
    let mut w_conj = vec![ZERO; n];

    for k in 0..n.saturating_sub(2) {
        // Householder vector annihilating column k below the subdiagonal.
        let mut sigma_sq = 0.0;
        for i in (k + 1)..n {
            sigma_sq += a[i * n + k].norm_sqr();
        }
        let x0 = a[(k + 1) * n + k];
        let lower_sq = sigma_sq - x0.norm_sqr();
        if sigma_sq == 0.0 || lower_sq <= f64::EPSILON * f64::EPSILON * sigma_sq {
            continue; // already tridiagonal in this column
        }
        let sigma = sigma_sq.sqrt();
        let phase = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let alpha = -phase * sigma;

        v[k + 1] = x0 - alpha;
        for i in (k + 2)..n {
            v[i] = a[i * n + k];
        }
        let vnorm = (sigma_sq + sigma * x0.norm()).sqrt() * core::f64::consts::SQRT_2;
        for vi in v.iter_mut().take(n).skip(k + 1) {
            *vi /= vnorm;
        }

        // p = 2 A v on the trailing block.
        for i in (k + 1)..n {
            let row = &a[i * n..(i + 1) * n];
            let mut acc = ZERO;
            for j in (k + 1)..n {
                acc += row[j] * v[j];
            }
            p[i] = 2.0 * acc;
        }
        // w = p - (v^H p) v, then A -= v w^H + w v^H.
        let mut c = ZERO;
        for i in (k + 1)..n {
            c += v[i].conj() * p[i];
        }
        for i in (k + 1)..n {
            p[i] -= c * v[i];
        }
        for i in (k + 1)..n {
            v_conj[i] = v[i].conj();
            w_conj[i] = p[i].conj();
        }
        for i in (k + 1)..n {
            let vi = v[i];
            let wi = p[i];
            let row = &mut a[i * n..(i + 1) * n];
            for j in (k + 1)..n {
                row[j] -= vi * w_conj[j] + wi * v_conj[j];
            }
        }

        // The transformed column k is (.., alpha, 0, ..., 0).
        a[(k + 1) * n + k] = alpha;
        a[k * n + k + 1] = alpha.conj();
        for i in (k + 2)..n {
            a[i * n + k] = ZERO;
            a[k * n + i] = ZERO;
        }
    }

    let mut d = Vec::with_capacity(n);
    let mut e = vec![0.0; n];
    for i in 0..n {
        d.push(a[i * n + i].re);
        if i + 1 < n {
            e[i] = a[(i + 1) * n + i].norm();
        }
    }
    (d, e)
}

/// Implicit-shift QL iteration for a real symmetric tridiagonal matrix.
/// `e[i]` couples `d[i]` and `d[i+1]`; `e[n-1]` is scratch.
fn tridiagonal_eigenvalues(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iter = 0usize;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 64 {
                return Err(Error::Convergence {
                    index: l,
                    iterations: iter,
                });
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;

            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                f = (d[i] - g) * s + 2.0 * c * b;
                p = s * f;
                d[i + 1] = g + p;
                g = c * f - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
