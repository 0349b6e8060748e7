//! Minimal radix-2 complex FFT for the zero-padded convolutions used by the
//! Toeplitz fast path. Buffers must have power-of-two length.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;

pub(crate) fn fft(buf: &mut [Complex64], inverse: bool) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    if n <= 1 {
        return;
    }

    // Bit-reversal permutation.
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }

    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let ang = sign * 2.0 * PI /
            len as f64;
        let wlen = Complex64::new(ang.cos(), ang.sin());
        let mut start = 0;
        while start < n {
            let mut w = Complex64::new(1.0, 0.0);
            for k in 0..len / 2 {
                let u = buf[start + k];
                let v = buf[start + k + len / 2] * w;
                buf[start + k] = u + v;
                buf[start + k + len / 2] = u - v;
                w *= wlen;
            }
            start += len;
        }
        len <<= 1;
    }

    if inverse {
        let scale = 1.0 / n as f64;
        for x in buf.iter_mut() {
            *x *= scale;
        }
    }
}

/// Linear convolution of `a` and `b`, truncated to the first `out_len` terms.
pub(crate) fn convolve_truncated(
    a: &[Complex64],
    b: &[Complex64],
    out_len: usize,
) -> alloc::vec::Vec<Complex64> {
    let need = a.len() + b.len() - 1;
    let size = need.next_power_of_two();
    let mut fa = alloc::vec![Complex64::new(0.0, 0.0); size];
    let mut fb = alloc::vec![Complex64::new(0.0, 0.0); size];
    fa[..a.len()].copy_from_slice(a);
    fb[..b.len()].copy_from_slice(b);
    fft(&mut fa, false);
    fft(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(fb.iter()) {
        *x *= y;
    }
    fft(&mut fa, true);
    fa.truncate(out_len);
    fa
}
