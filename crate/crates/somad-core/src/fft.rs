//! Iterative radix-2 FFT over `Complex<f64>`.
//!
//! Transform sizes are powers of two throughout the crate (the analysis
//! frame length is validated up front), so radix-2 with precomputed
//! twiddles covers every call site: STFT frames, Griffin-Lim projections
//! and the FFT-based cross-correlation in the quality metric.

use alloc::vec;
use alloc::vec::Vec;
use libm::{cos, sin};
use num_complex::Complex;

pub type C64 = Complex<f64>;

/// Forward/inverse FFT plan for one power-of-two size.
pub struct FftPlan {
    n: usize,
    // twiddles for the forward transform; inverse uses conjugates
    twiddles: Vec<C64>,
}

impl FftPlan {
    /// `n` must be a power of two and at least 2.
    pub fn new(n: usize) -> Self {
        assert!(n.is_power_of_two() && n >= 2, "fft size must be a power of two, got {n}");
        let half = n / 2;
        let mut twiddles = Vec::with_capacity(half);
        for k in 0..half {
            let ang = -2.0 * core::f64::consts::PI * k as f64 / n as f64;
            twiddles.push(Complex::new(cos(ang), sin(ang)));
        }
        Self { n, twiddles }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// In-place forward DFT (no normalization).
    pub fn forward(&self, buf: &mut [C64]) {
        self.transform(buf, false);
    }

    /// In-place inverse DFT, normalized by `1/n`.
    pub fn inverse(&self, buf: &mut [C64]) {
        self.transform(buf, true);
        let scale = 1.0 / self.n as f64;
        for v in buf.iter_mut() {
            *v *= scale;
        }
    }

    fn transform(&self, buf: &mut [C64], invert: bool) {
        let n = self.n;
        assert_eq!(buf.len(), n, "buffer length {} != plan size {}", buf.len(), n);

        // bit-reversal permutation
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

        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let step = n / len;
            for start in (0..n).step_by(len) {
                for k in 0..half {
                    let tw = self.twiddles[k * step];
                    let tw = if invert { tw.conj() } else { tw };
                    let a = buf[start + k];
                    let b = buf[start + k + half] * tw;
                    buf[start + k] = a + b;
                    buf[start + k + half] = a - b;
                }
            }
            len <<= 1;
        }
    }
}

/// Linear cross-correlation `c[lag] = sum_i a[i] * b[i + lag]` evaluated
/// for `lag` in `[-max_lag, max_lag]` via zero-padded FFTs. Returns the
/// correlations in lag order, index 0 holding `lag = -max_lag`.
pub fn cross_correlate(a: &[f64], b: &[f64], max_lag: usize) -> Vec<f64> {
    let n = a.len().max(b.len()) + max_lag + 1;
    let size = n.next_power_of_two().max(2) * 2;
    let plan = FftPlan::new(size);

    let mut fa = vec![C64::new(0.0, 0.0); size];
    let mut fb = vec![C64::new(0.0, 0.0); size];
    for (i, &v) in a.iter().enumerate() {
        fa[i] = C64::new(v, 0.0);
    }
    for (i, &v) in b.iter().enumerate() {
        fb[i] = C64::new(v, 0.0);
    }
    plan.forward(&mut fa);
    plan.forward(&mut fb);
    for i in 0..size {
        fa[i] = fa[i].conj() * fb[i];
    }
    plan.inverse(&mut fa);

    // c[lag] lives at index lag (mod size)
    let mut out = Vec::with_capacity(2 * max_lag + 1);
    for lag in -(max_lag as isize)..=(max_lag as isize) {
        let idx = lag.rem_euclid(size as isize) as usize;
        out.push(fa[idx].re);
    }
    out
}
