//! Algorithmic core for speech-motion anomaly detection.
//!
//! The pipeline translates 4D tongue-motion-field sequences into 2D
//! log-mel spectrograms with a small encoder-decoder trained on healthy
//! subjects only, then flags out-of-distribution subjects from
//! reconstruction-quality features with a one-class RBF SVM.
//!
//! Everything in this crate is pure computation over in-memory buffers:
//! no files, no threads, no clocks. The `somad` companion crate carries
//! file formats, dataset generation on disk, the experiment harness and
//! the CLI.
//!
//! Modules map onto the pipeline stages:
//!
//! * [`dsp`] — STFT/iSTFT, mel filterbank, log-mel spectrograms,
//!   Griffin-Lim inversion, sliding-window crops.
//! * [`synth`] — the synthetic articulatory corpus: paired motion fields
//!   and source-filter audio driven by one shared gesture latent.
//! * [`gradtape`] — minimal reverse-mode autodiff over dense tensors.
//! * [`translator`] — the motion-to-spectrogram encoder-decoder, two
//!   temporal backbones, and its training loop.
//! * [`metrics`] — Corr2D, log-spectral distance, and a PESQ-style
//!   waveform quality score.
//! * [`detector`] — reconstruction-quality features and the one-class
//!   nu-SVM (SMO solver).
//! * [`eval`] — ROC/AUC and the ridge-regression reference predictor.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod detector;
pub mod dsp;
pub mod eval;
pub mod gradtape;
pub mod linalg;
pub mod metrics;
pub mod rng;
pub mod synth;
pub mod translator;

mod fft;
