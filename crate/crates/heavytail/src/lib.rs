//! Tail probabilities of sums from heavy-tailed factor models.
//!
//! The model is `R_i = sum_j L_ij F_j + eps_i` with regularly varying factors
//! `F_j` and idiosyncratic terms `eps_i`. The crate provides
//!
//! * regularly varying distribution primitives ([`rv_dist`]),
//! * joint sampling of the factor-model sum decomposition ([`factor_model`]),
//! * closed-form large-deviation tail approximations and regime
//!   classification ([`ld_approx`]),
//! * a conditional Monte Carlo rare-event estimator with a naive baseline
//!   ([`cond_mc`]),
//! * compound Poisson factor processes on `[0,1]` with single-large-jump
//!   diagnostics ([`levy_paths`]).
//!
//! All samplers draw from labeled, seed-derived streams so results are
//! bit-reproducible regardless of thread count.

pub mod cond_mc;
pub mod error;
pub mod factor_model;
pub mod ld_approx;
pub mod levy_paths;
pub mod math;
pub mod rv_dist;
pub mod stream;

pub use error::{Error, Result};
pub use rv_dist::{RegVarDist, SlowlyVaryingSpec};
