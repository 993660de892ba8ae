//! Seeded noisy-annulus generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::Serialize;
use tda_core::PointCloud;

use crate::error::CliError;

/// Points `(R + e)(cos t, sin t)` with `t` uniform on `[0, 2pi)` and `e`
/// Gaussian with standard deviation `spread`, truncated to `|e| <= 4 spread`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnnulusSpec {
    pub n_points: usize,
    pub radius: f64,
    pub spread: f64,
    pub seed: u64,
}

impl Default for AnnulusSpec {
    fn default() -> Self {
        Self {
            n_points: 500,
            radius: 1.0,
            spread: 0.05,
            seed: 0,
        }
    }
}

pub fn generate_annulus(spec: &AnnulusSpec) -> Result<PointCloud, CliError> {
    if spec.n_points == 0 {
        return Err(CliError::Compute("annulus needs at least one point".into()));
    }
    if !(spec.radius > 0.0 && spec.radius.is_finite()) {
        return Err(CliError::Compute(format!(
            "annulus radius {} must be positive",
            spec.radius
        )));
    }
    // Checked here: a negative deviation is accepted by `Normal` but would
    // make the truncation bound unreachable.
    if !(spec.spread >= 0.0 && spec.spread.is_finite()) {
        return Err(CliError::Compute(format!(
            "annulus spread {} must be finite and non-negative",
            spec.spread
        )));
    }
    let noise = Normal::new(0.0, spec.spread)
        .map_err(|e| CliError::Compute(format!("annulus spread {}: {e}", spec.spread)))?;
    let bound = 4.0 * spec.spread;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut coords = Vec::with_capacity(2 * spec.n_points);
    for _ in 0..spec.n_points {
        let theta = rng.random_range(0.0..std::f64::consts::TAU);
        let eps = loop {
            let e = noise.sample(&mut rng);
            if e.abs() <= bound {
                break e;
            }
        };
        let r = spec.radius + eps;
        coords.push(r * theta.cos());
        coords.push(r * theta.sin());
    }
    Ok(PointCloud::from_flat(2, coords)?)
}
