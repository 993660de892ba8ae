//! Shared fixtures for the criterion benches.

use tda_cli::{generate_annulus, AnnulusSpec};
use tda_core::PointCloud;

/// Seeded noisy unit circle with `n` points.
pub fn annulus(n: usize) -> PointCloud {
    generate_annulus(&AnnulusSpec {
        n_points: n,
        ..AnnulusSpec::default()
    })
    .expect("valid spec")
}
