use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::annulus::AnnulusSpec;

#[derive(Debug, Parser)]
#[command(
    name = "tda",
    version,
    about = "Topological data analysis of point clouds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: Options,
}

impl Cli {
    pub fn into_config(self) -> RunConfig {
        RunConfig {
            command: self.command,
            options: self.options,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Write a seeded noisy annulus (or the --input cloud) as CSV.
    Generate,
    /// Convex hull and diameter of a planar cloud.
    Hull,
    /// Connected components of the neighbor graph at ball radius --scale.
    Components,
    /// Simplex counts of the Vietoris-Rips complex at --scale.
    Rips,
    /// Simplex counts of the Čech complex at --scale (planar clouds).
    Cech,
    /// Persistence diagram of the Rips filtration, as JSON and SVG.
    Persist,
    /// Mapper graph, as JSON and DOT.
    Mapper,
    /// Betti numbers of the Rips complex at --scale.
    Betti,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapperMode {
    /// Cover the filter range with overlapping intervals.
    #[default]
    Intervals,
    /// One node per cluster of the whole cloud, linked across small gaps.
    Clusters,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Svg,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize)]
pub struct Options {
    /// CSV point cloud; when absent a seeded annulus is generated.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Seed of the annulus generator.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Number of generated points.
    #[arg(long, global = true, default_value_t = 500)]
    pub n: usize,

    /// Center radius of the generated annulus.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub radius: f64,

    /// Standard deviation of the radial noise.
    #[arg(long, global = true, default_value_t = 0.05)]
    pub spread: f64,

    /// Exponent of the p-norm metric.
    #[arg(long, global = true, default_value_t = 2.0)]
    pub p: f64,

    /// Scale: ball radius for `components`, Rips/Čech parameter otherwise.
    #[arg(long, global = true)]
    pub scale: Option<f64>,

    /// Largest simplex dimension built.
    #[arg(long, global = true, default_value_t = 2)]
    pub max_dim: usize,

    /// Number of cover intervals.
    #[arg(long, global = true, default_value_t = 6)]
    pub intervals: usize,

    /// Overlap fraction of consecutive intervals, in [0, 1).
    #[arg(long, global = true, default_value_t = 0.35)]
    pub overlap: f64,

    /// Coordinate axis used as the Mapper filter.
    #[arg(long, global = true, default_value_t = 0)]
    pub axis: usize,

    /// Ball radius used to cluster each preimage.
    #[arg(long, global = true, default_value_t = 0.1)]
    pub cluster_radius: f64,

    /// Largest gap between linked clusters in `--mode clusters`
    /// (default: 4 x cluster radius).
    #[arg(long, global = true)]
    pub link_threshold: Option<f64>,

    /// Mapper variant.
    #[arg(long, global = true, value_enum, default_value_t = MapperMode::Intervals)]
    pub mode: MapperMode,

    /// Keep zero-persistence pairs in diagrams.
    #[arg(long, global = true)]
    pub all_pairs: bool,

    /// Report diagram scales as ball radii (half the Rips parameter).
    #[arg(long, global = true)]
    pub radius_axis: bool,

    /// Output path of the main artifact; companions are written next to it.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Format of the main artifact.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

impl Default for Options {
    fn default() -> Self {
        let annulus = AnnulusSpec::default();
        Self {
            input: None,
            seed: annulus.seed,
            n: annulus.n_points,
            radius: annulus.radius,
            spread: annulus.spread,
            p: 2.0,
            scale: None,
            max_dim: 2,
            intervals: 6,
            overlap: 0.35,
            axis: 0,
            cluster_radius: 0.1,
            link_threshold: None,
            mode: MapperMode::Intervals,
            all_pairs: false,
            radius_axis: false,
            out: None,
            format: None,
        }
    }
}

impl Options {
    pub fn annulus(&self) -> AnnulusSpec {
        AnnulusSpec {
            n_points: self.n,
            radius: self.radius,
            spread: self.spread,
            seed: self.seed,
        }
    }
}

/// A fully resolved invocation; serialized into every JSON artifact.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    #[serde(flatten)]
    pub options: Options,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            options: Options::default(),
        }
    }
}
