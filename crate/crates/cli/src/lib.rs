//! Command-line front end for `tda-core`: CSV input, seeded annulus
//! generation, and JSON/DOT/SVG export.

pub mod annulus;
pub mod config;
pub mod csv_io;
pub mod error;
pub mod export;
pub mod run;

pub use annulus::{generate_annulus, AnnulusSpec};
pub use config::{Cli, Command, Format, MapperMode, Options, RunConfig};
pub use csv_io::{load_csv, parse_csv, to_csv};
pub use error::CliError;
pub use run::{execute, run, Artifact, ArtifactKind};
