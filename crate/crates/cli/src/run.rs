//! Subcommand execution: load or generate a cloud, compute, render.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use tda_core::geometry::convex_hull_with;
use tda_core::{
    betti_numbers, cech_complex, cluster_cover_complex, connected_components, distance_matrix,
    filter_project, neighbor_graph, nerve, persistence_diagram, refined_pullback, rips_complex,
    rips_filtration, uniform_cover, DistanceMatrix, MapperGraph, PNorm, PersistencePair,
    PointCloud,
};

use crate::annulus::generate_annulus;
use crate::config::{Command, Format, MapperMode, RunConfig};
use crate::csv_io::{load_csv, to_csv};
use crate::error::CliError;
use crate::export;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArtifactKind {
    Json,
    Dot,
    Csv,
    BarcodeSvg,
    DiagramSvg,
}

impl ArtifactKind {
    /// Extension used when the artifact is written next to the main one.
    pub fn extension(self) -> &'static str {
        match self {
            ArtifactKind::Json => "json",
            ArtifactKind::Dot => "dot",
            ArtifactKind::Csv => "csv",
            ArtifactKind::BarcodeSvg => "barcode.svg",
            ArtifactKind::DiagramSvg => "diagram.svg",
        }
    }

    fn matches(self, format: Format) -> bool {
        matches!(
            (self, format),
            (ArtifactKind::Json, Format::Json)
                | (ArtifactKind::Dot, Format::Dot)
                | (ArtifactKind::Csv, Format::Csv)
                | (
                    ArtifactKind::BarcodeSvg | ArtifactKind::DiagramSvg,
                    Format::Svg
                )
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub kind: ArtifactKind,
    pub content: String,
}

fn in_module(module: &'static str) -> impl Fn(tda_core::Error) -> CliError {
    move |e| match CliError::from(e) {
        CliError::Compute(msg) => CliError::Compute(format!("{module}: {msg}")),
        other => other,
    }
}

fn load_cloud(config: &RunConfig) -> Result<PointCloud, CliError> {
    match &config.options.input {
        Some(path) => load_csv(path),
        None => generate_annulus(&config.options.annulus()),
    }
}

fn required_scale(config: &RunConfig) -> Result<f64, CliError> {
    config.options.scale.ok_or_else(|| {
        let name = format!("{:?}", config.command).to_lowercase();
        CliError::Usage(format!("`{name}` needs --scale"))
    })
}

fn json_document(config: &RunConfig, result: Value) -> Artifact {
    let doc = json!({ "config": config, "result": result });
    let mut content = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
    content.push('\n');
    Artifact {
        kind: ArtifactKind::Json,
        content,
    }
}

/// Runs one subcommand and returns its artifacts, main artifact first
/// (chosen by `--format`, else the command's natural format).
pub fn execute(config: &RunConfig) -> Result<Vec<Artifact>, CliError> {
    let opts = &config.options;
    let cloud = load_cloud(config)?;
    let metric = |cloud: &PointCloud| -> Result<DistanceMatrix, CliError> {
        distance_matrix(cloud, opts.p).map_err(in_module("geometry"))
    };

    let mut artifacts = match config.command {
        Command::Generate => vec![Artifact {
            kind: ArtifactKind::Csv,
            content: to_csv(&cloud),
        }],
        Command::Hull => {
            let norm = PNorm::new(opts.p).map_err(in_module("geometry"))?;
            let hull = convex_hull_with(&cloud, norm).map_err(in_module("geometry"))?;
            vec![json_document(
                config,
                json!({
                    "hull": hull.hull_indices,
                    "diameter": hull.diameter,
                    "diameter_pair": [hull.diameter_pair.0, hull.diameter_pair.1],
                }),
            )]
        }
        Command::Components => {
            let r = required_scale(config)?;
            let dm = metric(&cloud)?;
            let graph = neighbor_graph(&dm, r).map_err(in_module("complex"))?;
            let clusters = connected_components(&graph);
            vec![json_document(
                config,
                json!({ "radius": r, "count": clusters.len(), "clusters": clusters }),
            )]
        }
        Command::Rips | Command::Cech => {
            let alpha = required_scale(config)?;
            let complex = if config.command == Command::Rips {
                rips_complex(&metric(&cloud)?, alpha, opts.max_dim)
            } else {
                cech_complex(&cloud, alpha, opts.max_dim)
            }
            .map_err(in_module("complex"))?;
            vec![json_document(
                config,
                json!({
                    "scale": alpha,
                    "counts": complex.counts(),
                    "euler_characteristic": complex.euler_characteristic(),
                }),
            )]
        }
        Command::Betti => {
            let alpha = required_scale(config)?;
            let complex = rips_complex(&metric(&cloud)?, alpha, opts.max_dim)
                .map_err(in_module("complex"))?;
            let betti = betti_numbers(&complex, opts.max_dim);
            vec![json_document(
                config,
                json!({ "scale": alpha, "complex": "rips", "betti": betti }),
            )]
        }
        Command::Persist => persist(config, &metric(&cloud)?),
        Command::Mapper => {
            let (graph, cover) = mapper(config, &cloud, &metric(&cloud)?)?;
            let mut result = export::mapper_json(&graph);
            result["mode"] = json!(opts.mode);
            if let Some(cover) = cover {
                result["cover"] = cover;
            }
            vec![
                json_document(config, result),
                Artifact {
                    kind: ArtifactKind::Dot,
                    content: export::mapper_dot(&graph),
                },
            ]
        }
    };

    if let Some(format) = opts.format {
        let pos = artifacts
            .iter()
            .position(|a| a.kind.matches(format))
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{format:?} output is not available for this command"
                ))
            })?;
        let main = artifacts.remove(pos);
        artifacts.insert(0, main);
    }
    Ok(artifacts)
}

/// Pairs reported for a filtration truncated at `max_dim`: dimensions below
/// `max_dim` (classes in the top dimension can never die), zero-length pairs
/// only with `--all-pairs`.
fn reported_pairs(config: &RunConfig, pairs: &[PersistencePair]) -> Vec<PersistencePair> {
    let top = config.options.max_dim.max(1);
    pairs
        .iter()
        .filter(|p| p.dimension < top)
        .filter(|p| config.options.all_pairs || !p.is_trivial())
        .copied()
        .collect()
}

fn persist(config: &RunConfig, dm: &DistanceMatrix) -> Vec<Artifact> {
    let mut diagram = persistence_diagram(&rips_filtration(dm, config.options.max_dim));
    let convention = if config.options.radius_axis {
        diagram = diagram.scaled(0.5);
        "radius"
    } else {
        "alpha"
    };
    let pairs = reported_pairs(config, &diagram.pairs);
    let result = json!({
        "scale_convention": convention,
        "max_scale": diagram.max_scale,
        "pairs": pairs.iter().map(export::pair_json).collect::<Vec<_>>(),
    });
    vec![
        json_document(config, result),
        Artifact {
            kind: ArtifactKind::BarcodeSvg,
            content: export::barcode_svg(&pairs, diagram.max_scale, convention),
        },
        Artifact {
            kind: ArtifactKind::DiagramSvg,
            content: export::diagram_svg(&pairs, diagram.max_scale, convention),
        },
    ]
}

fn mapper(
    config: &RunConfig,
    cloud: &PointCloud,
    dm: &DistanceMatrix,
) -> Result<(MapperGraph, Option<Value>), CliError> {
    let opts = &config.options;
    if opts.mode == MapperMode::Clusters {
        let graph = cluster_cover_complex(cloud, dm, opts.cluster_radius, opts.link_threshold)
            .map_err(in_module("mapper"))?;
        return Ok((graph, None));
    }
    let filter = filter_project(cloud, opts.axis).map_err(in_module("mapper"))?;
    let (lo, hi) = filter.range().expect("projections are scalar and nonempty");
    let cover = uniform_cover(lo, hi, opts.intervals, opts.overlap).map_err(in_module("mapper"))?;
    let nodes = refined_pullback(cloud, dm, &filter, &cover, opts.cluster_radius)
        .map_err(in_module("mapper"))?;
    let intervals: Vec<[f64; 2]> = cover.intervals.iter().map(|i| [i.low, i.high]).collect();
    Ok((nerve(nodes), Some(json!(intervals))))
}

/// Writes the main artifact to `--out` (or `stdout` when absent) and every
/// companion next to it.
pub fn write_artifacts(
    config: &RunConfig,
    artifacts: &[Artifact],
    stdout: &mut impl Write,
) -> Result<Vec<PathBuf>, CliError> {
    let Some((main, companions)) = artifacts.split_first() else {
        return Ok(Vec::new());
    };
    let Some(out) = &config.options.out else {
        stdout
            .write_all(main.content.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })?;
        return Ok(Vec::new());
    };
    let mut written = vec![out.clone()];
    write_file(out, &main.content)?;
    for a in companions {
        let path = out.with_extension(a.kind.extension());
        write_file(&path, &a.content)?;
        written.push(path);
    }
    Ok(written)
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Executes and writes; the whole batch run behind the `tda` binary.
pub fn run(config: &RunConfig, stdout: &mut impl Write) -> Result<Vec<PathBuf>, CliError> {
    let artifacts = execute(config)?;
    write_artifacts(config, &artifacts, stdout)
}
