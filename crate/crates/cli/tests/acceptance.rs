//! End-to-end acceptance checks. Each criterion runs under its time budget
//! and prints one PASS/FAIL line; the process exits nonzero if any fails.
//! Built with `harness = false` so the lines are never captured.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::f64::consts::SQRT_2;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use serde_json::Value;
use tda_cli::{execute, generate_annulus, AnnulusSpec, Command, MapperMode, Options, RunConfig};
use tda_core::{
    betti_numbers, cech_complex, connected_components, convex_hull, distance_matrix,
    filter_project, neighbor_graph, nerve, persistence_diagram, refined_pullback, rips_complex,
    rips_filtration, uniform_cover, PointCloud, SimplicialComplex,
};

type Check = Result<(), String>;

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn betti_table() -> Check {
    let rows: [(&str, SimplicialComplex, [usize; 3]); 4] = [
        ("point", point(), [1, 0, 0]),
        ("loop", hollow_triangle(), [1, 1, 0]),
        ("sphere", octahedron(), [1, 0, 1]),
        ("torus", seven_vertex_torus(), [1, 2, 1]),
    ];
    for (name, c, expected) in rows {
        let got = betti_numbers(&c, 2);
        ensure!(
            got.as_slice() == expected,
            "{name}: {:?} != {expected:?}",
            got.as_slice()
        );
    }
    Ok(())
}

fn beta0_oracle() -> Check {
    for seed in 0..25u64 {
        let n = 10 + (seed as usize * 2) % 51;
        let cloud = uniform_cloud(seed, n, 2, 1.0);
        let dm = distance_matrix(&cloud, 2.0).map_err(|e| e.to_string())?;
        let diagram = persistence_diagram(&rips_filtration(&dm, 1));
        for alpha in [0.05, 0.1, 0.2, 0.3, 0.5] {
            let ph = diagram.betti_at(0, alpha);
            let graph = connected_components(&neighbor_graph(&dm, alpha / 2.0).unwrap()).len();
            ensure!(ph == graph, "seed {seed}, alpha {alpha}: {ph} != {graph}");
            ensure!(
                graph == dfs_components(&dm, alpha / 2.0),
                "seed {seed}: union-find disagrees with search"
            );
        }
    }
    Ok(())
}

fn reduction_vs_dense() -> Check {
    let mut seen = BTreeSet::new();
    let mut cases = 0;
    for seed in 0..60u64 {
        let n = 3 + seed as usize % 4;
        let cloud = uniform_cloud(seed, n, 2, 1.0);
        let fc = rips_filtration(&distance_matrix(&cloud, 2.0).unwrap(), n - 1);
        let mut cuts: Vec<f64> = fc.entries().iter().map(|e| e.value).collect();
        cuts.dedup();
        for cut in cuts {
            let c = fc.threshold(cut);
            let key: Vec<Vec<usize>> = c.iter().map(|s| s.vertices().to_vec()).collect();
            if !seen.insert(key) {
                continue;
            }
            cases += 1;
            let top = c.max_dimension().unwrap();
            let (dense, reduced) = (dense_betti(&c, top), reduction_betti(&c, top));
            ensure!(
                dense == reduced,
                "seed {seed}, cut {cut}: {reduced:?} != {dense:?}"
            );
        }
    }
    ensure!(cases >= 100, "only {cases} distinct complexes");
    Ok(())
}

fn inclusion_chain() -> Check {
    let mut rng = rng(4);
    for seed in 0..50u64 {
        let n = 5 + seed as usize % 36;
        let cloud = uniform_cloud(1000 + seed, n, 2, 1.0);
        let dm = distance_matrix(&cloud, 2.0).unwrap();
        let alpha = rng.random_range(0.02..0.5);
        let rips = rips_complex(&dm, alpha, 2).unwrap();
        let cech = cech_complex(&cloud, alpha, 2).map_err(|e| e.to_string())?;
        let rips2 = rips_complex(&dm, 2.0 * alpha, 2).unwrap();
        ensure!(
            rips.is_subcomplex_of(&cech),
            "seed {seed}: Rips_a not in Cech_a"
        );
        ensure!(
            cech.is_subcomplex_of(&rips2),
            "seed {seed}: Cech_a not in Rips_2a"
        );
        ensure!(
            cech.skeleton(1) == rips2.skeleton(1),
            "seed {seed}: 1-skeleta differ"
        );
    }
    Ok(())
}

fn diameter_oracle() -> Check {
    for seed in 0..100u64 {
        let n = 1 + (seed as usize * 37) % 500;
        let cloud = if seed % 4 == 3 {
            // Integer lattice: many collinear and tied points.
            let mut rng = rng(seed);
            let pts = (0..n)
                .map(|_| {
                    vec![
                        rng.random_range(0..12) as f64,
                        rng.random_range(0..12) as f64,
                    ]
                })
                .collect();
            PointCloud::new(pts).unwrap()
        } else {
            uniform_cloud(seed, n, 2, 100.0)
        };
        let hull = convex_hull(&cloud).map_err(|e| e.to_string())?;
        let brute = brute_diameter(&cloud);
        ensure!(
            hull.diameter == brute,
            "seed {seed}: {} != {brute}",
            hull.diameter
        );
    }
    Ok(())
}

fn square_persistence() -> Check {
    let square = PointCloud::new(vec![
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![0.0, 1.0],
    ])
    .unwrap();
    let d = persistence_diagram(&rips_filtration(&distance_matrix(&square, 2.0).unwrap(), 2));
    let loops: Vec<_> = d.in_dimension(1).filter(|p| !p.is_trivial()).collect();
    ensure!(loops.len() == 1, "{} dimension-1 pairs", loops.len());
    let (b, de) = (loops[0].birth, loops[0].death);
    ensure!(
        (b - 1.0).abs() < 1e-9 && (de - SQRT_2).abs() < 1e-9,
        "pair ({b}, {de})"
    );
    Ok(())
}

fn annulus_loop() -> Check {
    let spec = AnnulusSpec {
        n_points: 100,
        radius: 1.0,
        spread: 0.05,
        seed: 0,
    };
    let cloud = generate_annulus(&spec).map_err(|e| e.to_string())?;
    let d = persistence_diagram(&rips_filtration(&distance_matrix(&cloud, 2.0).unwrap(), 2));
    let bars = d.longest(1);
    ensure!(!bars.is_empty(), "no finite dimension-1 bar");
    let second = bars.get(1).map_or(0.0, |p| p.persistence());
    let dominant = bars
        .iter()
        .filter(|p| p.persistence() > 5.0 * second)
        .count();
    ensure!(
        dominant == 1,
        "{dominant} bars exceed 5x the runner-up ({:?})",
        &bars[..bars.len().min(3)]
    );
    Ok(())
}

fn fifteen_point_components() -> Check {
    let cloud = fifteen_points();
    let dm = distance_matrix(&cloud, 2.0).unwrap();
    // Pair gap 1/8, isolation gap 9.875: ball radius 1 sits between them.
    let components = connected_components(&neighbor_graph(&dm, 1.0).unwrap()).len();
    ensure!(components == 12, "{components} components");
    let ph = persistence_diagram(&rips_filtration(&dm, 1)).betti_at(0, 2.0);
    ensure!(ph == 12, "persistent beta_0 = {ph}");
    Ok(())
}

fn mapper_loop() -> Check {
    let defaults = Options::default();
    let cloud = generate_annulus(&defaults.annulus()).map_err(|e| e.to_string())?;
    ensure!(
        cloud.len() == 500,
        "default cloud has {} points",
        cloud.len()
    );
    let dm = distance_matrix(&cloud, 2.0).unwrap();
    let filter = filter_project(&cloud, 0).unwrap();
    let (lo, hi) = filter.range().unwrap();
    let cover = uniform_cover(lo, hi, 6, 0.35).map_err(|e| e.to_string())?;
    let nodes = refined_pullback(&cloud, &dm, &filter, &cover, defaults.cluster_radius)
        .map_err(|e| e.to_string())?;
    let graph = nerve(nodes);
    ensure!(graph.cycle_rank() == 1, "cycle rank {}", graph.cycle_rank());
    let per: Vec<usize> = (0..6).map(|i| graph.nodes_in_interval(i)).collect();
    ensure!(
        per[1..5].iter().all(|&k| k == 2),
        "nodes per interval {per:?}"
    );
    Ok(())
}

fn determinism() -> Check {
    let configure = |command: Command, f: &dyn Fn(&mut Options)| {
        let mut c = RunConfig::new(command);
        f(&mut c.options);
        c
    };
    let configs = [
        configure(Command::Generate, &|_| {}),
        configure(Command::Hull, &|_| {}),
        configure(Command::Components, &|o| o.scale = Some(0.1)),
        configure(Command::Rips, &|o| o.scale = Some(0.15)),
        configure(Command::Cech, &|o| o.scale = Some(0.08)),
        configure(Command::Betti, &|o| {
            o.n = 120;
            o.scale = Some(0.4);
        }),
        configure(Command::Persist, &|o| o.n = 80),
        configure(Command::Mapper, &|_| {}),
        configure(Command::Mapper, &|o| o.mode = MapperMode::Clusters),
    ];
    for config in &configs {
        let (a, b) = (
            execute(config).map_err(|e| e.to_string())?,
            execute(config).map_err(|e| e.to_string())?,
        );
        ensure!(
            a == b,
            "{:?}: artifacts differ between runs",
            config.command
        );
        for artifact in a.iter().filter(|a| a.kind == tda_cli::ArtifactKind::Json) {
            let doc: Value = serde_json::from_str(&artifact.content).map_err(|e| e.to_string())?;
            ensure!(
                !has_time_field(&doc),
                "{:?}: JSON carries a time field",
                config.command
            );
        }
    }
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_tda"))
            .args(["persist", "--n", "60", "--seed", "11"])
            .output()
            .map(|o| o.stdout)
            .map_err(|e| e.to_string())
    };
    ensure!(run()? == run()?, "binary output differs between runs");
    Ok(())
}

fn has_time_field(v: &Value) -> bool {
    match v {
        Value::Object(map) => map
            .iter()
            .any(|(k, v)| k.contains("time") || k.contains("date") || has_time_field(v)),
        Value::Array(items) => items.iter().any(has_time_field),
        _ => false,
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("betti golden table", 1, betti_table),
        ("beta0 / union-find oracle", 5, beta0_oracle),
        ("reduction vs dense rank", 10, reduction_vs_dense),
        ("Rips/Cech inclusion chain", 5, inclusion_chain),
        ("diameter oracle", 2, diameter_oracle),
        ("square persistence", 1, square_persistence),
        ("annulus loop detection", 10, annulus_loop),
        ("fifteen-point bookkeeping", 1, fifteen_point_components),
        ("mapper loop preservation", 5, mapper_loop),
        ("determinism", 5, determinism),
    ];
    let mut failures = Vec::new();
    for (k, (name, limit, check)) in criteria.into_iter().enumerate() {
        let limit = Duration::from_secs(limit);
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()))
            .and_then(|()| {
                let took = start.elapsed();
                if took < limit {
                    Ok(())
                } else {
                    Err(format!("took {took:.2?}"))
                }
            });
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2?} / {limit:?})", k + 1),
            Err(why) => {
                println!("FAIL {:>2} {name} ({took:.2?} / {limit:?}): {why}", k + 1);
                failures.push(k + 1);
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
