//! The sweep engine: weather conditions crossed with a per-experiment grid.
//!
//! Experiments:
//! * `f4` — path loss vs elevation angle at a fixed slant distance,
//! * `f5` — energy efficiency vs ground distance at a fixed altitude,
//! * `f6` — coverage radius vs altitude (link metrics evaluated at the cell
//!   edge; infeasible altitudes report metrics at nadir with no radius),
//! * `grid` — randomly placed ground nodes at a fixed altitude.
//!
//! Rows are emitted in loop order: iteration outer, weather middle, grid
//! inner. Randomness is per-point seeded from the master seed, so the output
//! is deterministic and independent of scheduling.

use crate::channel::{path_loss, ChannelParams, LinkGeometry};
use crate::coverage::{coverage_radius, CoverageProblem};
use crate::error::ModelError;
use crate::radio::{
    channel_gain, energy_efficiency, noise_power, sinr, spectral_efficiency, LinkSet, RadioConfig,
};
use crate::weather::WeatherSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Which sweep to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    F4,
    F5,
    F6,
    Grid,
}

impl Experiment {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "f4" => Some(Self::F4),
            "f5" => Some(Self::F5),
            "f6" => Some(Self::F6),
            "grid" => Some(Self::Grid),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::F4 => "f4",
            Self::F5 => "f5",
            Self::F6 => "f6",
            Self::Grid => "grid",
        }
    }
}

/// A labelled weather condition in the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct WeatherCondition {
    pub label: String,
    pub spec: WeatherSpec,
}

/// Coverage-solver settings carried by the sweep config.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageSettings {
    pub pl_max_db: f64,
    pub altitude_range: (f64, f64),
    pub tolerance_m: f64,
}

/// Full sweep configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub weather: Vec<WeatherCondition>,
    pub channel: ChannelParams,
    pub radio: RadioConfig,
    pub coverage: CoverageSettings,
    pub experiment: Experiment,
    /// Elevation-angle grid in degrees (f4).
    pub angle_grid: Vec<f64>,
    /// Ground-distance grid in m (f5).
    pub distance_grid: Vec<f64>,
    /// Altitude grid in m (f6).
    pub altitude_grid: Vec<f64>,
    /// Fixed slant distance in m for the angle sweep.
    pub slant_m: f64,
    /// Fixed UAV altitude in m for f5 and grid.
    pub altitude_m: f64,
    /// Ground-node count for grid mode.
    pub n_nodes: usize,
    /// t_max.
    pub iterations: u32,
    pub master_seed: u64,
}

/// One output row.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub iteration: u32,
    pub weather: String,
    pub angle_deg: f64,
    pub ground_distance_m: f64,
    pub altitude_m: f64,
    pub gamma_db_km: f64,
    pub path_loss_db: f64,
    /// γ·d/1000 — the weather excess alone, without β.
    pub weather_excess_db: f64,
    pub sinr: f64,
    pub spectral_eff: f64,
    pub ee_bits_per_joule: f64,
    pub coverage_radius_m: Option<f64>,
}

/// SplitMix64 finalizer over (master_seed, point_index). This is the stated
/// per-point seed derivation; it decouples the RNG stream from loop order.
pub fn mix_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `n` points uniform on the disc of the given radius, deterministic in the
/// seed. Polar sampling with the square-root radial correction.
pub fn place_ground_nodes(seed: u64, n: usize, radius: f64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = radius * rng.gen::<f64>().sqrt();
            let phi = rng.gen::<f64>() * std::f64::consts::TAU;
            (r * phi.cos(), r * phi.sin())
        })
        .collect()
}

fn link_row(
    iteration: u32,
    label: &str,
    gamma: f64,
    geom: &LinkGeometry,
    cfg: &ScenarioConfig,
    noise_w: f64,
    coverage: Option<f64>,
) -> Result<SweepRow, ModelError> {
    let pl = path_loss(geom, &cfg.channel, gamma)?;
    let links = LinkSet::serving_only(cfg.radio.tx_power_w, channel_gain(pl));
    let s = sinr(&links, noise_w);
    let se = spectral_efficiency(s)?;
    let ee = energy_efficiency(&cfg.radio, s)?;
    Ok(SweepRow {
        iteration,
        weather: label.to_string(),
        angle_deg: geom.elevation_deg,
        ground_distance_m: geom.ground_m,
        altitude_m: geom.altitude_m,
        gamma_db_km: gamma,
        path_loss_db: pl,
        weather_excess_db: gamma * geom.slant_m / 1000.0,
        sinr: s,
        spectral_eff: se,
        ee_bits_per_joule: ee,
        coverage_radius_m: coverage,
    })
}

fn check_grid(name: &'static str, grid: &[f64]) -> Result<(), ModelError> {
    if grid.is_empty() {
        return Err(ModelError::Domain {
            param: name,
            value: 0.0,
            requirement: "grid must be non-empty",
        });
    }
    for w in grid.windows(2) {
        if !(w[1] > w[0]) {
            return Err(ModelError::Domain {
                param: name,
                value: w[1],
                requirement: "grid must be strictly increasing",
            });
        }
    }
    Ok(())
}

/// Run the configured sweep and return rows in loop order.
pub fn run_sweep(cfg: &ScenarioConfig) -> Result<Vec<SweepRow>, ModelError> {
    if cfg.iterations < 1 {
        return Err(ModelError::Domain {
            param: "iterations",
            value: cfg.iterations as f64,
            requirement: "iteration count must be >= 1",
        });
    }
    match cfg.experiment {
        Experiment::F4 => check_grid("angle_grid", &cfg.angle_grid)?,
        Experiment::F5 => check_grid("distance_grid", &cfg.distance_grid)?,
        Experiment::F6 => check_grid("altitude_grid", &cfg.altitude_grid)?,
        Experiment::Grid => {}
    }

    let noise_w = noise_power(cfg.radio.noise_psd_dbm_hz, cfg.radio.bandwidth_hz);
    let disc_radius = cfg.distance_grid.last().copied().unwrap_or(1000.0);
    let mut rows = Vec::new();

    for t in 1..=cfg.iterations {
        for cond in &cfg.weather {
            let ctx = |point: String| format!("t={t} weather={} {point}", cond.label);
            let gamma = cond
                .spec
                .resolve(cfg.channel.freq_ghz)
                .map_err(|e| e.at(ctx("resolving attenuation".into())))?;

            match cfg.experiment {
                Experiment::F4 => {
                    for &theta in &cfg.angle_grid {
                        let rad = theta.to_radians();
                        let h = cfg.slant_m * rad.sin();
                        let r = cfg.slant_m * rad.cos();
                        let geom = LinkGeometry::new(h.max(0.0), r.max(0.0))
                            .map_err(|e| e.at(ctx(format!("angle={theta}"))))?;
                        let mut row = link_row(t, &cond.label, gamma, &geom, cfg, noise_w, None)
                            .map_err(|e| e.at(ctx(format!("angle={theta}"))))?;
                        row.angle_deg = theta; // keep the grid value exact
                        rows.push(row);
                    }
                }
                Experiment::F5 => {
                    for &r in &cfg.distance_grid {
                        let geom = LinkGeometry::new(cfg.altitude_m, r)
                            .map_err(|e| e.at(ctx(format!("distance={r}"))))?;
                        rows.push(
                            link_row(t, &cond.label, gamma, &geom, cfg, noise_w, None)
                                .map_err(|e| e.at(ctx(format!("distance={r}"))))?,
                        );
                    }
                }
                Experiment::F6 => {
                    let prob = CoverageProblem::new(
                        cfg.channel,
                        gamma,
                        cfg.coverage.pl_max_db,
                        cfg.coverage.altitude_range,
                        cfg.coverage.tolerance_m,
                    )
                    .map_err(|e| e.at(ctx("building coverage problem".into())))?;
                    for &h in &cfg.altitude_grid {
                        let radius = coverage_radius(h, &prob)
                            .map_err(|e| e.at(ctx(format!("altitude={h}"))))?;
                        let edge = radius.unwrap_or(0.0);
                        let geom = LinkGeometry::new(h, edge)
                            .map_err(|e| e.at(ctx(format!("altitude={h}"))))?;
                        rows.push(
                            link_row(t, &cond.label, gamma, &geom, cfg, noise_w, radius)
                                .map_err(|e| e.at(ctx(format!("altitude={h}"))))?,
                        );
                    }
                }
                Experiment::Grid => {
                    let prob = CoverageProblem::new(
                        cfg.channel,
                        gamma,
                        cfg.coverage.pl_max_db,
                        cfg.coverage.altitude_range,
                        cfg.coverage.tolerance_m,
                    )
                    .map_err(|e| e.at(ctx("building coverage problem".into())))?;
                    let radius = coverage_radius(cfg.altitude_m, &prob)
                        .map_err(|e| e.at(ctx(format!("altitude={}", cfg.altitude_m))))?;
                    // placements depend on the iteration only, so every weather
                    // condition sees the same node geometry within a t
                    let nodes = place_ground_nodes(
                        mix_seed(cfg.master_seed, t as u64),
                        cfg.n_nodes,
                        disc_radius,
                    );
                    for (i, (x, y)) in nodes.iter().enumerate() {
                        let r = x.hypot(*y);
                        let geom = LinkGeometry::new(cfg.altitude_m, r)
                            .map_err(|e| e.at(ctx(format!("node={i}"))))?;
                        rows.push(
                            link_row(t, &cond.label, gamma, &geom, cfg, noise_w, radius)
                                .map_err(|e| e.at(ctx(format!("node={i}"))))?,
                        );
                    }
                }
            }
        }
    }
    Ok(rows)
}

/// Grid fragment supplied by an experiment preset.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPreset {
    pub angle_grid: Vec<f64>,
    pub distance_grid: Vec<f64>,
    /// Populated from the coverage altitude range by the caller for f6.
    pub uses_coverage: bool,
    pub slant_m: f64,
    pub altitude_m: f64,
}

/// Default grids for the three figure presets: f4 sweeps 0°–90° in 1° steps
/// at a fixed 1000 m slant distance, f5 sweeps 100–1000 m in 100 m steps at a
/// 120 m altitude, f6 sweeps the coverage altitude range.
pub fn experiment_preset(kind: Experiment) -> ExperimentPreset {
    let angle_grid = (0..=90).map(f64::from).collect();
    let distance_grid = (1..=10).map(|i| 100.0 * i as f64).collect();
    ExperimentPreset {
        angle_grid,
        distance_grid,
        uses_coverage: kind == Experiment::F6 || kind == Experiment::Grid,
        slant_m: 1000.0,
        altitude_m: 120.0,
    }
}
