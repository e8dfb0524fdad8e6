//! Line-oriented `key = value` configuration with bracketed sections.
//!
//! Sections: `[channel]`, `[radio]`, `[weather.rain]`, `[weather.fog]`,
//! `[weather.snow]`, `[coverage]`, `[sweep]`. `#` starts a comment. Unknown
//! sections or keys are errors; missing keys take the documented defaults.
//!
//! | section        | key           | default       | unit    |
//! |----------------|---------------|---------------|---------|
//! | channel        | a             | 9.61          | —       |
//! | channel        | b             | 0.16          | —       |
//! | channel        | eta_los       | 1             | dB      |
//! | channel        | eta_nlos      | 20            | dB      |
//! | channel        | frequency     | 28            | GHz     |
//! | channel        | beta          | 0.43          | dB/km   |
//! | radio          | bandwidth     | 5e6           | Hz      |
//! | radio          | noise_psd     | -174          | dBm/Hz  |
//! | radio          | tx_power      | 5             | W       |
//! | radio          | hops          | 1             | —       |
//! | weather.rain   | rate          | 12.5          | mm/h    |
//! | weather.rain   | k             | 0.2051        | —       |
//! | weather.rain   | alpha         | 0.9679        | —       |
//! | weather.fog    | density       | 0.05          | g/m³    |
//! | weather.fog    | temperature   | 293.15        | K       |
//! | weather.snow   | rate          | 5             | mm/h    |
//! | weather.snow   | wavelength    | 29.9792458/f  | cm      |
//! | coverage       | pl_max        | 110           | dB      |
//! | coverage       | h_min         | 40            | m       |
//! | coverage       | h_max         | 120           | m       |
//! | coverage       | tolerance     | 1e-3          | m       |
//! | coverage       | grid_step     | 1             | m       |
//! | sweep          | altitude      | 120           | m       |
//! | sweep          | slant         | 1000          | m       |
//! | sweep          | iterations    | 1             | —       |
//! | sweep          | n_nodes       | 10            | —       |
//! | sweep          | seed          | 1             | —       |
//! | sweep          | angle_step    | 1             | deg     |
//! | sweep          | distance_min  | 100           | m       |
//! | sweep          | distance_max  | 1000          | m       |
//! | sweep          | distance_step | 100           | m       |
//! | sweep          | altitude_step | 10            | m       |
//!
//! The rain power-law pair (k, α) is not a tabulated constant of the model;
//! the shipped default is the 28 GHz horizontal-polarization pair and should
//! be overridden when the carrier moves. The snow wavelength defaults to the
//! carrier wavelength in cm. The 110 dB path-loss budget is an artifact
//! example choice, not a measured value.

use crate::channel::{ChannelParams, SPEED_OF_LIGHT_M_S};
use crate::error::ConfigError;
use crate::radio::RadioConfig;
use crate::scenario::{
    CoverageSettings, Experiment, ScenarioConfig, WeatherCondition,
};
use crate::weather::{FogParams, RainParams, SnowParams, WeatherPreset, WeatherSpec};

/// Which attenuation source feeds the weather list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttenuationMode {
    /// Parametric rain/fog/snow models.
    Parametric,
    /// Fixed table coefficients (snow falls back to the parametric model:
    /// the table carries no snow entry).
    Preset,
    /// Both lists, labels suffixed `-parametric` / `-preset`.
    Both,
}

impl AttenuationMode {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "parametric" => Some(Self::Parametric),
            "preset" => Some(Self::Preset),
            "both" => Some(Self::Both),
            _ => None,
        }
    }
}

/// Validated simulator configuration with defaults applied.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub a: f64,
    pub b: f64,
    pub eta_los: f64,
    pub eta_nlos: f64,
    pub frequency_ghz: f64,
    pub beta_db_km: f64,
    pub bandwidth_hz: f64,
    pub noise_psd_dbm_hz: f64,
    pub tx_power_w: f64,
    pub hops: u32,
    pub rain_rate: f64,
    pub rain_k: f64,
    pub rain_alpha: f64,
    pub fog_density: f64,
    pub fog_temperature: f64,
    pub snow_rate: f64,
    pub snow_wavelength_cm: f64,
    pub pl_max_db: f64,
    pub h_min_m: f64,
    pub h_max_m: f64,
    pub tolerance_m: f64,
    pub grid_step_m: f64,
    pub altitude_m: f64,
    pub slant_m: f64,
    pub iterations: u32,
    pub n_nodes: usize,
    pub seed: u64,
    pub angle_step_deg: f64,
    pub distance_min_m: f64,
    pub distance_max_m: f64,
    pub distance_step_m: f64,
    pub altitude_step_m: f64,
}

const SECTIONS: [&str; 7] = [
    "channel",
    "radio",
    "weather.rain",
    "weather.fog",
    "weather.snow",
    "coverage",
    "sweep",
];

fn known_keys(section: &str) -> &'static [&'static str] {
    match section {
        "channel" => &["a", "b", "eta_los", "eta_nlos", "frequency", "beta"],
        "radio" => &["bandwidth", "noise_psd", "tx_power", "hops"],
        "weather.rain" => &["rate", "k", "alpha"],
        "weather.fog" => &["density", "temperature"],
        "weather.snow" => &["rate", "wavelength"],
        "coverage" => &["pl_max", "h_min", "h_max", "tolerance", "grid_step"],
        "sweep" => &[
            "altitude",
            "slant",
            "iterations",
            "n_nodes",
            "seed",
            "angle_step",
            "distance_min",
            "distance_max",
            "distance_step",
            "altitude_step",
        ],
        _ => &[],
    }
}

/// Parse and validate a configuration document.
pub fn parse_config(text: &str) -> Result<SimConfig, ConfigError> {
    let mut entries: Vec<(String, f64)> = Vec::new();
    let mut section = String::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let name = rest.strip_suffix(']').ok_or_else(|| ConfigError::Syntax {
                line: line_no,
                msg: "section header missing closing ']'".into(),
            })?;
            if !SECTIONS.contains(&name) {
                return Err(ConfigError::UnknownSection {
                    line: line_no,
                    name: name.to_string(),
                });
            }
            section = name.to_string();
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
            line: line_no,
            msg: format!("expected `key = value`, got {line:?}"),
        })?;
        let key = key.trim();
        let value = value.trim();
        if section.is_empty() {
            return Err(ConfigError::Syntax {
                line: line_no,
                msg: "key outside any section".into(),
            });
        }
        if !known_keys(&section).contains(&key) {
            return Err(ConfigError::UnknownKey {
                line: line_no,
                key: format!("{section}.{key}"),
            });
        }
        let num: f64 = value.parse().map_err(|_| ConfigError::Syntax {
            line: line_no,
            msg: format!("cannot parse number from {value:?}"),
        })?;
        entries.push((format!("{section}.{key}"), num));
    }

    let get = |name: &str, default: f64| -> f64 {
        entries
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| *v)
            .unwrap_or(default)
    };

    let frequency_ghz = get("channel.frequency", 28.0);
    // carrier wavelength in cm; c/f with f in GHz gives 29.9792458/f
    let default_wavelength = SPEED_OF_LIGHT_M_S / (frequency_ghz * 1e9) * 100.0;

    let cfg = SimConfig {
        a: get("channel.a", 9.61),
        b: get("channel.b", 0.16),
        eta_los: get("channel.eta_los", 1.0),
        eta_nlos: get("channel.eta_nlos", 20.0),
        frequency_ghz,
        beta_db_km: get("channel.beta", 0.43),
        bandwidth_hz: get("radio.bandwidth", 5e6),
        noise_psd_dbm_hz: get("radio.noise_psd", -174.0),
        tx_power_w: get("radio.tx_power", 5.0),
        hops: get("radio.hops", 1.0) as u32,
        rain_rate: get("weather.rain.rate", 12.5),
        rain_k: get("weather.rain.k", 0.2051),
        rain_alpha: get("weather.rain.alpha", 0.9679),
        fog_density: get("weather.fog.density", 0.05),
        fog_temperature: get("weather.fog.temperature", 293.15),
        snow_rate: get("weather.snow.rate", 5.0),
        snow_wavelength_cm: get("weather.snow.wavelength", default_wavelength),
        pl_max_db: get("coverage.pl_max", 110.0),
        h_min_m: get("coverage.h_min", 40.0),
        h_max_m: get("coverage.h_max", 120.0),
        tolerance_m: get("coverage.tolerance", 1e-3),
        grid_step_m: get("coverage.grid_step", 1.0),
        altitude_m: get("sweep.altitude", 120.0),
        slant_m: get("sweep.slant", 1000.0),
        iterations: get("sweep.iterations", 1.0) as u32,
        n_nodes: get("sweep.n_nodes", 10.0) as usize,
        seed: get("sweep.seed", 1.0) as u64,
        angle_step_deg: get("sweep.angle_step", 1.0),
        distance_min_m: get("sweep.distance_min", 100.0),
        distance_max_m: get("sweep.distance_max", 1000.0),
        distance_step_m: get("sweep.distance_step", 100.0),
        altitude_step_m: get("sweep.altitude_step", 10.0),
    };
    cfg.validate()?;
    Ok(cfg)
}

impl SimConfig {
    /// The full default configuration (an empty document).
    pub fn default_config() -> Self {
        parse_config("").expect("defaults are valid")
    }

    fn validate(&self) -> Result<(), ConfigError> {
        fn invalid(key: &str, msg: &str) -> ConfigError {
            ConfigError::Invalid {
                key: key.to_string(),
                msg: msg.to_string(),
            }
        }
        if !(self.a > 0.0) {
            return Err(invalid("a", "must be > 0"));
        }
        if !(self.b > 0.0) {
            return Err(invalid("b", "must be > 0"));
        }
        if !(self.eta_nlos >= self.eta_los) {
            return Err(invalid("eta_nlos", "must be >= eta_los"));
        }
        if !(self.frequency_ghz > 0.0) {
            return Err(invalid("frequency", "must be > 0 GHz"));
        }
        if !(self.beta_db_km >= 0.0) {
            return Err(invalid("beta", "must be >= 0 dB/km"));
        }
        if !(self.bandwidth_hz > 0.0) {
            return Err(invalid("bandwidth", "must be > 0 Hz"));
        }
        if !self.noise_psd_dbm_hz.is_finite() {
            return Err(invalid("noise_psd", "must be finite"));
        }
        if !(self.tx_power_w > 0.0) {
            return Err(invalid("tx_power", "must be > 0 W"));
        }
        if self.hops < 1 {
            return Err(invalid("hops", "must be >= 1"));
        }
        if !(self.rain_rate >= 0.0) {
            return Err(invalid("rate", "rain rate must be >= 0 mm/h"));
        }
        if !(self.rain_k > 0.0) {
            return Err(invalid("k", "must be > 0"));
        }
        if !(self.rain_alpha > 0.0) {
            return Err(invalid("alpha", "must be > 0"));
        }
        if !(self.fog_density >= 0.0) {
            return Err(invalid("density", "must be >= 0 g/m^3"));
        }
        if !(self.fog_temperature > 0.0) {
            return Err(invalid("temperature", "must be > 0 K"));
        }
        if !(self.snow_rate >= 0.0) {
            return Err(invalid("rate", "snow rate must be >= 0 mm/h"));
        }
        if !(self.snow_wavelength_cm > 0.0) {
            return Err(invalid("wavelength", "must be > 0 cm"));
        }
        if !(self.pl_max_db > 0.0) {
            return Err(invalid("pl_max", "must be > 0 dB"));
        }
        if !(self.h_min_m >= 0.0 && self.h_min_m <= self.h_max_m) {
            return Err(invalid("h_min", "requires 0 <= h_min <= h_max"));
        }
        if !(self.tolerance_m > 0.0) {
            return Err(invalid("tolerance", "must be > 0 m"));
        }
        if !(self.grid_step_m > 0.0) {
            return Err(invalid("grid_step", "must be > 0 m"));
        }
        if !(self.altitude_m >= self.h_min_m && self.altitude_m <= self.h_max_m) {
            return Err(invalid("altitude", "must lie within [h_min, h_max]"));
        }
        if !(self.slant_m > 0.0) {
            return Err(invalid("slant", "must be > 0 m"));
        }
        if self.iterations < 1 {
            return Err(invalid("iterations", "must be >= 1"));
        }
        if !(self.angle_step_deg > 0.0) {
            return Err(invalid("angle_step", "must be > 0 degrees"));
        }
        if !(self.distance_min_m > 0.0 && self.distance_min_m < self.distance_max_m) {
            return Err(invalid("distance_min", "requires 0 < distance_min < distance_max"));
        }
        if !(self.distance_step_m > 0.0) {
            return Err(invalid("distance_step", "must be > 0 m"));
        }
        if !(self.altitude_step_m > 0.0) {
            return Err(invalid("altitude_step", "must be > 0 m"));
        }
        Ok(())
    }

    /// Serialize back to the config-file syntax; `parse_config` round-trips
    /// this output to an identical `SimConfig`.
    pub fn serialize(&self) -> String {
        format!(
            "[channel]\n\
             a = {}\n\
             b = {}\n\
             eta_los = {}\n\
             eta_nlos = {}\n\
             frequency = {}\n\
             beta = {}\n\
             \n[radio]\n\
             bandwidth = {}\n\
             noise_psd = {}\n\
             tx_power = {}\n\
             hops = {}\n\
             \n[weather.rain]\n\
             rate = {}\n\
             k = {}\n\
             alpha = {}\n\
             \n[weather.fog]\n\
             density = {}\n\
             temperature = {}\n\
             \n[weather.snow]\n\
             rate = {}\n\
             wavelength = {}\n\
             \n[coverage]\n\
             pl_max = {}\n\
             h_min = {}\n\
             h_max = {}\n\
             tolerance = {}\n\
             grid_step = {}\n\
             \n[sweep]\n\
             altitude = {}\n\
             slant = {}\n\
             iterations = {}\n\
             n_nodes = {}\n\
             seed = {}\n\
             angle_step = {}\n\
             distance_min = {}\n\
             distance_max = {}\n\
             distance_step = {}\n\
             altitude_step = {}\n",
            self.a,
            self.b,
            self.eta_los,
            self.eta_nlos,
            self.frequency_ghz,
            self.beta_db_km,
            self.bandwidth_hz,
            self.noise_psd_dbm_hz,
            self.tx_power_w,
            self.hops,
            self.rain_rate,
            self.rain_k,
            self.rain_alpha,
            self.fog_density,
            self.fog_temperature,
            self.snow_rate,
            self.snow_wavelength_cm,
            self.pl_max_db,
            self.h_min_m,
            self.h_max_m,
            self.tolerance_m,
            self.grid_step_m,
            self.altitude_m,
            self.slant_m,
            self.iterations,
            self.n_nodes,
            self.seed,
            self.angle_step_deg,
            self.distance_min_m,
            self.distance_max_m,
            self.distance_step_m,
            self.altitude_step_m,
        )
    }

    fn weather_list(&self, mode: AttenuationMode) -> Result<Vec<WeatherCondition>, ConfigError> {
        fn invalid(key: &str) -> impl Fn(crate::error::ModelError) -> ConfigError + '_ {
            move |e| ConfigError::Invalid {
                key: key.to_string(),
                msg: e.to_string(),
            }
        }
        let rain = WeatherSpec::Rain(
            RainParams::new(self.rain_rate, self.rain_k, self.rain_alpha)
                .map_err(invalid("rate"))?,
        );
        let fog = WeatherSpec::Fog(
            FogParams::new(self.fog_density, self.fog_temperature).map_err(invalid("density"))?,
        );
        let snow = WeatherSpec::Snow(
            SnowParams::new(self.snow_rate, self.snow_wavelength_cm)
                .map_err(invalid("wavelength"))?,
        );
        let parametric = |suffix: &str| {
            vec![
                WeatherCondition {
                    label: format!("rain{suffix}"),
                    spec: rain.clone(),
                },
                WeatherCondition {
                    label: format!("fog{suffix}"),
                    spec: fog.clone(),
                },
                WeatherCondition {
                    label: format!("snow{suffix}"),
                    spec: snow.clone(),
                },
            ]
        };
        // table has no snow entry, so preset snow reuses the parametric model
        let preset = |suffix: &str| {
            vec![
                WeatherCondition {
                    label: format!("rain{suffix}"),
                    spec: WeatherSpec::Preset(WeatherPreset::ModerateRain),
                },
                WeatherCondition {
                    label: format!("fog{suffix}"),
                    spec: WeatherSpec::Preset(WeatherPreset::ModerateFog),
                },
                WeatherCondition {
                    label: format!("snow{suffix}"),
                    spec: snow.clone(),
                },
            ]
        };
        Ok(match mode {
            AttenuationMode::Parametric => parametric(""),
            AttenuationMode::Preset => preset(""),
            AttenuationMode::Both => {
                let mut list = parametric("-parametric");
                list.extend(preset("-preset"));
                list
            }
        })
    }

    /// Build the sweep configuration for one experiment and attenuation mode.
    pub fn scenario(
        &self,
        experiment: Experiment,
        mode: AttenuationMode,
        seed_override: Option<u64>,
    ) -> Result<ScenarioConfig, ConfigError> {
        let to_cfg_err = |key: &str, e: crate::error::ModelError| ConfigError::Invalid {
            key: key.to_string(),
            msg: e.to_string(),
        };
        let channel = ChannelParams::new(
            self.a,
            self.b,
            self.eta_los,
            self.eta_nlos,
            self.frequency_ghz,
            self.beta_db_km,
        )
        .map_err(|e| to_cfg_err("channel", e))?;
        let radio = RadioConfig::new(
            self.bandwidth_hz,
            self.noise_psd_dbm_hz,
            self.tx_power_w,
            self.hops,
        )
        .map_err(|e| to_cfg_err("radio", e))?;

        let mut angle_grid = Vec::new();
        let mut theta = 0.0_f64;
        while theta <= 90.0 + 1e-9 {
            angle_grid.push(theta.min(90.0));
            theta += self.angle_step_deg;
        }
        let mut distance_grid = Vec::new();
        let mut d = self.distance_min_m;
        while d <= self.distance_max_m + 1e-9 {
            distance_grid.push(d.min(self.distance_max_m));
            d += self.distance_step_m;
        }
        let mut altitude_grid = Vec::new();
        let mut h = self.h_min_m;
        loop {
            altitude_grid.push(h.min(self.h_max_m));
            if h >= self.h_max_m {
                break;
            }
            h = (h + self.altitude_step_m).min(self.h_max_m);
        }

        Ok(ScenarioConfig {
            weather: self.weather_list(mode)?,
            channel,
            radio,
            coverage: CoverageSettings {
                pl_max_db: self.pl_max_db,
                altitude_range: (self.h_min_m, self.h_max_m),
                tolerance_m: self.tolerance_m,
            },
            experiment,
            angle_grid,
            distance_grid,
            altitude_grid,
            slant_m: self.slant_m,
            altitude_m: self.altitude_m,
            n_nodes: self.n_nodes,
            iterations: self.iterations,
            master_seed: seed_override.unwrap_or(self.seed),
        })
    }
}
