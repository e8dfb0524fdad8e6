//! Specific attenuation (dB/km) for rain, fog and snow.
//!
//! Rain uses the power-law model γ = k·R^α. Fog uses the liquid-water model
//! γ = K₁(f,T)·M with K₁ derived from the double-Debye permittivity of water.
//! Snow uses the two-term wavelength model. A separate preset table carries
//! fixed per-condition coefficients for clear air through heavy fog.
//!
//! Units are fixed at this module's boundary: frequency in GHz, wavelength in
//! cm, rain/snow rates in mm/h, liquid-water density in g/m³, temperature in
//! kelvin, output in dB/km.

use crate::error::ModelError;

/// Default fog temperature in kelvin (20 °C).
pub const DEFAULT_FOG_TEMPERATURE_K: f64 = 293.15;

/// Rain power-law parameters: γ = k·R^α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RainParams {
    /// Rain rate R in mm/h.
    pub rate: f64,
    /// Power-law scale k.
    pub k: f64,
    /// Power-law exponent α.
    pub alpha: f64,
}

impl RainParams {
    pub fn new(rate: f64, k: f64, alpha: f64) -> Result<Self, ModelError> {
        if !(rate >= 0.0) {
            return Err(ModelError::Domain {
                param: "rate",
                value: rate,
                requirement: "rain rate must be >= 0 mm/h",
            });
        }
        if !(k > 0.0) {
            return Err(ModelError::Domain {
                param: "k",
                value: k,
                requirement: "power-law scale must be > 0",
            });
        }
        if !(alpha > 0.0) {
            return Err(ModelError::Domain {
                param: "alpha",
                value: alpha,
                requirement: "power-law exponent must be > 0",
            });
        }
        Ok(Self { rate, k, alpha })
    }
}

/// Fog liquid-water parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FogParams {
    /// Liquid-water density M in g/m³.
    pub density: f64,
    /// Water temperature T in kelvin.
    pub temperature: f64,
}

impl FogParams {
    pub fn new(density: f64, temperature: f64) -> Result<Self, ModelError> {
        if !(density >= 0.0) {
            return Err(ModelError::Domain {
                param: "density",
                value: density,
                requirement: "liquid-water density must be >= 0 g/m^3",
            });
        }
        if !(temperature > 0.0) {
            return Err(ModelError::Domain {
                param: "temperature",
                value: temperature,
                requirement: "temperature must be > 0 K",
            });
        }
        Ok(Self {
            density,
            temperature,
        })
    }
}

/// Snowfall parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnowParams {
    /// Snowfall speed R_s in mm/h.
    pub rate: f64,
    /// Wavelength λ in cm.
    pub wavelength: f64,
}

impl SnowParams {
    pub fn new(rate: f64, wavelength: f64) -> Result<Self, ModelError> {
        if !(rate >= 0.0) {
            return Err(ModelError::Domain {
                param: "rate",
                value: rate,
                requirement: "snowfall speed must be >= 0 mm/h",
            });
        }
        if !(wavelength > 0.0) {
            return Err(ModelError::Domain {
                param: "wavelength",
                value: wavelength,
                requirement: "wavelength must be > 0 cm",
            });
        }
        Ok(Self { rate, wavelength })
    }
}

/// Double-Debye complex permittivity of liquid water at one (f, T).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Permittivity {
    /// ε′ — real part.
    pub real_part: f64,
    /// ε″ — imaginary part.
    pub imag_part: f64,
    /// η = (2 + ε′) / ε″.
    pub eta: f64,
    /// ε₀ — static permittivity, 77.66 + 103.3(θ − 1).
    pub eps_static: f64,
    /// f_p — primary relaxation frequency in GHz (depends only on T).
    pub primary_relaxation_ghz: f64,
    /// f_s = 39.8·f_p — secondary relaxation frequency in GHz.
    pub secondary_relaxation_ghz: f64,
}

/// γ = k·R^α.
pub fn rain_attenuation(p: &RainParams) -> f64 {
    if p.rate == 0.0 {
        return 0.0;
    }
    p.k * p.rate.powf(p.alpha)
}

/// Double-Debye permittivity of water. `freq` in GHz, `temp` in kelvin.
pub fn water_permittivity(freq: f64, temp: f64) -> Result<Permittivity, ModelError> {
    if !(freq > 0.0) {
        return Err(ModelError::Domain {
            param: "freq",
            value: freq,
            requirement: "frequency must be > 0 GHz",
        });
    }
    if !(temp > 0.0) {
        return Err(ModelError::Domain {
            param: "temp",
            value: temp,
            requirement: "temperature must be > 0 K",
        });
    }
    let theta = 300.0 / temp;
    let eps0 = 77.66 + 103.3 * (theta - 1.0);
    let eps1 = 0.0671 * eps0;
    let eps2 = 3.52;
    let fp = 20.20 - 146.0 * (theta - 1.0) + 316.0 * (theta - 1.0) * (theta - 1.0);
    let fs = 39.8 * fp;

    let rp = freq / fp;
    let rs = freq / fs;
    let imag = freq * (eps0 - eps1) / (fp * (1.0 + rp * rp))
        + freq * (eps1 - eps2) / (fs * (1.0 + rs * rs));
    let real = (eps0 - eps1) / (1.0 + rp * rp) + (eps1 - eps2) / (1.0 + rs * rs) + eps2;
    let eta = (2.0 + real) / imag;

    Ok(Permittivity {
        real_part: real,
        imag_part: imag,
        eta,
        eps_static: eps0,
        primary_relaxation_ghz: fp,
        secondary_relaxation_ghz: fs,
    })
}

/// γ = K₁(f,T)·M with K₁ = 0.819·f / (ε″·(1 + η²)). Linear in M.
pub fn fog_attenuation(p: &FogParams, freq: f64) -> Result<f64, ModelError> {
    let perm = water_permittivity(freq, p.temperature)?;
    let k1 = 0.819 * freq / (perm.imag_part * (1.0 + perm.eta * perm.eta));
    Ok(k1 * p.density)
}

/// γ = 0.00349·R_s^1.6/λ⁴ + 0.00224·R_s/λ.
pub fn snow_attenuation(p: &SnowParams) -> f64 {
    if p.rate == 0.0 {
        return 0.0;
    }
    let lam = p.wavelength;
    0.00349 * p.rate.powf(1.6) / (lam * lam * lam * lam) + 0.00224 * p.rate / lam
}

/// Tabulated per-condition attenuation coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeatherPreset {
    ClearAir,
    Haze,
    ModerateRain,
    HeavyRain,
    LightFog,
    ModerateFog,
    HeavyFog,
}

/// The recognized preset labels, lowercase.
pub const PRESET_LABELS: [&str; 7] = [
    "clear air",
    "haze",
    "moderate rain",
    "heavy rain",
    "light fog",
    "moderate fog",
    "heavy fog",
];

impl WeatherPreset {
    pub fn from_label(name: &str) -> Result<Self, ModelError> {
        match name {
            "clear air" => Ok(Self::ClearAir),
            "haze" => Ok(Self::Haze),
            "moderate rain" => Ok(Self::ModerateRain),
            "heavy rain" => Ok(Self::HeavyRain),
            "light fog" => Ok(Self::LightFog),
            "moderate fog" => Ok(Self::ModerateFog),
            "heavy fog" => Ok(Self::HeavyFog),
            _ => Err(ModelError::UnknownPreset {
                name: name.to_string(),
            }),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::ClearAir => "clear air",
            Self::Haze => "haze",
            Self::ModerateRain => "moderate rain",
            Self::HeavyRain => "heavy rain",
            Self::LightFog => "light fog",
            Self::ModerateFog => "moderate fog",
            Self::HeavyFog => "heavy fog",
        }
    }

    /// Tabulated specific attenuation in dB/km.
    pub fn attenuation_db_km(self) -> f64 {
        match self {
            Self::ClearAir => 0.43,
            Self::Haze => 4.2,
            Self::ModerateRain => 5.8,
            Self::HeavyRain => 9.2,
            Self::LightFog => 20.0,
            Self::ModerateFog => 42.2,
            Self::HeavyFog => 125.0,
        }
    }
}

/// Lookup by label.
pub fn preset_attenuation(name: &str) -> Result<f64, ModelError> {
    WeatherPreset::from_label(name).map(WeatherPreset::attenuation_db_km)
}

/// One weather condition: either a parametric model, a table preset, or clear.
///
/// `Clear` resolves to γ = 0; the clear-air constant belongs to the channel's
/// atmospheric term β, not to γ, so the two are never double counted.
#[derive(Debug, Clone, PartialEq)]
pub enum WeatherSpec {
    Clear,
    Rain(RainParams),
    Fog(FogParams),
    Snow(SnowParams),
    Preset(WeatherPreset),
}

impl WeatherSpec {
    /// Resolve to a specific attenuation γ in dB/km at the given carrier
    /// frequency (only fog is frequency dependent).
    pub fn resolve(&self, freq: f64) -> Result<f64, ModelError> {
        match self {
            WeatherSpec::Clear => Ok(0.0),
            WeatherSpec::Rain(p) => Ok(rain_attenuation(p)),
            WeatherSpec::Fog(p) => fog_attenuation(p, freq),
            WeatherSpec::Snow(p) => Ok(snow_attenuation(p)),
            WeatherSpec::Preset(p) => Ok(p.attenuation_db_km()),
        }
    }
}
