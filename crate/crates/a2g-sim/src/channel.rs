//! Air-to-ground channel: geometry, LoS probability and composite path loss.
//!
//! The path-loss model mixes LoS and NLoS excess losses by the sigmoid LoS
//! probability, adds free-space loss over the slant distance, and adds an
//! atmospheric plus weather term (β + γ)·d/1000. Written as
//! A·P_LoS(θ) + 20·log10(d) + B with A = η_LoS − η_NLoS and
//! B = 20·log10(4π·f_c/c) + η_NLoS, so the model reduces to FSPL + η_LoS at
//! P_LoS = 1 and FSPL + η_NLoS at P_LoS = 0.

use crate::error::ModelError;

/// Speed of light in m/s.
pub const SPEED_OF_LIGHT_M_S: f64 = 299_792_458.0;

/// Environment and carrier constants for the A2G channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    /// Sigmoid environment constant a.
    pub a: f64,
    /// Sigmoid environment constant b.
    pub b: f64,
    /// Excess LoS loss η_LoS in dB.
    pub eta_los: f64,
    /// Excess NLoS loss η_NLoS in dB.
    pub eta_nlos: f64,
    /// Carrier frequency in GHz.
    pub freq_ghz: f64,
    /// Atmospheric (gaseous) attenuation β in dB/km.
    pub beta_db_km: f64,
}

impl ChannelParams {
    pub fn new(
        a: f64,
        b: f64,
        eta_los: f64,
        eta_nlos: f64,
        freq_ghz: f64,
        beta_db_km: f64,
    ) -> Result<Self, ModelError> {
        if !(a > 0.0) {
            return Err(ModelError::Domain {
                param: "a",
                value: a,
                requirement: "sigmoid constant a must be > 0",
            });
        }
        if !(b > 0.0) {
            return Err(ModelError::Domain {
                param: "b",
                value: b,
                requirement: "sigmoid constant b must be > 0",
            });
        }
        if !(eta_nlos >= eta_los) {
            return Err(ModelError::Domain {
                param: "eta_nlos",
                value: eta_nlos,
                requirement: "eta_nlos must be >= eta_los",
            });
        }
        if !(freq_ghz > 0.0) {
            return Err(ModelError::Domain {
                param: "freq_ghz",
                value: freq_ghz,
                requirement: "carrier frequency must be > 0 GHz",
            });
        }
        if !(beta_db_km >= 0.0) {
            return Err(ModelError::Domain {
                param: "beta_db_km",
                value: beta_db_km,
                requirement: "atmospheric attenuation must be >= 0 dB/km",
            });
        }
        Ok(Self {
            a,
            b,
            eta_los,
            eta_nlos,
            freq_ghz,
            beta_db_km,
        })
    }

    /// Urban environment at 28 GHz: a = 9.61, b = 0.16, η_LoS = 1,
    /// η_NLoS = 20, β = 0.43 dB/km (clear air).
    pub fn urban_28ghz() -> Self {
        Self::new(9.61, 0.16, 1.0, 20.0, 28.0, 0.43).unwrap()
    }
}

/// UAV-to-ground link geometry with derived slant distance and elevation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkGeometry {
    /// UAV altitude h in m.
    pub altitude_m: f64,
    /// Horizontal ground distance r in m.
    pub ground_m: f64,
    /// Slant distance d = √(h² + r²) in m.
    pub slant_m: f64,
    /// Elevation angle θ in degrees, in [0, 90].
    pub elevation_deg: f64,
}

impl LinkGeometry {
    pub fn new(altitude_m: f64, ground_m: f64) -> Result<Self, ModelError> {
        if !(altitude_m >= 0.0) {
            return Err(ModelError::Domain {
                param: "altitude_m",
                value: altitude_m,
                requirement: "altitude must be >= 0 m",
            });
        }
        if !(ground_m >= 0.0) {
            return Err(ModelError::Domain {
                param: "ground_m",
                value: ground_m,
                requirement: "ground distance must be >= 0 m",
            });
        }
        if altitude_m == 0.0 && ground_m == 0.0 {
            return Err(ModelError::DegenerateGeometry);
        }
        Ok(Self {
            altitude_m,
            ground_m,
            slant_m: altitude_m.hypot(ground_m),
            elevation_deg: altitude_m.atan2(ground_m).to_degrees(),
        })
    }
}

/// Elevation angle in degrees from altitude and ground distance.
pub fn elevation_angle(altitude_m: f64, ground_m: f64) -> Result<f64, ModelError> {
    LinkGeometry::new(altitude_m, ground_m).map(|g| g.elevation_deg)
}

/// P_LoS(θ) = 1 / (1 + a·exp(−b·(θ − a))), θ in degrees.
pub fn los_probability(theta_deg: f64, a: f64, b: f64) -> Result<f64, ModelError> {
    if !(0.0..=90.0).contains(&theta_deg) {
        return Err(ModelError::Domain {
            param: "theta_deg",
            value: theta_deg,
            requirement: "elevation angle must be in [0, 90] degrees",
        });
    }
    if !(a > 0.0) {
        return Err(ModelError::Domain {
            param: "a",
            value: a,
            requirement: "sigmoid constant a must be > 0",
        });
    }
    if !(b >= 0.0) {
        return Err(ModelError::Domain {
            param: "b",
            value: b,
            requirement: "sigmoid constant b must be >= 0",
        });
    }
    Ok(1.0 / (1.0 + a * (-b * (theta_deg - a)).exp()))
}

/// Total A2G path loss in dB for a weather specific attenuation γ (dB/km).
pub fn path_loss(
    geom: &LinkGeometry,
    ch: &ChannelParams,
    gamma_db_km: f64,
) -> Result<f64, ModelError> {
    if !(gamma_db_km >= 0.0) {
        return Err(ModelError::Domain {
            param: "gamma_db_km",
            value: gamma_db_km,
            requirement: "weather attenuation must be >= 0 dB/km",
        });
    }
    let d = geom.slant_m;
    if d == 0.0 {
        return Err(ModelError::DegenerateGeometry);
    }
    let p_los = los_probability(geom.elevation_deg, ch.a, ch.b)?;
    let mix = ch.eta_los - ch.eta_nlos; // A
    let freq_hz = ch.freq_ghz * 1e9;
    let offset = 20.0 * (4.0 * std::f64::consts::PI * freq_hz / SPEED_OF_LIGHT_M_S).log10()
        + ch.eta_nlos; // B
    Ok(mix * p_los + 20.0 * d.log10() + offset + (ch.beta_db_km + gamma_db_km) * d / 1000.0)
}
