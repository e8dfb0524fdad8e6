//! SINR, spectral efficiency and the bits-per-joule energy-efficiency metric.
//!
//! Channel gains are deterministic transforms of the A2G path loss; there is
//! no fading draw. dBm-to-watt conversions are pinned as
//! x dBm = 10^((x − 30)/10) W.

use crate::error::ModelError;

/// Link-budget configuration for one UAV downlink.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioConfig {
    /// Bandwidth B in Hz.
    pub bandwidth_hz: f64,
    /// Noise power spectral density in dBm/Hz.
    pub noise_psd_dbm_hz: f64,
    /// Transmit power P_tx in W.
    pub tx_power_w: f64,
    /// Hop count from UAV to ground node.
    pub hops: u32,
}

impl RadioConfig {
    pub fn new(
        bandwidth_hz: f64,
        noise_psd_dbm_hz: f64,
        tx_power_w: f64,
        hops: u32,
    ) -> Result<Self, ModelError> {
        if !(bandwidth_hz > 0.0) {
            return Err(ModelError::Domain {
                param: "bandwidth_hz",
                value: bandwidth_hz,
                requirement: "bandwidth must be > 0 Hz",
            });
        }
        if !noise_psd_dbm_hz.is_finite() {
            return Err(ModelError::Domain {
                param: "noise_psd_dbm_hz",
                value: noise_psd_dbm_hz,
                requirement: "noise PSD must be finite",
            });
        }
        if !(tx_power_w > 0.0) {
            return Err(ModelError::Domain {
                param: "tx_power_w",
                value: tx_power_w,
                requirement: "transmit power must be > 0 W",
            });
        }
        if hops < 1 {
            return Err(ModelError::Domain {
                param: "hops",
                value: hops as f64,
                requirement: "hop count must be >= 1",
            });
        }
        Ok(Self {
            bandwidth_hz,
            noise_psd_dbm_hz,
            tx_power_w,
            hops,
        })
    }
}

/// One transmitter as seen by the receiver: power in W, linear gain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Link {
    pub power_w: f64,
    pub gain: f64,
}

/// The serving link plus the interference environment at one receiver.
///
/// `extra_interferer` is the single distinguished interferer that appears
/// separately from the summed set in the SINR denominator.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkSet {
    pub serving: Link,
    pub interferers: Vec<Link>,
    pub extra_interferer: Option<Link>,
}

impl LinkSet {
    pub fn serving_only(power_w: f64, gain: f64) -> Self {
        Self {
            serving: Link { power_w, gain },
            interferers: Vec::new(),
            extra_interferer: None,
        }
    }
}

/// Linear gain from a path loss in dB: 10^(−PL/10).
pub fn channel_gain(pl_db: f64) -> f64 {
    10f64.powf(-pl_db / 10.0)
}

/// Thermal noise power in watts from a PSD in dBm/Hz and a bandwidth in Hz.
pub fn noise_power(psd_dbm_hz: f64, bandwidth_hz: f64) -> f64 {
    10f64.powf((psd_dbm_hz + 10.0 * bandwidth_hz.log10() - 30.0) / 10.0)
}

/// p_i·h_i / (Σ p_m·h_{m,i} + p_j·h_j + σ²).
pub fn sinr(links: &LinkSet, noise_w: f64) -> f64 {
    let interference: f64 = links
        .interferers
        .iter()
        .chain(links.extra_interferer.iter())
        .map(|l| l.power_w * l.gain)
        .sum();
    links.serving.power_w * links.serving.gain / (interference + noise_w)
}

/// Shannon spectral efficiency log2(1 + SINR) in bits/s/Hz.
pub fn spectral_efficiency(sinr: f64) -> Result<f64, ModelError> {
    if !(sinr >= 0.0) {
        return Err(ModelError::Domain {
            param: "sinr",
            value: sinr,
            requirement: "SINR must be >= 0",
        });
    }
    Ok((1.0 + sinr).log2())
}

/// B·log2(1 + SINR) / (P_tx·hops) in bits per joule.
pub fn energy_efficiency(cfg: &RadioConfig, sinr: f64) -> Result<f64, ModelError> {
    let se = spectral_efficiency(sinr)?;
    Ok(cfg.bandwidth_hz * se / (cfg.tx_power_w * cfg.hops as f64))
}
