//! Error types shared by the model and the CLI configuration layer.

use std::fmt;

/// Errors raised by the propagation, coverage and link models.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    /// A parameter violated its domain (negative rate, zero wavelength, ...).
    Domain {
        param: &'static str,
        value: f64,
        requirement: &'static str,
    },
    /// A weather condition label not present in the attenuation table.
    UnknownPreset { name: String },
    /// Both altitude and ground distance are zero; the geometry is undefined.
    DegenerateGeometry,
    /// Path loss is not monotone over the search bracket; the largest-radius
    /// semantics of the bisection solver do not apply.
    NonMonotone { altitude_m: f64 },
    /// No altitude in the search range admits a non-empty coverage cell.
    AllInfeasible,
    /// A model error annotated with the sweep grid point that produced it.
    At {
        context: String,
        source: Box<ModelError>,
    },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::Domain {
                param,
                value,
                requirement,
            } => write!(f, "{param} = {value} violates: {requirement}"),
            ModelError::UnknownPreset { name } => write!(
                f,
                "unknown weather condition {name:?}; valid labels: {}",
                crate::weather::PRESET_LABELS.join(", ")
            ),
            ModelError::DegenerateGeometry => {
                write!(f, "degenerate geometry: altitude and ground distance are both zero")
            }
            ModelError::NonMonotone { altitude_m } => write!(
                f,
                "path loss is not monotone in radius at altitude {altitude_m} m; \
                 bisection cannot determine the largest feasible radius"
            ),
            ModelError::AllInfeasible => {
                write!(f, "no altitude in the search range meets the path-loss budget")
            }
            ModelError::At { context, source } => write!(f, "{context}: {source}"),
        }
    }
}

impl std::error::Error for ModelError {}

impl ModelError {
    pub(crate) fn at(self, context: impl Into<String>) -> ModelError {
        ModelError::At {
            context: context.into(),
            source: Box::new(self),
        }
    }
}

/// Errors raised while reading or validating a configuration document.
#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    /// Malformed line (no `=`, bad section header, unparsable number).
    Syntax { line: usize, msg: String },
    /// Section header not in the documented schema.
    UnknownSection { line: usize, name: String },
    /// Key not in the documented schema for its section.
    UnknownKey { line: usize, key: String },
    /// A value failed validation; `key` names the offending entry.
    Invalid { key: String, msg: String },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Syntax { line, msg } => write!(f, "config line {line}: {msg}"),
            ConfigError::UnknownSection { line, name } => {
                write!(f, "config line {line}: unknown section [{name}]")
            }
            ConfigError::UnknownKey { line, key } => {
                write!(f, "config line {line}: unknown key {key:?}")
            }
            ConfigError::Invalid { key, msg } => write!(f, "config key {key:?}: {msg}"),
        }
    }
}

impl std::error::Error for ConfigError {}
