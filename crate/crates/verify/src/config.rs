use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use picard_core::theta::ThetaConfig;
use picard_core::ThetaError;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Exact,
    Group,
    Variety,
    Boundary,
    Theta,
    All,
}

impl Suite {
    /// The concrete suites in run order.
    pub const CONCRETE: [Suite; 5] = [Suite::Exact, Suite::Group, Suite::Variety, Suite::Boundary, Suite::Theta];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Exact => "exact",
            Suite::Group => "group",
            Suite::Variety => "variety",
            Suite::Boundary => "boundary",
            Suite::Theta => "theta",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown suite {0:?}; expected one of exact, group, variety, boundary, theta, all")]
    UnknownSuite(String),
    #[error("no suites selected")]
    EmptySelection,
    #[error("theta configuration: {0}")]
    Theta(ThetaError),
    #[error("sample count must be positive")]
    NoSamples,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    suites: BTreeSet<Suite>,
    pub theta: ThetaConfig,
    pub cache: Option<PathBuf>,
    pub seed: u64,
    /// Number of random points for the numeric bridge.
    pub samples: usize,
    pub slow: bool,
}

impl RunConfig {
    pub fn new(suites: impl IntoIterator<Item = Suite>) -> Result<Self, ConfigError> {
        let suites: BTreeSet<Suite> = suites.into_iter().collect();
        if suites.is_empty() {
            return Err(ConfigError::EmptySelection);
        }
        Ok(RunConfig { suites, theta: ThetaConfig::default(), cache: None, seed: 2024, samples: 100, slow: false })
    }

    /// Parses a comma-separated list such as `"group,boundary"`.
    pub fn parse_suites(list: &str) -> Result<BTreeSet<Suite>, ConfigError> {
        list.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
    }

    pub fn with_theta(mut self, radius: u32, tolerance: f64) -> Result<Self, ConfigError> {
        self.theta = ThetaConfig::new(radius, tolerance).map_err(ConfigError::Theta)?;
        Ok(self)
    }

    pub fn with_samples(mut self, samples: usize) -> Result<Self, ConfigError> {
        if samples == 0 {
            return Err(ConfigError::NoSamples);
        }
        self.samples = samples;
        Ok(self)
    }

    /// The selected concrete suites in run order.
    pub fn suites(&self) -> Vec<Suite> {
        if self.suites.contains(&Suite::All) {
            return Suite::CONCRETE.to_vec();
        }
        Suite::CONCRETE.into_iter().filter(|s| self.suites.contains(s)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suites": self.suites().iter().map(|s| s.name()).collect::<Vec<_>>(),
            "thetaN": self.theta.radius,
            "tol": self.theta.tolerance,
            "samples": self.samples,
            "slow": self.slow,
            "cache": self.cache.as_ref().map(|p| p.display().to_string()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let s = RunConfig::parse_suites("group, boundary").unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![Suite::Group, Suite::Boundary]);
        assert!(matches!(RunConfig::parse_suites("group,weyl"), Err(ConfigError::UnknownSuite(n)) if n == "weyl"));
        assert!(matches!(RunConfig::new([]), Err(ConfigError::EmptySelection)));
        let all = RunConfig::new([Suite::All, Suite::Group]).unwrap();
        assert_eq!(all.suites(), Suite::CONCRETE.to_vec());
    }

    #[test]
    fn theta_overrides_are_validated() {
        let cfg = RunConfig::new([Suite::Theta]).unwrap();
        assert!(cfg.clone().with_theta(0, 1e-8).is_err());
        assert!(cfg.clone().with_samples(0).is_err());
        assert_eq!(cfg.with_theta(6, 1e-6).unwrap().theta.radius, 6);
    }
}
