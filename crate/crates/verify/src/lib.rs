//! Check runner, group-table cache and reports for `picard-core`.

pub mod cache;
pub mod config;
pub mod report;
pub mod suites;

pub use cache::{cache_group, load_group, load_or_generate, CacheError, CacheSource, CachedGroup, CACHE_HEADER};
pub use config::{ConfigError, RunConfig, Suite};
pub use report::{CheckRecord, Report, ReportHeader, Status};
pub use suites::run_suite;
