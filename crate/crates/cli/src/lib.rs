//! Command-line front end for the scene memory: demonstration logs, position
//! ingestion, replay, export and persistence.

pub mod config;
pub mod error;
pub mod export;
pub mod ingest;
pub mod log;
pub mod persist;
pub mod replay;
pub mod synthetic;

pub use config::{Config, SignatureConfig};
pub use error::{CliError, Result};
pub use ingest::{ingest_positions, PositionFrame};
pub use log::{read_facts, read_positions, write_facts, write_positions, DemonstrationLog};
pub use replay::{replay, replay_into, ReplaySetup, RunReport, RunStats, StepRecord};
pub use scenemem_core as core;
pub use scenemem_core::{
    Category, CategoryId, Degree, LeftShoulder, MemoryGraph, MemoryParams, Observation,
    ReifiedRole, Signature,
};
