//! Replays a demonstration through the memory, consolidating every
//! `consolidation_period` stored scenes, and records what happened.

use std::time::Instant;

use scenemem_core::{
    consolidate_forget, store, CategoryId, MemoryGraph, MemoryParams, Observation, Signature,
};
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{CliError, Result};
use crate::ingest::ingest_positions;
use crate::log::DemonstrationLog;

#[derive(Debug, Clone)]
pub struct ReplaySetup {
    pub signature: Signature,
    pub params: MemoryParams,
    pub max_distance: f64,
    pub connection_role: Option<String>,
    /// Record failing scenes and keep going instead of stopping.
    pub continue_on_error: bool,
}

impl ReplaySetup {
    pub fn from_config(config: &Config) -> Result<Self> {
        config.validate()?;
        Ok(ReplaySetup {
            signature: config.signature.build()?,
            params: config.params.clone(),
            max_distance: config.max_distance,
            connection_role: config.connection_role().ok(),
            continue_on_error: false,
        })
    }

    fn observation(&self, log: &DemonstrationLog, i: usize) -> Result<Observation> {
        match log {
            DemonstrationLog::Facts(obs) => Ok(obs[i].clone()),
            DemonstrationLog::Positions(frames) => {
                let role = self.connection_role.as_deref().ok_or_else(|| {
                    CliError::Config("position logs need a connection role".into())
                })?;
                ingest_positions(&frames[i], self.max_distance, &self.signature, role)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub id: CategoryId,
    pub degree: f64,
    pub similarity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reinforcement {
    pub id: CategoryId,
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepRecord {
    /// 1-based position in the log.
    pub step: usize,
    pub t: u64,
    pub scene_id: String,
    pub classified: Vec<EntryRecord>,
    pub learned: Option<CategoryId>,
    pub reinforced: Vec<Reinforcement>,
    /// Ids forgotten by a consolidation run right after this scene.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consolidation: Option<Vec<CategoryId>>,
    /// Categories in memory after this step, root included.
    pub node_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RunStats {
    pub scenes: usize,
    pub stored: usize,
    pub failed: usize,
    pub learned: usize,
    pub forgotten: usize,
    pub consolidations: usize,
    pub final_node_count: usize,
    pub similarity_measurements: usize,
    pub similarity_over_one: usize,
    pub max_similarity: f64,
    pub node_counts: Vec<usize>,
    /// Wall-clock time per step in microseconds.
    pub latency_us: Vec<u64>,
    pub mean_latency_us: f64,
    pub max_latency_us: u64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RunReport {
    pub steps: Vec<StepRecord>,
    pub stats: RunStats,
    /// Step at which the replay stopped on an error.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aborted_at: Option<usize>,
}

impl RunReport {
    /// The report with wall-clock figures zeroed, for comparing runs.
    pub fn without_timings(&self) -> RunReport {
        let mut r = self.clone();
        r.stats.latency_us.iter_mut().for_each(|l| *l = 0);
        r.stats.mean_latency_us = 0.0;
        r.stats.max_latency_us = 0;
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Short human-readable summary.
    pub fn summary(&self, memory: &MemoryGraph) -> String {
        use std::fmt::Write;
        let s = &self.stats;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "scenes: {} ({} stored, {} failed)",
            s.scenes, s.stored, s.failed
        );
        let _ = writeln!(
            out,
            "learned: {}, forgotten: {}, consolidations: {}",
            s.learned, s.forgotten, s.consolidations
        );
        let _ = writeln!(
            out,
            "similarity > 1: {} of {} (max {:.3})",
            s.similarity_over_one, s.similarity_measurements, s.max_similarity
        );
        let _ = writeln!(
            out,
            "latency: mean {:.1} us, max {} us",
            s.mean_latency_us, s.max_latency_us
        );
        let _ = writeln!(out, "memory: {} categories", memory.len() - 1);
        for c in memory.non_root() {
            let restrictions: Vec<String> = c
                .restrictions()
                .iter()
                .map(|(rr, r)| format!("{rr} ≥ {:.2}", r.k()))
                .collect();
            let _ = writeln!(
                out,
                "  {} q={:.3} {}",
                c.id(),
                c.score(),
                restrictions.join(", ")
            );
        }
        if let Some(step) = self.aborted_at {
            let _ = writeln!(out, "aborted at step {step}");
        }
        out
    }
}

/// Replays `log` into `memory`.
///
/// A failing scene is recorded in the report; unless `continue_on_error` is
/// set, replay stops there and `aborted_at` is filled in.
pub fn replay_into(
    memory: &mut MemoryGraph,
    log: &DemonstrationLog,
    setup: &ReplaySetup,
) -> Result<RunReport> {
    if log.is_empty() {
        return Err(CliError::EmptyLog);
    }
    log.check_order()?;
    setup.params.validate()?;

    let mut report = RunReport::default();
    let timestamps = log.timestamps();

    for (i, &t) in timestamps.iter().enumerate() {
        let started = Instant::now();
        let result = setup
            .observation(log, i)
            .and_then(|obs| Ok(store(memory, &setup.signature, &obs, &setup.params)?));
        let mut record = StepRecord {
            step: i + 1,
            t,
            scene_id: t.to_string(),
            classified: Vec::new(),
            learned: None,
            reinforced: Vec::new(),
            consolidation: None,
            node_count: 0,
            error: None,
        };
        match result {
            Ok(outcome) => {
                report.stats.stored += 1;
                record.scene_id = outcome.classification.scene_id.clone();
                record.classified = outcome
                    .classification
                    .entries
                    .iter()
                    .map(|(&id, e)| EntryRecord {
                        id,
                        degree: e.degree.value(),
                        similarity: e.similarity,
                    })
                    .collect();
                record.learned = outcome.learned;
                record.reinforced = outcome
                    .reinforced
                    .iter()
                    .map(|&(id, delta)| Reinforcement { id, delta })
                    .collect();
                if report.stats.stored % setup.params.consolidation_period == 0 {
                    let forgotten = consolidate_forget(memory, &setup.params)?;
                    report.stats.consolidations += 1;
                    report.stats.forgotten += forgotten.len();
                    record.consolidation = Some(forgotten);
                }
            }
            Err(e) => {
                report.stats.failed += 1;
                record.error = Some(e.to_string());
                if !setup.continue_on_error {
                    report.aborted_at = Some(i + 1);
                }
            }
        }
        let elapsed = started.elapsed().as_micros() as u64;
        record.node_count = memory.len();
        report.stats.learned += usize::from(record.learned.is_some());
        for e in &record.classified {
            report.stats.similarity_measurements += 1;
            report.stats.similarity_over_one += usize::from(e.similarity > 1.0);
            report.stats.max_similarity = report.stats.max_similarity.max(e.similarity);
        }
        report.stats.node_counts.push(record.node_count);
        report.stats.latency_us.push(elapsed);
        report.steps.push(record);
        if report.aborted_at.is_some() {
            break;
        }
    }

    let s = &mut report.stats;
    s.scenes = report.steps.len();
    s.final_node_count = memory.len();
    s.max_latency_us = s.latency_us.iter().copied().max().unwrap_or(0);
    s.mean_latency_us = if s.latency_us.is_empty() {
        0.0
    } else {
        s.latency_us.iter().sum::<u64>() as f64 / s.latency_us.len() as f64
    };
    Ok(report)
}

/// Replays `log` into a fresh memory.
pub fn replay(log: &DemonstrationLog, setup: &ReplaySetup) -> Result<(MemoryGraph, RunReport)> {
    let mut memory = MemoryGraph::new();
    let report = replay_into(&mut memory, log, setup)?;
    Ok((memory, report))
}
