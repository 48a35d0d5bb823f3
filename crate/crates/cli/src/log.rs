//! Line-delimited JSON demonstration logs.
//!
//! Fact records:
//!
//! ```json
//! {"t": 1, "elements": {"g1": {"GLASS": 0.9}}, "assertions": [["g1", "g2", "front", 1.0]]}
//! ```
//!
//! Position frames:
//!
//! ```json
//! {"t": 1, "objects": [["leg1", {"LEG": 1.0}, 0.12, 0.30]]}
//! ```

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use scenemem_core::{Assertion, Degree, Observation};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::ingest::PositionFrame;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactRecord {
    pub t: u64,
    #[serde(default)]
    pub elements: BTreeMap<String, BTreeMap<String, Degree>>,
    #[serde(default)]
    pub assertions: Vec<(String, String, String, Degree)>,
}

impl From<FactRecord> for Observation {
    fn from(r: FactRecord) -> Self {
        Observation {
            timestamp: r.t,
            elements: r.elements,
            assertions: r
                .assertions
                .into_iter()
                .map(|(subject, object, role, degree)| Assertion {
                    subject,
                    object,
                    role,
                    degree,
                })
                .collect(),
        }
    }
}

impl From<&Observation> for FactRecord {
    fn from(o: &Observation) -> Self {
        FactRecord {
            t: o.timestamp,
            elements: o.elements.clone(),
            assertions: o
                .assertions
                .iter()
                .map(|a| {
                    (
                        a.subject.clone(),
                        a.object.clone(),
                        a.role.clone(),
                        a.degree,
                    )
                })
                .collect(),
        }
    }
}

/// An ordered demonstration, either as facts or as 2D positions.
#[derive(Debug, Clone, PartialEq)]
pub enum DemonstrationLog {
    Facts(Vec<Observation>),
    Positions(Vec<PositionFrame>),
}

impl DemonstrationLog {
    pub fn len(&self) -> usize {
        match self {
            DemonstrationLog::Facts(v) => v.len(),
            DemonstrationLog::Positions(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn timestamps(&self) -> Vec<u64> {
        match self {
            DemonstrationLog::Facts(v) => v.iter().map(|o| o.timestamp).collect(),
            DemonstrationLog::Positions(v) => v.iter().map(|f| f.t).collect(),
        }
    }

    /// Fails on the first timestamp that does not increase.
    pub fn check_order(&self) -> Result<()> {
        for w in self.timestamps().windows(2) {
            if w[1] <= w[0] {
                return Err(CliError::NonMonotonicTimestamp {
                    previous: w[0],
                    next: w[1],
                });
            }
        }
        Ok(())
    }
}

fn read_lines<T: DeserializeOwned>(reader: impl BufRead) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| CliError::Log {
            line: i + 1,
            message: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|e| CliError::Log {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(record);
    }
    Ok(out)
}

pub fn read_facts(reader: impl BufRead) -> Result<DemonstrationLog> {
    let records: Vec<FactRecord> = read_lines(reader)?;
    let log = DemonstrationLog::Facts(records.into_iter().map(Observation::from).collect());
    log.check_order()?;
    Ok(log)
}

pub fn read_positions(reader: impl BufRead) -> Result<DemonstrationLog> {
    let log = DemonstrationLog::Positions(read_lines(reader)?);
    log.check_order()?;
    Ok(log)
}

pub fn write_facts<'a>(
    mut writer: impl Write,
    observations: impl IntoIterator<Item = &'a Observation>,
) -> std::io::Result<()> {
    for o in observations {
        serde_json::to_writer(&mut writer, &FactRecord::from(o))?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_positions<'a>(
    mut writer: impl Write,
    frames: impl IntoIterator<Item = &'a PositionFrame>,
) -> std::io::Result<()> {
    for f in frames {
        serde_json::to_writer(&mut writer, f)?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}
