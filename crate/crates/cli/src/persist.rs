//! Canonical JSON form of a memory.
//!
//! Edges are written for readers of the file but are always recomputed on
//! load; a stored edge that disagrees with the recomputation is rejected.

use std::collections::BTreeMap;
use std::path::Path;

use scenemem_core::{Category, CategoryId, LeftShoulder, MemoryGraph, ReifiedRole};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const FORMAT: &str = "scenemem-memory";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryRecord {
    id: u64,
    score: f64,
    restrictions: BTreeMap<ReifiedRole, LeftShoulder>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    child: u64,
    parent: u64,
    weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MemoryFile {
    format: String,
    version: u32,
    next_id: u64,
    categories: Vec<CategoryRecord>,
    #[serde(default)]
    edges: Vec<EdgeRecord>,
}

/// Serializes a memory; equal memories give identical bytes.
pub fn to_json(memory: &MemoryGraph) -> String {
    let file = MemoryFile {
        format: FORMAT.into(),
        version: VERSION,
        next_id: memory.next_id().0,
        categories: memory
            .non_root()
            .map(|c| CategoryRecord {
                id: c.id().0,
                score: c.score(),
                restrictions: c.restrictions().clone(),
            })
            .collect(),
        edges: memory
            .edges()
            .iter()
            .map(|(&(c, p), w)| EdgeRecord {
                child: c.0,
                parent: p.0,
                weight: w.value(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("memory serializes") + "\n"
}

pub fn from_json(text: &str) -> Result<MemoryGraph> {
    let file: MemoryFile =
        serde_json::from_str(text).map_err(|e| CliError::Memory(e.to_string()))?;
    if file.format != FORMAT {
        return Err(CliError::Memory(format!(
            "unknown format {:?}",
            file.format
        )));
    }
    if file.version != VERSION {
        return Err(CliError::Memory(format!(
            "unsupported version {}",
            file.version
        )));
    }
    let categories = file
        .categories
        .into_iter()
        .map(|r| Category::new(CategoryId(r.id), r.restrictions, r.score))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let memory = MemoryGraph::from_categories(categories, Some(file.next_id))?;

    for e in &file.edges {
        let (child, parent) = (CategoryId(e.child), CategoryId(e.parent));
        if memory.get(child).is_none() || memory.get(parent).is_none() {
            return Err(CliError::Memory(format!(
                "edge {child} -> {parent} names an unknown category"
            )));
        }
        let computed = memory.edge(child, parent).value();
        if e.weight != computed {
            return Err(CliError::EdgeMismatch {
                child: e.child,
                parent: e.parent,
                stored: e.weight,
                computed,
            });
        }
    }
    if !file.edges.is_empty() && file.edges.len() != memory.edges().len() {
        return Err(CliError::Memory(format!(
            "{} edges stored but {} recomputed",
            file.edges.len(),
            memory.edges().len()
        )));
    }
    Ok(memory)
}

pub fn save(memory: &MemoryGraph, path: &Path) -> Result<()> {
    std::fs::write(path, to_json(memory)).map_err(|e| CliError::io(path, e))
}

pub fn load(path: &Path) -> Result<MemoryGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    from_json(&text)
}
