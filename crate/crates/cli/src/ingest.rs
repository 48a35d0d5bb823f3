//! Turns 2D object positions into fuzzy connection facts: two objects closer
//! than `max_distance` are connected with degree `1 − d / max_distance`.

use std::collections::{BTreeMap, BTreeSet};

use scenemem_core::{Degree, Observation, Signature};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// `(id, type memberships, x, y)`, coordinates in meters.
pub type PlacedObject = (String, BTreeMap<String, Degree>, f64, f64);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositionFrame {
    pub t: u64,
    pub objects: Vec<PlacedObject>,
}

impl PositionFrame {
    pub fn new(t: u64) -> Self {
        PositionFrame {
            t,
            objects: Vec::new(),
        }
    }

    pub fn with_object(mut self, id: &str, ty: &str, membership: f64, x: f64, y: f64) -> Self {
        let types = BTreeMap::from([(ty.to_string(), Degree::saturating(membership))]);
        self.objects.push((id.to_string(), types, x, y));
        self
    }

    fn check(&self, sig: &Signature) -> Result<()> {
        let err = |message: String| CliError::Frame { t: self.t, message };
        let mut ids = BTreeSet::new();
        for (id, types, x, y) in &self.objects {
            if !x.is_finite() || !y.is_finite() {
                return Err(err(format!("object {id:?} has non-finite coordinates")));
            }
            if !ids.insert(id) {
                return Err(err(format!("duplicate object id {id:?}")));
            }
            if let Some(ty) = types.keys().find(|ty| !sig.has_type(ty)) {
                return Err(err(format!("object {id:?} has undeclared type {ty:?}")));
            }
        }
        Ok(())
    }
}

/// Converts one frame into an observation with mirrored proximity assertions.
pub fn ingest_positions(
    frame: &PositionFrame,
    max_distance: f64,
    sig: &Signature,
    role: &str,
) -> Result<Observation> {
    if !max_distance.is_finite() || max_distance <= 0.0 {
        return Err(CliError::Config(format!(
            "max_distance must be positive, got {max_distance}"
        )));
    }
    if !sig.is_symmetric(role) {
        return Err(CliError::Config(format!(
            "connection role {role:?} is not a declared symmetric role"
        )));
    }
    frame.check(sig)?;

    let mut obs = Observation::new(frame.t);
    for (id, types, _, _) in &frame.objects {
        obs.elements.insert(id.clone(), types.clone());
    }
    for (i, (a, _, xa, ya)) in frame.objects.iter().enumerate() {
        for (b, _, xb, yb) in &frame.objects[i + 1..] {
            let d = (xa - xb).hypot(ya - yb);
            if d < max_distance {
                let degree = Degree::saturating(1.0 - d / max_distance);
                obs = obs
                    .with_assertion(a, b, role, degree)
                    .with_assertion(b, a, role, degree);
            }
        }
    }
    Ok(obs)
}
