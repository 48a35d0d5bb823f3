//! Scene encoding: reification of (role, type) pairs into beliefs and their
//! σ-count cardinalities.
//!
//! A fact `⟨x, y, r⟩ : p` contributes to the belief `r⊕T` with
//! `min(p, μ_T(x), max_s μ_s(y))`: the fixed type is read on the subject and
//! the disjunction ranges over the object's memberships. The cardinality of a
//! belief is the sum of its contributions over all facts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::signature::{Assertion, Observation, Signature, REIFY_SEPARATOR};

/// A belief name `role⊕TYPE`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReifiedRole {
    role: String,
    ty: String,
}

impl ReifiedRole {
    /// Builds a reified role without checking it against a signature.
    pub fn new(role: impl Into<String>, ty: impl Into<String>) -> Self {
        ReifiedRole {
            role: role.into(),
            ty: ty.into(),
        }
    }

    pub fn role(&self) -> &str {
        &self.role
    }

    pub fn type_name(&self) -> &str {
        &self.ty
    }
}

impl fmt::Display for ReifiedRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.role, REIFY_SEPARATOR, self.ty)
    }
}

impl FromStr for ReifiedRole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(REIFY_SEPARATOR) {
            Some((r, t)) if !r.is_empty() && !t.is_empty() && !t.contains(REIFY_SEPARATOR) => {
                Ok(ReifiedRole::new(r, t))
            }
            _ => Err(Error::InvalidName(s.to_string())),
        }
    }
}

impl Serialize for ReifiedRole {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ReifiedRole {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Reifies `role` and `ty`, both of which must be declared in `sig`.
pub fn reify(sig: &Signature, role: &str, ty: &str) -> Result<ReifiedRole> {
    if !sig.has_role(role) {
        return Err(Error::UnknownRole(role.to_string()));
    }
    if !sig.has_type(ty) {
        return Err(Error::UnknownType(ty.to_string()));
    }
    Ok(ReifiedRole::new(role, ty))
}

/// Contribution of one fact to the belief `rr`.
///
/// Zero when the roles differ, the subject has no membership in `rr`'s type,
/// or the object has no type membership at all.
pub fn fact_contribution(
    assertion: &Assertion,
    subject_types: &BTreeMap<String, crate::Degree>,
    object_types: &BTreeMap<String, crate::Degree>,
    rr: &ReifiedRole,
) -> f64 {
    if assertion.role != rr.role {
        return 0.0;
    }
    let Some(subject) = subject_types.get(&rr.ty) else {
        return 0.0;
    };
    let object = object_types
        .values()
        .fold(0.0f64, |acc, d| acc.max(d.value()));
    assertion.degree.value().min(subject.value()).min(object)
}

/// An encoded scene: positive belief cardinalities and their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedScene {
    id: String,
    beliefs: BTreeMap<ReifiedRole, f64>,
    total: f64,
}

impl EncodedScene {
    /// Builds a scene from raw cardinalities; zeros are dropped.
    pub fn from_beliefs<I>(id: impl Into<String>, beliefs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ReifiedRole, f64)>,
    {
        let mut map = BTreeMap::new();
        for (rr, c) in beliefs {
            if !c.is_finite() || c < 0.0 {
                return Err(Error::InvalidCardinality(c));
            }
            if c > 0.0 {
                *map.entry(rr).or_insert(0.0) += c;
            }
        }
        Ok(Self::from_map(id.into(), map))
    }

    fn from_map(id: String, beliefs: BTreeMap<ReifiedRole, f64>) -> Self {
        let total = beliefs.values().sum();
        EncodedScene { id, beliefs, total }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn beliefs(&self) -> &BTreeMap<ReifiedRole, f64> {
        &self.beliefs
    }

    /// Cardinality of `rr`, zero when the scene has no such belief.
    pub fn cardinality(&self, rr: &ReifiedRole) -> f64 {
        self.beliefs.get(rr).copied().unwrap_or(0.0)
    }

    /// Sum of all cardinalities.
    pub fn total(&self) -> f64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.beliefs.is_empty()
    }
}

/// Encodes a normalized observation into belief cardinalities.
///
/// The observation is expected to be normalized already (see
/// [`crate::normalize_observation`]); only references are re-validated here.
pub fn encode(sig: &Signature, obs: &Observation) -> Result<EncodedScene> {
    obs.validate(sig)?;
    let mut beliefs: BTreeMap<ReifiedRole, f64> = BTreeMap::new();
    for fact in &obs.assertions {
        let subject_types = &obs.elements[&fact.subject];
        let object_types = &obs.elements[&fact.object];
        for ty in subject_types.keys() {
            let rr = ReifiedRole::new(fact.role.as_str(), ty.as_str());
            let c = fact_contribution(fact, subject_types, object_types, &rr);
            if c > 0.0 {
                *beliefs.entry(rr).or_insert(0.0) += c;
            }
        }
    }
    Ok(EncodedScene::from_map(obs.timestamp.to_string(), beliefs))
}
