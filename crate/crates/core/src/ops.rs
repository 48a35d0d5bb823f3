//! Store/retrieve with score reinforcement, and periodic consolidation with
//! forgetting.

use serde::{Deserialize, Serialize};

use crate::encoding::{encode, EncodedScene};
use crate::error::{Error, Result};
use crate::graph::{learn, CategoryId, ClassificationResult, MemoryGraph};
use crate::signature::{normalize_observation, Observation, Signature};

/// When a scene that is already classified still deserves its own category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LearningRule {
    /// Learn unless some category matches with degree ≥ `u` and
    /// similarity ≥ `o`.
    #[default]
    NoAccurateMatch,
    /// Learn only if every category has degree < `u` and similarity < `o`.
    AllBelowBoth,
}

impl LearningRule {
    fn wants_new_category(self, cls: &ClassificationResult, u: f64, o: f64) -> bool {
        match self {
            LearningRule::NoAccurateMatch => !cls
                .entries
                .values()
                .any(|e| e.degree.value() >= u && e.similarity >= o),
            LearningRule::AllBelowBoth => cls
                .entries
                .values()
                .all(|e| e.degree.value() < u && e.similarity < o),
        }
    }
}

/// Thresholds and weights driving store, retrieve, consolidate and forget.
///
/// Defaults are the table-assembly settings: `a = 0.4`, `q⁰ = 0.5`,
/// `u = 0.9`, `o = 0.8`, `e = 0.9`, `f = 0.2`, `l = 10`, `g = 0.1`,
/// consolidation every 5 scenes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MemoryParams {
    /// `q⁰`
    pub initial_score: f64,
    /// `a`
    pub fuzziness: f64,
    /// `u`
    pub learn_degree: f64,
    /// `o`
    pub learn_similarity: f64,
    /// `e`
    pub reinforce_degree: f64,
    /// `f`
    pub reinforce_similarity: f64,
    /// `l`
    pub score_weight: f64,
    /// `g`
    pub forget_threshold: f64,
    pub consolidation_period: usize,
    pub retrieve_learns: bool,
    pub learning_rule: LearningRule,
}

impl Default for MemoryParams {
    fn default() -> Self {
        MemoryParams {
            initial_score: 0.5,
            fuzziness: 0.4,
            learn_degree: 0.9,
            learn_similarity: 0.8,
            reinforce_degree: 0.9,
            reinforce_similarity: 0.2,
            score_weight: 10.0,
            forget_threshold: 0.1,
            consolidation_period: 5,
            retrieve_learns: false,
            learning_rule: LearningRule::default(),
        }
    }
}

impl MemoryParams {
    pub fn validate(&self) -> Result<()> {
        let unit = [
            ("fuzziness", self.fuzziness),
            ("learn_degree", self.learn_degree),
            ("learn_similarity", self.learn_similarity),
            ("reinforce_degree", self.reinforce_degree),
            ("reinforce_similarity", self.reinforce_similarity),
            ("forget_threshold", self.forget_threshold),
        ];
        for (name, value) in unit {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidParam { name, value });
            }
        }
        if !self.initial_score.is_finite() || self.initial_score < 0.0 {
            return Err(Error::InvalidParam {
                name: "initial_score",
                value: self.initial_score,
            });
        }
        if !self.score_weight.is_finite() || self.score_weight <= 0.0 {
            return Err(Error::InvalidParam {
                name: "score_weight",
                value: self.score_weight,
            });
        }
        if self.consolidation_period == 0 {
            return Err(Error::InvalidParam {
                name: "consolidation_period",
                value: 0.0,
            });
        }
        Ok(())
    }
}

/// What a store or retrieve did to the memory.
#[derive(Debug, Clone, PartialEq)]
pub struct StoreOutcome {
    /// Classification against the memory as it was before this step.
    pub classification: ClassificationResult,
    pub learned: Option<CategoryId>,
    /// Reinforced categories with the amount added to their score.
    pub reinforced: Vec<(CategoryId, f64)>,
}

/// Encodes, classifies, maybe learns, and reinforces.
pub fn store(
    memory: &mut MemoryGraph,
    sig: &Signature,
    obs: &Observation,
    params: &MemoryParams,
) -> Result<StoreOutcome> {
    let scene = encode(sig, &normalize_observation(sig, obs)?)?;
    store_scene(memory, &scene, params)
}

/// Like [`store`], but learns only when `params.retrieve_learns` is set.
pub fn retrieve(
    memory: &mut MemoryGraph,
    sig: &Signature,
    obs: &Observation,
    params: &MemoryParams,
) -> Result<StoreOutcome> {
    let scene = encode(sig, &normalize_observation(sig, obs)?)?;
    retrieve_scene(memory, &scene, params)
}

pub fn store_scene(
    memory: &mut MemoryGraph,
    scene: &EncodedScene,
    params: &MemoryParams,
) -> Result<StoreOutcome> {
    process(memory, scene, params, true)
}

pub fn retrieve_scene(
    memory: &mut MemoryGraph,
    scene: &EncodedScene,
    params: &MemoryParams,
) -> Result<StoreOutcome> {
    process(memory, scene, params, params.retrieve_learns)
}

fn process(
    memory: &mut MemoryGraph,
    scene: &EncodedScene,
    params: &MemoryParams,
    may_learn: bool,
) -> Result<StoreOutcome> {
    params.validate()?;
    let classification = memory.classify(scene);

    let mut learned = None;
    if may_learn && !scene.is_empty() {
        let initial = if !classification.classified() {
            Some(params.initial_score)
        } else if params.learning_rule.wants_new_category(
            &classification,
            params.learn_degree,
            params.learn_similarity,
        ) {
            let best = classification
                .entries
                .keys()
                .filter_map(|id| memory.get(*id))
                .map(|c| c.score())
                .fold(0.0f64, f64::max);
            Some(params.initial_score * best)
        } else {
            None
        };
        if let Some(score) = initial {
            let id = memory.next_id();
            memory.add_category(learn(id, scene, score, params.fuzziness)?)?;
            learned = Some(id);
        }
    }

    let mut reinforced = Vec::new();
    for (&id, entry) in &classification.entries {
        if entry.degree.value() > params.reinforce_degree
            && entry.similarity > params.reinforce_similarity
        {
            let current = memory.get(id).ok_or(Error::UnknownCategory(id))?.score();
            memory.set_score(id, current + entry.degree.value())?;
            reinforced.push((id, entry.degree.value()));
        }
    }

    Ok(StoreOutcome {
        classification,
        learned,
        reinforced,
    })
}

/// Weights and normalizes every non-root score, then forgets categories whose
/// normalized score falls below `g`. Returns the forgotten ids.
pub fn consolidate_forget(
    memory: &mut MemoryGraph,
    params: &MemoryParams,
) -> Result<Vec<CategoryId>> {
    params.validate()?;
    let weighted: Vec<(CategoryId, f64)> = memory
        .non_root()
        .map(|c| (c.id(), c.score() * params.score_weight))
        .collect();
    if weighted.is_empty() {
        return Ok(Vec::new());
    }
    let q_max = weighted.iter().map(|(_, q)| *q).fold(0.0f64, f64::max);

    let mut forgotten = Vec::new();
    for (id, q) in weighted {
        // All-zero scores normalize to zero.
        let normalized = if q_max > 0.0 { q / q_max } else { 0.0 };
        memory.set_score(id, normalized)?;
        if normalized < params.forget_threshold {
            forgotten.push(id);
        }
    }
    if !forgotten.is_empty() {
        memory.remove_categories(&forgotten)?;
    }
    Ok(forgotten)
}
