//! Fuzzy scene memory.
//!
//! Timestamped fuzzy facts are encoded into belief cardinalities, scene
//! categories are learned in one shot as conjunctions of fuzzy "at least"
//! restrictions, organised into a graph of fuzzy subsumption edges, and
//! maintained by score reinforcement, consolidation and forgetting.

pub mod encoding;
pub mod error;
pub mod fuzzy;
pub mod graph;
pub mod ops;
pub mod signature;

pub use encoding::{encode, fact_contribution, reify, EncodedScene, ReifiedRole};
pub use error::{Error, Result};
pub use fuzzy::{tconorm, tnorm, Degree, LeftShoulder, DEGREE_TOLERANCE};
pub use graph::{
    learn, realisation_degree, similarity, subsumption_degree, Category, CategoryId, ClassEntry,
    ClassificationResult, MemoryGraph,
};
pub use ops::{
    consolidate_forget, retrieve, retrieve_scene, store, store_scene, LearningRule, MemoryParams,
    StoreOutcome,
};
pub use signature::{normalize_observation, Assertion, Elements, Observation, Signature};
