//! Scene categories, the memory graph of fuzzy subsumption edges, and scene
//! classification.
//!
//! A category is a conjunction of "at least" restrictions over reified roles.
//! For this concept language subsumption and instance checking reduce to
//! comparing shoulders directly, so no general reasoner is needed:
//!
//! * `child ⊑ parent` holds with the minimum, over the parent's restrictions
//!   `Ω(k_j, a_j)`, of `membership(Ω(k_j, a_j), k_i)`, where `k_i` is the
//!   child's threshold on the same belief (0 when unrestricted);
//! * a scene realises a category with the minimum membership of its
//!   cardinalities in the category's restrictions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::encoding::{EncodedScene, ReifiedRole};
use crate::error::{Error, Result};
use crate::fuzzy::{Degree, LeftShoulder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CategoryId(pub u64);

impl CategoryId {
    /// The empty-scene category every other category specialises.
    pub const ROOT: CategoryId = CategoryId(0);

    pub fn is_root(self) -> bool {
        self == Self::ROOT
    }
}

impl fmt::Display for CategoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_root() {
            f.write_str("Φ")
        } else {
            write!(f, "Φ{}", self.0)
        }
    }
}

/// A learned scene category.
#[derive(Debug, Clone, PartialEq)]
pub struct Category {
    id: CategoryId,
    restrictions: BTreeMap<ReifiedRole, LeftShoulder>,
    score: f64,
}

impl Category {
    /// Builds a non-root category.
    pub fn new(
        id: CategoryId,
        restrictions: BTreeMap<ReifiedRole, LeftShoulder>,
        score: f64,
    ) -> Result<Self> {
        if id.is_root() {
            return Err(Error::RootCategory);
        }
        if !restrictions.values().any(|r| r.k() > 0.0) {
            return Err(Error::VacuousCategory(id));
        }
        check_score(score)?;
        Ok(Category {
            id,
            restrictions,
            score,
        })
    }

    fn root() -> Self {
        Category {
            id: CategoryId::ROOT,
            restrictions: BTreeMap::new(),
            score: 0.0,
        }
    }

    pub fn id(&self) -> CategoryId {
        self.id
    }

    pub fn is_root(&self) -> bool {
        self.id.is_root()
    }

    pub fn restrictions(&self) -> &BTreeMap<ReifiedRole, LeftShoulder> {
        &self.restrictions
    }

    pub fn score(&self) -> f64 {
        self.score
    }

    /// Sum of the restriction thresholds.
    pub fn restricted_total(&self) -> f64 {
        self.restrictions.values().map(LeftShoulder::k).sum()
    }

    fn threshold(&self, rr: &ReifiedRole) -> f64 {
        self.restrictions.get(rr).map_or(0.0, LeftShoulder::k)
    }
}

fn check_score(score: f64) -> Result<()> {
    if score.is_finite() && score >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidScore(score))
    }
}

/// One-shot learning: one restriction `Ω(c, a)` per belief of the scene.
pub fn learn(id: CategoryId, scene: &EncodedScene, q0: f64, a: f64) -> Result<Category> {
    if scene.is_empty() {
        return Err(Error::EmptyScene);
    }
    let restrictions = scene
        .beliefs()
        .iter()
        .map(|(rr, &c)| Ok((rr.clone(), LeftShoulder::new(c, a)?)))
        .collect::<Result<_>>()?;
    Category::new(id, restrictions, q0)
}

/// Degree to which `child ⊑ parent`.
pub fn subsumption_degree(child: &Category, parent: &Category) -> Degree {
    parent
        .restrictions
        .iter()
        .map(|(rr, shoulder)| shoulder.eval(child.threshold(rr)))
        .fold(Degree::ONE, Degree::tnorm)
}

/// Ratio of the category's summed thresholds to the scene's total cardinality.
pub fn similarity(category: &Category, scene: &EncodedScene) -> Result<f64> {
    if scene.total() <= 0.0 {
        return Err(Error::ZeroTotal);
    }
    Ok(category.restricted_total() / scene.total())
}

/// Degree to which the scene realises the category.
pub fn realisation_degree(category: &Category, scene: &EncodedScene) -> Degree {
    category
        .restrictions
        .iter()
        .map(|(rr, shoulder)| shoulder.eval(scene.cardinality(rr)))
        .fold(Degree::ONE, Degree::tnorm)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub degree: Degree,
    pub similarity: f64,
}

/// Categories (root excluded) realised by a scene with positive degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationResult {
    pub scene_id: String,
    pub entries: BTreeMap<CategoryId, ClassEntry>,
}

impl ClassificationResult {
    /// False when only the root realises the scene.
    pub fn classified(&self) -> bool {
        !self.entries.is_empty()
    }
}

/// Categories connected by fuzzy subsumption edges, rooted at the empty scene.
///
/// The graph always holds the root. `edges[(child, parent)]` is the
/// subsumption degree whenever it is positive; zero-degree pairs and
/// self-loops are not stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MemoryGraph {
    categories: BTreeMap<CategoryId, Category>,
    edges: BTreeMap<(CategoryId, CategoryId), Degree>,
    next_id: u64,
}

impl Default for MemoryGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl MemoryGraph {
    /// A memory holding only the root.
    pub fn new() -> Self {
        let mut categories = BTreeMap::new();
        categories.insert(CategoryId::ROOT, Category::root());
        MemoryGraph {
            categories,
            edges: BTreeMap::new(),
            next_id: 1,
        }
    }

    /// Rebuilds a memory from a list of non-root categories.
    pub fn from_categories<I>(categories: I, next_id: Option<u64>) -> Result<Self>
    where
        I: IntoIterator<Item = Category>,
    {
        let mut g = MemoryGraph::new();
        for c in categories {
            g.add_category(c)?;
        }
        if let Some(n) = next_id {
            g.next_id = g.next_id.max(n);
        }
        Ok(g)
    }

    /// The id the next learned category should take.
    pub fn next_id(&self) -> CategoryId {
        CategoryId(self.next_id)
    }

    pub fn get(&self, id: CategoryId) -> Option<&Category> {
        self.categories.get(&id)
    }

    /// All categories, root first.
    pub fn categories(&self) -> impl Iterator<Item = &Category> {
        self.categories.values()
    }

    pub fn non_root(&self) -> impl Iterator<Item = &Category> {
        self.categories.values().filter(|c| !c.is_root())
    }

    /// Number of categories, root included.
    pub fn len(&self) -> usize {
        self.categories.len()
    }

    /// True when only the root is present.
    pub fn is_empty(&self) -> bool {
        self.categories.len() == 1
    }

    pub fn edges(&self) -> &BTreeMap<(CategoryId, CategoryId), Degree> {
        &self.edges
    }

    /// Stored degree of `child ⊑ parent`, zero when absent.
    pub fn edge(&self, child: CategoryId, parent: CategoryId) -> Degree {
        self.edges
            .get(&(child, parent))
            .copied()
            .unwrap_or(Degree::ZERO)
    }

    fn link(&mut self, child: &Category, parent: &Category) {
        let key = (child.id, parent.id);
        let degree = subsumption_degree(child, parent);
        if degree.value() > 0.0 {
            self.edges.insert(key, degree);
        } else {
            self.edges.remove(&key);
        }
    }

    /// Adds a category and its edges to and from every existing category.
    pub fn add_category(&mut self, category: Category) -> Result<()> {
        if category.is_root() {
            return Err(Error::RootCategory);
        }
        if self.categories.contains_key(&category.id) {
            return Err(Error::DuplicateCategory(category.id));
        }
        // Degrees are pairwise, so existing edges are unaffected.
        let others: Vec<Category> = self.categories.values().cloned().collect();
        for other in &others {
            self.link(&category, other);
            self.link(other, &category);
        }
        self.next_id = self.next_id.max(category.id.0 + 1);
        self.categories.insert(category.id, category);
        Ok(())
    }

    /// Removes the named categories and restructures the survivors.
    pub fn remove_categories(&mut self, ids: &[CategoryId]) -> Result<()> {
        for id in ids {
            if id.is_root() {
                return Err(Error::RootCategory);
            }
            if !self.categories.contains_key(id) {
                return Err(Error::UnknownCategory(*id));
            }
        }
        for id in ids {
            self.categories.remove(id);
        }
        self.restructure();
        Ok(())
    }

    /// Recomputes every edge from scratch.
    pub fn restructure(&mut self) {
        self.edges = self.compute_edges();
    }

    fn compute_edges(&self) -> BTreeMap<(CategoryId, CategoryId), Degree> {
        let mut edges = BTreeMap::new();
        for child in self.categories.values() {
            for parent in self.categories.values() {
                if child.id == parent.id {
                    continue;
                }
                let degree = subsumption_degree(child, parent);
                if degree.value() > 0.0 {
                    edges.insert((child.id, parent.id), degree);
                }
            }
        }
        edges
    }

    /// Checks the structural invariants; returns a description of the
    /// first violation found.
    pub fn verify(&self) -> std::result::Result<(), String> {
        match self.categories.get(&CategoryId::ROOT) {
            Some(root) if root.restrictions.is_empty() => {}
            _ => return Err("root category missing or restricted".into()),
        }
        for c in self.non_root() {
            if self.edge(c.id, CategoryId::ROOT) != Degree::ONE {
                return Err(format!("{} is not crisply subsumed by the root", c.id));
            }
            if !c.restrictions.values().any(|r| r.k() > 0.0) {
                return Err(format!("{} has no positive restriction", c.id));
            }
        }
        if self.edges != self.compute_edges() {
            return Err("stored edges disagree with pairwise subsumption".into());
        }
        Ok(())
    }

    pub fn set_score(&mut self, id: CategoryId, score: f64) -> Result<()> {
        if id.is_root() {
            return Err(Error::RootCategory);
        }
        check_score(score)?;
        let c = self
            .categories
            .get_mut(&id)
            .ok_or(Error::UnknownCategory(id))?;
        c.score = score;
        Ok(())
    }

    /// Pairs `(a, b)` that subsume each other crisply, `a < b`.
    pub fn equivalences(&self) -> Vec<(CategoryId, CategoryId)> {
        self.edges
            .iter()
            .filter(|(&(c, p), &w)| c < p && w == Degree::ONE && self.edge(p, c) == Degree::ONE)
            .map(|(&k, _)| k)
            .collect()
    }

    /// Crisp (weight 1) edges with transitive shortcuts removed; equivalent
    /// categories keep their mutual edges.
    pub fn crisp_reduction(&self) -> BTreeSet<(CategoryId, CategoryId)> {
        let crisp: BTreeSet<(CategoryId, CategoryId)> = self
            .edges
            .iter()
            .filter(|(_, &w)| w == Degree::ONE)
            .map(|(&k, _)| k)
            .collect();
        let equivalent =
            |x: CategoryId, y: CategoryId| crisp.contains(&(x, y)) && crisp.contains(&(y, x));
        crisp
            .iter()
            .copied()
            .filter(|&(c, p)| {
                !self.categories.keys().any(|&w| {
                    w != c
                        && w != p
                        && !equivalent(w, c)
                        && !equivalent(w, p)
                        && crisp.contains(&(c, w))
                        && crisp.contains(&(w, p))
                })
            })
            .collect()
    }

    /// Classifies a scene against every non-root category.
    pub fn classify(&self, scene: &EncodedScene) -> ClassificationResult {
        let mut entries = BTreeMap::new();
        if scene.total() > 0.0 {
            for c in self.non_root() {
                let degree = realisation_degree(c, scene);
                if degree.value() > 0.0 {
                    let similarity = c.restricted_total() / scene.total();
                    entries.insert(c.id, ClassEntry { degree, similarity });
                }
            }
        }
        ClassificationResult {
            scene_id: scene.id().to_string(),
            entries,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rr(name: &str) -> ReifiedRole {
        ReifiedRole::new("r", name)
    }

    fn cat(id: u64, a: f64, ks: &[(&str, f64)]) -> Category {
        let restrictions = ks
            .iter()
            .map(|(n, k)| (rr(n), LeftShoulder::new(*k, a).unwrap()))
            .collect();
        Category::new(CategoryId(id), restrictions, 1.0).unwrap()
    }

    fn scene(bs: &[(&str, f64)]) -> EncodedScene {
        EncodedScene::from_beliefs("s", bs.iter().map(|(n, c)| (rr(n), *c))).unwrap()
    }

    fn close(x: f64, y: f64) -> bool {
        (x - y).abs() < 1e-9
    }

    #[test]
    fn subsumption_cases() {
        let sub = |ki: f64, kj: f64| {
            subsumption_degree(&cat(1, 0.5, &[("x", ki)]), &cat(2, 0.5, &[("x", kj)])).value()
        };
        assert_eq!(sub(1.4, 0.8), 1.0);
        assert_eq!(sub(0.6, 1.8), 0.0);
        assert!(close(sub(0.75, 1.0), 0.5));
    }

    #[test]
    fn unrestricted_role_gives_zero() {
        let child = cat(1, 0.5, &[("x", 3.0)]);
        let parent = cat(2, 0.5, &[("x", 1.0), ("y", 1.0)]);
        assert_eq!(subsumption_degree(&child, &parent), Degree::ZERO);
        assert_eq!(subsumption_degree(&parent, &child), Degree::ZERO);
    }

    #[test]
    fn learn_builds_one_restriction_per_belief() {
        let s = EncodedScene::from_beliefs(
            "e2",
            [
                (ReifiedRole::new("front", "GLASS"), 0.9),
                (ReifiedRole::new("behind", "CUP"), 1.0),
            ],
        )
        .unwrap();
        let c = learn(CategoryId(2), &s, 0.5, 0.5).unwrap();
        assert_eq!(c.restrictions().len(), 2);
        assert_eq!(
            c.restrictions()[&ReifiedRole::new("front", "GLASS")].k(),
            0.9
        );
        assert_eq!(
            c.restrictions()[&ReifiedRole::new("behind", "CUP")].k(),
            1.0
        );
        assert_eq!(c.score(), 0.5);

        let single = learn(CategoryId(3), &scene(&[("x", 2.0)]), 0.5, 0.4).unwrap();
        assert_eq!(
            single.restrictions()[&rr("x")],
            LeftShoulder::new(2.0, 0.4).unwrap()
        );

        assert_eq!(
            learn(CategoryId(4), &scene(&[]), 0.5, 0.4),
            Err(Error::EmptyScene)
        );
    }

    #[test]
    fn add_to_root_only() {
        let mut g = MemoryGraph::new();
        g.add_category(cat(2, 0.5, &[("x", 0.9)])).unwrap();
        assert_eq!(g.edge(CategoryId(2), CategoryId::ROOT), Degree::ONE);
        assert_eq!(g.edge(CategoryId::ROOT, CategoryId(2)), Degree::ZERO);
        assert_eq!(g.next_id(), CategoryId(3));
        assert_eq!(
            g.add_category(cat(2, 0.5, &[("x", 1.0)])),
            Err(Error::DuplicateCategory(CategoryId(2)))
        );
    }

    #[test]
    fn subscene_becomes_parent() {
        // Φ2 from a sub-scene of ε1, Φ1 from ε1 itself.
        let fg = ReifiedRole::new("front", "GLASS");
        let bc = ReifiedRole::new("behind", "CUP");
        let fc = ReifiedRole::new("front", "CUP");
        let bg = ReifiedRole::new("behind", "GLASS");
        let e2 = EncodedScene::from_beliefs("2", [(fg.clone(), 0.9), (bc.clone(), 1.0)]).unwrap();
        let e1 =
            EncodedScene::from_beliefs("1", [(fg, 1.3), (bc, 1.5), (fc, 0.2), (bg, 0.2)]).unwrap();
        let mut g = MemoryGraph::new();
        g.add_category(learn(CategoryId(2), &e2, 0.5, 0.5).unwrap())
            .unwrap();
        g.add_category(learn(CategoryId(1), &e1, 0.5, 0.5).unwrap())
            .unwrap();
        assert_eq!(g.edge(CategoryId(1), CategoryId(2)), Degree::ONE);
        assert_eq!(g.edge(CategoryId(2), CategoryId(1)), Degree::ZERO);
        g.verify().unwrap();
    }

    #[test]
    fn identical_profiles_are_equivalent() {
        let mut g = MemoryGraph::new();
        g.add_category(cat(1, 0.4, &[("x", 1.0), ("y", 2.0)]))
            .unwrap();
        g.add_category(cat(2, 0.4, &[("x", 1.0), ("y", 2.0)]))
            .unwrap();
        assert_eq!(g.edge(CategoryId(1), CategoryId(2)), Degree::ONE);
        assert_eq!(g.edge(CategoryId(2), CategoryId(1)), Degree::ONE);
        assert_eq!(g.equivalences(), vec![(CategoryId(1), CategoryId(2))]);
    }

    #[test]
    fn removing_middle_of_chain_keeps_transitive_edge() {
        let mut g = MemoryGraph::new();
        g.add_category(cat(1, 0.5, &[("x", 1.0)])).unwrap();
        g.add_category(cat(2, 0.5, &[("x", 2.0)])).unwrap();
        g.add_category(cat(3, 0.5, &[("x", 3.0)])).unwrap();
        g.remove_categories(&[CategoryId(2)]).unwrap();
        // Oracle: x=3 against Ω(1, 0.5) is fully satisfied.
        assert_eq!(g.edge(CategoryId(3), CategoryId(1)), Degree::ONE);
        // x=1 against Ω(3, 0.5): k⁻ = 1.5 ≥ 1.
        assert_eq!(g.edge(CategoryId(1), CategoryId(3)), Degree::ZERO);
        assert!(g.get(CategoryId(2)).is_none());
        g.verify().unwrap();
    }

    #[test]
    fn removing_leaf_leaves_other_edges() {
        let mut g = MemoryGraph::new();
        g.add_category(cat(1, 0.5, &[("x", 1.0)])).unwrap();
        g.add_category(cat(2, 0.5, &[("x", 1.5), ("y", 1.0)]))
            .unwrap();
        g.add_category(cat(3, 0.5, &[("z", 1.0)])).unwrap();
        let before: Vec<_> = g
            .edges()
            .iter()
            .filter(|((c, p), _)| c.0 != 3 && p.0 != 3)
            .map(|(k, v)| (*k, *v))
            .collect();
        g.remove_categories(&[CategoryId(3)]).unwrap();
        let after: Vec<_> = g.edges().iter().map(|(k, v)| (*k, *v)).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn root_cannot_be_removed() {
        let mut g = MemoryGraph::new();
        assert_eq!(
            g.remove_categories(&[CategoryId::ROOT]),
            Err(Error::RootCategory)
        );
        assert_eq!(
            g.remove_categories(&[CategoryId(9)]),
            Err(Error::UnknownCategory(CategoryId(9)))
        );
    }

    #[test]
    fn classify_degrees_and_similarities() {
        let mut g = MemoryGraph::new();
        g.add_category(cat(1, 0.5, &[("x", 1.0)])).unwrap();
        g.add_category(cat(2, 0.5, &[("x", 2.0)])).unwrap();
        let r = g.classify(&scene(&[("x", 1.5)]));
        assert!(r.classified());
        let a = r.entries[&CategoryId(1)];
        let b = r.entries[&CategoryId(2)];
        assert_eq!(a.degree, Degree::ONE);
        assert!(close(a.similarity, 1.0 / 1.5));
        assert!(close(b.degree.value(), 0.5));
        assert!(close(b.similarity, 2.0 / 1.5));
        assert!(!r.entries.contains_key(&CategoryId::ROOT));
    }

    #[test]
    fn unclassified_when_nothing_matches() {
        let mut g = MemoryGraph::new();
        g.add_category(cat(1, 0.5, &[("x", 1.0)])).unwrap();
        assert!(!g.classify(&scene(&[])).classified());
        let r = g.classify(&scene(&[("x", 0.4), ("y", 3.0)]));
        assert!(!r.classified());
        assert!(!r.entries.contains_key(&CategoryId(1)));
    }

    #[test]
    fn similarity_values() {
        let c = cat(1, 0.5, &[("x", 1.0)]);
        assert!(close(
            similarity(&c, &scene(&[("x", 1.5), ("y", 1.0)])).unwrap(),
            0.4
        ));
        assert!(close(similarity(&c, &scene(&[("x", 1.0)])).unwrap(), 1.0));
        let low = scene(&[("x", 0.6)]);
        assert!(close(similarity(&c, &low).unwrap(), 1.0 / 0.6));
        assert!(close(realisation_degree(&c, &low).value(), 0.2));
        assert_eq!(similarity(&c, &scene(&[])), Err(Error::ZeroTotal));
    }

    #[test]
    fn crisp_reduction_drops_shortcuts() {
        let mut g = MemoryGraph::new();
        g.add_category(cat(1, 0.5, &[("x", 1.0)])).unwrap();
        g.add_category(cat(2, 0.5, &[("x", 2.0)])).unwrap();
        let red = g.crisp_reduction();
        assert!(red.contains(&(CategoryId(2), CategoryId(1))));
        assert!(red.contains(&(CategoryId(1), CategoryId::ROOT)));
        assert!(!red.contains(&(CategoryId(2), CategoryId::ROOT)));

        g.add_category(cat(3, 0.5, &[("x", 2.0)])).unwrap();
        let red = g.crisp_reduction();
        assert!(red.contains(&(CategoryId(2), CategoryId(3))));
        assert!(red.contains(&(CategoryId(3), CategoryId(2))));
    }

    #[test]
    fn category_guards() {
        let empty = BTreeMap::new();
        assert_eq!(
            Category::new(CategoryId(1), empty.clone(), 0.5),
            Err(Error::VacuousCategory(CategoryId(1)))
        );
        assert_eq!(
            Category::new(CategoryId::ROOT, empty, 0.5),
            Err(Error::RootCategory)
        );
        let mut g = MemoryGraph::new();
        assert_eq!(g.set_score(CategoryId::ROOT, 1.0), Err(Error::RootCategory));
    }

    const NAMES: [&str; 3] = ["x", "y", "z"];

    fn arb_category(id: u64, a: f64) -> impl Strategy<Value = Category> {
        proptest::collection::vec(proptest::option::of(0.01..4.0f64), NAMES.len())
            .prop_filter("at least one restriction", |ks| {
                ks.iter().any(Option::is_some)
            })
            .prop_map(move |ks| {
                let restrictions = NAMES
                    .iter()
                    .zip(ks)
                    .filter_map(|(n, k)| k.map(|k| (rr(n), LeftShoulder::new(k, a).unwrap())))
                    .collect();
                Category::new(CategoryId(id), restrictions, 1.0).unwrap()
            })
    }

    fn arb_memory() -> impl Strategy<Value = Vec<Category>> {
        (0.0..=1.0f64, 1usize..6).prop_flat_map(|(a, n)| {
            (1..=n as u64)
                .map(|i| arb_category(i, a))
                .collect::<Vec<_>>()
        })
    }

    fn arb_scene() -> impl Strategy<Value = EncodedScene> {
        proptest::collection::vec(0.0..5.0f64, NAMES.len()).prop_map(|cs| {
            EncodedScene::from_beliefs("s", NAMES.iter().zip(cs).map(|(n, c)| (rr(n), c))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn reflexive(c in arb_category(1, 0.4)) {
            prop_assert_eq!(subsumption_degree(&c, &c), Degree::ONE);
        }

        #[test]
        fn dominating_child_is_subsumed(p in arb_category(1, 0.4), bumps in proptest::collection::vec(0.0..2.0f64, 3)) {
            let restrictions = p.restrictions().iter().zip(bumps)
                .map(|((rr, s), b)| (rr.clone(), LeftShoulder::new(s.k() + b, 0.4).unwrap()))
                .collect();
            let child = Category::new(CategoryId(2), restrictions, 1.0).unwrap();
            prop_assert_eq!(subsumption_degree(&child, &p), Degree::ONE);
        }

        #[test]
        fn classification_coherent(cats in arb_memory(), s in arb_scene()) {
            let g = MemoryGraph::from_categories(cats, None).unwrap();
            let r = g.classify(&s);
            let deg = |id: CategoryId| r.entries.get(&id).map_or(0.0, |e| e.degree.value());
            for (&(c, p), w) in g.edges() {
                if *w == Degree::ONE && !p.is_root() {
                    prop_assert!(deg(p) >= deg(c));
                }
            }
        }

        #[test]
        fn edges_survive_removal(cats in arb_memory(), drop in proptest::collection::vec(any::<bool>(), 6)) {
            let mut g = MemoryGraph::from_categories(cats, None).unwrap();
            let ids: Vec<_> = g.non_root().map(Category::id).zip(&drop).filter(|(_, d)| **d).map(|(i, _)| i).collect();
            g.remove_categories(&ids).unwrap();
            prop_assert!(g.verify().is_ok());
        }
    }
}
