//! The input interface: declared relation roles and element types, and the
//! observations (one time-slice of facts) validated against them.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::Degree;

/// Separator used when a role and a type are reified into a belief name.
pub const REIFY_SEPARATOR: char = '⊕';

/// Prior knowledge about what facts may mention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    roles: Vec<String>,
    types: Vec<String>,
    // Both directions of every inverse pair, plus `r -> r` for symmetric roles.
    mirrors: HashMap<String, String>,
    inverse_pairs: Vec<(String, String)>,
    symmetric: BTreeSet<String>,
}

fn check_name(name: &str) -> Result<()> {
    if name.trim().is_empty() || name.contains(REIFY_SEPARATOR) {
        Err(Error::InvalidName(name.to_string()))
    } else {
        Ok(())
    }
}

impl Signature {
    pub fn new<S: AsRef<str>>(
        roles: &[S],
        types: &[S],
        inverse_pairs: &[(S, S)],
        symmetric: &[S],
    ) -> Result<Self> {
        if roles.is_empty() {
            return Err(Error::EmptySignature("roles"));
        }
        if types.is_empty() {
            return Err(Error::EmptySignature("types"));
        }
        let mut seen = BTreeSet::new();
        for r in roles {
            check_name(r.as_ref())?;
            if !seen.insert(r.as_ref()) {
                return Err(Error::DuplicateRole(r.as_ref().to_string()));
            }
        }
        let mut seen_types = BTreeSet::new();
        for t in types {
            check_name(t.as_ref())?;
            if !seen_types.insert(t.as_ref()) {
                return Err(Error::DuplicateType(t.as_ref().to_string()));
            }
        }

        let mut mirrors = HashMap::new();
        let mut symmetric_set = BTreeSet::new();
        for s in symmetric {
            let s = s.as_ref();
            if !seen.contains(s) {
                return Err(Error::UnknownRole(s.to_string()));
            }
            if mirrors.insert(s.to_string(), s.to_string()).is_some() {
                return Err(Error::AmbiguousInverse(s.to_string()));
            }
            symmetric_set.insert(s.to_string());
        }
        let mut pairs = Vec::with_capacity(inverse_pairs.len());
        for (x, y) in inverse_pairs {
            let (x, y) = (x.as_ref(), y.as_ref());
            for r in [x, y] {
                if !seen.contains(r) {
                    return Err(Error::UnknownRole(r.to_string()));
                }
            }
            // A self-inverse role must be declared symmetric instead.
            if x == y || mirrors.contains_key(x) {
                return Err(Error::AmbiguousInverse(x.to_string()));
            }
            if mirrors.contains_key(y) {
                return Err(Error::AmbiguousInverse(y.to_string()));
            }
            mirrors.insert(x.to_string(), y.to_string());
            mirrors.insert(y.to_string(), x.to_string());
            pairs.push((x.to_string(), y.to_string()));
        }

        Ok(Signature {
            roles: roles.iter().map(|r| r.as_ref().to_string()).collect(),
            types: types.iter().map(|t| t.as_ref().to_string()).collect(),
            mirrors,
            inverse_pairs: pairs,
            symmetric: symmetric_set,
        })
    }

    pub fn roles(&self) -> &[String] {
        &self.roles
    }

    pub fn types(&self) -> &[String] {
        &self.types
    }

    pub fn inverse_pairs(&self) -> &[(String, String)] {
        &self.inverse_pairs
    }

    pub fn symmetric_roles(&self) -> impl Iterator<Item = &str> {
        self.symmetric.iter().map(String::as_str)
    }

    pub fn has_role(&self, role: &str) -> bool {
        self.roles.iter().any(|r| r == role)
    }

    pub fn has_type(&self, ty: &str) -> bool {
        self.types.iter().any(|t| t == ty)
    }

    pub fn is_symmetric(&self, role: &str) -> bool {
        self.symmetric.contains(role)
    }

    /// The role a mirrored assertion must carry, if any.
    pub fn mirror_of(&self, role: &str) -> Option<&str> {
        self.mirrors.get(role).map(String::as_str)
    }
}

/// Element memberships: element id to (type name to degree).
pub type Elements = BTreeMap<String, BTreeMap<String, Degree>>;

/// A fuzzy relation assertion `⟨subject, object, role⟩ : degree`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assertion {
    pub subject: String,
    pub object: String,
    pub role: String,
    pub degree: Degree,
}

impl Assertion {
    pub fn new(subject: &str, object: &str, role: &str, degree: Degree) -> Self {
        Assertion {
            subject: subject.to_string(),
            object: object.to_string(),
            role: role.to_string(),
            degree,
        }
    }
}

/// One time-slice of facts.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Observation {
    pub timestamp: u64,
    pub elements: Elements,
    pub assertions: Vec<Assertion>,
}

impl Observation {
    pub fn new(timestamp: u64) -> Self {
        Observation {
            timestamp,
            ..Default::default()
        }
    }

    /// Sets (or overwrites) a type membership, declaring the element if needed.
    pub fn with_type(mut self, element: &str, ty: &str, degree: Degree) -> Self {
        self.elements
            .entry(element.to_string())
            .or_default()
            .insert(ty.to_string(), degree);
        self
    }

    /// Declares an element with no type memberships.
    pub fn with_element(mut self, element: &str) -> Self {
        self.elements.entry(element.to_string()).or_default();
        self
    }

    pub fn with_assertion(
        mut self,
        subject: &str,
        object: &str,
        role: &str,
        degree: Degree,
    ) -> Self {
        self.assertions
            .push(Assertion::new(subject, object, role, degree));
        self
    }

    /// Checks every reference against the signature.
    pub fn validate(&self, sig: &Signature) -> Result<()> {
        for types in self.elements.values() {
            for ty in types.keys() {
                if !sig.has_type(ty) {
                    return Err(Error::UnknownType(ty.clone()));
                }
            }
        }
        for a in &self.assertions {
            if !sig.has_role(&a.role) {
                return Err(Error::UnknownRole(a.role.clone()));
            }
            for e in [&a.subject, &a.object] {
                if !self.elements.contains_key(e) {
                    return Err(Error::UnknownElement(e.clone()));
                }
            }
        }
        Ok(())
    }
}

/// Validates `obs` and completes it with the mirror of every assertion over
/// an inverse-paired or symmetric role.
///
/// Mirrors already present must carry the same degree.
pub fn normalize_observation(sig: &Signature, obs: &Observation) -> Result<Observation> {
    obs.validate(sig)?;

    let mut out = obs.clone();
    let mut index: HashMap<(String, String, String), Degree> = HashMap::new();
    for a in &obs.assertions {
        index
            .entry((a.subject.clone(), a.object.clone(), a.role.clone()))
            .or_insert(a.degree);
    }

    for a in &obs.assertions {
        let Some(mirror_role) = sig.mirror_of(&a.role) else {
            continue;
        };
        let key = (a.object.clone(), a.subject.clone(), mirror_role.to_string());
        match index.get(&key) {
            Some(existing) => {
                if !existing.approx_eq(a.degree) {
                    return Err(Error::MirrorConflict {
                        subject: a.subject.clone(),
                        object: a.object.clone(),
                        role: a.role.clone(),
                        degree: a.degree.value(),
                        mirror: existing.value(),
                    });
                }
            }
            None => {
                index.insert(key, a.degree);
                out.assertions
                    .push(Assertion::new(&a.object, &a.subject, mirror_role, a.degree));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(v: f64) -> Degree {
        Degree::new(v).unwrap()
    }

    fn cups() -> Signature {
        Signature::new(
            &["front", "behind"],
            &["CUP", "GLASS"],
            &[("front", "behind")],
            &[],
        )
        .unwrap()
    }

    fn table() -> Signature {
        Signature::new(&["connected"], &["CONNECTOR", "LEG"], &[], &["connected"]).unwrap()
    }

    #[test]
    fn builds_example_signatures() {
        let s = cups();
        assert_eq!((s.roles().len(), s.types().len()), (2, 2));
        assert_eq!(s.mirror_of("front"), Some("behind"));
        assert_eq!(s.mirror_of("behind"), Some("front"));

        let t = table();
        assert!(t.is_symmetric("connected"));
        assert_eq!(t.mirror_of("connected"), Some("connected"));
    }

    #[test]
    fn rejects_bad_signatures() {
        let none: &[(&str, &str)] = &[];
        assert_eq!(
            Signature::new(&["a", "a"], &["T"], none, &[]),
            Err(Error::DuplicateRole("a".into()))
        );
        assert_eq!(
            Signature::new(&["a"], &["T", "T"], none, &[]),
            Err(Error::DuplicateType("T".into()))
        );
        assert_eq!(
            Signature::new(&["a"], &["T"], &[("a", "b")], &[]),
            Err(Error::UnknownRole("b".into()))
        );
        assert!(matches!(
            Signature::new(&["a", "b", "c"], &["T"], &[("a", "b"), ("b", "c")], &[]),
            Err(Error::AmbiguousInverse(_))
        ));
        assert!(matches!(
            Signature::new(&["a", "b"], &["T"], &[("a", "b")], &["a"]),
            Err(Error::AmbiguousInverse(_))
        ));
        assert!(Signature::new::<&str>(&[], &["T"], &[], &[]).is_err());
        assert!(Signature::new(&["a⊕b"], &["T"], none, &[]).is_err());
        assert!(Signature::new(&["a"], &[""], none, &[]).is_err());
    }

    #[test]
    fn adds_inverse_mirror() {
        let obs = Observation::new(0)
            .with_element("g1")
            .with_element("g2")
            .with_assertion("g1", "g2", "front", Degree::ONE);
        let n = normalize_observation(&cups(), &obs).unwrap();
        assert_eq!(n.assertions.len(), 2);
        assert_eq!(
            n.assertions[1],
            Assertion::new("g2", "g1", "behind", Degree::ONE)
        );
    }

    #[test]
    fn adds_symmetric_mirror() {
        let obs = Observation::new(0)
            .with_element("a")
            .with_element("b")
            .with_assertion("a", "b", "connected", d(0.8));
        let n = normalize_observation(&table(), &obs).unwrap();
        assert_eq!(
            n.assertions[1],
            Assertion::new("b", "a", "connected", d(0.8))
        );
    }

    #[test]
    fn conflicting_mirror_is_rejected() {
        let obs = Observation::new(0)
            .with_element("g1")
            .with_element("g2")
            .with_assertion("g1", "g2", "front", Degree::ONE)
            .with_assertion("g2", "g1", "behind", d(0.3));
        assert!(matches!(
            normalize_observation(&cups(), &obs),
            Err(Error::MirrorConflict { .. })
        ));
    }

    #[test]
    fn validation_errors() {
        let sig = cups();
        let unknown_type = Observation::new(0).with_type("x", "PLATE", Degree::ONE);
        assert_eq!(
            unknown_type.validate(&sig),
            Err(Error::UnknownType("PLATE".into()))
        );

        let unknown_elem =
            Observation::new(0)
                .with_element("x")
                .with_assertion("x", "y", "front", Degree::ONE);
        assert_eq!(
            unknown_elem.validate(&sig),
            Err(Error::UnknownElement("y".into()))
        );

        let unknown_role = Observation::new(0)
            .with_element("x")
            .with_element("y")
            .with_assertion("x", "y", "left", Degree::ONE);
        assert_eq!(
            unknown_role.validate(&sig),
            Err(Error::UnknownRole("left".into()))
        );
    }

    fn arb_observation() -> impl Strategy<Value = Observation> {
        // Distinct ordered pairs over 4 elements, each with an optional assertion.
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        proptest::collection::vec((0usize..3, 0.0..=1.0f64), pairs.len()).prop_map(move |choices| {
            let mut obs = Observation::new(0);
            for i in 0..4 {
                obs = obs.with_element(&format!("e{i}"));
            }
            for ((i, j), (role, deg)) in pairs.iter().zip(choices) {
                let role = match role {
                    0 => continue,
                    1 => "front",
                    _ => "near",
                };
                // Only emit the lexicographically first of a mirrored pair so
                // no conflicts are generated.
                if i < j {
                    obs = obs.with_assertion(&format!("e{i}"), &format!("e{j}"), role, d(deg));
                }
            }
            obs
        })
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent_and_pairs_up(obs in arb_observation()) {
            let sig = Signature::new(&["front", "behind", "near"], &["T"], &[("front", "behind")], &["near"]).unwrap();
            let once = normalize_observation(&sig, &obs).unwrap();
            let twice = normalize_observation(&sig, &once).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert_eq!(once.assertions.len() % 2, 0);
            prop_assert_eq!(once.assertions.len(), 2 * obs.assertions.len());
        }
    }
}
